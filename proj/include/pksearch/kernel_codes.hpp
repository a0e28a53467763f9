#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pksearch/gf2.hpp"

// Polarization kernels, their nested kernel codes, and exact partial-distance
// evaluation via coset weight distributions (direct enumeration or the dual
// code plus the MacWilliams transform).

namespace pksearch {

// Distance reported for the zero-dimensional code.
inline constexpr int infinite_distance = std::numeric_limits<int>::max();

struct Kernel {
  int size = 0;
  std::vector<uint64_t> rows;  // rows[i] is row i; bit j is column j

  Kernel() = default;
  Kernel(int l, std::vector<uint64_t> r);
  static Kernel from_matrix(const gf2::BitMatrix& m);

  gf2::BitRow row(int i) const { return gf2::BitRow(rows[static_cast<size_t>(i)], size); }
  gf2::BitMatrix matrix() const;
  bool operator==(const Kernel&) const = default;
};

// The (len, len-phase) code spanned by kernel rows phase..len-1. phase = len
// is the zero code. Generators are expected to be linearly independent.
struct KernelCode {
  int len = 0;
  int phase = 0;
  std::vector<uint64_t> gens;

  KernelCode() = default;
  KernelCode(int n, int ph, std::vector<uint64_t> g);

  static KernelCode suffix(const Kernel& k, int phase);
  static KernelCode zero(int len) { return KernelCode(len, len, {}); }
  // span of arbitrary independent rows; phase = len - #rows
  static KernelCode spanned(int len, std::vector<uint64_t> gens);

  int dim() const { return static_cast<int>(gens.size()); }
  gf2::BitMatrix generator_matrix() const;
};

struct WeightDistribution {
  std::vector<uint64_t> counts;  // counts[w] = words of weight w, size len+1

  WeightDistribution() = default;
  explicit WeightDistribution(int len) : counts(static_cast<size_t>(len) + 1, 0) {}

  int length() const { return static_cast<int>(counts.size()) - 1; }
  // smallest w >= 1 with counts[w] > 0, or infinite_distance
  int min_positive_weight() const;
  uint64_t total() const;
  bool operator==(const WeightDistribution&) const = default;
};

struct WeightDistributionHash {
  size_t operator()(const WeightDistribution& d) const;
};

struct Pdp {
  std::vector<int> d;

  int size() const { return static_cast<int>(d.size()); }
  static Pdp parse(std::string_view csv);  // "1,2,2,4"
  std::string to_string() const;
  bool operator==(const Pdp&) const = default;
};

struct CosetResult {
  int distance = 0;
  std::optional<WeightDistribution> dist;  // absent when the early abort fired
};

// Minimum weight over the coset code ⊕ v by Gray-code enumeration of all
// 2^dim coset words. With abort_below = t, returns as soon as any word of
// weight < t is seen (distance < t, no distribution); otherwise the full
// coset weight distribution comes back with the exact distance. A vector
// already inside the code yields distance 0.
CosetResult coset_distance_direct(const gf2::BitRow& v, const KernelCode& code,
                                  std::optional<int> abort_below = std::nullopt);

// Same contract, computed from the dual side: enumerate the dual code once,
// split it against v, and MacWilliams-transform both halves. The coset
// distribution is the exact difference of the two code distributions.
CosetResult coset_distance_dual(const gf2::BitRow& v, const KernelCode& code);

// Binary MacWilliams transform: distribution of the dual of an (n, k) code
// with distribution a. Integer-exact; throws std::invalid_argument when the
// input is not a valid (n, k) distribution (non-integer intermediate).
WeightDistribution macwilliams(const WeightDistribution& a, int n, int k);

// Full weight distribution of the code itself, via whichever of the two
// routes enumerates fewer words.
WeightDistribution code_weight_distribution(const KernelCode& code);

int min_distance(const KernelCode& code);

// Phases >= this threshold use direct enumeration (with early abort where a
// target is known); phases below it the dual route. Default ceil(l/2).
int default_direct_min_phase(int l);

// Exact partial distance profile of an invertible kernel. Throws
// std::runtime_error on a singular matrix. direct_min_phase < 0 selects the
// default threshold.
Pdp verify_kernel(const Kernel& k, int direct_min_phase = -1);

// (1/l) * sum of log_l D_i
double rate_of_polarization(const Pdp& d);

}  // namespace pksearch
