#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pksearch/kernel_codes.hpp"

// Candidate partial-distance-profile generation: nondecreasing profiles under
// per-phase minimum-distance bounds, the two admissibility filters, and a
// polarization-rate threshold, plus multiset permutations of a profile.

namespace pksearch {

struct DistanceTable {
  // sparse (n, k) -> best-known-minimum-distance upper bound
  std::map<std::pair<int, int>, int> entries;
  std::string provenance = "singleton-fallback";

  static DistanceTable from_csv(const std::string& path);
  static DistanceTable from_csv_text(const std::string& text, std::string provenance);
  // classical Griesmer upper bounds for all 1 <= k <= n <= max_n
  static DistanceTable griesmer(int max_n);

  // entry when present, Singleton bound n-k+1 otherwise
  int lookup(int n, int k) const;
  std::string to_csv() const;
};

// largest d with sum_{i<k} ceil(d/2^i) <= n
int griesmer_bound(int n, int k);

struct PdpQuery {
  int size = 0;
  double e_min = 0.0;
  DistanceTable table;
  bool enforce_lemma4 = true;
  bool enforce_lemma5 = true;
};

// Nondecreasing profile with D_1 = 2 must be even from index 1 on.
bool check_lemma4(const Pdp& d);

// Dyadic suffix-sum bound: for every i, sum_{i'=i}^{l-1} 2^(l-i') D_i' <= 2^(l-i) l.
bool check_lemma5(const Pdp& d);

// left-hand side of the check_lemma5 inequality at index i (for equality tests)
unsigned __int128 lemma5_suffix_sum(const Pdp& d, int i);

// Emits, in lexicographic order, every nondecreasing profile with
// D_phi <= table(l, l-phi), passing the enforced filters and with rate
// strictly above e_min. The sink returns false to stop early. Branches are
// pruned with an optimistic-rate completion bound.
void enumerate_pdps(const PdpQuery& q, const std::function<bool(const Pdp&)>& sink);
std::vector<Pdp> collect_pdps(const PdpQuery& q, size_t limit = static_cast<size_t>(-1));

struct PermutationSpec {
  bool all = true;
  std::vector<std::vector<int>> orders;  // index orders, used when !all

  static PermutationSpec all_permutations() { return {}; }
  static PermutationSpec explicit_orders(std::vector<std::vector<int>> o);
};

// Yields the identity arrangement first, then the remaining distinct multiset
// permutations (lexicographic for "all"; deduplicated for explicit orders).
void permute_pdp(const Pdp& d, const PermutationSpec& spec,
                 const std::function<bool(const Pdp&)>& sink);
std::vector<Pdp> collect_permutations(const Pdp& d, const PermutationSpec& spec,
                                      size_t limit = static_cast<size_t>(-1));

}  // namespace pksearch
