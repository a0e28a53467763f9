#include "pksearch/kernel_codes.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace pksearch {

using gf2::BitMatrix;
using gf2::BitRow;

Kernel::Kernel(int l, std::vector<uint64_t> r) : size(l), rows(std::move(r)) {
  if (l < 1 || l > gf2::max_len)
    throw std::invalid_argument("Kernel: size must be in [1, 64]");
  if (static_cast<int>(rows.size()) != l)
    throw std::invalid_argument("Kernel: row count must equal size");
  for (uint64_t w : rows)
    if (w & ~gf2::row_mask(l))
      throw std::invalid_argument("Kernel: row bits beyond size");
}

Kernel Kernel::from_matrix(const BitMatrix& m) {
  if (m.nrows() != m.cols)
    throw std::invalid_argument("Kernel: matrix must be square");
  return Kernel(m.cols, m.rows);
}

BitMatrix Kernel::matrix() const { return BitMatrix(size, rows); }

KernelCode::KernelCode(int n, int ph, std::vector<uint64_t> g)
    : len(n), phase(ph), gens(std::move(g)) {
  if (n < 1 || n > gf2::max_len)
    throw std::invalid_argument("KernelCode: length must be in [1, 64]");
  if (ph < 0 || ph > n || static_cast<int>(gens.size()) != n - ph)
    throw std::invalid_argument("KernelCode: generator count must equal len - phase");
}

KernelCode KernelCode::suffix(const Kernel& k, int phase) {
  if (phase < 0 || phase > k.size)
    throw std::invalid_argument("KernelCode: phase out of range");
  return KernelCode(k.size, phase,
                    std::vector<uint64_t>(k.rows.begin() + phase, k.rows.end()));
}

KernelCode KernelCode::spanned(int len, std::vector<uint64_t> gens) {
  const int ph = len - static_cast<int>(gens.size());
  return KernelCode(len, ph, std::move(gens));
}

BitMatrix KernelCode::generator_matrix() const { return BitMatrix(len, gens); }

int WeightDistribution::min_positive_weight() const {
  for (size_t w = 1; w < counts.size(); ++w)
    if (counts[w] > 0) return static_cast<int>(w);
  return infinite_distance;
}

uint64_t WeightDistribution::total() const {
  uint64_t t = 0;
  for (uint64_t c : counts) t += c;
  return t;
}

size_t WeightDistributionHash::operator()(const WeightDistribution& d) const {
  uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a over the count words
  for (uint64_t c : d.counts) {
    for (int b = 0; b < 64; b += 8) {
      h ^= (c >> b) & 0xff;
      h *= 0x100000001b3ull;
    }
  }
  return static_cast<size_t>(h);
}

Pdp Pdp::parse(std::string_view csv) {
  Pdp p;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    std::string_view tok = csv.substr(pos, comma == std::string_view::npos
                                               ? std::string_view::npos
                                               : comma - pos);
    // tolerate surrounding spaces
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) throw std::invalid_argument("Pdp: empty entry");
    int value = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("Pdp: entries must be integers");
      value = value * 10 + (ch - '0');
      if (value > gf2::max_len) throw std::invalid_argument("Pdp: entry out of range");
    }
    if (value < 1) throw std::invalid_argument("Pdp: entries must be positive");
    p.d.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (p.d.empty()) throw std::invalid_argument("Pdp: no entries");
  return p;
}

std::string Pdp::to_string() const {
  std::string s;
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d[i]);
  }
  return s;
}

CosetResult coset_distance_direct(const BitRow& v, const KernelCode& code,
                                  std::optional<int> abort_below) {
  if (v.len != code.len)
    throw std::invalid_argument("coset_distance_direct: length mismatch");
  const int k = code.dim();
  if (k >= 63) throw std::invalid_argument("coset_distance_direct: dimension too large");

  uint64_t word = v.bits;
  int best = std::popcount(word);
  if (abort_below && best < *abort_below) return {best, std::nullopt};

  WeightDistribution dist(code.len);
  ++dist.counts[static_cast<size_t>(best)];
  const uint64_t total = uint64_t{1} << k;
  for (uint64_t i = 1; i < total; ++i) {
    word ^= code.gens[static_cast<size_t>(std::countr_zero(i))];
    const int w = std::popcount(word);
    if (abort_below && w < *abort_below) return {w, std::nullopt};
    if (w < best) best = w;
    ++dist.counts[static_cast<size_t>(w)];
  }
  return {best, std::move(dist)};
}

CosetResult coset_distance_dual(const BitRow& v, const KernelCode& code) {
  if (v.len != code.len)
    throw std::invalid_argument("coset_distance_dual: length mismatch");
  const int n = code.len;
  const BitMatrix h = parity_check(code.generator_matrix());
  const int m = h.nrows();  // dual dimension
  if (m >= 63) throw std::invalid_argument("coset_distance_dual: dual dimension too large");

  // One pass over the dual code, tallying the whole dual and the subcode
  // orthogonal to v (the dual of <code, v>).
  std::vector<int> vdot(static_cast<size_t>(m));
  bool v_in_code = true;
  for (int i = 0; i < m; ++i) {
    vdot[static_cast<size_t>(i)] = std::popcount(v.bits & h.rows[static_cast<size_t>(i)]) & 1;
    if (vdot[static_cast<size_t>(i)]) v_in_code = false;
  }

  WeightDistribution dual_all(n), dual_perp(n);
  uint64_t word = 0;
  int dot = 0;
  ++dual_all.counts[0];
  ++dual_perp.counts[0];
  const uint64_t total = uint64_t{1} << m;
  for (uint64_t i = 1; i < total; ++i) {
    const int t = std::countr_zero(i);
    word ^= h.rows[static_cast<size_t>(t)];
    dot ^= vdot[static_cast<size_t>(t)];
    const size_t w = static_cast<size_t>(std::popcount(word));
    ++dual_all.counts[w];
    if (!dot) ++dual_perp.counts[w];
  }

  WeightDistribution code_dist = macwilliams(dual_all, n, m);
  if (v_in_code) return {0, std::move(code_dist)};

  const WeightDistribution ext_dist = macwilliams(dual_perp, n, m - 1);
  WeightDistribution coset(n);
  for (size_t w = 0; w <= static_cast<size_t>(n); ++w) {
    if (ext_dist.counts[w] < code_dist.counts[w])
      throw std::logic_error("coset_distance_dual: negative coset count");
    coset.counts[w] = ext_dist.counts[w] - code_dist.counts[w];
  }
  const int d = coset.min_positive_weight();
  return {d, std::move(coset)};
}

WeightDistribution macwilliams(const WeightDistribution& a, int n, int k) {
  if (a.length() != n)
    throw std::invalid_argument("macwilliams: distribution length must be n");
  if (k < 0 || k > n || n > gf2::max_len)
    throw std::invalid_argument("macwilliams: need 0 <= k <= n <= 64");

  std::vector<std::vector<uint64_t>> binom(static_cast<size_t>(n) + 1,
                                           std::vector<uint64_t>(static_cast<size_t>(n) + 1, 0));
  for (size_t i = 0; i <= static_cast<size_t>(n); ++i) {
    binom[i][0] = 1;
    for (size_t j = 1; j <= i; ++j)
      binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
  }

  WeightDistribution out(n);
  for (int j = 0; j <= n; ++j) {
    __int128 acc = 0;
    for (int i = 0; i <= n; ++i) {
      if (a.counts[static_cast<size_t>(i)] == 0) continue;
      __int128 kraw = 0;  // Krawtchouk K_j(i)
      for (int t = 0; t <= j; ++t) {
        if (t > i || j - t > n - i) continue;
        const __int128 term = static_cast<__int128>(binom[static_cast<size_t>(i)][static_cast<size_t>(t)]) *
                              binom[static_cast<size_t>(n - i)][static_cast<size_t>(j - t)];
        kraw += (t & 1) ? -term : term;
      }
      acc += static_cast<__int128>(a.counts[static_cast<size_t>(i)]) * kraw;
    }
    if (acc < 0 || (acc >> k) << k != acc)
      throw std::invalid_argument("macwilliams: input is not a valid (n, k) distribution");
    out.counts[static_cast<size_t>(j)] = static_cast<uint64_t>(acc >> k);
  }
  return out;
}

WeightDistribution code_weight_distribution(const KernelCode& code) {
  const int k = code.dim();
  if (k <= code.len - k) {
    auto r = coset_distance_direct(BitRow(0, code.len), code);
    return std::move(*r.dist);
  }
  const BitMatrix h = parity_check(code.generator_matrix());
  KernelCode dual = KernelCode::spanned(code.len, h.rows);
  auto r = coset_distance_direct(BitRow(0, code.len), dual);
  return macwilliams(*r.dist, code.len, h.nrows());
}

int min_distance(const KernelCode& code) {
  if (code.dim() == 0) return infinite_distance;
  return code_weight_distribution(code).min_positive_weight();
}

int default_direct_min_phase(int l) { return (l + 1) / 2; }

Pdp verify_kernel(const Kernel& k, int direct_min_phase) {
  const int l = k.size;
  if (direct_min_phase < 0) direct_min_phase = default_direct_min_phase(l);
  Pdp out;
  out.d.assign(static_cast<size_t>(l), 0);
  for (int phi = l - 1; phi >= 0; --phi) {
    const KernelCode suffix = KernelCode::suffix(k, phi + 1);
    const CosetResult r = phi >= direct_min_phase
                              ? coset_distance_direct(k.row(phi), suffix)
                              : coset_distance_dual(k.row(phi), suffix);
    if (r.distance == 0)
      throw std::runtime_error("verify_kernel: matrix is singular");
    out.d[static_cast<size_t>(phi)] = r.distance;
  }
  return out;
}

double rate_of_polarization(const Pdp& d) {
  const int l = d.size();
  if (l < 2) throw std::invalid_argument("rate_of_polarization: need size >= 2");
  double sum = 0.0;
  for (int v : d.d) {
    if (v < 1) throw std::invalid_argument("rate_of_polarization: entries must be >= 1");
    sum += std::log(static_cast<double>(v));
  }
  return sum / (static_cast<double>(l) * std::log(static_cast<double>(l)));
}

}  // namespace pksearch
