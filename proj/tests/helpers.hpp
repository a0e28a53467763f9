#pragma once

#include <random>
#include <set>
#include <vector>

#include "pksearch/gf2.hpp"
#include "pksearch/kernel_codes.hpp"

// shared test utilities: naive oracles kept independent of the library's
// enumeration tricks, plus small kernel constructors

namespace testutil {

inline std::set<uint64_t> naive_span(const std::vector<uint64_t>& gens) {
  std::set<uint64_t> span;
  const size_t k = gens.size();
  for (uint64_t sub = 0; sub < (uint64_t{1} << k); ++sub) {
    uint64_t w = 0;
    for (size_t i = 0; i < k; ++i)
      if ((sub >> i) & 1) w ^= gens[i];
    span.insert(w);
  }
  return span;
}

// full coset weight distribution of v + span(gens) by plain subset sums
inline std::vector<uint64_t> naive_coset_distribution(uint64_t v,
                                                      const std::vector<uint64_t>& gens,
                                                      int len) {
  std::vector<uint64_t> counts(static_cast<size_t>(len) + 1, 0);
  for (uint64_t w : naive_span(gens)) {
    // spans of dependent generators repeat words; duplicates collapse here,
    // callers pass independent generators
    ++counts[static_cast<size_t>(std::popcount(w ^ v))];
  }
  return counts;
}

inline int naive_coset_distance(uint64_t v, const std::vector<uint64_t>& gens, int len) {
  const auto counts = naive_coset_distribution(v, gens, len);
  for (size_t w = 0; w < counts.size(); ++w)
    if (counts[w]) return static_cast<int>(w);
  return -1;
}

inline pksearch::Kernel arikan2() { return pksearch::Kernel(2, {0b01, 0b11}); }

inline pksearch::Kernel kronecker(const pksearch::Kernel& a, const pksearch::Kernel& b) {
  const int n = a.size * b.size;
  std::vector<uint64_t> rows;
  for (int ia = 0; ia < a.size; ++ia) {
    for (int ib = 0; ib < b.size; ++ib) {
      uint64_t row = 0;
      for (int ja = 0; ja < a.size; ++ja) {
        if (!a.row(ia).get(ja)) continue;
        for (int jb = 0; jb < b.size; ++jb)
          if (b.row(ib).get(jb)) row |= uint64_t{1} << (ja * b.size + jb);
      }
      rows.push_back(row);
    }
  }
  return pksearch::Kernel(n, rows);
}

inline pksearch::Kernel arikan_power(int m) {
  pksearch::Kernel k = arikan2();
  for (int i = 1; i < m; ++i) k = kronecker(k, arikan2());
  return k;
}

inline pksearch::Kernel random_invertible_kernel(std::mt19937_64& rng, int l) {
  for (;;) {
    std::vector<uint64_t> rows;
    for (int i = 0; i < l; ++i) rows.push_back(rng() & pksearch::gf2::row_mask(l));
    pksearch::gf2::BitMatrix m(l, rows);
    if (pksearch::gf2::rank(m) == l) return pksearch::Kernel(l, rows);
  }
}

}  // namespace testutil
