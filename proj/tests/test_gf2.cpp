#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "pksearch/gf2.hpp"

using namespace pksearch::gf2;

namespace {

// independent span builder: all subset sums, no bit tricks shared with the library
std::set<uint64_t> naive_span(const std::vector<uint64_t>& gens) {
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

BitMatrix random_matrix(std::mt19937_64& rng, int nrows, int ncols) {
  BitMatrix m(ncols);
  for (int i = 0; i < nrows; ++i)
    m.rows.push_back(rng() & row_mask(ncols));
  return m;
}

}  // namespace

TEST_CASE("weight") {
  CHECK(weight(BitRow::from_string("00000")) == 0);
  CHECK(weight(BitRow::from_string("1111")) == 4);
  CHECK(weight(BitRow::from_string("1010")) == 2);
}

TEST_CASE("BitRow string round trip and validation") {
  const BitRow r = BitRow::from_string("10110");
  CHECK(r.to_string() == "10110");
  CHECK(r.get(0));
  CHECK(!r.get(1));
  CHECK_THROWS_AS(BitRow::from_string("10x"), std::invalid_argument);
  CHECK_THROWS_AS(BitRow(0b100, 2), std::invalid_argument);
}

TEST_CASE("rref examples") {
  SUBCASE("identity is already reduced") {
    auto [r, piv] = rref(BitMatrix::identity(3));
    CHECK(r == BitMatrix::identity(3));
    CHECK(piv == std::vector<int>{0, 1, 2});
  }
  SUBCASE("duplicate rows collapse") {
    auto [r, piv] = rref(BitMatrix::from_strings({"11", "11"}));
    CHECK(r == BitMatrix::from_strings({"11", "00"}));
    CHECK(piv == std::vector<int>{0});
  }
  SUBCASE("back substitution") {
    auto [r, piv] = rref(BitMatrix::from_strings({"110", "011"}));
    CHECK(r == BitMatrix::from_strings({"101", "011"}));
    CHECK(piv == std::vector<int>{0, 1});
  }
}

TEST_CASE("rref preserves the row space") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);  // up to 10 columns
    const int m = 1 + static_cast<int>(rng() % 6);
    const BitMatrix a = random_matrix(rng, m, n);
    const BitMatrix r = rref(a).first;
    CHECK(naive_span(a.rows) == naive_span(r.rows));
  }
}

TEST_CASE("parity_check examples") {
  SUBCASE("full-rank square input has an empty dual") {
    const BitMatrix h = parity_check(BitMatrix::identity(4));
    CHECK(h.nrows() == 0);
    CHECK(h.cols == 4);
  }
  SUBCASE("single generator") {
    const BitMatrix g = BitMatrix::from_strings({"111"});
    const BitMatrix h = parity_check(g);
    REQUIRE(h.nrows() == 2);
    CHECK(rank(h) == 2);
    for (uint64_t hr : h.rows)
      CHECK((std::popcount(g.rows[0] & hr) & 1) == 0);
    CHECK(naive_span(h.rows) == naive_span({0b011, 0b110}));
  }
  SUBCASE("empty input gives the identity dual") {
    const BitMatrix h = parity_check(BitMatrix(3));
    CHECK(h.nrows() == 3);
    CHECK(naive_span(h.rows) == naive_span({1, 2, 4}));
  }
}

TEST_CASE("parity_check separates codewords from non-codewords exhaustively") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10);  // up to 12
    const int k = 1 + static_cast<int>(rng() % n);
    const BitMatrix g = random_matrix(rng, k, n);
    const BitMatrix h = parity_check(g);
    CHECK(h.nrows() == n - rank(g));
    const auto span = naive_span(g.rows);
    for (uint64_t v = 0; v < (uint64_t{1} << n); ++v) {
      const BitRow s = syndrome(BitRow(v, n), h);
      CHECK((s.bits == 0) == (span.count(v) > 0));
    }
  }
}

TEST_CASE("syndrome examples and linearity") {
  const BitMatrix h = BitMatrix::from_strings({"110", "011"});
  CHECK(syndrome(BitRow::from_string("000"), h).bits == 0);
  CHECK(syndrome(BitRow::from_string("100"), h).to_string() == "10");
  CHECK(syndrome(BitRow::from_string("101"), BitMatrix::identity(3)) ==
        BitRow::from_string("101"));
  CHECK_THROWS_AS(syndrome(BitRow::from_string("10"), h), std::invalid_argument);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 15);
    const BitMatrix m = random_matrix(rng, 1 + static_cast<int>(rng() % n), n);
    const BitRow a(rng() & row_mask(n), n), b(rng() & row_mask(n), n);
    CHECK(syndrome(a ^ b, m) == (syndrome(a, m) ^ syndrome(b, m)));
  }
}

TEST_CASE("weight_combinations") {
  SUBCASE("zero weight") {
    std::vector<BitRow> got;
    for (BitRow r : WeightCombinations(4, 0)) got.push_back(r);
    REQUIRE(got.size() == 1);
    CHECK(got[0].bits == 0);
  }
  SUBCASE("counts, order and distinctness") {
    auto binom = [](int n, int k) {
      uint64_t r = 1;
      for (int i = 0; i < k; ++i) r = r * static_cast<uint64_t>(n - i) / static_cast<uint64_t>(i + 1);
      return r;
    };
    for (auto [len, w] : std::vector<std::pair<int, int>>{
             {4, 2}, {5, 3}, {6, 1}, {6, 6}, {17, 16}, {10, 5}}) {
      std::set<uint64_t> seen;
      uint64_t prev = 0;
      bool first = true;
      for (BitRow r : WeightCombinations(len, w)) {
        CHECK(r.weight() == w);
        CHECK(seen.insert(r.bits).second);
        if (!first) CHECK(r.bits > prev);  // colex by support = ascending integers
        prev = r.bits;
        first = false;
      }
      CHECK(seen.size() == binom(len, w));
    }
  }
  SUBCASE("full length edge") {
    std::vector<BitRow> got;
    for (BitRow r : WeightCombinations(64, 64)) got.push_back(r);
    REQUIRE(got.size() == 1);
    CHECK(got[0].bits == ~uint64_t{0});
  }
}

TEST_CASE("is_column_triangularizable") {
  CHECK(is_column_triangularizable(BitMatrix::identity(5)));
  CHECK(!is_column_triangularizable(BitMatrix::from_strings({"10", "11"})));
  CHECK(!is_column_triangularizable(
      BitMatrix::from_strings({"1000", "1100", "1010", "1111"})));
  // lower-triangular flips to upper by reversing columns
  CHECK(is_column_triangularizable(BitMatrix::from_strings({"111", "011", "001"})));
}
