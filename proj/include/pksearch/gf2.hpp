#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Bit-packed linear algebra over GF(2). Dimensions are capped at 64 so a row
// is a single machine word; bit j of the word is coordinate j.

namespace pksearch::gf2 {

inline constexpr int max_len = 64;

// All-ones mask for a row of the given length.
constexpr uint64_t row_mask(int len) {
  return len >= 64 ? ~uint64_t{0} : (uint64_t{1} << len) - 1;
}

struct BitRow {
  uint64_t bits = 0;
  int len = 0;

  BitRow() = default;
  BitRow(uint64_t b, int n);

  // "0110...": character i is coordinate i.
  static BitRow from_string(std::string_view s);
  std::string to_string() const;

  int weight() const { return std::popcount(bits); }
  bool get(int i) const { return (bits >> i) & 1u; }
  void set(int i) { bits |= uint64_t{1} << i; }

  friend BitRow operator^(BitRow a, BitRow b) { return BitRow(a.bits ^ b.bits, a.len); }
  bool operator==(const BitRow&) const = default;
};

struct BitMatrix {
  int cols = 0;
  std::vector<uint64_t> rows;

  BitMatrix() = default;
  explicit BitMatrix(int ncols) : cols(ncols) {}
  BitMatrix(int ncols, std::vector<uint64_t> r);

  static BitMatrix identity(int n);
  static BitMatrix from_strings(const std::vector<std::string>& lines);

  int nrows() const { return static_cast<int>(rows.size()); }
  BitRow row(int i) const { return BitRow(rows[static_cast<size_t>(i)], cols); }
  void push_row(const BitRow& r);
  bool operator==(const BitMatrix&) const = default;
};

int weight(const BitRow& v);

// Reduced row-echelon form. Row count is preserved (eliminated rows stay as
// zero rows at the bottom); second element lists the pivot column of each
// nonzero row in order.
std::pair<BitMatrix, std::vector<int>> rref(const BitMatrix& m);

int rank(const BitMatrix& m);

// Parity-check matrix H of the row space of `generators`: (n-k) x n with
// G·Hᵀ = 0 and rank n-k, where k = rank(generators). Full-rank square input
// yields the 0 x n matrix, empty input the identity.
BitMatrix parity_check(const BitMatrix& generators);

// v·Hᵀ. Result length equals the number of rows of h.
BitRow syndrome(const BitRow& v, const BitMatrix& h);

// True iff some column permutation makes the (invertible) square matrix upper
// triangular with its given row order: the support union of rows i..l-1 must
// have size exactly l-i for every i.
bool is_column_triangularizable(const BitMatrix& k);

// All C(len, w) rows of weight exactly w, in colexicographic order by support
// (equivalently: ascending as integers).
class WeightCombinations {
 public:
  WeightCombinations(int len, int w);

  class iterator {
   public:
    using value_type = BitRow;
    BitRow operator*() const { return BitRow(cur_, len_); }
    iterator& operator++();
    bool operator==(const iterator& o) const {
      return done_ == o.done_ && (done_ || cur_ == o.cur_);
    }

   private:
    friend class WeightCombinations;
    uint64_t cur_ = 0;
    uint64_t last_ = 0;
    int len_ = 0;
    bool done_ = true;
  };

  iterator begin() const;
  iterator end() const { return iterator{}; }

 private:
  int len_;
  int w_;
};

}  // namespace pksearch::gf2
