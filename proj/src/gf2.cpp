#include "pksearch/gf2.hpp"

#include <stdexcept>

namespace pksearch::gf2 {

BitRow::BitRow(uint64_t b, int n) : bits(b), len(n) {
  if (n < 0 || n > max_len)
    throw std::invalid_argument("BitRow: length must be in [0, 64]");
  if (bits & ~row_mask(n))
    throw std::invalid_argument("BitRow: bits set beyond length");
}

BitRow BitRow::from_string(std::string_view s) {
  if (s.size() > max_len)
    throw std::invalid_argument("BitRow: string longer than 64");
  BitRow r(0, static_cast<int>(s.size()));
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      r.set(static_cast<int>(i));
    else if (s[i] != '0')
      throw std::invalid_argument("BitRow: characters must be 0 or 1");
  }
  return r;
}

std::string BitRow::to_string() const {
  std::string s(static_cast<size_t>(len), '0');
  for (int i = 0; i < len; ++i)
    if (get(i)) s[static_cast<size_t>(i)] = '1';
  return s;
}

BitMatrix::BitMatrix(int ncols, std::vector<uint64_t> r) : cols(ncols), rows(std::move(r)) {
  if (ncols < 0 || ncols > max_len)
    throw std::invalid_argument("BitMatrix: column count must be in [0, 64]");
  for (uint64_t w : rows)
    if (w & ~row_mask(ncols))
      throw std::invalid_argument("BitMatrix: row bits beyond column count");
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n);
  for (int i = 0; i < n; ++i) m.rows.push_back(uint64_t{1} << i);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& lines) {
  if (lines.empty()) return BitMatrix{};
  BitMatrix m(static_cast<int>(lines[0].size()));
  for (const auto& s : lines) m.push_row(BitRow::from_string(s));
  return m;
}

void BitMatrix::push_row(const BitRow& r) {
  if (r.len != cols)
    throw std::invalid_argument("BitMatrix: row length does not match column count");
  rows.push_back(r.bits);
}

int weight(const BitRow& v) { return v.weight(); }

std::pair<BitMatrix, std::vector<int>> rref(const BitMatrix& m) {
  BitMatrix r = m;
  std::vector<int> pivots;
  int pr = 0;
  for (int c = 0; c < r.cols && pr < r.nrows(); ++c) {
    int sel = -1;
    for (int i = pr; i < r.nrows(); ++i) {
      if ((r.rows[static_cast<size_t>(i)] >> c) & 1u) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(r.rows[static_cast<size_t>(pr)], r.rows[static_cast<size_t>(sel)]);
    for (int i = 0; i < r.nrows(); ++i) {
      if (i != pr && ((r.rows[static_cast<size_t>(i)] >> c) & 1u))
        r.rows[static_cast<size_t>(i)] ^= r.rows[static_cast<size_t>(pr)];
    }
    pivots.push_back(c);
    ++pr;
  }
  return {std::move(r), std::move(pivots)};
}

int rank(const BitMatrix& m) { return static_cast<int>(rref(m).second.size()); }

BitMatrix parity_check(const BitMatrix& generators) {
  auto [red, pivots] = rref(generators);
  const int n = generators.cols;
  std::vector<char> is_pivot(static_cast<size_t>(n), 0);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = 1;

  BitMatrix h(n);
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    // dual basis vector supported on free column f and the pivots it touches
    uint64_t row = uint64_t{1} << f;
    for (size_t i = 0; i < pivots.size(); ++i) {
      if ((red.rows[i] >> f) & 1u) row |= uint64_t{1} << pivots[i];
    }
    h.rows.push_back(row);
  }
  return h;
}

BitRow syndrome(const BitRow& v, const BitMatrix& h) {
  if (v.len != h.cols)
    throw std::invalid_argument("syndrome: vector length does not match matrix columns");
  uint64_t s = 0;
  for (int i = 0; i < h.nrows(); ++i) {
    s |= static_cast<uint64_t>(std::popcount(v.bits & h.rows[static_cast<size_t>(i)]) & 1)
         << i;
  }
  return BitRow(s, h.nrows());
}

bool is_column_triangularizable(const BitMatrix& k) {
  if (k.nrows() != k.cols)
    throw std::invalid_argument("is_column_triangularizable: matrix must be square");
  const int l = k.cols;
  uint64_t support = 0;
  for (int i = l - 1; i >= 0; --i) {
    support |= k.rows[static_cast<size_t>(i)];
    if (std::popcount(support) != l - i) return false;
  }
  return true;
}

WeightCombinations::WeightCombinations(int len, int w) : len_(len), w_(w) {
  if (len < 0 || len > max_len || w < 0 || w > len)
    throw std::invalid_argument("WeightCombinations: need 0 <= w <= len <= 64");
}

WeightCombinations::iterator WeightCombinations::begin() const {
  iterator it;
  it.len_ = len_;
  it.done_ = false;
  if (w_ == 0) {
    it.cur_ = 0;
    it.last_ = 0;
  } else {
    const uint64_t mask = row_mask(len_);
    it.cur_ = row_mask(w_);
    it.last_ = mask & (mask << (len_ - w_));
  }
  return it;
}

WeightCombinations::iterator& WeightCombinations::iterator::operator++() {
  if (done_ || cur_ == last_) {
    done_ = true;
    return *this;
  }
  // Gosper's hack: next-larger word with the same popcount.
  const uint64_t c = cur_ & (~cur_ + 1);
  const uint64_t r = cur_ + c;
  cur_ = r | (((cur_ ^ r) >> 2) / c);
  return *this;
}

}  // namespace pksearch::gf2
