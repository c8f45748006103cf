#include "gstrat/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace gstrat {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    // ragged literals are padded with zeros
    std::size_t c = 0;
    for (auto v : row) {
      if (c++ < cols_) data_.push_back(v);
    }
    for (; c < cols_; ++c) data_.push_back(0);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<std::int64_t>& diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, std::int64_t k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, std::int64_t k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

std::vector<std::int64_t> SmithDecomposition::invariants() const {
  const auto n = std::min(diagonal.rows(), diagonal.cols());
  std::vector<std::int64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = diagonal(i, i);
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const auto rows = m.rows();
  const auto cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  const auto n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // pivot: smallest non-zero magnitude in the trailing block
      std::size_t pr = rows, pc = cols;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const auto x = std::llabs(a(i, j));
          if (x != 0 && (best == 0 || x < best)) {
            best = x;
            pr = i;
            pc = j;
          }
        }
      if (best == 0) return {std::move(u), std::move(a), std::move(v)};

      a.swap_rows(t, pr);
      u.swap_rows(t, pr);
      a.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool clean = true;
      const auto p = a(t, t);
      for (std::size_t i = t + 1; i < rows; ++i) {
        const auto q = a(i, t) / p;
        a.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const auto q = a(t, j) / p;
        a.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the whole trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % p != 0) {
            a.add_row(t, i, 1);
            u.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

}  // namespace gstrat
