#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gstrat {

/// Dense row-major integer matrix. Entries are 64-bit; callers keep sizes at
/// desk scale so intermediate products stay in range.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<std::int64_t>& diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix&) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, std::int64_t k);
  /// col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, std::int64_t k);
  void negate_row(std::size_t r);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

struct SmithDecomposition {
  IntMatrix left;      // U, unimodular rows x rows
  IntMatrix diagonal;  // D = U * M * V
  IntMatrix right;     // V, unimodular cols x cols

  /// Diagonal entries d_1 | d_2 | ... (non-negative), min(rows, cols) of them.
  std::vector<std::int64_t> invariants() const;
};

/// Smith normal form by unimodular row and column operations. The diagonal
/// is non-negative and each entry divides the next; zeros trail.
SmithDecomposition smith_normal_form(const IntMatrix& m);

}  // namespace gstrat
