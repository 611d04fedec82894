#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bqg {

using Integer = mpz_class;

/// Sparse integer matrix as a normalized triplet list: sorted by (row, col),
/// no zeros, no repeated positions.
class IntMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Integer value;
  };

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  /// Entries at the same position are summed.
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_dense(const std::vector<std::vector<long long>>& rows);
  static IntMatrix from_dense(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  Integer at(std::size_t r, std::size_t c) const;

  std::vector<std::vector<Integer>> to_dense() const;
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  /// Same matrix with rows (or columns) moved: new index of old i is perm[i].
  IntMatrix permute_rows(const std::vector<std::size_t>& perm) const;
  IntMatrix permute_cols(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> entries_;
};

std::string to_string(const Integer& x);

}  // namespace bqg
