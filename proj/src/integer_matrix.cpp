#include <bqg/integer_matrix.hpp>

#include <bqg/error.hpp>

#include <algorithm>
#include <unordered_map>

namespace bqg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols) {
  for (const auto& e : entries)
    if (e.row >= rows || e.col >= cols)
      fail(ErrorCode::InvalidInput, "matrix entry out of range");
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (auto& e : entries) {
    if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col) {
      entries_.back().value += e.value;
      if (entries_.back().value == 0) entries_.pop_back();
    } else if (e.value != 0) {
      entries_.push_back(std::move(e));
    }
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  std::vector<Entry> e;
  e.reserve(n);
  for (std::size_t i = 0; i < n; ++i) e.push_back({i, i, 1});
  return IntMatrix(n, n, std::move(e));
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Entry> e;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorCode::InvalidInput, "ragged matrix");
    for (std::size_t j = 0; j < cols; ++j)
      if (rows[i][j] != 0) e.push_back({i, j, Integer(static_cast<long>(rows[i][j]))});
  }
  return IntMatrix(rows.size(), cols, std::move(e));
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  std::vector<Entry> e;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorCode::InvalidInput, "ragged matrix");
    for (std::size_t j = 0; j < cols; ++j)
      if (rows[i][j] != 0) e.push_back({i, j, rows[i][j]});
  }
  return IntMatrix(rows.size(), cols, std::move(e));
}

Integer IntMatrix::at(std::size_t r, std::size_t c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(r, c),
                             [](const Entry& e, const std::pair<std::size_t, std::size_t>& p) {
                               return e.row != p.first ? e.row < p.first : e.col < p.second;
                             });
  if (it != entries_.end() && it->row == r && it->col == c) return it->value;
  return 0;
}

std::vector<std::vector<Integer>> IntMatrix::to_dense() const {
  std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols_, 0));
  for (const auto& e : entries_) d[e.row][e.col] = e.value;
  return d;
}

IntMatrix IntMatrix::transpose() const {
  std::vector<Entry> e;
  e.reserve(entries_.size());
  for (const auto& x : entries_) e.push_back({x.col, x.row, x.value});
  return IntMatrix(cols_, rows_, std::move(e));
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) fail(ErrorCode::InvalidInput, "matrix product shape mismatch");
  std::vector<std::size_t> start(other.rows_ + 1, 0);
  for (const auto& e : other.entries_) ++start[e.row + 1];
  for (std::size_t i = 0; i < other.rows_; ++i) start[i + 1] += start[i];
  std::vector<Entry> out;
  std::unordered_map<std::size_t, Integer> acc;
  std::size_t i = 0;
  while (i < entries_.size()) {
    const auto row = entries_[i].row;
    acc.clear();
    for (; i < entries_.size() && entries_[i].row == row; ++i) {
      const auto& a = entries_[i];
      for (auto k = start[a.col]; k < start[a.col + 1]; ++k) {
        const auto& b = other.entries_[k];
        acc[b.col] += a.value * b.value;
      }
    }
    for (auto& [c, v] : acc)
      if (v != 0) out.push_back({row, c, std::move(v)});
  }
  return IntMatrix(rows_, other.cols_, std::move(out));
}

IntMatrix IntMatrix::permute_rows(const std::vector<std::size_t>& perm) const {
  std::vector<Entry> e;
  for (const auto& x : entries_) e.push_back({perm.at(x.row), x.col, x.value});
  return IntMatrix(rows_, cols_, std::move(e));
}

IntMatrix IntMatrix::permute_cols(const std::vector<std::size_t>& perm) const {
  std::vector<Entry> e;
  for (const auto& x : entries_) e.push_back({x.row, perm.at(x.col), x.value});
  return IntMatrix(rows_, cols_, std::move(e));
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size())
    return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const auto& x = a.entries_[i];
    const auto& y = b.entries_[i];
    if (x.row != y.row || x.col != y.col || x.value != y.value) return false;
  }
  return true;
}

std::string to_string(const Integer& x) { return x.get_str(); }

}  // namespace bqg
