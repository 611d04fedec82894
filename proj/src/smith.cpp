#include <bqg/smith.hpp>

#include <bqg/error.hpp>

#include <algorithm>
#include <cstdint>
#include <queue>
#include <utility>

namespace bqg {

namespace {

using Dense = std::vector<std::vector<Integer>>;

Dense dense_identity(std::size_t n) {
  Dense d(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

// Row/column reduction with smallest-pivot choice. When Track is set, the
// row operations are mirrored in U and the column operations in V.
template <bool Track>
void reduce(Dense& a, std::size_t m, std::size_t n, Dense* u, Dense* v) {
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    if constexpr (Track) std::swap((*u)[i], (*u)[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    if constexpr (Track)
      for (auto& row : *v) std::swap(row[i], row[j]);
  };
  // row i -= q * row t
  auto row_op = [&](std::size_t i, std::size_t t, const Integer& q) {
    for (std::size_t c = 0; c < n; ++c)
      if (a[t][c] != 0) a[i][c] -= q * a[t][c];
    if constexpr (Track)
      for (std::size_t c = 0; c < m; ++c)
        if ((*u)[t][c] != 0) (*u)[i][c] -= q * (*u)[t][c];
  };
  // col j -= q * col t
  auto col_op = [&](std::size_t j, std::size_t t, const Integer& q) {
    for (std::size_t r = 0; r < m; ++r)
      if (a[r][t] != 0) a[r][j] -= q * a[r][t];
    if constexpr (Track)
      for (std::size_t r = 0; r < n; ++r)
        if ((*v)[r][t] != 0) (*v)[r][j] -= q * (*v)[r][t];
  };

  const std::size_t steps = std::min(m, n);
  Integer q, best;
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (bi == m || abs(a[i][j]) < best)) {
            best = abs(a[i][j]);
            bi = i;
            bj = j;
          }
      if (bi == m) return;
      if (bi != t) swap_rows(bi, t);
      if (bj != t) swap_cols(bj, t);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        row_op(i, t, q);
        if (a[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        col_op(j, t, q);
        if (a[t][j] != 0) dirty = true;
      }
      if (dirty) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] != 0 && !mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            row_op(t, i, Integer(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a[t][t] < 0) {
      for (std::size_t c = 0; c < n; ++c) a[t][c] = -a[t][c];
      if constexpr (Track)
        for (std::size_t c = 0; c < m; ++c) (*u)[t][c] = -(*u)[t][c];
    }
  }
}

template <class T>
struct Arith;

template <>
struct Arith<std::int64_t> {
  static bool sub_mul(std::int64_t x, std::int64_t f, std::int64_t p, std::int64_t& out) {
    std::int64_t prod;
    if (__builtin_mul_overflow(f, p, &prod)) return false;
    return !__builtin_sub_overflow(x, prod, &out);
  }
  static bool mul(std::int64_t a, std::int64_t b, std::int64_t& out) {
    return !__builtin_mul_overflow(a, b, &out);
  }
  static bool is_unit(std::int64_t x) { return x == 1 || x == -1; }
  static Integer to_integer(std::int64_t x) { return Integer(static_cast<long>(x)); }
};

template <>
struct Arith<Integer> {
  static bool sub_mul(const Integer& x, const Integer& f, const Integer& p, Integer& out) {
    out = x - f * p;
    return true;
  }
  static bool mul(const Integer& a, const Integer& b, Integer& out) {
    out = a * b;
    return true;
  }
  static bool is_unit(const Integer& x) { return x == 1 || x == -1; }
  static Integer to_integer(const Integer& x) { return x; }
};

// Gaussian elimination restricted to unit pivots. Pivots are taken in
// columns with the fewest entries first, shortest row among the candidates.
template <class T>
class UnitEliminator {
 public:
  using Row = std::vector<std::pair<std::uint32_t, T>>;

  UnitEliminator(std::vector<Row> rows, std::size_t cols)
      : rows_(std::move(rows)),
        col_rows_(cols),
        col_count_(cols, 0),
        row_dead_(rows_.size(), 0),
        col_dead_(cols, 0),
        stamp_(cols, 0) {
    for (std::uint32_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, v] : rows_[r]) {
        col_rows_[c].push_back(r);
        ++col_count_[c];
      }
  }

  // false on int64 overflow; the object is unusable afterwards
  bool run() {
    for (std::uint32_t c = 0; c < col_count_.size(); ++c)
      if (col_count_[c]) heap_.emplace(col_count_[c], c);
    while (!heap_.empty()) {
      const auto [k, c] = heap_.top();
      heap_.pop();
      if (col_dead_[c] || col_count_[c] != k || k == 0) continue;
      compact(c);
      std::int64_t best = -1;
      for (auto r : col_rows_[c]) {
        const auto* v = find(r, c);
        if (Arith<T>::is_unit(*v) &&
            (best < 0 || rows_[r].size() < rows_[static_cast<std::size_t>(best)].size()))
          best = r;
      }
      if (best < 0) continue;
      if (!pivot(static_cast<std::uint32_t>(best), c)) return false;
    }
    return true;
  }

  std::size_t pivots() const { return pivots_; }

  Dense remainder(std::size_t limit) const {
    std::vector<std::uint32_t> live_rows;
    std::vector<std::int64_t> col_index(col_count_.size(), -1);
    std::size_t ncols = 0;
    for (std::uint32_t r = 0; r < rows_.size(); ++r) {
      if (row_dead_[r] || rows_[r].empty()) continue;
      live_rows.push_back(r);
      for (const auto& [c, v] : rows_[r])
        if (col_index[c] < 0) col_index[c] = static_cast<std::int64_t>(ncols++);
    }
    if (live_rows.size() * ncols > limit)
      fail(ErrorCode::TooLarge, "dense remainder of " + std::to_string(live_rows.size()) + "x" +
                                    std::to_string(ncols) + " after sparse elimination");
    Dense d(live_rows.size(), std::vector<Integer>(ncols, 0));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : rows_[live_rows[i]])
        d[i][static_cast<std::size_t>(col_index[c])] = Arith<T>::to_integer(v);
    return d;
  }

 private:
  const T* find(std::uint32_t r, std::uint32_t c) const {
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::uint32_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) return &it->second;
    return nullptr;
  }

  void compact(std::uint32_t c) {
    auto& list = col_rows_[c];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    std::erase_if(list, [&](std::uint32_t r) { return row_dead_[r] || !find(r, c); });
  }

  void touch(std::uint32_t c) {
    if (stamp_[c] != epoch_) {
      stamp_[c] = epoch_;
      touched_.push_back(c);
    }
  }

  bool pivot(std::uint32_t r, std::uint32_t c) {
    ++epoch_;
    touched_.clear();
    Row p = std::move(rows_[r]);
    rows_[r].clear();
    row_dead_[r] = 1;
    ++pivots_;
    T a{};
    for (const auto& e : p)
      if (e.first == c) a = e.second;
    for (const auto& [col, v] : p) {
      --col_count_[col];
      touch(col);
    }
    Row merged;
    for (auto r2 : col_rows_[c]) {
      if (r2 == r) continue;
      auto& row = rows_[r2];
      const T* b = find(r2, c);
      T f;
      if (!Arith<T>::mul(*b, a, f)) return false;
      merged.clear();
      merged.reserve(row.size() + p.size());
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < p.size()) {
        if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
          merged.push_back(std::move(row[i++]));
        } else if (i == row.size() || p[j].first < row[i].first) {
          T val;
          if (!Arith<T>::sub_mul(T(0), f, p[j].second, val)) return false;
          const auto col = p[j].first;
          merged.emplace_back(col, std::move(val));
          col_rows_[col].push_back(r2);
          ++col_count_[col];
          touch(col);
          ++j;
        } else {
          T val;
          if (!Arith<T>::sub_mul(row[i].second, f, p[j].second, val)) return false;
          const auto col = row[i].first;
          if (val == 0) {
            --col_count_[col];
            touch(col);
          } else {
            merged.emplace_back(col, std::move(val));
          }
          ++i;
          ++j;
        }
      }
      row.swap(merged);
    }
    col_dead_[c] = 1;
    col_rows_[c].clear();
    col_rows_[c].shrink_to_fit();
    for (auto col : touched_)
      if (!col_dead_[col] && col_count_[col]) heap_.emplace(col_count_[col], col);
    return true;
  }

  std::vector<Row> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::uint32_t> col_count_;
  std::vector<char> row_dead_;
  std::vector<char> col_dead_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  std::vector<std::uint32_t> touched_;
  std::priority_queue<std::pair<std::uint32_t, std::uint32_t>,
                      std::vector<std::pair<std::uint32_t, std::uint32_t>>, std::greater<>>
      heap_;
  std::size_t pivots_ = 0;
};

constexpr std::size_t kDenseLimit = 40'000'000;

template <class T>
std::vector<Integer> eliminate(const IntMatrix& m) {
  std::vector<typename UnitEliminator<T>::Row> rows(m.rows());
  for (const auto& e : m.entries()) {
    if constexpr (std::is_same_v<T, std::int64_t>)
      rows[e.row].emplace_back(static_cast<std::uint32_t>(e.col), e.value.get_si());
    else
      rows[e.row].emplace_back(static_cast<std::uint32_t>(e.col), e.value);
  }
  UnitEliminator<T> elim(std::move(rows), m.cols());
  if (!elim.run()) return {};
  std::vector<Integer> out(elim.pivots(), Integer(1));
  for (auto& d : dense_invariant_factors(elim.remainder(kDenseLimit))) out.push_back(std::move(d));
  return out;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Dense a = m.to_dense();
  Dense u = dense_identity(rows);
  Dense v = dense_identity(cols);
  reduce<true>(a, rows, cols, &u, &v);
  SmithForm s;
  s.U = IntMatrix::from_dense(u, rows);
  s.V = IntMatrix::from_dense(v, cols);
  s.D = IntMatrix::from_dense(a, cols);
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) s.diagonal.push_back(a[i][i]);
  return s;
}

std::vector<Integer> dense_invariant_factors(Dense a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  reduce<false>(a, rows, cols, nullptr, nullptr);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(rows, cols); ++i)
    if (a[i][i] != 0) out.push_back(a[i][i]);
  return out;
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  if (m.is_zero()) return {};
  const bool small = std::all_of(m.entries().begin(), m.entries().end(),
                                 [](const auto& e) { return e.value.fits_slong_p(); });
  if (small) {
    auto out = eliminate<std::int64_t>(m);
    if (!out.empty()) return out;
  }
  return eliminate<Integer>(m);
}

std::size_t matrix_rank(const IntMatrix& m) { return invariant_factors(m).size(); }

}  // namespace bqg
