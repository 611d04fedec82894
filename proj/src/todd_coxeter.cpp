#include <bqg/todd_coxeter.hpp>

#include <bqg/error.hpp>

#include <algorithm>

namespace bqg {

Word CosetTable::word_of(std::uint32_t c) const {
  Word w;
  while (c != 0) {
    w.push_back(parent_letter[c]);
    c = parent[c];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

namespace {

constexpr std::int32_t kNone = -1;
constexpr std::size_t kMaxDeductions = 1 << 18;

class Enumerator {
 public:
  Enumerator(const GroupPresentation& p, const std::vector<Word>& subgroup, std::size_t cap)
      : cols_(2 * p.generator_count()), cap_(cap), by_col_(cols_) {
    auto encode = [](const Word& w) {
      std::vector<std::uint32_t> out;
      for (const auto& l : w) out.push_back(2 * l.generator + (l.inverse ? 1 : 0));
      return out;
    };
    for (const auto& r : p.relators) {
      auto w = encode(r);
      if (w.empty()) continue;
      relators_.push_back(w);
      for (std::size_t s = 0; s < w.size(); ++s) {
        std::vector<std::uint32_t> rot(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
        by_col_[rot.front()].push_back(std::move(rot));
      }
    }
    for (const auto& w : subgroup)
      if (!w.empty()) subgroup_.push_back(encode(w));
  }

  CosetTable run() {
    CosetTable out;
    out.generators = cols_ / 2;
    if (cap_ == 0) return out;
    new_coset();
    std::int32_t alpha = 0;
    while (alpha != kNone) {
      const auto r = process(alpha);
      if (r == Outcome::Full) {
        const auto before = free_.size() + pending_.size();
        lookahead();
        const auto freed = free_.size() + pending_.size() - before;
        stalls_ = freed * 64 < cap_ ? stalls_ + 1 : 0;
        if (freed == 0 || stalls_ > 16) {
          out.cosets = live_;
          out.peak_cosets = peak_;
          out.defined_cosets = defined_;
          return out;
        }
        if (alive_[static_cast<std::size_t>(alpha)]) {
          release();
          continue;
        }
      }
      std::int32_t nxt = next_[static_cast<std::size_t>(alpha)];
      while (nxt != kNone && !alive_[static_cast<std::size_t>(nxt)])
        nxt = next_[static_cast<std::size_t>(nxt)];
      release();
      alpha = nxt;
    }
    return standardize(out);
  }

 private:
  enum class Outcome { Done, Full };

  std::size_t slots() const { return alive_.size() - free_.size(); }
  std::int32_t& at(std::int32_t c, std::uint32_t x) {
    return table_[static_cast<std::size_t>(c) * cols_ + x];
  }

  std::int32_t new_coset() {
    std::int32_t c;
    if (!free_.empty()) {
      c = free_.back();
      free_.pop_back();
      std::fill_n(table_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(c) * cols_),
                  cols_, kNone);
    } else {
      if (alive_.size() >= cap_) return kNone;
      c = static_cast<std::int32_t>(alive_.size());
      alive_.push_back(0);
      uf_.push_back(0);
      next_.push_back(kNone);
      prev_.push_back(kNone);
      table_.resize(table_.size() + cols_, kNone);
    }
    const auto u = static_cast<std::size_t>(c);
    alive_[u] = 1;
    uf_[u] = c;
    next_[u] = kNone;
    prev_[u] = tail_;
    if (tail_ != kNone) next_[static_cast<std::size_t>(tail_)] = c;
    tail_ = c;
    ++live_;
    ++defined_;
    peak_ = std::max(peak_, live_);
    return c;
  }

  bool define(std::int32_t f, std::uint32_t x) {
    const auto c = new_coset();
    if (c == kNone) return false;
    at(f, x) = c;
    at(c, x ^ 1U) = f;
    push_deduction(f, x);
    return true;
  }

  void push_deduction(std::int32_t c, std::uint32_t x) {
    if (deductions_.size() >= kMaxDeductions) {
      deductions_.clear();  // HLT scanning still guarantees correctness
      return;
    }
    deductions_.emplace_back(c, x);
  }

  void kill(std::int32_t c) {
    const auto u = static_cast<std::size_t>(c);
    alive_[u] = 0;
    --live_;
    const auto pr = prev_[u], nx = next_[u];
    if (pr != kNone) next_[static_cast<std::size_t>(pr)] = nx;
    if (nx != kNone) prev_[static_cast<std::size_t>(nx)] = pr;
    if (tail_ == c) tail_ = pr;
    pending_.push_back(c);
  }

  void release() {
    for (auto c : pending_) free_.push_back(c);
    pending_.clear();
  }

  std::int32_t rep(std::int32_t k) {
    std::int32_t r = k;
    while (uf_[static_cast<std::size_t>(r)] != r) r = uf_[static_cast<std::size_t>(r)];
    while (uf_[static_cast<std::size_t>(k)] != r) {
      const auto n = uf_[static_cast<std::size_t>(k)];
      uf_[static_cast<std::size_t>(k)] = r;
      k = n;
    }
    return r;
  }

  void merge(std::int32_t k, std::int32_t l, std::vector<std::int32_t>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    uf_[static_cast<std::size_t>(l)] = k;
    queue.push_back(l);
    kill(l);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    std::vector<std::int32_t> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const auto g = queue[i];
      for (std::uint32_t x = 0; x < cols_; ++x) {
        const auto d = at(g, x);
        if (d == kNone) continue;
        if (at(d, x ^ 1U) == g) at(d, x ^ 1U) = kNone;
        const auto mu = rep(g), nu = rep(d);
        if (at(mu, x) != kNone) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, x ^ 1U) != kNone) {
          merge(mu, at(nu, x ^ 1U), queue);
        } else {
          at(mu, x) = nu;
          at(nu, x ^ 1U) = mu;
          push_deduction(mu, x);
        }
      }
    }
  }

  Outcome scan(std::int32_t alpha, const std::vector<std::uint32_t>& w, bool fill) {
    std::size_t i = 0;
    std::size_t j = w.size();  // one past the last unscanned letter
    std::int32_t f = alpha, b = alpha;
    while (true) {
      while (i < j && at(f, w[i]) != kNone) f = at(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return Outcome::Done;
      }
      while (j > i && at(b, w[j - 1] ^ 1U) != kNone) b = at(b, w[--j] ^ 1U);
      if (j == i) {
        coincidence(f, b);
        return Outcome::Done;
      }
      if (j == i + 1) {
        at(f, w[i]) = b;
        at(b, w[i] ^ 1U) = f;
        push_deduction(f, w[i]);
        return Outcome::Done;
      }
      if (!fill) return Outcome::Done;
      if (!define(f, w[i])) return Outcome::Full;
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      const auto [a, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive_[static_cast<std::size_t>(a)]) continue;
      for (const auto& w : by_col_[x]) {
        scan(a, w, false);
        if (!alive_[static_cast<std::size_t>(a)]) break;
      }
      if (!alive_[static_cast<std::size_t>(a)]) continue;
      const auto b = at(a, x);
      if (b == kNone) continue;
      for (const auto& w : by_col_[x ^ 1U]) {
        scan(b, w, false);
        if (!alive_[static_cast<std::size_t>(b)]) break;
      }
    }
  }

  Outcome process(std::int32_t alpha) {
    const auto a = static_cast<std::size_t>(alpha);
    if (alpha == 0)
      for (const auto& w : subgroup_) {
        if (scan(alpha, w, true) == Outcome::Full) return Outcome::Full;
        process_deductions();
        if (!alive_[a]) return Outcome::Done;
      }
    for (const auto& w : relators_) {
      if (scan(alpha, w, true) == Outcome::Full) return Outcome::Full;
      process_deductions();
      if (!alive_[a]) return Outcome::Done;
    }
    for (std::uint32_t x = 0; x < cols_; ++x) {
      if (!alive_[a]) return Outcome::Done;
      if (at(alpha, x) != kNone) continue;
      if (!define(alpha, x)) return Outcome::Full;
      process_deductions();
    }
    return Outcome::Done;
  }

  void lookahead() {
    deductions_.clear();
    for (std::int32_t b = 0; b != kNone;) {
      if (alive_[static_cast<std::size_t>(b)])
        for (const auto& w : relators_) {
          scan(b, w, false);
          if (!alive_[static_cast<std::size_t>(b)]) break;
        }
      process_deductions();
      b = next_[static_cast<std::size_t>(b)];
    }
  }

  CosetTable standardize(CosetTable& out) {
    std::vector<std::int32_t> number(alive_.size(), kNone);
    std::vector<std::int32_t> order{0};
    number[0] = 0;
    out.parent.assign(1, 0);
    out.parent_letter.assign(1, Letter{0, false});
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::uint32_t x = 0; x < cols_; ++x) {
        const auto d = at(order[i], x);
        if (d == kNone) fail(ErrorCode::Internal, "coset table incomplete after enumeration");
        if (number[static_cast<std::size_t>(d)] == kNone) {
          number[static_cast<std::size_t>(d)] = static_cast<std::int32_t>(order.size());
          order.push_back(d);
          out.parent.push_back(static_cast<std::uint32_t>(i));
          out.parent_letter.push_back(Letter{x / 2, (x & 1U) != 0});
        }
      }
    if (order.size() != live_) fail(ErrorCode::Internal, "coset table is not transitive");
    out.cosets = order.size();
    out.action.assign(cols_ / 2, std::vector<std::uint32_t>(order.size()));
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::uint32_t g = 0; g < cols_ / 2; ++g)
        out.action[g][i] = static_cast<std::uint32_t>(number[static_cast<std::size_t>(at(order[i], 2 * g))]);
    // relators must fix every coset
    for (const auto& w : relators_)
      for (std::size_t c = 0; c < order.size(); ++c) {
        std::int32_t cur = order[c];
        for (auto x : w) cur = at(cur, x);
        if (cur != order[c]) fail(ErrorCode::Internal, "relator does not close after enumeration");
      }
    out.status = EnumerationStatus::Complete;
    out.peak_cosets = peak_;
    out.defined_cosets = defined_;
    return out;
  }

  std::size_t cols_;
  std::size_t cap_;
  std::vector<std::vector<std::uint32_t>> relators_;
  std::vector<std::vector<std::uint32_t>> subgroup_;
  std::vector<std::vector<std::vector<std::uint32_t>>> by_col_;
  std::vector<std::int32_t> table_;
  std::vector<char> alive_;
  std::vector<std::int32_t> uf_;
  std::vector<std::int32_t> next_;
  std::vector<std::int32_t> prev_;
  std::int32_t tail_ = kNone;
  std::vector<std::int32_t> free_;
  std::vector<std::int32_t> pending_;
  std::vector<std::pair<std::int32_t, std::uint32_t>> deductions_;
  std::size_t live_ = 0;
  std::size_t peak_ = 0;
  std::size_t defined_ = 0;
  int stalls_ = 0;
};

}  // namespace

CosetTable todd_coxeter(const GroupPresentation& p, const std::vector<Word>& subgroup,
                        std::size_t cap) {
  p.validate();
  if (p.generator_count() == 0) {
    CosetTable t;
    t.status = EnumerationStatus::Complete;
    t.cosets = 1;
    t.parent = {0};
    t.parent_letter = {Letter{0, false}};
    t.peak_cosets = t.defined_cosets = 1;
    return t;
  }
  return Enumerator(p, subgroup, cap).run();
}

}  // namespace bqg
