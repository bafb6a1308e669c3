#include "fillscope/felsch.hpp"

#include <deque>
#include <vector>

namespace fillscope {

namespace {

constexpr std::int32_t kNone = -1;

class Felsch {
 public:
  Felsch(const Presentation& p, std::uint64_t max_cosets) : cols_(2 * p.generator_count()), limit_(max_cosets) {
    cycles_.resize(cols_);
    for (const Word& r : p.relators()) {
      for (const Word& w : {r, invert(r)}) {
        std::vector<std::size_t> letters;
        for (int l : w.letters()) letters.push_back(column(l));
        for (std::size_t k = 0; k < letters.size(); ++k) {
          std::vector<std::size_t> rot(letters.begin() + static_cast<std::ptrdiff_t>(k), letters.end());
          rot.insert(rot.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(k));
          cycles_[rot.front()].push_back(std::move(rot));
        }
      }
    }
    for (const Word& r : p.relators()) {
      std::vector<std::size_t> letters;
      for (int l : r.letters()) letters.push_back(column(l));
      relators_.push_back(std::move(letters));
    }
  }

  std::optional<std::uint64_t> run() {
    if (!add_coset()) return std::nullopt;
    for (bool again = true; again;) {
      again = false;
      for (std::int32_t c = 0; c < static_cast<std::int32_t>(parent_.size()); ++c) {
        for (std::size_t col = 0; col < cols_ && live(c); ++col) {
          if (get(c, col) != kNone) continue;
          if (!add_coset()) return std::nullopt;
          const std::int32_t d = static_cast<std::int32_t>(parent_.size()) - 1;
          set(c, col, d);
          set(d, col ^ 1U, c);
          deductions_.push_back({c, col});
          process();
          again = true;
        }
      }
    }
    std::uint64_t n = 0;
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(parent_.size()); ++c) {
      if (!live(c)) continue;
      ++n;
      for (std::size_t col = 0; col < cols_; ++col) {
        const std::int32_t d = get(c, col);
        if (d == kNone || !live(d) || get(d, col ^ 1U) != c) return std::nullopt;
      }
      for (const auto& r : relators_) {
        std::int32_t f = c;
        for (std::size_t col : r) f = get(f, col);
        if (f != c) return std::nullopt;
      }
    }
    return n;
  }

 private:
  struct Deduction {
    std::int32_t coset;
    std::size_t col;
  };

  static std::size_t column(int letter) {
    return letter > 0 ? 2 * static_cast<std::size_t>(letter - 1) : 2 * static_cast<std::size_t>(-letter - 1) + 1;
  }

  std::int32_t get(std::int32_t c, std::size_t col) const { return table_[static_cast<std::size_t>(c) * cols_ + col]; }
  void set(std::int32_t c, std::size_t col, std::int32_t v) { table_[static_cast<std::size_t>(c) * cols_ + col] = v; }
  bool live(std::int32_t c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  bool add_coset() {
    if (parent_.size() >= limit_) return false;
    parent_.push_back(static_cast<std::int32_t>(parent_.size()));
    table_.resize(table_.size() + cols_, kNone);
    return true;
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const std::int32_t next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int32_t a, std::int32_t b, std::deque<std::int32_t>& dead) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    dead.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    std::deque<std::int32_t> dead;
    merge(a, b, dead);
    while (!dead.empty()) {
      const std::int32_t e = dead.front();
      dead.pop_front();
      for (std::size_t col = 0; col < cols_; ++col) {
        const std::int32_t f = get(e, col);
        if (f == kNone) continue;
        if (get(f, col ^ 1U) == e) set(f, col ^ 1U, kNone);
        const std::int32_t m = rep(e);
        const std::int32_t n = rep(f);
        if (get(m, col) != kNone) {
          merge(n, get(m, col), dead);
        } else if (get(n, col ^ 1U) != kNone) {
          merge(m, get(n, col ^ 1U), dead);
        } else {
          set(m, col, n);
          set(n, col ^ 1U, m);
          deductions_.push_back({m, col});
        }
      }
    }
  }

  void scan(std::int32_t c, const std::vector<std::size_t>& w) {
    const std::size_t len = w.size();
    std::int32_t f = c;
    std::size_t i = 0;
    while (i < len && get(f, w[i]) != kNone) f = get(f, w[i++]);
    if (i == len) {
      if (f != c) coincidence(f, c);
      return;
    }
    std::int32_t b = c;
    std::size_t j = len;  // letters j..len-1 are traced backwards
    while (j > i && get(b, w[j - 1] ^ 1U) != kNone) b = get(b, w[--j] ^ 1U);
    if (j == i) {
      coincidence(f, b);
    } else if (j == i + 1) {
      set(f, w[i], b);
      set(b, w[i] ^ 1U, f);
      deductions_.push_back({f, w[i]});
    }
  }

  void process() {
    while (!deductions_.empty()) {
      const Deduction d = deductions_.back();
      deductions_.pop_back();
      if (!live(d.coset)) continue;
      const std::int32_t target = get(d.coset, d.col);
      if (target == kNone) continue;
      for (const auto& w : cycles_[d.col]) {
        if (!live(d.coset)) break;
        scan(d.coset, w);
      }
      if (!live(target)) continue;
      for (const auto& w : cycles_[d.col ^ 1U]) {
        if (!live(target)) break;
        scan(target, w);
      }
    }
  }

  std::size_t cols_;
  std::uint64_t limit_;
  std::vector<std::vector<std::vector<std::size_t>>> cycles_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<Deduction> deductions_;
};

}  // namespace

std::optional<std::uint64_t> felsch_order(const Presentation& p, std::uint64_t max_cosets) {
  return Felsch(p, max_cosets).run();
}

}  // namespace fillscope
