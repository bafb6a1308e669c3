#include "fillscope/coset_enum.hpp"

#include <numeric>
#include <stdexcept>

#include "fillscope/error.hpp"

namespace fillscope {

void EnumBudget::validate() const {
  if (max_cosets == 0 || max_deductions == 0)
    throw Error(ErrorKind::BadParameters, "enumeration budgets must be positive");
  if (max_cosets > static_cast<std::uint64_t>(std::numeric_limits<Coset>::max()))
    throw Error(ErrorKind::BadParameters, "max_cosets exceeds the coset index range");
}

namespace {

std::vector<int> columns_of(const Word& w) {
  std::vector<int> out;
  for (int l : w.letters()) out.push_back(static_cast<int>(letter_column(l)));
  return out;
}

// HLT enumeration state. Dead cosets keep a parent link to the coset they
// were merged into; rows are compacted when space runs out and at the end.
class Hlt {
 public:
  Hlt(const Presentation& p, const EnumBudget& budget)
      : cols_(2 * p.generator_count()), budget_(budget) {
    for (const auto& r : p.relators()) rels_.push_back(columns_of(r));
  }

  EnumResult run(const std::vector<Word>& subgroup) {
    EnumResult res;
    Coset first = 0;
    new_coset(first);
    std::vector<std::vector<int>> sub;
    for (const auto& h : subgroup) sub.push_back(columns_of(h));
    for (const auto& h : sub) {
      for (;;) {
        const Step s = scan_and_fill(0, h);
        if (s == Step::Done) break;
        Coset dummy = 0;
        if (!make_room(dummy)) return exhausted(std::move(res));
      }
    }
    Coset c = 0;
    while (static_cast<std::size_t>(c) < allocated_) {
      if (work_ > budget_.max_deductions) {
        reason_ = "work budget exhausted";
        return exhausted(std::move(res));
      }
      if (!live(c)) {
        ++c;
        continue;
      }
      const Step s = process(c);
      if (s == Step::NeedSpace) {
        if (!make_room(c)) return exhausted(std::move(res));
        continue;  // c was remapped; reprocess it (or its live successor)
      }
      ++c;
    }
    compact(c);
    res.complete = true;
    res.work = work_;
    res.max_live = max_live_;
    res.table = CosetTable(cols_ / 2, allocated_, std::move(table_), true, {});
    return res;
  }

 private:
  enum class Step { Done, NeedSpace };

  bool live(Coset c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  Coset& cell(Coset c, std::size_t col) { return table_[static_cast<std::size_t>(c) * cols_ + col]; }

  bool new_coset(Coset& out) {
    if (allocated_ >= budget_.max_cosets) return false;
    out = static_cast<Coset>(allocated_++);
    parent_.push_back(out);
    table_.resize(allocated_ * cols_, kUndefined);
    ++live_count_;
    max_live_ = std::max<std::uint64_t>(max_live_, live_count_);
    ++work_;
    return true;
  }

  void link(Coset c, std::size_t col, Coset d) {
    cell(c, col) = d;
    cell(d, col ^ 1U) = c;
  }

  Coset rep(Coset c) {
    Coset r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const Coset next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(Coset k, Coset l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[static_cast<std::size_t>(l)] = k;
    queue_.push_back(l);
    --live_count_;
    ++work_;
  }

  void coincidence(Coset a, Coset b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const Coset dead = queue_[qi];
      for (std::size_t col = 0; col < cols_; ++col) {
        const Coset d = cell(dead, col);
        if (d == kUndefined) continue;
        cell(d, col ^ 1U) = kUndefined;
        const Coset mu = rep(dead);
        const Coset nu = rep(d);
        if (cell(mu, col) != kUndefined) {
          merge(nu, cell(mu, col));
        } else if (cell(nu, col ^ 1U) != kUndefined) {
          merge(mu, cell(nu, col ^ 1U));
        } else {
          link(mu, col, nu);
        }
      }
    }
  }

  Step scan_and_fill(Coset c, const std::vector<int>& r) {
    Coset f = c;
    Coset b = c;
    std::size_t i = 0;
    std::size_t j = r.size();
    for (;;) {
      while (i < j && cell(f, static_cast<std::size_t>(r[i])) != kUndefined) {
        f = cell(f, static_cast<std::size_t>(r[i]));
        ++i;
        ++work_;
      }
      if (i == j) {
        if (f != b) coincidence(f, b);
        return Step::Done;
      }
      while (j > i && cell(b, static_cast<std::size_t>(r[j - 1]) ^ 1U) != kUndefined) {
        b = cell(b, static_cast<std::size_t>(r[j - 1]) ^ 1U);
        --j;
        ++work_;
      }
      if (j == i) {
        coincidence(f, b);
        return Step::Done;
      }
      if (j == i + 1) {
        link(f, static_cast<std::size_t>(r[i]), b);
        ++work_;
        return Step::Done;
      }
      Coset n = 0;
      if (!new_coset(n)) return Step::NeedSpace;
      link(f, static_cast<std::size_t>(r[i]), n);
    }
  }

  void scan_only(Coset c, const std::vector<int>& r) {
    Coset f = c;
    Coset b = c;
    std::size_t i = 0;
    std::size_t j = r.size();
    while (i < j && cell(f, static_cast<std::size_t>(r[i])) != kUndefined) {
      f = cell(f, static_cast<std::size_t>(r[i]));
      ++i;
    }
    work_ += i;
    if (i == j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j > i && cell(b, static_cast<std::size_t>(r[j - 1]) ^ 1U) != kUndefined) {
      b = cell(b, static_cast<std::size_t>(r[j - 1]) ^ 1U);
      --j;
      ++work_;
    }
    if (j == i) {
      coincidence(f, b);
    } else if (j == i + 1) {
      link(f, static_cast<std::size_t>(r[i]), b);
    }
  }

  Step process(Coset c) {
    for (const auto& r : rels_) {
      if (!live(c)) return Step::Done;
      if (scan_and_fill(c, r) == Step::NeedSpace) return Step::NeedSpace;
    }
    for (std::size_t col = 0; col < cols_; ++col) {
      if (!live(c)) return Step::Done;
      if (cell(c, col) != kUndefined) continue;
      Coset n = 0;
      if (!new_coset(n)) return Step::NeedSpace;
      link(c, col, n);
    }
    return Step::Done;
  }

  // Lookahead: deduction-only scans of every relator at every live coset,
  // then compaction. `cursor` is remapped to the first live coset at or
  // after its old position.
  bool make_room(Coset& cursor) {
    const std::uint64_t before = live_count_;
    for (std::size_t c = 0; c < allocated_; ++c) {
      if (work_ > budget_.max_deductions) break;
      for (const auto& r : rels_) {
        if (!live(static_cast<Coset>(c))) break;
        scan_only(static_cast<Coset>(c), r);
      }
    }
    compact(cursor);
    if (work_ > budget_.max_deductions) {
      reason_ = "work budget exhausted during lookahead";
      return false;
    }
    if (live_count_ >= before && allocated_ >= budget_.max_cosets) {
      reason_ = "coset budget exhausted (" + std::to_string(budget_.max_cosets) + ")";
      return false;
    }
    return allocated_ < budget_.max_cosets;
  }

  void compact(Coset& cursor) {
    std::vector<Coset> renum(allocated_, kUndefined);
    Coset k = 0;
    Coset new_cursor = -1;
    for (std::size_t c = 0; c < allocated_; ++c) {
      if (new_cursor < 0 && static_cast<Coset>(c) >= cursor) new_cursor = k;
      if (live(static_cast<Coset>(c))) renum[c] = k++;
    }
    if (new_cursor < 0) new_cursor = k;
    std::vector<Coset> packed(static_cast<std::size_t>(k) * cols_, kUndefined);
    for (std::size_t c = 0; c < allocated_; ++c) {
      if (!live(static_cast<Coset>(c))) continue;
      for (std::size_t col = 0; col < cols_; ++col) {
        const Coset e = cell(static_cast<Coset>(c), col);
        if (e == kUndefined) continue;
        packed[static_cast<std::size_t>(renum[c]) * cols_ + col] =
            renum[static_cast<std::size_t>(rep(e))];
      }
    }
    table_ = std::move(packed);
    allocated_ = static_cast<std::size_t>(k);
    parent_.resize(allocated_);
    std::iota(parent_.begin(), parent_.end(), 0);
    live_count_ = allocated_;
    cursor = new_cursor;
  }

  EnumResult exhausted(EnumResult res) {
    Coset c = 0;
    compact(c);
    res.complete = false;
    res.work = work_;
    res.max_live = max_live_;
    res.exhausted_reason = reason_.empty() ? "coset budget exhausted" : reason_;
    res.table = CosetTable(cols_ / 2, allocated_, std::move(table_), false, {});
    return res;
  }

  std::size_t cols_;
  EnumBudget budget_;
  std::vector<std::vector<int>> rels_;
  std::vector<Coset> table_;
  std::vector<Coset> parent_;
  std::vector<Coset> queue_;
  std::size_t allocated_ = 0;
  std::uint64_t live_count_ = 0;
  std::uint64_t max_live_ = 0;
  std::uint64_t work_ = 0;
  std::string reason_;
};

}  // namespace

EnumResult enumerate(const Presentation& p, const std::vector<Word>& subgroup,
                     const EnumBudget& budget) {
  budget.validate();
  for (const auto& h : subgroup) p.check_word(h);
  EnumResult res = Hlt(p, budget).run(subgroup);
  if (res.complete) {
    res.table = CosetTable(res.table.generator_count(), res.table.coset_count(),
                           res.table.entries(), true, subgroup);
    const TableCheck check = verify_table(res.table, p);
    if (!check.ok) throw std::logic_error("coset enumeration produced an invalid table: " + check.reason);
  } else {
    res.table = CosetTable(res.table.generator_count(), res.table.coset_count(),
                           res.table.entries(), false, subgroup);
  }
  return res;
}

EnumResult group_order(const Presentation& p, const EnumBudget& budget) {
  return enumerate(p, {}, budget);
}

TrivialityOracle coset_table_oracle(CosetTable regular_table) {
  if (!regular_table.complete())
    throw Error(ErrorKind::BadParameters, "coset table oracle needs a complete table");
  return [t = std::move(regular_table)](const Word& w) -> std::optional<bool> {
    const auto img = evaluate_on_cosets(t, w, 0);
    if (!img) return std::nullopt;
    return *img == 0;
  };
}

// ---- low-index subgroups ------------------------------------------------

namespace {

class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& p, std::size_t max_index, const LowIndexBudget& budget,
                 const TableConsumer& consume)
      : p_(p),
        cols_(2 * p.generator_count()),
        max_index_(max_index),
        budget_(budget),
        consume_(consume),
        table_(max_index * 2 * p.generator_count(), kUndefined),
        by_first_(2 * p.generator_count()) {
    // Every cyclic rotation of every relator and of its inverse, bucketed by
    // first letter, so each newly defined edge triggers all cycles through it.
    for (const auto& r : p.relators()) {
      for (const Word& w : {r, invert(r)}) {
        const auto cols = columns_of(w);
        for (std::size_t s = 0; s < cols.size(); ++s) {
          std::vector<int> rot(cols.begin() + static_cast<std::ptrdiff_t>(s), cols.end());
          rot.insert(rot.end(), cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(s));
          by_first_[static_cast<std::size_t>(rot.front())].push_back(std::move(rot));
        }
      }
    }
  }

  LowIndexReport run() {
    if (cols_ == 0) {
      emit_trivial();
      return report_;
    }
    n_ = 1;
    search(0);
    return report_;
  }

 private:
  Coset& cell(Coset c, std::size_t col) { return table_[static_cast<std::size_t>(c) * cols_ + col]; }

  bool assign(Coset c, std::size_t col, Coset d) {
    Coset& fwd = cell(c, col);
    Coset& back = cell(d, col ^ 1U);
    if (fwd != kUndefined) return fwd == d;
    if (back != kUndefined) return false;
    fwd = d;
    back = c;
    trail_.emplace_back(c, col);
    trail_.emplace_back(d, col ^ 1U);
    pending_.emplace_back(c, col);
    pending_.emplace_back(d, col ^ 1U);
    return true;
  }

  bool scan(Coset c, const std::vector<int>& r) {
    Coset f = c;
    Coset b = c;
    std::size_t i = 0;
    std::size_t j = r.size();
    while (i < j && cell(f, static_cast<std::size_t>(r[i])) != kUndefined) {
      f = cell(f, static_cast<std::size_t>(r[i]));
      ++i;
    }
    if (i == j) return f == b;
    while (j > i && cell(b, static_cast<std::size_t>(r[j - 1]) ^ 1U) != kUndefined) {
      b = cell(b, static_cast<std::size_t>(r[j - 1]) ^ 1U);
      --j;
    }
    if (j == i) return f == b;
    if (j == i + 1) return assign(f, static_cast<std::size_t>(r[i]), b);
    return true;
  }

  bool propagate() {
    while (!pending_.empty()) {
      const auto [c, col] = pending_.back();
      pending_.pop_back();
      for (const auto& r : by_first_[col])
        if (!scan(c, r)) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto [c, col] = trail_.back();
      trail_.pop_back();
      cell(c, col) = kUndefined;
    }
    pending_.clear();
  }

  // Depth-first search. Budgets are charged per top-level subtree.
  void search(std::size_t depth) {
    if (stop_) return;
    ++report_.nodes;
    if (depth > 0 && ++branch_nodes_ > budget_.max_nodes_per_branch) {
      branch_exhausted_ = true;
      return;
    }
    // First undefined entry in row-major order.
    Coset c = kUndefined;
    std::size_t col = 0;
    for (Coset k = 0; k < n_ && c == kUndefined; ++k)
      for (std::size_t x = 0; x < cols_; ++x)
        if (cell(k, x) == kUndefined) {
          c = k;
          col = x;
          break;
        }
    if (c == kUndefined) {
      emit_if_canonical();
      return;
    }
    const std::size_t choices = static_cast<std::size_t>(n_) + (static_cast<std::size_t>(n_) < max_index_ ? 1 : 0);
    for (std::size_t choice = 0; choice < choices && !stop_; ++choice) {
      const Coset d = static_cast<Coset>(choice);
      if (d < n_ && cell(d, col ^ 1U) != kUndefined) continue;
      if (depth == 0) {
        branch_nodes_ = 0;
        branch_exhausted_ = false;
      }
      const std::size_t mark = trail_.size();
      const Coset saved_n = n_;
      if (d == n_) ++n_;
      if (assign(c, col, d) && propagate()) search(depth + 1);
      undo(mark);
      n_ = saved_n;
      if (depth == 0 && branch_exhausted_) report_.exhausted_branches.push_back(choice);
      if (depth > 0 && branch_exhausted_) return;
    }
  }

  // The table must be least, in row-major order, among the standard-form
  // renumberings obtained from every base coset.
  bool is_canonical() const {
    const std::size_t n = static_cast<std::size_t>(n_);
    std::vector<Coset> map(n);
    std::vector<Coset> order;
    for (std::size_t root = 1; root < n; ++root) {
      std::fill(map.begin(), map.end(), kUndefined);
      order.assign(1, static_cast<Coset>(root));
      map[root] = 0;
      int verdict = 0;  // -1 smaller, +1 larger
      for (std::size_t k = 0; k < n && verdict == 0; ++k) {
        const Coset old = order[k];
        for (std::size_t col = 0; col < cols_ && verdict == 0; ++col) {
          const Coset e = table_[static_cast<std::size_t>(old) * cols_ + col];
          if (map[static_cast<std::size_t>(e)] == kUndefined) {
            map[static_cast<std::size_t>(e)] = static_cast<Coset>(order.size());
            order.push_back(e);
          }
          const Coset mine = map[static_cast<std::size_t>(e)];
          const Coset theirs = table_[k * cols_ + col];
          if (mine < theirs) verdict = -1;
          else if (mine > theirs) verdict = 1;
        }
      }
      if (verdict < 0) return false;
    }
    return true;
  }

  void emit_if_canonical() {
    if (!is_canonical()) return;
    const std::size_t n = static_cast<std::size_t>(n_);
    std::vector<Coset> entries(table_.begin(), table_.begin() + static_cast<std::ptrdiff_t>(n * cols_));
    CosetTable t(cols_ / 2, n, std::move(entries), true, {});
    const TableCheck check = verify_table(t, p_);
    if (!check.ok) throw std::logic_error("low-index search produced an invalid table: " + check.reason);
    ++report_.tables_emitted;
    if (!consume_(t)) {
      stop_ = true;
      report_.stopped_by_consumer = true;
    }
  }

  void emit_trivial() {
    CosetTable t(0, 1, {}, true, {});
    ++report_.tables_emitted;
    if (!consume_(t)) report_.stopped_by_consumer = true;
  }

  const Presentation& p_;
  std::size_t cols_;
  std::size_t max_index_;
  LowIndexBudget budget_;
  const TableConsumer& consume_;
  std::vector<Coset> table_;
  std::vector<std::vector<std::vector<int>>> by_first_;
  std::vector<std::pair<Coset, std::size_t>> trail_;
  std::vector<std::pair<Coset, std::size_t>> pending_;
  Coset n_ = 0;
  std::uint64_t branch_nodes_ = 0;
  bool branch_exhausted_ = false;
  bool stop_ = false;
  LowIndexReport report_;
};

}  // namespace

LowIndexReport low_index_subgroups(const Presentation& p, std::size_t max_index,
                                   const LowIndexBudget& budget, const TableConsumer& consume) {
  if (max_index < 1) throw Error(ErrorKind::BadParameters, "max_index must be >= 1");
  if (budget.max_nodes_per_branch == 0)
    throw Error(ErrorKind::BadParameters, "low-index node budget must be positive");
  return LowIndexSearch(p, max_index, budget, consume).run();
}

std::vector<CosetTable> low_index_tables(const Presentation& p, std::size_t max_index,
                                         const LowIndexBudget& budget, LowIndexReport* report) {
  std::vector<CosetTable> out;
  const LowIndexReport r = low_index_subgroups(p, max_index, budget, [&](const CosetTable& t) {
    out.push_back(t);
    return true;
  });
  if (report) *report = r;
  return out;
}

}  // namespace fillscope
