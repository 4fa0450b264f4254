#include "periodica/coset_table.hpp"

#include <algorithm>
#include <deque>

#include "periodica/error.hpp"

namespace periodica {

CosetTable::CosetTable(std::size_t generator_count, std::size_t cosets)
    : generators_(generator_count),
      cosets_(cosets),
      entries_(2 * generator_count * cosets, kUndefined) {}

std::int32_t CosetTable::follow(std::int32_t coset, const Word& w) const {
  for (auto l : w) {
    if (coset == kUndefined) break;
    coset = at(static_cast<std::size_t>(coset), column(l));
  }
  return coset;
}

bool CosetTable::is_complete() const {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](auto e) { return e == kUndefined; });
}

bool CosetTable::is_consistent() const {
  for (std::size_t r = 0; r < size(); ++r) {
    for (std::size_t c = 0; c < column_count(); ++c) {
      auto s = at(r, c);
      if (s == kUndefined) continue;
      if (s < 0 || static_cast<std::size_t>(s) >= size()) return false;
      if (at(static_cast<std::size_t>(s), c ^ 1U) != static_cast<std::int32_t>(r)) return false;
    }
  }
  return true;
}

bool CosetTable::is_transitive() const {
  if (size() == 0) return false;
  std::vector<char> seen(size(), 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    auto r = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c < column_count(); ++c) {
      auto s = at(r, c);
      if (s != kUndefined && !seen[static_cast<std::size_t>(s)]) {
        seen[static_cast<std::size_t>(s)] = 1;
        ++reached;
        queue.push_back(static_cast<std::size_t>(s));
      }
    }
  }
  return reached == size();
}

bool CosetTable::satisfies(const std::vector<Word>& relators) const {
  for (std::size_t r = 0; r < size(); ++r) {
    for (const auto& w : relators) {
      if (follow(static_cast<std::int32_t>(r), w) != static_cast<std::int32_t>(r)) return false;
    }
  }
  return true;
}

CosetTable CosetTable::standardized(std::size_t base) const {
  std::vector<std::int32_t> to_new(size(), kUndefined);
  std::vector<std::size_t> to_old{base};
  to_new[base] = 0;
  for (std::size_t i = 0; i < to_old.size(); ++i) {
    for (std::size_t c = 0; c < column_count(); ++c) {
      auto s = at(to_old[i], c);
      if (s != kUndefined && to_new[static_cast<std::size_t>(s)] == kUndefined) {
        to_new[static_cast<std::size_t>(s)] = static_cast<std::int32_t>(to_old.size());
        to_old.push_back(static_cast<std::size_t>(s));
      }
    }
  }
  CosetTable out(generators_, to_old.size());
  for (std::size_t i = 0; i < to_old.size(); ++i) {
    for (std::size_t c = 0; c < column_count(); ++c) {
      auto s = at(to_old[i], c);
      out.set(i, c, s == kUndefined ? kUndefined : to_new[static_cast<std::size_t>(s)]);
    }
  }
  return out;
}

std::vector<Permutation> CosetTable::generator_permutations() const {
  std::vector<Permutation> out;
  for (std::size_t g = 0; g < generators_; ++g) {
    Permutation p(size());
    for (std::size_t r = 0; r < size(); ++r) p[r] = static_cast<std::uint32_t>(at(r, 2 * g));
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

// HLT coset enumeration with immediate coincidence processing.
class Enumerator {
 public:
  Enumerator(std::size_t generators, std::size_t max_cosets)
      : cols_(2 * generators), max_cosets_(max_cosets) {
    add_row();
    live_ = 1;
  }

  void run(const Presentation& p) {
    std::vector<std::vector<std::size_t>> relators;
    for (const auto& r : p.relators) relators.push_back(columns(r));
    for (const auto& w : p.subgroup_words) scan_and_fill(0, columns(w));
    for (std::size_t a = 0; a < parent_.size(); ++a) {
      for (const auto& r : relators) {
        if (!alive(a)) break;
        scan_and_fill(a, r);
      }
      if (!alive(a)) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        if (entry(a, x) == CosetTable::kUndefined) define(a, x);
      }
    }
  }

  CosetTable result(std::size_t generators) const {
    std::vector<std::int32_t> to_new(parent_.size(), CosetTable::kUndefined);
    std::size_t n = 0;
    for (std::size_t a = 0; a < parent_.size(); ++a) {
      if (alive(a)) to_new[a] = static_cast<std::int32_t>(n++);
    }
    CosetTable t(generators, n);
    for (std::size_t a = 0; a < parent_.size(); ++a) {
      if (!alive(a)) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        auto s = entry(a, x);
        t.set(static_cast<std::size_t>(to_new[a]), x,
              s == CosetTable::kUndefined ? s : to_new[rep(static_cast<std::size_t>(s))]);
      }
    }
    return t.standardized(0);
  }

 private:
  static std::vector<std::size_t> columns(const Word& w) {
    std::vector<std::size_t> out;
    for (auto l : w) out.push_back(CosetTable::column(l));
    return out;
  }

  bool alive(std::size_t a) const { return parent_[a] == a; }
  std::int32_t entry(std::size_t a, std::size_t x) const { return table_[a * cols_ + x]; }
  void set(std::size_t a, std::size_t x, std::int32_t v) { table_[a * cols_ + x] = v; }

  void add_row() {
    parent_.push_back(parent_.size());
    table_.resize(table_.size() + cols_, CosetTable::kUndefined);
  }

  void define(std::size_t a, std::size_t x) {
    if (live_ >= max_cosets_ || parent_.size() >= 64 * max_cosets_) {
      throw Error(ErrorCode::CosetLimitExceeded,
                  "coset enumeration did not close within " + std::to_string(max_cosets_) +
                      " cosets");
    }
    const auto b = parent_.size();
    add_row();
    ++live_;
    set(a, x, static_cast<std::int32_t>(b));
    set(b, x ^ 1U, static_cast<std::int32_t>(a));
  }

  std::size_t rep(std::size_t a) const {
    std::size_t r = a;
    while (parent_[r] != r) r = parent_[r];
    return r;
  }

  std::size_t rep_compress(std::size_t a) {
    std::size_t r = rep(a);
    while (parent_[a] != r) {
      auto next = parent_[a];
      parent_[a] = r;
      a = next;
    }
    return r;
  }

  void merge(std::size_t k, std::size_t l, std::deque<std::size_t>& queue) {
    auto a = rep_compress(k);
    auto b = rep_compress(l);
    if (a == b) return;
    auto lo = std::min(a, b);
    auto hi = std::max(a, b);
    parent_[hi] = lo;
    --live_;
    queue.push_back(hi);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      auto g = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < cols_; ++x) {
        auto d = entry(g, x);
        if (d == CosetTable::kUndefined) continue;
        const auto du = static_cast<std::size_t>(d);
        set(du, x ^ 1U, CosetTable::kUndefined);
        auto m = rep_compress(g);
        auto n = rep_compress(du);
        if (entry(m, x) != CosetTable::kUndefined) {
          merge(n, static_cast<std::size_t>(entry(m, x)), queue);
        } else if (entry(n, x ^ 1U) != CosetTable::kUndefined) {
          merge(m, static_cast<std::size_t>(entry(n, x ^ 1U)), queue);
        } else {
          set(m, x, static_cast<std::int32_t>(n));
          set(n, x ^ 1U, static_cast<std::int32_t>(m));
        }
      }
    }
  }

  void scan_and_fill(std::size_t a, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::size_t f = a;
    std::size_t b = a;
    std::size_t i = 0;
    std::size_t j = w.size();  // scanning w[i..j)
    for (;;) {
      while (i < j && entry(f, w[i]) != CosetTable::kUndefined) {
        f = static_cast<std::size_t>(entry(f, w[i]));
        ++i;
      }
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && entry(b, w[j - 1] ^ 1U) != CosetTable::kUndefined) {
        b = static_cast<std::size_t>(entry(b, w[j - 1] ^ 1U));
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        set(f, w[i], static_cast<std::int32_t>(b));
        set(b, w[i] ^ 1U, static_cast<std::int32_t>(f));
        return;
      }
      define(f, w[i]);
    }
  }

  std::size_t cols_;
  std::size_t max_cosets_;
  std::size_t live_ = 0;
  std::vector<std::int32_t> table_;
  std::vector<std::size_t> parent_;
};

}  // namespace

CosetTable coset_enumerate(const Presentation& p, std::size_t max_cosets) {
  if (max_cosets < 1) throw Error(ErrorCode::InvalidInput, "max_cosets must be positive");
  Enumerator e(p.generators.size(), max_cosets);
  e.run(p);
  return e.result(p.generators.size());
}

CosetAction coset_action_group(const CosetTable& table, std::size_t max_order) {
  if (!table.is_complete()) throw Error(ErrorCode::InvalidInput, "coset table is incomplete");
  auto perms = table.generator_permutations();
  auto closure = permutation_closure(perms, table.size(), max_order);
  ElementSet stab(closure.group.order());
  for (Element g = 0; g < closure.group.order(); ++g) {
    if (closure.elements[g][0] == 0) stab.insert(g);
  }
  auto h = make_subgroup_unchecked(closure.group.order(), std::move(stab));
  return {std::move(closure.group), std::move(h), std::move(closure.elements)};
}

std::size_t conjugacy_class_size(const CosetTable& table) {
  std::vector<CosetTable> tables;
  for (std::size_t b = 0; b < table.size(); ++b) tables.push_back(table.standardized(b));
  std::sort(tables.begin(), tables.end());
  return static_cast<std::size_t>(std::unique(tables.begin(), tables.end()) - tables.begin());
}

namespace {

// Backtracking search over standardized partial coset tables.
class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& p, std::size_t max_index)
      : generators_(p.generators.size()), cols_(2 * generators_), max_index_(max_index) {
    for (const auto& r : p.relators) {
      std::vector<std::size_t> w;
      for (auto l : r) w.push_back(CosetTable::column(l));
      relators_.push_back(std::move(w));
    }
  }

  std::vector<LowIndexClass> run() {
    State s;
    s.cosets = 1;
    s.table.assign(max_index_ * cols_, CosetTable::kUndefined);
    if (deduce(s)) search(s);
    std::sort(found_.begin(), found_.end(),
              [](const auto& a, const auto& b) { return a.table < b.table; });
    return std::move(found_);
  }

 private:
  struct State {
    std::size_t cosets = 0;
    std::vector<std::int32_t> table;
  };

  std::int32_t entry(const State& s, std::size_t a, std::size_t x) const {
    return s.table[a * cols_ + x];
  }
  void set(State& s, std::size_t a, std::size_t x, std::int32_t v) const {
    s.table[a * cols_ + x] = v;
  }

  // Scans every relator at every coset, filling single gaps, until nothing
  // changes. False on a contradiction.
  bool deduce(State& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < s.cosets; ++a) {
        for (const auto& w : relators_) {
          std::size_t f = a;
          std::size_t b = a;
          std::size_t i = 0;
          std::size_t j = w.size();
          while (i < j && entry(s, f, w[i]) != CosetTable::kUndefined) {
            f = static_cast<std::size_t>(entry(s, f, w[i]));
            ++i;
          }
          if (i == j) {
            if (f != b) return false;
            continue;
          }
          while (j > i && entry(s, b, w[j - 1] ^ 1U) != CosetTable::kUndefined) {
            b = static_cast<std::size_t>(entry(s, b, w[j - 1] ^ 1U));
            --j;
          }
          if (j == i) {
            if (f != b) return false;
            continue;
          }
          if (j == i + 1) {
            if (entry(s, b, w[i] ^ 1U) != CosetTable::kUndefined) return false;
            set(s, f, w[i], static_cast<std::int32_t>(b));
            set(s, b, w[i] ^ 1U, static_cast<std::int32_t>(f));
            changed = true;
          }
        }
      }
    }
    return true;
  }

  // False when renumbering from some other base point gives a smaller table.
  bool canonical(const State& s) const {
    std::vector<std::int32_t> to_new(s.cosets);
    std::vector<std::size_t> to_old;
    for (std::size_t base = 1; base < s.cosets; ++base) {
      std::fill(to_new.begin(), to_new.end(), CosetTable::kUndefined);
      to_old.assign(1, base);
      to_new[base] = 0;
      bool decided = false;
      for (std::size_t a = 0; a < s.cosets && !decided; ++a) {
        for (std::size_t x = 0; x < cols_; ++x) {
          auto mine = entry(s, a, x);
          if (a >= to_old.size()) {
            decided = true;
            break;
          }
          auto theirs_old = entry(s, to_old[a], x);
          if (mine == CosetTable::kUndefined || theirs_old == CosetTable::kUndefined) {
            decided = true;
            break;
          }
          auto& mapped = to_new[static_cast<std::size_t>(theirs_old)];
          if (mapped == CosetTable::kUndefined) {
            mapped = static_cast<std::int32_t>(to_old.size());
            to_old.push_back(static_cast<std::size_t>(theirs_old));
          }
          if (mapped < mine) return false;
          if (mapped > mine) {
            decided = true;
            break;
          }
        }
      }
    }
    return true;
  }

  void search(State& s) {
    // first undefined entry in row-major order
    std::size_t row = 0;
    std::size_t col = 0;
    bool open = false;
    for (std::size_t a = 0; a < s.cosets && !open; ++a) {
      for (std::size_t x = 0; x < cols_; ++x) {
        if (entry(s, a, x) == CosetTable::kUndefined) {
          row = a;
          col = x;
          open = true;
          break;
        }
      }
    }
    if (!open) {
      record(s);
      return;
    }
    for (std::size_t target = 0; target <= s.cosets && target < max_index_; ++target) {
      State next = s;
      if (target == s.cosets) {
        next.cosets = s.cosets + 1;
      } else if (entry(s, target, col ^ 1U) != CosetTable::kUndefined) {
        continue;
      }
      set(next, row, col, static_cast<std::int32_t>(target));
      set(next, target, col ^ 1U, static_cast<std::int32_t>(row));
      if (!deduce(next) || !canonical(next)) continue;
      search(next);
    }
  }

  void record(const State& s) {
    CosetTable t(generators_, s.cosets);
    for (std::size_t a = 0; a < s.cosets; ++a) {
      for (std::size_t x = 0; x < cols_; ++x) t.set(a, x, entry(s, a, x));
    }
    const auto size = conjugacy_class_size(t);
    found_.push_back({std::move(t), s.cosets, size});
  }

  std::size_t generators_;
  std::size_t cols_;
  std::size_t max_index_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<LowIndexClass> found_;
};

}  // namespace

std::vector<LowIndexClass> low_index_subgroups(const Presentation& p, std::size_t max_index,
                                               std::size_t budget) {
  if (max_index < 1) throw Error(ErrorCode::InvalidInput, "max_index must be positive");
  if (max_index > budget) {
    throw Error(ErrorCode::BudgetExceeded, "max_index " + std::to_string(max_index) +
                                               " exceeds low-index budget " +
                                               std::to_string(budget));
  }
  return LowIndexSearch(p, max_index).run();
}

}  // namespace periodica
