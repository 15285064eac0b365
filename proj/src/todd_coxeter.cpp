#include <algorithm>
#include <deque>
#include <numeric>

#include "tensq/abelian.hpp"
#include "tensq/coset_table.hpp"
#include "tensq/errors.hpp"

namespace tensq {

namespace {

inline int inv_col(int col) { return col ^ 1; }

// Coset enumerator with full deduction propagation (Felsch-style closure
// driven by a definition cursor), plus lookahead collapse and compaction
// when the table nears its budget.  Plain relator-fill scanning over-
// defines catastrophically on the nu-group presentations this toolkit
// lives on, so every table entry ever set is pushed onto a deduction
// stack and all relator rotations through it are scanned deduce-only.
//
// Cosets are 1-based, 0 marks an undefined entry.  New cosets are numbered
// in first-definition order and coincidences merge the larger number into
// the smaller, so the finished table is reproducible.  Live rows may
// reference dead cosets until compaction; reads chase representatives.
class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& sub_gens,
             const EnumerationBudget& budget)
      : k_(p.generator_count()),
        width_(2 * p.generator_count()),
        budget_(budget),
        deadline_(std::chrono::steady_clock::now() + budget.max_time),
        sub_gen_words_(sub_gens) {
    for (const Word& r : p.relators()) relators_.push_back(flatten(r));
    std::uint64_t worst = width_;
    for (const auto& r : relators_) worst += r.size();
    for (const Word& w : sub_gens) {
      if (w.max_generator() >= (int)k_)
        throw BadParams("subgroup generator uses undeclared generator");
      sub_gens_.push_back(flatten(w));
      worst += sub_gens_.back().size();
    }
    slack_ = worst + 2;
    build_rotations();
  }

  CosetTable run(EnumerationStats* stats) {
    define_first();
    for (const auto& w : sub_gens_) {
      scan_and_fill(1, w);
      settle();
    }
    // Seed the propagation: one filling scan of each relator at coset 1.
    for (const auto& r : relators_) {
      scan_and_fill(1, r);
      settle();
    }

    for (std::uint32_t c = 1; c <= last_; ++c) {
      if (dead(c)) continue;
      std::uint32_t remapped = ensure_capacity(c);
      if (remapped != c) c = remapped;
      if (dead(c)) continue;
      for (int col = 0; col < (int)width_; ++col) {
        if (dead(c)) break;
        c = find(c);
        if (at(c, col) != 0) continue;
        define(c, col);
        settle();
      }
    }
    if (needs_full_pass_) lookahead_to_fixpoint();

    CosetTable t = finish();
    if (stats) {
      stats->cosets_defined = total_defined_;
      stats->final_cosets = t.coset_count();
      stats->compactions = compactions_;
    }
    return t;
  }

 private:
  std::uint32_t at(std::uint32_t c, int col) const {
    return tab_[(std::size_t)(c - 1) * width_ + col];
  }
  void set(std::uint32_t c, int col, std::uint32_t d) {
    tab_[(std::size_t)(c - 1) * width_ + col] = d;
  }

  bool dead(std::uint32_t c) const { return uf_[c] != c; }

  std::uint32_t find(std::uint32_t c) {
    std::uint32_t r = c;
    while (uf_[r] != r) r = uf_[r];
    while (uf_[c] != r) {
      std::uint32_t next = uf_[c];
      uf_[c] = r;
      c = next;
    }
    return r;
  }

  // All cyclic rotations of every relator, grouped by their first column
  // and bucketed by their second, stored flat.  An edge (a, x) -> b is
  // propagated by scanning the x-rotations at a (instances crossing the
  // edge forwards) and the x^-1-rotations at b (instances crossing it
  // backwards); together these cover every relator instance through the
  // edge exactly once.  A bucket whose second edge is still undefined is
  // skipped: the instance gets its closing scan when its last edge is set.
  void build_rotations() {
    std::vector<std::vector<std::vector<int>>> grouped(width_);
    for (const auto& r : relators_)
      for (std::size_t s = 0; s < r.size(); ++s) {
        std::vector<int> rot(r.size());
        for (std::size_t i = 0; i < r.size(); ++i)
          rot[i] = r[(s + i) % r.size()];
        grouped[rot[0]].push_back(std::move(rot));
      }
    for (auto& list : grouped) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    rot_data_.clear();
    rot_index_.assign(width_, {});
    buckets_.assign(width_, {});
    for (std::size_t col = 0; col < width_; ++col) {
      for (const auto& w : grouped[col]) {
        Rotation r;
        r.second_col = w.size() > 1 ? w[1] : -1;
        r.offset = (std::uint32_t)rot_data_.size();
        r.length = (std::uint32_t)w.size();
        rot_index_[col].push_back(r);
        rot_data_.insert(rot_data_.end(), w.begin(), w.end());
      }
      // one bucket per distinct second column (rotations are sorted, so
      // equal second columns sit adjacently); checked with a single read
      const auto& list = rot_index_[col];
      std::size_t i = 0;
      while (i < list.size()) {
        std::size_t j = i;
        while (j < list.size() && list[j].second_col == list[i].second_col)
          ++j;
        buckets_[col].push_back(
            Bucket{list[i].second_col, (std::uint32_t)i, (std::uint32_t)j});
        i = j;
      }
    }
  }

  void define_first() {
    tab_.assign(width_, 0);
    uf_.assign(2, 0);
    uf_[1] = 1;
    last_ = 1;
    alive_ = 1;
    total_defined_ = 1;
  }

  std::uint32_t define(std::uint32_t c, int col) {
    if (last_ >= budget_.max_cosets + slack_)
      throw BudgetExceeded("coset enumeration exceeded max-cosets",
                           total_defined_);
    std::uint32_t d = ++last_;
    ++alive_;
    ++total_defined_;
    tab_.resize((std::size_t)last_ * width_, 0);
    uf_.push_back(d);
    set(c, col, d);
    set(d, inv_col(col), c);
    push_ded(c, col);
    if ((total_defined_ & 0xfff) == 0 &&
        std::chrono::steady_clock::now() > deadline_)
      throw BudgetExceeded("coset enumeration exceeded the time budget",
                           total_defined_);
    return d;
  }

  void push_ded(std::uint32_t c, int col) {
    if (dstack_.size() >= 2'000'000) {
      // Propagation is abandoned for now; a closing pass recovers it.
      dstack_.clear();
      needs_full_pass_ = true;
      return;
    }
    dstack_.emplace_back(c, col);
  }

  // Process coincidences then propagate deductions until both are empty.
  void settle() {
    process_queue();
    while (!dstack_.empty()) {
      auto [c, col] = dstack_.back();
      dstack_.pop_back();
      std::uint32_t a = find(c);
      std::uint32_t b = at(a, col);
      if (b == 0) continue;  // the edge moved; its re-insertion re-pushed
      b = find(b);
      bool edge_ok = true;
      for (int side = 0; side < 2 && edge_ok; ++side) {
        int scol = side == 0 ? col : inv_col(col);
        std::uint32_t anchor = side == 0 ? a : b;
        std::uint32_t step1 = side == 0 ? b : a;
        const auto& rots = rot_index_[scol];
        for (const Bucket& bu : buckets_[scol]) {
          if (bu.second_col >= 0 && at(step1, bu.second_col) == 0) continue;
          for (std::uint32_t ri = bu.begin; ri < bu.end && edge_ok; ++ri) {
            const Rotation& r = rots[ri];
            scan_span(anchor, &rot_data_[r.offset], r.length);
            if (!queue_.empty()) {
              process_queue();
              a = find(c);
              std::uint32_t t = at(a, col);
              if (t == 0) {
                edge_ok = false;
                break;
              }
              b = find(t);
              anchor = side == 0 ? a : b;
              step1 = side == 0 ? b : a;
            }
          }
          if (!edge_ok) break;
        }
      }
    }
  }

  // Between cosets: if the table is near the cap, collapse and compact or
  // give up.  Returns the (possibly renumbered) cursor coset.
  std::uint32_t ensure_capacity(std::uint32_t cursor) {
    if (last_ + slack_ <= budget_.max_cosets) return cursor;
    lookahead();
    cursor = find(cursor);
    if (alive_ + slack_ > budget_.max_cosets)
      throw BudgetExceeded("coset enumeration exceeded max-cosets",
                           total_defined_);
    return compact(cursor);
  }

  void lookahead() {
    for (std::uint32_t c = 1; c <= last_; ++c) {
      if (dead(c)) continue;
      for (const auto& r : relators_) {
        scan_only(c, r);
        process_queue();
        if (dead(c)) break;
      }
    }
    // Deductions raised during the pass are dropped; a closing pass at the
    // end re-derives whatever they would have propagated.
    if (!dstack_.empty()) {
      dstack_.clear();
      needs_full_pass_ = true;
    }
  }

  void lookahead_to_fixpoint() {
    for (;;) {
      std::uint64_t before = alive_;
      lookahead();
      bool complete = true;
      for (std::uint32_t c = 1; c <= last_ && complete; ++c) {
        if (dead(c)) continue;
        for (int col = 0; col < (int)width_; ++col)
          if (at(c, col) == 0 || dead(at(c, col))) {
            // undefined entries cannot appear here; stale ones are fine
            if (at(c, col) == 0) complete = false;
          }
      }
      if (alive_ == before && complete) return;
      if (alive_ == before && !complete)
        throw InternalCheckFailure("closing pass left holes in the table");
    }
  }

  std::uint32_t compact(std::uint32_t cursor) {
    std::vector<std::uint32_t> remap(last_ + 1, 0);
    std::uint32_t next = 0;
    for (std::uint32_t c = 1; c <= last_; ++c)
      if (!dead(c)) remap[c] = ++next;
    internal_check(next == alive_, "compaction: live count mismatch");

    std::vector<std::uint32_t> fresh((std::size_t)next * width_, 0);
    for (std::uint32_t c = 1; c <= last_; ++c) {
      if (dead(c)) continue;
      for (int col = 0; col < (int)width_; ++col) {
        std::uint32_t d = at(c, col);
        if (d)
          fresh[(std::size_t)(remap[c] - 1) * width_ + col] = remap[find(d)];
      }
    }
    tab_ = std::move(fresh);
    std::uint32_t new_cursor = remap[cursor];
    last_ = next;
    uf_.resize(last_ + 1);
    std::iota(uf_.begin(), uf_.end(), 0);
    // Deduction positions would need remapping; drop them and close later.
    if (!dstack_.empty()) {
      dstack_.clear();
      needs_full_pass_ = true;
    }
    ++compactions_;
    return new_cursor;
  }

  void scan_and_fill(std::uint32_t c, const std::vector<int>& w) {
    scan_core(c, w.data(), w.size(), true);
  }
  void scan_only(std::uint32_t c, const std::vector<int>& w) {
    scan_core(c, w.data(), w.size(), false);
  }
  void scan_span(std::uint32_t c, const int* w, std::size_t n) {
    scan_core(c, w, n, false);
  }

  void scan_core(std::uint32_t c, const int* w, std::size_t n, bool fill) {
    if (n == 0) return;
    std::uint32_t f = c;
    std::size_t i = 0;
    while (i < n) {
      std::uint32_t t = at(f, w[i]);
      if (t == 0) break;
      f = find(t);
      ++i;
    }
    if (i == n) {
      if (f != c) coincide(f, c);
      return;
    }
    std::uint32_t b = c;
    std::size_t j = n;
    while (j > i) {
      std::uint32_t t = at(b, inv_col(w[j - 1]));
      if (t == 0) break;
      b = find(t);
      --j;
    }
    if (j == i) {
      // The backward pass holds the edge at position i, the forward pass
      // does not, so the endpoints must coincide.
      if (f != b) coincide(f, b);
      return;
    }
    if (j == i + 1) {
      set(f, w[i], b);
      set(b, inv_col(w[i]), f);
      push_ded(f, w[i]);
      return;
    }
    if (!fill) return;
    while (j > i + 1) {
      f = define(f, w[i]);
      ++i;
    }
    set(f, w[i], b);
    set(b, inv_col(w[i]), f);
    push_ded(f, w[i]);
  }

  void coincide(std::uint32_t a, std::uint32_t b) { merge(a, b); }

  void merge(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    uf_[b] = a;
    --alive_;
    queue_.push_back(b);
  }

  // Re-establish the semantic edge a --col--> b on current representatives,
  // keeping both directions populated; disagreements become coincidences.
  void force_edge(std::uint32_t a0, int col, std::uint32_t b0) {
    for (;;) {
      std::uint32_t a = find(a0);
      std::uint32_t b = find(b0);
      std::uint32_t ax = at(a, col);
      if (ax != 0 && find(ax) != b) {
        merge(ax, b);
        continue;
      }
      std::uint32_t bx = at(b, inv_col(col));
      if (bx != 0 && find(bx) != a) {
        merge(bx, a);
        continue;
      }
      if (ax == 0) {
        set(a, col, b);
        push_ded(a, col);
      }
      if (bx == 0) set(b, inv_col(col), a);
      return;
    }
  }

  void process_queue() {
    while (!queue_.empty()) {
      std::uint32_t d = queue_.front();
      queue_.pop_front();
      for (int col = 0; col < (int)width_; ++col) {
        std::uint32_t e = at(d, col);
        if (e == 0) continue;
        set(d, col, 0);
        if (at(e, inv_col(col)) == d) set(e, inv_col(col), 0);
        force_edge(d, col, e);
      }
    }
  }

  CosetTable finish() {
    internal_check(queue_.empty() && dstack_.empty(),
                   "enumerator finished with pending work");
    std::vector<std::uint32_t> remap(last_ + 1, 0);
    std::uint32_t next = 0;
    for (std::uint32_t c = 1; c <= last_; ++c)
      if (!dead(c)) remap[c] = ++next;
    std::vector<std::uint32_t> flat((std::size_t)next * width_, 0);
    for (std::uint32_t c = 1; c <= last_; ++c) {
      if (dead(c)) continue;
      for (int col = 0; col < (int)width_; ++col) {
        std::uint32_t d = at(c, col);
        internal_check(d != 0, "incomplete table after enumeration");
        flat[(std::size_t)(remap[c] - 1) * width_ + col] = remap[find(d)];
      }
    }
    return CosetTable::from_action(k_, next, std::move(flat), sub_gen_words_);
  }

  std::size_t k_;
  std::size_t width_;
  EnumerationBudget budget_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<Word> sub_gen_words_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> sub_gens_;
  struct Rotation {
    int second_col = -1;
    std::uint32_t offset = 0;
    std::uint32_t length = 0;
  };
  struct Bucket {
    int second_col = -1;
    std::uint32_t begin = 0;
    std::uint32_t end = 0;
  };
  std::vector<int> rot_data_;
  std::vector<std::vector<Rotation>> rot_index_;
  std::vector<std::vector<Bucket>> buckets_;
  std::uint64_t slack_ = 0;

  std::vector<std::uint32_t> tab_;
  std::vector<std::uint32_t> uf_;
  std::deque<std::uint32_t> queue_;
  std::vector<std::pair<std::uint32_t, int>> dstack_;
  std::uint32_t last_ = 0;
  std::uint64_t alive_ = 0;
  std::uint64_t total_defined_ = 0;
  std::uint64_t compactions_ = 0;
  bool needs_full_pass_ = false;
};

}  // namespace

CosetTable CosetTable::from_action(std::size_t generator_count,
                                   std::size_t coset_count,
                                   std::vector<std::uint32_t> flat,
                                   std::vector<Word> subgroup_generators) {
  CosetTable t;
  t.k_ = generator_count;
  t.n_ = coset_count;
  t.tab_ = std::move(flat);
  t.sub_gens_ = std::move(subgroup_generators);
  internal_check(t.tab_.size() == coset_count * 2 * generator_count,
                 "coset table shape mismatch");
  std::vector<bool> seen(coset_count + 1);
  for (int col = 0; col < (int)(2 * generator_count); ++col) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::uint32_t c = 1; c <= coset_count; ++c) {
      std::uint32_t d = t.apply(c, col);
      internal_check(d >= 1 && d <= coset_count && !seen[d],
                     "coset table column is not a permutation");
      seen[d] = true;
      internal_check(t.apply(d, inv_col(col)) == c,
                     "coset table columns are not mutually inverse");
    }
  }
  t.build_tree();
  return t;
}

void CosetTable::build_tree() {
  parent_.assign(n_ + 1, 0);
  parent_col_.assign(n_ + 1, -1);
  std::vector<bool> seen(n_ + 1, false);
  std::deque<std::uint32_t> bfs{1};
  seen[1] = true;
  std::size_t reached = 1;
  while (!bfs.empty()) {
    std::uint32_t c = bfs.front();
    bfs.pop_front();
    for (int col = 0; col < (int)(2 * k_); ++col) {
      std::uint32_t d = apply(c, col);
      if (!seen[d]) {
        seen[d] = true;
        parent_[d] = c;
        parent_col_[d] = col;
        bfs.push_back(d);
        ++reached;
      }
    }
  }
  internal_check(reached == n_, "coset action is not transitive");
}

std::uint32_t CosetTable::apply_word(std::uint32_t coset,
                                     const Word& w) const {
  for (const Letter& l : w.syllables()) {
    int col = l.exp > 0 ? 2 * l.gen : 2 * l.gen + 1;
    long long e = std::abs((long long)l.exp);
    for (long long i = 0; i < e; ++i) coset = apply(coset, col);
  }
  return coset;
}

Word CosetTable::coset_word(std::uint32_t c) const {
  std::vector<int> cols;
  while (c != 1) {
    cols.push_back(parent_col_[c]);
    c = parent_[c];
  }
  Word w;
  for (auto it = cols.rbegin(); it != cols.rend(); ++it)
    w.append(*it / 2, (*it % 2) ? -1 : 1);
  return w;
}

bool CosetTable::validate(const Presentation& p, std::size_t sample) const {
  if (p.generator_count() != k_) return false;
  for (const Word& h : sub_gens_)
    if (apply_word(1, h) != 1) return false;
  std::size_t step = 1;
  if (sample && n_ > sample) step = n_ / sample;
  for (std::uint32_t c = 1; c <= n_; c += step)
    for (const Word& r : p.relators())
      if (apply_word(c, r) != c) return false;
  return true;
}

CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<Word>& subgroup_generators,
                        const EnumerationBudget& budget,
                        EnumerationStats* stats) {
  if (budget.max_cosets < 1) throw BadParams("max-cosets must be at least 1");
  Enumerator e(p, subgroup_generators, budget);
  CosetTable t = e.run(stats);
  std::size_t sample = t.coset_count() > 200'000 ? 1024 : 0;
  internal_check(t.validate(p, sample),
                 "completed coset table failed validation");
  return t;
}

std::uint64_t group_order(const Presentation& p,
                          const EnumerationBudget& budget) {
  return todd_coxeter(p, {}, budget).coset_count();
}

CosetTable derived_subgroup_table(const Presentation& p) {
  SmithDecomposition snf = smith_normal_form(abelianized_relation_matrix(p));
  const std::size_t k = p.generator_count();
  const std::size_t nmin = std::min(snf.s.rows(), snf.s.cols());

  std::vector<mpz_class> mod(k, 0);
  for (std::size_t i = 0; i < nmin; ++i) mod[i] = snf.s.at(i, i);
  for (const mpz_class& d : mod)
    if (d == 0)
      throw BadParams("derived subgroup has infinite index (G^ab infinite)");

  mpz_class order = 1;
  for (const mpz_class& d : mod) order *= d;
  if (order > 2'000'000)
    throw BadParams("abelianization too large for an explicit coset table");
  const std::uint64_t n = std::max<std::uint64_t>(order.get_ui(), 1);

  // Elements of G^ab in mixed-radix order over the invariant coordinates;
  // generator j acts by adding row j of V.
  std::vector<std::uint64_t> radix(k);
  for (std::size_t i = 0; i < k; ++i) radix[i] = mod[i].get_ui();

  auto index_of = [&](const std::vector<std::uint64_t>& v) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * radix[i] + v[i];
    return idx;
  };
  auto tuple_of = [&](std::uint64_t idx) {
    std::vector<std::uint64_t> v(k);
    for (std::size_t i = k; i-- > 0;) {
      v[i] = idx % radix[i];
      idx /= radix[i];
    }
    return v;
  };

  std::vector<std::vector<std::uint64_t>> gen_step(
      k, std::vector<std::uint64_t>(k));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) {
      mpz_class r = snf.v.at(j, i) % mod[i];
      if (r < 0) r += mod[i];
      gen_step[j][i] = r.get_ui();
    }

  std::vector<std::uint32_t> flat(n * 2 * k, 0);
  for (std::uint64_t e = 0; e < n; ++e) {
    auto v = tuple_of(e);
    for (std::size_t j = 0; j < k; ++j) {
      auto w = v;
      for (std::size_t i = 0; i < k; ++i)
        w[i] = (w[i] + gen_step[j][i]) % radix[i];
      std::uint64_t f = index_of(w);
      flat[e * 2 * k + 2 * j] = (std::uint32_t)f + 1;
      flat[f * 2 * k + 2 * j + 1] = (std::uint32_t)e + 1;
    }
  }
  return CosetTable::from_action(k, n, std::move(flat), {});
}

}  // namespace tensq
