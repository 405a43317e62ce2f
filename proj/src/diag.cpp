#include "taulab/diag.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "json.hpp"

namespace taulab {

void QuantMode::validate() const {
  if (q < 1) throw InputError("quantifier mode: q must be >= 1");
  if (e < 0) throw InputError("quantifier mode: e must be >= 0");
  if (col_exceptions < 0) throw InputError("quantifier mode: column budget must be >= 0");
}

std::vector<int> Diagonalizer::domain() const {
  std::vector<int> out;
  for (int n = 0; n < static_cast<int>(choice.size()); ++n)
    if (choice[n] != kUnassignedRow) out.push_back(n);
  return out;
}

void Diagonalizer::validate(int rows, int cols) const {
  if (static_cast<int>(choice.size()) != rows)
    throw InputError("diagonalizer: one choice per row required");
  for (int v : choice) {
    if (v == kUnassignedRow) {
      if (total) throw InputError("diagonalizer: unassigned row in a total choice");
      continue;
    }
    if (v < 0 || v > cols) throw InputError("diagonalizer: column out of range");
  }
}

void WindowSystem::validate(int rows, int cols) const {
  if (static_cast<int>(windows.size()) != rows)
    throw InputError("window system: one window per row required");
  for (const auto& w : windows)
    for (int m : w)
      if (m < 0 || m > cols) throw InputError("window system: column out of range");
}

bool is_gamma_family(const ArrayFamily& fam) {
  for (const auto& a : fam.members)
    for (auto t : a.tail)
      if (!t) return false;
  return true;
}

namespace {

// Direction "A(n,.) <= B(n,.) for all but finitely many m" at row n.
bool row_dominated(const BinaryArray& a, const BinaryArray& b, int n, const QuantMode& mode) {
  if (mode.col_mode == ColumnMode::TailExact) return a.tail[n] <= b.tail[n];
  if (a.tail[n] > b.tail[n]) return false;  // infinitely many tail violations
  int bad = 0;
  for (int m = 0; m < a.cols; ++m)
    if (a.bits[n][m] > b.bits[n][m]) ++bad;
  return bad <= mode.col_exceptions;
}

bool row_infinitely_one(const BinaryArray& a, int n, const QuantMode& mode) {
  if (a.tail[n]) return true;  // ones at every column past the prefix
  if (mode.col_mode == ColumnMode::TailExact) return false;
  int ones = 0;
  for (int m = 0; m < a.cols; ++m) ones += a.bits[n][m];
  return ones >= mode.q;
}

}  // namespace

bool is_tau_family(const ArrayFamily& fam, const QuantMode& mode) {
  mode.validate();
  fam.validate();
  for (const auto& a : fam.members)
    for (int n = 0; n < a.rows; ++n)
      if (!row_infinitely_one(a, n, mode)) return false;
  if (mode.col_mode == ColumnMode::TailExact) return true;  // pair clause collapses
  const int M = static_cast<int>(fam.members.size());
  for (int i = 0; i < M; ++i)
    for (int j = i + 1; j < M; ++j)
      for (int n = 0; n < fam.rows(); ++n)
        if (!row_dominated(fam.members[i], fam.members[j], n, mode) &&
            !row_dominated(fam.members[j], fam.members[i], n, mode))
          return false;
  return true;
}

std::vector<int> comparability_set(const BinaryArray& a, const BinaryArray& b,
                                   const QuantMode& mode) {
  mode.validate();
  if (a.rows != b.rows || a.cols != b.cols)
    throw InputError("comparability_set: shape mismatch");
  std::vector<int> out;
  for (int n = 0; n < a.rows; ++n)
    if (row_dominated(a, b, n, mode)) out.push_back(n);
  return out;
}

bool is_tau_diagonalized_by(const ArrayFamily& fam, const Diagonalizer& g,
                            const QuantMode& mode) {
  mode.validate();
  fam.validate();
  if (!g.total) throw InputError("is_tau_diagonalized_by needs a total choice");
  g.validate(fam.rows(), fam.cols());
  const int R = fam.rows();
  for (const auto& a : fam.members) {
    int hits = 0;
    for (int n = 0; n < R; ++n) hits += a.at(n, g.choice[n]);
    if (hits < mode.q) return false;
  }
  const int M = static_cast<int>(fam.members.size());
  for (int i = 0; i < M; ++i)
    for (int j = i + 1; j < M; ++j) {
      int ab = 0, ba = 0;
      for (int n = 0; n < R; ++n) {
        const int va = fam.members[i].at(n, g.choice[n]);
        const int vb = fam.members[j].at(n, g.choice[n]);
        ab += va > vb;
        ba += vb > va;
      }
      if (ab > mode.e && ba > mode.e) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// DFS search core shared by the diagonalizer-style searches.
//
// Rows are assigned in order; every extension ticks the budget once. Per
// member we track realized hits plus an upper bound on future hits, per pair
// the violation count of both directions. All prune tests are sound, so the
// first completed assignment is the lexicographically least witness.
// ---------------------------------------------------------------------------
namespace {

class AssignmentSearch {
 public:
  // values[n] = candidate column values for row n, in canonical order.
  // value kUnassignedRow marks a row left out of a partial domain.
  AssignmentSearch(const ArrayFamily& fam, const QuantMode& mode, bool count_hits_on_tail,
                   SearchBudget& budget)
      : fam_(fam), mode_(mode), budget_(budget) {
    R_ = fam.rows();
    M_ = static_cast<int>(fam.members.size());
    hits_.assign(M_, 0);
    pair_ab_.assign(M_ * M_, 0);
    pair_ba_.assign(M_ * M_, 0);
    // Upper bound on hits a member can still collect from rows >= d: rows
    // whose prefix or tail holds any 1 at all.
    can_hit_.assign(M_, std::vector<int>(R_ + 1, 0));
    for (int m = 0; m < M_; ++m)
      for (int n = R_ - 1; n >= 0; --n) {
        const auto& a = fam.members[m];
        bool any = count_hits_on_tail && a.tail[n];
        for (int c = 0; c < a.cols && !any; ++c) any = a.bits[n][c];
        can_hit_[m][n] = can_hit_[m][n + 1] + (any ? 1 : 0);
      }
  }

  // Returns the first assignment (vector of per-row values) accepted by the
  // final check, exploring per-row candidates in the given order.
  std::optional<std::vector<int>> run(const std::vector<int>& row_values,
                                      const std::function<bool()>& final_check,
                                      int first_row_value = -2) {
    assignment_.assign(R_, kUnassignedRow);
    if (first_row_value != -2) {
      // Partitioned mode: row 0 is fixed by the caller.
      if (R_ == 0) return final_check() ? std::make_optional(assignment_) : std::nullopt;
      budget_.tick();
      push(0, first_row_value);
      auto r = dfs(1, row_values, final_check);
      pop(0, first_row_value);
      return r;
    }
    return dfs(0, row_values, final_check);
  }

  int hits(int member) const { return hits_[member]; }
  int assigned_rows() const { return assigned_; }
  const std::vector<int>& assignment() const { return assignment_; }

 private:
  std::optional<std::vector<int>> dfs(int depth, const std::vector<int>& row_values,
                                      const std::function<bool()>& final_check) {
    if (depth == R_) return final_check() ? std::make_optional(assignment_) : std::nullopt;
    for (int v : row_values) {
      budget_.tick();
      push(depth, v);
      if (viable(depth + 1)) {
        auto r = dfs(depth + 1, row_values, final_check);
        if (r) return r;
      }
      pop(depth, v);
    }
    return std::nullopt;
  }

  bool viable(int depth) const {
    for (int m = 0; m < M_; ++m)
      if (hits_[m] + can_hit_[m][depth] < mode_.q) return false;
    for (int i = 0; i < M_; ++i)
      for (int j = i + 1; j < M_; ++j)
        if (pair_ab_[i * M_ + j] > mode_.e && pair_ba_[i * M_ + j] > mode_.e) return false;
    return true;
  }

  void push(int row, int v) {
    assignment_[row] = v;
    if (v == kUnassignedRow) return;
    ++assigned_;
    for (int m = 0; m < M_; ++m) hits_[m] += fam_.members[m].at(row, v);
    for (int i = 0; i < M_; ++i)
      for (int j = i + 1; j < M_; ++j) {
        const int va = fam_.members[i].at(row, v);
        const int vb = fam_.members[j].at(row, v);
        pair_ab_[i * M_ + j] += va > vb;
        pair_ba_[i * M_ + j] += vb > va;
      }
  }

  void pop(int row, int v) {
    assignment_[row] = kUnassignedRow;
    if (v == kUnassignedRow) return;
    --assigned_;
    for (int m = 0; m < M_; ++m) hits_[m] -= fam_.members[m].at(row, v);
    for (int i = 0; i < M_; ++i)
      for (int j = i + 1; j < M_; ++j) {
        const int va = fam_.members[i].at(row, v);
        const int vb = fam_.members[j].at(row, v);
        pair_ab_[i * M_ + j] -= va > vb;
        pair_ba_[i * M_ + j] -= vb > va;
      }
  }

  const ArrayFamily& fam_;
  const QuantMode& mode_;
  SearchBudget& budget_;
  int R_ = 0, M_ = 0, assigned_ = 0;
  std::vector<int> hits_, pair_ab_, pair_ba_, assignment_;
  std::vector<std::vector<int>> can_hit_;
};

double pow_size(double base, int exp) {
  double v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v > 1e18) return 1e18;
  }
  return v;
}

}  // namespace

SearchOutcome<Diagonalizer> find_tau_diagonalizer(const ArrayFamily& fam,
                                                  const QuantMode& mode,
                                                  SearchBudget& budget) {
  mode.validate();
  fam.validate();
  SearchOutcome<Diagonalizer> out;
  const int R = fam.rows();
  const int C = fam.cols();
  out.space_warning = pow_size(C + 1, R) > static_cast<double>(budget.cap());
  if (fam.members.empty()) {
    out.witness = Diagonalizer{std::vector<int>(R, 0), true};
    return out;
  }

  std::vector<int> values(C + 1);
  for (int v = 0; v <= C; ++v) values[v] = v;

  const auto solve_slice = [&](int first_value) -> std::optional<std::vector<int>> {
    AssignmentSearch search(fam, mode, /*count_hits_on_tail=*/true, budget);
    const auto final_check = [&] {
      for (int m = 0; m < static_cast<int>(fam.members.size()); ++m)
        if (search.hits(m) < mode.q) return false;
      return true;
    };
    return search.run(values, final_check, first_value);
  };

  if (R == 0) {
    AssignmentSearch search(fam, mode, true, budget);
    const auto final_check = [&] {
      for (int m = 0; m < static_cast<int>(fam.members.size()); ++m)
        if (search.hits(m) < mode.q) return false;
      return true;
    };
    auto r = search.run(values, final_check);
    if (r) out.witness = Diagonalizer{*r, true};
    out.evaluated = budget.used();
    return out;
  }

  // Partition on the first-row value. The merge takes the success with the
  // least first value, which equals the sequential least regardless of the
  // worker count or scheduling.
  const int workers = std::min(worker_count(), C + 1);
  if (workers <= 1) {
    for (int v = 0; v <= C; ++v) {
      if (auto r = solve_slice(v)) {
        out.witness = Diagonalizer{*r, true};
        break;
      }
    }
  } else {
    std::vector<std::optional<std::vector<int>>> results(C + 1);
    std::atomic<int> next{0};
    std::atomic<int> best{C + 1};  // slices past a known success are skipped
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          while (true) {
            const int v = next.fetch_add(1);
            if (v > C) return;
            if (v > best.load()) continue;
            results[v] = solve_slice(v);
            if (results[v]) {
              int expect = best.load();
              while (v < expect && !best.compare_exchange_weak(expect, v)) {
              }
            }
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (const auto& err : errors)
      if (err) std::rethrow_exception(err);
    for (int v = 0; v <= C; ++v)
      if (results[v]) {
        out.witness = Diagonalizer{*results[v], true};
        break;
      }
  }
  out.evaluated = budget.used();
  return out;
}

bool is_finitely_tau_diagonalized_by(const ArrayFamily& fam, const WindowSystem& win,
                                     const QuantMode& mode) {
  mode.validate();
  fam.validate();
  win.validate(fam.rows(), fam.cols());
  const int R = fam.rows();
  for (const auto& a : fam.members) {
    int hits = 0;
    for (int n = 0; n < R; ++n)
      for (int m : win.windows[n])
        if (a.at(n, m)) {
          ++hits;
          break;
        }
    if (hits < mode.q) return false;
  }
  const int M = static_cast<int>(fam.members.size());
  for (int i = 0; i < M; ++i)
    for (int j = i + 1; j < M; ++j) {
      int ab = 0, ba = 0;
      for (int n = 0; n < R; ++n) {
        bool va_gt = false, vb_gt = false;
        for (int m : win.windows[n]) {
          const int va = fam.members[i].at(n, m);
          const int vb = fam.members[j].at(n, m);
          va_gt = va_gt || va > vb;
          vb_gt = vb_gt || vb > va;
        }
        ab += va_gt;
        ba += vb_gt;
      }
      if (ab > mode.e && ba > mode.e) return false;
    }
  return true;
}

SearchOutcome<WindowSystem> find_finite_tau_diagonalizer(const ArrayFamily& fam,
                                                         const QuantMode& mode, int w,
                                                         SearchBudget& budget) {
  mode.validate();
  fam.validate();
  if (w < 0) throw InputError("window bound w must be >= 0");
  SearchOutcome<WindowSystem> out;
  const int R = fam.rows();
  const int C = fam.cols();
  const auto candidates = bounded_subsets(C, w);
  out.space_warning =
      pow_size(static_cast<double>(candidates.size()), R) > static_cast<double>(budget.cap());
  if (fam.members.empty()) {
    out.witness = WindowSystem{std::vector<std::vector<int>>(R)};
    return out;
  }

  const int M = static_cast<int>(fam.members.size());
  // Per row and candidate window: member hit bits and pair violation bits.
  // hit[r][c][m]; viol_ab/ba[r][c][pair].
  std::vector<std::vector<std::vector<char>>> hit(R);
  std::vector<std::vector<std::vector<char>>> vab(R), vba(R);
  for (int r = 0; r < R; ++r) {
    hit[r].assign(candidates.size(), std::vector<char>(M, 0));
    vab[r].assign(candidates.size(), std::vector<char>(M * M, 0));
    vba[r].assign(candidates.size(), std::vector<char>(M * M, 0));
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      for (int m = 0; m < M; ++m)
        for (int col : candidates[c])
          if (fam.members[m].at(r, col)) {
            hit[r][c][m] = 1;
            break;
          }
      for (int i = 0; i < M; ++i)
        for (int j = i + 1; j < M; ++j)
          for (int col : candidates[c]) {
            const int va = fam.members[i].at(r, col);
            const int vb = fam.members[j].at(r, col);
            if (va > vb) vab[r][c][i * M + j] = 1;
            if (vb > va) vba[r][c][i * M + j] = 1;
          }
    }
  }

  // Hit potential: a member can still be hit at row >= d if any candidate
  // window hits it there, i.e. the row has any 1 among real columns.
  std::vector<std::vector<int>> can_hit(M, std::vector<int>(R + 1, 0));
  for (int m = 0; m < M; ++m)
    for (int r = R - 1; r >= 0; --r) {
      bool any = false;
      for (int col = 0; col < C && !any; ++col) any = fam.members[m].bits[r][col];
      can_hit[m][r] = can_hit[m][r + 1] + (any && w > 0 ? 1 : 0);
    }

  std::vector<int> pick(R, 0), hits(M, 0), ab(M * M, 0), ba(M * M, 0);
  std::function<std::optional<std::vector<int>>(int)> dfs =
      [&](int depth) -> std::optional<std::vector<int>> {
    if (depth == R) {
      for (int m = 0; m < M; ++m)
        if (hits[m] < mode.q) return std::nullopt;
      return pick;
    }
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      budget.tick();
      pick[depth] = static_cast<int>(c);
      for (int m = 0; m < M; ++m) hits[m] += hit[depth][c][m];
      for (int i = 0; i < M; ++i)
        for (int j = i + 1; j < M; ++j) {
          ab[i * M + j] += vab[depth][c][i * M + j];
          ba[i * M + j] += vba[depth][c][i * M + j];
        }
      bool ok = true;
      for (int m = 0; m < M && ok; ++m)
        if (hits[m] + can_hit[m][depth + 1] < mode.q) ok = false;
      for (int i = 0; i < M && ok; ++i)
        for (int j = i + 1; j < M && ok; ++j)
          if (ab[i * M + j] > mode.e && ba[i * M + j] > mode.e) ok = false;
      if (ok) {
        auto r = dfs(depth + 1);
        if (r) return r;
      }
      for (int m = 0; m < M; ++m) hits[m] -= hit[depth][c][m];
      for (int i = 0; i < M; ++i)
        for (int j = i + 1; j < M; ++j) {
          ab[i * M + j] -= vab[depth][c][i * M + j];
          ba[i * M + j] -= vba[depth][c][i * M + j];
        }
    }
    return std::nullopt;
  };

  auto picked = dfs(0);
  if (picked) {
    WindowSystem win;
    win.windows.reserve(R);
    for (int r = 0; r < R; ++r) win.windows.push_back(candidates[(*picked)[r]]);
    out.witness = std::move(win);
  }
  out.evaluated = budget.used();
  return out;
}

SearchOutcome<Diagonalizer> find_semi_tau_diagonalizer(const ArrayFamily& fam,
                                                       const QuantMode& mode,
                                                       SearchBudget& budget) {
  mode.validate();
  fam.validate();
  SearchOutcome<Diagonalizer> out;
  const int R = fam.rows();
  const int C = fam.cols();
  out.space_warning = pow_size(C + 2, R) > static_cast<double>(budget.cap());
  if (fam.members.empty()) {
    out.witness = Diagonalizer{std::vector<int>(R, kUnassignedRow), false};
    return out;
  }

  std::vector<int> values(C + 2);
  values[0] = kUnassignedRow;
  for (int v = 0; v <= C; ++v) values[v + 1] = v;

  AssignmentSearch search(fam, mode, true, budget);
  const auto final_check = [&] {
    for (int m = 0; m < static_cast<int>(fam.members.size()); ++m)
      if (search.hits(m) < mode.q) return false;
    return true;
  };
  auto r = search.run(values, final_check);
  if (r) out.witness = Diagonalizer{*r, false};
  out.evaluated = budget.used();
  return out;
}

namespace {

bool centered_hit_sets(const std::vector<std::vector<char>>& hit_rows, int rows,
                       SearchBudget& budget) {
  // Every nonempty subfamily must share a hit row; checked literally over all
  // subfamilies of the (finite) family.
  const int M = static_cast<int>(hit_rows.size());
  if (M > 30) throw InputError("centered check limited to 30 members");
  for (std::uint64_t mask = 1; mask < (1ull << M); ++mask) {
    budget.tick();
    bool some_common = false;
    for (int n = 0; n < rows && !some_common; ++n) {
      bool all = true;
      for (int m = 0; m < M && all; ++m)
        if ((mask >> m) & 1) all = hit_rows[m][n];
      some_common = all;
    }
    if (!some_common) return false;
  }
  return true;
}

}  // namespace

bool is_o_diagonalized_by(const ArrayFamily& fam, const Diagonalizer& g, ODiagVariant variant,
                          int q) {
  fam.validate();
  if (!g.total) throw InputError("is_o_diagonalized_by needs a total choice");
  g.validate(fam.rows(), fam.cols());
  const int R = fam.rows();
  const int M = static_cast<int>(fam.members.size());
  std::vector<std::vector<char>> hit_rows(M, std::vector<char>(R, 0));
  for (int m = 0; m < M; ++m)
    for (int n = 0; n < R; ++n) hit_rows[m][n] = fam.members[m].at(n, g.choice[n]);
  switch (variant) {
    case ODiagVariant::Basic:
      q = 1;
      [[fallthrough]];
    case ODiagVariant::Infinite: {
      for (int m = 0; m < M; ++m) {
        int hits = 0;
        for (int n = 0; n < R; ++n) hits += hit_rows[m][n];
        if (hits < q) return false;
      }
      return true;
    }
    case ODiagVariant::Centered: {
      SearchBudget local(SearchBudget::kDefaultCap);
      return centered_hit_sets(hit_rows, R, local);
    }
  }
  return false;
}

SearchOutcome<Diagonalizer> find_o_diagonalizer(const ArrayFamily& fam, ODiagVariant variant,
                                                int q, SearchBudget& budget) {
  fam.validate();
  if (variant != ODiagVariant::Infinite) q = 1;
  if (q < 1) throw InputError("o-diagonalizer: q must be >= 1");
  SearchOutcome<Diagonalizer> out;
  const int R = fam.rows();
  const int C = fam.cols();
  out.space_warning = pow_size(C + 1, R) > static_cast<double>(budget.cap());
  if (fam.members.empty()) {
    out.witness = Diagonalizer{std::vector<int>(R, 0), true};
    return out;
  }
  const int M = static_cast<int>(fam.members.size());
  QuantMode hit_mode;  // reuse the assignment engine with hit budget q, no pair rule
  hit_mode.q = q;
  hit_mode.e = M * R + 1;  // pair condition never prunes
  std::vector<int> values(C + 1);
  for (int v = 0; v <= C; ++v) values[v] = v;
  AssignmentSearch search(fam, hit_mode, true, budget);
  const auto final_check = [&] {
    for (int m = 0; m < M; ++m)
      if (search.hits(m) < q) return false;
    if (variant != ODiagVariant::Centered) return true;
    const auto& g = search.assignment();
    std::vector<std::vector<char>> hit_rows(M, std::vector<char>(R, 0));
    for (int m = 0; m < M; ++m)
      for (int n = 0; n < R; ++n) hit_rows[m][n] = fam.members[m].at(n, g[n]);
    return centered_hit_sets(hit_rows, R, budget);
  };
  auto r = search.run(values, final_check);
  if (r) out.witness = Diagonalizer{*r, true};
  out.evaluated = budget.used();
  return out;
}

WindowSystem windows_from_bounds(const ArrayFamily& fam, const std::vector<int>& s,
                                 const GrowthFunction& g0, const GrowthFunction& g1) {
  fam.validate();
  const int R = fam.rows();
  const int C = fam.cols();
  if (static_cast<int>(g0.size()) != R || static_cast<int>(g1.size()) != R)
    throw InputError("windows_from_bounds: g0, g1 must assign every row");
  std::vector<bool> in_s(R, false);
  for (int n : s) {
    if (n < 0 || n >= R) throw InputError("windows_from_bounds: row out of range");
    in_s[n] = true;
  }
  WindowSystem win;
  win.windows.assign(R, {});
  for (int n = 0; n < R; ++n) {
    if (!in_s[n]) continue;
    if (g0[n] < 0 || g0[n] > g1[n] || g1[n] >= C)
      throw InputError("windows_from_bounds: need 0 <= g0(n) <= g1(n) < cols on s (row " +
                       std::to_string(n) + ")");
    for (int m = g0[n]; m <= g1[n]; ++m) win.windows[n].push_back(m);
  }
  return win;
}

WindowSystem singleton_windows(const Diagonalizer& g) {
  WindowSystem win;
  win.windows.reserve(g.choice.size());
  for (int v : g.choice) {
    if (v == kUnassignedRow)
      win.windows.push_back({});
    else
      win.windows.push_back({v});
  }
  return win;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

std::string windows_to_json(const WindowSystem& win) {
  nlohmann::ordered_json j;
  j["windows"] = win.windows;
  return j.dump();
}

WindowSystem windows_from_json(const std::string& text) {
  WindowSystem win;
  try {
    auto j = nlohmann::ordered_json::parse(text);
    const auto& arr = j.is_array() ? j : j.at("windows");
    win.windows = arr.get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("bad window JSON: ") + ex.what());
  }
  return win;
}

std::string diagonalizer_to_json(const Diagonalizer& g) {
  nlohmann::ordered_json j;
  j["choice"] = g.choice;
  j["total"] = g.total;
  return j.dump();
}

}  // namespace taulab
