#include "taulab/fseq.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "json.hpp"

namespace taulab {

void FSequence::validate() const {
  if (slots.size() != f.size()) throw InputError("f-sequence: one slot set per index");
  for (std::size_t n = 0; n < f.size(); ++n) {
    if (f[n] < 2) throw InputError("f-sequence: f(n) must be >= 2");
    for (int v : slots[n])
      if (v < 0 || v >= f[n]) throw InputError("f-sequence: slot value out of range");
  }
}

void FSeqFamily::validate() const {
  for (int v : f)
    if (v < 2) throw InputError("f-sequence family: f(n) must be >= 2");
  for (const auto& m : members) {
    if (m.f != f) throw InputError("f-sequence family: members must share f");
    m.validate();
  }
}

void BlockSpec::validate() const {
  if (bounds.empty() || bounds.front() != 0) throw InputError("block spec: bounds must start at 0");
  for (std::size_t i = 1; i < bounds.size(); ++i)
    if (bounds[i] <= bounds[i - 1]) throw InputError("block spec: bounds must strictly increase");
  if (static_cast<int>(alphabets.size()) != bounds.back())
    throw InputError("block spec: one alphabet size per coordinate");
  for (int a : alphabets)
    if (a < 1) throw InputError("block spec: alphabet sizes must be >= 1");
}

std::optional<std::vector<int>> find_fseq_o_diag(const FSeqFamily& fam, SearchBudget& budget) {
  fam.validate();
  const int N = static_cast<int>(fam.f.size());
  const int M = static_cast<int>(fam.members.size());

  // Fast membership lookup and hit potential per suffix.
  std::vector<std::vector<std::vector<char>>> in(M);
  std::vector<std::vector<int>> can_hit(M, std::vector<int>(N + 1, 0));
  for (int m = 0; m < M; ++m) {
    in[m].assign(N, {});
    for (int n = 0; n < N; ++n) {
      in[m][n].assign(fam.f[n], 0);
      for (int v : fam.members[m].slots[n]) in[m][n][v] = 1;
    }
    for (int n = N - 1; n >= 0; --n)
      can_hit[m][n] = can_hit[m][n + 1] + (fam.members[m].slots[n].empty() ? 0 : 1);
  }

  std::vector<int> g(N, 0), hits(M, 0);
  const std::function<std::optional<std::vector<int>>(int)> dfs =
      [&](int n) -> std::optional<std::vector<int>> {
    if (n == N) {
      for (int m = 0; m < M; ++m)
        if (hits[m] == 0) return std::nullopt;
      return g;
    }
    for (int v = 0; v < fam.f[n]; ++v) {
      budget.tick();
      g[n] = v;
      for (int m = 0; m < M; ++m) hits[m] += in[m][n][v];
      bool ok = true;
      for (int m = 0; m < M && ok; ++m) ok = hits[m] + can_hit[m][n + 1] > 0;
      if (ok) {
        if (auto r = dfs(n + 1)) return r;
      }
      for (int m = 0; m < M; ++m) hits[m] -= in[m][n][v];
    }
    return std::nullopt;
  };
  return dfs(0);
}

ThetaReport check_theta_witness(const FSeqFamily& fam, int e, SearchBudget& budget) {
  fam.validate();
  if (e < 0) throw InputError("theta check: e must be >= 0");
  ThetaReport rep;
  const int N = static_cast<int>(fam.f.size());

  rep.eventually_nonempty = true;
  for (const auto& m : fam.members) {
    int empties = 0;
    for (int n = 0; n < N; ++n) empties += m.slots[n].empty();
    if (empties > e) rep.eventually_nonempty = false;
  }

  const auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  rep.pairwise_comparable = true;
  for (std::size_t i = 0; i < fam.members.size(); ++i)
    for (std::size_t j = i + 1; j < fam.members.size(); ++j) {
      int ij = 0, ji = 0;
      for (int n = 0; n < N; ++n) {
        const auto& a = fam.members[i].slots[n];
        const auto& b = fam.members[j].slots[n];
        ij += !subset(a, b);
        ji += !subset(b, a);
      }
      if (ij > e && ji > e) rep.pairwise_comparable = false;
    }

  rep.diag_witness = find_fseq_o_diag(fam, budget);
  rep.not_o_diagonalizable = !rep.diag_witness.has_value();
  return rep;
}

// ---------------------------------------------------------------------------
// Everywhere-different covering numbers.
//
// Shared exact minimizer: given a universe of tuples and the candidate pool
// (both over per-coordinate alphabets), find the least family size such that
// every universe tuple differs everywhere from some family member. Iterative
// deepening; at each depth the first still-uncovered tuple is branched over
// its coverers, which is complete.
// ---------------------------------------------------------------------------
namespace {

std::vector<std::vector<int>> product_space(const std::vector<int>& alphabets) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(alphabets.size(), 0);
  for (int a : alphabets)
    if (a < 1) throw InputError("product space: alphabet sizes must be >= 1");
  while (true) {
    out.push_back(cur);
    int i = static_cast<int>(alphabets.size()) - 1;
    while (i >= 0 && cur[i] == alphabets[i] - 1) {
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  if (alphabets.empty()) out.assign(1, {});
  return out;
}

bool everywhere_different(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == b[i]) return false;
  return true;
}

int min_avoiding_cover(const std::vector<std::vector<int>>& targets,
                       const std::vector<std::vector<int>>& pool, SearchBudget& budget) {
  if (targets.empty()) return 0;
  const int T = static_cast<int>(targets.size());
  const int P = static_cast<int>(pool.size());
  // coverers[t] = pool indices everywhere-different from target t.
  std::vector<std::vector<int>> coverers(T);
  for (int t = 0; t < T; ++t)
    for (int p = 0; p < P; ++p)
      if (everywhere_different(pool[p], targets[t])) coverers[t].push_back(p);
  for (int t = 0; t < T; ++t)
    if (coverers[t].empty())
      throw InputError("no candidate is everywhere-different from some target");

  std::vector<char> covered(T, 0);
  std::vector<int> chosen;
  const std::function<bool(int)> solve = [&](int depth) -> bool {
    int first = -1;
    for (int t = 0; t < T; ++t)
      if (!covered[t]) {
        first = t;
        break;
      }
    if (first < 0) return true;
    if (depth == 0) return false;
    for (int p : coverers[first]) {
      budget.tick();
      std::vector<int> flipped;
      for (int t = 0; t < T; ++t)
        if (!covered[t] && everywhere_different(pool[p], targets[t])) {
          covered[t] = 1;
          flipped.push_back(t);
        }
      chosen.push_back(p);
      if (solve(depth - 1)) return true;
      chosen.pop_back();
      for (int t : flipped) covered[t] = 0;
    }
    return false;
  };

  for (int k = 1; k <= T; ++k) {
    std::fill(covered.begin(), covered.end(), 0);
    chosen.clear();
    if (solve(k)) return k;
  }
  return T;  // the full complement set always works coordinate-wise
}

}  // namespace

int finite_E(const std::vector<int>& f, SearchBudget& budget) {
  for (int v : f)
    if (v < 1) throw InputError("finite_E: f(n) must be >= 1");
  const auto space = product_space(f);
  return min_avoiding_cover(space, space, budget);
}

int compute_nor(const std::vector<std::vector<int>>& Y, const BlockSpec& block,
                int block_index, SearchBudget& budget) {
  block.validate();
  if (block_index < 0 || block_index >= block.block_count())
    throw InputError("nor: block index out of range");
  const int lo = block.block_begin(block_index);
  const int hi = block.block_end(block_index);
  std::vector<int> alphabets(block.alphabets.begin() + lo, block.alphabets.begin() + hi);
  for (const auto& v : Y) {
    if (static_cast<int>(v.size()) != hi - lo)
      throw InputError("nor: tuple length must match the block");
    for (int i = 0; i < hi - lo; ++i)
      if (v[i] < 0 || v[i] >= alphabets[i]) throw InputError("nor: tuple value out of range");
  }
  return min_avoiding_cover(Y, product_space(alphabets), budget);
}

std::vector<std::vector<std::vector<int>>> avoid_slaloms(
    const std::vector<std::vector<std::vector<int>>>& slaloms,
    const std::vector<int>& alphabets) {
  const int N = static_cast<int>(alphabets.size());
  for (int a : alphabets)
    if (a < 1) throw InputError("avoid_slaloms: alphabet sizes must be >= 1");
  for (const auto& S : slaloms) {
    if (static_cast<int>(S.size()) != N)
      throw InputError("avoid_slaloms: slalom length must match alphabets");
    for (int n = 0; n < N; ++n)
      for (int v : S[n])
        if (v < 0 || v >= alphabets[n])
          throw InputError("avoid_slaloms: slalom value out of range");
  }
  for (int n = 0; n < N; ++n) {
    std::size_t total = 0;
    for (const auto& S : slaloms) total += S[n].size();
    if (total >= static_cast<std::size_t>(alphabets[n]))
      throw InputError("avoid_slaloms: slalom budget exhausts alphabet at index " +
                       std::to_string(n));
  }

  std::vector<std::vector<std::vector<int>>> chain;
  std::vector<std::vector<char>> live(N);
  for (int n = 0; n < N; ++n) live[n].assign(alphabets[n], 1);
  for (const auto& S : slaloms) {
    for (int n = 0; n < N; ++n)
      for (int v : S[n]) live[n][v] = 0;
    std::vector<std::vector<int>> sigma(N);
    for (int n = 0; n < N; ++n)
      for (int v = 0; v < alphabets[n]; ++v)
        if (live[n][v]) sigma[n].push_back(v);
    chain.push_back(std::move(sigma));
  }
  return chain;
}

// ---------------------------------------------------------------------------
// Block embedding
// ---------------------------------------------------------------------------

std::vector<int> EmbedResult::to_slot_choice(const Diagonalizer& g) const {
  const int N = static_cast<int>(f.size());
  if (g.choice.size() != partition.size())
    throw InputError("embed transfer: choice length must match the partition rows");
  std::vector<int> h(N, 0);
  for (std::size_t row = 0; row < partition.size(); ++row) {
    if (g.choice[row] == kUnassignedRow) continue;
    const int col = g.choice[row];
    // Locate the block [fstar(k), fstar(k+1)) holding this column, if any.
    int k = -1;
    for (int cand = 0; cand < N; ++cand)
      if (fstar[cand] <= col && col < fstar[cand + 1]) {
        k = cand;
        break;
      }
    if (k < 0) continue;  // tail or padding column: no slot information
    // i(k): the row whose block contains slot k.
    int owner = -1;
    for (std::size_t r = 0; r < partition.size(); ++r)
      if (std::find(partition[r].begin(), partition[r].end(), k) != partition[r].end()) {
        owner = static_cast<int>(r);
        break;
      }
    if (owner < 0) continue;
    const int raw = g.choice[owner] - fstar[k];
    h[k] = std::clamp(raw, 0, f[k] - 1);
  }
  return h;
}

Diagonalizer EmbedResult::to_row_choice(const std::vector<int>& h) const {
  if (h.size() != f.size())
    throw InputError("embed transfer: slot choice length must match f");
  Diagonalizer g;
  g.total = true;
  g.choice.assign(partition.size(), 0);
  for (std::size_t row = 0; row < partition.size(); ++row) {
    if (partition[row].empty()) continue;
    const int k = partition[row].front();  // exact when blocks are singletons
    g.choice[row] = fstar[k] + std::clamp(h[k], 0, f[k] - 1);
  }
  return g;
}

EmbedResult embed_fseq_as_tau_family(const FSeqFamily& fam,
                                     const std::vector<std::vector<int>>& partition,
                                     int cols) {
  fam.validate();
  const int N = static_cast<int>(fam.f.size());
  std::vector<char> seen(N, 0);
  for (const auto& block : partition)
    for (int k : block) {
      if (k < 0 || k >= N) throw InputError("embed: partition slot out of range");
      if (seen[k]) throw InputError("embed: partition blocks must be disjoint");
      seen[k] = 1;
    }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw InputError("embed: partition must cover every slot index");

  EmbedResult out;
  out.partition = partition;
  out.f = fam.f;
  out.fstar.assign(N + 1, 0);
  for (int k = 0; k < N; ++k) out.fstar[k + 1] = out.fstar[k] + fam.f[k];
  const int C = cols < 0 ? out.fstar[N] : cols;
  if (C < out.fstar[N]) throw InputError("embed: cols below the total slot width");

  const int R = static_cast<int>(partition.size());
  for (const auto& member : fam.members) {
    BinaryArray a = BinaryArray::filled(R, C, 0, 0);
    for (int n = 0; n < R; ++n)
      for (int k : partition[n])
        for (int v : member.slots[k]) a.bits[n][out.fstar[k] + v] = 1;
    out.family.members.push_back(std::move(a));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Window reduction
// ---------------------------------------------------------------------------

Diagonalizer ReduceResult::lift(const std::vector<int>& g) const {
  if (g.size() != window_elems.size())
    throw InputError("lift: witness length must match the selected rows");
  Diagonalizer h;
  h.total = true;
  h.choice.assign(array_rows, 0);
  for (std::size_t n = 0; n < window_elems.size(); ++n) {
    if (g[n] < 0 || g[n] >= static_cast<int>(window_elems[n].size()))
      throw InputError("lift: witness value out of window range");
    h.choice[selected_rows[n]] = window_elems[n][g[n]];
  }
  return h;
}

ReduceResult reduce_tau_to_fseq(const ArrayFamily& fam, const WindowSystem& win) {
  fam.validate();
  win.validate(fam.rows(), fam.cols());
  ReduceResult out;
  out.array_rows = fam.rows();
  out.array_cols = fam.cols();
  for (int n = 0; n < fam.rows(); ++n) {
    if (win.windows[n].empty()) continue;
    if (win.windows[n].size() < 2)
      throw InputError("reduce: nonempty window at row " + std::to_string(n) +
                       " has fewer than 2 elements");
    auto sorted = win.windows[n];
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() < 2)
      throw InputError("reduce: nonempty window at row " + std::to_string(n) +
                       " has fewer than 2 distinct elements");
    out.selected_rows.push_back(n);
    out.window_elems.push_back(std::move(sorted));
  }
  for (const auto& elems : out.window_elems)
    out.f.push_back(static_cast<int>(elems.size()));

  out.family.f = out.f;
  for (const auto& a : fam.members) {
    FSequence seq;
    seq.f = out.f;
    seq.slots.resize(out.f.size());
    for (std::size_t n = 0; n < out.selected_rows.size(); ++n)
      for (std::size_t m = 0; m < out.window_elems[n].size(); ++m)
        if (a.at(out.selected_rows[n], out.window_elems[n][m]))
          seq.slots[n].push_back(static_cast<int>(m));
    out.family.members.push_back(std::move(seq));
  }
  out.family.validate();
  return out;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

std::string fseq_family_to_json(const FSeqFamily& fam) {
  nlohmann::ordered_json j;
  j["f"] = fam.f;
  j["members"] = nlohmann::ordered_json::array();
  for (const auto& m : fam.members) j["members"].push_back(m.slots);
  return j.dump();
}

FSeqFamily fseq_family_from_json(const std::string& text) {
  FSeqFamily fam;
  try {
    auto j = nlohmann::ordered_json::parse(text);
    fam.f = j.at("f").get<std::vector<int>>();
    for (const auto& item : j.at("members")) {
      FSequence seq;
      seq.f = fam.f;
      seq.slots = item.is_object() ? item.at("slots").get<std::vector<std::vector<int>>>()
                                   : item.get<std::vector<std::vector<int>>>();
      for (auto& s : seq.slots) std::sort(s.begin(), s.end());
      fam.members.push_back(std::move(seq));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("bad f-sequence JSON: ") + ex.what());
  }
  fam.validate();
  return fam;
}

}  // namespace taulab
