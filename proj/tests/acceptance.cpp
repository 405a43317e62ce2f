// Acceptance suite: one line per criterion, PASS or FAIL with detail.
// Returns the number of failed criteria.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "taulab/covers.hpp"
#include "taulab/diag.hpp"
#include "taulab/diagram.hpp"
#include "taulab/fseq.hpp"

using namespace taulab;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " — " << detail
            << "\n";
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// 1. Full table reproduction.
// ---------------------------------------------------------------------------
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  LoadedBundle lb = load_bundle(bundled_figure1_json(), bundled_kb_json(), bundled_table2_grid(),
                                bundled_framed_grid());
  RelationMatrix m = compute_matrix(lb.bundle);
  const double dt = seconds_since(t0);

  std::ostringstream detail;
  bool ok = true;
  const auto diffs = compare_to_table(m, lb.reference);
  if (!diffs.empty()) {
    ok = false;
    detail << diffs.size() << " cells differ; ";
  }
  if (m.count(Cell::Open) != 55) {
    ok = false;
    detail << "open=" << m.count(Cell::Open) << " (wanted 55); ";
  }
  if (m.framed.size() != 21 || m.framed != lb.framed_ref) {
    ok = false;
    detail << "newly-settled set mismatch; ";
  }
  int framed_with_rule = 0;
  for (const auto& [i, j] : m.framed)
    for (const auto& st : m.trace(i, j))
      if (st.rule == "Cardinality-Rule") {
        ++framed_with_rule;
        break;
      }
  if (framed_with_rule != static_cast<int>(m.framed.size())) {
    ok = false;
    detail << "only " << framed_with_rule << " newly-settled cells carry the rule; ";
  }
  if (dt >= 1.0) {
    ok = false;
    detail << "took " << dt << "s (budget 1s); ";
  }
  detail << "484 cells, diff=" << diffs.size() << ", open=" << m.count(Cell::Open)
         << ", newly-settled=" << m.framed.size() << ", " << dt << "s";
  report(1, ok, detail.str());
}

// ---------------------------------------------------------------------------
// 2. Spot checks with the required derivations.
// ---------------------------------------------------------------------------
void criterion_2() {
  LoadedBundle lb = load_bundle(bundled_figure1_json(), bundled_kb_json(), bundled_table2_grid(),
                                bundled_framed_grid());
  RelationMatrix m = compute_matrix(lb.bundle);
  bool ok = true;
  std::ostringstream detail;

  for (int j = 0; j < 22; ++j)
    if (m.at(8, j) != Cell::Implies) {
      ok = false;
      detail << "row 8 not all implies; ";
      break;
    }

  const auto cell_uses = [&](int i, int j, const std::string& fact,
                             const std::string& provenance) {
    if (m.at(i, j) != Cell::NotImplies) return false;
    for (const auto& st : m.trace(i, j)) {
      if (st.rule != "Cardinality-Rule") continue;
      bool has_fact = false;
      for (const auto& p : st.premises) has_fact = has_fact || p == fact;
      if (has_fact && (provenance.empty() || st.note.find(provenance) != std::string::npos))
        return true;
    }
    return false;
  };

  if (!cell_uses(0, 4, "con(t<b)", "")) {
    ok = false;
    detail << "(0,4) lacks con(t<b); ";
  }
  if (!cell_uses(0, 5, "con(t<b)", "")) {
    ok = false;
    detail << "(0,5) lacks con(t<b); ";
  }
  if (!cell_uses(2, 6, "con(od<d)", "theta_star")) {
    ok = false;
    detail << "(2,6) lacks con(od<d) through theta_star; ";
  }
  if (!cell_uses(14, 4, "con(t<min(s,b))", "Mathias")) {
    ok = false;
    detail << "(14,4) lacks con(t<min(s,b)) through the Mathias-style facts; ";
  }
  report(2, ok, ok ? "row 8, (0,4), (0,5), (2,6), (14,4) all carry the required derivations"
                   : detail.str());
}

// ---------------------------------------------------------------------------
// 3. nor measurements.
// ---------------------------------------------------------------------------
std::vector<std::vector<int>> full_tuples(const std::vector<int>& alphabets) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(alphabets.size(), 0);
  for (bool more = true; more;) {
    out.push_back(cur);
    more = false;
    for (int i = static_cast<int>(alphabets.size()) - 1; i >= 0; --i) {
      if (++cur[i] < alphabets[i]) {
        more = true;
        break;
      }
      cur[i] = 0;
    }
  }
  return out;
}

void criterion_3() {
  bool ok = true;
  std::ostringstream detail;
  const auto measure = [&](std::vector<int> alphabets, int expected) {
    const auto t0 = std::chrono::steady_clock::now();
    BlockSpec spec;
    spec.bounds = {0, static_cast<int>(alphabets.size())};
    spec.alphabets = alphabets;
    SearchBudget budget(100'000'000);
    const int v = compute_nor(full_tuples(alphabets), spec, 0, budget);
    const double dt = seconds_since(t0);
    detail << "nor" << (alphabets.size() == 1 ? "(L1)" : "(L2)") << "=" << v << " in " << dt
           << "s; ";
    if (v != expected || dt >= 5.0) ok = false;
  };
  measure({3}, 2);
  measure({3, 3}, 3);
  measure({2, 2}, 4);
  report(3, ok, detail.str());
}

// ---------------------------------------------------------------------------
// 4. Everywhere-different covering numbers, against the naive enumerator.
// ---------------------------------------------------------------------------
void criterion_4() {
  bool ok = true;
  std::ostringstream detail;
  const auto t0 = std::chrono::steady_clock::now();
  const auto check = [&](std::vector<int> f, int expected) {
    SearchBudget budget(100'000'000);
    const int mine = finite_E(f, budget);
    const auto space = full_tuples(f);
    const int naive = oracles::naive_min_avoiding_cover(space, space);
    detail << "E=" << mine << "/naive " << naive << "; ";
    if (mine != expected || naive != expected) ok = false;
  };
  check({2}, 2);
  check({2, 2}, 4);
  check({3}, 2);
  const double dt = seconds_since(t0);
  if (dt >= 5.0) ok = false;
  detail << dt << "s";
  report(4, ok, detail.str());
}

// ---------------------------------------------------------------------------
// 5. Window-search echo on the threshold/comparison family.
//
// Instance fixed ahead of the build: four strictly increasing functions on
// five rows, eight columns. The stated expectation is an empty search result;
// the run below reports what the complete search actually finds, confirmed
// by the independent enumerator.
// ---------------------------------------------------------------------------
void criterion_5() {
  const std::vector<GrowthFunction> F = {
      {0, 1, 2, 3, 4}, {1, 2, 3, 5, 8}, {2, 3, 5, 6, 7}, {0, 2, 4, 6, 8}};
  ArrayFamily fam;
  for (const auto& f : F) fam.members.push_back(make_af(f, 8));
  for (const auto& f : F)
    for (const auto& h : F) fam.members.push_back(cmp_array(make_af(f, 8), make_af(h, 8)));

  QuantMode mode;
  mode.q = 3;
  mode.e = 0;
  SearchBudget budget(2'000'000'000ull);
  const auto mine = find_finite_tau_diagonalizer(fam, mode, 2, budget);
  const auto naive = oracles::naive_finite_tau_diag(fam, 3, 0, 2);

  const bool searches_agree = mine.witness.has_value() == naive.has_value() &&
                              (!mine.witness || mine.witness->windows == *naive);
  bool witness_valid = true;
  if (mine.witness) witness_valid = is_finitely_tau_diagonalized_by(fam, *mine.witness, mode);

  std::ostringstream detail;
  const bool pass = searches_agree && witness_valid && !mine.witness.has_value();
  if (mine.witness) {
    detail << "search returns a witness (";
    for (std::size_t r = 0; r < mine.witness->windows.size(); ++r) {
      detail << (r ? " " : "") << "{";
      for (std::size_t i = 0; i < mine.witness->windows[r].size(); ++i)
        detail << (i ? "," : "") << mine.witness->windows[r][i];
      detail << "}";
    }
    detail << "), re-validated=" << (witness_valid ? "yes" : "no")
           << ", enumerator agrees=" << (searches_agree ? "yes" : "no")
           << "; the expected empty result is unattainable: every admissible instance keeps "
              "all generators at or below column 7 on the first four rows, so the single "
              "column-7 window family always qualifies";
  } else {
    detail << "no witness, confirmed by the independent enumerator";
  }
  report(5, pass, detail.str());
}

// ---------------------------------------------------------------------------
// 6. Transfer round trips.
// ---------------------------------------------------------------------------
void criterion_6() {
  std::mt19937 rng(606);
  int embed_ok = 0, embed_ran = 0;
  while (embed_ran < 100) {
    const int N = 1 + static_cast<int>(rng() % 3);
    FSeqFamily fam;
    fam.f.assign(N, 0);
    for (auto& v : fam.f) v = 2 + static_cast<int>(rng() % 2);
    const int M = 1 + static_cast<int>(rng() % 3);
    for (int m = 0; m < M; ++m) {
      FSequence seq;
      seq.f = fam.f;
      seq.slots.resize(N);
      for (int n = 0; n < N; ++n)
        for (int v = 0; v < fam.f[n]; ++v)
          if (rng() % 2) seq.slots[n].push_back(v);
      fam.members.push_back(seq);
    }
    ++embed_ran;
    std::vector<std::vector<int>> partition;
    for (int k = 0; k < N; ++k) partition.push_back({k});
    const EmbedResult emb = embed_fseq_as_tau_family(fam, partition);
    SearchBudget b1(10'000'000), b2(10'000'000);
    const auto slot_wit = find_fseq_o_diag(fam, b1);
    const auto row_wit = find_o_diagonalizer(emb.family, ODiagVariant::Basic, 1, b2);
    bool good = slot_wit.has_value() == row_wit.witness.has_value();
    if (good && slot_wit) {
      good = is_o_diagonalized_by(emb.family, emb.to_row_choice(*slot_wit));
      const auto h = emb.to_slot_choice(*row_wit.witness);
      for (const auto& mem : fam.members) {
        bool hit = false;
        for (int k = 0; k < N && !hit; ++k)
          hit = std::find(mem.slots[k].begin(), mem.slots[k].end(), h[k]) != mem.slots[k].end();
        good = good && hit;
      }
    }
    embed_ok += good;
  }

  int lift_ok = 0, lift_ran = 0;
  while (lift_ran < 100) {
    const int R = 2 + static_cast<int>(rng() % 2);
    const int C = 4 + static_cast<int>(rng() % 2);
    ArrayFamily fam;
    const int M = 1 + static_cast<int>(rng() % 3);
    for (int m = 0; m < M; ++m) {
      BinaryArray a = BinaryArray::filled(R, C, 0, 0);
      for (int n = 0; n < R; ++n)
        for (int c = 0; c < C; ++c) a.bits[n][c] = rng() % 3 ? 1 : 0;
      fam.members.push_back(a);
    }
    WindowSystem wins;
    wins.windows.resize(R);
    for (int n = 0; n < R; ++n) {
      const int a = static_cast<int>(rng() % C);
      int b = static_cast<int>(rng() % C);
      while (b == a) b = static_cast<int>(rng() % C);
      wins.windows[n] = {std::min(a, b), std::max(a, b)};
    }
    const ReduceResult red = reduce_tau_to_fseq(fam, wins);
    SearchBudget budget(10'000'000);
    const auto g = find_fseq_o_diag(red.family, budget);
    if (!g) continue;  // only instances with a slot witness exercise the lift
    ++lift_ran;
    lift_ok += is_o_diagonalized_by(fam, red.lift(*g)) ? 1 : 0;
  }

  const bool ok = embed_ok == 100 && lift_ok == 100;
  std::ostringstream detail;
  detail << "embedding " << embed_ok << "/100, lift " << lift_ok << "/100";
  report(6, ok, detail.str());
}

// ---------------------------------------------------------------------------
// 7. Cover-selection / window-search bridge.
// ---------------------------------------------------------------------------
void criterion_7() {
  std::mt19937 rng(707);
  int agree = 0;
  const int total = 50;
  std::ostringstream detail;
  for (int it = 0; it < total; ++it) {
    const int ground = 2 + static_cast<int>(rng() % 3);
    const int ncov = 2 + static_cast<int>(rng() % 2);
    const FiniteBudget fb{2, 1, 1};
    std::vector<CoverSystem> covers;
    for (int c = 0; c < ncov; ++c) {
      while (true) {
        CoverSystem cs;
        cs.ground_size = ground;
        const int nsets = 2 + static_cast<int>(rng() % 3);
        cs.sets.resize(nsets);
        for (auto& s : cs.sets)
          for (int x = 0; x < ground; ++x)
            if (rng() % 10 < 8) s.push_back(x);
        if (classify_cover(cs, fb).is_gamma) {
          covers.push_back(cs);
          break;
        }
      }
    }
    SearchBudget b1(10'000'000);
    const bool selection = check_selection(Principle::Sfin, CoverKind::Gamma, CoverKind::Tau,
                                           covers, fb, 2, b1)
                               .has_value();
    const PsiImage img = psi_image(ground, covers);
    QuantMode mode;
    mode.q = 2;
    mode.e = 1;
    SearchBudget b2(10'000'000);
    const bool windows =
        find_finite_tau_diagonalizer(img.family, mode, 2, b2).witness.has_value();
    if (selection == windows)
      ++agree;
    else
      detail << "instance " << it << ": selection=" << selection << " windows=" << windows
             << "; ";
  }
  detail << agree << "/" << total << " agree";
  report(7, agree == total, detail.str());
}

// ---------------------------------------------------------------------------
// 8. Engine and search property suite.
// ---------------------------------------------------------------------------
void criterion_8() {
  bool ok = true;
  std::ostringstream detail;

  // Closure idempotence and no-contradiction over 500 random sound diagrams.
  std::mt19937 rng(808);
  int dag_pass = 0;
  for (int it = 0; it < 500; ++it) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const int atom_count = 2 + static_cast<int>(rng() % 4);
    std::vector<std::string> atoms;
    for (int a = 0; a < atom_count; ++a) atoms.push_back("a" + std::to_string(a));
    std::vector<int> non_idx(n);
    for (auto& v : non_idx) v = static_cast<int>(rng() % atom_count);

    const auto build = [&](const PriorFacts& prior) {
      DiagramBundle bundle(atoms);
      for (int i = 0; i < n; ++i) {
        PropertyNode node;
        node.serial = i;
        node.name = "P" + std::to_string(i);
        node.non_expr = atoms[non_idx[i]];
        node.non_id = bundle.kb.intern(node.non_expr);
        bundle.nodes.push_back(node);
      }
      std::mt19937 rng_facts(900 + it);
      for (int a = 0; a < atom_count; ++a)
        for (int b = a + 1; b < atom_count; ++b) {
          if (rng_facts() % 2) bundle.kb.add_le(atoms[a], atoms[b], "gen");
          if (rng_facts() % 3 == 0) bundle.kb.add_lt(atoms[a], atoms[b], "gen");
        }
      std::mt19937 rng_edges(1900 + it);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && non_idx[i] <= non_idx[j] && rng_edges() % 3 == 0)
            bundle.edges.emplace_back(i, j);
      bundle.prior = prior;
      return bundle;
    };

    try {
      DiagramBundle bundle = build(PriorFacts::all_open(n));
      RelationMatrix m1 = compute_matrix(bundle);
      DiagramBundle again = build(PriorFacts{n, m1.cells});
      RelationMatrix m2 = compute_matrix(again);
      bool good = m1.cells == m2.cells;  // idempotence
      for (std::size_t c = 0; c < m1.cells.size() && good; ++c)
        good = !(m1.cells[c] == Cell::Implies && m2.cells[c] == Cell::NotImplies);
      // Monotonicity: one extra prior fact never removes derivations.
      DiagramBundle richer = build(PriorFacts::all_open(n));
      for (std::size_t c = 0; c < m1.cells.size(); ++c)
        if (m1.cells[c] != Cell::Open) {
          richer.prior.cells[c] = m1.cells[c];
          break;
        }
      RelationMatrix m3 = compute_matrix(richer);
      for (std::size_t c = 0; c < m1.cells.size() && good; ++c)
        if (m1.cells[c] != Cell::Open) good = m3.cells[c] == m1.cells[c];
      dag_pass += good;
    } catch (const EngineContradiction&) {
      // sound instances must not abort
    }
  }
  if (dag_pass != 500) {
    ok = false;
    detail << "diagram properties " << dag_pass << "/500; ";
  } else {
    detail << "diagram properties 500/500; ";
  }

  // Specialization invariant: singleton windows match the plain diagonalizer.
  std::mt19937 rng2(809);
  int spec_pass = 0;
  for (int it = 0; it < 200; ++it) {
    const int R = 2 + static_cast<int>(rng2() % 2);
    const int C = 3;
    ArrayFamily fam;
    const int M = 1 + static_cast<int>(rng2() % 3);
    for (int m = 0; m < M; ++m) {
      BinaryArray a = BinaryArray::filled(R, C, 0, 0);
      for (int n = 0; n < R; ++n) {
        for (int c = 0; c < C; ++c) a.bits[n][c] = rng2() % 2;
        a.tail[n] = rng2() % 4 == 0;
      }
      fam.members.push_back(a);
    }
    std::vector<int> g(R);
    for (auto& v : g) v = static_cast<int>(rng2() % (C + 1));
    const Diagonalizer d{g, true};
    QuantMode mode;
    mode.q = 1 + static_cast<int>(rng2() % 3);
    mode.e = static_cast<int>(rng2() % 2);
    spec_pass += is_tau_diagonalized_by(fam, d, mode) ==
                         is_finitely_tau_diagonalized_by(fam, singleton_windows(d), mode)
                     ? 1
                     : 0;
  }
  if (spec_pass != 200) {
    ok = false;
    detail << "specialization " << spec_pass << "/200";
  } else {
    detail << "specialization 200/200";
  }
  report(8, ok, detail.str());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail")
            << "\n";
  return failures;
}
