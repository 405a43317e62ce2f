#include "taulab/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace taulab {

// ---------------------------------------------------------------------------
// Cardinal expressions
// ---------------------------------------------------------------------------

ExprTable::ExprTable(std::vector<std::string> atoms)
    : atoms_(atoms.begin(), atoms.end()) {}

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t') out.push_back(c);
  return out;
}

}  // namespace

int ExprTable::intern(const std::string& raw) {
  const std::string text = strip_spaces(raw);
  if (text.empty()) throw InputError("cardinal expression: empty");
  auto it = index_.find(text);
  if (it != index_.end()) return it->second;

  Parts parts;
  if (text.rfind("min(", 0) == 0 || text.rfind("max(", 0) == 0) {
    if (text.back() != ')') throw InputError("cardinal expression: missing ')': " + text);
    const std::string inner = text.substr(4, text.size() - 5);
    int depth = 0;
    std::size_t comma = std::string::npos;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        comma = i;
        break;
      }
    }
    if (comma == std::string::npos)
      throw InputError("cardinal expression: expected two arguments: " + text);
    parts.op = text[1] == 'i' ? 1 : 2;
    parts.lhs = intern(inner.substr(0, comma));
    parts.rhs = intern(inner.substr(comma + 1));
  } else {
    if (!atoms_.count(text))
      throw InputError("cardinal expression: unknown atom '" + text + "'");
    parts.op = 0;
  }
  const int id = static_cast<int>(texts_.size());
  texts_.push_back(text);
  parts_.push_back(parts);
  index_[text] = id;
  return id;
}

// ---------------------------------------------------------------------------
// Knowledge base
// ---------------------------------------------------------------------------

CardinalKB::CardinalKB(std::vector<std::string> atoms) : exprs_(std::move(atoms)) {}

void CardinalKB::add_le(const std::string& a, const std::string& b, const std::string& why) {
  if (closed_) throw InputError("kb: cannot add facts after closure");
  Just j;
  j.rule = "axiom";
  j.why = why;
  add_fact(false, exprs_.intern(a), exprs_.intern(b), std::move(j));
}

void CardinalKB::add_lt(const std::string& a, const std::string& b, const std::string& why) {
  if (closed_) throw InputError("kb: cannot add facts after closure");
  Just j;
  j.rule = "axiom";
  j.why = why;
  add_fact(true, exprs_.intern(a), exprs_.intern(b), std::move(j));
}

bool CardinalKB::add_fact(bool strict, int a, int b, Just j) {
  auto& table = strict ? lt_ : le_;
  const Key k{a, b};
  auto it = table.find(k);
  if (it == table.end()) {
    table.emplace(k, std::vector<Just>{std::move(j)});
    return true;
  }
  // Keep a few distinct alternate justifications; they do not constitute new
  // facts, so they never drive the closure loop. Alternates that cite the
  // fact itself as a parent say nothing and are dropped.
  if (it->second.size() < 4) {
    for (const auto& parent : j.parents)
      if (parent.first == strict && parent.second == k) return false;
    for (const auto& have : it->second)
      if (have.rule == j.rule && have.parents == j.parents && have.why == j.why) return false;
    it->second.push_back(std::move(j));
  }
  return false;
}

void CardinalKB::close() {
  if (closed_) return;
  bool changed = true;
  while (changed) {
    changed = false;
    const int n = exprs_.size();
    for (int e = 0; e < n; ++e)
      changed |= add_fact(false, e, e, Just{"reflexivity", "", {}});
    for (int e = 0; e < n; ++e) {
      const auto& p = exprs_.parts(e);
      if (p.op == 1) {
        changed |= add_fact(false, e, p.lhs, Just{"min-axiom", "", {}});
        changed |= add_fact(false, e, p.rhs, Just{"min-axiom", "", {}});
      } else if (p.op == 2) {
        changed |= add_fact(false, p.lhs, e, Just{"max-axiom", "", {}});
        changed |= add_fact(false, p.rhs, e, Just{"max-axiom", "", {}});
      }
    }
    // transitivity (snapshot keys to keep iteration stable while inserting)
    std::vector<Key> le_keys;
    le_keys.reserve(le_.size());
    for (const auto& [k, _] : le_) le_keys.push_back(k);
    for (const auto& [a, b] : le_keys)
      for (const auto& [c, d] : le_keys)
        if (b == c && a != d)
          changed |= add_fact(false, a, d,
                              Just{"transitivity", "", {{false, {a, b}}, {false, {c, d}}}});
    // congruence into min / out of max
    for (int e = 0; e < n; ++e) {
      const auto& p = exprs_.parts(e);
      if (p.op == 1) {
        for (int c = 0; c < n; ++c)
          if (le(c, p.lhs) && le(c, p.rhs))
            changed |= add_fact(false, c, e,
                                Just{"min-congruence", "",
                                     {{false, {c, p.lhs}}, {false, {c, p.rhs}}}});
      } else if (p.op == 2) {
        for (int c = 0; c < n; ++c)
          if (le(p.lhs, c) && le(p.rhs, c))
            changed |= add_fact(false, e, c,
                                Just{"max-congruence", "",
                                     {{false, {p.lhs, c}}, {false, {p.rhs, c}}}});
      }
    }
    // con(a<b) & b<=c  =>  con(a<c);   c<=a & con(a<b)  =>  con(c<b)
    std::vector<Key> lt_keys;
    lt_keys.reserve(lt_.size());
    for (const auto& [k, _] : lt_) lt_keys.push_back(k);
    for (const auto& [a, b] : lt_keys) {
      for (const auto& [c, d] : le_keys) {
        if (c == b)
          changed |= add_fact(true, a, d,
                              Just{"lt-le", "", {{true, {a, b}}, {false, {c, d}}}});
        if (d == a)
          changed |= add_fact(true, c, b,
                              Just{"le-lt", "", {{false, {c, d}}, {true, {a, b}}}});
      }
    }
  }
  for (const auto& [k, _] : lt_)
    if (k.first == k.second)
      throw EngineContradiction("kb contradiction: con(" + exprs_.text(k.first) + " < " +
                                    exprs_.text(k.first) + ") derivable",
                                derivation(true, k.first, k.second), "");
  closed_ = true;
}

bool CardinalKB::le(int a, int b) const { return le_.count({a, b}) > 0; }
bool CardinalKB::lt(int a, int b) const { return lt_.count({a, b}) > 0; }
bool CardinalKB::le(const std::string& a, const std::string& b) {
  return le(exprs_.intern(a), exprs_.intern(b));
}
bool CardinalKB::lt(const std::string& a, const std::string& b) {
  return lt(exprs_.intern(a), exprs_.intern(b));
}

std::string CardinalKB::render(bool strict, Key k, int depth, std::size_t which) const {
  const auto& table = strict ? lt_ : le_;
  const auto it = table.find(k);
  const std::string head = (strict ? "con(" : "") + exprs_.text(k.first) +
                           (strict ? " < " : " <= ") + exprs_.text(k.second) +
                           (strict ? ")" : "");
  if (it == table.end() || it->second.size() <= which) return head + " [UNDERIVED]";
  const Just& j = it->second[which];
  if (j.rule == "axiom") return head + " [" + j.why + "]";
  if (depth <= 0 || j.parents.empty()) return head + " (" + j.rule + ")";
  std::string out = head + " (" + j.rule + ": ";
  for (std::size_t i = 0; i < j.parents.size(); ++i) {
    if (i) out += "; ";
    out += render(j.parents[i].first, j.parents[i].second, depth - 1, 0);
  }
  return out + ")";
}

std::string CardinalKB::derivation(bool strict, int a, int b) const {
  return render(strict, {a, b}, 6, 0);
}

std::string CardinalKB::derivation_all(bool strict, int a, int b) const {
  const auto& table = strict ? lt_ : le_;
  const auto it = table.find({a, b});
  if (it == table.end()) return render(strict, {a, b}, 6, 0);
  std::string out;
  for (std::size_t which = 0; which < it->second.size(); ++which) {
    if (which) out += " | also: ";
    out += render(strict, {a, b}, 6, which);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Engine
// ---------------------------------------------------------------------------

int RelationMatrix::count(Cell c) const {
  return static_cast<int>(std::count(cells.begin(), cells.end(), c));
}

PriorFacts PriorFacts::all_open(int n) {
  PriorFacts p;
  p.n = n;
  p.cells.assign(static_cast<std::size_t>(n) * n, Cell::Open);
  return p;
}

std::vector<std::vector<bool>> close_implications(int n,
                                                  const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) reach[i][i] = true;
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw InputError("edge endpoint out of range");
    reach[a][b] = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        if (!reach[i][k]) continue;
        for (int j = 0; j < n; ++j)
          if (reach[k][j] && !reach[i][j]) {
            reach[i][j] = true;
            changed = true;
          }
      }
  }
  return reach;
}

namespace {

std::string cell_ref(char sign, int i, int j) {
  return std::string(1, sign) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

std::vector<DerivedNonImplication> apply_cardinality_rule(const std::vector<PropertyNode>& nodes,
                                                          const CardinalKB& kb) {
  if (!kb.closed()) throw InputError("cardinality rule requires a closed kb");
  std::vector<DerivedNonImplication> out;
  for (const auto& p : nodes)
    for (const auto& q : nodes) {
      if (p.serial == q.serial) continue;
      if (!kb.lt(p.non_id, q.non_id)) continue;
      DerivedNonImplication d;
      d.from = q.serial;
      d.to = p.serial;
      d.step.rule = "Cardinality-Rule";
      d.step.premises = {"non(" + std::to_string(p.serial) + ")=" + p.non_expr,
                         "non(" + std::to_string(q.serial) + ")=" + q.non_expr,
                         "con(" + p.non_expr + "<" + q.non_expr + ")"};
      d.step.conclusion = cell_ref('-', q.serial, p.serial);
      d.step.note = "a property with consistently smaller critical value cannot follow: " +
                    kb.derivation_all(true, p.non_id, q.non_id);
      out.push_back(std::move(d));
    }
  return out;
}

std::set<std::pair<int, int>> propagate_nonimplications(
    const std::vector<std::vector<bool>>& implies, std::set<std::pair<int, int>> not_implies,
    std::vector<DerivedNonImplication>* steps) {
  const int n = static_cast<int>(implies.size());
  for (const auto& [a, b] : not_implies)
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw InputError("propagation: pair out of range");
  bool changed = true;
  while (changed) {
    changed = false;
    // Snapshot to keep the scan order deterministic while inserting.
    const std::set<std::pair<int, int>> snapshot = not_implies;
    for (const auto& [a, b] : snapshot)
      for (int c = 0; c < n; ++c) {
        if (!implies[a][c]) continue;
        for (int d = 0; d < n; ++d) {
          if (!implies[d][b] || not_implies.count({c, d})) continue;
          not_implies.insert({c, d});
          if (steps) {
            DerivedNonImplication derived;
            derived.from = c;
            derived.to = d;
            derived.step.rule = "NonImpl-Propagation";
            derived.step.premises = {cell_ref('-', a, b), cell_ref('+', a, c),
                                     cell_ref('+', d, b)};
            derived.step.conclusion = cell_ref('-', c, d);
            derived.step.note = "otherwise " + std::to_string(a) + " would imply " +
                                std::to_string(b);
            steps->push_back(std::move(derived));
          }
          changed = true;
        }
      }
  }
  return not_implies;
}

RelationMatrix compute_matrix(DiagramBundle& bundle) {
  const int n = static_cast<int>(bundle.nodes.size());
  for (int i = 0; i < n; ++i)
    if (bundle.nodes[i].serial != i)
      throw InputError("nodes must be listed by serial 0..n-1");
  if (bundle.prior.n != n) throw InputError("prior facts size mismatch");

  bundle.kb.close();

  RelationMatrix m;
  m.n = n;
  m.cells.assign(static_cast<std::size_t>(n) * n, Cell::Open);
  m.traces.assign(static_cast<std::size_t>(n) * n, {});

  // Monotonicity sanity: critical values must not drop along an implication.
  for (const auto& [a, b] : bundle.edges)
    if (!bundle.kb.le(bundle.nodes[a].non_id, bundle.nodes[b].non_id))
      m.warnings.push_back("edge " + std::to_string(a) + "->" + std::to_string(b) +
                           ": kb does not entail non(" + bundle.nodes[a].non_expr +
                           ") <= non(" + bundle.nodes[b].non_expr + ")");

  const auto cell_index = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };

  // --- positive side: diagonal + arrows + prior facts, then transitivity ---
  std::vector<std::vector<bool>> imp(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    imp[i][i] = true;
    m.traces[cell_index(i, i)].push_back(
        {"Diagonal-Axiom", {}, cell_ref('+', i, i), "diagonal axiom: every property implies itself"});
  }
  for (const auto& [a, b] : bundle.edges) {
    if (!imp[a][b]) {
      imp[a][b] = true;
      m.traces[cell_index(a, b)].push_back(
          {"Axiom-Edge", {"edge(" + std::to_string(a) + "," + std::to_string(b) + ")"},
           cell_ref('+', a, b), "arrow of the diagram"});
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (bundle.prior.at(i, j) == Cell::Implies && !imp[i][j]) {
        imp[i][j] = true;
        m.traces[cell_index(i, j)].push_back(
            {"Prior-Fact", {"prior(+," + std::to_string(i) + "," + std::to_string(j) + ")"},
             cell_ref('+', i, j), "imported prior fact"});
      }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (imp[i][j]) continue;
        for (int k = 0; k < n; ++k)
          if (imp[i][k] && imp[k][j]) {
            imp[i][j] = true;
            m.traces[cell_index(i, j)].push_back(
                {"Transitivity", {cell_ref('+', i, k), cell_ref('+', k, j)},
                 cell_ref('+', i, j), ""});
            changed = true;
            break;
          }
      }
  }

  // --- negative side: priors + cardinality rule, then propagation ----------
  std::vector<std::vector<bool>> nimp(n, std::vector<bool>(n, false));
  const auto conflict = [&](int i, int j) {
    throw EngineContradiction(
        "cell (" + std::to_string(i) + "," + std::to_string(j) + ") derived both ways",
        explain(m, i, j), explain(m, i, j));
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (bundle.prior.at(i, j) == Cell::NotImplies) {
        nimp[i][j] = true;
        m.traces[cell_index(i, j)].push_back(
            {"Prior-Fact", {"prior(-," + std::to_string(i) + "," + std::to_string(j) + ")"},
             cell_ref('-', i, j), "imported prior fact"});
        if (imp[i][j]) conflict(i, j);
      }
  for (auto& d : apply_cardinality_rule(bundle.nodes, bundle.kb)) {
    const auto idx = cell_index(d.from, d.to);
    const bool fresh = !nimp[d.from][d.to];
    nimp[d.from][d.to] = true;
    // Keep the rule application in the trace even when the cell was already
    // known: the two derivations are independently replayable.
    bool dup = false;
    for (const auto& st : m.traces[idx])
      if (st.rule == d.step.rule && st.premises == d.step.premises) dup = true;
    if (!dup) m.traces[idx].push_back(d.step);
    if (fresh && imp[d.from][d.to]) conflict(d.from, d.to);
  }
  std::set<std::pair<int, int>> nimp_seed;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (nimp[i][j]) nimp_seed.insert({i, j});
  std::vector<DerivedNonImplication> propagated;
  propagate_nonimplications(imp, std::move(nimp_seed), &propagated);
  for (auto& d : propagated) {
    nimp[d.from][d.to] = true;
    m.traces[cell_index(d.from, d.to)].push_back(d.step);
    if (imp[d.from][d.to]) conflict(d.from, d.to);
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (imp[i][j] && nimp[i][j]) conflict(i, j);
      m.cells[cell_index(i, j)] =
          imp[i][j] ? Cell::Implies : (nimp[i][j] ? Cell::NotImplies : Cell::Open);
      if (nimp[i][j] && bundle.prior.at(i, j) != Cell::NotImplies) m.framed.insert({i, j});
      if (imp[i][j] && bundle.prior.at(i, j) == Cell::NotImplies) conflict(i, j);
    }
  return m;
}

std::string explain(const RelationMatrix& m, int i, int j) {
  if (i < 0 || i >= m.n || j < 0 || j >= m.n) throw InputError("explain: serial out of range");
  std::ostringstream out;
  const Cell c = m.at(i, j);
  out << "cell (" << i << "," << j << "): "
      << (c == Cell::Implies ? "Implies" : c == Cell::NotImplies ? "NotImplies" : "Open")
      << "\n";
  if (m.framed.count({i, j})) out << "  newly settled by this run\n";
  for (const auto& st : m.trace(i, j)) {
    out << "  " << st.rule << ": ";
    for (std::size_t p = 0; p < st.premises.size(); ++p)
      out << (p ? ", " : "") << st.premises[p];
    out << " => " << st.conclusion;
    if (!st.note.empty()) out << "  -- " << st.note;
    out << "\n";
  }
  if (m.trace(i, j).empty()) out << "  no derivation: the question is open\n";
  return out.str();
}

std::vector<CellDiff> compare_to_table(const RelationMatrix& m, const PriorFacts& reference) {
  if (reference.n != m.n) throw InputError("compare: size mismatch");
  std::vector<CellDiff> out;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (m.at(i, j) != reference.at(i, j))
        out.push_back({i, j, m.at(i, j), reference.at(i, j)});
  return out;
}

// ---------------------------------------------------------------------------
// Grids and tables
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty()) lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

}  // namespace

PriorFacts parse_grid(const std::string& text) {
  const auto lines = split_lines(text);
  const int n = static_cast<int>(lines.size());
  PriorFacts p;
  p.n = n;
  p.cells.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& line : lines) {
    if (static_cast<int>(line.size()) != n)
      throw InputError("grid: expected " + std::to_string(n) + " cells per line");
    for (char c : line) {
      if (c != '+' && c != '-' && c != '?') throw InputError("grid: cells must be + - ?");
      p.cells.push_back(static_cast<Cell>(c));
    }
  }
  return p;
}

std::string grid_to_text(const PriorFacts& grid) {
  std::string out;
  for (int i = 0; i < grid.n; ++i) {
    for (int j = 0; j < grid.n; ++j) out.push_back(static_cast<char>(grid.at(i, j)));
    out.push_back('\n');
  }
  return out;
}

std::set<std::pair<int, int>> parse_framed_mask(const std::string& text, int n) {
  const auto lines = split_lines(text);
  if (static_cast<int>(lines.size()) != n) throw InputError("framed mask: wrong line count");
  std::set<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(lines[i].size()) != n)
      throw InputError("framed mask: wrong line length");
    for (int j = 0; j < n; ++j) {
      if (lines[i][j] == 'X')
        out.insert({i, j});
      else if (lines[i][j] != '.')
        throw InputError("framed mask: cells must be X or .");
    }
  }
  return out;
}

namespace {

const char* kCheck = "✓";  // check mark
const char* kCross = "×";  // multiplication sign
const char* kOpenGlyph = "?";

std::string glyph(Cell c) {
  switch (c) {
    case Cell::Implies: return kCheck;
    case Cell::NotImplies: return kCross;
    case Cell::Open: return kOpenGlyph;
  }
  return "?";
}

}  // namespace

std::string emit_table(const RelationMatrix& m, const std::string& format) {
  if (format == "tsv") {
    std::ostringstream out;
    for (int j = 0; j < m.n; ++j) out << '\t' << j;
    out << '\n';
    for (int i = 0; i < m.n; ++i) {
      out << i;
      for (int j = 0; j < m.n; ++j) out << '\t' << glyph(m.at(i, j));
      out << '\n';
    }
    return out.str();
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["n"] = m.n;
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.n; ++i) {
      auto row = nlohmann::ordered_json::array();
      for (int jj = 0; jj < m.n; ++jj) row.push_back(std::string(1, static_cast<char>(m.at(i, jj))));
      rows.push_back(row);
    }
    j["cells"] = rows;
    return j.dump() + "\n";
  }
  throw InputError("emit_table: format must be tsv or json");
}

PriorFacts parse_table(const std::string& text, const std::string& format) {
  if (format == "json") {
    try {
      const auto j = nlohmann::ordered_json::parse(text);
      PriorFacts p;
      p.n = j.at("n").get<int>();
      for (const auto& row : j.at("cells"))
        for (const auto& cell : row) {
          const std::string s = cell.get<std::string>();
          if (s != "+" && s != "-" && s != "?") throw InputError("table json: bad cell");
          p.cells.push_back(static_cast<Cell>(s[0]));
        }
      if (p.cells.size() != static_cast<std::size_t>(p.n) * p.n)
        throw InputError("table json: wrong cell count");
      return p;
    } catch (const nlohmann::json::exception& ex) {
      throw InputError(std::string("table json: ") + ex.what());
    }
  }
  if (format == "tsv") {
    const auto lines = split_lines(text);
    if (lines.empty()) throw InputError("table tsv: empty");
    PriorFacts p;
    p.n = static_cast<int>(lines.size()) - 1;
    for (std::size_t li = 1; li < lines.size(); ++li) {
      std::vector<std::string> fields;
      std::string cur;
      for (char c : lines[li]) {
        if (c == '\t') {
          fields.push_back(cur);
          cur.clear();
        } else {
          cur.push_back(c);
        }
      }
      fields.push_back(cur);
      if (static_cast<int>(fields.size()) != p.n + 1)
        throw InputError("table tsv: wrong field count");
      for (int j = 1; j <= p.n; ++j) {
        const std::string& s = fields[j];
        if (s == kCheck)
          p.cells.push_back(Cell::Implies);
        else if (s == kCross)
          p.cells.push_back(Cell::NotImplies);
        else if (s == kOpenGlyph)
          p.cells.push_back(Cell::Open);
        else
          throw InputError("table tsv: bad cell '" + s + "'");
      }
    }
    return p;
  }
  throw InputError("parse_table: format must be tsv or json");
}

// ---------------------------------------------------------------------------
// Bundle loading
// ---------------------------------------------------------------------------

LoadedBundle load_bundle(const std::string& figure1_json, const std::string& kb_json,
                         const std::string& table_grid, const std::string& framed_grid) {
  nlohmann::ordered_json fig, kb;
  try {
    fig = nlohmann::ordered_json::parse(figure1_json);
    kb = nlohmann::ordered_json::parse(kb_json);
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("bundle: bad JSON: ") + ex.what());
  }

  std::vector<std::string> atoms;
  try {
    atoms = kb.at("atoms").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("bundle: kb atoms: ") + ex.what());
  }

  LoadedBundle lb(atoms);
  try {
    for (const auto& nj : fig.at("nodes")) {
      PropertyNode node;
      node.serial = nj.at("serial").get<int>();
      node.operator_name = nj.at("operator").get<std::string>();
      node.source_class = nj.at("source").get<std::string>();
      node.target_class = nj.at("target").get<std::string>();
      node.name = nj.at("name").get<std::string>();
      node.non_expr = nj.at("non").get<std::string>();
      node.non_is_new = nj.at("non_is_new").get<bool>();
      node.non_id = lb.bundle.kb.intern(node.non_expr);
      lb.bundle.nodes.push_back(std::move(node));
    }
    for (const auto& ej : fig.at("edges"))
      lb.bundle.edges.emplace_back(ej.at(0).get<int>(), ej.at(1).get<int>());
    for (const auto& fj : kb.at("provable_le"))
      lb.bundle.kb.add_le(fj.at("le").at(0).get<std::string>(),
                          fj.at("le").at(1).get<std::string>(),
                          fj.at("why").get<std::string>());
    for (const auto& fj : kb.at("con_lt"))
      lb.bundle.kb.add_lt(fj.at("lt").at(0).get<std::string>(),
                          fj.at("lt").at(1).get<std::string>(),
                          fj.at("why").get<std::string>());
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("bundle: ") + ex.what());
  }

  const int n = static_cast<int>(lb.bundle.nodes.size());
  lb.reference = parse_grid(table_grid);
  if (lb.reference.n != n) throw InputError("bundle: table size must match node count");
  lb.framed_ref = parse_framed_mask(framed_grid, n);

  // Prior knowledge = the reference table with the newly-settled cells
  // blanked back to Open.
  lb.bundle.prior = lb.reference;
  for (const auto& [i, j] : lb.framed_ref)
    lb.bundle.prior.cells[static_cast<std::size_t>(i) * n + j] = Cell::Open;
  return lb;
}

}  // namespace taulab
