#pragma once

// Deduction engine over a property diagram: reflexive-transitive implication
// closure, a cardinal-characteristic knowledge base closed under order rules,
// the cardinality rule (a consistent strict inequality between critical
// values refutes an implication), and non-implication propagation — with a
// replayable proof trace per derived cell.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "taulab/search.hpp"

namespace taulab {

// ---------------------------------------------------------------------------
// Cardinal expressions: atoms plus binary min/max, interned by canonical text.
// ---------------------------------------------------------------------------
class ExprTable {
 public:
  explicit ExprTable(std::vector<std::string> atoms);

  int intern(const std::string& text);  // parses; InputError on unknown atoms
  const std::string& text(int id) const { return texts_[id]; }
  int size() const { return static_cast<int>(texts_.size()); }

  // op: 0 atom, 1 min, 2 max
  struct Parts {
    int op = 0;
    int lhs = -1;
    int rhs = -1;
  };
  const Parts& parts(int id) const { return parts_[id]; }

 private:
  std::set<std::string> atoms_;
  std::vector<std::string> texts_;
  std::vector<Parts> parts_;
  std::map<std::string, int> index_;
};

// ---------------------------------------------------------------------------
// Knowledge base: ZFC-provable "a <= b" facts and consistent "a < b" facts,
// closed under reflexivity, transitivity, min/max axioms and congruence, and
// the mixed rules  con(a<b) & b<=c  =>  con(a<c),  c<=a & con(a<b) => con(c<b).
// Every derived fact keeps its rule and antecedents for trace rendering.
// ---------------------------------------------------------------------------
class CardinalKB {
 public:
  explicit CardinalKB(std::vector<std::string> atoms);

  int intern(const std::string& expr) { return exprs_.intern(expr); }
  const ExprTable& exprs() const { return exprs_; }

  void add_le(const std::string& a, const std::string& b, const std::string& why);
  void add_lt(const std::string& a, const std::string& b, const std::string& why);

  // Fixpoint closure; InputError-free, throws EngineContradiction when some
  // con(a < a) becomes derivable.
  void close();
  bool closed() const { return closed_; }

  bool le(int a, int b) const;
  bool lt(int a, int b) const;
  bool le(const std::string& a, const std::string& b);
  bool lt(const std::string& a, const std::string& b);

  // One-line derivation of a fact, expanding antecedents depth-first, e.g.
  // "con(od<b) [from od<=theta_star; con(theta_star<b)]".
  std::string derivation(bool strict, int a, int b) const;
  // All recorded justifications of the fact (closure keeps the alternates it
  // encounters, up to a small bound), joined into one line.
  std::string derivation_all(bool strict, int a, int b) const;

  std::size_t le_count() const { return le_.size(); }
  std::size_t lt_count() const { return lt_.size(); }

 private:
  struct Just {
    std::string rule;                           // "axiom" or closure rule name
    std::string why;                            // provenance for axioms
    std::vector<std::pair<bool, std::pair<int, int>>> parents;
  };
  using Key = std::pair<int, int>;

  bool add_fact(bool strict, int a, int b, Just j);
  std::string render(bool strict, Key k, int depth, std::size_t which) const;

  ExprTable exprs_;
  std::map<Key, std::vector<Just>> le_, lt_;
  bool closed_ = false;
};

// ---------------------------------------------------------------------------
// Diagram structures.
// ---------------------------------------------------------------------------
struct PropertyNode {
  int serial = 0;
  std::string operator_name;  // S1 / Sfin / Ufin
  std::string source_class;   // Gamma / Tau / Omega / O
  std::string target_class;
  std::string name;
  std::string non_expr;   // critical cardinality, canonical text
  bool non_is_new = false;

  int non_id = -1;  // interned against the bundle KB on load
};

enum class Cell : char { Implies = '+', NotImplies = '-', Open = '?' };

struct TraceStep {
  std::string rule;                   // Diagonal-Axiom | Axiom-Edge | Prior-Fact |
                                      // Transitivity | Cardinality-Rule |
                                      // NonImpl-Propagation
  std::vector<std::string> premises;  // "+(i,j)", "-(i,j)", "edge(i,j)",
                                      // "prior(+,i,j)", "con(a<b)", "non(i)=expr"
  std::string conclusion;             // "+(i,j)" or "-(i,j)"
  std::string note;                   // human-oriented detail
};

struct RelationMatrix {
  int n = 0;
  std::vector<Cell> cells;                    // row-major
  std::vector<std::vector<TraceStep>> traces; // per cell, in derivation order
  std::set<std::pair<int, int>> framed;       // derived, not among prior facts
  std::vector<std::string> warnings;          // e.g. failed monotonicity sanity

  Cell at(int i, int j) const { return cells[i * n + j]; }
  const std::vector<TraceStep>& trace(int i, int j) const { return traces[i * n + j]; }
  int count(Cell c) const;
};

// Prior knowledge: cell states known before the engine runs (imported as
// axioms). Open cells carry no information.
struct PriorFacts {
  int n = 0;
  std::vector<Cell> cells;  // row-major; Open = unknown

  Cell at(int i, int j) const { return cells[i * n + j]; }
  static PriorFacts all_open(int n);
};

struct DiagramBundle {
  std::vector<PropertyNode> nodes;
  std::vector<std::pair<int, int>> edges;
  CardinalKB kb;
  PriorFacts prior;

  explicit DiagramBundle(std::vector<std::string> atoms) : kb(std::move(atoms)) {}
};

// ---------------------------------------------------------------------------
// Engine operations.
// ---------------------------------------------------------------------------

// Reflexive-transitive closure of the arrow set over n nodes.
std::vector<std::vector<bool>> close_implications(int n,
                                                  const std::vector<std::pair<int, int>>& edges);

struct DerivedNonImplication {
  int from = 0, to = 0;  // NotImplies(from, to)
  TraceStep step;
};

// For every ordered pair (P,Q) with con(non(P) < non(Q)) derivable:
// Q does not imply P. Requires a closed KB.
std::vector<DerivedNonImplication> apply_cardinality_rule(const std::vector<PropertyNode>& nodes,
                                                          const CardinalKB& kb);

// Fixpoint of NotImplies(A,B) & Implies(A,C) & Implies(D,B) => NotImplies(C,D)
// over a closed implication relation. Returns the enlarged set; each newly
// derived pair comes with its propagation step.
std::set<std::pair<int, int>> propagate_nonimplications(
    const std::vector<std::vector<bool>>& implies, std::set<std::pair<int, int>> not_implies,
    std::vector<DerivedNonImplication>* steps = nullptr);

// Full run: close KB, sanity-check edge monotonicity of critical values,
// close implications over edges + prior, seed non-implications from priors
// and the cardinality rule, propagate to fixpoint, attach traces.
// Throws EngineContradiction if some cell derives both ways.
RelationMatrix compute_matrix(DiagramBundle& bundle);

std::string explain(const RelationMatrix& m, int i, int j);

struct CellDiff {
  int i = 0, j = 0;
  Cell computed = Cell::Open;
  Cell reference = Cell::Open;
};
std::vector<CellDiff> compare_to_table(const RelationMatrix& m, const PriorFacts& reference);

// ---------------------------------------------------------------------------
// Bundle I/O.
// ---------------------------------------------------------------------------

// Parse figure1.json / kb.json / table2.grid / framed.grid contents. The
// prior-facts matrix is the reference table with every framed cell blanked to
// Open (reconstructing the pre-existing state of knowledge).
struct LoadedBundle {
  DiagramBundle bundle;
  PriorFacts reference;                      // full reference table
  std::set<std::pair<int, int>> framed_ref;  // reference framed mask

  LoadedBundle(std::vector<std::string> atoms) : bundle(std::move(atoms)) {}
};
LoadedBundle load_bundle(const std::string& figure1_json, const std::string& kb_json,
                         const std::string& table_grid, const std::string& framed_grid);

// Built-in copies of the bundled data files (kept byte-identical to data/).
const std::string& bundled_figure1_json();
const std::string& bundled_kb_json();
const std::string& bundled_table2_grid();
const std::string& bundled_framed_grid();

// Grid text <-> matrix helpers ('+', '-', '?' cells; 'X'/'.' framed mask).
PriorFacts parse_grid(const std::string& text);
std::string grid_to_text(const PriorFacts& grid);
std::set<std::pair<int, int>> parse_framed_mask(const std::string& text, int n);

// Table rendering: TSV (header row of serials, one row per property, cells
// as check / cross / question glyphs) and JSON (nested arrays). Both render
// byte-deterministically; parse_table inverts emit_table for both formats.
std::string emit_table(const RelationMatrix& m, const std::string& format);
PriorFacts parse_table(const std::string& text, const std::string& format);

}  // namespace taulab
