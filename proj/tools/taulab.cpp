// taulab: one binary, four subcommand groups.
//   diagram — deduction engine over the bundled 22-property diagram
//   lab     — binary-array generators and diagonalizability searches
//   covers  — cover classification, point transforms, selection search
//   fseq    — slot-family searches, covering numbers, bridges
//
// Exit codes: 0 success / witness found; 2 usage or input error;
// 3 complete search found no witness; 4 verification diff nonempty;
// 5 search cap exceeded; 6 engine contradiction.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "taulab/covers.hpp"
#include "taulab/diag.hpp"
#include "taulab/diagram.hpp"
#include "taulab/fseq.hpp"
#include "taulab/search.hpp"

namespace {

using namespace taulab;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNoWitness = 3;
constexpr int kExitDiff = 4;
constexpr int kExitCap = 5;
constexpr int kExitContradiction = 6;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',' || c == ';') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  return out;
}

LoadedBundle load_bundle_from(const std::string& dir) {
  if (dir.empty())
    return load_bundle(bundled_figure1_json(), bundled_kb_json(), bundled_table2_grid(),
                       bundled_framed_grid());
  return load_bundle(slurp(dir + "/figure1.json"), slurp(dir + "/kb.json"),
                     slurp(dir + "/table2.grid"), slurp(dir + "/framed.grid"));
}

QuantMode make_mode(int q, int e, const std::string& col_mode, int em) {
  QuantMode mode;
  mode.q = q;
  mode.e = e;
  mode.col_exceptions = em;
  if (col_mode == "tail")
    mode.col_mode = ColumnMode::TailExact;
  else if (col_mode == "prefix")
    mode.col_mode = ColumnMode::PrefixBudget;
  else
    throw InputError("--col-mode must be tail or prefix");
  mode.validate();
  return mode;
}

CoverKind parse_kind(const std::string& s) {
  if (s == "o" || s == "cover") return CoverKind::Cover;
  if (s == "large") return CoverKind::Large;
  if (s == "omega" || s == "k") return CoverKind::KCover;
  if (s == "tau") return CoverKind::Tau;
  if (s == "gamma") return CoverKind::Gamma;
  throw InputError("cover kind must be one of: o large omega tau gamma");
}

template <typename T>
int emit_search(const SearchOutcome<T>& outcome, const std::function<std::string(const T&)>& dump) {
  if (outcome.space_warning)
    std::cerr << "warning: candidate space exceeds the evaluation cap; the search may abort\n";
  if (!outcome.witness) {
    std::cout << "{\"witness\":null}" << std::endl;
    return kExitNoWitness;
  }
  std::cout << dump(*outcome.witness) << std::endl;
  return kExitOk;
}

// ---------------------------------------------------------------------------

int run_diagram_table(const std::string& bundle_dir, const std::string& format) {
  LoadedBundle lb = load_bundle_from(bundle_dir);
  RelationMatrix m = compute_matrix(lb.bundle);
  for (const auto& w : m.warnings) std::cerr << "warning: " << w << "\n";
  std::cout << emit_table(m, format);
  return kExitOk;
}

int run_diagram_verify(const std::string& bundle_dir) {
  const auto started = std::chrono::steady_clock::now();
  LoadedBundle lb = load_bundle_from(bundle_dir);
  RelationMatrix m = compute_matrix(lb.bundle);
  for (const auto& w : m.warnings) std::cerr << "warning: " << w << "\n";
  const auto diffs = compare_to_table(m, lb.reference);
  const bool framed_match = m.framed == lb.framed_ref;
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  for (const auto& d : diffs)
    std::cout << "cell (" << d.i << "," << d.j << "): computed "
              << static_cast<char>(d.computed) << ", reference "
              << static_cast<char>(d.reference) << "\n";
  if (!framed_match) {
    std::cout << "newly-settled set differs from the bundled mask:\n";
    for (const auto& [i, j] : m.framed)
      if (!lb.framed_ref.count({i, j}))
        std::cout << "  extra (" << i << "," << j << ")\n";
    for (const auto& [i, j] : lb.framed_ref)
      if (!m.framed.count({i, j})) std::cout << "  missing (" << i << "," << j << ")\n";
  }
  std::cout << "cells=" << m.n * m.n << " implies=" << m.count(Cell::Implies)
            << " not-implies=" << m.count(Cell::NotImplies) << " open=" << m.count(Cell::Open)
            << " newly-settled=" << m.framed.size() << " diff=" << diffs.size() << " time-ms="
            << elapsed << "\n";
  return diffs.empty() && framed_match ? kExitOk : kExitDiff;
}

int run_diagram_explain(const std::string& bundle_dir, int i, int j) {
  LoadedBundle lb = load_bundle_from(bundle_dir);
  RelationMatrix m = compute_matrix(lb.bundle);
  std::cout << explain(m, i, j);
  return kExitOk;
}

int run_diagram_count(const std::string& bundle_dir, bool open_cells, bool framed_cells) {
  if (open_cells == framed_cells) throw InputError("pass exactly one of --open / --framed");
  LoadedBundle lb = load_bundle_from(bundle_dir);
  RelationMatrix m = compute_matrix(lb.bundle);
  std::cout << (open_cells ? m.count(Cell::Open) : static_cast<int>(m.framed.size())) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-scale lab for cover selection principles and the 22-property diagram"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string bundle_dir;

  // ---- diagram ------------------------------------------------------------
  auto* diagram = app.add_subcommand("diagram", "deduction engine over the bundled diagram");
  diagram->require_subcommand(1);
  diagram->add_option("--bundle-dir", bundle_dir,
                      "directory with figure1.json kb.json table2.grid framed.grid "
                      "(default: built-in bundle)");

  {
    auto* cmd = diagram->add_subcommand("table", "print the full relation table");
    auto format = std::make_shared<std::string>("tsv");
    cmd->add_option("--format", *format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    cmd->callback([&, format] { action = [&, format] { return run_diagram_table(bundle_dir, *format); }; });
  }
  {
    auto* cmd = diagram->add_subcommand(
        "verify", "recompute every cell from arrows, priors and the knowledge base, "
                  "then diff against the bundled table");
    cmd->callback([&] { action = [&] { return run_diagram_verify(bundle_dir); }; });
  }
  {
    auto* cmd = diagram->add_subcommand("explain", "print the proof trace of one cell");
    auto i = std::make_shared<int>(0);
    auto j = std::make_shared<int>(0);
    cmd->add_option("i", *i, "row serial")->required();
    cmd->add_option("j", *j, "column serial")->required();
    cmd->callback([&, i, j] { action = [&, i, j] { return run_diagram_explain(bundle_dir, *i, *j); }; });
  }
  {
    auto* cmd = diagram->add_subcommand("count", "count open or newly-settled cells");
    auto open_cells = std::make_shared<bool>(false);
    auto framed_cells = std::make_shared<bool>(false);
    cmd->add_flag("--open", *open_cells, "count open cells");
    cmd->add_flag("--framed", *framed_cells, "count newly-settled cells");
    cmd->callback([&, open_cells, framed_cells] {
      action = [&, open_cells, framed_cells] {
        return run_diagram_count(bundle_dir, *open_cells, *framed_cells);
      };
    });
  }

  // ---- lab ----------------------------------------------------------------
  auto* lab = app.add_subcommand("lab", "binary-array generators and diagonalization searches");
  lab->require_subcommand(1);

  auto cap = std::make_shared<std::uint64_t>(SearchBudget::kDefaultCap);
  app.add_option("--cap", *cap, "candidate evaluation cap for complete searches")
      ->check(CLI::PositiveNumber);

  {
    auto* gen = lab->add_subcommand("gen", "emit generated arrays as JSON");
    gen->require_subcommand(1);
    {
      auto* cmd = gen->add_subcommand("af", "threshold array: row n is 1 from column f(n) on");
      auto f = std::make_shared<std::string>();
      auto cols = std::make_shared<int>(0);
      cmd->add_option("--f", *f, "comma-separated thresholds")->required();
      cmd->add_option("--cols", *cols, "column count (>= max f)")->required();
      cmd->callback([&, f, cols] {
        action = [f, cols] {
          std::cout << array_to_json(make_af(parse_int_list(*f), *cols)) << std::endl;
          return kExitOk;
        };
      });
    }
    {
      auto* cmd = gen->add_subcommand("cmp", "pointwise max{A, 1-B} of two array files");
      auto a = std::make_shared<std::string>();
      auto b = std::make_shared<std::string>();
      cmd->add_option("--a", *a, "array JSON file")->required();
      cmd->add_option("--b", *b, "array JSON file")->required();
      cmd->callback([&, a, b] {
        action = [a, b] {
          std::cout << array_to_json(cmp_array(array_from_json(slurp(*a)),
                                               array_from_json(slurp(*b))))
                    << std::endl;
          return kExitOk;
        };
      });
    }
    const auto add_gen_tower = [&](const char* name, const char* help, bool split) {
      auto* cmd = gen->add_subcommand(name, help);
      auto t = std::make_shared<std::string>("");
      auto s = std::make_shared<std::string>("");
      auto rows = std::make_shared<int>(0);
      auto cols = std::make_shared<int>(0);
      auto ell = std::make_shared<int>(0);
      cmd->add_option("--t", *t, "set prefix below the column horizon (comma-separated)");
      if (split) cmd->add_option("--s", *s, "row subset (comma-separated)");
      cmd->add_option("--rows", *rows)->required();
      cmd->add_option("--cols", *cols)->required();
      cmd->add_option("--ell", *ell, "0 or 1")->required();
      cmd->callback([&, t, s, rows, cols, ell, split] {
        action = [t, s, rows, cols, ell, split] {
          InfiniteSetPrefix prefix{parse_int_list(*t)};
          const GeneratedArray g =
              split ? make_split_arrays(prefix, parse_int_list(*s), *rows, *cols, *ell)
                    : make_tower_arrays(prefix, *rows, *cols, *ell);
          ordered_json j = ordered_json::parse(array_to_json(g.array));
          j["empty_prefix_rows"] = g.empty_prefix_rows;
          std::cout << j.dump() << std::endl;
          return kExitOk;
        };
      });
    };
    add_gen_tower("tower", "rows alternate between the set's characteristic bits and all-ones",
                  false);
    add_gen_tower("split", "characteristic bits on the chosen rows, all-ones elsewhere", true);
  }

  const auto add_diag_search = [&](const char* name, const char* help, int which) {
    auto* cmd = lab->add_subcommand(name, help);
    auto file = std::make_shared<std::string>();
    auto q = std::make_shared<int>(1);
    auto e = std::make_shared<int>(0);
    auto em = std::make_shared<int>(0);
    auto col_mode = std::make_shared<std::string>("tail");
    auto w = std::make_shared<int>(1);
    auto variant = std::make_shared<std::string>("basic");
    cmd->add_option("family", *file, "array family JSON file")->required();
    cmd->add_option("--q", *q, "rows meaning 'infinitely many'");
    cmd->add_option("--e", *e, "row exception budget");
    cmd->add_option("--col-mode", *col_mode, "tail or prefix")
        ->check(CLI::IsMember({"tail", "prefix"}));
    cmd->add_option("--em", *em, "column exception budget (prefix mode)");
    if (which == 1) cmd->add_option("--w", *w, "max window size")->required();
    if (which == 3)
      cmd->add_option("--variant", *variant, "basic, infinite, or centered")
          ->check(CLI::IsMember({"basic", "infinite", "centered"}));
    cmd->callback([&, file, q, e, em, col_mode, w, variant, which] {
      action = [&, file, q, e, em, col_mode, w, variant, which] {
        const ArrayFamily fam = family_from_json(slurp(*file));
        const QuantMode mode = make_mode(*q, *e, *col_mode, *em);
        SearchBudget budget(*cap);
        switch (which) {
          case 0:
            return emit_search<Diagonalizer>(find_tau_diagonalizer(fam, mode, budget),
                                             diagonalizer_to_json);
          case 1:
            return emit_search<WindowSystem>(find_finite_tau_diagonalizer(fam, mode, *w, budget),
                                             windows_to_json);
          case 2:
            return emit_search<Diagonalizer>(find_semi_tau_diagonalizer(fam, mode, budget),
                                             diagonalizer_to_json);
          default: {
            ODiagVariant v = ODiagVariant::Basic;
            if (*variant == "infinite") v = ODiagVariant::Infinite;
            if (*variant == "centered") v = ODiagVariant::Centered;
            return emit_search<Diagonalizer>(find_o_diagonalizer(fam, v, *q, budget),
                                             diagonalizer_to_json);
          }
        }
      };
    });
  };
  add_diag_search("tau-diag",
                  "least total column choice meeting every member on at least q rows with "
                  "pairwise dominance up to e row exceptions",
                  0);
  add_diag_search("finite-tau-diag",
                  "least per-row window system (windows up to size w) meeting every member "
                  "on at least q rows with window-wise dominance up to e row exceptions",
                  1);
  add_diag_search("semi-diag", "like tau-diag but the choice may skip rows", 2);
  add_diag_search("o-diag",
                  "least total column choice hitting every member at least once "
                  "(or q times / with centered hit sets)",
                  3);

  // ---- covers ---------------------------------------------------------------
  auto* covers_cmd = app.add_subcommand("covers", "cover taxonomy and selection search");
  covers_cmd->require_subcommand(1);
  {
    auto* cmd = covers_cmd->add_subcommand(
        "classify", "flags: cover, large (>= q members per point), k-cover, tau, gamma");
    auto file = std::make_shared<std::string>();
    auto q = std::make_shared<int>(1);
    auto e = std::make_shared<int>(0);
    auto k = std::make_shared<int>(1);
    cmd->add_option("cover", *file, "cover JSON file")->required();
    cmd->add_option("--q", *q);
    cmd->add_option("--e", *e);
    cmd->add_option("--k", *k);
    cmd->callback([&, file, q, e, k] {
      action = [file, q, e, k] {
        const CoverSystem cs = cover_from_json(slurp(*file));
        const CoverKindSet kinds = classify_cover(cs, FiniteBudget{*q, *e, *k});
        ordered_json j;
        j["cover"] = kinds.is_cover;
        j["large"] = kinds.is_large;
        j["k_cover"] = kinds.is_k_cover;
        j["tau"] = kinds.is_tau;
        j["gamma"] = kinds.is_gamma;
        std::cout << j.dump() << std::endl;
        return kExitOk;
      };
    });
  }
  {
    auto* cmd = covers_cmd->add_subcommand("marczewski",
                                           "membership bit sequence of one point");
    auto file = std::make_shared<std::string>();
    auto x = std::make_shared<int>(0);
    cmd->add_option("cover", *file)->required();
    cmd->add_option("--x", *x, "point")->required();
    cmd->callback([&, file, x] {
      action = [file, x] {
        const auto bits = marczewski(cover_from_json(slurp(*file)), *x);
        ordered_json j;
        j["bits"] = bits;
        std::cout << j.dump() << std::endl;
        return kExitOk;
      };
    });
  }
  {
    auto* cmd = covers_cmd->add_subcommand(
        "psi", "one array per point: bits(n,m) = membership in set m of cover n");
    auto file = std::make_shared<std::string>();
    auto gamma_tails = std::make_shared<int>(-1);
    cmd->add_option("covers", *file, "covers JSON file {ground, covers}")->required();
    cmd->add_option("--gamma-tails", *gamma_tails,
                    "set tails to 1, failing when a row misses more than this many sets");
    cmd->callback([&, file, gamma_tails] {
      action = [file, gamma_tails] {
        int ground = 0;
        const auto covers = covers_from_json(slurp(*file), &ground);
        PsiImage img = psi_image(ground, covers);
        if (*gamma_tails >= 0) assert_gamma_tails(img.family, *gamma_tails);
        ordered_json j = ordered_json::parse(family_to_json(img.family));
        j["original_lengths"] = img.original_lengths;
        j["padded_to"] = img.padded_to;
        std::cout << j.dump() << std::endl;
        return kExitOk;
      };
    });
  }
  {
    auto* cmd = covers_cmd->add_subcommand(
        "select", "least selection witness for S1 / Sfin / Ufin over a cover sequence");
    auto file = std::make_shared<std::string>();
    auto principle = std::make_shared<std::string>();
    auto source = std::make_shared<std::string>();
    auto target = std::make_shared<std::string>();
    auto q = std::make_shared<int>(1);
    auto e = std::make_shared<int>(0);
    auto k = std::make_shared<int>(1);
    auto w = std::make_shared<int>(1);
    cmd->add_option("covers", *file)->required();
    cmd->add_option("--principle", *principle)->required()->check(CLI::IsMember({"s1", "sfin", "ufin"}));
    cmd->add_option("--source", *source, "o large omega tau gamma")->required();
    cmd->add_option("--target", *target, "o large omega tau gamma")->required();
    cmd->add_option("--q", *q);
    cmd->add_option("--e", *e);
    cmd->add_option("--k", *k);
    cmd->add_option("--w", *w, "finite-selection bound");
    cmd->callback([&, file, principle, source, target, q, e, k, w] {
      action = [&, file, principle, source, target, q, e, k, w] {
        int ground = 0;
        const auto covers = covers_from_json(slurp(*file), &ground);
        Principle p = Principle::S1;
        if (*principle == "sfin") p = Principle::Sfin;
        if (*principle == "ufin") p = Principle::Ufin;
        SearchBudget budget(*cap);
        const auto witness = check_selection(p, parse_kind(*source), parse_kind(*target), covers,
                                             FiniteBudget{*q, *e, *k}, *w, budget);
        if (!witness) {
          std::cout << "{\"witness\":null}" << std::endl;
          return kExitNoWitness;
        }
        std::cout << selection_to_json(*witness) << std::endl;
        return kExitOk;
      };
    });
  }

  // ---- fseq -----------------------------------------------------------------
  auto* fseq_cmd = app.add_subcommand("fseq", "slot families below a bound f");
  fseq_cmd->require_subcommand(1);
  {
    auto* cmd = fseq_cmd->add_subcommand(
        "o-diag", "least g with g(n) in sigma(n) somewhere, for every member");
    auto file = std::make_shared<std::string>();
    cmd->add_option("family", *file)->required();
    cmd->callback([&, file] {
      action = [&, file] {
        SearchBudget budget(*cap);
        const auto g = find_fseq_o_diag(fseq_family_from_json(slurp(*file)), budget);
        if (!g) {
          std::cout << "{\"witness\":null}" << std::endl;
          return kExitNoWitness;
        }
        ordered_json j;
        j["witness"] = *g;
        std::cout << j.dump() << std::endl;
        return kExitOk;
      };
    });
  }
  {
    auto* cmd = fseq_cmd->add_subcommand(
        "theta-check", "report the three witness-family conditions at budget e");
    auto file = std::make_shared<std::string>();
    auto e = std::make_shared<int>(0);
    cmd->add_option("family", *file)->required();
    cmd->add_option("--e", *e);
    cmd->callback([&, file, e] {
      action = [&, file, e] {
        SearchBudget budget(*cap);
        const ThetaReport rep = check_theta_witness(fseq_family_from_json(slurp(*file)), *e, budget);
        ordered_json j;
        j["eventually_nonempty"] = rep.eventually_nonempty;
        j["pairwise_comparable"] = rep.pairwise_comparable;
        j["not_o_diagonalizable"] = rep.not_o_diagonalizable;
        j["diag_witness"] = rep.diag_witness ? ordered_json(*rep.diag_witness) : ordered_json(nullptr);
        std::cout << j.dump() << std::endl;
        return kExitOk;
      };
    });
  }
  {
    auto* cmd = fseq_cmd->add_subcommand(
        "e-number", "least family below f that is everywhere-different from every function");
    auto f = std::make_shared<std::string>();
    cmd->add_option("--f", *f, "comma-separated alphabet sizes")->required();
    cmd->callback([&, f] {
      action = [&, f] {
        SearchBudget budget(*cap);
        std::cout << finite_E(parse_int_list(*f), budget) << std::endl;
        return kExitOk;
      };
    });
  }
  {
    auto* cmd = fseq_cmd->add_subcommand(
        "nor", "least block family everywhere-different from every listed tuple");
    auto file = std::make_shared<std::string>();
    auto block = std::make_shared<int>(0);
    cmd->add_option("spec", *file, "JSON {bounds, alphabets, Y}")->required();
    cmd->add_option("--block", *block, "block index");
    cmd->callback([&, file, block] {
      action = [&, file, block] {
        const auto j = ordered_json::parse(slurp(*file));
        BlockSpec spec;
        spec.bounds = j.at("bounds").get<std::vector<int>>();
        spec.alphabets = j.at("alphabets").get<std::vector<int>>();
        const auto Y = j.at("Y").get<std::vector<std::vector<int>>>();
        SearchBudget budget(*cap);
        std::cout << compute_nor(Y, spec, *block, budget) << std::endl;
        return kExitOk;
      };
    });
  }
  {
    auto* cmd = fseq_cmd->add_subcommand(
        "avoid", "decreasing slot chain avoiding each listed slalom in turn");
    auto file = std::make_shared<std::string>();
    cmd->add_option("spec", *file, "JSON {alphabets, slaloms}")->required();
    cmd->callback([&, file] {
      action = [file] {
        const auto j = ordered_json::parse(slurp(*file));
        const auto chain = avoid_slaloms(
            j.at("slaloms").get<std::vector<std::vector<std::vector<int>>>>(),
            j.at("alphabets").get<std::vector<int>>());
        ordered_json out;
        out["chain"] = chain;
        std::cout << out.dump() << std::endl;
        return kExitOk;
      };
    });
  }
  {
    auto* cmd = fseq_cmd->add_subcommand(
        "embed", "lay the slot family out as binary arrays over block columns");
    auto file = std::make_shared<std::string>();
    auto partition = std::make_shared<std::string>("");
    auto cols = std::make_shared<int>(-1);
    cmd->add_option("family", *file)->required();
    cmd->add_option("--partition", *partition,
                    "semicolon-separated row blocks, e.g. '0;1,2' (default: one slot per row)");
    cmd->add_option("--cols", *cols, "column count (default: total slot width)");
    cmd->callback([&, file, partition, cols] {
      action = [file, partition, cols] {
        const FSeqFamily fam = fseq_family_from_json(slurp(*file));
        std::vector<std::vector<int>> blocks;
        if (partition->empty()) {
          for (std::size_t k = 0; k < fam.f.size(); ++k) blocks.push_back({static_cast<int>(k)});
        } else {
          std::string cur;
          for (char c : *partition + ";") {
            if (c == ';') {
              blocks.push_back(parse_int_list(cur));
              cur.clear();
            } else {
              cur.push_back(c);
            }
          }
        }
        const EmbedResult res = embed_fseq_as_tau_family(fam, blocks, *cols);
        ordered_json j = ordered_json::parse(family_to_json(res.family));
        j["fstar"] = res.fstar;
        j["partition"] = res.partition;
        std::cout << j.dump() << std::endl;
        return kExitOk;
      };
    });
  }
  {
    auto* cmd = fseq_cmd->add_subcommand(
        "reduce", "project an array family through a window system to a slot family");
    auto family_file = std::make_shared<std::string>();
    auto windows_file = std::make_shared<std::string>();
    cmd->add_option("family", *family_file)->required();
    cmd->add_option("windows", *windows_file)->required();
    cmd->callback([&, family_file, windows_file] {
      action = [family_file, windows_file] {
        const ReduceResult res = reduce_tau_to_fseq(family_from_json(slurp(*family_file)),
                                                    windows_from_json(slurp(*windows_file)));
        ordered_json j = ordered_json::parse(fseq_family_to_json(res.family));
        j["selected_rows"] = res.selected_rows;
        j["window_elements"] = res.window_elems;
        std::cout << j.dump() << std::endl;
        return kExitOk;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const SearchCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const EngineContradiction& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!e.implies_trace.empty()) std::cerr << e.implies_trace << "\n";
    if (!e.not_implies_trace.empty()) std::cerr << e.not_implies_trace << "\n";
    return kExitContradiction;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
