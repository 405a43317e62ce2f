// End-to-end checks of the command-line binary: exit codes, output
// determinism, and the documented JSON shapes.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string tmp_path(const std::string& name) {
  return std::string(TAULAB_BINARY_DIR) + "/cli_" + name;
}

RunResult run(const std::string& args, const std::string& label) {
  const std::string out_file = tmp_path(label + ".out");
  const std::string cmd =
      std::string(TAULAB_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_file, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string write_file(const std::string& name, const std::string& content) {
  const std::string path = tmp_path(name);
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("help screens exit cleanly") {
  CHECK(run("--help", "help_root").exit_code == 0);
  CHECK(run("lab --help", "help_lab").exit_code == 0);
  CHECK(run("lab tau-diag --help", "help_tau").exit_code == 0);
  CHECK(run("covers select --help", "help_select").exit_code == 0);
  CHECK(run("", "help_none").exit_code == 2);  // a subcommand is required
}

TEST_CASE("diagram verify is clean and fast") {
  const RunResult r = run("diagram verify", "verify");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("diff=0") != std::string::npos);
  CHECK(r.out.find("open=55") != std::string::npos);
  CHECK(r.out.find("newly-settled=21") != std::string::npos);
}

TEST_CASE("diagram count") {
  CHECK(run("diagram count --open", "count_open").out == "55\n");
  CHECK(run("diagram count --framed", "count_framed").out == "21\n");
  CHECK(run("diagram count", "count_none").exit_code == 2);
}

TEST_CASE("diagram table determinism") {
  const RunResult a = run("diagram table --format tsv", "table_a");
  const RunResult b = run("diagram table --format tsv", "table_b");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const RunResult j = run("diagram table --format json", "table_json");
  CHECK(j.out.find("\"cells\"") != std::string::npos);
}

TEST_CASE("diagram explain") {
  const RunResult r = run("diagram explain 0 5", "explain");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("Cardinality-Rule") != std::string::npos);
}

TEST_CASE("lab searches and exit codes") {
  const std::string dead = write_file(
      "dead.json",
      R"({"members":[{"rows":2,"cols":2,"bits":[[0,0],[0,0]],"tail":[0,0]}]})");
  CHECK(run("lab o-diag " + dead, "odiag_none").exit_code == 3);

  const std::string live = write_file(
      "live.json",
      R"({"members":[{"rows":2,"cols":2,"bits":[[1,0],[0,1]],"tail":[0,0]}]})");
  const RunResult found = run("lab tau-diag " + live + " --q 2", "tau_found");
  CHECK(found.exit_code == 0);
  CHECK(found.out == "{\"choice\":[0,1],\"total\":true}\n");

  CHECK(run("lab tau-diag " + tmp_path("missing.json"), "tau_missing").exit_code == 2);
  const std::string bad = write_file("bad.json", "{\"members\":");
  CHECK(run("lab tau-diag " + bad, "tau_bad").exit_code == 2);
}

TEST_CASE("search cap exit code") {
  const std::string hard = write_file(
      "hard.json",
      R"({"members":[{"rows":3,"cols":3,"bits":[[1,0,1],[0,0,0],[1,0,0]],"tail":[0,0,0]},)"
      R"({"rows":3,"cols":3,"bits":[[0,0,1],[1,0,0],[0,1,0]],"tail":[0,0,0]},)"
      R"({"rows":3,"cols":3,"bits":[[0,0,0],[1,0,0],[0,0,1]],"tail":[0,0,0]},)"
      R"({"rows":3,"cols":3,"bits":[[1,0,0],[1,0,0],[0,1,0]],"tail":[0,0,0]}]})");
  CHECK(run("--cap 5 lab tau-diag " + hard + " --q 2", "cap").exit_code == 5);
}

TEST_CASE("worker count does not change output") {
  const std::string fam = write_file(
      "workers.json",
      R"({"members":[{"rows":3,"cols":3,"bits":[[1,0,0],[0,1,0],[0,0,1]],"tail":[0,0,0]},)"
      R"({"rows":3,"cols":3,"bits":[[0,1,0],[0,1,0],[1,0,0]],"tail":[0,0,0]}]})");
  const RunResult base = run("lab tau-diag " + fam + " --q 2", "w1");
  setenv("TAULAB_WORKERS", "3", 1);
  const RunResult multi = run("lab tau-diag " + fam + " --q 2", "w3");
  unsetenv("TAULAB_WORKERS");
  CHECK(base.exit_code == multi.exit_code);
  CHECK(base.out == multi.out);
}

TEST_CASE("covers pipeline") {
  const std::string cov = write_file("cover.json", R"({"ground":2,"sets":[[0],[1],[0,1]]})");
  const RunResult cls = run("covers classify " + cov + " --q 1 --e 0 --k 1", "classify");
  CHECK(cls.exit_code == 0);
  CHECK(cls.out.find("\"cover\":false") != std::string::npos);

  const RunResult mz = run("covers marczewski " + cov + " --x 0", "marczewski");
  CHECK(mz.out == "{\"bits\":[1,0,1]}\n");

  const std::string seq = write_file("covers.json", R"({"ground":2,"covers":[[[0],[1]],[[1],[0]]]})");
  const RunResult sel =
      run("covers select " + seq + " --principle s1 --source o --target o", "select");
  CHECK(sel.exit_code == 0);
  CHECK(sel.out == "{\"principle\":\"S1\",\"picks\":[0,0]}\n");

  const RunResult psi = run("covers psi " + seq, "psi");
  CHECK(psi.exit_code == 0);
  CHECK(psi.out.find("\"padded_to\":2") != std::string::npos);
}

TEST_CASE("generators emit arrays") {
  const RunResult af = run("lab gen af --f 1,3 --cols 4", "gen_af");
  CHECK(af.exit_code == 0);
  CHECK(af.out ==
        "{\"rows\":2,\"cols\":4,\"bits\":[[0,1,1,1],[0,0,0,1]],\"tail\":[1,1]}\n");
  const RunResult tower = run("lab gen tower --t 1,3 --rows 2 --cols 4 --ell 1", "gen_tower");
  CHECK(tower.exit_code == 0);
  CHECK(tower.out.find("[[1,1,1,1],[0,1,0,1]]") != std::string::npos);
  const RunResult split = run("lab gen split --t 0,2 --s 0 --rows 2 --cols 3 --ell 0",
                              "gen_split");
  CHECK(split.out.find("[[1,0,1],[1,1,1]]") != std::string::npos);
  CHECK(run("lab gen af --f 9 --cols 4", "gen_af_bad").exit_code == 2);
}

TEST_CASE("bundle dir override") {
  const std::string dir = std::string(TAULAB_SOURCE_DIR) + "/data";
  const RunResult r = run("diagram --bundle-dir " + dir + " verify", "bundle_dir");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("diff=0") != std::string::npos);
  CHECK(run("diagram --bundle-dir /nonexistent verify", "bundle_missing").exit_code == 2);
}

namespace {

std::string read_whole(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string make_bundle_dir(const std::string& label) {
  const std::string src = std::string(TAULAB_SOURCE_DIR) + "/data";
  const std::string dst = tmp_path("bundle_" + label);
  const int rc = std::system(("mkdir -p " + dst + " && cp " + src + "/figure1.json " + src +
                              "/kb.json " + src + "/table2.grid " + src + "/framed.grid " + dst)
                                 .c_str());
  REQUIRE(rc == 0);
  return dst;
}

}  // namespace

TEST_CASE("verify flags a corrupted reference table with exit 4") {
  const std::string dir = make_bundle_dir("diff");
  const std::string grid_path = dir + "/table2.grid";
  std::string grid = read_whole(grid_path);
  const auto pos = grid.find('?');
  REQUIRE(pos != std::string::npos);
  grid[pos] = '-';  // the engine will not derive this cell
  {
    std::ofstream out(grid_path, std::ios::binary);
    out << grid;
  }
  const RunResult r = run("diagram --bundle-dir " + dir + " verify", "verify_diff");
  CHECK(r.exit_code == 4);
  CHECK(r.out.find("diff=0") == std::string::npos);
}

TEST_CASE("a contradictory bundle exits 6") {
  const std::string dir = make_bundle_dir("contra");
  const std::string fig_path = dir + "/figure1.json";
  std::string fig = read_whole(fig_path);
  const auto pos = fig.find("\"edges\": [");
  REQUIRE(pos != std::string::npos);
  fig.insert(pos + 10, "[0,4],");  // an arrow the cardinality rule refutes
  {
    std::ofstream out(fig_path, std::ios::binary);
    out << fig;
  }
  CHECK(run("diagram --bundle-dir " + dir + " verify", "verify_contra").exit_code == 6);
}

TEST_CASE("fseq pipeline") {
  const std::string fam = write_file(
      "fseq.json", R"({"f":[2,2],"members":[[[0],[0]],[[0],[1]],[[1],[0]],[[1],[1]]]})");
  CHECK(run("fseq o-diag " + fam, "fseq_none").exit_code == 3);
  CHECK(run("fseq e-number --f 2,2", "enum").out == "4\n");

  const std::string nor = write_file(
      "nor.json", R"({"bounds":[0,2],"alphabets":[3,3],"Y":[[0,0],[0,1],[0,2],[1,0],[1,1],[1,2],[2,0],[2,1],[2,2]]})");
  CHECK(run("fseq nor " + nor, "nor").out == "3\n");

  const RunResult theta = run("fseq theta-check " + fam + " --e 2", "theta");
  CHECK(theta.exit_code == 0);
  CHECK(theta.out.find("\"not_o_diagonalizable\":true") != std::string::npos);

  const RunResult emb = run("fseq embed " + fam, "embed");
  CHECK(emb.exit_code == 0);
  CHECK(emb.out.find("\"fstar\":[0,2,4]") != std::string::npos);

  const std::string avoid = write_file(
      "avoid.json", R"({"alphabets":[4,4],"slaloms":[[[0],[1]],[[1],[2]]]})");
  const RunResult av = run("fseq avoid " + avoid, "avoid");
  CHECK(av.exit_code == 0);
  CHECK(av.out == "{\"chain\":[[[1,2,3],[0,2,3]],[[2,3],[0,3]]]}\n");

  const std::string arrays = write_file(
      "reduce_fam.json",
      R"({"members":[{"rows":2,"cols":4,"bits":[[1,1,0,0],[0,0,1,1]],"tail":[0,0]}]})");
  const std::string wins = write_file("reduce_wins.json", R"({"windows":[[0,1],[2,3]]})");
  const RunResult red = run("fseq reduce " + arrays + " " + wins, "reduce");
  CHECK(red.exit_code == 0);
  CHECK(red.out.find("\"f\":[2,2]") != std::string::npos);
  CHECK(red.out.find("\"selected_rows\":[0,1]") != std::string::npos);
}

TEST_CASE("remaining lab subcommands") {
  const std::string a = write_file(
      "cmp_a.json", R"({"rows":1,"cols":2,"bits":[[0,1]],"tail":[1]})");
  const std::string b = write_file(
      "cmp_b.json", R"({"rows":1,"cols":2,"bits":[[1,0]],"tail":[1]})");
  const RunResult cmp = run("lab gen cmp --a " + a + " --b " + b, "gen_cmp");
  CHECK(cmp.exit_code == 0);
  CHECK(cmp.out == "{\"rows\":1,\"cols\":2,\"bits\":[[0,1]],\"tail\":[1]}\n");

  const std::string fam = write_file(
      "fin.json",
      R"({"members":[{"rows":2,"cols":3,"bits":[[1,0,0],[0,1,0]],"tail":[0,0]}]})");
  const RunResult fin = run("lab finite-tau-diag " + fam + " --q 2 --w 1", "finite");
  CHECK(fin.exit_code == 0);
  CHECK(fin.out == "{\"windows\":[[0],[1]]}\n");

  const std::string mixed = write_file(
      "semi.json",
      R"({"members":[{"rows":3,"cols":2,"bits":[[1,0],[1,1],[0,0]],"tail":[0,1,0]},)"
      R"({"rows":3,"cols":2,"bits":[[1,0],[0,0],[1,1]],"tail":[0,0,1]}]})");
  const RunResult semi = run("lab semi-diag " + mixed + " --q 1", "semi");
  CHECK(semi.exit_code == 0);
  CHECK(semi.out == "{\"choice\":[0,-1,-1],\"total\":false}\n");
}
