#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "paretolab/experiment.hpp"
#include "paretolab/knapsack.hpp"

using namespace paretolab;
namespace fs = std::filesystem;

namespace {

struct CmdResult {
  int code = -1;
  std::string out;
};

fs::path temp_dir() {
  static fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / "paretolab_cli_test";
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

CmdResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  fs::path out_file = temp_dir() / ("out" + std::to_string(counter++) + ".txt");
  std::string cmd = env + (env.empty() ? "" : " ") + std::string(PARETOLAB_CLI_PATH) + " " + args +
                    " > " + out_file.string() + " 2> /dev/null";
  int rc = std::system(cmd.c_str());
  CmdResult res;
  res.code = WEXITSTATUS(rc);
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  res.out = ss.str();
  return res;
}

fs::path write_file(const std::string& name, const std::string& content) {
  fs::path p = temp_dir() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

const char* kTwoItemFixture = "2 2\n1\n1 2\n2 1\n";  // items (p=1,w=2), (p=2,w=1), W=1

}  // namespace

TEST_CASE("pareto subcommand lists the Pareto set of the 2-item fixture") {
  auto file = write_file("two_item.txt", kTwoItemFixture);
  auto res = run_cli("pareto " + file.string());
  CHECK(res.code == 0);
  auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "0 0 00");
  CHECK(lines[1] == "2 1 01");
  CHECK(lines[2] == "3 3 11");
}

TEST_CASE("solve subcommand prints the optimum") {
  auto file = write_file("two_item2.txt", kTwoItemFixture);
  auto res = run_cli("solve " + file.string());
  CHECK(res.code == 0);
  CHECK(res.out == "2 1 01\n");
}

TEST_CASE("empty instance prints the zero line") {
  auto file = write_file("empty.txt", "2 0\n-\n");
  auto res = run_cli("pareto " + file.string());
  CHECK(res.code == 0);
  CHECK(res.out == "0 0\n");
}

TEST_CASE("generated exponential instance pipes back through pareto") {
  fs::path gen_file = temp_dir() / "exp10.txt";
  auto gen = run_cli("gen exponential --n 10 --output " + gen_file.string());
  CHECK(gen.code == 0);
  auto res = run_cli("pareto --exact " + gen_file.string());
  CHECK(res.code == 0);
  CHECK(lines_of(res.out).size() == 1024);
}

TEST_CASE("gen nonmonotone and exp-paths emit parseable instances") {
  fs::path nm = temp_dir() / "nm.txt";
  CHECK(run_cli("gen nonmonotone --output " + nm.string()).code == 0);
  std::ifstream in(nm);
  CHECK_NOTHROW(read_knapsack<std::int64_t>(in));

  fs::path ep = temp_dir() / "ep.txt";
  CHECK(run_cli("gen exp-paths --k 4 --output " + ep.string()).code == 0);
  auto res = run_cli("pareto --kind graph " + ep.string());
  CHECK(res.code == 0);
  // 2^4 labels at the sink, plus the intermediate stage labels
  int sink_lines = 0;
  for (const auto& line : lines_of(res.out))
    if (line.find(" 0 1 2 3 4") != std::string::npos) ++sink_lines;
  CHECK(sink_lines == 16);
}

TEST_CASE("parse errors exit 2, guard violations exit 3") {
  auto bad = write_file("bad.txt", "2 2\n-\n1 2\nnope 1\n");
  CHECK(run_cli("pareto " + bad.string()).code == 2);

  auto no_cap = write_file("no_cap.txt", "2 1\n-\n1 2\n");
  CHECK(run_cli("solve " + no_cap.string()).code == 2);

  CHECK(run_cli("gen exponential --n 63").code == 3);
  CHECK(run_cli("gen exp-paths --k 40").code == 3);
  CHECK(run_cli("pareto /nonexistent/file").code == 2);
  CHECK(run_cli("experiment --phi 0.5 --trials 2").code == 2);
}

TEST_CASE("lambda subcommand reports winner, loser and per-index values") {
  auto file = write_file("lam.txt", "2 2\n-\n1 0.75\n2 0.5\n");
  auto res = run_cli("lambda " + file.string() + " --t 0");
  CHECK(res.code == 0);
  auto lines = lines_of(res.out);
  REQUIRE(lines.size() >= 4);
  CHECK(lines[0] == "t 0");
  CHECK(lines[1] == "winner 0 0 00");
  CHECK(lines[2] == "loser 2 0.5 01");
  CHECK(lines[3] == "lambda 0.5");
}

TEST_CASE("roundsolve subcommand certifies a wide-gap fixture") {
  auto file = write_file("rs.txt", "2 2\n0.5\n0.9 0.5\n0.05 0.6\n");
  auto res = run_cli("roundsolve " + file.string());
  CHECK(res.code == 0);
  CHECK(res.out.find("certified=1") != std::string::npos);
  CHECK(res.out.find("0.9 0.5 10") == 0);
}

TEST_CASE("approx subcommand outputs a covering subset") {
  fs::path gen_file = temp_dir() / "exp8.txt";
  REQUIRE(run_cli("gen exponential --n 8 --output " + gen_file.string()).code == 0);
  auto full = run_cli("pareto " + gen_file.string());
  auto core = run_cli("approx " + gen_file.string() + " --eps 0.25");
  CHECK(core.code == 0);
  auto full_lines = lines_of(full.out);
  auto core_lines = lines_of(core.out);
  CHECK(core_lines.size() < full_lines.size());
  for (const auto& line : core_lines)
    CHECK(std::find(full_lines.begin(), full_lines.end(), line) != full_lines.end());
}

TEST_CASE("pareto --output writes the same bytes as stdout") {
  auto file = write_file("out_cmp.txt", kTwoItemFixture);
  fs::path out = temp_dir() / "pareto_out.txt";
  auto to_stdout = run_cli("pareto " + file.string());
  auto to_file = run_cli("pareto --output " + out.string() + " " + file.string());
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == to_stdout.out);
}

TEST_CASE("pareto handles d = 3 instances and the capacity-pruning flag") {
  // d = 3, 2 items, all four solutions incomparable
  auto multi = write_file("multi.txt", "3 2\n- \n1 1 2\n1 2 1\n");
  auto res = run_cli("pareto " + multi.string());
  CHECK(res.code == 0);
  CHECK(lines_of(res.out).size() == 4);

  auto fixture = write_file("prune.txt", kTwoItemFixture);
  auto pruned = run_cli("pareto --prune-capacity " + fixture.string());
  CHECK(pruned.code == 0);
  auto lines = lines_of(pruned.out);
  REQUIRE(lines.size() == 2);  // only the entries within W = 1
  CHECK(lines[0] == "0 0 00");
  CHECK(lines[1] == "2 1 01");
}

TEST_CASE("approx works on graph instances") {
  fs::path ep = temp_dir() / "ep6.txt";
  REQUIRE(run_cli("gen exp-paths --k 6 --output " + ep.string()).code == 0);
  auto res = run_cli("approx --kind graph --eps 0.5 " + ep.string());
  CHECK(res.code == 0);
  auto count = lines_of(res.out).size();
  CHECK(count >= 1);
  CHECK(count < 64);  // strictly fewer than the 2^6 exact labels
}

TEST_CASE("lambda-check experiments run from the CLI") {
  auto res = run_cli("experiment --problem knapsack --statistic lambda-check --n 8 "
                     "--trials 20 --seed 3");
  CHECK(res.code == 0);
  CHECK(res.out.find("#agg,mean,1\n") != std::string::npos);
}

TEST_CASE("experiment CSV is byte-identical across runs and thread counts") {
  std::string flags = "experiment --problem knapsack --statistic pareto-count --n 12 --phi 2 "
                      "--trials 60 --seed 7";
  auto a = run_cli(flags);
  auto b = run_cli(flags);
  auto c = run_cli(flags + " --threads 4");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(lines_of(a.out).size() == 1 + 60 + 4);  // header, rows, #agg footers
}

TEST_CASE("the seed environment variable is the default, flags override") {
  std::string flags = "experiment --problem knapsack --statistic pareto-count --n 8 --trials 10";
  auto env7 = run_cli(flags, "PARETOLAB_SEED=7");
  auto flag7 = run_cli(flags + " --seed 7");
  auto flag9 = run_cli(flags + " --seed 9", "PARETOLAB_SEED=7");
  auto seed9 = run_cli(flags + " --seed 9");
  CHECK(env7.out == flag7.out);
  CHECK(flag9.out == seed9.out);
  CHECK(env7.out != seed9.out);
}

TEST_CASE("experiment sweep emits one aggregate block per value and a plot file") {
  fs::path plot = temp_dir() / "plot.csv";
  std::string flags = "experiment --problem knapsack --statistic pareto-count --phi 1 "
                      "--trials 200 --seed 5 --sweep-n 5,10,15,20 --plot " + plot.string();
  auto res = run_cli(flags);
  CHECK(res.code == 0);
  std::ifstream in(plot);
  std::stringstream ss;
  ss << in.rdbuf();
  auto plot_lines = lines_of(ss.str());
  REQUIRE(plot_lines.size() == 5);
  CHECK(plot_lines[0] == "x,mean");
  // nondecreasing mean Pareto count along the sweep
  double prev = -1.0;
  for (std::size_t i = 1; i < plot_lines.size(); ++i) {
    auto comma = plot_lines[i].find(',');
    double mean = std::stod(plot_lines[i].substr(comma + 1));
    CHECK(mean >= prev);
    prev = mean;
  }
}

TEST_CASE("CLI pareto output matches the library exactly") {
  ExperimentSpec spec;
  spec.n = 10;
  spec.phi = 2.0;
  spec.master_seed = 424242;
  auto inst = sample_knapsack_instance(spec, model_for(spec), 0);
  fs::path file = temp_dir() / "lib_match.txt";
  {
    std::ofstream out(file);
    write_knapsack(inst, out);
  }
  auto res = run_cli("pareto " + file.string());
  REQUIRE(res.code == 0);
  auto got = lines_of(res.out);
  auto set = nu_pareto(inst).set;
  REQUIRE(got.size() == set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    std::string want = format_scalar(set.entries[i].objective[0]) + " " +
                       format_scalar(set.entries[i].objective[1]) + " " +
                       set.entries[i].solution.to_string();
    CHECK(got[i] == want);
  }
}
