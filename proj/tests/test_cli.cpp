#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "umst/cli.hpp"

using namespace umst;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::dispatch(std::move(args), out, err);
  return CliResult{code, out.str(), err.str()};
}

fs::path temp_dir() {
  fs::path dir = fs::temp_directory_path() / "umst-cli-tests";
  fs::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  fs::path p = temp_dir() / name;
  std::ofstream f(p);
  f << content;
  return p.string();
}

}  // namespace

TEST_CASE("gen writes instance files with the expected shape") {
  fs::path out = temp_dir() / "gadget2.json";
  auto r = run_cli({"gen", "gadget-path", "--k", "2", "--out", out.string()});
  REQUIRE(r.code == cli::kExitOk);
  Json j;
  std::ifstream(out) >> j;
  CHECK(j["model"] == "edge");
  CHECK(j["edges"].size() == 7);
}

TEST_CASE("run reports the gadget update count and writes a parseable log") {
  fs::path inst = temp_dir() / "gadget1.json";
  REQUIRE(run_cli({"gen", "gadget-path", "--k", "1", "--out", inst.string()}).code == 0);
  fs::path log = temp_dir() / "events.jsonl";
  auto r = run_cli({"run", inst.string(), "--log", log.string()});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.find("updates   2") != std::string::npos);

  std::ifstream lf(log);
  std::string line;
  int lines = 0;
  while (std::getline(lf, line)) {
    if (line.empty()) continue;
    Json ev = Json::parse(line);  // throws on malformed output
    CHECK(ev.contains("run"));
    CHECK(ev.contains("event"));
    CHECK(ev.contains("edges"));
    ++lines;
  }
  CHECK(lines > 0);
}

TEST_CASE("run on a trivial instance makes no updates") {
  std::string path = write_file("trivial.json", R"({
    "model": "edge",
    "vertices": ["a", "b"],
    "edges": [{"id": "e", "u": "a", "v": "b", "area": 3, "true_weight": "3"}]
  })");
  auto r = run_cli({"run", path});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.find("updates   0") != std::string::npos);
}

TEST_CASE("run --json emits a machine-readable report") {
  fs::path inst = temp_dir() / "gadget1b.json";
  REQUIRE(run_cli({"gen", "gadget-path", "--k", "1", "--out", inst.string()}).code == 0);
  auto r = run_cli({"run", inst.string(), "--json"});
  REQUIRE(r.code == cli::kExitOk);
  Json j = Json::parse(r.out);
  CHECK(j["updates"] == 2);
  CHECK(j["model"] == "edge");
}

TEST_CASE("opt prints OPT and minimal sets") {
  fs::path inst = temp_dir() / "gadget1c.json";
  REQUIRE(run_cli({"gen", "gadget-path", "--k", "1", "--out", inst.string()}).code == 0);
  auto r = run_cli({"opt", inst.string(), "--sets"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.find("OPT 1") != std::string::npos);
  CHECK(r.out.find(R"([["c1"]])") != std::string::npos);
}

TEST_CASE("opt enforces the oracle bound with exit 4") {
  // 22-vertex path with 21 non-trivial edges
  Json j;
  j["model"] = "edge";
  for (int i = 0; i < 22; ++i) j["vertices"].push_back("v" + std::to_string(i));
  for (int i = 0; i < 21; ++i)
    j["edges"].push_back(Json{{"id", "e" + std::to_string(i)},
                              {"u", "v" + std::to_string(i)},
                              {"v", "v" + std::to_string(i + 1)},
                              {"area", Json{{"lo", "1"}, {"hi", "2"}}},
                              {"true_weight", "1.5"}});
  std::string path = write_file("big.json", j.dump());
  auto r = run_cli({"opt", path});
  CHECK(r.code == cli::kExitOracleBound);
  auto ok = run_cli({"opt", path, "--bound", "25"});
  CHECK(ok.code == cli::kExitOk);
  CHECK(ok.out.find("OPT 0") != std::string::npos);
}

TEST_CASE("ratio reports and asserts bounds") {
  fs::path inst = temp_dir() / "gadget1d.json";
  REQUIRE(run_cli({"gen", "gadget-path", "--k", "1", "--out", inst.string()}).code == 0);
  auto r = run_cli({"ratio", inst.string()});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.find("ratio     2") != std::string::npos);
  CHECK(run_cli({"ratio", inst.string(), "--assert-bound", "2.0"}).code == cli::kExitOk);
  CHECK(run_cli({"ratio", inst.string(), "--assert-bound", "1.9"}).code == cli::kExitRatioBound);

  std::string trivial = write_file("trivial2.json", R"({
    "model": "edge",
    "vertices": ["a", "b"],
    "edges": [{"id": "e", "u": "a", "v": "b", "area": 3, "true_weight": "3"}]
  })");
  auto t = run_cli({"ratio", trivial});
  CHECK(t.out.find("verified-without-updates") != std::string::npos);
}

TEST_CASE("gen random is byte-deterministic") {
  fs::path a = temp_dir() / "rand_a.json", b = temp_dir() / "rand_b.json";
  REQUIRE(run_cli({"gen", "random", "--seed", "1", "--n", "5", "--out", a.string()}).code == 0);
  REQUIRE(run_cli({"gen", "random", "--seed", "1", "--n", "5", "--out", b.string()}).code == 0);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
}

TEST_CASE("gen vertex-lb round-trips through the loader with the quoted areas") {
  fs::path out = temp_dir() / "vlb.json";
  REQUIRE(run_cli({"gen", "vertex-lb", "--copies", "2", "--out", out.string()}).code == 0);
  auto any = load_instance_file(out.string());
  const auto& vi = std::get<VertexInstance>(any);
  Instance proj = project_to_edge_uncertainty(vi);
  auto ab = proj.graph.edge_by_name("A1--B1");
  REQUIRE(ab.has_value());
  CHECK(std::abs(weight_to_double(proj.graph.edges[*ab].area.inf()) - 7) < 1e-9);
  CHECK(std::abs(weight_to_double(proj.graph.edges[*ab].area.sup()) - 11) < 1e-9);
  auto cd = proj.graph.edge_by_name("C2--D2");
  REQUIRE(cd.has_value());
  CHECK(std::abs(weight_to_double(proj.graph.edges[*cd].area.inf()) - 4) < 1e-9);
  CHECK(std::abs(weight_to_double(proj.graph.edges[*cd].area.sup()) - 8) < 1e-9);
}

TEST_CASE("adversarial gen writes the induced instance and transcript") {
  fs::path out = temp_dir() / "gadget_adv.json";
  fs::path transcript = temp_dir() / "gadget_adv.jsonl";
  auto r = run_cli({"gen", "gadget-path", "--k", "3", "--adversarial", "--out", out.string(),
                    "--transcript", transcript.string()});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.find("adversarial updates 6") != std::string::npos);
  auto any = load_instance_file(out.string());
  CHECK(opt_updates(std::get<Instance>(any)) == 3);
  CHECK(fs::file_size(transcript) > 0);

  // no paired adversary for the star family
  CHECK(run_cli({"gen", "star", "--k", "3", "--adversarial", "--out", out.string()}).code ==
        cli::kExitInput);
}

TEST_CASE("batch emits a fixed-order TSV") {
  fs::path dir = temp_dir() / "batch";
  fs::create_directories(dir);
  REQUIRE(run_cli({"gen", "gadget-path", "--k", "1", "--out", (dir / "a.json").string()}).code == 0);
  REQUIRE(run_cli({"gen", "star", "--k", "3", "--pos", "2", "--out", (dir / "b.json").string()})
              .code == 0);
  auto r = run_cli({"batch", dir.string()});
  REQUIRE(r.code == cli::kExitOk);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "instance\tmodel\tupdates\topt\tratio");
  std::string row;
  int rows = 0;
  while (std::getline(lines, row))
    if (!row.empty()) ++rows;
  CHECK(rows == 2);
  CHECK(r.out.find("a\tedge\t2\t1\t2") != std::string::npos);
}

TEST_CASE("witness-check") {
  fs::path inst = temp_dir() / "gadget1e.json";
  REQUIRE(run_cli({"gen", "gadget-path", "--k", "1", "--out", inst.string()}).code == 0);
  auto yes = run_cli({"witness-check", inst.string(), "--set", "b1,c1"});
  REQUIRE(yes.code == cli::kExitOk);
  CHECK(yes.out.find("witness-set") == 0);
  auto no = run_cli({"witness-check", inst.string(), "--set", "a1"});
  CHECK(no.out.find("not-a-witness-set") == 0);
  // after updating c to its truth the view verifies; nothing is a witness
  auto after = run_cli({"witness-check", inst.string(), "--set", "b1,c1", "--after", "c1"});
  CHECK(after.out.find("not-a-witness-set") == 0);
}

TEST_CASE("error exit codes") {
  CHECK(run_cli({"run", "/no/such/file.json"}).code == cli::kExitInput);
  std::string bad = write_file("bad.json", "{ not json");
  CHECK(run_cli({"run", bad}).code == cli::kExitInput);

  std::string inconsistent = write_file("inconsistent.json", R"({
    "model": "edge",
    "vertices": ["a", "b"],
    "edges": [{"id": "e", "u": "a", "v": "b",
               "area": {"lo": "3", "hi": "7"}, "true_weight": "3"}]
  })");
  CHECK(run_cli({"run", inconsistent}).code == cli::kExitInconsistent);

  fs::path out = temp_dir() / "x.json";
  CHECK(run_cli({"gen", "no-such-family", "--out", out.string()}).code == cli::kExitInput);
  CHECK(run_cli({"frobnicate"}).code == cli::kExitInput);
}
