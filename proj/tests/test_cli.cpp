#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "cubewalk/cli.hpp"

using namespace cubewalk;
using namespace cubewalk::cli;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("cubewalk_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

json slurp_json(const std::string& path) { return json::parse(slurp(path)); }

} // namespace

TEST_CASE("walk command writes the distribution and trace") {
    TempDir tmp;
    RunConfig cfg;
    cfg.family = Family::Hypercube;
    cfg.n = 3;
    cfg.steps = 3;
    cfg.out_path = tmp.file("dist.csv");
    cfg.trace_path = tmp.file("trace.csv");
    REQUIRE(cmd_walk(cfg) == kOk);

    std::string csv = slurp(cfg.out_path);
    CHECK(csv.rfind("vertex,bits,probability\n", 0) == 0);
    CHECK(csv.find("\n7,111,0.79") != std::string::npos);

    std::string trace = slurp(cfg.trace_path);
    CHECK(trace.rfind("step,vertex,bits,probability\n", 0) == 0);
    CHECK(trace.find("0,0,000,1\n") != std::string::npos);
    CHECK(trace.find("\n3,7,111,0.79") != std::string::npos);
}

TEST_CASE("walk with zero steps is the start point mass") {
    TempDir tmp;
    RunConfig cfg;
    cfg.family = Family::Hypercube;
    cfg.n = 2;
    cfg.steps = 0;
    cfg.out_path = tmp.file("dist.csv");
    REQUIRE(cmd_walk(cfg) == kOk);
    CHECK(slurp(cfg.out_path) == "vertex,bits,probability\n0,00,1\n1,01,0\n2,10,0\n3,11,0\n");
}

TEST_CASE("compile reports per-section gate counts") {
    TempDir tmp;
    RunConfig cfg;
    cfg.family = Family::Hypercube;
    cfg.n = 4;
    cfg.steps = 1;
    cfg.out_path = tmp.file("walk.qasm");
    cfg.counts_path = tmp.file("counts.json");
    cfg.program_path = tmp.file("walk.prog");
    REQUIRE(cmd_compile(cfg) == kOk);

    json counts = slurp_json(cfg.counts_path);
    CHECK(counts["shift"]["x"] == 6);
    CHECK(counts["shift"]["mcx"] == 4);
    CHECK(counts["strategy"] == "paper-diffusion");
    CHECK(counts["graph"]["delta"] == 4);

    std::string qasm = slurp(cfg.out_path);
    CHECK(qasm.find("OPENQASM 2.0;") == 0);
    CHECK(slurp(cfg.program_path).find("# cubewalk program n=4 m=2") == 0);
}

TEST_CASE("compile accepts a custom generating set file") {
    TempDir tmp;
    std::ofstream(tmp.file("omega.txt")) << "n=4\n0101\n0111\n1001\n1010\n";
    RunConfig cfg;
    cfg.omega_file = tmp.file("omega.txt");
    cfg.out_path = tmp.file("walk.qasm");
    cfg.counts_path = tmp.file("counts.json");
    REQUIRE(cmd_compile(cfg) == kOk);
    CHECK(slurp_json(cfg.counts_path)["shift"]["mcx"] == 9);
}

TEST_CASE("forcing paper diffusion on a padded coin exits 4") {
    TempDir tmp;
    RunConfig cfg;
    cfg.family = Family::Augmented;
    cfg.n = 3;
    cfg.strategy = CoinStrategy::PaperDiffusion;
    cfg.out_path = tmp.file("walk.qasm");
    CHECK(cmd_compile(cfg) == kUnsupportedStrategy);
}

TEST_CASE("hit emits the record json") {
    TempDir tmp;
    RunConfig cfg;
    cfg.family = Family::Hypercube;
    cfg.n = 8;
    cfg.out_path = tmp.file("hit.json");
    REQUIRE(cmd_hit(cfg) == kOk);
    json rec = slurp_json(cfg.out_path);
    CHECK(rec["T"] == 12);
    CHECK(rec["target"] == "11111111");
    CHECK(std::abs(rec["p"].get<double>() - 0.954) <= 0.02);
    CHECK(rec["window"][0] == 1);
}

TEST_CASE("sweep covers complete graphs with constant hitting time") {
    TempDir tmp;
    RunConfig cfg;
    cfg.family = Family::Complete;
    cfg.n_from = 2;
    cfg.n_to = 6;
    cfg.out_path = tmp.file("sweep.csv");
    cfg.plot_path = tmp.file("plot.tsv");
    REQUIRE(cmd_sweep(cfg) == kOk);
    std::string csv = slurp(cfg.out_path);
    for (const char* row : {"complete,2,3,4,", "complete,3,7,4,", "complete,4,15,4,", "complete,5,31,4,", "complete,6,63,4,"})
        CHECK(csv.find(row) != std::string::npos);
    CHECK(slurp(cfg.plot_path).find("63\t4\n") != std::string::npos);
}

TEST_CASE("sweep output is byte identical across runs") {
    TempDir tmp;
    RunConfig cfg;
    cfg.family = Family::Random;
    cfg.n_from = 3;
    cfg.n_to = 6;
    cfg.extra = 2;
    cfg.seed = 7;
    cfg.out_path = tmp.file("a.csv");
    REQUIRE(cmd_sweep(cfg) == kOk);
    cfg.out_path = tmp.file("b.csv");
    REQUIRE(cmd_sweep(cfg) == kOk);
    CHECK(slurp(tmp.file("a.csv")) == slurp(tmp.file("b.csv")));
}

TEST_CASE("verify passes compiled circuits and rejects corrupted programs") {
    TempDir tmp;
    RunConfig cfg;
    cfg.family = Family::Hypercube;
    cfg.n = 3;
    cfg.out_path = tmp.file("report.json");
    REQUIRE(cmd_verify(cfg) == kOk);
    json rep = slurp_json(cfg.out_path);
    CHECK(rep["pass"] == true);
    CHECK(rep["max_deviation"].get<double>() < 1e-10);

    // a step program with one X dropped must be flagged
    {
        std::ofstream f(tmp.file("step.prog"));
        f << format_program(compile_step(hypercube(3), CoinStrategy::PrepareReflect));
    }
    std::string prog = slurp(tmp.file("step.prog"));
    auto x_line = prog.find("\nX ");
    REQUIRE(x_line != std::string::npos);
    auto x_end = prog.find('\n', x_line + 1);
    prog.erase(x_line, x_end - x_line);
    {
        std::ofstream f(tmp.file("step.prog"));
        f << prog;
    }
    RunConfig bad = cfg;
    bad.program_path = tmp.file("step.prog");
    bad.out_path = tmp.file("bad.json");
    CHECK(cmd_verify(bad) == kVerificationFailure);
    CHECK(slurp_json(bad.out_path)["pass"] == false);
}

TEST_CASE("config errors and wire limits map to exit codes") {
    RunConfig none;
    none.steps = 1;
    CHECK(cmd_walk(none) == kConfigError); // no graph source

    RunConfig both;
    both.family = Family::Hypercube;
    both.n = 2;
    both.omega_file = "/nonexistent";
    both.steps = 1;
    CHECK(cmd_walk(both) == kConfigError);

    RunConfig big;
    big.family = Family::Hypercube;
    big.n = 12;
    big.steps = 1;
    big.limit_wires = 10;
    CHECK(cmd_walk(big) == kResourceError);

    RunConfig huge;
    huge.family = Family::Augmented;
    huge.n = 28; // needs 34 wires, over the global cap
    huge.steps = 1;
    CHECK(cmd_walk(huge) == kResourceError);
}

TEST_CASE("families listing names every builtin") {
    TempDir tmp;
    RunConfig cfg;
    cfg.out_path = tmp.file("families.txt");
    REQUIRE(cmd_families(cfg) == kOk);
    std::string text = slurp(cfg.out_path);
    for (const char* name : {"hypercube", "augmented", "complete", "random"})
        CHECK(text.find(name) != std::string::npos);
}
