#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lbw/cli.hpp"
#include "support.hpp"

using namespace lbw;
namespace fs = std::filesystem;

namespace {

std::string fixture(const std::string& name) { return std::string(LBW_FIXTURE_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out, err;
};

Run lbw_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Fresh scratch directory per test case.
struct Scratch {
  fs::path dir;
  explicit Scratch(const std::string& name) : dir(fs::temp_directory_path() / ("lbw_cli_" + name)) {
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string path(const std::string& f) const { return (dir / f).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int shell(const std::string& cmd) {
  int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("list names every check and construction") {
    Run r = lbw_run({"list"});
    CHECK(r.code == cli::kPass);
    for (const auto& c : cli::checks()) CHECK(r.out.find(c.name) != std::string::npos);
    for (const auto& c : cli::constructions()) CHECK(r.out.find(c.name) != std::string::npos);
  }

  TEST_CASE("checks pass and fail with the right exit codes") {
    std::string ws = fixture("lambda.json");
    CHECK(lbw_run({"check", "lie-bialgebra", "--ws", ws, "--args", "B"}).code == cli::kPass);
    CHECK(lbw_run({"check", "coherent-hom-r", "--ws", ws, "--args", "r", "rh", "phi", "psi"}).code ==
          cli::kPass);
    CHECK(lbw_run({"check", "coherent-hom-r", "--ws", ws, "--args", "rh", "r", "phi", "psi"}).code ==
          cli::kFail);
    CHECK(lbw_run({"check", "ooperator", "--ws", ws, "--args", "O"}).code == cli::kPass);
    CHECK(lbw_run({"check", "prelie", "--ws", ws, "--args", "A"}).code == cli::kPass);
    CHECK(lbw_run({"check", "cybe", "--ws", ws, "--args", "r"}).code == cli::kPass);

    Run j = lbw_run({"check", "coboundary-endo", "--ws", ws, "--args", "E", "psi", "rh", "--format", "json"});
    CHECK(j.code == cli::kFail);
    io::Json rep = io::Json::parse(j.out);
    CHECK(rep["pass"] == false);
    bool agree = false;
    for (const auto& it : rep["items"])
      if (it["identity"] == "agrees with direct endo Lie bialgebra check") agree = it["pass"];
    CHECK(agree);
  }

  TEST_CASE("every check runs on the fixture with valid arguments") {
    std::string ws = fixture("lambda.json");
    // role -> fixture id with matching shape
    std::vector<std::pair<std::string, std::vector<std::string>>> calls{
        {"lie-algebra", {"g"}},
        {"lie-hom", {"g", "g", "phi"}},
        {"endo-lie", {"E"}},
        {"lie-coalgebra", {"B"}},
        {"lie-bialgebra", {"B0"}},
        {"endo-lie-bialgebra", {"B0", "phi", "psi"}},
        {"coherent-hom", {"B0", "B0", "phi", "psi"}},
        {"standard-hom", {"B0", "B0", "phi"}},
        {"tbgs-weak-hom", {"B0", "B0", "phi", "psi"}},
        {"sym-invariance", {"r"}},
        {"psi-cybe", {"E", "psi", "r"}},
        {"sharp-bridge", {"E", "psi", "r"}},
        {"prelie-hom", {"A", "A", "id2"}},
        {"prelie-endo", {"A", "id2"}},
    };
    for (const auto& [name, ids] : calls) {
      std::vector<std::string> args{"check", name, "--ws", ws, "--args"};
      args.insert(args.end(), ids.begin(), ids.end());
      Run r = lbw_run(args);
      CHECK_MESSAGE((r.code == cli::kPass || r.code == cli::kFail), name << ": " << r.err);
      CHECK_MESSAGE(r.err.empty(), name << ": " << r.err);
    }
  }

  TEST_CASE("usage and input errors exit 2") {
    std::string ws = fixture("lambda.json");
    Run unk = lbw_run({"check", "no-such-check", "--ws", ws});
    CHECK(unk.code == cli::kUsage);
    CHECK(unk.err.find("unknown check") != std::string::npos);
    Run ar = lbw_run({"check", "coherent-hom-r", "--ws", ws, "--args", "r"});
    CHECK(ar.code == cli::kUsage);
    CHECK(ar.err.find("takes") != std::string::npos);
    CHECK(lbw_run({"check", "lie-algebra", "--args", "g"}).code == cli::kUsage);
    CHECK(lbw_run({}).code == cli::kUsage);
    CHECK(lbw_run({"check", "lie-algebra", "--ws", ws, "--args", "phi"}).code == cli::kUsage);
    // a bialgebra id stands for its underlying algebra
    CHECK(lbw_run({"check", "lie-algebra", "--ws", ws, "--args", "B"}).code == cli::kPass);
    CHECK(lbw_run({"check", "lie-algebra", "--ws", ws, "--args", "missing"}).code == cli::kUsage);

    Run bad = lbw_run({"check", "lie-algebra", "--ws", fixture("bad_scalar.json"), "--args", "f"});
    CHECK(bad.code == cli::kUsage);
    CHECK(bad.err.find("bad_scalar.json:3") != std::string::npos);
    Run syn = lbw_run({"check", "lie-algebra", "--ws", fixture("bad_syntax.json"), "--args", "g"});
    CHECK(syn.code == cli::kUsage);
    CHECK(syn.err.find("line 3, column 49") != std::string::npos);
    Run cyc = lbw_run({"check", "cybe", "--ws", fixture("cycle.json"), "--args", "r1"});
    CHECK(cyc.code == cli::kUsage);
    CHECK(cyc.err.find("cycle") != std::string::npos);
  }

  TEST_CASE("construct manin, then strong and coherent homs on the zero map") {
    Scratch s("manin");
    std::string ws = s.path("ws.json");
    fs::copy_file(fixture("lambda.json"), ws);
    Run c = lbw_run({"construct", "manin", "--ws", ws, "--args", "B", "--out", ws, "--id", "M"});
    REQUIRE(c.code == cli::kPass);
    Workspace w = load_workspace(ws);
    CHECK(w.has("g"));
    CHECK(w.has("M"));
    CHECK(check_manin_triple(w.manin_triple("M")).pass());

    Run strong = lbw_run({"check", "strong-hom-manin", "--ws", ws, "--args", "M", "M", "zero4", "--format", "json"});
    CHECK(strong.code == cli::kFail);
    io::Json rep = io::Json::parse(strong.out);
    bool saw = false;
    for (const auto& it : rep["items"])
      if (it["identity"] == "form-compatible") {
        saw = true;
        CHECK(it["pass"] == false);
        CHECK(it["witness"].size() == 2);
      }
    CHECK(saw);
    CHECK(lbw_run({"check", "coherent-hom-manin", "--ws", ws, "--args", "M", "M", "zero4"}).code == cli::kPass);
    CHECK(lbw_run({"check", "manin-triple", "--ws", ws, "--args", "M"}).code == cli::kPass);

    // same id again: refused, file untouched
    std::string before = slurp(ws);
    Run dup = lbw_run({"construct", "manin", "--ws", ws, "--args", "B", "--out", ws, "--id", "M"});
    CHECK(dup.code == cli::kUsage);
    CHECK(slurp(ws) == before);
  }

  TEST_CASE("refused constructions write nothing") {
    Scratch s("refuse");
    std::string out = s.path("out.json");
    Run r = lbw_run({"construct", "double", "--ws", fixture("lambda.json"), "--args", "B", "phi", "psi", "--out", out});
    CHECK(r.code == cli::kFail);
    CHECK(r.err.find("not written") != std::string::npos);
    CHECK_FALSE(fs::exists(out));
  }

  TEST_CASE("construction chain: functor F, lift, and double") {
    Scratch s("chain");
    std::string ws = fixture("lambda.json"), out = s.path("out.json");
    REQUIRE(lbw_run({"construct", "functor-F", "--ws", ws, "--args", "A", "--out", out, "--id", "FA"}).code ==
            cli::kPass);
    REQUIRE(lbw_run({"construct", "lift-rmatrix", "--ws", out, "--args", "FA", "--out", out, "--id", "rFA"}).code ==
            cli::kPass);
    Workspace w = load_workspace(out);
    CHECK(check_cybe(w.r_matrix("rFA")).pass());
    CHECK(is_skew(w.r_matrix("rFA").r()));
    CHECK(w.r_matrix("rFA").r() == prelie_double(fixtures::prelie2()).r());

    REQUIRE(lbw_run({"construct", "double", "--ws", ws, "--args", "B0", "phi", "psi", "--out", out, "--id", "D"})
                .code == cli::kPass);
    w = load_workspace(out);
    for (const char* id : {"D", "D.r", "D.phi", "D.psi"}) CHECK(w.has(id));
    CHECK(check_cybe(w.r_matrix("D.r")).pass());
  }

  TEST_CASE("fixtures subcommand") {
    Scratch s("fixtures");
    Run r = lbw_run({"fixtures", "cybe-skew", "--dim", "2", "--algebra", "r2", "--out", s.dir.string()});
    CHECK(r.code == cli::kPass);
    Workspace w = load_workspace(s.path("cybe-skew-r2-d2.json"));
    CHECK(w.size() == 4);
    CHECK(lbw_run({"fixtures", "prelie", "--dim", "3", "--out", s.dir.string()}).code == cli::kUsage);
    CHECK(lbw_run({"fixtures", "bogus", "--dim", "2", "--out", s.dir.string()}).code == cli::kUsage);
  }

  TEST_CASE("the installed binary behaves like the in-process entry point") {
    std::string bin = LBW_BINARY, ws = fixture("lambda.json");
    CHECK(shell("\"" + bin + "\" check lie-bialgebra --ws \"" + ws + "\" --args B >/dev/null") == 0);
    CHECK(shell("\"" + bin + "\" check coherent-hom-r --ws \"" + ws + "\" --args rh r phi psi >/dev/null") == 1);
    CHECK(shell("\"" + bin + "\" check nope --ws \"" + ws + "\" >/dev/null 2>&1") == 2);
  }
}
