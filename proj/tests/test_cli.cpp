#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "k3lat/divisor.hpp"
#include "k3lat/io.hpp"
#include "k3lat/kummer.hpp"
#include "k3lat/suite.hpp"

using namespace k3lat;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("k3lat_cli_" + name)).string();
}

std::string join(const IntVector& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x.get_str();
  return s;
}

Json without_timing(Json j) {
  j.erase("elapsed_ms");
  j.erase("timings_ms");
  return j;
}

const Verdict* find_claim(const CriterionReport& r, const std::string& claim) {
  for (const auto& v : r.verdicts.items())
    if (v.claim == claim) return &v;
  return nullptr;
}

}  // namespace

TEST_CASE("report schema and family build") {
  auto r = run({"family", "build", "--name", "K"});
  CHECK(r.code == cli::kExitPass);
  auto j = r.json();
  CHECK(j["schema_version"] == cli::kSchemaVersion);
  CHECK(j["command"] == "family build");
  CHECK(j["results"]["invariants"]["abs_determinant"] == 64);
  CHECK(j["results"]["invariants"]["q_census"] == Json{{"0", 35}, {"1", 28}});
  CHECK(j["pass"] == true);
  for (const auto& key : {"inputs", "results", "verdicts", "elapsed_ms"}) CHECK(j.contains(key));

  auto t = run({"family", "build", "--name", "T", "--family", "Y", "--d", "2"});
  CHECK(t.code == cli::kExitPass);
  auto iv = run({"family", "build", "--name", "NSY", "--d", "3", "--case", "iv"});
  CHECK(iv.code == cli::kExitPass);
  CHECK(iv.json()["results"]["case"] == "iv");
  // case iv is illegal for d = 5
  CHECK(run({"family", "build", "--name", "NSY", "--d", "5", "--case", "iv"}).code == cli::kExitUsage);
}

TEST_CASE("orbit classify") {
  auto r = run({"orbit", "classify", "--p", "2", "--vector", "1,1,1,0,0"});
  CHECK(r.code == cli::kExitPass);
  auto j = r.json();
  CHECK(j["results"]["tag"] == "v1");
  CHECK(j["results"]["params"]["r"] == -1);
  CHECK(j["results"]["norm"] == -2);
  CHECK(run({"orbit", "classify", "--p", "2", "--vector", "1,1,1"}).code == cli::kExitUsage);
  CHECK(run({"orbit", "classify", "--p", "2", "--vector", "2,2,4,0,0"}).code == cli::kExitUsage);
}

TEST_CASE("models commands") {
  CHECK(run({"models", "igusa-check"}).code == cli::kExitPass);
  auto bad = run({"models", "igusa-check", "--leading", "17"});
  CHECK(bad.code == cli::kExitFail);
  CHECK(bad.json()["results"]["witness"] == "x0^4*x1^4*x2^4*x3^4");

  auto inv = run({"models", "invariants", "--degree", "4"});
  CHECK(inv.code == cli::kExitPass);
  CHECK(inv.json()["results"]["dimension"] == 5);
  CHECK(run({"models", "invariants", "--degree", "2", "--group", "even-sign"}).json()["results"]["dimension"] == 6);
  CHECK(run({"models", "invariants", "--degree", "9"}).code == cli::kExitFail);

  auto path = temp_path("poly.json");
  {
    std::ofstream f(path);
    f << R"([[[1, 1, 1, 1], "1"]])";
  }
  auto g = run({"models", "gradient", "--poly", path, "--point", "0,1,1,1"});
  CHECK(g.code == cli::kExitPass);
  CHECK(g.json()["results"]["gradient"] == Json::array({"1", "0", "0", "0"}));
  CHECK(run({"models", "gradient", "--poly", path, "--point", "1,2"}).code == cli::kExitUsage);
  std::remove(path.c_str());
}

TEST_CASE("divisor check on a written lattice file") {
  auto path = temp_path("k12.json");
  CHECK(run({"family", "build", "--name", "K4d", "--d", "3", "--out", path}).code == cli::kExitPass);
  NamedLattice kp = k4d_prime(3);
  RatVector cls = kp.ambient_class("H");
  RatVector half = kp.half_sum("K", complement_of({}));
  for (std::size_t i = 0; i < cls.size(); ++i) cls[i] -= half[i];
  std::string coords = join(kp.coords(cls));

  auto r = run({"divisor", "check", "--lattice", path, "--class", coords, "--mode", "ample", "--expect",
                "ample_up_to_weyl"});
  CHECK(r.code == cli::kExitPass);
  CHECK(r.json()["results"]["square"] == 4);
  auto wrong = run({"divisor", "check", "--lattice", path, "--class", coords, "--expect", "not_positive"});
  CHECK(wrong.code == cli::kExitFail);

  auto ev = run({"divisor", "check", "--lattice", path, "--mode", "evenset"});
  CHECK(ev.code == cli::kExitPass);
  CHECK(ev.json()["results"]["curves"] == 11);

  CHECK(run({"divisor", "check", "--lattice", path, "--class", "1,2"}).code == cli::kExitUsage);
  CHECK(run({"divisor", "check", "--lattice", path, "--class", coords, "--mode", "nope"}).code == cli::kExitUsage);
  CHECK(run({"divisor", "check", "--lattice", path + ".missing", "--class", coords}).code == cli::kExitUsage);
  std::remove(path.c_str());
}

TEST_CASE("fibration mode finds twelve I2 fibers") {
  auto path = temp_path("k8.json");
  NamedLattice kp = k4d_prime(2);
  write_lattice_file(path, document_of(kp.lattice()));
  PointSet j4;
  for (const auto& s : divisible_class_supports(2))
    if (s.size() == 4) {
      j4 = s;
      break;
    }
  RatVector f = kp.ambient_class("H");
  RatVector half = kp.half_sum("K", j4);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = f[i] / 2 - half[i];
  auto r = run({"divisor", "check", "--lattice", path, "--class", join(kp.coords(f)), "--mode", "fibration"});
  CHECK(r.code == cli::kExitPass);
  CHECK(r.json()["results"]["f_square"] == 0);
  std::remove(path.c_str());
}

TEST_CASE("enriques, quotient and lattice commands") {
  auto e = run({"enriques", "search", "--q", "t=1"});
  CHECK(e.code == cli::kExitPass);
  CHECK(e.json()["results"]["ambient_vectors"].size() == 4);
  CHECK(run({"enriques", "search", "--q", "t1"}).code == cli::kExitUsage);
  CHECK(run({"enriques", "search", "--q", "z=1"}).code == cli::kExitUsage);

  auto q = run({"quotient", "verify"});
  CHECK(q.code == cli::kExitPass);
  CHECK(q.json()["results"]["identities"].size() == 7);

  auto li = run({"lattice", "info", "--spec", "U(2)^3"});
  CHECK(li.code == cli::kExitPass);
  CHECK(li.json()["results"]["invariants"]["q_census"] == Json{{"0", 35}, {"1", 28}});
  auto lv = run({"lattice", "vectors", "--spec", "E8(-1)"});
  CHECK(lv.json()["results"]["count_up_to_sign"] == 120);
  CHECK(run({"lattice", "info"}).code == cli::kExitUsage);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"family", "build", "--name", "K", "--bogus"}).code == cli::kExitUsage);
  CHECK(run({"family", "build", "--name", "Q"}).code == cli::kExitUsage);
  auto h = run({"--help"});
  CHECK(h.code == cli::kExitPass);
  CHECK(h.out.find("suite") != std::string::npos);
  auto r = run({"suite", "--filter", "nothing-matches"});
  CHECK(r.code == cli::kExitUsage);
}

TEST_CASE("human rendering") {
  auto r = run({"models", "igusa-check", "--human"});
  CHECK(r.code == cli::kExitPass);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK_FALSE(Json::accept(r.out));
}

TEST_CASE("reports are deterministic apart from timing") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"orbit", "classify", "--p", "5", "--vector", "3,7,2,1,4"},
        std::vector<std::string>{"family", "build", "--name", "Omega", "--d", "2"},
        std::vector<std::string>{"suite", "--filter", "kummer,quotient,models"}}) {
    auto a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(without_timing(a.json()).dump() == without_timing(b.json()).dump());
  }
}

TEST_CASE("suite filter") {
  auto r = run({"suite", "--filter", "kummer"});
  CHECK(r.code == cli::kExitPass);
  std::vector<int> ids;
  Json j = r.json();
  for (const auto& c : j["results"]["criteria"]) ids.push_back(c["id"].get<int>());
  CHECK(ids == std::vector<int>{1, 2, 3, 4, 5, 6, 14});
  CHECK(criterion_selected(suite_criteria()[6], "7"));
  CHECK(criterion_selected(suite_criteria()[6], "AC7"));
  CHECK_FALSE(criterion_selected(suite_criteria()[6], "kummer"));
}

TEST_CASE("fault injection through the Kummer glue") {
  SuiteOptions opts;
  opts.filter = "1,2,10";
  opts.parallel = false;

  SUBCASE("a dropped glue vector changes the determinant") {
    auto glue = kummer_glue();
    glue.pop_back();
    opts.kummer_glue = glue;
    auto reps = run_suite(opts);
    REQUIRE(reps.size() == 3);
    CHECK_FALSE(reps[0].pass());
    const Verdict* det = find_claim(reps[0], "|det|");
    REQUIRE(det != nullptr);
    CHECK_FALSE(det->pass);
    CHECK(det->computed == 256);
    CHECK_FALSE(reps[1].pass());
    CHECK_FALSE(reps[2].pass());
  }
  SUBCASE("a corrupted glue constant is rejected") {
    auto glue = kummer_glue();
    for (auto& x : glue[1])
      if (x != 0) x = rat(1, 4);
    opts.kummer_glue = glue;
    auto reps = run_suite(opts);
    CHECK_FALSE(reps[0].pass());
    CHECK_FALSE(reps[0].error.empty());
    CHECK(find_claim(reps[0], "criterion ran to completion") != nullptr);
  }
  SUBCASE("the true glue passes") {
    opts.kummer_glue = kummer_glue();
    for (const auto& r : run_suite(opts)) CHECK(r.pass());
  }
}
