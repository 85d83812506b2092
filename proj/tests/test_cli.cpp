#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "tlgram/cli.hpp"

using namespace tlgram::cli;

namespace {

struct Outcome {
  ExitCode code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tlgram");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  try {
    const auto config = parse_args(static_cast<int>(argv.size()), argv.data(), out);
    if (!config) return {ExitCode::pass, out.str(), err.str()};
    const ExitCode code = run(*config, out, err);
    return {code, out.str(), err.str()};
  } catch (const UsageError& e) {
    return {ExitCode::usage, out.str(), e.what()};
  }
}

int count_lines_containing(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) count += line.find(needle) != std::string::npos;
  return count;
}

}  // namespace

TEST_CASE("enumerate emits the basis as JSON") {
  const Outcome r = invoke({"enumerate", "2", "--format", "json"});
  REQUIRE(r.code == ExitCode::pass);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["tool"] == "tlgram");
  CHECK(j["version"] == kVersion);
  CHECK(j["parameters"]["n"] == 2);
  CHECK(j["parameters"]["seed"] == 1);
  CHECK(j["diagrams"].size() == 6);
  CHECK(j["diagrams"][0]["text"] == "n=2;(1,2,w=0),(3,4,w=0)");
  CHECK(j["diagrams"][5]["text"] == "n=2;(1,4,w=1),(2,3,w=1)");
}

TEST_CASE("det-verify symbolic at n = 1") {
  const Outcome r = invoke({"det-verify", "1", "--mode", "symbolic"});
  REQUIRE(r.code == ExitCode::pass);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["determinant"] == "-1*a^2*d^0 + 1*a^0*d^2");
  CHECK(j["product"] == "-1*a^2*d^0 + 1*a^0*d^2");
  for (const char* key : {"n", "mode", "trials", "prime", "seed", "pass", "bound"}) CHECK(j.contains(key));
}

TEST_CASE("det-verify modular records prime and seed") {
  const Outcome r = invoke({"det-verify", "3", "--mode", "modular", "--trials", "4", "--seed", "9"});
  REQUIRE(r.code == ExitCode::pass);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["seed"] == 9);
  CHECK(j["prime"].get<std::uint64_t>() > (1ULL << 50));
  CHECK(j["results"].size() == 4);
  CHECK(j["bound"].get<double>() < 1e-9);
}

TEST_CASE("telescoping prints one pass line per n") {
  const Outcome r = invoke({"telescoping", "50"});
  REQUIRE(r.code == ExitCode::pass);
  CHECK(count_lines_containing(r.out, " pass") == 50);
  CHECK(count_lines_containing(r.out, "FAIL") == 0);
}

TEST_CASE("output is byte-identical across runs") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"det-verify", "4", "--mode", "modular", "--trials", "3", "--seed", "77"},
        std::vector<std::string>{"nullity-gram", "3", "2", "--seed", "5"},
        std::vector<std::string>{"gram", "2"}, std::vector<std::string>{"jones-wenzl", "3"}}) {
    CHECK(invoke(args).out == invoke(args).out);
  }
}

TEST_CASE("gram CSV quotes diagram fields") {
  const Outcome r = invoke({"gram", "1"});
  REQUIRE(r.code == ExitCode::pass);
  CHECK(r.out.find("\"n=1;(1,2,w=0)\",1*a^0*d^1,1*a^1*d^0\n") != std::string::npos);
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("nullity commands") {
  const Outcome g = invoke({"nullity-gram", "2", "1", "--sample", "7/3"});
  REQUIRE(g.code == ExitCode::pass);
  const auto jg = nlohmann::json::parse(g.out);
  CHECK(jg["samples"][0]["nullity"] == 4);
  CHECK(jg["samples"][0]["rank"] == 2);
  CHECK(jg["samples"][0]["bound"] == 4);
  const Outcome s = invoke({"nullity-skein", "2", "2", "--samples", "2", "--seed", "4"});
  REQUIRE(s.code == ExitCode::pass);
  const auto js = nlohmann::json::parse(s.out);
  CHECK(js["samples"].size() == 2);
  for (const auto& line : js["samples"]) {
    for (const char* key : {"n", "k", "sample", "rank", "nullity", "bound", "pass"}) CHECK(line.contains(key));
  }
}

TEST_CASE("remaining commands pass") {
  CHECK(invoke({"lemma2", "3"}).code == ExitCode::pass);
  CHECK(invoke({"counts"}).code == ExitCode::pass);
  CHECK(invoke({"bijection", "3", "2"}).code == ExitCode::pass);
  const Outcome jw = invoke({"jones-wenzl", "2"});
  CHECK(jw.code == ExitCode::pass);
  CHECK(jw.out.find("((()), 1*A^0)") != std::string::npos);
  const Outcome counts = invoke({"counts", "3", "--format", "csv"});
  CHECK(counts.out.find("n,k,count_tilde,formula,match\n") != std::string::npos);
  CHECK(counts.out.find("2,1,5,5,true\n") != std::string::npos);
}

TEST_CASE("usage errors exit with 2 and name the problem") {
  const Outcome guard = invoke({"enumerate", "9"});
  CHECK(guard.code == ExitCode::usage);
  CHECK(guard.err.find("n=9 outside supported range [1, 7]") != std::string::npos);
  const Outcome trials = invoke({"det-verify", "4", "--mode", "modular", "--trials", "0"});
  CHECK(trials.code == ExitCode::usage);
  CHECK(trials.err.find("--trials") != std::string::npos);
  CHECK(invoke({"det-verify", "4"}).code == ExitCode::usage);
  CHECK(invoke({"frobnicate"}).code == ExitCode::usage);
  CHECK(invoke({"gram"}).code == ExitCode::usage);
  CHECK(invoke({"gram", "2", "--format", "text"}).code == ExitCode::usage);
  CHECK(invoke({"nullity-gram", "2", "1", "--sample", "1/0"}).code == ExitCode::usage);
  CHECK(invoke({"nullity-skein", "2", "1", "--sample", "1"}).code == ExitCode::usage);
  CHECK(invoke({}).code == ExitCode::usage);
}

TEST_CASE("help exits cleanly") {
  const Outcome r = invoke({"--help"});
  CHECK(r.code == ExitCode::pass);
  CHECK(r.out.find("det-verify") != std::string::npos);
}
