#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "skeinlab/cli.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "skeinlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = skeinlab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("homfly command") {
  const Result u = run({"homfly", "--braid", "1:[]"});
  CHECK(u.code == 0);
  CHECK(contains(u.out, "skein form: s\n"));

  const Result t = run({"homfly", "--braid", "2:[1,1,1]"});
  CHECK(t.code == 0);
  CHECK(contains(t.out, "skein form: z^2*a*s + z*s^2 + a*s"));
  CHECK(contains(t.out, "components: 1, crossings: 3"));

  const Result h = run({"--format", "json", "--reproducible", "homfly", "--braid", "2:[1,1]"});
  CHECK(h.code == 0);
  const auto j = nlohmann::json::parse(h.out);
  CHECK(j.at("components") == 2);
  CHECK(j.at("self_writhe") == nlohmann::json::array({0, 0}));
  CHECK_FALSE(j.contains("timestamp"));
  CHECK(h.err.empty());
}

TEST_CASE("json output is byte-identical across runs") {
  const std::vector<std::string> args{"--format", "json", "--reproducible", "invariant", "W", "--braid",
                                      "2:[1,1,1]", "--colors", "[1]/[1]"};
  const Result a = run(args);
  const Result b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Result stamped = run({"--format", "json", "homfly", "--braid", "2:[1]"});
  CHECK(nlohmann::json::parse(stamped.out).contains("timestamp"));
}

TEST_CASE("invariant command") {
  const Result p = run({"invariant", "P", "--braid", "2:[1,1,1]", "--colors", "[1]"});
  CHECK(p.code == 0);
  CHECK(contains(p.out, "q^2*a^-2 + q^-2*a^-2 - a^-4\n"));
  CHECK(contains(p.out, "EVEN=true"));

  const Result pn = run({"invariant", "--invariant", "Pnorm", "--braid", "2:[1,1]", "--alpha", "1"});
  CHECK(pn.code == 0);
  CHECK(contains(pn.out, "q^2*a^2 + q^-2*a^2 - a^2 - 1\n"));
  CHECK(contains(pn.out, "EVEN=true"));

  const Result naive = run({"invariant", "P", "--braid", "2:[1,1]"});
  CHECK(naive.code == 0);
  CHECK(contains(naive.err, "warning"));
  CHECK(contains(naive.out, "LAURENT=false"));
}

TEST_CASE("input file") {
  const auto path = std::filesystem::temp_directory_path() / "skeinlab_cli_input.json";
  {
    std::ofstream f(path);
    f << R"({"braid": {"strands": 2, "word": [1, 1, 1]}, "colors": [{"lambda": [1], "mu": []}]})";
  }
  const Result r = run({"invariant", "P", "--input", path.string()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "q^2*a^-2 + q^-2*a^-2 - a^-4"));
  std::filesystem::remove(path);
  CHECK(run({"invariant", "P", "--input", path.string()}).code == 2);
}

TEST_CASE("error exit codes") {
  CHECK(run({"homfly", "--braid", "2:[3]"}).code == 2);
  CHECK(run({"homfly", "--braid", "garbage"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"invariant", "W", "--braid", "2:[1,1]", "--colors", "[1]"}).code == 2);
  CHECK(run({"invariant", "Q", "--braid", "2:[1,1]", "--alpha", "3"}).code == 2);
  CHECK(run({"--budget", "9", "verify", "unknot"}).code == 2);

  const Result lim = run({"--max-crossings", "2", "homfly", "--braid", "2:[1,1,1]"});
  CHECK(lim.code == 3);
  CHECK(contains(lim.err, "resource limit"));
  CHECK(contains(lim.err, "statistics"));
}

TEST_CASE("cache size environment variable") {
  ::setenv("SKEINLAB_CACHE_SIZE", "not-a-number", 1);
  CHECK(run({"homfly", "--braid", "1:[]"}).code == 2);
  ::setenv("SKEINLAB_CACHE_SIZE", "0", 1);
  CHECK(run({"homfly", "--braid", "2:[1,1,1]"}).code == 0);
  ::unsetenv("SKEINLAB_CACHE_SIZE");
}

TEST_CASE("verify suites") {
  const Result c = run({"verify", "combinatorics"});
  CHECK(c.code == 0);
  CHECK(contains(c.out, "summary: 8 pass, 0 fail"));

  const Result u = run({"verify", "unknot"});
  CHECK(u.code == 0);
  CHECK_FALSE(contains(u.out, "FAIL"));

  const Result i = run({"--budget", "1", "verify", "integrality"});
  CHECK(i.code == 0);
  CHECK(contains(i.out, "FINDING"));
  CHECK(contains(i.out, "summary:"));

  const Result s = run({"--budget", "1", "--format", "json", "--reproducible", "verify", "symmetries"});
  CHECK(s.code == 0);
  CHECK(nlohmann::json::parse(s.out).contains("checks"));
}
