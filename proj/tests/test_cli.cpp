#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace hgop;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hgop");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("size parsing") {
  CHECK(cli::parse_size("1024") == 1024);
  CHECK(cli::parse_size("2^10") == 1024);
  CHECK(cli::parse_size("1e5") == 100000);
  CHECK_THROWS(cli::parse_size("1.5"));
  CHECK_THROWS(cli::parse_size("x"));
  CHECK(cli::parse_sizes("2^4..2^6") == std::vector<std::size_t>{16, 32, 64});
  CHECK(cli::parse_sizes("3,5") == std::vector<std::size_t>{3, 5});
  CHECK(std::isinf(cli::parse_exponent("inf")));
}

TEST_CASE("apply") {
  const auto r = run({"apply", "--g", "log", "--f", "poly:1", "-N", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,re,im\n0,1,0\n1,0.5,0\n2,0.33333333333333331,0\n3,0.25,0\n4,0.20000000000000001,0\n");
}

TEST_CASE("verdict") {
  const auto r = run({"verdict", "--g", "log", "--from", "D2:0.5", "--to", "D2:0.5"});
  CHECK(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["verdict"] == "Bounded");
  CHECK(j["theorem"] == "2.2");
  CHECK(nlohmann::ordered_json::parse(j.dump()).dump() == j.dump());
  const auto bad = run({"verdict", "--g", "log", "--from", "W", "--to", "HL:2"});
  CHECK(bad.code == cli::kBadInput);
  CHECK(bad.err.find("no theorem applies") != std::string::npos);
}

TEST_CASE("opnorm") {
  const auto r = run({"opnorm", "--g", "log", "--alpha", "1", "--beta", "1", "--truncations", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("N,norm\n1,1.26759", 0) == 0);
}

TEST_CASE("json mode and determinism") {
  const std::vector<std::string> args{"--json", "means", "--f", "log", "-p", "1", "--r-depth", "6", "-N", "256"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::ordered_json::parse(a.out);
  CHECK(j["means"].size() == 13);
}

TEST_CASE("norm, decay and verify") {
  const auto n = run({"norm", "poly:1,2", "--space", "D2:1"});
  CHECK(n.code == 0);
  CHECK(std::stod(n.out) == doctest::Approx(std::sqrt(5.0)));
  const auto d = run({"decay", "--g", "poly:0,1,1", "--alpha", "1", "--beta", "1", "--n-op", "32", "--tails", "0,4"});
  CHECK(d.code == 0);
  CHECK(d.out.find("\n4,0,") != std::string::npos);
  const auto v = run({"verify", "moment", "--nmax", "2^12"});
  CHECK(v.code == 0);
  CHECK(v.out.find("# PASS") != std::string::npos);
  const auto l = run({"verify", "lemma42", "--beta", "1", "--depth", "12"});
  CHECK(l.code == 0);
}

TEST_CASE("config file and usage errors") {
  {
    std::ofstream cfg("cli_test.ini");
    cfg << "[apply]\ng=log\nf=poly:1\nN=2\n";
  }
  const auto r = run({"--config", "cli_test.ini", "apply"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,re,im\n0,1,0\n1,0.5,0\n2,0.33333333333333331,0\n");
  CHECK(run({"nosuch"}).code == cli::kBadInput);
  CHECK(run({"norm", "log", "--space", "Q:1"}).code == cli::kBadInput);
  CHECK(run({"--help"}).code == 0);
}

}  // TEST_SUITE
