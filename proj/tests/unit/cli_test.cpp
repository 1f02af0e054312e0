#include <random>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "qgrass/error.hpp"
#include "rep_document.hpp"

using namespace qgrass;
using namespace qgrass::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = QGRASS_TEST_DATA;

}  // namespace

TEST_CASE("representation documents round-trip") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    const auto m = oracle::random_fp_rep(1 + rng() % 3, 2, t % 2 ? 3 : 5, rng);
    const auto doc = document_from(m);
    const auto back = parse_rep_document(serialize(doc));
    CHECK(back == doc);
    CHECK(back.representation() == m);
    CHECK(serialize(back) == serialize(doc));
  }
  const auto dec = typea::parse_intervals("U[1,2]^2+U[3,3]", 3);
  const auto doc = document_from(dec);
  CHECK(parse_rep_document(serialize(doc)) == doc);
  CHECK(typea::decompose(doc.representation()) == dec);
}

TEST_CASE("rational entries survive serialization") {
  Matrix a(1, 2);
  a(0, 0) = Rational(-3, 4);
  a(0, 1) = 7;
  const Representation m(Quiver::equioriented_a(2), Field::rationals(), DimVector{2, 1}, {a});
  CHECK(parse_rep_document(serialize(document_from(m))).representation() == m);
}

TEST_CASE("malformed documents report a position") {
  const auto pos = [](const std::string& text) {
    try {
      parse_rep_document(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string("no error");
  };
  CHECK(pos("{\"vertices\": 2,").rfind("byte", 0) == 0);
  CHECK(pos(R"({"vertices": 2, "arrows": [[1, 2]], "field": "Q", "dims": [1, 1], "matrices": {"0": [[1, 2]]}})") ==
        "/matrices/0/0");
  CHECK(pos(R"({"vertices": 2, "arrows": [[1, 3]], "field": "Q", "dims": [1, 1], "matrices": {}})") == "/arrows/0/1");
  CHECK(pos(R"({"vertices": 1, "arrows": [], "field": "Q", "dims": [1], "matrices": {}, "extra": 1})") == "/extra");
  CHECK(pos(R"({"vertices": 1, "arrows": [], "field": "Q", "dims": [1]})") != "no error");
}

TEST_CASE("missing arrows carry zero maps") {
  const auto doc = parse_rep_document(R"({"vertices": 2, "arrows": [[1, 2]], "field": "Q", "dims": [1, 1], "matrices": {}})");
  CHECK(doc.representation().map(0).is_zero());
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"count", "--rep", kData + "/ex4.rep", "--e", "1,1", "--p", "2"}).code == kOk);
  CHECK(run_cli({}).code == kUsage);
  CHECK(run_cli({"frobnicate"}).code == kUsage);
  CHECK(run_cli({"count", "--rep", kData + "/missing.rep", "--e", "1,1", "--p", "2"}).code == kDomain);
  CHECK(run_cli({"count", "--rep", kData + "/ex4.rep", "--e", "1,1", "--p", "4"}).code == kDomain);
  CHECK(run_cli({"count", "--intervals", "U[1,2]^8", "--n", "2", "--e", "4,4", "--p", "2", "--budget", "10"}).code ==
        kBudget);
}

TEST_CASE("text and machine output") {
  const auto text = run_cli({"count", "--rep", kData + "/ex4.rep", "--e", "1,1", "--p", "3"});
  CHECK(text.out.rfind("7", 0) == 0);
  const auto machine = run_cli({"count", "--rep", kData + "/ex4.rep", "--e", "1,1", "--p", "3", "--format", "machine"});
  const auto doc = nlohmann::json::parse(machine.out);
  CHECK(doc["command"] == "count");
  CHECK(doc.contains("inputs"));
  CHECK(doc.contains("provenance"));
  const auto err = run_cli({"count", "--rep", kData + "/missing.rep", "--e", "1", "--format", "machine"});
  CHECK(nlohmann::json::parse(err.out).contains("error"));
  CHECK_FALSE(err.err.empty());
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"poly", "--rep", kData + "/ex4.rep", "--e", "1,1", "--format", "machine"},
      {"strata", "--rep", kData + "/m2_n3.rep", "--e", "1,2,3"},
      {"hom", "--intervals", "U[1,2]", "--intervals2", "U[1,3]+U[2,3]", "--n", "3", "--embed", "--seed", "5"},
      {"cc", "--intervals", "U[1,2]+U[3,3]", "--n", "3"},
  };
  for (const auto& c : commands) {
    const auto a = run_cli(c), b = run_cli(c);
    CHECK(a.code == kOk);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("type A commands refuse other quivers") {
  const auto r = run_cli({"decompose", "--rep", kData + "/kronecker.rep"});
  CHECK(r.code == kDomain);
}
