#include "doctest.h"
#include "oracles.hpp"
#include "pairs.hpp"

#include "manin/catalog.hpp"
#include "manin/error.hpp"
#include "manin/serialize.hpp"

#include <functional>

using namespace manin;
using oracle::E;
using oracle::H;

namespace {

std::string parse_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("rationals as strings") {
  CHECK(io::to_json(Rational(3)) == "3");
  CHECK(io::to_json(Rational(-1, 2)) == "-1/2");
  CHECK(io::to_json(Rational(4, 6)) == "2/3");
  CHECK(io::rational_from_json(io::Json("-7/21")) == Rational(-1, 3));
  CHECK(io::rational_from_json(io::Json(5)) == 5);
  CHECK(parse_message([] { io::rational_from_json(io::Json("1/0"), "/x"); }).find("/x") != std::string::npos);
  CHECK_THROWS_AS(io::rational_from_json(io::Json(0.5)), ParseError);
  CHECK_THROWS_AS(io::rational_from_json(io::Json("abc")), ParseError);
}

TEST_CASE("JSON text errors carry line and column") {
  auto msg = parse_message([] { io::parse_json("{\n  \"a\": [1,\n  2,,\n}"); });
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK_NOTHROW(io::parse_json("[]"));
}

TEST_CASE("elements, roots and subsets") {
  auto g = build_algebra("A2");
  LieElement x = H(1, Rational(1, 2)) + E(*g, 1, 3, -3);
  auto j = io::to_json(x);
  CHECK(j.dump() == "{\"0\":\"1/2\",\"" + std::to_string(matrix_unit_index(*g, 0, 2)) + "\":\"-3\"}");
  CHECK(io::element_from_json(*g, j) == x);
  CHECK_THROWS_AS(io::element_from_json(*g, io::parse_json("{\"8\":\"1\"}")), ParseError);
  CHECK_THROWS_AS(io::element_from_json(*g, io::parse_json("{\"x\":\"1\"}")), ParseError);

  // Simple-root coordinates: A2 roots [1,0], [0,1], [1,1] and negatives.
  auto s = io::subset_from_json(g, io::parse_json("[[1,1],[1,0]]"));
  CHECK(io::to_json(s).dump() == "[[1,0],[1,1]]");
  CHECK(io::to_json(s.symmetrized()).dump() == "[[1,0],[1,1],[-1,-1],[-1,0]]");
  CHECK(io::symmetric_subset_from_json(g, io::parse_json("[[0,1]]")) ==
        io::subset_from_json(g, io::parse_json("[[0,-1],[0,1]]")));
  auto msg = parse_message([&] { io::subset_from_json(g, io::parse_json("[[1,0],[2,1]]"), "/N"); });
  CHECK(msg.find("/N/1") != std::string::npos);
  CHECK(msg.find("not a root") != std::string::npos);
  msg = parse_message([&] { io::subset_from_json(g, io::parse_json("[[1,0],[1,\"a\"]]"), "/N"); });
  CHECK(msg.find("/N/1/1") != std::string::npos);
  CHECK_THROWS_AS(io::subset_from_json(g, io::parse_json("[[1,0,0]]")), ParseError);
}

TEST_CASE("tensor roundtrips and canonical ordering") {
  oracle::Gen gen(71);
  for (auto id : {"A1", "A2", "A3"}) {
    auto g = build_algebra(id);
    for (int t = 0; t < 20; ++t) {
      Tensor2 a = gen.tensor2(g, 6);
      Tensor3 b = gen.tensor3(g, 6);
      auto ja = io::to_json(a);
      CHECK(io::tensor2_from_json(io::parse_json(ja.dump())) == a);
      CHECK(io::tensor3_from_json(io::to_json(b)) == b);
      const auto& entries = ja["entries"];
      for (std::size_t i = 1; i < entries.size(); ++i) {
        auto key = [&](std::size_t k) { return std::pair(entries[k][0].get<int>(), entries[k][1].get<int>()); };
        CHECK(key(i - 1) < key(i));
      }
    }
  }
  auto bad = io::parse_json(R"({"algebra":"A1","entries":[[0,1,"1"],[0,5,"2"]]})");
  auto msg = parse_message([&] { io::tensor2_from_json(bad); });
  CHECK(msg.find("/entries/1/1") != std::string::npos);
  CHECK_THROWS_AS(io::tensor2_from_json(io::parse_json(R"({"algebra":"B2","entries":[]})")), ParseError);
  CHECK_THROWS_AS(io::tensor2_from_json(io::parse_json(R"({"algebra":"A1","entries":[[0,1,"1"],[0,1,"1"]]})")),
                  ParseError);

  AlgebraOptions opt;
  opt.form_scale = 2;
  auto g2 = build_algebra("A2", opt);
  Tensor2 t = wedge(g2, H(1), E(*g2, 1, 2));
  auto jt = io::to_json(t);
  CHECK(jt["form_scale"] == "2");
  CHECK(io::tensor2_from_json(jt).g().form_scale() == 2);
}

TEST_CASE("subspaces, Lagrangians and pairs roundtrip") {
  oracle::Gen gen(72);
  for (auto id : {"A1", "A2", "A3"}) {
    auto g = build_algebra(id);
    for (int i = 0; i < 12; ++i) {
      auto p = oracle::generated_pair(g, gen, i);
      auto l = pair_to_lagrangian(p);
      auto jl = io::parse_json(io::dump(io::to_json(l)));
      CHECK(io::dual_subspace_from_json(jl) == l);
      CHECK(io::subspace_from_json(io::to_json(p.n())) == p.n());
      auto q = io::pair_from_json(io::parse_json(io::dump(io::to_json(p))));
      CHECK(q == p);
      CHECK(q.basis() == p.basis());
      CHECK(q.b() == p.b());
    }
  }
  auto g = build_algebra("A1");
  // a non-RREF matrix is rejected
  CHECK_THROWS_AS(io::subspace_from_json(io::parse_json(R"({"ambient":2,"rref":[["2","0"]]})")), ParseError);
  auto l = io::to_json(build_lnb(RootSubset::all(g), *regular_element(RootSubset::all(g), RootSubset::empty(g)),
                                 RootSubset::empty(g), 1));
  l["split"]["g"] = io::Json::array({0, 2});
  CHECK_THROWS_AS(io::dual_subspace_from_json(l), ParseError);
  // B that is not skew is not a pair
  CHECK_THROWS_AS(io::pair_from_json(io::parse_json(R"({"algebra":"A1","basis":[{"0":"1"}],"B":[["1"]]})")),
                  PreconditionError);
}

TEST_CASE("candidates keep provenance") {
  auto g = build_algebra("A2");
  auto u = RootSubset::empty(g);
  for (const auto& n : enumerate_reductive(g, u)) {
    auto c = build_x(n, *regular_element(n, u), u);
    auto back = io::candidate_from_json(io::parse_json(io::dump(io::to_json(c))));
    CHECK(back.tensor == c.tensor);
    CHECK(back.u == c.u);
    CHECK(back.omega == c.omega);
    REQUIRE(back.provenance);
    CHECK(back.provenance->n == n);
    CHECK(back.provenance->h == c.provenance->h);
  }
}

TEST_CASE("catalog sizes against brute force") {
  struct Case {
    const char* id;
    std::vector<std::vector<int>> u;
    std::size_t expected;
  };
  for (const auto& c : std::vector<Case>{{"A1", {}, 2}, {"A2", {}, 5}, {"A2", {{1, 0}, {-1, 0}}, 2}, {"A3", {}, 15}}) {
    auto g = build_algebra(c.id);
    std::vector<std::size_t> ords;
    for (const auto& r : c.u) ords.push_back(g->ordinal_from_simple(r));
    RootSubset u(g, ords);
    auto entries = build_catalog(g, u);
    CHECK(entries.size() == c.expected);
    CHECK(entries.size() == oracle::brute_reductive(*g, u.ordinals()).size());
    for (const auto& e : entries) {
      CAPTURE(subset_label(e.n));
      CHECK(all_pass(e.digest));
      CHECK(failed_checks(e.digest).empty());
    }
  }
}

TEST_CASE("catalog files are deterministic and verify after a roundtrip") {
  auto g = build_algebra("A2");
  auto u = RootSubset::empty(g);
  std::string a = io::dump(catalog_to_json(g, u, build_catalog(g, u)));
  std::string b = io::dump(catalog_to_json(build_algebra("A2"), u, build_catalog(g, u)));
  CHECK(a == b);
  auto v = verify_catalog(io::parse_json(a));
  CHECK(v.pass());
  CHECK(v.entries.size() == 5);
}

TEST_CASE("tampering is caught and named") {
  auto g = build_algebra("A2");
  auto u = RootSubset::empty(g);
  auto j = catalog_to_json(g, u, build_catalog(g, u));

  SUBCASE("tensor coefficient") {
    auto& entries = j["entries"][4]["x"]["tensor"]["entries"];
    entries[0][2] = "17";
    auto v = verify_catalog(j);
    CHECK_FALSE(v.pass());
    CHECK(failed_checks(v.entries[4].second).find("x = x_{N,h}") != std::string::npos);
    for (std::size_t i = 0; i < 4; ++i) CHECK(all_pass(v.entries[i].second));
  }
  SUBCASE("recorded digest") {
    j["entries"][1]["digest"]["M_Omega tensor"] = false;
    auto v = verify_catalog(j);
    CHECK_FALSE(v.pass());
    CHECK(failed_checks(v.entries[1].second) == "recorded digest");
  }
  SUBCASE("missing entry") {
    j["entries"].erase(2);
    auto v = verify_catalog(j);
    CHECK_FALSE(v.pass());
    CHECK(v.problems.size() == 1);
  }
  SUBCASE("lagrangian row") {
    auto& rows = j["entries"][3]["lagrangian"]["rref"];
    rows.erase(rows.size() - 1);
    auto v = verify_catalog(j);
    CHECK_FALSE(v.pass());
    auto failed = failed_checks(v.entries[3].second);
    CHECK(failed.find("lagrangian subalgebra") != std::string::npos);
  }
}
