#include "doctest.h"
#include "stal/emptiness.hpp"
#include "stal/parse.hpp"

using namespace stal;

namespace {

Waa build_text(const std::string& tbox, const std::string& query) {
  ValidatedTBox vt = validated(parse_tbox(tbox));
  return build_automaton(close(vt, parse_concept(query, vt.tb)));
}

bool verified(const Waa& a, const Witness& w) {
  std::string why;
  bool ok = verify_witness(a, w, &why);
  if (!ok) INFO("witness rejected: ", why);
  return ok;
}

}  // namespace

TEST_CASE("bot has an empty automaton") {
  Waa a = build_text("primitive A;", "bot");
  SearchResult r = decide_emptiness(a);
  CHECK(r.verdict == Verdict::Unsat);
  CHECK(!r.stats.bound_hit);
  CHECK(r.stats.nodes == 1);
}

TEST_CASE("an eventuality pair is satisfiable at the root") {
  Waa a = build_text(
      "primitive A;\nfeature f;\n"
      "B := (or A (some f B));\nBd := (and (not A) (all f Bd));",
      "B");
  SearchResult r = decide_emptiness(a, SearchConfig{0, 1});
  REQUIRE(r.verdict == Verdict::Sat);
  CHECK(r.witness.nodes.size() == 1);
  CHECK(r.witness.nodes[0].choice.at("B_init") == 0);
  CHECK(r.witness.csp_certificate == "none");
  CHECK(verified(a, r.witness));
}

TEST_CASE("a necessity chain closes an accepting lasso") {
  Waa a = build_text(
      "primitive A;\nfeature f;\n"
      "D := A;\n"
      "N := (and (some f D) (all f N));\n"
      "Nd := (or (all f (not D)) (some f Nd));",
      "N");
  SearchResult r = decide_emptiness(a);
  REQUIRE(r.verdict == Verdict::Sat);
  REQUIRE(r.witness.nodes.size() == 3);
  CHECK(r.witness.nodes[0].states == std::vector<std::string>{"B_init"});
  CHECK(r.witness.nodes[1].states == std::vector<std::string>{"D", "N"});
  CHECK(r.witness.nodes[2].back_edge == 1);
  CHECK(r.witness.nodes[2].choice.empty());
  CHECK(r.witness.csp_certificate == "none");
  CHECK(verified(a, r.witness));

  SUBCASE("tampered back edge target") {
    Witness w = r.witness;
    w.nodes[2].back_edge = 0;
    std::string why;
    CHECK(!verify_witness(a, w, &why));
    CHECK(why == "back edge changes the state set");
  }
  SUBCASE("tampered clause index") {
    Witness w = r.witness;
    w.nodes[1].choice["N"] = 7;
    CHECK(!verify_witness(a, w));
  }
  SUBCASE("tampered states") {
    Witness w = r.witness;
    w.nodes[1].states = {"D"};
    CHECK(!verify_witness(a, w));
  }
  SUBCASE("tampered certificate") {
    Witness w = r.witness;
    w.csp_certificate = "periodic";
    std::string why;
    CHECK(!verify_witness(a, w, &why));
    CHECK(why == "certificate claims csp atoms that do not exist");
  }
  SUBCASE("dropped node") {
    Witness w = r.witness;
    w.nodes.pop_back();
    w.nodes[1].children.clear();
    CHECK(!verify_witness(a, w));
  }
}

TEST_CASE("an unfulfillable eventuality hits the bound") {
  Waa a = build_text(
      "feature f;\n"
      "B := (or bot (some f B));\nBd := (and top (all f Bd));",
      "B");
  SearchResult r = decide_emptiness(a, SearchConfig{5, 1});
  CHECK(r.verdict == Verdict::Unknown);
  CHECK(r.stats.bound_hit);
}

TEST_CASE("spending the node budget forfeits a verdict but never fakes one") {
  Waa a = build_text(
      "primitive A;\nfeature f;\n"
      "D := A;\n"
      "N := (and (some f D) (all f N));\n"
      "Nd := (or (all f (not D)) (some f Nd));",
      "N");
  SearchResult tight = decide_emptiness(a, SearchConfig{24, 1, 1});
  CHECK(tight.verdict == Verdict::Unknown);
  CHECK(tight.stats.bound_hit);
  CHECK(tight.stats.nodes <= 2);
  SearchResult open_ended = decide_emptiness(a, SearchConfig{24, 1, 0});
  CHECK(open_ended.verdict == Verdict::Sat);
  CHECK(open_ended.witness.nodes.size() == 3);
}

TEST_CASE("a diagonal csp atom is unsatisfiable") {
  Waa a = build_text("cfeature g;\nalgebra rcc8;", "(pred (g) (g) {DC})");
  SearchResult r = decide_emptiness(a);
  CHECK(r.verdict == Verdict::Unsat);
  CHECK(!r.stats.bound_hit);
  CHECK(r.stats.csp_checks >= 1);
}

TEST_CASE("a periodic constraint chain is satisfiable") {
  Waa a = build_text(
      "feature f;\ncfeature g;\nalgebra rcc8;\n"
      "N := (and (pred (g) (f.g) {TPP}) (all f N));\n"
      "Nd := (or (pred (g) (f.g) {DC,EC,PO,NTPP,TPPi,NTPPi,EQ}) "
      "(some f Nd));",
      "N");
  SearchResult r = decide_emptiness(a);
  REQUIRE(r.verdict == Verdict::Sat);
  CHECK(r.witness.csp_certificate == "periodic");
  REQUIRE(r.witness.nodes.size() == 3);
  CHECK(r.witness.nodes[2].back_edge == 1);
  CHECK(verified(a, r.witness));
}

TEST_CASE("a loop carried equality conflict is unsatisfiable") {
  Waa a = build_text(
      "feature f;\ncfeature g;\nalgebra rcc8;\n"
      "N := (and (and (pred (g) (f.g) {NTPP}) (pred (g) (f.f.g) {EQ})) "
      "(all f N));\n"
      "Nd := (or (or (pred (g) (f.g) {DC,EC,PO,TPP,TPPi,NTPPi,EQ}) "
      "(pred (g) (f.f.g) {DC,EC,PO,TPP,NTPP,TPPi,NTPPi})) (some f Nd));",
      "N");
  SearchResult r = decide_emptiness(a);
  CHECK(r.verdict == Verdict::Unsat);
  CHECK(!r.stats.bound_hit);
}

TEST_CASE("a branching query with a local constraint is satisfiable") {
  Waa a = build_text(
      "primitive A;\nprimitive A1;\nprimitive A2;\nrole R;\n"
      "feature f;\nfeature f2;\ncfeature g;\ncfeature h;\nalgebra rcc8;",
      "(and (some R (and A A1)) (and (all R A2) (pred (f.f2.g) (h) {EC})))");
  SearchResult r = decide_emptiness(a);
  REQUIRE(r.verdict == Verdict::Sat);
  CHECK(r.witness.csp_certificate == "finite");
  CHECK(r.witness.nodes.size() == 4);
  CHECK(verified(a, r.witness));
}

TEST_CASE("a clashing role conjunction is unsatisfiable") {
  Waa a = build_text(
      "primitive A;\nprimitive A1;\nrole R;\n"
      "feature f;\nfeature f2;\ncfeature g;\ncfeature h;\nalgebra rcc8;",
      "(and (some R (and A A1)) (and (all R (not A)) "
      "(pred (f.f2.g) (h) {EC})))");
  SearchResult r = decide_emptiness(a);
  CHECK(r.verdict == Verdict::Unsat);
  CHECK(!r.stats.bound_hit);
}

TEST_CASE("verdict names") {
  CHECK(std::string(to_string(Verdict::Sat)) == "sat");
  CHECK(std::string(to_string(Verdict::Unsat)) == "unsat");
  CHECK(std::string(to_string(Verdict::Unknown)) == "unknown");
}
