#include "catch_amalgamated.hpp"

#include <random>

#include <pralg/complexity.hpp>
#include <pralg/gen.hpp>
#include <pralg/proof.hpp>

using namespace pralg;
using namespace pralg::combinators;

TEST_CASE("rdepth recurrence") {
  CHECK(rdepth(succ()) == 0);
  CHECK(rdepth(add()) == 1);
  CHECK(rdepth(mult()) == 2);
  CHECK(rdepth(monus()) == 2);
  CHECK(rdepth(brack(add(), mult())) == 2);
  CHECK(rdepth(rec(const_term(0, 1), mult())) == 3);
}

TEST_CASE("rdepth ignores macro structure") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 200; ++i) {
    Term t = gen_any_term(rng, 5);
    CHECK(rdepth(expand_macros(t)) == rdepth(t));
  }
}

TEST_CASE("grzegorczyk reporting") {
  CHECK(grz_bound(succ()).index == 1);
  CHECK(grz_bound(add()).index == 2);
  CHECK(grz_bound(mult()).index == 3);
  CHECK(grz_report(add()) == "function is in E^2");
}

TEST_CASE("min_rdepth returns the term itself when nothing helps") {
  auto res = min_rdepth(succ(), 100);
  CHECK(res.bound == 0);
  CHECK(res.witness == succ());
  CHECK(replay(res.proof) == succ());
}

TEST_CASE("min_rdepth drops across group-I pruning") {
  Term t = bcomp(rec(identity(1), proj(2, 2)), comp(terminal(1), zero()));
  REQUIRE(rdepth(t) == 1);
  auto res = min_rdepth(t, 2000);
  CHECK(res.bound == 0);
  CHECK(rdepth(res.witness) == 0);
  CHECK(replay(res.proof) == res.witness);
  CHECK(res.proof.start == t);
}

TEST_CASE("group II alone never lowers the bound") {
  std::mt19937_64 rng(62);
  GroupSet only2;
  only2.gII = true;
  for (int i = 0; i < 25; ++i) {
    Term t = gen_any_term(rng, 4);
    auto res = min_rdepth(t, 500, only2);
    CHECK(res.bound == rdepth(t));
    CHECK(rdepth(res.witness) == res.bound);
    CHECK(replay(res.proof) == res.witness);
  }
}

TEST_CASE("theorem2_check at small scale") {
  auto rep = theorem2_check(120, 6, 7);
  CHECK(rep.trials == 120);
  CHECK(rep.group2_steps > 0);
  CHECK(rep.group1_steps > 0);
  CHECK(rep.ok());
  INFO(rep.counterexample);
  CHECK(rep.group2_violations == 0);
  CHECK(rep.group1_violations == 0);
}

TEST_CASE("single rule steps move rdepth the documented way") {
  // a rec-brack step keeps rdepth
  Term f1 = succ(), f2 = nul();
  Term g1 = comp(proj(2, 2), succ()), g2 = proj(2, 2);
  Term lhs = rec(brack(comp(proj(1, 1), f1), comp(proj(1, 1), f2)), bprod(g1, g2));
  auto out = find_rule("rec-brack")->fwd(lhs);
  REQUIRE(out.size() == 1);
  CHECK(rdepth(out[0]) == rdepth(lhs));
  // a rec-null step strictly drops it when f is recursion-free
  Term t = bcomp(rec(identity(1), proj(2, 2)), comp(terminal(1), zero()));
  auto pruned = find_rule("rec-null")->fwd(t);
  REQUIRE(pruned.size() == 1);
  CHECK(rdepth(pruned[0]) < rdepth(t));
}

TEST_CASE("scheme profiles") {
  auto prof = scheme_profile(id_scheme(), 5);
  for (auto [n, d] : prof.values) CHECK(d == 0);
  auto ins = scheme_profile(insertion_sort_scheme(), 5);
  int prev = -1;
  for (auto [n, d] : ins.values) {
    CHECK(d >= prev);
    prev = d;
  }
  auto mx = scheme_profile(max_scheme(), 1);
  REQUIRE(mx.values.size() == 1);
  CHECK(mx.values[0] == std::pair<int, int>{1, 0});
  CHECK_THROWS_AS(scheme_profile(id_scheme(), 0), Error);
}
