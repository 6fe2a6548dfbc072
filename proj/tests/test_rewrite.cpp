#include "catch_amalgamated.hpp"

#include <random>
#include <set>

#include <pralg/gen.hpp>
#include <pralg/interp.hpp>
#include <pralg/rewrite.hpp>
#include <pralg/surface.hpp>

using namespace pralg;

namespace {
bool contains_edge(const std::vector<RewriteEdge>& edges, const std::string& rule,
                   const Position& pos, RDir dir, const Term& result) {
  for (const auto& e : edges)
    if (e.rule->name == rule && e.pos == pos && e.dir == dir && e.result == result)
      return true;
  return false;
}
}  // namespace

TEST_CASE("rule catalog counts") {
  int g1 = 0, g2 = 0, g3 = 0, gd = 0, gx = 0;
  for (const Rule& r : rule_catalog()) {
    switch (r.group) {
      case RuleGroup::I: ++g1; break;
      case RuleGroup::II: ++g2; break;
      case RuleGroup::III: ++g3; break;
      case RuleGroup::Defn: ++gd; break;
      case RuleGroup::Derived: ++gx; break;
    }
  }
  CHECK(g1 == 4);
  CHECK(g2 == 11);
  CHECK(g3 == 1);
  CHECK(gd == 6);
  CHECK(gx == 3);
}

TEST_CASE("one_step_rewrites enumerates matches") {
  GroupSet g2;
  g2.gII = true;
  SECTION("associativity at the root") {
    Term t = comp(comp(succ(), succ()), nul());
    auto edges = one_step_rewrites(t, g2);
    CHECK(contains_edge(edges, "comp-assoc", {}, RDir::fwd,
                        comp(succ(), comp(succ(), nul()))));
  }
  SECTION("no rule matches a lone leaf") {
    CHECK(one_step_rewrites(succ(), GroupSet::all()).empty());
  }
  SECTION("bracket projection pruning") {
    Term t = comp(brack(succ(), nul()), mproj(2, {1}));
    GroupSet g1;
    g1.gI = true;
    auto edges = one_step_rewrites(t, g1);
    CHECK(contains_edge(edges, "brack-fst", {}, RDir::fwd, succ()));
  }
}

TEST_CASE("prune removes group-I waste") {
  CHECK(prune(comp(brack(succ(), nul()), mproj(2, {1}))) == succ());
  CHECK(prune(succ()) == succ());
  SECTION("recursion under a zero lift collapses to the base") {
    Term t = bcomp(rec(identity(1), proj(2, 2)), comp(terminal(1), zero()));
    Term pruned = prune(t);
    CHECK(pruned == identity(1));
    for (int i = 0; i < 20; ++i) {
      Tuple x{Value(i * 7 % 23)};
      CHECK(eval(t, x) == eval(pruned, x));
    }
  }
  SECTION("null-comp reaches its fixed point") {
    Term t = comp(rec(identity(1), proj(2, 2)), nul());
    CHECK(prune(t) == comp(proj(2, 1), nul()));
    CHECK(prune(prune(t)) == prune(t));
  }
  SECTION("the zero lift over * matches both spellings") {
    Term f = comp(zero(), succ());                      // * -> N
    Term g = comp(proj(1, 1), succ());                  // * x N -> N
    Term h = rec(f, g);                                 // N -> N
    CHECK(prune(bcomp(h, comp(terminal(0), zero()))) == f);
    CHECK(prune(bcomp(h, zero())) == f);
  }
}

TEST_CASE("simplify normalizes with the oriented subset") {
  CHECK(simplify(comp(comp(succ(), succ()), succ())) ==
        comp(succ(), comp(succ(), succ())));
  CHECK(simplify(comp(identity(1), comp(succ(), identity(1)))) == succ());
  CHECK(simplify(comp(twist(1, 1), twist(1, 1))) == identity(2));
  CHECK(simplify(brack(brack(succ(), nul()), succ())) ==
        brack(succ(), brack(nul(), succ())));
  std::mt19937_64 rng(41);
  for (int i = 0; i < 150; ++i) {
    Term t = gen_any_term(rng, 5);
    Term s = simplify(t);
    CHECK(simplify(s) == s);  // fixpoint
    CHECK(arity_of(s) == arity_of(t));
  }
}

TEST_CASE("prune and simplify preserve the denoted function") {
  std::mt19937_64 rng(45);
  GenOptions opts;
  opts.rec_left = 1;
  for (int i = 0; i < 60; ++i) {
    Term t = gen_any_term(rng, 5, opts);
    CHECK(equal_verdict(ext_equal(t, prune(t), 20, 8, 100 + i)));
    CHECK(equal_verdict(ext_equal(t, simplify(t), 20, 8, 200 + i)));
    CHECK(prune(t).rdepth() <= t.rdepth());
  }
}

TEST_CASE("composition does not distribute over bracket on the left") {
  // <g.f1, g.f2> for a two-input g cannot even be written down
  Term g = rec(identity(1), comp(proj(2, 2), succ()));  // N^2 -> N
  Term f1 = succ();
  CHECK_THROWS_AS(comp(f1, g), ArityMismatch);
}

TEST_CASE("rule soundness, small sample") {
  std::mt19937_64 rng(42);
  for (const Rule& r : rule_catalog()) {
    for (int i = 0; i < 6; ++i) {
      auto [lhs, rhs] = gen_rule_instance(r, rng);
      CAPTURE(r.name, print(lhs), print(rhs));
      CHECK(arity_of(lhs) == arity_of(rhs));
      auto v = ext_equal(lhs, rhs, 30, 12, 1000 * i + 7);
      CHECK(equal_verdict(v));
    }
  }
}

TEST_CASE("forward and backward applications are mutual inverses") {
  std::mt19937_64 rng(43);
  for (const Rule& r : rule_catalog()) {
    if (!r.bidirectional) continue;
    for (int i = 0; i < 10; ++i) {
      auto [lhs, rhs] = gen_rule_instance(r, rng);
      bool back = false;
      for (const Term& t : r.bwd(rhs))
        if (t == lhs) back = true;
      CAPTURE(r.name, print(lhs), print(rhs));
      CHECK(back);
    }
  }
}

TEST_CASE("every edge is well typed and distinct from the source") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 80; ++i) {
    Term t = gen_any_term(rng, 5);
    for (const auto& e : one_step_rewrites(t, GroupSet::all())) {
      CHECK(arity_of(e.result) == arity_of(t));
      CHECK(valid_position(t, e.pos));
    }
  }
}

TEST_CASE("group selection filters the catalog") {
  Term t = comp(brack(succ(), nul()), mproj(2, {1}));
  GroupSet none;
  CHECK(one_step_rewrites(t, none).empty());
  GroupSet g1;
  g1.gI = true;
  for (const auto& e : one_step_rewrites(t, g1)) CHECK(e.rule->group == RuleGroup::I);
}

TEST_CASE("parse_groups") {
  GroupSet g = parse_groups("I,II,Defn");
  CHECK(g.gI);
  CHECK(g.gII);
  CHECK(g.gDefn);
  CHECK_FALSE(g.gIII);
  CHECK_FALSE(g.gDerived);
  CHECK_THROWS_AS(parse_groups("IV"), Error);
}
