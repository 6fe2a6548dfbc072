#include "catch_amalgamated.hpp"

#include <random>

#include <pralg/equiv.hpp>
#include <pralg/gen.hpp>
#include <pralg/schemes.hpp>
#include <pralg/surface.hpp>

using namespace pralg;

TEST_CASE("associativity is proved and the proof replays") {
  Term l = comp(comp(succ(), succ()), succ());
  Term r = comp(succ(), comp(succ(), succ()));
  auto res = equiv(l, r, 1000);
  auto* p = std::get_if<Proved>(&res);
  REQUIRE(p != nullptr);
  CHECK(check_proof(p->proof));
  CHECK(replay(p->proof) == r);
}

TEST_CASE("distinguishable terms are refuted with a witness") {
  auto res = equiv(succ(), nul(), 1000);
  auto* q = std::get_if<Refuted>(&res);
  REQUIRE(q != nullptr);
  CHECK(q->witness == Tuple{0});
  CHECK(eval(succ(), q->witness) == q->left);
  CHECK(eval(nul(), q->witness) == q->right);
}

TEST_CASE("syntactically equal terms need no steps") {
  Term t = comp(succ(), nul());
  auto res = equiv(t, t, 10);
  auto* p = std::get_if<Proved>(&res);
  REQUIRE(p != nullptr);
  CHECK(replay(p->proof) == t);
}

TEST_CASE("interchange is derivable once pruning is allowed") {
  Term s = succ();
  Term lhs = comp(prod(s, s), prod(s, s));
  Term rhs = prod(comp(s, s), comp(s, s));
  GroupSet full = GroupSet::standard();
  auto res = equiv(lhs, rhs, 100000, full, 5);
  auto* p = std::get_if<Proved>(&res);
  REQUIRE(p != nullptr);
  CHECK(check_proof(p->proof));
}

TEST_CASE("proofs survive JSON round trips") {
  Term l = comp(brack(succ(), nul()), mproj(2, {1}));
  Term r = comp(identity(1), succ());
  auto res = equiv(l, r, 20000);
  auto* p = std::get_if<Proved>(&res);
  REQUIRE(p != nullptr);
  auto steps = steps_from_json(proof_to_json(p->proof));
  CHECK(replay(l, steps) == r);
}

TEST_CASE("backward group-I steps carry their pre-image") {
  // force the pruning to happen on the t2 side
  Term pruned = succ();
  Term discarded = comp(diag(1), rec(identity(1), proj(2, 2)));  // N -> N with a loop
  Term wasteful = comp(brack(succ(), discarded), mproj(2, {1}));
  auto res = equiv(pruned, wasteful, 20000);
  auto* p = std::get_if<Proved>(&res);
  REQUIRE(p != nullptr);
  bool saw_pre = false;
  for (const auto& st : p->proof.steps)
    if (st.pre) saw_pre = true;
  CHECK(saw_pre);
  CHECK(replay(p->proof) == wasteful);
  // and the serialized form still replays
  CHECK(replay(pruned, steps_from_json(proof_to_json(p->proof))) == wasteful);
}

TEST_CASE("replay fails loudly on a broken step") {
  std::vector<ProofStep> steps{{"comp-assoc", {}, RDir::fwd, 0, std::nullopt}};
  CHECK_THROWS_AS(replay(succ(), steps), StepMismatch);
  std::vector<ProofStep> unknown{{"no-such-rule", {}, RDir::fwd, 0, std::nullopt}};
  CHECK_THROWS_AS(replay(succ(), unknown), StepMismatch);
}

TEST_CASE("arity mismatch is rejected") {
  CHECK_THROWS_AS(equiv(succ(), zero(), 100), ArityMismatch);
}

TEST_CASE("proved results replay to the right-hand term, property") {
  std::mt19937_64 rng(51);
  int proved_count = 0;
  for (int i = 0; i < 40; ++i) {
    Term t = gen_any_term(rng, 4);
    auto edges = one_step_rewrites(t, GroupSet::standard());
    if (edges.empty()) continue;
    const Term& u = edges[rng() % edges.size()].result;
    auto res = equiv(t, u, 4000, GroupSet::standard(), i);
    if (auto* p = std::get_if<Proved>(&res)) {
      ++proved_count;
      CHECK(replay(p->proof) == u);
      CHECK(p->proof.start == t);
      // proved pairs really are extensionally equal
      CHECK(equal_verdict(ext_equal(t, u, 20, 8, 400 + i)));
    }
  }
  CHECK(proved_count > 20);  // one-step neighbours should mostly be provable
}

TEST_CASE("category identity laws") {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 10; ++i) {
    Term f = gen_any_term(rng, 3);
    auto left = equiv(comp(identity(f.src().k), f), f, 1000);
    auto right = equiv(comp(f, identity(f.dst().k)), f, 1000);
    CHECK(proved(left));
    CHECK(proved(right));
  }
}

TEST_CASE("the two sorting schemes stay unidentified at small budget") {
  Term is3 = insertion_sort_scheme().generate(3);
  Term ms3 = merge_sort_scheme().generate(3);
  auto res = equiv(is3, ms3, 2000, GroupSet::standard(), 9);
  CHECK(std::holds_alternative<Unknown>(res));
}

TEST_CASE("derived rules do not change provability on spot checks") {
  GroupSet with = GroupSet::standard();
  with.gDerived = true;
  Term s = succ();
  // provable stays provable
  Term l1 = comp(comp(s, s), s), r1 = comp(s, comp(s, s));
  CHECK(proved(equiv(l1, r1, 2000, with)));
  // interchange becomes a one-step rewrite but stays provable either way
  Term l2 = comp(prod(s, s), prod(s, s)), r2 = prod(comp(s, s), comp(s, s));
  CHECK(proved(equiv(l2, r2, 100000, GroupSet::standard(), 5)));
  CHECK(proved(equiv(l2, r2, 100000, with, 5)));
  // refutable stays refutable
  CHECK(std::holds_alternative<Refuted>(equiv(s, nul(), 1000, with)));
}
