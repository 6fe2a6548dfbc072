#pragma once

// Loop-nesting complexity of description trees.
//
// rdepth(t) is the largest number of recursion nodes on any root-to-leaf
// path: 0 at a leaf, max of the children plus one exactly at Rec. Macro
// nodes contribute nothing, so rdepth is stable under expand_macros. A term
// of rdepth n denotes a function in Grzegorczyk class E^(n+1); the bound is
// reported, not verified.
//
// min_rdepth searches the rewrite graph for an equivalent term of smaller
// rdepth. With the pruning rules enabled the bound can drop; coherence
// rewrites alone can never change it (theorem2_check measures exactly that).

#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gen.hpp"
#include "proof.hpp"
#include "rewrite.hpp"
#include "schemes.hpp"
#include "surface.hpp"
#include "term.hpp"

namespace pralg {

inline int rdepth(const Term& t) { return t.rdepth(); }

struct GrzClass {
  int index = 1;  // rdepth + 1
  friend bool operator==(GrzClass a, GrzClass b) { return a.index == b.index; }
};

inline GrzClass grz_bound(const Term& t) { return GrzClass{t.rdepth() + 1}; }

inline std::string grz_report(const Term& t) {
  return "function is in E^" + std::to_string(t.rdepth() + 1);
}

// ---------------------------------------------------------------------------
// budgeted minimum rdepth over the reachable equivalence class

struct MinRdepthResult {
  int bound = 0;
  Term witness;
  Proof proof;  // connects the input term to the witness
  std::size_t states_explored = 0;
};

inline MinRdepthResult min_rdepth(const Term& t, std::size_t budget = 10000,
                                  GroupSet groups = GroupSet::standard()) {
  struct Edge {
    Term parent;
    std::vector<ProofStep> steps;
    bool root = false;
  };
  const auto norm = normalizer_rules(groups);
  std::vector<ProofStep> intro;
  Term root = normalize(t, norm, &intro);
  std::unordered_map<Term, Edge, TermHash> visited;
  std::deque<Term> frontier{root};
  visited.emplace(root, Edge{{}, {}, true});
  Term best = root;
  std::size_t states = 1;
  while (!frontier.empty() && states < budget) {
    Term u = frontier.front();
    frontier.pop_front();
    for (const RewriteEdge& e : one_step_rewrites(u, groups)) {
      std::vector<ProofStep> steps{{e.rule->name, e.pos, e.dir, e.pick, std::nullopt}};
      Term v = normalize(e.result, norm, &steps);
      if (visited.count(v)) continue;
      visited.emplace(v, Edge{u, std::move(steps), false});
      ++states;
      if (v.rdepth() < best.rdepth()) best = v;
      frontier.push_back(v);
      if (states >= budget) break;
    }
  }
  Proof proof{t, best, intro};
  std::vector<std::vector<ProofStep>> chunks;
  for (Term cur = best;;) {
    const Edge& e = visited.at(cur);
    if (e.root) break;
    chunks.push_back(e.steps);
    cur = e.parent;
  }
  for (auto it = chunks.rbegin(); it != chunks.rend(); ++it)
    proof.steps.insert(proof.steps.end(), it->begin(), it->end());
  return {best.rdepth(), best, std::move(proof), states};
}

// ---------------------------------------------------------------------------
// Rdepth behaviour under single rewrite steps, measured on random terms:
// group II steps must preserve it exactly, group I steps must never raise it.

struct Theorem2Report {
  int trials = 0;
  long group2_steps = 0, group2_violations = 0;
  long group1_steps = 0, group1_violations = 0;
  std::string counterexample;  // first offending "term | rule | result"
  bool ok() const { return group2_violations == 0 && group1_violations == 0; }
};

inline Theorem2Report theorem2_check(int trials, int max_depth, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Theorem2Report rep;
  rep.trials = trials;
  GroupSet only2, only1;
  only2.gII = true;
  only1.gI = true;
  std::vector<const Rule*> instantiable;
  for (const Rule& r : rule_catalog())
    if (r.group == RuleGroup::I || r.group == RuleGroup::II) instantiable.push_back(&r);
  for (int i = 0; i < trials; ++i) {
    Term t;
    if (i % 2 == 0) {
      t = gen_any_term(rng, max_depth);
    } else {
      // seed half the trials with a rule redex so every rule gets exercised
      const Rule* r = instantiable[rng() % instantiable.size()];
      t = gen_rule_instance(*r, rng).first;
    }
    for (const RewriteEdge& e : one_step_rewrites(t, only2)) {
      ++rep.group2_steps;
      if (e.result.rdepth() != t.rdepth()) {
        ++rep.group2_violations;
        if (rep.counterexample.empty())
          rep.counterexample = print(t) + " | " + e.rule->name + " | " + print(e.result);
      }
    }
    for (const RewriteEdge& e : one_step_rewrites(t, only1)) {
      ++rep.group1_steps;
      if (e.result.rdepth() > t.rdepth()) {
        ++rep.group1_violations;
        if (rep.counterexample.empty())
          rep.counterexample = print(t) + " | " + e.rule->name + " | " + print(e.result);
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// rdepth profile of a scheme: one value per input size

struct RdepthProfile {
  std::vector<std::pair<int, int>> values;  // (n, rdepth), ascending in n
};

inline RdepthProfile scheme_profile(const Scheme& s, int n_max) {
  if (n_max < s.min_index)
    throw Error("scheme_profile: n_max below the scheme's smallest index");
  RdepthProfile p;
  for (int n = s.min_index; n <= n_max; ++n)
    p.values.push_back({n, s.generate(n).rdepth()});
  return p;
}

}  // namespace pralg
