#pragma once

// The bounded equivalence prover. Whether two descriptions are related by
// the rewrite rules is a word problem with no decision procedure, so the
// result has three honest arms:
//
//   Proved   the bidirectional breadth-first searches met; carries a proof
//            certificate that replays from t1 to t2
//   Refuted  a sampled input distinguishes the two terms, so no rule path
//            can ever connect them (the rules are semantics-preserving)
//   Unknown  the state budget ran out first
//
// The search runs meet-in-the-middle over the quotient graph whose states
// are kept normal under the terminating oriented subset of the enabled
// groups (normalizer_rules): each successor is one enabled rewrite step
// followed by renormalization, with the full step trace kept on the edge so
// certificates replay. Frontiers are hash-deduplicated, expansion order is
// canonical, and the seed only feeds the refutation sampler, so the outcome
// is deterministic for a fixed budget and seed.

#include <cstdint>
#include <deque>
#include <unordered_map>
#include <variant>
#include <vector>

#include "interp.hpp"
#include "proof.hpp"
#include "rewrite.hpp"
#include "term.hpp"

namespace pralg {

struct Proved {
  Proof proof;
};
struct Refuted {
  Tuple witness, left, right;
};
struct Unknown {
  std::size_t states_explored = 0;
};
using EquivResult = std::variant<Proved, Refuted, Unknown>;

inline bool proved(const EquivResult& r) { return std::holds_alternative<Proved>(r); }

namespace equiv_detail {

struct ParentEdge {
  Term parent;
  std::vector<ProofStep> steps;  // parent -> child, all replayable forward
  bool root = false;
};

using Visited = std::unordered_map<Term, ParentEdge, TermHash>;

// Steps from this side's root to `from`, concatenated in travel order.
inline std::vector<ProofStep> steps_from_root(const Visited& visited, Term from) {
  std::vector<std::vector<ProofStep>> chunks;
  for (;;) {
    const ParentEdge& e = visited.at(from);
    if (e.root) break;
    chunks.push_back(e.steps);
    from = e.parent;
  }
  std::vector<ProofStep> out;
  for (auto it = chunks.rbegin(); it != chunks.rend(); ++it)
    out.insert(out.end(), it->begin(), it->end());
  return out;
}

}  // namespace equiv_detail

inline EquivResult equiv(const Term& t1, const Term& t2, std::size_t budget = 10000,
                         GroupSet groups = GroupSet::standard(), std::uint64_t seed = 0) {
  if (arity_of(t1) != arity_of(t2))
    throw ArityMismatch("equiv: terms must share source and target arity");

  // Cheap refutation first: a distinguishing input settles the question.
  try {
    Verdict v = ext_equal(t1, t2, 64, 10, seed);
    if (auto* ne = std::get_if<NotEqual>(&v))
      return Refuted{ne->witness, ne->left, ne->right};
  } catch (const FuelExhausted&) {
    // too expensive to sample; fall through to the search
  }

  const auto norm = normalizer_rules(groups);
  std::vector<ProofStep> intro[2];
  Term roots[2] = {normalize(t1, norm, &intro[0]), normalize(t2, norm, &intro[1])};

  auto finish = [&](const Term& meet, const equiv_detail::Visited& va,
                    const equiv_detail::Visited& vb) -> EquivResult {
    Proof p{t1, t2, intro[0]};
    auto fwd = equiv_detail::steps_from_root(va, meet);
    p.steps.insert(p.steps.end(), fwd.begin(), fwd.end());
    // travel the t2 side backwards: root-to-meet steps, inverted
    auto down = intro[1];
    auto more = equiv_detail::steps_from_root(vb, meet);
    down.insert(down.end(), more.begin(), more.end());
    auto up = invert_steps(t2, down);
    p.steps.insert(p.steps.end(), up.begin(), up.end());
    return Proved{std::move(p)};
  };

  equiv_detail::Visited visited[2];
  std::deque<Term> frontier[2];
  visited[0].emplace(roots[0], equiv_detail::ParentEdge{{}, {}, true});
  if (roots[0] == roots[1]) return finish(roots[0], visited[0], visited[0]);
  visited[1].emplace(roots[1], equiv_detail::ParentEdge{{}, {}, true});
  frontier[0].push_back(roots[0]);
  frontier[1].push_back(roots[1]);
  std::size_t states = 2;

  while (states < budget && (!frontier[0].empty() || !frontier[1].empty())) {
    int side;
    if (frontier[0].empty()) side = 1;
    else if (frontier[1].empty()) side = 0;
    else side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    const int other = 1 - side;

    Term u = frontier[side].front();
    frontier[side].pop_front();
    for (const RewriteEdge& e : one_step_rewrites(u, groups)) {
      std::vector<ProofStep> steps{{e.rule->name, e.pos, e.dir, e.pick, std::nullopt}};
      Term v = normalize(e.result, norm, &steps);
      if (visited[side].count(v)) continue;
      visited[side].emplace(v, equiv_detail::ParentEdge{u, std::move(steps), false});
      ++states;
      if (visited[other].count(v)) return finish(v, visited[0], visited[1]);
      frontier[side].push_back(v);
      if (states >= budget) return Unknown{states};
    }
  }
  return Unknown{states};
}

}  // namespace pralg
