#pragma once

// Seeded random generation of well-typed terms and of rule instances.
// Everything draws from a caller-supplied mt19937_64, so runs reproduce.
// Nested recursion is rationed (rec_left) because evaluation cost grows
// exponentially in the recursion nesting depth.

#include <random>
#include <utility>
#include <vector>

#include "rewrite.hpp"
#include "term.hpp"

namespace pralg {

struct GenOptions {
  int max_arity = 3;  // intermediate block widths drawn from 0..max_arity
  int rec_left = 2;   // how many nested recursions the generator may still spend
};

namespace gen_detail {

inline int rnd(std::mt19937_64& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// A map * -> N^m built from zeros and brackets.
inline Term const_tower(int m) {
  if (m == 0) return terminal(0);
  Term t = zero();
  for (int j = 1; j < m; ++j) t = brack(zero(), t);
  return t;
}

}  // namespace gen_detail

inline Term gen_term(std::mt19937_64& rng, int src, int dst, int depth,
                     GenOptions opts = {}) {
  using gen_detail::rnd;
  if (src == 0 && depth <= 0) {
    if (dst == 0) return terminal(0);
    return gen_detail::const_tower(dst);
  }
  if (depth > 0) {
    // try a handful of node shapes; fall through to a leaf if none sticks
    for (int attempt = 0; attempt < 4; ++attempt) {
      switch (rnd(rng, 0, 6)) {
        case 0: {  // comp through a random middle arity
          int mid = rnd(rng, 0, opts.max_arity);
          return comp(gen_term(rng, src, mid, depth - 1, opts),
                      gen_term(rng, mid, dst, depth - 1, opts));
        }
        case 1: {  // rec spends the last input coordinate
          if (src < 1 || opts.rec_left <= 0) break;
          GenOptions inner = opts;
          inner.rec_left -= 1;
          return rec(gen_term(rng, src - 1, dst, depth - 1, inner),
                     gen_term(rng, src - 1 + dst, dst, depth - 1, inner));
        }
        case 2: {  // brack splits the target
          if (dst < 1) break;
          int b = rnd(rng, 0, dst);
          return brack(gen_term(rng, src, b, depth - 1, opts),
                       gen_term(rng, src, dst - b, depth - 1, opts));
        }
        case 3: {  // prod splits source and target
          if (src < 1) break;
          int a = rnd(rng, 0, src), b = rnd(rng, 0, dst);
          return prod(gen_term(rng, a, b, depth - 1, opts),
                      gen_term(rng, src - a, dst - b, depth - 1, opts));
        }
        case 4: {  // bprod needs src = a + 2b, dst = 2b
          if (dst % 2 != 0 || src < dst) break;
          int b = dst / 2, a = src - dst;
          return bprod(gen_term(rng, a + b, b, depth - 1, opts),
                       gen_term(rng, a + b, b, depth - 1, opts));
        }
        case 5: {  // bcomp with random split and middle width
          int a = rnd(rng, 0, src), d = rnd(rng, 0, opts.max_arity);
          return bcomp(gen_term(rng, a + d, dst, depth - 1, opts),
                       gen_term(rng, src, d, depth - 1, opts));
        }
        case 6: {  // macro leaf early exit keeps trees ragged
          attempt = 4;
          break;
        }
      }
    }
  }
  // leaves
  std::vector<Term> options;
  if (src == 0 && dst == 0) options.push_back(terminal(0));
  if (src == 0 && dst == 1) options.push_back(zero());
  if (src == 0) options.push_back(gen_detail::const_tower(dst));
  if (src == 1 && dst == 1) {
    options.push_back(nul());
    options.push_back(succ());
  }
  if (src >= 1 && dst == 1) options.push_back(proj(src, rnd(rng, 1, src)));
  if (src >= 1) {
    std::vector<int> xs;
    for (int j = 0; j < dst; ++j) xs.push_back(rnd(rng, 1, src));
    options.push_back(mproj(src, std::move(xs)));
  }
  if (dst == 2 * src) options.push_back(diag(src));
  if (src == dst && src >= 1) {
    const int a = rnd(rng, 0, src);
    options.push_back(twist(a, src - a));
  }
  return options[rnd(rng, 0, static_cast<int>(options.size()) - 1)];
}

// A random well-typed term with arities up to opts.max_arity on both ends.
inline Term gen_any_term(std::mt19937_64& rng, int max_depth, GenOptions opts = {}) {
  using gen_detail::rnd;
  int src = rnd(rng, 0, opts.max_arity), dst = rnd(rng, 0, opts.max_arity);
  if (src == 0 && dst == 0) src = 1;  // bias away from the degenerate corner
  return gen_term(rng, src, dst, rnd(rng, 1, max_depth), opts);
}

// A random instance of a rule's left-hand side, paired with the right-hand
// side its forward application produces. Instances are small and keep nested
// recursion shallow so they stay cheap to evaluate.
inline std::pair<Term, Term> gen_rule_instance(const Rule& r, std::mt19937_64& rng) {
  using gen_detail::rnd;
  using namespace rules_detail;
  GenOptions opts;
  const std::string name = r.name;
  // rules that wrap the instance in their own recursion get recursion-free
  // parameters; iterating a term that itself loops on its accumulated value
  // blows past any evaluation budget
  const bool adds_rec = name == "rec-null" || name == "rec-brack" ||
                        name == "rec-unwind" || name == "rec-succ" || name == "rec-id";
  opts.rec_left = adds_rec ? 0 : 1;
  auto sub = [&](int s, int d) { return gen_term(rng, s, d, 2, opts); };
  for (int tries = 0; tries < 100; ++tries) {
    Term lhs;
    const int a = rnd(rng, 0, 2);
    const int b = rnd(rng, 0, 9) == 0 ? 0 : rnd(rng, 1, 2);
    if (name == "null-comp") lhs = comp(sub(rnd(rng, 1, 3), 1), nul());
    else if (name == "brack-fst" || name == "brack-snd") {
      const int c = rnd(rng, 0, 2);
      lhs = comp(brack(sub(a, b), sub(a, c)), name == "brack-fst" ? first_block(b, c)
                                                                  : second_block(b, c));
    } else if (name == "rec-null") {
      Term lift = a == 0 && rnd(rng, 0, 1) ? zero() : zero_lift(a);
      lhs = bcomp(rec(sub(a, b), sub(a + b, b)), lift);
    } else if (name == "comp-assoc") {
      const int m1 = rnd(rng, 0, 2), m2 = rnd(rng, 0, 2), d = rnd(rng, 0, 2);
      lhs = comp(comp(sub(a, m1), sub(m1, m2)), sub(m2, d));
    } else if (name == "comp-id") {
      Term f = sub(a, rnd(rng, 0, 2));
      lhs = rnd(rng, 0, 1) ? comp(identity(f.src().k), f) : comp(f, identity(f.dst().k));
    } else if (name == "comp-brack-dist") {
      const int c1 = rnd(rng, 0, 2), c2 = rnd(rng, 0, 2);
      lhs = comp(sub(a, b), brack(sub(b, c1), sub(b, c2)));
    } else if (name == "brack-assoc")
      lhs = brack(brack(sub(a, b), sub(a, rnd(rng, 0, 2))), sub(a, rnd(rng, 0, 2)));
    else if (name == "brack-twist")
      lhs = brack(sub(a, b), sub(a, rnd(rng, 0, 2)));
    else if (name == "brack-diag")
      lhs = brack(identity(a), identity(a));
    else if (name == "twist-idem")
      lhs = comp(twist(a, b), twist(b, a));
    else if (name == "twist-hexagon")
      lhs = hexagon_lhs(a, b, rnd(rng, 0, 2));
    else if (name == "rec-brack")
      lhs = rec(brack(sub(a, b), sub(a, b)), bprod(sub(a + b, b), sub(a + b, b)));
    else if (name == "rec-unwind") {
      Term g1 = sub(a + b, b);
      lhs = bcomp(g1, rec(sub(a, b), bcomp(sub(a + b, b), g1)));
    } else if (name == "rec-succ")
      lhs = bcomp(rec(sub(a, b), sub(a + b, b)), succ_lift(a));
    else if (name == "rec-id")
      lhs = rec(sub(a, b), second_block(a, b));
    else if (name == "defn-prod")
      lhs = prod(sub(a, b), sub(rnd(rng, 0, 2), rnd(rng, 0, 2)));
    else if (name == "defn-diag")
      lhs = diag(rnd(rng, 0, 3));
    else if (name == "defn-twist")
      lhs = twist(a, rnd(rng, 0, 2));
    else if (name == "defn-bprod")
      lhs = bprod(sub(a + b, b), sub(a + b, b));
    else if (name == "defn-bcomp") {
      const int d = rnd(rng, 0, 2), c = rnd(rng, 0, 2);
      lhs = bcomp(sub(a + d, b), sub(a + c, d));
    } else if (name == "defn-mpi") {
      const int k = rnd(rng, 1, 4), m = rnd(rng, 1, 4);
      std::vector<int> xs;
      for (int j = 0; j < m; ++j) xs.push_back(rnd(rng, 1, k));
      lhs = mproj(k, std::move(xs));
    } else if (name == "interchange") {
      const int a2 = rnd(rng, 0, 2), a3 = rnd(rng, 0, 2);
      const int b1 = rnd(rng, 0, 2), b2 = rnd(rng, 0, 2), b3 = rnd(rng, 0, 2);
      lhs = comp(prod(sub(a, a2), sub(b1, b2)), prod(sub(a2, a3), sub(b2, b3)));
    } else if (name == "prod-assoc")
      lhs = prod(prod(sub(a, b), sub(rnd(rng, 0, 2), rnd(rng, 0, 2))),
                 sub(rnd(rng, 0, 2), rnd(rng, 0, 2)));
    else if (name == "prod-id")
      lhs = prod(identity(a), identity(rnd(rng, 0, 3)));
    else
      throw Error(std::string("gen_rule_instance: no generator for rule ") + r.name);
    auto out = r.fwd(lhs);
    if (!out.empty()) return {lhs, out[0]};
  }
  throw Error(std::string("gen_rule_instance: could not hit rule ") + r.name);
}

}  // namespace pralg
