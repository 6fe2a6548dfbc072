#pragma once

// The equivalence relations on description trees, as a catalog of named
// rewrite rules over Terms.
//
// Group I  (information loss; oriented left-to-right, used by prune):
//   null-comp    n . f            =>  n . pi1
//   brack-fst    pi_B . <f,g>     =>  f
//   brack-snd    pi_C . <f,g>     =>  g
//   rec-null     (f # g) o2 z_A   =>  f
// Group II (coherence; bidirectional, preserves Rdepth):
//   comp-assoc, comp-id, comp-brack-dist, brack-assoc, brack-twist,
//   brack-diag, twist-idem, twist-hexagon, rec-brack, rec-unwind, rec-succ
// Group III (optional; changes Rdepth, off by default):
//   rec-id       f # pi_B         <=> f . pi_A
// Group Defn (macro unfolding, bidirectional):
//   defn-prod, defn-diag, defn-twist, defn-bprod, defn-bcomp, defn-mpi
// Group Derived (optional shortcut pack; consequences of the above):
//   interchange, prod-assoc, prod-id
//
// Matching is purely syntactic at the macro level; the canonical identity is
// the multi-projection id[k], and defn-mpi bridges pi[1,1] <-> mpi[1;1] where
// the single-projection form appears instead. The lifts in rec-null and
// rec-succ fix the typing the informal n/s notation leaves open:
//   z_A = z . mpi[A;]            : A -> N
//   s_A = s . pi[A+1,A+1]        : A x N -> N
//
// Every rule application at a fixed (position, direction, pick index) is
// deterministic, and forward/backward applications of a bidirectional rule
// are exact mutual inverses; proof replay depends on both properties.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "term.hpp"

namespace pralg {

enum class RuleGroup : std::uint8_t { I, II, III, Defn, Derived };
enum class RDir : std::uint8_t { fwd, bwd };

inline const char* group_name(RuleGroup g) {
  switch (g) {
    case RuleGroup::I: return "I";
    case RuleGroup::II: return "II";
    case RuleGroup::III: return "III";
    case RuleGroup::Defn: return "Defn";
    case RuleGroup::Derived: return "Derived";
  }
  return "?";
}

struct GroupSet {
  bool gI = false, gII = false, gIII = false, gDefn = false, gDerived = false;

  bool enabled(RuleGroup g) const {
    switch (g) {
      case RuleGroup::I: return gI;
      case RuleGroup::II: return gII;
      case RuleGroup::III: return gIII;
      case RuleGroup::Defn: return gDefn;
      case RuleGroup::Derived: return gDerived;
    }
    return false;
  }
  static GroupSet standard() { return {true, true, false, true, false}; }
  static GroupSet all() { return {true, true, true, true, true}; }
};

// Parses "I,II,Defn" style lists (tokens I, II, III, Defn, Derived).
inline GroupSet parse_groups(const std::string& text) {
  GroupSet gs;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    if (tok == "I") gs.gI = true;
    else if (tok == "II") gs.gII = true;
    else if (tok == "III") gs.gIII = true;
    else if (tok == "Defn" || tok == "defn") gs.gDefn = true;
    else if (tok == "Derived" || tok == "derived") gs.gDerived = true;
    else throw Error("unknown rule group '" + tok + "'");
    tok.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ') flush();
    else tok += c;
  }
  flush();
  return gs;
}

struct Rule {
  const char* name;
  RuleGroup group;
  bool bidirectional;
  const char* equation;  // display form for listings
  std::vector<Term> (*fwd)(const Term&);
  std::vector<Term> (*bwd)(const Term&);
  // comp-id's backward side is a bare metavariable: it would "match" every
  // term at every position. It stays available to replay and inversion but
  // is not enumerated by one_step_rewrites.
  bool expand_bwd = true;
};

namespace rules_detail {

inline void push_unique(std::vector<Term>& out, Term t) {
  for (const Term& u : out)
    if (u == t) return;
  out.push_back(std::move(t));
}

inline bool is_block(const Term& t, int lo, int width, int k) {
  if (t.op() != Op::MProj || t.k() != k) return false;
  const auto& xs = t.xs();
  if (static_cast<int>(xs.size()) != width) return false;
  for (int j = 0; j < width; ++j)
    if (xs[j] != lo + j + 1) return false;
  return true;
}

// pi^{B x C}_B and pi^{B x C}_C as canonical multi-projections
inline Term first_block(int b, int c) { return mproj(b + c, iota_list(1, b)); }
inline Term second_block(int b, int c) { return mproj(b + c, iota_list(b + 1, b + c)); }

// the lifted zero and successor used by rec-null / rec-succ
inline Term zero_lift(int a) { return comp(terminal(a), zero()); }
inline Term succ_lift(int a) { return comp(proj(a + 1, a + 1), succ()); }

inline std::vector<Term> none() { return {}; }

// --- group I ---------------------------------------------------------------

inline std::vector<Term> null_comp_fwd(const Term& t) {
  if (t.op() != Op::Comp || t.right().op() != Op::Null) return {};
  const Term f = t.left();
  const int k = f.src().k;
  if (k < 1) return {};                                   // no projection out of *
  if (f.op() == Op::Proj && f.k() == k && f.index() == 1) return {};  // already pruned
  return {comp(proj(k, 1), nul())};
}

inline std::vector<Term> brack_fst_fwd(const Term& t) {
  if (t.op() != Op::Comp || t.left().op() != Op::Brack) return {};
  const Term br = t.left();
  const int b = br.left().dst().k, c = br.right().dst().k;
  if (!is_block(t.right(), 0, b, b + c)) return {};
  return {br.left()};
}

inline std::vector<Term> brack_snd_fwd(const Term& t) {
  if (t.op() != Op::Comp || t.left().op() != Op::Brack) return {};
  const Term br = t.left();
  const int b = br.left().dst().k, c = br.right().dst().k;
  if (!is_block(t.right(), b, c, b + c)) return {};
  return {br.right()};
}

inline std::vector<Term> rec_null_fwd(const Term& t) {
  if (t.op() != Op::BComp || t.left().op() != Op::Rec) return {};
  const int a = t.left().src().k - 1;
  // over the terminal parameter block the lift z . mpi[0;] collapses to z
  const bool lifted = t.right() == zero_lift(a);
  const bool bare = a == 0 && t.right().op() == Op::Zero;
  if (!lifted && !bare) return {};
  return {t.left().left()};
}

// --- group II --------------------------------------------------------------

inline std::vector<Term> comp_assoc_fwd(const Term& t) {
  if (t.op() != Op::Comp || t.left().op() != Op::Comp) return {};
  return {comp(t.left().left(), comp(t.left().right(), t.right()))};
}
inline std::vector<Term> comp_assoc_bwd(const Term& t) {
  if (t.op() != Op::Comp || t.right().op() != Op::Comp) return {};
  return {comp(comp(t.left(), t.right().left()), t.right().right())};
}

inline std::vector<Term> comp_id_fwd(const Term& t) {
  if (t.op() != Op::Comp) return {};
  std::vector<Term> out;
  if (is_identity(t.left())) push_unique(out, t.right());
  if (is_identity(t.right())) push_unique(out, t.left());
  return out;
}
inline std::vector<Term> comp_id_bwd(const Term& t) {
  std::vector<Term> out;
  push_unique(out, comp(identity(t.src().k), t));
  push_unique(out, comp(t, identity(t.dst().k)));
  return out;
}

inline std::vector<Term> comp_brack_fwd(const Term& t) {
  if (t.op() != Op::Comp || t.right().op() != Op::Brack) return {};
  const Term g = t.left(), f1 = t.right().left(), f2 = t.right().right();
  return {brack(comp(g, f1), comp(g, f2))};
}
inline std::vector<Term> comp_brack_bwd(const Term& t) {
  if (t.op() != Op::Brack || t.left().op() != Op::Comp || t.right().op() != Op::Comp)
    return {};
  if (t.left().left() != t.right().left()) return {};
  return {comp(t.left().left(), brack(t.left().right(), t.right().right()))};
}

inline std::vector<Term> brack_assoc_fwd(const Term& t) {
  if (t.op() != Op::Brack || t.left().op() != Op::Brack) return {};
  return {brack(t.left().left(), brack(t.left().right(), t.right()))};
}
inline std::vector<Term> brack_assoc_bwd(const Term& t) {
  if (t.op() != Op::Brack || t.right().op() != Op::Brack) return {};
  return {brack(brack(t.left(), t.right().left()), t.right().right())};
}

inline std::vector<Term> brack_twist_fwd(const Term& t) {
  if (t.op() != Op::Brack) return {};
  return {comp(brack(t.right(), t.left()), twist(t.right().dst().k, t.left().dst().k))};
}
inline std::vector<Term> brack_twist_bwd(const Term& t) {
  if (t.op() != Op::Comp || t.left().op() != Op::Brack || t.right().op() != Op::Twist)
    return {};
  const Term br = t.left();
  if (t.right().tw_a() != br.left().dst().k || t.right().tw_b() != br.right().dst().k)
    return {};
  return {brack(br.right(), br.left())};
}

inline std::vector<Term> brack_diag_fwd(const Term& t) {
  if (t.op() != Op::Brack || !is_identity(t.left()) || !is_identity(t.right())) return {};
  return {diag(t.left().k())};
}
inline std::vector<Term> brack_diag_bwd(const Term& t) {
  if (t.op() != Op::Diag) return {};
  return {brack(identity(t.k()), identity(t.k()))};
}

inline std::vector<Term> twist_idem_fwd(const Term& t) {
  if (t.op() != Op::Comp || t.left().op() != Op::Twist || t.right().op() != Op::Twist)
    return {};
  if (t.left().tw_a() != t.right().tw_b() || t.left().tw_b() != t.right().tw_a()) return {};
  return {identity(t.src().k)};
}
inline std::vector<Term> twist_idem_bwd(const Term& t) {
  if (!is_identity(t)) return {};
  std::vector<Term> out;
  for (int a = 0; a <= t.k(); ++a)
    push_unique(out, comp(twist(a, t.k() - a), twist(t.k() - a, a)));
  return out;
}

// Prod(Twist(a,b), id_c) and Prod(id_w, Twist(a,b)) shapes for the hexagon
inline bool match_tw_x_id(const Term& t, int& a, int& b, int& c) {
  if (t.op() != Op::Prod || t.left().op() != Op::Twist || !is_identity(t.right()))
    return false;
  a = t.left().tw_a(); b = t.left().tw_b(); c = t.right().k();
  return true;
}
inline bool match_id_x_tw(const Term& t, int& w, int& a, int& b) {
  if (t.op() != Op::Prod || !is_identity(t.left()) || t.right().op() != Op::Twist)
    return false;
  w = t.left().k(); a = t.right().tw_a(); b = t.right().tw_b();
  return true;
}

inline Term hexagon_lhs(int a, int b, int c) {
  return comp(prod(twist(a, b), identity(c)),
              comp(prod(identity(b), twist(a, c)), prod(twist(b, c), identity(a))));
}
inline Term hexagon_rhs(int a, int b, int c) {
  return comp(prod(identity(a), twist(b, c)),
              comp(prod(twist(a, c), identity(b)), prod(identity(c), twist(a, b))));
}

inline std::vector<Term> hexagon_fwd(const Term& t) {
  if (t.op() != Op::Comp || t.right().op() != Op::Comp) return {};
  int a1, b1, c1, w2, a2, c2, b3, c3, a3;
  if (!match_tw_x_id(t.left(), a1, b1, c1)) return {};
  if (!match_id_x_tw(t.right().left(), w2, a2, c2)) return {};
  if (!match_tw_x_id(t.right().right(), b3, c3, a3)) return {};
  if (a1 != a2 || a1 != a3 || b1 != w2 || b1 != b3 || c1 != c2 || c1 != c3) return {};
  return {hexagon_rhs(a1, b1, c1)};
}
inline std::vector<Term> hexagon_bwd(const Term& t) {
  if (t.op() != Op::Comp || t.right().op() != Op::Comp) return {};
  int a1, b1, c1, a2, c2, w2, c3, a3, b3;
  if (!match_id_x_tw(t.left(), a1, b1, c1)) return {};
  if (!match_tw_x_id(t.right().left(), a2, c2, w2)) return {};
  if (!match_id_x_tw(t.right().right(), c3, a3, b3)) return {};
  if (a1 != a2 || a1 != a3 || b1 != w2 || b1 != b3 || c1 != c2 || c1 != c3) return {};
  return {hexagon_lhs(a1, b1, c1)};
}

inline std::vector<Term> rec_brack_fwd(const Term& t) {
  if (t.op() != Op::Rec || t.left().op() != Op::Brack || t.right().op() != Op::BProd)
    return {};
  const Term f1 = t.left().left(), f2 = t.left().right();
  const Term g1 = t.right().left(), g2 = t.right().right();
  const int b = g1.dst().k;
  if (f1.dst().k != b || f2.dst().k != b) return {};  // blocks must line up
  return {brack(rec(f1, g1), rec(f2, g2))};
}
inline std::vector<Term> rec_brack_bwd(const Term& t) {
  if (t.op() != Op::Brack || t.left().op() != Op::Rec || t.right().op() != Op::Rec)
    return {};
  const Term f1 = t.left().left(), g1 = t.left().right();
  const Term f2 = t.right().left(), g2 = t.right().right();
  if (arity_of(f1) != arity_of(f2)) return {};
  return {rec(brack(f1, f2), bprod(g1, g2))};
}

inline bool unwind_shapes_ok(const Term& f, const Term& g1, const Term& g2) {
  const int a = f.src().k, b = f.dst().k;
  return g1.src().k == a + b && g1.dst().k == b && g2.src().k == a + b && g2.dst().k == b;
}

inline std::vector<Term> rec_unwind_fwd(const Term& t) {
  // g1 o2 (f # (g2 o2 g1))  =>  (g1 o2 f) # (g1 o2 g2)
  if (t.op() != Op::BComp || t.right().op() != Op::Rec) return {};
  const Term g1 = t.left(), f = t.right().left(), inner = t.right().right();
  if (inner.op() != Op::BComp || inner.right() != g1) return {};
  const Term g2 = inner.left();
  if (!unwind_shapes_ok(f, g1, g2)) return {};
  return {rec(bcomp(g1, f), bcomp(g1, g2))};
}
inline std::vector<Term> rec_unwind_bwd(const Term& t) {
  if (t.op() != Op::Rec || t.left().op() != Op::BComp || t.right().op() != Op::BComp)
    return {};
  if (t.left().left() != t.right().left()) return {};
  const Term g1 = t.left().left(), f = t.left().right(), g2 = t.right().right();
  if (!unwind_shapes_ok(f, g1, g2)) return {};
  return {bcomp(g1, rec(f, bcomp(g2, g1)))};
}

inline std::vector<Term> rec_succ_fwd(const Term& t) {
  // (f # g) o2 s_A  =>  g o2 (f # g)
  if (t.op() != Op::BComp || t.left().op() != Op::Rec) return {};
  const int a = t.left().src().k - 1;
  if (t.right() != succ_lift(a)) return {};
  return {bcomp(t.left().right(), t.left())};
}
inline std::vector<Term> rec_succ_bwd(const Term& t) {
  if (t.op() != Op::BComp || t.right().op() != Op::Rec) return {};
  if (t.right().right() != t.left()) return {};
  return {bcomp(t.right(), succ_lift(t.right().src().k - 1))};
}

// --- group III -------------------------------------------------------------

inline std::vector<Term> rec_id_fwd(const Term& t) {
  // f # pi_B  =>  f . pi_A   (drops the recursion entirely)
  if (t.op() != Op::Rec) return {};
  const Term f = t.left();
  const int a = f.src().k, b = f.dst().k;
  if (!is_block(t.right(), a, b, a + b)) return {};
  return {comp(mproj(a + 1, iota_list(1, a)), f)};
}
inline std::vector<Term> rec_id_bwd(const Term& t) {
  if (t.op() != Op::Comp || t.left().op() != Op::MProj) return {};
  const Term f = t.right();
  const int a = f.src().k, b = f.dst().k;
  if (!is_block(t.left(), 0, a, a + 1)) return {};
  return {rec(f, second_block(a, b))};
}

// --- group Defn ------------------------------------------------------------

inline std::vector<Term> defn_prod_fwd(const Term& t) {
  if (t.op() != Op::Prod) return {};
  const int a = t.left().src().k, c = t.right().src().k;
  return {brack(comp(first_block(a, c), t.left()), comp(second_block(a, c), t.right()))};
}
inline std::vector<Term> defn_prod_bwd(const Term& t) {
  if (t.op() != Op::Brack || t.left().op() != Op::Comp || t.right().op() != Op::Comp)
    return {};
  const Term f = t.left().right(), g = t.right().right();
  const int a = f.src().k, c = g.src().k;
  if (t.left().left() != first_block(a, c) || t.right().left() != second_block(a, c))
    return {};
  return {prod(f, g)};
}

inline std::vector<Term> defn_diag_fwd(const Term& t) {
  if (t.op() != Op::Diag) return {};
  auto xs = iota_list(1, t.k());
  auto twice = xs;
  twice.insert(twice.end(), xs.begin(), xs.end());
  return {mproj(t.k(), std::move(twice))};
}
inline std::vector<Term> defn_diag_bwd(const Term& t) {
  if (t.op() != Op::MProj) return {};
  const int k = t.k();
  if (static_cast<int>(t.xs().size()) != 2 * k) return {};
  for (int j = 0; j < 2 * k; ++j)
    if (t.xs()[j] != j % k + 1) return {};
  return {diag(k)};
}

inline std::vector<int> twist_list(int a, int b) {
  auto xs = iota_list(a + 1, a + b);
  auto rest = iota_list(1, a);
  xs.insert(xs.end(), rest.begin(), rest.end());
  return xs;
}

inline std::vector<Term> defn_twist_fwd(const Term& t) {
  if (t.op() != Op::Twist) return {};
  return {mproj(t.src().k, twist_list(t.tw_a(), t.tw_b()))};
}
inline std::vector<Term> defn_twist_bwd(const Term& t) {
  if (t.op() != Op::MProj) return {};
  const int k = t.k();
  if (static_cast<int>(t.xs().size()) != k) return {};
  if (is_identity(t)) {
    std::vector<Term> out;
    push_unique(out, twist(0, k));
    push_unique(out, twist(k, 0));
    return out;
  }
  if (k < 2) return {};
  const int a = t.xs()[0] - 1;
  if (a < 1 || a >= k) return {};
  if (t.xs() != twist_list(a, k - a)) return {};
  return {twist(a, k - a)};
}

inline std::vector<Term> defn_bprod_fwd(const Term& t) {
  if (t.op() != Op::BProd) return {};
  const int b = t.left().dst().k, a = t.left().src().k - b;
  auto x2 = iota_list(1, a);
  auto hi = iota_list(a + b + 1, a + 2 * b);
  x2.insert(x2.end(), hi.begin(), hi.end());
  return {brack(comp(mproj(a + 2 * b, iota_list(1, a + b)), t.left()),
                comp(mproj(a + 2 * b, std::move(x2)), t.right()))};
}
inline std::vector<Term> defn_bprod_bwd(const Term& t) {
  if (t.op() != Op::Brack || t.left().op() != Op::Comp || t.right().op() != Op::Comp)
    return {};
  const Term g1 = t.left().right(), g2 = t.right().right();
  if (arity_of(g1) != arity_of(g2)) return {};
  const int b = g1.dst().k, a = g1.src().k - b;
  if (a < 0) return {};
  auto x2 = iota_list(1, a);
  auto hi = iota_list(a + b + 1, a + 2 * b);
  x2.insert(x2.end(), hi.begin(), hi.end());
  if (t.left().left() != mproj(a + 2 * b, iota_list(1, a + b)) ||
      t.right().left() != mproj(a + 2 * b, std::move(x2)))
    return {};
  return {bprod(g1, g2)};
}

inline std::vector<Term> defn_bcomp_fwd(const Term& t) {
  // g1 o2 g2 = g1 . <pi_A, g2>
  if (t.op() != Op::BComp) return {};
  const int a = t.left().src().k - t.right().dst().k;
  return {comp(brack(mproj(t.right().src().k, iota_list(1, a)), t.right()), t.left())};
}
inline std::vector<Term> defn_bcomp_bwd(const Term& t) {
  if (t.op() != Op::Comp || t.left().op() != Op::Brack) return {};
  const Term m = t.left().left(), g2 = t.left().right(), g1 = t.right();
  if (m.op() != Op::MProj) return {};
  const int a = static_cast<int>(m.xs().size());
  if (!is_block(m, 0, a, g2.src().k)) return {};
  return {bcomp(g1, g2)};
}

inline std::vector<Term> defn_mpi_fwd(const Term& t) {
  if (t.op() != Op::MProj) return {};
  const auto& xs = t.xs();
  if (xs.empty()) return {};
  if (xs.size() == 1) return {proj(t.k(), xs[0])};
  return {brack(proj(t.k(), xs[0]), mproj(t.k(), std::vector<int>(xs.begin() + 1, xs.end())))};
}
inline std::vector<Term> defn_mpi_bwd(const Term& t) {
  if (t.op() == Op::Proj) return {mproj(t.k(), {t.index()})};
  if (t.op() == Op::Brack && t.left().op() == Op::Proj && t.right().op() == Op::MProj &&
      t.left().k() == t.right().k()) {
    std::vector<int> xs{t.left().index()};
    xs.insert(xs.end(), t.right().xs().begin(), t.right().xs().end());
    return {mproj(t.left().k(), std::move(xs))};
  }
  return {};
}

// --- group Derived ---------------------------------------------------------

inline std::vector<Term> interchange_fwd(const Term& t) {
  if (t.op() != Op::Comp || t.left().op() != Op::Prod || t.right().op() != Op::Prod)
    return {};
  if (t.left().left().dst() != t.right().left().src()) return {};  // blocks must align
  return {prod(comp(t.left().left(), t.right().left()),
               comp(t.left().right(), t.right().right()))};
}
inline std::vector<Term> interchange_bwd(const Term& t) {
  if (t.op() != Op::Prod || t.left().op() != Op::Comp || t.right().op() != Op::Comp)
    return {};
  return {comp(prod(t.left().left(), t.right().left()),
               prod(t.left().right(), t.right().right()))};
}

inline std::vector<Term> prod_assoc_fwd(const Term& t) {
  if (t.op() != Op::Prod || t.left().op() != Op::Prod) return {};
  return {prod(t.left().left(), prod(t.left().right(), t.right()))};
}
inline std::vector<Term> prod_assoc_bwd(const Term& t) {
  if (t.op() != Op::Prod || t.right().op() != Op::Prod) return {};
  return {prod(prod(t.left(), t.right().left()), t.right().right())};
}

inline std::vector<Term> prod_id_fwd(const Term& t) {
  if (t.op() != Op::Prod || !is_identity(t.left()) || !is_identity(t.right())) return {};
  return {identity(t.left().k() + t.right().k())};
}
inline std::vector<Term> prod_id_bwd(const Term& t) {
  if (!is_identity(t)) return {};
  std::vector<Term> out;
  for (int a = 0; a <= t.k(); ++a)
    push_unique(out, prod(identity(a), identity(t.k() - a)));
  return out;
}

}  // namespace rules_detail

inline const std::vector<Rule>& rule_catalog() {
  using namespace rules_detail;
  static const std::vector<Rule> catalog = {
      {"null-comp", RuleGroup::I, false, "n . f => n . pi1", null_comp_fwd, nullptr},
      {"brack-fst", RuleGroup::I, false, "pi_B . <f,g> => f", brack_fst_fwd, nullptr},
      {"brack-snd", RuleGroup::I, false, "pi_C . <f,g> => g", brack_snd_fwd, nullptr},
      {"rec-null", RuleGroup::I, false, "(f # g) o2 z => f", rec_null_fwd, nullptr},
      {"comp-assoc", RuleGroup::II, true, "h.(g.f) ~ (h.g).f", comp_assoc_fwd, comp_assoc_bwd},
      {"comp-id", RuleGroup::II, true, "f.id ~ f ~ id.f", comp_id_fwd, comp_id_bwd,
       false},
      {"comp-brack-dist", RuleGroup::II, true, "<f1,f2>.g ~ <f1.g,f2.g>", comp_brack_fwd,
       comp_brack_bwd},
      {"brack-assoc", RuleGroup::II, true, "<<f,g>,h> ~ <f,<g,h>>", brack_assoc_fwd,
       brack_assoc_bwd},
      {"brack-twist", RuleGroup::II, true, "<f,g> ~ tw.<g,f>", brack_twist_fwd,
       brack_twist_bwd},
      {"brack-diag", RuleGroup::II, true, "<id,id> ~ diag", brack_diag_fwd, brack_diag_bwd},
      {"twist-idem", RuleGroup::II, true, "tw.tw ~ id", twist_idem_fwd, twist_idem_bwd},
      {"twist-hexagon", RuleGroup::II, true, "hexagon on three-block twists", hexagon_fwd,
       hexagon_bwd},
      {"rec-brack", RuleGroup::II, true, "<f1,f2>#(g1[x]g2) ~ <f1#g1,f2#g2>", rec_brack_fwd,
       rec_brack_bwd},
      {"rec-unwind", RuleGroup::II, true, "g1 o2 (f#(g2 o2 g1)) ~ (g1 o2 f)#(g1 o2 g2)",
       rec_unwind_fwd, rec_unwind_bwd},
      {"rec-succ", RuleGroup::II, true, "(f#g) o2 s ~ g o2 (f#g)", rec_succ_fwd,
       rec_succ_bwd},
      {"rec-id", RuleGroup::III, true, "f#pi_B ~ f.pi_A", rec_id_fwd, rec_id_bwd},
      {"defn-prod", RuleGroup::Defn, true, "f x g ~ <f.pi_A, g.pi_C>", defn_prod_fwd,
       defn_prod_bwd},
      {"defn-diag", RuleGroup::Defn, true, "diag ~ mpi[k;1..k,1..k]", defn_diag_fwd,
       defn_diag_bwd},
      {"defn-twist", RuleGroup::Defn, true, "tw ~ mpi[a+b;a+1..a+b,1..a]", defn_twist_fwd,
       defn_twist_bwd},
      {"defn-bprod", RuleGroup::Defn, true, "g1[x]g2 ~ <g1.pi, g2.pi>", defn_bprod_fwd,
       defn_bprod_bwd},
      {"defn-bcomp", RuleGroup::Defn, true, "g1 o2 g2 ~ g1.<pi_A,g2>", defn_bcomp_fwd,
       defn_bcomp_bwd},
      {"defn-mpi", RuleGroup::Defn, true, "mpi ~ nested <pi,...>", defn_mpi_fwd,
       defn_mpi_bwd},
      {"interchange", RuleGroup::Derived, true, "(f2xg2).(f1xg1) ~ (f2.f1)x(g2.g1)",
       interchange_fwd, interchange_bwd},
      {"prod-assoc", RuleGroup::Derived, true, "fx(gxh) ~ (fxg)xh", prod_assoc_fwd,
       prod_assoc_bwd},
      {"prod-id", RuleGroup::Derived, true, "id x id ~ id", prod_id_fwd, prod_id_bwd},
  };
  return catalog;
}

inline const Rule* find_rule(const std::string& name) {
  for (const Rule& r : rule_catalog())
    if (name == r.name) return &r;
  return nullptr;
}

inline std::vector<Term> apply_rule(const Rule& r, RDir dir, const Term& t) {
  if (dir == RDir::fwd) return r.fwd(t);
  if (!r.bidirectional) return {};
  return r.bwd(t);
}

// ---------------------------------------------------------------------------
// one-step rewriting

struct RewriteEdge {
  const Rule* rule;
  Position pos;
  RDir dir;
  int pick;     // index among the rule's matches at this position/direction
  Term result;  // whole term after the rewrite
};

namespace rules_detail {

template <typename Fn>
inline void walk_positions(const Term& t, Position& pos, Fn&& fn) {
  fn(t, pos);
  if (t.has_children()) {
    pos.push_back(Dir::left);
    walk_positions(t.left(), pos, fn);
    pos.back() = Dir::right;
    walk_positions(t.right(), pos, fn);
    pos.pop_back();
  }
}

}  // namespace rules_detail

// Enumerates every match of every enabled rule at every position, both
// directions for bidirectional rules. Order is deterministic:
// catalog order, then position (pre-order, leftmost-outermost), then
// direction (fwd before bwd), then pick index.
inline std::vector<RewriteEdge> one_step_rewrites(const Term& t,
                                                  GroupSet groups = GroupSet::standard()) {
  std::vector<RewriteEdge> edges;
  for (const Rule& r : rule_catalog()) {
    if (!groups.enabled(r.group)) continue;
    Position pos;
    rules_detail::walk_positions(t, pos, [&](const Term& u, const Position& p) {
      auto out = r.fwd(u);
      for (std::size_t j = 0; j < out.size(); ++j)
        edges.push_back({&r, p, RDir::fwd, static_cast<int>(j), replace(t, p, out[j])});
      if (r.bidirectional && r.expand_bwd) {
        auto back = r.bwd(u);
        for (std::size_t j = 0; j < back.size(); ++j)
          edges.push_back({&r, p, RDir::bwd, static_cast<int>(j), replace(t, p, back[j])});
      }
    });
  }
  return edges;
}

// ---------------------------------------------------------------------------
// prune and simplify: innermost rewriting to a fixed point
//
// ProofStep lives here so the fixpoint passes can leave a replayable trace;
// serialization and replay are in proof.hpp.

struct ProofStep {
  std::string rule;
  Position pos;
  RDir dir = RDir::fwd;
  int pick = 0;              // index among the rule's matches there
  std::optional<Term> pre;   // pre-image, only for backward oriented steps
};

namespace rules_detail {

struct Redex {
  Position pos;
  const Rule* rule;
  Term result;
};

inline std::optional<Redex> find_innermost(const Term& t, const std::vector<const Rule*>& rs,
                                           Position& prefix) {
  if (t.has_children()) {
    prefix.push_back(Dir::left);
    if (auto r = find_innermost(t.left(), rs, prefix)) { prefix.pop_back(); return r; }
    prefix.back() = Dir::right;
    if (auto r = find_innermost(t.right(), rs, prefix)) { prefix.pop_back(); return r; }
    prefix.pop_back();
  }
  for (const Rule* r : rs) {
    auto out = r->fwd(t);
    if (!out.empty()) return Redex{prefix, r, out[0]};
  }
  return std::nullopt;
}

inline const std::vector<const Rule*>& prune_rules() {
  static const std::vector<const Rule*> rs = {
      find_rule("null-comp"), find_rule("brack-fst"), find_rule("brack-snd"),
      find_rule("rec-null")};
  return rs;
}

inline const std::vector<const Rule*>& simplify_rules() {
  static const std::vector<const Rule*> rs = {
      find_rule("null-comp"), find_rule("brack-fst"), find_rule("brack-snd"),
      find_rule("rec-null"),  find_rule("comp-assoc"), find_rule("comp-id"),
      find_rule("brack-assoc"), find_rule("twist-idem")};
  return rs;
}

}  // namespace rules_detail

// Repeatedly applies the leftmost-innermost redex of the given oriented rules
// until none is left, optionally recording the steps taken.
inline Term normalize(Term t, const std::vector<const Rule*>& rs,
                      std::vector<ProofStep>* trace = nullptr) {
  long guard = 10000 + 1000L * t.size();
  Position prefix;
  for (;;) {
    prefix.clear();
    auto rd = rules_detail::find_innermost(t, rs, prefix);
    if (!rd) return t;
    if (--guard < 0) throw Error("rewrite fixpoint did not terminate");
    if (trace) trace->push_back({rd->rule->name, rd->pos, RDir::fwd, 0, std::nullopt});
    t = replace(t, rd->pos, rd->result);
  }
}

// The oriented subset compatible with a group selection: group-I pruning when
// I is enabled, plus reassociation/identity/twist-pair normalization when II
// is. Search states are kept normal with respect to exactly these rules.
inline std::vector<const Rule*> normalizer_rules(GroupSet groups) {
  std::vector<const Rule*> rs;
  if (groups.gI)
    for (const Rule* r : rules_detail::prune_rules()) rs.push_back(r);
  if (groups.gII) {
    rs.push_back(find_rule("comp-assoc"));
    rs.push_back(find_rule("comp-id"));
    rs.push_back(find_rule("brack-assoc"));
    rs.push_back(find_rule("twist-idem"));
  }
  return rs;
}

// Applies group-I rules left-to-right at innermost positions until none
// matches. Semantics preserved; Rdepth never increases.
inline Term prune(const Term& t) { return normalize(t, rules_detail::prune_rules()); }

// Normalizes with a terminating oriented subset: group I, right reassociation
// of comp and br, identity elimination, and twist-pair cancellation.
inline Term simplify(const Term& t) { return normalize(t, rules_detail::simplify_rules()); }

}  // namespace pralg
