#pragma once

// Description trees for primitive recursive functions.
//
// A term denotes a total function N^src -> N^dst built from the basic
// leaves
//
//   z          : *   -> N     constant zero (the * object is N^0)
//   n          : N   -> N     null, n(x) = 0
//   s          : N   -> N     successor
//   pi[k,i]    : N^k -> N     projection onto coordinate i (1-based)
//
// and the binary operations
//
//   comp(f,g)  = g . f        f : A -> B, g : B -> C, result A -> C
//   rec(f,g)   = f # g        f : A -> B, g : A x B -> B, result A x N -> B
//                             h(x,0) = f(x), h(x,n+1) = g(x, h(x,n));
//                             the recursion counter is the LAST coordinate
//   br(f,g)    = <f,g>        f : A -> B, g : A -> C, result A -> B x C
//
// plus first-class wiring macros (kept as their own constructors so the
// rewrite rules can pattern-match them directly; expand_macros removes
// them):
//
//   mpi[k;x1,..,xm] : N^k -> N^m   multi-projection, coordinate list X
//   id[k] == mpi[k;1..k]           the identity wiring
//   diag[k]         : N^k -> N^2k  x |-> (x,x)
//   tw[a,b]         : N^(a+b) -> N^(b+a)  block swap
//   prod(f,g)       = f x g
//   bprod(g1,g2)    = g1 [x] g2    second-variable product:
//                                  (a,b1,b2) |-> (g1(a,b1), g2(a,b2))
//   bcomp(g1,g2)    = g1 o2 g2     second-variable composition:
//                                  (a,c) |-> g1(a, g2(a,c))
//
// Note the composition order: comp(f,g) reads "f then g" and denotes g . f.
// Children are stored in constructor order everywhere, so the left child of
// comp is f, matching the data-flow direction.
//
// Terms are immutable values with shared structure; equality is syntactic.
// Every reachable Term is well typed: constructors check the typing side
// conditions and throw ArityMismatch / BadIndex on violation.

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace pralg {

// The exponent k in N^k; k == 0 is the terminal object *.
struct Arity {
  int k = 0;
  constexpr Arity() = default;
  constexpr Arity(int k) : k(k) {}
  friend constexpr bool operator==(Arity a, Arity b) { return a.k == b.k; }
  friend constexpr bool operator!=(Arity a, Arity b) { return a.k != b.k; }
  // product of powers of N adds exponents
  friend constexpr Arity operator+(Arity a, Arity b) { return {a.k + b.k}; }
};

struct ArityPair {
  Arity src, dst;
  friend constexpr bool operator==(ArityPair a, ArityPair b) {
    return a.src == b.src && a.dst == b.dst;
  }
  friend constexpr bool operator!=(ArityPair a, ArityPair b) { return !(a == b); }
};

enum class Op : std::uint8_t {
  Zero, Null, Succ, Proj,          // core leaves
  MProj, Diag, Twist,              // macro leaves
  Comp, Rec, Brack,                // core nodes
  Prod, BProd, BComp               // macro nodes
};

inline bool op_has_children(Op op) { return op >= Op::Comp; }
inline bool op_is_macro(Op op) {
  return op == Op::MProj || op == Op::Diag || op == Op::Twist ||
         op == Op::Prod || op == Op::BProd || op == Op::BComp;
}

class Term;

namespace detail {

struct TermNode {
  Op op;
  int k = 0, i = 0;          // proj / mproj / diag parameter and index
  int a = 0, b = 0;          // twist blocks
  std::vector<int> xs;       // mproj coordinate list
  std::shared_ptr<const TermNode> left, right;
  int src = 0, dst = 0;      // cached arity
  int rdepth = 0;            // max nested Rec count on a root-leaf path
  int size = 1;              // node count
  std::uint64_t hash = 0;
};

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  // 64-bit FNV-1a style fold with an extra avalanche
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace detail

class Term {
 public:
  Term() = default;  // empty handle; every library operation expects non-empty

  explicit operator bool() const { return static_cast<bool>(p_); }

  Op op() const { return p_->op; }
  int k() const { return p_->k; }
  int index() const { return p_->i; }
  int tw_a() const { return p_->a; }
  int tw_b() const { return p_->b; }
  const std::vector<int>& xs() const { return p_->xs; }

  bool has_children() const { return op_has_children(p_->op); }
  Term left() const { return Term(p_->left); }
  Term right() const { return Term(p_->right); }

  Arity src() const { return {p_->src}; }
  Arity dst() const { return {p_->dst}; }
  int rdepth() const { return p_->rdepth; }
  int size() const { return p_->size; }
  std::uint64_t hash() const { return p_->hash; }

  friend bool operator==(const Term& x, const Term& y) {
    if (x.p_ == y.p_) return true;
    if (!x.p_ || !y.p_) return false;
    return equal_nodes(x.p_.get(), y.p_.get());
  }
  friend bool operator!=(const Term& x, const Term& y) { return !(x == y); }

 private:
  explicit Term(std::shared_ptr<const detail::TermNode> p) : p_(std::move(p)) {}

  static bool equal_nodes(const detail::TermNode* x, const detail::TermNode* y) {
    if (x == y) return true;
    if (x->hash != y->hash || x->op != y->op) return false;
    if (x->k != y->k || x->i != y->i || x->a != y->a || x->b != y->b ||
        x->xs != y->xs)
      return false;
    if (op_has_children(x->op)) {
      return equal_nodes(x->left.get(), y->left.get()) &&
             equal_nodes(x->right.get(), y->right.get());
    }
    return true;
  }

  std::shared_ptr<const detail::TermNode> p_;

  friend Term make_leaf(Op, int, int, int, int, std::vector<int>);
  friend Term make_node(Op, const Term&, const Term&);
};

struct TermHash {
  std::size_t operator()(const Term& t) const {
    return static_cast<std::size_t>(t.hash());
  }
};

inline ArityPair arity_of(const Term& t) { return {t.src(), t.dst()}; }

// ---------------------------------------------------------------------------
// constructors

namespace detail {
inline std::string arity_str(int k) { return "N^" + std::to_string(k); }
}  // namespace detail

inline Term make_leaf(Op op, int k, int i, int a, int b, std::vector<int> xs) {
  auto n = std::make_shared<detail::TermNode>();
  n->op = op;
  n->k = k; n->i = i; n->a = a; n->b = b; n->xs = std::move(xs);
  switch (op) {
    case Op::Zero: n->src = 0; n->dst = 1; break;
    case Op::Null:
    case Op::Succ: n->src = 1; n->dst = 1; break;
    case Op::Proj:
      if (k < 1) throw BadIndex("pi: arity must be at least 1, got " + std::to_string(k));
      if (i < 1 || i > k)
        throw BadIndex("pi: index " + std::to_string(i) + " out of range for arity " +
                       std::to_string(k));
      n->src = k; n->dst = 1;
      break;
    case Op::MProj:
      if (k < 0) throw BadIndex("mpi: negative arity");
      for (int x : n->xs)
        if (x < 1 || x > k)
          throw BadIndex("mpi: index " + std::to_string(x) + " out of range for arity " +
                         std::to_string(k));
      n->src = k; n->dst = static_cast<int>(n->xs.size());
      break;
    case Op::Diag:
      if (k < 0) throw BadIndex("diag: negative arity");
      n->src = k; n->dst = 2 * k;
      break;
    case Op::Twist:
      if (a < 0 || b < 0) throw BadIndex("tw: negative block width");
      n->src = a + b; n->dst = a + b;
      break;
    default: throw Error("make_leaf: not a leaf op");
  }
  std::uint64_t h = detail::hash_mix(0xcbf29ce484222325ull, static_cast<std::uint64_t>(op));
  h = detail::hash_mix(h, static_cast<std::uint64_t>(k));
  h = detail::hash_mix(h, static_cast<std::uint64_t>(i));
  h = detail::hash_mix(h, static_cast<std::uint64_t>(a));
  h = detail::hash_mix(h, static_cast<std::uint64_t>(b));
  for (int x : n->xs) h = detail::hash_mix(h, static_cast<std::uint64_t>(x) + 0x1234567ull);
  n->hash = h;
  return Term(std::move(n));
}

inline Term make_node(Op op, const Term& l, const Term& r) {
  if (!l || !r) throw Error("make_node: empty child");
  auto n = std::make_shared<detail::TermNode>();
  n->op = op;
  const int ls = l.src().k, ld = l.dst().k, rs = r.src().k, rd = r.dst().k;
  switch (op) {
    case Op::Comp:
      if (ld != rs)
        throw ArityMismatch("comp: first operand targets " + detail::arity_str(ld) +
                            " but second expects " + detail::arity_str(rs));
      n->src = ls; n->dst = rd;
      break;
    case Op::Rec:
      if (rs != ls + ld || rd != ld)
        throw ArityMismatch("rec: step function must be " + detail::arity_str(ls + ld) +
                            " -> " + detail::arity_str(ld) + ", got " +
                            detail::arity_str(rs) + " -> " + detail::arity_str(rd));
      n->src = ls + 1; n->dst = ld;
      break;
    case Op::Brack:
      if (ls != rs)
        throw ArityMismatch("br: operands must share their source, got " +
                            detail::arity_str(ls) + " and " + detail::arity_str(rs));
      n->src = ls; n->dst = ld + rd;
      break;
    case Op::Prod:
      n->src = ls + rs; n->dst = ld + rd;
      break;
    case Op::BProd: {
      if (ls != rs || ld != rd || ld > ls)
        throw ArityMismatch("bprod: operands must both be N^(a+b) -> N^b, got " +
                            detail::arity_str(ls) + " -> " + detail::arity_str(ld) +
                            " and " + detail::arity_str(rs) + " -> " + detail::arity_str(rd));
      const int b = ld, a = ls - ld;
      n->src = a + 2 * b; n->dst = 2 * b;
      break;
    }
    case Op::BComp: {
      // l = g1 : A x D -> B, r = g2 : A x C -> D, result A x C -> B
      const int d = rd, a = ls - d, c = rs - a;
      if (a < 0 || c < 0)
        throw ArityMismatch("bcomp: cannot split " + detail::arity_str(ls) + " -> " +
                            detail::arity_str(ld) + " against " + detail::arity_str(rs) +
                            " -> " + detail::arity_str(rd));
      n->src = rs; n->dst = ld;
      break;
    }
    default: throw Error("make_node: not a binary op");
  }
  n->left = l.p_;
  n->right = r.p_;
  n->rdepth = std::max(l.rdepth(), r.rdepth()) + (op == Op::Rec ? 1 : 0);
  n->size = l.size() + r.size() + 1;
  std::uint64_t h = detail::hash_mix(0x100000001b3ull, static_cast<std::uint64_t>(op));
  h = detail::hash_mix(h, l.hash());
  h = detail::hash_mix(h, r.hash());
  n->hash = h;
  return Term(std::move(n));
}

inline Term zero() { return make_leaf(Op::Zero, 0, 0, 0, 0, {}); }
inline Term nul() { return make_leaf(Op::Null, 0, 0, 0, 0, {}); }
inline Term succ() { return make_leaf(Op::Succ, 0, 0, 0, 0, {}); }
inline Term proj(int k, int i) { return make_leaf(Op::Proj, k, i, 0, 0, {}); }
inline Term mproj(int k, std::vector<int> xs) {
  return make_leaf(Op::MProj, k, 0, 0, 0, std::move(xs));
}
inline Term diag(int k) { return make_leaf(Op::Diag, k, 0, 0, 0, {}); }
inline Term twist(int a, int b) { return make_leaf(Op::Twist, 0, 0, a, b, {}); }
inline Term comp(const Term& f, const Term& g) { return make_node(Op::Comp, f, g); }
inline Term rec(const Term& f, const Term& g) { return make_node(Op::Rec, f, g); }
inline Term brack(const Term& f, const Term& g) { return make_node(Op::Brack, f, g); }
inline Term prod(const Term& f, const Term& g) { return make_node(Op::Prod, f, g); }
inline Term bprod(const Term& g1, const Term& g2) { return make_node(Op::BProd, g1, g2); }
inline Term bcomp(const Term& g1, const Term& g2) { return make_node(Op::BComp, g1, g2); }

inline std::vector<int> iota_list(int from, int to) {  // inclusive bounds
  std::vector<int> v;
  for (int x = from; x <= to; ++x) v.push_back(x);
  return v;
}

// id[k] is mpi[k;1..k], not a separate constructor.
inline Term identity(int k) { return mproj(k, iota_list(1, k)); }

// the unique map N^k -> *
inline Term terminal(int k) { return mproj(k, {}); }

// The constant c from any source: comp(mpi[A;], s^c . z).
inline Term const_term(int c, Arity from = Arity{0}) {
  Term t = zero();
  for (int j = 0; j < c; ++j) t = comp(t, succ());
  if (from.k > 0) t = comp(terminal(from.k), t);
  return t;
}

inline bool is_identity(const Term& t) {
  if (t.op() != Op::MProj) return false;
  const auto& xs = t.xs();
  for (int j = 0; j < static_cast<int>(xs.size()); ++j)
    if (xs[j] != j + 1) return false;
  return static_cast<int>(xs.size()) == t.k();
}

// ---------------------------------------------------------------------------
// positions

enum class Dir : std::uint8_t { left = 0, right = 1 };
using Position = std::vector<Dir>;

inline Term subterm(const Term& t, const Position& pos) {
  Term cur = t;
  for (std::size_t j = 0; j < pos.size(); ++j) {
    if (!cur.has_children())
      throw InvalidPosition("position steps into a leaf at depth " + std::to_string(j));
    cur = pos[j] == Dir::left ? cur.left() : cur.right();
  }
  return cur;
}

inline bool valid_position(const Term& t, const Position& pos) {
  Term cur = t;
  for (Dir d : pos) {
    if (!cur.has_children()) return false;
    cur = d == Dir::left ? cur.left() : cur.right();
  }
  return true;
}

namespace detail {
inline Term replace_at(const Term& t, const Position& pos, std::size_t j, const Term& s) {
  if (j == pos.size()) {
    if (arity_of(s) != arity_of(t))
      throw ArityMismatch("replace: replacement arity differs from subterm arity");
    return s;
  }
  if (!t.has_children())
    throw InvalidPosition("position steps into a leaf at depth " + std::to_string(j));
  if (pos[j] == Dir::left)
    return make_node(t.op(), replace_at(t.left(), pos, j + 1, s), t.right());
  return make_node(t.op(), t.left(), replace_at(t.right(), pos, j + 1, s));
}
}  // namespace detail

inline Term replace(const Term& t, const Position& pos, const Term& s) {
  return detail::replace_at(t, pos, 0, s);
}

// ---------------------------------------------------------------------------
// macro expansion
//
// Rewrites a term into the core fragment: z, n, s, pi, comp, rec, br. A
// multi-projection unfolds to a right-nested bracket of single projections;
// the empty multi-projection mpi[k;] (the map to *) has no core expansion
// and stays. Arity and the denoted function are preserved.

inline Term expand_macros(const Term& t) {
  switch (t.op()) {
    case Op::Zero: case Op::Null: case Op::Succ: case Op::Proj:
      return t;
    case Op::MProj: {
      const auto& xs = t.xs();
      if (xs.empty()) return t;
      if (xs.size() == 1) return proj(t.k(), xs[0]);
      Term r = proj(t.k(), xs.back());
      for (int j = static_cast<int>(xs.size()) - 2; j >= 0; --j)
        r = brack(proj(t.k(), xs[j]), r);
      return r;
    }
    case Op::Diag: {
      auto xs = iota_list(1, t.k());
      auto twice = xs;
      twice.insert(twice.end(), xs.begin(), xs.end());
      return expand_macros(mproj(t.k(), std::move(twice)));
    }
    case Op::Twist: {
      auto xs = iota_list(t.tw_a() + 1, t.tw_a() + t.tw_b());
      auto rest = iota_list(1, t.tw_a());
      xs.insert(xs.end(), rest.begin(), rest.end());
      return expand_macros(mproj(t.src().k, std::move(xs)));
    }
    case Op::Comp: case Op::Rec: case Op::Brack:
      return make_node(t.op(), expand_macros(t.left()), expand_macros(t.right()));
    case Op::Prod: {
      const int a = t.left().src().k, c = t.right().src().k;
      return brack(
          comp(expand_macros(mproj(a + c, iota_list(1, a))), expand_macros(t.left())),
          comp(expand_macros(mproj(a + c, iota_list(a + 1, a + c))), expand_macros(t.right())));
    }
    case Op::BProd: {
      const int b = t.left().dst().k, a = t.left().src().k - b;
      auto x1 = iota_list(1, a + b);
      auto x2 = iota_list(1, a);
      auto hi = iota_list(a + b + 1, a + 2 * b);
      x2.insert(x2.end(), hi.begin(), hi.end());
      return brack(comp(expand_macros(mproj(a + 2 * b, std::move(x1))), expand_macros(t.left())),
                   comp(expand_macros(mproj(a + 2 * b, std::move(x2))), expand_macros(t.right())));
    }
    case Op::BComp: {
      // g1 o2 g2 == g1 . <pi_A, g2>
      const int a = t.left().src().k - t.right().dst().k;
      return comp(brack(expand_macros(mproj(t.right().src().k, iota_list(1, a))),
                        expand_macros(t.right())),
                  expand_macros(t.left()));
    }
  }
  throw Error("expand_macros: unreachable");
}

}  // namespace pralg
