#pragma once

// Standard combinators (arithmetic on N built from z/n/s and the three
// operations) and scheme generators: families of description terms, one per
// input size, for the identity, max, insertion sort and merge sort.
//
// The core language has no data-dependent branching, so the sorting schemes
// are oblivious compare-exchange networks over the (min, max) gate. Insertion
// sort keeps the structural recursion sort_k = insert . (sort_{k-1} x id);
// merge sort splits at floor(n/2), sorts the halves with prod, and merges
// with a Batcher odd-even network (wire shuffles are multi-projections).

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "term.hpp"

namespace pralg {
namespace combinators {

// predecessor by pair iteration: (a,b) -> (a+1, a) from (0,0), then second
inline const Term& pred() {
  static const Term t = comp(
      rec(brack(zero(), zero()), brack(comp(proj(2, 1), succ()), proj(2, 1))),
      proj(2, 2));
  return t;
}

inline const Term& add() {
  static const Term t = rec(identity(1), comp(proj(2, 2), succ()));
  return t;
}

inline const Term& mult() {
  static const Term t = rec(const_term(0, 1), add());
  return t;
}

// cut-off subtraction a -. b (counts the second argument down)
inline const Term& monus() {
  static const Term t = rec(identity(1), comp(proj(2, 2), pred()));
  return t;
}

inline const Term& iszero() {
  static const Term t = rec(comp(zero(), succ()), nul());
  return t;
}

inline const Term& leq() {
  static const Term t = comp(monus(), iszero());
  return t;
}

// min(a,b) = a -. (a -. b), max(a,b) = b + (a -. b)
inline const Term& min2() {
  static const Term t = comp(brack(proj(2, 1), monus()), monus());
  return t;
}

inline const Term& max2() {
  static const Term t = comp(brack(proj(2, 2), monus()), add());
  return t;
}

// (a,b) -> (min, max)
inline const Term& compare_exchange() {
  static const Term t = brack(min2(), max2());
  return t;
}

inline Term zero_const(Arity from) { return const_term(0, from); }

}  // namespace combinators

// ---------------------------------------------------------------------------
// schemes

struct Scheme {
  std::string name;
  int min_index = 1;
  std::function<ArityPair(int)> arity_shape;
  std::function<Term(int)> generate;
};

namespace schemes_detail {

inline void require_size(const std::string& name, int n, int min_index) {
  if (n < min_index)
    throw Error(name + ": size must be at least " + std::to_string(min_index));
}

// gate on adjacent wires (i, i+1) of n, widened with identity wires
inline Term widen_adjacent(const Term& gate, int n, int i) {
  Term t = gate;
  if (n - i - 1 > 0) t = prod(t, identity(n - i - 1));
  if (i - 1 > 0) t = prod(identity(i - 1), t);
  return t;
}

// one insertion pass on k wires: bubble the last element into place
inline Term insert_stage(int k) {
  Term stage = widen_adjacent(combinators::compare_exchange(), k, k - 1);
  for (int i = k - 2; i >= 1; --i)
    stage = comp(stage, widen_adjacent(combinators::compare_exchange(), k, i));
  return stage;
}

inline Term insertion_sort_term(int n) {
  if (n == 1) return identity(1);
  return comp(prod(insertion_sort_term(n - 1), identity(1)), insert_stage(n));
}

// min/max gate between arbitrary wires i and j of n (min lands on i)
inline Term gate_at(int n, int i, int j) {
  auto component = [&](int w) -> Term {
    if (w == i) return comp(mproj(n, {i, j}), combinators::min2());
    if (w == j) return comp(mproj(n, {i, j}), combinators::max2());
    return proj(n, w);
  };
  Term t = component(n);
  for (int w = n - 1; w >= 1; --w) t = brack(component(w), t);
  return t;
}

// Batcher odd-even merge of two sorted runs given as wire lists; appends
// (min_wire, max_wire) gates and returns the wire order of the merged run.
inline std::vector<int> merge_net(const std::vector<int>& A, const std::vector<int>& B,
                                  std::vector<std::pair<int, int>>& gates) {
  if (A.empty()) return B;
  if (B.empty()) return A;
  if (A.size() == 1 && B.size() == 1) {
    gates.push_back({A[0], B[0]});
    return {A[0], B[0]};
  }
  std::vector<int> ao, ae, bo, be;
  for (std::size_t j = 0; j < A.size(); ++j) (j % 2 ? ae : ao).push_back(A[j]);
  for (std::size_t j = 0; j < B.size(); ++j) (j % 2 ? be : bo).push_back(B[j]);
  std::vector<int> v = merge_net(ao, bo, gates);
  std::vector<int> w = merge_net(ae, be, gates);
  std::vector<int> out{v[0]};
  std::size_t vi = 1, wi = 0;
  while (wi < w.size() || vi < v.size()) {
    if (wi < w.size() && vi < v.size()) gates.push_back({w[wi], v[vi]});
    if (wi < w.size()) out.push_back(w[wi++]);
    if (vi < v.size()) out.push_back(v[vi++]);
  }
  return out;
}

// merge stage N^(m+r) -> N^(m+r): first m wires sorted, last r wires sorted
inline Term merge_term(int m, int r) {
  const int n = m + r;
  std::vector<std::pair<int, int>> gates;
  std::vector<int> order = merge_net(iota_list(1, m), iota_list(m + 1, n), gates);
  Term t = gate_at(n, gates[0].first, gates[0].second);
  for (std::size_t j = 1; j < gates.size(); ++j)
    t = comp(t, gate_at(n, gates[j].first, gates[j].second));
  Term shuffle = mproj(n, order);
  if (!is_identity(shuffle)) t = comp(t, shuffle);
  return t;
}

inline Term merge_sort_term(int n) {
  if (n == 1) return identity(1);
  const int m = n / 2, r = n - m;
  Term halves = prod(merge_sort_term(m), merge_sort_term(r));
  return comp(halves, merge_term(m, r));
}

inline Term max_term(int n) {
  if (n == 1) return identity(1);
  if (n == 2) return combinators::max2();
  const int h = (n + 1) / 2;
  return comp(prod(max_term(h), max_term(n - h)), combinators::max2());
}

}  // namespace schemes_detail

inline Scheme id_scheme() {
  return {"id", 1, [](int n) { return ArityPair{n, n}; },
          [](int n) {
            schemes_detail::require_size("id", n, 1);
            return identity(n);
          }};
}

inline Scheme max_scheme() {
  return {"max", 1, [](int n) { return ArityPair{n, 1}; },
          [](int n) {
            schemes_detail::require_size("max", n, 1);
            return schemes_detail::max_term(n);
          }};
}

inline Scheme insertion_sort_scheme() {
  return {"insertion-sort", 1, [](int n) { return ArityPair{n, n}; },
          [](int n) {
            schemes_detail::require_size("insertion-sort", n, 1);
            return schemes_detail::insertion_sort_term(n);
          }};
}

inline Scheme merge_sort_scheme() {
  return {"merge-sort", 1, [](int n) { return ArityPair{n, n}; },
          [](int n) {
            schemes_detail::require_size("merge-sort", n, 1);
            return schemes_detail::merge_sort_term(n);
          }};
}

inline std::vector<std::string> scheme_names() {
  return {"id", "max", "insertion-sort", "merge-sort"};
}

inline std::optional<Scheme> scheme_by_name(const std::string& name) {
  if (name == "id") return id_scheme();
  if (name == "max") return max_scheme();
  if (name == "insertion-sort") return insertion_sort_scheme();
  if (name == "merge-sort") return merge_sort_scheme();
  return std::nullopt;
}

}  // namespace pralg
