#pragma once

// Operational semantics. eval walks the tree directly; rec(f,g) at (x, n)
// evaluates f once and then iterates g exactly n times, so the cost of a
// term is dominated by its nested recursions. Values are arbitrary-precision
// non-negative integers (successor chains outgrow any fixed width fast).
//
// A fuel budget bounds the work: one unit per node visit plus one per loop
// iteration. Primitive recursive functions are total, but without a budget a
// small term can outlive the machine.

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "term.hpp"

namespace pralg {

using Value = boost::multiprecision::cpp_int;
using Tuple = std::vector<Value>;

inline constexpr std::int64_t kDefaultFuel = 10'000'000;

inline std::string show_tuple(const Tuple& xs) {
  std::ostringstream os;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (j) os << ",";
    os << xs[j];
  }
  return os.str();
}

namespace detail {

struct Fuel {
  std::int64_t left;
  void spend() {
    if (--left < 0) throw FuelExhausted("evaluation exceeded its step budget");
  }
};

inline Tuple eval_node(const Term& t, const Tuple& x, Fuel& fuel) {
  fuel.spend();
  switch (t.op()) {
    case Op::Zero: return {Value(0)};
    case Op::Null: return {Value(0)};
    case Op::Succ: return {x[0] + 1};
    case Op::Proj: return {x[t.index() - 1]};
    case Op::MProj: {
      Tuple out;
      out.reserve(t.xs().size());
      for (int j : t.xs()) out.push_back(x[j - 1]);
      return out;
    }
    case Op::Diag: {
      Tuple out = x;
      out.insert(out.end(), x.begin(), x.end());
      return out;
    }
    case Op::Twist: {
      Tuple out(x.begin() + t.tw_a(), x.end());
      out.insert(out.end(), x.begin(), x.begin() + t.tw_a());
      return out;
    }
    case Op::Comp:
      return eval_node(t.right(), eval_node(t.left(), x, fuel), fuel);
    case Op::Rec: {
      // x = (params, counter); params stay fixed through the loop
      Tuple params(x.begin(), x.end() - 1);
      const Value& n = x.back();
      Tuple acc = eval_node(t.left(), params, fuel);
      Tuple args = params;
      for (Value it = 0; it < n; ++it) {
        fuel.spend();
        args.resize(params.size());
        args.insert(args.end(), acc.begin(), acc.end());
        acc = eval_node(t.right(), args, fuel);
      }
      return acc;
    }
    case Op::Brack: {
      Tuple out = eval_node(t.left(), x, fuel);
      Tuple r = eval_node(t.right(), x, fuel);
      out.insert(out.end(), r.begin(), r.end());
      return out;
    }
    case Op::Prod: {
      const int a = t.left().src().k;
      Tuple xl(x.begin(), x.begin() + a), xr(x.begin() + a, x.end());
      Tuple out = eval_node(t.left(), xl, fuel);
      Tuple r = eval_node(t.right(), xr, fuel);
      out.insert(out.end(), r.begin(), r.end());
      return out;
    }
    case Op::BProd: {
      const int b = t.left().dst().k, a = t.left().src().k - b;
      Tuple a1(x.begin(), x.begin() + a);
      Tuple left_in = a1, right_in = a1;
      left_in.insert(left_in.end(), x.begin() + a, x.begin() + a + b);
      right_in.insert(right_in.end(), x.begin() + a + b, x.end());
      Tuple out = eval_node(t.left(), left_in, fuel);
      Tuple r = eval_node(t.right(), right_in, fuel);
      out.insert(out.end(), r.begin(), r.end());
      return out;
    }
    case Op::BComp: {
      // (a,c) |-> g1(a, g2(a,c))
      const int a = t.left().src().k - t.right().dst().k;
      Tuple d = eval_node(t.right(), x, fuel);
      Tuple in(x.begin(), x.begin() + a);
      in.insert(in.end(), d.begin(), d.end());
      return eval_node(t.left(), in, fuel);
    }
  }
  throw Error("eval: unreachable");
}

}  // namespace detail

inline Tuple eval(const Term& t, const Tuple& x, std::int64_t fuel = kDefaultFuel) {
  if (static_cast<int>(x.size()) != t.src().k)
    throw ArityMismatch("eval: term expects " + std::to_string(t.src().k) +
                        " inputs, got " + std::to_string(x.size()));
  detail::Fuel f{fuel};
  return detail::eval_node(t, x, f);
}

// ---------------------------------------------------------------------------
// randomized extensional equality
//
// Exact function equality of descriptions is undecidable, so this is only a
// falsifier: Equal means no distinguishing input was found among the samples,
// NotEqual carries a concrete witness. The sample set always contains the
// all-zeros tuple and (0,...,0,1) so both recursion clauses are exercised;
// the rest is drawn uniformly from a seeded generator, so runs reproduce.

struct Equal {
  std::size_t samples = 0;
};
struct NotEqual {
  Tuple witness, left, right;
};
using Verdict = std::variant<Equal, NotEqual>;

inline bool equal_verdict(const Verdict& v) { return std::holds_alternative<Equal>(v); }

inline std::vector<Tuple> sample_inputs(int arity, std::size_t samples,
                                        std::uint64_t max_value, std::uint64_t seed) {
  std::vector<Tuple> out;
  out.emplace_back(arity, Value(0));
  if (arity > 0) {
    Tuple t(arity, Value(0));
    t.back() = 1;
    out.push_back(std::move(t));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, max_value);
  while (out.size() < samples + 2) {
    Tuple t;
    t.reserve(arity);
    for (int j = 0; j < arity; ++j) t.emplace_back(dist(rng));
    out.push_back(std::move(t));
  }
  return out;
}

inline Verdict ext_equal(const Term& t1, const Term& t2, std::size_t samples = 100,
                         std::uint64_t max_value = 50, std::uint64_t seed = 0,
                         std::int64_t fuel = kDefaultFuel) {
  if (arity_of(t1) != arity_of(t2))
    throw ArityMismatch("ext_equal: terms must share source and target arity");
  const auto inputs = sample_inputs(t1.src().k, samples, max_value, seed);
  std::size_t ran = 0;
  for (const Tuple& x : inputs) {
    Tuple l, r;
    try {
      l = eval(t1, x, fuel);
      r = eval(t2, x, fuel);
    } catch (const FuelExhausted&) {
      throw FuelExhausted("ext_equal: step budget exceeded on input (" + show_tuple(x) + ")");
    }
    ++ran;
    if (l != r) return NotEqual{x, std::move(l), std::move(r)};
  }
  return Equal{ran};
}

}  // namespace pralg
