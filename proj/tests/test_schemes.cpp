#include "catch_amalgamated.hpp"

#include <algorithm>
#include <random>

#include <pralg/interp.hpp>
#include <pralg/complexity.hpp>
#include <pralg/schemes.hpp>

using namespace pralg;
using namespace pralg::combinators;

namespace {

Tuple tup(const std::vector<int>& v) {
  Tuple t;
  for (int x : v) t.emplace_back(x);
  return t;
}

std::vector<int> random_list(std::mt19937_64& rng, int n, int max_value) {
  std::vector<int> v(n);
  for (int& x : v) x = static_cast<int>(rng() % (max_value + 1));
  return v;
}

void check_sorts(const Scheme& s, int n, int rounds, std::mt19937_64& rng) {
  Term t = s.generate(n);
  REQUIRE(arity_of(t) == s.arity_shape(n));
  for (int i = 0; i < rounds; ++i) {
    auto input = random_list(rng, n, 15);
    auto expected = input;
    std::sort(expected.begin(), expected.end());
    CAPTURE(s.name, n, input);
    CHECK(eval(t, tup(input)) == tup(expected));
  }
}

}  // namespace

TEST_CASE("combinators match their oracles") {
  SECTION("pred") {
    for (int n = 0; n <= 20; ++n)
      CHECK(eval(pred(), {Value(n)}) == Tuple{std::max(n - 1, 0)});
  }
  SECTION("monus, leq, min2, max2 on all pairs up to 20") {
    for (int a = 0; a <= 20; ++a)
      for (int b = 0; b <= 20; ++b) {
        CHECK(eval(monus(), {Value(a), Value(b)}) == Tuple{std::max(a - b, 0)});
        CHECK(eval(leq(), {Value(a), Value(b)}) == Tuple{a <= b ? 1 : 0});
        CHECK(eval(min2(), {Value(a), Value(b)}) == Tuple{std::min(a, b)});
        CHECK(eval(max2(), {Value(a), Value(b)}) == Tuple{std::max(a, b)});
      }
  }
  SECTION("iszero") {
    CHECK(eval(iszero(), {Value(0)}) == Tuple{1});
    CHECK(eval(iszero(), {Value(9)}) == Tuple{0});
  }
  SECTION("compare_exchange on all pairs up to 15") {
    for (int a = 0; a <= 15; ++a)
      for (int b = 0; b <= 15; ++b)
        CHECK(eval(compare_exchange(), {Value(a), Value(b)}) ==
              (Tuple{std::min(a, b), std::max(a, b)}));
  }
  SECTION("monus examples") {
    CHECK(eval(monus(), {Value(3), Value(5)}) == Tuple{0});
    CHECK(eval(monus(), {Value(5), Value(3)}) == Tuple{2});
  }
}

TEST_CASE("documented combinator arities and depths") {
  CHECK(arity_of(pred()) == ArityPair{1, 1});
  CHECK(arity_of(add()) == ArityPair{2, 1});
  CHECK(arity_of(compare_exchange()) == ArityPair{2, 2});
  CHECK(arity_of(zero_const(3)) == ArityPair{3, 1});
  CHECK(rdepth(add()) == 1);
  CHECK(rdepth(monus()) >= 2);
}

TEST_CASE("insertion sort scheme") {
  auto s = insertion_sort_scheme();
  CHECK(eval(s.generate(1), {Value(7)}) == Tuple{7});
  CHECK(eval(s.generate(3), tup({3, 1, 2})) == tup({1, 2, 3}));
  CHECK(eval(s.generate(4), tup({5, 5, 1, 5})) == tup({1, 5, 5, 5}));
  CHECK_THROWS_AS(s.generate(0), Error);
  std::mt19937_64 rng(71);
  for (int n = 1; n <= 5; ++n) check_sorts(s, n, 25, rng);
}

TEST_CASE("merge sort scheme") {
  auto s = merge_sort_scheme();
  CHECK(eval(s.generate(1), {Value(0)}) == Tuple{0});
  CHECK(eval(s.generate(2), tup({2, 2})) == tup({2, 2}));
  CHECK(eval(s.generate(4), tup({4, 3, 2, 1})) == tup({1, 2, 3, 4}));
  CHECK_THROWS_AS(s.generate(0), Error);
  std::mt19937_64 rng(72);
  for (int n = 1; n <= 5; ++n) check_sorts(s, n, 25, rng);
}

TEST_CASE("merge network handles every 0-1 input at small sizes") {
  // 0-1 principle: a comparator network sorts iff it sorts all 0-1 inputs;
  // for the merge stage both halves arrive sorted
  auto s = merge_sort_scheme();
  std::mt19937_64 rng(73);
  for (int n = 2; n <= 6; ++n) {
    Term t = s.generate(n);
    for (int bits = 0; bits < (1 << n); ++bits) {
      std::vector<int> input(n);
      for (int j = 0; j < n; ++j) input[j] = (bits >> j) & 1;
      auto expected = input;
      std::sort(expected.begin(), expected.end());
      CAPTURE(n, input);
      CHECK(eval(t, tup(input)) == tup(expected));
    }
  }
}

TEST_CASE("max scheme") {
  auto s = max_scheme();
  CHECK(eval(s.generate(1), {Value(5)}) == Tuple{5});
  CHECK(eval(s.generate(3), tup({2, 9, 4})) == Tuple{9});
  CHECK(eval(s.generate(4), tup({0, 0, 0, 0})) == Tuple{0});
  std::mt19937_64 rng(74);
  for (int n = 1; n <= 6; ++n) {
    Term t = s.generate(n);
    REQUIRE(arity_of(t) == s.arity_shape(n));
    for (int i = 0; i < 30; ++i) {
      auto input = random_list(rng, n, 40);
      CHECK(eval(t, tup(input)) ==
            Tuple{*std::max_element(input.begin(), input.end())});
    }
  }
}

TEST_CASE("both sorting schemes denote the same function per size") {
  auto is = insertion_sort_scheme(), ms = merge_sort_scheme();
  for (int n = 1; n <= 4; ++n)
    CHECK(equal_verdict(ext_equal(is.generate(n), ms.generate(n), 60, 15, n)));
}

TEST_CASE("scheme registry") {
  for (const auto& name : scheme_names()) {
    auto s = scheme_by_name(name);
    REQUIRE(s.has_value());
    CHECK(s->name == name);
    for (int n = s->min_index; n <= 4; ++n)
      CHECK(arity_of(s->generate(n)) == s->arity_shape(n));
  }
  CHECK_FALSE(scheme_by_name("quicksort").has_value());
}
