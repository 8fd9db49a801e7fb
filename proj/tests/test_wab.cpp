#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "walg/prng.hpp"
#include "walg/wab.hpp"

using namespace walg;

static const Weight inf = Weight::infinity();

namespace {

// Reference enumeration for the symmetrized weight on one generator of
// weight wu: all ways to write k as a sum of at most max_parts integers in
// [-c, c], scored by sum of min(w(a), w(-a)).wu.
Weight sym_oracle_rec(long long remaining, int parts_left, long long c,
                      const Weight& wu) {
  if (remaining == 0) return Weight(0);
  if (parts_left == 0) return Weight::infinity();
  Weight best = Weight::infinity();
  for (long long a = -c; a <= c; ++a) {
    if (a == 0) continue;
    Weight part = inf_of({int_weight(a), int_weight(-a)}) * wu;
    Weight rest = sym_oracle_rec(remaining - a, parts_left - 1, c, wu);
    Weight total = part + rest;
    if (total < best) best = total;
  }
  return best;
}

// Reference enumeration for the tensor weight of c.(x (x) y) between two
// one-generator groups: decompositions into at most two rank-one terms with
// coefficients in [-2, 2].
Weight tensor_oracle_1x1(long long c, const Weight& wx, const Weight& wy) {
  Weight best = Weight::infinity();
  auto term_cost = [&](long long a, long long b) {
    return int_weight(a) * wx * (int_weight(b) * wy);
  };
  if (c == 0) return Weight(0);
  for (long long a1 = -2; a1 <= 2; ++a1)
    for (long long b1 = -2; b1 <= 2; ++b1) {
      if (a1 == 0 || b1 == 0) continue;
      if (a1 * b1 == c) {
        Weight w = term_cost(a1, b1);
        if (w < best) best = w;
      }
      for (long long a2 = -2; a2 <= 2; ++a2)
        for (long long b2 = -2; b2 <= 2; ++b2) {
          if (a2 == 0 || b2 == 0) continue;
          if (a1 * b1 + a2 * b2 != c) continue;
          Weight w = term_cost(a1, b1) + term_cost(a2, b2);
          if (w < best) best = w;
        }
    }
  return best;
}

}  // namespace

TEST_CASE("element weights on free groups") {
  FreeWAb wz{WSet({{"u", Weight(1)}})};
  CHECK(elem_weight(wz, GroupElement::single("u", 3)) == Weight(3));
  CHECK(elem_weight(wz, GroupElement::single("u", -1)) == inf);
  FreeWAb half{WSet({{"a", Weight(1, 2)}})};
  CHECK(elem_weight(half, GroupElement::single("a", 4)) == Weight(2));
  CHECK(elem_weight(wz, GroupElement()) == Weight(0));
  CHECK_THROWS_AS(elem_weight(wz, GroupElement::single("nope", 1)), error);
}

TEST_CASE("opposite weight negates first") {
  FreeWAb wz{WSet({{"u", Weight(1)}})};
  CHECK(opposite_weight(wz, GroupElement::single("u", 3)) == inf);
  CHECK(opposite_weight(wz, GroupElement()) == Weight(0));
  FreeWAb two{WSet({{"a", Weight(2)}})};
  CHECK(opposite_weight(two, GroupElement::single("a", -1)) == Weight(2));
}

TEST_CASE("element literals") {
  GroupElement e = GroupElement::from_string("3a - 2b + c");
  CHECK(e.coeff("a") == 3);
  CHECK(e.coeff("b") == -2);
  CHECK(e.coeff("c") == 1);
  CHECK(GroupElement::from_string("0").is_zero());
  CHECK(GroupElement::from_string("-a").coeff("a") == -1);
  CHECK(GroupElement::from_string(e.to_string()) == e);
  CHECK(GroupElement().to_string() == "0");
  CHECK_THROWS_AS(GroupElement::from_string("3"), error);
  CHECK_THROWS_AS(GroupElement::from_string("a b"), error);
}

TEST_CASE("symmetrized weight against the brute-force oracle") {
  FreeWAb wz{WSet({{"u", Weight(1)}})};
  for (long long k = -6; k <= 6; ++k) {
    CertifiedWeight got =
        symmetrized_weight(wz, GroupElement::single("u", k));
    Weight want = sym_oracle_rec(k, 4, 4, Weight(1));
    if (k == 0) want = Weight(0);
    CHECK(got.value == want);
    CHECK(got.value == abs_weight(k));
  }
  CHECK(symmetrized_weight(wz, GroupElement::single("u", -3)).value ==
        Weight(3));
  FreeWAb one{WSet({{"a", Weight(1)}})};
  CHECK(symmetrized_weight(one, GroupElement::single("a", -2)).value ==
        Weight(2));
  CHECK(symmetrized_weight(one, GroupElement()).value == Weight(0));
  CHECK(symmetrized_weight(one, GroupElement()).certified);
}

TEST_CASE("tensor weight against the brute-force oracle") {
  FreeWAb fa{WSet({{"a", Weight(2)}})};
  FreeWAb fb{WSet({{"b", Weight(3)}})};
  for (long long c = -2; c <= 2; ++c) {
    PairCoeffs xi{{{"a", "b"}, c}};
    CertifiedWeight got = tensor_weight(fa, fb, xi, {2, 2});
    Weight want = tensor_oracle_1x1(c, Weight(2), Weight(3));
    CHECK(got.value == want);
  }
  CHECK(tensor_weight(fa, fb, {{{"a", "b"}, 1}}).value == Weight(6));
  CHECK(tensor_weight(fa, fb, {}).value == Weight(0));
  CHECK(tensor_weight(fa, fb, {}).certified);
  // a negated simple tensor has infinite weight at every bound
  for (int parts : {1, 2, 3, 4})
    CHECK(tensor_weight(fa, fb, {{{"a", "b"}, -1}},
                        {parts, 4}).value == inf);
  CHECK_THROWS_AS(tensor_weight(fa, fb, {{{"zz", "b"}, 1}}), error);
}

TEST_CASE("on free groups the symmetrized weight is the absolute form") {
  // parts mixing signs across generators always weigh infinity, so every
  // decomposition splits coordinatewise and the infimum is Sum |k_x|.|x|
  Prng rng(31);
  for (int i = 0; i < 200; ++i) {
    std::vector<std::string> ids;
    std::vector<Weight> ws;
    std::size_t n = 1 + rng.below(2);
    for (std::size_t k = 0; k < n; ++k) {
      ids.push_back("g" + std::to_string(k));
      ws.push_back(rng.pick(standard_grid()));
    }
    FreeWAb a{WSet(ids, ws)};
    GroupElement v;
    Weight absolute(0);
    for (std::size_t k = 0; k < n; ++k) {
      long long c = rng.range(-3, 3);
      v.set(ids[k], c);
      if (c != 0) absolute += abs_weight(c) * ws[k];
    }
    CHECK(symmetrized_weight(a, v).value == absolute);
  }
}

TEST_CASE("the integer weight is subadditive") {
  for (long long k = -8; k <= 8; ++k)
    for (long long m = -8; m <= 8; ++m)
      CHECK(int_weight(k + m) <= int_weight(k) + int_weight(m));
  CHECK(int_weight(0) == Weight(0));
}

TEST_CASE("attainability preorder on the integers") {
  FreeWAb wz{WSet({{"u", Weight(1)}})};
  GroupElement two = GroupElement::single("u", 2);
  GroupElement five = GroupElement::single("u", 5);
  CHECK(attainable_leq(wz, two, five));
  CHECK_FALSE(attainable_leq(wz, five, two));
  CHECK(attainable_leq(wz, five, five));
}

TEST_CASE("hom weights on generators") {
  FreeWAb wz{WSet({{"u", Weight(1)}})};
  CHECK(hom_weight({wz, wz, {{1}}}) == Weight(1));
  CHECK(hom_weight({wz, wz, {{2}}}) == Weight(2));
  FreeWAb zero_gen{WSet({{"a", Weight(0)}})};
  CHECK(hom_weight({zero_gen, wz, {{1}}}) == inf);
  CHECK_THROWS_AS(hom_weight({wz, wz, {{1}, {2}}}), error);
  CHECK_THROWS_AS(hom_weight({wz, wz, {{1, 2}}}), error);
  // empty source: the empty sup
  FreeWAb none{WSet()};
  CHECK(hom_weight({none, wz, {}}) == Weight(0));
}

TEST_CASE("weighted ring axioms on integer windows") {
  AlgebraSample wz_ring = integer_window_sample(
      -2, 2, [](long long v) { return int_weight(v); },
      AlgebraSample::Kind::ring);
  CHECK(algebra_weight_check(wz_ring).ok());

  AlgebraSample abs_ring = integer_window_sample(
      -2, 2, [](long long v) { return abs_weight(v); },
      AlgebraSample::Kind::ring);
  CHECK(algebra_weight_check(abs_ring).ok());

  AlgebraSample codiscrete = integer_window_sample(
      -2, 2, [](long long) { return Weight(0); }, AlgebraSample::Kind::ring);
  CHECK(algebra_weight_check(codiscrete).ok());

  // breaking the identity axiom is reported
  AlgebraSample bad = wz_ring;
  bad.weights[2] = Weight(1);  // the element 0
  CheckReport r = algebra_weight_check(bad);
  CHECK_FALSE(r.ok());
}

TEST_CASE("module axioms") {
  // wZ acting on itself within a window
  AlgebraSample mod = integer_window_sample(
      -2, 2, [](long long v) { return int_weight(v); },
      AlgebraSample::Kind::module);
  mod.scalar_ids = {"0", "1", "2"};
  mod.scalar_weights = {Weight(0), Weight(1), Weight(2)};
  mod.action.assign(3, std::vector<int>(5, -1));
  for (long long s = 0; s <= 2; ++s)
    for (long long a = -2; a <= 2; ++a) {
      long long r = s * a;
      mod.action[s][a + 2] = (r < -2 || r > 2) ? -1 : static_cast<int>(r + 2);
    }
  CHECK(algebra_weight_check(mod).ok());
}

TEST_CASE("malformed tables are rejected") {
  AlgebraSample s;
  s.kind = AlgebraSample::Kind::additive_monoid;
  s.ids = {"a"};
  s.weights = {Weight(0)};
  s.add = {{5}};  // out of range
  CHECK_THROWS_AS(algebra_weight_check(s), error);
}

TEST_CASE("free functor monoidality is reported, not assumed") {
  WSet x{{"x", Weight(2)}};
  WSet y{{"y", Weight(3)}};
  std::vector<PairCoeffs> samples = {{{{"x", "y"}, 1}}, {{{"x", "y"}, 2}}};
  auto entries = free_monoidality_report(x, y, samples, {2, 2});
  // on single generators the two sides agree, so no discrepancies
  CHECK(entries.empty());
}
