#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "walg/laws.hpp"
#include "walg/wcat.hpp"

using namespace walg;

static const Weight inf = Weight::infinity();

namespace {

// x --a--> y --b--> z with a composite c, plus identities
WCatPresentation triangle_category(Weight wa, Weight wb, Weight wc,
                                   Weight wid) {
  std::vector<WCatPresentation::Mor> mors = {
      {"1x", 0, 0, wid}, {"1y", 1, 1, wid}, {"1z", 2, 2, wid},
      {"a", 0, 1, wa},   {"b", 1, 2, wb},   {"c", 0, 2, wc}};
  std::vector<std::vector<int>> comp(6, std::vector<int>(6, -1));
  auto set = [&](int g, int f, int gf) { comp[g][f] = gf; };
  set(0, 0, 0); set(1, 1, 1); set(2, 2, 2);
  set(3, 0, 3); set(1, 3, 3);  // a . 1x = a, 1y . a = a
  set(4, 1, 4); set(2, 4, 4);
  set(5, 0, 5); set(2, 5, 5);
  set(4, 3, 5);  // b . a = c
  return WCatPresentation({"x", "y", "z"}, mors, {0, 1, 2}, comp);
}

}  // namespace

TEST_CASE("graph parsing and closure on a two-edge chain") {
  WGraph g = WGraph::from_string("# chain\nx y 2\ny z 3\n");
  CHECK(g.objects == std::vector<std::string>{"x", "y", "z"});

  CostMatrix add = best_cost(g, WeightKind::additive);
  CHECK(add.at(0, 2) == Weight(5));
  CostMatrix mul = best_cost(g, WeightKind::multiplicative);
  CHECK(mul.at(0, 2) == Weight(6));
  CostMatrix sup = best_cost(g, WeightKind::sup);
  CHECK(sup.at(0, 2) == Weight(3));

  // no way back
  CHECK(add.at(2, 0) == inf);
  // empty-path diagonals
  CHECK(add.at(1, 1) == Weight(0));
  CHECK(mul.at(1, 1) == Weight(1));
  CHECK(sup.at(1, 1) == Weight(0));

  CHECK_THROWS_AS(WGraph::from_string("x y\n"), error);
}

TEST_CASE("parallel edges take the cheaper one") {
  WGraph g = WGraph::from_string("x y 5\nx y 2\n");
  CHECK(best_cost(g, WeightKind::additive).at(0, 1) == Weight(2));
}

TEST_CASE("a sub-unit multiplicative cycle drives routed pairs to 0") {
  WGraph g = WGraph::from_string("x c 1\nc c 1/2\nc y 3\n");
  CostMatrix m = best_cost(g, WeightKind::multiplicative);
  std::size_t x = 0, c = 1, y = 2;
  CHECK(m.at(x, y) == Weight(0));
  CHECK_FALSE(m.attained(x, y));
  CHECK(m.at(c, c) == Weight(0));
  CHECK_FALSE(m.attained(c, c));
  // additive closure of the same graph is untouched by the cycle
  CostMatrix a = best_cost(g, WeightKind::additive);
  CHECK(a.at(x, y) == Weight(4));
  CHECK(a.attained(x, y));
}

TEST_CASE("a zero-weight cycle yields an attained zero") {
  WGraph g = WGraph::from_string("x c 1\nc c 0\nc y 3\n");
  CostMatrix m = best_cost(g, WeightKind::multiplicative);
  CHECK(m.at(0, 2) == Weight(0));
  CHECK(m.attained(0, 2));
}

TEST_CASE("closure agrees with the path-enumeration reference") {
  Prng rng(17);
  for (int i = 0; i < 40; ++i) {
    WGraph g = laws::random_graph(rng, 5, 10);
    for (WeightKind kind : {WeightKind::additive, WeightKind::multiplicative,
                            WeightKind::sup}) {
      CostMatrix m = best_cost(g, kind);
      laws::PathOracle oracle(g, kind);
      for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = 0; b < m.size(); ++b) {
          CHECK(m.at(a, b) == oracle.at(a, b).value);
          CHECK(m.attained(a, b) == !oracle.at(a, b).limit_zero);
        }
    }
  }
}

TEST_CASE("TSV emission") {
  WGraph g = WGraph::from_string("x y 2\ny z 3\n");
  CostMatrix m = best_cost(g, WeightKind::additive);
  CHECK(m.to_tsv() ==
        "\tx\ty\tz\n"
        "x\t0\t2\t5\n"
        "y\tinf\t0\t3\n"
        "z\tinf\tinf\t0\n");
  CHECK(best_cost(WGraph{}, WeightKind::additive).to_tsv() == "");
}

TEST_CASE("category axiom checks by kind") {
  // identity weight 0, additive: fine
  CHECK(check_wcat(triangle_category(Weight(2), Weight(3), Weight(5),
                                     Weight(0)),
                   WeightKind::additive)
            .ok());
  // composite 6 breaks additivity (6 > 5) but is fine multiplicatively
  WCatPresentation c6 =
      triangle_category(Weight(2), Weight(3), Weight(6), Weight(0));
  CHECK_FALSE(check_wcat(c6, WeightKind::additive).ok());
  CHECK(check_wcat(c6, WeightKind::sup).violations.size() == 1);

  // identity of weight 1: passes multiplicative, fails additive and sup
  WCatPresentation cm =
      triangle_category(Weight(2), Weight(3), Weight(6), Weight(1));
  CHECK(check_wcat(cm, WeightKind::multiplicative).ok());
  CHECK_FALSE(check_wcat(triangle_category(Weight(2), Weight(3), Weight(5),
                                           Weight(1)),
                         WeightKind::additive)
                  .ok());
  CHECK_FALSE(check_wcat(triangle_category(Weight(2), Weight(3), Weight(3),
                                           Weight(1)),
                         WeightKind::sup)
                  .ok());
  // a lone identity of weight 0 is fine multiplicatively (the unit axiom is
  // an inequality), though positive morphisms through it would not be
  WCatPresentation point({"x"}, {{"1x", 0, 0, Weight(0)}}, {0}, {{0}});
  CHECK(check_wcat(point, WeightKind::multiplicative).ok());
  CHECK(check_wcat(point, WeightKind::additive).ok());
  WCatPresentation zero_id =
      triangle_category(Weight(2), Weight(3), Weight(6), Weight(0));
  CHECK_FALSE(check_wcat(zero_id, WeightKind::multiplicative).ok());
}

TEST_CASE("category laws are enforced on construction") {
  // wrong identity endpoints
  std::vector<WCatPresentation::Mor> mors = {{"1x", 0, 0, Weight(0)}};
  CHECK_THROWS_AS(WCatPresentation({"x", "y"}, mors, {0, 0},
                                   {{0}}),
                  error);
  // missing composite
  std::vector<WCatPresentation::Mor> mors2 = {{"1x", 0, 0, Weight(0)},
                                              {"f", 0, 0, Weight(1)}};
  std::vector<std::vector<int>> comp(2, std::vector<int>(2, -1));
  comp[0][0] = 0;
  comp[1][0] = 1;
  comp[0][1] = 1;
  CHECK_THROWS_AS(WCatPresentation({"x"}, mors2, {0}, comp), error);
}

TEST_CASE("weighted functor checks") {
  WGraph g = WGraph::from_string("x y 2\ny z 3\n");
  CostMatrix m = best_cost(g, WeightKind::additive);
  WCatPresentation c = category_from_matrix(m);

  std::vector<std::size_t> obj = {0, 1, 2};
  std::vector<std::size_t> mor(9);
  for (std::size_t i = 0; i < 9; ++i) mor[i] = i;
  CHECK(check_wfunctor({obj, mor}, c, c, WeightKind::additive).ok());

  // doubling the target weights breaks the condition on finite positives
  WGraph h = WGraph::from_string("x y 4\ny z 6\n");
  WCatPresentation d =
      category_from_matrix(best_cost(h, WeightKind::additive));
  CheckReport doubled = check_wfunctor({obj, mor}, c, d, WeightKind::additive);
  CHECK_FALSE(doubled.ok());

  // collapsing onto a single object with a 0 identity always passes
  CostMatrix pt({"pt"}, WeightKind::additive, {Weight(0)});
  WCatPresentation e = category_from_matrix(pt);
  WFunctor collapse{std::vector<std::size_t>(3, 0),
                    std::vector<std::size_t>(9, 0)};
  CHECK(check_wfunctor(collapse, c, e, WeightKind::additive).ok());

  // a non-functorial morphism map is an error, not a report
  std::vector<std::size_t> broken = mor;
  broken[1] = 2;  // send x>y to x>z
  CHECK_THROWS_AS(check_wfunctor({obj, broken}, c, c, WeightKind::additive),
                  not_a_functor);
}

TEST_CASE("piecewise-linear endofunctors") {
  PLFunction doubling = PLFunction::linear(Rat(2));
  CHECK(doubling.eval(Weight(3)) == Weight(6));
  CHECK(doubling.eval(inf) == inf);
  CHECK(endofunctor_check(doubling).ok());
  CHECK(endofunctor_check(doubling).subadditivity_analytic);

  // shift by one fails at 0
  PLFunction shifted({{Rat(0), Rat(1)}, {Rat(1), Rat(2)}}, Weight(1), inf);
  CHECK_FALSE(endofunctor_check(shifted).ok());

  // min(s, 1): concave with value 0 at 0
  PLFunction clamp({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}}, Weight(0),
                   Weight(1));
  CHECK(endofunctor_check(clamp).ok());
  CHECK(clamp.eval(Weight(7)) == Weight(1));
  CHECK(clamp.eval(Weight(1, 2)) == Weight(1, 2));

  // a convex function gets the sampled check and fails subadditivity
  PLFunction convex({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}}, Weight(3), inf);
  EndofunctorReport r = endofunctor_check(convex);
  CHECK_FALSE(r.subadditivity_analytic);
  CHECK_FALSE(r.ok());

  // non-monotone breakpoints are flagged
  PLFunction dip({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(1, 2)}},
                 Weight(0), Weight(1, 2));
  CHECK_FALSE(endofunctor_check(dip).ok());
}

TEST_CASE("composition of endofunctors") {
  PLFunction two = PLFunction::linear(Rat(2));
  PLFunction three = PLFunction::linear(Rat(3));
  PLFunction six = compose(two, three);
  for (const Weight& s : standard_grid())
    CHECK(six.eval(s) == PLFunction::linear(Rat(6)).eval(s));

  // both zero-variants absorb the infinite scaling from the left
  PLFunction inf_hat = PLFunction::infinity_hat();
  for (bool to_inf : {false, true}) {
    PLFunction zero_hat = PLFunction::zero_hat(to_inf);
    PLFunction comp = compose(inf_hat, zero_hat);
    for (const Weight& s : standard_grid())
      CHECK(comp.eval(s) == zero_hat.eval(s));
  }
}

TEST_CASE("fibered morphism checks") {
  WGraph g = WGraph::from_string("x y 2\ny z 3\n");
  CostMatrix dx = best_cost(g, WeightKind::additive);
  WSet carrier(dx.objects(),
               std::vector<Weight>(dx.size(), Weight(0)));
  WMap ident = identity_map(carrier);
  CHECK(fibered_check(ident, PLFunction::linear(Rat(1)), dx, dx).ok());

  // doubling the metric needs the doubling certificate
  WGraph h = WGraph::from_string("x y 4\ny z 6\n");
  CostMatrix dy = best_cost(h, WeightKind::additive);
  CHECK_FALSE(fibered_check(ident, PLFunction::linear(Rat(1)), dx, dy).ok());
  CHECK(fibered_check(ident, PLFunction::linear(Rat(2)), dx, dy).ok());

  MetricMorphism f{ident, PLFunction::linear(Rat(2))};
  MetricMorphism gmor{identity_map(WSet(dy.objects(),
                                        std::vector<Weight>(dy.size(),
                                                            Weight(0)))),
                      PLFunction::linear(Rat(1))};
  // composite certificate is the composite function
  MetricMorphism gf = compose(MetricMorphism{gmor}, f);
  CHECK(gf.scale.eval(Weight(1)) == Weight(2));
}

TEST_CASE("cost matrices validate their invariants") {
  // diagonal above the unit
  CHECK_THROWS_AS(CostMatrix({"x"}, WeightKind::additive, {Weight(1)}),
                  error);
  // triangle violation through y
  CHECK_THROWS_AS(
      CostMatrix({"x", "y", "z"}, WeightKind::additive,
                 {Weight(0), Weight(1), Weight(5),
                  inf, Weight(0), Weight(1),
                  inf, inf, Weight(0)}),
      error);
  CHECK_NOTHROW(CostMatrix({"x", "y"}, WeightKind::additive,
                           {Weight(0), Weight(2), inf, Weight(0)}));
}
