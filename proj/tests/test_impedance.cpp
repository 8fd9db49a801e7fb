#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "walg/laws.hpp"
#include "walg/network_io.hpp"

using namespace walg;

static const ProjValue pinf = ProjValue::infinity();

TEST_CASE("projective arithmetic") {
  CHECK(pc_add(ProjValue(1, 1), ProjValue(2, -1)) == ProjValue(3, 0));
  CHECK(pc_add(ProjValue(1, 1), pinf) == pinf);
  CHECK(pc_mul(ProjValue(0, 0), pinf) == pinf);
  CHECK(pc_mul(pinf, ProjValue(0, 0)) == pinf);
  CHECK(pc_inv(ProjValue(1, 1)) == ProjValue(Rat(1, 2), Rat(-1, 2)));
  CHECK(pc_inv(ProjValue(0, 0)) == pinf);
  CHECK(pc_inv(pinf) == ProjValue(0, 0));
  CHECK(pc_mul(ProjValue(0, 1), ProjValue(0, 1)) == ProjValue(-1, 0));
}

TEST_CASE("division conventions transported from the real case") {
  CHECK(pc_div(ProjValue(0, 0), ProjValue(0, 0)) == ProjValue(0, 0));
  CHECK(pc_div(pinf, pinf) == ProjValue(0, 0));
  CHECK(pc_div(ProjValue(5, 0), ProjValue(0, 0)) == pinf);
  CHECK(pc_div(ProjValue(5, 0), pinf) == ProjValue(0, 0));
  CHECK(pc_div(ProjValue(1, 1), ProjValue(1, 1)) == ProjValue(1, 0));
}

TEST_CASE("parallel composition") {
  CHECK(pc_parallel(ProjValue(2, 0), ProjValue(2, 0)) == ProjValue(1, 0));
  CHECK(pc_parallel(ProjValue(3, 4), pinf) == ProjValue(3, 4));
  CHECK(pc_parallel(ProjValue(3, 4), ProjValue(0, 0)) == ProjValue(0, 0));
  // antiresonance: opposite reactances in parallel block entirely
  CHECK(pc_parallel(ProjValue(0, 1), ProjValue(0, -1)) == pinf);
}

TEST_CASE("element impedances at fixed angular speed") {
  CHECK(element_impedance(ElementKind::resistor, Rat(5), Rat(1)) ==
        ProjValue(5, 0));
  CHECK(element_impedance(ElementKind::inductor, Rat(2), Rat(1)) ==
        ProjValue(0, 2));
  CHECK(element_impedance(ElementKind::capacitor, Rat(4), Rat(1)) ==
        ProjValue(Rat(0), Rat(-1, 4)));
  CHECK_THROWS_AS(element_impedance(ElementKind::resistor, Rat(0), Rat(1)),
                  error);
  CHECK_THROWS_AS(element_impedance(ElementKind::resistor, Rat(1), Rat(-1)),
                  error);
}

TEST_CASE("network reduction basics") {
  NetworkTree two_resistors = NetworkTree::parallel(
      {NetworkTree::element(ElementKind::resistor, Rat(2)),
       NetworkTree::element(ElementKind::resistor, Rat(2))});
  CHECK(reduce_network(two_resistors, Rat(1)) == ProjValue(1, 0));

  NetworkTree rc = NetworkTree::series(
      {NetworkTree::element(ElementKind::resistor, Rat(1)),
       NetworkTree::element(ElementKind::capacitor, Rat(1))});
  CHECK(reduce_network(rc, Rat(1)) == ProjValue(1, -1));

  // series LC at resonance vanishes
  NetworkTree lc = NetworkTree::series(
      {NetworkTree::element(ElementKind::inductor, Rat(1)),
       NetworkTree::element(ElementKind::capacitor, Rat(1))});
  CHECK(reduce_network(lc, Rat(1)) == ProjValue(0, 0));
}

TEST_CASE("network reduction matches the direct-formula reference") {
  Prng rng(5);
  auto random_tree = [&](auto&& self, Prng& r, int depth,
                         int& leaves) -> NetworkTree {
    if (depth == 0 || leaves <= 1 || r.below(3) == 0) {
      --leaves;
      ElementKind k = static_cast<ElementKind>(r.below(3));
      return NetworkTree::element(k, Rat(r.range(1, 9), r.range(1, 4)));
    }
    std::vector<NetworkTree> children;
    std::size_t branch = 2 + r.below(2);
    for (std::size_t i = 0; i < branch && leaves > 0; ++i)
      children.push_back(self(self, r, depth - 1, leaves));
    if (r.below(2) == 0) return NetworkTree::series(std::move(children));
    return NetworkTree::parallel(std::move(children));
  };
  for (int i = 0; i < 100; ++i) {
    int leaves = 10;
    NetworkTree t = random_tree(random_tree, rng, 4, leaves);
    Rat omega(rng.range(1, 5), rng.range(1, 3));
    CHECK(reduce_network(t, omega) == laws::network_oracle(t, omega));
  }
}

TEST_CASE("a deep R-2R ladder reduces to exactly 2R") {
  // each stage is R in series with (2R parallel to the rest); terminated
  // with 2R the looking-in impedance is invariant
  Rat r(3, 7);
  Rat two_r = r * Rat(2);
  NetworkTree ladder = NetworkTree::element(ElementKind::resistor, two_r);
  for (int stage = 0; stage < 15; ++stage) {
    NetworkTree shunt = NetworkTree::parallel(
        {NetworkTree::element(ElementKind::resistor, two_r),
         std::move(ladder)});
    ladder = NetworkTree::series(
        {NetworkTree::element(ElementKind::resistor, r), std::move(shunt)});
  }
  // the top stage sees R + (2R || 2R) = 2R
  CHECK(reduce_network(ladder, Rat(1)) == ProjValue(two_r));
}

TEST_CASE("the unit-resistor continued fraction walks the Fibonacci ratios") {
  // Z_1 = 1, Z_n = 1 + (1 || Z_{n-1}); so Z_n = F(2n)/F(2n-1)
  NetworkTree chain = NetworkTree::element(ElementKind::resistor, Rat(1));
  long long fib[26];
  fib[1] = 1;
  fib[2] = 1;
  for (int i = 3; i <= 25; ++i) fib[i] = fib[i - 1] + fib[i - 2];
  for (int n = 2; n <= 12; ++n) {
    chain = NetworkTree::series(
        {NetworkTree::element(ElementKind::resistor, Rat(1)),
         NetworkTree::parallel(
             {NetworkTree::element(ElementKind::resistor, Rat(1)),
              std::move(chain)})});
    CHECK(reduce_network(chain, Rat(1)) ==
          ProjValue(Rat(fib[2 * n], fib[2 * n - 1])));
  }
}

TEST_CASE("cubical identities on a fixed sample") {
  std::vector<ProjValue> sample = {ProjValue(0, 0), ProjValue(1, 0), pinf,
                                   ProjValue(0, 1), ProjValue(1, 1)};
  CHECK(cubical_check(sample).ok());
  CHECK(pc_star(ProjValue(1, 0)) == ProjValue(1, 0));
  CHECK(pc_star(pc_star(ProjValue(2, 3))) == ProjValue(2, 3));
}

TEST_CASE("the additive order compares real parts at equal reactance") {
  CHECK(cplane_geq(ProjValue(5, 2), ProjValue(3, 2), PlaneKind::additive));
  CHECK_FALSE(
      cplane_geq(ProjValue(3, 2), ProjValue(5, 2), PlaneKind::additive));
  CHECK_FALSE(
      cplane_geq(ProjValue(5, 2), ProjValue(3, 1), PlaneKind::additive));
  CHECK(cplane_geq(pinf, ProjValue(3, 2), PlaneKind::additive));
  CHECK_FALSE(cplane_geq(ProjValue(3, 2), pinf, PlaneKind::additive));
  CHECK(cplane_geq(pinf, pinf, PlaneKind::additive));
}

TEST_CASE("the multiplicative order compares moduli at equal argument") {
  CHECK(cplane_geq(ProjValue(2, 2), ProjValue(1, 1),
                   PlaneKind::multiplicative));
  CHECK_FALSE(cplane_geq(ProjValue(1, 1), ProjValue(2, 2),
                         PlaneKind::multiplicative));
  CHECK_FALSE(cplane_geq(ProjValue(2, -2), ProjValue(1, 1),
                         PlaneKind::multiplicative));
  // 0 terminal, infinity initial
  for (const ProjValue& z : {ProjValue(0, 0), ProjValue(3, 4), pinf}) {
    CHECK(cplane_geq(pinf, z, PlaneKind::multiplicative));
    CHECK(cplane_geq(z, ProjValue(0, 0), PlaneKind::multiplicative));
  }
  CHECK_FALSE(cplane_geq(ProjValue(0, 0), ProjValue(1, 0),
                         PlaneKind::multiplicative));
}

TEST_CASE("additive hom: truncated difference on the real part") {
  auto h = cplane_hom(ProjValue(3, 2), ProjValue(5, 2), PlaneKind::additive);
  CHECK(h.value() == ProjValue(2, 0));
  h = cplane_hom(ProjValue(5, 0), ProjValue(3, 0), PlaneKind::additive);
  CHECK(h.value() == ProjValue(0, 0));
  h = cplane_hom(ProjValue(1, 1), pinf, PlaneKind::additive);
  CHECK(h.value() == pinf);
  // no adjoint at an infinite first argument
  CHECK_FALSE(cplane_hom(pinf, ProjValue(1, 0), PlaneKind::additive)
                  .has_value());
  CHECK_THROWS_AS(cplane_hom(ProjValue(-1, 0), ProjValue(1, 0),
                             PlaneKind::additive),
                  error);
}

TEST_CASE("additive residuation over a half-plane grid") {
  std::vector<ProjValue> grid;
  for (long long re = 0; re <= 2; ++re)
    for (long long im = -2; im <= 2; ++im) grid.push_back(ProjValue(re, im));
  grid.push_back(pinf);
  for (const ProjValue& z : grid)
    for (const ProjValue& w : grid) {
      if (w.is_infinite()) continue;  // hom undefined there
      for (const ProjValue& w2 : grid) {
        bool lhs = cplane_geq(pc_add(z, w), w2, PlaneKind::additive);
        auto hom = cplane_hom(w, w2, PlaneKind::additive);
        REQUIRE(hom.has_value());
        bool rhs = cplane_geq(z, *hom, PlaneKind::additive);
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("multiplicative hom: self-hom is the unit") {
  ProjValue w(3, 4);
  CHECK(cplane_hom(w, w, PlaneKind::multiplicative).value() ==
        ProjValue(1, 0));
}

TEST_CASE("printing") {
  CHECK(ProjValue(1, -1).to_string() == "1 - 1 i");
  CHECK(ProjValue(Rat(1, 2), Rat(1, 4)).to_string() == "1/2 + 1/4 i");
  CHECK(ProjValue(0, 0).to_string() == "0 + 0 i");
  CHECK(pinf.to_string() == "inf");
}

TEST_CASE("network files") {
  NetworkTree t = network_from_string(
      R"({"series": [{"R": "1"}, {"parallel": [{"C": "1/4"}, {"L": 2}]}]})");
  CHECK(t.node == NetworkTree::Node::series);
  CHECK(t.children.size() == 2);
  CHECK(t.children[1].children[0].kind == ElementKind::capacitor);
  CHECK(t.children[1].children[0].value == Rat(1, 4));
  CHECK_THROWS_AS(network_from_string("{}"), error);
  CHECK_THROWS_AS(network_from_string(R"({"R": "1", "L": "2"})"), error);
  CHECK_THROWS_AS(network_from_string(R"({"X": "1"})"), error);
  CHECK_THROWS_AS(network_from_string(R"({"series": []})"), error);
  CHECK_THROWS_AS(network_from_string("not json"), error);
}
