#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "walg/prng.hpp"
#include "walg/rational.hpp"

using walg::Int;
using walg::Prng;
using walg::Rat;

TEST_CASE("integer arithmetic agrees with native 64-bit on small values") {
  Prng rng(42);
  for (int i = 0; i < 2000; ++i) {
    long long a = rng.range(-1000000, 1000000);
    long long b = rng.range(-1000000, 1000000);
    CHECK(Int(a) + Int(b) == Int(a + b));
    CHECK(Int(a) - Int(b) == Int(a - b));
    CHECK(Int(a) * Int(b) == Int(a * b));
    CHECK((Int(a) < Int(b)) == (a < b));
    if (b != 0) {
      auto [q, r] = Int::divmod(Int(a), Int(b));
      CHECK(q == Int(a / b));
      CHECK(r == Int(a % b));
    }
  }
}

TEST_CASE("division identity holds on large operands") {
  Prng rng(7);
  for (int i = 0; i < 200; ++i) {
    Int a(1);
    for (int k = 0; k < 6; ++k) a *= Int(rng.range(-1000000, 1000000));
    Int b(1);
    for (int k = 0; k < 3; ++k) b *= Int(rng.range(1, 1000000));
    auto [q, r] = Int::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
  }
}

TEST_CASE("gcd and string round trips") {
  CHECK(Int::gcd(Int(12), Int(18)) == Int(6));
  CHECK(Int::gcd(Int(-12), Int(18)) == Int(6));
  CHECK(Int::gcd(Int(0), Int(5)) == Int(5));
  CHECK(Int(0).to_string() == "0");
  CHECK(Int(-123456789012345678LL).to_string() == "-123456789012345678");
  Prng rng(3);
  for (int i = 0; i < 200; ++i) {
    Int a(1);
    for (int k = 0; k < 5; ++k) a *= Int(rng.range(-999999999, 999999999));
    CHECK(Int::from_string(a.to_string()) == a);
  }
}

TEST_CASE("rationals stay canonical") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK(Rat(0, 7).to_string() == "0");
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
  CHECK(Rat(1, 2) / Rat(3, 2) == Rat(1, 3));
  CHECK(Rat(7, 2).to_string() == "7/2");
  CHECK(Rat(-7).to_string() == "-7");
  CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("rational parsing covers integers, fractions and decimals") {
  CHECK(Rat::from_string("5") == Rat(5));
  CHECK(Rat::from_string("-5") == Rat(-5));
  CHECK(Rat::from_string("10/4") == Rat(5, 2));
  CHECK(Rat::from_string("0.25") == Rat(1, 4));
  CHECK(Rat::from_string("-1.5") == Rat(-3, 2));
  CHECK(Rat::from_string("0.000000001") == Rat(1, 1000000000));
  CHECK_THROWS(Rat::from_string("1/"));
  CHECK_THROWS(Rat::from_string("x"));
  CHECK_THROWS(Rat::from_string("1."));
}

TEST_CASE("ordering is exact under cross multiplication") {
  Prng rng(11);
  for (int i = 0; i < 500; ++i) {
    long long an = rng.range(-50, 50), ad = rng.range(1, 50);
    long long bn = rng.range(-50, 50), bd = rng.range(1, 50);
    Rat a(an, ad), b(bn, bd);
    CHECK((a < b) == (an * bd < bn * ad));
    CHECK((a == b) == (an * bd == bn * ad));
  }
}

TEST_CASE("doubles approximate the exact value") {
  CHECK(Rat(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
  CHECK(Rat(-22, 7).to_double() == doctest::Approx(-22.0 / 7.0));
}

TEST_CASE("factorial of 30 as a known big value") {
  Int f(1);
  for (int i = 2; i <= 30; ++i) f *= Int(i);
  CHECK(f.to_string() == "265252859812191058636308480000000");
  CHECK(Int::from_string("265252859812191058636308480000000") == f);
  auto [q, r] = Int::divmod(f, Int::from_string("15511210043330985984000000"));
  CHECK(r.is_zero());  // f / 25!
  CHECK(q == Int(17100720));  // 26*27*28*29*30
}

TEST_CASE("ring identities on large random operands") {
  Prng rng(23);
  for (int i = 0; i < 100; ++i) {
    auto big = [&] {
      Int v(1);
      for (int k = 0; k < 4; ++k) v *= Int(rng.range(-99999999, 99999999));
      return v;
    };
    Int a = big(), b = big(), c = big();
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * (b * c) == (a * b) * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Int(0));
  }
}
