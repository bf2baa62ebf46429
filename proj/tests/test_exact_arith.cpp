#include <doctest.h>

#include <random>

#include "lforms/exact_arith.hpp"
#include "oracles.hpp"

using namespace lforms;

TEST_CASE("rational parsing and canonical printing") {
  CHECK(parse_rational("-18/25") == Rational(-18, 25));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(rational_to_string(Rational(7)) == "7");
  CHECK(rational_to_string(Rational(-3, 4)) == "-3/4");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(Rational(1)).rep == 1);
  CHECK(squarefree_part(Rational(12)).rep == 3);
  CHECK(squarefree_part(Rational(-18, 25)).rep == -2);
  CHECK(squarefree_part(Rational(49)).rep == 1);
  CHECK(squarefree_part(Rational(-1, 8)).rep == -2);
  CHECK_THROWS_AS(squarefree_part(Rational(0)), std::domain_error);

  // class(x y^2) = class(x)
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    long x = static_cast<long>(rng() % 400) - 200;
    long y = static_cast<long>(rng() % 30) + 1;
    if (x == 0) continue;
    CHECK(squarefree_part(Rational(x) * y * y) == squarefree_part(Rational(x)));
  }
}

TEST_CASE("hilbert symbol basics") {
  Place inf = Place::infinity();
  Place two = Place::prime(2);
  CHECK(hilbert_symbol(Rational(1), Rational(-17, 3), inf) == 1);
  CHECK(hilbert_symbol(Rational(1), Rational(5), two) == 1);
  CHECK(hilbert_symbol(Rational(-1), Rational(-1), inf) == -1);
  CHECK(hilbert_symbol(Rational(-1), Rational(-1), two) == -1);
  CHECK_THROWS_AS(hilbert_symbol(Rational(0), Rational(1), inf), std::domain_error);
  CHECK_THROWS_AS(Place::prime(6), std::domain_error);
}

TEST_CASE("hilbert symbol symmetry, bilinearity, product formula") {
  std::mt19937_64 rng(11);
  auto rnd = [&]() {
    long v = static_cast<long>(rng() % 40) - 20;
    return v == 0 ? 1 : v;
  };
  std::vector<Place> places = {Place::infinity(), Place::prime(2), Place::prime(3),
                               Place::prime(5),   Place::prime(7), Place::prime(11)};
  for (int t = 0; t < 100; ++t) {
    Rational a(rnd()), b(rnd()), b2(rnd());
    for (const auto& v : places) {
      CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
      CHECK(hilbert_symbol(a, b * b2, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a, b2, v));
    }
    // product over {infinity} and the primes of 2ab is +1
    int prod = hilbert_symbol(a, b, Place::infinity());
    Int support = 2 * a.get_num() * b.get_num();
    for (const auto& [p, e] : factorize(abs(support))) prod *= hilbert_symbol(a, b, Place::prime(p));
    CHECK(prod == 1);
  }
}

TEST_CASE("hilbert symbol agrees with the modular-solubility search") {
  std::vector<Place> places = {Place::infinity(), Place::prime(2),  Place::prime(3), Place::prime(5),
                               Place::prime(7),   Place::prime(11), Place::prime(13)};
  for (long a = -20; a <= 20; ++a) {
    if (a == 0) continue;
    for (long b = -20; b <= 20; ++b) {
      if (b == 0) continue;
      for (const auto& v : places) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(v.str());
        CHECK(hilbert_symbol(Rational(a), Rational(b), v) ==
              oracle::hilbert_symbol_search(Rational(a), Rational(b), v));
      }
    }
  }
}

TEST_CASE("quadratic field elements") {
  QuadElem r5 = QuadElem::sqrt_d(5);
  CHECK(field_conjugate(r5) == -r5);
  CHECK(field_conjugate(QuadElem(7)) == QuadElem(7));
  QuadElem c(Rational(1, 4), Rational(1, 4), 5);  // (1+sqrt5)/4
  CHECK(field_conjugate(c) == QuadElem(Rational(1, 4), Rational(-1, 4), 5));
  CHECK((r5 * r5) == QuadElem(5));
  CHECK((c * QuadElem(4) - QuadElem(1)) == r5);
  CHECK((QuadElem(1) / c) == QuadElem(Rational(-1), Rational(1), 5));  // 4/(1+sqrt5) = sqrt5 - 1

  // sign at the fixed embedding sqrt(d) > 0
  CHECK(c.sign() == 1);
  CHECK(c.conj().sign() < 0);  // (1-sqrt5)/4 < 0
  CHECK(QuadElem(Rational(9, 4), Rational(-1), 5).sign() > 0);   // 9/4 > sqrt5
  CHECK(QuadElem(Rational(2), Rational(-1), 5).sign() < 0);      // 2 < sqrt5
  CHECK_THROWS_AS(validate_field_d(12), std::domain_error);
  CHECK_THROWS_AS(validate_field_d(1), std::domain_error);
  CHECK_THROWS_AS(QuadElem::sqrt_d(2) + QuadElem::sqrt_d(3), std::domain_error);
}

TEST_CASE("conjugation is an involutive automorphism") {
  std::mt19937_64 rng(13);
  auto rnd = [&]() {
    return QuadElem(Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 5)),
                    Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 5)), 5);
  };
  for (int t = 0; t < 100; ++t) {
    QuadElem x = rnd(), y = rnd();
    CHECK(field_conjugate(field_conjugate(x)) == x);
    CHECK(field_conjugate(x * y) == field_conjugate(x) * field_conjugate(y));
    CHECK(field_conjugate(x + y) == field_conjugate(x) + field_conjugate(y));
  }
}

TEST_CASE("field square roots") {
  auto w = field_square_root(QuadElem(4));
  REQUIRE(w);
  CHECK(*w == QuadElem(2));

  // 5 is a square in Q(sqrt5) but not in Q
  CHECK(!field_square_root(QuadElem(5)));
  auto w5 = field_square_root(QuadElem(5), 5);
  REQUIRE(w5);
  CHECK(*w5 * *w5 == QuadElem(5));

  CHECK(!field_square_root(QuadElem(2), 5));
  CHECK(!field_square_root(QuadElem(-4)));

  // (3 + sqrt5)/2 = ((1+sqrt5)/2)^2
  QuadElem x(Rational(3, 2), Rational(1, 2), 5);
  auto wx = field_square_root(x, 5);
  REQUIRE(wx);
  CHECK(*wx * *wx == x);

  // 6 + 2 sqrt5 = (1 + sqrt5)^2
  QuadElem y(Rational(6), Rational(2), 5);
  auto wy = field_square_root(y);
  REQUIRE(wy);
  CHECK(*wy * *wy == y);

  // nonsquare with irrational part
  CHECK(!field_square_root(QuadElem(Rational(1), Rational(1), 5)));
}

TEST_CASE("arithmetic results stay canonical") {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 200; ++t) {
    Rational a(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 12));
    Rational b(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 12));
    a.canonicalize();  // the raw two-argument constructor is not canonical
    b.canonicalize();
    for (Rational r : {Rational(a + b), Rational(a - b), Rational(a * b)}) {
      Rational copy = r;
      copy.canonicalize();
      CHECK(copy == r);
      CHECK(sgn(r.get_den()) > 0);
      CHECK(gcd(abs(r.get_num()), r.get_den()) == 1);
    }
  }
}

TEST_CASE("factorization and primes") {
  auto f = factorize(Int(2 * 2 * 3 * 49 * 101));
  REQUIRE(f.size() == 4);
  CHECK(f[0] == std::pair<Int, int>(Int(2), 2));
  CHECK(f[3] == std::pair<Int, int>(Int(101), 1));
  CHECK(is_prime(Int(2)));
  CHECK(is_prime(Int(1000003)));
  CHECK(!is_prime(Int(1)));
  CHECK(next_prime_above(Int(6)) == 7);
  CHECK(next_prime_above(Int(7)) == 11);
  // a semiprime beyond the trial-division range
  Int p("1000000007"), q("998244353");
  auto big = factorize(p * q);
  REQUIRE(big.size() == 2);
  CHECK(big[0].first == q);
  CHECK(big[1].first == p);
}
