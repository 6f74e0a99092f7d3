#include <doctest.h>

#include <random>

#include "singmod/exact.hpp"

using namespace singmod;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-9/2") == make_rational(-9, 2));
  CHECK(parse_rational("+6/4") == make_rational(3, 2));
  CHECK(parse_rational("17") == 17);
  CHECK(to_string(make_rational(-69, 2)) == "-69/2");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), ArithmeticError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ArithmeticError);
  CHECK_THROWS_AS(parse_rational("x"), ArithmeticError);
  CHECK_THROWS_AS(parse_rational(""), ArithmeticError);
  CHECK_THROWS_AS(parse_rational("3/"), ArithmeticError);
}

TEST_CASE("p-adic valuation") {
  CHECK(valuation(make_rational(-9, 2), 3) == 2);
  CHECK(valuation(make_rational(-9, 2), 2) == -1);
  CHECK(valuation(make_rational(-69, 2), 23) == 1);
  CHECK(valuation(make_rational(5, 7), 3) == 0);
  CHECK(valuation(Integer(1024), 2) == 10);
  CHECK_THROWS_AS(valuation(Rational(0), 3), ArithmeticError);
}

TEST_CASE("factorization") {
  CHECK(factor(std::int64_t{1}).empty());
  CHECK(factor(std::int64_t{44}) == PrimeFactorization{{2, 2}, {11, 1}});
  CHECK(factor(std::int64_t{1950}) == PrimeFactorization{{2, 1}, {3, 1}, {5, 2}, {13, 1}});
  CHECK(factor(std::int64_t{-12}) == PrimeFactorization{{2, 2}, {3, 1}});
  CHECK_THROWS_AS(factor(std::int64_t{0}), ArithmeticError);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t n = static_cast<std::int64_t>(rng() % 1000000) + 1;
    const auto f = factor(n);
    CHECK(expand(f) == n);
    for (const auto& [p, e] : f) CHECK(is_prime(p));
  }
}

TEST_CASE("primes") {
  CHECK(primes_up_to(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(is_prime(59));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == make_rational(-1, 2));
  CHECK(bernoulli(4) == make_rational(-1, 30));
  CHECK(bernoulli(6) == make_rational(1, 42));
  CHECK(bernoulli(10) == make_rational(5, 66));
  CHECK(bernoulli(12) == make_rational(-691, 2730));
  CHECK_THROWS_AS(bernoulli(3), ArithmeticError);
}

TEST_CASE("divisor power sums") {
  CHECK(divisor_power_sum(3, 1) == 1);
  CHECK(divisor_power_sum(3, 2) == 9);
  CHECK(divisor_power_sum(9, 2) == 513);
  CHECK(divisor_power_sum(0, 12) == 6);
  CHECK(divisor_power_sum(3, 6) == 1 + 8 + 27 + 216);
  CHECK_THROWS_AS(divisor_power_sum(3, 0), ArithmeticError);
}

TEST_CASE("residues are nonnegative") {
  CHECK(residue(Integer(-1), 23) == 22);
  CHECK(residue(Integer(46), 23) == 0);
}
