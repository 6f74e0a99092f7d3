#pragma once

// Exact integer/rational substrate. Everything numeric in the library goes
// through GMP; there is no floating point on any coefficient path.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace singmod {

using Integer = mpz_class;
using Rational = mpq_class;

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Builds num/den in lowest terms with positive denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);
Rational make_rational(long num, long den = 1);

/// Accepts "a" or "a/b" (optional sign on a). Throws ArithmeticError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

bool is_integral(const Rational& x);

/// v_p(x); throws ArithmeticError when x == 0.
int valuation(const Integer& x, std::uint64_t p);
int valuation(const Rational& x, std::uint64_t p);

/// Least nonnegative residue of x modulo m (m > 0).
std::uint64_t residue(const Integer& x, std::uint64_t m);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

using PrimeFactorization = std::map<std::uint64_t, int>;

/// Trial division of |n|; n == 0 throws.
PrimeFactorization factor(std::int64_t n);
PrimeFactorization factor(const Integer& n);
Integer expand(const PrimeFactorization& f);

/// B_k for 0 <= k <= 64 (B_1 = -1/2). Odd k > 1 and out-of-range k throw.
Rational bernoulli(int k);

/// sigma_k(n) = sum of d^k over positive divisors d of n.
Integer divisor_power_sum(int k, std::int64_t n);

Integer ipow(const Integer& base, unsigned long exp);

}  // namespace singmod
