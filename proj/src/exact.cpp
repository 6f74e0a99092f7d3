#include "singmod/exact.hpp"

#include <array>
#include <cstdlib>
#include <mutex>

namespace singmod {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? std::string("1") : std::string(text.substr(slash + 1));
  auto valid = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!valid(num, true) || !valid(den, false))
    throw ArithmeticError("malformed rational '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool is_integral(const Rational& x) { return x.get_den() == 1; }

int valuation(const Integer& x, std::uint64_t p) {
  if (x == 0) throw ArithmeticError("valuation of zero is undefined");
  if (p < 2) throw ArithmeticError("valuation base must be prime");
  Integer t = abs(x);
  Integer pp(static_cast<unsigned long>(p));
  int v = 0;
  while (mpz_divisible_p(t.get_mpz_t(), pp.get_mpz_t())) {
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), pp.get_mpz_t());
    ++v;
  }
  return v;
}

int valuation(const Rational& x, std::uint64_t p) {
  if (x == 0) throw ArithmeticError("valuation of zero is undefined");
  return valuation(Integer(x.get_num()), p) - valuation(Integer(x.get_den()), p);
}

std::uint64_t residue(const Integer& x, std::uint64_t m) {
  return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(m));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

PrimeFactorization factor(std::int64_t n) {
  if (n == 0) throw ArithmeticError("cannot factor zero");
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  PrimeFactorization f;
  for (std::uint64_t d = 2; d <= m / d; d += (d == 2 ? 1 : 2)) {
    while (m % d == 0) {
      ++f[d];
      m /= d;
    }
  }
  if (m > 1) ++f[m];
  return f;
}

PrimeFactorization factor(const Integer& n) {
  if (n == 0) throw ArithmeticError("cannot factor zero");
  Integer a = abs(n);
  if (!a.fits_slong_p()) throw ArithmeticError("factor: |n| exceeds 2^63");
  return factor(static_cast<std::int64_t>(a.get_si()));
}

Integer expand(const PrimeFactorization& f) {
  Integer out = 1;
  for (const auto& [p, e] : f) {
    Integer pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    out *= pe;
  }
  return out;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

namespace {

constexpr int kMaxBernoulli = 64;

const std::array<Rational, kMaxBernoulli + 1>& bernoulli_table() {
  static const std::array<Rational, kMaxBernoulli + 1> table = [] {
    std::array<Rational, kMaxBernoulli + 1> b;
    b[0] = 1;
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    for (int m = 1; m <= kMaxBernoulli; ++m) {
      Rational acc = 0;
      Integer binom = 1;  // C(m+1, 0)
      for (int j = 0; j < m; ++j) {
        acc += binom * b[j];
        binom = binom * (m + 1 - j) / (j + 1);
      }
      b[m] = -acc / (m + 1);
      b[m].canonicalize();
    }
    return b;
  }();
  return table;
}

}  // namespace

Rational bernoulli(int k) {
  if (k < 0 || k > kMaxBernoulli) throw ArithmeticError("bernoulli: index out of range");
  if (k > 1 && k % 2 == 1) throw ArithmeticError("bernoulli: odd index > 1");
  return bernoulli_table()[k];
}

Integer divisor_power_sum(int k, std::int64_t n) {
  if (n < 1) throw ArithmeticError("divisor_power_sum: n must be positive");
  if (k < 0) throw ArithmeticError("divisor_power_sum: k must be nonnegative");
  Integer acc = 0;
  for (std::int64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    acc += ipow(Integer(static_cast<long>(d)), static_cast<unsigned long>(k));
    std::int64_t e = n / d;
    if (e != d) acc += ipow(Integer(static_cast<long>(e)), static_cast<unsigned long>(k));
  }
  return acc;
}

}  // namespace singmod
