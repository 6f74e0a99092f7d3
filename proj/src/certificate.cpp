#include <numeric>

#include "singmod/congruence.hpp"
#include "singmod/kernels/scan.hpp"

namespace singmod {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::non_integral:
      return "non-integral coefficients";
    case ViolationKind::prime_divides_df:
      return "prime divides D_F";
    case ViolationKind::insufficient_precision:
      return "insufficient precision";
    case ViolationKind::not_prime:
      return "modulus is not prime";
  }
  return "?";
}

const char* to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::pass:
      return "pass";
    case CertificateStatus::fail:
      return "fail";
    case CertificateStatus::vacuous:
      return "vacuous";
  }
  return "?";
}

std::uint64_t compute_DF(const OrthoSeries& f) {
  if (f.is_zero()) throw SeriesError("compute_DF: series vanishes within precision");
  std::uint64_t df = 1;
  for (const auto& [k, c] : f.terms()) {
    const std::int64_t d = k.disc();
    const std::uint64_t g = std::gcd<std::uint64_t, std::uint64_t>(d < 0 ? -d : d, 16);
    df = std::lcm<std::uint64_t>(df, 16 / g);
  }
  return df;
}

namespace {

// Numerator of Q(lambda) = D / 16 in lowest terms.
std::int64_t q_numerator(std::int64_t disc) {
  if (disc == 0) return 0;
  return disc / static_cast<std::int64_t>(std::gcd<std::uint64_t, std::uint64_t>(disc < 0 ? -disc : disc, 16));
}

bool in_kernel_range(IndexKey k) {
  auto ok = [](std::int32_t v) { return v <= kernels::kMaxIndex && v >= -kernels::kMaxIndex; };
  return ok(k.N) && ok(k.R) && ok(k.M);
}

}  // namespace

Certificate check_singular(const OrthoSeries& f, std::uint64_t p, int prec, const std::string& name) {
  if (!is_prime(p) || p >= (1ull << 31))
    throw ContractViolation(ViolationKind::not_prime, std::to_string(p) + " is not a supported prime");
  if (prec > f.prec())
    throw ContractViolation(ViolationKind::insufficient_precision,
                            "requested precision " + std::to_string(prec) + " exceeds series precision " +
                                std::to_string(f.prec()));

  Certificate cert;
  cert.form = name;
  cert.prime = p;
  cert.prec = prec;
  cert.d_f = f.is_zero() ? 1 : compute_DF(f);
  if (cert.d_f % p == 0)
    throw ContractViolation(ViolationKind::prime_divides_df,
                            std::to_string(p) + " divides D_F = " + std::to_string(cert.d_f));

  std::vector<IndexKey> keys;
  std::vector<std::uint32_t> residues;
  bool kernel_ok = true;
  const std::int64_t bound = 2 * std::int64_t{prec};
  for (const auto& [k, c] : f.terms()) {
    if (k.order() > bound) break;
    if (!is_integral(c))
      throw ContractViolation(ViolationKind::non_integral,
                              "coefficient at (" + std::to_string(k.N) + ", " + std::to_string(k.R) + ", " +
                                  std::to_string(k.M) + ") is " + to_string(c));
    keys.push_back(k);
    residues.push_back(static_cast<std::uint32_t>(residue(c.get_num(), p)));
    kernel_ok = kernel_ok && in_kernel_range(k);
  }

  const std::size_t count = keys.size();
  std::vector<std::int32_t> disc(count);
  if (kernel_ok) {
    std::vector<std::int32_t> n(count), r(count), m(count);
    for (std::size_t i = 0; i < count; ++i) {
      n[i] = keys[i].N;
      r[i] = keys[i].R;
      m[i] = keys[i].M;
    }
    kernels::disc_invariants(n, r, m, disc);
  }

  // Q-numerators; only their class mod p matters, so out-of-range ones are
  // reduced first.
  std::vector<std::int32_t> values(count);
  std::vector<std::int64_t> full_disc(count);
  const std::int64_t pm = static_cast<std::int64_t>(p);
  for (std::size_t i = 0; i < count; ++i) {
    full_disc[i] = kernel_ok ? disc[i] : keys[i].disc();
    const std::int64_t q = q_numerator(full_disc[i]);
    values[i] = kernel_ok ? static_cast<std::int32_t>(q) : static_cast<std::int32_t>(q % pm);
  }
  std::vector<std::uint8_t> flags(count);
  kernels::residue_flags(values, residues, static_cast<std::uint32_t>(p), flags);

  cert.checked_count = count;
  for (std::size_t i = 0; i < count; ++i) {
    if (flags[i] & kernels::kValueNonzero) ++cert.witnesses_nonvacuous;
    if (flags[i] & kernels::kViolation) {
      cert.violations.push_back(
          {keys[i], residues[i], static_cast<std::uint64_t>(((full_disc[i] % pm) + pm) % pm)});
    }
  }
  if (!cert.violations.empty())
    cert.status = CertificateStatus::fail;
  else
    cert.status = cert.witnesses_nonvacuous > 0 ? CertificateStatus::pass : CertificateStatus::vacuous;
  return cert;
}

std::vector<PrimeScanEntry> scan_primes(const OrthoSeries& f, int prec, std::uint64_t max_prime) {
  std::vector<PrimeScanEntry> out;
  const std::uint64_t df = f.is_zero() ? 1 : compute_DF(f);
  for (const std::uint64_t p : primes_up_to(max_prime)) {
    if (df % p == 0) continue;
    const Certificate c = check_singular(f, p, prec);
    out.push_back({p, c.status, c.violations.size()});
  }
  return out;
}

}  // namespace singmod
