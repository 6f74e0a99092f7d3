#include <doctest.h>

#include <random>
#include <vector>

#include "singmod/kernels/scan.hpp"

using namespace singmod::kernels;

namespace {

struct Batch {
  std::vector<std::int32_t> n, r, m, values;
  std::vector<std::uint32_t> residues;
};

Batch random_batch(std::mt19937& rng, std::size_t count) {
  Batch b;
  std::uniform_int_distribution<std::int32_t> idx(0, kMaxIndex);
  std::uniform_int_distribution<std::int32_t> sgn(-kMaxIndex, kMaxIndex);
  std::uniform_int_distribution<std::uint32_t> res(0, 3);
  for (std::size_t i = 0; i < count; ++i) {
    b.n.push_back(idx(rng) / 2);
    b.m.push_back(idx(rng) / 2);
    b.r.push_back(sgn(rng) / 2);
    b.values.push_back(static_cast<std::int32_t>(rng()));
    b.residues.push_back(res(rng));
  }
  return b;
}

}  // namespace

TEST_CASE("scalar disc kernel") {
  std::vector<std::int32_t> n{4, 1, 1}, r{-2, 2, 1}, m{6, 1, 1}, out(3);
  disc_invariants(n, r, m, out, Isa::scalar);
  CHECK(out == std::vector<std::int32_t>{92, 0, 3});
}

TEST_CASE("scalar residue kernel") {
  std::vector<std::int32_t> values{23, 46, 5, -5, 0};
  std::vector<std::uint32_t> residues{1, 0, 0, 7, 3};
  std::vector<std::uint8_t> flags(5);
  residue_flags(values, residues, 23, flags, Isa::scalar);
  CHECK(flags == std::vector<std::uint8_t>{0, 0, kValueNonzero, kValueNonzero | kViolation, 0});
}

TEST_CASE("vector kernels match the scalar reference") {
  if (!isa_available(Isa::avx2)) {
    MESSAGE("AVX2 not available; skipping equivalence");
    return;
  }
  std::mt19937 rng(11);
  for (const std::size_t count : {0u, 1u, 7u, 8u, 9u, 31u, 1000u, 4099u}) {
    Batch b = random_batch(rng, count);
    std::vector<std::int32_t> d_ref(count), d_vec(count);
    disc_invariants(b.n, b.r, b.m, d_ref, Isa::scalar);
    disc_invariants(b.n, b.r, b.m, d_vec, Isa::avx2);
    CHECK(d_ref == d_vec);

    for (const std::uint32_t p : {3u, 23u, 59u, 65521u, 2147483647u}) {
      std::vector<std::uint8_t> f_ref(count), f_vec(count);
      residue_flags(b.values, b.residues, p, f_ref, Isa::scalar);
      residue_flags(b.values, b.residues, p, f_vec, Isa::avx2);
      CHECK(f_ref == f_vec);
      residue_flags(d_ref, b.residues, p, f_ref, Isa::scalar);
      residue_flags(d_ref, b.residues, p, f_vec, Isa::avx2);
      CHECK(f_ref == f_vec);
    }
  }
}

TEST_CASE("extreme values agree") {
  if (!isa_available(Isa::avx2)) return;
  std::vector<std::int32_t> values{INT32_MIN, INT32_MAX, INT32_MIN + 1, -1, 1, 0, 2147483646, -2147483647};
  std::vector<std::uint32_t> residues(values.size(), 1);
  for (const std::uint32_t p : {2u, 3u, 2147483647u}) {
    std::vector<std::uint8_t> a(values.size()), b(values.size());
    residue_flags(values, residues, p, a, Isa::scalar);
    residue_flags(values, residues, p, b, Isa::avx2);
    CHECK(a == b);
  }
}

TEST_CASE("dispatch reports a usable isa") {
  CHECK(isa_available(Isa::scalar));
  CHECK(isa_available(active_isa()));
  CHECK(std::string(isa_name(Isa::scalar)) == "scalar");
}
