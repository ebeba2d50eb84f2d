#ifndef RINGCOVER_TESTS_NAIVE_SIEVE_HPP
#define RINGCOVER_TESTS_NAIVE_SIEVE_HPP

// Reference enumeration of E(N) for small N: every family evaluated through
// the exact formulas over generous parameter ranges.

#include <array>
#include <cstdint>
#include <set>

#include "ringcover/formulas.hpp"

namespace ringcover::naive {

inline std::array<std::set<std::uint64_t>, 4> families(std::uint64_t N) {
  std::array<std::set<std::uint64_t>, 4> out;
  const BigInt bound = N;
  for (std::uint64_t q = 2; q + 1 <= N; ++q) {
    if (arith::is_prime_power(q)) out[0].insert(q + 1);
  }
  for (std::uint64_t q = 2; q <= N * N; ++q) {
    auto p = arith::is_prime_power(q);
    if (!p) continue;
    BigInt v = formulas::sigma_field_sum(*p);
    if (v <= bound) out[1].insert(v.convert_to<std::uint64_t>());
  }
  for (unsigned n = 2; n <= 12; ++n) {
    for (std::uint64_t q = 2; q <= N; ++q) {
      auto p = arith::is_prime_power(q);
      if (!p) continue;
      BigInt v = formulas::sigma_matrix(n, *p);
      if (v <= bound) out[2].insert(v.convert_to<std::uint64_t>());
    }
  }
  for (unsigned n = 3; n <= 12; ++n) {
    for (std::uint64_t q1 = 2; q1 <= N; ++q1) {
      auto p1 = arith::is_prime_power(q1);
      if (!p1) continue;
      for (unsigned e = 1; p1->d() * e <= 12; ++e) {
        auto r = formulas::sigma_A(n, *p1, arith::PrimePower(p1->p(), e));
        if (!r.elementary) continue;
        if (*r.value <= arith::ExtNat(bound)) out[3].insert(r.value->value().convert_to<std::uint64_t>());
      }
    }
  }
  return out;
}

inline std::set<std::uint64_t> covering_numbers(std::uint64_t N) {
  std::set<std::uint64_t> all;
  for (const auto& f : families(N)) all.insert(f.begin(), f.end());
  return all;
}

}  // namespace ringcover::naive

#endif  // RINGCOVER_TESTS_NAIVE_SIEVE_HPP
