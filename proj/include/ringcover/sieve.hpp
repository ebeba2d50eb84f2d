#ifndef RINGCOVER_SIEVE_HPP
#define RINGCOVER_SIEVE_HPP

// Enumeration of the set E(N) of integers <= N that are covering numbers of
// finite rings, built from the four sigma-elementary families.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringcover/arith.hpp"
#include "ringcover/ring_family.hpp"

namespace ringcover::sieve {

/// F1: q + 1 (idealizations and A(1, q1, q2)); F2: field sums; F3: matrix
/// rings; F4: A-rings with n >= 3.
enum class Family { F1 = 0, F2 = 1, F3 = 2, F4 = 3 };
inline constexpr std::array<Family, 4> kFamilies{Family::F1, Family::F2, Family::F3, Family::F4};

std::string to_string(Family f);
/// Accepts "F1".."F4" (case-insensitive); nullopt otherwise.
std::optional<Family> parse_family(const std::string& s);

// --- search cutoffs ------------------------------------------------------------
//
// Each cutoff is a sound termination bound: every parameter tuple outside it
// has value > N. Exact values are still filtered against N.

/// Prime powers q > field_sum_q_cap(N) give field-sum values > N.
std::uint64_t field_sum_q_cap(std::uint64_t N);
/// Matrix sizes n > matrix_n_limit(N) give values > N.
unsigned matrix_n_limit(std::uint64_t N);
/// False when every M_n(q) already exceeds N.
bool matrix_n_admissible(unsigned n, std::uint64_t N);
/// Largest q worth trying for M_n(q); q above it has q^(n-1)(q-1)/n > N.
std::uint64_t matrix_q_limit(unsigned n, std::uint64_t N);
/// A-rings with n > a_ring_n_limit(N) give values > N.
unsigned a_ring_n_limit(std::uint64_t N);
/// 1 <= d < n - n/a, with a the smallest prime divisor of n.
bool a_ring_d_admissible(unsigned n, unsigned d);

// --- fast evaluators ---------------------------------------------------------
//
// Saturating 128-bit evaluations of the family formulas; any value that does
// not fit is reported as kSaturated. fast_matrix may also saturate on values
// above kSaturated / n, since it forms the product before dividing by a.
// They mirror the BigInt formulas and are cross-checked against them in tests.

using u128 = unsigned __int128;
inline constexpr u128 kSaturated = ~u128{0};

u128 fast_field_sum(std::uint64_t p, unsigned d);
u128 fast_matrix(unsigned n, std::uint64_t q);
u128 fast_a_ring(unsigned n, std::uint64_t q1, unsigned d);

// --- sieving -------------------------------------------------------------------

struct SieveOptions {
  /// Worker threads; 0 reads SIGMA_THREADS, falling back to hardware concurrency.
  unsigned threads = 0;
  /// Record one generating tuple per family hit for each value.
  bool provenance = false;
};

struct SievedSet {
  std::uint64_t N = 0;
  /// Bit m set iff m is in E(N).
  std::vector<std::uint64_t> bits;
  /// Distinct values contributed by each family (before union).
  std::array<std::uint64_t, 4> family_counts{};
  /// value -> generating tuples, present only when requested.
  std::optional<std::map<std::uint64_t, std::vector<RingFamily>>> provenance;

  bool contains(std::uint64_t m) const {
    return m <= N && (bits[m >> 6] >> (m & 63) & 1);
  }
  std::uint64_t count() const;
  std::vector<std::uint64_t> values() const;
  /// Maximal runs [lo, hi] of consecutive members.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> intervals() const;
};

/// Throws MemoryCap if N would need more than ~1 GiB of bit arrays.
SievedSet enumerate_covering_numbers(std::uint64_t N, const SieveOptions& opts = {});

/// Distinct values <= N of one family, ascending.
std::vector<std::uint64_t> family_values(Family f, std::uint64_t N);

struct Membership {
  bool member = false;
  std::vector<RingFamily> witnesses;
};
Membership member(std::uint64_t m);

/// {3..N} minus E(N), ascending.
std::vector<std::uint64_t> gaps(std::uint64_t N, const SieveOptions& opts = {});

struct DensityReport {
  std::uint64_t N = 0;
  std::uint64_t count = 0;
  double lower = 0;  // N / log2 N
  double upper = 0;  // 128 N / log2 N
  bool pass = false;
  double ratio = 0;  // count / N
};
/// Requires N >= 5.
DensityReport density_report(std::uint64_t N, const SieveOptions& opts = {});

/// Effective worker count for `requested` (0 = SIGMA_THREADS or hardware).
unsigned resolve_threads(unsigned requested);

}  // namespace ringcover::sieve

#endif  // RINGCOVER_SIEVE_HPP
