#ifndef RINGCOVER_ARITH_HPP
#define RINGCOVER_ARITH_HPP

// Exact number-theoretic and q-combinatorial primitives.

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ringcover {

using BigInt = boost::multiprecision::cpp_int;

namespace arith {

/// A validated prime power q = p^d with d >= 1.
class PrimePower {
 public:
  /// Throws std::invalid_argument unless p is prime and d >= 1.
  PrimePower(std::uint64_t p, unsigned d);

  std::uint64_t p() const noexcept { return p_; }
  unsigned d() const noexcept { return d_; }
  const BigInt& q() const noexcept { return q_; }

  /// q as a machine word; throws std::overflow_error if q >= 2^64.
  std::uint64_t value() const;
  bool fits_u64() const noexcept { return q_ <= std::numeric_limits<std::uint64_t>::max(); }

  std::string to_string() const { return q_.str(); }

  friend bool operator==(const PrimePower& a, const PrimePower& b) noexcept {
    return a.p_ == b.p_ && a.d_ == b.d_;
  }
  friend auto operator<=>(const PrimePower& a, const PrimePower& b) noexcept {
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    return a.d_ <=> b.d_;
  }

 private:
  std::uint64_t p_;
  unsigned d_;
  BigInt q_;
};

/// Nonnegative integer extended by a distinguished Infinity.
class ExtNat {
 public:
  ExtNat() : value_(BigInt(0)) {}
  ExtNat(BigInt v);  // NOLINT(google-explicit-constructor)
  ExtNat(std::uint64_t v) : ExtNat(BigInt(v)) {}  // NOLINT
  ExtNat(int v) : ExtNat(BigInt(v)) {}            // NOLINT

  static ExtNat infinity() {
    ExtNat e;
    e.value_.reset();
    return e;
  }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }
  /// Throws std::logic_error on Infinity.
  const BigInt& value() const;

  /// Decimal digits, or "inf".
  std::string to_string() const;

  friend bool operator==(const ExtNat& a, const ExtNat& b) noexcept { return a.value_ == b.value_; }
  friend bool operator<(const ExtNat& a, const ExtNat& b) noexcept {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return *a.value_ < *b.value_;
  }
  friend bool operator<=(const ExtNat& a, const ExtNat& b) noexcept { return !(b < a); }
  friend bool operator>(const ExtNat& a, const ExtNat& b) noexcept { return b < a; }
  friend bool operator>=(const ExtNat& a, const ExtNat& b) noexcept { return !(a < b); }
  friend ExtNat operator+(const ExtNat& a, const ExtNat& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtNat(*a.value_ + *b.value_);
  }

 private:
  std::optional<BigInt> value_;
};

inline ExtNat min(const ExtNat& a, const ExtNat& b) { return b < a ? b : a; }

// --- elementary number theory -------------------------------------------

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// The unique (p, d) with m = p^d, or nullopt (m = 1 yields nullopt).
std::optional<PrimePower> is_prime_power(std::uint64_t m);
/// BigInt overload; returns nullopt for values that do not fit in 64 bits.
std::optional<PrimePower> is_prime_power(const BigInt& m);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// Positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);
int mobius(std::uint64_t n);
/// Smallest prime divisor of n >= 2.
std::uint64_t smallest_prime_divisor(std::uint64_t n);

/// Number of distinct prime divisors; omega(1) = 0.
unsigned omega(std::uint64_t d);

// --- prime powers and finite-field counts ----------------------------------

/// p^lcm(d1, d2), the order of the compositum of F_{q1} and F_{q2}.
/// Throws MixedCharacteristic if the primes differ.
PrimePower tensor(const PrimePower& q1, const PrimePower& q2);

/// Number of monic irreducible polynomials of degree d over F_p.
BigInt irr_count(std::uint64_t p, unsigned d);

/// Coverability threshold for direct sums of copies of F_q.
BigInt tau(const PrimePower& q);

/// Number of maximal subrings of F_q.
unsigned nu(const PrimePower& q);

/// Gaussian binomial [n choose k]_q by exact-division products; 0 when k > n.
BigInt qbinom(unsigned n, unsigned k, const BigInt& q);
inline BigInt qbinom(unsigned n, unsigned k, const PrimePower& q) { return qbinom(n, k, q.q()); }

/// |GL(n, q)| = prod_{k=0}^{n-1} (q^n - q^k).
BigInt gl_order(unsigned n, const PrimePower& q);

BigInt binom(unsigned n, unsigned k);

// --- sieving -----------------------------------------------------------------

/// Odd-only Eratosthenes sieve. Memory is about limit/16 bytes.
class PrimeSieve {
 public:
  /// Throws MemoryCap if the bit array would exceed `memory_cap_bytes`.
  explicit PrimeSieve(std::uint64_t limit, std::uint64_t memory_cap_bytes = kDefaultMemoryCap);

  static constexpr std::uint64_t kDefaultMemoryCap = std::uint64_t{256} << 20;

  std::uint64_t limit() const noexcept { return limit_; }
  bool is_prime(std::uint64_t n) const;
  /// All primes <= limit, ascending.
  std::vector<std::uint64_t> primes() const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> composite_;  // bit i <-> odd number 2i+1
};

/// pi(x), the number of primes <= x.
std::uint64_t prime_count(std::uint64_t x);
/// Pi(x), the number of prime powers m with 2 <= m <= x.
std::uint64_t prime_power_count(std::uint64_t x);

/// Cumulative tables counts[x] = pi(x) and counts[x] = Pi(x) for 0 <= x <= limit.
struct PrimeCountTables {
  std::vector<std::uint32_t> primes;
  std::vector<std::uint32_t> prime_powers;
};
PrimeCountTables prime_count_tables(std::uint64_t limit);

/// All prime powers q <= limit in ascending order.
std::vector<PrimePower> prime_powers_up_to(std::uint64_t limit);

}  // namespace arith
}  // namespace ringcover

#endif  // RINGCOVER_ARITH_HPP
