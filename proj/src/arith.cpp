#include "ringcover/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ringcover/errors.hpp"

namespace ringcover::arith {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// floor(m^(1/k)) for k >= 1.
std::uint64_t integer_root(std::uint64_t m, unsigned k) {
  if (k == 1 || m < 2) return m;
  auto r = static_cast<std::uint64_t>(std::pow(static_cast<long double>(m), 1.0L / k));
  auto pow_le = [&](std::uint64_t base) {
    u128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
      acc *= base;
      if (acc > m) return false;
    }
    return true;
  };
  while (r > 0 && !pow_le(r)) --r;
  while (pow_le(r + 1)) ++r;
  return r;
}

}  // namespace

PrimePower::PrimePower(std::uint64_t p, unsigned d) : p_(p), d_(d) {
  if (d == 0) throw std::invalid_argument("prime power exponent must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  q_ = boost::multiprecision::pow(BigInt(p), d);
}

std::uint64_t PrimePower::value() const {
  if (!fits_u64()) throw std::overflow_error("prime power " + q_.str() + " exceeds 64 bits");
  return q_.convert_to<std::uint64_t>();
}

ExtNat::ExtNat(BigInt v) : value_(std::move(v)) {
  if (*value_ < 0) throw std::invalid_argument("ExtNat must be nonnegative");
}

const BigInt& ExtNat::value() const {
  if (!value_) throw std::logic_error("ExtNat is infinite");
  return *value_;
}

std::string ExtNat::to_string() const { return value_ ? value_->str() : std::string("inf"); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::optional<PrimePower> is_prime_power(std::uint64_t m) {
  if (m < 2) return std::nullopt;
  for (unsigned k = 63; k >= 1; --k) {
    std::uint64_t r = integer_root(m, k);
    if (r < 2) continue;
    u128 acc = 1;
    for (unsigned i = 0; i < k; ++i) acc *= r;
    if (acc == m && is_prime(r)) return PrimePower(r, k);
  }
  return std::nullopt;
}

std::optional<PrimePower> is_prime_power(const BigInt& m) {
  if (m < 0 || m > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return is_prime_power(m.convert_to<std::uint64_t>());
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return a / gcd(a, b) * b; }

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t f = 1; f * f <= n; ++f) {
    if (n % f == 0) {
      small.push_back(f);
      if (f != n / f) large.push_back(n / f);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      n /= f;
      if (n % f == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::uint64_t smallest_prime_divisor(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("smallest_prime_divisor needs n >= 2");
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return f;
  }
  return n;
}

unsigned omega(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("omega needs d >= 1");
  return static_cast<unsigned>(prime_divisors(d).size());
}

PrimePower tensor(const PrimePower& q1, const PrimePower& q2) {
  if (q1.p() != q2.p()) {
    throw MixedCharacteristic("cannot form " + q1.to_string() + " (x) " + q2.to_string() +
                              ": characteristics differ");
  }
  return PrimePower(q1.p(), static_cast<unsigned>(lcm(q1.d(), q2.d())));
}

BigInt irr_count(std::uint64_t p, unsigned d) {
  if (d == 0) throw std::invalid_argument("irr_count needs d >= 1");
  BigInt sum = 0;
  for (std::uint64_t e : divisors(d)) {
    int mu = mobius(e);
    if (mu == 0) continue;
    BigInt term = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(d / e));
    sum += mu > 0 ? term : BigInt(-term);
  }
  BigInt quotient = sum / d;
  if (quotient * d != sum) throw InvariantViolation("necklace sum not divisible by degree");
  return quotient;
}

BigInt tau(const PrimePower& q) {
  if (q.d() == 1) return BigInt(q.p());
  return irr_count(q.p(), q.d()) + 1;
}

unsigned nu(const PrimePower& q) { return q.d() == 1 ? 1u : omega(q.d()); }

BigInt qbinom(unsigned n, unsigned k, const BigInt& q) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned i = 0; i < k; ++i) {
    BigInt num = boost::multiprecision::pow(q, n - i) - 1;
    BigInt den = boost::multiprecision::pow(q, i + 1) - 1;
    result *= num;
    BigInt rem;
    boost::multiprecision::divide_qr(result, den, result, rem);
    if (rem != 0) throw InvariantViolation("q-binomial partial product not exact");
  }
  return result;
}

BigInt gl_order(unsigned n, const PrimePower& q) {
  if (n == 0) throw std::invalid_argument("gl_order needs n >= 1");
  BigInt qn = boost::multiprecision::pow(q.q(), n);
  BigInt result = 1;
  BigInt qk = 1;
  for (unsigned k = 0; k < n; ++k) {
    result *= qn - qk;
    qk *= q.q();
  }
  return result;
}

BigInt binom(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

PrimeSieve::PrimeSieve(std::uint64_t limit, std::uint64_t memory_cap_bytes) : limit_(limit) {
  std::uint64_t odd_count = limit / 2 + 1;
  std::uint64_t words = (odd_count + 63) / 64;
  if (words * 8 > memory_cap_bytes) {
    throw MemoryCap("prime sieve to " + std::to_string(limit) + " needs " +
                    std::to_string(words * 8) + " bytes");
  }
  composite_.assign(words, 0);
  composite_[0] |= 1;  // 1 is not prime
  for (std::uint64_t i = 3; i * i <= limit; i += 2) {
    if (composite_[(i / 2) >> 6] >> ((i / 2) & 63) & 1) continue;
    for (std::uint64_t j = i * i; j <= limit; j += 2 * i) {
      composite_[(j / 2) >> 6] |= std::uint64_t{1} << ((j / 2) & 63);
    }
  }
}

bool PrimeSieve::is_prime(std::uint64_t n) const {
  if (n > limit_) throw std::out_of_range("PrimeSieve query beyond limit");
  if (n < 2) return false;
  if (n == 2) return true;
  if ((n & 1) == 0) return false;
  return !(composite_[(n / 2) >> 6] >> ((n / 2) & 63) & 1);
}

std::vector<std::uint64_t> PrimeSieve::primes() const {
  std::vector<std::uint64_t> out;
  if (limit_ >= 2) out.push_back(2);
  for (std::uint64_t n = 3; n <= limit_; n += 2) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

PrimeCountTables prime_count_tables(std::uint64_t limit) {
  PrimeSieve sieve(limit);
  std::vector<std::uint8_t> is_pp(limit + 1, 0);
  for (std::uint64_t p : sieve.primes()) {
    for (u128 m = p; m <= limit; m *= p) is_pp[static_cast<std::uint64_t>(m)] = 1;
  }
  PrimeCountTables t;
  t.primes.assign(limit + 1, 0);
  t.prime_powers.assign(limit + 1, 0);
  for (std::uint64_t x = 1; x <= limit; ++x) {
    t.primes[x] = t.primes[x - 1] + (x >= 2 && sieve.is_prime(x) ? 1 : 0);
    t.prime_powers[x] = t.prime_powers[x - 1] + is_pp[x];
  }
  return t;
}

std::uint64_t prime_count(std::uint64_t x) {
  if (x < 2) return 0;
  PrimeSieve sieve(x);
  std::uint64_t count = 1;
  for (std::uint64_t n = 3; n <= x; n += 2) count += sieve.is_prime(n);
  return count;
}

std::uint64_t prime_power_count(std::uint64_t x) {
  if (x < 2) return 0;
  PrimeSieve sieve(x);
  std::uint64_t count = 0;
  for (std::uint64_t p : sieve.primes()) {
    for (u128 m = p; m <= x; m *= p) ++count;
  }
  return count;
}

std::vector<PrimePower> prime_powers_up_to(std::uint64_t limit) {
  std::vector<PrimePower> out;
  if (limit < 2) return out;
  PrimeSieve sieve(limit);
  std::vector<std::pair<std::uint64_t, PrimePower>> tagged;
  for (std::uint64_t p : sieve.primes()) {
    unsigned d = 1;
    for (u128 m = p; m <= limit; m *= p, ++d) {
      tagged.emplace_back(static_cast<std::uint64_t>(m), PrimePower(p, d));
    }
  }
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.reserve(tagged.size());
  for (auto& [m, pp] : tagged) out.push_back(std::move(pp));
  return out;
}

}  // namespace ringcover::arith
