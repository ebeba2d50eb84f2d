#include <doctest.h>

#include <cmath>

#include "reference.hpp"
#include "ringcover/arith.hpp"
#include "ringcover/errors.hpp"

using namespace ringcover;
using namespace ringcover::arith;

TEST_CASE("is_prime_power factors prime powers uniquely") {
  auto q8 = is_prime_power(8);
  REQUIRE(q8);
  CHECK(q8->p() == 2);
  CHECK(q8->d() == 3);
  auto q9 = is_prime_power(9);
  REQUIRE(q9);
  CHECK(q9->p() == 3);
  CHECK(q9->d() == 2);
  CHECK_FALSE(is_prime_power(12));
  CHECK_FALSE(is_prime_power(1));
  CHECK_FALSE(is_prime_power(0));
  for (std::uint64_t m = 0; m < 5000; ++m) CHECK(is_prime_power(m).has_value() == ref::is_prime_power_trial(m));
}

TEST_CASE("is_prime_power near the top of the 64-bit range") {
  const std::uint64_t p = 4294967291ull;  // largest prime below 2^32
  auto sq = is_prime_power(p * p);
  REQUIRE(sq);
  CHECK(sq->p() == p);
  CHECK(sq->d() == 2);
  auto big = is_prime_power(std::uint64_t{1} << 63);
  REQUIRE(big);
  CHECK(big->d() == 63);
  CHECK_FALSE(is_prime_power(p * (p - 2)));
  CHECK(is_prime(18446744073709551557ull));
  CHECK_FALSE(is_prime(18446744073709551555ull));
}

TEST_CASE("PrimePower validation and equality") {
  CHECK_THROWS_AS(PrimePower(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(PrimePower(2, 0), std::invalid_argument);
  CHECK(PrimePower(2, 2) == PrimePower(2, 2));
  CHECK(PrimePower(2, 2) != PrimePower(2, 3));
  CHECK(PrimePower(3, 40).q() == BigInt("12157665459056928801"));
  CHECK_THROWS_AS(PrimePower(3, 41).value(), std::overflow_error);
}

TEST_CASE("ExtNat orders Infinity above every finite value") {
  const ExtNat inf = ExtNat::infinity();
  CHECK(ExtNat(5) < inf);
  CHECK_FALSE(inf < inf);
  CHECK(inf == inf);
  CHECK(min(inf, ExtNat(3)) == ExtNat(3));
  CHECK((ExtNat(2) + ExtNat(3)) == ExtNat(5));
  CHECK((ExtNat(2) + inf).is_infinite());
  CHECK(inf.to_string() == "inf");
  CHECK_THROWS(inf.value());
}

TEST_CASE("tensor is the order of the compositum") {
  CHECK(tensor(PrimePower(2, 2), PrimePower(2, 3)).value() == 64);
  CHECK(tensor(PrimePower(2, 1), PrimePower(2, 1)).value() == 2);
  CHECK(tensor(PrimePower(3, 1), PrimePower(3, 2)).value() == 9);
  CHECK_THROWS_AS(tensor(PrimePower(2, 1), PrimePower(3, 1)), MixedCharacteristic);
}

TEST_CASE("irr_count matches striking out products") {
  CHECK(irr_count(2, 2) == 1);
  CHECK(irr_count(2, 1) == 2);
  CHECK(irr_count(3, 2) == 3);
  CHECK(irr_count(2, 4) == 3);
  for (auto q : prime_powers_up_to(4096)) {
    CAPTURE(q.to_string());
    CHECK(irr_count(q.p(), q.d()) == ref::irreducible_count_by_products(q.p(), q.d()));
  }
}

TEST_CASE("degrees of irreducible factors partition p^d") {
  for (auto q : prime_powers_up_to(4096)) {
    BigInt sum = 0;
    for (auto e : divisors(q.d())) sum += BigInt(e) * irr_count(q.p(), static_cast<unsigned>(e));
    CHECK(sum == q.q());
  }
}

TEST_CASE("tau, nu, omega") {
  CHECK(tau(PrimePower(2, 1)) == 2);
  CHECK(tau(PrimePower(2, 2)) == 2);
  CHECK(tau(PrimePower(2, 3)) == 3);
  CHECK(nu(PrimePower(3, 1)) == 1);
  CHECK(nu(PrimePower(2, 2)) == 1);
  CHECK(nu(PrimePower(2, 6)) == 2);
  CHECK(omega(1) == 0);
  CHECK(omega(12) == 2);
  CHECK(omega(30) == 3);
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(smallest_prime_divisor(91) == 7);
}

TEST_CASE("qbinom values") {
  for (std::uint64_t q : {2, 3, 4}) CHECK(qbinom(2, 1, BigInt(q)) == q + 1);
  CHECK(qbinom(4, 2, PrimePower(2, 1)) == 35);
  CHECK(qbinom(3, 1, PrimePower(3, 1)) == 13);
  CHECK(qbinom(3, 4, PrimePower(2, 1)) == 0);
  CHECK(qbinom(5, 0, PrimePower(2, 1)) == 1);
}

TEST_CASE("qbinom equals a brute subspace count") {
  for (std::uint64_t p : {2, 3}) {
    for (unsigned n = 1; n <= 4; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        CAPTURE(p);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(qbinom(n, k, BigInt(p)) == ref::subspace_count_by_growth(n, k, p));
      }
    }
  }
}

TEST_CASE("qbinom symmetry and q-Pascal") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 27}) {
    const BigInt Q(q);
    for (unsigned n = 1; n <= 12; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        CHECK(qbinom(n, k, Q) == qbinom(n, n - k, Q));
        if (k >= 1) {
          BigInt qk = boost::multiprecision::pow(Q, k);
          CHECK(qbinom(n, k, Q) == qbinom(n - 1, k - 1, Q) + qk * qbinom(n - 1, k, Q));
        }
      }
    }
  }
}

TEST_CASE("gl_order matches counting invertible matrices") {
  CHECK(gl_order(1, PrimePower(5, 1)) == 4);
  CHECK(gl_order(3, PrimePower(2, 1)) == 168);
  CHECK(gl_order(2, PrimePower(3, 1)) == 48);
  CHECK(gl_order(3, PrimePower(2, 1)) == ref::invertible_count(3, 2));
  CHECK(gl_order(2, PrimePower(3, 1)) == ref::invertible_count(2, 3));
  CHECK(gl_order(2, PrimePower(5, 1)) == ref::invertible_count(2, 5));
}

TEST_CASE("prime and prime power counts") {
  CHECK(prime_power_count(10) == 7);
  CHECK(prime_power_count(1) == 0);
  CHECK(prime_count(10) == 4);
  CHECK(prime_count(0) == 0);
  std::uint64_t pi = 0, Pi = 0;
  auto t = prime_count_tables(20000);
  for (std::uint64_t x = 0; x <= 20000; ++x) {
    if (ref::is_prime_trial(x)) ++pi;
    if (ref::is_prime_power_trial(x)) ++Pi;
    REQUIRE(t.primes[x] == pi);
    REQUIRE(t.prime_powers[x] == Pi);
  }
  CHECK(prime_count(20000) == pi);
  CHECK(prime_power_count(20000) == Pi);
}

TEST_CASE("prime sieve agrees with Miller-Rabin") {
  PrimeSieve s(100000);
  for (std::uint64_t n = 0; n <= 100000; ++n) REQUIRE(s.is_prime(n) == is_prime(n));
  CHECK(s.primes().size() == 9592);
  CHECK_THROWS_AS(PrimeSieve(std::uint64_t{1} << 40, 1024), MemoryCap);
}

TEST_CASE("prime_powers_up_to is ascending and complete") {
  auto v = prime_powers_up_to(1000);
  CHECK(v.size() == prime_power_count(1000));
  for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i - 1].q() < v[i].q());
  CHECK(prime_powers_up_to(1).empty());
}
