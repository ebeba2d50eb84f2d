#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "ringcover/errors.hpp"
#include "ringcover/formulas.hpp"
#include "ringcover/sieve.hpp"
#include "naive_sieve.hpp"

using namespace ringcover;
using namespace ringcover::sieve;
using arith::PrimePower;

namespace {

PrimePower pp(std::uint64_t q) { return *arith::is_prime_power(q); }

BigInt big(u128 v) {
  BigInt r = 0;
  for (int shift = 96; shift >= 0; shift -= 32) r = (r << 32) + static_cast<std::uint32_t>(v >> shift);
  return r;
}

}  // namespace

TEST_CASE("E(20) and E(13)") {
  auto s = enumerate_covering_numbers(20);
  std::vector<std::uint64_t> expect{3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 17, 18, 20};
  CHECK(s.values() == expect);
  CHECK(gaps(20) == std::vector<std::uint64_t>{13, 19});
  auto t = enumerate_covering_numbers(13);
  for (std::uint64_t m = 3; m <= 12; ++m) CHECK(t.contains(m));
  CHECK_FALSE(t.contains(13));
  CHECK(gaps(12).empty());
  CHECK(gaps(3).empty());
  CHECK(enumerate_covering_numbers(2).count() == 0);
  CHECK(enumerate_covering_numbers(0).count() == 0);
}

TEST_CASE("optimized sieve equals the naive reference") {
  for (std::uint64_t N : {5, 20, 50, 100, 150}) {
    CAPTURE(N);
    auto s = enumerate_covering_numbers(N);
    auto v = s.values();
    auto ref = naive::covering_numbers(N);
    CHECK(std::set<std::uint64_t>(v.begin(), v.end()) == ref);
    auto fam = naive::families(N);
    for (auto f : kFamilies) {
      auto got = family_values(f, N);
      CHECK(std::set<std::uint64_t>(got.begin(), got.end()) == fam[static_cast<int>(f)]);
      CHECK(s.family_counts[static_cast<int>(f)] == got.size());
    }
  }
}

TEST_CASE("family examples") {
  CHECK(family_values(Family::F1, 10) == std::vector<std::uint64_t>{3, 4, 5, 6, 8, 9, 10});
  CHECK(family_values(Family::F3, 20) == std::vector<std::uint64_t>{4, 7, 11, 15, 16});
  CHECK(family_values(Family::F4, 30).empty());
  CHECK(family_values(Family::F4, 31) == std::vector<std::uint64_t>{31});
}

TEST_CASE("no value below 3 and prefix consistency") {
  auto small = enumerate_covering_numbers(1000);
  auto large = enumerate_covering_numbers(100000);
  CHECK_FALSE(large.contains(0));
  CHECK_FALSE(large.contains(1));
  CHECK_FALSE(large.contains(2));
  for (std::uint64_t m = 0; m <= 1000; ++m) REQUIRE(small.contains(m) == large.contains(m));
}

TEST_CASE("threads do not change the result") {
  SieveOptions one, many;
  one.threads = 1;
  many.threads = 4;
  auto a = enumerate_covering_numbers(200000, one);
  auto b = enumerate_covering_numbers(200000, many);
  CHECK(a.bits == b.bits);
  CHECK(a.family_counts == b.family_counts);
}

TEST_CASE("provenance tuples evaluate to their value") {
  SieveOptions o;
  o.provenance = true;
  auto s = enumerate_covering_numbers(5000, o);
  REQUIRE(s.provenance);
  std::uint64_t with = 0;
  for (const auto& [m, fams] : *s.provenance) {
    REQUIRE(s.contains(m));
    ++with;
    for (const auto& f : fams) {
      auto r = formulas::classify(f);
      CAPTURE(to_string(f));
      REQUIRE(r.value);
      CHECK(*r.value == arith::ExtNat(m));
    }
  }
  CHECK(with == s.count());
  CHECK_FALSE(enumerate_covering_numbers(100).provenance);
}

TEST_CASE("every member of E(50) has a witness") {
  auto s = enumerate_covering_numbers(50);
  for (std::uint64_t m = 0; m <= 60; ++m) {
    auto w = member(m);
    if (m <= 50) CHECK(w.member == s.contains(m));
    CHECK(w.member == !w.witnesses.empty());
    for (const auto& f : w.witnesses) CHECK(*formulas::classify(f).value == arith::ExtNat(m));
  }
  CHECK_FALSE(member(13).member);
  auto m11 = member(11);
  REQUIRE(m11.witnesses.size() == 1);
  CHECK(m11.witnesses[0] == RingFamily(MatrixRing{2, pp(4)}));
}

TEST_CASE("intervals") {
  auto s = enumerate_covering_numbers(20);
  using I = std::pair<std::uint64_t, std::uint64_t>;
  CHECK(s.intervals() == std::vector<I>{{3, 12}, {14, 18}, {20, 20}});
}

TEST_CASE("density report") {
  auto r = density_report(5);
  CHECK(r.count == 3);
  CHECK(r.lower == doctest::Approx(5 / std::log2(5.0)));
  CHECK(r.pass);
  auto r4 = density_report(10000);
  CHECK(r4.pass);
  CHECK(r4.ratio == doctest::Approx(static_cast<double>(r4.count) / 10000));
  CHECK_THROWS_AS(density_report(4), std::invalid_argument);
}

TEST_CASE("fast evaluators agree with the exact formulas") {
  for (auto q : arith::prime_powers_up_to(1 << 16)) {
    REQUIRE(big(fast_field_sum(q.p(), q.d())) == formulas::sigma_field_sum(q));
  }
  for (unsigned n = 2; n <= 10; ++n) {
    for (auto q : arith::prime_powers_up_to(256)) {
      const BigInt exact = formulas::sigma_matrix(n, q);
      const u128 fast = fast_matrix(n, q.value());
      if (exact < big(kSaturated / n)) {
        CHECK(big(fast) == exact);
      } else {
        CHECK((fast == kSaturated || big(fast) == exact));
      }
    }
  }
  for (unsigned n = 3; n <= 12; ++n) {
    for (unsigned d = 1; a_ring_d_admissible(n, d); ++d) {
      for (auto q1 : arith::prime_powers_up_to(64)) {
        if (n == 3 && q1.q() == 2) continue;
        PrimePower q2(q1.p(), q1.d() * d);
        auto r = formulas::sigma_A(n, q1, q2);
        const u128 fast = fast_a_ring(n, q1.value(), d);
        if (r.value->value() < big(kSaturated)) {
          CHECK(big(fast) == r.value->value());
        } else {
          CHECK(fast == kSaturated);
        }
      }
    }
  }
}

TEST_CASE("cutoffs are sound") {
  for (std::uint64_t N : {10ull, 1000ull, 1000000ull, 100000000ull}) {
    CAPTURE(N);
    const std::uint64_t cap = field_sum_q_cap(N);
    CHECK(cap >= 256);
    for (auto q : arith::prime_powers_up_to(4 * cap)) {
      if (q.value() > cap) REQUIRE(formulas::sigma_field_sum(q) > N);
    }
    for (unsigned n = 2; n <= matrix_n_limit(N) + 3; ++n) {
      if (n > matrix_n_limit(N) || !matrix_n_admissible(n, N)) {
        CHECK(formulas::sigma_matrix(n, pp(2)) > N);
        continue;
      }
      const std::uint64_t lim = matrix_q_limit(n, N);
      for (auto q : arith::prime_powers_up_to(std::min<std::uint64_t>(2 * lim + 10, 100000))) {
        if (q.value() > lim) REQUIRE(formulas::sigma_matrix(n, q) > N);
      }
    }
    const unsigned nl = a_ring_n_limit(N);
    CHECK(boost::multiprecision::pow(BigInt(2), nl + 1) > N);
  }
  CHECK(a_ring_d_admissible(4, 1));
  CHECK_FALSE(a_ring_d_admissible(4, 2));
  CHECK_FALSE(a_ring_d_admissible(2, 1));
  CHECK(a_ring_d_admissible(9, 5));
  CHECK_FALSE(a_ring_d_admissible(9, 6));
}

TEST_CASE("family names") {
  CHECK(to_string(Family::F3) == "F3");
  CHECK(parse_family("f2") == Family::F2);
  CHECK_FALSE(parse_family("F5"));
  CHECK_FALSE(parse_family("x"));
}

TEST_CASE("memory cap") { CHECK_THROWS_AS(enumerate_covering_numbers(std::uint64_t{1} << 40), MemoryCap); }
