#include <doctest.h>

#include <random>

#include "ringcover/specparser.hpp"

using namespace ringcover;
using namespace ringcover::spec;
using arith::PrimePower;

namespace {

PrimePower pp(std::uint64_t q) { return *arith::is_prime_power(q); }

ParseErrorKind error_kind(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.error_kind();
  }
  FAIL("expected a parse error for " << text);
  return ParseErrorKind::SyntaxError;
}

RingFamily random_leaf(std::mt19937_64& rng) {
  static const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 101, 65521};
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) { return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng); };
  const std::uint64_t p = primes[pick(0, 7)];
  auto q = [&] { return PrimePower(p, static_cast<unsigned>(pick(1, 4))); };
  switch (pick(0, 4)) {
    case 0:
      return FieldSum{q(), static_cast<unsigned>(pick(1, 100000))};
    case 1:
      return Idealization{q(), static_cast<unsigned>(pick(1, 9))};
    case 2:
      return MatrixRing{static_cast<unsigned>(pick(1, 12)), q()};
    case 3:
      return ARing{static_cast<unsigned>(pick(1, 12)), q(), q()};
    default:
      return ZeroMult{p, static_cast<unsigned>(pick(1, 30))};
  }
}

}  // namespace

TEST_CASE("parse single terms") {
  CHECK(parse("M(3,2)") == RingFamily(MatrixRing{3, pp(2)}));
  CHECK(parse("F(2)^3") == RingFamily(FieldSum{pp(2), 3}));
  CHECK(parse("F(4)") == RingFamily(FieldSum{pp(4), 1}));
  CHECK(parse("Id(9)") == RingFamily(Idealization{pp(9), 2}));
  CHECK(parse("Id(9,3)") == RingFamily(Idealization{pp(9), 3}));
  CHECK(parse("A(4,2,2)") == RingFamily(ARing{4, pp(2), pp(2)}));
  CHECK(parse("Z(3,2)") == RingFamily(ZeroMult{3, 2}));
  CHECK(parse("  M ( 2 , 4 ) ") == RingFamily(MatrixRing{2, pp(4)}));
}

TEST_CASE("parse sums and repetition") {
  CHECK(parse("Id(9)+F(3)") == RingFamily(DirectSum{{Idealization{pp(9), 2}, FieldSum{pp(3), 1}}}));
  CHECK(parse("M(2,2)^2") == RingFamily(DirectSum{{MatrixRing{2, pp(2)}, MatrixRing{2, pp(2)}}}));
  CHECK(parse("F(2)^2^3") == RingFamily(FieldSum{pp(2), 6}));
  CHECK(parse("F(2)^100000") == RingFamily(FieldSum{pp(2), 100000}));
  CHECK_THROWS_AS(parse("M(2,2)^5000"), ParseError);
}

TEST_CASE("parse errors") {
  CHECK(error_kind("A(1,2,6)") == ParseErrorKind::NotAPrimePower);
  CHECK(error_kind("F(1)") == ParseErrorKind::NotAPrimePower);
  CHECK(error_kind("Z(4,2)") == ParseErrorKind::NotAPrimePower);
  CHECK(error_kind("A(1,2,3)") == ParseErrorKind::MixedCharacteristic);
  CHECK(error_kind("") == ParseErrorKind::SyntaxError);
  CHECK(error_kind("M(2,2") == ParseErrorKind::SyntaxError);
  CHECK(error_kind("M(0,2)") == ParseErrorKind::SyntaxError);
  CHECK(error_kind("F(2)+") == ParseErrorKind::SyntaxError);
  CHECK(error_kind("F(2) F(3)") == ParseErrorKind::SyntaxError);
  CHECK(error_kind("Q(2)") == ParseErrorKind::SyntaxError);
  CHECK(error_kind("F(99999999999999999999999)") == ParseErrorKind::SyntaxError);
  CHECK(error_kind("F(2)^0") == ParseErrorKind::SyntaxError);
}

TEST_CASE("parse errors carry offsets") {
  try {
    parse("F(2)+M(2,6)");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.error_kind() == ParseErrorKind::NotAPrimePower);
    CHECK(e.offset() == 9);
  }
  try {
    parse("F(2)+@");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
  }
}

TEST_CASE("format") {
  CHECK(format(MatrixRing{2, pp(4)}) == "M(2,4)");
  CHECK(format(FieldSum{pp(2), 3}) == "F(2)^3");
  CHECK(format(ARing{4, pp(2), pp(2)}) == "A(4,2,2)");
  CHECK(format(parse("Id(9)+F(3)")) == "Id(9)+F(3)");
}

TEST_CASE("round trip on random flat specs") {
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 10000; ++i) {
    const auto n = std::uniform_int_distribution<int>(1, 5)(rng);
    RingFamily f = random_leaf(rng);
    if (n > 1) {
      DirectSum s;
      for (int k = 0; k < n; ++k) s.terms.push_back(random_leaf(rng));
      f = s;
    }
    const std::string text = format(f);
    CAPTURE(text);
    REQUIRE(parse(text) == f);
  }
}

TEST_CASE("arbitrary bytes never escape as anything but ParseError") {
  std::mt19937_64 rng(7);
  const std::string alphabet = "FMIdAZ()^+, 0123456789\t\n-x";
  for (int i = 0; i < 20000; ++i) {
    const auto len = std::uniform_int_distribution<int>(0, 24)(rng);
    std::string s;
    for (int k = 0; k < len; ++k) {
      if (i % 2) {
        s += static_cast<char>(std::uniform_int_distribution<int>(0, 255)(rng));
      } else {
        s += alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
      }
    }
    try {
      auto f = parse(s);
      CHECK(parse(format(f)) == f);
    } catch (const ParseError& e) {
      CHECK(e.offset() <= s.size());
    }
  }
}
