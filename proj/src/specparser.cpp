#include "ringcover/specparser.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace ringcover::spec {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  RingFamily parse_spec() {
    std::vector<RingFamily> leaves;
    parse_term(leaves);
    skip_ws();
    while (pos_ < s_.size() && s_[pos_] == '+') {
      ++pos_;
      parse_term(leaves);
      skip_ws();
    }
    if (pos_ != s_.size()) fail("unexpected character '" + printable(s_[pos_]) + "'");
    if (leaves.size() == 1) return std::move(leaves.front());
    return DirectSum{std::move(leaves)};
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { fail_at(pos_, msg); }
  [[noreturn]] static void fail_at(std::size_t at, const std::string& msg) {
    throw ParseError(ParseErrorKind::SyntaxError, at, msg);
  }

  static std::string printable(char c) {
    auto u = static_cast<unsigned char>(c);
    if (u >= 0x20 && u < 0x7f) return std::string(1, c);
    static const char* hex = "0123456789abcdef";
    return std::string("\\x") + hex[u >> 4] + hex[u & 15];
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' but input ended");
    if (s_[pos_] != c) fail(std::string("expected '") + c + "' but found '" + printable(s_[pos_]) + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // Unsigned decimal that fits in 64 bits; returns (value, start offset).
  std::pair<std::uint64_t, std::size_t> number() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      fail(pos_ >= s_.size() ? "expected an integer but input ended" : "expected an integer");
    }
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      unsigned digit = static_cast<unsigned>(s_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        fail_at(start, "integer out of range");
      }
      v = v * 10 + digit;
      ++pos_;
    }
    return {v, start};
  }

  unsigned small(std::uint64_t lo, const char* what) {
    auto [v, at] = number();
    if (v < lo) fail_at(at, std::string(what) + " must be at least " + std::to_string(lo));
    if (v > std::numeric_limits<std::int32_t>::max()) fail_at(at, std::string(what) + " out of range");
    return static_cast<unsigned>(v);
  }

  arith::PrimePower prime_power() {
    auto [v, at] = number();
    auto pp = arith::is_prime_power(v);
    if (!pp) throw ParseError(ParseErrorKind::NotAPrimePower, at, std::to_string(v) + " is not a prime power");
    return *pp;
  }

  std::uint64_t prime() {
    auto [v, at] = number();
    if (!arith::is_prime(v)) throw ParseError(ParseErrorKind::NotAPrimePower, at, std::to_string(v) + " is not a prime");
    return v;
  }

  RingFamily atom() {
    skip_ws();
    std::size_t start = pos_;
    std::string name;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) name += s_[pos_++];
    if (name.empty()) {
      fail(pos_ >= s_.size() ? "expected a term but input ended" : "expected a term");
    }
    if (name == "F") {
      expect('(');
      auto q = prime_power();
      expect(')');
      return FieldSum{q, 1};
    }
    if (name == "M") {
      expect('(');
      unsigned n = small(1, "matrix size");
      expect(',');
      auto q = prime_power();
      expect(')');
      return MatrixRing{n, q};
    }
    if (name == "Id") {
      expect('(');
      auto q = prime_power();
      unsigned lambda = 2;
      if (accept(',')) lambda = small(1, "module length");
      expect(')');
      return Idealization{q, lambda};
    }
    if (name == "A") {
      expect('(');
      unsigned n = small(1, "matrix size");
      expect(',');
      auto q1 = prime_power();
      expect(',');
      skip_ws();
      std::size_t q2_at = pos_;
      auto q2 = prime_power();
      expect(')');
      if (q1.p() != q2.p()) {
        throw ParseError(ParseErrorKind::MixedCharacteristic, q2_at,
                         "A(" + std::to_string(n) + "," + q1.to_string() + "," + q2.to_string() +
                             ") mixes characteristics " + std::to_string(q1.p()) + " and " +
                             std::to_string(q2.p()));
      }
      return ARing{n, q1, q2};
    }
    if (name == "Z") {
      expect('(');
      auto p = prime();
      expect(',');
      unsigned k = small(1, "dimension");
      expect(')');
      return ZeroMult{p, k};
    }
    fail_at(start, "unknown term '" + name + "'");
  }

  void parse_term(std::vector<RingFamily>& out) {
    RingFamily a = atom();
    std::uint64_t copies = 1;
    std::size_t copies_at = pos_;
    while (accept('^')) {
      skip_ws();
      std::size_t at = pos_;
      unsigned t = small(1, "exponent");
      copies *= t;
      if (copies > std::numeric_limits<std::int32_t>::max()) fail_at(at, "exponent out of range");
      copies_at = at;
    }
    if (a.is<FieldSum>()) {
      out.push_back(FieldSum{a.as<FieldSum>().q, static_cast<unsigned>(copies)});
      return;
    }
    if (copies > kMaxRepetition) {
      fail_at(copies_at, "repetition count exceeds " + std::to_string(kMaxRepetition));
    }
    for (std::uint64_t i = 0; i < copies; ++i) out.push_back(a);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::SyntaxError:
      return "SyntaxError";
    case ParseErrorKind::NotAPrimePower:
      return "NotAPrimePower";
    case ParseErrorKind::MixedCharacteristic:
      return "MixedCharacteristic";
  }
  return "?";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t offset, const std::string& message)
    : Error(to_string(kind), message + " at offset " + std::to_string(offset)),
      kind_(kind),
      offset_(offset),
      message_(message) {}

RingFamily parse(std::string_view text) { return Parser(text).parse_spec(); }

std::string format(const RingFamily& spec) { return to_string(spec); }

}  // namespace ringcover::spec
