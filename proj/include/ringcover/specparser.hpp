#ifndef RINGCOVER_SPECPARSER_HPP
#define RINGCOVER_SPECPARSER_HPP

// Ring-spec DSL:
//
//   spec := term { "+" term }
//   term := atom { "^" t }
//   atom := "F(" q ")" | "M(" n "," q ")" | "Id(" q [ "," lambda ] ")"
//         | "A(" n "," q1 "," q2 ")" | "Z(" p "," k ")"
//
// Integers are decimal; whitespace between tokens is ignored. F(q)^t is t
// copies of F_q; any other term raised to t is the direct sum of t copies.

#include <cstddef>
#include <string>
#include <string_view>

#include "ringcover/errors.hpp"
#include "ringcover/ring_family.hpp"

namespace ringcover::spec {

enum class ParseErrorKind { SyntaxError, NotAPrimePower, MixedCharacteristic };

std::string to_string(ParseErrorKind k);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t offset, const std::string& message);
  ParseErrorKind error_kind() const noexcept { return kind_; }
  /// Byte offset into the input where the problem was detected.
  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ParseErrorKind kind_;
  std::size_t offset_;
  std::string message_;
};

/// Largest repetition count accepted for non-field terms (each copy is a
/// separate summand).
inline constexpr unsigned kMaxRepetition = 4096;

/// A single term yields that term; two or more yield a flat DirectSum.
/// Throws ParseError.
RingFamily parse(std::string_view text);

/// Canonical text; parse(format(x)) == x for every flat spec.
std::string format(const RingFamily& spec);

}  // namespace ringcover::spec

#endif  // RINGCOVER_SPECPARSER_HPP
