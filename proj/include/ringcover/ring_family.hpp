#ifndef RINGCOVER_RING_FAMILY_HPP
#define RINGCOVER_RING_FAMILY_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ringcover/arith.hpp"

namespace ringcover {

/// t copies of F_q.
struct FieldSum {
  arith::PrimePower q;
  unsigned t = 1;
  friend bool operator==(const FieldSum&, const FieldSum&) = default;
};

/// F_q (+) F_q^lambda: pairs (r, m) with (r1, m1)(r2, m2) = (r1 r2, r1 m2 + r2 m1).
struct Idealization {
  arith::PrimePower q;
  unsigned lambda = 2;
  friend bool operator==(const Idealization&, const Idealization&) = default;
};

/// M_n(q).
struct MatrixRing {
  unsigned n;
  arith::PrimePower q;
  friend bool operator==(const MatrixRing&, const MatrixRing&) = default;
};

/// Block upper-triangular ring [[M_n(q1), F_q^n], [0, F_q2]] with q = q1 (x) q2.
struct ARing {
  unsigned n;
  arith::PrimePower q1;
  arith::PrimePower q2;
  friend bool operator==(const ARing&, const ARing&) = default;
};

/// F_p^k with identically zero multiplication.
struct ZeroMult {
  std::uint64_t p;
  unsigned k;
  friend bool operator==(const ZeroMult&, const ZeroMult&) = default;
};

struct RingFamily;

struct DirectSum {
  std::vector<RingFamily> terms;
  friend bool operator==(const DirectSum&, const DirectSum&);
};

/// Symbolic description of a finite ring as a direct sum of building blocks.
struct RingFamily {
  using Node = std::variant<FieldSum, Idealization, MatrixRing, ARing, ZeroMult, DirectSum>;
  Node node;

  RingFamily(FieldSum v) : node(std::move(v)) {}      // NOLINT
  RingFamily(Idealization v) : node(std::move(v)) {}  // NOLINT
  RingFamily(MatrixRing v) : node(std::move(v)) {}    // NOLINT
  RingFamily(ARing v) : node(std::move(v)) {}         // NOLINT
  RingFamily(ZeroMult v) : node(std::move(v)) {}      // NOLINT
  RingFamily(DirectSum v) : node(std::move(v)) {}     // NOLINT

  template <typename T>
  bool is() const noexcept {
    return std::holds_alternative<T>(node);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(node);
  }

  friend bool operator==(const RingFamily& a, const RingFamily& b) { return a.node == b.node; }
};

inline bool operator==(const DirectSum& a, const DirectSum& b) { return a.terms == b.terms; }

/// Throws InvalidSpec / MixedCharacteristic if a node violates its invariants.
void validate(const RingFamily& f);

/// Summands with DirectSum nodes expanded recursively (FieldSum copies are kept intact).
std::vector<RingFamily> flatten(const RingFamily& f);

/// Characteristic of every summand; throws MixedCharacteristic if they differ.
std::uint64_t characteristic(const RingFamily& f);

/// log_p |R|; BigInt because it is exact for every valid spec.
BigInt fp_dimension(const RingFamily& f);

/// Order |R| (exact).
BigInt order(const RingFamily& f);

/// Splits into one RingFamily per characteristic, ascending by p.
std::vector<std::pair<std::uint64_t, RingFamily>> split_by_characteristic(const RingFamily& f);

/// Human-readable name used in reports, e.g. "M(2,3)". Same as spec::format.
std::string to_string(const RingFamily& f);

}  // namespace ringcover

#endif  // RINGCOVER_RING_FAMILY_HPP
