#ifndef RINGCOVER_COVERBUILDER_HPP
#define RINGCOVER_COVERBUILDER_HPP

// Explicit covers of A(n, q1, q2) held symbolically, with verifiers that run
// far beyond the reach of the brute-force oracle.
//
// Elements of A(n, q1, q2) are triples (h, v, beta) with h in M_n(F_q1),
// v in F_q^n and beta in F_q2, where q = q1 (x) q2, and
//   (h, v, beta)(h', v', beta') = (h h', h v' + v beta', beta beta').
// F_q1 and F_q2 act on F_q through the embeddings of GaloisField::embedding_from,
// matching the basis layout of build(A(n, q1, q2)).

#include <cstdint>
#include <optional>
#include <vector>

#include "ringcover/arith.hpp"
#include "ringcover/field.hpp"
#include "ringcover/finite_ring.hpp"

namespace ringcover::cover {

using Elem = GaloisField::Elem;

struct ACover {
  unsigned n = 0;
  arith::PrimePower q1{2, 1};
  arith::PrimePower q2{2, 1};
  arith::PrimePower q{2, 1};  // q1 (x) q2
  unsigned d = 1;             // q = q1^d

  /// x in F_q^n indexing the complement {(h, hx - x beta, beta)}.
  std::vector<std::vector<Elem>> conjugates;
  /// Reduced echelon bases (rows of length n over F_q1) of d-dimensional
  /// subspaces U, indexing {(h, v, beta) : hU in U}.
  std::vector<std::vector<std::vector<Elem>>> stabilizers;
  /// Degrees e of subfields F_{p^e} of F_q2, indexing {(h, v, beta) : beta in F_{p^e}}.
  std::vector<unsigned> subfields;
  /// n = 1 only: degrees e of subfields of F_q1, indexing {(h, v, beta) : h in F_{p^e}}.
  std::vector<unsigned> left_subfields;
  /// n = 1 only: whether {(h, v, beta) : h = beta in F_q} is a member (q1 = q2).
  bool diagonal = false;

  std::size_t size() const {
    return conjugates.size() + stabilizers.size() + subfields.size() + left_subfields.size() + (diagonal ? 1 : 0);
  }
};

/// Members in the order conjugates, stabilizers, subfields, left subfields,
/// diagonal; index i of a member refers to this order.
std::string member_name(const ACover& c, std::size_t i);

/// Throws UnsupportedParameters for n = 2, for d >= n - n/a, and for
/// (n, q1, q2) = (1, 2, 2) or (1, 4, 4); MixedCharacteristic for bad primes.
ACover build_A_cover(unsigned n, const arith::PrimePower& q1, const arith::PrimePower& q2);

/// All d-dimensional subspaces of F_q^n in canonical reduced-echelon order.
std::vector<std::vector<std::vector<Elem>>> subspaces(const GaloisField& f, unsigned n, unsigned d);

struct VerifyOptions {
  /// Largest element count (raw) or pair count (reduced) to iterate.
  std::uint64_t cap = 0;  // 0 = per-verifier default
  /// 0 = SIGMA_THREADS or hardware concurrency.
  unsigned threads = 0;
};

inline constexpr std::uint64_t kRawCap = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kReducedCap = std::uint64_t{1} << 24;

struct RingElement {
  std::vector<Elem> h;  // n*n entries of F_q1, row major
  std::vector<Elem> v;  // n entries of F_q
  Elem beta = 0;
};

struct VerifyResult {
  bool ok = false;
  /// Elements (raw) or (h, beta) pairs (reduced) examined.
  std::uint64_t checked = 0;
  /// First uncovered element in iteration order, if any.
  std::optional<RingElement> uncovered;
};

/// Membership of every element of R tested against every member.
/// Throws ComplexityCap when |R| exceeds the cap.
VerifyResult verify_cover_raw(const ACover& c, const VerifyOptions& opts = {});

/// Per (h, beta): h - beta is invertible over F_q, or h stabilizes a listed
/// subspace, or beta (resp. h or the diagonal for n = 1) lies in a listed
/// subfield. Throws ComplexityCap when q1^(n^2) q2 exceeds the cap.
VerifyResult verify_cover_reduced(const ACover& c, const VerifyOptions& opts = {});

struct IrredundancyResult {
  bool irredundant = false;
  /// Per member, the first element (iteration order) covered by it alone.
  std::vector<std::optional<RingElement>> witnesses;
};

/// Uses the raw cap. Throws ComplexityCap.
IrredundancyResult irredundancy(const ACover& c, const VerifyOptions& opts = {});

/// Spanning vectors over F_p of each member in the basis of build(A(n,q1,q2)),
/// for cross-checking with oracle::verify_certificate.
std::vector<std::vector<Vec>> member_bases(const ACover& c);

/// Coordinates of an element in the basis of build(A(n,q1,q2)).
Vec element_vector(const ACover& c, const RingElement& e);

}  // namespace ringcover::cover

#endif  // RINGCOVER_COVERBUILDER_HPP
