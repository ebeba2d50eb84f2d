#ifndef RINGCOVER_FINITE_RING_HPP
#define RINGCOVER_FINITE_RING_HPP

// Finite rings of characteristic p as structure-constant algebras over F_p.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringcover/linalg_fp.hpp"
#include "ringcover/ring_family.hpp"

namespace ringcover {

using linalg::Vec;

/// Limits applied when constructing rings.
struct RingCaps {
  /// Largest admissible |R| = p^dim.
  std::uint64_t max_order = std::uint64_t{1} << 20;
};

class FiniteRing {
 public:
  /// `mult` holds dim^3 coefficients: entry (i*dim + j)*dim + k is the
  /// coefficient of b_k in b_i * b_j. Throws InvariantViolation if the table
  /// is not associative or a supplied unity is not a two-sided identity,
  /// DimensionCap if p^dim exceeds caps.max_order.
  FiniteRing(std::uint64_t p, std::size_t dim, std::vector<std::uint32_t> mult, std::optional<Vec> unity = std::nullopt,
             std::vector<std::string> labels = {}, std::optional<RingFamily> origin = std::nullopt,
             const RingCaps& caps = {});

  std::uint32_t p() const noexcept { return p_; }
  std::size_t dim() const noexcept { return dim_; }
  /// p^dim.
  std::uint64_t order() const noexcept { return order_; }
  const std::vector<std::uint32_t>& table() const noexcept { return mult_; }
  /// Coefficient vector of b_i * b_j (dim entries).
  const std::uint32_t* product(std::size_t i, std::size_t j) const { return &mult_[(i * dim_ + j) * dim_]; }
  const std::optional<Vec>& unity() const noexcept { return unity_; }
  bool has_unity() const noexcept { return unity_.has_value(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::optional<RingFamily>& spec_origin() const noexcept { return origin_; }

  Vec zero() const { return Vec(dim_, 0); }
  Vec basis(std::size_t i) const;
  Vec add(const Vec& a, const Vec& b) const;
  Vec sub(const Vec& a, const Vec& b) const;
  Vec mul(const Vec& a, const Vec& b) const;
  /// Whether v has the right length and entries < p.
  bool valid(const Vec& v) const;

  /// sum_i c_i p^i, a bijection between R and [0, |R|).
  std::uint64_t rank(const Vec& v) const;
  Vec unrank(std::uint64_t r) const;

 private:
  std::uint32_t p_;
  std::size_t dim_;
  std::uint64_t order_;
  std::vector<std::uint32_t> mult_;
  std::optional<Vec> unity_;
  std::vector<std::string> labels_;
  std::optional<RingFamily> origin_;
};

/// Explicit model of a spec. DirectSum must be of a single characteristic.
/// Throws DimensionCap, MixedCharacteristic, InvalidSpec.
FiniteRing build(const RingFamily& spec, const RingCaps& caps = {});

/// F_p x R with (n1, r1)(n2, r2) = (n1 n2, n1 r2 + n2 r1 + r1 r2); basis
/// vector 0 is the new unity (1, 0), basis vector i + 1 is (0, b_i).
FiniteRing unitalize(const FiniteRing& r, const RingCaps& caps = {});

/// The two-sided identity, solved as a linear system, or nullopt.
std::optional<Vec> find_unity(const FiniteRing& r);

/// Smallest subring (not necessarily unital) containing `gens`.
linalg::Echelon closure(const FiniteRing& r, const std::vector<Vec>& gens);

/// Whether the span of `e` is closed under multiplication.
bool is_closed(const FiniteRing& r, const linalg::Echelon& e);

}  // namespace ringcover

#endif  // RINGCOVER_FINITE_RING_HPP
