#ifndef RINGCOVER_FIELD_HPP
#define RINGCOVER_FIELD_HPP

// Table-driven arithmetic in F_q, q = p^d, with F_q = F_p[x]/(m(x)) for the
// smallest monic irreducible m of degree d. Elements are coded as integers
// sum c_i p^i where c_i is the coefficient of x^i.

#include <cstdint>
#include <vector>

namespace ringcover {

using Poly = std::vector<std::uint64_t>;  // coefficients, constant term first

/// Monic irreducible of degree d over F_p minimizing sum_{i<d} c_i p^i.
/// The returned vector has d + 1 entries with leading coefficient 1.
Poly smallest_irreducible(std::uint64_t p, unsigned d);

/// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(const Poly& f, std::uint64_t p);

class GaloisField {
 public:
  using Elem = std::uint32_t;

  /// Throws DimensionCap if p^d exceeds kMaxOrder.
  GaloisField(std::uint64_t p, unsigned d);

  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 24;

  std::uint64_t p() const noexcept { return p_; }
  unsigned d() const noexcept { return d_; }
  std::uint32_t q() const noexcept { return q_; }
  const Poly& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  /// Throws std::domain_error on 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem one() const noexcept { return 1; }
  /// The class of x (the generator of the polynomial basis).
  Elem x() const noexcept { return d_ == 1 ? 1 : static_cast<Elem>(p_); }
  /// Image of c in F_p.
  Elem scalar(std::uint64_t c) const noexcept { return static_cast<Elem>(c % p_); }

  /// Coefficient of x^i in a.
  std::uint64_t digit(Elem a, unsigned i) const noexcept { return a / pow_p_[i] % p_; }
  std::vector<std::uint64_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint64_t>& c) const;

  /// Whether a lies in the unique subfield of order p^e (e must divide d).
  bool in_subfield(Elem a, unsigned e) const;

  /// Table of an embedding F_{p^e} -> this field: index is the element code in
  /// `sub`, value its image. The generator of `sub` goes to the smallest root
  /// (by element code) of sub's modulus. Requires sub.d() | d().
  std::vector<Elem> embedding_from(const GaloisField& sub) const;

  /// Evaluate a polynomial with F_p coefficients at a.
  Elem eval(const Poly& f, Elem a) const;

 private:
  std::uint64_t p_;
  unsigned d_;
  std::uint32_t q_;
  Poly modulus_;
  std::vector<std::uint32_t> pow_p_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace ringcover

#endif  // RINGCOVER_FIELD_HPP
