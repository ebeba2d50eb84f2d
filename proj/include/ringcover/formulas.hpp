#ifndef RINGCOVER_FORMULAS_HPP
#define RINGCOVER_FORMULAS_HPP

// Closed-form covering numbers of the four sigma-elementary families and a
// reducer that evaluates supported composite ring specs.

#include <optional>
#include <string>
#include <vector>

#include "ringcover/arith.hpp"
#include "ringcover/ring_family.hpp"

namespace ringcover::formulas {

using arith::ExtNat;
using arith::PrimePower;

enum class Method { ClosedForm, Reduction, OracleRequired };

std::string to_string(Method m);

struct TrailStep {
  RingFamily quotient;
  std::string rule;
};

/// Covering numbers of one ring spec plus how they were obtained.
///
/// `value` is sigma, `unital_value` is sigma_u. Both are unset when
/// method == OracleRequired; `unital_value` is also unset when the ring has no
/// unity. Whenever both are set, value <= unital_value.
struct SigmaReport {
  std::optional<ExtNat> value;
  std::optional<ExtNat> unital_value;
  bool has_unity = true;
  bool elementary = false;
  bool u_elementary = false;
  Method method = Method::ClosedForm;
  std::vector<TrailStep> reduction_trail;
  /// Set when the result depends on an equality the theory only bounds, or
  /// when method == OracleRequired.
  std::string note;
};

/// sigma of the direct sum of tau(q) copies of F_q.
BigInt sigma_field_sum(const PrimePower& q);

/// sigma of F_q (+) F_q^2, namely q + 1.
BigInt sigma_idealization(const PrimePower& q);

/// The product part (1/a) prod_{1<=k<n, a does not divide k} (q^n - q^k) of
/// sigma(M_n(q)), with a the smallest prime divisor of n. Requires n >= 2.
BigInt matrix_product_term(unsigned n, const PrimePower& q);
/// The q-binomial sum part of sigma(M_n(q)). Requires n >= 2.
BigInt matrix_sum_term(unsigned n, const PrimePower& q);

/// sigma(M_n(q)). Throws NotCoverable for n = 1 (a field).
BigInt sigma_matrix(unsigned n, const PrimePower& q);

/// d with q1 (x) q2 = q1^d.
unsigned a_ring_degree(const PrimePower& q1, const PrimePower& q2);

/// Full case analysis for A(n, q1, q2). Throws MixedCharacteristic.
SigmaReport sigma_A(unsigned n, const PrimePower& q1, const PrimePower& q2);

/// sigma and sigma_u of a composite spec. Unsupported interactions between
/// summands yield method == OracleRequired with the reason in `note`.
SigmaReport classify(const RingFamily& spec);

/// Every sigma-elementary family member (parameter tuple) whose covering number
/// is m. Empty iff m is not a covering number of any ring.
std::vector<RingFamily> witnesses(std::uint64_t m);

}  // namespace ringcover::formulas

#endif  // RINGCOVER_FORMULAS_HPP
