#include "ringcover/formulas.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <variant>

#include "ringcover/errors.hpp"
#include "ringcover/sieve.hpp"

namespace ringcover::formulas {

namespace {

using boost::multiprecision::pow;

// One block of a same-characteristic direct sum whose covering numbers are
// known in closed form or by a one-step quotient argument.
struct Block {
  RingFamily spec;
  ExtNat sigma;
  std::optional<ExtNat> sigma_u;  // unset when the block has no unity
  bool elementary = false;
  bool u_elementary = false;
  Method method = Method::ClosedForm;
  std::vector<TrailStep> trail;
  std::string note;
};

// Simple components of the semisimple quotient of a summand, as (n, q) with
// M_n(q) the component.
using Component = std::pair<unsigned, arith::PrimePower>;

std::vector<Component> components(const RingFamily& leaf) {
  if (leaf.is<FieldSum>()) return {{1, leaf.as<FieldSum>().q}};
  if (leaf.is<Idealization>()) return {{1, leaf.as<Idealization>().q}};
  if (leaf.is<MatrixRing>()) return {{leaf.as<MatrixRing>().n, leaf.as<MatrixRing>().q}};
  if (leaf.is<ARing>()) {
    const auto& a = leaf.as<ARing>();
    return {{a.n, a.q1}, {1, a.q2}};
  }
  return {};
}

SigmaReport oracle_required(std::string reason) {
  SigmaReport r;
  r.method = Method::OracleRequired;
  r.note = std::move(reason);
  return r;
}

Block field_sum_block(const arith::PrimePower& q, unsigned t, unsigned normalized) {
  Block b{FieldSum{q, t}, ExtNat::infinity(), ExtNat::infinity()};
  const BigInt tau = arith::tau(q);
  if (normalized > 0) {
    b.trail.push_back({FieldSum{q, t},
                       "Id(" + q.to_string() + ",1) summands replaced by F(" + q.to_string() +
                           "): quotient by the radical preserves sigma"});
    b.method = Method::Reduction;
  }
  if (t < tau) {
    // Fewer than tau(q) copies: every proper subring misses a generator.
    b.elementary = false;
    b.u_elementary = false;
    return b;
  }
  BigInt value = sigma_field_sum(q);
  b.sigma = value;
  if (q.d() == 1) {
    // Unital covers need one more copy than ordinary covers.
    b.sigma_u = t >= tau + 1 ? ExtNat(value) : ExtNat::infinity();
    b.elementary = normalized == 0 && t == tau;
    b.u_elementary = normalized == 0 && t == tau + 1;
    if (t > tau) {
      b.method = Method::Reduction;
      b.trail.push_back({FieldSum{q, static_cast<unsigned>(tau)},
                         "quotient onto tau(q) copies; equality holds for prime fields"});
    }
  } else {
    b.sigma_u = value;
    b.elementary = normalized == 0 && t == tau;
    b.u_elementary = b.elementary;
    if (t > tau) {
      b.method = Method::Reduction;
      b.trail.push_back({FieldSum{q, static_cast<unsigned>(tau)},
                         "quotient onto tau(q) copies gives an upper bound"});
      b.note = "sigma of more than tau(q) copies of a non-prime field is reported as the value "
               "at tau(q) copies; only the upper bound is proven";
    }
  }
  return b;
}

Block idealization_block(const Idealization& id) {
  Block b{id, ExtNat(sigma_idealization(id.q)), ExtNat(sigma_idealization(id.q))};
  b.elementary = id.lambda == 2;
  b.u_elementary = id.lambda == 2;
  if (id.lambda > 2) {
    b.method = Method::Reduction;
    b.trail.push_back({Idealization{id.q, 2}, "every quotient by an ideal inside the radical is an "
                                              "idealization of smaller length"});
  }
  return b;
}

Block matrix_block(const MatrixRing& m) {
  BigInt v = sigma_matrix(m.n, m.q);
  Block b{m, ExtNat(v), ExtNat(v)};
  b.elementary = true;
  b.u_elementary = true;
  return b;
}

Block a_ring_block(const ARing& a) {
  SigmaReport r = sigma_A(a.n, a.q1, a.q2);
  Block b{a, *r.value, r.unital_value};
  b.elementary = r.elementary;
  b.u_elementary = r.u_elementary;
  b.method = r.method;
  b.trail = std::move(r.reduction_trail);
  b.note = std::move(r.note);
  return b;
}

Block zero_block(std::uint64_t p, unsigned k, std::size_t merged) {
  Block b{ZeroMult{p, k}, k >= 2 ? ExtNat(BigInt(p) + 1) : ExtNat::infinity(), std::nullopt};
  // F_p^k with zero product: subrings are subspaces, and p + 1 hyperplanes
  // through a common codimension-2 subspace cover it.
  b.elementary = k == 2;
  b.u_elementary = false;
  if (merged > 1) {
    b.method = Method::Reduction;
    b.trail.push_back({ZeroMult{p, k}, "zero-multiplication summands merged"});
  }
  return b;
}

// Blocks of one characteristic, or an OracleRequired reason.
std::variant<std::vector<Block>, std::string> blocks_of(std::uint64_t p, const RingFamily& group) {
  std::vector<RingFamily> leaves = flatten(group);
  std::map<arith::PrimePower, std::pair<unsigned, unsigned>> fields;  // q -> (t, normalized)
  std::vector<RingFamily> others;
  unsigned zero_k = 0;
  std::size_t zero_parts = 0;
  for (const auto& leaf : leaves) {
    if (leaf.is<FieldSum>()) {
      fields[leaf.as<FieldSum>().q].first += leaf.as<FieldSum>().t;
    } else if (leaf.is<Idealization>() && leaf.as<Idealization>().lambda == 1) {
      auto& slot = fields[leaf.as<Idealization>().q];
      ++slot.first;
      ++slot.second;
    } else if (leaf.is<MatrixRing>() && leaf.as<MatrixRing>().n == 1) {
      ++fields[leaf.as<MatrixRing>().q].first;
    } else if (leaf.is<ZeroMult>()) {
      zero_k += leaf.as<ZeroMult>().k;
      ++zero_parts;
    } else {
      others.push_back(leaf);
    }
  }
  if (zero_parts > 0) {
    if (!fields.empty() || !others.empty()) {
      return "zero-multiplication summand of characteristic " + std::to_string(p) +
             " mixed with other summands of the same characteristic";
    }
    return std::vector<Block>{zero_block(p, zero_k, zero_parts)};
  }

  for (std::size_t i = 0; i < others.size(); ++i) {
    for (const auto& c : components(others[i])) {
      bool clash = fields.count(c.second) && c.first == 1;
      for (std::size_t j = 0; j < others.size() && !clash; ++j) {
        if (j == i) continue;
        for (const auto& c2 : components(others[j])) clash = clash || c2 == c;
      }
      if (clash) {
        std::string comp = c.first == 1 ? "F(" + c.second.to_string() + ")"
                                         : "M(" + std::to_string(c.first) + "," + c.second.to_string() + ")";
        return "summand " + to_string(others[i]) + " shares the simple component " + comp +
               " with another summand";
      }
    }
  }

  std::vector<Block> blocks;
  for (const auto& [q, tn] : fields) blocks.push_back(field_sum_block(q, tn.first, tn.second));
  for (const auto& leaf : others) {
    if (leaf.is<Idealization>()) {
      blocks.push_back(idealization_block(leaf.as<Idealization>()));
    } else if (leaf.is<MatrixRing>()) {
      blocks.push_back(matrix_block(leaf.as<MatrixRing>()));
    } else {
      blocks.push_back(a_ring_block(leaf.as<ARing>()));
    }
  }
  return blocks;
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::ClosedForm:
      return "ClosedForm";
    case Method::Reduction:
      return "Reduction";
    case Method::OracleRequired:
      return "OracleRequired";
  }
  return "?";
}

BigInt sigma_field_sum(const PrimePower& q) {
  BigInt t = arith::tau(q);
  return t * arith::nu(q) + BigInt(q.d()) * (t * (t - 1) / 2);
}

BigInt sigma_idealization(const PrimePower& q) { return q.q() + 1; }

BigInt matrix_product_term(unsigned n, const PrimePower& q) {
  if (n < 2) throw std::invalid_argument("matrix_product_term needs n >= 2");
  const std::uint64_t a = arith::smallest_prime_divisor(n);
  const BigInt qn = pow(q.q(), n);
  BigInt prod = 1;
  for (unsigned k = 1; k < n; ++k) {
    if (k % a != 0) prod *= qn - pow(q.q(), k);
  }
  BigInt quotient, rem;
  boost::multiprecision::divide_qr(prod, BigInt(a), quotient, rem);
  if (rem != 0) {
    throw InvariantViolation("product term of sigma(M_" + std::to_string(n) + "(" + q.to_string() +
                             ")) not divisible by " + std::to_string(a));
  }
  return quotient;
}

BigInt matrix_sum_term(unsigned n, const PrimePower& q) {
  if (n < 2) throw std::invalid_argument("matrix_sum_term needs n >= 2");
  const std::uint64_t a = arith::smallest_prime_divisor(n);
  BigInt sum = 0;
  for (unsigned k = 1; k <= n / 2; ++k) {
    if (k % a != 0) sum += arith::qbinom(n, k, q);
  }
  return sum;
}

BigInt sigma_matrix(unsigned n, const PrimePower& q) {
  if (n == 0) throw std::invalid_argument("sigma_matrix needs n >= 1");
  if (n == 1) throw NotCoverable("M_1(" + q.to_string() + ") is a field and has no cover");
  return matrix_product_term(n, q) + matrix_sum_term(n, q);
}

unsigned a_ring_degree(const PrimePower& q1, const PrimePower& q2) {
  return arith::tensor(q1, q2).d() / q1.d();
}

SigmaReport sigma_A(unsigned n, const PrimePower& q1, const PrimePower& q2) {
  if (n == 0) throw std::invalid_argument("A(n,q1,q2) needs n >= 1");
  const PrimePower q = arith::tensor(q1, q2);
  const unsigned d = q.d() / q1.d();
  SigmaReport r;
  r.method = Method::ClosedForm;
  auto set_value = [&](const BigInt& v) {
    r.value = ExtNat(v);
    r.unital_value = ExtNat(v);
  };
  if (n == 1) {
    if (q1.q() == 2 && q2.q() == 2) {
      set_value(3);
      r.elementary = false;
      r.u_elementary = true;
      r.method = Method::Reduction;
      r.reduction_trail.push_back({FieldSum{q1, 2}, "quotient by the radical"});
    } else if (q1.q() == 4 && q2.q() == 4) {
      set_value(4);
      r.elementary = false;
      r.u_elementary = false;
      r.method = Method::Reduction;
      r.reduction_trail.push_back({FieldSum{q1, 2}, "quotient by the radical"});
    } else {
      set_value(q.q() + 1);
      r.elementary = true;
      r.u_elementary = true;
    }
    return r;
  }
  const unsigned a = static_cast<unsigned>(arith::smallest_prime_divisor(n));
  if (n == 2 || d >= n - n / a) {
    set_value(sigma_matrix(n, q1));
    r.method = Method::Reduction;
    r.reduction_trail.push_back({MatrixRing{n, q1}, "quotient by the ideal generated by the corner field"});
    return r;
  }
  if (n == 3 && q1.q() == 2) {
    set_value(sigma_matrix(3, q1));
    r.method = Method::Reduction;
    r.reduction_trail.push_back(
        {MatrixRing{3, q1}, "the cover construction meets sigma(M_3(2)) = 15 with equality; every "
                            "proper quotient has covering number at least 15"});
    return r;
  }
  set_value(pow(q.q(), n) + arith::qbinom(n, d, q1) + arith::omega(d));
  r.elementary = true;
  r.u_elementary = true;
  return r;
}

SigmaReport classify(const RingFamily& spec) {
  validate(spec);
  std::vector<Block> all;
  for (const auto& [p, group] : split_by_characteristic(spec)) {
    auto res = blocks_of(p, group);
    if (auto* reason = std::get_if<std::string>(&res)) return oracle_required(*reason);
    for (auto& b : std::get<std::vector<Block>>(res)) all.push_back(std::move(b));
  }

  SigmaReport r;
  ExtNat best = ExtNat::infinity();
  ExtNat best_u = ExtNat::infinity();
  const Block* argmin = &all.front();
  for (const auto& b : all) {
    if (b.sigma < best) {
      best = b.sigma;
      argmin = &b;
    }
    if (b.sigma_u) {
      best_u = arith::min(best_u, *b.sigma_u);
    } else {
      r.has_unity = false;
    }
  }
  r.value = best;
  if (r.has_unity) r.unital_value = best_u;

  if (all.size() == 1) {
    const Block& b = all.front();
    r.elementary = b.elementary;
    r.u_elementary = b.u_elementary && r.has_unity;
    r.method = b.method;
    r.reduction_trail = b.trail;
    r.note = b.note;
    return r;
  }
  r.method = Method::Reduction;
  r.reduction_trail.push_back({argmin->spec, "direct sum without shared simple components: minimum over blocks"});
  r.reduction_trail.insert(r.reduction_trail.end(), argmin->trail.begin(), argmin->trail.end());
  for (const auto& b : all) {
    if (!b.note.empty()) r.note = b.note;
  }
  return r;
}

std::vector<RingFamily> witnesses(std::uint64_t m) {
  std::vector<RingFamily> out;
  if (m < 3) return out;
  const BigInt target = m;

  const std::uint64_t q_cap = sieve::field_sum_q_cap(m);
  const std::uint64_t mat_cap = sieve::matrix_q_limit(2, m);
  const auto pps = arith::prime_powers_up_to(std::max(q_cap, mat_cap));

  for (unsigned n = 2; n <= sieve::matrix_n_limit(m); ++n) {
    if (!sieve::matrix_n_admissible(n, m)) continue;
    const std::uint64_t lim = sieve::matrix_q_limit(n, m);
    for (const auto& q : pps) {
      if (q.q() > lim) break;
      if (sigma_matrix(n, q) == target) out.push_back(MatrixRing{n, q});
    }
  }
  for (const auto& q : pps) {
    if (q.q() > q_cap) break;
    if (sigma_field_sum(q) == target) {
      out.push_back(FieldSum{q, arith::tau(q).convert_to<unsigned>()});
    }
  }
  if (auto q = arith::is_prime_power(m - 1)) {
    out.push_back(Idealization{*q, 2});
    for (auto d1 : arith::divisors(q->d())) {
      for (auto d2 : arith::divisors(q->d())) {
        if (arith::lcm(d1, d2) != q->d()) continue;
        PrimePower q1(q->p(), static_cast<unsigned>(d1)), q2(q->p(), static_cast<unsigned>(d2));
        if ((q1.q() == 2 && q2.q() == 2) || (q1.q() == 4 && q2.q() == 4)) continue;
        out.push_back(ARing{1, q1, q2});
      }
    }
  }
  for (unsigned n = 3; n <= sieve::a_ring_n_limit(m); ++n) {
    for (unsigned d = 1; sieve::a_ring_d_admissible(n, d); ++d) {
      for (const auto& q1 : pps) {
        if (pow(q1.q(), n * d) > target) break;
        if (n == 3 && q1.q() == 2) continue;
        const PrimePower q(q1.p(), q1.d() * d);
        if (pow(q.q(), n) + arith::qbinom(n, d, q1) + arith::omega(d) != target) continue;
        for (auto e : arith::divisors(q.d())) {
          if (arith::lcm(q1.d(), e) == q.d()) out.push_back(ARing{n, q1, PrimePower(q1.p(), static_cast<unsigned>(e))});
        }
      }
    }
  }
  return out;
}

}  // namespace ringcover::formulas
