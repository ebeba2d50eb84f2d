#include "ringcover/field.hpp"

#include <stdexcept>
#include <string>

#include "ringcover/arith.hpp"
#include "ringcover/errors.hpp"

namespace ringcover {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g.
Poly poly_rem(Poly f, const Poly& g, std::uint64_t p) {
  const std::size_t dg = g.size() - 1;
  trim(f);
  while (f.size() > dg) {
    std::uint64_t lead = f.back();
    std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p - mulmod(lead, g[i], p)) % p;
    }
    trim(f);
  }
  return f;
}

}  // namespace

bool is_irreducible(const Poly& f, std::uint64_t p) {
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  Poly monic = f;
  std::uint64_t li = invmod(f.back(), p);
  for (auto& c : monic) c = mulmod(c, li, p);
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    // Every monic g of degree k, coded by its lower coefficients.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(k + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < k; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[k] = 1;
      if (poly_rem(monic, g, p).empty()) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(std::uint64_t p, unsigned d) {
  if (d == 0) throw std::invalid_argument("degree must be positive");
  BigInt count = boost::multiprecision::pow(BigInt(p), d);
  if (count > GaloisField::kMaxOrder) {
    throw DimensionCap("field of order " + count.str() + " exceeds table limit");
  }
  const std::uint64_t n = count.convert_to<std::uint64_t>();
  for (std::uint64_t code = 0; code < n; ++code) {
    Poly f(d + 1);
    std::uint64_t c = code;
    for (unsigned i = 0; i < d; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[d] = 1;
    if (d > 1 && f[0] == 0) continue;
    if (is_irreducible(f, p)) return f;
  }
  throw InvariantViolation("no irreducible polynomial of degree " + std::to_string(d));
}

GaloisField::GaloisField(std::uint64_t p, unsigned d) : p_(p), d_(d) {
  if (!arith::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  modulus_ = smallest_irreducible(p, d);
  std::uint64_t q = 1;
  pow_p_.resize(d + 1);
  for (unsigned i = 0; i <= d; ++i) {
    pow_p_[i] = static_cast<std::uint32_t>(q);
    if (i < d) q *= p;
  }
  q_ = static_cast<std::uint32_t>(q);

  auto slow_mul = [&](Elem a, Elem b) {
    Poly prod(2 * d, 0);
    auto da = digits(a), db = digits(b);
    for (unsigned i = 0; i < d; ++i) {
      if (!da[i]) continue;
      for (unsigned j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + mulmod(da[i], db[j], p)) % p;
    }
    Poly r = poly_rem(prod, modulus_, p);
    r.resize(d, 0);
    return from_digits(r);
  };

  exp_.assign(q_, 0);
  log_.assign(q_, 0);
  if (q_ == 2) {
    exp_[0] = 1;
    return;
  }
  const std::uint64_t order = q_ - 1;
  const auto factors = arith::prime_divisors(order);
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  Elem g = 0;
  for (Elem cand = 2; cand < q_; ++cand) {
    bool primitive = true;
    for (auto f : factors) {
      if (slow_pow(cand, order / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  if (g == 0) throw InvariantViolation("no primitive element found");
  Elem cur = 1;
  for (std::uint32_t k = 0; k < order; ++k) {
    exp_[k] = cur;
    log_[cur] = k;
    cur = slow_mul(cur, g);
  }
}

std::vector<std::uint64_t> GaloisField::digits(Elem a) const {
  std::vector<std::uint64_t> out(d_);
  for (unsigned i = 0; i < d_; ++i) {
    out[i] = a % p_;
    a = static_cast<Elem>(a / p_);
  }
  return out;
}

GaloisField::Elem GaloisField::from_digits(const std::vector<std::uint64_t>& c) const {
  std::uint64_t v = 0;
  for (unsigned i = 0; i < d_ && i < c.size(); ++i) v += (c[i] % p_) * pow_p_[i];
  return static_cast<Elem>(v);
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  std::uint64_t v = 0;
  for (unsigned i = 0; i < d_; ++i) {
    v += (a % p_ + b % p_) % p_ * pow_p_[i];
    a = static_cast<Elem>(a / p_);
    b = static_cast<Elem>(b / p_);
  }
  return static_cast<Elem>(v);
}

GaloisField::Elem GaloisField::neg(Elem a) const {
  if (p_ == 2) return a;
  std::uint64_t v = 0;
  for (unsigned i = 0; i < d_; ++i) {
    v += (p_ - a % p_) % p_ * pow_p_[i];
    a = static_cast<Elem>(a / p_);
  }
  return static_cast<Elem>(v);
}

GaloisField::Elem GaloisField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (q_ == 2) return 1;
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (q_ == 2) return 1;
  return exp_[static_cast<std::uint32_t>((static_cast<unsigned __int128>(log_[a]) * e) % (q_ - 1))];
}

bool GaloisField::in_subfield(Elem a, unsigned e) const {
  if (e == 0 || d_ % e != 0) throw std::invalid_argument("subfield degree must divide field degree");
  std::uint64_t pe = 1;
  for (unsigned i = 0; i < e; ++i) pe *= p_;
  return pow(a, pe) == a;
}

GaloisField::Elem GaloisField::eval(const Poly& f, Elem a) const {
  Elem acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = add(mul(acc, a), scalar(f[i]));
  return acc;
}

std::vector<GaloisField::Elem> GaloisField::embedding_from(const GaloisField& sub) const {
  if (sub.p() != p_ || d_ % sub.d() != 0) {
    throw std::invalid_argument("F_" + std::to_string(sub.q()) + " does not embed in F_" + std::to_string(q_));
  }
  Elem root = 0;
  bool found = false;
  for (Elem c = 0; c < q_; ++c) {
    if (eval(sub.modulus(), c) == 0) {
      root = c;
      found = true;
      break;
    }
  }
  if (!found) throw InvariantViolation("subfield modulus has no root");
  std::vector<Elem> table(sub.q());
  std::vector<Elem> root_pows(sub.d());
  Elem acc = 1;
  for (unsigned i = 0; i < sub.d(); ++i) {
    root_pows[i] = acc;
    acc = mul(acc, root);
  }
  for (Elem s = 0; s < sub.q(); ++s) {
    Elem img = 0;
    for (unsigned i = 0; i < sub.d(); ++i) img = add(img, mul(scalar(sub.digit(s, i)), root_pows[i]));
    table[s] = img;
  }
  return table;
}

}  // namespace ringcover
