#include "ringcover/finite_ring.hpp"

#include <stdexcept>

#include "ringcover/errors.hpp"
#include "ringcover/field.hpp"

namespace ringcover {

namespace {

std::uint32_t mulm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

// Structure constants under construction.
struct Table {
  std::size_t dim;
  std::vector<std::uint32_t> mult;
  explicit Table(std::size_t n) : dim(n), mult(n * n * n, 0) {}
  std::uint32_t* at(std::size_t i, std::size_t j) { return &mult[(i * dim + j) * dim]; }
  // b_i * b_j = sum_c digits[c] * b_{offset + c}
  void set_digits(std::size_t i, std::size_t j, std::size_t offset, const std::vector<std::uint64_t>& digits) {
    std::uint32_t* row = at(i, j);
    for (std::size_t c = 0; c < digits.size(); ++c) row[offset + c] = static_cast<std::uint32_t>(digits[c]);
  }
};

GaloisField::Elem monomial(const GaloisField& f, unsigned a) {
  std::vector<std::uint64_t> c(f.d(), 0);
  c[a] = 1;
  return f.from_digits(c);
}

void check_order(std::uint64_t p, const BigInt& dim, const RingCaps& caps) {
  if (dim > 64 || boost::multiprecision::pow(BigInt(p), dim.convert_to<unsigned>()) > caps.max_order) {
    throw DimensionCap("ring of order " + std::to_string(p) + "^" + dim.str() + " exceeds the cap of " +
                       std::to_string(caps.max_order) + " elements");
  }
}

struct Model {
  std::size_t dim = 0;
  std::vector<std::uint32_t> mult;
  std::optional<Vec> unity;
  std::vector<std::string> labels;
};

Model field_sum_model(const FieldSum& f) {
  GaloisField F(f.q.p(), f.q.d());
  const unsigned d = f.q.d();
  Table t(static_cast<std::size_t>(d) * f.t);
  Model m;
  Vec one(t.dim, 0);
  for (unsigned c = 0; c < f.t; ++c) {
    const std::size_t off = static_cast<std::size_t>(c) * d;
    for (unsigned a = 0; a < d; ++a) {
      for (unsigned b = 0; b < d; ++b) {
        t.set_digits(off + a, off + b, off, F.digits(F.mul(monomial(F, a), monomial(F, b))));
      }
      m.labels.push_back((f.t > 1 ? "f" + std::to_string(c + 1) + "." : std::string()) + "x^" + std::to_string(a));
    }
    one[off] = 1;
  }
  m.dim = t.dim;
  m.mult = std::move(t.mult);
  m.unity = one;
  return m;
}

Model idealization_model(const Idealization& id) {
  GaloisField F(id.q.p(), id.q.d());
  const unsigned d = id.q.d();
  Table t(static_cast<std::size_t>(d) * (1 + id.lambda));
  Model m;
  for (unsigned a = 0; a < d; ++a) m.labels.push_back("x^" + std::to_string(a));
  for (unsigned c = 0; c < id.lambda; ++c) {
    for (unsigned a = 0; a < d; ++a) m.labels.push_back("m" + std::to_string(c + 1) + ".x^" + std::to_string(a));
  }
  for (unsigned a = 0; a < d; ++a) {
    for (unsigned b = 0; b < d; ++b) {
      auto digits = F.digits(F.mul(monomial(F, a), monomial(F, b)));
      t.set_digits(a, b, 0, digits);
      for (unsigned c = 0; c < id.lambda; ++c) {
        const std::size_t off = static_cast<std::size_t>(c + 1) * d;
        t.set_digits(a, off + b, off, digits);
        t.set_digits(off + a, b, off, digits);
      }
    }
  }
  m.dim = t.dim;
  m.mult = std::move(t.mult);
  m.unity = Vec(m.dim, 0);
  (*m.unity)[0] = 1;
  return m;
}

Model matrix_model(const MatrixRing& mr) {
  GaloisField F(mr.q.p(), mr.q.d());
  const unsigned n = mr.n, d = mr.q.d();
  Table t(static_cast<std::size_t>(n) * n * d);
  auto idx = [&](unsigned i, unsigned j, unsigned a) { return (static_cast<std::size_t>(i) * n + j) * d + a; };
  Model m;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      for (unsigned a = 0; a < d; ++a) {
        m.labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1) + ".x^" + std::to_string(a));
        for (unsigned l = 0; l < n; ++l) {
          for (unsigned b = 0; b < d; ++b) {
            t.set_digits(idx(i, j, a), idx(j, l, b), idx(i, l, 0), F.digits(F.mul(monomial(F, a), monomial(F, b))));
          }
        }
      }
    }
  }
  m.dim = t.dim;
  m.mult = std::move(t.mult);
  m.unity = Vec(m.dim, 0);
  for (unsigned i = 0; i < n; ++i) (*m.unity)[idx(i, i, 0)] = 1;
  return m;
}

Model a_ring_model(const ARing& ar) {
  const auto q = arith::tensor(ar.q1, ar.q2);
  GaloisField F1(ar.q1.p(), ar.q1.d()), F2(ar.q2.p(), ar.q2.d()), F(q.p(), q.d());
  const auto iota1 = F.embedding_from(F1);
  const auto iota2 = F.embedding_from(F2);
  const unsigned n = ar.n, d1 = ar.q1.d(), d2 = ar.q2.d(), D = q.d();
  const std::size_t col0 = static_cast<std::size_t>(n) * n * d1;
  const std::size_t fld0 = col0 + static_cast<std::size_t>(n) * D;
  Table t(fld0 + d2);
  auto mi = [&](unsigned i, unsigned j, unsigned a) { return (static_cast<std::size_t>(i) * n + j) * d1 + a; };
  auto ci = [&](unsigned i, unsigned k) { return col0 + static_cast<std::size_t>(i) * D + k; };
  auto fi = [&](unsigned a) { return fld0 + a; };
  Model m;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned a = 0; a < d1; ++a)
        m.labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1) + ".y^" + std::to_string(a));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < D; ++k) m.labels.push_back("e" + std::to_string(i + 1) + ".z^" + std::to_string(k));
  for (unsigned a = 0; a < d2; ++a) m.labels.push_back("w^" + std::to_string(a));

  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      for (unsigned a = 0; a < d1; ++a) {
        const auto ya = monomial(F1, a);
        for (unsigned l = 0; l < n; ++l) {
          for (unsigned b = 0; b < d1; ++b) {
            t.set_digits(mi(i, j, a), mi(j, l, b), mi(i, l, 0), F1.digits(F1.mul(ya, monomial(F1, b))));
          }
        }
        for (unsigned k = 0; k < D; ++k) {
          t.set_digits(mi(i, j, a), ci(j, k), ci(i, 0), F.digits(F.mul(iota1[ya], monomial(F, k))));
        }
      }
    }
  }
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned k = 0; k < D; ++k) {
      for (unsigned b = 0; b < d2; ++b) {
        t.set_digits(ci(i, k), fi(b), ci(i, 0), F.digits(F.mul(monomial(F, k), iota2[monomial(F2, b)])));
      }
    }
  }
  for (unsigned a = 0; a < d2; ++a) {
    for (unsigned b = 0; b < d2; ++b) {
      t.set_digits(fi(a), fi(b), fi(0), F2.digits(F2.mul(monomial(F2, a), monomial(F2, b))));
    }
  }
  m.dim = t.dim;
  m.mult = std::move(t.mult);
  m.unity = Vec(m.dim, 0);
  for (unsigned i = 0; i < n; ++i) (*m.unity)[mi(i, i, 0)] = 1;
  (*m.unity)[fi(0)] = 1;
  return m;
}

Model zero_model(const ZeroMult& z) {
  Model m;
  m.dim = z.k;
  m.mult.assign(m.dim * m.dim * m.dim, 0);
  for (unsigned i = 0; i < z.k; ++i) m.labels.push_back("z" + std::to_string(i + 1));
  return m;
}

Model leaf_model(const RingFamily& leaf) {
  if (leaf.is<FieldSum>()) return field_sum_model(leaf.as<FieldSum>());
  if (leaf.is<Idealization>()) return idealization_model(leaf.as<Idealization>());
  if (leaf.is<MatrixRing>()) return matrix_model(leaf.as<MatrixRing>());
  if (leaf.is<ARing>()) return a_ring_model(leaf.as<ARing>());
  return zero_model(leaf.as<ZeroMult>());
}

}  // namespace

FiniteRing::FiniteRing(std::uint64_t p, std::size_t dim, std::vector<std::uint32_t> mult, std::optional<Vec> unity,
                       std::vector<std::string> labels, std::optional<RingFamily> origin, const RingCaps& caps)
    : dim_(dim), mult_(std::move(mult)), unity_(std::move(unity)), labels_(std::move(labels)), origin_(std::move(origin)) {
  if (!arith::is_prime(p) || p > 0xffffffffu) throw std::invalid_argument("ring characteristic must be a prime below 2^32");
  p_ = static_cast<std::uint32_t>(p);
  check_order(p, dim, caps);
  order_ = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(dim)).convert_to<std::uint64_t>();
  if (mult_.size() != dim * dim * dim) throw InvariantViolation("multiplication table has wrong size");
  for (auto c : mult_) {
    if (c >= p_) throw InvariantViolation("structure constant out of range");
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim; ++i) labels_.push_back("b" + std::to_string(i));
  }
  if (labels_.size() != dim) throw InvariantViolation("label count does not match dimension");

  // (b_i b_j) b_k == b_i (b_j b_k) for every basis triple.
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const std::uint32_t* ij = product(i, j);
      for (std::size_t k = 0; k < dim; ++k) {
        const std::uint32_t* jk = product(j, k);
        for (std::size_t out = 0; out < dim; ++out) {
          std::uint64_t lhs = 0, rhs = 0;
          for (std::size_t l = 0; l < dim; ++l) {
            if (ij[l]) lhs += static_cast<std::uint64_t>(ij[l]) * product(l, k)[out] % p_;
            if (jk[l]) rhs += static_cast<std::uint64_t>(jk[l]) * product(i, l)[out] % p_;
          }
          if (lhs % p_ != rhs % p_) {
            throw InvariantViolation("multiplication is not associative on basis triple (" + std::to_string(i) +
                                     "," + std::to_string(j) + "," + std::to_string(k) + ")");
          }
        }
      }
    }
  }
  if (unity_) {
    if (!valid(*unity_)) throw InvariantViolation("unity vector malformed");
    for (std::size_t i = 0; i < dim; ++i) {
      Vec b = basis(i);
      if (mul(*unity_, b) != b || mul(b, *unity_) != b) throw InvariantViolation("supplied unity is not an identity");
    }
  }
}

Vec FiniteRing::basis(std::size_t i) const {
  Vec v(dim_, 0);
  v.at(i) = 1;
  return v;
}

Vec FiniteRing::add(const Vec& a, const Vec& b) const {
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = (a[i] + b[i]) % p_;
  return out;
}

Vec FiniteRing::sub(const Vec& a, const Vec& b) const {
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = (a[i] + p_ - b[i]) % p_;
  return out;
}

Vec FiniteRing::mul(const Vec& a, const Vec& b) const {
  std::vector<std::uint64_t> acc(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!b[j]) continue;
      const std::uint32_t s = mulm(a[i], b[j], p_);
      const std::uint32_t* row = product(i, j);
      for (std::size_t k = 0; k < dim_; ++k) {
        if (row[k]) acc[k] = (acc[k] + static_cast<std::uint64_t>(s) * row[k]) % p_;
      }
    }
  }
  return Vec(acc.begin(), acc.end());
}

bool FiniteRing::valid(const Vec& v) const {
  if (v.size() != dim_) return false;
  for (auto c : v) {
    if (c >= p_) return false;
  }
  return true;
}

std::uint64_t FiniteRing::rank(const Vec& v) const {
  std::uint64_t r = 0;
  for (std::size_t i = dim_; i-- > 0;) r = r * p_ + v[i];
  return r;
}

Vec FiniteRing::unrank(std::uint64_t r) const {
  Vec v(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    v[i] = static_cast<std::uint32_t>(r % p_);
    r /= p_;
  }
  return v;
}

FiniteRing build(const RingFamily& spec, const RingCaps& caps) {
  validate(spec);
  const std::uint64_t p = characteristic(spec);
  check_order(p, fp_dimension(spec), caps);
  const auto leaves = flatten(spec);
  std::vector<Model> parts;
  std::size_t dim = 0;
  for (const auto& leaf : leaves) {
    parts.push_back(leaf_model(leaf));
    dim += parts.back().dim;
  }
  Table t(dim);
  std::vector<std::string> labels;
  Vec unity(dim, 0);
  bool unital = true;
  std::size_t off = 0;
  for (std::size_t s = 0; s < parts.size(); ++s) {
    const Model& m = parts[s];
    for (std::size_t i = 0; i < m.dim; ++i) {
      for (std::size_t j = 0; j < m.dim; ++j) {
        const std::uint32_t* src = &m.mult[(i * m.dim + j) * m.dim];
        std::uint32_t* dst = t.at(off + i, off + j);
        for (std::size_t k = 0; k < m.dim; ++k) dst[off + k] = src[k];
      }
      labels.push_back(parts.size() > 1 ? "s" + std::to_string(s + 1) + ":" + m.labels[i] : m.labels[i]);
    }
    if (m.unity) {
      for (std::size_t i = 0; i < m.dim; ++i) unity[off + i] = (*m.unity)[i];
    } else {
      unital = false;
    }
    off += m.dim;
  }
  return FiniteRing(p, dim, std::move(t.mult), unital ? std::optional<Vec>(unity) : std::nullopt, std::move(labels),
                    spec, caps);
}

FiniteRing unitalize(const FiniteRing& r, const RingCaps& caps) {
  const std::size_t n = r.dim(), m = n + 1;
  check_order(r.p(), BigInt(m), caps);
  Table t(m);
  t.at(0, 0)[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    t.at(0, i + 1)[i + 1] = 1;
    t.at(i + 1, 0)[i + 1] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t* src = r.product(i, j);
      std::uint32_t* dst = t.at(i + 1, j + 1);
      for (std::size_t k = 0; k < n; ++k) dst[k + 1] = src[k];
    }
  }
  std::vector<std::string> labels{"1'"};
  for (const auto& l : r.labels()) labels.push_back("(0," + l + ")");
  Vec unity(m, 0);
  unity[0] = 1;
  return FiniteRing(r.p(), m, std::move(t.mult), unity, std::move(labels), std::nullopt, caps);
}

std::optional<Vec> find_unity(const FiniteRing& r) {
  const std::size_t n = r.dim();
  const std::uint32_t p = r.p();
  if (n == 0) return Vec{};
  std::vector<Vec> A;
  Vec rhs;
  A.reserve(2 * n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      Vec left(n), right(n);
      for (std::size_t i = 0; i < n; ++i) {
        left[i] = r.product(i, j)[l];
        right[i] = r.product(j, i)[l];
      }
      A.push_back(std::move(left));
      rhs.push_back(j == l ? 1 : 0);
      A.push_back(std::move(right));
      rhs.push_back(j == l ? 1 : 0);
    }
  }
  return linalg::solve(A, rhs, p);
}

linalg::Echelon closure(const FiniteRing& r, const std::vector<Vec>& gens) {
  linalg::Echelon e = linalg::rref(gens, r.p(), r.dim());
  bool changed = true;
  while (changed) {
    changed = false;
    const auto rows = e.rows;
    for (const auto& a : rows) {
      for (const auto& b : rows) {
        if (e.insert(r.mul(a, b))) changed = true;
      }
    }
  }
  return e;
}

bool is_closed(const FiniteRing& r, const linalg::Echelon& e) {
  for (const auto& a : e.rows) {
    for (const auto& b : e.rows) {
      if (!e.contains(r.mul(a, b))) return false;
    }
  }
  return true;
}

}  // namespace ringcover
