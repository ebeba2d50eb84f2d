#include "ringcover/coverbuilder.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "ringcover/errors.hpp"
#include "ringcover/sieve.hpp"

namespace ringcover::cover {

namespace {

std::string u128_str(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  for (; v; v /= 10) s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
  return s;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit, const std::string& what) {
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > limit) {
      throw ComplexityCap(what + " exceeds the cap of " + std::to_string(limit), static_cast<double>(acc));
    }
  }
  return static_cast<std::uint64_t>(acc);
}

// Field tables and per-cover precomputation shared by the verifiers.
struct Ctx {
  const ACover& c;
  unsigned n;
  GaloisField F1, F2, F;
  std::vector<Elem> i1, i2;
  std::uint64_t h_count = 0;                 // q1^(n^2)
  std::uint64_t x_count = 0;                 // q^n
  std::vector<std::uint32_t> conj_mult;      // per x code
  std::vector<std::size_t> conj_first;       // per x code, member index
  std::vector<std::vector<std::size_t>> stab_pivots;
  bool conj_complete = false;

  explicit Ctx(const ACover& cover)
      : c(cover),
        n(cover.n),
        F1(cover.q1.p(), cover.q1.d()),
        F2(cover.q2.p(), cover.q2.d()),
        F(cover.q.p(), cover.q.d()),
        i1(F.embedding_from(F1)),
        i2(F.embedding_from(F2)) {
    for (const auto& U : c.stabilizers) {
      std::vector<std::size_t> piv;
      for (const auto& row : U) {
        auto it = std::find_if(row.begin(), row.end(), [](Elem e) { return e != 0; });
        piv.push_back(static_cast<std::size_t>(it - row.begin()));
      }
      stab_pivots.push_back(std::move(piv));
    }
  }

  void init_conjugates(std::uint64_t cap) {
    x_count = checked_pow(F.q(), n, cap, "conjugate count");
    conj_mult.assign(x_count, 0);
    conj_first.assign(x_count, 0);
    for (std::size_t m = 0; m < c.conjugates.size(); ++m) {
      std::uint64_t code = x_code(c.conjugates[m]);
      if (conj_mult[code]++ == 0) conj_first[code] = m;
    }
    conj_complete = std::all_of(conj_mult.begin(), conj_mult.end(), [](std::uint32_t k) { return k > 0; });
  }

  std::uint64_t x_code(const std::vector<Elem>& x) const {
    std::uint64_t code = 0;
    for (std::size_t i = x.size(); i-- > 0;) code = code * F.q() + x[i];
    return code;
  }
  void decode_x(std::uint64_t code, std::vector<Elem>& x) const {
    for (unsigned i = 0; i < n; ++i) {
      x[i] = static_cast<Elem>(code % F.q());
      code /= F.q();
    }
  }
  void decode_h(std::uint64_t code, std::vector<Elem>& h) const {
    for (std::size_t i = 0; i < h.size(); ++i) {
      h[i] = static_cast<Elem>(code % F1.q());
      code /= F1.q();
    }
  }

  // v = h x - x beta over F_q.
  void apply(const std::vector<Elem>& h, Elem beta, const std::vector<Elem>& x, std::vector<Elem>& v) const {
    const Elem b = i2[beta];
    for (unsigned i = 0; i < n; ++i) {
      Elem acc = F.neg(F.mul(x[i], b));
      for (unsigned j = 0; j < n; ++j) acc = F.add(acc, F.mul(i1[h[i * n + j]], x[j]));
      v[i] = acc;
    }
  }

  bool invertible(const std::vector<Elem>& h, Elem beta) const {
    std::vector<Elem> a(n * n);
    const Elem b = i2[beta];
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) a[i * n + j] = i1[h[i * n + j]];
      a[i * n + i] = F.sub(a[i * n + i], b);
    }
    for (unsigned col = 0; col < n; ++col) {
      unsigned piv = col;
      while (piv < n && a[piv * n + col] == 0) ++piv;
      if (piv == n) return false;
      if (piv != col) {
        for (unsigned j = 0; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
      }
      const Elem inv = F.inv(a[col * n + col]);
      for (unsigned r = col + 1; r < n; ++r) {
        if (a[r * n + col] == 0) continue;
        const Elem f = F.mul(a[r * n + col], inv);
        for (unsigned j = col; j < n; ++j) a[r * n + j] = F.sub(a[r * n + j], F.mul(f, a[col * n + j]));
      }
    }
    return true;
  }

  bool stabilizes(const std::vector<Elem>& h, std::size_t s) const {
    const auto& U = c.stabilizers[s];
    const auto& piv = stab_pivots[s];
    std::vector<Elem> w(n);
    for (const auto& u : U) {
      for (unsigned i = 0; i < n; ++i) {
        Elem acc = 0;
        for (unsigned j = 0; j < n; ++j) acc = F1.add(acc, F1.mul(h[i * n + j], u[j]));
        w[i] = acc;
      }
      for (std::size_t r = 0; r < U.size(); ++r) {
        const Elem f = w[piv[r]];
        if (f == 0) continue;
        for (unsigned j = 0; j < n; ++j) w[j] = F1.sub(w[j], F1.mul(f, U[r][j]));
      }
      if (std::any_of(w.begin(), w.end(), [](Elem e) { return e != 0; })) return false;
    }
    return true;
  }

  // Members other than conjugates containing every (h, *, beta); indices in
  // ACover member order.
  void extra_members(const std::vector<Elem>& h, Elem beta, std::vector<std::size_t>& out) const {
    out.clear();
    std::size_t base = c.conjugates.size();
    for (std::size_t s = 0; s < c.stabilizers.size(); ++s) {
      if (stabilizes(h, s)) out.push_back(base + s);
    }
    base += c.stabilizers.size();
    for (std::size_t s = 0; s < c.subfields.size(); ++s) {
      if (F2.in_subfield(beta, c.subfields[s])) out.push_back(base + s);
    }
    base += c.subfields.size();
    for (std::size_t s = 0; s < c.left_subfields.size(); ++s) {
      if (F1.in_subfield(h[0], c.left_subfields[s])) out.push_back(base + s);
    }
    base += c.left_subfields.size();
    if (c.diagonal && i1[h[0]] == i2[beta]) out.push_back(base);
  }

  RingElement element(const std::vector<Elem>& h, const std::vector<Elem>& v, Elem beta) const {
    return RingElement{h, v, beta};
  }
};

struct ChunkResult {
  bool ok = true;
  std::uint64_t checked = 0;
  std::optional<RingElement> uncovered;
  std::vector<std::optional<RingElement>> witnesses;
};

// Runs fn(h_begin, h_end, result) over contiguous chunks of h codes and merges
// results in chunk order, so the outcome does not depend on the thread count.
template <typename Fn>
ChunkResult run_chunks(std::uint64_t h_count, unsigned threads, std::size_t members, Fn fn) {
  threads = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, h_count)));
  std::vector<ChunkResult> parts(threads);
  for (auto& p : parts) p.witnesses.assign(members, std::nullopt);
  auto bounds = [&](unsigned t) { return h_count * t / threads; };
  if (threads == 1) {
    fn(0, h_count, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] { fn(bounds(t), bounds(t + 1), parts[t]); });
    }
    for (auto& th : pool) th.join();
  }
  ChunkResult out;
  out.witnesses.assign(members, std::nullopt);
  for (auto& p : parts) {
    out.ok = out.ok && p.ok;
    out.checked += p.checked;
    if (!out.uncovered && p.uncovered) out.uncovered = std::move(p.uncovered);
    for (std::size_t m = 0; m < members; ++m) {
      if (!out.witnesses[m] && p.witnesses[m]) out.witnesses[m] = std::move(p.witnesses[m]);
    }
  }
  return out;
}

// Shared element-by-element pass behind verify_cover_raw and irredundancy.
ChunkResult raw_pass(const ACover& c, const VerifyOptions& opts, bool want_witnesses) {
  const std::uint64_t cap = opts.cap ? opts.cap : kRawCap;
  Ctx ctx(c);
  const std::uint64_t h_count = checked_pow(c.q1.value(), std::uint64_t{c.n} * c.n, cap, "ring order");
  ctx.h_count = h_count;
  ctx.init_conjugates(cap);
  const unsigned __int128 total = static_cast<unsigned __int128>(h_count) * ctx.x_count * ctx.F2.q();
  if (total > cap) {
    throw ComplexityCap("ring order " + u128_str(total) + " exceeds the cap of " +
                            std::to_string(cap),
                        static_cast<double>(total));
  }
  const std::size_t members = c.size();
  const unsigned threads = sieve::resolve_threads(opts.threads);

  return run_chunks(h_count, threads, want_witnesses ? members : 0, [&](std::uint64_t lo, std::uint64_t hi,
                                                                        ChunkResult& res) {
    std::vector<Elem> h(std::size_t{c.n} * c.n), x(c.n), v(c.n);
    std::vector<std::uint32_t> cnt(ctx.x_count);
    std::vector<std::uint64_t> last_x(ctx.x_count);
    std::vector<std::size_t> extra;
    for (std::uint64_t hc = lo; hc < hi; ++hc) {
      ctx.decode_h(hc, h);
      for (Elem beta = 0; beta < ctx.F2.q(); ++beta) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (std::uint64_t xc = 0; xc < ctx.x_count; ++xc) {
          if (!ctx.conj_mult[xc]) continue;
          ctx.decode_x(xc, x);
          ctx.apply(h, beta, x, v);
          const std::uint64_t vc = ctx.x_code(v);
          cnt[vc] += ctx.conj_mult[xc];
          last_x[vc] = xc;
        }
        ctx.extra_members(h, beta, extra);
        for (std::uint64_t vc = 0; vc < ctx.x_count; ++vc) {
          ++res.checked;
          const std::uint64_t total = cnt[vc] + extra.size();
          if (total == 0) {
            res.ok = false;
            if (!res.uncovered) {
              ctx.decode_x(vc, v);
              res.uncovered = ctx.element(h, v, beta);
            }
          } else if (total == 1 && want_witnesses) {
            const std::size_t owner = cnt[vc] == 1 ? ctx.conj_first[last_x[vc]] : extra.front();
            if (!res.witnesses[owner]) {
              ctx.decode_x(vc, v);
              res.witnesses[owner] = ctx.element(h, v, beta);
            }
          }
        }
      }
    }
  });
}

void append_unit_vectors(std::vector<Vec>& out, std::size_t dim, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) {
    Vec v(dim, 0);
    v[i] = 1;
    out.push_back(std::move(v));
  }
}

Elem monomial(const GaloisField& f, unsigned a) {
  std::vector<std::uint64_t> c(f.d(), 0);
  c[a] = 1;
  return f.from_digits(c);
}

}  // namespace

std::string member_name(const ACover& c, std::size_t i) {
  auto vec = [](const std::vector<Elem>& x) {
    std::string s = "(";
    for (std::size_t k = 0; k < x.size(); ++k) s += (k ? "," : "") + std::to_string(x[k]);
    return s + ")";
  };
  if (i < c.conjugates.size()) return "conjugate x=" + vec(c.conjugates[i]);
  i -= c.conjugates.size();
  if (i < c.stabilizers.size()) {
    std::string s = "stabilizer U=[";
    for (std::size_t k = 0; k < c.stabilizers[i].size(); ++k) s += (k ? "," : "") + vec(c.stabilizers[i][k]);
    return s + "]";
  }
  i -= c.stabilizers.size();
  if (i < c.subfields.size()) return "subfield beta in F_" + std::to_string(c.q2.p()) + "^" + std::to_string(c.subfields[i]);
  i -= c.subfields.size();
  if (i < c.left_subfields.size()) {
    return "left subfield h in F_" + std::to_string(c.q1.p()) + "^" + std::to_string(c.left_subfields[i]);
  }
  return "diagonal h = beta";
}

std::vector<std::vector<std::vector<Elem>>> subspaces(const GaloisField& f, unsigned n, unsigned d) {
  std::vector<std::vector<std::vector<Elem>>> out;
  if (d > n) return out;
  std::vector<unsigned> piv(d);
  for (unsigned i = 0; i < d; ++i) piv[i] = i;
  while (true) {
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::pair<unsigned, unsigned>> free;  // (row, col)
    for (unsigned r = 0; r < d; ++r) {
      for (unsigned col = piv[r] + 1; col < n; ++col) {
        if (!is_piv[col]) free.emplace_back(r, col);
      }
    }
    std::vector<std::vector<Elem>> m(d, std::vector<Elem>(n, 0));
    for (unsigned r = 0; r < d; ++r) m[r][piv[r]] = 1;
    std::vector<Elem> digits(free.size(), 0);
    while (true) {
      out.push_back(m);
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == f.q()) {
        digits[k] = 0;
        m[free[k].first][free[k].second] = 0;
        ++k;
      }
      if (k == digits.size()) break;
      m[free[k].first][free[k].second] = digits[k];
    }
    // Next pivot combination in lexicographic order.
    int i = static_cast<int>(d) - 1;
    while (i >= 0 && piv[i] == n - d + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++piv[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

ACover build_A_cover(unsigned n, const arith::PrimePower& q1, const arith::PrimePower& q2) {
  if (n == 0) throw std::invalid_argument("A(n,q1,q2) needs n >= 1");
  const auto q = arith::tensor(q1, q2);
  ACover c;
  c.n = n;
  c.q1 = q1;
  c.q2 = q2;
  c.q = q;
  c.d = q.d() / q1.d();
  const std::string name =
      "A(" + std::to_string(n) + "," + q1.to_string() + "," + q2.to_string() + ")";
  if (n == 1 && ((q1.q() == 2 && q2.q() == 2) || (q1.q() == 4 && q2.q() == 4))) {
    throw UnsupportedParameters(name + " is not sigma-elementary; no cover construction");
  }
  if (n == 2) throw UnsupportedParameters(name + ": construction needs n = 1 or n >= 3");
  if (n >= 3) {
    const auto a = static_cast<unsigned>(arith::smallest_prime_divisor(n));
    if (c.d >= n - n / a) {
      throw UnsupportedParameters(name + ": d = " + std::to_string(c.d) + " is not below n - n/a = " +
                                  std::to_string(n - n / a));
    }
  }
  GaloisField F(q.p(), q.d());
  const std::uint64_t count = checked_pow(F.q(), n, kReducedCap, "conjugate count");
  c.conjugates.reserve(count);
  std::vector<Elem> x(n, 0);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t t = code;
    for (unsigned i = 0; i < n; ++i) {
      x[i] = static_cast<Elem>(t % F.q());
      t /= F.q();
    }
    c.conjugates.push_back(x);
  }
  const unsigned d1 = q1.d(), d2 = q2.d();
  const auto g = static_cast<unsigned>(arith::gcd(d1, d2));
  if (n == 1) {
    if (d1 == d2) {
      c.diagonal = true;
    } else if (g < d1) {
      c.left_subfields.push_back(d1 / static_cast<unsigned>(arith::smallest_prime_divisor(d1 / g)));
    } else {
      c.subfields.push_back(d2 / static_cast<unsigned>(arith::smallest_prime_divisor(d2 / g)));
    }
    return c;
  }
  GaloisField F1(q1.p(), d1);
  c.stabilizers = subspaces(F1, n, c.d);
  for (auto r : arith::prime_divisors(c.d)) c.subfields.push_back(d2 / static_cast<unsigned>(r));
  return c;
}

VerifyResult verify_cover_raw(const ACover& c, const VerifyOptions& opts) {
  auto res = raw_pass(c, opts, false);
  return VerifyResult{res.ok, res.checked, std::move(res.uncovered)};
}

VerifyResult verify_cover_reduced(const ACover& c, const VerifyOptions& opts) {
  const std::uint64_t cap = opts.cap ? opts.cap : kReducedCap;
  Ctx ctx(c);
  const std::uint64_t h_count = checked_pow(c.q1.value(), std::uint64_t{c.n} * c.n, cap, "pair count");
  const unsigned __int128 pairs = static_cast<unsigned __int128>(h_count) * ctx.F2.q();
  if (pairs > cap) {
    throw ComplexityCap("pair count " + u128_str(pairs) + " exceeds the cap of " +
                            std::to_string(cap),
                        static_cast<double>(pairs));
  }
  ctx.init_conjugates(kReducedCap);
  const unsigned threads = sieve::resolve_threads(opts.threads);
  auto res = run_chunks(h_count, threads, 0, [&](std::uint64_t lo, std::uint64_t hi, ChunkResult& out) {
    std::vector<Elem> h(std::size_t{c.n} * c.n);
    std::vector<std::size_t> extra;
    for (std::uint64_t hc = lo; hc < hi; ++hc) {
      ctx.decode_h(hc, h);
      for (Elem beta = 0; beta < ctx.F2.q(); ++beta) {
        ++out.checked;
        if (ctx.conj_complete && ctx.invertible(h, beta)) continue;
        ctx.extra_members(h, beta, extra);
        if (!extra.empty()) continue;
        out.ok = false;
        if (!out.uncovered) {
          // Some v escapes: h - beta is singular or a conjugate is missing.
          std::vector<Elem> x(c.n), v(c.n);
          std::vector<bool> hit(ctx.x_count, false);
          for (std::uint64_t xc = 0; xc < ctx.x_count; ++xc) {
            if (!ctx.conj_mult[xc]) continue;
            ctx.decode_x(xc, x);
            ctx.apply(h, beta, x, v);
            hit[ctx.x_code(v)] = true;
          }
          auto miss = std::find(hit.begin(), hit.end(), false);
          ctx.decode_x(static_cast<std::uint64_t>(miss - hit.begin()), v);
          out.uncovered = ctx.element(h, v, beta);
        }
      }
    }
  });
  return VerifyResult{res.ok, res.checked, std::move(res.uncovered)};
}

IrredundancyResult irredundancy(const ACover& c, const VerifyOptions& opts) {
  auto res = raw_pass(c, opts, true);
  IrredundancyResult out;
  out.witnesses = std::move(res.witnesses);
  out.irredundant = std::all_of(out.witnesses.begin(), out.witnesses.end(), [](const auto& w) { return w.has_value(); });
  return out;
}

Vec element_vector(const ACover& c, const RingElement& e) {
  GaloisField F1(c.q1.p(), c.q1.d()), F2(c.q2.p(), c.q2.d()), F(c.q.p(), c.q.d());
  const unsigned n = c.n, d1 = c.q1.d(), d2 = c.q2.d(), D = c.q.d();
  const std::size_t col0 = std::size_t{n} * n * d1, fld0 = col0 + std::size_t{n} * D;
  Vec out(fld0 + d2, 0);
  for (std::size_t ij = 0; ij < std::size_t{n} * n; ++ij) {
    for (unsigned a = 0; a < d1; ++a) out[ij * d1 + a] = static_cast<std::uint32_t>(F1.digit(e.h[ij], a));
  }
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned k = 0; k < D; ++k) out[col0 + std::size_t{i} * D + k] = static_cast<std::uint32_t>(F.digit(e.v[i], k));
  }
  for (unsigned a = 0; a < d2; ++a) out[fld0 + a] = static_cast<std::uint32_t>(F2.digit(e.beta, a));
  return out;
}

std::vector<std::vector<Vec>> member_bases(const ACover& c) {
  Ctx ctx(c);
  const unsigned n = c.n, d1 = c.q1.d(), d2 = c.q2.d(), D = c.q.d();
  const std::size_t col0 = std::size_t{n} * n * d1, fld0 = col0 + std::size_t{n} * D, dim = fld0 + d2;
  const auto p = static_cast<std::uint32_t>(c.q.p());
  std::vector<std::vector<Vec>> out;
  const RingElement zero{std::vector<Elem>(std::size_t{n} * n, 0), std::vector<Elem>(n, 0), 0};

  for (const auto& x : c.conjugates) {
    std::vector<Vec> basis;
    for (std::size_t ij = 0; ij < std::size_t{n} * n; ++ij) {
      for (unsigned a = 0; a < d1; ++a) {
        RingElement e = zero;
        e.h[ij] = monomial(ctx.F1, a);
        ctx.apply(e.h, 0, x, e.v);
        basis.push_back(element_vector(c, e));
      }
    }
    for (unsigned b = 0; b < d2; ++b) {
      RingElement e = zero;
      e.beta = monomial(ctx.F2, b);
      ctx.apply(e.h, e.beta, x, e.v);
      basis.push_back(element_vector(c, e));
    }
    out.push_back(std::move(basis));
  }

  for (std::size_t s = 0; s < c.stabilizers.size(); ++s) {
    const auto& U = c.stabilizers[s];
    // Images of the F_p-basis of M_n(F_q1) under h -> (h u mod U)_u.
    std::vector<Vec> images;
    for (std::size_t ij = 0; ij < std::size_t{n} * n; ++ij) {
      for (unsigned a = 0; a < d1; ++a) {
        std::vector<Elem> h(std::size_t{n} * n, 0);
        h[ij] = monomial(ctx.F1, a);
        Vec img;
        for (const auto& u : U) {
          std::vector<Elem> w(n, 0);
          for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = 0; j < n; ++j) w[i] = ctx.F1.add(w[i], ctx.F1.mul(h[i * n + j], u[j]));
          }
          for (std::size_t r = 0; r < U.size(); ++r) {
            const Elem f = w[ctx.stab_pivots[s][r]];
            if (f == 0) continue;
            for (unsigned j = 0; j < n; ++j) w[j] = ctx.F1.sub(w[j], ctx.F1.mul(f, U[r][j]));
          }
          for (unsigned i = 0; i < n; ++i) {
            for (unsigned k = 0; k < d1; ++k) img.push_back(static_cast<std::uint32_t>(ctx.F1.digit(w[i], k)));
          }
        }
        images.push_back(std::move(img));
      }
    }
    std::vector<Vec> basis;
    for (auto& k : linalg::kernel(images, p)) {
      k.resize(dim, 0);
      basis.push_back(std::move(k));
    }
    append_unit_vectors(basis, dim, col0, dim);
    out.push_back(std::move(basis));
  }

  auto subfield_codes = [&](const GaloisField& big, unsigned e) {
    GaloisField sub(big.p(), e);
    auto emb = big.embedding_from(sub);
    std::vector<Elem> codes;
    for (unsigned a = 0; a < e; ++a) codes.push_back(emb[monomial(sub, a)]);
    return codes;
  };
  for (auto e : c.subfields) {
    std::vector<Vec> basis;
    append_unit_vectors(basis, dim, 0, fld0);
    for (auto b : subfield_codes(ctx.F2, e)) {
      RingElement el = zero;
      el.beta = b;
      basis.push_back(element_vector(c, el));
    }
    out.push_back(std::move(basis));
  }
  for (auto e : c.left_subfields) {
    std::vector<Vec> basis;
    for (auto hcode : subfield_codes(ctx.F1, e)) {
      RingElement el = zero;
      el.h[0] = hcode;
      basis.push_back(element_vector(c, el));
    }
    append_unit_vectors(basis, dim, col0, dim);
    out.push_back(std::move(basis));
  }
  if (c.diagonal) {
    std::vector<Elem> i2_inv(ctx.F.q(), 0);
    for (Elem b = 0; b < ctx.F2.q(); ++b) i2_inv[ctx.i2[b]] = b;
    std::vector<Vec> basis;
    for (unsigned a = 0; a < d1; ++a) {
      RingElement el = zero;
      el.h[0] = monomial(ctx.F1, a);
      el.beta = i2_inv[ctx.i1[el.h[0]]];
      basis.push_back(element_vector(c, el));
    }
    append_unit_vectors(basis, dim, col0, fld0);
    out.push_back(std::move(basis));
  }
  return out;
}

}  // namespace ringcover::cover
