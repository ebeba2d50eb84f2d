#ifndef RINGCOVER_TESTS_REFERENCE_HPP
#define RINGCOVER_TESTS_REFERENCE_HPP

// Slow reference implementations used as independent oracles in tests.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace ref {

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

inline bool is_prime_power_trial(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t f = 2;
  while (n % f != 0) ++f;
  while (n % f == 0) n /= f;
  return n == 1;
}

// Monic polynomials over F_p of degree k, coded by their lower coefficients
// c_0 + c_1 p + ... + c_{k-1} p^{k-1}.
inline std::vector<std::uint64_t> decode(std::uint64_t code, std::uint64_t p, unsigned k) {
  std::vector<std::uint64_t> c(k + 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    c[i] = code % p;
    code /= p;
  }
  c[k] = 1;
  return c;
}

inline std::uint64_t encode_monic(const std::vector<std::uint64_t>& c, std::uint64_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = c.size() - 1; i-- > 0;) code = code * p + c[i];
  return code;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Irreducibles of degree d counted by striking out every product of two
// monic factors of positive degree.
inline std::uint64_t irreducible_count_by_products(std::uint64_t p, unsigned d) {
  const std::uint64_t total = ipow(p, d);
  std::vector<bool> reducible(total, false);
  for (unsigned k = 1; k <= d / 2; ++k) {
    for (std::uint64_t a = 0; a < ipow(p, k); ++a) {
      auto f = decode(a, p, k);
      for (std::uint64_t b = 0; b < ipow(p, d - k); ++b) {
        auto g = decode(b, p, d - k);
        std::vector<std::uint64_t> h(d + 1, 0);
        for (unsigned i = 0; i <= k; ++i) {
          for (unsigned j = 0; j <= d - k; ++j) h[i + j] = (h[i + j] + f[i] * g[j]) % p;
        }
        reducible[encode_monic(h, p)] = true;
      }
    }
  }
  return static_cast<std::uint64_t>(std::count(reducible.begin(), reducible.end(), false));
}

// Subspaces of F_p^n of dimension k, grown one vector at a time and
// deduplicated by their element sets.
inline std::uint64_t subspace_count_by_growth(unsigned n, unsigned k, std::uint64_t p) {
  const std::uint64_t size = ipow(p, n);
  auto add = [&](std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0, m = 1;
    for (unsigned i = 0; i < n; ++i) {
      r += ((a % p + b % p) % p) * m;
      a /= p;
      b /= p;
      m *= p;
    }
    return r;
  };
  using Set = std::vector<bool>;
  std::set<Set> level;
  Set zero(size, false);
  zero[0] = true;
  level.insert(zero);
  for (unsigned dim = 0; dim < k; ++dim) {
    std::set<Set> next;
    for (const auto& u : level) {
      for (std::uint64_t v = 1; v < size; ++v) {
        if (u[v]) continue;
        Set w = u;
        // span(u, v) = union of u + c v
        std::uint64_t cv = 0;
        for (std::uint64_t c = 1; c < p; ++c) {
          cv = add(cv, v);
          for (std::uint64_t x = 0; x < size; ++x) {
            if (u[x]) w[add(x, cv)] = true;
          }
        }
        next.insert(std::move(w));
      }
    }
    level = std::move(next);
  }
  return level.size();
}

// Invertible n x n matrices over F_p by exhaustive elimination.
inline std::uint64_t invertible_count(unsigned n, std::uint64_t p) {
  const std::uint64_t total = ipow(p, n * n);
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
    std::uint64_t c = code;
    for (auto& row : m) {
      for (auto& x : row) {
        x = c % p;
        c /= p;
      }
    }
    unsigned rank = 0;
    for (unsigned col = 0; col < n && rank < n; ++col) {
      unsigned sel = rank;
      while (sel < n && m[sel][col] == 0) ++sel;
      if (sel == n) continue;
      std::swap(m[sel], m[rank]);
      std::uint64_t inv = 1;
      while (m[rank][col] * inv % p != 1) ++inv;
      for (unsigned r = 0; r < n; ++r) {
        if (r == rank || m[r][col] == 0) continue;
        const std::uint64_t f = m[r][col] * inv % p;
        for (unsigned j = 0; j < n; ++j) m[r][j] = (m[r][j] + (p - f) * m[rank][j]) % p;
      }
      ++rank;
    }
    if (rank == n) ++count;
  }
  return count;
}

}  // namespace ref

#endif  // RINGCOVER_TESTS_REFERENCE_HPP
