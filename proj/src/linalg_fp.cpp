#include "ringcover/linalg_fp.hpp"

#include <algorithm>
#include <stdexcept>

namespace ringcover::linalg {

namespace {

std::uint32_t mulm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

// row -= f * other
void axpy(Vec& row, std::uint32_t f, const Vec& other, std::uint32_t p) {
  if (f == 0) return;
  const std::uint32_t nf = p - f;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (other[i]) row[i] = static_cast<std::uint32_t>((row[i] + static_cast<std::uint64_t>(nf) * other[i]) % p);
  }
}

}  // namespace

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  std::uint64_t r = 1, b = a % p;
  std::uint32_t e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t c) { return c == 0; });
}

Vec Echelon::reduce(Vec v) const {
  for (std::size_t r = 0; r < rows.size(); ++r) axpy(v, v[pivots[r]], rows[r], p);
  return v;
}

bool Echelon::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Echelon::insert(const Vec& v) {
  Vec w = reduce(v);
  auto it = std::find_if(w.begin(), w.end(), [](std::uint32_t c) { return c != 0; });
  if (it == w.end()) return false;
  const std::size_t piv = static_cast<std::size_t>(it - w.begin());
  const std::uint32_t s = inv_mod(*it, p);
  for (auto& c : w) c = mulm(c, s, p);
  for (auto& row : rows) axpy(row, row[piv], w, p);
  auto pos = std::lower_bound(pivots.begin(), pivots.end(), piv);
  const auto idx = pos - pivots.begin();
  pivots.insert(pos, piv);
  rows.insert(rows.begin() + idx, std::move(w));
  return true;
}

Echelon rref(const std::vector<Vec>& vectors, std::uint32_t p, std::size_t width) {
  Echelon e;
  e.p = p;
  e.width = width;
  for (const auto& v : vectors) {
    if (v.size() != width) throw std::invalid_argument("vector length does not match width");
    e.insert(v);
  }
  return e;
}

std::size_t rank(const std::vector<Vec>& rows, std::uint32_t p, std::size_t width) {
  return rref(rows, p, width).rank();
}

std::vector<Vec> kernel(const std::vector<Vec>& images, std::uint32_t p) {
  const std::size_t k = images.size();
  const std::size_t w = k == 0 ? 0 : images.front().size();
  std::vector<Vec> aug;
  aug.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    Vec row(images[i]);
    row.resize(w + k, 0);
    row[w + i] = 1;
    aug.push_back(std::move(row));
  }
  Echelon e = rref(aug, p, w + k);
  std::vector<Vec> out;
  for (std::size_t r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] >= w) out.emplace_back(e.rows[r].begin() + static_cast<std::ptrdiff_t>(w), e.rows[r].end());
  }
  return out;
}

std::optional<Vec> solve(const std::vector<Vec>& A, const Vec& b, std::uint32_t p) {
  if (A.size() != b.size()) throw std::invalid_argument("solve: row count mismatch");
  const std::size_t n = A.empty() ? 0 : A.front().size();
  // Gaussian elimination on the augmented matrix.
  std::vector<Vec> m;
  m.reserve(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    Vec row(A[i]);
    row.push_back(b[i] % p);
    m.push_back(std::move(row));
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.size(); ++c) {
    std::size_t sel = r;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    const std::uint32_t s = inv_mod(m[r][c], p);
    for (auto& x : m[r]) x = mulm(x, s, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != r) axpy(m[i], m[i][c], m[r], p);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m.size(); ++i) {
    if (m[i][n] != 0) return std::nullopt;
  }
  Vec x(n, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = m[i][n];
  return x;
}

}  // namespace ringcover::linalg
