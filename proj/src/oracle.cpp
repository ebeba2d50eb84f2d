#include "ringcover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>

#include "ringcover/errors.hpp"

namespace ringcover::oracle {

// --- Bitset ----------------------------------------------------------------------

void Bitset::set_all() {
  std::fill(w_.begin(), w_.end(), ~std::uint64_t{0});
  if (n_ & 63) w_.back() = (std::uint64_t{1} << (n_ & 63)) - 1;
}

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::none() const {
  return std::all_of(w_.begin(), w_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Bitset::and_count(const Bitset& o) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
  return c;
}

bool Bitset::is_subset_of(const Bitset& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i] & ~o.w_[i]) return false;
  }
  return true;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

std::size_t Bitset::find_first() const { return find_next(0); }

std::size_t Bitset::find_next(std::size_t i) const {
  if (i >= n_) return n_;
  std::size_t wi = i >> 6;
  std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (i & 63));
  while (true) {
    if (w) return std::min(n_, (wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
    if (++wi >= w_.size()) return n_;
    w = w_[wi];
  }
}

// --- helpers -------------------------------------------------------------------------

namespace {

using linalg::Echelon;

std::size_t lead(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i]) return i;
  }
  return v.size();
}

// Reduces v against RREF rows (pivots given) and reports whether it vanished.
bool reduces_to_zero(Vec v, const std::vector<Vec>& rows, const std::vector<std::size_t>& pivots, std::uint32_t p) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::uint32_t f = v[pivots[r]];
    if (!f) continue;
    const std::uint32_t nf = p - f;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (rows[r][i]) v[i] = static_cast<std::uint32_t>((v[i] + static_cast<std::uint64_t>(nf) * rows[r][i]) % p);
    }
  }
  return linalg::is_zero(v);
}

// Bottom-up RREF enumeration of multiplicatively closed subspaces. Rows are
// added in order of decreasing pivot column; at column c the rows chosen so
// far span V ∩ F^{[c,m)}, so a basis product supported in [c,m) that is not in
// their span rules out every completion.
class SubringEnumerator {
 public:
  SubringEnumerator(const FiniteRing& r, bool unital_only) : r_(r), unital_only_(unital_only), m_(r.dim()) {}

  std::vector<SubringBasis> run() {
    std::vector<Vec> rows;
    std::vector<std::size_t> pivots;
    std::vector<bool> is_pivot(m_, false);
    std::vector<Vec> pending;
    rec(static_cast<long>(m_) - 1, rows, pivots, is_pivot, pending);
    return std::move(out_);
  }

 private:
  void rec(long c, std::vector<Vec>& rows, std::vector<std::size_t>& pivots, std::vector<bool>& is_pivot,
           const std::vector<Vec>& pending) {
    if (c < 0) {
      emit(rows, pivots);
      return;
    }
    const auto col = static_cast<std::size_t>(c);
    // Column c is not a pivot: nothing in V can lead at c.
    bool ok = std::none_of(pending.begin(), pending.end(), [&](const Vec& v) { return lead(v) == col; });
    if (ok) rec(c - 1, rows, pivots, is_pivot, pending);

    // Column c is a pivot: free entries at non-pivot columns right of c.
    std::vector<std::size_t> free_cols;
    for (std::size_t j = col + 1; j < m_; ++j) {
      if (!is_pivot[j]) free_cols.push_back(j);
    }
    const std::uint32_t p = r_.p();
    std::vector<std::uint32_t> digits(free_cols.size(), 0);
    Vec row(m_, 0);
    row[col] = 1;
    is_pivot[col] = true;
    while (true) {
      extend(c, row, rows, pivots, is_pivot, pending);
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == p) {
        digits[k] = 0;
        row[free_cols[k]] = 0;
        ++k;
      }
      if (k == digits.size()) break;
      row[free_cols[k]] = digits[k];
    }
    is_pivot[col] = false;
  }

  void extend(long c, const Vec& row, std::vector<Vec>& rows, std::vector<std::size_t>& pivots,
              std::vector<bool>& is_pivot, const std::vector<Vec>& pending) {
    const auto col = static_cast<std::size_t>(c);
    std::vector<Vec> next;
    next.reserve(pending.size() + 2 * rows.size() + 1);
    next.push_back(r_.mul(row, row));
    for (const auto& w : rows) {
      next.push_back(r_.mul(row, w));
      next.push_back(r_.mul(w, row));
    }
    next.insert(next.end(), pending.begin(), pending.end());

    rows.push_back(row);
    pivots.push_back(col);
    std::vector<Vec> still;
    bool ok = true;
    for (auto& v : next) {
      const std::size_t l = lead(v);
      if (l == m_) continue;
      if (l < col) {
        still.push_back(std::move(v));
      } else if (!reduces_to_zero(v, rows, pivots, r_.p())) {
        ok = false;
        break;
      }
    }
    if (ok) rec(c - 1, rows, pivots, is_pivot, still);
    rows.pop_back();
    pivots.pop_back();
  }

  void emit(const std::vector<Vec>& rows, const std::vector<std::size_t>& pivots) {
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
    SubringBasis s;
    s.basis.p = r_.p();
    s.basis.width = m_;
    for (auto i : order) {
      s.basis.rows.push_back(rows[i]);
      s.basis.pivots.push_back(pivots[i]);
    }
    s.unital = r_.has_unity() && s.basis.contains(*r_.unity());
    if (unital_only_ && !s.unital) return;
    out_.push_back(std::move(s));
  }

  const FiniteRing& r_;
  bool unital_only_;
  std::size_t m_;
  std::vector<SubringBasis> out_;
};

Bitset element_set(const FiniteRing& r, const Echelon& e) {
  Bitset b(static_cast<std::size_t>(r.order()));
  for (auto x : span_ranks(r, e)) b.set(static_cast<std::size_t>(x));
  return b;
}

CoverCertificate check_members(const FiniteRing& r, std::vector<SubringBasis> members) {
  CoverCertificate c;
  c.size = members.size();
  c.closed = true;
  c.proper = true;
  const std::size_t n = static_cast<std::size_t>(r.order());
  std::vector<std::uint8_t> mult(n, 0);
  std::vector<Bitset> sets;
  for (const auto& m : members) {
    c.closed = c.closed && is_closed(r, m.basis);
    c.proper = c.proper && m.basis.rank() < r.dim();
    sets.push_back(element_set(r, m.basis));
    for (std::size_t x = sets.back().find_first(); x < n; x = sets.back().find_next(x + 1)) {
      if (mult[x] < 2) ++mult[x];
    }
  }
  c.proper = c.proper && c.closed;
  c.covering = !members.empty() && std::all_of(mult.begin(), mult.end(), [](std::uint8_t k) { return k > 0; });
  c.irredundant = !members.empty();
  for (const auto& s : sets) {
    bool has_private = false;
    for (std::size_t x = s.find_first(); x < n && !has_private; x = s.find_next(x + 1)) has_private = mult[x] == 1;
    c.irredundant = c.irredundant && has_private;
  }
  c.members = std::move(members);
  return c;
}

// Exact cover search over a fixed family.
class CoverSolver {
 public:
  CoverSolver(std::size_t universe, const std::vector<Bitset>& sets, std::vector<std::size_t> alive)
      : n_(universe), sets_(sets), alive_(std::move(alive)), incidence_(universe) {
    for (auto s : alive_) {
      for (std::size_t x = sets_[s].find_first(); x < n_; x = sets_[s].find_next(x + 1)) incidence_[x].push_back(s);
    }
  }

  std::vector<std::size_t> solve() {
    greedy();
    Bitset uncovered(n_);
    uncovered.set_all();
    std::vector<std::size_t> chosen;
    dfs(uncovered, chosen);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void greedy() {
    Bitset uncovered(n_);
    uncovered.set_all();
    best_.clear();
    while (!uncovered.none()) {
      std::size_t pick = alive_.front(), cov = 0;
      for (auto s : alive_) {
        std::size_t k = sets_[s].and_count(uncovered);
        if (k > cov) {
          cov = k;
          pick = s;
        }
      }
      best_.push_back(pick);
      uncovered.subtract(sets_[pick]);
    }
  }

  void dfs(const Bitset& uncovered, std::vector<std::size_t>& chosen) {
    if (uncovered.none()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + 1 >= best_.size()) return;
    const std::size_t left = uncovered.count();
    std::size_t maxcov = 0;
    for (auto s : alive_) maxcov = std::max(maxcov, sets_[s].and_count(uncovered));
    if (chosen.size() + (left + maxcov - 1) / maxcov >= best_.size()) return;

    std::size_t elem = n_, fewest = SIZE_MAX;
    for (std::size_t x = uncovered.find_first(); x < n_; x = uncovered.find_next(x + 1)) {
      if (incidence_[x].size() < fewest) {
        fewest = incidence_[x].size();
        elem = x;
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> branches;  // (-coverage, set)
    for (auto s : incidence_[elem]) branches.emplace_back(SIZE_MAX - sets_[s].and_count(uncovered), s);
    std::sort(branches.begin(), branches.end());
    for (const auto& [neg_cov, s] : branches) {
      Bitset next = uncovered;
      next.subtract(sets_[s]);
      chosen.push_back(s);
      dfs(next, chosen);
      chosen.pop_back();
      if (chosen.size() + 1 >= best_.size()) return;
    }
  }

  std::size_t n_;
  const std::vector<Bitset>& sets_;
  std::vector<std::size_t> alive_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::vector<std::size_t> best_;
};

}  // namespace

// --- public API ------------------------------------------------------------------------

bool canonical_less(const SubringBasis& a, const SubringBasis& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.basis.rows < b.basis.rows;
}

double resolve_cap(double requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SIGMA_ORACLE_CAP")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return kDefaultCap;
}

double galois_number(std::size_t m, std::uint64_t p) {
  // Row k of the q-Pascal triangle, [m,k]_p = [m-1,k-1]_p + p^k [m-1,k]_p.
  std::vector<double> row{1.0};
  for (std::size_t n = 1; n <= m; ++n) {
    std::vector<double> next(n + 1, 0.0);
    double pk = 1.0;
    for (std::size_t k = 0; k <= n; ++k) {
      double a = k > 0 ? row[k - 1] : 0.0;
      double b = k < n ? row[k] : 0.0;
      next[k] = a + pk * b;
      pk *= static_cast<double>(p);
    }
    row = std::move(next);
  }
  double total = 0;
  for (double v : row) total += v;
  return total;
}

namespace {

std::string count_str(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::vector<SubringBasis> enumerate_subrings(const FiniteRing& r, bool unital_only, const OracleOptions& opts) {
  const double cap = resolve_cap(opts.cap);
  const double g = galois_number(r.dim(), r.p());
  if (g > cap) {
    throw ComplexityCap("subspace lattice of F_" + std::to_string(r.p()) + "^" + std::to_string(r.dim()) + " has about " +
                            count_str(g) + " members, above the cap of " + count_str(cap),
                        g);
  }
  auto out = SubringEnumerator(r, unital_only).run();
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<SubringBasis> maximal_subrings(const FiniteRing& r, bool unital_only, const OracleOptions& opts) {
  auto all = enumerate_subrings(r, unital_only, opts);
  std::vector<SubringBasis> maximal;
  // Descending dimension: a proper subring is maximal iff no maximal subring
  // of larger dimension contains it.
  for (auto it = all.rbegin(); it != all.rend(); ++it) {
    if (it->dim() == r.dim()) continue;
    bool contained = std::any_of(maximal.begin(), maximal.end(), [&](const SubringBasis& m) {
      if (m.dim() <= it->dim()) return false;
      return std::all_of(it->basis.rows.begin(), it->basis.rows.end(),
                         [&](const Vec& v) { return m.basis.contains(v); });
    });
    if (!contained) maximal.push_back(*it);
  }
  std::sort(maximal.begin(), maximal.end(), canonical_less);
  return maximal;
}

std::vector<std::uint64_t> span_ranks(const FiniteRing& r, const Echelon& e) {
  const std::uint32_t p = r.p();
  const std::size_t k = e.rank();
  std::vector<std::uint64_t> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= p;
  out.reserve(total);
  Vec cur(r.dim(), 0);
  std::vector<std::uint32_t> digits(k, 0);
  while (true) {
    out.push_back(r.rank(cur));
    std::size_t i = 0;
    for (; i < k; ++i) {
      for (std::size_t j = 0; j < cur.size(); ++j) cur[j] = (cur[j] + e.rows[i][j]) % p;
      if (++digits[i] < p) break;
      digits[i] = 0;  // p additions brought cur back; carry
    }
    if (i == k) break;
  }
  return out;
}

std::optional<std::vector<std::size_t>> min_cover(std::size_t universe, const std::vector<Bitset>& sets) {
  if (universe == 0) return std::vector<std::size_t>{};
  Bitset all(universe);
  for (const auto& s : sets) {
    if (s.size() != universe) throw std::invalid_argument("set size does not match universe");
    all |= s;
  }
  if (all.count() != universe) return std::nullopt;
  std::vector<std::size_t> alive;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
      if (j == i || !sets[i].is_subset_of(sets[j])) continue;
      dominated = !(sets[i] == sets[j]) || j < i;
    }
    if (!dominated) alive.push_back(i);
  }
  return CoverSolver(universe, sets, std::move(alive)).solve();
}

BruteResult sigma_brute(const FiniteRing& r, bool unital, const OracleOptions& opts) {
  if (unital && !r.has_unity()) throw Unsupported("unital covering number requested for a ring without unity");
  BruteResult res;
  auto all = enumerate_subrings(r, unital, opts);
  res.subring_count = all.size();
  auto maximal = maximal_subrings(r, unital, opts);
  res.maximal_count = maximal.size();

  const std::size_t n = static_cast<std::size_t>(r.order());
  // Element -> universe index.
  std::vector<std::size_t> cls(n);
  std::size_t universe = 0;
  if (opts.reduce_universe) {
    std::map<std::vector<Vec>, std::size_t> ids;
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<Vec> gens{r.unrank(x)};
      if (unital) gens.push_back(*r.unity());
      auto key = closure(r, gens).rows;
      auto [it, fresh] = ids.emplace(std::move(key), universe);
      if (fresh) ++universe;
      cls[x] = it->second;
    }
  } else {
    for (std::size_t x = 0; x < n; ++x) cls[x] = x;
    universe = n;
  }
  res.universe_size = universe;

  std::vector<Bitset> sets;
  for (const auto& m : maximal) {
    Bitset b(universe);
    for (auto x : span_ranks(r, m.basis)) b.set(cls[x]);
    sets.push_back(std::move(b));
  }
  auto picked = min_cover(universe, sets);
  if (!picked) {
    res.sigma = arith::ExtNat::infinity();
    return res;
  }
  std::vector<SubringBasis> members;
  for (auto i : *picked) members.push_back(maximal[i]);
  auto cert = check_members(r, std::move(members));
  if (!cert.closed || !cert.proper || !cert.covering) {
    throw InvariantViolation("optimal cover failed re-verification");
  }
  res.sigma = arith::ExtNat(static_cast<std::uint64_t>(cert.size));
  res.certificate = std::move(cert);
  return res;
}

CoverCertificate verify_certificate(const FiniteRing& r, const std::vector<std::vector<Vec>>& members) {
  std::vector<SubringBasis> bases;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const auto& v : members[i]) {
      if (!r.valid(v)) {
        throw MalformedBasis("member " + std::to_string(i) + " has a vector that is not an element of the ring");
      }
    }
    SubringBasis s;
    s.basis = linalg::rref(members[i], r.p(), r.dim());
    s.unital = r.has_unity() && s.basis.contains(*r.unity());
    bases.push_back(std::move(s));
  }
  return check_members(r, std::move(bases));
}

}  // namespace ringcover::oracle
