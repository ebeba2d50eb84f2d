#include "ringcover/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>

#include "ringcover/errors.hpp"
#include "ringcover/formulas.hpp"

namespace ringcover::sieve {

namespace {

constexpr std::uint64_t kMaxBitsetBytes = std::uint64_t{1} << 30;

u128 sat_add(u128 a, u128 b) { return a > kSaturated - b ? kSaturated : a + b; }
u128 sat_mul(u128 a, u128 b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}
u128 sat_pow(u128 b, std::uint64_t e) {
  u128 r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    r = sat_mul(r, b);
    if (r == kSaturated) return r;
  }
  return r;
}

// Gaussian binomial [n, k]_q by the q-Pascal rule; saturating.
u128 sat_qbinom(unsigned n, unsigned k, std::uint64_t q) {
  if (k > n) return 0;
  std::vector<u128> row(k + 1, 0);
  row[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned j = std::min(m, k); j >= 1; --j) {
      row[j] = sat_add(row[j - 1], sat_mul(sat_pow(q, j), row[j]));
    }
  }
  return row[k];
}

double log2d(std::uint64_t N) { return std::log2(static_cast<double>(std::max<std::uint64_t>(N, 2))); }

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct FamilyOutput {
  std::vector<std::uint64_t> values;  // unsorted, may repeat
  std::vector<std::pair<std::uint64_t, RingFamily>> tuples;
};

void check_memory(std::uint64_t N) {
  if ((N / 8) * 3 > kMaxBitsetBytes) {
    throw MemoryCap("sieving to " + std::to_string(N) + " needs more than " + std::to_string(kMaxBitsetBytes) +
                    " bytes of bit arrays");
  }
}

// F1: {q + 1 : q prime power, q <= N - 1} as a dense bit array.
std::vector<std::uint64_t> family1_bits(std::uint64_t N, std::vector<std::pair<std::uint64_t, RingFamily>>* tuples) {
  std::vector<std::uint64_t> bits(N / 64 + 1, 0);
  if (N < 3) return bits;
  arith::PrimeSieve ps(N - 1);
  auto mark = [&](std::uint64_t p) {
    unsigned d = 1;
    for (u128 q = p; q + 1 <= N; q *= p, ++d) {
      const auto m = static_cast<std::uint64_t>(q + 1);
      bits[m >> 6] |= std::uint64_t{1} << (m & 63);
      if (tuples) tuples->emplace_back(m, Idealization{arith::PrimePower(p, d), 2});
    }
  };
  mark(2);
  for (std::uint64_t p = 3; p <= N - 1; p += 2) {
    if (ps.is_prime(p)) mark(p);
  }
  return bits;
}

FamilyOutput family2(std::uint64_t N, const std::vector<arith::PrimePower>& pps, bool tuples) {
  FamilyOutput out;
  const std::uint64_t cap = field_sum_q_cap(N);
  for (const auto& q : pps) {
    if (q.q() > cap) break;
    const u128 v = fast_field_sum(q.p(), q.d());
    if (v > N) continue;
    out.values.push_back(static_cast<std::uint64_t>(v));
    if (tuples) {
      out.tuples.emplace_back(static_cast<std::uint64_t>(v), FieldSum{q, arith::tau(q).convert_to<unsigned>()});
    }
  }
  return out;
}

FamilyOutput family3(std::uint64_t N, const std::vector<arith::PrimePower>& pps, bool tuples) {
  FamilyOutput out;
  for (unsigned n = 2; n <= matrix_n_limit(N); ++n) {
    if (!matrix_n_admissible(n, N)) continue;
    const std::uint64_t lim = matrix_q_limit(n, N);
    for (const auto& q : pps) {
      if (q.q() > lim) break;
      const u128 v = fast_matrix(n, q.value());
      if (v > N) continue;
      out.values.push_back(static_cast<std::uint64_t>(v));
      if (tuples) out.tuples.emplace_back(static_cast<std::uint64_t>(v), MatrixRing{n, q});
    }
  }
  return out;
}

FamilyOutput family4(std::uint64_t N, const std::vector<arith::PrimePower>& pps, bool tuples) {
  FamilyOutput out;
  for (unsigned n = 3; n <= a_ring_n_limit(N); ++n) {
    for (unsigned d = 1; a_ring_d_admissible(n, d); ++d) {
      for (const auto& q1 : pps) {
        if (sat_pow(q1.value(), std::uint64_t{n} * d) > N) break;
        if (n == 3 && q1.q() == 2) continue;
        const u128 v = fast_a_ring(n, q1.value(), d);
        if (v > N) continue;
        out.values.push_back(static_cast<std::uint64_t>(v));
        if (tuples) {
          out.tuples.emplace_back(static_cast<std::uint64_t>(v),
                                  ARing{n, q1, arith::PrimePower(q1.p(), q1.d() * d)});
        }
      }
    }
  }
  return out;
}

// Prime powers needed by the sparse families.
std::vector<arith::PrimePower> sparse_prime_powers(std::uint64_t N) {
  return arith::prime_powers_up_to(std::max(field_sum_q_cap(N), matrix_q_limit(2, N)));
}

}  // namespace

std::string to_string(Family f) { return "F" + std::to_string(static_cast<int>(f) + 1); }

std::optional<Family> parse_family(const std::string& s) {
  if (s.size() != 2 || std::toupper(static_cast<unsigned char>(s[0])) != 'F') return std::nullopt;
  if (s[1] < '1' || s[1] > '4') return std::nullopt;
  return static_cast<Family>(s[1] - '1');
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SIGMA_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// --- cutoffs ---------------------------------------------------------------------

std::uint64_t field_sum_q_cap(std::uint64_t N) {
  // For q > 256, |Irr(p,d)| >= q/(2d) and d <= log2 q bound the field-sum
  // value below by (q / (2 log2 q))^2 / 2, which increases with q.
  auto bound = [](long double q) {
    long double x = q / (2.0L * std::log2(q));
    return x * x / 2.0L;
  };
  std::uint64_t lo = 4, hi = 8;
  while (bound(static_cast<long double>(hi)) <= static_cast<long double>(N)) hi *= 2;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (bound(static_cast<long double>(mid)) > static_cast<long double>(N)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return std::max<std::uint64_t>(256, lo + 1);
}

unsigned matrix_n_limit(std::uint64_t N) {
  const double budget = log2d(N) + 1;
  unsigned n = 2;
  while ((n + 1) * ((n + 1) / 2.0 - 1) <= budget) ++n;
  return n;
}

bool matrix_n_admissible(unsigned n, std::uint64_t N) {
  if (n < 2) return false;
  const unsigned a = static_cast<unsigned>(arith::smallest_prime_divisor(n));
  return static_cast<double>(n) * (n - n / a - 1) <= log2d(N) + 1;
}

std::uint64_t matrix_q_limit(unsigned n, std::uint64_t N) {
  if (n < 2) throw std::invalid_argument("matrix_q_limit needs n >= 2");
  // Every product factor q^n - q^k is at least q^(n-1)(q-1); the result is
  // the largest q with q^(n-1)(q-1)/n <= N.
  auto lower = [&](std::uint64_t q) { return sat_mul(sat_pow(q, n - 1), q - 1); };
  const u128 budget = static_cast<u128>(N) * n;
  std::uint64_t lo = 2, hi = 2;
  while (lower(hi) <= budget) hi *= 2;
  while (lo + 1 < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (lower(mid) <= budget) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

unsigned a_ring_n_limit(std::uint64_t N) {
  return N < 2 ? 0 : static_cast<unsigned>(63 - std::countl_zero(N));
}

bool a_ring_d_admissible(unsigned n, unsigned d) {
  if (n < 3 || d < 1) return false;
  const unsigned a = static_cast<unsigned>(arith::smallest_prime_divisor(n));
  return d < n - n / a;
}

// --- fast evaluators -------------------------------------------------------------

u128 fast_field_sum(std::uint64_t p, unsigned d) {
  u128 tau;
  unsigned nu;
  if (d == 1) {
    tau = p;
    nu = 1;
  } else {
    if (sat_pow(p, d) == kSaturated) return kSaturated;
    __int128 sum = 0;
    for (auto e : arith::divisors(d)) {
      int mu = arith::mobius(e);
      if (mu == 0) continue;
      const auto term = static_cast<__int128>(sat_pow(p, d / e));
      sum += mu > 0 ? term : -term;
    }
    tau = static_cast<u128>(sum / d) + 1;
    nu = arith::omega(d);
  }
  const u128 pairs = (tau % 2 == 0) ? sat_mul(tau / 2, tau - 1) : sat_mul(tau, (tau - 1) / 2);
  return sat_add(sat_mul(tau, nu), sat_mul(d, pairs));
}

u128 fast_matrix(unsigned n, std::uint64_t q) {
  if (n < 2) throw std::invalid_argument("fast_matrix needs n >= 2");
  const unsigned a = static_cast<unsigned>(arith::smallest_prime_divisor(n));
  const u128 qn = sat_pow(q, n);
  if (qn == kSaturated) return kSaturated;
  u128 prod = 1;
  for (unsigned k = 1; k < n; ++k) {
    if (k % a == 0) continue;
    prod = sat_mul(prod, qn - sat_pow(q, k));
    if (prod == kSaturated) return kSaturated;
  }
  if (prod % a != 0) throw InvariantViolation("matrix product term not divisible by a");
  u128 v = prod / a;
  for (unsigned k = 1; k <= n / 2; ++k) {
    if (k % a != 0) v = sat_add(v, sat_qbinom(n, k, q));
  }
  return v;
}

u128 fast_a_ring(unsigned n, std::uint64_t q1, unsigned d) {
  const u128 qn = sat_pow(q1, std::uint64_t{n} * d);
  return sat_add(sat_add(qn, sat_qbinom(n, d, q1)), arith::omega(d));
}

// --- SievedSet -------------------------------------------------------------------

std::uint64_t SievedSet::count() const {
  std::uint64_t c = 0;
  for (auto w : bits) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

std::vector<std::uint64_t> SievedSet::values() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m <= N; ++m) {
    if (contains(m)) out.push_back(m);
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> SievedSet::intervals() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t m = 0; m <= N; ++m) {
    if (!contains(m)) continue;
    if (!out.empty() && out.back().second + 1 == m) {
      out.back().second = m;
    } else {
      out.emplace_back(m, m);
    }
  }
  return out;
}

// --- sieving -----------------------------------------------------------------------

SievedSet enumerate_covering_numbers(std::uint64_t N, const SieveOptions& opts) {
  check_memory(N);
  SievedSet s;
  s.N = N;
  s.bits.assign(N / 64 + 1, 0);
  if (N < 3) return s;

  const auto pps = sparse_prime_powers(N);
  std::vector<std::pair<std::uint64_t, RingFamily>> t1;
  std::vector<std::uint64_t> f1;
  FamilyOutput f2, f3, f4;
  std::vector<std::function<void()>> tasks{
      [&] { f1 = family1_bits(N, opts.provenance ? &t1 : nullptr); },
      [&] { f2 = family2(N, pps, opts.provenance); },
      [&] { f3 = family3(N, pps, opts.provenance); },
      [&] { f4 = family4(N, pps, opts.provenance); },
  };
  const unsigned threads = std::min<unsigned>(resolve_threads(opts.threads), 4);
  if (threads <= 1) {
    for (auto& t : tasks) t();
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      pool.emplace_back([&, i] {
        try {
          tasks[i]();
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  s.bits = std::move(f1);
  for (auto w : s.bits) s.family_counts[0] += static_cast<std::uint64_t>(std::popcount(w));
  FamilyOutput* sparse[3] = {&f2, &f3, &f4};
  for (int i = 0; i < 3; ++i) {
    auto vals = sorted_unique(std::move(sparse[i]->values));
    s.family_counts[i + 1] = vals.size();
    for (auto m : vals) s.bits[m >> 6] |= std::uint64_t{1} << (m & 63);
  }
  if (opts.provenance) {
    s.provenance.emplace();
    for (auto& [m, f] : t1) (*s.provenance)[m].push_back(std::move(f));
    for (int i = 0; i < 3; ++i) {
      for (auto& [m, f] : sparse[i]->tuples) (*s.provenance)[m].push_back(std::move(f));
    }
  }
  return s;
}

std::vector<std::uint64_t> family_values(Family f, std::uint64_t N) {
  check_memory(N);
  if (N < 3) return {};
  if (f == Family::F1) {
    auto bits = family1_bits(N, nullptr);
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m <= N; ++m) {
      if (bits[m >> 6] >> (m & 63) & 1) out.push_back(m);
    }
    return out;
  }
  const auto pps = sparse_prime_powers(N);
  FamilyOutput o = f == Family::F2 ? family2(N, pps, false) : f == Family::F3 ? family3(N, pps, false)
                                                                             : family4(N, pps, false);
  return sorted_unique(std::move(o.values));
}

Membership member(std::uint64_t m) {
  Membership out;
  out.witnesses = formulas::witnesses(m);
  out.member = !out.witnesses.empty();
  return out;
}

std::vector<std::uint64_t> gaps(std::uint64_t N, const SieveOptions& opts) {
  auto s = enumerate_covering_numbers(N, opts);
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 3; m <= N; ++m) {
    if (!s.contains(m)) out.push_back(m);
  }
  return out;
}

DensityReport density_report(std::uint64_t N, const SieveOptions& opts) {
  if (N < 5) throw std::invalid_argument("density_report needs N >= 5");
  DensityReport r;
  r.N = N;
  r.count = enumerate_covering_numbers(N, opts).count();
  const double l = std::log2(static_cast<double>(N));
  r.lower = static_cast<double>(N) / l;
  r.upper = 128.0 * static_cast<double>(N) / l;
  r.pass = r.lower < static_cast<double>(r.count) && static_cast<double>(r.count) < r.upper;
  r.ratio = static_cast<double>(r.count) / static_cast<double>(N);
  return r;
}

}  // namespace ringcover::sieve
