#ifndef RINGCOVER_ORACLE_HPP
#define RINGCOVER_ORACLE_HPP

// Brute-force covering numbers of small explicit rings: enumerate every
// subring, keep the maximal ones, solve minimum set cover exactly.

#include <cstdint>
#include <optional>
#include <vector>

#include "ringcover/arith.hpp"
#include "ringcover/finite_ring.hpp"

namespace ringcover::oracle {

/// Fixed-size bit array with the word-parallel operations the cover solver needs.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return n_; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return w_[i >> 6] >> (i & 63) & 1; }
  void set_all();
  std::size_t count() const;
  bool none() const;
  /// |this & other|
  std::size_t and_count(const Bitset& other) const;
  bool is_subset_of(const Bitset& other) const;
  Bitset& operator|=(const Bitset& other);
  /// this &= ~other
  Bitset& subtract(const Bitset& other);
  /// Index of the lowest set bit, or size() if none.
  std::size_t find_first() const;
  /// Lowest set bit at index >= i, or size() if none.
  std::size_t find_next(std::size_t i) const;

  friend bool operator==(const Bitset& a, const Bitset& b) { return a.n_ == b.n_ && a.w_ == b.w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct SubringBasis {
  linalg::Echelon basis;
  /// Contains the unity of the ambient ring.
  bool unital = false;
  std::size_t dim() const noexcept { return basis.rank(); }
  friend bool operator==(const SubringBasis& a, const SubringBasis& b) { return a.basis == b.basis; }
};

/// Canonical order: ascending dimension, then rows compared lexicographically.
bool canonical_less(const SubringBasis& a, const SubringBasis& b);

struct CoverCertificate {
  std::vector<SubringBasis> members;
  bool closed = false;       // every member is closed under multiplication
  bool proper = false;       // every member is a proper subring
  bool covering = false;     // union of members is the whole ring
  bool irredundant = false;  // every member has an element no other member has
  std::size_t size = 0;
};

struct OracleOptions {
  /// Budget on the number of subspaces (Galois number). 0 reads
  /// SIGMA_ORACLE_CAP, falling back to kDefaultCap.
  double cap = 0;
  /// Restrict the set-cover universe to one element per cyclic subring.
  bool reduce_universe = true;
};

inline constexpr double kDefaultCap = 1e6;

/// Effective cap for `requested` (0 = environment or default).
double resolve_cap(double requested);

/// Number of subspaces of F_p^m.
double galois_number(std::size_t m, std::uint64_t p);

/// Every subring (including {0} and R) in canonical order; with unital_only,
/// only those containing 1_R. Throws ComplexityCap when the Galois number of R
/// exceeds the cap.
std::vector<SubringBasis> enumerate_subrings(const FiniteRing& r, bool unital_only, const OracleOptions& opts = {});

/// Subrings maximal among proper (unital) subrings, canonical order.
std::vector<SubringBasis> maximal_subrings(const FiniteRing& r, bool unital_only, const OracleOptions& opts = {});

/// Ranks of every element in the span of `e`.
std::vector<std::uint64_t> span_ranks(const FiniteRing& r, const linalg::Echelon& e);

/// Exact minimum set cover of {0..universe-1}. Returns indices into `sets`
/// (ascending), or nullopt when the union of all sets misses an element.
/// Ties among optimal covers are broken by the earliest-index solution found
/// by a deterministic search.
std::optional<std::vector<std::size_t>> min_cover(std::size_t universe, const std::vector<Bitset>& sets);

struct BruteResult {
  arith::ExtNat sigma;
  /// Present when sigma is finite.
  std::optional<CoverCertificate> certificate;
  std::size_t subring_count = 0;
  std::size_t maximal_count = 0;
  std::size_t universe_size = 0;
};

/// sigma(R), or sigma_u(R) when unital is set. Throws Unsupported when unital
/// is requested for a ring without unity, ComplexityCap when over budget.
BruteResult sigma_brute(const FiniteRing& r, bool unital, const OracleOptions& opts = {});

/// Checks a proposed cover given as raw spanning vectors per member. Throws
/// MalformedBasis on vectors of the wrong length or with entries >= p.
CoverCertificate verify_certificate(const FiniteRing& r, const std::vector<std::vector<Vec>>& members);

}  // namespace ringcover::oracle

#endif  // RINGCOVER_ORACLE_HPP
