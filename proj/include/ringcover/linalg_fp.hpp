#ifndef RINGCOVER_LINALG_FP_HPP
#define RINGCOVER_LINALG_FP_HPP

// Dense linear algebra over a prime field F_p (p < 2^32).

#include <cstdint>
#include <optional>
#include <vector>

namespace ringcover::linalg {

using Vec = std::vector<std::uint32_t>;

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

/// Reduced row echelon form of a subspace. Rows are sorted by pivot column,
/// each pivot entry is 1 and pivot columns are zero in every other row, so
/// equal subspaces have identical Echelon values.
struct Echelon {
  std::uint32_t p = 2;
  std::size_t width = 0;
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return rows.size(); }
  /// v minus its projection onto the span (zero iff v is in the span).
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  /// Adds v to the span; returns false when v was already inside.
  bool insert(const Vec& v);

  friend bool operator==(const Echelon& a, const Echelon& b) {
    return a.p == b.p && a.width == b.width && a.rows == b.rows;
  }
};

Echelon rref(const std::vector<Vec>& vectors, std::uint32_t p, std::size_t width);

bool is_zero(const Vec& v);

/// Solves A x = b (A given as rows); any solution, or nullopt.
std::optional<Vec> solve(const std::vector<Vec>& A, const Vec& b, std::uint32_t p);

/// Basis of {c : sum_i c_i images[i] = 0}, where images[i] is the image of
/// the i-th basis vector under a linear map.
std::vector<Vec> kernel(const std::vector<Vec>& images, std::uint32_t p);

/// Rank of the matrix whose rows are given.
std::size_t rank(const std::vector<Vec>& rows, std::uint32_t p, std::size_t width);

}  // namespace ringcover::linalg

#endif  // RINGCOVER_LINALG_FP_HPP
