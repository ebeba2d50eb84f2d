#include <doctest.h>

#include <algorithm>
#include <random>

#include "ringcover/linalg_fp.hpp"

using namespace ringcover::linalg;

namespace {

Vec random_vec(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
  Vec v(n);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
  return v;
}

Vec combine(const std::vector<Vec>& rows, const Vec& c, std::uint32_t p) {
  Vec out(rows.empty() ? 0 : rows[0].size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = static_cast<std::uint32_t>((out[j] + std::uint64_t{c[i]} * rows[i][j]) % p);
  }
  return out;
}

}  // namespace

TEST_CASE("inverse mod p") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 65521u}) {
    for (std::uint32_t a = 1; a < std::min(p, 2000u); ++a) CHECK(std::uint64_t{a} * inv_mod(a, p) % p == 1);
  }
  CHECK_THROWS(inv_mod(0, 5));
}

TEST_CASE("echelon form is canonical") {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 6;
      std::vector<Vec> gens;
      for (int k = 0; k < 4; ++k) gens.push_back(random_vec(rng, n, p));
      Echelon a = rref(gens, p, n);
      // same span from shuffled generators plus a random combination
      std::vector<Vec> other = gens;
      std::shuffle(other.begin(), other.end(), rng);
      other.push_back(combine(gens, random_vec(rng, gens.size(), p), p));
      Echelon b = rref(other, p, n);
      CHECK(a == b);
      for (const auto& g : gens) CHECK(a.contains(g));
      for (std::size_t r = 0; r < a.rank(); ++r) {
        CHECK(a.rows[r][a.pivots[r]] == 1);
        for (std::size_t s = 0; s < a.rank(); ++s) {
          if (s != r) CHECK(a.rows[s][a.pivots[r]] == 0);
        }
      }
      CHECK(std::is_sorted(a.pivots.begin(), a.pivots.end()));
    }
  }
}

TEST_CASE("insert reports membership") {
  Echelon e = rref({}, 3, 3);
  CHECK(e.insert({1, 2, 0}));
  CHECK_FALSE(e.insert({2, 1, 0}));
  CHECK(e.insert({0, 0, 1}));
  CHECK(e.rank() == 2);
  CHECK(is_zero(e.reduce({1, 2, 2})));
  CHECK_FALSE(e.contains({0, 1, 0}));
}

TEST_CASE("solve and kernel") {
  std::mt19937_64 rng(2);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
      std::vector<Vec> A;
      for (std::size_t i = 0; i < rows; ++i) A.push_back(random_vec(rng, cols, p));
      const Vec x0 = random_vec(rng, cols, p);
      Vec b(rows, 0);
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) b[i] = static_cast<std::uint32_t>((b[i] + std::uint64_t{A[i][j]} * x0[j]) % p);
      }
      auto x = solve(A, b, p);
      REQUIRE(x);
      for (std::size_t i = 0; i < rows; ++i) {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < cols; ++j) s += std::uint64_t{A[i][j]} * (*x)[j];
        CHECK(s % p == b[i]);
      }
      // kernel of the map e_j -> column j of A
      std::vector<Vec> images(cols, Vec(rows));
      for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < rows; ++i) images[j][i] = A[i][j];
      }
      auto ker = kernel(images, p);
      CHECK(ker.size() + rank(A, p, cols) == cols);
      for (const auto& c : ker) CHECK(is_zero(combine(images, c, p)));
    }
  }
  CHECK_FALSE(solve({{1, 0}, {1, 0}}, {0, 1}, 2));
}
