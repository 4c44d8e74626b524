#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "dimerpf/error.hpp"
#include "dimerpf/matrix.hpp"
#include "dimerpf/parallel.hpp"
#include "dimerpf/poly.hpp"
#include "dimerpf/rational.hpp"

namespace dimerpf {

inline constexpr std::size_t kMaxCombinatorialDimension = 12;

namespace detail {

template <class T>
T pairing_sum(const SkewMatrix<T>& a, std::uint32_t remaining) {
  if (remaining == 0) return T(1);
  int first = __builtin_ctz(remaining);
  std::uint32_t rest = remaining & (remaining - 1);
  T total(0);
  bool positive = true;
  for (std::uint32_t scan = rest; scan != 0; scan &= scan - 1) {
    int j = __builtin_ctz(scan);
    const T& entry = a(first, j);
    bool nonzero;
    if constexpr (std::is_same_v<T, SparsePoly>) nonzero = !entry.is_zero();
    else nonzero = sgn(entry) != 0;
    if (nonzero) {
      T sub = pairing_sum(a, rest & ~(std::uint32_t{1} << j));
      T product = entry * sub;
      if (positive) total += product;
      else total -= product;
    }
    positive = !positive;
  }
  return total;
}

}  // namespace detail

// Signed sum over perfect pairings, expanding along the lowest remaining index.
template <class T>
T pf_combinatorial(const SkewMatrix<T>& a, std::size_t max_dimension = kMaxCombinatorialDimension) {
  std::size_t n = a.size();
  if (n % 2 != 0) fail(ErrorKind::OddDimension, "pfaffian of odd-dimensional matrix");
  if (n > max_dimension || n > 30)
    fail(ErrorKind::TooLarge, "pairing expansion limited to dimension " + std::to_string(max_dimension));
  std::uint32_t all = n == 0 ? 0 : (n == 32 ? ~0u : ((std::uint32_t{1} << n) - 1));
  return detail::pairing_sum(a, all);
}

// Reduces the matrix two rows at a time; each step pivots on entry (k, k+1).
inline Rational pf_elimination(const SkewMatrix<Rational>& input) {
  std::size_t n = input.size();
  if (n % 2 != 0) fail(ErrorKind::OddDimension, "pfaffian of odd-dimensional matrix");
  Matrix<Rational> a = input.dense();
  Rational result = 1;
  std::vector<Rational> u(n), w(n);
  std::vector<char> active(n);
  Rational t;
  for (std::size_t k = 0; k < n; k += 2) {
    std::size_t pivot = n;
    for (std::size_t p = k + 1; p < n; ++p)
      if (sgn(a(k, p)) != 0) {
        pivot = p;
        break;
      }
    if (pivot == n) return 0;
    if (pivot != k + 1) {
      a.swap_rows(k + 1, pivot);
      a.swap_cols(k + 1, pivot);
      result = -result;
    }
    const Rational piv = a(k, k + 1);
    result *= piv;
    for (std::size_t i = k + 2; i < n; ++i) {
      u[i] = a(k, i) / piv;
      w[i] = a(k + 1, i);
      active[i] = sgn(u[i]) != 0 || sgn(w[i]) != 0;
    }
    for (std::size_t i = k + 2; i < n; ++i) {
      if (!active[i]) continue;
      bool u_zero = sgn(u[i]) == 0, w_zero = sgn(w[i]) == 0;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!active[j]) continue;
        if (!w_zero && sgn(u[j]) != 0) {
          t = w[i] * u[j];
          a(i, j) += t;
        }
        if (!u_zero && sgn(w[j]) != 0) {
          t = u[i] * w[j];
          a(i, j) -= t;
        }
        a(j, i) = -a(i, j);
      }
    }
  }
  return result;
}

namespace detail {

inline std::vector<Rational> interpolation_nodes(std::size_t count) {
  std::vector<Rational> nodes;
  for (long k = 0; nodes.size() < count; ++k) {
    if (k == 0) {
      nodes.emplace_back(0);
      continue;
    }
    nodes.emplace_back(k);
    if (nodes.size() < count) nodes.emplace_back(-k);
  }
  return nodes;
}

// Newton form, then expanded into dense coefficients.
inline std::vector<Rational> interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  std::size_t m = xs.size();
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);
  std::vector<Rational> poly{ys[m - 1]};
  for (std::size_t k = m - 1; k-- > 0;) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * xs[k];
    }
    next[0] += ys[k];
    poly = std::move(next);
  }
  while (!poly.empty() && sgn(poly.back()) == 0) poly.pop_back();
  return poly;
}

}  // namespace detail

struct InterpolationStats {
  std::size_t points = 0;
};

// Entries must lie in Q[var]. The degree bound is half the sum of row degrees.
inline SparsePoly pf_univariate(const SkewMatrix<SparsePoly>& a, int var = kVarX, int threads = 1,
                                InterpolationStats* stats = nullptr) {
  std::size_t n = a.size();
  if (n % 2 != 0) fail(ErrorKind::OddDimension, "pfaffian of odd-dimensional matrix");
  long degree_sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int row_degree = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const SparsePoly& e = a(i, j);
      if (!e.is_polynomial_in(var))
        fail(ErrorKind::InvalidArgument, "pf_univariate: entry is not a polynomial in one variable");
      if (!e.is_zero()) row_degree = std::max(row_degree, e.max_twice_degree(var) / 2);
    }
    degree_sum += row_degree;
  }
  std::size_t count = static_cast<std::size_t>(degree_sum / 2) + 1;
  std::vector<Rational> nodes = detail::interpolation_nodes(count);
  std::vector<Rational> values = parallel_map<Rational>(count, threads, [&](std::size_t p) {
    return pf_elimination(a.map([&](const SparsePoly& e) { return e.evaluate(var, nodes[p]); }));
  });
  if (stats) stats->points = count;
  return SparsePoly::from_dense(var, detail::interpolate(nodes, values));
}

// Chooses interpolation when every entry is a polynomial in one variable.
inline SparsePoly pfaffian(const SkewMatrix<SparsePoly>& a, int threads = 1) {
  std::optional<int> var;
  bool univariate = true;
  for (std::size_t i = 0; i < a.size() && univariate; ++i)
    for (std::size_t j = i + 1; j < a.size() && univariate; ++j)
      for (const auto& [m, c] : a(i, j).terms())
        for (const auto& [v, e] : m.powers()) {
          if (!var) var = v;
          if (*var != v || e < 0 || e % 2 != 0) univariate = false;
        }
  if (univariate) return pf_univariate(a, var.value_or(kVarX), threads);
  return pf_combinatorial(a);
}

inline Rational pfaffian(const SkewMatrix<Rational>& a, int = 1) { return pf_elimination(a); }

namespace detail {
inline std::vector<std::size_t> checked_subset(const std::vector<std::size_t>& removed) {
  if (removed.size() % 2 != 0) fail(ErrorKind::OddSubsetSize, "sub-pfaffian needs an even index set");
  return removed;
}
}  // namespace detail

// Pfaffian of the matrix with the listed rows/columns (0-based) deleted.
template <class T>
T sub_pfaffian(const SkewMatrix<T>& a, const std::vector<std::size_t>& removed) {
  return pfaffian(a.without(detail::checked_subset(removed)));
}

inline SkewMatrix<Rational> skew_inverse(const SkewMatrix<Rational>& input) {
  std::size_t n = input.size();
  Matrix<Rational> a = input.dense();
  Matrix<Rational> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r)
      if (sgn(a(r, col)) != 0) {
        pivot = r;
        break;
      }
    if (pivot == n) fail(ErrorKind::SingularMatrix, "matrix is singular");
    a.swap_rows(col, pivot);
    inv.swap_rows(col, pivot);
    Rational scale = 1 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a(r, col)) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  SkewMatrix<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.set(i, j, inv(i, j));
  return out;
}

// pf(X without s) / pf(X) from the inverse: (-1)^(|s|/2) times the sign of moving s to the
// front, times pf of the inverse restricted to s. `removed` must be sorted.
inline Rational minor_ratio(const SkewMatrix<Rational>& inverse, const std::vector<std::size_t>& removed) {
  detail::checked_subset(removed);
  if (!std::is_sorted(removed.begin(), removed.end())) fail(ErrorKind::InvalidArgument, "index set must be sorted");
  std::size_t shift = 0;
  for (std::size_t k = 0; k < removed.size(); ++k) shift += removed[k] - k;
  Rational value = pf_elimination(inverse.submatrix(removed));
  return (removed.size() / 2 + shift) % 2 == 0 ? value : Rational(-value);
}

// A_ij = a_ij - (-1)^(i+j) l_i l_j for i < j.
template <class T>
SkewMatrix<T> lieb_matrix(const SkewMatrix<T>& a, const std::vector<T>& ell) {
  std::size_t n = a.size();
  if (ell.size() != n) fail(ErrorKind::InvalidArgument, "weight vector size mismatch");
  SkewMatrix<T> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      T pair = ell[i] * ell[j];
      out.set(i, j, (i + j) % 2 == 0 ? T(a(i, j) - pair) : T(a(i, j) + pair));
    }
  return out;
}

// Compares pf(A(l)) with the expansion over even index subsets.
inline bool verify_lieb_identity(const SkewMatrix<Rational>& a, const std::vector<Rational>& ell) {
  std::size_t n = a.size();
  if (n > 20) fail(ErrorKind::TooLarge, "Lieb expansion limited to dimension 20");
  Rational lhs = pf_elimination(lieb_matrix(a, ell));
  Rational rhs = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::vector<std::size_t> subset;
    Rational weight = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) {
        subset.push_back(i);
        weight *= ell[i];
      }
    if (sgn(weight) == 0) continue;
    rhs += weight * sub_pfaffian(a, subset);
  }
  return lhs == rhs;
}

}  // namespace dimerpf
