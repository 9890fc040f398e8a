#include "sparseroot/intlin.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace sparseroot {
namespace {

void sub_scaled_row(IMat& m, int dst, int src, const Int& q) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] -= q * m[src][j];
}

void negate_row(IMat& m, int i) {
  for (auto& v : m[i]) v = -v;
}

IMat identity(int r) {
  IMat u(r, std::vector<Int>(r, 0));
  for (int i = 0; i < r; ++i) u[i][i] = 1;
  return u;
}

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

int affine_rank(const std::vector<std::vector<long long>>& pts) {
  if (pts.empty()) return -1;
  IMat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Int> row;
    for (std::size_t j = 0; j < pts[0].size(); ++j)
      row.emplace_back(to_int(pts[i][j]) - to_int(pts[0][j]));
    diffs.push_back(std::move(row));
  }
  if (diffs.empty()) return 0;
  return hermite_factor(diffs).rank;
}

Int cross3(const std::vector<long long>& o, const std::vector<long long>& a,
           const std::vector<long long>& b) {
  return det2(to_int(a[0]) - to_int(o[0]), to_int(a[1]) - to_int(o[1]),
              to_int(b[0]) - to_int(o[0]), to_int(b[1]) - to_int(o[1]));
}

bool on_segment(const std::vector<long long>& p, const std::vector<long long>& a,
                const std::vector<long long>& b) {
  if (cross3(a, b, p) != 0) return false;
  return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
         std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

// Hull edges must each carry exactly n = 2 support points.
bool facets_have_card_two(const std::vector<std::vector<long long>>& pts) {
  std::vector<std::vector<long long>> s(pts);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  const int k = static_cast<int>(s.size());
  std::vector<std::vector<long long>> hull;
  auto build = [&](auto begin, auto end) {
    std::size_t base = hull.size();
    for (auto it = begin; it != end; ++it) {
      while (hull.size() >= base + 2 &&
             cross3(hull[hull.size() - 2], hull[hull.size() - 1], *it) <= 0)
        hull.pop_back();
      hull.push_back(*it);
    }
  };
  build(s.begin(), s.end());
  hull.pop_back();
  build(s.rbegin(), s.rend());
  hull.pop_back();
  if (static_cast<int>(hull.size()) < 3) return false;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    int cnt = 0;
    for (int j = 0; j < k; ++j)
      if (on_segment(s[j], a, b)) ++cnt;
    if (cnt != 2) return false;
  }
  return true;
}

}  // namespace

Int det2(const Int& a, const Int& b, const Int& c, const Int& d) {
  return a * d - b * c;
}

IMat matmul(const IMat& a, const IMat& b) {
  IMat r(a.size(), std::vector<Int>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < b[0].size(); ++j)
          r[i][j] += a[i][k] * b[k][j];
  return r;
}

HermiteResult hermite_factor(const IMat& M) {
  const int rows = static_cast<int>(M.size());
  const int cols = rows ? static_cast<int>(M[0].size()) : 0;
  HermiteResult res;
  res.H = M;
  res.U = identity(rows);
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    // Euclidean elimination below the working row
    while (true) {
      int best = -1;
      for (int i = row; i < rows; ++i) {
        if (res.H[i][col] == 0) continue;
        if (best < 0 || abs_int(res.H[i][col]) < abs_int(res.H[best][col]))
          best = i;
      }
      if (best < 0) break;
      if (best != row) {
        std::swap(res.H[best], res.H[row]);
        std::swap(res.U[best], res.U[row]);
      }
      bool below_clear = true;
      for (int i = row + 1; i < rows; ++i) {
        if (res.H[i][col] == 0) continue;
        Int q = fdiv(res.H[i][col], res.H[row][col]);
        sub_scaled_row(res.H, i, row, q);
        sub_scaled_row(res.U, i, row, q);
        if (res.H[i][col] != 0) below_clear = false;
      }
      if (below_clear) break;
    }
    if (res.H[row][col] == 0) continue;
    if (res.H[row][col] < 0) {
      negate_row(res.H, row);
      negate_row(res.U, row);
    }
    for (int i = 0; i < row; ++i) {
      Int q = fdiv(res.H[i][col], res.H[row][col]);
      if (q != 0) {
        sub_scaled_row(res.H, i, row, q);
        sub_scaled_row(res.U, i, row, q);
      }
    }
    ++row;
  }
  res.rank = row;
  return res;
}

SupportReport validate_support(const std::vector<std::vector<long long>>& pts) {
  SupportReport rep;
  if (pts.empty()) throw SupportError("empty support");
  const int n = static_cast<int>(pts[0].size());
  for (auto& p : pts)
    if (static_cast<int>(p.size()) != n)
      throw SupportError("inconsistent point dimensions");
  std::set<std::vector<long long>> uniq(pts.begin(), pts.end());
  if (uniq.size() != pts.size()) throw SupportError("duplicate support points");

  rep.in_flat = affine_rank(pts) < n;

  rep.is_pyramid = false;
  if (!rep.in_flat && pts.size() >= 2) {
    for (std::size_t drop = 0; drop < pts.size(); ++drop) {
      std::vector<std::vector<long long>> rest;
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (i != drop) rest.push_back(pts[i]);
      if (affine_rank(rest) < n) {
        rep.is_pyramid = true;
        break;
      }
    }
  }

  if (n == 1) {
    rep.facet_card_n = pts.size() >= 2;
  } else if (n == 2) {
    rep.facet_card_n = !rep.in_flat && facets_have_card_two(pts);
  } else {
    rep.facet_card_n = false;  // geometric checks are scoped to n <= 2
  }
  return rep;
}

SupportData null_basis(const std::vector<std::vector<long long>>& pts) {
  const int n = static_cast<int>(pts[0].size());
  const int m = static_cast<int>(pts.size());
  if (m != n + 3)
    throw SupportError("support must have n+3 points, got " +
                       std::to_string(m) + " for n=" + std::to_string(n));
  SupportReport rep = validate_support(pts);
  if (rep.in_flat) throw SupportError("support lies in an (n-1)-flat");
  if (rep.is_pyramid) throw SupportError("support is a pyramid");

  SupportData sd;
  sd.n = n;
  sd.points = pts;
  sd.ahat.assign(n + 1, std::vector<Int>(m, 0));
  for (int j = 0; j < m; ++j) {
    sd.ahat[0][j] = 1;
    for (int i = 0; i < n; ++i) sd.ahat[i + 1][j] = to_int(pts[j][i]);
  }

  IMat at(m, std::vector<Int>(n + 1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) at[i][j] = sd.ahat[j][i];
  HermiteResult her = hermite_factor(at);
  if (her.rank != n + 1) throw SupportError("support matrix is rank deficient");

  // zero rows of H pair with rows of U annihilating Ahat^T
  sd.nullbasis.assign(m, std::vector<Int>(2, 0));
  for (int k = 0; k < 2; ++k) {
    Int g = 0;
    for (int i = 0; i < m; ++i) g = gcd(g, her.U[n + 1 + k][i]);
    int lead = 0;
    for (int i = 0; i < m; ++i) {
      if (her.U[n + 1 + k][i] != 0) {
        lead = sgn(her.U[n + 1 + k][i]);
        break;
      }
    }
    if (g == 0) throw SupportError("degenerate null-space basis");
    if (lead < 0) g = -g;
    for (int i = 0; i < m; ++i) sd.nullbasis[i][k] = her.U[n + 1 + k][i] / g;
  }

  IMat zero = matmul(sd.ahat, sd.nullbasis);
  for (auto& r : zero)
    for (auto& v : r) assert(v == 0);
  return sd;
}

}  // namespace sparseroot
