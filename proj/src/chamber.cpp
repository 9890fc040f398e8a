#include "sparseroot/chamber.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sparseroot {
namespace {

Int cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// 0 for the upper half plane (incl. positive x-axis), 1 for the lower
int angle_half(const Vec2& v) {
  if (v.y > 0 || (v.y == 0 && v.x > 0)) return 0;
  return 1;
}

bool ccw_less(const Vec2& a, const Vec2& b) {
  int ha = angle_half(a), hb = angle_half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

LogForm cross_point_dir(const LogPoint& p, const Vec2& d) {
  return p.x.scaled(Rat(d.y)) - p.y.scaled(Rat(d.x));
}

}  // namespace

std::vector<RadiantSubset> radiant_subsets(const SupportData& sd) {
  const IMat& B = sd.nullbasis;
  const int m = sd.m();
  std::vector<Vec2> rows(m);
  for (int i = 0; i < m; ++i) {
    rows[i] = Vec2{B[i][0], B[i][1]};
    if (rows[i].x == 0 && rows[i].y == 0)
      throw SupportError("zero row in null basis (pyramidal support?)");
  }
  std::vector<RadiantSubset> out;
  std::vector<bool> used(m, false);
  for (int i = 0; i < m; ++i) {
    if (used[i]) continue;
    RadiantSubset rs;
    Int sx = 0, sy = 0;
    for (int j = i; j < m; ++j) {
      if (used[j]) continue;
      if (cross(rows[i], rows[j]) == 0) {
        rs.indices.push_back(j);
        used[j] = true;
        sx += rows[j].x;
        sy += rows[j].y;
      }
    }
    rs.dir = Vec2{-sx, -sy};
    out.push_back(std::move(rs));
  }
  return out;
}

ChamberFan build_fan(const SupportData& sd) {
  ChamberFan fan;
  fan.support = sd;
  const IMat& B = sd.nullbasis;
  const int m = sd.m();

  // S = B J B^T with J the quarter-turn
  fan.skew.assign(m, std::vector<Int>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      fan.skew[i][j] = B[i][0] * B[j][1] - B[i][1] * B[j][0];

  std::vector<RadiantSubset> groups = radiant_subsets(sd);
  for (auto& g : groups) {
    if (g.dir.x == 0 && g.dir.y == 0) {
      fan.non_radiant_groups.push_back(g.indices);
      continue;
    }
    int i = g.indices.front();
    LogForm sx, sy;
    for (int j = 0; j < m; ++j) {
      Int a = abs_int(fan.skew[i][j]);
      if (a <= 1) continue;  // log 0 is defined as 0 here; log 1 vanishes
      sx.add_atom(a, Rat(B[j][0]));
      sy.add_atom(a, Rat(B[j][1]));
    }
    g.shift = LogPoint{std::move(sx), std::move(sy)};
    fan.radiants.push_back(std::move(g));
  }

  if (fan.radiants.size() < 2)
    throw SupportError("fewer than 2 radiant subsets; no chamber fan");

  std::sort(fan.radiants.begin(), fan.radiants.end(),
            [](const RadiantSubset& a, const RadiantSubset& b) {
              return ccw_less(a.dir, b.dir);
            });
  for (std::size_t k = 0; k + 1 < fan.radiants.size(); ++k) {
    const Vec2& a = fan.radiants[k].dir;
    const Vec2& b = fan.radiants[k + 1].dir;
    if (cross(a, b) == 0 && sgn(a.x) == sgn(b.x) && sgn(a.y) == sgn(b.y))
      throw SupportError("parallel same-direction rays; degenerate support");
  }

  const std::size_t r = fan.radiants.size();
  fan.vertices.resize(r);
  for (std::size_t k = 0; k < r; ++k) {
    const RadiantSubset& I = fan.radiants[k];
    const RadiantSubset& J = fan.radiants[(k + 1) % r];
    Int den = cross(I.dir, J.dir);
    if (den == 0) throw SupportError("adjacent rays are parallel");
    // v = s_I + t*dir_I  with  cross(v - s_J, dir_J) = 0
    LogForm t_num = cross_point_dir(LogPoint{J.shift.x - I.shift.x,
                                             J.shift.y - I.shift.y},
                                    J.dir);
    fan.vertices[k] = LogPoint{
        I.shift.x + t_num.scaled(Rat(I.dir.x, den)),
        I.shift.y + t_num.scaled(Rat(I.dir.y, den)),
    };
  }
  return fan;
}

LogPoint log_coeff_point(const SupportData& sd, const std::vector<Rat>& coeffs) {
  if (static_cast<int>(coeffs.size()) != sd.m())
    throw std::invalid_argument("coefficient count does not match support");
  LogForm x, y;
  for (int i = 0; i < sd.m(); ++i) {
    Rat a = abs_rat(coeffs[i]);
    if (sgn(a) == 0) throw std::invalid_argument("zero coefficient");
    x += LogForm::log_of_rat(a, Rat(sd.nullbasis[i][0]));
    y += LogForm::log_of_rat(a, Rat(sd.nullbasis[i][1]));
  }
  return LogPoint{std::move(x), std::move(y)};
}

ConeQueryResult locate(const ChamberFan& fan, const LogPoint& p,
                       const SignConfig& cfg) {
  // With at most n+3 <= 5 rays this scan is the degenerate form of the
  // cyclic binary search; each cone costs two certified sign evaluations.
  const std::size_t r = fan.radiants.size();
  int inside = -1;
  int inside_count = 0;
  bool boundary = false;
  for (std::size_t k = 0; k < r; ++k) {
    const Vec2& d0 = fan.radiants[k].dir;
    const Vec2& d1 = fan.radiants[(k + 1) % r].dir;
    const LogPoint& v = fan.vertices[k];
    LogPoint w{p.x - v.x, p.y - v.y};
    // w = a*d0 + b*d1, cross(d0, d1) > 0
    int a_sign = sign_of(cross_point_dir(w, d1), cfg).value();
    int b_sign = sign_of(LogForm(w.y.scaled(Rat(d0.x)) - w.x.scaled(Rat(d0.y))), cfg).value();
    if (a_sign > 0 && b_sign > 0) {
      inside = static_cast<int>(k);
      ++inside_count;
    } else if (a_sign >= 0 && b_sign >= 0) {
      boundary = true;
    }
  }
  if (boundary) return {LocateKind::OnBoundary, -1};
  if (inside_count == 1) return {LocateKind::UniqueCone, inside};
  return {LocateKind::Ambiguous, -1};
}

std::vector<std::array<double, 4>> amoeba_boundary_samples(const SupportData& sd,
                                                           int count) {
  if (sd.n != 1 || sd.m() != 4)
    throw SupportError("amoeba sampling needs a univariate tetranomial support");
  if (count < 0) throw std::invalid_argument("negative sample count");
  std::vector<std::array<double, 4>> rows;
  if (count == 0) return rows;

  const double a2 = static_cast<double>(sd.points[1][0]);
  const double a3 = static_cast<double>(sd.points[2][0]);
  const double a4 = static_cast<double>(sd.points[3][0]);
  std::array<std::array<double, 2>, 4> b;
  for (int i = 0; i < 4; ++i)
    b[i] = {sd.nullbasis[i][0].get_d(), sd.nullbasis[i][1].get_d()};

  const double pi = 3.14159265358979323846;
  for (int k = 0; k < count; ++k) {
    // half-step offset keeps the grid off the axes, where null-basis zero
    // entries would zero a linear form and drop the row
    double th = pi * (k + 0.5) / count;
    double t1 = std::cos(th), t2 = std::sin(th);
    double u[4];
    bool skip = false;
    for (int i = 0; i < 4; ++i) {
      u[i] = b[i][0] * t1 + b[i][1] * t2;
      if (std::abs(u[i]) < 1e-12) skip = true;
    }
    if (skip) continue;
    // slice c1 = c3 = 1 of the Horn-Kapranov parametrization
    double l1 = std::log(std::abs(u[0]));
    double l3 = std::log(std::abs(u[2]));
    double y1 = std::log(std::abs(u[1])) - l1 + (a2 / a3) * (l1 - l3);
    double y2 = std::log(std::abs(u[3])) - l1 + (a4 / a3) * (l1 - l3);
    rows.push_back({t1, t2, y1, y2});
  }
  return rows;
}

}  // namespace sparseroot
