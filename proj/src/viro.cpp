#include "sparseroot/viro.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sparseroot {
namespace {

Triangulation triangulate_1d(const std::vector<long long>& xs,
                             const std::vector<int>& lift) {
  const int m = static_cast<int>(xs.size());
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return xs[a] < xs[b]; });

  // lower hull of (x, lift), keeping collinear points so that an on-edge
  // lifted point splits its cell
  std::vector<int> hull;
  for (int idx : order) {
    while (hull.size() >= 2) {
      int a = hull[hull.size() - 2], b = hull[hull.size() - 1];
      Int turn = (to_int(xs[idx]) - to_int(xs[a])) * (Int(lift[b]) - Int(lift[a])) -
                 (Int(lift[idx]) - Int(lift[a])) * (to_int(xs[b]) - to_int(xs[a]));
      if (turn > 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(idx);
  }
  Triangulation tri;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i)
    tri.cells.push_back(Cell{{hull[i], hull[i + 1]}});
  return tri;
}

struct P3 {
  Int x, y, z;
};

Int dot(const P3& a, const P3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

P3 cross3(const P3& a, const P3& b) {
  return P3{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Int cross2(const P3& o, const P3& a, const P3& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// convex hull (vertices only, CCW) of the projections of a facet point set
std::vector<int> hull2d(const std::vector<P3>& pts, const std::vector<int>& ids) {
  std::vector<int> s(ids);
  std::sort(s.begin(), s.end(), [&](int a, int b) {
    if (pts[a].x != pts[b].x) return pts[a].x < pts[b].x;
    return pts[a].y < pts[b].y;
  });
  std::vector<int> hull;
  auto sweep = [&](const std::vector<int>& seq) {
    std::size_t base = hull.size();
    for (int id : seq) {
      while (hull.size() >= base + 2 &&
             cross2(pts[hull[hull.size() - 2]], pts[hull[hull.size() - 1]],
                    pts[id]) <= 0)
        hull.pop_back();
      hull.push_back(id);
    }
    hull.pop_back();
  };
  sweep(s);
  std::reverse(s.begin(), s.end());
  sweep(s);
  return hull;
}

Triangulation triangulate_2d(const std::vector<std::vector<long long>>& pts,
                             const std::vector<int>& lift) {
  const int m = static_cast<int>(pts.size());
  std::vector<P3> p(m);
  for (int i = 0; i < m; ++i) p[i] = P3{to_int(pts[i][0]), to_int(pts[i][1]), Int(lift[i])};

  std::set<std::vector<int>> facets;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        P3 nrm = cross3(P3{p[j].x - p[i].x, p[j].y - p[i].y, p[j].z - p[i].z},
                        P3{p[k].x - p[i].x, p[k].y - p[i].y, p[k].z - p[i].z});
        if (nrm.z == 0) continue;  // vertical plane, not a lower facet
        if (nrm.z < 0) nrm = P3{-nrm.x, -nrm.y, -nrm.z};
        std::vector<int> face;
        bool lower = true;
        for (int l = 0; l < m && lower; ++l) {
          Int s = dot(nrm, P3{p[l].x - p[i].x, p[l].y - p[i].y, p[l].z - p[i].z});
          if (s < 0)
            lower = false;
          else if (s == 0)
            face.push_back(l);
        }
        if (lower) facets.insert(std::move(face));
      }

  Triangulation tri;
  for (const auto& face : facets) {
    std::vector<int> hull = hull2d(p, face);
    if (hull.size() < 3) continue;
    // fan from the lowest original index among the hull vertices
    std::size_t pivot = std::min_element(hull.begin(), hull.end()) - hull.begin();
    std::rotate(hull.begin(), hull.begin() + pivot, hull.end());
    for (std::size_t t = 1; t + 1 < hull.size(); ++t)
      tri.cells.push_back(Cell{{hull[0], hull[t], hull[t + 1]}});
  }
  return tri;
}

}  // namespace

LiftedSupport canonical_lift(const std::vector<Rat>& coeffs, const ChamberFan& fan,
                             const SignConfig& cfg) {
  LiftedSupport ls;
  ls.base = fan.support;
  ls.lift.assign(ls.base.m(), 0);
  ls.located = locate(fan, log_coeff_point(fan.support, coeffs), cfg);
  if (ls.located.kind == LocateKind::UniqueCone) {
    const std::size_t r = fan.radiants.size();
    ls.radiant_lo = fan.radiants[ls.located.cone].indices;
    ls.radiant_hi = fan.radiants[(ls.located.cone + 1) % r].indices;
    for (int i : ls.radiant_lo) ls.lift[i] = 1;
    for (int i : ls.radiant_hi) ls.lift[i] = 1;
  }
  return ls;
}

Triangulation lower_hull_triangulation(const LiftedSupport& ls) {
  if (ls.base.n == 1) {
    std::vector<long long> xs;
    for (auto& p : ls.base.points) xs.push_back(p[0]);
    return triangulate_1d(xs, ls.lift);
  }
  if (ls.base.n == 2) return triangulate_2d(ls.base.points, ls.lift);
  throw SupportError("triangulation implemented for n <= 2 only");
}

ViroDiagram viro_diagram(const LiftedSupport& ls, const std::vector<int>& signs) {
  if (static_cast<int>(signs.size()) != ls.base.m())
    throw std::invalid_argument("sign count does not match support");
  ViroDiagram vd;
  vd.signs = signs;
  vd.tri = lower_hull_triangulation(ls);

  if (ls.base.n == 1) {
    for (const Cell& c : vd.tri.cells) {
      int i = c.vertices[0], j = c.vertices[1];
      if (signs[i] != signs[j]) {
        Rat mid(to_int(ls.base.points[i][0]) + to_int(ls.base.points[j][0]), Int(2));
        mid.canonicalize();
        vd.midpoints.push_back(std::move(mid));
      }
    }
    vd.count = static_cast<int>(vd.midpoints.size());
    return vd;
  }

  // n = 2: each triangle has 0 or 2 alternating edges
  auto midpoint = [&](int i, int j) {
    return RatPoint{{Rat(to_int(ls.base.points[i][0]) + to_int(ls.base.points[j][0]), Int(2)),
                     Rat(to_int(ls.base.points[i][1]) + to_int(ls.base.points[j][1]), Int(2))}};
  };
  std::map<RatPoint, int> node_id;
  std::vector<int> parent;
  auto node = [&](const RatPoint& p) {
    auto [it, inserted] = node_id.emplace(p, static_cast<int>(parent.size()));
    if (inserted) parent.push_back(it->second);
    return it->second;
  };
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };

  for (const Cell& c : vd.tri.cells) {
    std::vector<std::pair<int, int>> alt;
    for (int e = 0; e < 3; ++e) {
      int i = c.vertices[e], j = c.vertices[(e + 1) % 3];
      if (signs[i] != signs[j]) alt.emplace_back(i, j);
    }
    if (alt.empty()) continue;
    if (alt.size() != 2)
      throw std::logic_error("triangle with odd alternating-edge count");
    RatPoint a = midpoint(alt[0].first, alt[0].second);
    RatPoint b = midpoint(alt[1].first, alt[1].second);
    vd.segments.push_back(ViroDiagram::Segment{a, b});
    int na = node(a), nb = node(b);
    parent[find(na)] = find(nb);
  }

  std::set<int> roots;
  for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(static_cast<int>(i)));
  vd.count = static_cast<int>(roots.size());
  return vd;
}

}  // namespace sparseroot
