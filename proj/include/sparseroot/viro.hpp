#pragma once
#include <array>
#include <vector>

#include "sparseroot/chamber.hpp"

namespace sparseroot {

struct LiftedSupport {
  SupportData base;
  std::vector<int> lift;  // v(f) in {0,1}^(n+3); all zero when no unique cone
  ConeQueryResult located;
  // 0-based index sets of the radiant pair when located.kind == UniqueCone
  std::vector<int> radiant_lo, radiant_hi;
};

struct Cell {
  std::vector<int> vertices;  // indices into the support points
};

struct Triangulation {
  std::vector<Cell> cells;
};

struct RatPoint {
  std::array<Rat, 2> v;
  bool operator<(const RatPoint& o) const { return v < o.v; }
  bool operator==(const RatPoint& o) const { return v == o.v; }
};

struct ViroDiagram {
  Triangulation tri;
  std::vector<int> signs;           // per support point, +1 / -1
  std::vector<Rat> midpoints;       // n = 1: one midpoint per alternating cell
  struct Segment {
    RatPoint a, b;
  };
  std::vector<Segment> segments;    // n = 2
  int count = 0;                    // connected components
};

LiftedSupport canonical_lift(const std::vector<Rat>& coeffs, const ChamberFan& fan,
                             const SignConfig& cfg = {});
Triangulation lower_hull_triangulation(const LiftedSupport& ls);
ViroDiagram viro_diagram(const LiftedSupport& ls, const std::vector<int>& signs);

}  // namespace sparseroot
