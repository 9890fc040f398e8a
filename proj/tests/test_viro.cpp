#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "sparseroot/viro.hpp"

using namespace sparseroot;

namespace {

LiftedSupport lift_for(const std::vector<std::vector<long long>>& pts,
                       const std::vector<Rat>& coeffs) {
  SupportData sd = null_basis(pts);
  ChamberFan fan = build_fan(sd);
  return canonical_lift(coeffs, fan);
}

std::vector<int> signs_of(const std::vector<Rat>& coeffs) {
  std::vector<int> s;
  for (const Rat& c : coeffs) s.push_back(sgn(c) >= 0 ? 1 : -1);
  return s;
}

}  // namespace

TEST_CASE("canonical lift of the quadrinomial is (0,1,1,0)") {
  std::vector<Rat> c{Rat(1), Rat(-1, 2), Rat(1), Rat(-2)};
  LiftedSupport ls = lift_for({{0}, {404}, {405}, {808}}, c);
  REQUIRE(ls.located.kind == LocateKind::UniqueCone);
  CHECK(ls.lift == std::vector<int>{0, 1, 1, 0});

  Triangulation tri = lower_hull_triangulation(ls);
  REQUIRE(tri.cells.size() == 1);
  CHECK(tri.cells[0].vertices == std::vector<int>{0, 3});  // the cell [0,808]

  ViroDiagram vd = viro_diagram(ls, signs_of(c));
  CHECK(vd.count == 1);
  REQUIRE(vd.midpoints.size() == 1);
  CHECK(vd.midpoints[0] == Rat(404));  // midpoint of [0,808]
}

TEST_CASE("pentagon: lift (0,1,1,0,0), three cells, two components") {
  std::vector<Rat> c{Rat(1), Rat(-1), Rat(-1), Rat(3), Rat(3)};
  LiftedSupport ls = lift_for({{0, 0}, {1, 0}, {0, 1}, {1, 4}, {4, 1}}, c);
  REQUIRE(ls.located.kind == LocateKind::UniqueCone);
  CHECK(ls.lift == std::vector<int>{0, 1, 1, 0, 0});

  Triangulation tri = lower_hull_triangulation(ls);
  CHECK(tri.cells.size() == 3);
  for (const Cell& cell : tri.cells) CHECK(cell.vertices.size() == 3);

  ViroDiagram vd = viro_diagram(ls, signs_of(c));
  CHECK(vd.count == 2);
  CHECK(vd.segments.size() >= 2);
}

TEST_CASE("zero lift triangulates into consecutive cells (n = 1)") {
  SupportData sd = null_basis({{0}, {2}, {5}, {9}});
  ChamberFan fan = build_fan(sd);
  LiftedSupport ls;
  ls.base = sd;
  ls.lift = {0, 0, 0, 0};
  ls.located = {LocateKind::Ambiguous, -1};
  Triangulation tri = lower_hull_triangulation(ls);
  REQUIRE(tri.cells.size() == 3);
  CHECK(tri.cells[0].vertices == std::vector<int>{0, 1});
  CHECK(tri.cells[1].vertices == std::vector<int>{1, 2});
  CHECK(tri.cells[2].vertices == std::vector<int>{2, 3});
}

TEST_CASE("all-positive signs give an empty diagram") {
  std::vector<Rat> c{Rat(1), Rat(1, 2), Rat(1), Rat(2)};
  LiftedSupport ls = lift_for({{0}, {404}, {405}, {808}}, c);
  ViroDiagram vd = viro_diagram(ls, signs_of(c));
  CHECK(vd.count == 0);
  CHECK(vd.midpoints.empty());
}

TEST_CASE("flipping every sign leaves the diagram unchanged") {
  std::mt19937_64 rng(606);
  SupportData sd = null_basis({{0}, {3}, {7}, {12}});
  ChamberFan fan = build_fan(sd);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<Rat> c;
    for (int i = 0; i < 4; ++i) {
      long mag = 1 + static_cast<long>(rng() % 1000);
      c.push_back(rng() % 2 ? Rat(mag) : Rat(-mag));
    }
    LiftedSupport ls = canonical_lift(c, fan);
    std::vector<int> s = signs_of(c);
    std::vector<int> flipped(s);
    for (int& v : flipped) v = -v;
    ViroDiagram a = viro_diagram(ls, s);
    ViroDiagram b = viro_diagram(ls, flipped);
    CHECK(a.count == b.count);
    CHECK(a.midpoints == b.midpoints);
  }
}

TEST_CASE("univariate tetranomial diagrams have at most 3 components") {
  std::mt19937_64 rng(707);
  for (int iter = 0; iter < 100; ++iter) {
    std::set<long long> exps{0};
    while (exps.size() < 4) exps.insert(1 + static_cast<long long>(rng() % 200));
    std::vector<std::vector<long long>> pts;
    for (long long e : exps) pts.push_back({e});
    std::vector<Rat> c;
    for (int i = 0; i < 4; ++i) {
      long mag = 1 + static_cast<long>(rng() % (1 << 20));
      c.push_back(rng() % 2 ? Rat(mag) : Rat(-mag));
    }
    LiftedSupport ls;
    try {
      ls = lift_for(pts, c);
    } catch (const SupportError&) {
      continue;
    }
    ViroDiagram vd = viro_diagram(ls, signs_of(c));
    CHECK(vd.count >= 0);
    CHECK(vd.count <= 3);
    CHECK(vd.midpoints.size() == static_cast<std::size_t>(vd.count));
    // midpoints strictly increasing and interior to the support interval
    for (std::size_t i = 0; i < vd.midpoints.size(); ++i) {
      CHECK(vd.midpoints[i] > 0);
      CHECK(vd.midpoints[i] < Rat(to_int(*exps.rbegin())));
      if (i > 0) CHECK(vd.midpoints[i] > vd.midpoints[i - 1]);
    }
  }
}

TEST_CASE("n = 2: every triangle contributes 0 or 2 alternating edges") {
  std::vector<std::vector<long long>> pts{{0, 0}, {1, 0}, {0, 1}, {1, 4}, {4, 1}};
  SupportData sd = null_basis(pts);
  ChamberFan fan = build_fan(sd);
  for (int mask = 0; mask < 32; ++mask) {
    std::vector<Rat> c;
    std::vector<int> s;
    for (int i = 0; i < 5; ++i) {
      int sign = (mask >> i) & 1 ? -1 : 1;
      s.push_back(sign);
      c.push_back(Rat(sign * (i + 2)));
    }
    LiftedSupport ls = canonical_lift(c, fan);
    Triangulation tri = lower_hull_triangulation(ls);
    ViroDiagram vd = viro_diagram(ls, s);
    for (const Cell& cell : tri.cells) {
      int alternating = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (s[cell.vertices[i]] != s[cell.vertices[j]]) ++alternating;
      CHECK((alternating == 0 || alternating == 2));
    }
    CHECK(vd.count >= 0);
  }
}
