#pragma once
#include <array>
#include <vector>

#include "sparseroot/intlin.hpp"
#include "sparseroot/signlog.hpp"

namespace sparseroot {

struct Vec2 {
  Int x, y;
};

struct LogPoint {
  LogForm x, y;
};

// Maximal parallel row group of B with nonzero sum; indexes one wall/ray.
struct RadiantSubset {
  std::vector<int> indices;  // 0-based into rows of B
  Vec2 dir;                  // beta'_I = -sum of the rows
  LogPoint shift;            // s_I = s_i * B for the least i in I
};

struct ChamberFan {
  SupportData support;
  IMat skew;                           // S = B [0 -1; 1 0] B^T
  std::vector<RadiantSubset> radiants; // sorted counter-clockwise by dir
  std::vector<LogPoint> vertices;      // vertices[k]: apex of the cone between
                                       // radiants[k] and radiants[k+1 mod size]
  std::vector<std::vector<int>> non_radiant_groups;
};

enum class LocateKind { UniqueCone, Ambiguous, OnBoundary };

struct ConeQueryResult {
  LocateKind kind = LocateKind::Ambiguous;
  int cone = -1;  // index k: cone between radiants[k] and radiants[k+1 mod]
};

std::vector<RadiantSubset> radiant_subsets(const SupportData& sd);
ChamberFan build_fan(const SupportData& sd);

// Log|c| * B as a symbolic point; every |c_i| must be a positive rational.
LogPoint log_coeff_point(const SupportData& sd, const std::vector<Rat>& coeffs);

ConeQueryResult locate(const ChamberFan& fan, const LogPoint& p,
                       const SignConfig& cfg = {});

// Reduced Horn-Kapranov contour samples for n = 1 tetranomial supports;
// rows are (t1, t2, y1, y2).  Parameters hitting a zero of any linear form
// are skipped.
std::vector<std::array<double, 4>> amoeba_boundary_samples(const SupportData& sd,
                                                           int count);

}  // namespace sparseroot
