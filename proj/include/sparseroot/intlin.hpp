#pragma once
#include <stdexcept>
#include <vector>

#include "sparseroot/numbers.hpp"

namespace sparseroot {

struct HermiteResult {
  IMat U;  // unimodular, U*M = H
  IMat H;  // upper triangular (row echelon), pivots positive, reduced above
  int rank = 0;
};

// Row-style Hermite factorization via Euclidean pivoting.
HermiteResult hermite_factor(const IMat& M);

struct SupportReport {
  bool in_flat = false;
  bool is_pyramid = false;
  // advisory: needed for the isotopy guarantee of Viro diagrams, not for
  // building the chamber fan
  bool facet_card_n = true;
  bool ok() const { return !in_flat && !is_pyramid; }
};

// Support A with the lifted matrix Ahat and an integer null-space basis B.
struct SupportData {
  int n = 0;                                   // ambient dimension
  std::vector<std::vector<long long>> points;  // m = n+3 points
  IMat ahat;                                   // (n+1) x m
  IMat nullbasis;                              // m x 2; Ahat * B = 0

  int m() const { return static_cast<int>(points.size()); }
};

struct SupportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SupportReport validate_support(const std::vector<std::vector<long long>>& pts);

// Builds SupportData for an (n+3)-point support; throws SupportError when
// validate_support fails.  B is gcd-reduced per column and sign-normalized.
SupportData null_basis(const std::vector<std::vector<long long>>& pts);

IMat matmul(const IMat& a, const IMat& b);
Int det2(const Int& a, const Int& b, const Int& c, const Int& d);

}  // namespace sparseroot
