#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sparseroot/numbers.hpp"

namespace sparseroot {

// Normalized sparse univariate polynomial: exponents strictly increasing,
// no zero coefficients, constant term nonzero.  The power of x factored
// out during normalization is kept in zero_root_multiplicity.
struct SparsePoly {
  std::vector<std::pair<long long, Rat>> terms;
  long long zero_root_multiplicity = 0;
  std::string varname = "x";

  long long degree() const { return terms.empty() ? -1 : terms.back().first; }
  int term_count() const { return static_cast<int>(terms.size()); }
  const Rat& coeff(std::size_t i) const { return terms[i].second; }
};

enum class Shape { Monomial, Binomial, Trinomial, Tetranomial, Other };

struct ShapeTag {
  Shape shape;
  int term_count;
};

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

SparsePoly parse(const std::string& text);
std::string render(const SparsePoly& p);
ShapeTag classify(const SparsePoly& p);

// Builds a normalized polynomial from raw (exponent, coefficient) terms,
// merging duplicates and factoring out the minimal exponent.
SparsePoly normalize_terms(std::vector<std::pair<long long, Rat>> raw,
                           const std::string& varname = "x");

// f(-x): flips signs of odd-exponent coefficients of the normalized part.
SparsePoly negate_variable(const SparsePoly& p);

}  // namespace sparseroot
