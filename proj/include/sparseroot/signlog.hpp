#pragma once
#include <mpfr.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sparseroot/numbers.hpp"

namespace sparseroot {

// Exact linear form  sum_k q_k * log(m_k)  with rational weights and
// positive integer arguments.  Arguments of 1 and zero weights vanish on
// insertion; canonicalize() rewrites the form over a gcd-free basis so
// that arguments are pairwise coprime.
class LogForm {
 public:
  LogForm() = default;

  static LogForm log_of_int(const Int& m, const Rat& weight);
  // weight * log(r) for rational r > 0, split as log(num) - log(den)
  static LogForm log_of_rat(const Rat& r, const Rat& weight);

  void add_atom(const Int& m, const Rat& weight);
  LogForm& operator+=(const LogForm& o);
  LogForm& operator-=(const LogForm& o);
  LogForm operator+(const LogForm& o) const;
  LogForm operator-(const LogForm& o) const;
  LogForm operator-() const;
  LogForm scaled(const Rat& s) const;

  void canonicalize();
  LogForm canonical() const;

  bool empty() const { return atoms_.empty(); }
  const std::map<Int, Rat>& atoms() const { return atoms_; }
  std::string str() const;

 private:
  std::map<Int, Rat> atoms_;
};

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

struct SignOutcome {
  Sign sign = Sign::Zero;
  bool exact = false;          // multiplicative-relation certificate
  mpfr_prec_t precision = 0;   // numeric certificate: working precision
  double lo = 0.0, hi = 0.0;   // numeric certificate: interval excluding 0

  int value() const { return static_cast<int>(sign); }
};

struct SignConfig {
  mpfr_prec_t start_precision = 128;
  mpfr_prec_t precision_cap = 1 << 24;
};

struct PrecisionCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Pairwise-coprime basis (each >= 2) via gcd refinement; no factorization.
// Every input equals the product of basis elements raised to the returned
// exponent row; inputs of 1 map to the all-zero row.
std::vector<Int> gcd_free_basis(const std::vector<Int>& ints,
                                std::vector<std::vector<unsigned long>>* exponents = nullptr);

bool is_exact_zero(const LogForm& form);
SignOutcome sign_of(const LogForm& form, const SignConfig& cfg = {});

// log2 of the Nesterenko termination bound for the integer-weight form
// obtained by clearing denominators; diagnostic only.
double nesterenko_bound_bits(const LogForm& form);

// Product of base^exponent factors, bases positive integers.
struct MonomialProduct {
  std::vector<std::pair<Int, Rat>> factors;
  void mul(const Int& base, const Rat& expo) { factors.emplace_back(base, expo); }
  // multiply by rational r > 0 raised to expo
  void mul_rat(const Rat& r, const Rat& expo);
  LogForm log() const;
};

// sign(lhs - rhs), both sides positive
SignOutcome compare_monomials(const MonomialProduct& lhs, const MonomialProduct& rhs,
                              const SignConfig& cfg = {});

}  // namespace sparseroot
