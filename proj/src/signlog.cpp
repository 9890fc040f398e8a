#include "sparseroot/signlog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sparseroot {

LogForm LogForm::log_of_int(const Int& m, const Rat& weight) {
  LogForm f;
  f.add_atom(m, weight);
  return f;
}

LogForm LogForm::log_of_rat(const Rat& r, const Rat& weight) {
  LogForm f;
  if (sgn(r) <= 0) throw std::invalid_argument("log of non-positive rational");
  f.add_atom(r.get_num(), weight);
  f.add_atom(r.get_den(), -weight);
  return f;
}

void LogForm::add_atom(const Int& m, const Rat& weight) {
  if (m <= 0) throw std::invalid_argument("log argument must be positive");
  if (m == 1 || sgn(weight) == 0) return;
  auto [it, inserted] = atoms_.emplace(m, weight);
  if (!inserted) {
    it->second += weight;
    if (sgn(it->second) == 0) atoms_.erase(it);
  }
}

LogForm& LogForm::operator+=(const LogForm& o) {
  for (auto& [m, w] : o.atoms_) add_atom(m, w);
  return *this;
}

LogForm& LogForm::operator-=(const LogForm& o) {
  for (auto& [m, w] : o.atoms_) add_atom(m, Rat(-w));
  return *this;
}

LogForm LogForm::operator+(const LogForm& o) const {
  LogForm r(*this);
  r += o;
  return r;
}

LogForm LogForm::operator-(const LogForm& o) const {
  LogForm r(*this);
  r -= o;
  return r;
}

LogForm LogForm::operator-() const {
  LogForm r;
  for (auto& [m, w] : atoms_) r.atoms_.emplace(m, Rat(-w));
  return r;
}

LogForm LogForm::scaled(const Rat& s) const {
  LogForm r;
  if (sgn(s) == 0) return r;
  for (auto& [m, w] : atoms_) {
    Rat sw = w * s;
    sw.canonicalize();
    r.atoms_.emplace(m, sw);
  }
  return r;
}

void LogForm::canonicalize() {
  if (atoms_.empty()) return;
  std::vector<Int> args;
  std::vector<Rat> weights;
  for (auto& [m, w] : atoms_) {
    args.push_back(m);
    weights.push_back(w);
  }
  std::vector<std::vector<unsigned long>> expo;
  std::vector<Int> basis = gcd_free_basis(args, &expo);
  atoms_.clear();
  for (std::size_t i = 0; i < args.size(); ++i)
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (expo[i][k]) add_atom(basis[k], weights[i] * Rat(expo[i][k]));
}

LogForm LogForm::canonical() const {
  LogForm c(*this);
  c.canonicalize();
  return c;
}

std::string LogForm::str() const {
  if (atoms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [m, w] : atoms_) {
    Rat a = abs_rat(w);
    if (first) {
      if (sgn(w) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(w) < 0 ? " - " : " + ");
    }
    if (a != 1) out << to_string(a) << "*";
    out << "log(" << to_string(m) << ")";
  }
  return out.str();
}

std::vector<Int> gcd_free_basis(const std::vector<Int>& ints,
                                std::vector<std::vector<unsigned long>>* exponents) {
  for (auto& v : ints)
    if (v < 1) throw std::invalid_argument("gcd_free_basis needs positive integers");

  std::vector<Int> basis;
  for (auto& v : ints)
    if (v > 1) basis.push_back(v);
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

  // refine until pairwise coprime
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
        Int g = gcd(basis[i], basis[j]);
        if (g == 1) continue;
        Int a = basis[i] / g, b = basis[j] / g;
        basis.erase(basis.begin() + j);
        basis.erase(basis.begin() + i);
        for (const Int& v : {a, b, g})
          if (v > 1) basis.push_back(v);
        std::sort(basis.begin(), basis.end());
        basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
        changed = true;
      }
    }
  }

  if (exponents) {
    exponents->assign(ints.size(), std::vector<unsigned long>(basis.size(), 0));
    for (std::size_t i = 0; i < ints.size(); ++i) {
      Int rest = ints[i];
      for (std::size_t k = 0; k < basis.size(); ++k) {
        while (mpz_divisible_p(rest.get_mpz_t(), basis[k].get_mpz_t())) {
          rest /= basis[k];
          ++(*exponents)[i][k];
        }
      }
      if (rest != 1)
        throw std::logic_error("gcd-free basis does not span input " + to_string(ints[i]));
    }
  }
  return basis;
}

bool is_exact_zero(const LogForm& form) {
  // pairwise-coprime integers >= 2 are multiplicatively independent, so
  // the canonical form vanishes iff it has no atoms left
  return form.canonical().empty();
}

double nesterenko_bound_bits(const LogForm& form) {
  LogForm c = form.canonical();
  if (c.empty()) return 0.0;
  // clear denominators to integer weights gamma_i
  Int lcm_den = 1;
  for (auto& [m, w] : c.atoms()) lcm_den = lcm(lcm_den, w.get_den());
  double max_gamma_bits = 0.0;
  double sum_log2_logalpha = 0.0;
  const std::size_t N = c.atoms().size();
  for (auto& [m, w] : c.atoms()) {
    Int gamma = abs_int(Int(w.get_num() * (lcm_den / w.get_den())));
    max_gamma_bits = std::max(max_gamma_bits,
                              static_cast<double>(mpz_sizeinbase(gamma.get_mpz_t(), 2)));
    double log_alpha = static_cast<double>(mpz_sizeinbase(m.get_mpz_t(), 2)) * 0.6931471805599453;
    sum_log2_logalpha += std::log2(std::max(log_alpha, 0.6931471805599453));
  }
  // log2 E with E = 2.9/log2 * (2e)^(2N+6) * (2 + log max|gamma|) * prod log alpha_j
  double bits = std::log2(2.9 / 0.6931471805599453) +
                (2.0 * N + 6.0) * std::log2(2.0 * 2.718281828459045) +
                std::log2(2.0 + max_gamma_bits * 0.6931471805599453) + sum_log2_logalpha;
  return bits;
}

namespace {

// adds weight*log(m) to [lo, hi] with outward rounding
void accumulate_atom(mpfr_t lo, mpfr_t hi, const Int& m, const Rat& w, mpfr_prec_t p) {
  mpfr_t ld, lu, t;
  mpfr_init2(ld, p);
  mpfr_init2(lu, p);
  mpfr_init2(t, p);
  mpfr_set_z(ld, m.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(lu, m.get_mpz_t(), MPFR_RNDU);
  mpfr_log(ld, ld, MPFR_RNDD);
  mpfr_log(lu, lu, MPFR_RNDU);
  if (sgn(w) > 0) {
    mpfr_mul_q(t, ld, w.get_mpq_t(), MPFR_RNDD);
    mpfr_add(lo, lo, t, MPFR_RNDD);
    mpfr_mul_q(t, lu, w.get_mpq_t(), MPFR_RNDU);
    mpfr_add(hi, hi, t, MPFR_RNDU);
  } else {
    mpfr_mul_q(t, lu, w.get_mpq_t(), MPFR_RNDD);
    mpfr_add(lo, lo, t, MPFR_RNDD);
    mpfr_mul_q(t, ld, w.get_mpq_t(), MPFR_RNDU);
    mpfr_add(hi, hi, t, MPFR_RNDU);
  }
  mpfr_clear(ld);
  mpfr_clear(lu);
  mpfr_clear(t);
}

}  // namespace

SignOutcome sign_of(const LogForm& form, const SignConfig& cfg) {
  LogForm c = form.canonical();
  SignOutcome out;
  if (c.empty()) {
    out.sign = Sign::Zero;
    out.exact = true;
    return out;
  }
  for (mpfr_prec_t p = cfg.start_precision; p <= cfg.precision_cap; p *= 2) {
    mpfr_t lo, hi;
    mpfr_init2(lo, p);
    mpfr_init2(hi, p);
    mpfr_set_zero(lo, 1);
    mpfr_set_zero(hi, 1);
    for (auto& [m, w] : c.atoms()) accumulate_atom(lo, hi, m, w, p);
    int slo = mpfr_sgn(lo), shi = mpfr_sgn(hi);
    if (slo > 0 || shi < 0) {
      out.sign = slo > 0 ? Sign::Positive : Sign::Negative;
      out.exact = false;
      out.precision = p;
      out.lo = mpfr_get_d(lo, MPFR_RNDD);
      out.hi = mpfr_get_d(hi, MPFR_RNDU);
      mpfr_clear(lo);
      mpfr_clear(hi);
      return out;
    }
    mpfr_clear(lo);
    mpfr_clear(hi);
  }
  throw PrecisionCapExceeded(
      "sign of nonzero log form not separated within precision cap " +
      std::to_string(cfg.precision_cap) + " bits (Nesterenko bits: " +
      std::to_string(nesterenko_bound_bits(form)) + ")");
}

void MonomialProduct::mul_rat(const Rat& r, const Rat& expo) {
  if (sgn(r) <= 0) throw std::invalid_argument("monomial factor must be positive");
  factors.emplace_back(r.get_num(), expo);
  factors.emplace_back(r.get_den(), Rat(-expo));
}

LogForm MonomialProduct::log() const {
  LogForm f;
  for (auto& [base, expo] : factors) f.add_atom(base, expo);
  return f;
}

SignOutcome compare_monomials(const MonomialProduct& lhs, const MonomialProduct& rhs,
                              const SignConfig& cfg) {
  return sign_of(lhs.log() - rhs.log(), cfg);
}

}  // namespace sparseroot
