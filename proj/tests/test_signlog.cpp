#include <doctest.h>
#include <mpfr.h>

#include <random>

#include "sparseroot/signlog.hpp"

using namespace sparseroot;

namespace {

// independent directed-rounding evaluation; returns 0 when the interval
// at the given precision does not exclude zero
int reference_sign(const LogForm& f, mpfr_prec_t prec) {
  mpfr_t lo, hi, t;
  mpfr_inits2(prec, lo, hi, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(lo, 1);
  mpfr_set_zero(hi, 1);
  for (const auto& [m, w] : f.atoms()) {
    for (int side = 0; side < 2; ++side) {
      mpfr_rnd_t rnd = side == 0 ? MPFR_RNDD : MPFR_RNDU;
      // weight sign decides which log bound feeds which sum bound
      mpfr_rnd_t logrnd = (sgn(w) > 0) == (side == 0) ? MPFR_RNDD : MPFR_RNDU;
      mpfr_set_z(t, m.get_mpz_t(), MPFR_RNDN);
      mpfr_log(t, t, logrnd);
      mpfr_mul_q(t, t, w.get_mpq_t(), rnd);
      mpfr_add(side == 0 ? lo : hi, side == 0 ? lo : hi, t, rnd);
    }
  }
  int s = 0;
  if (mpfr_sgn(lo) > 0) s = 1;
  if (mpfr_sgn(hi) < 0) s = -1;
  mpfr_clears(lo, hi, t, static_cast<mpfr_ptr>(nullptr));
  return s;
}

}  // namespace

TEST_CASE("gcd_free_basis examples") {
  std::vector<std::vector<unsigned long>> exps;
  std::vector<Int> basis = gcd_free_basis({Int(12), Int(18)}, &exps);
  REQUIRE(basis == std::vector<Int>{Int(2), Int(3)});
  CHECK(exps[0] == std::vector<unsigned long>{2, 1});
  CHECK(exps[1] == std::vector<unsigned long>{1, 2});

  basis = gcd_free_basis({Int(7)}, &exps);
  CHECK(basis == std::vector<Int>{Int(7)});
  CHECK(exps[0] == std::vector<unsigned long>{1});

  basis = gcd_free_basis({Int(8), Int(4)}, &exps);
  CHECK(basis == std::vector<Int>{Int(2)});
  CHECK(exps[0] == std::vector<unsigned long>{3});
  CHECK(exps[1] == std::vector<unsigned long>{2});

  basis = gcd_free_basis({Int(1)}, &exps);
  CHECK(basis.empty());
}

TEST_CASE("gcd_free_basis reconstruction on random inputs") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> dv(1, 100000);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<Int> in;
    for (int i = 0; i < 4; ++i) in.emplace_back(dv(rng));
    std::vector<std::vector<unsigned long>> exps;
    std::vector<Int> basis = gcd_free_basis(in, &exps);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(basis[i] >= 2);
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        CHECK(gcd(basis[i], basis[j]) == 1);
    }
    for (std::size_t k = 0; k < in.size(); ++k) {
      Int prod = 1, pw;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        mpz_pow_ui(pw.get_mpz_t(), basis[i].get_mpz_t(), exps[k][i]);
        prod *= pw;
      }
      CHECK(prod == in[k]);
    }
  }
}

TEST_CASE("is_exact_zero detects multiplicative relations") {
  LogForm a = LogForm::log_of_int(Int(4), Rat(3)) + LogForm::log_of_int(Int(2), Rat(-6));
  CHECK(is_exact_zero(a));

  LogForm b = LogForm::log_of_int(Int(2), Rat(2)) + LogForm::log_of_int(Int(3), Rat(-1));
  CHECK_FALSE(is_exact_zero(b));

  LogForm c = LogForm::log_of_int(Int(9), Rat(1, 2)) + LogForm::log_of_int(Int(3), Rat(-1));
  CHECK(is_exact_zero(c));
}

TEST_CASE("sign: elementary and huge comparisons") {
  LogForm a = LogForm::log_of_int(Int(2), Rat(2)) + LogForm::log_of_int(Int(3), Rat(-1));
  SignOutcome oa = sign_of(a);
  CHECK(oa.sign == Sign::Positive);
  CHECK_FALSE(oa.exact);

  LogForm z = LogForm::log_of_int(Int(4), Rat(3)) + LogForm::log_of_int(Int(2), Rat(-6));
  SignOutcome oz = sign_of(z);
  CHECK(oz.sign == Sign::Zero);
  CHECK(oz.exact);

  // 317811*log2 - 317811*log317811 + 121393*log121393 + 196418*log196418 > 0
  LogForm big = LogForm::log_of_int(Int(2), Rat(317811)) +
                LogForm::log_of_int(Int(317811), Rat(-317811)) +
                LogForm::log_of_int(Int(121393), Rat(121393)) +
                LogForm::log_of_int(Int(196418), Rat(196418));
  CHECK(sign_of(big).sign == Sign::Positive);
}

TEST_CASE("compare_monomials examples") {
  MonomialProduct l, r;
  l.mul(Int(2), Rat(10));
  r.mul(Int(3), Rat(6));
  CHECK(compare_monomials(l, r).sign == Sign::Positive);  // 1024 > 729

  MonomialProduct l2, r2;
  l2.mul(Int(4), Rat(3));
  r2.mul(Int(2), Rat(6));
  CHECK(compare_monomials(l2, r2).sign == Sign::Zero);

  MonomialProduct l3, r3;
  l3.mul(Int(2), Rat(317811));
  r3.mul(Int(317811), Rat(317811));
  r3.mul(Int(121393), Rat(-121393));
  r3.mul(Int(196418), Rat(-196418));
  CHECK(compare_monomials(l3, r3).sign == Sign::Positive);
}

TEST_CASE("sign algebra: negation and doubling") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<long> dm(2, 10000), dw(-10, 10);
  for (int iter = 0; iter < 100; ++iter) {
    LogForm f;
    for (int i = 0; i < 4; ++i) {
      long w = dw(rng);
      if (w == 0) w = 1;
      f.add_atom(Int(dm(rng)), Rat(w));
    }
    SignOutcome s = sign_of(f);
    CHECK(sign_of(-f).value() == -s.value());
    CHECK(sign_of(f + f).value() == s.value());
  }
}

TEST_CASE("sign agrees with a 4096-bit reference on random forms") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> dm(2, 10000), dw(-10, 10);
  std::uniform_int_distribution<int> dk(1, 6);
  int checked = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    LogForm f;
    int k = dk(rng);
    for (int i = 0; i < k; ++i) {
      long w = dw(rng);
      if (w == 0) continue;
      f.add_atom(Int(dm(rng)), Rat(w));
    }
    int ref = reference_sign(f, 4096);
    if (ref == 0) continue;  // reference interval does not exclude zero
    CHECK(sign_of(f).value() == ref);
    ++checked;
  }
  CHECK(checked > 900);
}

TEST_CASE("planted relations are detected exactly") {
  std::mt19937_64 rng(31337);
  const long primes[] = {2, 3, 5, 7, 11};
  std::uniform_int_distribution<long> de(0, 6);
  for (int iter = 0; iter < 200; ++iter) {
    Int prod = 1, pw;
    LogForm f;
    for (long p : primes) {
      long e = de(rng);
      if (e == 0) continue;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p),
                    static_cast<unsigned long>(e));
      prod *= pw;
      f.add_atom(Int(p), Rat(-e));
    }
    if (prod == 1) continue;
    f.add_atom(prod, Rat(1));
    SignOutcome s = sign_of(f);
    CHECK(s.sign == Sign::Zero);
    CHECK(s.exact);
    // same relation with the argument squared and weight halved
    LogForm g = f.scaled(Rat(-3, 7));
    CHECK(sign_of(g).sign == Sign::Zero);
  }
}

TEST_CASE("precision cap failure is reported, not mis-signed") {
  // log(2^64 + 1) - 64*log(2) is about 5.4e-20, invisible at 32 bits
  Int big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 64);
  big += 1;
  LogForm f = LogForm::log_of_int(big, Rat(1)) + LogForm::log_of_int(Int(2), Rat(-64));
  SignConfig cfg;
  cfg.start_precision = 16;
  cfg.precision_cap = 32;
  CHECK_THROWS_AS(sign_of(f, cfg), PrecisionCapExceeded);
  CHECK(sign_of(f).sign == Sign::Positive);  // default cap resolves it
}

TEST_CASE("monotonic precision: higher start preserves the answer") {
  LogForm f = LogForm::log_of_int(Int(10007), Rat(3)) +
              LogForm::log_of_int(Int(9973), Rat(-3)) +
              LogForm::log_of_int(Int(2), Rat(-1, 100));
  SignConfig hi;
  hi.start_precision = 4096;
  CHECK(sign_of(f).value() == sign_of(f, hi).value());
}

TEST_CASE("nesterenko diagnostic is finite and positive") {
  LogForm f = LogForm::log_of_int(Int(2), Rat(2)) + LogForm::log_of_int(Int(3), Rat(-1));
  double bits = nesterenko_bound_bits(f);
  CHECK(bits > 0);
  CHECK(bits < 1e12);
}

TEST_CASE("log_of_rat splits numerator and denominator") {
  LogForm f = LogForm::log_of_rat(Rat(8, 9), Rat(1)) +
              LogForm::log_of_int(Int(2), Rat(-3)) + LogForm::log_of_int(Int(3), Rat(2));
  CHECK(is_exact_zero(f));
}
