#include "sparseroot/oracle.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cassert>
#include <map>

namespace sparseroot {
namespace oracle {

// ---------------------------------------------------------------------------
// dense rational polynomials (Sturm path)
// ---------------------------------------------------------------------------

int DensePoly::degree() const {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (sgn(c[i]) != 0) return i;
  return -1;
}

void DensePoly::trim() {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

DensePoly to_dense(const SparsePoly& p, long long degree_cap) {
  if (p.degree() > degree_cap)
    throw DegreeCapExceeded("degree " + std::to_string(p.degree()) +
                            " exceeds oracle cap " + std::to_string(degree_cap));
  DensePoly d;
  d.c.assign(static_cast<std::size_t>(p.degree()) + 1, Rat(0));
  for (auto& [e, coef] : p.terms) d.c[static_cast<std::size_t>(e)] = coef;
  return d;
}

namespace {

DensePoly dense_derivative(const DensePoly& p) {
  DensePoly d;
  for (std::size_t i = 1; i < p.c.size(); ++i) d.c.push_back(p.c[i] * Rat(Int(i)));
  d.trim();
  return d;
}

Rat dense_eval(const DensePoly& p, const Rat& x) {
  Rat acc(0);
  for (int i = static_cast<int>(p.c.size()) - 1; i >= 0; --i) acc = acc * x + p.c[i];
  acc.canonicalize();
  return acc;
}

// keeps signs, controls coefficient growth
void make_primitive(DensePoly& p) {
  p.trim();
  if (p.c.empty()) return;
  Int den_lcm = 1, num_gcd = 0;
  for (auto& v : p.c) {
    if (sgn(v) == 0) continue;
    den_lcm = lcm(den_lcm, v.get_den());
    num_gcd = gcd(num_gcd, v.get_num());
  }
  Rat scale(den_lcm, abs_int(num_gcd));
  scale.canonicalize();
  for (auto& v : p.c) {
    v *= scale;
    v.canonicalize();
  }
}

DensePoly dense_rem(DensePoly a, const DensePoly& b) {
  const int db = b.degree();
  assert(db >= 0);
  const Rat& lb = b.c[static_cast<std::size_t>(db)];
  a.trim();
  while (a.degree() >= db) {
    const int da = a.degree();
    Rat f = a.c[static_cast<std::size_t>(da)] / lb;
    for (int i = 0; i <= db; ++i) {
      a.c[static_cast<std::size_t>(da - db + i)] -= f * b.c[static_cast<std::size_t>(i)];
      a.c[static_cast<std::size_t>(da - db + i)].canonicalize();
    }
    a.c[static_cast<std::size_t>(da)] = 0;
    a.trim();
  }
  return a;
}

DensePoly dense_div_exact(const DensePoly& a, const DensePoly& b) {
  DensePoly rem(a);
  rem.trim();
  const int db = b.degree();
  const Rat& lb = b.c[static_cast<std::size_t>(db)];
  DensePoly q;
  q.c.assign(std::max<std::size_t>(rem.c.size(), 1), Rat(0));
  while (rem.degree() >= db) {
    const int da = rem.degree();
    Rat f = rem.c[static_cast<std::size_t>(da)] / lb;
    f.canonicalize();
    q.c[static_cast<std::size_t>(da - db)] = f;
    for (int i = 0; i <= db; ++i) {
      rem.c[static_cast<std::size_t>(da - db + i)] -= f * b.c[static_cast<std::size_t>(i)];
      rem.c[static_cast<std::size_t>(da - db + i)].canonicalize();
    }
    rem.trim();
  }
  assert(rem.degree() < 0);
  q.trim();
  return q;
}

DensePoly dense_gcd(DensePoly a, DensePoly b) {
  a.trim();
  b.trim();
  while (b.degree() >= 0) {
    DensePoly r = dense_rem(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(a);
  return a;
}

int sign_at_inf(const DensePoly& p, int direction) {
  int d = p.degree();
  if (d < 0) return 0;
  int s = sgn(p.c[static_cast<std::size_t>(d)]);
  return (direction < 0 && d % 2 != 0) ? -s : s;
}

int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

long long sturm_count(const SparsePoly& p, const Interval& iv, long long degree_cap) {
  DensePoly dense = to_dense(p, degree_cap);
  DensePoly g = dense_gcd(dense, dense_derivative(dense));
  DensePoly q = g.degree() > 0 ? dense_div_exact(dense, g) : dense;
  make_primitive(q);
  if (q.degree() == 0) return 0;

  long long endpoint_root = 0;
  for (int side = 0; side < 2; ++side) {
    const std::optional<Rat>& e = side == 0 ? iv.lo : iv.hi;
    if (!e) continue;
    if (sgn(dense_eval(q, *e)) == 0) {
      DensePoly lin;
      lin.c = {Rat(-*e), Rat(1)};
      q = dense_div_exact(q, lin);
      make_primitive(q);
      if (side == 1) endpoint_root = 1;  // interval is half-open on the right
    }
  }
  if (q.degree() <= 0) return endpoint_root;

  std::vector<DensePoly> chain{q, dense_derivative(q)};
  make_primitive(chain.back());
  while (chain.back().degree() > 0) {
    DensePoly r = dense_rem(chain[chain.size() - 2], chain.back());
    for (auto& v : r.c) v = -v;
    make_primitive(r);
    if (r.degree() < 0) break;
    chain.push_back(std::move(r));
  }

  auto var_at = [&](const std::optional<Rat>& e, int direction) {
    std::vector<int> signs;
    for (auto& s : chain)
      signs.push_back(e ? sgn(dense_eval(s, *e)) : sign_at_inf(s, direction));
    return variations(signs);
  };
  return var_at(iv.lo, -1) - var_at(iv.hi, +1) + endpoint_root;
}

// ---------------------------------------------------------------------------
// sparse-form bisection oracle
// ---------------------------------------------------------------------------

namespace {

struct Budget {
  long remaining;
  void spend(long n = 1) {
    remaining -= n;
    if (remaining < 0)
      throw NeedsMorePrecision("bisection budget exhausted near a suspected multiple root");
  }
};

SparsePoly sparse_derivative(const SparsePoly& p) {
  std::vector<std::pair<long long, Rat>> raw;
  for (auto& [e, c] : p.terms)
    if (e > 0) raw.emplace_back(e - 1, c * Rat(to_int(e)));
  if (raw.empty()) {
    SparsePoly zero;  // derivative of a constant; signalled by empty terms
    return zero;
  }
  return normalize_terms(std::move(raw));
}

// sign of a 2-term polynomial at x > 0, exactly, via log comparison; cheap
// even for huge exponents
int sign_binomial_at(const Rat& c0, const Rat& c1, long long a, const Rat& x) {
  int s0 = sgn(c0), s1 = sgn(c1);
  if (s0 == s1) return s0;
  MonomialProduct lhs, rhs;
  lhs.mul_rat(abs_rat(c0), Rat(1));
  rhs.mul_rat(abs_rat(c1), Rat(1));
  rhs.mul_rat(x, Rat(static_cast<long>(a)));
  return s0 * compare_monomials(lhs, rhs).value();
}

// [lo, hi] enclosure of p over the point interval [xl, xu], 0 < xl <= xu
void enclose_over(const SparsePoly& p, const Rat& xl, const Rat& xu, mpfr_prec_t prec,
                  mpfr_t lo, mpfr_t hi) {
  mpfr_t xld, xuu, pd, pu, t;
  mpfr_inits2(prec, xld, xuu, pd, pu, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_q(xld, xl.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(xuu, xu.get_mpq_t(), MPFR_RNDU);
  mpfr_set_zero(lo, 1);
  mpfr_set_zero(hi, 1);
  for (auto& [e, c] : p.terms) {
    if (e == 0) {
      mpfr_set_q(t, c.get_mpq_t(), MPFR_RNDD);
      mpfr_add(lo, lo, t, MPFR_RNDD);
      mpfr_set_q(t, c.get_mpq_t(), MPFR_RNDU);
      mpfr_add(hi, hi, t, MPFR_RNDU);
      continue;
    }
    mpfr_pow_ui(pd, xld, static_cast<unsigned long>(e), MPFR_RNDD);
    mpfr_pow_ui(pu, xuu, static_cast<unsigned long>(e), MPFR_RNDU);
    if (sgn(c) > 0) {
      mpfr_mul_q(t, pd, c.get_mpq_t(), MPFR_RNDD);
      mpfr_add(lo, lo, t, MPFR_RNDD);
      mpfr_mul_q(t, pu, c.get_mpq_t(), MPFR_RNDU);
      mpfr_add(hi, hi, t, MPFR_RNDU);
    } else {
      mpfr_mul_q(t, pu, c.get_mpq_t(), MPFR_RNDD);
      mpfr_add(lo, lo, t, MPFR_RNDD);
      mpfr_mul_q(t, pd, c.get_mpq_t(), MPFR_RNDU);
      mpfr_add(hi, hi, t, MPFR_RNDU);
    }
  }
  mpfr_clears(xld, xuu, pd, pu, t, static_cast<mpfr_ptr>(nullptr));
}

bool excludes_zero_over(const SparsePoly& p, const Rat& xl, const Rat& xu,
                        mpfr_prec_t prec) {
  mpfr_t lo, hi;
  mpfr_init2(lo, prec);
  mpfr_init2(hi, prec);
  enclose_over(p, xl, xu, prec, lo, hi);
  bool out = mpfr_sgn(lo) > 0 || mpfr_sgn(hi) < 0;
  mpfr_clear(lo);
  mpfr_clear(hi);
  return out;
}

// exact sign of a sparse polynomial at rational x > 0
int sign_at(const SparsePoly& p, const Rat& x) {
  if (sgn(x) == 0) return sgn(p.coeff(0));
  if (p.term_count() == 1) return sgn(p.coeff(0));
  if (p.term_count() == 2)
    return sign_binomial_at(p.coeff(0), p.coeff(1), p.terms[1].first, x);

  for (mpfr_prec_t prec = 128; prec <= 16384; prec *= 4)
    if (excludes_zero_over(p, x, x, prec)) {
      mpfr_t lo, hi;
      mpfr_init2(lo, prec);
      mpfr_init2(hi, prec);
      enclose_over(p, x, x, prec, lo, hi);
      int s = mpfr_sgn(lo) > 0 ? 1 : -1;
      mpfr_clear(lo);
      mpfr_clear(hi);
      return s;
    }

  // likely an exact root: evaluate exactly on the sparse form
  const Int& num = x.get_num();
  const Int& den = x.get_den();
  const long long dmax = p.degree();
  const double bits = static_cast<double>(mpz_sizeinbase(num.get_mpz_t(), 2) +
                                          mpz_sizeinbase(den.get_mpz_t(), 2));
  if (bits * static_cast<double>(dmax) > 2e8)
    throw NeedsMorePrecision("exact evaluation too large at degree " +
                             std::to_string(dmax));
  Int lcm_den = 1;
  for (auto& [e, c] : p.terms) lcm_den = lcm(lcm_den, c.get_den());
  Int acc = 0, pw;
  for (auto& [e, c] : p.terms) {
    Int scaled = c.get_num() * (lcm_den / c.get_den());
    mpz_pow_ui(pw.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
    scaled *= pw;
    mpz_pow_ui(pw.get_mpz_t(), den.get_mpz_t(),
               static_cast<unsigned long>(dmax - e));
    scaled *= pw;
    acc += scaled;
  }
  return sgn(acc);
}

struct Record {
  bool exact = false;
  Rat point;    // exact root
  Rat lo, hi;   // bracket with opposite nonzero signs of the target poly
  Rat left_edge() const { return exact ? point : lo; }
  Rat right_edge() const { return exact ? point : hi; }
};

// one bisection step of a sign-change bracket; may turn it into an exact root
void bisect_record(const SparsePoly& p, Record& r, Budget& bud) {
  if (r.exact) return;
  bud.spend();
  Rat mid = (r.lo + r.hi) / 2;
  mid.canonicalize();
  int sm = sign_at(p, mid);
  if (sm == 0) {
    r.exact = true;
    r.point = mid;
    return;
  }
  if (sm == sign_at(p, r.lo))
    r.lo = mid;
  else
    r.hi = mid;
}

std::vector<Record> isolate_positive(const SparsePoly& g, Budget& bud);

// grows hi upward from a point with known sign until the sign flips to
// target (which it must, g being monotone past its last critical point)
Record expand_up(const SparsePoly& g, const Rat& from, int sign_from, Budget& bud) {
  Rat lo = from, hi = from > 0 ? Rat(from * 2) : Rat(1);
  hi.canonicalize();
  while (true) {
    bud.spend();
    int s = sign_at(g, hi);
    if (s == 0) return Record{true, hi, {}, {}};
    if (s != sign_from) return Record{false, {}, lo, hi};
    lo = hi;
    hi *= 2;
  }
}

// shrinks lo downward from a point until the sign matches the sign at 0+
Record expand_down(const SparsePoly& g, const Rat& from, int sign_at_zero, Budget& bud) {
  Rat hi = from, lo = from / 2;
  lo.canonicalize();
  while (true) {
    bud.spend();
    int s = sign_at(g, lo);
    if (s == 0) return Record{true, lo, {}, {}};
    if (s == sign_at_zero) return Record{false, {}, lo, hi};
    hi = lo;
    lo /= 2;
    lo.canonicalize();
  }
}

// Roots of g in (0, inf), as exact points or sign-change brackets, sorted.
std::vector<Record> isolate_positive(const SparsePoly& g, Budget& bud) {
  std::vector<Record> roots;
  if (g.terms.empty() || g.term_count() == 1) return roots;
  const int s_zero = sgn(g.coeff(0));
  const int s_inf = sgn(g.terms.back().second);

  SparsePoly gp = sparse_derivative(g);
  std::vector<Record> crits =
      gp.terms.empty() ? std::vector<Record>{} : isolate_positive(gp, bud);

  // samples: ordered (point, sign-of-g) pairs flanking each critical point
  struct Sample {
    Rat x;
    int s;
    bool bracket_left = false;  // stretch to the next sample is inside a bracket
  };
  std::vector<Sample> samples;

  for (Record& cr : crits) {
    if (cr.exact) {
      int s = sign_at(g, cr.point);
      if (s == 0) roots.push_back(Record{true, cr.point, {}, {}});
      samples.push_back({cr.point, s});
      continue;
    }
    while (true) {
      bud.spend();
      int su = sign_at(g, cr.lo);
      int sv = sign_at(g, cr.hi);
      if (su == 0 || sv == 0) {
        // probe landed on a root of g; move the probe by narrowing the
        // critical bracket (it tracks a root of g', not of g)
        bisect_record(gp, cr, bud);
        if (cr.exact) {
          int s = sign_at(g, cr.point);
          if (s == 0) roots.push_back(Record{true, cr.point, {}, {}});
          samples.push_back({cr.point, s});
          break;
        }
        continue;
      }
      if (su != sv) {
        roots.push_back(Record{false, {}, cr.lo, cr.hi});
        samples.push_back({cr.lo, su, true});
        samples.push_back({cr.hi, sv});
        break;
      }
      // equal signs: 0 or 2 roots around this extremum
      if (excludes_zero_over(g, cr.lo, cr.hi, 512) ||
          excludes_zero_over(g, cr.lo, cr.hi, 4096)) {
        samples.push_back({cr.lo, su, true});
        samples.push_back({cr.hi, sv});
        break;
      }
      bisect_record(gp, cr, bud);
      if (cr.exact) {
        int s = sign_at(g, cr.point);
        if (s == 0) roots.push_back(Record{true, cr.point, {}, {}});
        samples.push_back({cr.point, s});
        break;
      }
    }
  }

  // monotone stretches between samples
  if (samples.empty()) {
    if (s_zero != s_inf) {
      bud.spend();
      int s1 = sign_at(g, Rat(1));
      if (s1 == 0)
        roots.push_back(Record{true, Rat(1), {}, {}});
      else if (s1 == s_zero)
        roots.push_back(expand_up(g, Rat(1), s_zero, bud));
      else
        roots.push_back(expand_down(g, Rat(1), s_zero, bud));
    }
    return roots;
  }

  if (samples.front().s != 0 && samples.front().s != s_zero)
    roots.push_back(expand_down(g, samples.front().x, s_zero, bud));
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const Sample& a = samples[i];
    const Sample& b = samples[i + 1];
    if (a.bracket_left) continue;  // interior of a bracket, already handled
    if (a.s != 0 && b.s != 0 && a.s != b.s)
      roots.push_back(Record{false, {}, a.x, b.x});
  }
  if (samples.back().s != 0 && samples.back().s != s_inf)
    roots.push_back(expand_up(g, samples.back().x, samples.back().s, bud));

  std::sort(roots.begin(), roots.end(), [](const Record& a, const Record& b) {
    return a.left_edge() < b.left_edge();
  });
  return roots;
}

// true iff the root isolated by r lies in (lo, hi]; refines as needed
bool root_in_interval(const SparsePoly& p, Record& r, const Rat& lo,
                      const std::optional<Rat>& hi, Budget& bud) {
  while (true) {
    if (r.exact) return r.point > lo && (!hi || r.point <= *hi);
    if (r.hi <= lo) return false;
    if (hi && r.lo >= *hi) return false;
    bool straddles_lo = r.lo < lo && lo < r.hi;
    bool straddles_hi = hi && r.lo < *hi && *hi < r.hi;
    if (!straddles_lo && !straddles_hi) return true;
    if (straddles_lo && sign_at(p, lo) == 0) return false;   // root == lo, excluded
    if (straddles_hi && sign_at(p, *hi) == 0) return true;   // root == hi, included
    bisect_record(p, r, bud);
  }
}

}  // namespace

long long descartes_bisection_count(const SparsePoly& p, const Interval& iv,
                                    int budget) {
  Budget bud{budget};
  long long count = 0;

  Rat lo_pos(0);
  bool count_positive_side = true;
  if (iv.lo && *iv.lo > 0) lo_pos = *iv.lo;
  if (iv.hi && *iv.hi <= 0) count_positive_side = false;
  if (count_positive_side) {
    std::vector<Record> roots = isolate_positive(p, bud);
    for (Record& r : roots)
      if (root_in_interval(p, r, lo_pos, iv.hi, bud)) ++count;
  }

  // negative side via x -> -x when the interval reaches below 0
  if (!iv.lo || *iv.lo < 0) {
    SparsePoly q = negate_variable(p);
    Rat nlo(0);
    if (iv.hi && *iv.hi < 0) nlo = -*iv.hi;  // (lo,hi] maps to [-hi,-lo)
    std::optional<Rat> nhi;
    if (iv.lo) nhi = -*iv.lo;
    std::vector<Record> roots = isolate_positive(q, bud);
    for (Record& r : roots) {
      // reflected interval is [-hi, -lo): half-openness flips, so handle
      // the endpoints explicitly
      if (r.exact) {
        bool in = (r.point >= nlo) && (!nhi || r.point < *nhi);
        if (iv.hi && *iv.hi < 0 && r.point == nlo) in = true;  // root == hi included
        if (in) ++count;
        continue;
      }
      // brackets are open; shift the half-open test by an exact endpoint check
      Rat lo_adj = nlo;
      std::optional<Rat> hi_adj = nhi;
      bool root_at_lo = sgn(nlo) != 0 && sign_at(q, nlo) == 0;
      bool take = root_in_interval(q, r, lo_adj, hi_adj, bud);
      if (take && hi_adj && r.exact && r.point == *hi_adj)
        take = false;  // -lo itself maps to lo, which is excluded
      if (!take && root_at_lo && r.exact && r.point == nlo)
        take = iv.hi && *iv.hi < 0;
      if (take) ++count;
    }
  }
  return count;
}

bool verify_log_sos_identity(int k) {
  if (k < 1 || k > 20) throw std::invalid_argument("k out of range [1, 20]");
  std::map<long long, Rat> sum;
  Int two_pow_k;
  mpz_ui_pow_ui(two_pow_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
  Rat lead(two_pow_k / 2);  // 2^(k-1)
  for (int i = 0; i < k; ++i) {
    Int tp;
    mpz_ui_pow_ui(tp.get_mpz_t(), 2, static_cast<unsigned long>(i));
    long long e = tp.get_si();
    Rat w = lead / Rat(tp);  // 2^(k-1) / 2^i
    // (x^(2^i) - 1)^2 = x^(2^(i+1)) - 2 x^(2^i) + 1
    sum[2 * e] += w;
    sum[e] += -2 * w;
    sum[0] += w;
  }
  std::map<long long, Rat> target;
  long long deg = two_pow_k.get_si();
  target[deg] = 1;
  target[1] = -Rat(two_pow_k);
  target[0] = Rat(two_pow_k) - 1;
  for (auto it = sum.begin(); it != sum.end();)
    it = sgn(it->second) == 0 ? sum.erase(it) : std::next(it);
  return sum == target;
}

}  // namespace oracle
}  // namespace sparseroot
