#include "sparseroot/rootcount.hpp"

#include <sstream>

#include "sparseroot/oracle.hpp"

#include <nlohmann/json.hpp>

namespace sparseroot {
namespace {

std::vector<long long> support_of(const SparsePoly& p) {
  std::vector<long long> e;
  for (auto& [expo, c] : p.terms) e.push_back(expo);
  return e;
}

std::vector<Rat> coeffs_of(const SparsePoly& p) {
  std::vector<Rat> c;
  for (auto& [expo, coef] : p.terms) c.push_back(coef);
  return c;
}

std::vector<int> one_based(const std::vector<int>& idx) {
  std::vector<int> out;
  for (int i : idx) out.push_back(i + 1);
  return out;
}

int sign_variations(const std::vector<Rat>& c) {
  int v = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (sgn(c[i]) != sgn(c[i + 1])) ++v;
  return v;
}

}  // namespace

std::shared_ptr<const ChamberFan> FanCache::get(const std::vector<long long>& exponents) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = fans_.find(exponents);
    if (it != fans_.end()) return it->second;
  }
  std::vector<std::vector<long long>> pts;
  for (long long e : exponents) pts.push_back({e});
  auto fan = std::make_shared<const ChamberFan>(build_fan(null_basis(pts)));
  std::lock_guard<std::mutex> lock(mu_);
  return fans_.emplace(exponents, std::move(fan)).first->second;
}

ClassCount count_positive_tetranomial(const SparsePoly& p, const CountOptions& opt) {
  if (p.term_count() != 4)
    throw std::invalid_argument("tetranomial path needs exactly 4 terms");
  ClassCount out;
  out.method = CountMethod::ChamberCone;

  std::shared_ptr<const ChamberFan> cached;
  const ChamberFan* fan;
  ChamberFan local;
  if (opt.cache) {
    cached = opt.cache->get(support_of(p));
    fan = cached.get();
  } else {
    std::vector<std::vector<long long>> pts;
    for (long long e : support_of(p)) pts.push_back({e});
    local = build_fan(null_basis(pts));
    fan = &local;
  }

  std::vector<Rat> coeffs = coeffs_of(p);
  LiftedSupport ls = canonical_lift(coeffs, *fan, opt.sign_cfg);
  out.lift = ls.lift;
  if (ls.located.kind != LocateKind::UniqueCone) {
    out.determined = false;
    out.note = ls.located.kind == LocateKind::OnBoundary
                   ? "coefficient point on a cone wall"
                   : "f lies in at least 2 distinct chamber cones";
    return out;
  }
  out.cone_pair = {one_based(ls.radiant_lo), one_based(ls.radiant_hi)};

  std::vector<int> signs;
  for (auto& c : coeffs) signs.push_back(sgn(c));
  ViroDiagram vd = viro_diagram(ls, signs);
  out.determined = true;
  out.count = vd.count;
  out.outer_chamber_caveat = true;  // exact only for f in an outer chamber
  return out;
}

int count_positive_trinomial(const SparsePoly& p, const SignConfig& cfg) {
  if (p.term_count() != 3)
    throw std::invalid_argument("trinomial path needs exactly 3 terms");
  std::vector<Rat> c = coeffs_of(p);
  int v = sign_variations(c);
  if (v == 0) return 0;
  if (v == 1) return 1;  // Descartes is exact for a single sign variation

  // doubly alternating: normalize to (+, -, +) and compare |c2| against the
  // double-root threshold  b*c1/(b-a) * (c3*(b-a)/(c1*a))^(a/b)
  if (sgn(c[0]) < 0)
    for (auto& x : c) x = -x;
  const Int a(static_cast<long>(p.terms[1].first)), b(static_cast<long>(p.terms[2].first));
  const Rat c1 = c[0], c3 = c[2];
  const Rat mid = abs_rat(c[1]);
  Rat ab(a, b);
  ab.canonicalize();

  MonomialProduct lhs, rhs;
  lhs.mul_rat(mid, Rat(1));
  rhs.mul(b, Rat(1));
  rhs.mul(b - a, Rat(-1));
  rhs.mul_rat(c1, Rat(1));
  rhs.mul_rat(c3, ab);
  rhs.mul(b - a, ab);
  rhs.mul_rat(c1, Rat(-ab));
  rhs.mul(a, Rat(-ab));

  switch (compare_monomials(lhs, rhs, cfg).sign) {
    case Sign::Negative: return 0;
    case Sign::Zero: return 1;
    case Sign::Positive: return 2;
  }
  return 0;  // unreachable
}

int count_positive_small(const SparsePoly& p) {
  if (p.term_count() == 1) return 0;
  if (p.term_count() == 2)
    return sgn(p.coeff(0)) != sgn(p.coeff(1)) ? 1 : 0;
  throw std::invalid_argument("small path needs 1 or 2 terms");
}

ClassCount count_positive(const SparsePoly& p, const CountOptions& opt) {
  ClassCount out;
  switch (p.term_count()) {
    case 1:
    case 2:
      out.determined = true;
      out.count = count_positive_small(p);
      out.method = CountMethod::ClosedForm;
      return out;
    case 3:
      out.determined = true;
      out.count = count_positive_trinomial(p, opt.sign_cfg);
      out.method = CountMethod::ClosedForm;
      return out;
    case 4: {
      out = count_positive_tetranomial(p, opt);
      if (out.determined || !opt.fallback_oracle) return out;
      break;
    }
    default:
      if (!opt.fallback_oracle) {
        out.determined = false;
        out.note = "polynomials with >= 5 terms are unsupported; use the oracle";
        return out;
      }
      break;
  }
  ClassCount fb = out;
  fb.determined = true;
  fb.method = CountMethod::OracleFallback;
  fb.outer_chamber_caveat = false;
  fb.count = static_cast<int>(
      oracle::sturm_count(p, oracle::Interval::positive(), opt.oracle_degree_cap));
  return fb;
}

RootCountReport count_real(const SparsePoly& p, const CountOptions& opt) {
  RootCountReport r;
  r.zero_multiplicity = p.zero_root_multiplicity;
  r.positive = count_positive(p, opt);
  r.negative = count_positive(negate_variable(p), opt);
  return r;
}

std::string report_to_json(const RootCountReport& r) {
  using nlohmann::json;
  auto cls = [](const ClassCount& c) {
    json j;
    if (c.determined)
      j["count"] = c.count;
    else
      j["count"] = "undetermined";
    switch (c.method) {
      case CountMethod::ChamberCone: j["method"] = "chamber-cone"; break;
      case CountMethod::ClosedForm: j["method"] = "closed-form"; break;
      case CountMethod::OracleFallback: j["method"] = "oracle-fallback"; break;
    }
    if (c.cone_pair) j["cone_pair"] = {c.cone_pair->first, c.cone_pair->second};
    if (!c.lift.empty()) j["lift"] = c.lift;
    j["count_valid_iff_outer_chamber"] = c.outer_chamber_caveat;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
  };
  json j;
  j["positive"] = cls(r.positive);
  j["negative"] = cls(r.negative);
  j["zero_multiplicity"] = r.zero_multiplicity;
  return j.dump(2);
}

}  // namespace sparseroot
