#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sparseroot/chamber.hpp"
#include "sparseroot/oracle.hpp"
#include "sparseroot/randlab.hpp"
#include "sparseroot/rootcount.hpp"
#include "sparseroot/viro.hpp"

namespace sr = sparseroot;
using nlohmann::json;

namespace {

std::string read_poly_arg(const std::string& arg) {
  if (arg != "-") return arg;
  std::ostringstream os;
  os << std::cin.rdbuf();
  return os.str();
}

// "0,404,405,808" (1-D) or "(0,0),(1,0),(2,0),(0,1),(2,1)" (2-D)
std::vector<std::vector<long long>> parse_support(const std::string& text) {
  std::vector<std::vector<long long>> pts;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto read_int = [&] {
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw std::runtime_error("bad support syntax near position " + std::to_string(i));
    return std::stoll(text.substr(start, i - start));
  };
  skip_ws();
  bool tuples = i < text.size() && text[i] == '(';
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (tuples) {
      if (text[i] != '(') throw std::runtime_error("expected '(' in support list");
      ++i;
      std::vector<long long> p;
      p.push_back(read_int());
      skip_ws();
      while (i < text.size() && text[i] == ',') {
        ++i;
        p.push_back(read_int());
        skip_ws();
      }
      if (i >= text.size() || text[i] != ')') throw std::runtime_error("expected ')' in support list");
      ++i;
      pts.push_back(std::move(p));
    } else {
      pts.push_back({read_int()});
    }
    skip_ws();
    if (i < text.size()) {
      if (text[i] != ',') throw std::runtime_error("expected ',' between support points");
      ++i;
    }
  }
  if (pts.empty()) throw std::runtime_error("empty support list");
  return pts;
}

std::vector<sr::Rat> parse_coeff_list(const std::string& text) {
  std::vector<sr::Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    sr::Rat r(item);
    r.canonicalize();
    out.push_back(r);
  }
  if (out.empty()) throw std::runtime_error("empty coefficient list");
  return out;
}

json fan_to_json(const sr::ChamberFan& fan) {
  json j;
  j["cones"] = fan.radiants.size();
  json rads = json::array();
  for (const auto& r : fan.radiants) {
    json one;
    json idx = json::array();
    for (int i : r.indices) idx.push_back(i + 1);  // 1-based, matching reports
    one["indices"] = idx;
    one["direction"] = {r.dir.x.get_str(), r.dir.y.get_str()};
    one["shift"] = {r.shift.x.str(), r.shift.y.str()};
    rads.push_back(one);
  }
  j["radiants"] = rads;
  json nr = json::array();
  for (const auto& g : fan.non_radiant_groups) {
    json idx = json::array();
    for (int i : g) idx.push_back(i + 1);
    nr.push_back(idx);
  }
  j["non_radiant_groups"] = nr;
  return j;
}

json viro_to_json(const sr::LiftedSupport& ls, const sr::ViroDiagram& vd) {
  json j;
  j["lift"] = ls.lift;
  switch (ls.located.kind) {
    case sr::LocateKind::UniqueCone: j["location"] = "unique-cone"; break;
    case sr::LocateKind::Ambiguous: j["location"] = "ambiguous"; break;
    case sr::LocateKind::OnBoundary: j["location"] = "on-boundary"; break;
  }
  json cells = json::array();
  for (const auto& c : vd.tri.cells) cells.push_back(c.vertices);
  j["cells"] = cells;
  j["signs"] = vd.signs;
  if (!vd.midpoints.empty()) {
    json mids = json::array();
    for (const auto& m : vd.midpoints) mids.push_back(sr::to_string(m));
    j["midpoints"] = mids;
  }
  if (!vd.segments.empty()) {
    json segs = json::array();
    for (const auto& s : vd.segments) {
      json seg = json::array();
      seg.push_back(json::array({sr::to_string(s.a.v[0]), sr::to_string(s.a.v[1])}));
      seg.push_back(json::array({sr::to_string(s.b.v[0]), sr::to_string(s.b.v[1])}));
      segs.push_back(std::move(seg));
    }
    j["segments"] = segs;
  }
  j["count"] = vd.count;
  return j;
}

mpfr_prec_t effective_precision_cap(long long flag_value) {
  if (flag_value > 0) return static_cast<mpfr_prec_t>(flag_value);
  if (const char* env = std::getenv("SPARSEROOT_PRECISION_CAP")) {
    long long v = std::atoll(env);
    if (v > 0) return static_cast<mpfr_prec_t>(v);
  }
  return sr::SignConfig{}.precision_cap;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparseroot: real root counting for sparse polynomials"};
  app.require_subcommand(1);

  std::string poly_text, support_text, coeff_text, format = "json", oracle_name = "sturm";
  std::string m_list = "8,16,32,64", degree_list = "1000,1000000,1000000000";
  std::string interval_name = "positive";
  bool fallback = false, serial = false;
  long long precision_cap = 0, samples = 500, trials = 500, oracle_cap = 0, sampler_m = 16;
  long long dmax = 0;
  std::uint64_t seed = 0;

  auto* c_count = app.add_subcommand("count", "count real roots by sign class");
  c_count->add_option("poly", poly_text, "polynomial text, or - for stdin")->required();
  c_count->add_flag("--fallback-oracle", fallback, "resolve Undetermined via the Sturm oracle");
  c_count->add_option("--precision-cap", precision_cap, "sign-evaluation precision cap in bits");
  c_count->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* c_cones = app.add_subcommand("cones", "chamber-cone fan of a support");
  c_cones->add_option("support", support_text, "e.g. 0,404,405,808 or (0,0),(1,0),...")->required();
  c_cones->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* c_viro = app.add_subcommand("viro", "canonical Viro diagram");
  c_viro->add_option("poly", poly_text, "polynomial text (univariate), or - for stdin");
  c_viro->add_option("--support", support_text, "2-D support as (x,y) tuples");
  c_viro->add_option("--coeffs", coeff_text, "comma-separated rational coefficients");
  c_viro->add_option("--precision-cap", precision_cap);

  auto* c_amoeba = app.add_subcommand("amoeba", "discriminant-contour samples (CSV)");
  c_amoeba->add_option("support", support_text)->required();
  c_amoeba->add_option("--samples", samples)->check(CLI::PositiveNumber);

  auto* c_oracle = app.add_subcommand("oracle", "reference root counts");
  c_oracle->add_option("poly", poly_text)->required();
  c_oracle->add_option("--oracle", oracle_name)->check(CLI::IsMember({"sturm", "descartes"}));
  c_oracle->add_option("--interval", interval_name)
      ->check(CLI::IsMember({"positive", "negative", "whole"}));

  auto* c_exp = app.add_subcommand("experiment", "randomized experiments (CSV)");
  std::string kind;
  c_exp->add_option("kind", kind, "outer-frequency or timing")->required();
  c_exp->add_option("--M", m_list, "comma-separated M grid (outer-frequency) or sampler M (timing)");
  c_exp->add_option("--trials", trials)->check(CLI::PositiveNumber);
  c_exp->add_option("--seed", seed);
  c_exp->add_option("--support", support_text, "fixed 1-D support, e.g. 0,404,405,808");
  c_exp->add_option("--dmax", dmax, "random supports up to this degree")->check(CLI::PositiveNumber);
  c_exp->add_option("--oracle-cap", oracle_cap, "Sturm cross-check degree cap (0 = off)");
  c_exp->add_option("--degrees", degree_list, "degree grid for timing");
  c_exp->add_option("--sampler-M", sampler_m, "coefficient height for timing");
  c_exp->add_flag("--serial", serial, "run trials on the serial reference path");

  CLI11_PARSE(app, argc, argv);

  try {
    sr::SignConfig cfg;
    cfg.precision_cap = effective_precision_cap(precision_cap);

    if (*c_count) {
      sr::SparsePoly p = sr::parse(read_poly_arg(poly_text));
      sr::CountOptions opt;
      opt.fallback_oracle = fallback;
      opt.sign_cfg = cfg;
      sr::RootCountReport r = sr::count_real(p, opt);
      if (format == "json") {
        std::cout << sr::report_to_json(r) << "\n";
      } else {
        auto show = [](const sr::ClassCount& c) {
          return c.determined ? std::to_string(c.count) : std::string("undetermined");
        };
        std::cout << "positive: " << show(r.positive) << "\nnegative: " << show(r.negative)
                  << "\nzero multiplicity: " << r.zero_multiplicity << "\n";
      }
      return (r.positive.determined && r.negative.determined) ? 0 : 2;
    }

    if (*c_cones) {
      sr::SupportData sd = sr::null_basis(parse_support(support_text));
      sr::ChamberFan fan = sr::build_fan(sd);
      json j = fan_to_json(fan);
      if (format == "json") {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << j["cones"].get<std::size_t>() << " chamber cones\n";
        for (const auto& r : j["radiants"])
          std::cout << "radiant " << r["indices"].dump() << " dir ("
                    << r["direction"][0].get<std::string>() << ", "
                    << r["direction"][1].get<std::string>() << ")\n";
        for (const auto& g : j["non_radiant_groups"])
          std::cout << "non-radiant " << g.dump() << "\n";
      }
      return 0;
    }

    if (*c_viro) {
      std::vector<std::vector<long long>> pts;
      std::vector<sr::Rat> coeffs;
      if (!support_text.empty()) {
        if (coeff_text.empty()) throw std::runtime_error("--support requires --coeffs");
        pts = parse_support(support_text);
        coeffs = parse_coeff_list(coeff_text);
        if (coeffs.size() != pts.size())
          throw std::runtime_error("coefficient count does not match support size");
      } else {
        if (poly_text.empty()) throw std::runtime_error("need a polynomial or --support/--coeffs");
        sr::SparsePoly p = sr::parse(read_poly_arg(poly_text));
        for (auto& [e, c] : p.terms) {
          pts.push_back({e});
          coeffs.push_back(c);
        }
      }
      sr::SupportData sd = sr::null_basis(pts);
      sr::ChamberFan fan = sr::build_fan(sd);
      sr::LiftedSupport ls = sr::canonical_lift(coeffs, fan, cfg);
      if (ls.located.kind != sr::LocateKind::UniqueCone) {
        std::cout << viro_to_json(ls, sr::ViroDiagram{}).dump(2) << "\n";
        return 2;
      }
      std::vector<int> signs;
      for (auto& c : coeffs) signs.push_back(sr::sgn(c));
      sr::ViroDiagram vd = sr::viro_diagram(ls, signs);
      std::cout << viro_to_json(ls, vd).dump(2) << "\n";
      return 0;
    }

    if (*c_amoeba) {
      sr::SupportData sd = sr::null_basis(parse_support(support_text));
      auto rows = sr::amoeba_boundary_samples(sd, static_cast<int>(samples));
      std::cout << "t1,t2,y1,y2\n";
      for (const auto& r : rows)
        std::cout << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << '\n';
      return 0;
    }

    if (*c_oracle) {
      sr::SparsePoly p = sr::parse(read_poly_arg(poly_text));
      sr::oracle::Interval iv = sr::oracle::Interval::positive();
      if (interval_name == "negative") iv = sr::oracle::Interval::negative();
      if (interval_name == "whole") iv = sr::oracle::Interval::whole();
      long long count = oracle_name == "sturm"
                            ? sr::oracle::sturm_count(p, iv)
                            : sr::oracle::descartes_bisection_count(p, iv);
      json j;
      j["oracle"] = oracle_name;
      j["interval"] = interval_name;
      j["count"] = count;
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*c_exp) {
      std::vector<long long> Ms;
      {
        std::stringstream ss(m_list);
        std::string item;
        while (std::getline(ss, item, ',')) Ms.push_back(std::stoll(item));
      }
      if (kind == "outer-frequency") {
        sr::randlab::SamplerConfig base;
        base.seed = seed;
        if (!support_text.empty()) {
          for (auto& p : parse_support(support_text)) base.exponents.push_back(p[0]);
        } else {
          base.dmax = dmax > 0 ? dmax : 60;
        }
        auto res = sr::randlab::run_outer_frequency(base, Ms, trials, oracle_cap, !serial);
        std::cout << sr::randlab::frequency_csv(res);
        for (const auto& d : res.disagreements)
          std::cerr << "disagreement M=" << d.M << " trial=" << d.trial
                    << " pipeline=" << d.pipeline_count << " oracle=" << d.oracle_count
                    << " poly=" << d.poly << "\n";
        return 0;
      }
      if (kind == "timing") {
        std::vector<long long> degrees;
        std::stringstream ss(degree_list);
        std::string item;
        while (std::getline(ss, item, ',')) degrees.push_back(std::stoll(item));
        auto rows = sr::randlab::run_timing_scaling(degrees, static_cast<int>(trials),
                                                    sampler_m, seed);
        std::cout << sr::randlab::timing_csv(rows);
        return 0;
      }
      throw std::runtime_error("unknown experiment kind: " + kind);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
