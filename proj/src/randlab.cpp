#include "sparseroot/randlab.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sparseroot/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sparseroot {
namespace randlab {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(seed ^ splitmix64(a)) ^ b);
}

Rat continuous_magnitude(double u) {
  // exp(u) rounded to 64 fractional bits, clamped away from 0
  double scaled = std::ldexp(std::exp(u), 64);
  Int num;
  mpz_set_d(num.get_mpz_t(), scaled);
  if (sgn(num) == 0) num = 1;
  Int den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, 64);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

SparsePoly sample_tetranomial(const SamplerConfig& cfg) {
  if (cfg.M < 0) throw std::invalid_argument("M must be >= 0");
  std::mt19937_64 rng(splitmix64(cfg.seed));

  std::vector<long long> exps = cfg.exponents;
  if (exps.empty()) {
    if (cfg.dmax < 3) throw std::invalid_argument("dmax must be >= 3 for a random support");
    std::set<long long> chosen;
    std::uniform_int_distribution<long long> d(1, cfg.dmax);
    while (chosen.size() < 3) chosen.insert(d(rng));
    exps = {0};
    exps.insert(exps.end(), chosen.begin(), chosen.end());
  }
  if (exps.size() != 4 || !std::is_sorted(exps.begin(), exps.end()) ||
      std::adjacent_find(exps.begin(), exps.end()) != exps.end())
    throw std::invalid_argument("support must be 4 strictly increasing exponents");

  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<long long> expo(0, cfg.M);
  std::uniform_real_distribution<double> uni(-double(cfg.M), double(cfg.M));

  SparsePoly p;
  for (long long e : exps) {
    Rat mag;
    if (cfg.model == Model::Integer) {
      Int v;
      mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(expo(rng)));
      mag = Rat(v);
    } else {
      mag = continuous_magnitude(uni(rng));
    }
    p.terms.emplace_back(e, coin(rng) ? mag : -mag);
  }
  return p;
}

namespace {

struct TrialOutcome {
  bool unique = false;
  bool checked = false;
  bool agreed = false;
  int pipeline_count = 0;
  long long oracle_count = 0;
  std::string poly;
};

TrialOutcome run_trial(const SamplerConfig& base, long long M, std::uint64_t trial,
                       long long oracle_degree_cap, FanCache& cache) {
  SamplerConfig cfg = base;
  cfg.M = M;
  cfg.seed = mix(base.seed, static_cast<std::uint64_t>(M), trial);
  SparsePoly p = sample_tetranomial(cfg);

  CountOptions opt;
  opt.cache = &cache;
  ClassCount cc = count_positive_tetranomial(p, opt);

  TrialOutcome out;
  out.unique = cc.determined;
  if (out.unique && oracle_degree_cap > 0 && p.degree() <= oracle_degree_cap) {
    out.checked = true;
    out.pipeline_count = cc.count;
    out.oracle_count = oracle::sturm_count(p, oracle::Interval::positive());
    out.agreed = out.oracle_count == out.pipeline_count;
    if (!out.agreed) out.poly = render(p);
  }
  return out;
}

}  // namespace

OuterFrequencyResult run_outer_frequency(const SamplerConfig& base,
                                         const std::vector<long long>& Ms,
                                         long long trials,
                                         long long oracle_degree_cap,
                                         bool parallel) {
  if (trials <= 0) throw std::invalid_argument("trials must be >= 1");
  OuterFrequencyResult res;
  FanCache cache;
  for (long long M : Ms) {
    FrequencyRow row;
    row.M = M;
    row.trials = trials;
    std::vector<Disagreement> local;

    if (parallel) {
      long long unique = 0, checked = 0, agreed = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : unique, checked, agreed)
#endif
      for (long long t = 0; t < trials; ++t) {
        TrialOutcome o = run_trial(base, M, static_cast<std::uint64_t>(t),
                                   oracle_degree_cap, cache);
        unique += o.unique;
        checked += o.checked;
        agreed += o.agreed;
        if (o.checked && !o.agreed) {
#ifdef _OPENMP
#pragma omp critical(randlab_disagreements)
#endif
          local.push_back(Disagreement{M, static_cast<std::uint64_t>(t), o.poly,
                                       o.pipeline_count, o.oracle_count});
        }
      }
      row.unique_cone = unique;
      row.oracle_checked = checked;
      row.agreements = agreed;
    } else {
      for (long long t = 0; t < trials; ++t) {
        TrialOutcome o = run_trial(base, M, static_cast<std::uint64_t>(t),
                                   oracle_degree_cap, cache);
        row.unique_cone += o.unique;
        row.oracle_checked += o.checked;
        row.agreements += o.agreed;
        if (o.checked && !o.agreed)
          local.push_back(Disagreement{M, static_cast<std::uint64_t>(t), o.poly,
                                       o.pipeline_count, o.oracle_count});
      }
    }

    std::sort(local.begin(), local.end(),
              [](const Disagreement& a, const Disagreement& b) { return a.trial < b.trial; });
    res.rows.push_back(row);
    res.disagreements.insert(res.disagreements.end(), local.begin(), local.end());
  }
  return res;
}

std::string frequency_csv(const OuterFrequencyResult& r) {
  std::ostringstream os;
  os << "M,trials,unique_frac,agree_frac\n";
  for (const FrequencyRow& row : r.rows)
    os << row.M << ',' << row.trials << ',' << row.unique_frac() << ','
       << row.agree_frac() << '\n';
  return os.str();
}

std::vector<TimingRow> run_timing_scaling(const std::vector<long long>& degrees,
                                          int trials, long long M,
                                          std::uint64_t seed) {
  if (trials <= 0) throw std::invalid_argument("trials must be >= 1");
  if (!std::is_sorted(degrees.begin(), degrees.end()))
    throw std::invalid_argument("degrees must be increasing");
  std::vector<TimingRow> rows;
  for (long long D : degrees) {
    std::vector<double> ms;
    for (int t = 0; t < trials; ++t) {
      SamplerConfig cfg;
      cfg.M = M;
      cfg.model = Model::Integer;
      cfg.seed = mix(seed, static_cast<std::uint64_t>(D), static_cast<std::uint64_t>(t));
      std::mt19937_64 rng(splitmix64(cfg.seed));
      std::set<long long> mids;
      std::uniform_int_distribution<long long> d(1, D - 1);
      while (mids.size() < 2) mids.insert(d(rng));
      cfg.exponents = {0, *mids.begin(), *std::next(mids.begin()), D};

      SparsePoly p = sample_tetranomial(cfg);
      auto t0 = std::chrono::steady_clock::now();
      count_positive_tetranomial(p);
      auto t1 = std::chrono::steady_clock::now();
      ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::sort(ms.begin(), ms.end());
    TimingRow row;
    row.degree = D;
    row.median_ms = ms[ms.size() / 2];
    row.p90_ms = ms[std::min(ms.size() - 1, ms.size() * 9 / 10)];
    rows.push_back(row);
  }
  return rows;
}

std::string timing_csv(const std::vector<TimingRow>& rows) {
  std::ostringstream os;
  os << "degree,median_ms,p90_ms\n";
  for (const TimingRow& r : rows)
    os << r.degree << ',' << r.median_ms << ',' << r.p90_ms << '\n';
  return os.str();
}

}  // namespace randlab
}  // namespace sparseroot
