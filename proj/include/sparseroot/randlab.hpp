#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "sparseroot/polyparse.hpp"
#include "sparseroot/rootcount.hpp"

namespace sparseroot {
namespace randlab {

enum class Model { Integer, Continuous };

// Coefficient magnitudes are log-uniform truncated at M: the integer model
// draws |c| = 2^e with e uniform on {0..M}; the continuous model draws
// exp(u), u uniform on [-M, M], rounded to 64 fractional bits.  Signs are
// uniform and independent.
struct SamplerConfig {
  long long M = 16;
  Model model = Model::Integer;
  std::vector<long long> exponents;  // fixed support; empty => random support
  long long dmax = 0;                // random 0 < a2 < a3 < a4 <= dmax
  std::uint64_t seed = 0;
};

SparsePoly sample_tetranomial(const SamplerConfig& cfg);

struct Disagreement {
  long long M = 0;
  std::uint64_t trial = 0;
  std::string poly;  // parseable text, replayable together with (seed, M, trial)
  int pipeline_count = 0;
  long long oracle_count = 0;
};

struct FrequencyRow {
  long long M = 0;
  long long trials = 0;
  long long unique_cone = 0;
  long long oracle_checked = 0;
  long long agreements = 0;
  double unique_frac() const { return trials ? double(unique_cone) / double(trials) : 0; }
  double agree_frac() const {
    return oracle_checked ? double(agreements) / double(oracle_checked) : 1.0;
  }
};

struct OuterFrequencyResult {
  std::vector<FrequencyRow> rows;
  std::vector<Disagreement> disagreements;
};

// One row per M.  oracle_degree_cap 0 disables the Sturm cross-check.
// Per-trial state is seeded from (seed, M, trial), so results are identical
// whether trials run serially or in parallel.
OuterFrequencyResult run_outer_frequency(const SamplerConfig& base,
                                         const std::vector<long long>& Ms,
                                         long long trials,
                                         long long oracle_degree_cap,
                                         bool parallel);

std::string frequency_csv(const OuterFrequencyResult& r);

struct TimingRow {
  long long degree = 0;
  double median_ms = 0;
  double p90_ms = 0;
};

// Median/p90 wall time of the chamber-cone count per degree bucket; random
// supports with a4 = degree, integer coefficient model at the given M.
std::vector<TimingRow> run_timing_scaling(const std::vector<long long>& degrees,
                                          int trials, long long M,
                                          std::uint64_t seed);

std::string timing_csv(const std::vector<TimingRow>& rows);

}  // namespace randlab
}  // namespace sparseroot
