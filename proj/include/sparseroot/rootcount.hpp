#pragma once
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sparseroot/polyparse.hpp"
#include "sparseroot/viro.hpp"

namespace sparseroot {

enum class CountMethod { ChamberCone, ClosedForm, OracleFallback };

struct ClassCount {
  bool determined = false;
  int count = -1;
  CountMethod method = CountMethod::ClosedForm;
  // 1-based radiant index pair certificate for chamber-cone answers
  std::optional<std::pair<std::vector<int>, std::vector<int>>> cone_pair;
  std::vector<int> lift;  // v(f) when the chamber-cone path ran
  bool outer_chamber_caveat = false;
  std::string note;
};

struct RootCountReport {
  ClassCount positive;
  ClassCount negative;
  long long zero_multiplicity = 0;
};

// Shared cache of chamber fans keyed by support; safe for concurrent reads.
class FanCache {
 public:
  std::shared_ptr<const ChamberFan> get(const std::vector<long long>& exponents);

 private:
  std::mutex mu_;
  std::map<std::vector<long long>, std::shared_ptr<const ChamberFan>> fans_;
};

struct CountOptions {
  bool fallback_oracle = false;
  SignConfig sign_cfg;
  long long oracle_degree_cap = 2000;
  FanCache* cache = nullptr;  // optional shared fan cache
};

ClassCount count_positive_tetranomial(const SparsePoly& p, const CountOptions& opt = {});
int count_positive_trinomial(const SparsePoly& p, const SignConfig& cfg = {});
int count_positive_small(const SparsePoly& p);

// Dispatches on term count; Undetermined (determined = false) when the
// chamber-cone path has no unique cone and no fallback was requested.
ClassCount count_positive(const SparsePoly& p, const CountOptions& opt = {});

RootCountReport count_real(const SparsePoly& p, const CountOptions& opt = {});

std::string report_to_json(const RootCountReport& r);

}  // namespace sparseroot
