// Compares the serial reference path of the outer-frequency experiment
// against the parallel one and checks that the results are identical.
#include <chrono>
#include <iostream>

#include "sparseroot/randlab.hpp"

using namespace sparseroot;

int main(int argc, char** argv) {
  long long trials = argc > 1 ? std::atoll(argv[1]) : 400;
  randlab::SamplerConfig base;
  base.seed = 20260823;
  base.exponents = {0, 404, 405, 808};
  std::vector<long long> Ms{8, 16, 32, 64};

  auto run = [&](bool parallel) {
    auto t0 = std::chrono::steady_clock::now();
    auto res = randlab::run_outer_frequency(base, Ms, trials, 0, parallel);
    auto t1 = std::chrono::steady_clock::now();
    return std::make_pair(res, std::chrono::duration<double>(t1 - t0).count());
  };

  auto [serial, ts] = run(false);
  auto [parallel, tp] = run(true);

  bool same = serial.rows.size() == parallel.rows.size();
  for (std::size_t i = 0; same && i < serial.rows.size(); ++i)
    same = serial.rows[i].M == parallel.rows[i].M &&
           serial.rows[i].unique_cone == parallel.rows[i].unique_cone &&
           serial.rows[i].agreements == parallel.rows[i].agreements;

  std::cout << "trials per M: " << trials << "\n"
            << "serial:   " << ts << " s\n"
            << "parallel: " << tp << " s\n"
            << "speedup:  " << (tp > 0 ? ts / tp : 0.0) << "x\n"
            << "results identical: " << (same ? "yes" : "NO") << "\n";
  std::cout << frequency_csv(serial);
  return same ? 0 : 1;
}
