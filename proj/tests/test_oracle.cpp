#include <doctest.h>

#include <random>
#include <set>

#include "sparseroot/oracle.hpp"

using namespace sparseroot;
using namespace sparseroot::oracle;

namespace {

Interval between(long lo, long hi) { return {Rat(lo), Rat(hi)}; }

SparsePoly from_terms(std::vector<std::pair<long long, Rat>> t) {
  return normalize_terms(std::move(t));
}

}  // namespace

TEST_CASE("sturm: basic counts over the whole line") {
  CHECK(sturm_count(parse("x^2 - 1")) == 2);
  CHECK(sturm_count(parse("x^3 - 3*x + 1")) == 3);
  CHECK(sturm_count(parse("x^2 + 1")) == 0);
  CHECK(sturm_count(parse("x^4 - 10*x^2 + 9")) == 4);
}

TEST_CASE("sturm: quadrinomial example has one positive root") {
  SparsePoly p = parse("1 - 1/2*x^404 + x^405 - 2*x^808");
  CHECK(sturm_count(p, Interval::positive()) == 1);
  CHECK(sturm_count(p, Interval::negative()) == 1);
}

TEST_CASE("sturm: half-open endpoints, (lo, hi] includes the right end") {
  SparsePoly p = parse("x^2 - 4*x + 3");  // roots 1 and 3
  CHECK(sturm_count(p, between(0, 2)) == 1);
  CHECK(sturm_count(p, between(1, 3)) == 1);   // 1 excluded, 3 included
  CHECK(sturm_count(p, between(0, 3)) == 2);
  CHECK(sturm_count(p, between(3, 5)) == 0);   // 3 sits on the open left end
  CHECK(sturm_count(p, between(0, 1)) == 1);   // 1 included at the right end
}

TEST_CASE("sturm counts distinct roots, not multiplicity") {
  CHECK(sturm_count(parse("x^2 - 2*x + 1")) == 1);
  CHECK(sturm_count(parse("x^4 - 2*x^2 + 1")) == 2);
}

TEST_CASE("sturm: degree cap is enforced") {
  CHECK_THROWS_AS(sturm_count(parse("1 - 1/2*x^404 + x^405 - 2*x^808"),
                              Interval::whole(), 500),
                  DegreeCapExceeded);
}

TEST_CASE("descartes bisection: fixed cases") {
  CHECK(descartes_bisection_count(parse("x^2 - 2"), between(0, 2)) == 1);
  CHECK(descartes_bisection_count(parse("x^2 - 2")) == 1);
  CHECK(descartes_bisection_count(parse("x^4 - 10*x^2 + 9")) == 2);
  CHECK(descartes_bisection_count(parse("1 - 1/2*x^404 + x^405 - 2*x^808")) == 1);
  CHECK(descartes_bisection_count(parse("x^317811 - 2*x^196418 + 1")) == 2);
  CHECK(descartes_bisection_count(parse("x^2 + 1")) == 0);
}

TEST_CASE("descartes bisection: negative and bounded intervals") {
  SparsePoly p = parse("x^2 - 4*x + 3");
  CHECK(descartes_bisection_count(p, between(0, 2)) == 1);
  CHECK(descartes_bisection_count(p, between(1, 3)) == 1);
  CHECK(descartes_bisection_count(p, between(3, 5)) == 0);
  CHECK(descartes_bisection_count(parse("x^3 + 8"), Interval::negative()) == 1);
  CHECK(descartes_bisection_count(parse("x^2 - 4"), Interval::negative()) == 1);
}

TEST_CASE("descartes bisection: budget exhaustion reports, never lies") {
  SparsePoly p = parse("1 - 1/2*x^404 + x^405 - 2*x^808");
  CHECK_THROWS_AS(descartes_bisection_count(p, Interval::positive(), 3),
                  NeedsMorePrecision);
}

TEST_CASE("sturm and descartes agree on random sparse polynomials") {
  std::mt19937_64 rng(112233);
  std::uniform_int_distribution<long long> de(1, 200);
  std::uniform_int_distribution<long> dc(-40, 40);
  int done = 0;
  for (int iter = 0; iter < 150; ++iter) {
    std::set<long long> exps{0};
    int k = 2 + static_cast<int>(rng() % 3);
    while (static_cast<int>(exps.size()) < k + 1) exps.insert(de(rng));
    std::vector<std::pair<long long, Rat>> terms;
    for (long long e : exps) {
      long c = dc(rng);
      if (c == 0) c = 1;
      terms.emplace_back(e, Rat(c));
    }
    SparsePoly p;
    try {
      p = from_terms(std::move(terms));
    } catch (const ParseError&) {
      continue;
    }
    for (const Interval& iv :
         {Interval::positive(), Interval::negative(), Interval::whole(),
          between(-3, 3)}) {
      long long s = sturm_count(p, iv);
      long long d = descartes_bisection_count(p, iv, 2000000);
      CHECK(s == d);
    }
    ++done;
  }
  CHECK(done > 100);
}

TEST_CASE("whole-line count splits into sign classes") {
  std::mt19937_64 rng(445566);
  std::uniform_int_distribution<long long> de(1, 60);
  std::uniform_int_distribution<long> dc(-9, 9);
  for (int iter = 0; iter < 100; ++iter) {
    std::set<long long> exps{0};
    while (exps.size() < 4) exps.insert(de(rng));
    std::vector<std::pair<long long, Rat>> terms;
    for (long long e : exps) {
      long c = dc(rng);
      if (c == 0) c = 1;
      terms.emplace_back(e, Rat(c));
    }
    SparsePoly p = from_terms(std::move(terms));
    // constant term is nonzero, so 0 is never a root of the normalized part
    CHECK(sturm_count(p) == sturm_count(p, Interval::positive()) +
                                sturm_count(p, Interval::negative()));
  }
}

TEST_CASE("log-sos identity holds for k = 1..12 and rejects k = 0") {
  for (int k = 1; k <= 12; ++k) CHECK(verify_log_sos_identity(k));
  CHECK_THROWS_AS(verify_log_sos_identity(0), std::invalid_argument);
}
