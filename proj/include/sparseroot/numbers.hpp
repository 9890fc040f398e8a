#pragma once
#include <gmpxx.h>

#include <string>
#include <vector>

namespace sparseroot {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Int& v) { return mpz_sgn(v.get_mpz_t()); }
inline int sgn(const Rat& v) { return mpq_sgn(v.get_mpq_t()); }

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }
inline Rat abs_rat(const Rat& v) { return v < 0 ? Rat(-v) : v; }

// gmpxx has no long long constructor; all exponents fit in long here
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

using IMat = std::vector<std::vector<Int>>;

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) {
  Rat c(v);
  c.canonicalize();
  return c.get_str();
}

}  // namespace sparseroot
