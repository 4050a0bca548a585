#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace toric {

// Exact arbitrary-precision arithmetic used throughout; nothing downstream
// is allowed to round.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

inline bool is_integral(const Rat& r) { return denominator(r) == 1; }

inline Rat make_rat(const Int& num, const Int& den) { return Rat(num) / Rat(den); }

}  // namespace toric
