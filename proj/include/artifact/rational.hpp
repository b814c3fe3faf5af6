#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace artifact {

using Rational = mpq_class;
using Integer = mpz_class;
using QVec = std::vector<Rational>;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Exact conversion; throws if q is not an integer that fits in a long.
long to_long(const Rational& q);

}  // namespace artifact
