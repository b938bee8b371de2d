#pragma once

#include <gmpxx.h>

#include <string>

namespace cremona {

// Exact rational scalar backed by GMP. mpq_class values stay canonical
// (reduced, positive denominator) under arithmetic; only the raw
// numerator/denominator constructor needs an explicit canonicalize, which
// make_rat performs.
using Rat = mpq_class;

Rat make_rat(long numerator, long denominator = 1);

// Accepts "n" or "n/d" with arbitrary-precision integers, d != 0.
// Throws std::invalid_argument on anything else.
Rat rat_from_string(const std::string& text);

std::string to_string(const Rat& q);

inline int sign(const Rat& q) { return sgn(q); }

double to_double(const Rat& q);

}
