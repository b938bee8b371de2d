#pragma once

#include "cremona/ratpoly.hpp"

#include <string>
#include <vector>

namespace cremona {

// Real algebraic number: either an exact rational, or the unique root of a
// squarefree polynomial inside an open rational interval (lo, hi) whose
// endpoints are not roots. Values are immutable; refined() returns a new
// value with a halved interval (possibly collapsed to an exact rational).
class AlgReal {
public:
    AlgReal(const Rat& value);
    AlgReal(RatPoly defining, Rat lo, Rat hi);  // validates: exactly one root

    bool is_rational() const { return rational_; }
    const Rat& rational_value() const;
    const RatPoly& defining() const;
    const Rat& lo() const;
    const Rat& hi() const;

    AlgReal refined(unsigned rounds = 1) const;
    double approx(double width = 1e-12) const;

    std::string to_string() const;

private:
    bool rational_;
    Rat value_;      // exact value when rational_
    RatPoly poly_;   // squarefree defining polynomial otherwise
    Rat lo_, hi_;
};

// Exact number of distinct real roots of p in the open interval (lo, hi),
// by Sturm's theorem. Requires lo < hi and p(lo) != 0 != p(hi).
int count_real_roots_in(const RatPoly& p, const Rat& lo, const Rat& hi);

// Exact number of distinct real roots of p over all of R.
int count_real_roots(const RatPoly& p);

// All real roots of a nonzero squarefree p, in increasing order, each as an
// exact rational or an isolating interval. Exhaustive.
std::vector<AlgReal> isolate_real_roots(const RatPoly& p);

// Exact sign of p at x. Never uses floating point.
int sign_at(const RatPoly& p, const AlgReal& x);

// Total order: -1, 0, +1. Equality is decided exactly.
int compare(const AlgReal& x, const AlgReal& y);
int compare(const AlgReal& x, const Rat& q);

// Rational sample points: strictly between a < b, strictly below, strictly
// above. Refine as needed.
Rat rational_between(const AlgReal& a, const AlgReal& b);
Rat rational_below(const AlgReal& a);
Rat rational_above(const AlgReal& a);

}
