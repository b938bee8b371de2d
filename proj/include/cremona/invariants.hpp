#pragma once

#include "cremona/algreal.hpp"
#include "cremona/model.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cremona {

enum class CurveFlag { rational, elliptic, hyperelliptic };

std::string to_string(CurveFlag flag);

// The hyperelliptic fixed curve w^2 = branch(t), with the branch polynomial
// normalized to positive content (integral coprime coefficients; the sign of
// the leading coefficient is semantic and preserved).
struct FixedCurve {
    RatPoly branch;
    std::optional<unsigned> genus;  // absent when deg branch <= 2
    unsigned real_components;
    CurveFlag flag;
};

// Endpoint on the circle P^1(R): a real algebraic number or the point at
// infinity.
struct CircleEnd {
    std::optional<AlgReal> value;  // nullopt = infinity

    bool is_infinity() const { return !value.has_value(); }
    static CircleEnd infinity() { return CircleEnd{std::nullopt}; }
    static CircleEnd at(AlgReal v) { return CircleEnd{std::move(v)}; }
};

// Closed arc travelled from lo towards increasing t up to hi, wrapping
// through infinity when hi lies below lo (or when an endpoint is infinity).
struct Arc {
    CircleEnd lo, hi;
};

struct RealLocus {
    bool full = false;               // all of P^1(R)
    bool contains_infinity = false;
    std::vector<Arc> arcs;           // empty when full or empty locus
    std::vector<AlgReal> isolated_points;
};

struct ClassLabel {
    enum Kind { de_jonquieres, iskovskikh } kind;
    std::optional<unsigned> twist;  // deg H, Iskovskikh only
    std::optional<unsigned> genus;  // absent when the fixed curve is rational

    std::string to_string() const;
};

struct NormalFormError : std::runtime_error {
    NormalFormError(std::string message, ValidationReport report);
    ValidationReport report;
};

// ceil(deg/2) - 1 for a squarefree branch of degree >= 3; lower degrees have
// no genus label and are rejected.
unsigned genus(const RatPoly& branch);

// Number of maximal arcs of {branch-form >= 0} on the circle, the point at
// infinity carrying the sign of the top coefficient of the even-degree
// homogenization. Requires a nonzero squarefree branch.
unsigned real_components(const RatPoly& branch);

FixedCurve fixed_curve_cb(const ConicBundleModel& m);
FixedCurve fixed_curve_dj(const DeJonquieresModel& m);

// Homogenization weights of the completion at [1:0]: the minimal
// n_A = n_C = n_H (mod 2) with n_B = (n_A + n_C)/2 covering the degrees,
// which keeps the signs at infinity representative-independent.
struct CompletionWeights {
    int na, nb, nc, nh;
};

CompletionWeights completion_weights(const ConicBundleModel& m);

// Completion data at [1:0] under those weights.
struct InfinityFiber {
    Rat a, b, c, h;   // coefficient forms evaluated at [1:0]
    Rat disc;         // b^2 - 4ac
    bool smooth;      // disc * h != 0
    bool has_real_point;
};

InfinityFiber infinity_fiber(const ConicBundleModel& m);

// Exact image of the real locus of the surface on the base circle: at a
// parameter with Delta != 0 the fiber has a real point iff (B^2-4AC) > 0 or
// A*H > 0 there; every root of Delta is in the locus (degenerate fibers keep
// a real point).
RealLocus real_locus(const ConicBundleModel& m);

// Membership of a finite rational parameter in the locus, decided from the
// arc structure (used by the oracle tests).
bool locus_contains(const RealLocus& locus, const Rat& t);

// Exact equality of loci as subsets of the circle.
bool real_locus_equal(const RealLocus& a, const RealLocus& b);

// DeJonquieres when the locus is the full circle, Iskovskikh(deg H) when it
// is proper and the normal-form checks pass; throws NormalFormError
// otherwise.
ClassLabel classify(const ConicBundleModel& m);

}
