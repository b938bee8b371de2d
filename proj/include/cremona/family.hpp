#pragma once

#include "cremona/conjugacy.hpp"
#include "cremona/invariants.hpp"
#include "cremona/model.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cremona {

// Desk-scale demonstration that uncountably many pairwise non-conjugate
// involutions fix the same hyperelliptic curve: the family
// x^2 + f(t) y^2 = -(t-a)(t-b) z^2 with the fixed curve w^2 = -4 f(t).

struct EmptyDemoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// f must have even degree >= 6, only simple roots, at least 4 real roots,
// and the branch -4f must have at least 2 positive arcs.
ValidationReport validate_corollary_input(const RatPoly& f);

// Model (A,B,C,H) = (1, 0, f, -(t-a)(t-b)). Throws std::invalid_argument
// when f itself fails validate_corollary_input; a bad pair (a = b, or a root
// of f) surfaces as a Delta squarefreeness failure in the report.
ConicBundleResult make_sab(const RatPoly& f, const Rat& a, const Rat& b);

struct FamilyPair {
    Rat a, b;
    bool valid;
    std::string detail;              // why the pair was rejected, if it was
    bool parameter_in_negative_arc;  // heuristic warning: f(a) < 0 or f(b) < 0
};

struct PairwiseCell {
    size_t first, second;  // indices into pairs (valid entries only)
    Verdict verdict;
    std::optional<FailedCondition> failed_condition;
};

struct CorollaryReport {
    RatPoly f;
    ValidationReport input_check;
    std::optional<FixedCurve> shared_curve;  // of the first valid pair
    std::vector<FamilyPair> pairs;
    std::vector<PairwiseCell> comparisons;
    size_t valid_count = 0;
    size_t not_equivalent_count = 0;
    size_t equivalent_count = 0;
    size_t undecided_count = 0;
    // every comparison of distinct root sets {a,b} != {a',b'} not_equivalent
    bool all_distinct_rootsets_nonequivalent = true;
    std::string caveat;  // the unverified connectedness hypothesis
};

// Builds each pair's model, computes the shared fixed curve and the full
// pairwise Decision matrix. Throws EmptyDemoError when no pair is valid.
CorollaryReport corollary_demo(const RatPoly& f,
                               const std::vector<std::pair<Rat, Rat>>& pairs);

}
