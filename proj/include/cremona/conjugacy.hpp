#pragma once

#include "cremona/invariants.hpp"
#include "cremona/model.hpp"

#include <optional>
#include <string>
#include <utility>

namespace cremona {

enum class Verdict { equivalent, not_equivalent, undecided };
enum class FailedCondition { discriminant_locus, real_interval, sign_condition };

std::string to_string(Verdict v);
std::string to_string(FailedCondition c);

struct Decision {
    Verdict verdict;
    // lambda, mu with disc2 = lambda * disc1 and H2 = mu * H1.
    std::optional<std::pair<Rat, Rat>> witnesses;
    std::optional<FailedCondition> failed_condition;
    std::string notes;
    bool extended = false;  // produced by the Mobius-extended mode
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// G-equivariant birational equivalence over a fixed base coordinate:
// equivalent iff the real loci agree arc-by-arc and the sign conditions hold
// (positive proportionality of B^2-4AC and of H). Equal discriminant loci
// follow from the sign conditions and are verified as a sanity check.
// Full-circle (de Jonquieres) inputs are compared through the fixed curve
// only; mixed inputs are not equivalent. Proper-locus models must pass the
// normal-form checks or a PreconditionError is thrown.
Decision decide_equivalent(const ConicBundleModel& m1, const ConicBundleModel& m2);

// Extended mode: additionally searches for a Mobius change of the base
// coordinate, with candidates determined by mapping triples of rational
// roots of Delta1 (infinity included) onto rational roots of Delta2.
Decision decide_up_to_mobius(const ConicBundleModel& m1, const ConicBundleModel& m2);

}
