#pragma once

// JSON-level entry points shared by the command line tool and the python
// bindings, so both surfaces produce identical results.

#include "cremona/conjugacy.hpp"
#include "cremona/family.hpp"
#include "cremona/invariants.hpp"
#include "cremona/model.hpp"
#include "cremona/projmap.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cremona::api {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

json poly_json(const RatPoly& p);
json algreal_json(const AlgReal& x);
json report_json(const ValidationReport& r);
json model_json(const ConicBundleModel& m);
json fixed_curve_json(const FixedCurve& c);
json locus_json(const RealLocus& l);
json label_json(const ClassLabel& l);
json decision_json(const Decision& d);

// Reads { "A": ..., "B": ..., "C": ..., "H": ... } with polynomial strings.
// Throws std::invalid_argument on schema errors and ParseError on bad
// polynomials; model validation failures come back in the result.
ConicBundleResult model_from_json(const json& j);

std::string locus_to_string(const RealLocus& l);

// Subcommand-level calls. Each returns the object the CLI prints with --json.
json validate(const std::string& A, const std::string& B, const std::string& C,
              const std::string& H);
json invariants(const std::string& A, const std::string& B, const std::string& C,
                const std::string& H, unsigned oracle_samples = 0,
                std::uint64_t seed = 0);
json classify_model(const std::string& A, const std::string& B,
                    const std::string& C, const std::string& H);
json compare(const json& model1, const json& model2, bool up_to_mobius);
json dejonquieres(const std::string& f);
json family_demo(const std::string& f,
                 const std::vector<std::pair<std::string, std::string>>& pairs);
json cremona_apply(const std::string& comma_separated_point);
json cremona_base_points();
json cremona_self_check(unsigned samples, std::uint64_t seed);

}
