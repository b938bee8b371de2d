#include "cremona/api.hpp"

#include "cremona/parse.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace cremona::api {

json poly_json(const RatPoly& p) {
    return p.to_string();
}

json algreal_json(const AlgReal& x) {
    json j;
    if (x.is_rational()) {
        j["kind"] = "rational";
        j["value"] = to_string(x.rational_value());
    } else {
        j["kind"] = "algebraic";
        j["poly"] = x.defining().to_string();
        j["low"] = to_string(x.lo());
        j["high"] = to_string(x.hi());
    }
    j["approx"] = x.approx();
    return j;
}

json report_json(const ValidationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"valid", r.valid}, {"checks", checks}};
}

json model_json(const ConicBundleModel& m) {
    return {{"A", m.A().to_string()},
            {"B", m.B().to_string()},
            {"C", m.C().to_string()},
            {"H", m.H().to_string()}};
}

json fixed_curve_json(const FixedCurve& c) {
    return {{"branch", c.branch.to_string()},
            {"genus", c.genus ? json(*c.genus) : json(nullptr)},
            {"real_components", c.real_components},
            {"flag", to_string(c.flag)}};
}

namespace {

json end_json(const CircleEnd& e) {
    if (e.is_infinity())
        return {{"kind", "infinity"}};
    return algreal_json(*e.value);
}

}

json locus_json(const RealLocus& l) {
    json arcs = json::array();
    for (const auto& a : l.arcs)
        arcs.push_back({{"lo", end_json(a.lo)}, {"hi", end_json(a.hi)}});
    json isolated = json::array();
    for (const auto& p : l.isolated_points)
        isolated.push_back(algreal_json(p));
    return {{"full", l.full},
            {"contains_infinity", l.contains_infinity},
            {"arcs", arcs},
            {"isolated_points", isolated}};
}

json label_json(const ClassLabel& l) {
    json j;
    j["kind"] = l.kind == ClassLabel::de_jonquieres ? "de_jonquieres" : "iskovskikh";
    if (l.twist)
        j["twist"] = *l.twist;
    if (l.genus)
        j["genus"] = *l.genus;
    j["label"] = l.to_string();
    return j;
}

json decision_json(const Decision& d) {
    json j;
    j["verdict"] = to_string(d.verdict);
    if (d.witnesses)
        j["witnesses"] = {{"lambda", to_string(d.witnesses->first)},
                          {"mu", to_string(d.witnesses->second)}};
    else
        j["witnesses"] = nullptr;
    if (d.failed_condition)
        j["failed_condition"] = to_string(*d.failed_condition);
    else
        j["failed_condition"] = nullptr;
    j["notes"] = d.notes;
    j["extended"] = d.extended;
    return j;
}

ConicBundleResult model_from_json(const json& j) {
    if (!j.is_object())
        throw std::invalid_argument("model JSON must be an object");
    for (const char* key : {"A", "B", "C", "H"})
        if (!j.contains(key) || !j.at(key).is_string())
            throw std::invalid_argument(
                std::string("model JSON needs the polynomial string \"") + key +
                "\"");
    return mk_conic_bundle(parse_poly(j.at("A").get<std::string>()),
                           parse_poly(j.at("B").get<std::string>()),
                           parse_poly(j.at("C").get<std::string>()),
                           parse_poly(j.at("H").get<std::string>()));
}

namespace {

std::string end_to_string(const CircleEnd& e) {
    if (e.is_infinity())
        return "inf";
    if (e.value->is_rational())
        return to_string(e.value->rational_value());
    std::ostringstream os;
    os.precision(6);
    os << std::fixed << e.value->approx() << "~";
    return os.str();
}

}

std::string locus_to_string(const RealLocus& l) {
    if (l.full)
        return "all of P^1(R)";
    if (l.arcs.empty() && l.isolated_points.empty() && !l.contains_infinity)
        return "empty";
    std::ostringstream os;
    bool first = true;
    for (const auto& a : l.arcs) {
        if (!first)
            os << " u ";
        first = false;
        bool wraps = a.lo.is_infinity() || a.hi.is_infinity() ||
                     compare(*a.lo.value, *a.hi.value) > 0;
        os << "[" << end_to_string(a.lo) << ", " << end_to_string(a.hi) << "]";
        if (wraps)
            os << " (through infinity)";
    }
    for (const auto& p : l.isolated_points) {
        if (!first)
            os << " u ";
        first = false;
        os << "{" << p.to_string() << "}";
    }
    if (l.contains_infinity) {
        bool arc_touches_inf = false;
        for (const auto& a : l.arcs)
            if (a.lo.is_infinity() || a.hi.is_infinity() ||
                compare(*a.lo.value, *a.hi.value) > 0)
                arc_touches_inf = true;
        if (!arc_touches_inf) {
            if (!first)
                os << " u ";
            os << "{infinity}";
        }
    }
    return os.str();
}

namespace {

ConicBundleModel model_or_throw(const std::string& A, const std::string& B,
                                const std::string& C, const std::string& H,
                                json* out_report = nullptr) {
    auto r = mk_conic_bundle(parse_poly(A), parse_poly(B), parse_poly(C),
                             parse_poly(H));
    if (out_report)
        *out_report = report_json(r.report);
    if (!r.model)
        throw std::domain_error("invalid model:\n" + r.report.summary());
    return *r.model;
}

double eval_double(const RatPoly& p, double x) {
    double acc = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * x + to_double(*it);
    return acc;
}

// Numeric cross-check of the exact locus: eigenvalue signs of the symmetric
// matrix diag([[A, B/2], [B/2, C]], -H) decide real solvability of the fiber.
json oracle_block(const ConicBundleModel& m, const RealLocus& locus,
                  unsigned samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> endpoints;
    for (const auto& arc : locus.arcs) {
        if (!arc.lo.is_infinity())
            endpoints.push_back(arc.lo.value->approx(1e-9));
        if (!arc.hi.is_infinity())
            endpoints.push_back(arc.hi.value->approx(1e-9));
    }
    for (const auto& p : locus.isolated_points)
        endpoints.push_back(p.approx(1e-9));
    double radius = 2;
    for (double e : endpoints)
        radius = std::max(radius, std::abs(e) + 2);
    std::uniform_int_distribution<long> num(
        -static_cast<long>(radius * 1000), static_cast<long>(radius * 1000));
    unsigned agreed = 0, tested = 0, skipped = 0;
    for (unsigned i = 0; i < samples; ++i) {
        Rat t = make_rat(num(rng), 1000);
        double td = to_double(t);
        bool near = false;
        for (double e : endpoints)
            if (std::abs(td - e) < 1e-6)
                near = true;
        if (near) {
            ++skipped;
            continue;
        }
        double a = eval_double(m.A(), td), b = eval_double(m.B(), td);
        double c = eval_double(m.C(), td), h = eval_double(m.H(), td);
        double half_trace = (a + c) / 2;
        double rad = std::sqrt((a - c) * (a - c) / 4 + b * b / 4);
        double e1 = half_trace + rad, e2 = half_trace - rad, e3 = -h;
        const double tol = 1e-9;
        bool definite = (e1 > tol && e2 > tol && e3 > tol) ||
                        (e1 < -tol && e2 < -tol && e3 < -tol);
        bool oracle = !definite;
        ++tested;
        if (oracle == locus_contains(locus, t))
            ++agreed;
    }
    return {{"samples", samples}, {"tested", tested}, {"skipped_near_endpoints", skipped},
            {"agreed", agreed},   {"seed", seed}};
}

}

json validate(const std::string& A, const std::string& B, const std::string& C,
              const std::string& H) {
    auto r = mk_conic_bundle(parse_poly(A), parse_poly(B), parse_poly(C),
                             parse_poly(H));
    json j;
    j["report"] = report_json(r.report);
    j["valid"] = r.report.valid;
    if (r.model) {
        j["model"] = model_json(*r.model);
        j["delta"] = r.model->delta().to_string();
        j["normal_form"] = report_json(is_iskovskikh_normal_form(*r.model));
    }
    return j;
}

json invariants(const std::string& A, const std::string& B, const std::string& C,
                const std::string& H, unsigned oracle_samples,
                std::uint64_t seed) {
    ConicBundleModel m = model_or_throw(A, B, C, H);
    json j;
    j["model"] = model_json(m);
    j["fixed_curve"] = fixed_curve_json(fixed_curve_cb(m));
    RealLocus locus = real_locus(m);
    j["real_locus"] = locus_json(locus);
    j["real_locus_text"] = locus_to_string(locus);
    try {
        j["classification"] = label_json(classify(m));
    } catch (const NormalFormError& e) {
        j["classification"] = nullptr;
        j["classification_error"] = e.what();
    }
    if (oracle_samples > 0)
        j["oracle"] = oracle_block(m, locus, oracle_samples, seed);
    return j;
}

json classify_model(const std::string& A, const std::string& B,
                    const std::string& C, const std::string& H) {
    ConicBundleModel m = model_or_throw(A, B, C, H);
    return label_json(classify(m));
}

json compare(const json& model1, const json& model2, bool up_to_mobius) {
    auto r1 = model_from_json(model1);
    auto r2 = model_from_json(model2);
    if (!r1.model)
        throw std::domain_error("first model invalid:\n" + r1.report.summary());
    if (!r2.model)
        throw std::domain_error("second model invalid:\n" + r2.report.summary());
    Decision d = up_to_mobius ? decide_up_to_mobius(*r1.model, *r2.model)
                              : decide_equivalent(*r1.model, *r2.model);
    json j = decision_json(d);
    j["model1"] = model_json(*r1.model);
    j["model2"] = model_json(*r2.model);
    return j;
}

json dejonquieres(const std::string& f) {
    auto r = mk_dejonquieres(parse_poly(f));
    json j;
    j["report"] = report_json(r.report);
    j["valid"] = r.report.valid;
    if (r.model) {
        j["f"] = r.model->f().to_string();
        j["d"] = r.model->d();
        j["fixed_curve"] = fixed_curve_json(fixed_curve_dj(*r.model));
    }
    return j;
}

json family_demo(const std::string& f,
                 const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::pair<Rat, Rat>> parsed;
    parsed.reserve(pairs.size());
    for (const auto& [a, b] : pairs)
        parsed.emplace_back(rat_from_string(a), rat_from_string(b));
    CorollaryReport rep = corollary_demo(parse_poly(f), parsed);
    json j;
    j["f"] = rep.f.to_string();
    j["input_check"] = report_json(rep.input_check);
    j["shared_fixed_curve"] =
        rep.shared_curve ? fixed_curve_json(*rep.shared_curve) : json(nullptr);
    json jp = json::array();
    for (const auto& p : rep.pairs)
        jp.push_back({{"a", to_string(p.a)},
                      {"b", to_string(p.b)},
                      {"valid", p.valid},
                      {"detail", p.detail},
                      {"parameter_in_negative_arc", p.parameter_in_negative_arc}});
    j["pairs"] = jp;
    json jc = json::array();
    for (const auto& c : rep.comparisons) {
        json cell = {{"first", c.first},
                     {"second", c.second},
                     {"verdict", to_string(c.verdict)}};
        cell["failed_condition"] =
            c.failed_condition ? json(to_string(*c.failed_condition)) : json(nullptr);
        jc.push_back(cell);
    }
    j["comparisons"] = jc;
    j["valid_count"] = rep.valid_count;
    j["not_equivalent_count"] = rep.not_equivalent_count;
    j["equivalent_count"] = rep.equivalent_count;
    j["undecided_count"] = rep.undecided_count;
    j["all_distinct_rootsets_nonequivalent"] = rep.all_distinct_rootsets_nonequivalent;
    j["caveat"] = rep.caveat;
    return j;
}

json cremona_apply(const std::string& comma_separated_point) {
    std::vector<Rat> coords;
    std::string token;
    std::istringstream is(comma_separated_point);
    while (std::getline(is, token, ','))
        coords.push_back(rat_from_string(token));
    if (coords.size() != 3)
        throw std::invalid_argument("expected three comma-separated rationals");
    ProjPoint p = ProjPoint::make(coords[0], coords[1], coords[2]);
    auto image = HomMap::standard_cremona().apply(p);
    json j;
    j["input"] = p.to_string();
    if (image) {
        j["image"] = image->to_string();
        j["base_point"] = false;
    } else {
        j["image"] = nullptr;
        j["base_point"] = true;
    }
    return j;
}

json cremona_base_points() {
    json pts = json::array();
    for (const auto& p : HomMap::standard_cremona().base_points())
        pts.push_back(p.to_string());
    return {{"base_points", pts}};
}

json cremona_self_check(unsigned samples, std::uint64_t seed) {
    HomMap alpha = HomMap::standard_cremona();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(1, 1000);
    std::vector<ProjPoint> pts;
    pts.reserve(samples);
    for (unsigned i = 0; i < samples; ++i)
        pts.push_back(ProjPoint::make(Rat(coord(rng)), Rat(coord(rng)),
                                      Rat(coord(rng))));
    bool involution = alpha.check_involution(pts);
    bool square_is_identity = compose(alpha, alpha).is_identity();
    return {{"map", alpha.to_string()},
            {"samples", samples},
            {"seed", seed},
            {"involution_on_samples", involution},
            {"square_reduces_to_identity", square_is_identity}};
}

}
