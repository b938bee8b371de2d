#include "cremona/model.hpp"

#include <sstream>
#include <stdexcept>

namespace cremona {

void ValidationReport::add(std::string name, bool pass, std::string detail) {
    valid = valid && pass;
    checks.push_back(Check{std::move(name), pass, std::move(detail)});
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.name;
        if (!c.detail.empty())
            os << ": " << c.detail;
        os << "\n";
    }
    os << (valid ? "valid" : "invalid");
    return os.str();
}

ConicBundleModel::ConicBundleModel(RatPoly a, RatPoly b, RatPoly c, RatPoly h,
                                   RatPoly disc, RatPoly delta)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), h_(std::move(h)),
      disc_(std::move(disc)), delta_(std::move(delta)) {}

struct ConicBundleFactory {
    static ConicBundleModel make(RatPoly a, RatPoly b, RatPoly c, RatPoly h,
                                 RatPoly disc, RatPoly delta) {
        return ConicBundleModel(std::move(a), std::move(b), std::move(c),
                                std::move(h), std::move(disc), std::move(delta));
    }
    static DeJonquieresModel make_dj(RatPoly f, unsigned d) {
        return DeJonquieresModel(std::move(f), d);
    }
};

ConicBundleResult mk_conic_bundle(const RatPoly& A, const RatPoly& B,
                                  const RatPoly& C, const RatPoly& H) {
    RatPoly disc = binary_discriminant(A, B, C);
    RatPoly delta = disc * H;
    ValidationReport report;
    report.add("delta_nonzero", !delta.is_zero(),
               delta.is_zero() ? "Delta = (B^2-4AC)H vanishes identically"
                               : "Delta = " + delta.to_string());
    if (delta.is_zero())
        return {std::nullopt, report};
    bool sf = is_squarefree(delta);
    report.add("delta_squarefree", sf,
               sf ? "" : "Delta has a multiple root");
    bool even = delta.degree() % 2 == 0;
    report.add("delta_degree_even", even,
               "deg Delta = " + std::to_string(delta.degree()));
    if (!report.valid)
        return {std::nullopt, report};
    return {ConicBundleFactory::make(A, B, C, H, std::move(disc), std::move(delta)),
            report};
}

ConicBundleModel scale(const ConicBundleModel& m, const Rat& lambda) {
    if (lambda == 0)
        throw std::invalid_argument("cannot scale a model by zero");
    auto result = mk_conic_bundle(m.A() * lambda, m.B() * lambda, m.C() * lambda,
                                  m.H() * lambda);
    if (!result.model)
        throw std::logic_error("scaling by a nonzero rational broke validity");
    return *result.model;
}

DeJonquieresModel::DeJonquieresModel(RatPoly f, unsigned d)
    : f_(std::move(f)), d_(d) {}

DeJonquieresResult mk_dejonquieres(const RatPoly& f) {
    ValidationReport report;
    if (f.is_zero()) {
        report.add("f_nonzero", false, "f vanishes identically");
        return {std::nullopt, report};
    }
    int deg = f.degree();
    report.add("degree_even", deg % 2 == 0, "deg f = " + std::to_string(deg));
    report.add("degree_at_least_4", deg >= 4,
               deg >= 4 ? ""
                        : "deg f = " + std::to_string(deg) +
                              "; d >= 2 is required, the fixed curve would be "
                              "geometrically rational otherwise");
    bool sf = is_squarefree(f);
    report.add("f_squarefree", sf, sf ? "" : "f has a multiple root");
    if (!report.valid)
        return {std::nullopt, report};
    return {ConicBundleFactory::make_dj(f, static_cast<unsigned>(deg / 2)), report};
}

}
