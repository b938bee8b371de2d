#pragma once

#include "cremona/ratpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cremona {

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string detail = "");
    std::string summary() const;
};

// Conic bundle A(t)x^2 + B(t)xy + C(t)y^2 = H(t)z^2 over the affine t-line,
// with Delta = (B^2-4AC) H squarefree of even degree.
class ConicBundleModel {
public:
    const RatPoly& A() const { return a_; }
    const RatPoly& B() const { return b_; }
    const RatPoly& C() const { return c_; }
    const RatPoly& H() const { return h_; }
    const RatPoly& disc() const { return disc_; }    // B^2 - 4AC
    const RatPoly& delta() const { return delta_; }  // disc * H

private:
    ConicBundleModel(RatPoly a, RatPoly b, RatPoly c, RatPoly h, RatPoly disc,
                     RatPoly delta);
    RatPoly a_, b_, c_, h_, disc_, delta_;

    friend struct ConicBundleFactory;
};

struct ConicBundleResult {
    std::optional<ConicBundleModel> model;
    ValidationReport report;
};

ConicBundleResult mk_conic_bundle(const RatPoly& A, const RatPoly& B,
                                  const RatPoly& C, const RatPoly& H);

// (lambda A, lambda B, lambda C, lambda H); valid whenever m is, since Delta
// only picks up the factor lambda^3. Throws on lambda == 0.
ConicBundleModel scale(const ConicBundleModel& m, const Rat& lambda);

// Checks of the Iskovskikh normal form: H has only real roots, its leading
// coefficient is negative, the fiber at infinity is smooth without real
// points, and the real locus is a proper subset of the circle.
// Defined in invariants.cpp, which owns the locus computation.
ValidationReport is_iskovskikh_normal_form(const ConicBundleModel& m);

// De Jonquieres model xy = f(z,t), stored via the dehomogenized f of even
// degree 2d >= 4 with no multiple roots.
class DeJonquieresModel {
public:
    const RatPoly& f() const { return f_; }
    unsigned d() const { return d_; }

private:
    DeJonquieresModel(RatPoly f, unsigned d);
    RatPoly f_;
    unsigned d_;

    friend struct ConicBundleFactory;
};

struct DeJonquieresResult {
    std::optional<DeJonquieresModel> model;
    ValidationReport report;
};

DeJonquieresResult mk_dejonquieres(const RatPoly& f);

}
