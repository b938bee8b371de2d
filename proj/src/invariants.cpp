#include "cremona/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace cremona {

std::string to_string(CurveFlag flag) {
    switch (flag) {
    case CurveFlag::rational: return "rational";
    case CurveFlag::elliptic: return "elliptic";
    case CurveFlag::hyperelliptic: return "hyperelliptic";
    }
    return "?";
}

std::string ClassLabel::to_string() const {
    std::ostringstream os;
    if (kind == de_jonquieres)
        os << "DeJonquieres(";
    else
        os << "Iskovskikh(d=" << (twist ? std::to_string(*twist) : "?") << ", ";
    if (genus)
        os << "g=" << *genus;
    else
        os << "fixed curve rational";
    os << ")";
    return os.str();
}

NormalFormError::NormalFormError(std::string message, ValidationReport rep)
    : std::runtime_error(std::move(message)), report(std::move(rep)) {}

unsigned genus(const RatPoly& branch) {
    if (branch.is_zero() || !is_squarefree(branch))
        throw std::invalid_argument("genus requires a nonzero squarefree branch");
    int deg = branch.degree();
    if (deg <= 2)
        throw std::domain_error(
            "branch of degree <= 2 gives a rational curve with no genus label");
    return static_cast<unsigned>((deg - 1) / 2);  // ceil(deg/2) - 1
}

unsigned real_components(const RatPoly& branch) {
    if (branch.is_zero())
        throw std::invalid_argument("real_components requires a nonzero branch");
    if (!is_squarefree(branch))
        throw std::invalid_argument("real_components requires a squarefree branch");
    int deg = branch.degree();
    if (deg == 0)
        return sign(branch.coeff(0)) > 0 ? 1 : 0;
    auto roots = isolate_real_roots(branch);
    int lc_sign = sign(branch.lc());
    if (roots.empty())
        return sign(branch(Rat(0))) > 0 ? 1 : 0;

    // All roots are simple, so the sign alternates across each of them; the
    // components of {form >= 0} on the circle are exactly the positive
    // regions. Odd degree puts a simple root of the homogenization at [1:0],
    // splitting the region through infinity in two.
    size_t k = roots.size();
    unsigned positive = 0;
    for (size_t i = 0; i + 1 < k; ++i)
        if (sign(branch(rational_between(roots[i], roots[i + 1]))) > 0)
            ++positive;
    int tail_plus = lc_sign;
    int tail_minus = deg % 2 == 0 ? lc_sign : -lc_sign;
    if (deg % 2 == 0) {
        if (tail_plus > 0)
            ++positive;  // single region through infinity
    } else {
        if (tail_plus > 0)
            ++positive;
        if (tail_minus > 0)
            ++positive;
    }
    return positive;
}

namespace {

FixedCurve curve_from_branch(RatPoly branch) {
    FixedCurve fc{std::move(branch), std::nullopt, 0, CurveFlag::rational};
    if (fc.branch.degree() >= 3) {
        unsigned g = genus(fc.branch);
        fc.genus = g;
        fc.flag = g == 1 ? CurveFlag::elliptic : CurveFlag::hyperelliptic;
    }
    fc.real_components = real_components(fc.branch);
    return fc;
}

}

FixedCurve fixed_curve_cb(const ConicBundleModel& m) {
    return curve_from_branch(m.disc().primitive());
}

FixedCurve fixed_curve_dj(const DeJonquieresModel& m) {
    FixedCurve fc = curve_from_branch(m.f().primitive());
    // d >= 2 makes deg f >= 4, so the general path already set g = d-1.
    return fc;
}

CompletionWeights completion_weights(const ConicBundleModel& m) {
    auto base_deg = [](const RatPoly& p) {
        return p.is_zero() ? 0 : p.degree();
    };
    int da = base_deg(m.A());
    int dc = base_deg(m.C());
    int dh = base_deg(m.H());
    int db = m.B().is_zero() ? -1 : m.B().degree();

    // The products used in the sign rules then have even degree and
    // well-defined signs at [1:0]. Majority parity keeps the lift minimal;
    // a tie is impossible among three parities.
    int odd = (da % 2) + (dc % 2) + (dh % 2);
    int parity = odd >= 2 ? 1 : 0;
    auto lift = [parity](int d) { return d % 2 == parity ? d : d + 1; };
    int na = lift(da), nc = lift(dc), nh = lift(dh);
    while ((na + nc) / 2 < db) {
        if (na <= nc)
            na += 2;
        else
            nc += 2;
    }
    return CompletionWeights{na, (na + nc) / 2, nc, nh};
}

InfinityFiber infinity_fiber(const ConicBundleModel& m) {
    CompletionWeights w = completion_weights(m);
    InfinityFiber f{m.A().coeff(w.na), m.B().coeff(w.nb), m.C().coeff(w.nc),
                    m.H().coeff(w.nh), Rat(0), false, false};
    f.disc = f.b * f.b - f.a * f.c * 4;
    f.smooth = f.disc * f.h != 0;
    f.has_real_point = sign(f.disc) > 0 || sign(f.a * f.h) > 0 || !f.smooth;
    return f;
}

namespace {

bool fiber_has_real_point_at(const ConicBundleModel& m, const Rat& t) {
    // Valid only away from roots of Delta.
    return sign(m.disc()(t)) > 0 || sign(m.A()(t) * m.H()(t)) > 0;
}

struct CircleElement {
    enum Kind { infinity_point, root_point, region } kind;
    bool in;
    size_t root_index = 0;
};

bool arc_lo_less(const Arc& a, const Arc& b) {
    if (a.lo.is_infinity() != b.lo.is_infinity())
        return a.lo.is_infinity();
    if (a.lo.is_infinity())
        return false;
    return compare(*a.lo.value, *b.lo.value) < 0;
}

}

RealLocus real_locus(const ConicBundleModel& m) {
    auto roots = isolate_real_roots(m.delta());
    InfinityFiber inf = infinity_fiber(m);
    size_t k = roots.size();

    RealLocus locus;
    locus.contains_infinity = inf.has_real_point;

    if (k == 0) {
        bool everywhere = fiber_has_real_point_at(m, Rat(0));
        if (everywhere && !inf.has_real_point)
            throw std::logic_error(
                "real locus fails to be closed at infinity; completion "
                "convention violated");
        locus.full = everywhere;
        return locus;
    }

    // Circle walk: infinity, the region (-inf, r0), r0, (r0, r1), ...,
    // r_{k-1}, (r_{k-1}, +inf), and back to infinity. Roots of Delta are
    // always in the locus.
    std::vector<CircleElement> circle;
    circle.push_back({CircleElement::infinity_point, inf.has_real_point});
    for (size_t i = 0; i <= k; ++i) {
        Rat sample = i == 0 ? rational_below(roots[0])
                   : i == k ? rational_above(roots[k - 1])
                            : rational_between(roots[i - 1], roots[i]);
        circle.push_back({CircleElement::region, fiber_has_real_point_at(m, sample)});
        if (i < k)
            circle.push_back({CircleElement::root_point, true, i});
    }

    if (std::all_of(circle.begin(), circle.end(),
                    [](const CircleElement& e) { return e.in; })) {
        locus.full = true;
        return locus;
    }

    // Rotate so the walk starts on an out-element; runs then never split.
    size_t n = circle.size();
    size_t start = 0;
    while (circle[start].in)
        ++start;
    std::vector<const CircleElement*> walk;
    walk.reserve(n);
    for (size_t i = 0; i < n; ++i)
        walk.push_back(&circle[(start + i) % n]);

    size_t i = 0;
    while (i < n) {
        if (!walk[i]->in) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j + 1 < n && walk[j + 1]->in)
            ++j;
        const CircleElement* first = walk[i];
        const CircleElement* last = walk[j];
        // A run starts and ends at a point element: regions always border
        // in-locus roots (or the infinity point, by the closure of the locus).
        if (first->kind == CircleElement::region || last->kind == CircleElement::region)
            throw std::logic_error("locus run bounded by an open region");
        if (i == j) {
            if (first->kind == CircleElement::root_point)
                locus.isolated_points.push_back(roots[first->root_index]);
            // a lone infinity point is recorded by contains_infinity
        } else {
            Arc arc{first->kind == CircleElement::infinity_point
                        ? CircleEnd::infinity()
                        : CircleEnd::at(roots[first->root_index]),
                    last->kind == CircleElement::infinity_point
                        ? CircleEnd::infinity()
                        : CircleEnd::at(roots[last->root_index])};
            locus.arcs.push_back(std::move(arc));
        }
        i = j + 1;
    }

    std::sort(locus.arcs.begin(), locus.arcs.end(), arc_lo_less);
    return locus;
}

bool locus_contains(const RealLocus& locus, const Rat& t) {
    if (locus.full)
        return true;
    for (const auto& p : locus.isolated_points)
        if (compare(p, t) == 0)
            return true;
    for (const auto& arc : locus.arcs) {
        if (arc.lo.is_infinity()) {
            if (compare(*arc.hi.value, t) >= 0)
                return true;
            continue;
        }
        if (arc.hi.is_infinity()) {
            if (compare(*arc.lo.value, t) <= 0)
                return true;
            continue;
        }
        bool wraps = compare(*arc.lo.value, *arc.hi.value) > 0;
        bool above_lo = compare(*arc.lo.value, t) <= 0;
        bool below_hi = compare(*arc.hi.value, t) >= 0;
        if (wraps ? (above_lo || below_hi) : (above_lo && below_hi))
            return true;
    }
    return false;
}

namespace {

bool ends_equal(const CircleEnd& a, const CircleEnd& b) {
    if (a.is_infinity() != b.is_infinity())
        return false;
    if (a.is_infinity())
        return true;
    return compare(*a.value, *b.value) == 0;
}

}

bool real_locus_equal(const RealLocus& a, const RealLocus& b) {
    if (a.full != b.full || a.contains_infinity != b.contains_infinity)
        return false;
    if (a.full)
        return true;
    if (a.arcs.size() != b.arcs.size() ||
        a.isolated_points.size() != b.isolated_points.size())
        return false;
    for (size_t i = 0; i < a.arcs.size(); ++i)
        if (!ends_equal(a.arcs[i].lo, b.arcs[i].lo) ||
            !ends_equal(a.arcs[i].hi, b.arcs[i].hi))
            return false;
    for (size_t i = 0; i < a.isolated_points.size(); ++i)
        if (compare(a.isolated_points[i], b.isolated_points[i]) != 0)
            return false;
    return true;
}

ValidationReport is_iskovskikh_normal_form(const ConicBundleModel& m) {
    ValidationReport report;
    const RatPoly& H = m.H();
    int dh = H.degree();
    int real = H.is_constant() ? 0 : count_real_roots(H);
    bool all_real = H.is_constant() || real == dh;
    report.add("h_roots_all_real", all_real,
               "deg H = " + std::to_string(dh) + ", real roots: " +
                   std::to_string(real));
    report.add("h_leading_coefficient_negative", sign(H.lc()) < 0,
               "lc(H) = " + H.lc().get_str());
    InfinityFiber inf = infinity_fiber(m);
    report.add("infinity_fiber_no_real_point", !inf.has_real_point,
               inf.smooth ? (inf.has_real_point ? "smooth fiber with real points"
                                                : "smooth fiber without real points")
                          : "fiber at infinity is degenerate");
    RealLocus locus = real_locus(m);
    report.add("real_locus_proper", !locus.full,
               locus.full ? "the real locus is all of P^1(R)" : "");
    return report;
}

ClassLabel classify(const ConicBundleModel& m) {
    RealLocus locus = real_locus(m);
    FixedCurve fc = fixed_curve_cb(m);
    if (locus.full)
        return ClassLabel{ClassLabel::de_jonquieres, std::nullopt, fc.genus};
    ValidationReport nf = is_iskovskikh_normal_form(m);
    if (!nf.valid)
        throw NormalFormError(
            "model has a proper real locus but is not in Iskovskikh normal "
            "form; re-present it in normal form",
            std::move(nf));
    return ClassLabel{ClassLabel::iskovskikh,
                      static_cast<unsigned>(m.H().degree()), fc.genus};
}

}
