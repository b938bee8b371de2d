#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/invariants.hpp"
#include "cremona/parse.hpp"
#include "test_util.hpp"

#include <random>

using namespace cremona;

namespace {

RatPoly P(const std::string& s) {
    return parse_poly(s);
}

ConicBundleModel M(const std::string& a, const std::string& b,
                   const std::string& c, const std::string& h) {
    auto r = mk_conic_bundle(P(a), P(b), P(c), P(h));
    REQUIRE(r.model.has_value());
    return *r.model;
}

}

TEST_CASE("genus formula") {
    CHECK(genus(P("t^4-5*t^2+4")) == 1);
    CHECK(genus(P("t^6-14*t^4+49*t^2-36")) == 2);
    CHECK(genus(P("(t^2-1)*(t^2-4)*(t^2-9)*(t^2-16)")) == 3);
    CHECK(genus(P("t^3-t")) == 1);
    CHECK_THROWS_AS(genus(P("t^2-1")), std::domain_error);
    CHECK_THROWS_AS(genus(P("t^2")), std::invalid_argument);

    std::mt19937_64 rng(3);
    for (int d = 2; d <= 6; ++d) {
        RatPoly f = testutil::random_squarefree(rng, 2 * d, 9);
        CHECK(genus(f) == static_cast<unsigned>(d - 1));
    }
}

TEST_CASE("real component counting") {
    CHECK(real_components(P("(t^2-1)*(t^2-4)*(t^2-9)")) == 3);
    CHECK(real_components(P("t^2+1")) == 1);
    CHECK(real_components(P("-(t^2)-1")) == 0);
    CHECK(real_components(P("t")) == 1);
    CHECK(real_components(P("t^2-2")) == 1);
    CHECK(real_components(P("-(t^2-1)*(t^2-4)")) == 2);
    CHECK(real_components(P("5")) == 1);
    CHECK(real_components(P("-5")) == 0);
    CHECK_THROWS_AS(real_components(P("t^2")), std::invalid_argument);
}

TEST_CASE("half the root count, when there are real roots") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 40; ++i) {
        RatPoly f = testutil::random_squarefree_with_real_roots(rng, 4 + 2 * (i % 3));
        unsigned roots = isolate_real_roots(f).size();
        REQUIRE(roots >= 2);
        CHECK(roots % 2 == 0);
        CHECK(real_components(f) == roots / 2);
    }
}

TEST_CASE("fixed curve of a conic bundle model") {
    RatPoly f = P("(t^2-1)*(t^2-4)*(t^2-9)");
    auto sab = M("1", "0", "(t^2-1)*(t^2-4)*(t^2-9)", "-(t-7/2)*(t-15/4)");
    FixedCurve fc = fixed_curve_cb(sab);
    // branch of w^2 = B^2-4AC, positively proportional to -4f
    auto lam = positive_proportionality(fc.branch, f * Rat(-4));
    REQUIRE(lam.has_value());
    CHECK(sign(*lam) > 0);
    CHECK(fc.genus == 2);
    CHECK(fc.flag == CurveFlag::hyperelliptic);
    CHECK(fc.real_components == 3);

    auto rational_case = M("1", "t", "1", "-(t^2-9)");
    FixedCurve rc = fixed_curve_cb(rational_case);
    CHECK(rc.branch == P("t^2-4"));
    CHECK(rc.flag == CurveFlag::rational);
    CHECK_FALSE(rc.genus.has_value());

    auto genus2 = M("1", "0", "-(t^6-1)", "-(t^2-4)");
    FixedCurve g2 = fixed_curve_cb(genus2);
    CHECK(g2.branch == P("t^6-1"));  // 4(t^6-1) with the content removed
    CHECK(g2.genus == 2);
    CHECK(g2.flag == CurveFlag::hyperelliptic);
}

TEST_CASE("fixed curve of a de Jonquieres model") {
    auto deg8 = mk_dejonquieres(P("(t^2-1)*(t^2-4)*(t^2-9)*(t^2-16)"));
    REQUIRE(deg8.model.has_value());
    FixedCurve fc8 = fixed_curve_dj(*deg8.model);
    CHECK(fc8.genus == 3);
    CHECK(fc8.real_components == 4);

    auto elliptic = mk_dejonquieres(P("t^4-5*t^2+4"));
    REQUIRE(elliptic.model.has_value());
    FixedCurve fce = fixed_curve_dj(*elliptic.model);
    CHECK(fce.genus == 1);
    CHECK(fce.flag == CurveFlag::elliptic);
    CHECK(fce.real_components == 2);  // roots -2,-1,1,2

    auto deg6 = mk_dejonquieres(P("(t^2-1)*(t^2-4)*(t^2-9)"));
    REQUIRE(deg6.model.has_value());
    CHECK(fixed_curve_dj(*deg6.model).real_components == 3);
}

TEST_CASE("real locus: single bounded arc") {
    auto m = M("1", "0", "1", "-(t^2-1)");
    RealLocus locus = real_locus(m);
    CHECK_FALSE(locus.full);
    CHECK_FALSE(locus.contains_infinity);
    CHECK(locus.isolated_points.empty());
    REQUIRE(locus.arcs.size() == 1);
    REQUIRE_FALSE(locus.arcs[0].lo.is_infinity());
    REQUIRE_FALSE(locus.arcs[0].hi.is_infinity());
    CHECK(compare(*locus.arcs[0].lo.value, Rat(-1)) == 0);
    CHECK(compare(*locus.arcs[0].hi.value, Rat(1)) == 0);
}

TEST_CASE("real locus: full circle") {
    auto m = M("1", "0", "-1", "t^2-2");
    RealLocus locus = real_locus(m);
    CHECK(locus.full);
    CHECK(locus.contains_infinity);
    CHECK(locus.arcs.empty());
}

TEST_CASE("real locus: empty") {
    auto m = M("1", "0", "1", "-1");
    RealLocus locus = real_locus(m);
    CHECK_FALSE(locus.full);
    CHECK_FALSE(locus.contains_infinity);
    CHECK(locus.arcs.empty());
    CHECK(locus.isolated_points.empty());
}

TEST_CASE("real locus: algebraic endpoints from A*H > 0") {
    // B^2-4AC = -4(t^2+1) < 0 everywhere, so the locus is {H >= 0} = [-s2, s2]
    auto m = M("1", "0", "t^2+1", "-(t^2-2)");
    RealLocus locus = real_locus(m);
    REQUIRE(locus.arcs.size() == 1);
    AlgReal s2(P("t^2-2"), Rat(1), Rat(2));
    CHECK(compare(*locus.arcs[0].lo.value, AlgReal(P("t^2-2"), Rat(-2), Rat(-1))) == 0);
    CHECK(compare(*locus.arcs[0].hi.value, s2) == 0);
    CHECK(locus_contains(locus, Rat(0)));
    CHECK(locus_contains(locus, Rat(1)));
    CHECK_FALSE(locus_contains(locus, Rat(2)));
    CHECK_FALSE(locus_contains(locus, Rat(-2)));
}

TEST_CASE("real locus: arc through infinity") {
    // B^2-4AC = -4 < 0, locus = {H >= 0} = complement of (-1, 1) plus infinity
    auto m = M("1", "0", "1", "t^2-1");
    RealLocus locus = real_locus(m);
    CHECK_FALSE(locus.full);
    CHECK(locus.contains_infinity);
    REQUIRE(locus.arcs.size() == 1);
    REQUIRE_FALSE(locus.arcs[0].lo.is_infinity());
    CHECK(compare(*locus.arcs[0].lo.value, Rat(1)) == 0);
    CHECK(compare(*locus.arcs[0].hi.value, Rat(-1)) == 0);  // wraps
    CHECK(locus_contains(locus, Rat(2)));
    CHECK(locus_contains(locus, Rat(-2)));
    CHECK(locus_contains(locus, Rat(1)));
    CHECK_FALSE(locus_contains(locus, Rat(0)));
}

TEST_CASE("locus agrees with the eigenvalue oracle") {
    std::mt19937_64 rng(555);
    std::uniform_real_distribution<double> pos(0.0, 1.0);
    for (int i = 0; i < 10; ++i) {
        auto m = testutil::random_valid_model(rng);
        RealLocus locus = real_locus(m);
        std::vector<double> endpoints;
        for (const auto& arc : locus.arcs) {
            if (!arc.lo.is_infinity())
                endpoints.push_back(arc.lo.value->approx(1e-9));
            if (!arc.hi.is_infinity())
                endpoints.push_back(arc.hi.value->approx(1e-9));
        }
        for (const auto& p : locus.isolated_points)
            endpoints.push_back(p.approx(1e-9));
        std::uniform_int_distribution<long> num(-12000, 12000);
        for (int s = 0; s < 300; ++s) {
            Rat t = make_rat(num(rng), 1000);
            double td = to_double(t);
            bool near_endpoint = false;
            for (double e : endpoints)
                if (std::abs(td - e) < 1e-6)
                    near_endpoint = true;
            if (near_endpoint)
                continue;
            bool exact = locus_contains(locus, t);
            bool oracle = testutil::oracle_fiber_has_real_point(m, td);
            CAPTURE(to_string(t));
            CHECK(exact == oracle);
        }
    }
}

TEST_CASE("locus and classification are invariant under scaling") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 8; ++i) {
        auto m = testutil::random_valid_model(rng);
        RealLocus base = real_locus(m);
        CHECK(real_locus_equal(base, real_locus(scale(m, Rat(3)))));
        CHECK(real_locus_equal(base, real_locus(scale(m, make_rat(2, 7)))));
    }
}

TEST_CASE("classification") {
    auto dj = M("1", "0", "-1", "t^2-2");
    ClassLabel dl = classify(dj);
    CHECK(dl.kind == ClassLabel::de_jonquieres);
    CHECK_FALSE(dl.twist.has_value());

    auto isk = M("1", "0", "1", "-(t^2-1)");
    ClassLabel il = classify(isk);
    CHECK(il.kind == ClassLabel::iskovskikh);
    CHECK(il.twist == 2);
    CHECK_FALSE(il.genus.has_value());  // branch is the constant -4

    auto sab = M("1", "0", "(t^2-1)*(t^2-4)*(t^2-9)", "-(t-7/2)*(t-15/4)");
    ClassLabel sl = classify(sab);
    CHECK(sl.kind == ClassLabel::iskovskikh);
    CHECK(sl.twist == 2);
    CHECK(sl.genus == 2);
    CHECK(sl.to_string() == "Iskovskikh(d=2, g=2)");

    // proper locus but a positive leading coefficient on H: not normal form
    auto flipped = scale(sab, Rat(-1));
    CHECK_THROWS_AS(classify(flipped), NormalFormError);

    // scaling by a positive rational does not change the label
    ClassLabel scaled = classify(scale(sab, make_rat(7, 3)));
    CHECK(scaled.kind == sl.kind);
    CHECK(scaled.twist == sl.twist);
    CHECK(scaled.genus == sl.genus);
}

TEST_CASE("S_{a,b} passes the normal form checks") {
    auto sab = M("1", "0", "(t^2-1)*(t^2-4)*(t^2-9)", "-(t-7/2)*(t-15/4)");
    auto report = is_iskovskikh_normal_form(sab);
    CHECK(report.valid);
    auto inf = infinity_fiber(sab);
    CHECK(inf.smooth);
    CHECK_FALSE(inf.has_real_point);
}
