#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/invariants.hpp"
#include "cremona/model.hpp"
#include "cremona/parse.hpp"

#include <random>

using namespace cremona;

namespace {

RatPoly P(const std::string& s) {
    return parse_poly(s);
}

ConicBundleModel valid_model(const std::string& a, const std::string& b,
                             const std::string& c, const std::string& h) {
    auto r = mk_conic_bundle(P(a), P(b), P(c), P(h));
    REQUIRE(r.model.has_value());
    return *r.model;
}

}

TEST_CASE("mk_conic_bundle validation") {
    // shared roots t = +-1 make Delta = (4-4t^2)(1-t^2) non-squarefree
    auto bad = mk_conic_bundle(P("1"), P("0"), P("t^2-1"), P("-(t^2)+1"));
    CHECK_FALSE(bad.model.has_value());
    CHECK_FALSE(bad.report.valid);
    bool saw_squarefree_failure = false;
    for (const auto& c : bad.report.checks)
        if (c.name == "delta_squarefree" && !c.pass)
            saw_squarefree_failure = true;
    CHECK(saw_squarefree_failure);

    auto good = mk_conic_bundle(P("1"), P("0"), P("1"), P("-(t^2-1)"));
    REQUIRE(good.model.has_value());
    CHECK(good.report.valid);
    CHECK(good.model->delta() == P("4*t^2-4"));

    // the S_{a,b} shape: A=1, B=0, C=f, H=-(t-a)(t-b)
    RatPoly f = P("(t^2-1)*(t^2-4)*(t^2-9)");
    auto sab = mk_conic_bundle(P("1"), P("0"), f, P("-(t-7/2)*(t-15/4)"));
    CHECK(sab.model.has_value());

    auto zero = mk_conic_bundle(P("0"), P("0"), P("0"), P("t"));
    CHECK_FALSE(zero.model.has_value());

    auto odd = mk_conic_bundle(P("1"), P("0"), P("t"), P("1"));
    CHECK_FALSE(odd.model.has_value());  // deg Delta = 1
}

TEST_CASE("iskovskikh normal form checks") {
    auto m = valid_model("1", "0", "1", "-(t^2-1)");
    auto report = is_iskovskikh_normal_form(m);
    CHECK(report.valid);

    auto pos = valid_model("1", "0", "1", "t^2+1");
    auto rep_pos = is_iskovskikh_normal_form(pos);
    CHECK_FALSE(rep_pos.valid);
    int failures = 0;
    for (const auto& c : rep_pos.checks)
        if ((c.name == "h_roots_all_real" || c.name == "h_leading_coefficient_negative") && !c.pass)
            ++failures;
    CHECK(failures == 2);

    auto neg = valid_model("1", "0", "1", "-(t^2+1)");
    auto rep_neg = is_iskovskikh_normal_form(neg);
    CHECK_FALSE(rep_neg.valid);
    for (const auto& c : rep_neg.checks) {
        if (c.name == "h_roots_all_real")
            CHECK_FALSE(c.pass);
        if (c.name == "h_leading_coefficient_negative")
            CHECK(c.pass);
    }
}

TEST_CASE("mk_dejonquieres") {
    auto elliptic = mk_dejonquieres(P("t^4-5*t^2+4"));
    REQUIRE(elliptic.model.has_value());
    CHECK(elliptic.model->d() == 2);

    CHECK_FALSE(mk_dejonquieres(P("t^3-t")).model.has_value());
    CHECK_FALSE(mk_dejonquieres(P("(t^2-1)^2")).model.has_value());
    CHECK_FALSE(mk_dejonquieres(P("t^2-1")).model.has_value());  // d = 1 rejected
    CHECK_FALSE(mk_dejonquieres(RatPoly()).model.has_value());
}

TEST_CASE("scaling") {
    auto m = valid_model("1", "t", "t^2-3", "-(t^2-2)");
    auto doubled = scale(m, Rat(2));
    CHECK(doubled.disc() == m.disc() * Rat(4));
    CHECK(doubled.H() == m.H() * Rat(2));
    auto back = scale(doubled, make_rat(1, 2));
    CHECK(back.A() == m.A());
    CHECK(back.B() == m.B());
    CHECK(back.C() == m.C());
    CHECK(back.H() == m.H());
    CHECK(scale(m, Rat(1)).delta() == m.delta());

    auto flipped = scale(m, Rat(-1));
    CHECK(sign(flipped.H().lc()) != sign(m.H().lc()));
    CHECK_FALSE(is_iskovskikh_normal_form(flipped).checks[1].pass);

    CHECK_THROWS_AS(scale(m, Rat(0)), std::invalid_argument);
}

TEST_CASE("every constructed model revalidates") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(0, 2);
    int built = 0;
    while (built < 40) {
        auto rp = [&](int extra) {
            std::vector<Rat> c(deg(rng) + 1 + extra);
            for (auto& x : c)
                x = Rat(coeff(rng));
            return RatPoly(std::move(c));
        };
        auto r = mk_conic_bundle(rp(0), rp(0), rp(0), rp(1));
        if (!r.model)
            continue;
        ++built;
        const auto& m = *r.model;
        CHECK(is_squarefree(m.delta()));
        CHECK(m.delta().degree() % 2 == 0);
        auto again = mk_conic_bundle(m.A(), m.B(), m.C(), m.H());
        CHECK(again.report.valid);
        // scaling stays valid: Delta picks up lambda^3
        auto s = scale(m, make_rat(-3, 2));
        CHECK(is_squarefree(s.delta()));
    }
}

TEST_CASE("S_{a,b} discriminant is 4 f (t-a)(t-b) symbolically") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<long> pick(-6, 6);
    RatPoly f = P("(t^2-1)*(t^2-4)*(t^2-9)");
    int done = 0;
    while (done < 20) {
        Rat a(pick(rng)), b(pick(rng));
        if (a == b || f(a) == 0 || f(b) == 0)
            continue;
        ++done;
        RatPoly h = RatPoly(std::vector<Rat>{-a, Rat(1)}) *
                    RatPoly(std::vector<Rat>{-b, Rat(1)}) * Rat(-1);
        auto r = mk_conic_bundle(P("1"), P("0"), f, h);
        REQUIRE(r.model.has_value());
        CHECK(r.model->delta() == f * (-h) * Rat(4));
    }
}
