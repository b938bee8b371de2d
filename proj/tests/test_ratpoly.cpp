#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/parse.hpp"
#include "cremona/ratpoly.hpp"

#include <random>

using namespace cremona;

namespace {

RatPoly P(const std::string& s) {
    return parse_poly(s);
}

RatPoly random_poly(std::mt19937_64& rng, int max_degree, int coeff_bound) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
    int d = deg(rng);
    std::vector<Rat> c(d + 1);
    for (auto& x : c)
        x = Rat(coeff(rng));
    return RatPoly(std::move(c));
}

}

TEST_CASE("gcd on the worked examples") {
    CHECK(gcd(P("t^2-1"), P("t-1")) == P("t-1"));
    CHECK(gcd(P("t^2+1"), P("t")) == P("1"));
    // Euclid by hand: 2t^2-2 = (t/2)(4t-4) + 2t - 2, then 4t-4 = 2(2t-2).
    CHECK(gcd(P("2*t^2-2"), P("4*t-4")) == P("t-1"));
    CHECK(gcd(RatPoly(), RatPoly()) == RatPoly());
    CHECK(gcd(P("t^2-1"), RatPoly()) == P("t^2-1"));
}

TEST_CASE("squarefreeness") {
    CHECK_FALSE(is_squarefree(P("t^2")));
    CHECK(is_squarefree(P("t^2-1")));
    CHECK_FALSE(is_squarefree(P("(t-1)^2*(t+2)")));
    CHECK(is_squarefree(P("7")));
    CHECK_THROWS_AS(is_squarefree(RatPoly()), std::invalid_argument);
}

TEST_CASE("squarefree part") {
    CHECK(squarefree_part(P("(t-1)^2*(t+2)")).monic() == P("(t-1)*(t+2)").monic());
    CHECK(squarefree_part(P("t^3")).monic() == P("t"));
}

TEST_CASE("binary discriminant") {
    RatPoly f = P("(t^2-1)*(t^2-4)*(t^2-9)");
    CHECK(binary_discriminant(P("1"), RatPoly(), f) == f * Rat(-4));
    CHECK(binary_discriminant(RatPoly(), P("1"), RatPoly()) == P("1"));
    CHECK(binary_discriminant(P("1"), P("t"), P("1")) == P("t^2-4"));
}

TEST_CASE("binary discriminant scales quadratically") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        RatPoly A = random_poly(rng, 3, 5);
        RatPoly B = random_poly(rng, 3, 5);
        RatPoly C = random_poly(rng, 3, 5);
        Rat lam = make_rat((long)(i % 7) - 3, 2);
        if (lam == 0)
            continue;
        CHECK(binary_discriminant(A * lam, B * lam, C * lam) ==
              binary_discriminant(A, B, C) * (lam * lam));
    }
}

TEST_CASE("positive proportionality") {
    CHECK(positive_proportionality(P("2*t+2"), P("t+1")) == Rat(2));
    CHECK_FALSE(positive_proportionality(P("-t"), P("t")).has_value());
    CHECK_FALSE(positive_proportionality(P("t^2-4"), P("t^2+1")).has_value());
    CHECK(positive_proportionality(RatPoly(), RatPoly()) == Rat(1));
    CHECK_FALSE(positive_proportionality(P("t"), RatPoly()).has_value());
}

TEST_CASE("positive proportionality detects every positive scalar") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        RatPoly p = random_poly(rng, 6, 10);
        if (p.is_zero())
            continue;
        Rat lam = make_rat(1 + (long)(i % 9), 1 + (long)(i % 4));
        CHECK(positive_proportionality(p * lam, p) == lam);
        CHECK_FALSE(positive_proportionality(p * (-lam), p).has_value());
    }
}

TEST_CASE("homogenization") {
    auto form = P("t^2-1").homogenize(2);
    CHECK(form == std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});
    // t as a degree-2 form is t*z; value at [1:0] is the t^2 coefficient.
    auto tz = P("t").homogenize(2);
    CHECK(tz.back() == 0);
    auto neg = P("-(t^2)+1").homogenize(2);
    CHECK(sign(neg.back()) == -1);
    CHECK_THROWS_AS(P("t^3").homogenize(2), std::invalid_argument);
}

TEST_CASE("division and gcd sanity on random inputs") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 60; ++i) {
        RatPoly a = random_poly(rng, 6, 8);
        RatPoly b = random_poly(rng, 4, 8);
        if (b.is_zero())
            continue;
        auto [q, r] = a.divmod(b);
        CHECK(a == q * b + r);
        CHECK(r.degree() < b.degree());
        RatPoly g = gcd(a, b);
        if (!a.is_zero()) {
            CHECK(a.divmod(g).second.is_zero());
            CHECK(b.divmod(g).second.is_zero());
        }
    }
}

TEST_CASE("content and primitive part") {
    RatPoly p = P("4/3*t^2 - 2/3*t + 2");
    Rat c = p.content();
    CHECK(sign(c) == 1);
    RatPoly prim = p.primitive();
    CHECK(prim * c == p);
    CHECK(prim == P("2*t^2 - t + 3"));
    CHECK((-p).primitive() == -prim);
    CHECK(RatPoly().content() == Rat(1));
}

TEST_CASE("mobius pullback round trip") {
    RatPoly p = P("t^3 - 2*t + 5");
    // t -> t+1 then t -> t-1 restores the polynomial.
    RatPoly shifted = p.compose_affine(Rat(1), Rat(1));
    CHECK(shifted.compose_affine(Rat(1), Rat(-1)) == p);
    // (c t + d)^n p((a t + b)/(c t + d)) with the inverse map recovers p up
    // to the determinant power.
    RatPoly q = p.mobius_pullback(Rat(0), Rat(1), Rat(1), Rat(0), 3);  // t -> 1/t
    RatPoly back = q.mobius_pullback(Rat(0), Rat(1), Rat(1), Rat(0), 3);
    CHECK(back == p);
}
