#pragma once

#include "cremona/rat.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cremona {

// Dense univariate polynomial over Q, constant term first.
// Invariant: the coefficient vector never ends in a zero, so the zero
// polynomial is the empty vector and degree() == size() - 1 (-1 for zero).
class RatPoly {
public:
    RatPoly() = default;
    RatPoly(const Rat& constant);
    RatPoly(long constant);
    explicit RatPoly(std::vector<Rat> coefficients);

    static RatPoly variable();
    static RatPoly monomial(unsigned degree, const Rat& coefficient);
    static RatPoly from_roots(const std::vector<Rat>& roots);  // (t-r1)(t-r2)...

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    Rat coeff(unsigned k) const;          // 0 beyond the degree
    const Rat& lc() const;                // leading coefficient; poly nonzero
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat operator()(const Rat& x) const;   // Horner

    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& g) const;
    RatPoly operator-(const RatPoly& g) const;
    RatPoly operator*(const RatPoly& g) const;
    RatPoly operator*(const Rat& s) const;
    RatPoly operator/(const Rat& s) const;
    bool operator==(const RatPoly& g) const = default;

    RatPoly derivative() const;
    RatPoly pow(unsigned n) const;
    RatPoly monic() const;                // poly nonzero

    // Euclidean division by a nonzero divisor: (q, r) with
    // *this == q*divisor + r and deg r < deg divisor.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;

    // Positive rational c such that (*this)/c has coprime integer
    // coefficients; the content of the zero polynomial is 1.
    Rat content() const;
    RatPoly primitive() const { return *this / content(); }

    RatPoly compose_affine(const Rat& a, const Rat& b) const;  // p(a*t + b)
    // (c*t + d)^n * p((a*t + b)/(c*t + d)) for n >= degree().
    RatPoly mobius_pullback(const Rat& a, const Rat& b, const Rat& c,
                            const Rat& d, unsigned n) const;

    // Binary form of degree d >= degree(): coefficient of t^k z^(d-k) sits
    // at index k, so the value at [1:0] is the last entry.
    std::vector<Rat> homogenize(unsigned d) const;

    std::string to_string(const std::string& var = "t") const;

private:
    std::vector<Rat> coeffs_;
    void trim();
};

RatPoly gcd(const RatPoly& p, const RatPoly& q);  // monic; gcd(0,0) = 0
bool is_squarefree(const RatPoly& p);             // p must be nonzero
RatPoly squarefree_part(const RatPoly& p);        // p / gcd(p, p')

// B^2 - 4AC, the discriminant of A x^2 + B xy + C y^2 in the fiber variables.
RatPoly binary_discriminant(const RatPoly& A, const RatPoly& B,
                            const RatPoly& C);

// lambda > 0 with p == lambda * q, if any. Both inputs zero yields
// lambda = 1; degenerate inputs are flagged by callers, not here.
std::optional<Rat> positive_proportionality(const RatPoly& p,
                                            const RatPoly& q);

}
