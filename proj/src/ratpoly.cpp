#include "cremona/ratpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace cremona {

RatPoly::RatPoly(const Rat& constant) {
    if (constant != 0)
        coeffs_.push_back(constant);
}

RatPoly::RatPoly(long constant) : RatPoly(Rat(constant)) {}

RatPoly::RatPoly(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

RatPoly RatPoly::variable() {
    return monomial(1, Rat(1));
}

RatPoly RatPoly::monomial(unsigned degree, const Rat& coefficient) {
    if (coefficient == 0)
        return {};
    std::vector<Rat> c(degree + 1, Rat(0));
    c.back() = coefficient;
    return RatPoly(std::move(c));
}

RatPoly RatPoly::from_roots(const std::vector<Rat>& roots) {
    RatPoly p(1);
    for (const auto& r : roots)
        p = p * RatPoly(std::vector<Rat>{-r, Rat(1)});
    return p;
}

Rat RatPoly::coeff(unsigned k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rat(0);
}

const Rat& RatPoly::lc() const {
    if (coeffs_.empty())
        throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rat RatPoly::operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::operator-() const {
    RatPoly r(*this);
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

RatPoly RatPoly::operator+(const RatPoly& g) const {
    std::vector<Rat> c(std::max(coeffs_.size(), g.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        c[i] += coeffs_[i];
    for (size_t i = 0; i < g.coeffs_.size(); ++i)
        c[i] += g.coeffs_[i];
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-(const RatPoly& g) const {
    return *this + (-g);
}

RatPoly RatPoly::operator*(const RatPoly& g) const {
    if (is_zero() || g.is_zero())
        return {};
    std::vector<Rat> c(coeffs_.size() + g.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < g.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * g.coeffs_[j];
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const Rat& s) const {
    if (s == 0)
        return {};
    RatPoly r(*this);
    for (auto& c : r.coeffs_)
        c *= s;
    return r;
}

RatPoly RatPoly::operator/(const Rat& s) const {
    if (s == 0)
        throw std::domain_error("division of a polynomial by zero");
    RatPoly r(*this);
    for (auto& c : r.coeffs_)
        c /= s;
    return r;
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rat> c(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        c[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return RatPoly(std::move(c));
}

RatPoly RatPoly::pow(unsigned n) const {
    RatPoly acc(1);
    RatPoly base(*this);
    while (n) {
        if (n & 1)
            acc = acc * base;
        n >>= 1;
        if (n)
            base = base * base;
    }
    return acc;
}

RatPoly RatPoly::monic() const {
    return *this / lc();
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
    if (divisor.is_zero())
        throw std::domain_error("polynomial division by zero");
    RatPoly rem(*this);
    if (rem.degree() < divisor.degree())
        return {RatPoly(), rem};
    std::vector<Rat> q(rem.degree() - divisor.degree() + 1, Rat(0));
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        unsigned shift = rem.degree() - divisor.degree();
        Rat factor = rem.lc() / divisor.lc();
        q[shift] = factor;
        rem = rem - RatPoly::monomial(shift, factor) * divisor;
    }
    return {RatPoly(std::move(q)), rem};
}

Rat RatPoly::content() const {
    if (coeffs_.empty())
        return Rat(1);
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& c : coeffs_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

RatPoly RatPoly::compose_affine(const Rat& a, const Rat& b) const {
    RatPoly lin(std::vector<Rat>{b, a});
    RatPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * lin + RatPoly(*it);
    return acc;
}

RatPoly RatPoly::mobius_pullback(const Rat& a, const Rat& b, const Rat& c,
                                 const Rat& d, unsigned n) const {
    if (degree() > static_cast<int>(n))
        throw std::invalid_argument("mobius_pullback degree below polynomial degree");
    RatPoly num(std::vector<Rat>{b, a});
    RatPoly den(std::vector<Rat>{d, c});
    RatPoly acc;
    // sum coeff_k (a t + b)^k (c t + d)^(n-k)
    RatPoly num_pow(1);
    std::vector<RatPoly> den_pows(n + 1);
    den_pows[0] = RatPoly(1);
    for (unsigned k = 1; k <= n; ++k)
        den_pows[k] = den_pows[k - 1] * den;
    for (unsigned k = 0; k <= n; ++k) {
        if (coeff(k) != 0)
            acc = acc + num_pow * den_pows[n - k] * coeff(k);
        if (k < n)
            num_pow = num_pow * num;
    }
    return acc;
}

std::vector<Rat> RatPoly::homogenize(unsigned d) const {
    if (degree() > static_cast<int>(d))
        throw std::invalid_argument("homogenization degree below polynomial degree");
    std::vector<Rat> form(d + 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        form[i] = coeffs_[i];
    return form;
}

namespace {

std::string magnitude_term(const Rat& c, unsigned k, const std::string& var) {
    Rat m = abs(c);
    std::ostringstream os;
    if (k == 0) {
        os << m.get_str();
    } else {
        if (m != 1)
            os << m.get_str() << "*";
        os << var;
        if (k > 1)
            os << "^" << k;
    }
    return os.str();
}

}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& c = coeffs_[k];
        if (c == 0)
            continue;
        if (first) {
            // A leading "-t^k" would parse as (-t)^k under the grammar, so
            // negative unit coefficients are spelled out for k >= 2.
            if (sgn(c) < 0) {
                if (abs(c) == 1 && k >= 2)
                    os << "-1*" << var << "^" << k;
                else
                    os << "-" << magnitude_term(c, k, var);
            } else {
                os << magnitude_term(c, k, var);
            }
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ") << magnitude_term(c, k, var);
        }
    }
    return os.str();
}

RatPoly gcd(const RatPoly& p, const RatPoly& q) {
    RatPoly a = p, b = q;
    while (!b.is_zero()) {
        auto [quot, rem] = a.divmod(b);
        (void)quot;
        a = std::move(b);
        b = rem.is_zero() ? RatPoly() : rem.primitive();
    }
    if (a.is_zero())
        return a;
    return a.monic();
}

bool is_squarefree(const RatPoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("squarefreeness of the zero polynomial is undefined");
    return gcd(p, p.derivative()).is_constant();
}

RatPoly squarefree_part(const RatPoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("squarefree part of the zero polynomial is undefined");
    RatPoly g = gcd(p, p.derivative());
    if (g.is_constant())
        return p;
    auto [q, r] = p.divmod(g);
    if (!r.is_zero())
        throw std::logic_error("gcd does not divide its argument");
    return q;
}

RatPoly binary_discriminant(const RatPoly& A, const RatPoly& B, const RatPoly& C) {
    return B * B - A * C * Rat(4);
}

std::optional<Rat> positive_proportionality(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() && q.is_zero())
        return Rat(1);
    if (p.is_zero() || q.is_zero())
        return std::nullopt;
    if (p.degree() != q.degree())
        return std::nullopt;
    Rat lambda = p.lc() / q.lc();
    if (sgn(lambda) <= 0)
        return std::nullopt;
    if (q * lambda == p)
        return lambda;
    return std::nullopt;
}

}
