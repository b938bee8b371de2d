#include "cremona/algreal.hpp"

#include <sstream>
#include <stdexcept>

namespace cremona {

namespace {

int variations(const std::vector<int>& signs) {
    int count = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++count;
        prev = s;
    }
    return count;
}

// Sturm chain s0 = p, s1 = p', s_{k+1} = -rem(s_{k-1}, s_k). Elements are
// kept primitive; dividing by a positive content does not change signs.
struct SturmChain {
    std::vector<RatPoly> seq;

    explicit SturmChain(const RatPoly& p) {
        seq.push_back(p);
        RatPoly d = p.derivative();
        if (!d.is_zero()) {
            seq.push_back(d.primitive());
            while (true) {
                auto [q, r] = seq[seq.size() - 2].divmod(seq.back());
                (void)q;
                if (r.is_zero())
                    break;
                seq.push_back((-r).primitive());
            }
        }
    }

    int var_at(const Rat& x) const {
        std::vector<int> signs;
        signs.reserve(seq.size());
        for (const auto& s : seq)
            signs.push_back(sgn(s(x)));
        return variations(signs);
    }

    int var_neg_inf() const {
        std::vector<int> signs;
        signs.reserve(seq.size());
        for (const auto& s : seq) {
            int lead = s.is_zero() ? 0 : sgn(s.lc());
            signs.push_back(s.degree() % 2 == 0 ? lead : -lead);
        }
        return variations(signs);
    }

    int var_pos_inf() const {
        std::vector<int> signs;
        signs.reserve(seq.size());
        for (const auto& s : seq)
            signs.push_back(s.is_zero() ? 0 : sgn(s.lc()));
        return variations(signs);
    }

    int count(const Rat& lo, const Rat& hi) const {
        return var_at(lo) - var_at(hi);
    }

    int count_all() const {
        return var_neg_inf() - var_pos_inf();
    }
};

// Strict upper bound on the absolute value of every root (Cauchy).
Rat root_bound(const RatPoly& p) {
    Rat m(0);
    for (int k = 0; k < p.degree(); ++k) {
        Rat v = abs(p.coeff(k) / p.lc());
        if (v > m)
            m = v;
    }
    Rat bound = m + 1;
    mpz_class ceil;
    mpz_cdiv_q(ceil.get_mpz_t(), bound.get_num().get_mpz_t(), bound.get_den().get_mpz_t());
    return Rat(ceil);
}

// Rational with the smallest denominator strictly inside (lo, hi), by the
// Stern-Brocot / continued-fraction walk.
Rat simplest_in(const Rat& lo, const Rat& hi) {
    if (sgn(lo) < 0 && sgn(hi) > 0)
        return Rat(0);
    if (sgn(hi) <= 0) {
        return -simplest_in(-hi, -lo);
    }
    // 0 <= lo < hi
    mpz_class n;
    mpz_fdiv_q(n.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    Rat integer_candidate = Rat(n) + 1;
    if (integer_candidate < hi)
        return integer_candidate;
    Rat flo = lo - Rat(n);  // in [0, 1)
    Rat fhi = hi - Rat(n);  // in (0, 1]
    if (flo == 0) {
        Rat inv = 1 / fhi;
        mpz_class k;
        mpz_fdiv_q(k.get_mpz_t(), inv.get_num().get_mpz_t(), inv.get_den().get_mpz_t());
        return Rat(n) + 1 / (Rat(k) + 1);
    }
    return Rat(n) + 1 / simplest_in(1 / fhi, 1 / flo);
}

// Shrinks a count-1 isolating interval until its root is recognized as an
// exact rational or proven irrational. p is primitive with integer
// coefficients, so a rational root has denominator dividing lc(p): once the
// simplest rational in the interval needs a larger denominator, no rational
// root can be inside.
AlgReal polish_single(const RatPoly& p, Rat lo, Rat hi) {
    mpz_class den_bound = abs(p.lc().get_num());
    int sign_lo = sgn(p(lo));
    while (true) {
        Rat s = simplest_in(lo, hi);
        if (p(s) == 0)
            return AlgReal(s);
        if (s.get_den() > den_bound)
            return AlgReal(p, lo, hi);
        Rat m = (lo + hi) / 2;
        int sm = sgn(p(m));
        if (sm == 0)
            return AlgReal(m);
        if (sign_lo * sm < 0) {
            hi = m;
        } else {
            lo = m;
            sign_lo = sm;
        }
    }
}

struct FoundRationalRoot {
    Rat root;
};

void isolate_rec(const RatPoly& p, const SturmChain& chain, const Rat& lo,
                 const Rat& hi, int count, std::vector<AlgReal>& out) {
    if (count == 0)
        return;
    if (count == 1) {
        out.push_back(polish_single(p, lo, hi));
        return;
    }
    Rat m = (lo + hi) / 2;
    if (p(m) == 0)
        throw FoundRationalRoot{m};
    int left = chain.count(lo, m);
    isolate_rec(p, chain, lo, m, left, out);
    isolate_rec(p, chain, m, hi, count - left, out);
}

std::vector<AlgReal> isolate_inner(const RatPoly& p) {
    if (p.is_constant())
        return {};
    if (p.degree() == 1)
        return {AlgReal(-p.coeff(0) / p.coeff(1))};
    SturmChain chain(p);
    Rat bound = root_bound(p);
    int total = chain.count(-bound, bound);
    std::vector<AlgReal> out;
    try {
        isolate_rec(p, chain, -bound, bound, total, out);
    } catch (const FoundRationalRoot& hit) {
        // Deflate the exact root and merge it into the remaining roots.
        auto [q, r] = p.divmod(RatPoly(std::vector<Rat>{-hit.root, Rat(1)}));
        if (!r.is_zero())
            throw std::logic_error("deflation by a known root left a remainder");
        out = isolate_inner(q.primitive());
        auto it = out.begin();
        while (it != out.end() && compare(*it, hit.root) < 0)
            ++it;
        out.insert(it, AlgReal(hit.root));
    }
    return out;
}

}

AlgReal::AlgReal(const Rat& value)
    : rational_(true), value_(value), lo_(value), hi_(value) {}

AlgReal::AlgReal(RatPoly defining, Rat lo, Rat hi)
    : rational_(false), poly_(defining.primitive()), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (poly_.is_zero() || poly_.is_constant())
        throw std::invalid_argument("defining polynomial must be nonconstant");
    if (!(lo_ < hi_))
        throw std::invalid_argument("isolating interval must satisfy lo < hi");
    if (!is_squarefree(poly_))
        throw std::invalid_argument("defining polynomial must be squarefree");
    if (poly_(lo_) == 0 || poly_(hi_) == 0)
        throw std::invalid_argument("isolating interval endpoints must not be roots");
    if (count_real_roots_in(poly_, lo_, hi_) != 1)
        throw std::invalid_argument("isolating interval must contain exactly one root");
}

const Rat& AlgReal::rational_value() const {
    if (!rational_)
        throw std::logic_error("not an exact rational");
    return value_;
}

const RatPoly& AlgReal::defining() const {
    if (rational_)
        throw std::logic_error("exact rational has no defining polynomial");
    return poly_;
}

const Rat& AlgReal::lo() const {
    return lo_;
}

const Rat& AlgReal::hi() const {
    return hi_;
}

AlgReal AlgReal::refined(unsigned rounds) const {
    AlgReal r(*this);
    while (rounds-- && !r.rational_) {
        Rat m = (r.lo_ + r.hi_) / 2;
        int sm = sgn(r.poly_(m));
        if (sm == 0) {
            r = AlgReal(m);
            break;
        }
        // Exactly one simple root inside, so the endpoint signs differ.
        if (sgn(r.poly_(r.lo_)) * sm < 0)
            r.hi_ = m;
        else
            r.lo_ = m;
    }
    return r;
}

double AlgReal::approx(double width) const {
    if (rational_)
        return to_double(value_);
    AlgReal r(*this);
    Rat target(width);
    while (!r.rational_ && r.hi_ - r.lo_ > target)
        r = r.refined();
    if (r.rational_)
        return to_double(r.value_);
    return to_double((r.lo_ + r.hi_) / 2);
}

std::string AlgReal::to_string() const {
    if (rational_)
        return value_.get_str();
    std::ostringstream os;
    os << "root of " << poly_.to_string() << " in (" << lo_.get_str() << ", "
       << hi_.get_str() << ")";
    return os.str();
}

int count_real_roots_in(const RatPoly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero())
        throw std::invalid_argument("root count of the zero polynomial is undefined");
    if (!(lo < hi))
        throw std::invalid_argument("root count interval must satisfy lo < hi");
    if (p(lo) == 0 || p(hi) == 0)
        throw std::invalid_argument("root count endpoint is a root; perturb the interval");
    return SturmChain(p).count(lo, hi);
}

int count_real_roots(const RatPoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("root count of the zero polynomial is undefined");
    return SturmChain(p).count_all();
}

std::vector<AlgReal> isolate_real_roots(const RatPoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("cannot isolate roots of the zero polynomial");
    if (!is_squarefree(p))
        throw std::invalid_argument("root isolation requires a squarefree polynomial");
    return isolate_inner(p.primitive());
}

int sign_at(const RatPoly& p, const AlgReal& x) {
    if (p.is_zero())
        return 0;
    if (x.is_rational())
        return sgn(p(x.rational_value()));
    RatPoly g = gcd(p, x.defining());
    if (!g.is_constant()) {
        // g divides the squarefree defining polynomial, so g has at most one
        // root in the isolating interval and it is simple: a sign change
        // detects it exactly.
        if (sgn(g(x.lo())) * sgn(g(x.hi())) < 0)
            return 0;
    }
    // p(x) != 0 from here on; shrink until the interval is free of roots of p.
    RatPoly ps = squarefree_part(p);
    SturmChain chain(ps);
    AlgReal w = x;
    while (true) {
        if (w.is_rational())
            return sgn(p(w.rational_value()));
        const Rat& lo = w.lo();
        const Rat& hi = w.hi();
        if (ps(lo) != 0 && ps(hi) != 0 && chain.count(lo, hi) == 0)
            return sgn(p((lo + hi) / 2));
        w = w.refined();
    }
}

int compare(const AlgReal& x, const Rat& q) {
    if (x.is_rational()) {
        const Rat& v = x.rational_value();
        return v < q ? -1 : (v > q ? 1 : 0);
    }
    if (x.lo() < q && q < x.hi() && x.defining()(q) == 0)
        return 0;
    AlgReal w = x;
    while (true) {
        if (w.is_rational())
            return compare(w, q);
        if (w.hi() <= q)
            return -1;
        if (w.lo() >= q)
            return 1;
        w = w.refined();
    }
}

namespace {

Rat lower_bound_of(const AlgReal& x) {
    return x.is_rational() ? x.rational_value() : x.lo();
}

Rat upper_bound_of(const AlgReal& x) {
    return x.is_rational() ? x.rational_value() : x.hi();
}

}

Rat rational_between(const AlgReal& a, const AlgReal& b) {
    AlgReal x = a, y = b;
    while (!(x.is_rational() && y.is_rational()) &&
           !(upper_bound_of(x) < lower_bound_of(y))) {
        x = x.refined();
        y = y.refined();
    }
    return (upper_bound_of(x) + lower_bound_of(y)) / 2;
}

Rat rational_below(const AlgReal& a) {
    return lower_bound_of(a) - 1;
}

Rat rational_above(const AlgReal& a) {
    return upper_bound_of(a) + 1;
}

int compare(const AlgReal& x, const AlgReal& y) {
    if (y.is_rational())
        return compare(x, y.rational_value());
    if (x.is_rational())
        return -compare(y, x.rational_value());
    // x == y iff x is a root of y's defining polynomial lying inside y's
    // isolating interval.
    if (sign_at(y.defining(), x) == 0 && compare(x, y.lo()) > 0 &&
        compare(x, y.hi()) < 0)
        return 0;
    AlgReal a = x, b = y;
    while (true) {
        if (a.is_rational())
            return -compare(b, a.rational_value());
        if (b.is_rational())
            return compare(a, b.rational_value());
        if (a.hi() <= b.lo())
            return -1;
        if (b.hi() <= a.lo())
            return 1;
        a = a.refined();
        b = b.refined();
    }
}

}
