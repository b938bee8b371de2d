#include "cremona/projmap.hpp"

#include <algorithm>
#include <sstream>

namespace cremona {

namespace {

using Component = std::map<Mono3, Rat>;

void add_term(Component& c, const Mono3& m, const Rat& v) {
    if (v == 0)
        return;
    auto [it, inserted] = c.emplace(m, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0)
            c.erase(it);
    }
}

Component mul(const Component& f, const Component& g) {
    Component out;
    for (const auto& [mf, cf] : f)
        for (const auto& [mg, cg] : g)
            add_term(out, Mono3{mf.a + mg.a, mf.b + mg.b, mf.c + mg.c}, cf * cg);
    return out;
}

Component pow(const Component& f, unsigned n) {
    Component acc{{Mono3{}, Rat(1)}};
    for (unsigned i = 0; i < n; ++i)
        acc = mul(acc, f);
    return acc;
}

Component substitute(const Component& f, const Component& fx,
                     const Component& fy, const Component& fz) {
    Component out;
    for (const auto& [m, coeff] : f) {
        Component term = pow(fx, m.a);
        term = mul(term, pow(fy, m.b));
        term = mul(term, pow(fz, m.c));
        for (const auto& [mm, cc] : term)
            add_term(out, mm, cc * coeff);
    }
    return out;
}

Rat eval(const Component& f, const Rat& x, const Rat& y, const Rat& z) {
    auto power = [](const Rat& v, unsigned n) {
        Rat acc(1);
        for (unsigned i = 0; i < n; ++i)
            acc *= v;
        return acc;
    };
    Rat acc(0);
    for (const auto& [m, c] : f)
        acc += c * power(x, m.a) * power(y, m.b) * power(z, m.c);
    return acc;
}

std::string mono_to_string(const Mono3& m, const Rat& coeff) {
    std::ostringstream os;
    Rat mag = abs(coeff);
    bool printed = false;
    if (mag != 1 || m.total() == 0) {
        os << mag.get_str();
        printed = true;
    }
    auto var = [&](char name, unsigned e) {
        if (e == 0)
            return;
        if (printed)
            os << "*";
        os << name;
        if (e > 1)
            os << "^" << e;
        printed = true;
    };
    var('x', m.a);
    var('y', m.b);
    var('z', m.c);
    return os.str();
}

std::string component_to_string(const Component& f) {
    if (f.empty())
        return "0";
    // highest lexicographic monomial first reads naturally (x before y, z)
    std::ostringstream os;
    bool first = true;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        const auto& [m, c] = *it;
        if (first) {
            if (sgn(c) < 0)
                os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        os << mono_to_string(m, c);
    }
    return os.str();
}

Rat det3(const std::array<std::array<Rat, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

const std::array<Mono3, 3> kLinearMonos = {Mono3{1, 0, 0}, Mono3{0, 1, 0},
                                           Mono3{0, 0, 1}};

}

ProjPoint ProjPoint::make(const Rat& x, const Rat& y, const Rat& z) {
    if (x == 0 && y == 0 && z == 0)
        throw std::invalid_argument("projective point cannot be [0:0:0]");
    return ProjPoint{x, y, z};
}

ProjPoint ProjPoint::canonical() const {
    mpz_class den_lcm(1);
    for (const Rat* c : {&x, &y, &z})
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c->get_den().get_mpz_t());
    Rat scale(den_lcm);
    mpz_class g(0);
    for (const Rat* c : {&x, &y, &z}) {
        mpz_class n = mpz_class(Rat(*c * scale).get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    scale /= Rat(g);
    ProjPoint p{x * scale, y * scale, z * scale};
    for (const Rat* c : {&p.x, &p.y, &p.z}) {
        if (*c != 0) {
            if (sgn(*c) < 0) {
                p.x = -p.x;
                p.y = -p.y;
                p.z = -p.z;
            }
            break;
        }
    }
    return p;
}

bool ProjPoint::same_point(const ProjPoint& other) const {
    return x * other.y == y * other.x && x * other.z == z * other.x &&
           y * other.z == z * other.y;
}

std::string ProjPoint::to_string() const {
    ProjPoint p = canonical();
    return "[" + p.x.get_str() + ":" + p.y.get_str() + ":" + p.z.get_str() + "]";
}

BasePointError::BasePointError(const ProjPoint& p)
    : std::runtime_error("map is undefined at base point " + p.to_string()),
      point(p) {}

HomMap HomMap::linear(const std::array<std::array<Rat, 3>, 3>& rows) {
    if (det3(rows) == 0)
        throw UnsupportedShapeError("linear map must be invertible");
    HomMap m;
    m.degree_ = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            add_term(m.comp_[i], kLinearMonos[j], rows[i][j]);
    return m;
}

HomMap HomMap::monomial_quadratic(
    const std::array<std::pair<Rat, Mono3>, 3>& components) {
    unsigned min_a = 2, min_b = 2, min_c = 2;
    for (const auto& [coeff, mono] : components) {
        if (coeff == 0)
            throw UnsupportedShapeError("monomial component with zero coefficient");
        if (mono.total() != 2)
            throw UnsupportedShapeError("monomial components must have degree 2");
        min_a = std::min(min_a, mono.a);
        min_b = std::min(min_b, mono.b);
        min_c = std::min(min_c, mono.c);
    }
    if (min_a + min_b + min_c > 0)
        throw UnsupportedShapeError(
            "components share a common factor; cancel it at construction");
    HomMap m;
    m.degree_ = 2;
    for (int i = 0; i < 3; ++i)
        add_term(m.comp_[i], components[i].second, components[i].first);
    return m;
}

HomMap HomMap::identity() {
    return linear({{{Rat(1), Rat(0), Rat(0)},
                    {Rat(0), Rat(1), Rat(0)},
                    {Rat(0), Rat(0), Rat(1)}}});
}

HomMap HomMap::standard_cremona() {
    return monomial_quadratic({{{Rat(1), Mono3{0, 1, 1}},
                                {Rat(1), Mono3{1, 0, 1}},
                                {Rat(1), Mono3{1, 1, 0}}}});
}

HomMap HomMap::linear_z_involution() {
    return linear({{{Rat(1), Rat(0), Rat(0)},
                    {Rat(0), Rat(1), Rat(0)},
                    {Rat(0), Rat(0), Rat(-1)}}});
}

bool HomMap::is_identity() const {
    if (!is_linear())
        return false;
    std::array<std::array<Rat, 3>, 3> m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            auto it = comp_[i].find(kLinearMonos[j]);
            m[i][j] = it == comp_[i].end() ? Rat(0) : it->second;
        }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && m[i][j] != 0)
                return false;
    return m[0][0] == m[1][1] && m[1][1] == m[2][2] && m[0][0] != 0;
}

std::optional<ProjPoint> HomMap::apply(const ProjPoint& p) const {
    Rat vx = eval(comp_[0], p.x, p.y, p.z);
    Rat vy = eval(comp_[1], p.x, p.y, p.z);
    Rat vz = eval(comp_[2], p.x, p.y, p.z);
    if (vx == 0 && vy == 0 && vz == 0)
        return std::nullopt;
    return ProjPoint{vx, vy, vz};
}

std::vector<ProjPoint> HomMap::base_points() const {
    if (is_linear())
        return {};
    std::vector<ProjPoint> out;
    const std::array<ProjPoint, 3> candidates = {
        ProjPoint{Rat(1), Rat(0), Rat(0)},
        ProjPoint{Rat(0), Rat(1), Rat(0)},
        ProjPoint{Rat(0), Rat(0), Rat(1)}};
    // Monomials vanish only along coordinate lines, so once the components
    // are coprime the base locus sits inside the coordinate triangle.
    for (const auto& p : candidates)
        if (!apply(p))
            out.push_back(p);
    return out;
}

bool HomMap::check_involution(const std::vector<ProjPoint>& samples) const {
    for (const auto& p : samples) {
        auto q = apply(p);
        if (!q)
            throw BasePointError(p);
        auto r = apply(*q);
        if (!r)
            throw BasePointError(*q);
        if (!r->same_point(p))
            return false;
    }
    return true;
}

std::string HomMap::to_string() const {
    return "[" + component_to_string(comp_[0]) + " : " +
           component_to_string(comp_[1]) + " : " +
           component_to_string(comp_[2]) + "]";
}

HomMap HomMap::from_reduced_components(std::array<Component, 3> comps) {
    unsigned deg = 0;
    for (const auto& c : comps)
        for (const auto& [m, v] : c)
            deg = std::max(deg, m.total());
    if (deg == 1) {
        std::array<std::array<Rat, 3>, 3> rows{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                auto it = comps[i].find(kLinearMonos[j]);
                rows[i][j] = it == comps[i].end() ? Rat(0) : it->second;
            }
        return linear(rows);
    }
    if (deg == 2) {
        std::array<std::pair<Rat, Mono3>, 3> terms;
        for (int i = 0; i < 3; ++i) {
            if (comps[i].size() != 1)
                throw UnsupportedShapeError(
                    "composition leaves the supported shapes: non-monomial "
                    "quadratic component " + component_to_string(comps[i]));
            terms[i] = {comps[i].begin()->second, comps[i].begin()->first};
        }
        return monomial_quadratic(terms);
    }
    throw UnsupportedShapeError(
        "composition leaves the supported shapes: reduced degree " +
        std::to_string(deg));
}

HomMap compose(const HomMap& outer, const HomMap& inner) {
    std::array<Component, 3> comps;
    for (int i = 0; i < 3; ++i)
        comps[i] = substitute(outer.comp_[i], inner.comp_[0], inner.comp_[1],
                              inner.comp_[2]);

    // Cancel the monomial gcd of the three components.
    unsigned min_a = ~0u, min_b = ~0u, min_c = ~0u;
    for (const auto& c : comps) {
        if (c.empty())
            throw UnsupportedShapeError("composition has a vanishing component");
        for (const auto& [m, v] : c) {
            min_a = std::min(min_a, m.a);
            min_b = std::min(min_b, m.b);
            min_c = std::min(min_c, m.c);
        }
    }
    if (min_a + min_b + min_c > 0) {
        for (auto& c : comps) {
            Component shifted;
            for (const auto& [m, v] : c)
                shifted.emplace(Mono3{m.a - min_a, m.b - min_b, m.c - min_c}, v);
            c = std::move(shifted);
        }
    }
    return HomMap::from_reduced_components(std::move(comps));
}

}
