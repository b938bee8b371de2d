#pragma once

#include "cremona/rat.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cremona {

// Point of P^2 with exact homogeneous coordinates, not all zero.
struct ProjPoint {
    Rat x, y, z;

    static ProjPoint make(const Rat& x, const Rat& y, const Rat& z);
    // Integral coprime coordinates, first nonzero one positive.
    ProjPoint canonical() const;
    bool same_point(const ProjPoint& other) const;
    std::string to_string() const;
};

struct UnsupportedShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BasePointError : std::runtime_error {
    explicit BasePointError(const ProjPoint& p);
    ProjPoint point;
};

// Exponents of x^a y^b z^c.
struct Mono3 {
    unsigned a = 0, b = 0, c = 0;
    auto operator<=>(const Mono3&) const = default;
    unsigned total() const { return a + b + c; }
};

// Rational self-map of P^2 with coprime homogeneous components. Supported
// shapes: invertible linear maps, and maps whose three components are single
// quadratic monomials with no common factor (enough for the standard Cremona
// involution and its compositions with linear involutions).
class HomMap {
public:
    static HomMap linear(const std::array<std::array<Rat, 3>, 3>& rows);
    static HomMap monomial_quadratic(
        const std::array<std::pair<Rat, Mono3>, 3>& components);
    static HomMap identity();
    static HomMap standard_cremona();     // [yz : xz : xy]
    static HomMap linear_z_involution();  // [x : y : -z]

    unsigned degree() const { return degree_; }
    bool is_linear() const { return degree_ == 1; }
    bool is_identity() const;  // projectively

    // nullopt when all three components vanish (a base point).
    std::optional<ProjPoint> apply(const ProjPoint& p) const;

    std::vector<ProjPoint> base_points() const;

    // True iff m(m(p)) == p projectively for every sample. Throws
    // BasePointError when a sample (or its image) is a base point.
    bool check_involution(const std::vector<ProjPoint>& samples) const;

    std::string to_string() const;

    friend HomMap compose(const HomMap& outer, const HomMap& inner);

private:
    using Component = std::map<Mono3, Rat>;  // sparse trivariate polynomial
    std::array<Component, 3> comp_;
    unsigned degree_ = 1;

    HomMap() = default;
    static HomMap from_reduced_components(std::array<Component, 3> comps);
};

}
