#pragma once

#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "checked.hpp"

/*
 * Intersection theory on the Picard groups of the surfaces we care about:
 * the smooth quadric (rank 2, classes are bidegrees) and the smooth cubic
 * (rank 7, classes written in the blown-up-plane basis).  Everything is
 * plain integer data with no normalization — two classes are equal exactly
 * when their tuples are equal.
 */

namespace gonality {

enum class Surface { Plane, Quadric, Cubic };

inline const char* surface_name(Surface s) {
    switch (s) {
        case Surface::Plane: return "plane";
        case Surface::Quadric: return "quadric";
        case Surface::Cubic: return "cubic";
    }
    throw std::logic_error("surface_name: bad enum value");
}

/* Curve class on the smooth quadric: bidegree (a, b) w.r.t. the two rulings. */
struct QuadricClass {
    std::int64_t a{};
    std::int64_t b{};
    bool operator==(const QuadricClass&) const = default;
};

/*
 * Divisor class (a; m1,...,m6) on the cubic surface, seen as the plane blown
 * up at six points: a is the degree of the plane model, m_i the multiplicity
 * at the i-th point.  In this basis C . E_i = m_i for the exceptional line
 * over the i-th point, so E_i itself is (0; -delta_i).
 */
struct CubicClass {
    std::int64_t a{};
    std::array<std::int64_t, 6> m{};
    bool operator==(const CubicClass&) const = default;
};

inline std::int64_t pair_quadric(const QuadricClass& x, const QuadricClass& y) {
    return checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a));
}

inline std::int64_t pair_cubic(const CubicClass& x, const CubicClass& y) {
    std::int64_t acc = checked_mul(x.a, y.a);
    for (int i = 0; i < 6; ++i)
        acc = checked_sub(acc, checked_mul(x.m[i], y.m[i]));
    return acc;
}

inline QuadricClass quadric_hyperplane() { return {1, 1}; }
inline QuadricClass quadric_canonical() { return {-2, -2}; }
inline CubicClass cubic_hyperplane() { return {3, {1, 1, 1, 1, 1, 1}}; }
inline CubicClass cubic_canonical() { return {-3, {-1, -1, -1, -1, -1, -1}}; }

using SurfaceClass = std::variant<QuadricClass, CubicClass>;

inline SurfaceClass hyperplane_class(Surface s) {
    switch (s) {
        case Surface::Quadric: return quadric_hyperplane();
        case Surface::Cubic: return cubic_hyperplane();
        case Surface::Plane: break;
    }
    throw std::invalid_argument("hyperplane_class: unsupported surface (plane has no divisor-class lattice here)");
}

inline SurfaceClass canonical_class(Surface s) {
    switch (s) {
        case Surface::Quadric: return quadric_canonical();
        case Surface::Cubic: return cubic_canonical();
        case Surface::Plane: break;
    }
    throw std::invalid_argument("canonical_class: unsupported surface (plane has no divisor-class lattice here)");
}

/* degree C = C . H */
inline std::int64_t degree(const QuadricClass& c) { return pair_quadric(c, quadric_hyperplane()); }
inline std::int64_t degree(const CubicClass& c) { return pair_cubic(c, cubic_hyperplane()); }

/*
 * Adjunction: 2g - 2 = C.C + C.K.  The right-hand side is even for every
 * integral class on these two lattices; an odd value can only mean the
 * pairing data itself is corrupted, hence the loud failure.
 */
namespace detail {
inline std::int64_t genus_from(std::int64_t self, std::int64_t with_canonical) {
    const std::int64_t twice = checked_add(self, with_canonical);
    if (twice % 2 != 0)
        throw std::domain_error("genus: C.C + C.K is odd — corrupted intersection form");
    return checked_add(twice / 2, 1);
}
} // namespace detail

inline std::int64_t genus(const QuadricClass& c) {
    return detail::genus_from(pair_quadric(c, c), pair_quadric(c, quadric_canonical()));
}

inline std::int64_t genus(const CubicClass& c) {
    return detail::genus_from(pair_cubic(c, c), pair_cubic(c, cubic_canonical()));
}

/*
 * The 27 lines on the cubic surface: the six exceptional lines E_i, the
 * fifteen strict transforms F_ij of the lines through points i and j, and
 * the six strict transforms G_i of the conics through the five points other
 * than i.  Each has L.L = -1, L.K = -1 and degree 1.
 */
struct LineClass {
    enum class Kind { E, F, G };
    Kind kind{};
    int i{};  // 1-based
    int j{};  // 1-based, only for F
    CubicClass cls;

    std::string name() const {
        switch (kind) {
            case Kind::E: return "E" + std::to_string(i);
            case Kind::F: return "F" + std::to_string(i) + std::to_string(j);
            case Kind::G: return "G" + std::to_string(i);
        }
        throw std::logic_error("LineClass::name: bad kind");
    }
    bool operator==(const LineClass&) const = default;
};

inline const std::vector<LineClass>& lines_on_cubic() {
    static const std::vector<LineClass> table = [] {
        std::vector<LineClass> out;
        out.reserve(27);
        for (int i = 1; i <= 6; ++i) {
            CubicClass c{0, {}};
            c.m[i - 1] = -1;
            out.push_back({LineClass::Kind::E, i, 0, c});
        }
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j) {
                CubicClass c{1, {}};
                c.m[i - 1] = 1;
                c.m[j - 1] = 1;
                out.push_back({LineClass::Kind::F, i, j, c});
            }
        for (int i = 1; i <= 6; ++i) {
            CubicClass c{2, {1, 1, 1, 1, 1, 1}};
            c.m[i - 1] = 0;
            out.push_back({LineClass::Kind::G, i, 0, c});
        }
        return out;
    }();
    return table;
}

/*
 * Largest multisecant order realised by a line lying on the surface, with
 * every line achieving the maximum reported as a witness.  Only meaningful
 * for actual curve classes, so nonpositive degree is rejected.
 */
struct CubicSecants {
    std::int64_t k{};
    std::vector<LineClass> witnesses;
};

inline CubicSecants max_secant_on_surface(const CubicClass& c) {
    if (degree(c) <= 0)
        throw std::invalid_argument("max_secant_on_surface: nonpositive degree, not a curve class");
    CubicSecants out;
    bool first = true;
    for (const LineClass& line : lines_on_cubic()) {
        const std::int64_t v = pair_cubic(c, line.cls);
        if (first || v > out.k) {
            out.k = v;
            out.witnesses.clear();
            first = false;
        }
        if (v == out.k)
            out.witnesses.push_back(line);
    }
    return out;
}

struct QuadricSecants {
    std::int64_t k{};
    std::vector<QuadricClass> rulings;  // ruling line classes achieving k
};

inline QuadricSecants max_secant_on_surface(const QuadricClass& c) {
    if (c.a < 0 || c.b < 0)
        throw std::invalid_argument("max_secant_on_surface: negative bidegree, not a curve class");
    if (degree(c) <= 0)
        throw std::invalid_argument("max_secant_on_surface: nonpositive degree, not a curve class");
    // A ruling line of class (1,0) meets (a,b) in b points, one of class (0,1) in a.
    QuadricSecants out;
    out.k = c.a > c.b ? c.a : c.b;
    if (c.b == out.k)
        out.rulings.push_back({1, 0});
    if (c.a == out.k)
        out.rulings.push_back({0, 1});
    return out;
}

/* One ascending / descending biliaison step: add or subtract the hyperplane class. */
inline CubicClass biliaison_up(const CubicClass& c) {
    CubicClass r{checked_add(c.a, 3), c.m};
    for (auto& v : r.m) v = checked_add(v, 1);
    return r;
}

inline CubicClass biliaison_down(const CubicClass& c) {
    CubicClass r{checked_sub(c.a, 3), c.m};
    for (auto& v : r.m) v = checked_sub(v, 1);
    return r;
}

inline QuadricClass biliaison_up(const QuadricClass& c) {
    return {checked_add(c.a, 1), checked_add(c.b, 1)};
}

inline QuadricClass biliaison_down(const QuadricClass& c) {
    return {checked_sub(c.a, 1), checked_sub(c.b, 1)};
}

inline std::string to_string(const QuadricClass& c) {
    std::ostringstream os;
    os << '(' << c.a << ',' << c.b << ')';
    return os.str();
}

inline std::string to_string(const CubicClass& c) {
    std::ostringstream os;
    os << '(' << c.a << ';';
    for (int i = 0; i < 6; ++i)
        os << (i ? "," : "") << c.m[i];
    os << ')';
    return os.str();
}

} // namespace gonality
