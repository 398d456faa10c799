#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "character.hpp"
#include "checked.hpp"
#include "family.hpp"
#include "lattice.hpp"

/*
 * The gonality engine: turns a curve description (plane degree, bidegree on
 * the quadric, divisor class on the cubic, or an ACM family member) into a
 * fully populated CurveRecord — degree, genus, multisecant data, gonality
 * with an honesty status, Clifford index, Brill–Noether number.
 */

namespace gonality {

enum class GonStatus { Exact, ExactGeneralMember, LowerUpperGap };
enum class CliffStatus { Exact, UpperBoundOnly };

/* Where a record's gonality value ultimately comes from. */
enum class Provenance {
    PlaneTheorem,             // the d-1 rule for smooth plane curves
    QuadricFormula,           // min(a, b) on the quadric
    CubicBiliaisonInduction,  // the four ACM families, via biliaison chains
    CuratedBaseCase,          // individually curated divisor classes
    AtlasFact,                // catalogued facts (genus rules, literature entries)
};

inline const char* to_label(GonStatus s) {
    switch (s) {
        case GonStatus::Exact: return "exact";
        case GonStatus::ExactGeneralMember: return "exact_general_member";
        case GonStatus::LowerUpperGap: return "lower_upper_gap";
    }
    throw std::logic_error("to_label(GonStatus): bad enum value");
}

inline const char* to_label(CliffStatus s) {
    switch (s) {
        case CliffStatus::Exact: return "exact";
        case CliffStatus::UpperBoundOnly: return "upper_bound_only";
    }
    throw std::logic_error("to_label(CliffStatus): bad enum value");
}

inline const char* to_label(Provenance p) {
    switch (p) {
        case Provenance::PlaneTheorem: return "plane_theorem";
        case Provenance::QuadricFormula: return "quadric_formula";
        case Provenance::CubicBiliaisonInduction: return "cubic_biliaison_induction";
        case Provenance::CuratedBaseCase: return "curated_base_case";
        case Provenance::AtlasFact: return "atlas_fact";
    }
    throw std::logic_error("to_label(Provenance): bad enum value");
}

/* A g^r_d; its contribution to the Clifford index is d - 2r. */
struct LinearSeries {
    std::int64_t d{};
    std::int64_t r{};
    std::int64_t clifford() const { return checked_sub(d, checked_mul(2, r)); }
    bool operator==(const LinearSeries&) const = default;
};

struct PlaneCurve {
    std::int64_t degree{};
    bool operator==(const PlaneCurve&) const = default;
};

/* Catalogue-only curves that live on none of the three surfaces above
 * (e.g. curves on K3 surfaces in P^r, or general rational space curves). */
struct CuratedLocus {
    std::string surface;
    std::string cls;
    bool operator==(const CuratedLocus&) const = default;
};

using CurveLocus = std::variant<PlaneCurve, QuadricClass, CubicClass, CuratedLocus>;

struct CurveRecord {
    CurveLocus locus;
    std::int64_t d{};
    std::int64_t g{};
    std::optional<std::int64_t> gon;  // unset iff gon_status == LowerUpperGap
    GonStatus gon_status{GonStatus::LowerUpperGap};
    std::optional<std::int64_t> gon_lower;  // bounds, recorded when the value is open
    std::optional<std::int64_t> gon_upper;
    std::optional<std::int64_t> k_on_surface;  // max multisecant order via lines on the surface
    std::optional<std::int64_t> k_effective;   // max known order, curated off-surface facts included
    std::optional<std::int64_t> cliff;
    std::optional<CliffStatus> cliff_status;
    std::optional<std::int64_t> cliff_dim;
    std::optional<std::int64_t> rho_pencil;  // Brill–Noether number of the gonality pencil
    bool computed_by_multisecants{};         // gon == d - k_effective
    Provenance provenance{Provenance::AtlasFact};
    std::optional<std::string> trace_id;     // derivation chain, when one exists
};

/* rho = g - (r+1)(g - d + r) */
inline std::int64_t brill_noether_rho(std::int64_t g, std::int64_t d, std::int64_t r) {
    if (g < 0 || r < 1)
        throw std::invalid_argument("brill_noether_rho: need g >= 0 and r >= 1");
    const std::int64_t defect = checked_add(checked_sub(g, d), r);
    return checked_sub(g, checked_mul(checked_add(r, 1), defect));
}

struct GonalityRange {
    std::int64_t lo{};
    std::int64_t hi{};
    bool operator==(const GonalityRange&) const = default;
};

/* What genus alone says: rational curves have gonality 1, genus 1 and 2
 * force 2, and in general 2 <= gon <= floor((g+3)/2). */
inline GonalityRange gonality_range(std::int64_t g) {
    if (g < 0)
        throw std::invalid_argument("gonality_range: negative genus");
    if (g == 0)
        return {1, 1};
    if (g <= 2)
        return {2, 2};
    return {2, checked_add(g, 3) / 2};
}

/* Smooth plane curves: gonality d - 1 (projection from a point of the
 * curve), except that a line is already rational. */
inline std::int64_t gonality_plane(std::int64_t d) {
    if (d < 1)
        throw std::invalid_argument("gonality_plane: need degree >= 1");
    return d == 1 ? 1 : checked_sub(d, 1);
}

/* Smooth curves of bidegree (a,b) on the quadric: gonality min(a,b), cut by
 * the ruling of the other family.  Exact for every smooth member. */
inline std::int64_t gonality_quadric(const QuadricClass& c) {
    if (c.a < 1 || c.b < 1)
        throw std::invalid_argument("gonality_quadric: need bidegree >= (1,1)");
    return c.a < c.b ? c.a : c.b;
}

/*
 * Representative divisor classes of the four ACM families at a given shift:
 *
 *     A_n = (4+3n; (1+n)^6)          B_n = (6+3n; (2+n)^5, 1+n)
 *     C_n = (7+3n; 3+n, (2+n)^5)     D_n = (9+3n; (3+n)^6)
 *
 * i.e. n ascending biliaisons applied to the shift-0 member.
 */
inline CubicClass representative_class(const AcmCubicType& t) {
    if (t.shift < 0)
        throw std::invalid_argument("representative_class: negative shift");
    const std::int64_t n = t.shift;
    const auto fill = [](std::int64_t v) {
        return std::array<std::int64_t, 6>{v, v, v, v, v, v};
    };
    switch (t.family) {
        case AcmFamily::A:
            return {checked_add(4, checked_mul(3, n)), fill(checked_add(1, n))};
        case AcmFamily::B: {
            CubicClass c{checked_add(6, checked_mul(3, n)), fill(checked_add(2, n))};
            c.m[5] = checked_add(1, n);
            return c;
        }
        case AcmFamily::C: {
            CubicClass c{checked_add(7, checked_mul(3, n)), fill(checked_add(2, n))};
            c.m[0] = checked_add(3, n);
            return c;
        }
        case AcmFamily::D:
            return {checked_add(9, checked_mul(3, n)), fill(checked_add(3, n))};
    }
    throw std::logic_error("representative_class: bad family");
}

/* Literal inverse of representative_class (classes are not normalised, so
 * permuted multiplicity vectors do not match). */
inline std::optional<AcmCubicType> acm_type_of_class(const CubicClass& c) {
    const bool all_equal = std::all_of(c.m.begin(), c.m.end(),
                                       [&](std::int64_t v) { return v == c.m[0]; });
    if (all_equal) {
        if (c.m[0] >= 1 && c.a == checked_add(checked_mul(3, c.m[0]), 1))
            return AcmCubicType{AcmFamily::A, c.m[0] - 1};
        if (c.m[0] >= 3 && c.a == checked_mul(3, c.m[0]))
            return AcmCubicType{AcmFamily::D, c.m[0] - 3};
        return std::nullopt;
    }
    const bool first_five_equal = std::all_of(c.m.begin(), c.m.begin() + 5,
                                              [&](std::int64_t v) { return v == c.m[0]; });
    if (first_five_equal && c.m[5] == c.m[0] - 1 && c.m[0] >= 2 &&
        c.a == checked_mul(3, c.m[0]))
        return AcmCubicType{AcmFamily::B, c.m[0] - 2};
    const bool last_five_equal = std::all_of(c.m.begin() + 1, c.m.end(),
                                             [&](std::int64_t v) { return v == c.m[1]; });
    if (last_five_equal && c.m[0] == c.m[1] + 1 && c.m[1] >= 2 &&
        c.a == checked_add(checked_mul(3, c.m[1]), 1))
        return AcmCubicType{AcmFamily::C, c.m[1] - 2};
    return std::nullopt;
}

/* Largest multisecant order of the family member: n+3 for A, B, D and n+4
 * for C (family C's witness is the conic-transform G_1 over its big
 * multiplicity).  Always equal to degree - gonality for these families. */
inline std::int64_t multisecant_order_acm_cubic(const AcmCubicType& t) {
    if (t.shift < 0)
        throw std::invalid_argument("multisecant_order_acm_cubic: negative shift");
    return checked_add(t.shift, t.family == AcmFamily::C ? 4 : 3);
}

struct AcmGonality {
    std::int64_t gon{};
    GonStatus status{};
    DerivationChain trace;
};

/*
 * Gonality of the four families: 2n+3, 2n+4, 2n+4, 2n+6 for A, B, C, D at
 * shift n.  Each ascending biliaison adds 2, starting from the curated base
 * cases 3, 4, 4, 6.  The induction argument needs the member to be general
 * in its linear system, hence the status.
 */
inline AcmGonality gonality_acm_cubic(const AcmCubicType& t) {
    if (t.shift < 0)
        throw std::invalid_argument("gonality_acm_cubic: negative shift");
    std::int64_t base = 0;
    switch (t.family) {
        case AcmFamily::A: base = 3; break;
        case AcmFamily::B: base = 4; break;
        case AcmFamily::C: base = 4; break;
        case AcmFamily::D: base = 6; break;
    }
    AcmGonality out;
    out.gon = checked_add(base, checked_mul(2, t.shift));
    out.status = GonStatus::ExactGeneralMember;
    out.trace = cubic_induction_chain(t);
    if (out.trace.steps.back().claimed_gon != out.gon)
        throw std::logic_error("gonality_acm_cubic: chain and closed form disagree");
    return out;
}

struct CliffordResult {
    std::int64_t cliff{};
    CliffStatus status{};
    std::int64_t dim{};
};

/*
 * Clifford index of a record whose gonality is already pinned down.  The
 * pencil gives cliff <= gon - 2, and that is the exact value except in the
 * two exceptional situations: smooth plane curves (the g^2_d wins, cliff =
 * d - 4 with Clifford dimension 2) and the degree-9 complete intersection
 * of two cubics (Clifford dimension 3: its g^3_9 gives cliff 3 < gon - 2).
 * Later members of family D inherit only the upper bound.
 */
inline CliffordResult clifford_index(const CurveRecord& rec) {
    if (rec.g < 4)
        throw std::domain_error("clifford_index: undefined for genus < 4");
    if (!rec.gon)
        throw std::invalid_argument("clifford_index: record has no gonality value");
    if (const auto* plane = std::get_if<PlaneCurve>(&rec.locus)) {
        if (plane->degree >= 5)
            return {checked_sub(plane->degree, 4), CliffStatus::Exact, 2};
    }
    if (const auto* cubic = std::get_if<CubicClass>(&rec.locus)) {
        /* (a; 0^6) is abstractly a smooth plane curve of degree a, so the
         * plane rule applies to it too (g >= 4 forces a >= 5 here). */
        if (cubic->a >= 5 &&
            std::all_of(cubic->m.begin(), cubic->m.end(), [](std::int64_t v) { return v == 0; }))
            return {checked_sub(cubic->a, 4), CliffStatus::Exact, 2};
        if (const auto t = acm_type_of_class(*cubic); t && t->family == AcmFamily::D) {
            if (t->shift == 0)
                return {3, CliffStatus::Exact, 3};
            return {checked_sub(*rec.gon, 2), CliffStatus::UpperBoundOnly, 1};
        }
    }
    return {checked_sub(*rec.gon, 2), CliffStatus::Exact, 1};
}

/*
 * The extremal catalogue of curves with Clifford dimension r >= 3: degree
 * 4r-3, genus 4r-2, gonality 2r, Clifford index 2r-3 computed by the
 * (2r-3)-secant of the defining g^r_{4r-3}.  r = 3 is the complete
 * intersection of two cubics; for r >= 4 the curves live on K3 surfaces.
 */
inline CurveRecord elms_record(std::int64_t r) {
    if (r < 3)
        throw std::invalid_argument("elms_record: need r >= 3");
    CurveRecord rec;
    if (r == 3)
        rec.locus = CubicClass{9, {3, 3, 3, 3, 3, 3}};
    else
        rec.locus = CuratedLocus{"K3 surface in P^" + std::to_string(r),
                                 "clifford dimension " + std::to_string(r)};
    rec.d = checked_sub(checked_mul(4, r), 3);
    rec.g = checked_sub(checked_mul(4, r), 2);
    rec.gon = checked_mul(2, r);
    rec.gon_status = GonStatus::Exact;
    rec.k_effective = checked_sub(checked_mul(2, r), 3);
    if (r == 3)
        rec.k_on_surface = rec.k_effective;
    rec.cliff = checked_sub(checked_mul(2, r), 3);
    rec.cliff_status = CliffStatus::Exact;
    rec.cliff_dim = r;
    rec.rho_pencil = brill_noether_rho(rec.g, *rec.gon, 1);
    rec.computed_by_multisecants = (*rec.gon == checked_sub(rec.d, *rec.k_effective));
    rec.provenance = Provenance::AtlasFact;
    return rec;
}

struct CiGonality {
    std::int64_t a{};
    std::int64_t b{};
    std::int64_t d{};
    std::optional<std::int64_t> gon;
    std::optional<std::int64_t> k;  // the secant order computing the gonality
    GonStatus status{};
    std::vector<std::int64_t> possible_k;  // populated in the open case
};

/*
 * Complete intersections of surfaces of degrees a <= b: degree d = ab.
 * For a = 2 the curve has bidegree (b,b) on the quadric and for a = 3 the
 * analogous statement holds on the cubic, so gon = d - b exactly.  For
 * a >= 4 a general member has gon = d - 4 via a 4-secant; special members
 * are open — any secant order in {4..a} or exactly b can occur.
 */
inline CiGonality ci_gonality(std::int64_t a, std::int64_t b, bool general) {
    if (a < 2 || b < a)
        throw std::invalid_argument("ci_gonality: need 2 <= a <= b");
    CiGonality out;
    out.a = a;
    out.b = b;
    out.d = checked_mul(a, b);
    if (a <= 3) {
        out.k = b;
        out.gon = checked_sub(out.d, b);
        out.status = GonStatus::Exact;
    } else if (general) {
        out.k = 4;
        out.gon = checked_sub(out.d, 4);
        out.status = GonStatus::ExactGeneralMember;
    } else {
        out.status = GonStatus::LowerUpperGap;
        for (std::int64_t k = 4; k <= a; ++k)
            out.possible_k.push_back(k);
        if (b > a)
            out.possible_k.push_back(b);
    }
    return out;
}

namespace detail {

/* Individually curated cubic-surface classes: the base cases one biliaison
 * below the four ACM families.  (6;2^6) is the one whose best trisecant
 * does not lie on the surface. */
struct CuratedCubicFact {
    CubicClass cls;
    std::int64_t gon;
    std::optional<std::int64_t> off_surface_k;
    const char* fact;
};

inline const std::vector<CuratedCubicFact>& curated_cubic_facts() {
    static const std::vector<CuratedCubicFact> facts = {
        {{1, {0, 0, 0, 0, 0, 0}}, 1, std::nullopt, "twisted cubic: rational"},
        {{3, {1, 1, 1, 1, 1, 0}}, 2, std::nullopt, "elliptic quartic: genus 1"},
        {{4, {2, 1, 1, 1, 1, 1}}, 2, std::nullopt, "genus-2 quintic"},
        {{6, {2, 2, 2, 2, 2, 2}}, 3, 3,
         "canonical genus-4 sextic: trigonal; its trisecants do not lie on the surface"},
    };
    return facts;
}

inline void fill_derived_fields(CurveRecord& rec) {
    if (!rec.gon)
        return;
    if (rec.k_effective)
        rec.computed_by_multisecants = (*rec.gon == checked_sub(rec.d, *rec.k_effective));
    rec.rho_pencil = brill_noether_rho(rec.g, *rec.gon, 1);
    if (rec.g >= 4) {
        const CliffordResult cl = clifford_index(rec);
        rec.cliff = cl.cliff;
        rec.cliff_status = cl.status;
        rec.cliff_dim = cl.dim;
    }
}

} // namespace detail

inline CurveRecord build_record(const PlaneCurve& c) {
    if (c.degree < 1)
        throw std::invalid_argument("build_record: plane curve needs degree >= 1");
    CurveRecord rec;
    rec.locus = c;
    rec.d = c.degree;
    rec.g = checked_mul(checked_sub(c.degree, 1), checked_sub(c.degree, 2)) / 2;
    rec.gon = gonality_plane(c.degree);
    rec.gon_status = GonStatus::Exact;
    rec.provenance = Provenance::PlaneTheorem;
    if (c.degree >= 2)
        rec.trace_id = "plane-" + std::to_string(c.degree);
    detail::fill_derived_fields(rec);
    return rec;
}

inline CurveRecord build_record(const QuadricClass& c) {
    if (c.a < 1 || c.b < 1)
        throw std::invalid_argument("build_record: quadric curve needs bidegree >= (1,1)");
    CurveRecord rec;
    rec.locus = c;
    rec.d = degree(c);
    rec.g = genus(c);
    rec.gon = gonality_quadric(c);
    rec.gon_status = GonStatus::Exact;
    rec.provenance = Provenance::QuadricFormula;
    const QuadricSecants sec = max_secant_on_surface(c);
    rec.k_on_surface = sec.k;
    rec.k_effective = sec.k;
    rec.trace_id = quadric_induction_chain(c.a, c.b).id;
    detail::fill_derived_fields(rec);
    return rec;
}

inline CurveRecord build_record(const CubicClass& c) {
    const std::int64_t d = degree(c);
    if (d <= 0)
        throw std::invalid_argument("build_record: nonpositive degree, not a curve class");
    const std::int64_t g = genus(c);
    if (g < 0)
        throw std::invalid_argument("build_record: negative genus, no smooth curve in this class");
    CurveRecord rec;
    rec.locus = c;
    rec.d = d;
    rec.g = g;
    const CubicSecants sec = max_secant_on_surface(c);
    rec.k_on_surface = sec.k;
    rec.k_effective = sec.k;

    if (const auto t = acm_type_of_class(c)) {
        AcmGonality ag = gonality_acm_cubic(*t);
        rec.gon = ag.gon;
        rec.gon_status = ag.status;
        rec.provenance = Provenance::CubicBiliaisonInduction;
        rec.trace_id = ag.trace.id;
        detail::fill_derived_fields(rec);
        return rec;
    }
    for (const auto& fact : detail::curated_cubic_facts()) {
        if (fact.cls == c) {
            rec.gon = fact.gon;
            rec.gon_status = GonStatus::Exact;
            rec.provenance = Provenance::CuratedBaseCase;
            if (fact.off_surface_k && *fact.off_surface_k > *rec.k_effective)
                rec.k_effective = fact.off_surface_k;
            detail::fill_derived_fields(rec);
            return rec;
        }
    }
    const bool plane_image = c.a >= 2 &&
        std::all_of(c.m.begin(), c.m.end(), [](std::int64_t v) { return v == 0; });
    if (plane_image) {
        /* (a; 0^6): isomorphic to its plane model of degree a, so the plane
         * rule gives the gonality; the on-surface 2a-secants overshoot it. */
        rec.gon = gonality_plane(c.a);
        rec.gon_status = GonStatus::Exact;
        rec.provenance = Provenance::PlaneTheorem;
        detail::fill_derived_fields(rec);
        return rec;
    }
    const GonalityRange range = gonality_range(g);
    if (g <= 2) {
        rec.gon = range.lo;
        rec.gon_status = GonStatus::Exact;
        rec.provenance = Provenance::AtlasFact;
        detail::fill_derived_fields(rec);
        return rec;
    }
    rec.gon_status = GonStatus::LowerUpperGap;
    rec.provenance = Provenance::AtlasFact;
    rec.gon_lower = range.lo;
    rec.gon_upper = std::min(checked_sub(d, sec.k), range.hi);
    return rec;
}

inline CurveRecord build_record(const AcmCubicType& t) {
    return build_record(representative_class(t));
}

} // namespace gonality
