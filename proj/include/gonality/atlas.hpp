#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "engine.hpp"

/*
 * The atlas: curated reference data.  Genus-by-genus strata of gonality
 * behaviour for small genus, a catalogue of worked examples (each one a
 * CurveRecord plus a literature tag), and the generated table of ACM
 * cubic-surface family members.
 */

namespace gonality {

enum class SeriesCount { Unique, FinitelyMany, InfinitelyMany };

inline const char* to_label(SeriesCount c) {
    switch (c) {
        case SeriesCount::Unique: return "unique";
        case SeriesCount::FinitelyMany: return "finitely_many";
        case SeriesCount::InfinitelyMany: return "infinitely_many";
    }
    throw std::logic_error("to_label(SeriesCount): bad enum value");
}

struct GenusStratum {
    std::int64_t genus{};
    std::string label;
    std::int64_t gonality{};
    std::string series;  // the distinguished linear series of the stratum
    SeriesCount count{};
    std::string note;
};

/* Strata of smooth curves of genus 0..6 by gonality behaviour. */
inline std::vector<GenusStratum> genus_taxonomy(std::int64_t g) {
    switch (g) {
        case 0:
            return {{0, "rational", 1, "g^1_1", SeriesCount::Unique, ""}};
        case 1:
            return {{1, "elliptic", 2, "g^1_2", SeriesCount::InfinitelyMany, ""}};
        case 2:
            return {{2, "hyperelliptic", 2, "g^1_2", SeriesCount::Unique, ""}};
        case 3:
            return {
                {3, "hyperelliptic", 2, "g^1_2", SeriesCount::Unique, ""},
                {3, "trigonal", 3, "g^1_3", SeriesCount::InfinitelyMany,
                 "canonical model a smooth plane quartic; the g^1_3's are cut by lines "
                 "through a point of the curve"},
            };
        case 4:
            return {
                {4, "hyperelliptic", 2, "g^1_2", SeriesCount::Unique, ""},
                {4, "trigonal", 3, "g^1_3", SeriesCount::FinitelyMany,
                 "canonical model the complete intersection of a quadric and a cubic; "
                 "exactly two g^1_3's, or one when the quadric is a cone"},
            };
        case 5:
            return {
                {5, "hyperelliptic", 2, "g^1_2", SeriesCount::Unique, ""},
                {5, "trigonal", 3, "g^1_3", SeriesCount::Unique,
                 "the g^1_3 is cut by the rulings of a cubic ruled surface through the "
                 "canonical model in P^4"},
                {5, "general", 4, "g^1_4", SeriesCount::InfinitelyMany,
                 "canonical model the complete intersection of three quadrics in P^4"},
            };
        case 6:
            return {
                {6, "hyperelliptic", 2, "g^1_2", SeriesCount::Unique, ""},
                {6, "trigonal", 3, "g^1_3", SeriesCount::Unique, ""},
                {6, "plane quintic", 4, "g^2_5", SeriesCount::Unique,
                 "infinitely many g^1_4's, cut by lines through a point of the plane "
                 "model; the source table calls this stratum \"plane quartic\", but the "
                 "degree with g^2_d and genus 6 is 5"},
                {6, "bielliptic", 4, "g^1_4", SeriesCount::InfinitelyMany,
                 "double covers of elliptic curves; no g^2_5"},
                {6, "general", 4, "g^1_4", SeriesCount::FinitelyMany,
                 "a general curve has exactly five g^1_4's"},
            };
        default:
            throw std::invalid_argument("genus_taxonomy: catalogued for genus 0..6 only");
    }
}

struct AtlasEntry {
    std::string id;
    CurveRecord record;
    std::string citation;
    std::string note;
};

namespace detail {
inline CurveRecord curated_record(CuratedLocus locus, std::int64_t d, std::int64_t g,
                                  std::int64_t gon, GonStatus status,
                                  std::optional<std::int64_t> k_effective) {
    CurveRecord rec;
    rec.locus = std::move(locus);
    rec.d = d;
    rec.g = g;
    rec.gon = gon;
    rec.gon_status = status;
    rec.k_effective = k_effective;
    if (k_effective)
        rec.computed_by_multisecants = (gon == checked_sub(d, *k_effective));
    rec.rho_pencil = brill_noether_rho(g, gon, 1);
    rec.provenance = Provenance::AtlasFact;
    return rec;
}
} // namespace detail

/* Worked examples: each entry is a record the library can reproduce or a
 * curated literature fact, with the verdict on whether multisecants compute
 * the gonality. */
inline const std::vector<AtlasEntry>& builtin_examples() {
    static const std::vector<AtlasEntry> entries = [] {
        std::vector<AtlasEntry> out;

        out.push_back({"ex-2.2", build_record(CubicClass{4, {1, 1, 1, 1, 1, 1}}),
                       "biliaison induction, family A base",
                       "degree-6 genus-3 curve; projecting from a 3-secant G_i recovers the "
                       "gonality 3 that a plane-sextic model with seven nodes would hide"});

        out.push_back({"ex-2.4-ci-2-3", build_record(QuadricClass{3, 3}), "Basili; Nollet",
                       "complete intersection of a quadric and a cubic: bidegree (3,3), "
                       "gonality 3 by its trisecants"});
        {
            CurveRecord rec = detail::curated_record(
                {"P^3", "complete intersection (4,5), general"}, 20, 51, 16,
                GonStatus::ExactGeneralMember, 4);
            out.push_back({"ex-2.4-ci-4-5", std::move(rec), "Basili; Nollet",
                           "general complete intersection of surfaces of degrees 4 and 5: "
                           "a 4-secant computes gon = d - 4 = 16"});
        }

        out.push_back({"ex-2.5-q-3-5", build_record(QuadricClass{3, 5}), "Ballico",
                       "bidegree (3,5) on the quadric: the (0,1) ruling cuts the gonality "
                       "pencil of degree 3; the 5-secant rulings realise gon = d - k"});

        out.push_back({"ex-2.8-r3", elms_record(3), "Eisenbud-Lange-Martens-Schreyer; Martens",
                       "Clifford dimension 3: the complete intersection of two cubics"});
        out.push_back({"ex-2.8-r4", elms_record(4), "Eisenbud-Lange-Martens-Schreyer",
                       "Clifford dimension 4: degree 13, genus 14, gonality 8 on a K3 surface"});

        out.push_back({"ex-2.9-bidegree-1-7", build_record(QuadricClass{1, 7}), "Ballico",
                       "rational curve of bidegree (1,7): the 7-secant ruling computes "
                       "gonality 1"});
        {
            CurveRecord rec = detail::curated_record({"P^3", "general rational quintic"}, 5, 0, 1,
                                                     GonStatus::ExactGeneralMember, 4);
            out.push_back({"ex-2.9-general-d5", std::move(rec), "Ellia-Franco",
                           "a general rational quintic has only 4-secants, and d - 4 = 1 "
                           "still equals the gonality"});
        }
        for (std::int64_t d = 6; d <= 7; ++d) {
            CurveRecord rec = detail::curated_record(
                {"P^3", "general rational curve of degree " + std::to_string(d)}, d, 0, 1,
                GonStatus::ExactGeneralMember, 4);
            out.push_back({"ex-2.9-general-d" + std::to_string(d), std::move(rec), "Ellia-Franco",
                           "general rational curves of degree >= 6 have only 4-secants, so "
                           "no multisecant computes the gonality"});
        }

        for (std::int64_t a = 3; a <= 5; ++a) {
            CubicClass cls{a, {0, 0, 0, 0, 0, 0}};
            out.push_back({"ex-2.10-a" + std::to_string(a), build_record(cls),
                           "plane-model gonality",
                           "image of a plane curve of degree " + std::to_string(a) +
                               " under the blow-up at six points off the curve: the "
                               "2a-secant conic transforms beat every pencil they cut"});
        }

        out.push_back({"ex-4.2-a", build_record(CubicClass{1, {0, 0, 0, 0, 0, 0}}),
                       "curated base case", "twisted cubic: the 2-secant G_i computes gonality 1"});
        out.push_back({"ex-4.2-b", build_record(CubicClass{3, {1, 1, 1, 1, 1, 0}}),
                       "curated base case", "elliptic quartic: a 2-secant F_i6 computes gonality 2"});
        out.push_back({"ex-4.2-c", build_record(CubicClass{4, {2, 1, 1, 1, 1, 1}}),
                       "curated base case", "genus-2 quintic: the 3-secant G_1 computes gonality 2"});
        out.push_back({"ex-4.2-d", build_record(CubicClass{6, {2, 2, 2, 2, 2, 2}}),
                       "curated base case",
                       "canonical sextic: every line on the surface is only a 2-secant; the "
                       "trisecants computing gonality 3 lie off the surface"});
        out.push_back({"ex-4.2-dprime", build_record(CubicClass{9, {3, 3, 3, 3, 3, 3}}),
                       "biliaison induction, family D base; Martens",
                       "degree-9 genus-10 complete intersection of two cubics: gonality 6 via "
                       "trisecants (E_1 among them), Clifford index 3 from the g^3_9"});

        return out;
    }();
    return entries;
}

/* Every member of the four ACM families up to the given degree, sorted by
 * (degree, family).  The smallest member is A at shift 0, degree 6. */
inline std::vector<CurveRecord> acm_table(std::int64_t max_degree) {
    if (max_degree < 6)
        throw std::invalid_argument("acm_table: need max_degree >= 6 (the smallest family member)");
    std::vector<CurveRecord> rows;
    for (const AcmFamily f : {AcmFamily::A, AcmFamily::B, AcmFamily::C, AcmFamily::D}) {
        const std::int64_t base = 6 + static_cast<std::int64_t>(f) - static_cast<std::int64_t>(AcmFamily::A);
        for (std::int64_t n = 0; checked_add(base, checked_mul(3, n)) <= max_degree; ++n)
            rows.push_back(build_record(AcmCubicType{f, n}));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const CurveRecord& x, const CurveRecord& y) {
        return x.d < y.d;
    });
    return rows;
}

} // namespace gonality
