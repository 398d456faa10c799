#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "character.hpp"
#include "engine.hpp"
#include "lattice.hpp"

/*
 * Self-check oracles.  Each one recomputes a closed-form claim of the
 * library by brute enumeration from the primitive definitions and reports
 * every disagreement.  Default scales (line bound 6, character length 12,
 * shift 12) all run in seconds.
 */

namespace gonality {

struct OracleMismatch {
    std::string input;
    std::string expected;
    std::string got;
};

struct OracleReport {
    std::string id;
    std::int64_t scanned{};    // candidates enumerated
    std::int64_t instances{};  // cases an assertion was made about
    std::vector<OracleMismatch> mismatches;
    bool pass() const { return mismatches.empty(); }
};

namespace detail {
inline bool cubic_class_less(const CubicClass& x, const CubicClass& y) {
    if (x.a != y.a)
        return x.a < y.a;
    return x.m < y.m;
}
} // namespace detail

/*
 * O1 — scan every class (a; m1..m6) with all coefficients in [-bound, bound]
 * for the line equations L.L = -1, L.K = -1, L.H = 1, and demand the
 * solution set be exactly the given candidate table.  The scan expands the
 * bilinear form by hand (running sums of m and m^2); every hit is
 * re-verified through pair_cubic before being recorded.
 */
inline OracleReport o1_lines_exhaustive(std::int64_t bound, const std::vector<CubicClass>& candidates) {
    if (bound < 1 || bound > 20)
        throw std::invalid_argument("o1_lines_exhaustive: bound out of range [1, 20]");
    OracleReport rep;
    rep.id = "o1-lines";
    const std::int64_t lo = -bound, hi = bound;
    std::vector<CubicClass> found;
    for (std::int64_t a = lo; a <= hi; ++a) {
        const std::int64_t aa = a * a, ha = 3 * a;
        for (std::int64_t m1 = lo; m1 <= hi; ++m1) {
            const std::int64_t s1_1 = m1, s2_1 = m1 * m1;
            for (std::int64_t m2 = lo; m2 <= hi; ++m2) {
                const std::int64_t s1_2 = s1_1 + m2, s2_2 = s2_1 + m2 * m2;
                for (std::int64_t m3 = lo; m3 <= hi; ++m3) {
                    const std::int64_t s1_3 = s1_2 + m3, s2_3 = s2_2 + m3 * m3;
                    for (std::int64_t m4 = lo; m4 <= hi; ++m4) {
                        const std::int64_t s1_4 = s1_3 + m4, s2_4 = s2_3 + m4 * m4;
                        for (std::int64_t m5 = lo; m5 <= hi; ++m5) {
                            const std::int64_t s1_5 = s1_4 + m5, s2_5 = s2_4 + m5 * m5;
                            for (std::int64_t m6 = lo; m6 <= hi; ++m6) {
                                ++rep.scanned;
                                const std::int64_t s1 = s1_5 + m6, s2 = s2_5 + m6 * m6;
                                if (aa - s2 == -1 && ha - s1 == 1 && -ha + s1 == -1)
                                    found.push_back({a, {m1, m2, m3, m4, m5, m6}});
                            }
                        }
                    }
                }
            }
        }
    }
    for (const CubicClass& c : found) {
        ++rep.instances;
        if (pair_cubic(c, c) != -1 || pair_cubic(c, cubic_canonical()) != -1 || degree(c) != 1)
            rep.mismatches.push_back({to_string(c), "line equations via pair_cubic",
                                      "scan hit fails recheck"});
    }
    std::vector<CubicClass> expected = candidates;
    std::sort(expected.begin(), expected.end(), detail::cubic_class_less);
    std::sort(found.begin(), found.end(), detail::cubic_class_less);
    for (const CubicClass& c : found)
        if (!std::binary_search(expected.begin(), expected.end(), c, detail::cubic_class_less))
            rep.mismatches.push_back({to_string(c), "present in the line table", "missing"});
    for (const CubicClass& c : expected)
        if (!std::binary_search(found.begin(), found.end(), c, detail::cubic_class_less))
            rep.mismatches.push_back({to_string(c), "found by exhaustive scan", "not a solution"});
    return rep;
}

inline OracleReport o1_lines_exhaustive(std::int64_t bound) {
    std::vector<CubicClass> table;
    for (const LineClass& line : lines_on_cubic())
        table.push_back(line.cls);
    return o1_lines_exhaustive(bound, table);
}

namespace detail {
inline std::string sequence_string(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? " " : "") << v[i];
    return os.str();
}
} // namespace detail

/*
 * O2 — enumerate every integer sequence of length <= max_len with entries
 * in [-1, 3] (an odometer; the running sum is maintained incrementally).
 * Sequences failing the cheap necessary conditions sum = 0, gamma_0 = -1
 * cannot validate and are skipped; every survivor goes through the real
 * validate(), and each valid character with s0 = 3 must classify into one
 * of the four families and round-trip through gamma_of_type.
 */
inline OracleReport o2_character_classification(std::int64_t max_len) {
    if (max_len < 4 || max_len > 14)
        throw std::invalid_argument("o2_character_classification: max_len out of range [4, 14]");
    OracleReport rep;
    rep.id = "o2-characters";
    for (std::int64_t len = 1; len <= max_len; ++len) {
        std::vector<std::int64_t> g(static_cast<std::size_t>(len), -1);
        std::int64_t sum = -len;
        bool more = true;
        while (more) {
            ++rep.scanned;
            if (sum == 0 && g[0] == -1) {
                const ValidityReport v = validate(g);
                if (v.valid && v.s0 == 3) {
                    ++rep.instances;
                    try {
                        const GammaCharacter chr{std::vector<std::int64_t>(g)};
                        const AcmCubicType t = classify_acm_cubic(chr);
                        if (gamma_of_type(t) != chr)
                            rep.mismatches.push_back({detail::sequence_string(g),
                                                      "gamma_of_type round-trip", "different character"});
                    } catch (const std::exception& e) {
                        rep.mismatches.push_back({detail::sequence_string(g),
                                                  "one of the four family patterns", e.what()});
                    }
                }
            }
            /* odometer: last position counts -1,0,1,2,3 */
            more = false;
            for (std::size_t i = g.size(); i-- > 0;) {
                if (g[i] < 3) {
                    ++g[i];
                    ++sum;
                    more = true;
                    break;
                }
                g[i] = -1;
                sum -= 4;
            }
        }
    }
    return rep;
}

namespace detail {
/* The quadric-level ancestors of the four families (one descending
 * biliaison below the shift-0 members). */
inline CubicClass acm_quadric_level_base(AcmFamily f) {
    switch (f) {
        case AcmFamily::A: return {1, {0, 0, 0, 0, 0, 0}};
        case AcmFamily::B: return {3, {1, 1, 1, 1, 1, 0}};
        case AcmFamily::C: return {4, {2, 1, 1, 1, 1, 1}};
        case AcmFamily::D: return {6, {2, 2, 2, 2, 2, 2}};
    }
    throw std::logic_error("acm_quadric_level_base: bad enum value");
}

inline CubicClass iterated_family_class(AcmFamily f, std::int64_t shift) {
    CubicClass c = acm_quadric_level_base(f);
    for (std::int64_t i = 0; i <= shift; ++i)
        c = biliaison_up(c);
    return c;
}

inline std::int64_t direct_line_max(const CubicClass& c) {
    std::int64_t best = pair_cubic(c, lines_on_cubic().front().cls);
    for (const LineClass& line : lines_on_cubic())
        best = std::max(best, pair_cubic(c, line.cls));
    return best;
}

inline std::string type_string(const AcmCubicType& t) {
    return std::string(1, family_letter(t.family)) + " shift " + std::to_string(t.shift);
}
} // namespace detail

/*
 * O3 — for every family and shift, rebuild the representative class by
 * iterated biliaison from the quadric-level ancestor, take the largest line
 * intersection directly from the 27-line table, and compare against the
 * closed forms for the class, the multisecant order, and gon = d - k.
 */
inline OracleReport o3_secant_closed_forms(std::int64_t max_shift) {
    if (max_shift < 0 || max_shift > 200)
        throw std::invalid_argument("o3_secant_closed_forms: max_shift out of range [0, 200]");
    OracleReport rep;
    rep.id = "o3-secants";
    for (const AcmFamily f : {AcmFamily::A, AcmFamily::B, AcmFamily::C, AcmFamily::D}) {
        for (std::int64_t n = 0; n <= max_shift; ++n) {
            const AcmCubicType t{f, n};
            ++rep.scanned;
            ++rep.instances;
            const CubicClass cls = detail::iterated_family_class(f, n);
            const std::int64_t k_direct = detail::direct_line_max(cls);

            if (representative_class(t) != cls) {
                rep.mismatches.push_back({detail::type_string(t), to_string(cls),
                                          to_string(representative_class(t))});
                continue;
            }
            const std::int64_t k_closed = multisecant_order_acm_cubic(t);
            if (k_closed != k_direct)
                rep.mismatches.push_back({detail::type_string(t),
                                          "k = " + std::to_string(k_direct),
                                          "k = " + std::to_string(k_closed)});
            const std::int64_t gon = gonality_acm_cubic(t).gon;
            if (gon != checked_sub(degree(cls), k_direct))
                rep.mismatches.push_back({detail::type_string(t),
                                          "gon = d - k = " + std::to_string(degree(cls) - k_direct),
                                          "gon = " + std::to_string(gon)});
        }
    }
    return rep;
}

/*
 * O4 — the same classes, but compared through the two independent
 * degree/genus pipelines: character summation on one side, lattice pairing
 * and adjunction on the other.  A handful of printed (d, g) anchors are
 * pinned as constants on top.
 */
inline OracleReport o4_degree_genus_cross(std::int64_t max_shift) {
    if (max_shift < 0 || max_shift > 200)
        throw std::invalid_argument("o4_degree_genus_cross: max_shift out of range [0, 200]");
    OracleReport rep;
    rep.id = "o4-degree-genus";
    const auto check_pair = [&rep](const std::string& input, std::int64_t d_char,
                                   std::int64_t g_char, std::int64_t d_lat, std::int64_t g_lat) {
        ++rep.instances;
        if (d_char != d_lat || g_char != g_lat) {
            std::ostringstream want, got;
            want << "(d,g) = (" << d_lat << "," << g_lat << ") via lattice";
            got << "(" << d_char << "," << g_char << ") via character";
            rep.mismatches.push_back({input, want.str(), got.str()});
        }
    };
    for (const AcmFamily f : {AcmFamily::A, AcmFamily::B, AcmFamily::C, AcmFamily::D}) {
        for (std::int64_t n = 0; n <= max_shift; ++n) {
            const AcmCubicType t{f, n};
            ++rep.scanned;
            const GammaCharacter gamma = gamma_of_type(t);
            const CubicClass cls = detail::iterated_family_class(f, n);
            check_pair(detail::type_string(t), degree_of(gamma), genus_of(gamma),
                       degree(cls), genus(cls));
        }
    }

    /* pinned anchors: the four quadric-level rows, the family-A base member,
     * and the degree-9 complete intersection */
    struct Anchor {
        std::vector<std::int64_t> gamma;
        CubicClass cls;
        std::int64_t d;
        std::int64_t g;
    };
    const std::vector<Anchor> anchors = {
        {{-1, -1, 2}, {1, {0, 0, 0, 0, 0, 0}}, 3, 0},
        {{-1, -1, 1, 1}, {3, {1, 1, 1, 1, 1, 0}}, 4, 1},
        {{-1, -1, 0, 2}, {4, {2, 1, 1, 1, 1, 1}}, 5, 2},
        {{-1, -1, 0, 1, 1}, {6, {2, 2, 2, 2, 2, 2}}, 6, 4},
        {{-1, -1, -1, 3}, {4, {1, 1, 1, 1, 1, 1}}, 6, 3},
        {{-1, -1, -1, 1, 1, 1}, {9, {3, 3, 3, 3, 3, 3}}, 9, 10},
    };
    for (const Anchor& anchor : anchors) {
        ++rep.scanned;
        ++rep.instances;
        const GammaCharacter gamma{std::vector<std::int64_t>(anchor.gamma)};
        const bool char_ok = degree_of(gamma) == anchor.d && genus_of(gamma) == anchor.g;
        const bool lattice_ok = degree(anchor.cls) == anchor.d && genus(anchor.cls) == anchor.g;
        if (!char_ok || !lattice_ok) {
            std::ostringstream got;
            got << "character (" << degree_of(gamma) << "," << genus_of(gamma) << "), lattice ("
                << degree(anchor.cls) << "," << genus(anchor.cls) << ")";
            rep.mismatches.push_back({detail::sequence_string(anchor.gamma) + " / " + to_string(anchor.cls),
                                      "(d,g) = (" + std::to_string(anchor.d) + "," +
                                          std::to_string(anchor.g) + ")",
                                      got.str()});
        }
    }
    return rep;
}

} // namespace gonality
