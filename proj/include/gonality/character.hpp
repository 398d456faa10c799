#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "checked.hpp"

/*
 * Numerical characters of ACM space curves.  A character is a finitely
 * supported integer sequence (gamma_0, gamma_1, ...); the curve it encodes
 * has
 *
 *     degree = sum n * gamma_n,     genus = sum binom(n-1, 2) * gamma_n.
 *
 * A sequence qualifies as the character of an ACM curve when
 *   (i)   the entries sum to zero,
 *   (ii)  it starts with a block of -1's (length s0 >= 1, the least degree
 *         of a surface containing the curve) followed only by entries >= 0,
 *   (iii) the set { n : gamma_n > 0 } is a nonempty interval.
 */

namespace gonality {

class GammaCharacter {
public:
    /* Trailing zeros never change the encoded curve, so they are trimmed on
     * construction; the all-zero (empty) sequence is rejected outright. */
    explicit GammaCharacter(std::vector<std::int64_t> v) : values_(std::move(v)) {
        while (!values_.empty() && values_.back() == 0)
            values_.pop_back();
        if (values_.empty())
            throw std::invalid_argument("GammaCharacter: empty (or all-zero) sequence");
    }

    std::span<const std::int64_t> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    std::int64_t operator[](std::size_t n) const { return values_[n]; }
    bool operator==(const GammaCharacter&) const = default;

private:
    std::vector<std::int64_t> values_;
};

struct ValidityReport {
    static constexpr unsigned nonzero_sum = 1u;
    static constexpr unsigned bad_negative_prefix = 2u;
    static constexpr unsigned positive_part_not_interval = 4u;

    bool valid{};
    std::optional<std::int64_t> s0;  // set whenever the -1-prefix shape holds
    unsigned flags{};

    std::vector<std::string> violations() const {
        std::vector<std::string> out;
        if (flags & nonzero_sum)
            out.push_back("entries do not sum to zero");
        if (flags & bad_negative_prefix)
            out.push_back("sequence is not a block of -1's followed by entries >= 0");
        if (flags & positive_part_not_interval)
            out.push_back("strictly positive entries do not form a nonempty contiguous block");
        return out;
    }
};

inline ValidityReport validate(std::span<const std::int64_t> g) {
    ValidityReport rep;

    std::int64_t sum = 0;
    for (std::int64_t v : g)
        sum = checked_add(sum, v);
    if (sum != 0)
        rep.flags |= ValidityReport::nonzero_sum;

    std::size_t s0 = 0;
    while (s0 < g.size() && g[s0] == -1)
        ++s0;
    bool prefix_ok = s0 >= 1;
    for (std::size_t n = s0; n < g.size(); ++n)
        if (g[n] < 0)
            prefix_ok = false;
    if (prefix_ok)
        rep.s0 = static_cast<std::int64_t>(s0);
    else
        rep.flags |= ValidityReport::bad_negative_prefix;

    std::size_t first = g.size(), last = g.size();
    for (std::size_t n = 0; n < g.size(); ++n)
        if (g[n] > 0) {
            if (first == g.size())
                first = n;
            last = n;
        }
    bool support_ok = first != g.size();
    for (std::size_t n = first; support_ok && n <= last; ++n)
        if (g[n] <= 0)
            support_ok = false;
    if (!support_ok)
        rep.flags |= ValidityReport::positive_part_not_interval;

    rep.valid = rep.flags == 0;
    return rep;
}

inline ValidityReport validate(const GammaCharacter& g) { return validate(g.values()); }

namespace detail {
inline std::int64_t binom2(std::int64_t k) {
    /* binom(k, 2), zero when k < 2 */
    if (k < 2)
        return 0;
    const std::int64_t p = checked_mul(k, k - 1);
    return p / 2;
}

inline void require_valid(const GammaCharacter& g, const char* who) {
    if (!validate(g).valid)
        throw std::invalid_argument(std::string(who) + ": invalid character");
}
} // namespace detail

inline std::int64_t degree_of(const GammaCharacter& g) {
    detail::require_valid(g, "degree_of");
    std::int64_t d = 0;
    for (std::size_t n = 0; n < g.size(); ++n)
        d = checked_add(d, checked_mul(static_cast<std::int64_t>(n), g[n]));
    return d;
}

inline std::int64_t genus_of(const GammaCharacter& g) {
    detail::require_valid(g, "genus_of");
    std::int64_t acc = 0;
    for (std::size_t n = 0; n < g.size(); ++n)
        acc = checked_add(acc, checked_mul(detail::binom2(static_cast<std::int64_t>(n) - 1), g[n]));
    return acc;
}

/*
 * The four families of ACM curves on a cubic surface (s0 = 3), keyed by the
 * block of positive entries after the zeros:
 *
 *     A: (-1,-1,-1, 0^n, 3)        B: (-1,-1,-1, 0^n, 2, 1)
 *     C: (-1,-1,-1, 0^n, 1, 2)     D: (-1,-1,-1, 0^n, 1, 1, 1)
 *
 * "shift" is n, the number of interior zeros; one ascending biliaison step
 * increases it by one (degree +3).  These four blocks are the only
 * compositions of 3, so for s0 = 3 the classification is complete.
 */
enum class AcmFamily { A, B, C, D };

inline char family_letter(AcmFamily f) {
    switch (f) {
        case AcmFamily::A: return 'A';
        case AcmFamily::B: return 'B';
        case AcmFamily::C: return 'C';
        case AcmFamily::D: return 'D';
    }
    throw std::logic_error("family_letter: bad enum value");
}

struct AcmCubicType {
    AcmFamily family{};
    std::int64_t shift{};
    bool operator==(const AcmCubicType&) const = default;
};

inline GammaCharacter gamma_of_type(const AcmCubicType& t) {
    if (t.shift < 0)
        throw std::invalid_argument("gamma_of_type: negative shift");
    std::vector<std::int64_t> v{-1, -1, -1};
    v.insert(v.end(), static_cast<std::size_t>(t.shift), 0);
    switch (t.family) {
        case AcmFamily::A: v.insert(v.end(), {3}); break;
        case AcmFamily::B: v.insert(v.end(), {2, 1}); break;
        case AcmFamily::C: v.insert(v.end(), {1, 2}); break;
        case AcmFamily::D: v.insert(v.end(), {1, 1, 1}); break;
    }
    return GammaCharacter(std::move(v));
}

inline AcmCubicType classify_acm_cubic(const GammaCharacter& g) {
    const ValidityReport rep = validate(g);
    if (!rep.valid)
        throw std::invalid_argument("classify_acm_cubic: invalid character");
    if (rep.s0 != 3)
        throw std::invalid_argument("classify_acm_cubic: s0 != 3, not a cubic-surface character");
    std::size_t n = 3;
    while (n < g.size() && g[n] == 0)
        ++n;
    const std::int64_t shift = static_cast<std::int64_t>(n) - 3;
    std::vector<std::int64_t> block(g.values().begin() + static_cast<std::ptrdiff_t>(n), g.values().end());
    const AcmCubicType t{[&] {
        if (block == std::vector<std::int64_t>{3}) return AcmFamily::A;
        if (block == std::vector<std::int64_t>{2, 1}) return AcmFamily::B;
        if (block == std::vector<std::int64_t>{1, 2}) return AcmFamily::C;
        if (block == std::vector<std::int64_t>{1, 1, 1}) return AcmFamily::D;
        /* Unreachable for a valid s0 = 3 character: the positive block is an
         * interval summing to 3, and 3, 2+1, 1+2, 1+1+1 are all of them. */
        throw std::logic_error("classify_acm_cubic: classification gap — positive block "
                               "is not one of the four known patterns");
    }(), shift};
    return t;
}

inline AcmCubicType biliaison_on_type(const AcmCubicType& t) {
    return {t.family, checked_add(t.shift, 1)};
}

/* Characters read and print as a whitespace-separated list, index 0 first. */
inline GammaCharacter parse_gamma(std::string_view text) {
    std::vector<std::int64_t> v;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n'))
            ++pos;
        if (pos >= text.size())
            break;
        std::size_t end = pos;
        while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '\n')
            ++end;
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
        if (ec != std::errc{} || ptr != text.data() + end)
            throw std::invalid_argument("parse_gamma: not an integer: '" +
                                        std::string(text.substr(pos, end - pos)) + "'");
        v.push_back(value);
        pos = end;
    }
    return GammaCharacter(std::move(v));
}

inline std::string to_string(const GammaCharacter& g) {
    std::ostringstream os;
    for (std::size_t n = 0; n < g.size(); ++n)
        os << (n ? " " : "") << g[n];
    return os.str();
}

} // namespace gonality
