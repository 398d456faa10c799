#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "engine.hpp"
#include "family.hpp"

/*
 * Serialization: curve records to JSON and CSV rows, derivation chains to
 * JSON and back, and plain-text renderings for the terminal.  All output is
 * deterministic (nlohmann::json orders keys; nothing here reads the clock).
 */

namespace gonality {

inline std::string locus_surface(const CurveLocus& locus) {
    if (std::holds_alternative<PlaneCurve>(locus)) return "plane";
    if (std::holds_alternative<QuadricClass>(locus)) return "quadric";
    if (std::holds_alternative<CubicClass>(locus)) return "cubic";
    return std::get<CuratedLocus>(locus).surface;
}

inline std::string locus_class(const CurveLocus& locus) {
    if (const auto* p = std::get_if<PlaneCurve>(&locus))
        return "deg " + std::to_string(p->degree);
    if (const auto* q = std::get_if<QuadricClass>(&locus)) return to_string(*q);
    if (const auto* c = std::get_if<CubicClass>(&locus)) return to_string(*c);
    return std::get<CuratedLocus>(locus).cls;
}

namespace detail {
inline nlohmann::json opt_json(const std::optional<std::int64_t>& v) {
    if (v) return *v;
    return nullptr;
}
} // namespace detail

/* Fifteen keys, always present; unset optionals serialize as null.  The
 * gonality bounds of an open record stay internal and are not emitted. */
inline nlohmann::json record_to_json(const CurveRecord& rec) {
    nlohmann::json j;
    j["surface"] = locus_surface(rec.locus);
    j["class"] = locus_class(rec.locus);
    j["d"] = rec.d;
    j["g"] = rec.g;
    j["gon"] = detail::opt_json(rec.gon);
    j["gon_status"] = to_label(rec.gon_status);
    j["k_on_surface"] = detail::opt_json(rec.k_on_surface);
    j["k_effective"] = detail::opt_json(rec.k_effective);
    j["cliff"] = detail::opt_json(rec.cliff);
    j["cliff_status"] =
        rec.cliff_status ? nlohmann::json(to_label(*rec.cliff_status)) : nlohmann::json(nullptr);
    j["cliff_dim"] = detail::opt_json(rec.cliff_dim);
    j["rho_pencil"] = detail::opt_json(rec.rho_pencil);
    j["computed_by_multisecants"] = rec.computed_by_multisecants;
    j["provenance"] = to_label(rec.provenance);
    j["trace_id"] = rec.trace_id ? nlohmann::json(*rec.trace_id) : nlohmann::json(nullptr);
    return j;
}

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

inline std::string csv_header() {
    return "id,surface,class,d,g,gon,gon_status,k_on_surface,k_effective,cliff,cliff_status,"
           "cliff_dim,by_multisecants,citation";
}

namespace detail {
inline std::string csv_opt(const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string{};
}
} // namespace detail

inline std::string record_to_csv_row(const std::string& id, const CurveRecord& rec,
                                     const std::string& citation) {
    std::ostringstream row;
    row << csv_escape(id) << ',' << csv_escape(locus_surface(rec.locus)) << ','
        << csv_escape(locus_class(rec.locus)) << ',' << rec.d << ',' << rec.g << ','
        << detail::csv_opt(rec.gon) << ',' << to_label(rec.gon_status) << ','
        << detail::csv_opt(rec.k_on_surface) << ',' << detail::csv_opt(rec.k_effective) << ','
        << detail::csv_opt(rec.cliff) << ','
        << (rec.cliff_status ? to_label(*rec.cliff_status) : "") << ','
        << detail::csv_opt(rec.cliff_dim) << ','
        << (rec.computed_by_multisecants ? "true" : "false") << ',' << csv_escape(citation);
    return row.str();
}

inline nlohmann::json chain_to_json(const DerivationChain& chain) {
    nlohmann::json steps = nlohmann::json::array();
    for (const ChainStep& step : chain.steps) {
        nlohmann::json s;
        s["curve"] = step.curve;
        s["d"] = step.d;
        s["claimed_gon"] = step.claimed_gon;
        if (step.degeneration) {
            s["degeneration"] = {{"s", step.degeneration->s},
                                 {"gon1", step.degeneration->gon1},
                                 {"gon2", step.degeneration->gon2}};
        } else {
            s["degeneration"] = nullptr;
        }
        s["secant_order"] = detail::opt_json(step.secant_order);
        s["witness"] = step.witness;
        s["base_fact"] = step.base_fact;
        steps.push_back(std::move(s));
    }
    return nlohmann::json{{"id", chain.id}, {"steps", std::move(steps)}};
}

inline DerivationChain chain_from_json(const nlohmann::json& j) {
    DerivationChain chain;
    chain.id = j.at("id").get<std::string>();
    for (const nlohmann::json& s : j.at("steps")) {
        ChainStep step;
        step.curve = s.at("curve").get<std::string>();
        step.d = s.at("d").get<std::int64_t>();
        step.claimed_gon = s.at("claimed_gon").get<std::int64_t>();
        if (const nlohmann::json& deg = s.at("degeneration"); !deg.is_null()) {
            step.degeneration = Degeneration{deg.at("s").get<std::int64_t>(),
                                             deg.at("gon1").get<std::int64_t>(),
                                             deg.at("gon2").get<std::int64_t>()};
        }
        if (const nlohmann::json& k = s.at("secant_order"); !k.is_null())
            step.secant_order = k.get<std::int64_t>();
        step.witness = s.at("witness").get<std::string>();
        step.base_fact = s.at("base_fact").get<std::string>();
        chain.steps.push_back(std::move(step));
    }
    return chain;
}

namespace detail {
/* Witness names for the text rendering, recomputed from the locus. */
inline std::string secant_witnesses(const CurveLocus& locus) {
    if (const auto* c = std::get_if<CubicClass>(&locus)) {
        if (degree(*c) <= 0) return {};
        return witness_names(max_secant_on_surface(*c));
    }
    if (const auto* q = std::get_if<QuadricClass>(&locus)) {
        if (q->a < 1 || q->b < 1) return {};
        const QuadricSecants sec = max_secant_on_surface(*q);
        std::string out;
        for (const QuadricClass& ruling : sec.rulings) {
            if (!out.empty()) out += ", ";
            out += "ruling " + to_string(ruling);
        }
        return out;
    }
    return {};
}
} // namespace detail

inline std::string render_record_text(const CurveRecord& rec) {
    std::ostringstream out;
    out << "surface: " << locus_surface(rec.locus) << '\n';
    out << "class: " << locus_class(rec.locus) << '\n';
    out << "degree: " << rec.d << '\n';
    out << "genus: " << rec.g << '\n';
    if (rec.gon) {
        out << "gonality: " << *rec.gon << " [" << to_label(rec.gon_status) << "]\n";
    } else {
        out << "gonality: undetermined [" << to_label(rec.gon_status) << "], bounds ["
            << (rec.gon_lower ? std::to_string(*rec.gon_lower) : "?") << ", "
            << (rec.gon_upper ? std::to_string(*rec.gon_upper) : "?") << "]\n";
    }
    if (rec.k_on_surface) {
        out << "max multisecant order on the surface: " << *rec.k_on_surface;
        if (const std::string w = detail::secant_witnesses(rec.locus); !w.empty())
            out << " (witnesses: " << w << ")";
        out << '\n';
    }
    if (rec.k_effective) out << "effective multisecant order: " << *rec.k_effective << '\n';
    out << "gonality computed by multisecants: " << (rec.computed_by_multisecants ? "yes" : "no")
        << '\n';
    if (rec.cliff) {
        out << "clifford index: " << *rec.cliff;
        if (rec.cliff_status) out << " [" << to_label(*rec.cliff_status) << "]";
        if (rec.cliff_dim) out << ", clifford dimension " << *rec.cliff_dim;
        out << '\n';
    }
    if (rec.rho_pencil) out << "brill-noether number of the pencil: " << *rec.rho_pencil << '\n';
    out << "provenance: " << to_label(rec.provenance) << '\n';
    if (rec.trace_id) out << "trace: " << *rec.trace_id << '\n';
    return out.str();
}

inline std::string render_chain_text(const DerivationChain& chain) {
    std::ostringstream out;
    out << "chain " << chain.id << ":\n";
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const ChainStep& step = chain.steps[i];
        if (i == 0) {
            out << "  base: " << step.curve << " -- degree " << step.d << ", gonality "
                << step.claimed_gon << '\n';
            out << "        " << step.base_fact << '\n';
            if (step.secant_order)
                out << "        " << *step.secant_order << "-secant witness: " << step.witness
                    << '\n';
            continue;
        }
        out << "  step " << i << ": " << step.curve << " -- degree " << step.d
            << ", claimed gonality " << step.claimed_gon << '\n';
        if (step.degeneration) {
            const Degeneration& deg = *step.degeneration;
            out << "        degenerates across s = " << deg.s << " points into pieces of gonality "
                << deg.gon1 << " and " << deg.gon2 << "; lower bound "
                << family_lower_bound(deg) << '\n';
        }
        if (step.secant_order)
            out << "        " << *step.secant_order << "-secant witness: " << step.witness
                << "; upper bound d - k = " << checked_sub(step.d, *step.secant_order) << '\n';
    }
    return out.str();
}

} // namespace gonality
