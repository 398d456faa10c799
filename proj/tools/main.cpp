// gonality -- exact gonality, multisecant, and Clifford-index computations
// for curves on the plane, the smooth quadric, and the smooth cubic surface.

#include <charconv>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <gonality/atlas.hpp>
#include <gonality/io.hpp>
#include <gonality/oracle.hpp>

namespace {

using namespace gonality;

const char* kUsage =
    "usage:\n"
    "  gonality curve plane <d> [--format text|json] [--trace]\n"
    "  gonality curve quadric <a> <b> [--format text|json] [--trace]\n"
    "  gonality curve cubic <a> <m1> <m2> <m3> <m4> <m5> <m6> [--format text|json] [--trace]\n"
    "  gonality curve acm <A|B|C|D> <shift> [--format text|json] [--trace]\n"
    "  gonality classify [--format text|json] -- <g0> <g1> ...\n"
    "  gonality table --max-degree <N> [--format text|csv|json]\n"
    "  gonality bound <s> <gon1> <gon2> [--gont <g>]\n"
    "  gonality verify [--line-bound <B>] [--char-max-len <L>] [--max-shift <S>]\n"
    "  gonality help [<command>]\n"
    "\n"
    "exit status: 0 success; 1 invalid input or undetermined gonality; 2 a\n"
    "verification run found a mismatch.\n";

const char* kCurveHelp =
    "gonality curve -- compute the full record of one curve\n"
    "\n"
    "  curve plane <d>                       plane curve of degree d\n"
    "  curve quadric <a> <b>                 bidegree (a,b) on a smooth quadric\n"
    "  curve cubic <a> <m1> ... <m6>         class (a; m1,...,m6) on a smooth cubic\n"
    "  curve acm <A|B|C|D> <shift>           member of an ACM family on the cubic\n"
    "\n"
    "options:\n"
    "  --format text|json   output format (default text)\n"
    "  --trace              also print the derivation chain, when one exists\n"
    "\n"
    "If the gonality is not determined (status lower_upper_gap) the record is\n"
    "still printed and the exit status is 1.\n";

const char* kClassifyHelp =
    "gonality classify -- validate a gamma-character and classify it\n"
    "\n"
    "  classify [--format text|json] -- <g0> <g1> ...\n"
    "\n"
    "The `--` separator is required: character entries start with -1, which\n"
    "would otherwise be read as an option.  An invalid character prints its\n"
    "violations and exits 1.  A valid character with s0 != 3 is reported as\n"
    "not cubic-surface; s0 = 3 yields the ACM family and shift.\n";

const char* kTableHelp =
    "gonality table -- every ACM cubic-surface family member up to a degree\n"
    "\n"
    "  table --max-degree <N> [--format text|csv|json]\n"
    "\n"
    "N must be at least 6 (the smallest member).  Rows are sorted by degree,\n"
    "then family A, B, C, D.\n";

const char* kBoundHelp =
    "gonality bound -- the degeneration lower bound min(s, gon1 + gon2)\n"
    "\n"
    "  bound <s> <gon1> <gon2> [--gont <g>]\n"
    "\n"
    "All three arguments must be positive.  With --gont the tool also reports\n"
    "whether the sharper regime applies: gon_t == gon1 + gon2 and that sum is\n"
    "strictly below s.\n";

const char* kVerifyHelp =
    "gonality verify -- run the internal cross-check oracles and chain suite\n"
    "\n"
    "  verify [--line-bound <B>] [--char-max-len <L>] [--max-shift <S>]\n"
    "\n"
    "defaults: --line-bound 6, --char-max-len 12, --max-shift 12.\n"
    "Exit status 2 if any oracle or chain check fails.\n";

std::optional<std::int64_t> parse_int(std::string_view s) {
    std::int64_t value{};
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return value;
}

std::int64_t want_int(const std::vector<std::string_view>& args, std::size_t i,
                      const char* what) {
    if (i >= args.size())
        throw std::invalid_argument(std::string("missing argument: ") + what);
    const auto v = parse_int(args[i]);
    if (!v)
        throw std::invalid_argument(std::string("not an integer for ") + what + ": " +
                                    std::string(args[i]));
    return *v;
}

bool has_help(const std::vector<std::string_view>& args) {
    for (const auto a : args)
        if (a == "--help" || a == "-h") return true;
    return false;
}

enum class Format { Text, Json, Csv };

/* Pull --format (and optionally --trace) out of args, leaving positionals. */
Format take_format(std::vector<std::string_view>& args, bool allow_csv) {
    Format fmt = Format::Text;
    std::vector<std::string_view> rest;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--format") {
            if (i + 1 == args.size()) throw std::invalid_argument("--format needs a value");
            const std::string_view v = args[++i];
            if (v == "text") fmt = Format::Text;
            else if (v == "json") fmt = Format::Json;
            else if (v == "csv" && allow_csv) fmt = Format::Csv;
            else throw std::invalid_argument("unknown format: " + std::string(v));
        } else {
            rest.push_back(args[i]);
        }
    }
    args = std::move(rest);
    return fmt;
}

bool take_flag(std::vector<std::string_view>& args, std::string_view flag) {
    bool found = false;
    std::vector<std::string_view> rest;
    for (const auto a : args) {
        if (a == flag) found = true;
        else rest.push_back(a);
    }
    args = std::move(rest);
    return found;
}

std::optional<DerivationChain> chain_for(const CurveRecord& rec) {
    if (!rec.trace_id) return std::nullopt;
    if (const auto* p = std::get_if<PlaneCurve>(&rec.locus))
        return plane_induction_chain(p->degree);
    if (const auto* q = std::get_if<QuadricClass>(&rec.locus))
        return quadric_induction_chain(q->a, q->b);
    if (const auto* c = std::get_if<CubicClass>(&rec.locus))
        if (const auto type = acm_type_of_class(*c)) return cubic_induction_chain(*type);
    return std::nullopt;
}

int cmd_curve(std::vector<std::string_view> args) {
    if (has_help(args)) {
        std::cout << kCurveHelp;
        return 0;
    }
    const Format fmt = take_format(args, /*allow_csv=*/false);
    const bool trace = take_flag(args, "--trace");
    if (args.empty())
        throw std::invalid_argument("curve: expected plane, quadric, cubic, or acm");

    CurveRecord rec;
    const std::string_view kind = args[0];
    if (kind == "plane") {
        if (args.size() != 2) throw std::invalid_argument("curve plane: expected one degree");
        rec = build_record(PlaneCurve{want_int(args, 1, "d")});
    } else if (kind == "quadric") {
        if (args.size() != 3) throw std::invalid_argument("curve quadric: expected a and b");
        rec = build_record(QuadricClass{want_int(args, 1, "a"), want_int(args, 2, "b")});
    } else if (kind == "cubic") {
        if (args.size() != 8)
            throw std::invalid_argument("curve cubic: expected a and six multiplicities");
        CubicClass cls{want_int(args, 1, "a"), {}};
        for (int i = 0; i < 6; ++i)
            cls.m[static_cast<std::size_t>(i)] = want_int(args, static_cast<std::size_t>(i) + 2, "m");
        rec = build_record(cls);
    } else if (kind == "acm") {
        if (args.size() != 3) throw std::invalid_argument("curve acm: expected family and shift");
        AcmFamily family{};
        if (args[1] == "A" || args[1] == "a") family = AcmFamily::A;
        else if (args[1] == "B" || args[1] == "b") family = AcmFamily::B;
        else if (args[1] == "C" || args[1] == "c") family = AcmFamily::C;
        else if (args[1] == "D" || args[1] == "d") family = AcmFamily::D;
        else throw std::invalid_argument("curve acm: family must be A, B, C, or D");
        rec = build_record(AcmCubicType{family, want_int(args, 2, "shift")});
    } else {
        throw std::invalid_argument("curve: unknown surface " + std::string(kind));
    }

    if (fmt == Format::Json) {
        if (trace) {
            nlohmann::json j;
            j["record"] = record_to_json(rec);
            const auto chain = chain_for(rec);
            j["trace"] = chain ? chain_to_json(*chain) : nlohmann::json(nullptr);
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << record_to_json(rec).dump(2) << '\n';
        }
    } else {
        std::cout << render_record_text(rec);
        if (trace) {
            if (const auto chain = chain_for(rec)) {
                std::cout << '\n' << render_chain_text(*chain);
            } else {
                std::cout << "\nno derivation chain for this curve\n";
            }
        }
    }

    if (!rec.gon) {
        std::cerr << "gonality undetermined: only bounds are known for this class\n";
        return 1;
    }
    return 0;
}

int cmd_classify(std::vector<std::string_view> args) {
    if (has_help(args)) {
        std::cout << kClassifyHelp;
        return 0;
    }
    std::vector<std::string_view> head;
    std::vector<std::int64_t> entries;
    bool seen_sep = false;
    for (const auto a : args) {
        if (!seen_sep && a == "--") {
            seen_sep = true;
            continue;
        }
        if (!seen_sep) {
            head.push_back(a);
            continue;
        }
        const auto v = parse_int(a);
        if (!v) throw std::invalid_argument("classify: not an integer: " + std::string(a));
        entries.push_back(*v);
    }
    if (!seen_sep)
        throw std::invalid_argument(
            "classify: expected `--` before the entries (they start with -1, which would "
            "otherwise be read as an option)");
    if (entries.empty()) throw std::invalid_argument("classify: no entries after `--`");
    const Format fmt = take_format(head, /*allow_csv=*/false);
    if (!head.empty())
        throw std::invalid_argument("classify: unexpected argument " + std::string(head[0]));

    const ValidityReport report = validate(entries);
    if (!report.valid) {
        if (fmt == Format::Json) {
            nlohmann::json j;
            j["valid"] = false;
            j["violations"] = report.violations();
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "invalid character:\n";
            for (const std::string& v : report.violations()) std::cout << "  " << v << '\n';
        }
        return 1;
    }

    const GammaCharacter chr(entries);
    const std::int64_t d = degree_of(chr);
    const std::int64_t g = genus_of(chr);
    nlohmann::json j;
    j["valid"] = true;
    j["s0"] = *report.s0;
    j["degree"] = d;
    j["genus"] = g;
    if (*report.s0 != 3) {
        j["family"] = nullptr;
        j["shift"] = nullptr;
        j["representative_class"] = nullptr;
        if (fmt == Format::Json) {
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "valid character, s0 = " << *report.s0
                      << ": not a cubic-surface ACM character\n";
            std::cout << "degree: " << d << '\n';
            std::cout << "genus: " << g << '\n';
        }
        return 0;
    }

    const AcmCubicType type = classify_acm_cubic(chr);
    const CubicClass cls = representative_class(type);
    j["family"] = std::string(1, family_letter(type.family));
    j["shift"] = type.shift;
    j["representative_class"] = to_string(cls);
    if (fmt == Format::Json) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "valid character, s0 = 3\n";
        std::cout << "degree: " << d << '\n';
        std::cout << "genus: " << g << '\n';
        std::cout << "family: " << family_letter(type.family) << ", shift " << type.shift << '\n';
        std::cout << "representative class: " << to_string(cls) << '\n';
    }
    return 0;
}

int cmd_table(std::vector<std::string_view> args) {
    if (has_help(args)) {
        std::cout << kTableHelp;
        return 0;
    }
    const Format fmt = take_format(args, /*allow_csv=*/true);
    std::optional<std::int64_t> max_degree;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--max-degree") {
            max_degree = want_int(args, ++i, "--max-degree");
        } else {
            throw std::invalid_argument("table: unexpected argument " + std::string(args[i]));
        }
    }
    if (!max_degree) throw std::invalid_argument("table: --max-degree is required");

    const std::vector<CurveRecord> rows = acm_table(*max_degree);
    if (fmt == Format::Json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const CurveRecord& rec : rows) arr.push_back(record_to_json(rec));
        std::cout << arr.dump(2) << '\n';
    } else if (fmt == Format::Csv) {
        std::cout << csv_header() << '\n';
        for (const CurveRecord& rec : rows)
            std::cout << record_to_csv_row(rec.trace_id.value_or(""), rec,
                                           to_label(rec.provenance))
                      << '\n';
    } else {
        std::cout << std::left << std::setw(12) << "id" << std::setw(22) << "class"
                  << std::right << std::setw(4) << "d" << std::setw(4) << "g" << std::setw(5)
                  << "gon" << std::setw(4) << "k" << std::setw(7) << "cliff" << '\n';
        for (const CurveRecord& rec : rows) {
            std::cout << std::left << std::setw(12) << rec.trace_id.value_or("")
                      << std::setw(22) << locus_class(rec.locus) << std::right << std::setw(4)
                      << rec.d << std::setw(4) << rec.g << std::setw(5) << *rec.gon
                      << std::setw(4) << *rec.k_on_surface << std::setw(7)
                      << (rec.cliff ? std::to_string(*rec.cliff) : "-") << '\n';
        }
    }
    return 0;
}

int cmd_bound(std::vector<std::string_view> args) {
    if (has_help(args)) {
        std::cout << kBoundHelp;
        return 0;
    }
    std::optional<std::int64_t> gon_t;
    std::vector<std::string_view> positional;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--gont") {
            gon_t = want_int(args, ++i, "--gont");
        } else {
            positional.push_back(args[i]);
        }
    }
    if (positional.size() != 3)
        throw std::invalid_argument("bound: expected <s> <gon1> <gon2>");
    const Degeneration deg{want_int(positional, 0, "s"), want_int(positional, 1, "gon1"),
                           want_int(positional, 2, "gon2")};
    std::cout << "lower bound: " << family_lower_bound(deg) << '\n';
    if (gon_t)
        std::cout << "corollary regime: " << (corollary_condition(deg, *gon_t) ? "yes" : "no")
                  << '\n';
    return 0;
}

void print_oracle(const OracleReport& report, bool& ok) {
    std::cout << report.id << ": " << (report.pass() ? "pass" : "FAIL") << " (scanned "
              << report.scanned << ", instances " << report.instances << ")\n";
    if (!report.pass()) {
        ok = false;
        for (const OracleMismatch& m : report.mismatches)
            std::cout << "  mismatch: input=" << m.input << " expected=" << m.expected
                      << " got=" << m.got << '\n';
    }
}

int cmd_verify(std::vector<std::string_view> args) {
    if (has_help(args)) {
        std::cout << kVerifyHelp;
        return 0;
    }
    std::int64_t line_bound = 6, char_max_len = 12, max_shift = 12;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--line-bound") line_bound = want_int(args, ++i, "--line-bound");
        else if (args[i] == "--char-max-len") char_max_len = want_int(args, ++i, "--char-max-len");
        else if (args[i] == "--max-shift") max_shift = want_int(args, ++i, "--max-shift");
        else throw std::invalid_argument("verify: unexpected argument " + std::string(args[i]));
    }

    bool ok = true;
    print_oracle(o1_lines_exhaustive(line_bound), ok);
    print_oracle(o2_character_classification(char_max_len), ok);
    print_oracle(o3_secant_closed_forms(max_shift), ok);
    print_oracle(o4_degree_genus_cross(max_shift), ok);

    std::int64_t chains_checked = 0;
    const auto check = [&](const DerivationChain& chain) {
        ++chains_checked;
        const ChainCheck result = verify_chain(chain);
        if (!result.pass) {
            ok = false;
            std::cout << "chain " << chain.id << ": FAIL at step "
                      << result.failing_step.value_or(0) << ": " << result.message << '\n';
        }
    };
    for (std::int64_t d = 2; d <= 15; ++d) check(plane_induction_chain(d));
    for (std::int64_t a = 1; a <= 10; ++a)
        for (std::int64_t b = a; b <= 10; ++b) check(quadric_induction_chain(a, b));
    for (const AcmFamily f : {AcmFamily::A, AcmFamily::B, AcmFamily::C, AcmFamily::D})
        for (std::int64_t n = 0; n <= 10; ++n) check(cubic_induction_chain({f, n}));
    std::cout << "chains: " << chains_checked << " checked, "
              << (ok ? "all pass" : "FAILURES above") << '\n';

    return ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string_view> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "help" || args[0] == "--help" || args[0] == "-h") {
        if (args.size() >= 2) {
            const std::string_view topic = args[1];
            if (topic == "curve") { std::cout << kCurveHelp; return 0; }
            if (topic == "classify") { std::cout << kClassifyHelp; return 0; }
            if (topic == "table") { std::cout << kTableHelp; return 0; }
            if (topic == "bound") { std::cout << kBoundHelp; return 0; }
            if (topic == "verify") { std::cout << kVerifyHelp; return 0; }
        }
        std::cout << kUsage;
        return args.empty() ? 1 : 0;
    }

    const std::string_view cmd = args[0];
    const std::vector<std::string_view> rest(args.begin() + 1, args.end());
    try {
        if (cmd == "curve") return cmd_curve(rest);
        if (cmd == "classify") return cmd_classify(rest);
        if (cmd == "table") return cmd_table(rest);
        if (cmd == "bound") return cmd_bound(rest);
        if (cmd == "verify") return cmd_verify(rest);
        std::cerr << "unknown command: " << cmd << "\n\n" << kUsage;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
