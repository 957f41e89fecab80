#include "cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"

#include "hquat/dyadic.hpp"
#include "hquat/error.hpp"
#include "hquat/integer.hpp"
#include "hquat/euclid.hpp"
#include "hquat/modm.hpp"
#include "hquat/rep_count.hpp"
#include "hquat/text.hpp"

namespace hquat::cli {

using nlohmann::json;

json to_json(const OrderElement& e) { return json{{"v", e.g}}; }

OrderElement quat_from_json(const json& j) {
    require(j.is_object() && j.contains("v") && j["v"].is_array() && j["v"].size() == 4,
            "quaternion JSON must look like {\"v\":[g1,g2,g3,g4]}");
    OrderElement e;
    for (std::size_t n = 0; n < 4; ++n) {
        require(j["v"][n].is_number_integer(), "quaternion JSON coordinates must be integers");
        e.g[n] = j["v"][n].get<std::int64_t>();
    }
    return e;
}

json to_json(const Factorization& f) {
    json primes = json::array();
    for (const auto& pi : f.primes) primes.push_back(to_json(pi.element));
    return json{{"r", f.r}, {"unit", to_json(f.unit)}, {"sign", f.sign}, {"content", f.content}, {"primes", primes}};
}

namespace {

const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

const std::map<std::string, Side> kSides{{"left", Side::left}, {"right", Side::right}};
const std::map<std::string, Restriction> kRestrictions{
    {"none", Restriction::none}, {"i", Restriction::case_i}, {"ii", Restriction::case_ii}, {"iii", Restriction::case_iii}};

std::string restriction_name(Restriction r) {
    for (const auto& [name, value] : kRestrictions)
        if (value == r) return name;
    return "?";
}

std::string describe(const OrderElement& e) { return format(e) + "  = " + format_half(e); }

struct Options {
    bool json_output = false;
    // count
    std::int64_t n = 0;
    Restriction restriction = Restriction::none;
    bool oracle = false;
    unsigned workers = 1;
    // quaternion-valued arguments
    std::string quat_a, quat_b;
    Side side = Side::right;
    // tau / primes
    std::int64_t modulus = 0;
    std::int64_t prime = 0;
    // verify
    std::int64_t max_n = 0;
};

int cmd_count(const Options& o, std::ostream& out) {
    const RepQuery q{o.n, o.restriction};
    validate(q);
    std::int64_t formula = 0;
    int r = 0;
    std::int64_t m = 0;
    if (o.restriction == Restriction::none) {
        const CountResult c = rep_count_formula(o.n);
        formula = c.formula_count;
        r = c.r;
        m = c.m;
    } else {
        r = two_adic_valuation(o.n);
        m = o.n >> r;
        formula = complementary_count_formula(m, o.restriction);
    }
    std::optional<std::int64_t> oracle;
    if (o.oracle) oracle = rep_count_oracle(q, kDefaultOracleBound, o.workers);
    const bool ok = !oracle || *oracle == formula;

    if (o.json_output) {
        json j{{"n", o.n}, {"restriction", restriction_name(o.restriction)}, {"r", r}, {"m", m}, {"formula", formula}};
        if (oracle) {
            j["oracle"] = *oracle;
            j["match"] = ok;
        }
        out << j.dump() << '\n';
    } else {
        out << formula << '\n';
        if (oracle) out << "oracle " << *oracle << (ok ? " (match)" : " (MISMATCH)") << '\n';
    }
    return ok ? kOk : kVerificationMismatch;
}

int cmd_factor(const Options& o, std::ostream& out) {
    const OrderElement x = parse(o.quat_a);
    const Factorization f = full_factor(x);
    if (o.json_output) {
        out << to_json(f).dump() << '\n';
        return kOk;
    }
    out << "element  " << describe(x) << '\n'
        << "norm     " << norm(x) << '\n'
        << "(1+i)^r  r = " << f.r << '\n'
        << "unit     " << describe(f.unit) << '\n'
        << "sign     " << (f.sign > 0 ? "+1" : "-1") << '\n'
        << "content  " << f.content << '\n';
    for (const auto& pi : f.primes) out << "prime    " << describe(pi.element) << "  norm " << pi.p << '\n';
    return kOk;
}

int cmd_gcd(const Options& o, std::ostream& out) {
    const OrderElement a = parse(o.quat_a), b = parse(o.quat_b);
    const GcdResult g = gcd(a, b, o.side);
    if (o.json_output) {
        out << json{{"side", side_name(g.side)},
                    {"gcd", to_json(g.gcd)},
                    {"norm", norm(g.gcd)},
                    {"cofactors", json::array({to_json(g.cofactors.first), to_json(g.cofactors.second)})}}
                   .dump()
            << '\n';
        return kOk;
    }
    out << side_name(g.side) << " gcd  " << describe(g.gcd) << "  norm " << norm(g.gcd) << '\n'
        << "x        " << describe(g.cofactors.first) << '\n'
        << "y        " << describe(g.cofactors.second) << '\n';
    return kOk;
}

int cmd_tau(const Options& o, std::ostream& out) {
    const OrderElement e = parse(o.quat_a);
    const RSParams p = solve_rs(o.modulus);
    const ResidueElement q = reduce_mod_m(e, o.modulus);
    const MatrixModM a = tau(q, p);
    if (o.json_output) {
        out << json{{"m", p.m},
                    {"r", p.r},
                    {"s", p.s},
                    {"residue", q.q},
                    {"matrix", json::array({json::array({a.alpha, a.beta}), json::array({a.gamma, a.delta})})},
                    {"det", det(a)}}
                   .dump()
            << '\n';
        return kOk;
    }
    out << "(r,s) = (" << p.r << "," << p.s << ") mod " << p.m << '\n'
        << "[[" << a.alpha << "," << a.beta << "],[" << a.gamma << "," << a.delta << "]]\n"
        << "det " << det(a) << '\n';
    return kOk;
}

int cmd_primary(const Options& o, std::ostream& out) {
    const OrderElement b = parse(o.quat_a);
    const PrimaryAssociate pa = primary_associate(b, o.side);
    if (o.json_output) {
        out << json{{"side", side_name(o.side)}, {"unit", to_json(pa.unit)}, {"primary", to_json(pa.primary)}}.dump()
            << '\n';
        return kOk;
    }
    out << "unit     " << describe(pa.unit) << '\n' << "primary  " << describe(pa.primary) << '\n';
    return kOk;
}

int cmd_primes(const Options& o, std::ostream& out) {
    std::vector<OrderElement> elems;
    if (o.prime == 2) {
        elems = primes_over_two();
    } else {
        for (const auto& pi : primary_primes_of_norm(o.prime)) elems.push_back(pi.element);
    }
    if (o.json_output) {
        json list = json::array();
        for (const auto& e : elems) list.push_back(to_json(e));
        out << json{{"p", o.prime}, {"count", elems.size()}, {"primes", list}}.dump() << '\n';
        return kOk;
    }
    for (const auto& e : elems) out << describe(e) << '\n';
    out << elems.size() << (o.prime == 2 ? " primes of norm 2\n" : " primary primes\n");
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    require(o.max_n >= 1, "verify: --max-n must be positive");
    json mismatches = json::array();
    std::int64_t checked_count = 0;
    for (std::int64_t n = 1; n <= o.max_n; ++n) {
        const std::int64_t f = rep_count_formula(n).formula_count;
        const std::int64_t g = rep_count_oracle({n, Restriction::none}, kDefaultOracleBound, o.workers);
        ++checked_count;
        if (f != g) mismatches.push_back({{"n", n}, {"restriction", "none"}, {"formula", f}, {"oracle", g}});
    }
    for (Restriction c : {Restriction::case_i, Restriction::case_ii, Restriction::case_iii}) {
        for (std::int64_t m = 1; complementary_n(m, c) <= o.max_n; m += 2) {
            const std::int64_t n = complementary_n(m, c);
            const std::int64_t f = complementary_count_formula(m, c);
            const std::int64_t g = rep_count_oracle({n, c}, kDefaultOracleBound, o.workers);
            ++checked_count;
            if (f != g)
                mismatches.push_back({{"n", n}, {"restriction", restriction_name(c)}, {"formula", f}, {"oracle", g}});
        }
    }
    const bool ok = mismatches.empty();
    if (o.json_output) {
        out << json{{"max_n", o.max_n}, {"checked", checked_count}, {"mismatches", mismatches}, {"ok", ok}}.dump()
            << '\n';
    } else {
        for (const auto& mm : mismatches)
            out << "MISMATCH n=" << mm["n"] << " restriction=" << mm["restriction"].get<std::string>()
                << " formula=" << mm["formula"] << " oracle=" << mm["oracle"] << '\n';
        out << checked_count << " counts checked, " << mismatches.size() << " mismatches\n";
    }
    return ok ? kOk : kVerificationMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact arithmetic in the quaternion order of x^2+y^2+2z^2+2w^2", "hquat"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json_output, "Emit JSON");

    auto* count = app.add_subcommand("count", "Representations of n by x^2+y^2+2z^2+2w^2");
    count->add_option("n", o.n, "Positive integer")->required();
    count->add_option("--restriction", o.restriction, "Parity restriction")
        ->transform(CLI::CheckedTransformer(kRestrictions, CLI::ignore_case));
    count->add_flag("--oracle", o.oracle, "Cross-check against brute-force enumeration");
    count->add_option("--workers", o.workers, "Threads for the oracle")->check(CLI::Range(1U, 256U));

    auto* factor = app.add_subcommand("factor", "Decompose an element into (1+i)^r, unit, content and primary primes");
    factor->add_option("quat", o.quat_a, "Element, [g1,g2,g3,g4] or (A+Bi+Cr2j+Dr2k)/2")->required();

    auto* gcd_cmd = app.add_subcommand("gcd", "One-sided greatest common divisor with Bezout cofactors");
    gcd_cmd->add_option("--side", o.side, "left or right")
        ->required()
        ->transform(CLI::CheckedTransformer(kSides, CLI::ignore_case));
    gcd_cmd->add_option("a", o.quat_a)->required();
    gcd_cmd->add_option("b", o.quat_b)->required();

    auto* tau_cmd = app.add_subcommand("tau", "Image of an element in 2x2 matrices mod m");
    tau_cmd->add_option("-m", o.modulus, "Odd modulus")->required();
    tau_cmd->add_option("quat", o.quat_a)->required();

    auto* primary_cmd = app.add_subcommand("primary", "Unit and primary associate of an odd element");
    primary_cmd->add_option("quat", o.quat_a)->required();
    primary_cmd->add_option("--side", o.side, "left or right")->transform(CLI::CheckedTransformer(kSides, CLI::ignore_case));

    auto* primes = app.add_subcommand("primes", "Primary primes of norm p (all 24 for p = 2)");
    primes->add_option("-p", o.prime, "Rational prime")->required();

    auto* verify = app.add_subcommand("verify", "Sweep closed formulas against the brute-force oracle");
    verify->add_option("--max-n", o.max_n, "Largest n to check")->required();
    verify->add_option("--workers", o.workers, "Threads for the oracle")->check(CLI::Range(1U, 256U));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArguments;
    }

    try {
        if (count->parsed()) return cmd_count(o, out);
        if (factor->parsed()) return cmd_factor(o, out);
        if (gcd_cmd->parsed()) return cmd_gcd(o, out);
        if (tau_cmd->parsed()) return cmd_tau(o, out);
        if (primary_cmd->parsed()) return cmd_primary(o, out);
        if (primes->parsed()) return cmd_primes(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArguments;
    } catch (const Overflow& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArguments;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    err << "error: no command\n";
    return kInvalidArguments;
}

}  // namespace hquat::cli
