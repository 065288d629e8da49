#include "equifreq/cli.hpp"

#include "equifreq/cascades.hpp"
#include "equifreq/errors.hpp"
#include "equifreq/identities.hpp"
#include "equifreq/numeric.hpp"
#include "equifreq/physics.hpp"
#include "equifreq/records.hpp"
#include "equifreq/transitions.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace equifreq::cli {

namespace {

using records::Format;

// ------------------------------------------------------------ utilities ----

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_positive_double(const std::string& text, const std::string& what) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw ParseError(what + ": not a number: '" + text + "'");
    }
    if (pos != text.size()) throw ParseError(what + ": not a number: '" + text + "'");
    if (!std::isfinite(v) || v <= 0.0) {
        throw ParseError(what + ": must be finite and positive, got '" + text + "'");
    }
    return v;
}

std::optional<double> rydberg_from_config(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open config file '" + path + "'");
    std::optional<double> found;
    std::string line;
    while (std::getline(file, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError("config line is not key=value: '" + line + "'");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "rydberg") {
            found = parse_positive_double(value, "config key rydberg");
        } else {
            throw ParseError("unknown config key '" + key + "'");
        }
    }
    return found;
}

// Precedence: explicit flag, then explicit config file, then environment,
// then the built-in hydrogen value.
double resolve_rydberg(const std::optional<std::string>& flag_value,
                       const std::optional<std::string>& config_path) {
    if (flag_value) return parse_positive_double(*flag_value, "--rydberg");
    if (config_path) {
        if (auto v = rydberg_from_config(*config_path)) return *v;
    }
    if (const char* env = std::getenv("EQUIFREQ_RYDBERG")) {
        return parse_positive_double(env, "EQUIFREQ_RYDBERG");
    }
    return kRydbergHydrogen;
}

bool identity_is_primitive(const SquareIdentity& id) {
    using boost::multiprecision::gcd;
    BigInt g = gcd(gcd(id.side1()[0], id.side1()[1]),
                   gcd(id.side2()[0], id.side2()[1]));
    return g == 1;
}

// A level argument in `verify`: a positive integer, or the ionized limit.
struct LevelArg {
    bool infinite = false;
    BigInt value;
};

LevelArg parse_level(const std::string& token, bool allow_ionized) {
    if (token == "inf") {
        if (!allow_ionized) throw ParseError("level 'inf' requires --allow-ionized");
        return {true, 0};
    }
    return {false, parse_bigint(token)};
}

std::string level_str(const LevelArg& level) {
    return level.infinite ? "inf" : level.value.str();
}

void json_level_field(records::JsonObject& obj, const char* key, const LevelArg& level) {
    if (level.infinite) {
        obj.field_string(key, "inf");
    } else {
        obj.field(key, level.value);
    }
}

// 1/n^2 - 1/N^2 where the upper level may be ionized (contributing zero).
Rational ionized_delta(const LevelArg& upper, const LevelArg& lower) {
    if (lower.infinite) {
        throw InvalidTransition("only an upper level may be 'inf'");
    }
    if (lower.value < 1) {
        throw InvalidTransition("levels must be >= 1, got " + lower.value.str());
    }
    Rational d(1, lower.value * lower.value);
    if (!upper.infinite) {
        if (upper.value <= lower.value) {
            throw InvalidTransition("transition requires N > n >= 1, got N=" +
                                    upper.value.str() + " n=" + lower.value.str());
        }
        d -= Rational(1, upper.value * upper.value);
    }
    return d;
}

// ------------------------------------------------------------- commands ----

int cmd_pairs(const BigInt& max_level, Format fmt, std::ostream& out, std::ostream& err) {
    auto pairs = enumerate_pairs(max_level);
    if (fmt == Format::csv) out << records::kPairCsvHeader << '\n';
    for (const auto& p : pairs) {
        switch (fmt) {
            case Format::text: out << records::pair_text(p) << '\n'; break;
            case Format::json: out << records::pair_json(p) << '\n'; break;
            case Format::csv: out << records::pair_csv_row(p) << '\n'; break;
        }
    }
    if (pairs.empty()) {
        err << "no results\n";
        return 1;
    }
    return 0;
}

int cmd_verify(const std::vector<std::string>& levels, bool allow_ionized, Format fmt,
               std::ostream& out, std::ostream& err) {
    LevelArg N1 = parse_level(levels[0], allow_ionized);
    LevelArg n1 = parse_level(levels[1], allow_ionized);
    LevelArg N2 = parse_level(levels[2], allow_ionized);
    LevelArg n2 = parse_level(levels[3], allow_ionized);
    int infinite = int(N1.infinite) + int(n1.infinite) + int(N2.infinite) + int(n2.infinite);
    if (infinite > 1) throw ParseError("at most one level may be 'inf'");

    const Rational d1 = ionized_delta(N1, n1);
    const Rational d2 = ionized_delta(N2, n2);
    const bool equal = d1 == d2;

    switch (fmt) {
        case Format::text:
            if (equal) {
                out << "equal (delta = " << fraction_str(d1) << ")\n";
            } else {
                out << "not equal\n";
            }
            break;
        case Format::json: {
            records::JsonObject obj;
            obj.field("equal", equal);
            json_level_field(obj, "n1", n1);
            json_level_field(obj, "N1", N1);
            json_level_field(obj, "n2", n2);
            json_level_field(obj, "N2", N2);
            if (equal) {
                obj.field("delta_num", numerator(d1));
                obj.field("delta_den", denominator(d1));
            } else {
                obj.field("delta1_num", numerator(d1));
                obj.field("delta1_den", denominator(d1));
                obj.field("delta2_num", numerator(d2));
                obj.field("delta2_den", denominator(d2));
            }
            out << obj.str() << '\n';
            break;
        }
        case Format::csv:
            out << "equal,n1,N1,n2,N2,delta_num,delta_den\n";
            out << (equal ? "true" : "false") << ',' << level_str(n1) << ',' << level_str(N1)
                << ',' << level_str(n2) << ',' << level_str(N2) << ',';
            if (equal) {
                out << numerator(d1).str() << ',' << denominator(d1).str();
            } else {
                out << ',';
            }
            out << '\n';
            break;
    }
    (void)err;
    return equal ? 0 : 1;
}

int cmd_expand(const BFParams& params, Format fmt, std::ostream& out) {
    const SquareIdentity id = bf_expand(params);

    std::optional<BFParams> recovered;
    if (id.norm() > 0) recovered = recover_params(id);

    std::vector<TransitionPair> pairs;
    std::string no_pairs_reason;
    try {
        pairs = identity_to_pairs(id);
    } catch (const ZeroEntry&) {
        no_pairs_reason = "zero entry; ionized states excluded";
    } catch (const DegenerateIdentity&) {
        no_pairs_reason = "degenerate identity";
    }

    switch (fmt) {
        case Format::text:
            out << "identity: " << records::identity_text(id) << '\n';
            if (recovered) {
                out << "params: " << records::params_text(*recovered) << '\n';
            } else {
                out << "params: none (zero identity)\n";
            }
            for (const auto& p : pairs) out << "pair: " << records::pair_text(p) << '\n';
            if (!no_pairs_reason.empty()) out << "pairs: none (" << no_pairs_reason << ")\n";
            break;
        case Format::json: {
            std::string pair_array = "[";
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if (i) pair_array += ',';
                pair_array += records::pair_json(pairs[i]);
            }
            pair_array += ']';
            records::JsonObject obj;
            obj.field_raw("identity", records::identity_json(id));
            obj.field_raw("params", recovered ? records::params_json(*recovered) : "null");
            obj.field_raw("pairs", pair_array);
            out << obj.str() << '\n';
            break;
        }
        case Format::csv:
            out << records::kPairCsvHeader << '\n';
            for (const auto& p : pairs) out << records::pair_csv_row(p) << '\n';
            break;
    }
    return 0;
}

int cmd_recover(const SquareIdentity& id, Format fmt, std::ostream& out) {
    const BFParams params = recover_params(id);
    switch (fmt) {
        case Format::text:
            out << "identity: " << records::identity_text(id) << '\n';
            out << "params: " << records::params_text(params) << '\n';
            break;
        case Format::json: {
            records::JsonObject obj;
            obj.field_raw("identity", records::identity_json(id));
            obj.field_raw("params", records::params_json(params));
            out << obj.str() << '\n';
            break;
        }
        case Format::csv:
            out << records::kParamsCsvHeader << '\n';
            out << records::params_csv_row(params) << '\n';
            break;
    }
    return 0;
}

int cmd_identities(const BigInt& max_entry, bool primitive_only, Format fmt,
                   std::ostream& out, std::ostream& err) {
    auto ids = enumerate_identities(max_entry);
    if (primitive_only) {
        std::erase_if(ids, [](const SquareIdentity& id) { return !identity_is_primitive(id); });
    }
    if (fmt == Format::csv) out << records::kIdentityCsvHeader << '\n';
    for (const auto& id : ids) {
        switch (fmt) {
            case Format::text: out << records::identity_text(id) << '\n'; break;
            case Format::json: out << records::identity_json(id) << '\n'; break;
            case Format::csv: out << records::identity_csv_row(id) << '\n'; break;
        }
    }
    if (ids.empty()) {
        err << "no results\n";
        return 1;
    }
    return 0;
}

int cmd_cascades(const BigInt& max_level, bool primitive_only, Format fmt,
                 std::ostream& out, std::ostream& err) {
    auto cascades = find_cascades(max_level);
    if (primitive_only) {
        std::erase_if(cascades, [](const CascadeLevels& c) { return !c.primitive(); });
    }
    if (fmt == Format::csv) out << records::kCascadeCsvHeader << '\n';
    for (const auto& c : cascades) {
        switch (fmt) {
            case Format::text: out << records::cascade_text(c) << '\n'; break;
            case Format::json: out << records::cascade_json(c) << '\n'; break;
            case Format::csv: out << records::cascade_csv_row(c) << '\n'; break;
        }
    }
    if (cascades.empty()) {
        err << "no results\n";
        return 1;
    }
    return 0;
}

int cmd_cascade_params(const APParams& params, Format fmt, std::ostream& out) {
    const SquareTriple triple = ap_triple(params);
    const CascadeLevels cascade = triple_to_cascade(triple);
    const CirclePoint circle = circle_from_triple(triple);
    switch (fmt) {
        case Format::text:
            out << "triple: " << records::triple_text(triple) << '\n';
            out << "cascade: " << records::cascade_text(cascade) << '\n';
            out << "circle: " << records::circle_text(circle) << '\n';
            break;
        case Format::json: {
            records::JsonObject obj;
            obj.field_raw("triple", records::triple_json(triple));
            obj.field_raw("cascade", records::cascade_json(cascade));
            obj.field_raw("circle", records::circle_json(circle));
            out << obj.str() << '\n';
            break;
        }
        case Format::csv:
            out << records::kCascadeCsvHeader << '\n';
            out << records::cascade_csv_row(cascade) << '\n';
            break;
    }
    return 0;
}

int cmd_compose(const CirclePoint& a, const CirclePoint& b, Format fmt, std::ostream& out) {
    const CirclePoint product = compose(a, b);
    const SquareTriple triple = triple_from_circle(product);
    std::optional<CascadeLevels> cascade;
    if (!triple.degenerate()) cascade = triple_to_cascade(triple);
    switch (fmt) {
        case Format::text:
            out << "product: " << records::circle_text(product) << '\n';
            out << "triple: " << records::triple_text(triple) << '\n';
            if (cascade) {
                out << "cascade: " << records::cascade_text(*cascade) << '\n';
            } else {
                out << "cascade: none (degenerate triple)\n";
            }
            break;
        case Format::json: {
            records::JsonObject obj;
            obj.field_raw("product", records::circle_json(product));
            obj.field_raw("triple", records::triple_json(triple));
            obj.field_raw("cascade", cascade ? records::cascade_json(*cascade) : "null");
            out << obj.str() << '\n';
            break;
        }
        case Format::csv:
            out << records::kCircleCsvHeader << '\n';
            out << records::circle_csv_row(product) << '\n';
            break;
    }
    return 0;
}

int cmd_no_four_term(const BigInt& max_level, Format fmt, std::ostream& out) {
    const FourTermReport report = assert_no_four_term(max_level);
    switch (fmt) {
        case Format::text:
            out << "no four-term equal-step chains up to " << report.max_level.str() << " ("
                << report.cascades_checked << " cascades checked)\n";
            break;
        case Format::json: {
            records::JsonObject obj;
            obj.field("max_level", report.max_level);
            obj.field("cascades_checked", report.cascades_checked);
            obj.field("four_term_found", std::size_t{0});
            out << obj.str() << '\n';
            break;
        }
        case Format::csv:
            out << "max_level,cascades_checked,four_term_found\n";
            out << report.max_level.str() << ',' << report.cascades_checked << ",0\n";
            break;
    }
    return 0;
}

int cmd_observe(const BigInt& upper, const BigInt& lower, double rydberg, Format fmt,
                std::ostream& out) {
    const Transition t(upper, lower);
    const PhotonObservables obs = photon_observables(t, PhysicalConstants{rydberg});
    switch (fmt) {
        case Format::text: out << records::observe_text(t, obs) << '\n'; break;
        case Format::json: out << records::observe_json(t, obs) << '\n'; break;
        case Format::csv:
            out << records::kObserveCsvHeader << '\n';
            out << records::observe_csv_row(t, obs) << '\n';
            break;
    }
    return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact search and certification of equal-frequency transition pairs "
                 "and cascades of the Bohr hydrogen atom",
                 "equifreq"};
    app.require_subcommand(1);
    app.footer(
        "Exit codes: 0 success or verified equal; 1 verified not-equal or an\n"
        "enumeration with no results; 2 usage or domain error.\n"
        "\n"
        "The Rydberg constant (per meter) used by `observe` resolves in order:\n"
        "--rydberg flag, config file given with --config (key=value lines, key\n"
        "`rydberg`), the EQUIFREQ_RYDBERG environment variable, then the built-in\n"
        "hydrogen value 1.0967758e7.\n"
        "\n"
        "All output is UTF-8 with newline-terminated records and is byte-for-byte\n"
        "deterministic for fixed inputs. JSON integers are exact (arbitrary\n"
        "precision); physics decimals carry 10 significant digits.");

    // Per-subcommand option storage. Strings, because levels and parameters
    // are arbitrary-precision and `verify` additionally accepts `inf`.
    struct {
        std::string max_level;
        std::string format = "text";
    } pairs_opt;
    struct {
        std::vector<std::string> levels;
        bool allow_ionized = false;
        std::string format = "text";
    } verify_opt;
    struct {
        std::vector<std::string> params;
        std::string format = "text";
    } expand_opt;
    struct {
        std::vector<std::string> entries;
        std::string format = "text";
    } recover_opt;
    struct {
        std::string max_entry;
        bool primitive_only = false;
        std::string format = "text";
    } identities_opt;
    struct {
        std::string max_level;
        bool primitive_only = false;
        std::string format = "text";
    } cascades_opt;
    struct {
        std::vector<std::string> params;
        std::string format = "text";
    } cparams_opt;
    struct {
        std::vector<std::string> points;
        std::string format = "text";
    } compose_opt;
    struct {
        std::string max_level;
        std::string format = "text";
    } nft_opt;
    struct {
        std::vector<std::string> levels;
        std::optional<std::string> rydberg;
        std::optional<std::string> config;
        std::string format = "text";
    } observe_opt;

    auto add_format = [](CLI::App* sub, std::string& target) {
        sub->add_option("--format", target, "Output format")
            ->capture_default_str()
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    CLI::App* sub_pairs = app.add_subcommand(
        "pairs", "Enumerate canonical equal-frequency pairs with all levels <= N. "
                 "CSV columns: n1,N1,n2,N2,delta_num,delta_den");
    sub_pairs->add_option("--max-level", pairs_opt.max_level, "Largest level to search")
        ->required();
    add_format(sub_pairs, pairs_opt.format);

    CLI::App* sub_verify = app.add_subcommand(
        "verify", "Check exactly whether N1->n1 and N2->n2 have the same energy "
                  "difference. With --allow-ionized one upper level may be `inf`. "
                  "CSV columns: equal,n1,N1,n2,N2,delta_num,delta_den");
    sub_verify->add_option("levels", verify_opt.levels, "N1 n1 N2 n2")
        ->expected(4)
        ->required();
    sub_verify->add_flag("--allow-ionized", verify_opt.allow_ionized,
                         "Admit one ionized (infinite) upper level written as `inf`");
    add_format(sub_verify, verify_opt.format);

    CLI::App* sub_expand = app.add_subcommand(
        "expand", "Expand parameters r s u v into a two-representation square "
                  "identity, its canonical parameters and its transition pairs. "
                  "CSV lists the pairs");
    sub_expand->add_option("params", expand_opt.params, "r s u v")->expected(4)->required();
    add_format(sub_expand, expand_opt.format);

    CLI::App* sub_recover = app.add_subcommand(
        "recover", "Recover canonical expansion parameters of the identity "
                   "A^2+B^2=C^2+D^2. CSV columns: r,s,u,v");
    sub_recover->add_option("entries", recover_opt.entries, "A B C D")->expected(4)->required();
    add_format(sub_recover, recover_opt.format);

    CLI::App* sub_identities = app.add_subcommand(
        "identities", "Enumerate nontrivial square identities with entries <= N. "
                      "CSV columns: A,B,C,D,norm");
    sub_identities->add_option("--max-entry", identities_opt.max_entry, "Largest entry")
        ->required();
    sub_identities->add_flag("--primitive-only", identities_opt.primitive_only,
                             "Only identities whose four entries are coprime");
    add_format(sub_identities, identities_opt.format);

    CLI::App* sub_cascades = app.add_subcommand(
        "cascades", "Enumerate equal-step cascades x0 < x1 < x2 <= N. "
                    "CSV columns: x0,x1,x2,delta_num,delta_den,primitive");
    sub_cascades->add_option("--max-level", cascades_opt.max_level, "Largest level to search")
        ->required();
    sub_cascades->add_flag("--primitive-only", cascades_opt.primitive_only,
                           "Only cascades whose three levels are coprime");
    add_format(sub_cascades, cascades_opt.format);

    CLI::App* sub_cparams = app.add_subcommand(
        "cascade-params", "Build the squares-in-progression triple for parameters "
                          "m > n > 0, with its cascade and circle point. CSV lists "
                          "the cascade");
    sub_cparams->add_option("params", cparams_opt.params, "m n")->expected(2)->required();
    add_format(sub_cparams, cparams_opt.format);

    CLI::App* sub_compose = app.add_subcommand(
        "compose", "Compose two rational circle points (p1 q1 r1) and (p2 q2 r2) "
                   "and read off the resulting triple and cascade. CSV lists the "
                   "product point: p,q,r");
    sub_compose->add_option("points", compose_opt.points, "p1 q1 r1 p2 q2 r2")
        ->expected(6)
        ->required();
    add_format(sub_compose, compose_opt.format);

    CLI::App* sub_nft = app.add_subcommand(
        "no-four-term", "Verify exhaustively that no four levels <= N form three "
                        "equal energy steps. CSV columns: max_level,cascades_checked,"
                        "four_term_found");
    sub_nft->add_option("--max-level", nft_opt.max_level, "Largest level to search")
        ->required();
    add_format(sub_nft, nft_opt.format);

    CLI::App* sub_observe = app.add_subcommand(
        "observe", "Photon observables of the transition N -> n. CSV columns: "
                   "n,N,delta_num,delta_den,wavelength_m,frequency_hz");
    sub_observe->add_option("levels", observe_opt.levels, "N n")->expected(2)->required();
    sub_observe->add_option("--rydberg", observe_opt.rydberg,
                            "Rydberg constant in 1/m (overrides config and environment)");
    sub_observe->add_option("--config", observe_opt.config,
                            "key=value config file; recognized key: rydberg");
    add_format(sub_observe, observe_opt.format);

    try {
        std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(sub_pairs)) {
            return cmd_pairs(parse_bigint(pairs_opt.max_level),
                             records::parse_format(pairs_opt.format), out, err);
        }
        if (app.got_subcommand(sub_verify)) {
            return cmd_verify(verify_opt.levels, verify_opt.allow_ionized,
                              records::parse_format(verify_opt.format), out, err);
        }
        if (app.got_subcommand(sub_expand)) {
            BFParams params{parse_bigint(expand_opt.params[0]), parse_bigint(expand_opt.params[1]),
                            parse_bigint(expand_opt.params[2]), parse_bigint(expand_opt.params[3])};
            return cmd_expand(params, records::parse_format(expand_opt.format), out);
        }
        if (app.got_subcommand(sub_recover)) {
            SquareIdentity id(parse_bigint(recover_opt.entries[0]),
                              parse_bigint(recover_opt.entries[1]),
                              parse_bigint(recover_opt.entries[2]),
                              parse_bigint(recover_opt.entries[3]));
            return cmd_recover(id, records::parse_format(recover_opt.format), out);
        }
        if (app.got_subcommand(sub_identities)) {
            return cmd_identities(parse_bigint(identities_opt.max_entry),
                                  identities_opt.primitive_only,
                                  records::parse_format(identities_opt.format), out, err);
        }
        if (app.got_subcommand(sub_cascades)) {
            return cmd_cascades(parse_bigint(cascades_opt.max_level),
                                cascades_opt.primitive_only,
                                records::parse_format(cascades_opt.format), out, err);
        }
        if (app.got_subcommand(sub_cparams)) {
            APParams params{parse_bigint(cparams_opt.params[0]),
                            parse_bigint(cparams_opt.params[1])};
            return cmd_cascade_params(params, records::parse_format(cparams_opt.format), out);
        }
        if (app.got_subcommand(sub_compose)) {
            CirclePoint a(parse_bigint(compose_opt.points[0]), parse_bigint(compose_opt.points[1]),
                          parse_bigint(compose_opt.points[2]));
            CirclePoint b(parse_bigint(compose_opt.points[3]), parse_bigint(compose_opt.points[4]),
                          parse_bigint(compose_opt.points[5]));
            return cmd_compose(a, b, records::parse_format(compose_opt.format), out);
        }
        if (app.got_subcommand(sub_nft)) {
            return cmd_no_four_term(parse_bigint(nft_opt.max_level),
                                    records::parse_format(nft_opt.format), out);
        }
        if (app.got_subcommand(sub_observe)) {
            return cmd_observe(parse_bigint(observe_opt.levels[0]),
                               parse_bigint(observe_opt.levels[1]),
                               resolve_rydberg(observe_opt.rydberg, observe_opt.config),
                               records::parse_format(observe_opt.format), out);
        }
        internal_check(false, "a required subcommand was parsed");
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;  // unreachable
}

}  // namespace equifreq::cli
