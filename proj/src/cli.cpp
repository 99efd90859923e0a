#include "gpd/cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpd/error.hpp"
#include "gpd/hyper.hpp"
#include "gpd/parse.hpp"
#include "gpd/realize.hpp"
#include "gpd/series.hpp"
#include "gpd/species.hpp"

namespace gpd::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
    std::string command;
    std::string upper;
    std::string lower;
    std::size_t order = 16;
    std::string format = "text";
    std::string basis = "egf";
    std::string interpretation = "product";
    std::string strategy = "factors";
    std::string mode = "symbolic";
    std::string expression;
    std::optional<std::uint64_t> max_objects;
    std::optional<std::uint64_t> max_morphisms;
    std::optional<std::string> expect;
};

ResourceCaps resolve_caps(const Config& config) {
    ResourceCaps caps;
    if (const char* env = std::getenv("GPD_MAX_OBJECTS")) {
        try {
            std::size_t used = 0;
            caps.max_objects = std::stoull(env, &used);
            if (used != std::string(env).size())
                throw std::invalid_argument(env);
        } catch (const std::exception&) {
            throw Error(std::string("GPD_MAX_OBJECTS is not a natural number: ") + env);
        }
    }
    if (config.max_objects)
        caps.max_objects = *config.max_objects;
    if (config.max_morphisms)
        caps.max_morphisms = *config.max_morphisms;
    if (caps.max_objects < 1 || caps.max_morphisms < 1)
        throw Error("resource caps must be at least 1");
    return caps;
}

Json string_array(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const Rational& v : values)
        out.push_back(v.to_string());
    return out;
}

Json params_json(const HyperParams& params) {
    Json upper = Json::array(), lower = Json::array();
    for (const PositiveFraction& p : params.upper)
        upper.push_back(p.to_string());
    for (const PositiveFraction& p : params.lower)
        lower.push_back(p.to_string());
    return Json{{"upper", upper}, {"lower", lower}};
}

Json envelope(const std::string& command, const HyperParams& params, std::size_t order, const std::string& basis,
              const std::vector<Rational>& coefficients) {
    Json j;
    j["command"] = command;
    j["params"] = params_json(params);
    j["order"] = order;
    j["basis"] = basis;
    j["coefficients"] = string_array(coefficients);
    j["verified"] = nullptr;
    j["per_n"] = nullptr;
    return j;
}

std::string joined(const std::vector<Rational>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i > 0 ? ", " : "") + values[i].to_string();
    return out;
}

std::vector<Rational> in_basis(const EgfSeries& series, const std::string& basis) {
    return basis == "ordinary" ? series.ordinary() : series.coefficients();
}

// Compares against --expect. Returns nullopt when nothing was expected.
std::optional<bool> check_expected(const Config& config, const std::vector<Rational>& coefficients, std::ostream& err) {
    if (!config.expect)
        return std::nullopt;
    std::vector<Rational> expected;
    std::string_view rest = *config.expect;
    while (!rest.empty()) {
        const std::size_t comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        while (!item.empty() && item.front() == ' ')
            item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ')
            item.remove_suffix(1);
        expected.push_back(Rational::parse(item));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (expected.size() != coefficients.size()) {
        err << "mismatch: expected " << expected.size() << " coefficients, computed " << coefficients.size() << '\n';
        return false;
    }
    for (std::size_t n = 0; n < expected.size(); ++n)
        if (expected[n] != coefficients[n]) {
            err << "mismatch at n = " << n << ": expected " << expected[n] << ", computed " << coefficients[n] << '\n';
            return false;
        }
    return true;
}

int emit_series(const Config& config, Json j, const std::vector<Rational>& coefficients, std::ostream& out,
                std::ostream& err) {
    const std::optional<bool> verified = check_expected(config, coefficients, err);
    if (config.format == "json") {
        if (verified)
            j["verified"] = *verified;
        out << j.dump(2) << '\n';
    } else {
        out << joined(coefficients) << '\n';
    }
    return verified.value_or(true) ? kSuccess : kMismatch;
}

HyperParams read_params(const Config& config) {
    return HyperParams{parse_fraction_list(config.upper), parse_fraction_list(config.lower)};
}

int run_coeffs(const Config& config, std::ostream& out, std::ostream& err) {
    const HyperParams params = read_params(config);
    const EgfSeries series =
        hypergeometric_series(params.upper_values(), params.lower_values(), config.order);
    const std::vector<Rational> coefficients = in_basis(series, config.basis);
    return emit_series(config, envelope("coeffs", params, config.order, config.basis, coefficients), coefficients,
                       out, err);
}

int run_verify(const Config& config, std::ostream& out, std::ostream& err) {
    const HyperParams params = read_params(config);
    VerifyOptions options;
    options.caps = resolve_caps(config);
    options.strategy = config.strategy == "whole"     ? VerifyStrategy::Whole
                       : config.strategy == "factored" ? VerifyStrategy::Factored
                                                       : VerifyStrategy::PerFactor;
    const Interpretation interpretation =
        config.interpretation == "alt" ? Interpretation::Alternative : Interpretation::Product;
    const VerificationReport report = verify_theorem(params, config.order, interpretation, options);

    const int code = report.overflow ? kResourceLimit : report.passed() ? kSuccess : kMismatch;
    if (config.format == "json") {
        std::vector<Rational> analytic;
        Json rows = Json::array();
        for (const VerificationRow& row : report.rows) {
            analytic.push_back(row.analytic);
            rows.push_back(Json{{"n", row.n},
                                {"explicit", row.explicit_value.to_string()},
                                {"symbolic", row.symbolic.to_string()},
                                {"analytic", row.analytic.to_string()},
                                {"pass", row.pass}});
        }
        Json j = envelope("verify", params, config.order, "egf", analytic);
        j["verified"] = report.passed();
        j["per_n"] = rows;
        if (report.overflow)
            j["overflow"] = Json{{"n", report.overflow->n}, {"message", report.overflow->message}};
        out << j.dump(2) << '\n';
    } else {
        out << "n\texplicit\tsymbolic\tanalytic\tpass\n";
        for (const VerificationRow& row : report.rows)
            out << row.n << '\t' << row.explicit_value << '\t' << row.symbolic << '\t' << row.analytic << '\t'
                << (row.pass ? "yes" : "NO") << '\n';
        if (const VerificationRow* bad = report.first_failure())
            out << "mismatch at n = " << bad->n << ": explicit " << bad->explicit_value << ", symbolic "
                << bad->symbolic << ", analytic " << bad->analytic << '\n';
        else if (!report.overflow)
            out << "verified\n";
    }
    if (report.overflow)
        err << "resource limit at n = " << report.overflow->n << ": " << report.overflow->message << '\n';
    return code;
}

int run_card(const Config& config, std::ostream& out) {
    const GroupoidExpr e = parse_groupoid_expr(config.expression);
    Json j = envelope("card", HyperParams{}, 0, "egf", {});
    j["expression"] = e.to_string();
    j["mode"] = config.mode;
    if (config.mode == "symbolic") {
        j["coefficients"] = string_array({cardinality_expr(e)});
        if (config.format == "json")
            out << j.dump(2) << '\n';
        else
            out << cardinality_expr(e) << '\n';
        return kSuccess;
    }

    const ExplicitGroupoid g = realize(e, resolve_caps(config));
    const CardinalityReport report = cardinality_explicit(g);
    if (config.format == "json") {
        Json classes = Json::array();
        for (const IsoClass& c : report.classes)
            classes.push_back(Json{{"representative", g.label(c.representative).to_string()},
                                   {"automorphisms", c.automorphism_order}});
        j["coefficients"] = string_array({report.total});
        j["classes"] = classes;
        out << j.dump(2) << '\n';
    } else {
        out << report.total << '\n' << "classes: " << report.iso_class_count << '\n';
        for (const IsoClass& c : report.classes)
            out << "  " << g.label(c.representative).to_string() << "\t|Aut| = " << c.automorphism_order << '\n';
    }
    return kSuccess;
}

int run_species(const Config& config, std::ostream& out, std::ostream& err) {
    const Species s = parse_species_expr(config.expression);
    const std::vector<Rational> coefficients = in_basis(valuation(s, config.order), config.basis);
    Json j = envelope("species", HyperParams{}, config.order, config.basis, coefficients);
    j["expression"] = s.to_string();
    return emit_series(config, std::move(j), coefficients, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config config;
    CLI::App app{"Groupoid cardinalities, species valuations and hypergeometric coefficients", "gpd"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", config.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_series_options = [&](CLI::App* sub) {
        sub->add_option("--order", config.order, "Highest coefficient index")->capture_default_str();
        sub->add_option("--basis", config.basis, "egf: a_n of x^n/n!; ordinary: a_n/n!")
            ->check(CLI::IsMember({"egf", "ordinary"}));
        sub->add_option("--expect", config.expect,
                        "Comma-separated expected coefficients; exit 1 when they differ");
        add_format(sub);
    };
    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--upper", config.upper, "Upper parameters, e.g. 1/2,3/4");
        sub->add_option("--lower", config.lower, "Lower parameters, e.g. 5/6");
    };
    auto add_caps = [&](CLI::App* sub) {
        sub->add_option("--max-objects", config.max_objects, "Object cap for realization");
        sub->add_option("--max-morphisms", config.max_morphisms, "Morphism cap for realization");
    };

    CLI::App* coeffs = app.add_subcommand("coeffs", "Hypergeometric series coefficients");
    add_params(coeffs);
    add_series_options(coeffs);

    CLI::App* verify = app.add_subcommand("verify", "Check |H(params)[n]| against the hypergeometric coefficients");
    add_params(verify);
    verify->add_option("--order", config.order, "Largest n checked")->capture_default_str();
    verify->add_option("--interpretation", config.interpretation)->check(CLI::IsMember({"product", "alt"}));
    verify->add_option("--strategy", config.strategy,
                       "whole: realize each value; factors: realize each H factor when the value is over the caps; "
                       "factored: also split over-cap factors into their products")
        ->capture_default_str()
        ->check(CLI::IsMember({"whole", "factors", "factored"}));
    add_caps(verify);
    add_format(verify);

    CLI::App* card = app.add_subcommand("card", "Cardinality of a groupoid expression");
    card->add_option("expression", config.expression)->required();
    card->add_option("--mode", config.mode)->check(CLI::IsMember({"symbolic", "explicit"}));
    add_caps(card);
    add_format(card);

    CLI::App* species = app.add_subcommand("species", "Valuation of a species expression");
    species->add_option("expression", config.expression)->required();
    add_series_options(species);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (coeffs->parsed())
            return run_coeffs(config, out, err);
        if (verify->parsed())
            return run_verify(config, out, err);
        if (card->parsed())
            return run_card(config, out);
        return run_species(config, out, err);
    } catch (const ResourceLimitExceeded& e) {
        err << "resource limit: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace gpd::cli
