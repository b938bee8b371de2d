#include "cremona/api.hpp"
#include "cremona/parse.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using cremona::api::json;

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitUsageError = 2;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

void print_report(const json& report) {
    for (const auto& c : report.at("checks")) {
        std::cout << (c.at("pass").get<bool>() ? "  [ok]   " : "  [FAIL] ")
                  << c.at("name").get<std::string>();
        auto detail = c.at("detail").get<std::string>();
        if (!detail.empty())
            std::cout << ": " << detail;
        std::cout << "\n";
    }
}

void print_fixed_curve(const json& c) {
    std::cout << "fixed curve: w^2 = " << c.at("branch").get<std::string>()
              << "\n  flag: " << c.at("flag").get<std::string>();
    if (!c.at("genus").is_null())
        std::cout << ", genus " << c.at("genus").get<unsigned>();
    std::cout << ", real components: " << c.at("real_components").get<unsigned>()
              << "\n";
}

void print_decision(const json& d) {
    std::cout << "verdict: " << d.at("verdict").get<std::string>() << "\n";
    if (!d.at("witnesses").is_null())
        std::cout << "witnesses: lambda = "
                  << d.at("witnesses").at("lambda").get<std::string>()
                  << ", mu = " << d.at("witnesses").at("mu").get<std::string>()
                  << "\n";
    if (!d.at("failed_condition").is_null())
        std::cout << "failed condition: "
                  << d.at("failed_condition").get<std::string>() << "\n";
    if (d.at("extended").get<bool>())
        std::cout << "(extended Mobius mode)\n";
    std::cout << d.at("notes").get<std::string>() << "\n";
}

std::vector<std::pair<std::string, std::string>> parse_pairs(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream is(text);
    std::string chunk;
    while (std::getline(is, chunk, ';')) {
        if (chunk.empty())
            continue;
        auto comma = chunk.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("pair '" + chunk + "' needs 'a,b'");
        out.emplace_back(chunk.substr(0, comma), chunk.substr(comma + 1));
    }
    if (out.empty())
        throw std::invalid_argument("--pairs needs at least one 'a,b' entry");
    return out;
}

}

int main(int argc, char** argv) {
    CLI::App app{"exact conic-bundle models of birational involutions of the real plane"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    std::string A = "0", B = "0", C = "0", H = "0", f, pairs_text, point;
    unsigned samples = 0;
    std::uint64_t seed = 0;
    bool up_to_mobius = false, base_points = false, self_check = false;
    std::string model1_path, model2_path;

    auto add_model_flags = [&](CLI::App* cmd) {
        cmd->add_option("--A", A, "coefficient of x^2 (polynomial in t)");
        cmd->add_option("--B", B, "coefficient of xy");
        cmd->add_option("--C", C, "coefficient of y^2");
        cmd->add_option("--H", H, "coefficient of z^2");
    };

    CLI::App* validate = app.add_subcommand(
        "validate", "validate a conic bundle model A x^2 + B xy + C y^2 = H z^2");
    add_model_flags(validate);

    CLI::App* invariants = app.add_subcommand(
        "invariants", "fixed curve, real locus and classification of a model");
    add_model_flags(invariants);
    invariants->add_option("--samples", samples,
                           "cross-check the locus against a numeric oracle");
    invariants->add_option("--seed", seed, "seed for the oracle samples");

    CLI::App* classify = app.add_subcommand("classify", "classification label only");
    add_model_flags(classify);

    CLI::App* compare = app.add_subcommand(
        "compare", "decide G-equivariant birational equivalence of two models");
    compare->add_option("model1", model1_path, "first model JSON file")->required();
    compare->add_option("model2", model2_path, "second model JSON file")->required();
    compare->add_flag("--up-to-mobius", up_to_mobius,
                      "also search Mobius changes of the base coordinate");

    CLI::App* family = app.add_subcommand(
        "family", "pairwise comparison of the family x^2 + f y^2 = -(t-a)(t-b) z^2");
    family->add_option("--f", f, "even-degree squarefree polynomial")->required();
    family->add_option("--pairs", pairs_text, "parameters \"a1,b1;a2,b2;...\"")
        ->required();

    CLI::App* cremona_cmd = app.add_subcommand(
        "cremona", "standard Cremona involution playground");
    cremona_cmd->add_option("--apply", point, "apply to a point \"x,y,z\"");
    cremona_cmd->add_flag("--base-points", base_points, "list the base points");
    cremona_cmd->add_flag("--self-check", self_check,
                          "verify the involution on random points");
    cremona_cmd->add_option("--samples", samples, "sample count for --self-check");
    cremona_cmd->add_option("--seed", seed, "seed for --self-check");

    CLI::App* dejonquieres = app.add_subcommand(
        "dejonquieres", "invariants of the de Jonquieres model xy = f(z,t)");
    dejonquieres->add_option("--f", f, "even-degree squarefree polynomial")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsageError;
    }

    try {
        json out;
        int status = kExitOk;

        if (validate->parsed()) {
            out = cremona::api::validate(A, B, C, H);
            status = out.at("valid").get<bool>() ? kExitOk : kExitValidationFailure;
            if (!as_json) {
                print_report(out.at("report"));
                if (out.contains("normal_form")) {
                    std::cout << "Delta = " << out.at("delta").get<std::string>()
                              << "\nIskovskikh normal form checks:\n";
                    print_report(out.at("normal_form"));
                }
                std::cout << (status == kExitOk ? "valid" : "invalid") << "\n";
            }
        } else if (invariants->parsed()) {
            out = cremona::api::invariants(A, B, C, H, samples, seed);
            if (!as_json) {
                print_fixed_curve(out.at("fixed_curve"));
                std::cout << "real locus: "
                          << out.at("real_locus_text").get<std::string>() << "\n";
                if (!out.at("classification").is_null())
                    std::cout << "class: "
                              << out.at("classification").at("label").get<std::string>()
                              << "\n";
                else
                    std::cout << "class: "
                              << out.at("classification_error").get<std::string>()
                              << "\n";
                if (out.contains("oracle")) {
                    const auto& o = out.at("oracle");
                    std::cout << "oracle agreement: " << o.at("agreed")
                              << "/" << o.at("tested") << " (seed "
                              << o.at("seed") << ")\n";
                }
            }
        } else if (classify->parsed()) {
            out = cremona::api::classify_model(A, B, C, H);
            if (!as_json)
                std::cout << out.at("label").get<std::string>() << "\n";
        } else if (compare->parsed()) {
            out = cremona::api::compare(read_json_file(model1_path),
                                        read_json_file(model2_path), up_to_mobius);
            if (!as_json)
                print_decision(out);
        } else if (family->parsed()) {
            out = cremona::api::family_demo(f, parse_pairs(pairs_text));
            if (!as_json) {
                std::cout << "f = " << out.at("f").get<std::string>() << "\n";
                print_fixed_curve(out.at("shared_fixed_curve"));
                std::cout << "valid pairs: " << out.at("valid_count")
                          << ", comparisons: " << out.at("comparisons").size()
                          << " (not_equivalent: " << out.at("not_equivalent_count")
                          << ", equivalent: " << out.at("equivalent_count")
                          << ", undecided: " << out.at("undecided_count") << ")\n";
                std::cout << "all distinct root sets non-equivalent: "
                          << (out.at("all_distinct_rootsets_nonequivalent").get<bool>()
                                  ? "yes" : "no")
                          << "\n" << out.at("caveat").get<std::string>() << "\n";
            }
        } else if (cremona_cmd->parsed()) {
            if (!point.empty()) {
                out = cremona::api::cremona_apply(point);
                if (!as_json) {
                    if (out.at("base_point").get<bool>())
                        std::cout << "base point: " << out.at("input").get<std::string>()
                                  << "\n";
                    else
                        std::cout << out.at("image").get<std::string>() << "\n";
                }
            } else if (base_points) {
                out = cremona::api::cremona_base_points();
                if (!as_json)
                    for (const auto& p : out.at("base_points"))
                        std::cout << p.get<std::string>() << "\n";
            } else if (self_check) {
                out = cremona::api::cremona_self_check(samples ? samples : 100, seed);
                if (!as_json)
                    std::cout << "involution on " << out.at("samples") << " samples: "
                              << (out.at("involution_on_samples").get<bool>() ? "yes" : "no")
                              << "\nalpha o alpha reduces to the identity: "
                              << (out.at("square_reduces_to_identity").get<bool>() ? "yes" : "no")
                              << "\n";
            } else {
                std::cerr << "cremona: pass --apply, --base-points or --self-check\n";
                return kExitUsageError;
            }
        } else if (dejonquieres->parsed()) {
            out = cremona::api::dejonquieres(f);
            status = out.at("valid").get<bool>() ? kExitOk : kExitValidationFailure;
            if (!as_json) {
                print_report(out.at("report"));
                if (out.contains("fixed_curve"))
                    print_fixed_curve(out.at("fixed_curve"));
            }
        }

        if (as_json)
            std::cout << out.dump(2) << "\n";
        return status;
    } catch (const cremona::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidationFailure;
    }
}
