#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bierflag/cli.hpp"

using namespace bierflag;

namespace {

std::vector<std::uint32_t> parse_chars(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) {
        try {
            long v = std::stol(tok);
            if (v < 0) throw std::invalid_argument("negative");
            out.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::exception&) {
            throw Error(ErrorKind::BadParams, "bad characteristic " + tok);
        }
    }
    return out;
}

std::vector<std::int64_t> parse_h(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) {
        try {
            out.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "bad h-vector entry " + tok);
        }
    }
    if (out.empty()) throw Error(ErrorKind::EmptyInput, "empty h-vector");
    return out;
}

nlohmann::json load_json_arg(const std::string& arg) {
    if (arg.rfind("builtin:", 0) == 0) return load_complex_arg(arg).to_json();
    std::ifstream in(arg);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + arg);
    std::stringstream text;
    text << in.rdbuf();
    nlohmann::json j = nlohmann::json::parse(text.str(), nullptr, false);
    if (!j.is_discarded()) return j;
    // plain text complex, one facet per line
    return SimplicialComplex::parse(text.str()).to_json();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bier balls, idealizations and their homological invariants"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string chars = "0,2,3,5";
    std::string input, mode = "hochster", h_text;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--chars", chars, "comma-separated characteristics (0 for the rationals)");
        sub->add_option("--imax", cfg.i_max, "homological truncation");
        sub->add_option("--degree-cap", cfg.degree_cap, "degree cap for Buchberger");
        sub->add_option("--budget", cfg.node_budget, "node budget for order searches");
        sub->add_option("--seed", cfg.seed, "seed for random term orders");
        sub->add_option("--format", cfg.format, "json, table, m2 or singular");
    };
    auto* analyze = app.add_subcommand("analyze", "report invariants of a complex");
    auto* present = app.add_subcommand("present", "export the presentation of the idealization");
    auto* gb = app.add_subcommand("gb", "quadratic Groebner basis tests");
    auto* shelling = app.add_subcommand("shelling", "shelling search or check");
    auto* betti = app.add_subcommand("betti", "Betti tables and Poincare series");
    auto* gamma = app.add_subcommand("gamma", "gamma-vector of the idealization or of an h-vector");
    auto* verify = app.add_subcommand("verify", "run the equivalence harness on a corpus directory");
    for (auto* sub : {analyze, present, gb, shelling, betti, gamma, verify}) common(sub);
    for (auto* sub : {analyze, present, gb, shelling, betti})
        sub->add_option("input", input, "complex file or builtin:NAME[:params]")->required();
    gamma->add_option("input", input, "complex file or builtin:NAME[:params]");
    gamma->add_option("--h-vector", h_text, "comma-separated palindromic h-vector");
    verify->add_option("corpus", input, "directory of complex JSON files")->required();
    present->add_flag("--artinian", cfg.artinian, "substitute y by x");
    present->add_flag("--all-binomials", cfg.all_binomials, "keep every facet-pair binomial");
    for (auto* sub : {gb, shelling}) sub->add_option("--order", cfg.order, "facets in order, comma-separated");
    gb->add_flag("--search", cfg.search, "search facet orders directly");
    gb->add_option("--sample", cfg.sample_orders, "run Buchberger under this many seeded random orders");
    gb->add_flag("--log", cfg.keep_log, "include every S-pair reduction");
    betti->add_option("--mode", mode, "hochster, gamma-module or poincare");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        cfg.characteristics = parse_chars(chars);
        cfg.validate();
        nlohmann::json result;
        bool red = false;
        if (*present) {
            std::cout << cmd_present(load_complex_arg(input), cfg);
            return kExitOk;
        }
        if (*analyze) result = cmd_analyze(load_complex_arg(input), cfg);
        if (*gb) result = cmd_gb(load_complex_arg(input), cfg);
        if (*shelling) result = cmd_shelling(load_complex_arg(input), cfg);
        if (*betti) result = cmd_betti(load_json_arg(input), mode, cfg);
        if (*gamma) {
            if (!h_text.empty())
                result = cmd_gamma_h(parse_h(h_text), cfg);
            else if (!input.empty())
                result = cmd_gamma(load_complex_arg(input), cfg);
            else
                throw Error(ErrorKind::EmptyInput, "gamma needs a complex or --h-vector");
        }
        if (*verify) {
            result = cmd_verify(input, cfg);
            red = !result["green"].get<bool>();
        }
        if (cfg.format == "table")
            std::cout << render_table(result);
        else
            std::cout << result.dump(2) << "\n";
        return red ? kExitVerification : kExitOk;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: ParseError: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOther;
    }
}
