#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bierflag/complex.hpp"
#include "bierflag/corpus.hpp"
#include "bierflag/error.hpp"
#include "bierflag/polynomial.hpp"

namespace bierflag {

struct RunConfig {
    std::vector<std::uint32_t> characteristics{0, 2, 3, 5};
    int i_max = 4;
    int degree_cap = 6;
    std::uint64_t node_budget = 10'000'000;
    std::uint64_t seed = 0;
    std::string format = "json";  // json, table, m2, singular
    bool artinian = false;
    bool all_binomials = false;
    std::optional<std::string> order;  // facet names separated by commas
    bool search = false;
    int sample_orders = 0;
    bool keep_log = false;

    /// Throws BadParams on a nonpositive bound or a non-prime characteristic.
    void validate() const;
};

enum ExitCode : int {
    kExitOk = 0,
    kExitOther = 1,
    kExitInput = 2,
    kExitPrecondition = 3,
    kExitBudget = 4,
    kExitVerification = 5,
};
int exit_code_for(ErrorKind kind);

/// A file path, or builtin:NAME with optional :p1,p2 parameters.
SimplicialComplex load_complex_arg(const std::string& arg);

/// Parses "a*b^2*c" over the given variable names. Each name may also be
/// matched with ':' or '_' removed.
Monomial parse_monomial(const std::string& text, const std::vector<std::string>& names);

nlohmann::json cmd_analyze(const SimplicialComplex& delta, const RunConfig& cfg);
std::string cmd_present(const SimplicialComplex& delta, const RunConfig& cfg);
nlohmann::json cmd_gb(const SimplicialComplex& delta, const RunConfig& cfg);
nlohmann::json cmd_shelling(const SimplicialComplex& delta, const RunConfig& cfg);
/// mode is hochster, gamma-module or poincare. The input is a complex, an
/// ideal {"variables", "generators"}, or {"complex", "module"}.
nlohmann::json cmd_betti(const nlohmann::json& input, const std::string& mode, const RunConfig& cfg);
nlohmann::json cmd_gamma(const SimplicialComplex& delta, const RunConfig& cfg);
nlohmann::json cmd_gamma_h(const std::vector<std::int64_t>& h, const RunConfig& cfg);

/// Runs the equivalence checks on one complex; the result has "green" and
/// per-check booleans, plus "diffs" against an optional "expect" object.
nlohmann::json verify_complex(const NamedComplex& c, const nlohmann::json& expect, const RunConfig& cfg);
nlohmann::json cmd_verify(const std::string& corpus_dir, const RunConfig& cfg);

/// Human-readable rendering of a command result for --format table.
std::string render_table(const nlohmann::json& result);

}  // namespace bierflag
