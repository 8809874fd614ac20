#pragma once

#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bierflag/bier.hpp"
#include "bierflag/complex.hpp"
#include "bierflag/field.hpp"
#include "bierflag/polynomial.hpp"
#include "bierflag/series.hpp"

namespace bierflag {

using Exponents = std::vector<std::uint16_t>;

/// Graded Betti numbers beta_{i,j} with an optional multigraded refinement.
struct BettiTable {
    std::map<std::pair<int, int>, std::int64_t> entries;
    std::map<std::pair<int, Exponents>, std::int64_t> multigraded;
    int i_max = INT_MAX;
    int j_max = INT_MAX;

    std::int64_t at(int i, int j) const;
    void add(int i, int j, std::int64_t v);
    void add(int i, const Exponents& m, std::int64_t v);
    bool empty() const { return entries.empty(); }
    /// max(j - i) over nonzero entries, or nullopt for the zero table.
    std::optional<int> regularity() const;
    /// Rows indexed by j - i, columns by i.
    std::string to_string() const;
    nlohmann::json to_json() const;
    bool operator==(const BettiTable& o) const { return entries == o.entries; }
};

/// Result of polarizing a monomial ideal: squarefree generators over new
/// variables, and the original variable of each new one.
struct Polarization {
    std::vector<VertexSet> generators;
    std::vector<std::size_t> origin;
    std::size_t original_nvars = 0;
};

Polarization polarize(const std::vector<Monomial>& generators);
/// Squarefree generators, minimalized, as bit masks over nvars variables.
std::vector<VertexSet> minimal_squarefree(std::vector<VertexSet> generators);

/// Betti numbers of a squarefree monomial ideal over the polynomial ring in
/// nvars variables, through homological degree i_max.
BettiTable hochster_betti(const std::vector<VertexSet>& generators, std::size_t nvars, const FieldSpec& field,
                          int i_max = INT_MAX);
/// Any monomial ideal; polarizes first and folds multidegrees back. With
/// polarize_input off, non-squarefree generators raise NotSquarefree.
BettiTable hochster_betti(const std::vector<Monomial>& generators, const FieldSpec& field, int i_max = INT_MAX,
                          bool polarize_input = true);

constexpr int kLinearThroughout = INT_MAX;
/// Largest k with beta_{i,j} = 0 for 1 <= i <= k and j > g + i, or
/// kLinearThroughout when no such entry exists in the table.
int linear_steps(const BettiTable& table, int generator_degree);

struct TeraiYanagawaCheck {
    bool serre = false;
    bool linear = false;
    int linear_steps = 0;
    bool agree() const { return serre == linear; }
};
/// (S_r) of delta against r-1 linear steps of its Alexander dual ideal.
TeraiYanagawaCheck check_terai_yanagawa(const SimplicialComplex& delta, const FieldSpec& field, int r);

/// A word over the vertices of a flag complex, in normal form, with the sign
/// relating it to the word it came from. An empty optional means the class is zero.
struct WordClass {
    std::vector<int> letters;
    int sign = 1;
};

/// Dual algebra of the face ring of a flag complex: letters anticommute
/// along edges, squares vanish, and non-edges are free.
class DualAlgebra {
public:
    explicit DualAlgebra(const SimplicialComplex& gamma);

    std::size_t num_letters() const { return adjacent_.size(); }
    bool adjacent(int a, int b) const { return (adjacent_[a] >> b) & 1; }
    const SimplicialComplex& complex() const { return gamma_; }

    /// Greedy lexicographically smallest representative with its sign, or
    /// nullopt when the class vanishes.
    std::optional<WordClass> normalize(const std::vector<int>& word) const;
    /// 0-based positions k whose letter commutes to the front.
    std::vector<int> head(const std::vector<int>& word) const;
    /// Normal forms of the nonzero classes of j-letter words.
    const std::vector<std::vector<int>>& basis(int j) const;
    /// Normal forms of nonzero classes whose letter counts are bounded by m,
    /// grouped by length 0..max_len.
    std::vector<std::vector<std::vector<int>>> basis_below(const Exponents& m, int max_len) const;

    std::string word_name(const std::vector<int>& word) const;

private:
    SimplicialComplex gamma_;
    std::vector<VertexSet> adjacent_;
    mutable std::vector<std::vector<std::vector<int>>> cache_;
};

/// One entry of the differential: coefficient times a vertex of gamma, landing
/// on a target basis word.
struct GkEntry {
    std::size_t source;
    std::size_t target;
    int coefficient;
    int variable;
};

struct GkDifferential {
    std::vector<std::vector<int>> source_basis;
    std::vector<std::vector<int>> target_basis;
    std::vector<GkEntry> entries;
};

std::vector<WordClass> gk_basis(const SimplicialComplex& gamma, int j);
/// The map GK_j -> GK_{j-1}.
GkDifferential gk_differential(const SimplicialComplex& gamma, int j);
/// Checks that consecutive differentials compose to zero through degree j_max,
/// returning the first failing degree.
std::optional<int> gk_square_zero_failure(const SimplicialComplex& gamma, int j_max);

struct MultidegreeColor {
    bool blue = true;
    int witness_a = -1;
    int witness_b = -1;
};
MultidegreeColor classify_multidegree(const SimplicialComplex& gamma, const Exponents& m);

/// dim Tor_i(J, F)_m for J generated in the face ring of gamma by monomials.
std::int64_t tor_dimension(const SimplicialComplex& gamma, const std::vector<Monomial>& generators, int i,
                           const Exponents& m, const FieldSpec& field);

struct SweepLimits {
    std::uint64_t max_multidegrees = 2'000'000;
};

BettiTable module_betti_over_gamma(const SimplicialComplex& gamma, const std::vector<Monomial>& generators,
                                   int i_max, const FieldSpec& field, const SweepLimits& limits = {});

/// Coefficients of (1+t)^krull_dim / h(-t) through t^i_max.
IntSeries poincare_from_hilbert(const std::vector<std::int64_t>& h, int krull_dim, int i_max);

/// The canonical-module generators of delta as monomials over the Bier ball variables.
std::vector<Monomial> canonical_module_monomials(const SimplicialComplex& delta);

/// Betti numbers of the residue field over the idealization ring of delta
/// through homological degree i_max.
TruncatedSeries poincare_r_delta(const SimplicialComplex& delta, const FieldSpec& field, int i_max,
                                 const SweepLimits& limits = {});

struct KoszulVerdict {
    bool koszul = false;
    std::string reason;
    /// Number of linear steps of the residue field resolution, or
    /// kLinearThroughout when Koszul.
    int linear_steps = 0;
};
KoszulVerdict koszul_verdict(const SimplicialComplex& delta, const FieldSpec& field);

}  // namespace bierflag
