#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bierflag/complex.hpp"
#include "bierflag/field.hpp"
#include "bierflag/polynomial.hpp"
#include "bierflag/presentation.hpp"

namespace bierflag {

/// order[k] is the index (into the canonical facet list) of the k-th facet.
using FacetOrder = std::vector<std::size_t>;

FacetOrder identity_order(std::size_t m);
void validate_facet_order(const FacetOrder& order, std::size_t m);

/// Block order: z-degree, then z-variables lexicographically with later
/// facets larger, then grevlex on y and then x.
TermOrder compatible_term_order(const RingContext& ring, const FacetOrder& order);
PolyRing presentation_ring(const RingContext& ring, TermOrder order, const FieldSpec& field);

struct GroebnerResult {
    std::vector<Polynomial> basis;  // reduced and monic, sorted by leading monomial
    bool truncated = false;         // some S-pair exceeded the degree cap
    int exceeded_degree = 0;        // lcm degree of the first such pair
    std::size_t pairs_considered = 0;
    std::size_t pairs_skipped = 0;
    std::size_t zero_reductions = 0;
    std::vector<std::string> log;
};

GroebnerResult buchberger(const PolyRing& ring, const std::vector<Polynomial>& generators, int degree_cap,
                          bool keep_log = false);
/// Every S-pair of lcm degree at most degree_cap reduces to zero.
bool is_groebner_basis(const PolyRing& ring, const std::vector<Polynomial>& basis, int degree_cap);

/// Standard monomial counts in degrees 0..up_to for the given leading monomials.
std::vector<std::int64_t> hilbert_function_by_normal_forms(std::size_t nvars,
                                                           const std::vector<Monomial>& leads, int up_to);
std::vector<std::int64_t> hilbert_function_by_normal_forms(const PolyRing& ring,
                                                           const std::vector<Polynomial>& generators,
                                                           int up_to);

bool is_shelling_order(const SimplicialComplex& delta, const FacetOrder& order);

struct ShellingResult {
    enum class Status { Found, NotShellable };
    Status status = Status::NotShellable;
    FacetOrder order;
    std::uint64_t nodes = 0;
    std::size_t failed_states = 0;
};

/// Depth-first search over facet orders, memoizing facet sets that cannot be
/// completed. Throws BudgetExceeded once more than node_budget extensions are tried.
ShellingResult find_shelling(const SimplicialComplex& delta, std::uint64_t node_budget);

struct QuadraticGbReport {
    bool passed = true;
    std::size_t pairs_checked = 0;
    std::string offending_pair;
    std::string remainder;
    std::vector<std::string> log;
};

/// Whether the quadratic generators (quadratic binomials plus monomial
/// quadrics) form a Groebner basis under the order compatible with `order`.
QuadraticGbReport quadratic_gb_test(const SimplicialComplex& delta, const FacetOrder& order,
                                    const FieldSpec& field, bool keep_log = false);

enum class GbStrategy { ViaShelling, Direct };

struct QuadraticGbSearch {
    bool exists = false;
    FacetOrder witness;
    std::uint64_t nodes = 0;
};

/// ViaShelling: search for a shelling. Direct strategy: search facet
/// orders, pruning prefixes whose binomials or new S-pairs already fail to
/// reduce to zero, and run
/// quadratic_gb_test on complete orders.
QuadraticGbSearch has_quadratic_gb(const SimplicialComplex& delta, GbStrategy strategy,
                                   std::uint64_t node_budget, const FieldSpec& field = FieldSpec());

}  // namespace bierflag
