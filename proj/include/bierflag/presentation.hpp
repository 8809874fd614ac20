#pragma once

#include <string>
#include <vector>

#include "bierflag/complex.hpp"
#include "bierflag/field.hpp"
#include "bierflag/polynomial.hpp"

namespace bierflag {

/// Ambient ring of the presentation: x_1..x_n, y_1..y_n, then one z per facet.
/// In the Artinian reduction the y block is identified with the x block.
struct RingContext {
    SimplicialComplex delta;
    std::vector<VertexSet> facets;  // canonical facet order of delta
    bool artinian = false;

    std::size_t n() const { return delta.num_vertices(); }
    std::size_t num_facets() const { return facets.size(); }
    std::size_t nvars() const { return (artinian ? 1 : 2) * n() + facets.size(); }
    std::size_t x(std::size_t i) const { return i; }
    std::size_t y(std::size_t i) const { return artinian ? i : n() + i; }
    std::size_t z(std::size_t k) const { return (artinian ? 1 : 2) * n() + k; }
    /// a-invariant of the face ring of the Bier ball: d - n.
    int a_invariant() const { return delta.dim() + 1 - static_cast<int>(n()); }

    std::vector<std::string> variable_names() const;
    Monomial y_monomial(VertexSet s) const;
    Monomial x_monomial(VertexSet s) const;
    Monomial z_variable(std::size_t k) const;
    std::size_t facet_index(VertexSet f) const;
};

RingContext make_ring_context(const SimplicialComplex& delta);

enum class Family { Nonface, Whisker, ZQuadric, Mixed, Binomial };
const char* to_string(Family f);

/// One generator, with terms kept exactly as written (a binomial
/// b_{F1,F2} lists y^{F1-F2} z_{F1} first).
struct Generator {
    Family family;
    std::vector<Term> terms;
    int facet_a = -1;  // facet indices involved, if any
    int facet_b = -1;

    int degree() const { return terms.front().mono.degree(); }
};

struct Presentation {
    RingContext ring;
    std::vector<Generator> generators;

    std::size_t count(Family f) const;
    /// The generators as polynomials of the given ring.
    std::vector<Polynomial> polynomials(const PolyRing& r) const;
};

/// The binomial y^{F1-F2} z_{F1} - y^{F2-F1} z_{F2} for facet indices a, b.
Generator binomial_generator(const RingContext& ring, std::size_t a, std::size_t b);

/// The full generating set: nonface monomials, whiskers, z-quadrics, mixed
/// monomials x_i z_F (i not in F), and a binomial for every pair of facets.
Presentation r_delta_presentation(const SimplicialComplex& delta);
/// Drops binomials of facet pairs joined by a codimension-one path of facets
/// containing their intersection.
Presentation binomial_redundancy_filter(const Presentation& p);
/// Binomials of facet pairs meeting in codimension one.
std::vector<Generator> quadratic_binomials(const SimplicialComplex& delta);
/// Substitutes y_i -> x_i.
Presentation artinian_reduction(const Presentation& p);

bool is_quadratic(const SimplicialComplex& delta, const FieldSpec& field);
HVector h_vector_r_delta(const SimplicialComplex& delta);

enum class ExportFormat { Macaulay2, Singular, Json };
ExportFormat parse_export_format(const std::string& name);
std::string export_presentation(const Presentation& p, ExportFormat format,
                                 const FieldSpec& field = FieldSpec());

}  // namespace bierflag
