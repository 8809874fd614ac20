#pragma once

#include <vector>

#include "bierflag/complex.hpp"

namespace bierflag {

/// The whiskered complex on x_1..x_n, y_1..y_n whose facets are
/// {x_i : i in F} + {y_j : j not in F} for every face F of the source.
/// Vertex i of gamma is x_i and vertex n+i is y_i.
struct BierBall {
    SimplicialComplex gamma;
    SimplicialComplex source;

    /// The gamma facet of a source face.
    VertexSet sharp(VertexSet face) const;
};

BierBall bier_ball(const SimplicialComplex& delta);
/// Facets of gamma ordered by the size of the source face, ties lexicographic.
std::vector<VertexSet> bier_shelling_order(const BierBall& ball);
/// Complex generated by the codimension-one faces of gamma lying in exactly one facet.
SimplicialComplex boundary_sphere(const BierBall& ball);
/// Supports (as subsets of the source vertices) of y^{[n] - F} over facets F.
std::vector<VertexSet> canonical_module_generators(const SimplicialComplex& delta);

}  // namespace bierflag
