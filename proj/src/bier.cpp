#include "bierflag/bier.hpp"

#include <algorithm>
#include <map>

#include "bierflag/error.hpp"

namespace bierflag {

VertexSet BierBall::sharp(VertexSet face) const {
    const int n = static_cast<int>(source.num_vertices());
    return face | ((source.ground() & ~face) << n);
}

BierBall bier_ball(const SimplicialComplex& delta) {
    const std::size_t n = delta.num_vertices();
    if (n == 0) throw Error(ErrorKind::BadParams, "Bier ball needs at least one vertex");
    if (2 * n > 64) throw Error(ErrorKind::BadParams, "Bier ball supports at most 32 source vertices");
    std::vector<std::string> labels;
    for (const auto& l : delta.labels()) labels.push_back("x:" + l);
    for (const auto& l : delta.labels()) labels.push_back("y:" + l);
    BierBall ball{SimplicialComplex(), delta};
    std::vector<VertexSet> facets;
    for (VertexSet f : delta.faces()) facets.push_back(ball.sharp(f));
    ball.gamma = SimplicialComplex::from_sets(std::move(labels), std::move(facets));
    return ball;
}

std::vector<VertexSet> bier_shelling_order(const BierBall& ball) {
    std::vector<VertexSet> order;
    for (VertexSet f : ball.source.faces()) order.push_back(ball.sharp(f));
    return order;
}

SimplicialComplex boundary_sphere(const BierBall& ball) {
    if (ball.source.is_simplex())
        throw Error(ErrorKind::IsSimplex, "the Bier ball of a full simplex has empty boundary");
    std::map<VertexSet, int> count;
    for (VertexSet f : ball.gamma.facets())
        for (int v : members(f)) ++count[f & ~singleton(v)];
    std::vector<VertexSet> ridges;
    for (auto& [ridge, k] : count)
        if (k == 1) ridges.push_back(ridge);
    return SimplicialComplex::from_sets(ball.gamma.labels(), std::move(ridges));
}

std::vector<VertexSet> canonical_module_generators(const SimplicialComplex& delta) {
    if (!delta.is_pure()) throw Error(ErrorKind::NotPure, "canonical module needs a pure complex");
    return delta.alexander_dual_generators();
}

}  // namespace bierflag
