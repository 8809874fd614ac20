#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace bierflag {

/// A set of vertex indices packed into a bit mask; complexes have at most 64 vertices.
using VertexSet = std::uint64_t;

inline int set_size(VertexSet s) { return __builtin_popcountll(s); }
inline VertexSet singleton(int v) { return VertexSet{1} << v; }
inline bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }
std::vector<int> members(VertexSet s);
/// Lexicographic comparison of the sorted index lists.
bool lex_less(VertexSet a, VertexSet b);

using FVector = std::vector<std::int64_t>;  // f_{-1}, f_0, ..., f_{d-1}
using HVector = std::vector<std::int64_t>;  // h_0, ..., h_d

class SimplicialComplex {
public:
    /// The void complex on no vertices.
    SimplicialComplex() = default;

    /// Builds a complex from labelled facets. Dominated faces are dropped and
    /// facets are sorted. An empty facet list gives the void complex only when
    /// allow_void is set.
    static SimplicialComplex from_labels(std::vector<std::string> vertices,
                                         const std::vector<std::vector<std::string>>& facets,
                                         bool allow_void = false);
    static SimplicialComplex from_sets(std::vector<std::string> vertices,
                                       std::vector<VertexSet> facets, bool allow_void = false);

    std::size_t num_vertices() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    VertexSet ground() const;

    bool is_void() const { return facets_.empty(); }
    int dim() const;
    bool is_pure() const;
    bool is_simplex() const;
    bool contains(VertexSet face) const;

    /// All faces, sorted by size and then lexicographically.
    std::vector<VertexSet> faces() const;
    /// faces_by_size()[k] holds the faces with k vertices.
    std::vector<std::vector<VertexSet>> faces_by_size() const;
    FVector f_vector() const;

    std::vector<VertexSet> minimal_nonfaces() const;
    bool is_flag() const;

    /// Link of a face, re-indexed onto the remaining vertices.
    SimplicialComplex link(VertexSet face) const;
    /// Induced subcomplex on a vertex subset, re-indexed onto that subset.
    SimplicialComplex restriction(VertexSet subset) const;
    SimplicialComplex restriction(const std::vector<std::string>& subset) const;

    /// Complements of the facets: the generators of the Alexander dual ideal.
    std::vector<VertexSet> alexander_dual_generators() const;
    std::int64_t reduced_euler_characteristic() const;

    int vertex_index(const std::string& label) const;
    VertexSet face_from_labels(const std::vector<std::string>& labels) const;
    std::vector<std::string> face_labels(VertexSet face) const;
    /// Concatenated labels, as used in variable names like z_145.
    std::string face_name(VertexSet face) const;

    nlohmann::json to_json() const;
    std::string canonical_json() const;
    static SimplicialComplex from_json(const nlohmann::json& j);
    /// Accepts the JSON format or plain text with one facet per line.
    static SimplicialComplex parse(const std::string& text);
    static SimplicialComplex load(const std::string& path);

    bool operator==(const SimplicialComplex& other) const {
        return labels_ == other.labels_ && facets_ == other.facets_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<VertexSet> facets_;
};

HVector h_from_f(const FVector& f, int d);
FVector f_from_h(const HVector& h, int d);
HVector h_vector(const SimplicialComplex& c);

/// Maximum over codimension-one faces of the number of facets containing it.
int max_ridge_multiplicity(const SimplicialComplex& c);

namespace builtin {

SimplicialComplex cross_polytope_boundary(int d);
/// c copies of the d-dimensional cross-polytope boundary sharing one facet.
SimplicialComplex glued_cross_polytopes(int d, int c);
/// A flag triangulation of the real projective plane on 11 vertices.
SimplicialComplex rp2_flag();
/// Facets 123, 234, 345.
SimplicialComplex path3();
/// Facets 12, 3 on three vertices.
SimplicialComplex bier_example();
/// A flag triangulated annulus on 8 vertices.
SimplicialComplex flag_annulus();

/// Dispatch by name: octahedron, cross_polytope, glued_cross_polytopes, rp2,
/// path3, bier_example, annulus.
SimplicialComplex by_name(const std::string& name, const std::vector<int>& params = {});
std::vector<std::string> names();

}  // namespace builtin

}  // namespace bierflag
