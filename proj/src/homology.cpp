#include "bierflag/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include "bierflag/error.hpp"

namespace bierflag {

HomologyDims reduced_homology(const std::vector<std::vector<VertexSet>>& levels, const FieldSpec& field) {
    const std::size_t top = levels.size();
    if (top == 0) throw Error(ErrorKind::VoidComplex, "void complex has no homology");
    // ranks[k] = rank of the boundary from faces of size k to faces of size k-1
    std::vector<std::size_t> ranks(top + 1, 0);
    std::unordered_map<VertexSet, std::uint32_t> lower;
    for (std::size_t k = 1; k < top; ++k) {
        lower.clear();
        for (std::size_t i = 0; i < levels[k - 1].size(); ++i)
            lower.emplace(levels[k - 1][i], static_cast<std::uint32_t>(i));
        SparseIntMatrix m(levels[k].size(), levels[k - 1].size());
        for (std::size_t r = 0; r < levels[k].size(); ++r) {
            VertexSet f = levels[k][r];
            int sign = 1;
            for (int v : members(f)) {
                m.add(r, lower.at(f & ~singleton(v)), sign);
                sign = -sign;
            }
        }
        ranks[k] = rank(m, field);
    }
    HomologyDims out;
    out.dims.resize(top);
    for (std::size_t k = 0; k < top; ++k) out.dims[k] = levels[k].size() - ranks[k] - ranks[k + 1];
    return out;
}

HomologyDims reduced_homology(const SimplicialComplex& c, const FieldSpec& field) {
    if (c.is_void()) throw Error(ErrorKind::VoidComplex, "void complex has no homology");
    return reduced_homology(c.faces_by_size(), field);
}

std::optional<SerreWitness> serre_violation(const SimplicialComplex& c, int r, const FieldSpec& field) {
    if (r < 1) throw Error(ErrorKind::BadParams, "Serre index must be at least 1");
    if (c.is_void()) throw Error(ErrorKind::VoidComplex, "void complex");
    if (r >= 2 && !c.is_pure()) return SerreWitness{true, 0, 0};
    for (VertexSet face : c.faces()) {
        SimplicialComplex lk = c.link(face);
        int bound = std::min(r - 1, lk.dim());
        if (bound <= -1) continue;
        HomologyDims h = reduced_homology(lk, field);
        for (int i = -1; i < bound; ++i)
            if (h.at(i) != 0) return SerreWitness{false, face, i};
    }
    return std::nullopt;
}

bool serre_condition(const SimplicialComplex& c, int r, const FieldSpec& field) {
    return !serre_violation(c, r, field).has_value();
}

bool is_cohen_macaulay(const SimplicialComplex& c, const FieldSpec& field) {
    if (!c.is_pure()) throw Error(ErrorKind::NotPure, "Cohen-Macaulay test needs a pure complex");
    return serre_condition(c, c.dim() + 1, field);
}

std::map<std::uint32_t, int> serre_profile(const SimplicialComplex& c,
                                           const std::vector<std::uint32_t>& characteristics) {
    if (!c.is_pure()) throw Error(ErrorKind::NotPure, "Serre profile needs a pure complex");
    const int d = c.dim() + 1;
    std::map<std::uint32_t, int> out;
    for (std::uint32_t p : characteristics) out[p] = d;
    // a link with first nonzero homology in degree i < dim(link) caps r at i + 1
    for (VertexSet face : c.faces()) {
        SimplicialComplex lk = c.link(face);
        if (lk.dim() <= -1) continue;
        for (std::uint32_t p : characteristics) {
            HomologyDims h = reduced_homology(lk, FieldSpec(p));
            for (int i = -1; i < lk.dim(); ++i)
                if (h.at(i) != 0) {
                    out[p] = std::min(out[p], i + 1);
                    break;
                }
        }
    }
    for (auto& [p, r] : out) r = std::max(r, std::min(1, d));
    return out;
}

}  // namespace bierflag
