#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bierflag/complex.hpp"
#include "bierflag/field.hpp"

namespace bierflag {

/// Reduced homology dimensions in degrees -1 .. dim.
struct HomologyDims {
    std::vector<std::size_t> dims;  // dims[k] is the dimension in degree k-1

    std::size_t at(int degree) const {
        int k = degree + 1;
        return k >= 0 && k < static_cast<int>(dims.size()) ? dims[k] : 0;
    }
    bool vanishes_below(int degree) const {
        for (int i = -1; i < degree; ++i)
            if (at(i)) return false;
        return true;
    }
};

HomologyDims reduced_homology(const SimplicialComplex& c, const FieldSpec& field);
/// Same computation from an explicit face list grouped by size (index = face size).
HomologyDims reduced_homology(const std::vector<std::vector<VertexSet>>& faces_by_size,
                              const FieldSpec& field);

/// Where a Serre condition fails: either a face whose link has nonzero
/// homology in the given degree, or impurity.
struct SerreWitness {
    bool impure = false;
    VertexSet face = 0;
    int degree = 0;
};

std::optional<SerreWitness> serre_violation(const SimplicialComplex& c, int r, const FieldSpec& field);
bool serre_condition(const SimplicialComplex& c, int r, const FieldSpec& field);
bool is_cohen_macaulay(const SimplicialComplex& c, const FieldSpec& field);
/// Largest r <= d with (S_r), per characteristic.
std::map<std::uint32_t, int> serre_profile(const SimplicialComplex& c,
                                           const std::vector<std::uint32_t>& characteristics);

}  // namespace bierflag
