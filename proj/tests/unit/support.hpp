#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bierflag/complex.hpp"
#include "bierflag/corpus.hpp"
#include "bierflag/error.hpp"
#include "oracles.hpp"

namespace testing {

/// Kind of the bierflag::Error thrown by f, or nothing if it returns.
template <class F>
std::optional<bierflag::ErrorKind> error_kind(F&& f) {
    try {
        f();
    } catch (const bierflag::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

inline std::string data_dir() { return BIERFLAG_TEST_DATA; }

/// Small pure flag complexes plus the builtins that stay cheap.
inline std::vector<bierflag::NamedComplex> small_corpus() {
    using namespace bierflag;
    std::vector<NamedComplex> out = pure_flag_corpus(5);
    out.push_back({"octahedron", builtin::cross_polytope_boundary(3)});
    out.push_back({"path3", builtin::path3()});
    out.push_back({"annulus", builtin::flag_annulus()});
    return out;
}

inline std::vector<oracle::Mask> masks(const bierflag::SimplicialComplex& c) {
    return {c.facets().begin(), c.facets().end()};
}

}  // namespace testing
