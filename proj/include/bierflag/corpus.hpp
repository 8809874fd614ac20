#pragma once

#include <string>
#include <vector>

#include "bierflag/complex.hpp"

namespace bierflag {

struct NamedComplex {
    std::string name;
    SimplicialComplex complex;
};

/// Clique complexes of graphs on 1..max_vertices vertices, one per
/// isomorphism class, keeping only the pure ones. Labels are 1..n.
std::vector<NamedComplex> pure_flag_corpus(int max_vertices);

/// Clique complex of a graph on n vertices labelled 1..n.
SimplicialComplex clique_complex(int n, const std::vector<std::pair<int, int>>& edges);

/// Loads every *.json complex in a directory, sorted by file name.
std::vector<NamedComplex> load_corpus_dir(const std::string& dir);

}  // namespace bierflag
