#include "bierflag/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <set>

#include "bierflag/error.hpp"

namespace bierflag {

namespace {

std::vector<std::string> numeric_labels(int n) {
    std::vector<std::string> labels;
    for (int v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
    return labels;
}

// adjacency[v] as bit masks
std::vector<VertexSet> adjacency_of(int n, std::uint32_t edge_mask, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<VertexSet> adj(n, 0);
    for (std::size_t e = 0; e < pairs.size(); ++e)
        if ((edge_mask >> e) & 1) {
            adj[pairs[e].first] |= singleton(pairs[e].second);
            adj[pairs[e].second] |= singleton(pairs[e].first);
        }
    return adj;
}

// smallest edge mask over all relabellings
std::uint32_t canonical_mask(int n, const std::vector<VertexSet>& adj, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = UINT32_MAX;
    do {
        std::uint32_t mask = 0;
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if ((adj[perm[pairs[e].first]] >> perm[pairs[e].second]) & 1) mask |= std::uint32_t{1} << e;
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<VertexSet> maximal_cliques(int n, const std::vector<VertexSet>& adj) {
    std::vector<VertexSet> cliques;
    for (VertexSet s = 1; s < (VertexSet{1} << n); ++s) {
        bool clique = true;
        for (int v : members(s))
            if (!is_subset(s & ~singleton(v), adj[v])) {
                clique = false;
                break;
            }
        if (clique) cliques.push_back(s);
    }
    std::vector<VertexSet> out;
    for (VertexSet c : cliques) {
        bool maximal = true;
        for (VertexSet d : cliques)
            if (d != c && is_subset(c, d)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(c);
    }
    return out;
}

}  // namespace

SimplicialComplex clique_complex(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1 || n > 20) throw Error(ErrorKind::BadParams, "clique complexes need 1 to 20 vertices");
    std::vector<VertexSet> adj(n, 0);
    for (auto [a, b] : edges) {
        if (a < 1 || b < 1 || a > n || b > n || a == b) throw Error(ErrorKind::BadParams, "bad edge");
        adj[a - 1] |= singleton(b - 1);
        adj[b - 1] |= singleton(a - 1);
    }
    return SimplicialComplex::from_sets(numeric_labels(n), maximal_cliques(n, adj));
}

std::vector<NamedComplex> pure_flag_corpus(int max_vertices) {
    if (max_vertices < 1 || max_vertices > 6) throw Error(ErrorKind::BadParams, "corpus supports 1 to 6 vertices");
    std::vector<NamedComplex> out;
    for (int n = 1; n <= max_vertices; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
        std::set<std::uint32_t> seen;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
            auto adj = adjacency_of(n, mask, pairs);
            std::uint32_t canon = canonical_mask(n, adj, pairs);
            if (!seen.insert(canon).second) continue;
            adj = adjacency_of(n, canon, pairs);
            SimplicialComplex c = SimplicialComplex::from_sets(numeric_labels(n), maximal_cliques(n, adj));
            if (!c.is_pure()) continue;
            std::string name = "graph" + std::to_string(n) + "_";
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if ((canon >> e) & 1) name += std::to_string(pairs[e].first + 1) + std::to_string(pairs[e].second + 1) + "-";
            if (name.back() == '-') name.pop_back();
            if (name.back() == '_') name += "empty";
            out.push_back({name, std::move(c)});
        }
    }
    return out;
}

std::vector<NamedComplex> load_corpus_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw Error(ErrorKind::ParseError, "not a directory: " + dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<NamedComplex> out;
    for (const auto& p : files) out.push_back({p.stem().string(), SimplicialComplex::load(p.string())});
    return out;
}

}  // namespace bierflag
