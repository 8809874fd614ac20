#include "bierflag/complex.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "bierflag/error.hpp"

namespace bierflag {

std::vector<int> members(VertexSet s) {
    std::vector<int> out;
    out.reserve(set_size(s));
    while (s) {
        out.push_back(__builtin_ctzll(s));
        s &= s - 1;
    }
    return out;
}

bool lex_less(VertexSet a, VertexSet b) {
    while (a && b) {
        int x = __builtin_ctzll(a), y = __builtin_ctzll(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

namespace {

std::vector<VertexSet> normalize_facets(std::vector<VertexSet> facets) {
    std::sort(facets.begin(), facets.end(),
              [](VertexSet a, VertexSet b) { return set_size(a) > set_size(b); });
    std::vector<VertexSet> kept;
    for (VertexSet f : facets) {
        bool dominated = false;
        for (VertexSet g : kept)
            if (is_subset(f, g)) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end(), lex_less);
    return kept;
}

void check_vertex_count(std::size_t n) {
    if (n > 64) throw Error(ErrorKind::BadParams, "at most 64 vertices are supported");
}

}  // namespace

SimplicialComplex SimplicialComplex::from_sets(std::vector<std::string> vertices,
                                               std::vector<VertexSet> facets, bool allow_void) {
    check_vertex_count(vertices.size());
    {
        std::vector<std::string> sorted = vertices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(ErrorKind::ParseError, "duplicate vertex label");
    }
    if (facets.empty() && !allow_void) throw Error(ErrorKind::EmptyInput, "no facets given");
    VertexSet ground = vertices.size() == 64 ? ~VertexSet{0} : (singleton(vertices.size()) - 1);
    for (VertexSet f : facets)
        if (!is_subset(f, ground)) throw Error(ErrorKind::UnknownVertex, "facet outside vertex set");
    SimplicialComplex c;
    c.labels_ = std::move(vertices);
    c.facets_ = normalize_facets(std::move(facets));
    return c;
}

SimplicialComplex SimplicialComplex::from_labels(std::vector<std::string> vertices,
                                                 const std::vector<std::vector<std::string>>& facets,
                                                 bool allow_void) {
    check_vertex_count(vertices.size());
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], static_cast<int>(i));
    std::vector<VertexSet> sets;
    for (const auto& facet : facets) {
        VertexSet s = 0;
        for (const auto& v : facet) {
            auto it = index.find(v);
            if (it == index.end()) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + v + "'");
            s |= singleton(it->second);
        }
        sets.push_back(s);
    }
    return from_sets(std::move(vertices), std::move(sets), allow_void);
}

VertexSet SimplicialComplex::ground() const {
    return labels_.size() == 64 ? ~VertexSet{0} : (singleton(labels_.size()) - 1);
}

int SimplicialComplex::dim() const {
    int m = 0;
    for (VertexSet f : facets_) m = std::max(m, set_size(f));
    return m - 1;
}

bool SimplicialComplex::is_pure() const {
    for (VertexSet f : facets_)
        if (set_size(f) != set_size(facets_.front())) return false;
    return true;
}

bool SimplicialComplex::is_simplex() const {
    return facets_.size() == 1 && facets_.front() == ground();
}

bool SimplicialComplex::contains(VertexSet face) const {
    for (VertexSet f : facets_)
        if (is_subset(face, f)) return true;
    return false;
}

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_by_size() const {
    std::vector<std::vector<VertexSet>> out(is_void() ? 0 : dim() + 2);
    std::unordered_set<VertexSet> seen;
    for (VertexSet f : facets_) {
        // iterate all subsets of f
        VertexSet s = f;
        while (true) {
            if (seen.insert(s).second) out[set_size(s)].push_back(s);
            if (s == 0) break;
            s = (s - 1) & f;
        }
    }
    for (auto& level : out) std::sort(level.begin(), level.end(), lex_less);
    return out;
}

std::vector<VertexSet> SimplicialComplex::faces() const {
    std::vector<VertexSet> out;
    for (auto& level : faces_by_size()) out.insert(out.end(), level.begin(), level.end());
    return out;
}

FVector SimplicialComplex::f_vector() const {
    FVector f;
    for (auto& level : faces_by_size()) f.push_back(static_cast<std::int64_t>(level.size()));
    return f;
}

std::vector<VertexSet> SimplicialComplex::minimal_nonfaces() const {
    std::vector<VertexSet> out;
    if (is_void()) {
        out.push_back(0);
        return out;
    }
    auto levels = faces_by_size();
    std::unordered_set<VertexSet> faces;
    for (auto& level : levels) faces.insert(level.begin(), level.end());
    const int n = static_cast<int>(num_vertices());
    for (std::size_t k = 0; k < levels.size(); ++k) {
        for (VertexSet f : levels[k]) {
            int start = f ? 64 - __builtin_clzll(f) : 0;
            for (int v = start; v < n; ++v) {
                VertexSet s = f | singleton(v);
                if (faces.count(s)) continue;
                bool minimal = true;
                for (int u : members(f))
                    if (!faces.count(s & ~singleton(u))) {
                        minimal = false;
                        break;
                    }
                if (minimal) out.push_back(s);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        return set_size(a) != set_size(b) ? set_size(a) < set_size(b) : lex_less(a, b);
    });
    return out;
}

bool SimplicialComplex::is_flag() const {
    for (VertexSet s : minimal_nonfaces())
        if (set_size(s) != 2) return false;
    return true;
}

namespace {

// Re-indexes sets living on `keep` to consecutive indices.
VertexSet compress(VertexSet s, const std::vector<int>& keep_list) {
    VertexSet out = 0;
    for (std::size_t i = 0; i < keep_list.size(); ++i)
        if (s & singleton(keep_list[i])) out |= singleton(static_cast<int>(i));
    return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::link(VertexSet face) const {
    if (!contains(face)) throw Error(ErrorKind::NotAFace, "face not in complex: " + face_name(face));
    std::vector<int> keep = members(ground() & ~face);
    std::vector<std::string> labels;
    for (int v : keep) labels.push_back(labels_[v]);
    std::vector<VertexSet> facets;
    for (VertexSet f : facets_)
        if (is_subset(face, f)) facets.push_back(compress(f & ~face, keep));
    return from_sets(std::move(labels), std::move(facets));
}

SimplicialComplex SimplicialComplex::restriction(VertexSet subset) const {
    if (!is_subset(subset, ground())) throw Error(ErrorKind::UnknownVertex, "subset outside vertex set");
    std::vector<int> keep = members(subset);
    std::vector<std::string> labels;
    for (int v : keep) labels.push_back(labels_[v]);
    std::vector<VertexSet> facets;
    for (VertexSet f : facets_) facets.push_back(compress(f & subset, keep));
    return from_sets(std::move(labels), std::move(facets), true);
}

SimplicialComplex SimplicialComplex::restriction(const std::vector<std::string>& subset) const {
    return restriction(face_from_labels(subset));
}

std::vector<VertexSet> SimplicialComplex::alexander_dual_generators() const {
    std::vector<VertexSet> out;
    for (VertexSet f : facets_) out.push_back(ground() & ~f);
    return out;
}

std::int64_t SimplicialComplex::reduced_euler_characteristic() const {
    std::int64_t chi = 0;
    FVector f = f_vector();
    for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0 ? -1 : 1) * f[k];
    return chi;
}

int SimplicialComplex::vertex_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + label + "'");
}

VertexSet SimplicialComplex::face_from_labels(const std::vector<std::string>& labels) const {
    VertexSet s = 0;
    for (const auto& l : labels) s |= singleton(vertex_index(l));
    return s;
}

std::vector<std::string> SimplicialComplex::face_labels(VertexSet face) const {
    std::vector<std::string> out;
    for (int v : members(face)) out.push_back(labels_.at(v));
    return out;
}

std::string SimplicialComplex::face_name(VertexSet face) const {
    std::string out;
    for (int v : members(face)) out += labels_.at(v);
    return out;
}

nlohmann::json SimplicialComplex::to_json() const {
    nlohmann::json j;
    j["vertices"] = labels_;
    nlohmann::json facets = nlohmann::json::array();
    for (VertexSet f : facets_) facets.push_back(face_labels(f));
    j["facets"] = facets;
    return j;
}

std::string SimplicialComplex::canonical_json() const { return to_json().dump(); }

SimplicialComplex SimplicialComplex::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        throw Error(ErrorKind::ParseError, "expected an object with a \"facets\" array");
    auto label_of = [](const nlohmann::json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_integer()) return std::to_string(v.get<long long>());
        throw Error(ErrorKind::ParseError, "vertex labels must be strings or integers");
    };
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw Error(ErrorKind::ParseError, "each facet must be an array");
        std::vector<std::string> face;
        for (const auto& v : f) face.push_back(label_of(v));
        facets.push_back(std::move(face));
    }
    std::vector<std::string> vertices;
    if (j.contains("vertices")) {
        for (const auto& v : j["vertices"]) vertices.push_back(label_of(v));
    } else {
        for (const auto& f : facets)
            for (const auto& v : f)
                if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) vertices.push_back(v);
    }
    bool allow_void = j.value("void", false);
    return from_labels(std::move(vertices), facets, allow_void);
}

SimplicialComplex SimplicialComplex::parse(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::ParseError, e.what());
        }
        return from_json(j);
    }
    std::vector<std::string> vertices;
    std::vector<std::vector<std::string>> facets;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> facet;
        std::string v;
        while (ls >> v) {
            facet.push_back(v);
            if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) vertices.push_back(v);
        }
        if (!facet.empty()) facets.push_back(std::move(facet));
    }
    return from_labels(std::move(vertices), facets);
}

SimplicialComplex SimplicialComplex::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

namespace {

std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

HVector h_from_f(const FVector& f, int d) {
    if (static_cast<int>(f.size()) != d + 1)
        throw Error(ErrorKind::LengthMismatch, "f-vector must have d+1 entries");
    HVector h(d + 1, 0);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= i; ++j)
            h[i] += ((i - j) % 2 ? -1 : 1) * binom(d - j, d - i) * f[j];
    return h;
}

FVector f_from_h(const HVector& h, int d) {
    if (static_cast<int>(h.size()) != d + 1)
        throw Error(ErrorKind::LengthMismatch, "h-vector must have d+1 entries");
    FVector f(d + 1, 0);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= i; ++j) f[i] += binom(d - j, i - j) * h[j];
    return f;
}

HVector h_vector(const SimplicialComplex& c) {
    if (c.is_void()) throw Error(ErrorKind::VoidComplex, "void complex has no h-vector");
    if (!c.is_pure()) throw Error(ErrorKind::NotPure, "h-vector needs a pure complex");
    return h_from_f(c.f_vector(), c.dim() + 1);
}

int max_ridge_multiplicity(const SimplicialComplex& c) {
    std::map<VertexSet, int> count;
    for (VertexSet f : c.facets())
        for (int v : members(f)) ++count[f & ~singleton(v)];
    int m = 0;
    for (auto& [ridge, k] : count) m = std::max(m, k);
    return m;
}

namespace builtin {

SimplicialComplex cross_polytope_boundary(int d) { return glued_cross_polytopes(d, 1); }

SimplicialComplex glued_cross_polytopes(int d, int c) {
    if (d < 1 || c < 1) throw Error(ErrorKind::BadParams, "need d >= 1 and c >= 1");
    if (d + c * d > 64) throw Error(ErrorKind::BadParams, "too many vertices");
    // vertex 2j is shared, vertex 2j+1 is the antipode of the first copy;
    // further copies append d new antipodes each
    std::vector<std::string> labels;
    for (int i = 1; i <= 2 * d; ++i) labels.push_back(std::to_string(i));
    for (int k = 1; k < c; ++k)
        for (int j = 0; j < d; ++j) labels.push_back(std::to_string(2 * d + (k - 1) * d + j + 1));
    std::vector<VertexSet> facets;
    for (int k = 0; k < c; ++k) {
        for (VertexSet choice = 0; choice < singleton(d); ++choice) {
            VertexSet f = 0;
            for (int j = 0; j < d; ++j) {
                int antipode = k == 0 ? 2 * j + 1 : 2 * d + (k - 1) * d + j;
                f |= singleton((choice >> j) & 1 ? antipode : 2 * j);
            }
            facets.push_back(f);
        }
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return SimplicialComplex::from_sets(labels, facets);
}

SimplicialComplex rp2_flag() {
    std::vector<std::string> labels = {"1", "2", "3", "4", "5", "6", "7", "8", "9", "a", "b"};
    const char* facets[] = {"145", "126", "156", "237", "347", "267", "148", "478", "129", "189",
                            "23a", "34a", "45a", "29a", "56b", "67b", "78b", "89b", "5ab", "9ab"};
    std::vector<std::vector<std::string>> list;
    for (const char* f : facets) {
        std::vector<std::string> face;
        for (const char* p = f; *p; ++p) face.emplace_back(1, *p);
        list.push_back(face);
    }
    return SimplicialComplex::from_labels(labels, list);
}

SimplicialComplex path3() {
    return SimplicialComplex::from_labels({"1", "2", "3", "4", "5"},
                                          {{"1", "2", "3"}, {"2", "3", "4"}, {"3", "4", "5"}});
}

SimplicialComplex bier_example() {
    return SimplicialComplex::from_labels({"1", "2", "3"}, {{"1", "2"}, {"3"}});
}

SimplicialComplex flag_annulus() {
    std::vector<std::string> labels = {"a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4"};
    std::vector<VertexSet> facets;
    for (int i = 0; i < 4; ++i) {
        int a = i, a1 = (i + 1) % 4, b = 4 + i, b1 = 4 + (i + 1) % 4;
        facets.push_back(singleton(a) | singleton(a1) | singleton(b));
        facets.push_back(singleton(a1) | singleton(b) | singleton(b1));
    }
    return SimplicialComplex::from_sets(labels, facets);
}

SimplicialComplex by_name(const std::string& name, const std::vector<int>& params) {
    auto param = [&](std::size_t i, int fallback) {
        return i < params.size() ? params[i] : fallback;
    };
    if (name == "octahedron") return cross_polytope_boundary(3);
    if (name == "cross_polytope") return cross_polytope_boundary(param(0, 3));
    if (name == "glued_cross_polytopes") return glued_cross_polytopes(param(0, 3), param(1, 2));
    if (name == "rp2") return rp2_flag();
    if (name == "path3") return path3();
    if (name == "bier_example") return bier_example();
    if (name == "annulus") return flag_annulus();
    throw Error(ErrorKind::BadParams, "unknown builtin '" + name + "'");
}

std::vector<std::string> names() {
    return {"octahedron", "cross_polytope", "glued_cross_polytopes", "rp2", "path3",
            "bier_example", "annulus"};
}

}  // namespace builtin

}  // namespace bierflag
