#include "bierflag/resolutions.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <set>
#include <sstream>
#include <unordered_map>

#include "bierflag/error.hpp"
#include "bierflag/homology.hpp"

namespace bierflag {

// ---------------------------------------------------------------- BettiTable

std::int64_t BettiTable::at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::int64_t v) {
    if (v == 0) return;
    entries[{i, j}] += v;
}

void BettiTable::add(int i, const Exponents& m, std::int64_t v) {
    if (v == 0) return;
    int j = 0;
    for (auto e : m) j += e;
    multigraded[{i, m}] += v;
    entries[{i, j}] += v;
}

std::optional<int> BettiTable::regularity() const {
    std::optional<int> r;
    for (const auto& [key, v] : entries)
        if (v != 0) r = std::max(r.value_or(INT_MIN), key.second - key.first);
    return r;
}

std::string BettiTable::to_string() const {
    if (entries.empty()) return "0\n";
    int imax = 0, rmin = INT_MAX, rmax = INT_MIN;
    for (const auto& [key, v] : entries) {
        imax = std::max(imax, key.first);
        rmin = std::min(rmin, key.second - key.first);
        rmax = std::max(rmax, key.second - key.first);
    }
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{""};
    for (int i = 0; i <= imax; ++i) header.push_back(std::to_string(i));
    cells.push_back(header);
    for (int r = rmin; r <= rmax; ++r) {
        std::vector<std::string> row{std::to_string(r) + ":"};
        for (int i = 0; i <= imax; ++i) {
            std::int64_t v = at(i, i + r);
            row.push_back(v ? std::to_string(v) : ".");
        }
        cells.push_back(row);
    }
    std::vector<std::size_t> width(imax + 2, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ' ';
            os << std::string(width[c] - row[c].size(), ' ') << row[c];
        }
        os << '\n';
    }
    return os.str();
}

nlohmann::json BettiTable::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [key, v] : entries) arr.push_back({{"i", key.first}, {"j", key.second}, {"multiplicity", v}});
    nlohmann::json out{{"entries", arr}};
    if (i_max != INT_MAX) out["i_max"] = i_max;
    if (auto r = regularity()) out["regularity"] = *r;
    return out;
}

// ------------------------------------------------------------- polarization

std::vector<VertexSet> minimal_squarefree(std::vector<VertexSet> gens) {
    std::sort(gens.begin(), gens.end(), [](VertexSet a, VertexSet b) {
        return set_size(a) != set_size(b) ? set_size(a) < set_size(b) : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<VertexSet> out;
    for (VertexSet g : gens) {
        bool dominated = false;
        for (VertexSet h : out)
            if (is_subset(h, g)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(g);
    }
    return out;
}

Polarization polarize(const std::vector<Monomial>& generators) {
    Polarization p;
    if (generators.empty()) return p;
    const std::size_t n = generators.front().nvars();
    p.original_nvars = n;
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        std::uint16_t e = 0;
        for (const auto& g : generators) {
            if (g.nvars() != n) throw Error(ErrorKind::BadParams, "generators live in different rings");
            e = std::max(e, g[v]);
        }
        offset[v + 1] = offset[v] + e;
        for (std::uint16_t k = 0; k < e; ++k) p.origin.push_back(v);
    }
    if (offset[n] > 64) throw Error(ErrorKind::BadParams, "polarization needs more than 64 variables");
    for (const auto& g : generators) {
        VertexSet s = 0;
        for (std::size_t v = 0; v < n; ++v)
            for (std::uint16_t k = 0; k < g[v]; ++k) s |= singleton(static_cast<int>(offset[v] + k));
        p.generators.push_back(s);
    }
    return p;
}

// ------------------------------------------------------------------ Hochster

namespace {

// Faces of the complex whose Stanley-Reisner ideal has the given generators,
// restricted to sigma, grouped by size.
std::vector<std::vector<VertexSet>> restricted_faces(VertexSet sigma, const std::vector<VertexSet>& gens) {
    std::vector<VertexSet> local;
    for (VertexSet g : gens)
        if (is_subset(g, sigma)) local.push_back(g);
    std::vector<int> verts = members(sigma);
    std::vector<std::vector<VertexSet>> levels(1, std::vector<VertexSet>{0});
    // extend each face by vertices after its largest one
    std::vector<std::pair<VertexSet, int>> frontier{{0, -1}};
    while (!frontier.empty()) {
        std::vector<std::pair<VertexSet, int>> next;
        std::vector<VertexSet> level;
        for (auto [face, last] : frontier)
            for (int idx = last + 1; idx < static_cast<int>(verts.size()); ++idx) {
                VertexSet f = face | singleton(verts[idx]);
                bool ok = true;
                for (VertexSet g : local)
                    if (is_subset(g, f)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                next.emplace_back(f, idx);
                level.push_back(f);
            }
        if (level.empty()) break;
        levels.push_back(std::move(level));
        frontier = std::move(next);
    }
    return levels;
}

// Reduced homology dimension in degree q of a complex given by face levels.
std::size_t homology_in_degree(const std::vector<std::vector<VertexSet>>& levels, int q, const FieldSpec& field,
                               std::map<int, std::size_t>& rank_cache) {
    const int size = q + 1;
    if (size < 0 || size >= static_cast<int>(levels.size())) return 0;
    auto boundary_rank = [&](int k) -> std::size_t {
        if (k <= 0 || k >= static_cast<int>(levels.size())) return 0;
        if (auto it = rank_cache.find(k); it != rank_cache.end()) return it->second;
        std::unordered_map<VertexSet, std::uint32_t> lower;
        for (std::size_t i = 0; i < levels[k - 1].size(); ++i) lower.emplace(levels[k - 1][i], static_cast<std::uint32_t>(i));
        SparseIntMatrix m(levels[k].size(), levels[k - 1].size());
        for (std::size_t r = 0; r < levels[k].size(); ++r) {
            int sign = 1;
            for (int v : members(levels[k][r])) {
                m.add(r, lower.at(levels[k][r] & ~singleton(v)), sign);
                sign = -sign;
            }
        }
        return rank_cache[k] = rank(m, field);
    };
    return levels[size].size() - boundary_rank(size) - boundary_rank(size + 1);
}

}  // namespace

BettiTable hochster_betti(const std::vector<VertexSet>& generators, std::size_t nvars, const FieldSpec& field,
                          int i_max) {
    if (nvars > 64) throw Error(ErrorKind::BadParams, "at most 64 variables");
    BettiTable table;
    table.i_max = i_max;
    std::vector<VertexSet> gens = minimal_squarefree(generators);
    if (gens.empty()) return table;
    if (gens.front() == 0) {
        table.add(0, Exponents(nvars, 0), 1);
        return table;
    }
    // lcm lattice: all unions of generators
    std::set<VertexSet> lattice(gens.begin(), gens.end());
    std::vector<VertexSet> queue(gens.begin(), gens.end());
    while (!queue.empty()) {
        VertexSet x = queue.back();
        queue.pop_back();
        for (VertexSet g : gens)
            if (lattice.insert(x | g).second) queue.push_back(x | g);
    }
    for (VertexSet sigma : lattice) {
        const int s = set_size(sigma);
        auto levels = restricted_faces(sigma, gens);
        std::map<int, std::size_t> rank_cache;
        Exponents m(nvars, 0);
        for (int v : members(sigma)) m[v] = 1;
        for (int i = 0; i <= std::min(i_max, s); ++i) {
            std::size_t b = homology_in_degree(levels, s - i - 2, field, rank_cache);
            if (b) table.add(i, m, static_cast<std::int64_t>(b));
        }
    }
    return table;
}

BettiTable hochster_betti(const std::vector<Monomial>& generators, const FieldSpec& field, int i_max,
                          bool polarize_input) {
    if (!polarize_input)
        for (const auto& g : generators)
            if (!g.is_squarefree()) throw Error(ErrorKind::NotSquarefree, "generator is not squarefree");
    BettiTable out;
    out.i_max = i_max;
    if (generators.empty()) return out;
    Polarization p = polarize(generators);
    BettiTable sq = hochster_betti(p.generators, p.origin.size(), field, i_max);
    for (const auto& [key, v] : sq.multigraded) {
        Exponents m(p.original_nvars, 0);
        for (std::size_t k = 0; k < key.second.size(); ++k)
            if (key.second[k]) ++m[p.origin[k]];
        out.add(key.first, m, v);
    }
    return out;
}

int linear_steps(const BettiTable& table, int g) {
    for (const auto& [key, v] : table.entries)
        if (key.first == 0 && key.second != g && v != 0)
            throw Error(ErrorKind::MixedGenerators, "generators are not all of degree " + std::to_string(g));
    int first_bad = INT_MAX;
    for (const auto& [key, v] : table.entries)
        if (key.first >= 1 && key.second > g + key.first && v != 0) first_bad = std::min(first_bad, key.first);
    return first_bad == INT_MAX ? kLinearThroughout : first_bad - 1;
}

TeraiYanagawaCheck check_terai_yanagawa(const SimplicialComplex& delta, const FieldSpec& field, int r) {
    if (delta.is_void()) throw Error(ErrorKind::VoidComplex, "void complex");
    const int d = delta.dim() + 1;
    if (r < 2 || r > d) throw Error(ErrorKind::BadParams, "need 2 <= r <= d");
    TeraiYanagawaCheck out;
    out.serre = serre_condition(delta, r, field);
    const int n = static_cast<int>(delta.num_vertices());
    BettiTable t = hochster_betti(delta.alexander_dual_generators(), delta.num_vertices(), field, r - 1);
    try {
        out.linear_steps = linear_steps(t, n - d);
        out.linear = out.linear_steps >= r - 1;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::MixedGenerators) throw;
        out.linear_steps = -1;
        out.linear = false;
    }
    return out;
}

// ------------------------------------------------------------ dual algebra

DualAlgebra::DualAlgebra(const SimplicialComplex& gamma) : gamma_(gamma) {
    if (!gamma.is_flag()) throw Error(ErrorKind::NotFlag, "dual algebra needs a flag complex");
    adjacent_.assign(gamma.num_vertices(), 0);
    auto levels = gamma.faces_by_size();
    if (levels.size() > 2)
        for (VertexSet e : levels[2]) {
            auto vs = members(e);
            adjacent_[vs[0]] |= singleton(vs[1]);
            adjacent_[vs[1]] |= singleton(vs[0]);
        }
}

std::optional<WordClass> DualAlgebra::normalize(const std::vector<int>& word) const {
    const std::size_t len = word.size();
    for (std::size_t p = 0; p < len; ++p)
        for (std::size_t q = p + 1; q < len; ++q) {
            if (word[q] == word[p]) return std::nullopt;
            if (!adjacent(word[p], word[q])) break;
        }
    WordClass out;
    std::vector<int> rest = word;
    while (!rest.empty()) {
        int best = -1;
        for (int k : head(rest))
            if (best < 0 || rest[k] < rest[best]) best = k;
        if (best % 2) out.sign = -out.sign;
        out.letters.push_back(rest[best]);
        rest.erase(rest.begin() + best);
    }
    return out;
}

std::vector<int> DualAlgebra::head(const std::vector<int>& word) const {
    std::vector<int> out;
    for (std::size_t k = 0; k < word.size(); ++k) {
        bool ok = true;
        for (std::size_t p = 0; p < k && ok; ++p) ok = word[p] != word[k] && adjacent(word[p], word[k]);
        if (ok) out.push_back(static_cast<int>(k));
    }
    return out;
}

const std::vector<std::vector<int>>& DualAlgebra::basis(int j) const {
    if (j < 0) throw Error(ErrorKind::BadParams, "negative degree");
    if (cache_.empty()) cache_.push_back({{}});
    while (static_cast<int>(cache_.size()) <= j) {
        std::set<std::vector<int>> next;
        for (const auto& w : cache_.back())
            for (int a = 0; a < static_cast<int>(num_letters()); ++a) {
                std::vector<int> ext = w;
                ext.push_back(a);
                if (auto nf = normalize(ext)) next.insert(nf->letters);
            }
        cache_.emplace_back(next.begin(), next.end());
    }
    return cache_[j];
}

std::vector<std::vector<std::vector<int>>> DualAlgebra::basis_below(const Exponents& m, int max_len) const {
    std::vector<std::vector<std::vector<int>>> out(1, {{}});
    for (int len = 1; len <= max_len; ++len) {
        std::set<std::vector<int>> next;
        for (const auto& w : out.back()) {
            Exponents used(num_letters(), 0);
            for (int a : w) ++used[a];
            for (int a = 0; a < static_cast<int>(num_letters()); ++a) {
                if (used[a] >= m[a]) continue;
                std::vector<int> ext = w;
                ext.push_back(a);
                if (auto nf = normalize(ext)) next.insert(nf->letters);
            }
        }
        out.emplace_back(next.begin(), next.end());
        if (out.back().empty()) break;
    }
    out.resize(max_len + 1);
    return out;
}

std::string DualAlgebra::word_name(const std::vector<int>& word) const {
    std::string s = "[";
    for (int a : word) s += "Z" + gamma_.labels()[a];
    return s + "]";
}

std::vector<WordClass> gk_basis(const SimplicialComplex& gamma, int j) {
    DualAlgebra alg(gamma);
    std::vector<WordClass> out;
    for (const auto& w : alg.basis(j)) out.push_back(WordClass{w, 1});
    return out;
}

namespace {

GkDifferential differential(const DualAlgebra& alg, int j) {
    if (j < 1) throw Error(ErrorKind::BadParams, "differential needs degree at least 1");
    GkDifferential d;
    d.source_basis = alg.basis(j);
    d.target_basis = alg.basis(j - 1);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t t = 0; t < d.target_basis.size(); ++t) index[d.target_basis[t]] = t;
    for (std::size_t s = 0; s < d.source_basis.size(); ++s) {
        const auto& w = d.source_basis[s];
        std::map<std::pair<std::size_t, int>, int> acc;
        for (int k : alg.head(w)) {
            std::vector<int> rest = w;
            rest.erase(rest.begin() + k);
            auto nf = alg.normalize(rest);
            if (!nf) continue;
            acc[{index.at(nf->letters), w[k]}] += (k % 2 ? -1 : 1) * nf->sign;
        }
        for (const auto& [key, c] : acc)
            if (c != 0) d.entries.push_back(GkEntry{s, key.first, c, key.second});
    }
    return d;
}

}  // namespace

GkDifferential gk_differential(const SimplicialComplex& gamma, int j) {
    DualAlgebra alg(gamma);
    return differential(alg, j);
}

std::optional<int> gk_square_zero_failure(const SimplicialComplex& gamma, int j_max) {
    DualAlgebra alg(gamma);
    for (int j = 2; j <= j_max; ++j) {
        GkDifferential upper = differential(alg, j);
        GkDifferential lower = differential(alg, j - 1);
        std::vector<std::vector<const GkEntry*>> by_source(lower.source_basis.size());
        for (const auto& e : lower.entries) by_source[e.source].push_back(&e);
        std::vector<std::map<std::tuple<std::size_t, int, int>, long>> acc(upper.source_basis.size());
        for (const auto& e : upper.entries)
            for (const GkEntry* f : by_source[e.target]) {
                int a = std::min(e.variable, f->variable), b = std::max(e.variable, f->variable);
                if (a != b && !alg.adjacent(a, b)) continue;  // the product vanishes in the face ring
                acc[e.source][{f->target, a, b}] += static_cast<long>(e.coefficient) * f->coefficient;
            }
        for (const auto& m : acc)
            for (const auto& [key, c] : m)
                if (c != 0) return j;
    }
    return std::nullopt;
}

// ------------------------------------------------------------ multidegrees

MultidegreeColor classify_multidegree(const SimplicialComplex& gamma, const Exponents& m) {
    if (m.size() != gamma.num_vertices()) throw Error(ErrorKind::LengthMismatch, "multidegree length mismatch");
    VertexSet support = 0;
    for (std::size_t v = 0; v < m.size(); ++v)
        if (m[v]) support |= singleton(static_cast<int>(v));
    auto vs = members(support);
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (!gamma.contains(singleton(vs[a]) | singleton(vs[b]))) return {false, vs[a], vs[b]};
    if (!vs.empty() && !gamma.contains(support)) return {false, -1, -1};
    return {};
}

namespace {

bool in_face_ring(const SimplicialComplex& gamma, const Exponents& u) {
    VertexSet support = 0;
    for (std::size_t v = 0; v < u.size(); ++v)
        if (u[v]) support |= singleton(static_cast<int>(v));
    return gamma.contains(support);
}

bool divides(const Monomial& g, const Exponents& u) {
    for (std::size_t v = 0; v < u.size(); ++v)
        if (g[v] > u[v]) return false;
    return true;
}

void check_generators(const SimplicialComplex& gamma, const std::vector<Monomial>& gens) {
    for (const auto& g : gens) {
        if (g.nvars() != gamma.num_vertices())
            throw Error(ErrorKind::LengthMismatch, "generator has the wrong number of variables");
        if (!classify_multidegree(gamma, g.exponents()).blue)
            throw Error(ErrorKind::NotBlueGenerators, "generators must be nonzero in the face ring");
    }
}

// Betti numbers of the ideal in multidegree m for lo <= i <= hi, from the
// generalized Koszul complex tensored with the ideal.
std::vector<std::int64_t> tor_range(const DualAlgebra& alg, const std::vector<Monomial>& gens, const Exponents& m,
                                    int lo, int hi, const FieldSpec& field) {
    const SimplicialComplex& gamma = alg.complex();
    auto words = alg.basis_below(m, hi + 1);
    // chain groups: words whose complementary coefficient lies in the ideal
    std::vector<std::vector<const std::vector<int>*>> chains(hi + 2);
    std::vector<std::map<std::vector<int>, std::uint32_t>> index(hi + 2);
    for (int len = 0; len <= hi + 1; ++len)
        for (const auto& w : words[len]) {
            Exponents u = m;
            for (int a : w) --u[a];
            if (!in_face_ring(gamma, u)) continue;
            bool in_ideal = false;
            for (const auto& g : gens)
                if (divides(g, u)) {
                    in_ideal = true;
                    break;
                }
            if (!in_ideal) continue;
            index[len].emplace(w, static_cast<std::uint32_t>(chains[len].size()));
            chains[len].push_back(&w);
        }
    auto boundary_rank = [&](int len) -> std::size_t {
        if (len <= 0 || chains[len].empty() || chains[len - 1].empty()) return 0;
        SparseIntMatrix mat(chains[len].size(), chains[len - 1].size());
        for (std::size_t r = 0; r < chains[len].size(); ++r) {
            const auto& w = *chains[len][r];
            std::map<std::uint32_t, std::int64_t> row;
            for (int k : alg.head(w)) {
                std::vector<int> rest = w;
                rest.erase(rest.begin() + k);
                auto nf = alg.normalize(rest);
                if (!nf) continue;
                auto it = index[len - 1].find(nf->letters);
                if (it == index[len - 1].end()) continue;  // coefficient times the letter vanishes
                row[it->second] += (k % 2 ? -1 : 1) * nf->sign;
            }
            for (auto [c, v] : row)
                if (v) mat.add(r, c, v);
        }
        return rank(mat, field);
    };
    std::vector<std::size_t> ranks(hi + 3, 0);
    for (int len = std::max(lo, 1); len <= hi + 1; ++len) ranks[len] = boundary_rank(len);
    std::vector<std::int64_t> out;
    for (int i = lo; i <= hi; ++i)
        out.push_back(static_cast<std::int64_t>(chains[i].size() - ranks[i] - ranks[i + 1]));
    return out;
}

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t t = 1; t <= k; ++t) {
        r = r * (n - k + t) / t;
        if (r > cap) return cap;
    }
    return static_cast<std::uint64_t>(r);
}

void enumerate_monomials(std::size_t nvars, int max_deg, std::size_t v, Exponents& cur,
                         const std::function<void(const Exponents&)>& visit) {
    if (v == nvars) {
        visit(cur);
        return;
    }
    for (int e = 0; e <= max_deg; ++e) {
        cur[v] = static_cast<std::uint16_t>(e);
        enumerate_monomials(nvars, max_deg - e, v + 1, cur, visit);
    }
    cur[v] = 0;
}

}  // namespace

std::int64_t tor_dimension(const SimplicialComplex& gamma, const std::vector<Monomial>& generators, int i,
                           const Exponents& m, const FieldSpec& field) {
    if (i < 0) throw Error(ErrorKind::BadParams, "negative homological degree");
    if (m.size() != gamma.num_vertices()) throw Error(ErrorKind::LengthMismatch, "multidegree length mismatch");
    check_generators(gamma, generators);
    if (generators.empty()) return 0;
    DualAlgebra alg(gamma);
    return tor_range(alg, generators, m, i, i, field).front();
}

BettiTable module_betti_over_gamma(const SimplicialComplex& gamma, const std::vector<Monomial>& generators,
                                   int i_max, const FieldSpec& field, const SweepLimits& limits) {
    if (i_max < 0) throw Error(ErrorKind::BadParams, "negative truncation");
    check_generators(gamma, generators);
    BettiTable table;
    table.i_max = i_max;
    if (generators.empty()) return table;
    DualAlgebra alg(gamma);
    const std::size_t nvars = gamma.num_vertices();

    // j - i over the face ring is bounded by the polynomial-ring value in the same window
    BettiTable poly = hochster_betti(generators, field, i_max);
    const int reg = poly.regularity().value_or(0);
    int gmin = INT_MAX;
    for (const auto& g : generators) gmin = std::min(gmin, g.degree());
    const int top = i_max + reg;

    std::uint64_t estimate = 0;
    for (const auto& g : generators) {
        int room = top - g.degree();
        if (room < 0) continue;
        // monomials of degree <= room in nvars variables
        estimate += saturating_binomial(room + nvars, nvars, limits.max_multidegrees + 1);
        if (estimate > limits.max_multidegrees) break;
    }
    if (estimate > limits.max_multidegrees)
        throw Error(ErrorKind::SweepTooLarge, "more than " + std::to_string(limits.max_multidegrees) +
                                                  " multidegrees (estimated at least " + std::to_string(estimate) + ")");

    std::set<Exponents> sweep;
    for (const auto& g : generators) {
        int room = top - g.degree();
        if (room < 0) continue;
        Exponents cur(nvars, 0);
        enumerate_monomials(nvars, room, 0, cur, [&](const Exponents& u) {
            Exponents m = u;
            for (std::size_t v = 0; v < nvars; ++v) m[v] += g[v];
            sweep.insert(std::move(m));
        });
    }
    for (const auto& m : sweep) {
        int deg = 0;
        for (auto e : m) deg += e;
        int lo = std::max(0, deg - reg), hi = std::min(i_max, deg - gmin);
        if (lo > hi) continue;
        auto vals = tor_range(alg, generators, m, lo, hi, field);
        for (int i = lo; i <= hi; ++i) table.add(i, m, vals[i - lo]);
    }
    return table;
}

// ------------------------------------------------------------ Poincare series

IntSeries poincare_from_hilbert(const std::vector<std::int64_t>& h, int krull_dim, int i_max) {
    if (i_max < 0 || krull_dim < 0) throw Error(ErrorKind::BadParams, "negative bound");
    IntSeries denom;
    for (std::size_t k = 0; k < h.size(); ++k) denom.emplace_back(static_cast<long>(k % 2 ? -h[k] : h[k]));
    return series_divide(one_plus_t_power(krull_dim, i_max), denom, i_max);
}

std::vector<Monomial> canonical_module_monomials(const SimplicialComplex& delta) {
    const std::size_t n = delta.num_vertices();
    std::vector<Monomial> out;
    for (VertexSet s : canonical_module_generators(delta)) {
        std::vector<std::uint16_t> e(2 * n, 0);
        for (int v : members(s)) e[n + v] = 1;
        out.emplace_back(std::move(e));
    }
    return out;
}

TruncatedSeries poincare_r_delta(const SimplicialComplex& delta, const FieldSpec& field, int i_max,
                                 const SweepLimits& limits) {
    if (delta.is_void()) throw Error(ErrorKind::VoidComplex, "void complex");
    if (!delta.is_pure()) throw Error(ErrorKind::NotPure, "needs a pure complex");
    if (!delta.is_flag()) throw Error(ErrorKind::NotFlag, "needs a flag complex");
    if (i_max < 0) throw Error(ErrorKind::BadParams, "negative truncation");
    const int n = static_cast<int>(delta.num_vertices());
    const int d = delta.dim() + 1;
    BierBall ball = bier_ball(delta);
    // the face ring of the Bier ball is Koszul with h-vector f(delta)
    IntSeries diag = poincare_from_hilbert(delta.f_vector(), n, i_max);
    TruncatedSeries base(i_max);
    for (int i = 0; i <= i_max; ++i) base.add(i, i, diag[i]);
    TruncatedSeries module(i_max);
    if (i_max >= 1) {
        BettiTable omega =
            module_betti_over_gamma(ball.gamma, canonical_module_monomials(delta), i_max - 1, field, limits);
        // shift so that the canonical module is generated in degree one
        for (const auto& [key, v] : omega.entries) module.add(key.first, key.second - (n - d) + 1, v);
    }
    return TruncatedSeries::idealization(base, module);
}

KoszulVerdict koszul_verdict(const SimplicialComplex& delta, const FieldSpec& field) {
    if (delta.is_void()) throw Error(ErrorKind::VoidComplex, "void complex");
    if (!delta.is_pure()) throw Error(ErrorKind::NotPure, "needs a pure complex");
    if (!delta.is_flag()) throw Error(ErrorKind::NotFlag, "needs a flag complex");
    KoszulVerdict out;
    auto witness = serre_violation(delta, delta.dim() + 1, field);
    if (!witness) {
        out.koszul = true;
        out.linear_steps = kLinearThroughout;
        out.reason = "Cohen-Macaulay over " + field.name();
        return out;
    }
    out.linear_steps = serre_profile(delta, {field.characteristic()}).at(field.characteristic());
    std::ostringstream os;
    os << "reduced homology in degree " << witness->degree << " of ";
    if (witness->face == 0)
        os << "the complex";
    else
        os << "the link of " << delta.face_name(witness->face);
    os << " is nonzero over " << field.name() << "; residue field resolution is linear for exactly "
       << out.linear_steps << " steps";
    out.reason = os.str();
    return out;
}

}  // namespace bierflag
