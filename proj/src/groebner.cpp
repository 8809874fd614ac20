#include "bierflag/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_set>

#include "bierflag/error.hpp"
#include "bierflag/homology.hpp"

namespace bierflag {

FacetOrder identity_order(std::size_t m) {
    FacetOrder o(m);
    std::iota(o.begin(), o.end(), 0);
    return o;
}

void validate_facet_order(const FacetOrder& order, std::size_t m) {
    if (order.size() != m) throw Error(ErrorKind::BadParams, "facet order must list every facet once");
    std::vector<bool> seen(m, false);
    for (std::size_t k : order) {
        if (k >= m || seen[k]) throw Error(ErrorKind::BadParams, "facet order is not a permutation");
        seen[k] = true;
    }
}

TermOrder compatible_term_order(const RingContext& ring, const FacetOrder& order) {
    validate_facet_order(order, ring.num_facets());
    const std::size_t nv = ring.nvars();
    std::vector<std::size_t> zblock;
    for (auto it = order.rbegin(); it != order.rend(); ++it) zblock.push_back(ring.z(*it));
    std::vector<std::size_t> priority;
    std::vector<bool> used(nv, false);
    auto push = [&](std::size_t v) {
        if (!used[v]) {
            used[v] = true;
            priority.push_back(v);
        }
    };
    for (std::size_t i = 0; i < ring.n(); ++i) push(ring.y(i));
    for (std::size_t i = 0; i < ring.n(); ++i) push(ring.x(i));
    for (std::size_t k = 0; k < ring.num_facets(); ++k) push(ring.z(k));
    TermOrder t = TermOrder::block(std::move(zblock), std::move(priority));
    t.set_description("facet-compatible block order");
    return t;
}

PolyRing presentation_ring(const RingContext& ring, TermOrder order, const FieldSpec& field) {
    return PolyRing(ring.variable_names(), std::move(order), field);
}

namespace {

std::vector<Polynomial> reduced_basis(const PolyRing& ring, std::vector<Polynomial> g) {
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& a = g[j].lead_monomial();
            const Monomial& b = g[i].lead_monomial();
            if (a.divides(b) && (a != b || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        out.push_back(ring.make_monic(ring.reduce(minimal[i], others)));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ring.order().compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    return out;
}

}  // namespace

GroebnerResult buchberger(const PolyRing& ring, const std::vector<Polynomial>& generators, int degree_cap,
                          bool keep_log) {
    GroebnerResult res;
    std::vector<Polynomial> g;
    for (const auto& p : generators) {
        if (p.is_zero()) continue;
        if (p.degree() > degree_cap)
            throw Error(ErrorKind::BadParams, "degree cap below the degree of a generator");
        g.push_back(ring.make_monic(ring.adopt(p)));
    }
    std::set<std::tuple<int, std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            pairs.emplace(g[i].lead_monomial().lcm(g[j].lead_monomial()).degree(), i, j);
    while (!pairs.empty()) {
        auto [deg, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        if (deg > degree_cap) {
            res.truncated = true;
            res.exceeded_degree = deg;
            break;
        }
        ++res.pairs_considered;
        if (g[i].lead_monomial().coprime(g[j].lead_monomial()) || (g[i].is_monomial() && g[j].is_monomial())) {
            ++res.pairs_skipped;
            continue;
        }
        Polynomial s = ring.s_polynomial(g[i], g[j]);
        Polynomial r = ring.reduce(s, g);
        if (keep_log)
            res.log.push_back("S(" + ring.to_string(g[i]) + ", " + ring.to_string(g[j]) + ") = " +
                              ring.to_string(s) + " -> " + ring.to_string(r));
        if (r.is_zero()) {
            ++res.zero_reductions;
            continue;
        }
        r = ring.make_monic(r);
        const std::size_t k = g.size();
        for (std::size_t a = 0; a < k; ++a)
            pairs.emplace(g[a].lead_monomial().lcm(r.lead_monomial()).degree(), a, k);
        g.push_back(std::move(r));
    }
    res.basis = reduced_basis(ring, std::move(g));
    return res;
}

bool is_groebner_basis(const PolyRing& ring, const std::vector<Polynomial>& basis, int degree_cap) {
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const Monomial& a = basis[i].lead_monomial();
            const Monomial& b = basis[j].lead_monomial();
            if (a.coprime(b) || a.lcm(b).degree() > degree_cap) continue;
            if (!ring.reduce(ring.s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
        }
    return true;
}

std::vector<std::int64_t> hilbert_function_by_normal_forms(std::size_t nvars,
                                                           const std::vector<Monomial>& leads, int up_to) {
    std::vector<std::int64_t> out;
    auto standard = [&](const Monomial& m) {
        for (const auto& l : leads)
            if (l.divides(m)) return false;
        return true;
    };
    std::vector<Monomial> level;
    Monomial one(nvars);
    if (standard(one)) level.push_back(one);
    for (int k = 0; k <= up_to; ++k) {
        out.push_back(static_cast<std::int64_t>(level.size()));
        if (k == up_to) break;
        std::vector<Monomial> next;
        for (const auto& m : level) {
            std::size_t last = 0;
            for (std::size_t v = 0; v < nvars; ++v)
                if (m[v]) last = v;
            for (std::size_t v = last; v < nvars; ++v) {
                Monomial c = m * Monomial::variable(nvars, v);
                if (standard(c)) next.push_back(std::move(c));
            }
        }
        level.swap(next);
    }
    return out;
}

std::vector<std::int64_t> hilbert_function_by_normal_forms(const PolyRing& ring,
                                                           const std::vector<Polynomial>& generators,
                                                           int up_to) {
    GroebnerResult gb = buchberger(ring, generators, std::max(up_to, 1), false);
    std::vector<Monomial> leads;
    for (const auto& p : gb.basis) leads.push_back(p.lead_monomial());
    return hilbert_function_by_normal_forms(ring.nvars(), leads, up_to);
}

namespace {

// Whether facet c meets the union of the placed facets in a pure complex of codimension one.
bool extends_shelling(const std::vector<VertexSet>& facets, const std::vector<std::size_t>& placed,
                      std::size_t c, int ridge) {
    if (placed.empty()) return true;
    std::vector<VertexSet> ridges;
    for (std::size_t k : placed) {
        VertexSet i = facets[c] & facets[k];
        if (set_size(i) == ridge) ridges.push_back(i);
    }
    if (ridges.empty()) return false;
    for (std::size_t k : placed) {
        VertexSet i = facets[c] & facets[k];
        if (set_size(i) == ridge) continue;
        bool covered = false;
        for (VertexSet r : ridges)
            if (is_subset(i, r)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

}  // namespace

bool is_shelling_order(const SimplicialComplex& delta, const FacetOrder& order) {
    if (!delta.is_pure()) throw Error(ErrorKind::NotPure, "shellings are defined for pure complexes");
    validate_facet_order(order, delta.facets().size());
    const int ridge = delta.dim();
    std::vector<std::size_t> placed;
    for (std::size_t c : order) {
        if (!extends_shelling(delta.facets(), placed, c, ridge)) return false;
        placed.push_back(c);
    }
    return true;
}

namespace {

struct ShellingSearch {
    const std::vector<VertexSet>& facets;
    int ridge;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::unordered_set<std::uint64_t> failed;
    std::vector<std::size_t> placed;

    bool dfs(std::uint64_t mask) {
        if (placed.size() == facets.size()) return true;
        if (failed.count(mask)) return false;
        for (std::size_t c = 0; c < facets.size(); ++c) {
            if (mask >> c & 1) continue;
            if (++nodes > budget)
                throw Error(ErrorKind::BudgetExceeded,
                            "shelling search stopped after " + std::to_string(budget) + " nodes (" +
                                std::to_string(failed.size()) + " failed facet sets recorded)");
            if (!extends_shelling(facets, placed, c, ridge)) continue;
            placed.push_back(c);
            if (dfs(mask | (std::uint64_t{1} << c))) return true;
            placed.pop_back();
        }
        failed.insert(mask);
        return false;
    }
};

}  // namespace

ShellingResult find_shelling(const SimplicialComplex& delta, std::uint64_t node_budget) {
    if (!delta.is_pure()) throw Error(ErrorKind::NotPure, "shellings are defined for pure complexes");
    if (delta.facets().size() > 64) throw Error(ErrorKind::BadParams, "shelling search supports at most 64 facets");
    ShellingSearch s{delta.facets(), delta.dim(), node_budget, 0, {}, {}};
    ShellingResult r;
    if (s.dfs(0)) {
        r.status = ShellingResult::Status::Found;
        r.order = s.placed;
    }
    r.nodes = s.nodes;
    r.failed_states = s.failed.size();
    return r;
}

namespace {

void check_gb_preconditions(const SimplicialComplex& delta) {
    if (!delta.is_pure()) throw Error(ErrorKind::NotPure, "needs a pure complex");
    if (!delta.is_flag()) throw Error(ErrorKind::NotFlag, "needs a flag complex");
}

std::vector<Generator> monomial_quadrics(const Presentation& p) {
    std::vector<Generator> out;
    for (const auto& g : p.generators)
        if (g.family != Family::Binomial) out.push_back(g);
    return out;
}

std::vector<Polynomial> to_polys(const PolyRing& ring, const std::vector<Generator>& gens) {
    std::vector<Polynomial> out;
    for (const auto& g : gens) out.push_back(ring.make(g.terms));
    return out;
}

}  // namespace

namespace {

QuadraticGbReport run_quadratic_gb_test(const SimplicialComplex& delta, const FacetOrder& order,
                                        const FieldSpec& field, bool keep_log) {
    Presentation pres = r_delta_presentation(delta);
    PolyRing ring = presentation_ring(pres.ring, compatible_term_order(pres.ring, order), field);
    std::vector<Generator> gens = monomial_quadrics(pres);
    for (auto& b : quadratic_binomials(delta)) gens.push_back(std::move(b));
    std::vector<Polynomial> c = to_polys(ring, gens);
    QuadraticGbReport rep;
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            if (c[i].is_monomial() && c[j].is_monomial()) continue;
            if (c[i].lead_monomial().coprime(c[j].lead_monomial())) continue;
            ++rep.pairs_checked;
            Polynomial s = ring.s_polynomial(c[i], c[j]);
            Polynomial r = ring.reduce(s, c);
            std::string pair = "S(" + ring.to_string(c[i]) + ", " + ring.to_string(c[j]) + ")";
            if (keep_log) rep.log.push_back(pair + " = " + ring.to_string(s) + " -> " + ring.to_string(r));
            if (!r.is_zero()) {
                rep.passed = false;
                rep.offending_pair = pair;
                rep.remainder = ring.to_string(r);
                return rep;
            }
        }
    return rep;
}

}  // namespace

QuadraticGbReport quadratic_gb_test(const SimplicialComplex& delta, const FacetOrder& order,
                                    const FieldSpec& field, bool keep_log) {
    check_gb_preconditions(delta);
    if (!serre_condition(delta, 2, field)) throw Error(ErrorKind::NotS2, "needs a complex satisfying (S2)");
    return run_quadratic_gb_test(delta, order, field, keep_log);
}

namespace {

int z_degree(const RingContext& ring, const Monomial& m) {
    int d = 0;
    for (std::size_t k = 0; k < ring.num_facets(); ++k) d += m[ring.z(k)];
    return d;
}

// Extends a facet order one facet at a time. The quadratic generators of a
// prefix P are the monomial quadrics plus the binomials of codimension-one
// pairs inside P. A prefix is kept only if those generators form a Groebner
// basis, which is checked incrementally through the S-pairs of the new binomials.
struct DirectSearch {
    const SimplicialComplex& delta;
    const Presentation& pres;
    const FieldSpec& field;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<std::string> names;
    std::vector<Polynomial> monomials;
    std::vector<std::size_t> placed;
    std::vector<bool> used;
    std::unordered_set<std::uint64_t> failed;

    FacetOrder completed(std::size_t c) const {
        FacetOrder o = placed;
        o.push_back(c);
        for (std::size_t k = 0; k < used.size(); ++k)
            if (!used[k] && k != c) o.push_back(k);
        return o;
    }

    bool prefix_ok(std::size_t c) const {
        const int ridge = delta.dim();
        const auto& facets = pres.ring.facets;
        PolyRing ring(names, compatible_term_order(pres.ring, completed(c)), field);
        std::vector<Polynomial> binomials;
        for (std::size_t a = 0; a < placed.size(); ++a)
            for (std::size_t b = a + 1; b < placed.size(); ++b)
                if (set_size(facets[placed[a]] & facets[placed[b]]) == ridge)
                    binomials.push_back(ring.make(binomial_generator(pres.ring, placed[b], placed[a]).terms));
        const std::size_t old_count = binomials.size();
        std::vector<std::size_t> distant;
        for (std::size_t a = 0; a < placed.size(); ++a) {
            if (set_size(facets[placed[a]] & facets[c]) == ridge)
                binomials.push_back(ring.make(binomial_generator(pres.ring, c, placed[a]).terms));
            else
                distant.push_back(placed[a]);
        }
        std::vector<const Polynomial*> basis;
        for (const auto& b : binomials) basis.push_back(&b);
        for (const auto& m : monomials) basis.push_back(&m);
        const DivisorIndex index(basis, ring.nvars());
        // every binomial of the ideal involving only placed facets must
        // reduce to zero, since no later generator divides its terms
        for (std::size_t a : distant)
            if (!ring.reduce(ring.make(binomial_generator(pres.ring, c, a).terms), index).is_zero()) return false;
        for (std::size_t k = old_count; k < binomials.size(); ++k) {
            const Polynomial& f = binomials[k];
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (j >= k && j < binomials.size()) continue;
                const Polynomial& g = *basis[j];
                if (f.lead_monomial().coprime(g.lead_monomial())) continue;
                Polynomial s = ring.s_polynomial(f, g);
                // a term of z-degree two is divisible by a z-quadric, so such
                // S-polynomials always reduce to zero
                bool high = std::all_of(s.terms.begin(), s.terms.end(), [&](const Term& t) {
                    return z_degree(pres.ring, t.mono) >= 2;
                });
                if (high) continue;
                if (!ring.reduce(s, index).is_zero()) return false;
            }
        }
        return true;
    }

    bool dfs(std::uint64_t mask) {
        if (placed.size() == used.size()) return run_quadratic_gb_test(delta, placed, field, false).passed;
        if (failed.count(mask)) return false;
        for (std::size_t c = 0; c < used.size(); ++c) {
            if (used[c]) continue;
            if (++nodes > budget)
                throw Error(ErrorKind::BudgetExceeded,
                            "facet-order search stopped after " + std::to_string(budget) + " nodes");
            if (!prefix_ok(c)) continue;
            placed.push_back(c);
            used[c] = true;
            if (dfs(mask | (std::uint64_t{1} << c))) return true;
            used[c] = false;
            placed.pop_back();
        }
        failed.insert(mask);
        return false;
    }
};

}  // namespace

QuadraticGbSearch has_quadratic_gb(const SimplicialComplex& delta, GbStrategy strategy,
                                   std::uint64_t node_budget, const FieldSpec& field) {
    check_gb_preconditions(delta);
    QuadraticGbSearch out;
    if (strategy == GbStrategy::ViaShelling) {
        ShellingResult r = find_shelling(delta, node_budget);
        out.exists = r.status == ShellingResult::Status::Found;
        out.witness = r.order;
        out.nodes = r.nodes;
        return out;
    }
    Presentation pres = r_delta_presentation(delta);
    if (pres.ring.num_facets() > 64)
        throw Error(ErrorKind::BadParams, "facet-order search supports at most 64 facets");
    DirectSearch s{delta, pres, field, node_budget, 0, pres.ring.variable_names(), {}, {}, {}, {}};
    for (const auto& g : monomial_quadrics(pres)) s.monomials.push_back(Polynomial{g.terms});
    s.used.assign(pres.ring.num_facets(), false);
    out.exists = s.dfs(0);
    if (out.exists) out.witness = s.placed;
    out.nodes = s.nodes;
    return out;
}

}  // namespace bierflag
