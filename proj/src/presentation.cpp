#include "bierflag/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "bierflag/error.hpp"
#include "bierflag/homology.hpp"

namespace bierflag {

std::vector<std::string> RingContext::variable_names() const {
    std::vector<std::string> names;
    for (const auto& l : delta.labels()) names.push_back("x_" + l);
    if (!artinian)
        for (const auto& l : delta.labels()) names.push_back("y_" + l);
    for (VertexSet f : facets) names.push_back("z_" + delta.face_name(f));
    return names;
}

Monomial RingContext::y_monomial(VertexSet s) const {
    Monomial m(nvars());
    for (int v : members(s)) m = m * Monomial::variable(nvars(), y(v));
    return m;
}

Monomial RingContext::x_monomial(VertexSet s) const {
    Monomial m(nvars());
    for (int v : members(s)) m = m * Monomial::variable(nvars(), x(v));
    return m;
}

Monomial RingContext::z_variable(std::size_t k) const { return Monomial::variable(nvars(), z(k)); }

std::size_t RingContext::facet_index(VertexSet f) const {
    auto it = std::find(facets.begin(), facets.end(), f);
    if (it == facets.end()) throw Error(ErrorKind::NotAFace, "not a facet: " + delta.face_name(f));
    return static_cast<std::size_t>(it - facets.begin());
}

RingContext make_ring_context(const SimplicialComplex& delta) {
    if (delta.is_void()) throw Error(ErrorKind::VoidComplex, "void complex");
    if (!delta.is_pure()) throw Error(ErrorKind::NotPure, "the presentation needs a pure complex");
    if (2 * delta.num_vertices() + delta.facets().size() > 4096)
        throw Error(ErrorKind::BadParams, "too many variables");
    return RingContext{delta, delta.facets(), false};
}

const char* to_string(Family f) {
    switch (f) {
        case Family::Nonface: return "nonface";
        case Family::Whisker: return "whisker";
        case Family::ZQuadric: return "z-quadric";
        case Family::Mixed: return "mixed";
        case Family::Binomial: return "binomial";
    }
    return "?";
}

std::size_t Presentation::count(Family f) const {
    return static_cast<std::size_t>(std::count_if(generators.begin(), generators.end(),
                                                  [f](const Generator& g) { return g.family == f; }));
}

std::vector<Polynomial> Presentation::polynomials(const PolyRing& r) const {
    std::vector<Polynomial> out;
    for (const auto& g : generators) out.push_back(r.make(g.terms));
    return out;
}

Generator binomial_generator(const RingContext& ring, std::size_t a, std::size_t b) {
    VertexSet fa = ring.facets[a], fb = ring.facets[b];
    Generator g{Family::Binomial, {}, static_cast<int>(a), static_cast<int>(b)};
    g.terms.push_back(Term{mpq_class(1), ring.y_monomial(fa & ~fb) * ring.z_variable(a)});
    g.terms.push_back(Term{mpq_class(-1), ring.y_monomial(fb & ~fa) * ring.z_variable(b)});
    return g;
}

namespace {

Generator monomial_generator(Family family, Monomial m, int a = -1, int b = -1) {
    return Generator{family, {Term{mpq_class(1), std::move(m)}}, a, b};
}

// Stored representative of an unordered pair: the lexicographically larger facet first.
Generator pair_binomial(const RingContext& ring, std::size_t i, std::size_t j) {
    return i > j ? binomial_generator(ring, i, j) : binomial_generator(ring, j, i);
}

}  // namespace

Presentation r_delta_presentation(const SimplicialComplex& delta) {
    Presentation p{make_ring_context(delta), {}};
    const RingContext& ring = p.ring;
    const std::size_t n = ring.n(), m = ring.num_facets();
    for (VertexSet s : delta.minimal_nonfaces())
        p.generators.push_back(monomial_generator(Family::Nonface, ring.x_monomial(s)));
    for (std::size_t i = 0; i < n; ++i)
        p.generators.push_back(monomial_generator(
            Family::Whisker,
            Monomial::variable(ring.nvars(), ring.x(i)) * Monomial::variable(ring.nvars(), ring.y(i))));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b)
            p.generators.push_back(monomial_generator(
                Family::ZQuadric, ring.z_variable(a) * ring.z_variable(b), static_cast<int>(a),
                static_cast<int>(b)));
    for (std::size_t a = 0; a < m; ++a)
        for (int i : members(delta.ground() & ~ring.facets[a]))
            p.generators.push_back(monomial_generator(
                Family::Mixed, Monomial::variable(ring.nvars(), ring.x(i)) * ring.z_variable(a),
                static_cast<int>(a)));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) p.generators.push_back(pair_binomial(ring, a, b));
    return p;
}

namespace {

bool joined_by_ridge_path(const RingContext& ring, std::size_t a, std::size_t b) {
    const VertexSet common = ring.facets[a] & ring.facets[b];
    const int ridge = ring.delta.dim();  // vertices in a codimension-one face
    std::vector<std::size_t> pool;
    for (std::size_t k = 0; k < ring.num_facets(); ++k)
        if (is_subset(common, ring.facets[k])) pool.push_back(k);
    std::vector<bool> seen(ring.num_facets(), false);
    std::vector<std::size_t> stack{a};
    seen[a] = true;
    while (!stack.empty()) {
        std::size_t k = stack.back();
        stack.pop_back();
        if (k == b) return true;
        for (std::size_t l : pool)
            if (!seen[l] && set_size(ring.facets[k] & ring.facets[l]) == ridge) {
                seen[l] = true;
                stack.push_back(l);
            }
    }
    return false;
}

}  // namespace

Presentation binomial_redundancy_filter(const Presentation& p) {
    Presentation out{p.ring, {}};
    const int ridge = p.ring.delta.dim();
    for (const auto& g : p.generators) {
        if (g.family == Family::Binomial) {
            std::size_t a = static_cast<std::size_t>(g.facet_a), b = static_cast<std::size_t>(g.facet_b);
            bool codim_one = set_size(p.ring.facets[a] & p.ring.facets[b]) == ridge;
            if (!codim_one && joined_by_ridge_path(p.ring, a, b)) continue;
        }
        out.generators.push_back(g);
    }
    return out;
}

std::vector<Generator> quadratic_binomials(const SimplicialComplex& delta) {
    RingContext ring = make_ring_context(delta);
    std::vector<Generator> out;
    const int ridge = delta.dim();
    for (std::size_t a = 0; a < ring.num_facets(); ++a)
        for (std::size_t b = a + 1; b < ring.num_facets(); ++b)
            if (set_size(ring.facets[a] & ring.facets[b]) == ridge) out.push_back(pair_binomial(ring, a, b));
    return out;
}

Presentation artinian_reduction(const Presentation& p) {
    if (p.ring.artinian) return p;
    Presentation out{p.ring, {}};
    out.ring.artinian = true;
    const std::size_t n = p.ring.n(), target = out.ring.nvars();
    auto substitute = [&](const Monomial& m) {
        std::vector<std::uint16_t> e(target, 0);
        for (std::size_t i = 0; i < n; ++i) e[i] = m[p.ring.x(i)] + m[p.ring.y(i)];
        for (std::size_t k = 0; k < p.ring.num_facets(); ++k) e[out.ring.z(k)] = m[p.ring.z(k)];
        return Monomial(std::move(e));
    };
    for (const auto& g : p.generators) {
        Generator h = g;
        for (auto& t : h.terms) t.mono = substitute(t.mono);
        out.generators.push_back(std::move(h));
    }
    return out;
}

bool is_quadratic(const SimplicialComplex& delta, const FieldSpec& field) {
    if (!delta.is_pure()) throw Error(ErrorKind::NotPure, "quadraticity needs a pure complex");
    if (!delta.is_flag()) throw Error(ErrorKind::NotFlag, "quadraticity needs a flag complex");
    return serre_condition(delta, 2, field);
}

HVector h_vector_r_delta(const SimplicialComplex& delta) {
    if (delta.is_void()) throw Error(ErrorKind::VoidComplex, "void complex");
    if (!delta.is_pure()) throw Error(ErrorKind::NotPure, "h-vector of the idealization needs a pure complex");
    FVector f = delta.f_vector();
    const int d = delta.dim() + 1;
    HVector h(d + 2, 0);
    h[0] = 1;
    h[d + 1] = 1;
    // f[k] is f_{k-1}; entry i (1..d) is f_{i-1} + f_{d-i}
    for (int i = 1; i <= d; ++i) h[i] = f[i] + f[d - i + 1];
    return h;
}

ExportFormat parse_export_format(const std::string& name) {
    if (name == "macaulay2" || name == "m2") return ExportFormat::Macaulay2;
    if (name == "singular") return ExportFormat::Singular;
    if (name == "json") return ExportFormat::Json;
    throw Error(ErrorKind::UnsupportedFormat, "unknown export format '" + name + "'");
}

namespace {

std::string term_list(const Generator& g, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : g.terms) {
        bool negative = sgn(t.coeff) < 0;
        mpq_class c = abs(t.coeff);
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        std::string mono;
        for (std::size_t v = 0; v < t.mono.nvars(); ++v) {
            if (!t.mono[v]) continue;
            if (!mono.empty()) mono += "*";
            mono += names[v];
            if (t.mono[v] > 1) mono += "^" + std::to_string(t.mono[v]);
        }
        if (c != 1 || mono.empty()) os << c.get_str() << (mono.empty() ? "" : "*");
        os << mono;
    }
    return os.str();
}

}  // namespace

std::string export_presentation(const Presentation& p, ExportFormat format, const FieldSpec& field) {
    const auto names = p.ring.variable_names();
    std::ostringstream os;
    if (format == ExportFormat::Json) {
        nlohmann::json j;
        j["artinian"] = p.ring.artinian;
        j["characteristic"] = field.characteristic();
        j["variables"] = names;
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& g : p.generators) {
            nlohmann::json rec;
            rec["family"] = to_string(g.family);
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& t : g.terms) {
                nlohmann::json exps = nlohmann::json::object();
                for (std::size_t v = 0; v < t.mono.nvars(); ++v)
                    if (t.mono[v]) exps[names[v]] = t.mono[v];
                terms.push_back({{"coefficient", t.coeff.get_str()}, {"exponents", exps}});
            }
            rec["terms"] = terms;
            gens.push_back(rec);
        }
        j["generators"] = gens;
        return j.dump(2) + "\n";
    }
    std::string joined_names;
    for (std::size_t i = 0; i < names.size(); ++i) joined_names += (i ? ", " : "") + names[i];
    if (format == ExportFormat::Macaulay2) {
        std::string coeffs = field.is_rational() ? "QQ" : "ZZ/" + std::to_string(field.characteristic());
        os << "R = " << coeffs << "[" << joined_names << "];\n";
        if (p.generators.empty()) {
            os << "I = ideal(0_R);\n";
        } else {
            os << "I = ideal(\n";
            for (std::size_t i = 0; i < p.generators.size(); ++i)
                os << "  " << term_list(p.generators[i], names)
                   << (i + 1 < p.generators.size() ? ",\n" : "\n");
            os << ");\n";
        }
    } else {
        os << "ring r = " << field.characteristic() << ", (" << joined_names << "), dp;\n";
        if (p.generators.empty()) {
            os << "ideal I = 0;\n";
        } else {
            os << "ideal I =\n";
            for (std::size_t i = 0; i < p.generators.size(); ++i)
                os << "  " << term_list(p.generators[i], names)
                   << (i + 1 < p.generators.size() ? ",\n" : ";\n");
        }
    }
    return os.str();
}

}  // namespace bierflag
