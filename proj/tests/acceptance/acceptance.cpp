// Acceptance run: one PASS/FAIL line per criterion, each with a wall-clock limit.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bierflag/bier.hpp"
#include "bierflag/corpus.hpp"
#include "bierflag/error.hpp"
#include "bierflag/gamma.hpp"
#include "bierflag/groebner.hpp"
#include "bierflag/homology.hpp"
#include "bierflag/presentation.hpp"
#include "bierflag/resolutions.hpp"

using namespace bierflag;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

template <class T>
std::string join(const std::vector<T>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return "(" + os.str() + ")";
}

std::vector<long> longs(const IntSeries& s) {
    std::vector<long> out;
    for (const auto& v : s) out.push_back(v.get_si());
    return out;
}

std::vector<NamedComplex> harness_corpus() {
    std::vector<NamedComplex> out = pure_flag_corpus(5);
    out.push_back({"octahedron", builtin::cross_polytope_boundary(3)});
    out.push_back({"rp2", builtin::rp2_flag()});
    out.push_back({"path3", builtin::path3()});
    out.push_back({"annulus", builtin::flag_annulus()});
    out.push_back({"glued(3,2)", builtin::glued_cross_polytopes(3, 2)});
    out.push_back({"glued(3,3)", builtin::glued_cross_polytopes(3, 3)});
    return out;
}

// ---------------------------------------------------------------- criteria

void octahedron_pipeline(Outcome& o) {
    SimplicialComplex oct = builtin::cross_polytope_boundary(3);
    o.require(oct.f_vector() == FVector{1, 6, 12, 8}, "f-vector");
    HVector hr = h_vector_r_delta(oct);
    o.require(hr == HVector{1, 14, 24, 14, 1}, "h(R)");
    GammaVector g = gamma_from_h(hr);
    o.require(g.to_longs() == std::vector<long>{1, 10, -2}, "gamma");
    Presentation full = r_delta_presentation(oct);
    Presentation minimal = binomial_redundancy_filter(full);
    o.require(full.ring.nvars() == 20, "20 variables");
    o.require(minimal.generators.size() == 81, "81 generators");
    for (std::uint32_t p : {0u, 2u, 3u, 5u}) {
        o.require(is_cohen_macaulay(oct, FieldSpec(p)), "CM over char " + std::to_string(p));
        o.require(koszul_verdict(oct, FieldSpec(p)).koszul, "Koszul over char " + std::to_string(p));
    }
    ShellingResult s = find_shelling(oct, 10'000'000);
    o.require(s.status == ShellingResult::Status::Found, "shellable");
    if (s.status == ShellingResult::Status::Found)
        o.require(quadratic_gb_test(oct, s.order, FieldSpec()).passed, "quadratic GB along the shelling");
    o.detail << "h(R)=" << join(hr) << " gamma=" << join(g.to_longs()) << " vars=" << full.ring.nvars()
             << " gens=" << minimal.generators.size() << " (unfiltered " << full.generators.size() << ")";
}

void rp2_split(Outcome& o) {
    SimplicialComplex rp2 = builtin::rp2_flag();
    auto profile = serre_profile(rp2, {0, 2, 3});
    o.require(profile == std::map<std::uint32_t, int>{{0, 3}, {2, 2}, {3, 3}}, "serre profile");
    KoszulVerdict k2 = koszul_verdict(rp2, FieldSpec(2));
    KoszulVerdict k3 = koszul_verdict(rp2, FieldSpec(3));
    o.require(!k2.koszul && k3.koszul, "Koszul split");
    HVector hr = h_vector_r_delta(rp2);
    o.require(hr == HVector{1, 31, 60, 31, 1}, "h(R)");
    const int krull = static_cast<int>(rp2.num_vertices());
    std::vector<long> strand = longs(poincare_from_hilbert(hr, krull, 3));
    o.require(strand == std::vector<long>{1, 42, 1297, 37883}, "linear strand");
    // (S_3) fails over F_2 exactly at step 3: the resolution is linear for 2 steps
    o.require(k2.linear_steps == 2, "F_2 linear for exactly 2 steps");
    o.require(k3.linear_steps == kLinearThroughout, "F_3 linear throughout");
    TeraiYanagawaCheck t2 = check_terai_yanagawa(rp2, FieldSpec(2), 3);
    TeraiYanagawaCheck t3 = check_terai_yanagawa(rp2, FieldSpec(3), 3);
    o.require(t2.agree() && !t2.serre && t3.agree() && t3.serre, "certificate");
    // the nonlinear entry itself, from the idealization formula and the module sweep
    TruncatedSeries p2 = poincare_r_delta(rp2, FieldSpec(2), 3);
    TruncatedSeries p3 = poincare_r_delta(rp2, FieldSpec(3), 3);
    o.require(p2.coeff(3, 4) == 1 && p3.coeff(3, 4) == 0, "b_{3,4}");
    o.require(longs(p2.diagonal()) == strand && longs(p3.diagonal()) == strand, "computed diagonal");
    o.detail << "profile {0:3,2:2,3:3} strand=" << join(strand) << " linear steps F2=" << k2.linear_steps
             << " F3=inf, b_{3,4}: F2=" << p2.coeff(3, 4).get_si() << " F3=" << p3.coeff(3, 4).get_si();
}

void echo_tables(Outcome& o) {
    SimplicialComplex delta = SimplicialComplex::from_labels({"1", "2", "3"}, {{"1"}, {"2", "3"}});
    BierBall ball = bier_ball(delta);
    auto y = [](std::uint16_t a, std::uint16_t b, std::uint16_t c) {
        return Monomial(std::vector<std::uint16_t>{0, 0, 0, a, b, c});
    };
    std::vector<Monomial> gens{y(1, 1, 0), y(0, 2, 2), y(0, 0, 4)};
    BettiTable left = hochster_betti(gens, FieldSpec());
    std::map<std::pair<int, int>, std::int64_t> want_left{{{0, 2}, 1}, {{0, 4}, 2}, {{1, 5}, 1}, {{1, 6}, 2}, {{2, 7}, 1}};
    o.require(left.entries == want_left, "left table");
    BettiTable right = module_betti_over_gamma(ball.gamma, gens, 7, FieldSpec());
    std::map<std::pair<int, int>, std::int64_t> want_right;
    const std::int64_t row2[] = {1, 2, 5, 13, 34, 89, 233, 610};
    const std::int64_t row4[] = {2, 4, 10, 26, 68, 178, 466, 1220};
    const std::int64_t row5[] = {0, 2, 6, 16, 42, 110, 288, 754};
    for (int i = 0; i <= 7; ++i) {
        want_right[{i, i + 2}] = row2[i];
        want_right[{i, i + 4}] = row4[i];
        if (row5[i]) want_right[{i, i + 5}] = row5[i];
    }
    o.require(right.entries == want_right, "right table");
    o.detail << "left table exact, right table exact through i=7";
}

void gk_fixtures(Outcome& o) {
    SimplicialComplex sigma = SimplicialComplex::from_labels({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
    DualAlgebra alg(sigma);
    auto names = [&](int j) {
        std::vector<std::string> out;
        for (const auto& w : gk_basis(sigma, j)) out.push_back(alg.word_name(w.letters));
        return out;
    };
    o.require(names(2) == std::vector<std::string>{"[Z1Z2]", "[Z1Z3]", "[Z2Z3]", "[Z3Z1]"}, "degree 2 basis");
    o.require(names(3) == std::vector<std::string>{"[Z1Z2Z3]", "[Z1Z3Z1]", "[Z2Z3Z1]", "[Z3Z1Z3]"}, "degree 3 basis");
    // matrix[target][source] = coefficient * z_variable, written as signed 1-based variable index
    int matrix[4][4] = {};
    for (const auto& e : gk_differential(sigma, 3).entries)
        matrix[e.target][e.source] += e.coefficient * (e.variable + 1);
    const int want[4][4] = {{0, 0, 3, 0}, {-2, 0, 0, 3}, {1, 0, 0, 0}, {0, 1, 2, 0}};
    bool same = true;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) same = same && matrix[r][c] == want[r][c];
    o.require(same, "differential matrix");
    SimplicialComplex echo = bier_ball(SimplicialComplex::from_labels({"1", "2", "3"}, {{"1"}, {"2", "3"}})).gamma;
    auto failure = gk_square_zero_failure(echo, 6);
    o.require(!failure, "d^2 = 0 through degree 6");
    o.detail << "bases and 4x4 matrix match; d^2=0 through degree 6 (dim " << DualAlgebra(echo).basis(6).size()
             << " in degree 6)";
}

void equivalence_harness(Outcome& o) {
    std::size_t complexes = 0, disagreements = 0;
    for (const auto& c : harness_corpus()) {
        const SimplicialComplex& delta = c.complex;
        const int d = delta.dim() + 1;
        ++complexes;
        auto miss = [&](bool ok, const std::string& what) {
            if (!ok) {
                ++disagreements;
                o.detail << " [" << c.name << ": " << what << "]";
            }
        };
        for (std::uint32_t p : {0u, 2u, 3u})
            for (int r = 2; r <= d; ++r)
                miss(check_terai_yanagawa(delta, FieldSpec(p), r).agree(),
                     "serre/linear r=" + std::to_string(r) + " char " + std::to_string(p));
        bool shellable = find_shelling(delta, 10'000'000).status == ShellingResult::Status::Found;
        QuadraticGbSearch gb = has_quadratic_gb(delta, GbStrategy::Direct, 10'000'000);
        miss(shellable == gb.exists, "shellable vs quadratic GB");
        if (gb.exists) miss(is_shelling_order(delta, gb.witness), "GB witness is a shelling");
        HVector hr = h_vector_r_delta(delta);
        miss(gamma_from_h(hr) == gamma_closed_formula(h_vector(delta), d), "gamma closed formula");
        HVector hb = h_vector(bier_ball(delta).gamma);
        FVector f = delta.f_vector();
        f.resize(hb.size(), 0);
        miss(hb == f, "h(ball) = f");
    }
    o.require(complexes == 27 + 6, "corpus size");
    o.require(disagreements == 0, "zero disagreements");
    o.detail << complexes << " complexes (27 graphs + 6 builtins), " << disagreements << " disagreements";
}

void universal_sampling(Outcome& o) {
    // opposite facets of the octahedron give degree-4 binomials whose S-pairs
    // reach degree 8; no run may hit the cap
    const int cap = 16;
    std::size_t runs = 0;
    for (auto [name, delta] : {std::pair{"path3", builtin::path3()},
                               std::pair{"octahedron", builtin::cross_polytope_boundary(3)}}) {
        Presentation p = r_delta_presentation(delta);
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            PolyRing ring(p.ring.variable_names(), TermOrder::random(p.ring.nvars(), seed), FieldSpec());
            GroebnerResult gb = buchberger(ring, p.polynomials(ring), cap);
            ++runs;
            bool shape = std::all_of(gb.basis.begin(), gb.basis.end(), [&](const Polynomial& g) {
                return g.is_monomial() || ring.is_pure_difference_binomial(g);
            });
            o.require(!gb.truncated, std::string(name) + " seed " + std::to_string(seed) + " hit the cap");
            o.require(is_groebner_basis(ring, gb.basis, cap), std::string(name) + " S-pairs");
            o.require(shape, std::string(name) + " shape");
        }
    }
    o.detail << runs << " runs (20 seeds x path3, octahedron), all S-pairs reduce to zero, monomials and "
             << "pure-difference binomials only";
}

void gamma_identities(Outcome& o) {
    IdentityReport rep = verify_identities(12, 40);
    o.require(rep.ok(), rep.ok() ? "" : rep.violations.front());
    std::size_t cm = 0;
    for (const auto& c : harness_corpus()) {
        HVector h = h_vector(c.complex);
        bool nonneg = std::all_of(h.begin(), h.end(), [](std::int64_t v) { return v >= 0; });
        if (!nonneg || !is_cohen_macaulay(c.complex, FieldSpec())) continue;
        ++cm;
        o.require(gamma_signs_alternate(gamma_from_h(h_vector_r_delta(c.complex))), c.name + " signs");
    }
    o.detail << rep.checks << " identity checks, signs alternate on " << cm << " CM complexes";
}

void artinian_reduction_check(Outcome& o) {
    auto hilbert = [](const SimplicialComplex& delta) {
        Presentation a = artinian_reduction(r_delta_presentation(delta));
        PolyRing ring = presentation_ring(a.ring, compatible_term_order(a.ring, identity_order(a.ring.num_facets())),
                                          FieldSpec());
        return hilbert_function_by_normal_forms(ring, a.polynomials(ring), 5);
    };
    auto path = hilbert(builtin::path3());
    auto oct = hilbert(builtin::cross_polytope_boundary(3));
    o.require(path == std::vector<std::int64_t>{1, 8, 14, 8, 1, 0}, "path3");
    o.require(oct == std::vector<std::int64_t>{1, 14, 24, 14, 1, 0}, "octahedron");
    o.detail << "path3 " << join(path) << ", octahedron " << join(oct);
}

void top_gamma_sweep(Outcome& o) {
    for (int c = 1; c <= 3; ++c) {
        SimplicialComplex delta = builtin::glued_cross_polytopes(3, c);
        GammaVector g = gamma_from_h(h_vector_r_delta(delta));
        mpz_class euler = top_gamma_via_euler(delta, FieldSpec());
        o.require(g.entries.size() == 3 && g.entries[2] == -2 * c, "gamma_2 for c=" + std::to_string(c));
        o.require(euler == -2 * c, "euler for c=" + std::to_string(c));
        o.detail << (c > 1 ? ", " : "") << "c=" << c << ": " << g.entries[2].get_si() << "/" << euler.get_si();
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        double limit_s;
        std::function<void(Outcome&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "octahedron pipeline", 10, octahedron_pipeline},
        {2, "RP2 characteristic split", 60, rp2_split},
        {3, "echo Betti tables", 300, echo_tables},
        {4, "GK fixtures", 10, gk_fixtures},
        {5, "equivalence harness on the small corpus", 600, equivalence_harness},
        {6, "universal GB sampling", 120, universal_sampling},
        {7, "gamma identities", 5, gamma_identities},
        {8, "Artinian reduction", 120, artinian_reduction_check},
        {9, "top gamma sweep", 30, top_gamma_sweep},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs < c.limit_s;
        bool pass = o.pass && in_time;
        if (!pass) ++failed;
        std::cout << (pass ? "PASS" : "FAIL") << " " << c.id << " " << c.title << " (" << std::fixed
                  << std::setprecision(2) << secs << " s, limit " << std::setprecision(0) << c.limit_s << " s"
                  << (in_time ? "" : ", TOO SLOW") << "): " << o.detail.str() << std::endl;
        std::cout.unsetf(std::ios::fixed);
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << (9 - failed) << "/9" << std::endl;
    return failed ? 1 : 0;
}
