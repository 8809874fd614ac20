#include <doctest.h>

#include <random>

#include "bierflag/bier.hpp"
#include "bierflag/presentation.hpp"
#include "bierflag/resolutions.hpp"
#include "bierflag/series.hpp"
#include "support.hpp"

using namespace bierflag;

namespace {

std::map<std::pair<int, int>, long> as_map(const BettiTable& t) {
    std::map<std::pair<int, int>, long> out;
    for (auto [k, v] : t.entries)
        if (v) out[k] = v;
    return out;
}

SimplicialComplex echo_delta() { return SimplicialComplex::from_labels({"1", "2", "3"}, {{"1"}, {"2", "3"}}); }

std::vector<Monomial> echo_module() {
    auto y = [](std::uint16_t a, std::uint16_t b, std::uint16_t c) {
        return Monomial(std::vector<std::uint16_t>{0, 0, 0, a, b, c});
    };
    return {y(1, 1, 0), y(0, 2, 2), y(0, 0, 4)};
}

}  // namespace

TEST_CASE("Hochster formula agrees with upper Koszul complexes") {
    for (const auto& c : testing::small_corpus()) {
        const int n = static_cast<int>(c.complex.num_vertices());
        for (auto gens : {c.complex.alexander_dual_generators(), c.complex.minimal_nonfaces()}) {
            if (gens.empty()) continue;
            for (std::uint32_t p : {0u, 2u}) {
                auto want = oracle::koszul_betti(gens, n, p);
                CHECK_MESSAGE(as_map(hochster_betti(gens, static_cast<std::size_t>(n), FieldSpec(p))) == want, c.name);
            }
        }
    }
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<VertexSet> gens;
        for (int k = 0; k < 2 + static_cast<int>(rng() % 4); ++k) {
            VertexSet g = rng() & 0x3f;
            if (g) gens.push_back(g);
        }
        if (gens.empty()) continue;
        gens = minimal_squarefree(gens);
        CHECK(as_map(hochster_betti(gens, 6, FieldSpec(3))) == oracle::koszul_betti(gens, 6, 3));
    }
}

TEST_CASE("truncation and table layout") {
    SimplicialComplex p = builtin::path3();
    BettiTable t = hochster_betti(p.alexander_dual_generators(), 5, FieldSpec());
    CHECK(t.to_string() == "   0 1\n2: 3 2\n");
    CHECK(t.regularity() == 2);
    CHECK(linear_steps(t, 2) == kLinearThroughout);
    BettiTable cut = hochster_betti(p.alexander_dual_generators(), 5, FieldSpec(), 0);
    CHECK(as_map(cut) == std::map<std::pair<int, int>, long>{{{0, 2}, 3}});
}

TEST_CASE("polarization") {
    Polarization pol = polarize(echo_module());
    CHECK(pol.original_nvars == 6);
    CHECK(pol.generators.size() == 3);
    BettiTable left = hochster_betti(echo_module(), FieldSpec());
    CHECK(as_map(left) == std::map<std::pair<int, int>, long>{{{0, 2}, 1}, {{0, 4}, 2}, {{1, 5}, 1}, {{1, 6}, 2}, {{2, 7}, 1}});
    CHECK(testing::error_kind([] { hochster_betti(echo_module(), FieldSpec(), INT_MAX, false); }) ==
          ErrorKind::NotSquarefree);
    std::vector<Monomial> mixed{Monomial(std::vector<std::uint16_t>{1, 1, 0, 0, 0}),
                                Monomial(std::vector<std::uint16_t>{0, 0, 1, 1, 1})};
    CHECK(testing::error_kind([&] { linear_steps(hochster_betti(mixed, FieldSpec()), 2); }) ==
          ErrorKind::MixedGenerators);
}

TEST_CASE("Serre conditions against linear steps") {
    SimplicialComplex rp2 = builtin::rp2_flag();
    TeraiYanagawaCheck f2 = check_terai_yanagawa(rp2, FieldSpec(2), 3);
    TeraiYanagawaCheck f3 = check_terai_yanagawa(rp2, FieldSpec(3), 3);
    CHECK_FALSE(f2.serre);
    CHECK_FALSE(f2.linear);
    CHECK(f2.linear_steps == 1);
    CHECK(f3.serre);
    CHECK(f3.linear);
    CHECK(testing::error_kind([&] { check_terai_yanagawa(rp2, FieldSpec(), 4); }).has_value());
}

TEST_CASE("dual algebra dimensions match the inverted Hilbert series") {
    std::vector<SimplicialComplex> cases{SimplicialComplex::from_labels({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}),
                                         builtin::cross_polytope_boundary(3), bier_ball(echo_delta()).gamma,
                                         builtin::flag_annulus()};
    for (const auto& c : cases) {
        FVector f = c.f_vector();
        auto want = oracle::koszul_dual_dims(std::vector<long>(f.begin(), f.end()), 5);
        DualAlgebra alg(c);
        for (int j = 0; j <= 5; ++j) CHECK(mpz_class(alg.basis(j).size()) == want[static_cast<std::size_t>(j)]);
        CHECK_FALSE(gk_square_zero_failure(c, 5));
    }
}

TEST_CASE("word classes") {
    SimplicialComplex sigma = SimplicialComplex::from_labels({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
    DualAlgebra alg(sigma);
    CHECK_FALSE(alg.normalize({0, 0}));  // [Z1^2] = 0
    auto a = alg.normalize({1, 2, 0});   // [Z2Z3Z1]
    auto b = alg.normalize({2, 0, 1});   // [Z3Z1Z2]
    auto c = alg.normalize({1, 0, 2});   // [Z2Z1Z3]
    REQUIRE(a);
    REQUIRE(b);
    REQUIRE(c);
    CHECK(a->letters == b->letters);
    CHECK(a->sign == b->sign);
    CHECK(a->letters != c->letters);
    CHECK(alg.head({1, 2, 0}) == std::vector<int>{0, 1});
    auto triangle = SimplicialComplex::from_labels({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}});
    CHECK(testing::error_kind([&] { DualAlgebra bad(triangle); }) == ErrorKind::NotFlag);
}

TEST_CASE("multidegree colours and module Betti numbers") {
    SimplicialComplex gamma = bier_ball(echo_delta()).gamma;
    CHECK(classify_multidegree(gamma, {0, 0, 0, 1, 2, 0}).blue);
    MultidegreeColor red = classify_multidegree(gamma, {1, 0, 0, 1, 0, 0});
    CHECK_FALSE(red.blue);
    CHECK(red.witness_a >= 0);
    std::vector<Monomial> bad{Monomial(std::vector<std::uint16_t>{1, 0, 0, 1, 0, 0})};
    CHECK(testing::error_kind([&] { tor_dimension(gamma, bad, 0, {1, 0, 0, 1, 0, 0}, FieldSpec()); }) ==
          ErrorKind::NotBlueGenerators);

    BettiTable right = module_betti_over_gamma(gamma, echo_module(), 5, FieldSpec());
    const long row2[] = {1, 2, 5, 13, 34, 89}, row4[] = {2, 4, 10, 26, 68, 178}, row5[] = {0, 2, 6, 16, 42, 110};
    for (int i = 0; i <= 5; ++i) {
        CHECK(right.at(i, i + 2) == row2[i]);
        CHECK(right.at(i, i + 4) == row4[i]);
        CHECK(right.at(i, i + 5) == row5[i]);
        CHECK(right.at(i, i + 3) == 0);
    }
    CHECK(tor_dimension(gamma, echo_module(), 2, {0, 0, 0, 1, 1, 0}, FieldSpec()) == 0);
    SweepLimits tiny;
    tiny.max_multidegrees = 10;
    CHECK(testing::error_kind([&] { module_betti_over_gamma(gamma, echo_module(), 6, FieldSpec(), tiny); }) ==
          ErrorKind::SweepTooLarge);
}

TEST_CASE("Poincare series") {
    std::vector<long> strand;
    for (const auto& v : poincare_from_hilbert({1, 31, 60, 31, 1}, 11, 4)) strand.push_back(v.get_si());
    CHECK(strand == std::vector<long>{1, 42, 1297, 37883, 1098184});

    auto vertex = SimplicialComplex::from_labels({"1"}, {{"1"}});
    TruncatedSeries s = poincare_r_delta(vertex, FieldSpec(), 5);
    for (int i = 0; i <= 5; ++i) CHECK(s.coeff(i, i) == 2 * i + 1);
    CHECK(s.off_diagonal().empty());

    SimplicialComplex p = builtin::path3();
    TruncatedSeries ps = poincare_r_delta(p, FieldSpec(), 3);
    CHECK(ps.diagonal() == poincare_from_hilbert(h_vector_r_delta(p), 5, 3));
    CHECK(ps.off_diagonal().empty());

    auto triangle = SimplicialComplex::from_labels({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}});
    CHECK(testing::error_kind([&] { poincare_r_delta(triangle, FieldSpec(), 2); }) == ErrorKind::NotFlag);
    CHECK(koszul_verdict(builtin::cross_polytope_boundary(3), FieldSpec(2)).koszul);
    KoszulVerdict v = koszul_verdict(builtin::rp2_flag(), FieldSpec(2));
    CHECK_FALSE(v.koszul);
    CHECK(v.linear_steps == 2);
    CHECK_FALSE(v.reason.empty());
}

TEST_CASE("series arithmetic") {
    IntSeries one_minus_t{1, -1};
    IntSeries geometric = series_divide({1}, one_minus_t, 5);
    CHECK(geometric == IntSeries{1, 1, 1, 1, 1, 1});
    CHECK(series_multiply(geometric, one_minus_t, 5) == IntSeries{1, 0, 0, 0, 0, 0});
    CHECK(one_plus_t_power(3, 4) == IntSeries{1, 3, 3, 1, 0});
    CHECK(testing::error_kind([] { series_divide({1}, {2, 1}, 3); }) == ErrorKind::BadParams);

    TruncatedSeries a(4), m(4);
    a.add(0, 0, 1);
    m.add(0, 2, 1);
    TruncatedSeries b = TruncatedSeries::idealization(a, m);
    for (int i = 0; i <= 4; ++i) CHECK(b.coeff(i, 2 * i) == 1);
    CHECK(b.off_diagonal().size() == 4);
    CHECK(b.to_json()["i_max"] == 4);
}
