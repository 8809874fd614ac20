#include <doctest.h>

#include <random>

#include "bierflag/gamma.hpp"
#include "bierflag/presentation.hpp"
#include "support.hpp"

using namespace bierflag;

TEST_CASE("binomials and Lucas coefficients") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(lucas_coeff(0, 0) == 2);
    CHECK(testing::error_kind([] { lucas_coeff(3, 2); }) == ErrorKind::OutOfRange);
    // row sums are the Lucas numbers 2, 1, 3, 4, 7, 11, ...
    mpz_class prev = 2, cur = 1;
    for (long r = 1; r <= 40; ++r) {
        mpz_class sum = 0;
        for (long i = 0; 2 * i <= r; ++i) {
            sum += lucas_coeff(r, i);
            CHECK(lucas_coeff(r, i) == lucas_coeff_quotient_form(r, i));
        }
        CHECK(sum == cur);
        mpz_class next = prev + cur;
        prev = cur;
        cur = next;
    }
}

TEST_CASE("gamma vectors invert the expansion") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int s = 1 + static_cast<int>(rng() % 9);
        std::vector<long> g(static_cast<std::size_t>(s / 2 + 1));
        g[0] = 1;
        for (std::size_t i = 1; i < g.size(); ++i) g[i] = static_cast<long>(rng() % 41) - 20;
        std::vector<long> h = oracle::expand_gamma(g, s);
        HVector hv(h.begin(), h.end());
        for (auto method : {GammaMethod::Recursion, GammaMethod::LinearSolve}) {
            GammaVector got = gamma_from_h(hv, method);
            CHECK(got.s == s);
            CHECK(got.to_longs() == g);
            std::vector<mpz_class> back = h_from_gamma(got);
            for (std::size_t k = 0; k < h.size(); ++k) CHECK(back[k] == h[k]);
        }
    }
    CHECK(gamma_from_h(HVector{1, 2, 1}).to_longs() == std::vector<long>{1, 0});
    CHECK(gamma_from_h(HVector{1, 31, 60, 31, 1}).to_longs() == std::vector<long>{1, 27, 0});
    CHECK(testing::error_kind([] { gamma_from_h(HVector{1, 2, 3}); }) == ErrorKind::NotPalindromic);
}

TEST_CASE("closed formula on the corpus") {
    for (const auto& c : testing::small_corpus()) {
        const int d = c.complex.dim() + 1;
        CHECK_MESSAGE(gamma_closed_formula(h_vector(c.complex), d) == gamma_from_h(h_vector_r_delta(c.complex)), c.name);
    }
    CHECK(testing::error_kind([] { gamma_closed_formula(HVector{1, 2}, 3); }) == ErrorKind::LengthMismatch);
}

TEST_CASE("top gamma from the Euler characteristic") {
    CHECK(top_gamma_via_euler(builtin::cross_polytope_boundary(3), FieldSpec()) == -2);
    CHECK(top_gamma_via_euler(builtin::path3(), FieldSpec()) == 0);
    for (int c = 1; c <= 3; ++c)
        CHECK(top_gamma_via_euler(builtin::glued_cross_polytopes(3, c), FieldSpec(2)) == -2 * c);
    CHECK(top_gamma_via_euler(builtin::cross_polytope_boundary(5), FieldSpec()) ==
          gamma_from_h(h_vector_r_delta(builtin::cross_polytope_boundary(5))).entries.back());
    auto square = SimplicialComplex::from_labels({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "4"}});
    auto impure = SimplicialComplex::from_labels({"1", "2", "3", "4"}, {{"1", "2", "3"}, {"4"}});
    CHECK(testing::error_kind([&] { top_gamma_via_euler(square, FieldSpec()); }) == ErrorKind::EvenDimension);
    CHECK(testing::error_kind([&] { top_gamma_via_euler(impure, FieldSpec()); }) == ErrorKind::NotPure);
    CHECK(testing::error_kind([] { top_gamma_via_euler(builtin::flag_annulus(), FieldSpec()); }) == ErrorKind::NotCM);
}

TEST_CASE("identities and signs") {
    IdentityReport rep = verify_identities(8, 20);
    CHECK(rep.ok());
    CHECK(rep.checks > 0);
    CHECK(gamma_signs_alternate(gamma_from_h(HVector{1, 14, 24, 14, 1})));
    std::vector<long> wrong = oracle::expand_gamma({1, 10, 2}, 4);
    CHECK_FALSE(gamma_signs_alternate(gamma_from_h(HVector(wrong.begin(), wrong.end()))));
}
