#include <doctest.h>

#include <random>

#include "bierflag/field.hpp"
#include "bierflag/homology.hpp"
#include "support.hpp"

using namespace bierflag;

TEST_CASE("sparse rank agrees with dense elimination") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
        SparseIntMatrix m(rows, cols);
        std::vector<std::vector<long>> dense(rows, std::vector<long>(cols, 0));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() % 3 == 0) {
                    long v = static_cast<long>(rng() % 7) - 3;
                    if (!v) continue;
                    m.add(r, static_cast<std::uint32_t>(c), v);
                    dense[r][c] = v;
                }
        for (long p : {0L, 2L, 3L, 5L})
            CHECK(rank(m, FieldSpec(static_cast<std::uint32_t>(p))) == oracle::dense_rank(dense, p));
    }
}

TEST_CASE("non-primes are rejected") {
    CHECK(testing::error_kind([] { FieldSpec f(4); }) == ErrorKind::BadParams);
    CHECK(testing::error_kind([] { FieldSpec f(1); }) == ErrorKind::BadParams);
    CHECK(is_prime(65521));
}

TEST_CASE("reduced homology agrees with dense elimination") {
    auto corpus = testing::small_corpus();
    corpus.push_back({"rp2", builtin::rp2_flag()});
    for (const auto& c : corpus)
        for (std::uint32_t p : {0u, 2u, 3u}) {
            auto want = oracle::reduced_homology(oracle::faces(testing::masks(c.complex)), p);
            HomologyDims got = reduced_homology(c.complex, FieldSpec(p));
            for (auto [deg, dim] : want) CHECK_MESSAGE(static_cast<long>(got.at(deg)) == dim, c.name << " deg " << deg);
        }
}

TEST_CASE("projective plane homology depends on the field") {
    SimplicialComplex rp2 = builtin::rp2_flag();
    HomologyDims q = reduced_homology(rp2, FieldSpec());
    HomologyDims f2 = reduced_homology(rp2, FieldSpec(2));
    CHECK(q.at(1) == 0);
    CHECK(q.at(2) == 0);
    CHECK(f2.at(1) == 1);
    CHECK(f2.at(2) == 1);
}

TEST_CASE("Serre conditions") {
    SimplicialComplex ann = builtin::flag_annulus();
    CHECK(serre_condition(ann, 2, FieldSpec()));
    CHECK_FALSE(serre_condition(ann, 3, FieldSpec()));
    CHECK_FALSE(is_cohen_macaulay(ann, FieldSpec()));
    CHECK(is_cohen_macaulay(builtin::path3(), FieldSpec(2)));

    SimplicialComplex rp2 = builtin::rp2_flag();
    auto w = serre_violation(rp2, 3, FieldSpec(2));
    REQUIRE(w);
    CHECK(w->degree == 1);
    CHECK_FALSE(serre_violation(rp2, 3, FieldSpec(3)));
    auto profile = serre_profile(rp2, {0, 2, 3, 5});
    CHECK(profile == std::map<std::uint32_t, int>{{0, 3}, {2, 2}, {3, 3}, {5, 3}});

    auto two_triangles = SimplicialComplex::from_labels({"1", "2", "3", "4", "5"}, {{"1", "2", "3"}, {"3", "4", "5"}});
    CHECK_FALSE(serre_condition(two_triangles, 2, FieldSpec()));
}
