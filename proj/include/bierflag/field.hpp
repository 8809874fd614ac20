#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace bierflag {

/// Either the rationals (characteristic 0) or a prime field F_p with p < 2^31.
class FieldSpec {
public:
    FieldSpec() = default;
    explicit FieldSpec(std::uint32_t characteristic);

    static FieldSpec rationals() { return FieldSpec(); }

    std::uint32_t characteristic() const noexcept { return p_; }
    bool is_rational() const noexcept { return p_ == 0; }
    std::string name() const;

    /// Maps an exact rational into this field (reduction mod p). Throws on a
    /// denominator divisible by p.
    mpq_class normalize(const mpq_class& value) const;
    std::uint32_t reduce(std::int64_t value) const;

    bool operator==(const FieldSpec& other) const noexcept { return p_ == other.p_; }

private:
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint32_t n);

/// Sparse integer matrix given by rows of (column, value) pairs.
struct SparseIntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> entries;

    SparseIntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r) {}
    void add(std::size_t row, std::uint32_t col, std::int64_t value) {
        entries[row].emplace_back(col, value);
    }
};

/// Exact rank over the given field by sparse Gaussian elimination.
std::size_t rank(const SparseIntMatrix& m, const FieldSpec& field);

}  // namespace bierflag
