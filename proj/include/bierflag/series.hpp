#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace bierflag {

using IntSeries = std::vector<mpz_class>;  // coefficient of t^k at index k

/// Coefficients of a/b up to t^n; b must have constant term 1 or -1.
IntSeries series_divide(const IntSeries& a, const IntSeries& b, int n);
IntSeries series_multiply(const IntSeries& a, const IntSeries& b, int n);
/// (1 + t)^e truncated at t^n.
IntSeries one_plus_t_power(int e, int n);

/// Sum of c(i, j) s^j t^i with i <= i_max. Each homological degree i holds
/// finitely many internal degrees j.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int i_max = 0) : i_max_(i_max) {}

    int i_max() const { return i_max_; }
    mpz_class coeff(int i, int j) const;
    void add(int i, int j, const mpz_class& v);
    const std::map<int, std::map<int, mpz_class>>& terms() const { return terms_; }

    /// Product truncated at min of both bounds.
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    /// a / (1 - t * m), truncated at a's bound.
    static TruncatedSeries idealization(const TruncatedSeries& a, const TruncatedSeries& m);

    /// The coefficients with j == i.
    IntSeries diagonal() const;
    /// Entries with j > i.
    std::vector<std::pair<int, int>> off_diagonal() const;

    nlohmann::json to_json() const;

    bool operator==(const TruncatedSeries& o) const { return i_max_ == o.i_max_ && terms_ == o.terms_; }

private:
    int i_max_;
    std::map<int, std::map<int, mpz_class>> terms_;
};

}  // namespace bierflag
