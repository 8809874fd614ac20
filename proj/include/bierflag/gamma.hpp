#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "bierflag/complex.hpp"
#include "bierflag/field.hpp"

namespace bierflag {

/// Coordinates of a palindromic h-polynomial of degree s in the basis t^i (1+t)^{s-2i}.
struct GammaVector {
    std::vector<mpz_class> entries;
    int s = 0;

    bool operator==(const GammaVector& o) const { return s == o.s && entries == o.entries; }
    std::vector<long> to_longs() const;
};

mpz_class binomial(long n, long k);  // zero outside 0 <= k <= n

/// C(r-i, i) + C(r-i-1, i-1), and 2 for (r, i) = (0, 0).
mpz_class lucas_coeff(long r, long i);
/// The quotient form r/(r-i) * C(r-i, i); defined for r > i.
mpz_class lucas_coeff_quotient_form(long r, long i);

enum class GammaMethod { LinearSolve, Recursion };

GammaVector gamma_from_h(const std::vector<mpz_class>& h, GammaMethod method = GammaMethod::Recursion);
GammaVector gamma_from_h(const HVector& h, GammaMethod method = GammaMethod::Recursion);
/// Expands sum gamma_i t^i (1+t)^{s-2i}.
std::vector<mpz_class> h_from_gamma(const GammaVector& g);

/// The gamma-vector of the idealization from h(delta) of length d+1.
GammaVector gamma_closed_formula(const HVector& h_delta, int d);

/// (-1)^{(d-1)/2} * 2 * reduced Euler characteristic, checked against the top homology.
mpz_class top_gamma_via_euler(const SimplicialComplex& delta, const FieldSpec& field);

struct IdentityReport {
    std::vector<std::string> violations;
    std::size_t checks = 0;
    bool ok() const { return violations.empty(); }
};

/// Checks 1 + t^r = sum (-1)^i l_{r,i} t^i (1+t)^{r-2i} for r <= r_max, the
/// binomial identity C(n,m) + C(n, m-r) = sum (-1)^i l_{r,i} C(n+r-2i, m-i)
/// for n, m, r <= r_max, and the two forms of l_{r,i} for r <= lucas_max.
IdentityReport verify_identities(int r_max, int lucas_max = 40);

/// (-1)^{i-1} gamma_i >= 0 for 1 <= i.
bool gamma_signs_alternate(const GammaVector& g);

}  // namespace bierflag
