#include "bierflag/gamma.hpp"

#include <sstream>

#include "bierflag/error.hpp"
#include "bierflag/homology.hpp"

namespace bierflag {

std::vector<long> GammaVector::to_longs() const {
    std::vector<long> out;
    for (const auto& e : entries) out.push_back(e.get_si());
    return out;
}

mpz_class binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class lucas_coeff(long r, long i) {
    if (i < 0 || 2 * i > r) throw Error(ErrorKind::OutOfRange, "need 0 <= 2i <= r");
    if (r == 0) return 2;
    return binomial(r - i, i) + binomial(r - i - 1, i - 1);
}

mpz_class lucas_coeff_quotient_form(long r, long i) {
    if (i < 0 || 2 * i > r || r == 0) throw Error(ErrorKind::OutOfRange, "need 0 <= 2i <= r, r > 0");
    mpz_class num = r * binomial(r - i, i);
    mpz_class den = r - i;
    if (num % den != 0) throw Error(ErrorKind::OutOfRange, "quotient form is not integral");
    return num / den;
}

namespace {

void check_palindromic(const std::vector<mpz_class>& h) {
    if (h.empty()) throw Error(ErrorKind::LengthMismatch, "empty h-vector");
    for (std::size_t i = 0; i < h.size(); ++i)
        if (h[i] != h[h.size() - 1 - i]) throw Error(ErrorKind::NotPalindromic, "h-vector is not palindromic");
}

GammaVector by_recursion(const std::vector<mpz_class>& h) {
    GammaVector g;
    g.s = static_cast<int>(h.size()) - 1;
    for (int i = 0; i <= g.s / 2; ++i) {
        mpz_class v = h[i];
        for (int j = 0; j < i; ++j) v -= binomial(g.s - 2 * j, i - j) * g.entries[j];
        g.entries.push_back(v);
    }
    return g;
}

// Gaussian elimination over the rationals on all s+1 coefficient equations.
GammaVector by_linear_solve(const std::vector<mpz_class>& h) {
    const int s = static_cast<int>(h.size()) - 1;
    const int unknowns = s / 2 + 1;
    std::vector<std::vector<mpq_class>> rows;
    for (int k = 0; k <= s; ++k) {
        std::vector<mpq_class> row(unknowns + 1);
        for (int i = 0; i < unknowns; ++i) row[i] = binomial(s - 2 * i, k - i);
        row[unknowns] = h[k];
        rows.push_back(std::move(row));
    }
    int pivot_row = 0;
    std::vector<int> pivot_col_of_row;
    for (int col = 0; col < unknowns; ++col) {
        int sel = -1;
        for (int r = pivot_row; r <= s; ++r)
            if (sgn(rows[r][col]) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) throw Error(ErrorKind::BadParams, "singular gamma system");
        std::swap(rows[sel], rows[pivot_row]);
        mpq_class inv = 1 / rows[pivot_row][col];
        for (auto& x : rows[pivot_row]) x *= inv;
        for (int r = 0; r <= s; ++r) {
            if (r == pivot_row || sgn(rows[r][col]) == 0) continue;
            mpq_class f = rows[r][col];
            for (int c = 0; c <= unknowns; ++c) rows[r][c] -= f * rows[pivot_row][c];
        }
        ++pivot_row;
    }
    for (int r = pivot_row; r <= s; ++r)
        if (sgn(rows[r][unknowns]) != 0) throw Error(ErrorKind::BadParams, "inconsistent gamma system");
    GammaVector g;
    g.s = s;
    for (int i = 0; i < unknowns; ++i) {
        const mpq_class& v = rows[i][unknowns];
        if (v.get_den() != 1) throw Error(ErrorKind::BadParams, "non-integral gamma entry");
        g.entries.push_back(v.get_num());
    }
    return g;
}

}  // namespace

GammaVector gamma_from_h(const std::vector<mpz_class>& h, GammaMethod method) {
    check_palindromic(h);
    return method == GammaMethod::Recursion ? by_recursion(h) : by_linear_solve(h);
}

GammaVector gamma_from_h(const HVector& h, GammaMethod method) {
    std::vector<mpz_class> z;
    for (auto v : h) z.emplace_back(static_cast<long>(v));
    return gamma_from_h(z, method);
}

std::vector<mpz_class> h_from_gamma(const GammaVector& g) {
    std::vector<mpz_class> h(g.s + 1, 0);
    for (int i = 0; i < static_cast<int>(g.entries.size()); ++i)
        for (int k = 0; k <= g.s - 2 * i; ++k) h[i + k] += g.entries[i] * binomial(g.s - 2 * i, k);
    return h;
}

GammaVector gamma_closed_formula(const HVector& h_delta, int d) {
    if (d < 0 || static_cast<int>(h_delta.size()) != d + 1)
        throw Error(ErrorKind::LengthMismatch, "h(delta) must have d+1 entries");
    GammaVector g;
    g.s = d + 1;
    g.entries.push_back(1);
    for (int i = 1; i <= (d + 1) / 2; ++i) {
        mpz_class sum = 0;
        for (int k = 2 * i - 1; k <= d; ++k) sum += lucas_coeff(k - 1, i - 1) * static_cast<long>(h_delta[k]);
        g.entries.push_back(i % 2 == 1 ? sum : mpz_class(-sum));
    }
    return g;
}

mpz_class top_gamma_via_euler(const SimplicialComplex& delta, const FieldSpec& field) {
    if (!delta.is_pure()) throw Error(ErrorKind::NotPure, "needs a pure complex");
    const int d = delta.dim() + 1;
    if (d < 3 || d % 2 == 0) throw Error(ErrorKind::EvenDimension, "needs d odd and at least 3");
    if (!is_cohen_macaulay(delta, field)) throw Error(ErrorKind::NotCM, "needs a Cohen-Macaulay complex");
    const long sign = ((d - 1) / 2) % 2 ? -1 : 1;
    mpz_class via_euler = sign * 2 * delta.reduced_euler_characteristic();
    HomologyDims h = reduced_homology(delta, field);
    mpz_class via_homology = sign * 2 * static_cast<long>(h.at(d - 1)) * (d % 2 == 1 ? 1 : -1);
    if (via_euler != via_homology)
        throw Error(ErrorKind::NotCM, "Euler characteristic disagrees with top homology");
    return via_euler;
}

namespace {

// coefficients of t^i (1+t)^{r-2i}, padded to length r+1
std::vector<mpz_class> basis_poly(long r, long i) {
    std::vector<mpz_class> p(r + 1, 0);
    for (long k = 0; k <= r - 2 * i; ++k) p[i + k] = binomial(r - 2 * i, k);
    return p;
}

}  // namespace

IdentityReport verify_identities(int r_max, int lucas_max) {
    IdentityReport rep;
    for (long r = 0; r <= r_max; ++r) {
        std::vector<mpz_class> lhs(r + 1, 0);
        lhs[0] += 1;
        lhs[r] += 1;
        std::vector<mpz_class> rhs(r + 1, 0);
        for (long i = 0; 2 * i <= r; ++i) {
            auto b = basis_poly(r, i);
            mpz_class c = (i % 2 ? -1 : 1) * lucas_coeff(r, i);
            for (long k = 0; k <= r; ++k) rhs[k] += c * b[k];
        }
        ++rep.checks;
        if (lhs != rhs) rep.violations.push_back("polynomial identity fails at r=" + std::to_string(r));
    }
    for (long n = 0; n <= r_max; ++n)
        for (long m = 0; m <= r_max; ++m)
            for (long r = 0; r <= r_max; ++r) {
                mpz_class lhs = binomial(n, m) + binomial(n, m - r);
                mpz_class rhs = 0;
                for (long i = 0; 2 * i <= r; ++i)
                    rhs += (i % 2 ? -1 : 1) * lucas_coeff(r, i) * binomial(n + r - 2 * i, m - i);
                ++rep.checks;
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "binomial identity fails at (n,m,r)=(" << n << "," << m << "," << r << "): " << lhs
                       << " != " << rhs;
                    rep.violations.push_back(os.str());
                }
            }
    for (long r = 1; r <= lucas_max; ++r)
        for (long i = 0; 2 * i <= r; ++i) {
            ++rep.checks;
            if (lucas_coeff(r, i) != lucas_coeff_quotient_form(r, i))
                rep.violations.push_back("Lucas forms differ at (" + std::to_string(r) + "," + std::to_string(i) + ")");
        }
    return rep;
}

bool gamma_signs_alternate(const GammaVector& g) {
    for (std::size_t i = 1; i < g.entries.size(); ++i) {
        mpz_class v = (i % 2 == 1) ? g.entries[i] : mpz_class(-g.entries[i]);
        if (v < 0) return false;
    }
    return true;
}

}  // namespace bierflag
