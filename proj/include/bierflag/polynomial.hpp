#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "bierflag/field.hpp"

namespace bierflag {

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint16_t> exps);
    static Monomial variable(std::size_t nvars, std::size_t v, std::uint16_t power = 1);

    std::size_t nvars() const { return e_.size(); }
    int degree() const { return deg_; }
    std::uint16_t operator[](std::size_t v) const { return e_[v]; }
    const std::vector<std::uint16_t>& exponents() const { return e_; }
    bool is_one() const { return deg_ == 0; }
    bool is_squarefree() const;

    bool divides(const Monomial& other) const;
    bool coprime(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    /// Exact quotient; the caller guarantees divisibility.
    Monomial operator/(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }
    bool operator<(const Monomial& o) const { return e_ < o.e_; }

private:
    std::vector<std::uint16_t> e_;
    int deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

/// A monomial order: rows of nonnegative weights compared in turn, then
/// graded reverse lexicographic order along a priority list of variables
/// (first entry most significant).
class TermOrder {
public:
    TermOrder() = default;
    static TermOrder grevlex(std::size_t nvars);
    static TermOrder grevlex(std::vector<std::size_t> priority);
    static TermOrder weighted(std::vector<std::vector<std::int64_t>> rows,
                              std::vector<std::size_t> priority);
    /// Degree in the block variables, then lexicographic on the block (first
    /// entry most significant), then grevlex along the priority list.
    static TermOrder block(std::vector<std::size_t> lex_block, std::vector<std::size_t> priority);
    /// One row of seeded positive random weights, tie-broken by grevlex.
    static TermOrder random(std::size_t nvars, std::uint64_t seed);

    /// Negative, zero or positive as a is smaller, equal or larger than b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    const std::string& description() const { return description_; }
    void set_description(std::string d) { description_ = std::move(d); }

private:
    std::vector<std::vector<std::int64_t>> rows_;
    std::vector<std::size_t> block_;
    std::vector<std::size_t> priority_;
    std::string description_;
};

struct Term {
    mpq_class coeff;
    Monomial mono;
};

/// Terms sorted strictly decreasing in the ring's order, no zero coefficients.
struct Polynomial {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& lead() const { return terms.front(); }
    const Monomial& lead_monomial() const { return terms.front().mono; }
    int degree() const;
    bool is_homogeneous() const;
    bool is_monomial() const { return terms.size() == 1; }
};

/// Finds, among a list of polynomials, the first whose leading monomial
/// divides a given monomial. Leading monomials are bucketed by their
/// smallest variable.
class DivisorIndex {
public:
    DivisorIndex(std::vector<const Polynomial*> basis, std::size_t nvars);
    const Polynomial* find(const Monomial& m) const;

private:
    std::vector<const Polynomial*> basis_;
    std::vector<std::vector<std::size_t>> buckets_;
    std::vector<std::size_t> constants_;
};

/// Polynomial arithmetic over a field with a fixed term order.
class PolyRing {
public:
    PolyRing(std::vector<std::string> names, TermOrder order, FieldSpec field);

    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const TermOrder& order() const { return order_; }
    const FieldSpec& field() const { return field_; }
    PolyRing with_order(TermOrder order) const { return PolyRing(names_, std::move(order), field_); }

    /// Combines like terms, reduces coefficients into the field and sorts.
    Polynomial make(std::vector<Term> terms) const;
    Polynomial monomial(const Monomial& m) const;
    Polynomial binomial(const Monomial& a, const Monomial& b) const;  // a - b
    /// Re-sorts a polynomial built under another order.
    Polynomial adopt(const Polynomial& p) const;

    Polynomial add(const Polynomial& a, const Polynomial& b) const;
    Polynomial sub(const Polynomial& a, const Polynomial& b) const;
    Polynomial mul_term(const Polynomial& p, const mpq_class& c, const Monomial& m) const;
    Polynomial make_monic(const Polynomial& p) const;
    /// Two terms whose coefficients are c and -c.
    bool is_pure_difference_binomial(const Polynomial& p) const;

    Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) const;
    /// Full normal form: no term of the result is divisible by a leading monomial of the basis.
    Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis) const;
    Polynomial reduce(const Polynomial& p, const std::vector<const Polynomial*>& basis) const;
    Polynomial reduce(const Polynomial& p, const DivisorIndex& index) const;

    std::string to_string(const Monomial& m) const;
    std::string to_string(const Polynomial& p) const;

private:
    Polynomial merge(const Polynomial& a, const Polynomial& b, const mpq_class& factor,
                     const Monomial* shift) const;

    std::vector<std::string> names_;
    TermOrder order_;
    FieldSpec field_;
};

}  // namespace bierflag
