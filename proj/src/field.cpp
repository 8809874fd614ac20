#include "bierflag/field.hpp"

#include <algorithm>
#include <unordered_map>

#include "bierflag/error.hpp"

namespace bierflag {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec::FieldSpec(std::uint32_t characteristic) : p_(characteristic) {
    if (p_ != 0 && (!is_prime(p_) || p_ >= (1u << 31)))
        throw Error(ErrorKind::BadParams, "characteristic must be 0 or a prime below 2^31, got " +
                                              std::to_string(p_));
}

std::string FieldSpec::name() const {
    return p_ == 0 ? std::string("QQ") : "ZZ/" + std::to_string(p_);
}

std::uint32_t FieldSpec::reduce(std::int64_t value) const {
    std::int64_t r = value % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
}

namespace {

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    return static_cast<std::uint32_t>(pow_mod(a, p - 2, p));
}

}  // namespace

mpq_class FieldSpec::normalize(const mpq_class& value) const {
    if (p_ == 0) return value;
    mpz_class pz(p_);
    mpz_class num = value.get_num() % pz;
    mpz_class den = value.get_den() % pz;
    if (den == 0) throw Error(ErrorKind::BadParams, "denominator vanishes in " + name());
    if (num < 0) num += pz;
    std::uint64_t n = num.get_ui();
    std::uint64_t d = den.get_ui();
    return mpq_class(static_cast<unsigned long>(n * inv_mod(static_cast<std::uint32_t>(d), p_) % p_));
}

namespace {

struct ModP {
    using value_type = std::uint32_t;
    std::uint32_t p;
    bool is_zero(value_type v) const { return v == 0; }
    value_type from(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        return static_cast<value_type>(r < 0 ? r + p : r);
    }
    value_type inv(value_type v) const { return inv_mod(v, p); }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p);
    }
    // a - f*b
    value_type submul(value_type a, value_type f, value_type b) const {
        std::uint64_t t = static_cast<std::uint64_t>(f) * b % p;
        return static_cast<value_type>((a + p - t) % p);
    }
    value_type neg_mul(value_type f, value_type b) const {
        return submul(0, f, b);
    }
};

struct Rational {
    using value_type = mpq_class;
    bool is_zero(const value_type& v) const { return sgn(v) == 0; }
    value_type from(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
    value_type inv(const value_type& v) const { return 1 / v; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type submul(const value_type& a, const value_type& f, const value_type& b) const {
        return a - f * b;
    }
    value_type neg_mul(const value_type& f, const value_type& b) const { return -(f * b); }
};

template <class F>
std::size_t rank_impl(const SparseIntMatrix& m, const F& field) {
    using V = typename F::value_type;
    using Row = std::vector<std::pair<std::uint32_t, V>>;

    std::vector<Row> rows;
    rows.reserve(m.rows);
    for (const auto& src : m.entries) {
        std::vector<std::pair<std::uint32_t, std::int64_t>> sorted = src;
        std::sort(sorted.begin(), sorted.end());
        Row row;
        for (std::size_t k = 0; k < sorted.size();) {
            std::uint32_t col = sorted[k].first;
            std::int64_t sum = 0;
            while (k < sorted.size() && sorted[k].first == col) sum += sorted[k++].second;
            V v = field.from(sum);
            if (!field.is_zero(v)) row.emplace_back(col, v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const Row& a, const Row& b) { return a.size() < b.size(); });

    // pivot rows are stored with leading coefficient 1
    std::unordered_map<std::uint32_t, Row> pivots;
    std::size_t r = 0;
    Row scratch;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                V inv = field.inv(row.front().second);
                for (auto& e : row) e.second = field.mul(e.second, inv);
                pivots.emplace(row.front().first, std::move(row));
                ++r;
                break;
            }
            const Row& piv = it->second;
            V f = row.front().second;
            scratch.clear();
            std::size_t a = 1, b = 1;
            while (a < row.size() || b < piv.size()) {
                if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
                    scratch.push_back(std::move(row[a++]));
                } else if (a == row.size() || piv[b].first < row[a].first) {
                    scratch.emplace_back(piv[b].first, field.neg_mul(f, piv[b].second));
                    ++b;
                } else {
                    V v = field.submul(row[a].second, f, piv[b].second);
                    if (!field.is_zero(v)) scratch.emplace_back(row[a].first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            row.swap(scratch);
        }
    }
    return r;
}

}  // namespace

std::size_t rank(const SparseIntMatrix& m, const FieldSpec& field) {
    if (field.is_rational()) return rank_impl(m, Rational{});
    return rank_impl(m, ModP{field.characteristic()});
}

}  // namespace bierflag
