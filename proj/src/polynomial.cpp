#include "bierflag/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "bierflag/error.hpp"

namespace bierflag {

Monomial::Monomial(std::vector<std::uint16_t> exps) : e_(std::move(exps)) {
    for (auto x : e_) deg_ += x;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t v, std::uint16_t power) {
    Monomial m(nvars);
    m.e_.at(v) = power;
    m.deg_ = power;
    return m;
}

bool Monomial::is_squarefree() const {
    return std::all_of(e_.begin(), e_.end(), [](std::uint16_t x) { return x <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
    if (deg_ > other.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] && other.e_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += other.e_[i];
    r.deg_ += other.deg_;
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= other.e_[i];
    r.deg_ -= other.deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
    std::vector<std::uint16_t> e(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) e[i] = std::max(e_[i], other.e_[i]);
    return Monomial(std::move(e));
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : m.exponents()) h = (h ^ x) * 1099511628211ull;
    return h;
}

TermOrder TermOrder::grevlex(std::size_t nvars) {
    std::vector<std::size_t> p(nvars);
    std::iota(p.begin(), p.end(), 0);
    return grevlex(std::move(p));
}

TermOrder TermOrder::grevlex(std::vector<std::size_t> priority) {
    TermOrder t;
    t.priority_ = std::move(priority);
    t.description_ = "grevlex";
    return t;
}

TermOrder TermOrder::weighted(std::vector<std::vector<std::int64_t>> rows,
                              std::vector<std::size_t> priority) {
    for (const auto& row : rows) {
        if (row.size() != priority.size())
            throw Error(ErrorKind::BadParams, "weight row length differs from variable count");
        for (auto w : row)
            if (w < 0) throw Error(ErrorKind::BadParams, "weights must be nonnegative");
    }
    TermOrder t;
    t.rows_ = std::move(rows);
    t.priority_ = std::move(priority);
    t.description_ = "weighted";
    return t;
}

TermOrder TermOrder::block(std::vector<std::size_t> lex_block, std::vector<std::size_t> priority) {
    TermOrder t;
    t.block_ = std::move(lex_block);
    t.priority_ = std::move(priority);
    t.description_ = "block";
    return t;
}

TermOrder TermOrder::random(std::size_t nvars, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<std::int64_t> dist(1, 1000);
    std::vector<std::int64_t> row(nvars);
    for (auto& w : row) w = dist(gen);
    std::vector<std::size_t> p(nvars);
    std::iota(p.begin(), p.end(), 0);
    TermOrder t = weighted({row}, std::move(p));
    t.description_ = "random weights, seed " + std::to_string(seed);
    return t;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    for (const auto& row : rows_) {
        std::int64_t wa = 0, wb = 0;
        for (std::size_t i = 0; i < row.size(); ++i) {
            wa += row[i] * a[i];
            wb += row[i] * b[i];
        }
        if (wa != wb) return wa < wb ? -1 : 1;
    }
    if (!block_.empty()) {
        int da = 0, db = 0;
        for (std::size_t v : block_) {
            da += a[v];
            db += b[v];
        }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t v : block_)
            if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
        if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
    }
    return 0;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    for (const auto& t : terms)
        if (t.mono.degree() != terms.front().mono.degree()) return false;
    return true;
}

PolyRing::PolyRing(std::vector<std::string> names, TermOrder order, FieldSpec field)
    : names_(std::move(names)), order_(std::move(order)), field_(field) {}

Polynomial PolyRing::make(std::vector<Term> terms) const {
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return order_.compare(a.mono, b.mono) > 0; });
    Polynomial p;
    for (auto& t : terms) {
        if (!p.terms.empty() && p.terms.back().mono == t.mono) {
            p.terms.back().coeff += t.coeff;
        } else {
            if (!p.terms.empty()) {
                p.terms.back().coeff = field_.normalize(p.terms.back().coeff);
                if (sgn(p.terms.back().coeff) == 0) p.terms.pop_back();
            }
            p.terms.push_back(std::move(t));
        }
    }
    if (!p.terms.empty()) {
        p.terms.back().coeff = field_.normalize(p.terms.back().coeff);
        if (sgn(p.terms.back().coeff) == 0) p.terms.pop_back();
    }
    return p;
}

Polynomial PolyRing::monomial(const Monomial& m) const { return Polynomial{{Term{mpq_class(1), m}}}; }

Polynomial PolyRing::binomial(const Monomial& a, const Monomial& b) const {
    return make({Term{mpq_class(1), a}, Term{mpq_class(-1), b}});
}

Polynomial PolyRing::adopt(const Polynomial& p) const { return make(p.terms); }

Polynomial PolyRing::merge(const Polynomial& a, const Polynomial& b, const mpq_class& factor,
                           const Monomial* shift) const {
    Polynomial out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    auto shifted = [&](std::size_t k) { return shift ? b.terms[k].mono * *shift : b.terms[k].mono; };
    Monomial bj;
    if (j < b.terms.size()) bj = shifted(j);
    while (i < a.terms.size() || j < b.terms.size()) {
        int c;
        if (j == b.terms.size())
            c = 1;
        else if (i == a.terms.size())
            c = -1;
        else
            c = order_.compare(a.terms[i].mono, bj);
        if (c > 0) {
            out.terms.push_back(a.terms[i++]);
        } else {
            mpq_class coeff = -factor * b.terms[j].coeff;
            if (c == 0) coeff += a.terms[i++].coeff;
            coeff = field_.normalize(coeff);
            if (sgn(coeff) != 0) out.terms.push_back(Term{std::move(coeff), bj});
            ++j;
            if (j < b.terms.size()) bj = shifted(j);
        }
    }
    return out;
}

Polynomial PolyRing::add(const Polynomial& a, const Polynomial& b) const {
    return merge(a, b, mpq_class(-1), nullptr);
}

Polynomial PolyRing::sub(const Polynomial& a, const Polynomial& b) const {
    return merge(a, b, mpq_class(1), nullptr);
}

Polynomial PolyRing::mul_term(const Polynomial& p, const mpq_class& c, const Monomial& m) const {
    return merge(Polynomial{}, p, field_.normalize(-c), &m);
}

Polynomial PolyRing::make_monic(const Polynomial& p) const {
    if (p.is_zero()) return p;
    mpq_class inv = field_.normalize(1 / p.lead().coeff);
    Polynomial out = p;
    for (auto& t : out.terms) t.coeff = field_.normalize(t.coeff * inv);
    return out;
}

bool PolyRing::is_pure_difference_binomial(const Polynomial& p) const {
    if (p.terms.size() != 2) return false;
    return sgn(field_.normalize(p.terms[0].coeff + p.terms[1].coeff)) == 0;
}

Polynomial PolyRing::s_polynomial(const Polynomial& f, const Polynomial& g) const {
    if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::BadParams, "S-polynomial of zero");
    Monomial l = f.lead_monomial().lcm(g.lead_monomial());
    Polynomial a = mul_term(f, field_.normalize(1 / f.lead().coeff), l / f.lead_monomial());
    Polynomial b = mul_term(g, field_.normalize(1 / g.lead().coeff), l / g.lead_monomial());
    return sub(a, b);
}

Polynomial PolyRing::reduce(const Polynomial& p, const std::vector<Polynomial>& basis) const {
    std::vector<const Polynomial*> ptrs;
    ptrs.reserve(basis.size());
    for (const auto& g : basis) ptrs.push_back(&g);
    return reduce(p, ptrs);
}

Polynomial PolyRing::reduce(const Polynomial& p, const std::vector<const Polynomial*>& basis) const {
    return reduce(p, DivisorIndex(basis, nvars()));
}

Polynomial PolyRing::reduce(const Polynomial& p, const DivisorIndex& index) const {
    Polynomial rest = p;
    Polynomial done;
    while (!rest.is_zero()) {
        const Term& lt = rest.lead();
        const Polynomial* divisor = index.find(lt.mono);
        if (!divisor) {
            done.terms.push_back(lt);
            rest.terms.erase(rest.terms.begin());
            continue;
        }
        mpq_class factor = field_.normalize(lt.coeff / divisor->lead().coeff);
        Monomial shift = lt.mono / divisor->lead_monomial();
        rest = merge(rest, *divisor, factor, &shift);
    }
    return done;
}

DivisorIndex::DivisorIndex(std::vector<const Polynomial*> basis, std::size_t nvars)
    : basis_(std::move(basis)), buckets_(nvars) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i]->is_zero()) continue;
        const Monomial& m = basis_[i]->lead_monomial();
        std::size_t v = 0;
        while (v < m.nvars() && m[v] == 0) ++v;
        if (v == m.nvars())
            constants_.push_back(i);
        else
            buckets_[v].push_back(i);
    }
}

const Polynomial* DivisorIndex::find(const Monomial& m) const {
    if (!constants_.empty()) return basis_[constants_.front()];
    std::size_t best = basis_.size();
    for (std::size_t v = 0; v < m.nvars(); ++v) {
        if (!m[v]) continue;
        for (std::size_t i : buckets_[v]) {
            if (i >= best) break;
            if (basis_[i]->lead_monomial().divides(m)) {
                best = i;
                break;
            }
        }
    }
    return best < basis_.size() ? basis_[best] : nullptr;
}

std::string PolyRing::to_string(const Monomial& m) const {
    std::string out;
    for (std::size_t v = 0; v < m.nvars(); ++v) {
        if (!m[v]) continue;
        if (!out.empty()) out += "*";
        out += names_[v];
        if (m[v] > 1) out += "^" + std::to_string(m[v]);
    }
    return out.empty() ? "1" : out;
}

std::string PolyRing::to_string(const Polynomial& p) const {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms) {
        mpq_class c = t.coeff;
        if (!field_.is_rational() && c > field_.characteristic() / 2) c -= field_.characteristic();
        bool negative = sgn(c) < 0;
        if (negative) c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        bool unit = c == 1;
        if (!unit) os << c.get_str();
        if (!t.mono.is_one())
            os << (unit ? "" : "*") << to_string(t.mono);
        else if (unit)
            os << "1";
    }
    return os.str();
}

}  // namespace bierflag
