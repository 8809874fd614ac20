#include "bierflag/series.hpp"

#include "bierflag/error.hpp"

namespace bierflag {

IntSeries series_multiply(const IntSeries& a, const IntSeries& b, int n) {
    IntSeries out(n + 1, 0);
    for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= n; ++i)
        for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= n; ++j) out[i + j] += a[i] * b[j];
    return out;
}

IntSeries series_divide(const IntSeries& a, const IntSeries& b, int n) {
    if (b.empty() || (b[0] != 1 && b[0] != -1)) throw Error(ErrorKind::BadParams, "divisor needs constant term 1 or -1");
    IntSeries out(n + 1, 0);
    for (int k = 0; k <= n; ++k) {
        mpz_class v = k < static_cast<int>(a.size()) ? a[k] : mpz_class(0);
        for (int j = 1; j <= k && j < static_cast<int>(b.size()); ++j) v -= b[j] * out[k - j];
        out[k] = v * b[0];
    }
    return out;
}

IntSeries one_plus_t_power(int e, int n) {
    IntSeries out(n + 1, 0);
    for (int k = 0; k <= n && k <= e; ++k) mpz_bin_uiui(out[k].get_mpz_t(), e, k);
    return out;
}

mpz_class TruncatedSeries::coeff(int i, int j) const {
    auto it = terms_.find(i);
    if (it == terms_.end()) return 0;
    auto jt = it->second.find(j);
    return jt == it->second.end() ? mpz_class(0) : jt->second;
}

void TruncatedSeries::add(int i, int j, const mpz_class& v) {
    if (i < 0 || i > i_max_ || v == 0) return;
    mpz_class& slot = terms_[i][j];
    slot += v;
    if (slot == 0) {
        terms_[i].erase(j);
        if (terms_[i].empty()) terms_.erase(i);
    }
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    TruncatedSeries out(std::min(i_max_, o.i_max_));
    for (const auto& [i, row] : terms_)
        for (const auto& [k, orow] : o.terms_) {
            if (i + k > out.i_max_) break;
            for (const auto& [j, v] : row)
                for (const auto& [l, w] : orow) out.add(i + k, j + l, v * w);
        }
    return out;
}

TruncatedSeries TruncatedSeries::idealization(const TruncatedSeries& a, const TruncatedSeries& m) {
    // b = a + t * b * m, solved degree by degree in t
    TruncatedSeries b(a.i_max_);
    for (int i = 0; i <= a.i_max_; ++i) {
        if (auto it = a.terms_.find(i); it != a.terms_.end())
            for (const auto& [j, v] : it->second) b.add(i, j, v);
        for (int h = 0; h < i; ++h) {
            auto bt = b.terms_.find(h);
            auto mt = m.terms_.find(i - h - 1);
            if (bt == b.terms_.end() || mt == m.terms_.end()) continue;
            for (const auto& [l, bv] : bt->second)
                for (const auto& [q, mv] : mt->second) b.add(i, l + q, bv * mv);
        }
    }
    return b;
}

IntSeries TruncatedSeries::diagonal() const {
    IntSeries out(i_max_ + 1, 0);
    for (int i = 0; i <= i_max_; ++i) out[i] = coeff(i, i);
    return out;
}

std::vector<std::pair<int, int>> TruncatedSeries::off_diagonal() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [i, row] : terms_)
        for (const auto& [j, v] : row)
            if (j != i) out.emplace_back(i, j);
    return out;
}

nlohmann::json TruncatedSeries::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [i, row] : terms_)
        for (const auto& [j, v] : row) arr.push_back({{"i", i}, {"j", j}, {"coefficient", v.fits_slong_p() ? nlohmann::json(v.get_si()) : nlohmann::json(v.get_str())}});
    return {{"i_max", i_max_}, {"terms", arr}};
}

}  // namespace bierflag
