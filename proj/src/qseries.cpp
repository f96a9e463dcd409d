#include "qfano/qseries.hpp"

#include <string>

namespace qfano {

LaurentPoly q_pochhammer(std::int64_t a, std::int64_t step, std::int64_t count, bool negated) {
    if (count < 0) throw std::invalid_argument("q_pochhammer: negative count");
    LaurentPoly r = LaurentPoly::constant(1);
    const Int sign = negated ? 1 : -1;
    for (std::int64_t t = 0; t < count; ++t)
        r *= LaurentPoly::constant(1) + LaurentPoly::monomial(sign, a + step * t);
    return r;
}

RationalPair q_pochhammer_rational(std::int64_t a, std::int64_t step, std::int64_t count,
                                   bool negated) {
    if (count >= 0) return RationalPair(q_pochhammer(a, step, count, negated));
    LaurentPoly den = LaurentPoly::constant(1);
    const Int sign = negated ? 1 : -1;
    for (std::int64_t s = 1; s <= -count; ++s) {
        const std::int64_t e = a - step * s;
        if (e == 0 && !negated)
            throw std::invalid_argument("q_pochhammer_rational: vanishing factor (1 - q^0) at offset " +
                                        std::to_string(-s));
        den *= LaurentPoly::constant(1) + LaurentPoly::monomial(sign, e);
    }
    return RationalPair(LaurentPoly::constant(1), std::move(den));
}

LaurentPoly q_binomial(std::int64_t n, std::int64_t k, std::int64_t step) {
    if (step == 0) throw std::invalid_argument("q_binomial: step must be nonzero");
    if (k < 0 || k > n) return LaurentPoly();
    if (k == 0) return LaurentPoly::constant(1);
    // (q^{sn}; q^{-s})_k / (q^s; q^s)_k
    const LaurentPoly num = q_pochhammer(step * n, -step, k);
    const LaurentPoly den = q_pochhammer(step, step, k);
    return divide_exact(num, den);
}

LaurentPoly grassmann_poincare(std::int64_t i, std::int64_t k) {
    return q_binomial(k, i, 2);
}

LaurentPoly ogr_poincare(std::int64_t j, std::int64_t n) {
    if (j < 0 || j > n - 1)
        throw std::invalid_argument("ogr_poincare: need 0 <= j <= n-1");
    LaurentPoly num = LaurentPoly::constant(1) - LaurentPoly::q_power(2 * n);
    num *= q_pochhammer(4 * (n - j), 4, j);
    LaurentPoly den = LaurentPoly::constant(1) - LaurentPoly::q_power(2 * (n - j));
    den *= q_pochhammer(2, 2, j);
    return divide_exact(num, den);
}

TruncatedSeries::TruncatedSeries(int order) : order_(order), coeffs_(order + 1) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
}

TruncatedSeries::TruncatedSeries(int order, std::vector<LaurentPoly> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order < 0 || coeffs_.size() != static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument("TruncatedSeries: coefficient count must be order+1");
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = LaurentPoly::constant(1);
    return s;
}

const LaurentPoly& TruncatedSeries::coeff(int j) const {
    if (j < 0 || j > order_) throw std::invalid_argument("TruncatedSeries::coeff: index out of range");
    return coeffs_[static_cast<std::size_t>(j)];
}

void TruncatedSeries::set_coeff(int j, LaurentPoly c) {
    if (j < 0 || j > order_) throw std::invalid_argument("TruncatedSeries::set_coeff: index out of range");
    coeffs_[static_cast<std::size_t>(j)] = std::move(c);
}

void TruncatedSeries::require_same_order(const TruncatedSeries& o) const {
    if (order_ != o.order_)
        throw std::invalid_argument("TruncatedSeries: mismatched truncation orders " +
                                    std::to_string(order_) + " vs " + std::to_string(o.order_));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_same_order(o);
    for (int j = 0; j <= order_; ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    require_same_order(o);
    for (int j = 0; j <= order_; ++j) coeffs_[j] -= o.coeffs_[j];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_order(b);
    TruncatedSeries r(a.order_);
    for (int i = 0; i <= a.order_; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= a.order_; ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

TruncatedSeries poch_ratio_series(std::int64_t a, std::int64_t step, int order) {
    if (step == 0) throw std::invalid_argument("poch_ratio_series: step must be nonzero");
    TruncatedSeries s(order);
    for (int j = 0; j <= order; ++j)
        s.set_coeff(j, divide_exact(q_pochhammer(a, step, j), q_pochhammer(step, step, j)));
    return s;
}

} // namespace qfano
