#ifndef QFANO_QSERIES_HPP
#define QFANO_QSERIES_HPP

#include <cstdint>
#include <vector>

#include "qfano/laurent.hpp"

namespace qfano {

/// Finite q-Pochhammer product with monomial argument:
///
///   prod_{t=0}^{count-1} (1 -+ q^{a + step*t})
///
/// negated=false gives factors (1 - q^...), negated=true gives (1 + q^...).
/// count = 0 is the empty product 1; count < 0 is rejected (the rational
/// extension lives in q_pochhammer_rational).
LaurentPoly q_pochhammer(std::int64_t a, std::int64_t step, std::int64_t count,
                         bool negated = false);

/// Pochhammer with the reciprocal convention for negative count,
///   (A; Q)_{-t} = 1 / prod_{s=1}^{t} (1 - A Q^{-s}),
/// returned as a RationalPair. Throws std::invalid_argument when a factor of
/// the reciprocal vanishes (some a - step*s == 0).
RationalPair q_pochhammer_rational(std::int64_t a, std::int64_t step, std::int64_t count,
                                   bool negated = false);

/// Gaussian binomial [n k] in base q^step: (q^{sn}; q^{-s})_k / (q^s; q^s)_k.
/// Zero for k < 0 or k > n, one for k = 0; computed by exact division, which
/// must succeed. Degree (in base units) is k(n-k), all coefficients >= 0.
LaurentPoly q_binomial(std::int64_t n, std::int64_t k, std::int64_t step);

/// Poincare polynomial g_{i,k}(q) of the Grassmannian of i-planes in C^k;
/// equals q_binomial(k, i, 2), with g_{0,k} = 1 and g_{i,k} = 0 for i < 0.
LaurentPoly grassmann_poincare(std::int64_t i, std::int64_t k);

/// Poincare polynomial og_{j,2n}(q) of the orthogonal Grassmannian OGr(j,2n):
///
///   (1 - q^{2n}) prod_{k=n-j}^{n-1} (1 - q^{4k})
///   -------------------------------------------
///   (1 - q^{2(n-j)}) prod_{k=1}^{j} (1 - q^{2k})
///
/// for 0 <= j <= n-1 (std::invalid_argument otherwise). The division is
/// exact; degree j(4n-3j-1), even support, nonnegative coefficients.
LaurentPoly ogr_poincare(std::int64_t j, std::int64_t n);

/// Power series in an auxiliary variable x, truncated at a fixed order, with
/// LaurentPoly coefficients. Arithmetic requires equal orders; multiplication
/// truncates at the common order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<LaurentPoly> coeffs);

    static TruncatedSeries one(int order);

    int order() const { return order_; }
    const LaurentPoly& coeff(int j) const;
    void set_coeff(int j, LaurentPoly c);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    bool operator==(const TruncatedSeries& o) const = default;

private:
    int order_;
    std::vector<LaurentPoly> coeffs_; // coefficient of x^0 .. x^order_
    void require_same_order(const TruncatedSeries& o) const;
};

/// q-binomial-theorem expansion of (q^a x; q^step)_inf / (x; q^step)_inf:
/// the coefficient of x^j is (q^a; q^step)_j / (q^step; q^step)_j, computed
/// by exact division (InexactDivisionError when the ratio is not a Laurent
/// polynomial, e.g. when step does not divide a).
TruncatedSeries poch_ratio_series(std::int64_t a, std::int64_t step, int order);

} // namespace qfano

#endif
