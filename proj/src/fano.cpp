#include "qfano/fano.hpp"

#include <string>

#include "qfano/kostka.hpp"
#include "qfano/qseries.hpp"

namespace qfano {

namespace {

// The one place the public (g, kplane) indexing meets the internal pair
// indexing: n = g+1, i' = kplane+1. Everything else stays in one convention.
struct PairIndex {
    int n;
    int ip;
};
PairIndex to_pair_index(int g, int kplane) { return {g + 1, kplane + 1}; }

// dim W_j = binom(2n-2, j) - binom(2n-2, j-2)
Int dim_w(int n, int j) { return binomial(2 * n - 2, j) - binomial(2 * n - 2, j - 2); }

void require_table_range(int g, int i) {
    if (g < 1 || i < 2 || i > g)
        throw std::invalid_argument("cohomology_table: need g >= 1 and 2 <= i <= g (got g=" +
                                    std::to_string(g) + ", i=" + std::to_string(i) +
                                    "); the i=1 Jacobian case goes through betti_via_multiplicities");
}

} // namespace

LaurentPoly n_generating_poly(int i, int j) {
    if (i < 2 || j < i - 1)
        throw std::invalid_argument("n_generating_poly: need i >= 2 and j >= i-1");
    LaurentPoly num = LaurentPoly::constant(1) - LaurentPoly::q_power(4 * j);
    for (int l = j - i + 2; l <= i + j - 2; ++l)
        num *= LaurentPoly::constant(1) - LaurentPoly::q_power(2 * l);
    LaurentPoly den = LaurentPoly::constant(1);
    for (int l = 1; l <= 2 * i - 2; ++l)
        den *= LaurentPoly::constant(1) - LaurentPoly::q_power(2 * l);
    return divide_exact(num, den).shifted(-std::int64_t(j - i + 1) * (2 * i - 1));
}

Int n_via_multiplicities(int g, int i, int j, std::int64_t k) {
    if (g < 1 || i < 2 || i > g || j < i - 1 || j > g)
        throw std::invalid_argument("n_via_multiplicities: need g >= 1, 2 <= i <= g, i-1 <= j <= g");
    const int ka = static_cast<int>(k < 0 ? -k : k);
    Int first = s_number(j + 1, j - i + 1, 0, ka);
    if (j - i - 1 < 0) return first;
    return first - s_number(j - 1, j - i - 1, 0, ka);
}

CohomologyTable cohomology_table(int g, int i) {
    require_table_range(g, i);
    CohomologyTable t;
    t.g = g;
    t.i = i;
    t.dim = (g - i + 1) * (2 * i - 1);
    t.betti.assign(2 * t.dim + 1, Int(0));
    for (int j = i - 1; j <= g; ++j) {
        const LaurentPoly gen = n_generating_poly(i, j);
        const std::int64_t kmax = std::int64_t(j - i + 1) * (2 * i - 1);
        const Int weight = binomial(2 * g, g - j);
        // both routes, every k in range (zeros included in the comparison)
        for (std::int64_t k = -kmax; k <= kmax; ++k) {
            const Int a = gen.coeff(k);
            const Int b = n_via_multiplicities(g, i, j, k);
            if (a != b)
                throw IdentityViolationError(
                    "cohomology_table: generating-polynomial and multiplicity routes disagree at "
                    "(g=" + std::to_string(g) + ", i=" + std::to_string(i) + ", j=" +
                    std::to_string(j) + ", k=" + std::to_string(k) + ")",
                    a.str(), b.str());
            if (a != 0) {
                t.ncoeffs[{k, j}] = a;
                t.betti[static_cast<std::size_t>(t.dim - k)] += a * weight;
            }
        }
    }
    if (t.betti.front() != 1 || t.betti.back() != 1)
        throw IdentityViolationError("cohomology_table: Betti vector does not start and end with 1",
                                     poincare_poly(t.betti).str(), "");
    for (std::size_t k = 0; k < t.betti.size(); ++k)
        if (t.betti[k] != t.betti[t.betti.size() - 1 - k])
            throw IdentityViolationError("cohomology_table: Betti vector is not Poincare-dual",
                                         poincare_poly(t.betti).str(), "");
    return t;
}

std::vector<Int> betti_via_multiplicities(int g, int kplane) {
    if (g < 1 || kplane < 0 || kplane > g - 1)
        throw std::invalid_argument("betti_via_multiplicities: need g >= 1 and 0 <= kplane <= g-1");
    const auto [n, ip] = to_pair_index(g, kplane);
    const int d = ip * (2 * n - 2 * ip - 1);
    std::vector<Int> betti(2 * d + 1, Int(0));
    for (int k = 0; k <= 2 * d; ++k) {
        const int off = k < d ? d - k : k - d; // |d - k|
        Int b = 0;
        for (int j = 0; j <= ip; ++j) b += s_number(n, ip, j, off) * dim_w(n, j);
        betti[static_cast<std::size_t>(k)] = b;
    }
    return betti;
}

std::vector<Int> example_f1_betti(int n) {
    if (n < 4) throw std::invalid_argument("example_f1_betti: need n >= 4");
    const int dim = 4 * n - 10;
    std::vector<Int> betti(2 * dim + 1, Int(0));
    for (int k = 0; k < dim; ++k) {
        if (k % 2 == 0) {
            const int m = k / 2; // 0 <= m <= 2n-6
            betti[k] = (m + 2) / 2;
        } else {
            const int m = (k - 1) / 2;
            if (m >= n - 3) betti[k] = 2 * n - 2;
        }
    }
    betti[dim] = Int(n - 3) + binomial(2 * n - 2, 2);
    for (int k = 0; k < dim; ++k) betti[static_cast<std::size_t>(2 * dim - k)] = betti[k];
    return betti;
}

LaurentPoly poincare_poly(const std::vector<Int>& betti) {
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t k = 0; k < betti.size(); ++k)
        if (betti[k] != 0) terms.emplace_back(static_cast<std::int64_t>(k), betti[k]);
    return LaurentPoly::from_terms(std::move(terms));
}

} // namespace qfano
