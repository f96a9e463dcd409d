#ifndef QFANO_FANO_HPP
#define QFANO_FANO_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qfano/laurent.hpp"

namespace qfano {

/// Generating Laurent polynomial whose coefficient at q^k is N_i(k,j), the
/// multiplicity of the j-th (dual-indexed) exterior-power local system in
/// the k-th cohomology of the Fano variety F_{g-i}:
///
///   q^{-(j-i+1)(2i-1)} (1-q^{4j}) prod_{l=j-i+2}^{i+j-2} (1-q^{2l})
///                                 / prod_{l=1}^{2i-2} (1-q^{2l})
///
/// for i >= 2, j >= i-1. Palindromic about 0 with nonnegative coefficients;
/// notably independent of the genus. The j index is only ever consumed up to
/// j = g by the table builders below.
LaurentPoly n_generating_poly(int i, int j);

/// The same number N_i(k,j) through the multiplicity route,
///   N_i(k,j) = (s^{j-i+1}_{0,|k|})_{j+1} - (s^{j-i-1}_{0,|k|})_{j-1},
/// with the convention that the second term is zero when j-i-1 < 0.
/// Requires g >= 1, 2 <= i <= g, i-1 <= j <= g.
Int n_via_multiplicities(int g, int i, int j, std::int64_t k);

/// Cohomology of F_{g-i} for 2 <= i <= g: the (k, j) -> N_i(k,j) matrix plus
/// the Betti numbers b_{dim-k} = sum_j N_i(k,j) binom(2g, g-j). The
/// constructor computes N both ways and fails loudly (IdentityViolationError)
/// if the routes ever disagree.
struct CohomologyTable {
    int g = 0;
    int i = 0;
    int dim = 0; // (g-i+1)(2i-1)
    /// Nonzero N_i(k,j) for i-1 <= j <= g, keyed by (k, j).
    std::map<std::pair<std::int64_t, int>, Int> ncoeffs;
    std::vector<Int> betti; // b_0 .. b_{2 dim}
};

CohomologyTable cohomology_table(int g, int i);

/// Betti numbers of the Fano variety of projective kplane-planes through the
/// multiplicity formula b_k = sum_j s^{i'}_{j,|d-k|} dim W_j with n = g+1,
/// i' = kplane+1, d = i'(2n-2i'-1) and
/// dim W_j = binom(2n-2, j) - binom(2n-2, j-2). Valid for 0 <= kplane <= g-1;
/// kplane = g-1 lands on the Jacobian and is the only route for that case.
std::vector<Int> betti_via_multiplicities(int g, int kplane);

/// Closed-form Betti numbers of the Fano variety of lines in P^{2n-1}, n >= 4:
/// b_{2m} = floor((m+2)/2) for 0 <= m <= 2n-6, b_{2m+1} = 2n-2 for
/// n-3 <= m <= 2n-6 (zero for smaller odd degrees), middle value
/// b_{4n-10} = (n-3) + binom(2n-2, 2), extended by duality.
std::vector<Int> example_f1_betti(int n);

/// Betti vector as a Poincare polynomial (for duality checks and rendering).
LaurentPoly poincare_poly(const std::vector<Int>& betti);

} // namespace qfano

#endif
