#ifndef QFANO_KOSTKA_HPP
#define QFANO_KOSTKA_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "qfano/laurent.hpp"

namespace qfano {

/// The six independent routes to h_m^{(n)}(q). They agree everywhere on
/// 0 <= m <= n-1; the verify module turns that agreement into a test.
///
///  Recursive     - back-substitution in the unit-triangular system
///                  og_{k,2n} = sum_j q^{(k-j)(k-j+1)} h_j [2n-1-k-j, k-j]_{q^2}
///  ClosedA       - sum over k of (-q^{2n-2};q^{-2})_{m-2k} [n-m+2k, k]_{q^4}
///                  (1-q^{4(n-m)})/(1-q^{4(n-m+2k)}) q^{4k}
///  ClosedB       - same sum with the quotient replaced by the q^4-binomial
///                  difference [n-m+2k-1, k] - [n-m+2k-1, k-1]
///  Inversion     - the matrix-inverse solution with prefactor
///                  C_m = (q^{4n-2};q^{-2})_{m-1}/(q^2;q^2)_m (1-q^{4n-4m}) q^{2m} (-1)^m
///  FirstPositive - (-q^{2n-2};q^{-2})_m sum_k (q^{2n-2m};q^2)_{2k} /
///                  ((q^{4n+4-4m};q^4)_k (q^4;q^4)_k) q^{4k}
///  Recurrence    - h_m^{(n)} = (1+q^{2n-2}) h_{m-1}^{(n-1)}, plus the
///                  q^4-binomial difference [n-1, m/2] - [n-1, m/2-1] when m
///                  is even, grounded at h_0^{(n)} = 1
enum class HMethod { Recursive, ClosedA, ClosedB, Inversion, FirstPositive, Recurrence };

inline constexpr std::array<HMethod, 6> kAllHMethods = {
    HMethod::Recursive,    HMethod::ClosedA,       HMethod::ClosedB,
    HMethod::Inversion,    HMethod::FirstPositive, HMethod::Recurrence,
};

const char* to_string(HMethod m);
std::optional<HMethod> parse_h_method(std::string_view name);

/// h_m^{(n)}(q) for n >= 1, 0 <= m <= n-1 (std::invalid_argument otherwise).
/// Always a polynomial in Z_{>=0}[q^2] of degree exactly m(2n-m-1), even for
/// the routes whose intermediate values are genuinely Laurent; a negative
/// exponent surviving to the result raises IdentityViolationError. Results
/// are memoized per (n, m, method) behind a mutex, so concurrent callers get
/// identical values.
LaurentPoly h_poly(int n, int m, HMethod method = HMethod::Recursive);

/// The k-th summand of the ClosedB sum, a nonnegative polynomial of degree
/// m(2n-m-1) - 2k. Requires 0 <= k <= m/2.
LaurentPoly h_closed_b_summand(int n, int m, int k);

/// P_j^{(n)}(q) = g_{j,2n-1-j}(q) for 0 <= j <= n-1: palindromic about
/// j(2n-2j-1), degree 2j(2n-2j-1), nonnegative coefficients.
LaurentPoly p_poly(int n, int j);

/// Multiplicity s^i_{jk} for 0 <= j <= i <= n-1 and k >= 0; zero outside
/// 0 <= k <= (i-j)(2n-2i-1). Computed through the reduction
/// (s^i_{jk})_n = (s^{i-j}_{0,k})_{n-j} followed by coefficient extraction
/// from P at exponent a(2n'-2a-1)+k.
///
/// Reading note: the generating function defining these numbers places one
/// term at center+k and one at center-k for each k >= 1 (k = 0 once), which
/// is the only reading consistent with P's palindromy; with that reading the
/// (-1)^{j+k} signs cancel on the supported parity, so the coefficient is
/// taken with positive sign, and the off-parity coefficients of P are
/// asserted to vanish rather than silently folded in.
Int s_number(int n, int i, int j, int k);

/// All s^i_{jk} for fixed (n, i), including in-range zeros.
struct MultiplicityTable {
    int n = 0;
    int i = 0;
    /// (j, k) -> s^i_{jk} for 0 <= j <= i, 0 <= k <= m_bound(n, i, j).
    std::map<std::pair<int, int>, Int> entries;

    static int m_bound(int n, int i, int j) { return (i - j) * (2 * n - 2 * i - 1); }
    Int at(int j, int k) const;
};

MultiplicityTable s_table(int n, int i);

/// Stalk dimensions of the IC sheaf of the closure of the orbit 2^i 1^{2n-2i}
/// at a point of the orbit 2^j 1^{2n-2j} (perverse degrees, so all degrees
/// are negative except in the trivial case). dims holds nonzero entries only.
struct StalkTable {
    int n = 0;
    int i = 0;
    int j = 0;
    std::map<std::int64_t, Int> dims;
};

/// Requires 0 <= j <= i <= n-1; j > i is rejected because the point then
/// lies outside the orbit closure. Degree k dimension is the coefficient of
/// q^{k + j(2n-j) + (i-j)(2(n-j)-(i-j))} in h_{i-j}^{(n-j)}(q).
StalkTable stalk_table(int n, int i, int j);

} // namespace qfano

#endif
