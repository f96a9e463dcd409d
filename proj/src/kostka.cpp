#include "qfano/kostka.hpp"

#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "qfano/qseries.hpp"

namespace qfano {

const char* to_string(HMethod m) {
    switch (m) {
        case HMethod::Recursive: return "recursive";
        case HMethod::ClosedA: return "closed-a";
        case HMethod::ClosedB: return "closed-b";
        case HMethod::Inversion: return "inversion";
        case HMethod::FirstPositive: return "first-positive";
        case HMethod::Recurrence: return "recurrence";
    }
    return "?";
}

std::optional<HMethod> parse_h_method(std::string_view name) {
    for (HMethod m : kAllHMethods)
        if (name == to_string(m)) return m;
    return std::nullopt;
}

namespace {

void require_h_range(int n, int m) {
    if (n < 1 || m < 0 || m > n - 1)
        throw std::invalid_argument("h_poly: need n >= 1 and 0 <= m <= n-1 (got n=" +
                                    std::to_string(n) + ", m=" + std::to_string(m) + ")");
}

LaurentPoly one() { return LaurentPoly::constant(1); }

LaurentPoly one_minus_q(std::int64_t e) {
    return LaurentPoly::constant(1) - LaurentPoly::q_power(e);
}

// forward
LaurentPoly h_dispatch(int n, int m, HMethod method);

LaurentPoly h_memoized(int n, int m, HMethod method);

// --- Recursive: solve the defining unit-triangular system -----------------
//
// og_{k,2n} = sum_{j=0}^{k} q^{(k-j)(k-j+1)} h_j^{(n)} [2n-1-k-j, k-j]_{q^2};
// the j = k coefficient is 1, so back-substitution never divides.
LaurentPoly h_recursive(int n, int m) {
    LaurentPoly acc = ogr_poincare(m, n);
    for (int j = 0; j < m; ++j) {
        const std::int64_t d = m - j;
        LaurentPoly t = h_memoized(n, j, HMethod::Recursive);
        t *= q_binomial(2 * n - 1 - m - j, d, 2);
        acc -= t.shifted(d * (d + 1));
    }
    return acc;
}

// --- ClosedA / ClosedB -----------------------------------------------------

LaurentPoly h_closed_a(int n, int m) {
    LaurentPoly acc;
    for (int k = 0; k <= m / 2; ++k) {
        LaurentPoly t = q_pochhammer(2 * n - 2, -2, m - 2 * k, /*negated=*/true);
        LaurentPoly quot = q_binomial(n - m + 2 * k, k, 4) * one_minus_q(4 * (n - m));
        quot = divide_exact(quot, one_minus_q(4 * (n - m + 2 * k)));
        t *= quot;
        acc += t.shifted(4 * k);
    }
    return acc;
}

LaurentPoly h_closed_b(int n, int m) {
    LaurentPoly acc;
    for (int k = 0; k <= m / 2; ++k) acc += h_closed_b_summand(n, m, k);
    return acc;
}

// --- Inversion: matrix-inverse solution, evaluated as written --------------
//
// h_m = C_m sum_{k=0}^{m} (q^{2m};q^{-2})_k (q^{4n-2m};q^{-2})_k (1-q^{2n})
//           / ((q^{-2};q^{-2})_k (q^{4n-2};q^{-4})_k (1-q^{2(n-k)}))
//           * q^{-k^2-3k}
//
// Intermediate terms carry negative exponents and signs; only the final
// result is a genuine polynomial. All k-term denominators divide
// (q^{-2};q^{-2})_m (q^{4n-2};q^{-4})_m prod_k (1-q^{2(n-k)}), so the sum is
// accumulated over that common denominator instead of pairwise fractions.
LaurentPoly h_inversion(int n, int m) {
    // prefix/suffix products of the (1 - q^{2(n-k)}) factors, k = 0..m
    std::vector<LaurentPoly> lin(m + 1);
    for (int k = 0; k <= m; ++k) lin[k] = one_minus_q(2 * (n - k));
    std::vector<LaurentPoly> pre(m + 2), suf(m + 2);
    pre[0] = one();
    for (int k = 0; k <= m; ++k) pre[k + 1] = pre[k] * lin[k];
    suf[m + 1] = one();
    for (int k = m; k >= 0; --k) suf[k] = suf[k + 1] * lin[k];

    LaurentPoly num; // sum over the common denominator
    for (int k = 0; k <= m; ++k) {
        LaurentPoly t = q_pochhammer(2 * m, -2, k);
        t *= q_pochhammer(4 * n - 2 * m, -2, k);
        t *= one_minus_q(2 * n);
        // complement of (q^{-2};q^{-2})_k inside (..)_m, ditto for the q^{-4} one
        t *= q_pochhammer(-2 - 2 * k, -2, m - k);
        t *= q_pochhammer(4 * n - 2 - 4 * k, -4, m - k);
        t *= pre[k] * suf[k + 1];
        const std::int64_t kk = k;
        num += t.shifted(-kk * kk - 3 * kk);
    }
    LaurentPoly den = q_pochhammer(-2, -2, m);
    den *= q_pochhammer(4 * n - 2, -4, m);
    den *= pre[m + 1];

    // C_m = (q^{4n-2};q^{-2})_{m-1} / (q^2;q^2)_m * (1-q^{4n-4m}) q^{2m} (-1)^m
    RationalPair cm = q_pochhammer_rational(4 * n - 2, -2, m - 1);
    cm *= RationalPair(one(), q_pochhammer(2, 2, m));
    LaurentPoly cnum = one_minus_q(4 * n - 4 * m).shifted(2 * m);
    if (m % 2 != 0) cnum = -cnum;
    cm *= RationalPair(std::move(cnum));

    const RationalPair total = cm * RationalPair(std::move(num), std::move(den));
    LaurentPoly h = total.to_poly();
    if (!h.is_zero() && h.min_exponent() < 0)
        throw IdentityViolationError("h_poly(inversion): result is not a polynomial", h.str(), "");
    return h;
}

// --- FirstPositive ----------------------------------------------------------
//
// h_m = (-q^{2n-2};q^{-2})_m sum_k (q^{2n-2m};q^2)_{2k}
//        / ((q^{4n+4-4m};q^4)_k (q^4;q^4)_k) q^{4k}
LaurentPoly h_first_positive(int n, int m) {
    const int kmax = m / 2;
    LaurentPoly num;
    for (int k = 0; k <= kmax; ++k) {
        LaurentPoly t = q_pochhammer(2 * n - 2 * m, 2, 2 * k);
        t *= q_pochhammer(4 * n + 4 - 4 * m + 4 * k, 4, kmax - k); // tail of (..;q^4)_kmax
        t *= q_pochhammer(4 + 4 * k, 4, kmax - k);                 // tail of (q^4;q^4)_kmax
        num += t.shifted(4 * k);
    }
    LaurentPoly den = q_pochhammer(4 * n + 4 - 4 * m, 4, kmax) * q_pochhammer(4, 4, kmax);
    LaurentPoly h = divide_exact(q_pochhammer(2 * n - 2, -2, m, /*negated=*/true) * num, den);
    if (!h.is_zero() && h.min_exponent() < 0)
        throw IdentityViolationError("h_poly(first-positive): result is not a polynomial", h.str(), "");
    return h;
}

// --- Recurrence -------------------------------------------------------------
LaurentPoly h_recurrence(int n, int m) {
    if (m == 0) return one();
    LaurentPoly h = (one() + LaurentPoly::q_power(2 * n - 2)) * h_memoized(n - 1, m - 1, HMethod::Recurrence);
    if (m % 2 == 0)
        h += q_binomial(n - 1, m / 2, 4) - q_binomial(n - 1, m / 2 - 1, 4);
    return h;
}

LaurentPoly h_dispatch(int n, int m, HMethod method) {
    switch (method) {
        case HMethod::Recursive: return h_recursive(n, m);
        case HMethod::ClosedA: return h_closed_a(n, m);
        case HMethod::ClosedB: return h_closed_b(n, m);
        case HMethod::Inversion: return h_inversion(n, m);
        case HMethod::FirstPositive: return h_first_positive(n, m);
        case HMethod::Recurrence: return h_recurrence(n, m);
    }
    throw std::invalid_argument("h_poly: unknown method");
}

// Append-only memo tables. Single writer per key: a key is published at most
// once and never mutated afterwards, so readers always see complete values.
std::mutex g_cache_mutex;
std::map<std::tuple<int, int, HMethod>, LaurentPoly> g_h_cache;
std::map<std::pair<int, int>, LaurentPoly> g_p_cache;

LaurentPoly h_memoized(int n, int m, HMethod method) {
    require_h_range(n, m);
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_h_cache.find({n, m, method});
        if (it != g_h_cache.end()) return it->second;
    }
    LaurentPoly h = h_dispatch(n, m, method);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto [it, inserted] = g_h_cache.try_emplace({n, m, method}, std::move(h));
    return it->second;
}

} // namespace

LaurentPoly h_poly(int n, int m, HMethod method) { return h_memoized(n, m, method); }

LaurentPoly h_closed_b_summand(int n, int m, int k) {
    require_h_range(n, m);
    if (k < 0 || k > m / 2)
        throw std::invalid_argument("h_closed_b_summand: need 0 <= k <= m/2");
    LaurentPoly t = q_pochhammer(2 * n - 2, -2, m - 2 * k, /*negated=*/true);
    t *= q_binomial(n - m + 2 * k - 1, k, 4) - q_binomial(n - m + 2 * k - 1, k - 1, 4);
    return t;
}

LaurentPoly p_poly(int n, int j) {
    if (n < 1 || j < 0 || j > n - 1)
        throw std::invalid_argument("p_poly: need n >= 1 and 0 <= j <= n-1 (got n=" +
                                    std::to_string(n) + ", j=" + std::to_string(j) + ")");
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_p_cache.find({n, j});
        if (it != g_p_cache.end()) return it->second;
    }
    LaurentPoly p = grassmann_poincare(j, 2 * n - 1 - j);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto [it, inserted] = g_p_cache.try_emplace({n, j}, std::move(p));
    return it->second;
}

Int s_number(int n, int i, int j, int k) {
    if (!(0 <= j && j <= i && i <= n - 1))
        throw std::invalid_argument("s_number: need 0 <= j <= i <= n-1 (got n=" + std::to_string(n) +
                                    ", i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
    if (k < 0) throw std::invalid_argument("s_number: need k >= 0");
    // (s^i_{jk})_n = (s^{i-j}_{0,k})_{n-j}
    const int a = i - j;
    const int np = n - j;
    if (a == 0) return k == 0 ? 1 : 0;
    const LaurentPoly p = p_poly(np, a);
    if (p.support_parity() == Parity::Mixed || p.support_parity() == Parity::Odd)
        throw IdentityViolationError("s_number: P has off-parity coefficients", p.str(), "");
    const std::int64_t center = std::int64_t(a) * (2 * np - 2 * a - 1);
    Int s = p.coeff(center + k);
    if (s < 0)
        throw IdentityViolationError("s_number: negative multiplicity extracted", p.str(), "");
    return s;
}

Int MultiplicityTable::at(int j, int k) const {
    auto it = entries.find({j, k});
    return it == entries.end() ? Int(0) : it->second;
}

MultiplicityTable s_table(int n, int i) {
    MultiplicityTable t;
    t.n = n;
    t.i = i;
    for (int j = 0; j <= i; ++j) {
        const int kmax = MultiplicityTable::m_bound(n, i, j);
        for (int k = 0; k <= kmax; ++k) t.entries[{j, k}] = s_number(n, i, j, k);
    }
    return t;
}

StalkTable stalk_table(int n, int i, int j) {
    if (!(0 <= j && i <= n - 1 && i >= 0))
        throw std::invalid_argument("stalk_table: need 0 <= j <= i <= n-1");
    if (j > i)
        throw std::invalid_argument("stalk_table: orbit 2^" + std::to_string(j) +
                                    " is not in the closure of orbit 2^" + std::to_string(i) +
                                    " (need j <= i)");
    StalkTable t;
    t.n = n;
    t.i = i;
    t.j = j;
    const int a = i - j;
    const int np = n - j;
    const std::int64_t tj = std::int64_t(j) * (2 * n - j);
    const std::int64_t shift = tj + std::int64_t(a) * (2 * np - a);
    const LaurentPoly h = h_poly(np, a);
    for (const auto& [e, c] : h.terms()) t.dims[e - shift] = c;
    return t;
}

} // namespace qfano
