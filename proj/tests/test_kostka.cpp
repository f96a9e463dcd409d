#include <doctest.h>

#include <thread>

#include "qfano/kostka.hpp"
#include "qfano/qseries.hpp"

using namespace qfano;

namespace {

LaurentPoly parse_terms(std::initializer_list<std::pair<std::int64_t, long>> ts) {
    std::vector<LaurentPoly::Term> terms;
    for (auto [e, c] : ts) terms.emplace_back(e, c);
    return LaurentPoly::from_terms(std::move(terms));
}

} // namespace

TEST_CASE("h_poly frozen values") {
    for (int n : {1, 2, 5, 9})
        for (HMethod method : kAllHMethods) CHECK(h_poly(n, 0, method) == LaurentPoly::constant(1));

    CHECK(h_poly(2, 1, HMethod::Recurrence) == parse_terms({{0, 1}, {2, 1}}));
    CHECK(h_poly(3, 2, HMethod::Recursive) == parse_terms({{0, 1}, {2, 1}, {4, 2}, {6, 1}}));
    // the k=0 term of the closed form is (1+q^4)(1+q^2); the k=1 term is
    // [2 1]_{q^4} - 1 = q^4
    CHECK(h_closed_b_summand(3, 2, 0) == parse_terms({{0, 1}, {2, 1}, {4, 1}, {6, 1}}));
    CHECK(h_closed_b_summand(3, 2, 1) == parse_terms({{4, 1}}));
}

TEST_CASE("h_poly: all six methods agree (small sweep)") {
    for (int n = 1; n <= 7; ++n) {
        for (int m = 0; m <= n - 1; ++m) {
            const LaurentPoly ref = h_poly(n, m, HMethod::Recursive);
            for (HMethod method : kAllHMethods) {
                CAPTURE(n);
                CAPTURE(m);
                CAPTURE(to_string(method));
                CHECK(h_poly(n, m, method) == ref);
            }
        }
    }
}

TEST_CASE("h_poly shape: positivity, even support, exact degree") {
    for (int n = 1; n <= 7; ++n) {
        for (int m = 0; m <= n - 1; ++m) {
            const LaurentPoly h = h_poly(n, m);
            CHECK(h.all_coeffs_nonnegative());
            CHECK(h.coeff(0) == 1);
            CHECK(h.min_exponent() == 0);
            CHECK(h.max_exponent() == std::int64_t(m) * (2 * n - m - 1));
            CHECK((h.support_parity() == Parity::Even));
            if (m >= 1) CHECK(h.max_exponent() <= std::int64_t(m) * (2 * n - m) - 1);
            for (int k = 0; k <= m / 2; ++k) {
                const LaurentPoly t = h_closed_b_summand(n, m, k);
                CHECK(t.all_coeffs_nonnegative());
                CHECK(t.max_exponent() == std::int64_t(m) * (2 * n - m - 1) - 2 * k);
            }
        }
    }
}

TEST_CASE("h_poly range checks") {
    CHECK_THROWS_AS((void)h_poly(3, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)h_poly(3, -1), std::invalid_argument);
    CHECK_THROWS_AS((void)h_poly(0, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)h_closed_b_summand(3, 2, 2), std::invalid_argument);
}

TEST_CASE("p_poly values and properties") {
    CHECK(p_poly(4, 0) == LaurentPoly::constant(1));
    CHECK(p_poly(2, 1) == parse_terms({{0, 1}, {2, 1}}));
    CHECK(p_poly(3, 1) == parse_terms({{0, 1}, {2, 1}, {4, 1}, {6, 1}}));
    for (int n = 1; n <= 9; ++n) {
        for (int j = 0; j <= n - 1; ++j) {
            const LaurentPoly p = p_poly(n, j);
            const std::int64_t center = std::int64_t(j) * (2 * n - 2 * j - 1);
            CHECK(p.is_palindromic(center));
            CHECK(p.all_coeffs_nonnegative());
            if (j > 0) CHECK(p.max_exponent() == 2 * center);
        }
    }
    CHECK_THROWS_AS((void)p_poly(3, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)p_poly(3, -1), std::invalid_argument);
}

TEST_CASE("the defining triangular system holds for the computed h and P") {
    // og_{i,2n} = sum_j q^{(i-j)(i-j+1)} h_j^{(n)} P_{i-j}^{(n-j)}
    for (int n = 1; n <= 6; ++n) {
        for (int i = 0; i <= n - 1; ++i) {
            LaurentPoly sum;
            for (int j = 0; j <= i; ++j) {
                const std::int64_t d = i - j;
                sum += (h_poly(n, j) * p_poly(n - j, i - j)).shifted(d * (d + 1));
            }
            CHECK(sum == ogr_poincare(i, n));
        }
    }
}

TEST_CASE("s_number values") {
    for (int n = 2; n <= 6; ++n)
        for (int i = 0; i <= n - 1; ++i) {
            CHECK(s_number(n, i, i, 0) == 1);
            CHECK(s_number(n, i, i, 1) == 0);
            CHECK(s_number(n, i, i, 5) == 0);
        }
    CHECK(s_number(2, 1, 0, 1) == 1);
    CHECK(s_number(2, 1, 0, 0) == 0);
    // parity: s^i_{jk} = 0 unless k = i-j (mod 2); zero beyond the bound
    for (int n = 2; n <= 6; ++n)
        for (int i = 0; i <= n - 1; ++i)
            for (int j = 0; j <= i; ++j) {
                const int bound = MultiplicityTable::m_bound(n, i, j);
                for (int k = 0; k <= bound + 3; ++k) {
                    const Int s = s_number(n, i, j, k);
                    CHECK(s >= 0);
                    if ((k - (i - j)) % 2 != 0) CHECK(s == 0);
                    if (k > bound) CHECK(s == 0);
                }
            }
    CHECK_THROWS_AS((void)s_number(3, 2, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)s_number(3, 3, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)s_number(3, 1, 0, -1), std::invalid_argument);
}

TEST_CASE("s_table") {
    const MultiplicityTable t = s_table(3, 2);
    CHECK(t.at(2, 0) == 1);
    CHECK(t.at(2, 1) == 0);
    // row j=0 reads off P_2^{(3)} = g_{2,3} = [3 2]_{q^2} about its center
    CHECK(t.at(0, 0) == s_number(3, 2, 0, 0));
    for (const auto& [jk, v] : t.entries) CHECK(v >= 0);
    // the reduction (s^i_{jk})_n = (s^{i-j}_{0,k})_{n-j}
    for (int k = 0; k <= MultiplicityTable::m_bound(3, 2, 1); ++k)
        CHECK(t.at(1, k) == s_number(2, 1, 0, k));
}

TEST_CASE("stalk tables") {
    // a point on the open orbit: single stalk in the orbit's perverse degree
    for (int n = 2; n <= 5; ++n)
        for (int i = 0; i <= n - 1; ++i) {
            const StalkTable t = stalk_table(n, i, i);
            CHECK(t.dims.size() == 1);
            CHECK(t.dims.at(-std::int64_t(i) * (2 * n - i)) == 1);
        }

    // read off h_2^{(3)} = 1 + q^2 + 2q^4 + q^6 at shift i(2n-i) = 8
    const StalkTable t320 = stalk_table(3, 2, 0);
    CHECK(t320.dims == std::map<std::int64_t, Int>{{-8, 1}, {-6, 1}, {-4, 2}, {-2, 1}});

    // the induction: stalks at x_j equal stalks at 0 one pair index down,
    // shifted by t_j = j(2n-j)
    const StalkTable t321 = stalk_table(3, 2, 1);
    const StalkTable t210 = stalk_table(2, 1, 0);
    CHECK(t210.dims == std::map<std::int64_t, Int>{{-3, 1}, {-1, 1}});
    std::map<std::int64_t, Int> shifted;
    for (const auto& [k, v] : t210.dims) shifted[k - 5] = v;
    CHECK(t321.dims == shifted);

    CHECK_THROWS_AS((void)stalk_table(3, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)stalk_table(3, 3, 0), std::invalid_argument);
}

TEST_CASE("concurrent callers observe identical memoized values") {
    std::vector<std::vector<LaurentPoly>> results(8);
    std::vector<std::thread> workers;
    for (auto& slot : results)
        workers.emplace_back([&slot] {
            for (int m = 0; m <= 9; ++m)
                for (HMethod method : kAllHMethods) slot.push_back(h_poly(10, m, method));
        });
    for (auto& w : workers) w.join();
    for (const auto& slot : results) CHECK(slot == results.front());
}

TEST_CASE("stalk parity vanishing (small sweep)") {
    for (int n = 2; n <= 6; ++n)
        for (int i = 0; i <= n - 1; ++i)
            for (int j = 0; j <= i; ++j) {
                const StalkTable t = stalk_table(n, i, j);
                for (const auto& [k, dim] : t.dims) {
                    CHECK(dim > 0);
                    CHECK(((k % 2) + 2) % 2 == i % 2); // never in parity i-1
                }
            }
}
