#include <doctest.h>

#include "qfano/fano.hpp"
#include "qfano/kostka.hpp"

using namespace qfano;

namespace {

LaurentPoly parse_terms(std::initializer_list<std::pair<std::int64_t, long>> ts) {
    std::vector<LaurentPoly::Term> terms;
    for (auto [e, c] : ts) terms.emplace_back(e, c);
    return LaurentPoly::from_terms(std::move(terms));
}

std::vector<Int> ints(std::initializer_list<long> vs) {
    std::vector<Int> out;
    for (long v : vs) out.emplace_back(v);
    return out;
}

} // namespace

TEST_CASE("n_generating_poly values") {
    for (int i = 2; i <= 5; ++i) CHECK(n_generating_poly(i, i - 1) == LaurentPoly::constant(1));
    CHECK(n_generating_poly(2, 2) == parse_terms({{-3, 1}, {-1, 1}, {1, 1}, {3, 1}}));
    CHECK(n_generating_poly(2, 3) ==
          parse_terms({{-6, 1}, {-4, 1}, {-2, 2}, {0, 1}, {2, 2}, {4, 1}, {6, 1}}));
    CHECK_THROWS_AS((void)n_generating_poly(1, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)n_generating_poly(3, 1), std::invalid_argument);
}

TEST_CASE("n_generating_poly shape: palindromic, nonnegative, right parity") {
    for (int i = 2; i <= 5; ++i)
        for (int j = i - 1; j <= 7; ++j) {
            const LaurentPoly gen = n_generating_poly(i, j);
            CHECK(gen.is_palindromic(0));
            CHECK(gen.all_coeffs_nonnegative());
            for (const auto& [k, c] : gen.terms())
                CHECK(((k - (j - i + 1)) % 2 + 2) % 2 == 0); // k = j-i+1 (mod 2)
        }
}

TEST_CASE("n_via_multiplicities agrees with the generating polynomial") {
    CHECK(n_via_multiplicities(4, 3, 2, 0) == 1);
    CHECK(n_via_multiplicities(3, 2, 2, 1) == 1);
    CHECK(n_via_multiplicities(3, 2, 3, 0) == 1);
    for (int i = 2; i <= 4; ++i)
        for (int j = i - 1; j <= 5; ++j) {
            const int g = j > i ? j : i;
            const LaurentPoly gen = n_generating_poly(i, j);
            for (std::int64_t k = -15; k <= 15; ++k) {
                CAPTURE(i);
                CAPTURE(j);
                CAPTURE(k);
                CHECK(n_via_multiplicities(g, i, j, k) == gen.coeff(k));
                CHECK(n_via_multiplicities(g + 1, i, j, k) == gen.coeff(k));
            }
        }
    CHECK_THROWS_AS((void)n_via_multiplicities(3, 1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)n_via_multiplicities(3, 2, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)n_via_multiplicities(3, 2, 0, 0), std::invalid_argument);
}

TEST_CASE("cohomology tables") {
    const CohomologyTable f1 = cohomology_table(3, 2);
    CHECK(f1.dim == 6);
    CHECK(f1.betti == ints({1, 0, 1, 6, 2, 6, 16, 6, 2, 6, 1, 0, 1}));
    CHECK(f1.ncoeffs.at({0, 1}) == 1);
    CHECK(f1.ncoeffs.at({0, 3}) == 1);
    CHECK(f1.ncoeffs.find({1, 1}) == f1.ncoeffs.end());

    for (int g = 2; g <= 6; ++g) CHECK(cohomology_table(g, g).dim == 2 * g - 1);

    // g = 2: F_0 is the intersection of the two quadrics in P^5 itself,
    // a threefold whose odd cohomology is the g=2 Jacobian's H^1
    CHECK(cohomology_table(2, 2).betti == ints({1, 0, 1, 4, 1, 0, 1}));

    CHECK_THROWS_AS((void)cohomology_table(3, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)cohomology_table(3, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)cohomology_table(0, 2), std::invalid_argument);
}

TEST_CASE("betti_via_multiplicities") {
    CHECK(betti_via_multiplicities(1, 0) == ints({1, 2, 1}));
    CHECK(betti_via_multiplicities(2, 0) == ints({1, 0, 1, 4, 1, 0, 1}));

    // Jacobian rows against an independent Pascal triangle
    std::vector<std::vector<Int>> pascal(14);
    for (int r = 0; r < 14; ++r) {
        pascal[r].assign(r + 1, 1);
        for (int c = 1; c < r; ++c) pascal[r][c] = pascal[r - 1][c - 1] + pascal[r - 1][c];
    }
    for (int g = 1; g <= 6; ++g) {
        const std::vector<Int> row = betti_via_multiplicities(g, g - 1);
        REQUIRE(row.size() == pascal[2 * g].size());
        for (std::size_t k = 0; k < row.size(); ++k) CHECK(row[k] == pascal[2 * g][k]);
    }

    CHECK_THROWS_AS((void)betti_via_multiplicities(1, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)betti_via_multiplicities(2, -1), std::invalid_argument);
}

TEST_CASE("route equivalence of the two Betti computations") {
    for (int g = 1; g <= 4; ++g)
        for (int i = 2; i <= g; ++i) {
            CAPTURE(g);
            CAPTURE(i);
            CHECK(cohomology_table(g, i).betti == betti_via_multiplicities(g, g - i));
        }
}

TEST_CASE("variety of lines: the closed form") {
    CHECK(example_f1_betti(4) == ints({1, 0, 1, 6, 2, 6, 16, 6, 2, 6, 1, 0, 1}));

    const std::vector<Int> b5 = example_f1_betti(5);
    CHECK(b5[0] == 1);
    CHECK(b5[2] == 1);
    CHECK(b5[4] == 2);
    CHECK(b5[6] == 2);
    CHECK(b5[8] == 3);
    CHECK(b5[10] == 30); // (n-3) + binom(2n-2, 2) = 2 + 28

    for (int n = 4; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(example_f1_betti(n) == cohomology_table(n - 1, n - 2).betti);
    }
    CHECK_THROWS_AS((void)example_f1_betti(3), std::invalid_argument);
}

TEST_CASE("poincare_poly adapter") {
    CHECK(poincare_poly(ints({1, 2, 1})) == parse_terms({{0, 1}, {1, 2}, {2, 1}}));
    CHECK(poincare_poly(ints({1, 0, 1})) == parse_terms({{0, 1}, {2, 1}}));
    CHECK(poincare_poly({}).is_zero());
}
