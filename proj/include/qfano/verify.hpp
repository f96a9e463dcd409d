#ifndef QFANO_VERIFY_HPP
#define QFANO_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qfano/laurent.hpp"

namespace qfano {

/// Outcome of one identity check at one parameter set. Failures always carry
/// a witness: both sides in canonical form plus the first differing
/// coefficient (for rational comparisons, of the cross-multiplied products).
struct VerificationReport {
    struct Witness {
        std::string lhs;
        std::string rhs;
        std::int64_t exponent = 0;
        std::string lhs_coeff;
        std::string rhs_coeff;
    };

    std::string identity;
    std::vector<std::pair<std::string, std::string>> params; // sorted by key
    bool pass = true;
    std::optional<Witness> witness;

    std::string text_line() const;
    /// {"identity":...,"params":{...},"status":"pass"|"fail","witness":{...}|null}
    std::string json_line() const;
};

bool all_pass(const std::vector<VerificationReport>& reports);

/// Canonical report order: identity name, then rendered parameters.
void sort_reports(std::vector<VerificationReport>& reports);

/// og_{i,2n} = sum_{j=0}^{i} q^{(i-j)(i-j+1)} h_j^{(n)} P_{i-j}^{(n-j)}
/// for all 1 <= n <= nmax, 0 <= i <= n-1. One report per (n, i).
std::vector<VerificationReport> check_inductive(int nmax);

/// Roundtrip through the Pochhammer matrix inverse with Q = q^{q_exp},
/// A = q^{a_exp}: random sparse alpha_0..alpha_{size-1} (at most 6 terms,
/// exponents in [-10,10], coefficients in [-9,9], drawn from the seed) are
/// pushed through beta_k = sum_j alpha_j / ((Q;Q)_{k-j} (AQ;Q)_{k+j}) and
/// recovered by the inverse sum; recovery is checked exactly for every m.
/// Exponent choices that make a Pochhammer factor vanish are rejected with
/// std::invalid_argument naming the factor.
std::vector<VerificationReport> check_matrix_inversion(int size, std::int64_t a_exp,
                                                       std::int64_t q_exp, std::uint64_t seed);

/// Three-way equality of the quadratic-transformation sum with monomial
/// parameters B = q^{b_exp}, R = q^{r_exp}, D^2 = q^{d2_exp} in base
/// q^{base_step}; all pairs compared by cross-multiplication.
std::vector<VerificationReport> check_q_bailey(int m, std::int64_t b_exp, std::int64_t r_exp,
                                               std::int64_t d2_exp, std::int64_t base_step);

/// Coefficientwise equality, to the given x-order, of
///   sum_n (D^2;Q)_n (R/Q;Q^2)_n / ((Q;Q)_n (R/Q;Q)_n) x^n
/// against the expansion of
///   sum_k (D^2;Q)_{2k} / ((Q^2;Q^2)_k (R;Q^2)_k) Q^{k(2k-2)} R^k x^{2k}
///        * (D^2 x Q^{2k};Q)_inf / (x;Q)_inf
/// with the infinite ratio expanded through poch_ratio_series.
std::vector<VerificationReport> check_quad_transform(int order, std::int64_t d2_exp,
                                                     std::int64_t r_exp, std::int64_t base_step);

/// Every h/P invariant over 1 <= n <= nmax: six-way method agreement,
/// positivity/degree/even support, per-summand degrees of the ClosedB form,
/// the recurrence, the degree bounds, and palindromy of P.
std::vector<VerificationReport> check_h_suite(int nmax);

/// Every Fano-side invariant over 1 <= g <= gmax: route equivalence of the
/// two Betti computations, the Jacobian binomial row, the variety-of-lines
/// closed form, genus independence of N_i(k,j), and parity vanishing of
/// stalk tables for n <= gmax+1.
std::vector<VerificationReport> check_fano_suite(int gmax);

/// The Thm-A.10-shaped parameter family for check_q_bailey at pair index n:
/// base q^{-2}, B = q^{-2n}, R = q^{-4n+4m-4}, D^2 = q^{-2n+2m}.
std::vector<VerificationReport> check_q_bailey_family(int m, int n);

} // namespace qfano

#endif
