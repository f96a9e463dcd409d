#ifndef QFANO_LAURENT_HPP
#define QFANO_LAURENT_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qfano/integers.hpp"

namespace qfano {

class LaurentPoly;

/// divide_exact found a nonzero remainder. The remainder is preserved
/// because a failed exact division usually means an identity was applied
/// outside its hypotheses, and the remainder is the evidence.
class InexactDivisionError : public std::runtime_error {
public:
    InexactDivisionError(const std::string& msg, LaurentPoly remainder);
    ~InexactDivisionError() override;
    const LaurentPoly& remainder() const { return *remainder_; }

private:
    std::shared_ptr<LaurentPoly> remainder_;
};

/// Two routes that must agree (exactly) did not. Carries both sides rendered
/// in canonical form.
class IdentityViolationError : public std::runtime_error {
public:
    IdentityViolationError(const std::string& msg, std::string lhs, std::string rhs);
    const std::string& lhs() const { return lhs_; }
    const std::string& rhs() const { return rhs_; }

private:
    std::string lhs_, rhs_;
};

enum class Parity { Empty, Even, Odd, Mixed };

/// Sparse Laurent polynomial in one variable q with cpp_int coefficients.
///
/// Terms are kept as (exponent, coefficient) pairs sorted by exponent with
/// no zero coefficients stored; exponents may be negative. Values are
/// immutable in spirit: every operation returns a fresh polynomial, so
/// instances can be shared freely across threads.
class LaurentPoly {
public:
    using Term = std::pair<std::int64_t, Int>;

    LaurentPoly() = default; // zero polynomial

    static LaurentPoly constant(Int c);
    static LaurentPoly monomial(Int c, std::int64_t e);
    /// q^e
    static LaurentPoly q_power(std::int64_t e);
    /// Build from arbitrary (exponent, coefficient) pairs; merges duplicates,
    /// drops zeros.
    static LaurentPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Lowest/highest exponent; polynomial must be nonzero.
    std::int64_t min_exponent() const;
    std::int64_t max_exponent() const;

    /// Coefficient of q^e (zero when absent).
    Int coeff(std::int64_t e) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Multiply by q^e.
    LaurentPoly shifted(std::int64_t e) const;
    /// Scale every coefficient.
    LaurentPoly scaled(const Int& c) const;

    /// q -> q^m on exponents (m != 0, else std::invalid_argument).
    LaurentPoly substitute_power(std::int64_t m) const;

    /// Sum of coefficients, i.e. the value at q = 1.
    Int eval_at_one() const;

    bool all_coeffs_nonnegative() const;

    /// coeff(center + k) == coeff(center - k) for all k.
    bool is_palindromic(std::int64_t center) const;

    Parity support_parity() const;

    /// Canonical rendering: ascending exponents, explicit signs,
    /// `q^k` notation, e.g. "1 + q^2 + 2q^4 + q^6".
    std::string str() const;
    /// {"terms": [[e, "coeff"], ...]} ascending in e, coefficients as
    /// decimal strings so no consumer truncates them to 64-bit.
    std::string json() const;

private:
    std::vector<Term> terms_;

    void normalize();
    friend LaurentPoly divide_exact(const LaurentPoly&, const LaurentPoly&);
};

/// Exact quotient r with r * d == p. Throws std::invalid_argument when d is
/// zero and InexactDivisionError (carrying the remainder) when d does not
/// divide p.
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& d);

/// A formal quotient of Laurent polynomials. Never normalized: equality is
/// decided by cross-multiplication, which keeps everything inside the exact
/// integer ring.
class RationalPair {
public:
    RationalPair() : num_(), den_(LaurentPoly::constant(1)) {}
    /*implicit*/ RationalPair(LaurentPoly n) : num_(std::move(n)), den_(LaurentPoly::constant(1)) {}
    RationalPair(LaurentPoly n, LaurentPoly d);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    RationalPair operator-() const;
    RationalPair& operator+=(const RationalPair& o);
    RationalPair& operator-=(const RationalPair& o);
    RationalPair& operator*=(const RationalPair& o);
    friend RationalPair operator+(RationalPair a, const RationalPair& b) { return a += b; }
    friend RationalPair operator-(RationalPair a, const RationalPair& b) { return a -= b; }
    friend RationalPair operator*(RationalPair a, const RationalPair& b) { return a *= b; }

    /// a/b == c/d  iff  a*d == c*b.
    bool equals(const RationalPair& o) const;

    /// The pair as an exact polynomial (throws InexactDivisionError when the
    /// denominator does not divide the numerator).
    LaurentPoly to_poly() const { return divide_exact(num_, den_); }

private:
    LaurentPoly num_, den_;
};

} // namespace qfano

#endif
