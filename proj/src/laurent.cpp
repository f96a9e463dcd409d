#include "qfano/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qfano {

InexactDivisionError::InexactDivisionError(const std::string& msg, LaurentPoly remainder)
    : std::runtime_error(msg), remainder_(std::make_shared<LaurentPoly>(std::move(remainder))) {}

InexactDivisionError::~InexactDivisionError() = default;

IdentityViolationError::IdentityViolationError(const std::string& msg, std::string lhs, std::string rhs)
    : std::runtime_error(msg), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

LaurentPoly LaurentPoly::constant(Int c) { return monomial(std::move(c), 0); }

LaurentPoly LaurentPoly::monomial(Int c, std::int64_t e) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace_back(e, std::move(c));
    return p;
}

LaurentPoly LaurentPoly::q_power(std::int64_t e) { return monomial(1, e); }

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    LaurentPoly p;
    p.terms_ = std::move(terms);
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    // merge duplicate exponents in place
    std::size_t out = 0;
    for (std::size_t i = 0; i < p.terms_.size();) {
        std::int64_t e = p.terms_[i].first;
        Int c = std::move(p.terms_[i].second);
        for (++i; i < p.terms_.size() && p.terms_[i].first == e; ++i) c += p.terms_[i].second;
        if (c != 0) p.terms_[out++] = Term(e, std::move(c));
    }
    p.terms_.resize(out);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

std::int64_t LaurentPoly::min_exponent() const {
    if (is_zero()) throw std::invalid_argument("min_exponent: zero polynomial");
    return terms_.front().first;
}

std::int64_t LaurentPoly::max_exponent() const {
    if (is_zero()) throw std::invalid_argument("max_exponent: zero polynomial");
    return terms_.back().first;
}

Int LaurentPoly::coeff(std::int64_t e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, std::int64_t v) { return t.first < v; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

namespace {

// merge two sorted term lists with +/- on the second
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b, int sign) {
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, sign > 0 ? b[j].second : -b[j].second);
            ++j;
        } else {
            Int c = sign > 0 ? Int(a[i].second + b[j].second) : Int(a[i].second - b[j].second);
            if (c != 0) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    terms_ = merge_terms(terms_, o.terms_, +1);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    terms_ = merge_terms(terms_, o.terms_, -1);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    const std::int64_t lo = a.min_exponent() + b.min_exponent();
    const std::int64_t hi = a.max_exponent() + b.max_exponent();
    const std::int64_t span = hi - lo + 1;
    LaurentPoly r;
    if (span <= (std::int64_t(1) << 24)) {
        // dense accumulation over the product's exponent range
        std::vector<Int> acc(static_cast<std::size_t>(span));
        for (const auto& [ea, ca] : a.terms())
            for (const auto& [eb, cb] : b.terms())
                acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
        std::size_t nonzero = 0;
        for (const Int& c : acc)
            if (c != 0) ++nonzero;
        r.terms_.reserve(nonzero);
        for (std::int64_t t = 0; t < span; ++t)
            if (acc[static_cast<std::size_t>(t)] != 0)
                r.terms_.emplace_back(lo + t, std::move(acc[static_cast<std::size_t>(t)]));
        return r;
    }
    // huge sparse span: accumulate term lists pairwise
    std::vector<LaurentPoly::Term> acc;
    for (const auto& [ea, ca] : a.terms()) {
        std::vector<LaurentPoly::Term> row;
        row.reserve(b.term_count());
        for (const auto& [eb, cb] : b.terms()) row.emplace_back(ea + eb, ca * cb);
        acc = merge_terms(acc, row, +1);
    }
    return LaurentPoly::from_terms(std::move(acc));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::shifted(std::int64_t e) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.first += e;
    return r;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
    if (c == 0) return LaurentPoly();
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

LaurentPoly LaurentPoly::substitute_power(std::int64_t m) const {
    if (m == 0) throw std::invalid_argument("substitute_power: exponent multiplier must be nonzero");
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.first *= m;
    if (m < 0) std::reverse(r.terms_.begin(), r.terms_.end());
    return r;
}

Int LaurentPoly::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

bool LaurentPoly::all_coeffs_nonnegative() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

bool LaurentPoly::is_palindromic(std::int64_t center) const {
    for (const auto& [e, c] : terms_)
        if (coeff(2 * center - e) != c) return false;
    return true;
}

Parity LaurentPoly::support_parity() const {
    if (terms_.empty()) return Parity::Empty;
    bool even = false, odd = false;
    for (const auto& [e, c] : terms_) (e % 2 == 0 ? even : odd) = true;
    if (even && odd) return Parity::Mixed;
    return even ? Parity::Even : Parity::Odd;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        Int a = neg ? Int(-c) : c;
        if (e == 0) {
            out << a.str();
        } else {
            if (a != 1) out << a.str();
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

std::string LaurentPoly::json() const {
    std::ostringstream out;
    out << "{\"terms\":[";
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << ",";
        first = false;
        out << "[" << e << ",\"" << c.str() << "\"]";
    }
    out << "]}";
    return out.str();
}

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
    if (p.is_zero()) return LaurentPoly();

    // Shift both operands to ordinary polynomials and run synthetic division
    // from the lowest exponent; the quotient picks up the shift difference.
    const std::int64_t plo = p.min_exponent(), phi = p.max_exponent();
    const std::int64_t dlo = d.min_exponent(), dhi = d.max_exponent();
    const std::int64_t qlo = plo - dlo;
    const std::int64_t qspan = (phi - dhi) - qlo + 1; // quotient slots
    const std::int64_t rspan = phi - plo + 1;

    auto make_remainder = [&](const std::vector<Int>& rem) {
        std::vector<LaurentPoly::Term> terms;
        for (std::int64_t t = 0; t < rspan; ++t)
            if (rem[static_cast<std::size_t>(t)] != 0)
                terms.emplace_back(plo + t, rem[static_cast<std::size_t>(t)]);
        return LaurentPoly::from_terms(std::move(terms));
    };

    std::vector<Int> rem(static_cast<std::size_t>(rspan));
    for (const auto& [e, c] : p.terms()) rem[static_cast<std::size_t>(e - plo)] = c;
    std::vector<std::pair<std::int64_t, Int>> dterms; // offsets from dlo
    for (const auto& [e, c] : d.terms()) dterms.emplace_back(e - dlo, c);
    const Int& dlead = dterms.front().second;

    if (qspan <= 0)
        throw InexactDivisionError("divide_exact: divisor span exceeds dividend span", p);

    std::vector<LaurentPoly::Term> qterms;
    for (std::int64_t t = 0; t < qspan; ++t) {
        Int& c = rem[static_cast<std::size_t>(t)];
        if (c == 0) continue;
        Int qc, rr;
        boost::multiprecision::divide_qr(c, dlead, qc, rr);
        if (rr != 0)
            throw InexactDivisionError("divide_exact: nonzero remainder", make_remainder(rem));
        for (const auto& [off, dc] : dterms) rem[static_cast<std::size_t>(t + off)] -= qc * dc;
        qterms.emplace_back(qlo + t, std::move(qc));
    }
    for (std::int64_t t = qspan; t < rspan; ++t)
        if (rem[static_cast<std::size_t>(t)] != 0)
            throw InexactDivisionError("divide_exact: nonzero remainder", make_remainder(rem));
    return LaurentPoly::from_terms(std::move(qterms));
}

void LaurentPoly::normalize() {
    *this = from_terms(std::move(terms_));
}

RationalPair::RationalPair(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::invalid_argument("RationalPair: zero denominator");
}

RationalPair RationalPair::operator-() const {
    RationalPair r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalPair& RationalPair::operator+=(const RationalPair& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    return *this;
}

RationalPair& RationalPair::operator-=(const RationalPair& o) {
    if (den_ == o.den_) {
        num_ -= o.num_;
    } else {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
    }
    return *this;
}

RationalPair& RationalPair::operator*=(const RationalPair& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    return *this;
}

bool RationalPair::equals(const RationalPair& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

} // namespace qfano
