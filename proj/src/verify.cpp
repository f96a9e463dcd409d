#include "qfano/verify.hpp"

#include <algorithm>
#include <sstream>

#include "qfano/fano.hpp"
#include "qfano/kostka.hpp"
#include "qfano/qseries.hpp"

namespace qfano {

namespace {

std::string render_params(const std::vector<std::pair<std::string, std::string>>& params) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) out << ", ";
        first = false;
        out << k << "=" << v;
    }
    return out.str();
}

using Params = std::vector<std::pair<std::string, std::string>>;

Params sorted(Params p) {
    std::sort(p.begin(), p.end());
    return p;
}

std::string istr(std::int64_t v) { return std::to_string(v); }

// first exponent at which two polynomials differ
std::optional<std::tuple<std::int64_t, Int, Int>> first_difference(const LaurentPoly& a,
                                                                   const LaurentPoly& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::size_t i = 0, j = 0;
    while (i < ta.size() || j < tb.size()) {
        if (j == tb.size() || (i < ta.size() && ta[i].first < tb[j].first))
            return std::tuple{ta[i].first, ta[i].second, Int(0)};
        if (i == ta.size() || tb[j].first < ta[i].first)
            return std::tuple{tb[j].first, Int(0), tb[j].second};
        if (ta[i].second != tb[j].second)
            return std::tuple{ta[i].first, ta[i].second, tb[j].second};
        ++i;
        ++j;
    }
    return std::nullopt;
}

VerificationReport poly_report(std::string identity, Params params, const LaurentPoly& lhs,
                               const LaurentPoly& rhs) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.params = sorted(std::move(params));
    auto diff = first_difference(lhs, rhs);
    r.pass = !diff.has_value();
    if (diff) {
        auto [e, ca, cb] = *diff;
        r.witness = VerificationReport::Witness{lhs.str(), rhs.str(), e, ca.str(), cb.str()};
    }
    return r;
}

VerificationReport rational_report(std::string identity, Params params, const RationalPair& lhs,
                                   const RationalPair& rhs) {
    return poly_report(std::move(identity), std::move(params), lhs.num() * rhs.den(),
                       rhs.num() * lhs.den());
}

VerificationReport condition_report(std::string identity, Params params, bool ok,
                                    std::string lhs_note, std::string rhs_note) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.params = sorted(std::move(params));
    r.pass = ok;
    if (!ok) r.witness = VerificationReport::Witness{std::move(lhs_note), std::move(rhs_note), 0, "", ""};
    return r;
}

LaurentPoly one() { return LaurentPoly::constant(1); }

// ---------------------------------------------------------------- randomness

// splitmix64: tiny, seedable, identical on every platform
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::int64_t below(std::int64_t bound) { // uniform-ish in [0, bound)
        return static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(bound));
    }
};

// at most 6 terms, exponents in [-10, 10], coefficients in [-9, 9] \ {0}
LaurentPoly random_sparse_poly(SplitMix64& rng) {
    std::vector<LaurentPoly::Term> terms;
    const std::int64_t count = 1 + rng.below(6);
    for (std::int64_t t = 0; t < count; ++t) {
        const std::int64_t e = rng.below(21) - 10;
        std::int64_t c = rng.below(18) - 9;
        if (c >= 0) ++c;
        terms.emplace_back(e, c);
    }
    return LaurentPoly::from_terms(std::move(terms));
}

} // namespace

std::string VerificationReport::text_line() const {
    std::ostringstream out;
    out << (pass ? "PASS" : "FAIL") << " " << identity;
    if (!params.empty()) out << " (" << render_params(params) << ")";
    if (witness) {
        out << ": first difference at q^" << witness->exponent << " (" << witness->lhs_coeff
            << " vs " << witness->rhs_coeff << "); lhs = " << witness->lhs
            << "; rhs = " << witness->rhs;
    }
    return out.str();
}

std::string VerificationReport::json_line() const {
    std::ostringstream out;
    out << "{\"identity\":\"" << identity << "\",\"params\":{";
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) out << ",";
        first = false;
        out << "\"" << k << "\":" << v;
    }
    out << "},\"status\":\"" << (pass ? "pass" : "fail") << "\",";
    if (witness) {
        out << "\"witness\":{\"first_exponent\":" << witness->exponent << ",\"lhs_coeff\":\""
            << witness->lhs_coeff << "\",\"rhs_coeff\":\"" << witness->rhs_coeff << "\",\"lhs\":\""
            << witness->lhs << "\",\"rhs\":\"" << witness->rhs << "\"}";
    } else {
        out << "\"witness\":null";
    }
    out << "}";
    return out.str();
}

bool all_pass(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

void sort_reports(std::vector<VerificationReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const VerificationReport& a, const VerificationReport& b) {
                         if (a.identity != b.identity) return a.identity < b.identity;
                         return a.params < b.params;
                     });
}

// ------------------------------------------------------------ master identity

std::vector<VerificationReport> check_inductive(int nmax) {
    if (nmax < 1) throw std::invalid_argument("check_inductive: need nmax >= 1");
    std::vector<VerificationReport> reports;
    for (int n = 1; n <= nmax; ++n) {
        for (int i = 0; i <= n - 1; ++i) {
            LaurentPoly rhs;
            for (int j = 0; j <= i; ++j) {
                const std::int64_t d = i - j;
                LaurentPoly t = h_poly(n, j) * p_poly(n - j, i - j);
                rhs += t.shifted(d * (d + 1));
            }
            reports.push_back(poly_report("inductive-identity", {{"n", istr(n)}, {"i", istr(i)}},
                                          ogr_poincare(i, n), rhs));
        }
    }
    return reports;
}

// -------------------------------------------------------- Pochhammer inverse

namespace {

// (X; Q)_{count} for the monomial X = q^{x_exp}, starting at factor index
// `from`; i.e. prod_{t=from}^{from+count-1} (1 - q^{x_exp + q_exp*t}).
LaurentPoly poch_from(std::int64_t x_exp, std::int64_t q_exp, std::int64_t from, std::int64_t count) {
    return q_pochhammer(x_exp + q_exp * from, q_exp, count);
}

void reject_vanishing(std::int64_t exponent, const std::string& factor) {
    if (exponent == 0)
        throw std::invalid_argument("vanishing Pochhammer factor (1 - q^0) in " + factor);
}

} // namespace

std::vector<VerificationReport> check_matrix_inversion(int size, std::int64_t a_exp,
                                                       std::int64_t q_exp, std::uint64_t seed) {
    if (size < 1) throw std::invalid_argument("check_matrix_inversion: need size >= 1");
    if (q_exp == 0) throw std::invalid_argument("check_matrix_inversion: need Q != 1 (q_exp nonzero)");
    // exponents of A Q^i appearing in denominators (and in the 1-AQ^{2m} factor)
    for (int i = 1; i <= 2 * size - 2; ++i)
        reject_vanishing(a_exp + q_exp * i, "(A Q;Q)_{k+j} at factor A Q^" + std::to_string(i));
    for (int m = 0; m <= size - 1; ++m)
        reject_vanishing(a_exp + 2 * m * q_exp, "(1 - A Q^{2m}) at m=" + std::to_string(m));

    SplitMix64 rng(seed);
    std::vector<LaurentPoly> alpha;
    for (int j = 0; j < size; ++j) alpha.push_back(random_sparse_poly(rng));

    const std::int64_t aq = a_exp + q_exp; // AQ as a monomial exponent

    // beta_k = sum_j alpha_j / ((Q;Q)_{k-j} (AQ;Q)_{k+j}), put over the common
    // denominator (Q;Q)_k (AQ;Q)_{2k} using the prefix structure of Pochhammers
    std::vector<LaurentPoly> beta_num(size), beta_den(size);
    for (int k = 0; k < size; ++k) {
        LaurentPoly num;
        for (int j = 0; j <= k; ++j) {
            LaurentPoly t = alpha[j];
            t *= poch_from(q_exp, q_exp, k - j, j);       // (Q;Q)_{k-j} -> (Q;Q)_k
            t *= poch_from(aq, q_exp, k + j, k - j);      // (AQ;Q)_{k+j} -> (AQ;Q)_{2k}
            num += t;
        }
        beta_num[k] = std::move(num);
        beta_den[k] = q_pochhammer(q_exp, q_exp, k) * q_pochhammer(aq, q_exp, 2 * k);
    }

    VerificationReport report;
    report.identity = "matrix-inversion-roundtrip";
    report.params = sorted({{"size", istr(size)},
                            {"a_exp", istr(a_exp)},
                            {"q_exp", istr(q_exp)},
                            {"seed", std::to_string(seed)}});
    report.pass = true;

    for (int m = 0; m < size && report.pass; ++m) {
        // alpha_m = sum_k (-1)^{m+k} beta_k (AQ;Q)_{m+k-1} / (Q;Q)_{m-k}
        //           * (1 - A Q^{2m}) Q^{binom(m-k,2)}
        RationalPair recovered;
        if (m == 0) {
            // single term with the (AQ;Q)_{-1} reciprocal
            RationalPair t(beta_num[0], beta_den[0]);
            t *= q_pochhammer_rational(aq, q_exp, -1);
            t *= RationalPair(one() - LaurentPoly::q_power(a_exp));
            recovered = t;
        } else {
            // common denominator (Q;Q)_m (AQ;Q)_{2m} (Q;Q)_m
            LaurentPoly num;
            for (int k = 0; k <= m; ++k) {
                LaurentPoly t = beta_num[k];
                t *= poch_from(q_exp, q_exp, k, m - k);   // (Q;Q)_k -> (Q;Q)_m
                t *= poch_from(aq, q_exp, 2 * k, 2 * (m - k)); // (AQ;Q)_{2k} -> (AQ;Q)_{2m}
                t *= q_pochhammer(aq, q_exp, m + k - 1);
                t *= poch_from(q_exp, q_exp, m - k, k);   // (Q;Q)_{m-k} -> (Q;Q)_m
                t *= one() - LaurentPoly::q_power(a_exp + 2 * m * q_exp);
                const std::int64_t mk = m - k;
                t = t.shifted(q_exp * (mk * (mk - 1) / 2));
                if ((m + k) % 2 != 0) t = -t;
                num += t;
            }
            LaurentPoly den = q_pochhammer(q_exp, q_exp, m);
            den *= q_pochhammer(aq, q_exp, 2 * m);
            den *= q_pochhammer(q_exp, q_exp, m);
            recovered = RationalPair(std::move(num), std::move(den));
        }
        if (!recovered.equals(RationalPair(alpha[m]))) {
            auto sub = rational_report(report.identity, report.params, recovered, RationalPair(alpha[m]));
            report.pass = false;
            report.witness = sub.witness;
            report.witness->lhs = "recovered alpha_" + std::to_string(m) + " = " + report.witness->lhs;
            report.witness->rhs = "alpha_" + std::to_string(m) + " * common denominator = " + report.witness->rhs;
        }
    }
    return {report};
}

// ----------------------------------------------------------------- Cor. A.9

namespace {

struct BaileyParams {
    int m;
    std::int64_t b, r, d2, bs;
};

// left side: sum over k <= m/2
RationalPair bailey_lhs(const BaileyParams& p) {
    const int kmax = p.m / 2;
    LaurentPoly num;
    for (int k = 0; k <= kmax; ++k) {
        LaurentPoly t = q_pochhammer(p.d2, p.bs, 2 * k);
        t *= poch_from(2 * p.bs, 2 * p.bs, k, kmax - k);       // (Q^2;Q^2)_k -> _kmax
        t *= poch_from(p.r, 2 * p.bs, k, kmax - k);            // (R;Q^2)_k -> _kmax
        t *= poch_from(p.bs, p.bs, p.m - 2 * k, 2 * k);        // (Q;Q)_{m-2k} -> _m
        t *= q_pochhammer(p.d2 + 2 * k * p.bs - p.b, p.bs, p.m - 2 * k);
        const std::int64_t kk = k;
        t = t.shifted(p.bs * kk * (2 * kk - 2) + p.r * kk + p.b * (p.m - 2 * kk));
        num += t;
    }
    LaurentPoly den = q_pochhammer(2 * p.bs, 2 * p.bs, kmax);
    den *= q_pochhammer(p.r, 2 * p.bs, kmax);
    den *= q_pochhammer(p.bs, p.bs, p.m);
    return RationalPair(std::move(num), std::move(den));
}

// middle: sum over s <= m
RationalPair bailey_mid(const BaileyParams& p) {
    LaurentPoly num;
    for (int s = 0; s <= p.m; ++s) {
        LaurentPoly t = q_pochhammer(p.d2, p.bs, p.m - s);
        t *= q_pochhammer(p.r - p.bs, 2 * p.bs, p.m - s);
        t *= q_pochhammer(-p.b, p.bs, s);
        t *= poch_from(p.bs, p.bs, p.m - s, s);                // (Q;Q)_{m-s} -> _m
        t *= poch_from(p.r - p.bs, p.bs, p.m - s, s);          // (R/Q;Q)_{m-s} -> _m
        t *= poch_from(p.bs, p.bs, s, p.m - s);                // (Q;Q)_s -> _m
        t = t.shifted(p.b * s);
        num += t;
    }
    LaurentPoly den = q_pochhammer(p.bs, p.bs, p.m);
    den *= q_pochhammer(p.r - p.bs, p.bs, p.m);
    den *= q_pochhammer(p.bs, p.bs, p.m);
    return RationalPair(std::move(num), std::move(den));
}

// right side: prefactor times sum over s <= m
RationalPair bailey_rhs(const BaileyParams& p) {
    const std::int64_t e1 = p.bs * (1 - p.m) - p.d2;  // Q^{1-m}/D^2
    const std::int64_t e2 = p.bs * (3 - 2 * p.m) - p.r; // Q^{3-2m}/R
    LaurentPoly num;
    for (int s = 0; s <= p.m; ++s) {
        LaurentPoly t = q_pochhammer(-p.bs * p.m, p.bs, s); // (Q^{-m};Q)_s
        t *= q_pochhammer(p.bs * (2 - p.m) - p.r, p.bs, s); // (Q^{2-m}/R;Q)_s
        t *= q_pochhammer(-p.b, p.bs, s);                   // (1/B;Q)_s
        t *= poch_from(e1, p.bs, s, p.m - s);               // (Q^{1-m}/D^2;Q)_s -> _m
        t *= poch_from(e2, 2 * p.bs, s, p.m - s);           // (Q^{3-2m}/R;Q^2)_s -> _m
        t *= poch_from(p.bs, p.bs, s, p.m - s);             // (Q;Q)_s -> _m
        const std::int64_t ss = s;
        t = t.shifted(ss * (p.b + p.bs * (2 - p.m) - p.d2) + p.bs * (ss * (ss - 1) / 2));
        num += t;
    }
    LaurentPoly den = q_pochhammer(e1, p.bs, p.m);
    den *= q_pochhammer(e2, 2 * p.bs, p.m);
    den *= q_pochhammer(p.bs, p.bs, p.m);

    RationalPair sum(std::move(num), std::move(den));
    LaurentPoly pre_num = q_pochhammer(p.d2, p.bs, p.m) * q_pochhammer(p.r - p.bs, 2 * p.bs, p.m);
    LaurentPoly pre_den = q_pochhammer(p.bs, p.bs, p.m) * q_pochhammer(p.r - p.bs, p.bs, p.m);
    return RationalPair(std::move(pre_num), std::move(pre_den)) * sum;
}

void validate_bailey(const BaileyParams& p) {
    if (p.m < 0) throw std::invalid_argument("check_q_bailey: need m >= 0");
    if (p.bs == 0) throw std::invalid_argument("check_q_bailey: base step must be nonzero");
    for (int i = 0; i <= p.m / 2 - 1; ++i)
        reject_vanishing(p.r + 2 * p.bs * i, "(R;Q^2)_k");
    for (int i = 0; i <= p.m - 1; ++i) {
        reject_vanishing(p.r - p.bs + p.bs * i, "(R/Q;Q)");
        reject_vanishing(p.bs * (1 - p.m + i) - p.d2, "(Q^{1-m}/D^2;Q)_s");
    }
    for (int i = 0; i <= p.m - 1; ++i)
        reject_vanishing(p.bs * (3 - 2 * p.m) - p.r + 2 * p.bs * i, "(Q^{3-2m}/R;Q^2)_s");
}

} // namespace

std::vector<VerificationReport> check_q_bailey(int m, std::int64_t b_exp, std::int64_t r_exp,
                                               std::int64_t d2_exp, std::int64_t base_step) {
    const BaileyParams p{m, b_exp, r_exp, d2_exp, base_step};
    validate_bailey(p);
    const RationalPair e1 = bailey_lhs(p);
    const RationalPair e2 = bailey_mid(p);
    const RationalPair e3 = bailey_rhs(p);
    const Params params = sorted({{"m", istr(m)},
                                  {"b_exp", istr(b_exp)},
                                  {"r_exp", istr(r_exp)},
                                  {"d2_exp", istr(d2_exp)},
                                  {"base_step", istr(base_step)}});
    std::vector<VerificationReport> reports;
    reports.push_back(rational_report("q-bailey-lhs-vs-mid", params, e1, e2));
    reports.push_back(rational_report("q-bailey-mid-vs-rhs", params, e2, e3));
    reports.push_back(rational_report("q-bailey-lhs-vs-rhs", params, e1, e3));
    return reports;
}

std::vector<VerificationReport> check_q_bailey_family(int m, int n) {
    return check_q_bailey(m, -2 * n, -4 * n + 4 * m - 4, -2 * n + 2 * m, -2);
}

// ----------------------------------------------------------------- Prop. A.8

std::vector<VerificationReport> check_quad_transform(int order, std::int64_t d2_exp,
                                                     std::int64_t r_exp, std::int64_t base_step) {
    if (order < 1) throw std::invalid_argument("check_quad_transform: need order >= 1");
    if (base_step == 0) throw std::invalid_argument("check_quad_transform: base step must be nonzero");
    for (int i = 0; i <= order - 1; ++i)
        reject_vanishing(r_exp - base_step + base_step * i, "(R/Q;Q)_n");
    for (int i = 0; i <= order / 2 - 1; ++i)
        reject_vanishing(r_exp + 2 * base_step * i, "(R;Q^2)_k");

    // right side: sum over k of prefactor_k * x^{2k} * poch_ratio_series(...)
    std::vector<RationalPair> rhs(order + 1, RationalPair(LaurentPoly()));
    for (int k = 0; 2 * k <= order; ++k) {
        LaurentPoly pnum = q_pochhammer(d2_exp, base_step, 2 * k);
        const std::int64_t kk = k;
        pnum = pnum.shifted(base_step * kk * (2 * kk - 2) + r_exp * kk);
        LaurentPoly pden = q_pochhammer(2 * base_step, 2 * base_step, k) *
                           q_pochhammer(r_exp, 2 * base_step, k);
        const RationalPair pref(std::move(pnum), std::move(pden));
        const TruncatedSeries series =
            poch_ratio_series(d2_exp + 2 * k * base_step, base_step, order - 2 * k);
        for (int t = 0; 2 * k + t <= order; ++t)
            rhs[2 * k + t] += pref * RationalPair(series.coeff(t));
    }

    VerificationReport report;
    report.identity = "quad-transform-series";
    report.params = sorted({{"order", istr(order)},
                            {"d2_exp", istr(d2_exp)},
                            {"r_exp", istr(r_exp)},
                            {"base_step", istr(base_step)}});
    report.pass = true;
    for (int j = 0; j <= order && report.pass; ++j) {
        LaurentPoly lnum = q_pochhammer(d2_exp, base_step, j) *
                           q_pochhammer(r_exp - base_step, 2 * base_step, j);
        LaurentPoly lden = q_pochhammer(base_step, base_step, j) *
                           q_pochhammer(r_exp - base_step, base_step, j);
        const RationalPair lhs(std::move(lnum), std::move(lden));
        if (!lhs.equals(rhs[j])) {
            auto sub = rational_report(report.identity, report.params, lhs, rhs[j]);
            report.pass = false;
            report.witness = sub.witness;
            report.witness->lhs = "coefficient of x^" + std::to_string(j) + ": " + report.witness->lhs;
        }
    }
    return {report};
}

// ------------------------------------------------------------------- suites

std::vector<VerificationReport> check_h_suite(int nmax) {
    if (nmax < 2) throw std::invalid_argument("check_h_suite: need nmax >= 2");
    std::vector<VerificationReport> reports;
    for (int n = 1; n <= nmax; ++n) {
        for (int m = 0; m <= n - 1; ++m) {
            const Params params = {{"m", istr(m)}, {"n", istr(n)}};
            const LaurentPoly ref = h_poly(n, m, HMethod::Recursive);

            // six-way agreement; a route that fails to produce a polynomial
            // counts as a disagreement, not an error
            std::optional<VerificationReport> mismatch;
            for (HMethod method : kAllHMethods) {
                try {
                    const LaurentPoly h = h_poly(n, m, method);
                    if (h == ref) continue;
                    auto r = poly_report("h-method-agreement", params, ref, h);
                    r.witness->lhs = std::string(to_string(HMethod::Recursive)) + ": " + r.witness->lhs;
                    r.witness->rhs = std::string(to_string(method)) + ": " + r.witness->rhs;
                    mismatch = std::move(r);
                } catch (const IdentityViolationError& e) {
                    mismatch = condition_report("h-method-agreement", params, false,
                                                std::string(to_string(method)) + ": " + e.what(),
                                                e.lhs());
                }
                if (mismatch) break;
            }
            reports.push_back(mismatch ? *mismatch : poly_report("h-method-agreement", params, ref, ref));

            // positivity, even support, exact degree m(2n-m-1), polynomiality
            const std::int64_t want_deg = std::int64_t(m) * (2 * n - m - 1);
            const bool shape_ok = ref.all_coeffs_nonnegative() &&
                                  (ref.support_parity() == Parity::Even) && !ref.is_zero() &&
                                  ref.min_exponent() >= 0 && ref.max_exponent() == want_deg;
            reports.push_back(condition_report("h-positivity-degree", params, shape_ok, ref.str(),
                                               "expected degree " + istr(want_deg) +
                                                   ", nonnegative coefficients, even support"));

            // degree bound of the defining property: deg h <= m(2n-m) - 1 for m >= 1
            if (m >= 1) {
                const bool bound_ok = ref.max_exponent() <= std::int64_t(m) * (2 * n - m) - 1;
                reports.push_back(condition_report("h-degree-bound", params, bound_ok, ref.str(),
                                                   "bound " + istr(std::int64_t(m) * (2 * n - m) - 1)));
            }

            // each ClosedB summand: nonnegative of degree m(2n-m-1)-2k
            bool summands_ok = true;
            std::string bad;
            for (int k = 0; k <= m / 2; ++k) {
                const LaurentPoly t = h_closed_b_summand(n, m, k);
                if (t.is_zero() || !t.all_coeffs_nonnegative() ||
                    t.max_exponent() != want_deg - 2 * k) {
                    summands_ok = false;
                    bad = "k=" + istr(k) + ": " + t.str();
                    break;
                }
            }
            reports.push_back(condition_report("h-closed-b-summands", params, summands_ok, bad,
                                               "each summand nonnegative of degree m(2n-m-1)-2k"));

            // the recurrence grounding h in pair index n-1
            if (m >= 1) {
                LaurentPoly rec =
                    (one() + LaurentPoly::q_power(2 * n - 2)) * h_poly(n - 1, m - 1, HMethod::Recursive);
                if (m % 2 == 0)
                    rec += q_binomial(n - 1, m / 2, 4) - q_binomial(n - 1, m / 2 - 1, 4);
                reports.push_back(poly_report("h-recurrence", params, ref, rec));
            }
        }

        // P_j^{(n)}: palindromy about j(2n-2j-1), exact degree, positivity
        for (int j = 0; j <= n - 1; ++j) {
            const Params params = {{"j", istr(j)}, {"n", istr(n)}};
            const LaurentPoly p = p_poly(n, j);
            const std::int64_t center = std::int64_t(j) * (2 * n - 2 * j - 1);
            const bool ok = p.is_palindromic(center) && p.all_coeffs_nonnegative() && !p.is_zero() &&
                            p.min_exponent() == 0 && p.max_exponent() == 2 * center;
            reports.push_back(condition_report("p-palindromy-degree", params, ok, p.str(),
                                               "palindromic about " + istr(center) +
                                                   " with degree " + istr(2 * center)));
        }
    }
    // the master identity is part of this suite's contract as well
    for (auto& r : check_inductive(nmax)) reports.push_back(std::move(r));
    sort_reports(reports);
    return reports;
}

std::vector<VerificationReport> check_fano_suite(int gmax) {
    if (gmax < 1) throw std::invalid_argument("check_fano_suite: need gmax >= 1");
    std::vector<VerificationReport> reports;

    for (int g = 1; g <= gmax; ++g) {
        // Jacobian row: F_{g-1} has the Betti numbers of Jac(C)
        {
            const std::vector<Int> got = betti_via_multiplicities(g, g - 1);
            std::vector<Int> want;
            for (int k = 0; k <= 2 * g; ++k) want.push_back(binomial(2 * g, k));
            reports.push_back(poly_report("jacobian-betti", {{"g", istr(g)}}, poincare_poly(got),
                                          poincare_poly(want)));
        }

        // the two routes agree for every i >= 2; the table entries carry
        // the forced parity k = j-i+1 (mod 2)
        for (int i = 2; i <= g; ++i) {
            const Params params = {{"g", istr(g)}, {"i", istr(i)}};
            try {
                const CohomologyTable table = cohomology_table(g, i);
                const std::vector<Int> via = betti_via_multiplicities(g, g - i);
                reports.push_back(poly_report("fano-route-equivalence", params,
                                              poincare_poly(table.betti), poincare_poly(via)));
                bool parity_ok = true;
                std::string bad;
                for (const auto& [kj, v] : table.ncoeffs)
                    if (((kj.first - (kj.second - i + 1)) % 2 + 2) % 2 != 0) {
                        parity_ok = false;
                        bad = "N(k=" + istr(kj.first) + ", j=" + istr(kj.second) + ") = " + v.str();
                        break;
                    }
                reports.push_back(condition_report("n-coefficient-parity", params, parity_ok, bad,
                                                   "nonzero only for k = j-i+1 (mod 2)"));
            } catch (const IdentityViolationError& e) {
                reports.push_back(
                    condition_report("fano-route-equivalence", params, false, e.what(), e.lhs()));
            }
        }

        // variety of lines: the closed form matches the tables (needs i = g-1 >= 2)
        if (g >= 3) {
            const int n = g + 1;
            reports.push_back(poly_report("f1-closed-form", {{"g", istr(g)}},
                                          poincare_poly(example_f1_betti(n)),
                                          poincare_poly(cohomology_table(g, g - 1).betti)));
        }

        // parity vanishing of stalk tables at pair index n = g+1
        {
            const int n = g + 1;
            for (int i = 0; i <= n - 1; ++i) {
                bool ok = true;
                std::string bad;
                for (int j = 0; j <= i && ok; ++j) {
                    const StalkTable t = stalk_table(n, i, j);
                    for (const auto& [k, dim] : t.dims) {
                        const bool forbidden = ((k % 2 + 2) % 2) == ((i - 1) % 2 + 2) % 2;
                        if (forbidden || dim < 0) {
                            ok = false;
                            bad = "j=" + istr(j) + ", degree " + istr(k) + " has dim " + dim.str();
                            break;
                        }
                    }
                }
                reports.push_back(condition_report("stalk-parity-vanishing",
                                                   {{"i", istr(i)}, {"n", istr(n)}}, ok, bad,
                                                   "dims must vanish for degrees of parity i-1"));
            }
        }
    }

    // genus independence of N_i(k,j): same numbers for g, g+1, and the
    // generating polynomial
    for (int i = 2; i <= std::min(5, gmax); ++i) {
        for (int j = i - 1; j <= std::min(6, gmax); ++j) {
            const int g = std::max(i, j);
            const LaurentPoly gen = n_generating_poly(i, j);
            bool ok = true;
            std::string bad;
            for (std::int64_t k = -20; k <= 20 && ok; ++k) {
                const Int a = n_via_multiplicities(g, i, j, k);
                const Int b = n_via_multiplicities(g + 1, i, j, k);
                const Int c = gen.coeff(k);
                if (a != b || a != c) {
                    ok = false;
                    bad = "k=" + istr(k) + ": g=" + istr(g) + " gives " + a.str() + ", g=" +
                          istr(g + 1) + " gives " + b.str() + ", generating polynomial gives " +
                          c.str();
                }
            }
            reports.push_back(condition_report("genus-independence", {{"i", istr(i)}, {"j", istr(j)}},
                                               ok, bad, gen.str()));
        }
    }

    sort_reports(reports);
    return reports;
}

} // namespace qfano
