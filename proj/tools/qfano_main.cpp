// qfano: exact tables and identity checks for the cohomology of Fano
// varieties of k-planes in smooth intersections of two quadrics.
//
// Subcommands: h, betti, decomp, stalks, verify. Exit codes are frozen for
// CI use: 0 success, 1 verification failure, 2 usage/range error, 3 internal
// identity violation.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfano/fano.hpp"
#include "qfano/kostka.hpp"
#include "qfano/laurent.hpp"
#include "qfano/qseries.hpp"
#include "qfano/verify.hpp"
#include "qfano/version.hpp"

namespace {

using nlohmann::json;
using namespace qfano;

// ----------------------------------------------------------- small helpers

std::string latex_poly(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
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
            out << "q^{" << e << "}";
        }
    }
    return out.str();
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 0xf];
    return s;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// One file per key; the payload is the exact byte output of the command, so
// cached and recomputed runs are byte-identical.
class ResultCache {
public:
    explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}
    bool enabled() const { return !dir_.empty(); }

    std::optional<std::string> lookup(const std::string& key) const {
        if (!enabled()) return std::nullopt;
        std::ifstream in(path_for(key));
        if (!in) return std::nullopt;
        json entry = json::parse(in, nullptr, /*allow_exceptions=*/false);
        if (entry.is_discarded() || !entry.contains("key") || entry["key"] != key ||
            !entry.contains("payload") || !entry["payload"].is_string())
            return std::nullopt;
        return entry["payload"].get<std::string>();
    }

    void store(const std::string& key, const std::string& payload) const {
        if (!enabled()) return;
        std::filesystem::create_directories(dir_);
        json entry;
        entry["key"] = key;
        entry["created_at"] = utc_timestamp();
        entry["payload"] = payload;
        std::ofstream out(path_for(key), std::ios::trunc);
        out << entry.dump(2) << "\n";
    }

private:
    std::string dir_;
    std::filesystem::path path_for(const std::string& key) const {
        return std::filesystem::path(dir_) / (hex64(fnv1a64(key)) + ".json");
    }
};

std::string cache_key(const std::string& command,
                      std::vector<std::pair<std::string, std::string>> params) {
    std::sort(params.begin(), params.end());
    std::ostringstream key;
    key << command;
    for (const auto& [k, v] : params) key << ";" << k << "=" << v;
    key << ";v=" << kVersion;
    return key.str();
}

void require_format(const std::string& format) {
    if (format != "text" && format != "json" && format != "csv" && format != "latex")
        throw CLI::ValidationError("--format", "must be one of text, json, csv, latex");
}

template <typename T>
std::string join(const std::vector<T>& values, const char* sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << sep;
        if constexpr (std::is_same_v<T, Int>)
            out << values[i].str();
        else
            out << values[i];
    }
    return out.str();
}

// ------------------------------------------------------------- subcommands

std::string render_h(int n, int m, const std::string& method, const std::string& format) {
    std::vector<std::pair<HMethod, LaurentPoly>> polys;
    if (method == "all") {
        for (HMethod hm : kAllHMethods) polys.emplace_back(hm, h_poly(n, m, hm));
    } else {
        auto hm = parse_h_method(method);
        if (!hm)
            throw std::invalid_argument(
                "unknown method '" + method +
                "' (expected recursive, closed-a, closed-b, inversion, first-positive, recurrence, all)");
        polys.emplace_back(*hm, h_poly(n, m, *hm));
    }
    bool agree = true;
    for (const auto& [hm, p] : polys) agree = agree && (p == polys.front().second);
    if (!agree)
        throw IdentityViolationError("h methods disagree at n=" + std::to_string(n) +
                                         ", m=" + std::to_string(m),
                                     polys.front().second.str(), polys.back().second.str());

    std::ostringstream out;
    if (format == "text") {
        if (polys.size() == 1) {
            out << polys.front().second.str() << "\n";
        } else {
            for (const auto& [hm, p] : polys) out << to_string(hm) << ": " << p.str() << "\n";
            out << "agreement: yes\n";
        }
    } else if (format == "json") {
        if (polys.size() == 1) {
            out << "{\"n\":" << n << ",\"m\":" << m << ",\"method\":\"" << to_string(polys[0].first)
                << "\",\"poly\":" << polys[0].second.json() << "}\n";
        } else {
            out << "{\"n\":" << n << ",\"m\":" << m << ",\"methods\":{";
            for (std::size_t i = 0; i < polys.size(); ++i) {
                if (i) out << ",";
                out << "\"" << to_string(polys[i].first) << "\":" << polys[i].second.json();
            }
            out << "},\"agree\":true}\n";
        }
    } else if (format == "csv") {
        for (const auto& [hm, p] : polys)
            for (const auto& [e, c] : p.terms())
                out << to_string(hm) << "," << e << "," << c.str() << "\n";
    } else { // latex
        for (const auto& [hm, p] : polys) {
            if (polys.size() > 1) out << to_string(hm) << " & ";
            out << "$" << latex_poly(p) << "$";
            if (polys.size() > 1) out << " \\\\";
            out << "\n";
        }
    }
    return out.str();
}

std::string render_betti(int g, int kplane, const std::string& format) {
    const std::vector<Int> betti = betti_via_multiplicities(g, kplane);
    const int dim = static_cast<int>(betti.size() - 1) / 2;
    std::ostringstream out;
    if (format == "text") {
        out << join(betti, " ") << "\n";
    } else if (format == "csv") {
        out << join(betti, ",") << "\n";
    } else if (format == "json") {
        out << "{\"g\":" << g << ",\"kplane\":" << kplane << ",\"dim\":" << dim << ",\"betti\":["
            << join(betti, ",") << "]}\n";
    } else { // latex
        out << "\\begin{tabular}{l*{" << betti.size() << "}{r}}\n$k$";
        for (std::size_t k = 0; k < betti.size(); ++k) out << " & " << k;
        out << " \\\\\n$b_k$";
        for (const Int& b : betti) out << " & " << b.str();
        out << " \\\\\n\\end{tabular}\n";
    }
    return out.str();
}

std::string render_decomp(int g, int i, const std::string& format) {
    const CohomologyTable table = cohomology_table(g, i);
    const std::int64_t kmax = table.dim;
    std::ostringstream out;
    if (format == "json") {
        out << "{\"g\":" << g << ",\"i\":" << i << ",\"entries\":[";
        bool first = true;
        for (const auto& [kj, v] : table.ncoeffs) {
            if (!first) out << ",";
            first = false;
            out << "{\"k\":" << kj.first << ",\"j\":" << kj.second << ",\"N\":" << v.str() << "}";
        }
        out << "]}\n";
    } else if (format == "csv") {
        out << "k,j,N\n";
        for (const auto& [kj, v] : table.ncoeffs)
            out << kj.first << "," << kj.second << "," << v.str() << "\n";
    } else if (format == "text") {
        out << "k\\j";
        for (int j = i - 1; j <= g; ++j) out << " " << j;
        out << "\n";
        for (std::int64_t k = -kmax; k <= kmax; ++k) {
            out << k;
            for (int j = i - 1; j <= g; ++j) {
                auto it = table.ncoeffs.find({k, j});
                out << " " << (it == table.ncoeffs.end() ? "0" : it->second.str());
            }
            out << "\n";
        }
    } else { // latex, powers of q ascending down the rows
        out << "\\begin{tabular}{r|*{" << (g - i + 2) << "}{r}}\n$k \\backslash j$";
        for (int j = i - 1; j <= g; ++j) out << " & " << j;
        out << " \\\\\n\\hline\n";
        for (std::int64_t k = -kmax; k <= kmax; ++k) {
            out << k;
            for (int j = i - 1; j <= g; ++j) {
                auto it = table.ncoeffs.find({k, j});
                out << " & " << (it == table.ncoeffs.end() ? "0" : it->second.str());
            }
            out << " \\\\\n";
        }
        out << "\\end{tabular}\n";
    }
    return out.str();
}

std::string render_stalks(int n, int i, int j, const std::string& format) {
    const StalkTable table = stalk_table(n, i, j);
    std::ostringstream out;
    if (format == "text") {
        for (const auto& [deg, dim] : table.dims) out << deg << ": " << dim.str() << "\n";
    } else if (format == "csv") {
        for (const auto& [deg, dim] : table.dims) out << deg << "," << dim.str() << "\n";
    } else if (format == "json") {
        out << "{\"n\":" << n << ",\"i\":" << i << ",\"j\":" << j << ",\"dims\":[";
        bool first = true;
        for (const auto& [deg, dim] : table.dims) {
            if (!first) out << ",";
            first = false;
            out << "[" << deg << "," << dim.str() << "]";
        }
        out << "]}\n";
    } else { // latex
        out << "\\begin{tabular}{r|r}\n$k$ & $\\dim$ \\\\\n\\hline\n";
        for (const auto& [deg, dim] : table.dims) out << deg << " & " << dim.str() << " \\\\\n";
        out << "\\end{tabular}\n";
    }
    return out.str();
}

struct VerifyOptions {
    std::string suite = "all";
    int nmax = 12;
    int gmax = 6;
    int order = 8;
    std::uint64_t seed = 1;
    std::optional<int> m, n, size;
    std::optional<std::int64_t> a_exp, q_exp, b_exp, r_exp, d2_exp, base_step;
};

std::vector<VerificationReport> run_bailey(const VerifyOptions& opt) {
    std::vector<VerificationReport> reports;
    if (opt.m && (opt.b_exp || opt.r_exp || opt.d2_exp)) {
        if (!(opt.b_exp && opt.r_exp && opt.d2_exp))
            throw std::invalid_argument("bailey: give all of --b-exp, --r-exp, --d2-exp (or --n for "
                                        "the specialized family)");
        return check_q_bailey(*opt.m, *opt.b_exp, *opt.r_exp, *opt.d2_exp,
                              opt.base_step.value_or(-2));
    }
    if (opt.m && opt.n) return check_q_bailey_family(*opt.m, *opt.n);
    // default sweep: the specialized family for n <= 8, m <= min(10, n-1),
    // plus a few generic parameter triples
    for (int n = 1; n <= 8; ++n)
        for (int m = 0; m <= std::min(10, n - 1); ++m)
            for (auto& r : check_q_bailey_family(m, n)) reports.push_back(std::move(r));
    for (int m : {2, 5, 10}) {
        for (auto& r : check_q_bailey(m, 5, 7, 11, -2)) reports.push_back(std::move(r));
        for (auto& r : check_q_bailey(m, -3, 9, 7, -2)) reports.push_back(std::move(r));
    }
    return reports;
}

std::vector<VerificationReport> run_inversion(const VerifyOptions& opt) {
    std::vector<VerificationReport> reports;
    if (opt.size) {
        const std::int64_t a = opt.a_exp.value_or(4 * *opt.size);
        return check_matrix_inversion(*opt.size, a, opt.q_exp.value_or(-2), opt.seed);
    }
    for (int size = 1; size <= 8; ++size)
        for (std::uint64_t s = 0; s < 10; ++s)
            for (auto& r : check_matrix_inversion(size, 4 * size, -2, opt.seed + s))
                reports.push_back(std::move(r));
    return reports;
}

std::vector<VerificationReport> run_quad(const VerifyOptions& opt) {
    std::vector<VerificationReport> reports;
    if (opt.d2_exp || opt.r_exp) {
        if (!(opt.d2_exp && opt.r_exp))
            throw std::invalid_argument("quad: give both --d2-exp and --r-exp");
        return check_quad_transform(opt.order, *opt.d2_exp, *opt.r_exp, opt.base_step.value_or(-2));
    }
    const std::vector<std::array<std::int64_t, 3>> grid = {
        {-6, -16, -2}, {-2, -8, -2}, {-4, -12, -2}, {-8, -20, -2}, {4, 10, 2},
    };
    for (const auto& [d2, r, bs] : grid)
        for (auto& rep : check_quad_transform(opt.order, d2, r, bs)) reports.push_back(std::move(rep));
    return reports;
}

int run_verify(const VerifyOptions& opt, const std::string& format) {
    std::vector<VerificationReport> reports;
    auto append = [&reports](std::vector<VerificationReport> batch) {
        for (auto& r : batch) reports.push_back(std::move(r));
    };
    // the h suite already contains the inductive identity, so "all" gets it
    // through check_h_suite without duplicate reports
    if (opt.suite == "inductive") append(check_inductive(opt.nmax));
    if (opt.suite == "h" || opt.suite == "all") append(check_h_suite(opt.nmax));
    if (opt.suite == "fano" || opt.suite == "all") append(check_fano_suite(opt.gmax));
    if (opt.suite == "bailey" || opt.suite == "all") append(run_bailey(opt));
    if (opt.suite == "inversion" || opt.suite == "all") append(run_inversion(opt));
    if (opt.suite == "quad" || opt.suite == "all") append(run_quad(opt));
    if (reports.empty()) throw std::invalid_argument("unknown suite '" + opt.suite + "'");
    sort_reports(reports);

    std::ostringstream out;
    int failures = 0;
    for (const auto& r : reports) {
        failures += r.pass ? 0 : 1;
        if (format == "json") {
            out << r.json_line() << "\n";
        } else if (format == "csv") {
            out << (r.pass ? "pass" : "fail") << ",\"" << r.identity << "\",\"";
            bool first = true;
            for (const auto& [k, v] : r.params) {
                if (!first) out << " ";
                first = false;
                out << k << "=" << v;
            }
            out << "\"\n";
        } else if (format == "latex") {
            out << r.identity << " & " << (r.pass ? "pass" : "fail") << " \\\\\n";
        } else {
            out << r.text_line() << "\n";
        }
    }
    if (format == "text")
        out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) FAILED")
            << " (" << reports.size() << " reports)\n";
    std::fputs(out.str().c_str(), stdout);
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology tables and identity verification for Fano varieties of k-planes "
                 "in smooth intersections of two quadrics"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string cache_dir;
    app.add_option("--cache-dir", cache_dir, "directory for cached results")
        ->envname("QFANO_CACHE_DIR");

    // h
    int h_n = 0, h_m = 0;
    std::string h_method = "recursive", h_format = "text";
    CLI::App* cmd_h = app.add_subcommand("h", "Kostka-Foulkes analogue h_m^(n)(q)");
    cmd_h->add_option("--n", h_n, "pair index n >= 1")->required();
    cmd_h->add_option("--m", h_m, "0 <= m <= n-1")->required();
    cmd_h->add_option("--method", h_method,
                      "recursive | closed-a | closed-b | inversion | first-positive | recurrence | all");
    cmd_h->add_option("--format", h_format, "text | json | csv | latex");

    // betti
    int b_g = 0, b_kplane = 0;
    std::string b_format = "text";
    CLI::App* cmd_betti = app.add_subcommand("betti", "Betti numbers of the Fano variety of kplane-planes");
    cmd_betti->add_option("--g", b_g, "genus g >= 1")->required();
    cmd_betti->add_option("--kplane", b_kplane, "0 <= kplane <= g-1")->required();
    cmd_betti->add_option("--format", b_format, "text | json | csv | latex");

    // decomp
    int d_g = 0, d_i = 0;
    std::string d_format = "text";
    CLI::App* cmd_decomp = app.add_subcommand("decomp", "multiplicities N_i(k,j) of the cohomology decomposition");
    cmd_decomp->add_option("--g", d_g, "genus g >= 1")->required();
    cmd_decomp->add_option("--i", d_i, "2 <= i <= g")->required();
    cmd_decomp->add_option("--format", d_format, "text | json | csv | latex");

    // stalks
    int s_n = 0, s_i = 0, s_j = 0;
    std::string s_format = "text";
    CLI::App* cmd_stalks = app.add_subcommand("stalks", "IC stalk dimensions on order-2 nilpotent orbit closures");
    cmd_stalks->add_option("--n", s_n, "pair index n >= 1")->required();
    cmd_stalks->add_option("--i", s_i, "orbit index of the closure, 0 <= i <= n-1")->required();
    cmd_stalks->add_option("--j", s_j, "orbit index of the point, 0 <= j <= i")->required();
    cmd_stalks->add_option("--format", s_format, "text | json | csv | latex");

    // verify
    VerifyOptions vopt;
    std::string v_format = "text";
    int v_m = 0, v_n = 0, v_size = 0;
    std::int64_t v_a = 0, v_q = 0, v_b = 0, v_r = 0, v_d2 = 0, v_bs = 0;
    CLI::App* cmd_verify = app.add_subcommand("verify", "machine-verify the combinatorial identities");
    cmd_verify->add_option("--suite", vopt.suite, "all | inductive | h | fano | bailey | inversion | quad");
    cmd_verify->add_option("--nmax", vopt.nmax, "largest pair index (default 12)");
    cmd_verify->add_option("--gmax", vopt.gmax, "largest genus (default 6)");
    cmd_verify->add_option("--order", vopt.order, "series truncation order (default 8)");
    cmd_verify->add_option("--seed", vopt.seed, "base seed for randomized checks (default 1)");
    auto* om = cmd_verify->add_option("--m", v_m, "single check: m");
    auto* on = cmd_verify->add_option("--n", v_n, "single bailey check: family pair index n");
    auto* osize = cmd_verify->add_option("--size", v_size, "single inversion check: system size");
    auto* oa = cmd_verify->add_option("--a-exp", v_a, "inversion: exponent of A");
    auto* oq = cmd_verify->add_option("--q-exp", v_q, "inversion: exponent of Q");
    auto* ob = cmd_verify->add_option("--b-exp", v_b, "bailey: exponent of B");
    auto* orr = cmd_verify->add_option("--r-exp", v_r, "bailey/quad: exponent of R");
    auto* od2 = cmd_verify->add_option("--d2-exp", v_d2, "bailey/quad: exponent of D^2");
    auto* obs = cmd_verify->add_option("--base-step", v_bs, "bailey/quad: exponent of the base");
    cmd_verify->add_option("--format", v_format, "text | json | csv | latex");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const ResultCache cache(cache_dir);
        std::string key, payload;
        if (cmd_h->parsed()) {
            require_format(h_format);
            key = cache_key("h", {{"n", std::to_string(h_n)},
                                  {"m", std::to_string(h_m)},
                                  {"method", h_method},
                                  {"format", h_format}});
            if (auto hit = cache.lookup(key)) {
                std::fputs(hit->c_str(), stdout);
                return 0;
            }
            payload = render_h(h_n, h_m, h_method, h_format);
        } else if (cmd_betti->parsed()) {
            require_format(b_format);
            key = cache_key("betti", {{"g", std::to_string(b_g)},
                                      {"kplane", std::to_string(b_kplane)},
                                      {"format", b_format}});
            if (auto hit = cache.lookup(key)) {
                std::fputs(hit->c_str(), stdout);
                return 0;
            }
            payload = render_betti(b_g, b_kplane, b_format);
        } else if (cmd_decomp->parsed()) {
            require_format(d_format);
            key = cache_key("decomp", {{"g", std::to_string(d_g)},
                                       {"i", std::to_string(d_i)},
                                       {"format", d_format}});
            if (auto hit = cache.lookup(key)) {
                std::fputs(hit->c_str(), stdout);
                return 0;
            }
            payload = render_decomp(d_g, d_i, d_format);
        } else if (cmd_stalks->parsed()) {
            require_format(s_format);
            key = cache_key("stalks", {{"n", std::to_string(s_n)},
                                       {"i", std::to_string(s_i)},
                                       {"j", std::to_string(s_j)},
                                       {"format", s_format}});
            if (auto hit = cache.lookup(key)) {
                std::fputs(hit->c_str(), stdout);
                return 0;
            }
            payload = render_stalks(s_n, s_i, s_j, s_format);
        } else { // verify (never cached: reports are streamed)
            require_format(v_format);
            if (om->count()) vopt.m = v_m;
            if (on->count()) vopt.n = v_n;
            if (osize->count()) vopt.size = v_size;
            if (oa->count()) vopt.a_exp = v_a;
            if (oq->count()) vopt.q_exp = v_q;
            if (ob->count()) vopt.b_exp = v_b;
            if (orr->count()) vopt.r_exp = v_r;
            if (od2->count()) vopt.d2_exp = v_d2;
            if (obs->count()) vopt.base_step = v_bs;
            return run_verify(vopt, v_format);
        }
        std::fputs(payload.c_str(), stdout);
        cache.store(key, payload);
        return 0;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InexactDivisionError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const IdentityViolationError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        if (!e.lhs().empty()) std::cerr << "  lhs: " << e.lhs() << "\n";
        if (!e.rhs().empty()) std::cerr << "  rhs: " << e.rhs() << "\n";
        return 3;
    }
}
