#include "abacus/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

#include "abacus/calculus.hpp"
#include "abacus/fock.hpp"
#include "abacus/symfun.hpp"
#include "json.hpp"

namespace abacus {

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

std::string str(const Partition& p) { return "(" + p.to_string() + ")"; }

/// Fills timing and verdict; `check` returns an empty string on success, else the witness.
VerificationReport run(std::string identity, std::vector<std::pair<std::string, std::string>> params, VerifyMode mode,
                       const std::function<std::string(VerificationReport&)>& check) {
    VerificationReport report;
    report.identity = std::move(identity);
    report.params = std::move(params);
    report.mode = mode;
    const auto start = std::chrono::steady_clock::now();
    auto witness = check(report);
    report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    report.verified = witness.empty();
    if (!witness.empty()) report.witness = std::move(witness);
    return report;
}

template <class Tag>
std::string first_mismatch(const PartitionSeries<Tag>& lhs, const PartitionSeries<Tag>& rhs, const char* symbol) {
    auto diff = lhs - rhs;
    if (diff.empty()) return {};
    const auto& [idx, c] = *diff.terms().begin();
    return std::string(symbol) + str(idx) + ": lhs " + lhs.coefficient(idx).get_str() + " vs rhs " +
           rhs.coefficient(idx).get_str();
}

std::string describe(Sign s, const Partition& p) { return (s.negative() ? "-" : "+") + str(p); }

std::string first_mismatch(const SignedPartitionSet& lhs, const SignedPartitionSet& rhs) {
    if (lhs == rhs) return {};
    const auto& a = lhs.items();
    const auto& b = rhs.items();
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    if (i < a.size() && (i >= b.size() || a[i] < b[i])) return "lhs-only term " + describe(a[i].first, a[i].second);
    return "rhs-only term " + describe(b[i].first, b[i].second);
}

void require_range(int ell, int m, int upper) {
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    if (m < 0 || m > upper) throw std::invalid_argument("m out of range for ell = " + std::to_string(ell));
}

std::vector<std::pair<std::string, std::string>> params(std::initializer_list<std::pair<const char*, int>> items) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [k, v] : items) out.emplace_back(k, std::to_string(v));
    return out;
}

}  // namespace

VerifyConfig config_from_environment() {
    VerifyConfig cfg;
    if (const char* env = std::getenv("ABACUS_SF_MAX_DEGREE")) {
        try {
            cfg.max_degree = std::stoi(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("ABACUS_SF_MAX_DEGREE is not an integer: ") + env);
        }
    }
    return cfg;
}

Sign epsilon(int ell, int m) {
    require_range(ell, m, ell);
    std::optional<Sign> low, high;
    if (2 * m <= ell) low = Sign::from_parity(binomial(m, 2));
    if (2 * m >= ell) high = Sign::from_parity(binomial(ell - m + 1, 2) + static_cast<long long>(ell - m) * m);
    if (low && high && *low != *high) throw std::logic_error("epsilon branches disagree at m = ell / 2");
    return low ? *low : *high;
}

VerificationReport verify_a11(int ell, int m, bool analytic) {
    if (ell < 1 || ell % 2 == 0) throw std::invalid_argument("ell must be a positive odd integer");
    require_range(ell, m, ell + 1);
    return run("a11_rectangle", params({{"ell", ell}, {"m", m}}), analytic ? VerifyMode::analytic : VerifyMode::structural,
               [&](VerificationReport& rep) -> std::string {
                   const int rows = ell + 1 - m;
                   const auto family = add_one_nodes(staircase_delta(ell), m, NodeFilling::a11, false);
                   if (static_cast<long long>(family.size()) != binomial(ell + 1, m))
                       return "family size " + std::to_string(family.size()) + " != binomial";
                   std::vector<DifferenceTerm> lhs;
                   for (const auto& mu : family) {
                       const auto q = r_quotient(mu, 2);
                       if (analytic && !is_complementary(q[0], conjugate(q[1]), rows, m))
                           return "quotient of " + str(mu) + " is not complementary";
                       lhs.push_back({Sign::from_parity(q[1].weight()), q[0], q[1]});
                   }
                   std::sort(lhs.begin(), lhs.end());
                   const auto rhs = schur_difference_expansion(rectangle(rows, m));
                   rep.terms = rhs.size();
                   if (lhs != rhs) {
                       std::size_t i = 0;
                       while (i < lhs.size() && i < rhs.size() && lhs[i] == rhs[i]) ++i;
                       const auto& t = i < lhs.size() ? lhs[i] : rhs[i];
                       return std::string(i < lhs.size() ? "lhs" : "rhs") + " term " + describe(t.sign, t.alpha) + " x " +
                              str(t.beta_transposed);
                   }
                   return {};
               });
}

VerificationReport verify_plethysm_quotient(const Partition& lambda, int r) {
    require_modulus(r);
    return run("plethysm_quotient", {{"lambda", str(lambda)}, {"r", std::to_string(r)}}, VerifyMode::analytic,
               [&](VerificationReport& rep) {
                   const auto lhs = plethysm_via_quotients(lambda, r);
                   const auto rhs = to_schur_basis(plethysm_pr(schur_p(lambda), r));
                   rep.terms = rhs.size();
                   return first_mismatch(lhs, rhs, "S");
               });
}

VerificationReport verify_balanced_plethysm(int n, int m, const VerifyConfig& config) {
    if (n < 0 || m < 0) throw std::invalid_argument("balanced parameters must be non-negative");
    const bool analytic = 2 * n * m <= config.max_degree;
    return run("balanced_plethysm", params({{"n", n}, {"m", m}}), analytic ? VerifyMode::analytic : VerifyMode::structural,
               [&](VerificationReport& rep) -> std::string {
                   const auto lhs = plethysm_rect_balanced(n, m);
                   rep.terms = lhs.size();
                   if (static_cast<long long>(lhs.size()) != binomial(n + m, m)) return "term count is not binomial(n+m, m)";
                   for (const auto& [mu, c] : lhs.terms()) {
                       if (c != 1 && c != -1) return "coefficient " + c.get_str() + " at " + str(mu);
                       if (!is_balanced(mu, n, m)) return "unbalanced index " + str(mu);
                   }
                   if (!analytic) return {};
                   const auto rhs = to_schur_basis(plethysm_pr(schur_p(rectangle(n, m)), 2));
                   return first_mismatch(lhs, rhs, "S");
               });
}

VerificationReport verify_quotient_balance(int ell, int m) {
    require_range(ell, m, ell);
    return run("quotient_balance", params({{"ell", ell}, {"m", m}}), VerifyMode::structural,
               [&](VerificationReport& rep) -> std::string {
                   const auto family = add_one_nodes(lambda_ell(ell), m, NodeFilling::a22, true);
                   std::set<Partition, std::greater<>> image;
                   for (const auto& mu : family) image.insert(bar_quotient3(StrictPartition(mu)).one);
                   const auto balanced = enumerate_balanced(ell - m, m);
                   rep.terms = family.size();
                   if (static_cast<long long>(family.size()) != binomial(ell, m)) return "family size is not binomial(ell, m)";
                   if (image.size() != family.size()) return "bar quotient is not injective on the family";
                   const std::vector<Partition> lhs(image.begin(), image.end());
                   if (lhs != balanced) {
                       for (const auto& p : lhs)
                           if (!std::binary_search(balanced.begin(), balanced.end(), p, std::greater<>{}))
                               return "unbalanced image " + str(p);
                       return "image misses part of W(ell-m, m)";
                   }
                   return {};
               });
}

VerificationReport verify_sign_lemma(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("balanced parameters must be non-negative");
    return run("sign_lemma", params({{"n", n}, {"m", m}}), VerifyMode::structural, [&](VerificationReport& rep) -> std::string {
        const auto all = enumerate_balanced(n, m);
        rep.terms = all.size();
        for (const auto& mu : all) {
            int tail = 0;
            for (int i = n; i < 2 * n; ++i) tail += mu[static_cast<std::size_t>(i)];
            if (r_sign(mu, 2) != Sign::from_parity(tail)) return "sign mismatch at " + str(mu);
        }
        return {};
    });
}

VerificationReport verify_littlewood(const Partition& mu, int r) {
    require_modulus(r);
    return run("littlewood", {{"mu", str(mu)}, {"r", std::to_string(r)}}, VerifyMode::analytic, [&](VerificationReport& rep) {
        const auto lhs = omega_specialize(schur_p(mu), r);
        PowerSumPolynomial rhs;
        if (r_core(mu, r).empty()) {
            const auto q = r_quotient(mu, r);
            int size = 0;
            for (const auto& part : q) size += part.weight();
            for (const auto& nu : partitions_of(size)) {
                const long long lr = lr_coeff(nu, q);
                if (lr != 0) rhs += plethysm_pr(schur_p(nu), r) * Rational(static_cast<long>(lr));
            }
            rhs *= Rational(r_sign(mu, r).value());
        }
        rep.terms = lhs.size();
        return first_mismatch(lhs, rhs, "p");
    });
}

StrictPartition reference_point(int ell, int m) {
    require_range(ell, m, ell);
    auto parts = lambda_ell(ell).partition().vec();
    if (2 * m <= ell) {
        for (int k = 0; k < m; ++k) parts[static_cast<std::size_t>(ell - 1 - 2 * k)] += 1;
    } else {
        const int head = 2 * m - ell;
        for (int k = 0; k < head; ++k) parts[static_cast<std::size_t>(k)] += 1;
        for (int k = 0; k < ell - m; ++k) parts[static_cast<std::size_t>(ell - 1 - 2 * k)] += 1;
    }
    return StrictPartition(std::move(parts));
}

std::vector<int> added_rows(int ell, int m, const StrictPartition& mu) {
    require_range(ell, m, ell);
    const auto base = lambda_ell(ell);
    if (mu.length() != base.length()) throw std::invalid_argument(str(mu) + " is not in F_1^m(Lambda_ell)");
    std::vector<int> rows;
    for (std::size_t i = 0; i < base.length(); ++i) {
        const int d = mu[i] - base[i];
        if (d == 1) rows.push_back(static_cast<int>(i) + 1);
        else if (d != 0) throw std::invalid_argument(str(mu) + " is not in F_1^m(Lambda_ell)");
    }
    if (static_cast<int>(rows.size()) != m) throw std::invalid_argument(str(mu) + " does not add exactly m nodes");
    return rows;
}

namespace {

std::vector<int> gamma_of(const std::vector<int>& rows) {
    const int m = static_cast<int>(rows.size());
    std::vector<int> g;
    for (int k = 1; k <= m; ++k) g.push_back(rows[static_cast<std::size_t>(m - k)] - (m - k + 1));
    return g;
}

}  // namespace

AlphaGamma alpha_gamma_sequences(int ell, int m, const StrictPartition& mu) {
    const auto rows = added_rows(ell, m, mu);
    std::vector<int> offset;
    if (2 * m <= ell) {
        for (int k = 0; k < m; ++k) offset.push_back(2 * k + 1);
    } else {
        for (int k = 0; k < ell - m; ++k) offset.push_back(2 * k + 1);
        for (int v = 2 * (ell - m) + 1; v <= ell; ++v) offset.push_back(v);
    }
    AlphaGamma out;
    for (int k = 1; k <= m; ++k)
        out.alpha.push_back(ell + 1 - rows[static_cast<std::size_t>(m - k)] - offset[static_cast<std::size_t>(k - 1)]);
    out.gamma = gamma_of(rows);
    out.gamma_reference = gamma_of(added_rows(ell, m, reference_point(ell, m)));
    return out;
}

VerificationReport verify_alpha_gamma(int ell, int m) {
    require_range(ell, m, ell);
    return run("alpha_gamma", params({{"ell", ell}, {"m", m}}), VerifyMode::structural, [&](VerificationReport& rep) -> std::string {
        const auto family = add_one_nodes(lambda_ell(ell), m, NodeFilling::a22, true);
        rep.terms = family.size();
        for (const auto& p : family) {
            const StrictPartition mu(p);
            const auto ag = alpha_gamma_sequences(ell, m, mu);
            int alpha_sum = 0;
            for (std::size_t k = 0; k < ag.alpha.size(); ++k) {
                if (ag.alpha[k] + ag.gamma[k] != ag.gamma_reference[k]) return "alpha + gamma != gamma(reference) at " + str(mu);
                alpha_sum += ag.alpha[k];
            }
            if (bar_sign3(mu) != Sign::from_parity(alpha_sum)) return "bar sign != (-1)^|alpha| at " + str(mu);
        }
        return {};
    });
}

VerificationReport verify_main(int ell, int m, bool analytic, const VerifyConfig& config) {
    require_range(ell, m, ell);
    const int degree = 2 * m * (ell - m);
    if (analytic && degree > config.max_degree)
        throw std::out_of_range("analytic check of degree " + std::to_string(degree) + " exceeds the cap " +
                                std::to_string(config.max_degree));
    return run("main", params({{"ell", ell}, {"m", m}}), analytic ? VerifyMode::analytic : VerifyMode::structural,
               [&](VerificationReport& rep) -> std::string {
                   const Sign eps = epsilon(ell, m);
                   SignedPartitionSet lhs, rhs;
                   for (const auto& p : add_one_nodes(lambda_ell(ell), m, NodeFilling::a22, true)) {
                       const StrictPartition mu(p);
                       lhs.insert(bar_sign3(mu), bar_quotient3(mu).one);
                   }
                   for (const auto& nu : enumerate_balanced(ell - m, m)) rhs.insert(eps * r_sign(nu, 2), nu);
                   rep.terms = lhs.size();
                   if (auto w = first_mismatch(lhs, rhs); !w.empty()) return w;
                   if (!analytic) return {};
                   PowerSumPolynomial left;
                   for (const auto& [s, p] : lhs.items()) left += schur_p(p) * Rational(s.value());
                   const auto right = plethysm_pr(schur_p(rectangle(ell - m, m)), 2) * Rational(eps.value());
                   return first_mismatch(left, right, "p");
               });
}

std::vector<VerificationReport> verify_all(int max_ell, const VerifyConfig& config, bool parallel) {
    std::vector<std::function<VerificationReport()>> cases;
    for (int ell = 1; ell <= max_ell; ell += 2)
        for (int m = 0; m <= ell + 1; ++m) cases.emplace_back([=] { return verify_a11(ell, m, true); });
    for (int ell = 1; ell <= max_ell; ++ell)
        for (int m = 0; m <= ell; ++m) {
            const bool analytic = 2 * m * (ell - m) <= config.max_degree;
            cases.emplace_back([=] { return verify_main(ell, m, analytic, config); });
            cases.emplace_back([=] { return verify_quotient_balance(ell, m); });
            cases.emplace_back([=] { return verify_alpha_gamma(ell, m); });
        }
    for (int n = 0; n <= max_ell + 1; ++n)
        for (int m = 0; n + m <= max_ell + 1; ++m) cases.emplace_back([=] { return verify_sign_lemma(n, m); });
    for (int n = 0; n <= max_ell + 1; ++n)
        for (int m = 0; m <= max_ell + 1; ++m)
            if (n * m <= max_ell + 1) cases.emplace_back([=] { return verify_balanced_plethysm(n, m, config); });
    for (int r : {2, 3})
        for (int size = 0; size <= std::min(max_ell, 5); ++size)
            for (const auto& lambda : partitions_of(size))
                cases.emplace_back([=] { return verify_plethysm_quotient(lambda, r); });
    for (int r : {2, 3})
        for (int size = 0; size <= std::min(max_ell + 2, 9); ++size)
            for (const auto& mu : partitions_of(size)) cases.emplace_back([=] { return verify_littlewood(mu, r); });

    std::vector<VerificationReport> out(cases.size());
    const unsigned workers = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) out[i] = cases[i]();
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    return out;
}

namespace {

nlohmann::ordered_json report_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["identity"] = r.identity;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) {
        const bool numeric = !v.empty() && v.find_first_not_of("-0123456789") == std::string::npos;
        if (numeric) params[k] = std::stoll(v);
        else params[k] = v;
    }
    j["params"] = params;
    j["mode"] = r.mode == VerifyMode::analytic ? "analytic" : "structural";
    j["verdict"] = r.verified ? "verified" : "failed";
    if (r.witness) j["witness"] = *r.witness;
    j["millis"] = r.millis;
    return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& report) { return report_json(report).dump(); }

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    return arr.dump(2);
}

std::string to_string(const VerificationReport& report) {
    std::string out = report.identity;
    for (const auto& [k, v] : report.params) out += " " + k + "=" + v;
    out += report.mode == VerifyMode::analytic ? " [analytic]" : " [structural]";
    out += report.verified ? " verified" : " FAILED";
    out += " (" + std::to_string(report.terms) + " terms, " + std::to_string(report.millis) + " ms)";
    if (report.witness) out += ": " + *report.witness;
    return out;
}

}  // namespace abacus
