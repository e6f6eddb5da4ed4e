#pragma once

// Machine checks of the signed Schur identities built from the calculus above.
// Every check returns a report; a failed report carries the first mismatch.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abacus/partition.hpp"

namespace abacus {

enum class VerifyMode { structural, analytic };

struct VerificationReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    VerifyMode mode = VerifyMode::structural;
    bool verified = false;
    std::optional<std::string> witness;
    /// Number of terms (or elements) compared.
    std::size_t terms = 0;
    long long millis = 0;
};

struct VerifyConfig {
    /// Analytic (power-sum) comparisons are skipped above this degree.
    int max_degree = 18;
};

/// Default config with ABACUS_SF_MAX_DEGREE applied when set.
VerifyConfig config_from_environment();

Sign epsilon(int ell, int m);

/// Staircase family against S_{(m^{ell+1-m})}(u - v).
VerificationReport verify_a11(int ell, int m, bool analytic = false);

/// Quotient formula for p_r o S_lambda against power-sum substitution.
VerificationReport verify_plethysm_quotient(const Partition& lambda, int r);

/// Balanced-partition formula for p_2 o S_{(m^n)}.
VerificationReport verify_balanced_plethysm(int n, int m, const VerifyConfig& config = {});

/// {bar quotient[1] of mu : mu in F_1^m(Lambda_ell)} = W(ell - m, m).
VerificationReport verify_quotient_balance(int ell, int m);

/// delta_2(mu) = (-1)^{mu_{n+1} + ... + mu_{2n}} on W(n, m).
VerificationReport verify_sign_lemma(int n, int m);

/// omega_r specialization of S_mu against the signed quotient LR sum (zero for nonempty core).
VerificationReport verify_littlewood(const Partition& mu, int r);

struct AlphaGamma {
    std::vector<int> alpha;
    std::vector<int> gamma;
    std::vector<int> gamma_reference;
};

/// Reference point of F_1^m(Lambda_ell).
StrictPartition reference_point(int ell, int m);
/// Rows (1-indexed, increasing) where mu differs from Lambda_ell.
std::vector<int> added_rows(int ell, int m, const StrictPartition& mu);
AlphaGamma alpha_gamma_sequences(int ell, int m, const StrictPartition& mu);
/// Checks alpha + gamma = gamma(reference) and bar-sign = (-1)^{|alpha|} over the family.
VerificationReport verify_alpha_gamma(int ell, int m);

/// Main identity: sum over F_1^m(Lambda_ell) of bar-sign(mu) S_{mu^b[1]} = eps(ell,m) p_2 o S_{(m^{ell-m})}.
VerificationReport verify_main(int ell, int m, bool analytic = false, const VerifyConfig& config = {});

/// Every verifier over its standard range, up to ell = max_ell.
std::vector<VerificationReport> verify_all(int max_ell, const VerifyConfig& config = {}, bool parallel = true);

std::string report_to_json(const VerificationReport& report);
std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::string to_string(const VerificationReport& report);

}  // namespace abacus
