#pragma once

// Symmetric functions stored in the power-sum basis with exact rational
// coefficients: Schur and Schur Q/P functions, characters of the symmetric
// group, the Hall inner product, Littlewood-Richardson coefficients and
// plethysm with power sums.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "abacus/partition.hpp"

namespace abacus {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Finite linear combination indexed by partitions. Terms iterate in
/// reverse-lexicographic order of the index; zero coefficients are never stored.
template <class Tag>
class PartitionSeries {
public:
    using Terms = std::map<Partition, Rational, std::greater<>>;

    PartitionSeries() = default;

    static PartitionSeries term(Partition index, Rational coef = 1) {
        PartitionSeries s;
        s.add(std::move(index), coef);
        return s;
    }
    static PartitionSeries one() { return term(Partition{}); }

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    Rational coefficient(const Partition& index) const {
        auto it = terms_.find(index);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const Partition& index, const Rational& coef) {
        if (coef == 0) return;
        auto [it, inserted] = terms_.try_emplace(index, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Degree-d part (terms whose index has weight d).
    PartitionSeries homogeneous_component(int d) const {
        PartitionSeries out;
        for (const auto& [idx, c] : terms_)
            if (idx.weight() == d) out.terms_.emplace(idx, c);
        return out;
    }

    std::vector<int> degrees() const {
        std::vector<int> ds;
        for (const auto& [idx, c] : terms_) {
            const int d = idx.weight();
            if (std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
        }
        std::sort(ds.begin(), ds.end());
        return ds;
    }

    PartitionSeries& operator+=(const PartitionSeries& o) {
        for (const auto& [idx, c] : o.terms_) add(idx, c);
        return *this;
    }
    PartitionSeries& operator-=(const PartitionSeries& o) {
        for (const auto& [idx, c] : o.terms_) add(idx, -c);
        return *this;
    }
    PartitionSeries& operator*=(const Rational& k) {
        if (k == 0) terms_.clear();
        else
            for (auto& [idx, c] : terms_) c *= k;
        return *this;
    }

    friend PartitionSeries operator+(PartitionSeries a, const PartitionSeries& b) { return a += b; }
    friend PartitionSeries operator-(PartitionSeries a, const PartitionSeries& b) { return a -= b; }
    friend PartitionSeries operator-(PartitionSeries a) { return a *= Rational(-1); }
    friend PartitionSeries operator*(PartitionSeries a, const Rational& k) { return a *= k; }
    friend PartitionSeries operator*(const Rational& k, PartitionSeries a) { return a *= k; }
    friend bool operator==(const PartitionSeries& a, const PartitionSeries& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

struct PowerSumTag {};
struct SchurTag {};

/// sum_rho c_rho p_rho, p_rho = p_{rho_1} p_{rho_2} ...
using PowerSumPolynomial = PartitionSeries<PowerSumTag>;
/// sum_lambda c_lambda S_lambda.
using SchurExpansion = PartitionSeries<SchurTag>;

PowerSumPolynomial operator*(const PowerSumPolynomial& a, const PowerSumPolynomial& b);
PowerSumPolynomial power(const PowerSumPolynomial& a, int exponent);

/// Multiset of signed partitions, compared as multisets.
class SignedPartitionSet {
public:
    void insert(Sign s, Partition p);
    const std::vector<std::pair<Sign, Partition>>& items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    /// Collapses into a Schur expansion with integer coefficients.
    SchurExpansion as_schur() const;
    friend bool operator==(const SignedPartitionSet&, const SignedPartitionSet&) = default;

private:
    std::vector<std::pair<Sign, Partition>> items_;  // kept sorted
};

BigInt z_factor(const Partition& rho);

/// Memoized Murnaghan-Nakayama table. Safe for concurrent use.
class CharacterTable {
public:
    long long character(const Partition& lambda, const Partition& rho);
    std::size_t memo_size() const;
    void clear();

private:
    long long compute(const std::vector<int>& beads, std::span<const int> rho);

    struct KeyHash {
        std::size_t operator()(const std::string& k) const noexcept { return std::hash<std::string>{}(k); }
    };
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, long long, KeyHash> memo_;
};

/// Process-wide table used by the free functions below.
CharacterTable& shared_character_table();

/// chi^lambda evaluated at the class of cycle type rho; |lambda| must equal |rho|.
long long mn_character(const Partition& lambda, const Partition& rho);

PowerSumPolynomial schur_p(const Partition& lambda);
/// Schur Q-function Q_lambda.
PowerSumPolynomial schur_q(const StrictPartition& lambda);
/// P_lambda = 2^{-l(lambda)} Q_lambda.
PowerSumPolynomial schur_small_p(const StrictPartition& lambda);
/// One-row generator q_k: the z^k coefficient of exp(2 sum_{k odd} p_k z^k / k).
PowerSumPolynomial q_generator(int k);

/// p_r o F: each index part k becomes r*k.
PowerSumPolynomial plethysm_pr(const PowerSumPolynomial& f, int r);

Rational hall_inner(const PowerSumPolynomial& f, const PowerSumPolynomial& g);

SchurExpansion to_schur_basis(const PowerSumPolynomial& f);
PowerSumPolynomial from_schur_basis(const SchurExpansion& s);

/// Skew LR coefficient c^lambda_{mu,nu} by LR-tableau enumeration.
long long lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu);
/// Multiple LR coefficient LR^lambda_{factors...}, iterated tableau route.
long long lr_coeff(const Partition& lambda, const std::vector<Partition>& factors);
/// Same coefficient as <S_lambda, prod S_factor> in the power-sum basis.
long long lr_coeff_via_power_sums(const Partition& lambda, const std::vector<Partition>& factors);

/// p_k(x w_r): parts not divisible by r kill the term, the rest scale by r.
PowerSumPolynomial omega_specialize(const PowerSumPolynomial& f, int r);

/// sum over mu with empty r-core of delta_r(mu) LR^lambda_{mu[0..r-1]} S_mu.
SchurExpansion plethysm_via_quotients(const Partition& lambda, int r);

/// p_2 o S_{(m^n)} as the signed sum over (n,m)-balanced partitions.
SchurExpansion plethysm_rect_balanced(int n, int m);

struct DifferenceTerm {
    Sign sign;
    Partition alpha;
    Partition beta_transposed;
    friend auto operator<=>(const DifferenceTerm&, const DifferenceTerm&) = default;
    friend bool operator==(const DifferenceTerm&, const DifferenceTerm&) = default;
};

/// S_lambda(u - v) = sum (-1)^{|beta|} LR^lambda_{alpha,beta} S_alpha(u) S_{beta'}(v);
/// each triple is repeated LR times. Sorted.
std::vector<DifferenceTerm> schur_difference_expansion(const Partition& lambda);

/// Drops every term whose index has a part divisible by 3.
PowerSumPolynomial reduce_mod3(const PowerSumPolynomial& f);

std::string to_string(const PowerSumPolynomial& f);
std::string to_string(const SchurExpansion& s);

}  // namespace abacus
