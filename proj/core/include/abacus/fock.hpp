#pragma once

// Node fillings, i-node operators on strict partitions, the staircase and
// Lambda_ell families, and the map to the homogeneous picture.

#include <map>
#include <string>
#include <vector>

#include "abacus/partition.hpp"
#include "abacus/symfun.hpp"

namespace abacus {

enum class NodeFilling {
    a22,  // (010) repeated along every row
    a11,  // checkerboard: residue (i + j) mod 2
};

/// Residue of the cell in row `row`, column `col` (both 1-indexed).
int residue(int row, int col, NodeFilling filling);

struct WeightCounts {
    int zeros = 0;
    int ones = 0;
    friend bool operator==(const WeightCounts&, const WeightCounts&) = default;
};

WeightCounts weight_counts(const Partition& lambda, NodeFilling filling);

/// Partitions reached by deleting one removable / adding one addable i-node.
/// With strict_only, results that are not strict are discarded.
std::vector<Partition> remove_i_nodes(const Partition& lambda, int i, NodeFilling filling, bool strict_only);
std::vector<Partition> add_i_nodes(const Partition& lambda, int i, NodeFilling filling, bool strict_only);

std::vector<StrictPartition> removable_nodes(const StrictPartition& lambda, int i, NodeFilling filling);
std::vector<StrictPartition> indent_nodes(const StrictPartition& lambda, int i, NodeFilling filling);

/// Integer combination of reduced P-function labels.
class FockElement {
public:
    using Terms = std::map<StrictPartition, BigInt, std::greater<>>;

    FockElement() = default;
    static FockElement basis(StrictPartition lambda, BigInt coef = 1);

    const Terms& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    BigInt coefficient(const StrictPartition& lambda) const;

    void add(const StrictPartition& lambda, const BigInt& coef);
    FockElement& operator+=(const FockElement& o);
    FockElement& operator*=(const BigInt& k);
    friend FockElement operator*(FockElement a, const BigInt& k) { return a *= k; }
    friend bool operator==(const FockElement&, const FockElement&) = default;

private:
    Terms terms_;
};

FockElement apply_e(const FockElement& v, int i, NodeFilling filling = NodeFilling::a22);
FockElement apply_f(const FockElement& v, int i, NodeFilling filling = NodeFilling::a22);

/// (ell, ell-1, ..., 1) for odd ell >= 1.
Partition staircase_delta(int ell);
/// (3 ell - 2, 3 ell - 5, ..., 4, 1).
StrictPartition lambda_ell(int ell);

/// All partitions obtained from `base` by adding m indent 1-nodes one at a time.
std::vector<Partition> add_one_nodes(const Partition& base, int m, NodeFilling filling, bool strict_only);

/// sum over parts not divisible by 3 of floor((part - 1) / 3).
int p_exponent(const StrictPartition& lambda);
/// (#beads on runner 1) - (#beads on runner 2) of the 3-bar abacus.
int charge(const StrictPartition& lambda);

struct PhiKey {
    StrictPartition b0;
    Partition b1;
    int q_exponent = 0;
    friend auto operator<=>(const PhiKey&, const PhiKey&) = default;
    friend bool operator==(const PhiKey&, const PhiKey&) = default;
};

/// Rational combination of P_{b0}(s) S_{b1}(u) q^{k} terms.
class PhiImage {
public:
    using Terms = std::map<PhiKey, Rational>;
    const Terms& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    Rational coefficient(const PhiKey& key) const;
    void add(const PhiKey& key, const Rational& coef);
    friend bool operator==(const PhiImage&, const PhiImage&) = default;

private:
    Terms terms_;
};

/// P_lambda -> 2^{p(lambda)} bar-sign(lambda) P_{b0}(s) S_{b1}(u) q^{charge}, extended linearly.
PhiImage leidwanger_phi(const FockElement& v);
/// 2 (|b0| + |b1|) + q_exponent^2.
int homogeneous_degree(const PhiKey& key);

std::string to_string(const FockElement& v);
std::string to_string(const PhiImage& v);

}  // namespace abacus
