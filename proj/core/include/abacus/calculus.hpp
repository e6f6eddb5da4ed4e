#pragma once

// Cores, quotients and signs of partitions, read off the r-abacus and the
// 3-bar abacus, together with the balanced / complementary combinatorics.

#include <utility>
#include <vector>

#include "abacus/partition.hpp"

namespace abacus {

/// Bead positions xi = lambda + delta_m of the r-abacus, m the bead count.
class Abacus {
public:
    /// Uses the smallest multiple of r that is >= length(lambda) (at least r).
    Abacus(const Partition& lambda, int r);
    /// Explicit bead count; must be a positive multiple of r and >= length.
    Abacus(const Partition& lambda, int r, int beads);

    int modulus() const noexcept { return r_; }
    int bead_count() const noexcept { return static_cast<int>(beads_.size()); }
    /// Strictly decreasing bead positions.
    const std::vector<int>& beads() const noexcept { return beads_; }

    bool has_bead(int position) const;
    /// Bead positions on runner k, increasing (top to bottom).
    std::vector<int> runner(int k) const;

    Partition quotient_component(int k) const;
    Partition core() const;
    Sign sign() const;

private:
    int r_;
    std::vector<int> beads_;
};

/// 3-bar abacus: the parts of a strict partition placed directly on 3 runners.
class BarAbacus {
public:
    explicit BarAbacus(const StrictPartition& lambda);

    /// Bead positions on runner k in {0,1,2}, increasing.
    const std::vector<int>& runner(int k) const { return runners_.at(static_cast<std::size_t>(k)); }
    const std::vector<int>& beads() const noexcept { return increasing_; }

private:
    std::vector<int> increasing_;
    std::vector<std::vector<int>> runners_;
};

void require_modulus(int r);

std::vector<int> beta_sequence(const Partition& lambda, int r);
/// Partition from a set of bead positions (any order, distinct, non-negative).
Partition partition_from_beads(std::vector<int> beads);

std::vector<Partition> r_quotient(const Partition& lambda, int r);
Partition r_core(const Partition& lambda, int r);
Sign r_sign(const Partition& lambda, int r);

/// (lambda_1..lambda_l | lambda_1-1..lambda_l-1) in Frobenius notation.
Partition double_of(const StrictPartition& lambda);

StrictPartition bar_core3(const StrictPartition& lambda);

struct BarQuotient {
    StrictPartition zero;
    Partition one;
    friend bool operator==(const BarQuotient&, const BarQuotient&) = default;
};

/// Direct 3-bar abacus rules. In debug builds the result is cross-checked
/// against the 3-quotient of the double.
BarQuotient bar_quotient3(const StrictPartition& lambda);
/// The same pair read off r_quotient(double_of(lambda), 3).
BarQuotient bar_quotient3_via_double(const StrictPartition& lambda);

Sign bar_sign3(const StrictPartition& lambda);

/// lambda_i + lambda_{2n+1-i} = 2m for 1 <= i <= n, with at most 2n parts.
bool is_balanced(const Partition& mu, int n, int m);
std::vector<Partition> enumerate_balanced(int n, int m);

struct ComplementaryPair {
    Partition alpha;
    Partition beta;
    friend bool operator==(const ComplementaryPair&, const ComplementaryPair&) = default;
};

/// beta is the 180-degree rotation of (m^n) minus alpha.
Partition rotated_complement(const Partition& alpha, int n, int m);
std::vector<ComplementaryPair> complementary_pairs(int n, int m);
bool is_complementary(const Partition& alpha, const Partition& beta, int n, int m);

/// The unique partition with empty r-core and the given r-quotient.
Partition from_quotient(const std::vector<Partition>& quotient, int r);
Partition from_two_quotient(const Partition& alpha, const Partition& beta);

/// Partitions of r*n with empty r-core, one per r-tuple of partitions of total size n.
std::vector<Partition> empty_core_partitions(int n, int r);

}  // namespace abacus
