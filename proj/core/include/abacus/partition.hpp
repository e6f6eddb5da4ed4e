#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace abacus {

/// A weakly decreasing sequence of positive integers. Trailing zeros passed
/// to the constructor are dropped, so (2,0) and (2) compare equal.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }

    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int weight() const noexcept;

    /// i-th part (0-indexed); zero past the end.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    bool is_strict() const noexcept;

    /// Parts padded with zeros to exactly `len` entries (len >= length()).
    std::vector<int> padded(std::size_t len) const;

    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// A partition with strictly decreasing parts.
class StrictPartition {
public:
    StrictPartition() = default;
    StrictPartition(std::initializer_list<int> parts);
    explicit StrictPartition(std::vector<int> parts);
    explicit StrictPartition(Partition p);

    const Partition& partition() const noexcept { return p_; }
    operator const Partition&() const noexcept { return p_; }  // NOLINT(google-explicit-constructor)

    std::span<const int> parts() const noexcept { return p_.parts(); }
    std::size_t length() const noexcept { return p_.length(); }
    bool empty() const noexcept { return p_.empty(); }
    int weight() const noexcept { return p_.weight(); }
    int operator[](std::size_t i) const noexcept { return p_[i]; }
    std::string to_string() const { return p_.to_string(); }

    friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;
    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;

private:
    Partition p_;
};

/// Parity-tracked sign, +1 or -1.
class Sign {
public:
    constexpr Sign() = default;
    static constexpr Sign plus() { return Sign(false); }
    static constexpr Sign minus() { return Sign(true); }
    static constexpr Sign from_parity(long long n) { return Sign((n % 2) != 0); }

    constexpr int value() const noexcept { return negative_ ? -1 : 1; }
    constexpr bool negative() const noexcept { return negative_; }

    friend constexpr Sign operator*(Sign a, Sign b) { return Sign(a.negative_ != b.negative_); }
    constexpr Sign& operator*=(Sign o) { negative_ = negative_ != o.negative_; return *this; }
    friend constexpr Sign operator-(Sign a) { return Sign(!a.negative_); }
    friend constexpr auto operator<=>(Sign, Sign) = default;
    friend constexpr bool operator==(Sign, Sign) = default;

private:
    constexpr explicit Sign(bool negative) : negative_(negative) {}
    bool negative_ = false;
};

Partition conjugate(const Partition& p);

/// The rectangle (m^n): n rows of length m.
Partition rectangle(int n, int m);

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> partitions_of(int n);
/// All partitions of n with at most `max_len` parts and largest part at most `max_part`.
std::vector<Partition> partitions_in_box(int n, int max_len, int max_part);
std::vector<StrictPartition> strict_partitions_of(int n);

/// Partitions contained in `outer` (every size), reverse-lexicographic.
std::vector<Partition> subpartitions(const Partition& outer);

bool contains(const Partition& outer, const Partition& inner);

/// Sign of a permutation given in one-line notation on {0..n-1} (or any
/// distinct values; only relative order matters).
Sign permutation_sign(std::span<const int> one_line);
long long inversion_count(std::span<const int> one_line);

}  // namespace abacus
