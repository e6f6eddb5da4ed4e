#include "abacus/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace abacus {

namespace {

std::vector<int> normalize(std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw std::invalid_argument("partition parts must be non-negative");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(normalize(std::move(parts))) {}

int Partition::weight() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::is_strict() const noexcept {
    return std::adjacent_find(parts_.begin(), parts_.end(), std::equal_to<>{}) == parts_.end();
}

std::vector<int> Partition::padded(std::size_t len) const {
    std::vector<int> out(parts_);
    if (out.size() < len) out.resize(len, 0);
    return out;
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

StrictPartition::StrictPartition(std::initializer_list<int> parts)
    : StrictPartition(Partition(parts)) {}

StrictPartition::StrictPartition(std::vector<int> parts) : StrictPartition(Partition(std::move(parts))) {}

StrictPartition::StrictPartition(Partition p) : p_(std::move(p)) {
    if (!p_.is_strict()) throw std::invalid_argument("partition is not strict: " + p_.to_string());
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> out(p[0], 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++out[j];
    return Partition(std::move(out));
}

Partition rectangle(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("rectangle dimensions must be non-negative");
    if (m == 0) return {};
    return Partition(std::vector<int>(n, m));
}

namespace {

void gen_box(int remaining, int max_part, int max_len, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len == 0) return;
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        cur.push_back(k);
        gen_box(remaining - k, k, max_len - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_in_box(int n, int max_len, int max_part) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    gen_box(n, max_part, max_len, cur, out);
    return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_in_box(n, n, n); }

std::vector<StrictPartition> strict_partitions_of(int n) {
    std::vector<StrictPartition> out;
    for (auto& p : partitions_of(n))
        if (p.is_strict()) out.emplace_back(std::move(p));
    return out;
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

std::vector<Partition> subpartitions(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t row, int bound) {
        out.emplace_back(cur);
        if (row >= outer.length()) return;
        for (int k = std::min(bound, outer[row]); k >= 1; --k) {
            cur.push_back(k);
            rec(row + 1, k);
            cur.pop_back();
        }
    };
    rec(0, outer.empty() ? 0 : outer[0]);
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
}

long long inversion_count(std::span<const int> one_line) {
    long long inv = 0;
    for (std::size_t i = 0; i < one_line.size(); ++i)
        for (std::size_t j = i + 1; j < one_line.size(); ++j)
            if (one_line[i] > one_line[j]) ++inv;
    return inv;
}

Sign permutation_sign(std::span<const int> one_line) {
    return Sign::from_parity(inversion_count(one_line));
}

}  // namespace abacus
