#include "abacus/calculus.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace abacus {

void require_modulus(int r) {
    if (r < 2) throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(r));
}

namespace {

int default_bead_count(const Partition& lambda, int r) {
    const int len = static_cast<int>(lambda.length());
    const int m = (len + r - 1) / r * r;
    return m == 0 ? r : m;
}

}  // namespace

Abacus::Abacus(const Partition& lambda, int r) : Abacus(lambda, r, (require_modulus(r), default_bead_count(lambda, r))) {}

Abacus::Abacus(const Partition& lambda, int r, int beads) : r_(r) {
    require_modulus(r);
    if (beads <= 0 || beads % r != 0 || beads < static_cast<int>(lambda.length()))
        throw std::invalid_argument("bead count must be a positive multiple of r covering the partition");
    beads_.reserve(static_cast<std::size_t>(beads));
    for (int i = 0; i < beads; ++i)
        beads_.push_back(lambda[static_cast<std::size_t>(i)] + beads - 1 - i);
}

bool Abacus::has_bead(int position) const {
    return std::binary_search(beads_.rbegin(), beads_.rend(), position);
}

std::vector<int> Abacus::runner(int k) const {
    std::vector<int> out;
    for (auto it = beads_.rbegin(); it != beads_.rend(); ++it)
        if (*it % r_ == k) out.push_back(*it);
    return out;
}

Partition Abacus::quotient_component(int k) const {
    // levels on runner k, decreasing, minus delta
    std::vector<int> levels;
    for (int b : beads_)
        if (b % r_ == k) levels.push_back((b - k) / r_);
    const int mk = static_cast<int>(levels.size());
    for (int i = 0; i < mk; ++i) levels[static_cast<std::size_t>(i)] -= mk - 1 - i;
    return Partition(std::move(levels));
}

Partition Abacus::core() const {
    std::vector<int> pushed;
    for (int k = 0; k < r_; ++k) {
        const auto count = std::count_if(beads_.begin(), beads_.end(), [&](int b) { return b % r_ == k; });
        for (int s = 0; s < count; ++s) pushed.push_back(r_ * s + k);
    }
    return partition_from_beads(std::move(pushed));
}

Sign Abacus::sign() const {
    // Layer numbering: order beads by (rank within own runner from the top, runner).
    std::vector<std::pair<int, int>> keys;
    std::vector<int> seen(static_cast<std::size_t>(r_), 0);
    for (auto it = beads_.rbegin(); it != beads_.rend(); ++it) {
        const int k = *it % r_;
        keys.emplace_back(++seen[static_cast<std::size_t>(k)], k);
    }
    auto order = keys;
    std::sort(order.begin(), order.end());
    std::vector<int> one_line;
    one_line.reserve(keys.size());
    for (const auto& key : keys)
        one_line.push_back(static_cast<int>(std::lower_bound(order.begin(), order.end(), key) - order.begin()));
    return permutation_sign(one_line);
}

BarAbacus::BarAbacus(const StrictPartition& lambda) : runners_(3) {
    increasing_.assign(lambda.parts().rbegin(), lambda.parts().rend());
    for (int b : increasing_) runners_[static_cast<std::size_t>(b % 3)].push_back(b);
}

std::vector<int> beta_sequence(const Partition& lambda, int r) { return Abacus(lambda, r).beads(); }

Partition partition_from_beads(std::vector<int> beads) {
    std::sort(beads.begin(), beads.end(), std::greater<>{});
    if (std::adjacent_find(beads.begin(), beads.end()) != beads.end())
        throw std::invalid_argument("bead positions must be distinct");
    const int m = static_cast<int>(beads.size());
    for (int i = 0; i < m; ++i) {
        beads[static_cast<std::size_t>(i)] -= m - 1 - i;
        if (beads[static_cast<std::size_t>(i)] < 0) throw std::invalid_argument("bead positions must be non-negative");
    }
    return Partition(std::move(beads));
}

std::vector<Partition> r_quotient(const Partition& lambda, int r) {
    const Abacus ab(lambda, r);
    std::vector<Partition> out;
    out.reserve(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) out.push_back(ab.quotient_component(k));
    return out;
}

Partition r_core(const Partition& lambda, int r) { return Abacus(lambda, r).core(); }

Sign r_sign(const Partition& lambda, int r) { return Abacus(lambda, r).sign(); }

Partition double_of(const StrictPartition& lambda) {
    const auto d = lambda.length();
    if (d == 0) return {};
    // arms lambda_i, legs lambda_i - 1
    std::vector<int> cols(d);
    for (std::size_t j = 0; j < d; ++j) cols[j] = lambda[j] - 1 + static_cast<int>(j) + 1;
    std::vector<int> rows;
    for (std::size_t i = 0; i < d; ++i) rows.push_back(lambda[i] + static_cast<int>(i) + 1);
    for (int i = static_cast<int>(d);; ++i) {
        const auto n = std::count_if(cols.begin(), cols.end(), [&](int c) { return c > i; });
        if (n == 0) break;
        rows.push_back(static_cast<int>(n));
    }
    return Partition(std::move(rows));
}

StrictPartition bar_core3(const StrictPartition& lambda) {
    const BarAbacus ab(lambda);
    const auto n1 = ab.runner(1).size();
    const auto n2 = ab.runner(2).size();
    const auto pairs = std::min(n1, n2);
    std::vector<int> beads;
    for (std::size_t s = 0; s < n1 - pairs; ++s) beads.push_back(3 * static_cast<int>(s) + 1);
    for (std::size_t s = 0; s < n2 - pairs; ++s) beads.push_back(3 * static_cast<int>(s) + 2);
    std::sort(beads.begin(), beads.end(), std::greater<>{});
    return StrictPartition(std::move(beads));
}

BarQuotient bar_quotient3_via_double(const StrictPartition& lambda) {
    const auto q = r_quotient(double_of(lambda), 3);
    // D(b0) = q[0]: the Frobenius arms of q[0] are the parts of b0.
    std::vector<int> zero;
    for (std::size_t i = 0; i < q[0].length() && q[0][i] > static_cast<int>(i); ++i)
        zero.push_back(q[0][i] - static_cast<int>(i) - 1);
    StrictPartition b0{Partition(std::move(zero))};
    if (double_of(b0) != q[0]) throw std::logic_error("0-th 3-quotient of the double is not a double");
    return {std::move(b0), q[1]};
}

BarQuotient bar_quotient3(const StrictPartition& lambda) {
    const BarAbacus ab(lambda);

    std::vector<int> levels;
    for (int b : ab.runner(0)) levels.push_back(b / 3);
    std::reverse(levels.begin(), levels.end());
    StrictPartition zero{Partition(std::move(levels))};

    // Left segment: runner 2 bottom-up (bead -> 0, hole -> 1); right segment:
    // runner 1 top-down (bead -> 1, hole -> 0). Each 1 contributes the number
    // of 0's to its left. The infinite 1's on the far left contribute nothing.
    const int rows = lambda.empty() ? 1 : lambda[0] / 3 + 2;
    const auto& r1 = ab.runner(1);
    const auto& r2 = ab.runner(2);
    auto on = [](const std::vector<int>& runner, int pos) {
        return std::binary_search(runner.begin(), runner.end(), pos);
    };
    std::vector<int> parts;
    int zeros = 0;
    for (int level = rows - 1; level >= 0; --level) {
        if (on(r2, 3 * level + 2)) ++zeros;
        else if (zeros > 0) parts.push_back(zeros);
    }
    for (int level = 0; level < rows; ++level) {
        if (!on(r1, 3 * level + 1)) ++zeros;
        else if (zeros > 0) parts.push_back(zeros);
    }
    std::reverse(parts.begin(), parts.end());
    BarQuotient result{std::move(zero), Partition(std::move(parts))};

#if !defined(NDEBUG) || defined(ABACUS_CROSS_CHECK)
    if (result != bar_quotient3_via_double(lambda))
        throw std::logic_error("3-bar quotient disagrees with the 3-quotient of the double for " + lambda.to_string());
#endif
    return result;
}

Sign bar_sign3(const StrictPartition& lambda) {
    const BarAbacus ab(lambda);
    const auto& r1 = ab.runner(1);
    const auto& r2 = ab.runner(2);
    std::vector<int> order(ab.runner(0));
    const auto pairs = std::min(r1.size(), r2.size());
    for (std::size_t i = 0; i < pairs; ++i) {
        order.push_back(r2[i]);
        order.push_back(r1[i]);
    }
    std::vector<int> rest(r1.begin() + static_cast<std::ptrdiff_t>(pairs), r1.end());
    rest.insert(rest.end(), r2.begin() + static_cast<std::ptrdiff_t>(pairs), r2.end());
    std::sort(rest.begin(), rest.end());
    order.insert(order.end(), rest.begin(), rest.end());

    std::vector<int> one_line;
    for (int bead : ab.beads())
        one_line.push_back(static_cast<int>(std::find(order.begin(), order.end(), bead) - order.begin()));
    return permutation_sign(one_line);
}

bool is_balanced(const Partition& mu, int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("balanced parameters must be non-negative");
    if (static_cast<int>(mu.length()) > 2 * n) return false;
    for (int i = 0; i < n; ++i)
        if (mu[static_cast<std::size_t>(i)] + mu[static_cast<std::size_t>(2 * n - 1 - i)] != 2 * m) return false;
    return true;
}

std::vector<Partition> enumerate_balanced(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("balanced parameters must be non-negative");
    // The first n parts lie in [m, 2m] and determine the rest.
    std::vector<Partition> out;
    std::vector<int> head;
    std::function<void(int)> rec = [&](int bound) {
        if (static_cast<int>(head.size()) == n) {
            std::vector<int> parts(head);
            for (int i = n - 1; i >= 0; --i) parts.push_back(2 * m - head[static_cast<std::size_t>(i)]);
            out.emplace_back(std::move(parts));
            return;
        }
        for (int v = bound; v >= m; --v) {
            head.push_back(v);
            rec(v);
            head.pop_back();
        }
    };
    rec(2 * m);
    std::sort(out.begin(), out.end(), std::greater<>{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Partition rotated_complement(const Partition& alpha, int n, int m) {
    std::vector<int> beta;
    for (int i = n - 1; i >= 0; --i) beta.push_back(m - alpha[static_cast<std::size_t>(i)]);
    return Partition(std::move(beta));
}

bool is_complementary(const Partition& alpha, const Partition& beta, int n, int m) {
    return contains(rectangle(n, m), alpha) && static_cast<int>(alpha.length()) <= n &&
           rotated_complement(alpha, n, m) == beta;
}

std::vector<ComplementaryPair> complementary_pairs(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("rectangle dimensions must be non-negative");
    std::vector<ComplementaryPair> out;
    for (auto& alpha : subpartitions(rectangle(n, m))) {
        if (static_cast<int>(alpha.length()) > n) continue;
        auto beta = rotated_complement(alpha, n, m);
        out.push_back({std::move(alpha), std::move(beta)});
    }
    return out;
}

Partition from_quotient(const std::vector<Partition>& quotient, int r) {
    require_modulus(r);
    if (static_cast<int>(quotient.size()) != r) throw std::invalid_argument("quotient must have r components");
    std::size_t t = 0;
    for (const auto& q : quotient) t = std::max(t, q.length());
    std::vector<int> beads;
    for (int k = 0; k < r; ++k)
        for (std::size_t i = 0; i < t; ++i)
            beads.push_back(r * (quotient[static_cast<std::size_t>(k)][i] + static_cast<int>(t - 1 - i)) + k);
    return partition_from_beads(std::move(beads));
}

Partition from_two_quotient(const Partition& alpha, const Partition& beta) { return from_quotient({alpha, beta}, 2); }

std::vector<Partition> empty_core_partitions(int n, int r) {
    require_modulus(r);
    std::vector<Partition> out;
    std::vector<Partition> tuple;
    std::function<void(int)> rec = [&](int remaining) {
        if (static_cast<int>(tuple.size()) == r - 1) {
            for (auto& last : partitions_of(remaining)) {
                tuple.push_back(last);
                out.push_back(from_quotient(tuple, r));
                tuple.pop_back();
            }
            return;
        }
        for (int s = 0; s <= remaining; ++s)
            for (auto& p : partitions_of(s)) {
                tuple.push_back(p);
                rec(remaining - s);
                tuple.pop_back();
            }
    };
    rec(n);
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
}

}  // namespace abacus
