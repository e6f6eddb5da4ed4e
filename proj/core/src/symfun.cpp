#include "abacus/symfun.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "abacus/calculus.hpp"

namespace abacus {

PowerSumPolynomial operator*(const PowerSumPolynomial& a, const PowerSumPolynomial& b) {
    PowerSumPolynomial out;
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            std::vector<int> idx(ia.vec());
            idx.insert(idx.end(), ib.vec().begin(), ib.vec().end());
            std::sort(idx.begin(), idx.end(), std::greater<>{});
            out.add(Partition(std::move(idx)), ca * cb);
        }
    return out;
}

PowerSumPolynomial power(const PowerSumPolynomial& a, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    auto out = PowerSumPolynomial::one();
    for (int i = 0; i < exponent; ++i) out = out * a;
    return out;
}

void SignedPartitionSet::insert(Sign s, Partition p) {
    std::pair<Sign, Partition> item{s, std::move(p)};
    items_.insert(std::upper_bound(items_.begin(), items_.end(), item), std::move(item));
}

SchurExpansion SignedPartitionSet::as_schur() const {
    SchurExpansion out;
    for (const auto& [s, p] : items_) out.add(p, s.value());
    return out;
}

namespace {

// gmpxx does not reduce num/den pairs on construction.
Rational ratio(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

BigInt z_factor(const Partition& rho) {
    BigInt z = 1;
    std::size_t i = 0;
    while (i < rho.length()) {
        std::size_t j = i;
        while (j < rho.length() && rho[j] == rho[i]) ++j;
        const auto mult = static_cast<unsigned long>(j - i);
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), mult);
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(rho[i]), mult);
        z *= f * pw;
        i = j;
    }
    return z;
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama

namespace {

std::string memo_key(std::span<const int> lambda, std::span<const int> rho) {
    std::string key;
    key.reserve(lambda.size() + rho.size() + 1);
    for (int p : lambda) key.push_back(static_cast<char>(p));
    key.push_back('\xff');
    for (int p : rho) key.push_back(static_cast<char>(p));
    return key;
}

}  // namespace

long long CharacterTable::character(const Partition& lambda, const Partition& rho) {
    if (lambda.weight() != rho.weight())
        throw std::invalid_argument("character needs |lambda| = |rho|: " + lambda.to_string() + " vs " + rho.to_string());
    if (!lambda.empty() && lambda[0] > 250) throw std::invalid_argument("part too large for the character table");
    return compute(lambda.vec(), rho.parts());
}

long long CharacterTable::compute(const std::vector<int>& lambda, std::span<const int> rho) {
    if (rho.empty()) return 1;
    if (lambda.size() <= 1) return 1;  // trivial character

    auto key = memo_key(lambda, rho);
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }

    // Remove a rim hook of length k = rho[0]: slide bead x to x - k.
    const int k = rho.front();
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beads(lambda.size());
    for (int i = 0; i < len; ++i) beads[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;

    long long total = 0;
    std::vector<int> moved;
    for (int i = 0; i < len; ++i) {
        const int x = beads[static_cast<std::size_t>(i)];
        const int target = x - k;
        if (target < 0) continue;
        if (std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
        int between = 0;
        for (int b : beads)
            if (b > target && b < x) ++between;
        moved = beads;
        moved[static_cast<std::size_t>(i)] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>{});
        std::vector<int> next(moved.size());
        for (int j = 0; j < len; ++j) next[static_cast<std::size_t>(j)] = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
        while (!next.empty() && next.back() == 0) next.pop_back();
        const long long sub = compute(next, rho.subspan(1));
        total += (between % 2 ? -sub : sub);
    }

    std::unique_lock lock(mutex_);
    memo_.emplace(std::move(key), total);
    return total;
}

std::size_t CharacterTable::memo_size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
}

void CharacterTable::clear() {
    std::unique_lock lock(mutex_);
    memo_.clear();
}

CharacterTable& shared_character_table() {
    static CharacterTable table;
    return table;
}

long long mn_character(const Partition& lambda, const Partition& rho) {
    return shared_character_table().character(lambda, rho);
}

// ---------------------------------------------------------------------------
// Schur functions

PowerSumPolynomial schur_p(const Partition& lambda) {
    PowerSumPolynomial out;
    for (const auto& rho : partitions_of(lambda.weight())) {
        const long long chi = mn_character(lambda, rho);
        if (chi == 0) continue;
        out.add(rho, ratio(BigInt(static_cast<long>(chi)), z_factor(rho)));
    }
    return out;
}

PowerSumPolynomial q_generator(int k) {
    if (k < 0) return {};
    // k q_k = sum_{j odd <= k} 2 p_j q_{k-j}
    std::vector<PowerSumPolynomial> q(static_cast<std::size_t>(k) + 1);
    q[0] = PowerSumPolynomial::one();
    for (int n = 1; n <= k; ++n) {
        PowerSumPolynomial acc;
        for (int j = 1; j <= n; j += 2)
            acc += PowerSumPolynomial::term(Partition{j}, 2) * q[static_cast<std::size_t>(n - j)];
        q[static_cast<std::size_t>(n)] = acc * ratio(1, n);
    }
    return q[static_cast<std::size_t>(k)];
}

namespace {

/// Q_{(a,b)} for a > b >= 0.
PowerSumPolynomial two_row_q(int a, int b) {
    auto out = q_generator(a) * q_generator(b);
    for (int i = 1; i <= b; ++i) {
        auto t = q_generator(a + i) * q_generator(b - i);
        out += t * Rational(i % 2 ? -2 : 2);
    }
    return out;
}

PowerSumPolynomial pfaffian(const std::vector<std::vector<PowerSumPolynomial>>& m, std::vector<std::size_t> idx) {
    if (idx.empty()) return PowerSumPolynomial::one();
    PowerSumPolynomial out;
    const std::size_t first = idx.front();
    for (std::size_t j = 1; j < idx.size(); ++j) {
        std::vector<std::size_t> rest;
        for (std::size_t t = 1; t < idx.size(); ++t)
            if (t != j) rest.push_back(idx[t]);
        auto term = m[first][idx[j]] * pfaffian(m, rest);
        if (j % 2 == 0) term *= Rational(-1);
        out += term;
    }
    return out;
}

}  // namespace

PowerSumPolynomial schur_q(const StrictPartition& lambda) {
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
    if (parts.size() % 2) parts.push_back(0);
    const std::size_t n = parts.size();
    std::vector<std::vector<PowerSumPolynomial>> m(n, std::vector<PowerSumPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m[i][j] = two_row_q(parts[i], parts[j]);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    return pfaffian(m, idx);
}

PowerSumPolynomial schur_small_p(const StrictPartition& lambda) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(lambda.length()));
    return schur_q(lambda) * ratio(1, scale);
}

PowerSumPolynomial plethysm_pr(const PowerSumPolynomial& f, int r) {
    if (r < 1) throw std::invalid_argument("plethysm degree must be >= 1");
    PowerSumPolynomial out;
    for (const auto& [idx, c] : f.terms()) {
        std::vector<int> parts(idx.vec());
        for (int& p : parts) p *= r;
        out.add(Partition(std::move(parts)), c);
    }
    return out;
}

Rational hall_inner(const PowerSumPolynomial& f, const PowerSumPolynomial& g) {
    Rational out = 0;
    const auto& small = f.size() <= g.size() ? f : g;
    const auto& large = f.size() <= g.size() ? g : f;
    for (const auto& [idx, c] : small.terms()) {
        auto it = large.terms().find(idx);
        if (it != large.terms().end()) out += c * it->second * Rational(z_factor(idx));
    }
    return out;
}

SchurExpansion to_schur_basis(const PowerSumPolynomial& f) {
    // <p_rho, S_mu> = chi^mu_rho
    SchurExpansion out;
    for (int d : f.degrees()) {
        const auto component = f.homogeneous_component(d);
        for (const auto& mu : partitions_of(d)) {
            Rational c = 0;
            for (const auto& [rho, coef] : component.terms()) {
                const long long chi = mn_character(mu, rho);
                if (chi != 0) c += coef * static_cast<long>(chi);
            }
            out.add(mu, c);
        }
    }
    return out;
}

PowerSumPolynomial from_schur_basis(const SchurExpansion& s) {
    PowerSumPolynomial out;
    for (const auto& [lambda, c] : s.terms()) out += schur_p(lambda) * c;
    return out;
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson

long long lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.weight() != mu.weight() + nu.weight() || !contains(lambda, mu)) return 0;
    if (nu.empty()) return 1;

    struct Cell { std::size_t row; int col; };
    std::vector<Cell> cells;  // reading order: rows top-down, right to left
    for (std::size_t i = 0; i < lambda.length(); ++i)
        for (int j = lambda[i] - 1; j >= mu[i]; --j) cells.push_back({i, j});

    std::vector<std::vector<int>> fill(lambda.length());
    for (std::size_t i = 0; i < lambda.length(); ++i) fill[i].assign(static_cast<std::size_t>(lambda[i]), -1);
    std::vector<int> count(nu.length(), 0);
    const int letters = static_cast<int>(nu.length());

    long long total = 0;
    auto rec = [&](auto&& self, std::size_t c) -> void {
        if (c == cells.size()) {
            ++total;
            return;
        }
        const auto [i, j] = cells[c];
        int hi = letters - 1;
        if (j + 1 < lambda[i]) hi = std::min(hi, fill[i][static_cast<std::size_t>(j + 1)]);  // row weakly increasing
        int lo = 0;
        if (i > 0 && j >= mu[i - 1]) lo = fill[i - 1][static_cast<std::size_t>(j)] + 1;  // column strict
        for (int v = lo; v <= hi; ++v) {
            if (count[static_cast<std::size_t>(v)] >= nu[static_cast<std::size_t>(v)]) continue;
            if (v > 0 && count[static_cast<std::size_t>(v - 1)] <= count[static_cast<std::size_t>(v)]) continue;
            ++count[static_cast<std::size_t>(v)];
            fill[i][static_cast<std::size_t>(j)] = v;
            self(self, c + 1);
            fill[i][static_cast<std::size_t>(j)] = -1;
            --count[static_cast<std::size_t>(v)];
        }
    };
    rec(rec, 0);
    return total;
}

long long lr_coeff(const Partition& lambda, const std::vector<Partition>& factors) {
    int total = 0;
    for (const auto& f : factors) total += f.weight();
    if (total != lambda.weight()) return 0;
    if (factors.empty()) return lambda.empty() ? 1 : 0;
    if (factors.size() == 1) return factors.front() == lambda ? 1 : 0;

    const auto& last = factors.back();
    const std::vector<Partition> head(factors.begin(), factors.end() - 1);
    long long out = 0;
    for (const auto& nu : subpartitions(lambda)) {
        if (nu.weight() != lambda.weight() - last.weight()) continue;
        const long long outer = lr_tableaux(lambda, nu, last);
        if (outer == 0) continue;
        out += outer * lr_coeff(nu, head);
    }
    return out;
}

long long lr_coeff_via_power_sums(const Partition& lambda, const std::vector<Partition>& factors) {
    int total = 0;
    for (const auto& f : factors) total += f.weight();
    if (total != lambda.weight()) return 0;
    auto product = PowerSumPolynomial::one();
    for (const auto& f : factors) product = product * schur_p(f);
    const Rational c = hall_inner(schur_p(lambda), product);
    if (c.get_den() != 1) throw std::logic_error("non-integral LR coefficient");
    return c.get_num().get_si();
}

PowerSumPolynomial omega_specialize(const PowerSumPolynomial& f, int r) {
    require_modulus(r);
    PowerSumPolynomial out;
    for (const auto& [idx, c] : f.terms()) {
        if (std::any_of(idx.parts().begin(), idx.parts().end(), [r](int k) { return k % r != 0; })) continue;
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(idx.length()));
        out.add(idx, c * Rational(scale));
    }
    return out;
}

SchurExpansion plethysm_via_quotients(const Partition& lambda, int r) {
    require_modulus(r);
    SchurExpansion out;
    for (const auto& mu : empty_core_partitions(lambda.weight(), r)) {
        const long long lr = lr_coeff(lambda, r_quotient(mu, r));
        if (lr != 0) out.add(mu, Rational(static_cast<long>(r_sign(mu, r).value() * lr)));
    }
    return out;
}

SchurExpansion plethysm_rect_balanced(int n, int m) {
    SchurExpansion out;
    for (const auto& mu : enumerate_balanced(n, m)) out.add(mu, r_sign(mu, 2).value());
    return out;
}

std::vector<DifferenceTerm> schur_difference_expansion(const Partition& lambda) {
    std::vector<DifferenceTerm> out;
    for (const auto& alpha : subpartitions(lambda)) {
        const int rest = lambda.weight() - alpha.weight();
        for (const auto& beta : partitions_of(rest)) {
            if (!contains(lambda, beta)) continue;
            const long long c = lr_tableaux(lambda, alpha, beta);
            for (long long t = 0; t < c; ++t)
                out.push_back({Sign::from_parity(beta.weight()), alpha, conjugate(beta)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PowerSumPolynomial reduce_mod3(const PowerSumPolynomial& f) {
    PowerSumPolynomial out;
    for (const auto& [idx, c] : f.terms())
        if (std::none_of(idx.parts().begin(), idx.parts().end(), [](int k) { return k % 3 == 0; })) out.add(idx, c);
    return out;
}

namespace {

template <class Tag>
std::string render(const PartitionSeries<Tag>& f, const char* symbol) {
    if (f.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : f.terms()) {
        Rational mag = abs(c);
        if (first) out += c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        first = false;
        if (idx.empty()) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + ' ';
        out += symbol;
        out += '(' + idx.to_string() + ')';
    }
    return out;
}

}  // namespace

std::string to_string(const PowerSumPolynomial& f) { return render(f, "p"); }
std::string to_string(const SchurExpansion& s) { return render(s, "S"); }

}  // namespace abacus
