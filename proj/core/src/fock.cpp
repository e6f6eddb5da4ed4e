#include "abacus/fock.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "abacus/calculus.hpp"

namespace abacus {

int residue(int row, int col, NodeFilling filling) {
    if (row < 1 || col < 1) throw std::invalid_argument("cells are 1-indexed");
    switch (filling) {
    case NodeFilling::a22: return col % 3 == 2 ? 1 : 0;
    case NodeFilling::a11: return (row + col) % 2;
    }
    throw std::invalid_argument("unknown node filling");
}

WeightCounts weight_counts(const Partition& lambda, NodeFilling filling) {
    WeightCounts w;
    for (std::size_t i = 0; i < lambda.length(); ++i)
        for (int j = 1; j <= lambda[i]; ++j)
            (residue(static_cast<int>(i) + 1, j, filling) ? w.ones : w.zeros) += 1;
    return w;
}

namespace {

void require_residue(int i) {
    if (i != 0 && i != 1) throw std::invalid_argument("node residue must be 0 or 1");
}

}  // namespace

std::vector<Partition> remove_i_nodes(const Partition& lambda, int i, NodeFilling filling, bool strict_only) {
    require_residue(i);
    std::vector<Partition> out;
    for (std::size_t row = 0; row < lambda.length(); ++row) {
        if (lambda[row] <= lambda[row + 1]) continue;  // not a corner
        if (residue(static_cast<int>(row) + 1, lambda[row], filling) != i) continue;
        auto parts = lambda.vec();
        --parts[row];
        Partition next(std::move(parts));
        if (strict_only && !next.is_strict()) continue;
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<Partition> add_i_nodes(const Partition& lambda, int i, NodeFilling filling, bool strict_only) {
    require_residue(i);
    std::vector<Partition> out;
    for (std::size_t row = 0; row <= lambda.length(); ++row) {
        if (row > 0 && lambda[row - 1] <= lambda[row]) continue;  // not an indent
        if (residue(static_cast<int>(row) + 1, lambda[row] + 1, filling) != i) continue;
        auto parts = lambda.padded(row + 1);
        ++parts[row];
        Partition next(std::move(parts));
        if (strict_only && !next.is_strict()) continue;
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<StrictPartition> removable_nodes(const StrictPartition& lambda, int i, NodeFilling filling) {
    std::vector<StrictPartition> out;
    for (auto& p : remove_i_nodes(lambda, i, filling, true)) out.emplace_back(std::move(p));
    return out;
}

std::vector<StrictPartition> indent_nodes(const StrictPartition& lambda, int i, NodeFilling filling) {
    std::vector<StrictPartition> out;
    for (auto& p : add_i_nodes(lambda, i, filling, true)) out.emplace_back(std::move(p));
    return out;
}

FockElement FockElement::basis(StrictPartition lambda, BigInt coef) {
    FockElement v;
    v.add(lambda, coef);
    return v;
}

BigInt FockElement::coefficient(const StrictPartition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void FockElement::add(const StrictPartition& lambda, const BigInt& coef) {
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

FockElement& FockElement::operator+=(const FockElement& o) {
    for (const auto& [lambda, c] : o.terms_) add(lambda, c);
    return *this;
}

FockElement& FockElement::operator*=(const BigInt& k) {
    if (k == 0) terms_.clear();
    else
        for (auto& [lambda, c] : terms_) c *= k;
    return *this;
}

FockElement apply_e(const FockElement& v, int i, NodeFilling filling) {
    FockElement out;
    for (const auto& [lambda, c] : v.terms())
        for (const auto& mu : removable_nodes(lambda, i, filling)) out.add(mu, c);
    return out;
}

FockElement apply_f(const FockElement& v, int i, NodeFilling filling) {
    FockElement out;
    for (const auto& [lambda, c] : v.terms())
        for (const auto& mu : indent_nodes(lambda, i, filling)) out.add(mu, c);
    return out;
}

Partition staircase_delta(int ell) {
    if (ell < 1 || ell % 2 == 0) throw std::invalid_argument("staircase length must be a positive odd integer");
    std::vector<int> parts;
    for (int k = ell; k >= 1; --k) parts.push_back(k);
    return Partition(std::move(parts));
}

StrictPartition lambda_ell(int ell) {
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    std::vector<int> parts;
    for (int i = 1; i <= ell; ++i) parts.push_back(3 * (ell - i) + 1);
    return StrictPartition(std::move(parts));
}

std::vector<Partition> add_one_nodes(const Partition& base, int m, NodeFilling filling, bool strict_only) {
    if (m < 0) throw std::invalid_argument("number of added nodes must be non-negative");
    std::set<Partition, std::greater<>> layer{base};
    for (int step = 0; step < m; ++step) {
        std::set<Partition, std::greater<>> next;
        for (const auto& lambda : layer)
            for (auto& mu : add_i_nodes(lambda, 1, filling, strict_only)) next.insert(std::move(mu));
        layer = std::move(next);
    }
    return {layer.begin(), layer.end()};
}

int p_exponent(const StrictPartition& lambda) {
    int p = 0;
    for (int part : lambda.parts())
        if (part % 3 != 0) p += (part - 1) / 3;
    return p;
}

int charge(const StrictPartition& lambda) {
    const BarAbacus ab(lambda);
    return static_cast<int>(ab.runner(1).size()) - static_cast<int>(ab.runner(2).size());
}

Rational PhiImage::coefficient(const PhiKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PhiImage::add(const PhiKey& key, const Rational& coef) {
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

PhiImage leidwanger_phi(const FockElement& v) {
    PhiImage out;
    for (const auto& [lambda, c] : v.terms()) {
        auto bq = bar_quotient3(lambda);
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(p_exponent(lambda)));
        scale *= bar_sign3(lambda).value();
        out.add(PhiKey{std::move(bq.zero), std::move(bq.one), charge(lambda)}, Rational(c * scale));
    }
    return out;
}

int homogeneous_degree(const PhiKey& key) {
    return 2 * (key.b0.weight() + key.b1.weight()) + key.q_exponent * key.q_exponent;
}

std::string to_string(const FockElement& v) {
    if (v.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [lambda, c] : v.terms()) {
        if (!first) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        first = false;
        BigInt mag = abs(c);
        if (mag != 1) out += mag.get_str() + " ";
        out += "P(" + lambda.to_string() + ")";
    }
    return out;
}

std::string to_string(const PhiImage& v) {
    if (v.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : v.terms()) {
        if (!first) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        first = false;
        out += Rational(abs(c)).get_str() + " P(" + key.b0.to_string() + ")(s) S(" + key.b1.to_string() + ")(u) q^" +
               std::to_string(key.q_exponent);
    }
    return out;
}

}  // namespace abacus
