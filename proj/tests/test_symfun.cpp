#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "abacus/calculus.hpp"
#include "abacus/symfun.hpp"
#include "oracles.hpp"

using namespace abacus;

namespace {

PowerSumPolynomial p(std::initializer_list<int> idx, Rational c = 1) { return PowerSumPolynomial::term(Partition(idx), c); }
SchurExpansion s(std::initializer_list<int> idx, Rational c = 1) { return SchurExpansion::term(Partition(idx), c); }

bool odd_parts_only(const Partition& idx) {
    return std::all_of(idx.parts().begin(), idx.parts().end(), [](int k) { return k % 2 == 1; });
}

}  // namespace

TEST_SUITE("symfun") {

TEST_CASE("z factors") {
    CHECK(z_factor(Partition{1, 1, 1}) == 6);
    CHECK(z_factor(Partition{3}) == 3);
    CHECK(z_factor(Partition{2, 2, 1}) == 8);
    CHECK(z_factor(Partition{}) == 1);
    // sum over rho of n!/z_rho = n!
    for (int n = 1; n <= 8; ++n) {
        Rational total = 0;
        for (const auto& rho : partitions_of(n)) total += Rational(1) / Rational(z_factor(rho));
        CHECK(total == 1);
    }
}

TEST_CASE("characters on examples") {
    CHECK(mn_character(Partition{4}, Partition{2, 1, 1}) == 1);
    CHECK(mn_character(Partition{1, 1, 1}, Partition{2, 1}) == -1);
    CHECK(mn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(mn_character(Partition{}, Partition{}) == 1);
    CHECK_THROWS_AS(mn_character(Partition{2}, Partition{1}), std::invalid_argument);
}

TEST_CASE("characters match the Kostka oracle") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& rho : partitions_of(n))
            for (const auto& [lambda, chi] : oracle::characters_at(rho)) {
                INFO("lambda " << lambda.to_string() << " rho " << rho.to_string());
                CHECK(mn_character(lambda, rho) == chi);
            }
}

TEST_CASE("character orthogonality") {
    for (int n = 1; n <= 6; ++n) {
        const auto ps = partitions_of(n);
        for (const auto& a : ps)
            for (const auto& b : ps) {
                Rational sum = 0;
                for (const auto& rho : ps)
                    sum += Rational(static_cast<long>(mn_character(a, rho) * mn_character(b, rho))) / Rational(z_factor(rho));
                CHECK(sum == (a == b ? 1 : 0));
            }
    }
}

TEST_CASE("character table is safe under concurrent use") {
    CharacterTable table;
    const auto shapes = partitions_of(9);
    std::vector<std::vector<long long>> got(4);
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < got.size(); ++t)
            pool.emplace_back([&, t] {
                for (const auto& lambda : shapes)
                    for (const auto& rho : shapes) got[t].push_back(table.character(lambda, rho));
            });
    }
    for (const auto& g : got) CHECK(g == got.front());
    std::size_t k = 0;
    for (const auto& lambda : shapes)
        for (const auto& rho : shapes) CHECK(got.front()[k++] == mn_character(lambda, rho));
    CHECK(table.memo_size() > 0);
    table.clear();
    CHECK(table.memo_size() == 0);
}

TEST_CASE("Schur functions in power sums") {
    CHECK(schur_p(Partition{}) == PowerSumPolynomial::one());
    CHECK(schur_p(Partition{1}) == p({1}));
    CHECK(schur_p(Partition{2}) == p({2}, Rational(1, 2)) + p({1, 1}, Rational(1, 2)));
    CHECK(schur_p(Partition{2, 1}) == p({3}, Rational(-1, 3)) + p({1, 1, 1}, Rational(1, 3)));
    CHECK(p({2}) * p({1}) == p({2, 1}));
    CHECK(power(p({1}), 3) == p({1, 1, 1}));
}

TEST_CASE("Hall inner product") {
    CHECK(hall_inner(p({2}), p({2})) == 2);
    CHECK(hall_inner(PowerSumPolynomial::one(), PowerSumPolynomial::one()) == 1);
    CHECK(hall_inner(p({2}), p({1, 1})) == 0);
    for (int n = 0; n <= 6; ++n)
        for (const auto& a : partitions_of(n))
            for (int k = 0; k <= 6; ++k)
                for (const auto& b : partitions_of(k)) CHECK(hall_inner(schur_p(a), schur_p(b)) == (a == b ? 1 : 0));
}

TEST_CASE("Schur basis conversion") {
    CHECK(to_schur_basis(p({2})) == s({2}) + s({1, 1}, -1));
    CHECK(to_schur_basis(schur_p(Partition{3, 1})) == s({3, 1}));
    CHECK(to_schur_basis(PowerSumPolynomial{}).empty());
    // inhomogeneous input converts grade by grade
    const auto mixed = p({2}) + p({1}, 3);
    CHECK(to_schur_basis(mixed) == s({2}) + s({1, 1}, -1) + s({1}, 3));
    for (int n = 0; n <= 10; ++n)
        for (const auto& rho : partitions_of(n)) {
            const auto f = PowerSumPolynomial::term(rho, Rational(n + 1) / 7);
            REQUIRE(from_schur_basis(to_schur_basis(f)) == f);
        }
}

TEST_CASE("Q and P functions") {
    CHECK(schur_q(StrictPartition{1}) == p({1}, 2));
    CHECK(schur_q(StrictPartition{2}) == p({1, 1}, 2));
    CHECK(schur_q(StrictPartition{}) == PowerSumPolynomial::one());
    const auto q31 = schur_q(StrictPartition{3, 1});
    CHECK(q31 == p({3, 1}, Rational(-4, 3)) + p({1, 1, 1, 1}, Rational(4, 3)));
    CHECK(schur_small_p(StrictPartition{1}) == p({1}));
    CHECK(schur_small_p(StrictPartition{}) == PowerSumPolynomial::one());
    CHECK(schur_small_p(StrictPartition{2, 1}) == schur_q(StrictPartition{2, 1}) * Rational(1, 4));
    CHECK(q_generator(0) == PowerSumPolynomial::one());
    for (int n = 0; n <= 10; ++n)
        for (const auto& lambda : strict_partitions_of(n)) {
            const auto q = schur_q(lambda);
            CHECK_FALSE(q.empty());
            CHECK(q.degrees() == std::vector<int>{n});
            for (const auto& [idx, c] : q.terms()) CHECK(odd_parts_only(idx));
        }
    // Q_(k) is the generator, and Q_(a,b) matches q_a q_b - 2 q_(a+1) q_(b-1) + ... + 2(-1)^b q_(a+b)
    for (int k = 1; k <= 6; ++k) CHECK(schur_q(StrictPartition{k}) == q_generator(k));
    for (int a = 2; a <= 5; ++a)
        for (int b = 1; b < a; ++b) {
            auto expect = q_generator(a) * q_generator(b);
            for (int i = 1; i <= b; ++i) expect += q_generator(a + i) * q_generator(b - i) * Rational(i % 2 ? -2 : 2);
            CHECK(schur_q(StrictPartition{a, b}) == expect);
        }
}

TEST_CASE("plethysm with power sums") {
    CHECK(plethysm_pr(p({2}), 2) == p({4}));
    CHECK(plethysm_pr(schur_p(Partition{1}), 2) == schur_p(Partition{2}) - schur_p(Partition{1, 1}));
    const auto f = schur_p(Partition{2, 1});
    const auto g = p({3, 1}, 5);
    CHECK(plethysm_pr(f + g, 3) == plethysm_pr(f, 3) + plethysm_pr(g, 3));
    CHECK_THROWS_AS(plethysm_pr(f, 0), std::invalid_argument);
}

TEST_CASE("Littlewood-Richardson coefficients") {
    CHECK(lr_coeff(Partition{1}, {Partition{}, Partition{1}}) == 1);
    CHECK(lr_coeff(Partition{2, 1}, {Partition{1}, Partition{1, 1}}) == 1);
    CHECK(lr_coeff(Partition{2, 1}, {Partition{1}, Partition{1}, Partition{1}}) == 2);
    CHECK(lr_tableaux(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; n + m <= 6; ++m) {
            const auto box = rectangle(n, m);
            for (const auto& a : subpartitions(box))
                for (const auto& b : subpartitions(box)) {
                    if (a.weight() + b.weight() != n * m) continue;
                    CHECK(lr_coeff(box, {a, b}) == (is_complementary(a, b, n, m) ? 1 : 0));
                }
        }
}

TEST_CASE("tableau LR agrees with power-sum products" * doctest::timeout(600)) {
    for (int n = 0; n <= 10; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int k = 0; k <= n; ++k)
                for (const auto& mu : partitions_of(k)) {
                    if (!contains(lambda, mu)) continue;
                    for (const auto& nu : partitions_of(n - k)) {
                        if (!contains(lambda, nu)) continue;
                        REQUIRE(lr_tableaux(lambda, mu, nu) == lr_coeff_via_power_sums(lambda, {mu, nu}));
                    }
                }
    CHECK(lr_coeff(Partition{3, 2, 1}, {Partition{1}, Partition{2, 1}, Partition{1, 1}}) ==
          lr_coeff_via_power_sums(Partition{3, 2, 1}, {Partition{1}, Partition{2, 1}, Partition{1, 1}}));
}

TEST_CASE("omega specialization") {
    CHECK(omega_specialize(p({3}), 3) == p({3}, 3));
    CHECK(omega_specialize(p({2}), 3).empty());
    CHECK(omega_specialize(p({6, 3}), 3) == p({6, 3}, 9));
    const Partition mu{2, 2};
    const auto q = r_quotient(mu, 2);
    PowerSumPolynomial rhs;
    for (const auto& nu : partitions_of(2)) rhs += plethysm_pr(schur_p(nu), 2) * Rational(static_cast<long>(lr_coeff(nu, q)));
    CHECK(omega_specialize(schur_p(mu), 2) == rhs * Rational(r_sign(mu, 2).value()));
}

TEST_CASE("plethysm through quotients") {
    CHECK(plethysm_via_quotients(Partition{1}, 2) == s({2}) + s({1, 1}, -1));
    CHECK(plethysm_via_quotients(Partition{}, 3) == SchurExpansion::one());
    for (int r : {2, 3})
        for (int n = 0; n <= 5; ++n)
            for (const auto& lambda : partitions_of(n)) {
                INFO("lambda " << lambda.to_string() << " r " << r);
                CHECK(plethysm_via_quotients(lambda, r) == to_schur_basis(plethysm_pr(schur_p(lambda), r)));
            }
}

TEST_CASE("balanced expansion of p2 on a rectangle") {
    CHECK(plethysm_rect_balanced(1, 1) == s({2}) + s({1, 1}, -1));
    CHECK(plethysm_rect_balanced(3, 0) == SchurExpansion::one());
    CHECK(plethysm_rect_balanced(7, 5).coefficient(Partition{9, 8, 8, 7, 6, 5, 5, 5, 5, 4, 3, 2, 2, 1}) == 1);
    for (int n = 0; n <= 8; ++n)
        for (int m = 0; n * m <= 8; ++m) {
            if (m > 8) break;
            CHECK(plethysm_rect_balanced(n, m) == to_schur_basis(plethysm_pr(schur_p(rectangle(n, m)), 2)));
        }
}

TEST_CASE("difference expansion") {
    CHECK(schur_difference_expansion(Partition{}) == std::vector<DifferenceTerm>{{Sign::plus(), {}, {}}});
    const auto one = schur_difference_expansion(Partition{1});
    CHECK(one.size() == 2);
    CHECK(std::find(one.begin(), one.end(), DifferenceTerm{Sign::plus(), {1}, {}}) != one.end());
    CHECK(std::find(one.begin(), one.end(), DifferenceTerm{Sign::minus(), {}, {1}}) != one.end());
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; n + m <= 6; ++m) {
            const auto terms = schur_difference_expansion(rectangle(n, m));
            const auto pairs = complementary_pairs(n, m);
            REQUIRE(terms.size() == pairs.size());
            for (const auto& [a, b] : pairs) {
                const DifferenceTerm t{Sign::from_parity(b.weight()), a, conjugate(b)};
                CHECK(std::count(terms.begin(), terms.end(), t) == 1);
            }
        }
    // a non-rectangular shape picks up multiplicities
    const auto hook = schur_difference_expansion(Partition{3, 2, 1});
    CHECK(std::count(hook.begin(), hook.end(), DifferenceTerm{Sign::minus(), {2, 1}, conjugate(Partition{2, 1})}) == 2);
}

TEST_CASE("killing p indices divisible by 3") {
    CHECK(reduce_mod3(p({3})).empty());
    CHECK(reduce_mod3(p({5, 1})) == p({5, 1}));
    const auto f = reduce_mod3(schur_small_p(StrictPartition{4, 3, 1}));
    CHECK_FALSE(f.empty());
    for (const auto& [idx, c] : f.terms())
        for (int k : idx.parts()) CHECK(k % 3 != 0);
}

TEST_CASE("series arithmetic") {
    auto f = p({2}) + p({1, 1});
    f -= p({2});
    CHECK(f == p({1, 1}));
    f *= Rational(0);
    CHECK(f.empty());
    CHECK((p({2}) - p({2})).empty());
    CHECK((-p({2})).coefficient(Partition{2}) == -1);
    const auto g = p({3}) + p({1}) + p({2, 1});
    CHECK(g.degrees() == std::vector<int>{1, 3});
    CHECK(g.homogeneous_component(3) == p({3}) + p({2, 1}));
    CHECK(to_string(PowerSumPolynomial{}) == "0");
    CHECK(to_string(PowerSumPolynomial::one() * Rational(-3)) == "-3");
    CHECK(to_string(p({3}) + p({}, 2)) == "p(3) + 2");
    CHECK(to_string(schur_p(Partition{2})) == "1/2 p(2) + 1/2 p(1,1)");
    CHECK(to_string(s({2}) + s({1, 1}, -1)) == "S(2) - S(1,1)");
    SignedPartitionSet set;
    set.insert(Sign::minus(), Partition{1, 1});
    set.insert(Sign::plus(), Partition{2});
    CHECK(set.as_schur() == s({2}) + s({1, 1}, -1));
}

}
