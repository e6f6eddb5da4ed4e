#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "abacus/calculus.hpp"
#include "abacus/fock.hpp"

using namespace abacus;

namespace {

long long binom(int n, int k) {
    long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

bool has(const std::vector<StrictPartition>& v, const StrictPartition& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

TEST_SUITE("fock") {

TEST_CASE("residues") {
    // (010) along each row
    CHECK(residue(1, 1, NodeFilling::a22) == 0);
    CHECK(residue(4, 2, NodeFilling::a22) == 1);
    CHECK(residue(2, 6, NodeFilling::a22) == 0);
    CHECK(residue(1, 1, NodeFilling::a11) == 0);
    CHECK(residue(1, 2, NodeFilling::a11) == 1);
    CHECK_THROWS_AS(residue(0, 1, NodeFilling::a22), std::invalid_argument);
    CHECK(weight_counts(Partition{7, 5, 3, 1}, NodeFilling::a22) == WeightCounts{11, 5});
    CHECK(weight_counts(Partition{}, NodeFilling::a11) == WeightCounts{0, 0});
    CHECK(weight_counts(Partition{1}, NodeFilling::a22) == WeightCounts{1, 0});
}

TEST_CASE("node removal and addition") {
    const StrictPartition lambda{4, 3, 1};
    const auto e0 = removable_nodes(lambda, 0, NodeFilling::a22);
    CHECK(e0.size() == 2);
    CHECK(has(e0, StrictPartition{4, 2, 1}));
    CHECK(has(e0, StrictPartition{4, 3}));
    const auto f1 = indent_nodes(lambda, 1, NodeFilling::a22);
    CHECK(f1.size() == 2);
    CHECK(has(f1, StrictPartition{5, 3, 1}));
    CHECK(has(f1, StrictPartition{4, 3, 2}));
    CHECK(removable_nodes(StrictPartition{}, 1, NodeFilling::a22).empty());
    CHECK(removable_nodes(StrictPartition{2}, 1, NodeFilling::a22) == std::vector<StrictPartition>{{1}});
    CHECK(indent_nodes(StrictPartition{1}, 1, NodeFilling::a22) == std::vector<StrictPartition>{{2}});
    CHECK(indent_nodes(StrictPartition{}, 0, NodeFilling::a22) == std::vector<StrictPartition>{{1}});
    // adding to row 2 of (2,1) would repeat a part
    CHECK(add_i_nodes(Partition{2, 1}, 0, NodeFilling::a22, false).size() == 2);
    CHECK(add_i_nodes(Partition{2, 1}, 0, NodeFilling::a22, true).size() == 1);
    CHECK_THROWS_AS(indent_nodes(lambda, 2, NodeFilling::a22), std::invalid_argument);
}

TEST_CASE("operators on basis vectors") {
    const auto v = FockElement::basis(StrictPartition{4, 3, 1});
    auto e0 = FockElement::basis(StrictPartition{4, 2, 1});
    e0 += FockElement::basis(StrictPartition{4, 3});
    CHECK(apply_e(v, 0) == e0);
    auto expect = FockElement::basis(StrictPartition{5, 3, 1});
    expect += FockElement::basis(StrictPartition{4, 3, 2});
    CHECK(apply_f(v, 1) == expect);
    CHECK(apply_e(FockElement{}, 0).empty());
    CHECK(to_string(expect) == "P(5,3,1) + P(4,3,2)");
    CHECK((v * BigInt(0)).empty());
}

TEST_CASE("adding and removing nodes are mirror images") {
    for (int n = 0; n <= 12; ++n)
        for (const auto& lambda : strict_partitions_of(n))
            for (int i : {0, 1}) {
                for (const auto& mu : indent_nodes(lambda, i, NodeFilling::a22))
                    CHECK(has(removable_nodes(mu, i, NodeFilling::a22), lambda));
                for (const auto& mu : removable_nodes(lambda, i, NodeFilling::a22))
                    CHECK(has(indent_nodes(mu, i, NodeFilling::a22), lambda));
            }
}

TEST_CASE("families") {
    CHECK(staircase_delta(1) == Partition{1});
    CHECK(staircase_delta(3) == Partition{3, 2, 1});
    CHECK_THROWS_AS(staircase_delta(4), std::invalid_argument);
    for (int ell : {1, 3, 5, 7}) CHECK(r_core(staircase_delta(ell), 2) == staircase_delta(ell));
    CHECK(lambda_ell(1) == StrictPartition{1});
    CHECK(lambda_ell(2) == StrictPartition{4, 1});
    CHECK(lambda_ell(7) == StrictPartition{19, 16, 13, 10, 7, 4, 1});
    CHECK(add_one_nodes(staircase_delta(1), 1, NodeFilling::a11, false) == std::vector<Partition>{{2}, {1, 1}});
    CHECK(add_one_nodes(lambda_ell(2), 1, NodeFilling::a22, true) == std::vector<Partition>{{5, 1}, {4, 2}});
    const auto f73 = add_one_nodes(lambda_ell(7), 3, NodeFilling::a22, true);
    CHECK(std::find(f73.begin(), f73.end(), Partition{19, 17, 14, 10, 7, 4, 2}) != f73.end());
    CHECK_THROWS_AS(add_one_nodes(Partition{1}, -1, NodeFilling::a11, false), std::invalid_argument);

    for (int ell : {1, 3, 5, 7})
        for (int m = 0; m <= ell + 1; ++m)
            CHECK(static_cast<long long>(add_one_nodes(staircase_delta(ell), m, NodeFilling::a11, false).size()) ==
                  binom(ell + 1, m));
    for (int ell = 1; ell <= 7; ++ell)
        for (int m = 0; m <= ell; ++m) {
            const auto family = add_one_nodes(lambda_ell(ell), m, NodeFilling::a22, true);
            CHECK(static_cast<long long>(family.size()) == binom(ell, m));
            const auto base = weight_counts(lambda_ell(ell), NodeFilling::a22);
            for (const auto& mu : family) {
                const auto w = weight_counts(mu, NodeFilling::a22);
                CHECK(w.zeros == base.zeros);
                CHECK(w.ones == base.ones + m);
            }
        }
}

TEST_CASE("exponents along the families") {
    CHECK(p_exponent(StrictPartition{7, 5, 3, 1}) == 3);
    CHECK(p_exponent(StrictPartition{1}) == 0);
    CHECK(charge(StrictPartition{7, 5, 3, 1}) == 1);
    CHECK(charge(StrictPartition{}) == 0);
    for (int ell = 1; ell <= 5; ++ell)
        for (int m = 0; m <= ell; ++m)
            for (const auto& p : add_one_nodes(lambda_ell(ell), m, NodeFilling::a22, true)) {
                const StrictPartition mu(p);
                CHECK(p_exponent(mu) == binom(ell, 2));
                CHECK(charge(mu) == ell - 2 * m);
            }
}

TEST_CASE("iterated f1 on the highest vector") {
    for (int ell = 1; ell <= 5; ++ell) {
        auto v = FockElement::basis(lambda_ell(ell));
        BigInt factorial = 1;
        for (int m = 0; m <= ell + 1; ++m) {
            if (m > 0) {
                v = apply_f(v, 1);
                factorial *= m;
            }
            FockElement expect;
            for (const auto& mu : add_one_nodes(lambda_ell(ell), m, NodeFilling::a22, true))
                expect.add(StrictPartition(mu), factorial);
            CHECK(v == expect);
        }
    }
}

TEST_CASE("principal-to-homogeneous map") {
    const auto image = leidwanger_phi(FockElement::basis(StrictPartition{7, 5, 3, 1}));
    const PhiKey key{StrictPartition{1}, Partition{2, 1, 1}, 1};
    CHECK(image.terms().size() == 1);
    CHECK(image.coefficient(key) == 8);
    CHECK(homogeneous_degree(key) == 11);
    CHECK(to_string(image) == "8 P(1)(s) S(2,1,1)(u) q^1");

    const auto empty = leidwanger_phi(FockElement::basis(StrictPartition{}));
    CHECK(empty.coefficient(PhiKey{}) == 1);
    CHECK(homogeneous_degree(PhiKey{}) == 0);
    const PhiKey two{{}, {}, -1};
    CHECK(leidwanger_phi(FockElement::basis(StrictPartition{2})).coefficient(two) == 1);
    CHECK(homogeneous_degree(two) == 1);

    // the map is linear
    auto v = FockElement::basis(StrictPartition{7, 5, 3, 1}, 3);
    v.add(StrictPartition{2}, -2);
    const auto w = leidwanger_phi(v);
    CHECK(w.coefficient(key) == 24);
    CHECK(w.coefficient(two) == -2);
}

TEST_CASE("homogeneous degree counts 0-nodes") {
    for (int n = 0; n <= 16; ++n)
        for (const auto& lambda : strict_partitions_of(n)) {
            const auto image = leidwanger_phi(FockElement::basis(lambda));
            REQUIRE(image.terms().size() == 1);
            const auto& [key, c] = *image.terms().begin();
            CHECK(homogeneous_degree(key) == weight_counts(lambda, NodeFilling::a22).zeros);
        }
}

}
