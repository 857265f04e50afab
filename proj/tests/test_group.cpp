/*
   Copyright 2026 The hopfscf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hopfscf/group.hpp"

using namespace hopfscf;

namespace {

// Expansion of m(kappa_I, kappa_J) computed on the group, keyed by K.
std::map<IndexSet, Rational> dense_kappa_product(IndexSet i, int m, IndexSet j, int n, int nu) {
    const ClassFunction a = kappa(GroupSpec::standard(nu, m), i);
    const ClassFunction b = kappa(GroupSpec::standard(nu, n), j);
    return expand_in_kappa(product_m(a, m, b, n));
}

// Coefficient of chi^I on kappa_J, closed form.
Rational chi_on_kappa(IndexSet i, IndexSet j, IndexSet s, int nu) {
    const int sign = (j - i).size() % 2 == 0 ? 1 : -1;
    return sign * pow(Rational(nu - 1), (s - (i | j)).size());
}

using TensorKey = std::tuple<int, IndexSet, IndexSet>;

std::map<TensorKey, Rational> kappa_coproduct(const ClassFunction& phi, int n) {
    std::map<TensorKey, Rational> out;
    for (const TensorFunction& x : coproduct(phi, n)) {
        for (const auto& [labels, c] : split_tensor(x, expand_in_kappa(x.joint))) {
            out[{x.k, labels.first, labels.second}] += c;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("group specs and element encoding") {
    const GroupSpec g(3, IndexSet{2, 5});
    CHECK(g.order() == 9);
    CHECK(g.position(5) == 1);
    CHECK(g.decode(g.encode({2, 1})) == std::vector<int>{2, 1});
    CHECK(g.support(g.encode({0, 2})) == IndexSet{5});
    CHECK(g.inverse(g.encode({1, 2})) == g.encode({2, 1}));
    CHECK(GroupSpec::standard(2, 1).order() == 1);
    CHECK_THROWS_AS(GroupSpec(1, IndexSet{1}), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec(2, IndexSet::range(21)), std::length_error);
}

TEST_CASE("superclass identifiers") {
    const GroupSpec g(2, IndexSet::range(2));
    const ClassFunction k0 = kappa(g, {});
    CHECK(k0[0] == 1);
    CHECK(hall_inner(k0, ClassFunction::constant(g, 1)) == Rational(1, 4));
    const ClassFunction k1 = kappa(g, {1});
    CHECK(k1[g.encode({1, 0})] == 1);
    CHECK(k1[g.encode({1, 1})] == 0);
    CHECK(k1[g.encode({0, 1})] == 0);
    CHECK_THROWS_AS(kappa(g, {3}), std::invalid_argument);
    for (int nu : {2, 3}) {
        for (int n = 1; n <= 5; ++n) {
            const GroupSpec spec = GroupSpec::standard(nu, n);
            ClassFunction total(spec);
            for (IndexSet i : subsets_of(spec.index_set())) {
                const ClassFunction k = kappa(spec, i);
                CHECK(k == kappa_factors(spec, i).expand(spec));
                CHECK(chi(spec, i) == chi_factors(spec, i).expand(spec));
                total += k;
                for (IndexSet j : subsets_of(spec.index_set())) {
                    if (i != j) CHECK(pointwise(k, kappa(spec, j)).is_zero());
                }
            }
            CHECK(total == ClassFunction::constant(spec, 1));
        }
    }
}

TEST_CASE("supercharacters") {
    const GroupSpec g(2, IndexSet{1});
    const ClassFunction c = chi(g, {});
    CHECK(c[0] == 1);
    CHECK(c[1] == -1);
    for (int nu : {2, 3, 4}) {
        for (int n = 1; n <= 4; ++n) {
            const GroupSpec spec = GroupSpec::standard(nu, n);
            const IndexSet s = spec.index_set();
            CHECK(chi(spec, s) == ClassFunction::constant(spec, 1));
            CHECK(chi(spec, {})[0] == pow(Rational(nu - 1), s.size()));
            for (IndexSet i : subsets_of(s)) {
                ClassFunction rebuilt(spec);
                for (IndexSet j : subsets_of(s)) rebuilt += chi_on_kappa(i, j, s, nu) * kappa(spec, j);
                CHECK(chi(spec, i) == rebuilt);
                CHECK(dot_chi(spec, i)[0] == 1);
                CHECK(hall_inner(chi(spec, i), chi(spec, i)) == pow(Rational(nu - 1), (s - i).size()));
                CHECK(hall_inner(kappa(spec, i), kappa(spec, i)) ==
                      pow(Rational(nu - 1), i.size()) / pow(Rational(nu), s.size()));
                for (IndexSet j : subsets_of(s)) {
                    if (i != j) CHECK(hall_inner(chi(spec, i), chi(spec, j)) == 0);
                }
            }
        }
    }
}

TEST_CASE("lattice oracle matches support classes") {
    for (const auto& [nu, rank] : {std::pair{2, 2}, std::pair{3, 3}, std::pair{4, 2}}) {
        const GroupSpec spec(nu, IndexSet::range(rank));
        for (IndexSet i : subsets_of(spec.index_set())) CHECK(lattice_superclass_oracle(spec, i) == kappa(spec, i));
    }
    const GroupSpec spec(2, IndexSet::range(3));
    const ClassFunction e = lattice_superclass_oracle(spec, {});
    CHECK(e[0] == 1);
    CHECK(hall_inner(e, ClassFunction::constant(spec, 1)) * 8 == 1);
}

TEST_CASE("axioms") {
    for (int n = 1; n <= 7; ++n) {
        const AxiomReport r = verify_axioms(GroupSpec::standard(2, n));
        CHECK_MESSAGE(r.ok, r.failure);
    }
    for (int n = 1; n <= 5; ++n) {
        const AxiomReport r = verify_axioms(GroupSpec::standard(3, n));
        CHECK_MESSAGE(r.ok, r.failure);
    }
    // composite nu exercises the cyclotomic reduction beyond 1 + z + ... + z^(nu-1) = 0
    const AxiomReport r = verify_axioms(GroupSpec::standard(6, 3));
    CHECK_MESSAGE(r.ok, r.failure);
}

TEST_CASE("restriction, tensoring and relabelling") {
    const GroupSpec g6 = GroupSpec::standard(2, 6);
    const ClassFunction k14 = kappa(g6, {1, 4});
    CHECK(restrict(k14, {1, 2, 4}) == kappa(GroupSpec(2, {1, 2, 4}), {1, 4}));
    CHECK(restrict(k14, {1, 2, 3}).is_zero());
    CHECK(restrict(ClassFunction::constant(g6, 1), {2, 5}) == ClassFunction::constant(GroupSpec(2, {2, 5}), 1));
    CHECK_THROWS_AS(restrict(k14, {7}), std::invalid_argument);

    for (int nu : {2, 3}) {
        const GroupSpec a(nu, {1, 3});
        const GroupSpec b(nu, {2});
        const GroupSpec ab(nu, {1, 2, 3});
        CHECK(tensor_embed(ClassFunction::constant(a, 1), ClassFunction::constant(b, 1)) == ClassFunction::constant(ab, 1));
        for (IndexSet i : subsets_of(a.index_set())) {
            for (IndexSet j : subsets_of(b.index_set())) {
                CHECK(tensor_embed(kappa(a, i), kappa(b, j)) == kappa(ab, i | j));
                CHECK(tensor_embed(chi(a, i), chi(b, j)) == chi(ab, i | j));
            }
        }
        const GroupSpec std2 = GroupSpec::standard(nu, 3);
        CHECK(relabel(chi(std2, {1}), {2, 5}) == chi(GroupSpec(nu, {2, 5}), {2}));
        for (IndexSet i : subsets_of(std2.index_set())) {
            const ClassFunction moved = relabel(kappa(std2, i), {3, 7});
            IndexSet image;
            if (i.contains(1)) image.insert(3);
            if (i.contains(2)) image.insert(7);
            CHECK(moved == kappa(GroupSpec(nu, {3, 7}), image));
            CHECK(standardize(moved) == kappa(std2, i));
        }
    }
    CHECK_THROWS_AS(tensor_embed(kappa(GroupSpec(2, {1}), {}), kappa(GroupSpec(2, {1, 2}), {})), std::invalid_argument);
    CHECK_THROWS_AS(relabel(kappa(GroupSpec(2, {1}), {}), {1, 2}), std::invalid_argument);
}

TEST_CASE("m_A on the worked example") {
    for (int nu : {2, 3}) {
        const ClassFunction phi = dot_chi(GroupSpec::standard(nu, 4), {2, 3});
        const ClassFunction psi = dot_chi(GroupSpec::standard(nu, 3), {2});
        const ClassFunction out = product_mA(phi, 4, psi, 3, {1, 3, 4});
        CHECK(out == dot_chi(GroupSpec::standard(nu, 7), {1, 3, 4, 5, 6}));
    }
}

TEST_CASE("m_A sends dot_chi pairs to the A-shuffle") {
    for (int nu : {2, 3}) {
        for (int m = 0; m <= 6; ++m) {
            for (int n = 0; m + n <= 6; ++n) {
                for (IndexSet i : subsets_of(split_points(m))) {
                    for (IndexSet j : subsets_of(split_points(n))) {
                        const ClassFunction phi = dot_chi(GroupSpec::standard(nu, m), i);
                        const ClassFunction psi = dot_chi(GroupSpec::standard(nu, n), j);
                        for (IndexSet a : k_subsets(m + n, n)) {
                            const ClassFunction out = product_mA(phi, m, psi, n, a);
                            CHECK(out == dot_chi(GroupSpec::standard(nu, m + n), a_shuffle(i, j, a, m, n)));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("kappa product: worked instance") {
    // Admissible A are {1,2,3}, {1,4,5}, {3,4,5}; summing their contributions by hand:
    // K={1,4}: 1, {2,4}: 2, {1,2,4}: 1 + 1/(1-nu), {2,3,4}: 1 + 1/(1-nu), {1,2,3,4}: 1/(1-nu).
    for (int nu : {2, 3, 5}) {
        const Rational w = Rational(1) / (1 - nu);
        std::map<IndexSet, Rational> expected{{IndexSet{1, 4}, 1},
                                              {IndexSet{2, 4}, 2},
                                              {IndexSet{1, 2, 4}, 1 + w},
                                              {IndexSet{2, 3, 4}, 1 + w},
                                              {IndexSet{1, 2, 3, 4}, w}};
        std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
        CHECK(dense_kappa_product({1}, 2, {2}, 3, nu) == expected);
        CHECK(kappa_product_formula({1}, 2, {2}, 3, nu) == expected);
    }
}

TEST_CASE("kappa product matches the golden file") {
    std::ifstream in(std::string(HOPFSCF_GOLDEN_DIR) + "/kappa_product_m2_n3_I1_J2.txt");
    REQUIRE(in.good());
    std::map<int, std::map<IndexSet, Rational>> golden;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        int nu = 0;
        std::string k;
        std::string coeff;
        row >> nu >> k >> coeff;
        std::vector<int> elems;
        for (char& ch : k) {
            if (ch == '{' || ch == '}' || ch == ',') ch = ' ';
        }
        std::istringstream ks(k);
        for (int x = 0; ks >> x;) elems.push_back(x);
        golden[nu][IndexSet(elems)] = Rational(coeff);
    }
    REQUIRE(golden.size() == 2);
    for (const auto& [nu, expansion] : golden) CHECK(dense_kappa_product({1}, 2, {2}, 3, nu) == expansion);
}

TEST_CASE("kappa product: dense versus closed formula") {
    for (int nu : {2, 3}) {
        for (int m = 0; m <= 5; ++m) {
            for (int n = 0; m + n <= 6; ++n) {
                for (IndexSet i : subsets_of(split_points(m))) {
                    for (IndexSet j : subsets_of(split_points(n))) {
                        CHECK(dense_kappa_product(i, m, j, n, nu) == kappa_product_formula(i, m, j, n, nu));
                    }
                }
            }
        }
    }
}

TEST_CASE("coproduct on basis functions") {
    for (int nu : {2, 3}) {
        // ▲_2(dot_chi^{1,3,4}) in degree 5 is the trivial function on both factors
        const TensorFunction x = coproduct_k(dot_chi(GroupSpec::standard(nu, 5), {1, 3, 4}), 5, 2);
        CHECK(x.joint == ClassFunction::constant(GroupSpec(nu, {1, 3, 4}), 1));
        const auto split = split_tensor(x, expand_in_dot_chi(x.joint));
        CHECK(split.size() == 1);
        CHECK(split.at({IndexSet{1}, IndexSet{1, 2}}) == 1);

        // ▲(kappa_{1,4}) in degree 6: one term per way of writing (1,3,2) = α ⊙ β
        const auto cop = kappa_coproduct(kappa(GroupSpec::standard(nu, 6), {1, 4}), 6);
        const std::map<TensorKey, Rational> expected{{{0, IndexSet{}, IndexSet{1, 4}}, 1},
                                                     {{2, IndexSet{1}, IndexSet{2}}, 1},
                                                     {{3, IndexSet{1}, IndexSet{1}}, 1},
                                                     {{5, IndexSet{1, 4}, IndexSet{}}, 1},
                                                     {{6, IndexSet{1, 4}, IndexSet{}}, 1}};
        CHECK(cop == expected);

        const ClassFunction phi = chi(GroupSpec::standard(nu, 4), {2});
        CHECK(coproduct_k(phi, 4, 0).joint == phi);
        CHECK(coproduct_k(phi, 4, 4).joint == phi);
        CHECK_THROWS_AS(coproduct_k(phi, 4, 5), std::out_of_range);
    }
}

TEST_CASE("coproduct of kappa follows near-concatenation") {
    for (int nu : {2, 3}) {
        for (int n = 0; n <= 6; ++n) {
            for (IndexSet i : subsets_of(split_points(n))) {
                const Composition gamma = comp_of_set(i, n);
                std::map<TensorKey, Rational> expected;
                for (int k = 0; k <= n; ++k) {
                    for (IndexSet l : subsets_of(split_points(k))) {
                        for (IndexSet r : subsets_of(split_points(n - k))) {
                            if (near_concat(comp_of_set(l, k), comp_of_set(r, n - k)) == gamma) expected[{k, l, r}] += 1;
                        }
                    }
                }
                CHECK(kappa_coproduct(kappa(GroupSpec::standard(nu, n), i), n) == expected);
            }
        }
    }
}

TEST_CASE("associativity and coassociativity on the supercharacter span") {
    const int nu = 2;
    for (int a = 1; a <= 2; ++a) {
        for (int b = 1; b <= 2; ++b) {
            for (int c = 1; a + b + c <= 5; ++c) {
                for (IndexSet i : subsets_of(split_points(a))) {
                    for (IndexSet j : subsets_of(split_points(b))) {
                        for (IndexSet k : subsets_of(split_points(c))) {
                            const ClassFunction x = kappa(GroupSpec::standard(nu, a), i);
                            const ClassFunction y = kappa(GroupSpec::standard(nu, b), j);
                            const ClassFunction z = kappa(GroupSpec::standard(nu, c), k);
                            CHECK(product_m(product_m(x, a, y, b), a + b, z, c) ==
                                  product_m(x, a, product_m(y, b, z, c), b + c));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("enumeration bound") {
    CHECK(max_group_order() == (std::size_t{1} << 20));
}
