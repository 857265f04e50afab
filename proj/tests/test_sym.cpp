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

#include "hopfscf/sym.hpp"

using namespace hopfscf;

namespace {

NSymElem bhat(int k, BasisParams p = {}) {
    return NSymElem::basis_element(NSymBasis::Bhat, k == 0 ? Composition{} : Composition{k}, p);
}

}  // namespace

TEST_CASE("partitions") {
    CHECK(Partition::of(Composition{1, 3, 1}) == Partition{3, 1, 1});
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    const std::size_t counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(partitions(n).size() == counts[n]);
    CHECK(c_lambda(Partition{2, 1, 1}) == 3);
    CHECK(c_lambda(Partition{}) == 1);
    // C_λ counts the compositions sorting to λ
    for (int n = 0; n <= 10; ++n) {
        std::map<Partition, long> count;
        for (const auto& beta : compositions(n)) ++count[Partition::of(beta)];
        for (const auto& lambda : partitions(n)) CHECK(BigInt(count[lambda]) == c_lambda(lambda));
    }
}

TEST_CASE("comm") {
    const SymElem h21 = SymElem::h(Partition{2, 1});
    CHECK(comm(NSymElem::basis_element(NSymBasis::H, {2, 1})) == h21);
    CHECK(comm(NSymElem::basis_element(NSymBasis::H, {1, 2})) == h21);
    CHECK(elementary(2) == SymElem::h(Partition{1, 1}) - SymElem::h(Partition{2}));
    CHECK(to_string(h21 * ScalarQT(2)) == "2*h(2,1)");
    // multiplicative on H pairs
    for (int a = 0; a <= 3; ++a) {
        for (const auto& x : compositions(a)) {
            for (int b = 0; a + b <= 6; ++b) {
                for (const auto& y : compositions(b)) {
                    const NSymElem hx = NSymElem::basis_element(NSymBasis::H, x);
                    const NSymElem hy = NSymElem::basis_element(NSymBasis::H, y);
                    CHECK(comm(product(hx, hy)) == product(comm(hx), comm(hy)));
                }
            }
        }
    }
}

TEST_CASE("comm of Bhat_n") {
    const ScalarQT q = ScalarQT::q();
    const ScalarQT t = ScalarQT::t();
    for (int n = 0; n <= 7; ++n) {
        CHECK(comm(bhat(n)) == comm_bhat_closed(n, q, t));
        CHECK(comm(bhat(n, {2, 3})) == comm_bhat_closed(n, 2, 3));
    }
    CHECK(comm(bhat(4, {1, 0})) == SymElem::h(Partition{4}));
    // comm(Bhat_λ) is the product of the images of the parts
    for (int n = 1; n <= 6; ++n) {
        for (const auto& lambda : partitions(n)) {
            SymElem acc = SymElem::h(Partition{});
            for (int part : lambda.parts()) acc = product(acc, comm(bhat(part)));
            CHECK(comm(NSymElem::basis_element(NSymBasis::Bhat, Composition(lambda.parts()))) == acc);
        }
    }
}

TEST_CASE("generating sets") {
    for (auto [a, b] : {std::pair<int, int>{2, 3}, {1, 1}, {1, 0}}) {
        const RankReport r = generating_set_rank(a, b, 6);
        CHECK(r.full());
        CHECK(r.rows.size() == 6);
        CHECK(r.rows.back().nsym_dim == 32);
        CHECK(r.rows.back().sym_dim == 11);
    }
    CHECK_THROWS_AS(generating_set_rank(0, 1, 3), std::invalid_argument);
}
