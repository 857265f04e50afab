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

#include <algorithm>
#include <numeric>

#include "hopfscf/combinatorics.hpp"

using namespace hopfscf;

namespace {

// Binomial coefficient with plain integers; small arguments only.
long long binom(int a, int b) {
    long long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

// Descent set of the concatenation-by-positions word, computed letter by letter.
IndexSet descents(const Word& w) {
    IndexSet d;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1]) d.insert(static_cast<int>(i) + 1);
    }
    return d;
}

}  // namespace

TEST_CASE("IndexSet basics") {
    IndexSet s{1, 3, 4};
    CHECK(s.size() == 3);
    CHECK(s.min() == 1);
    CHECK(s.max() == 4);
    CHECK(s.nth(2) == 3);
    CHECK(s.to_string() == "{1,3,4}");
    CHECK(IndexSet::interval(3, 2).empty());
    CHECK(IndexSet::range(4) == IndexSet{1, 2, 3, 4});
    CHECK_THROWS_AS(IndexSet{64}, std::out_of_range);
    CHECK_THROWS_AS(IndexSet{0}, std::out_of_range);
    CHECK(s.shifted(2) == IndexSet{3, 5, 6});
    CHECK(subsets_of(IndexSet{2, 5}).size() == 4);
    CHECK(k_subsets(5, 2).size() == 10);
}

TEST_CASE("composition and subset bijection") {
    CHECK(comp_of_set(SubsetLabel(6, {1, 4})) == Composition{1, 3, 2});
    CHECK(comp_of_set(SubsetLabel(5, {})) == Composition{5});
    CHECK(comp_of_set(SubsetLabel(5, {1, 2, 3, 4})) == Composition{1, 1, 1, 1, 1});
    CHECK(comp_of_set(SubsetLabel(0, {})).empty());
    CHECK(set_of_comp(Composition{1, 3, 2}) == SubsetLabel(6, {1, 4}));
    CHECK(set_of_comp(Composition{1, 1, 1}) == SubsetLabel(3, {1, 2}));
    CHECK_THROWS(SubsetLabel(3, {3}));
    for (int n = 0; n <= 7; ++n) {
        const auto comps = compositions(n);
        CHECK(comps.size() == (n == 0 ? 1U : (1U << (n - 1))));
        for (const auto& a : comps) {
            CHECK(a.size() == n);
            CHECK(comp_of_set(set_of_comp(a)) == a);
            CHECK(complement(complement(a)) == a);
        }
    }
}

TEST_CASE("complement, concatenation, refinement") {
    // {1,4} in [5] has complement {2,3,5}
    CHECK(complement(Composition{1, 3, 2}) == comp_of_set(SubsetLabel(6, {2, 3, 5})));
    CHECK(complement(Composition{1, 3, 2}) == Composition{2, 1, 2, 1});
    CHECK(complement(Composition{4}) == Composition{1, 1, 1, 1});
    CHECK(complement(Composition{}).empty());
    CHECK(near_concat(Composition{1, 1}, Composition{2, 2}) == Composition{1, 3, 2});
    CHECK(near_concat(Composition{1, 3, 1}, Composition{1}) == Composition{1, 3, 2});
    CHECK(near_concat(Composition{}, Composition{1, 3, 2}) == Composition{1, 3, 2});
    CHECK(near_concat(Composition{2}, Composition{}) == Composition{2});
    CHECK(concat(Composition{1}, Composition{2, 1}) == Composition{1, 2, 1});
    CHECK(refines(Composition{1, 1, 2}, Composition{2, 2}));
    CHECK_FALSE(refines(Composition{2, 2}, Composition{1, 1, 2}));
    CHECK_FALSE(refines(Composition{1, 2, 1}, Composition{2, 2}));
    CHECK(Composition{1, 2}.reversed() == Composition{2, 1});
}

TEST_CASE("run decomposition and markers") {
    const auto rd = run_decomposition(IndexSet{1, 2, 5, 7, 8, 9});
    REQUIRE(rd.runs.size() == 3);
    CHECK(rd.runs[0] == IndexSet{1, 2});
    CHECK(rd.lengths() == Composition{2, 1, 3});

    auto rm = run_markers(IndexSet{1, 2, 5, 7, 8, 9}, 9);
    CHECK(rm.c1 == IndexSet{2, 5});
    CHECK(rm.c2 == IndexSet{4, 6});
    CHECK(rm.c == IndexSet{2, 4, 5, 6});

    rm = run_markers(IndexSet{1, 3, 4}, 7);
    CHECK(rm.c1 == IndexSet{1, 4});
    CHECK(rm.c2 == IndexSet{2});

    // A^c = [k] is a single run whose maximum is k itself
    rm = run_markers(IndexSet{}, 5);
    CHECK(rm.c1.empty());
    CHECK(rm.c2.empty());
    rm = run_markers(IndexSet{5}, 5);
    CHECK(rm.c2 == IndexSet{4});

    // i is a marker iff exactly one of i, i+1 lies in A
    for (int k = 1; k <= 8; ++k) {
        for (IndexSet a : subsets_of(IndexSet::range(k))) {
            const auto mk = run_markers(a, k);
            CHECK((mk.c1 & mk.c2).empty());
            for (int i = 1; i < k; ++i) CHECK(mk.c.contains(i) == (a.contains(i) != a.contains(i + 1)));
        }
    }
}

TEST_CASE("preshuffle and A-shuffle examples") {
    CHECK(preshuffle(IndexSet{2, 3}, IndexSet{2}, IndexSet{1, 3, 4}, 4, 3) == IndexSet{3, 5, 6});
    CHECK(a_shuffle(IndexSet{2, 3}, IndexSet{2}, IndexSet{1, 3, 4}, 4, 3) == IndexSet{1, 3, 4, 5, 6});
    CHECK(preshuffle(IndexSet{1}, IndexSet{2}, IndexSet{1, 2, 3}, 2, 3) == IndexSet{2, 4});
    CHECK(preshuffle(IndexSet{}, IndexSet{}, IndexSet{2, 5}, 3, 2).empty());
    CHECK(a_shuffle(IndexSet{}, IndexSet{}, IndexSet{2}, 1, 1).empty());
    CHECK(a_shuffle(IndexSet{}, IndexSet{}, IndexSet{1}, 1, 1) == IndexSet{1});
    for (int n = 1; n <= 4; ++n) {
        for (int m = 1; m <= 4; ++m) {
            CHECK(a_shuffle(IndexSet{}, IndexSet{}, IndexSet::range(n), m, n) == IndexSet{n});
        }
    }
    CHECK(a_shuffle(IndexSet{}, IndexSet{1, 2}, IndexSet{1, 2, 3}, 0, 3) == IndexSet{1, 2});
    CHECK(a_shuffle(IndexSet{1}, IndexSet{}, IndexSet{}, 3, 0) == IndexSet{1});
    CHECK_THROWS_AS(preshuffle(IndexSet{}, IndexSet{}, IndexSet{1, 2}, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(preshuffle(IndexSet{2}, IndexSet{}, IndexSet{1}, 2, 1), std::invalid_argument);
}

TEST_CASE("preshuffle size and range") {
    for (int m = 1; m <= 4; ++m) {
        for (int n = 1; n <= 4; ++n) {
            for (IndexSet i : subsets_of(split_points(m))) {
                for (IndexSet j : subsets_of(split_points(n))) {
                    for (IndexSet a : k_subsets(m + n, n)) {
                        const IndexSet p = preshuffle(i, j, a, m, n);
                        CHECK(p.size() == i.size() + j.size());
                        CHECK(p.subset_of(split_points(m + n)));
                    }
                }
            }
        }
    }
}

TEST_CASE("A-shuffle reproduces descents of shuffled words") {
    // Exhaustive over m + n <= 7, using the default representatives.
    for (int m = 1; m <= 6; ++m) {
        for (int n = 1; m + n <= 7; ++n) {
            for (IndexSet i : subsets_of(split_points(m))) {
                const Word u = descent_representative(SubsetLabel(m, i));
                REQUIRE(descents(u) == i);
                for (IndexSet j : subsets_of(split_points(n))) {
                    Word v = descent_representative(SubsetLabel(n, j));
                    for (int& x : v) x += m;
                    for (IndexSet a : k_subsets(m + n, n)) {
                        CHECK(descents(shuffle_at(u, v, a)) == a_shuffle(i, j, a, m, n));
                    }
                }
            }
        }
    }
}

TEST_CASE("descent representatives") {
    CHECK(descent_representative(SubsetLabel(4, {2, 3})) == Word{3, 4, 2, 1});
    CHECK(descent_set(Word{1, 4, 3, 2}) == SubsetLabel(4, {2, 3}));
    CHECK(standardize(Word{3, 1, 2}) == Word{3, 1, 2});
    CHECK(standardize(Word{7, 2, 9}) == Word{2, 1, 3});
    CHECK(standardize(Word{5, 5, 1}) == Word{2, 3, 1});
    for (int n = 1; n <= 6; ++n) {
        std::size_t total = 0;
        for (IndexSet i : subsets_of(split_points(n))) {
            const auto perms = permutations_with_descents(SubsetLabel(n, i));
            for (const auto& w : perms) CHECK(descents(w) == i);
            total += perms.size();
        }
        long long fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        CHECK(static_cast<long long>(total) == fact);
    }
}

TEST_CASE("shifted shuffle") {
    const auto s = shifted_shuffle(Word{1, 2}, Word{2, 1}, 2);
    Multiset<Word> expected;
    for (const Word& w : {Word{1, 2, 4, 3}, Word{1, 4, 2, 3}, Word{1, 4, 3, 2}, Word{4, 1, 2, 3}, Word{4, 1, 3, 2},
                          Word{4, 3, 1, 2}}) {
        expected[w] = 1;
    }
    CHECK(s == expected);
    CHECK(word_to_string(Word{1, 4, 3, 2}) == "1432");
    for (int a = 0; a <= 4; ++a) {
        for (int b = 0; b <= 4; ++b) {
            Word u(static_cast<std::size_t>(a));
            Word v(static_cast<std::size_t>(b));
            std::iota(u.begin(), u.end(), 1);
            std::iota(v.begin(), v.end(), 1);
            std::reverse(v.begin(), v.end());
            const auto sh = shifted_shuffle(u, v, a);
            CHECK(static_cast<long long>(sh.size()) == binom(a + b, b));
        }
    }
}

TEST_CASE("overlapping shuffles") {
    auto s = overlapping_shuffles(Composition{1}, Composition{1});
    CHECK(s.size() == 2);
    CHECK(s[Composition{1, 1}] == 2);
    CHECK(s[Composition{2}] == 1);
    s = overlapping_shuffles(Composition{}, Composition{1, 3, 2});
    CHECK(s.size() == 1);
    CHECK(s[Composition{1, 3, 2}] == 1);
    // Total count: sum over the number k of fused pairs of binom(a+b-k, k, a-k, b-k).
    for (int a = 0; a <= 4; ++a) {
        for (int b = 0; b <= 4; ++b) {
            Composition alpha(std::vector<int>(static_cast<std::size_t>(a), 1));
            Composition beta(std::vector<int>(static_cast<std::size_t>(b), 2));
            long long total = 0;
            for (const auto& [g, mult] : overlapping_shuffles(alpha, beta)) total += mult;
            long long expected = 0;
            for (int k = 0; k <= std::min(a, b); ++k) expected += binom(a + b - k, k) * binom(a + b - 2 * k, a - k);
            CHECK(total == expected);
        }
    }
}
