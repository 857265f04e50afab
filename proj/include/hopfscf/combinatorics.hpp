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

#ifndef HOPFSCF_COMBINATORICS_HPP
#define HOPFSCF_COMBINATORICS_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace hopfscf {

/// Largest positive integer an IndexSet can hold. Subsets of [n-1] therefore
/// support degrees n <= 64, and the shuffle index sets A ⊆ [m+n] need m+n <= 63.
inline constexpr int kMaxElement = 63;

/**
 * A finite set of positive integers in [1, kMaxElement], stored as a bit set
 * (element i lives in bit i). Inserting anything outside that range throws
 * std::out_of_range rather than wrapping.
 */
class IndexSet {
   public:
    constexpr IndexSet() noexcept = default;
    IndexSet(std::initializer_list<int> elements);
    explicit IndexSet(const std::vector<int>& elements);

    static constexpr IndexSet from_bits(std::uint64_t bits) noexcept {
        IndexSet s;
        s.bits_ = bits & ~std::uint64_t{1};
        return s;
    }
    /// {lo, lo+1, ..., hi}; empty when hi < lo.
    static IndexSet interval(int lo, int hi);
    /// [n] = {1, ..., n}.
    static IndexSet range(int n) { return interval(1, n); }

    [[nodiscard]] constexpr std::uint64_t bits() const noexcept { return bits_; }
    [[nodiscard]] constexpr bool contains(int i) const noexcept {
        return i >= 1 && i <= kMaxElement && ((bits_ >> i) & 1U);
    }
    [[nodiscard]] constexpr int size() const noexcept { return std::popcount(bits_); }
    [[nodiscard]] constexpr bool empty() const noexcept { return bits_ == 0; }
    /// Largest element; 0 for the empty set.
    [[nodiscard]] int max() const noexcept { return empty() ? 0 : 63 - std::countl_zero(bits_); }
    /// Smallest element; 0 for the empty set.
    [[nodiscard]] int min() const noexcept { return empty() ? 0 : std::countr_zero(bits_); }
    [[nodiscard]] std::vector<int> elements() const;
    /// The x-th smallest element, 1-based.
    [[nodiscard]] int nth(int x) const;

    IndexSet& insert(int i);
    IndexSet& erase(int i) noexcept;

    /// Every element moved by `offset`; throws if an element leaves [1, kMaxElement].
    [[nodiscard]] IndexSet shifted(int offset) const;
    [[nodiscard]] constexpr bool subset_of(IndexSet other) const noexcept {
        return (bits_ & ~other.bits_) == 0;
    }

    friend constexpr IndexSet operator|(IndexSet a, IndexSet b) noexcept {
        return from_bits(a.bits_ | b.bits_);
    }
    friend constexpr IndexSet operator&(IndexSet a, IndexSet b) noexcept {
        return from_bits(a.bits_ & b.bits_);
    }
    friend constexpr IndexSet operator-(IndexSet a, IndexSet b) noexcept {
        return from_bits(a.bits_ & ~b.bits_);
    }
    friend constexpr bool operator==(IndexSet a, IndexSet b) noexcept = default;
    friend constexpr auto operator<=>(IndexSet a, IndexSet b) noexcept { return a.bits_ <=> b.bits_; }

    /// "{1,3,4}"
    [[nodiscard]] std::string to_string() const;

   private:
    std::uint64_t bits_ = 0;
};

/// All subsets of `s`, in increasing bit order (the empty set first).
std::vector<IndexSet> subsets_of(IndexSet s);
/// All b-element subsets of [a], i.e. binom([a], b).
std::vector<IndexSet> k_subsets(int a, int b);

/// A finite sequence of positive integers.
class Composition {
   public:
    Composition() = default;
    Composition(std::initializer_list<int> parts);
    explicit Composition(std::vector<int> parts);

    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    [[nodiscard]] int size() const noexcept { return size_; }
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    [[nodiscard]] int operator[](int i) const { return parts_.at(static_cast<std::size_t>(i)); }
    [[nodiscard]] auto begin() const noexcept { return parts_.begin(); }
    [[nodiscard]] auto end() const noexcept { return parts_.end(); }

    /// α^r
    [[nodiscard]] Composition reversed() const;
    /// "(1,3,2)"; the empty composition prints as "()".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

   private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// A subset of [ambient-1] together with its ambient degree; in bijection with
/// the compositions of `ambient`.
class SubsetLabel {
   public:
    SubsetLabel() = default;
    SubsetLabel(int ambient, IndexSet members);

    [[nodiscard]] int ambient() const noexcept { return ambient_; }
    [[nodiscard]] IndexSet members() const noexcept { return members_; }

    friend bool operator==(const SubsetLabel&, const SubsetLabel&) = default;
    friend auto operator<=>(const SubsetLabel&, const SubsetLabel&) = default;

   private:
    int ambient_ = 0;
    IndexSet members_;
};

/// [n-1] as an IndexSet (empty for n <= 1).
inline IndexSet split_points(int n) { return IndexSet::interval(1, n - 1); }

Composition comp_of_set(const SubsetLabel& s);
Composition comp_of_set(IndexSet s, int n);
SubsetLabel set_of_comp(const Composition& alpha);
/// α^c = comp([n-1] \ set(α)).
Composition complement(const Composition& alpha);
/// α·β
Composition concat(const Composition& alpha, const Composition& beta);
/// α ⊙ β = (α_1, ..., α_l + β_1, β_2, ..., β_k); an empty side acts as a unit.
Composition near_concat(const Composition& alpha, const Composition& beta);
/// True when α refines β, i.e. set(β) ⊆ set(α) (same size required).
bool refines(const Composition& alpha, const Composition& beta);
/// All compositions of n, ordered by their split-point sets.
std::vector<Composition> compositions(int n);

/// Maximal runs of consecutive integers in A, sorted by minimum.
struct RunDecomposition {
    std::vector<IndexSet> runs;
    /// (|A_1|, |A_2|, ...)
    [[nodiscard]] Composition lengths() const;
};
RunDecomposition run_decomposition(IndexSet a);

struct RunMarkers {
    IndexSet c1;  ///< maxima of runs of A, minus k
    IndexSet c2;  ///< maxima of runs of [k] \ A, minus k
    IndexSet c;   ///< c1 ∪ c2
};
/// c_1, c_2 and c for A ⊆ [k].
RunMarkers run_markers(IndexSet a, int k);

/// (A^c)_I ⊔ A_J for I ⊆ [m-1], J ⊆ [n-1], A ∈ binom([m+n], n).
IndexSet preshuffle(IndexSet i, IndexSet j, IndexSet a, int m, int n);
/// c_1(A) ⊔ ((I #_A J) \ c(A)).
IndexSet a_shuffle(IndexSet i, IndexSet j, IndexSet a, int m, int n);
SubsetLabel preshuffle(const SubsetLabel& i, const SubsetLabel& j, IndexSet a);
SubsetLabel a_shuffle(const SubsetLabel& i, const SubsetLabel& j, IndexSet a);

/// Admissibility of A in the structure-constant sums: (I #_A J) ∩ c(A) = ∅ and
/// I #_A J ⊆ K ⊆ (I #_A J) ∪ c(A).
bool shuffle_admissible(IndexSet k, IndexSet pre, const RunMarkers& markers);

/// Multiset as label -> multiplicity.
template <typename Label>
using Multiset = std::map<Label, long long>;

/// Weights of all overlapping shuffles of α and β, with multiplicities
/// (the coefficients e^γ_{α,β} of M_α M_β).
Multiset<Composition> overlapping_shuffles(const Composition& alpha, const Composition& beta);

using Word = std::vector<int>;

SubsetLabel descent_set(const Word& w);
/// Relative order of the letters, as a permutation of [|w|]. Ties are broken left to right.
Word standardize(const Word& w);
/// u ⧢_A v: letters of v in the positions of A, letters of u elsewhere, both in order.
Word shuffle_at(const Word& u, const Word& v, IndexSet a);
/// u ⧢ v[m] as a multiset.
Multiset<Word> shifted_shuffle(const Word& u, const Word& v, int m);
/// The permutation of [n] with descent set I whose ascending runs, read right to
/// left, hold 1..n in increasing blocks (e.g. I = {2,3}, n = 4 gives 3421).
Word descent_representative(const SubsetLabel& i);
/// Every permutation of [n] with descent set I.
std::vector<Word> permutations_with_descents(const SubsetLabel& i);
std::string word_to_string(const Word& w);

}  // namespace hopfscf

#endif  // HOPFSCF_COMBINATORICS_HPP
