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

#include "hopfscf/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopfscf {

namespace {

void check_element(int i) {
    if (i < 1 || i > kMaxElement) {
        throw std::out_of_range("index " + std::to_string(i) + " outside [1, " +
                                std::to_string(kMaxElement) + "]; the split-point bound is exceeded");
    }
}

}  // namespace

IndexSet::IndexSet(std::initializer_list<int> elements) {
    for (int i : elements) insert(i);
}

IndexSet::IndexSet(const std::vector<int>& elements) {
    for (int i : elements) insert(i);
}

IndexSet IndexSet::interval(int lo, int hi) {
    IndexSet s;
    if (hi < lo) return s;
    if (lo < 1) throw std::out_of_range("interval must start at a positive integer");
    for (int i = lo; i <= hi; ++i) s.insert(i);
    return s;
}

std::vector<int> IndexSet::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

int IndexSet::nth(int x) const {
    if (x < 1 || x > size()) {
        throw std::out_of_range("selection index " + std::to_string(x) + " outside a set of size " +
                                std::to_string(size()));
    }
    std::uint64_t b = bits_;
    for (int k = 1; k < x; ++k) b &= b - 1;
    return std::countr_zero(b);
}

IndexSet& IndexSet::insert(int i) {
    check_element(i);
    bits_ |= std::uint64_t{1} << i;
    return *this;
}

IndexSet& IndexSet::erase(int i) noexcept {
    if (i >= 1 && i <= kMaxElement) bits_ &= ~(std::uint64_t{1} << i);
    return *this;
}

IndexSet IndexSet::shifted(int offset) const {
    IndexSet out;
    for (int i : elements()) out.insert(i + offset);
    return out;
}

std::string IndexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i : elements()) {
        if (!first) os << ',';
        os << i;
        first = false;
    }
    os << '}';
    return os.str();
}

std::vector<IndexSet> subsets_of(IndexSet s) {
    // enumerate submasks in increasing order
    std::vector<IndexSet> out;
    const std::uint64_t full = s.bits();
    std::uint64_t sub = 0;
    while (true) {
        out.push_back(IndexSet::from_bits(sub));
        if (sub == full) break;
        sub = (sub - full) & full;
    }
    return out;
}

std::vector<IndexSet> k_subsets(int a, int b) {
    std::vector<IndexSet> out;
    if (b < 0 || b > a) return out;
    if (a > kMaxElement) check_element(a);
    std::vector<int> idx(static_cast<std::size_t>(b));
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
        out.emplace_back(idx);
        int pos = b - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == a - (b - 1 - pos)) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int k = pos + 1; k < b; ++k) idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
    }
    return out;
}

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
        size_ += p;
    }
}

Composition Composition::reversed() const {
    return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

std::string Composition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

SubsetLabel::SubsetLabel(int ambient, IndexSet members) : ambient_(ambient), members_(members) {
    if (ambient < 0) throw std::invalid_argument("ambient degree must be nonnegative");
    if (ambient - 1 > kMaxElement) {
        throw std::out_of_range("degree " + std::to_string(ambient) + " exceeds the split-point bound");
    }
    if (!members.subset_of(split_points(ambient))) {
        throw std::invalid_argument(members.to_string() + " is not a subset of [" + std::to_string(ambient - 1) +
                                    "]");
    }
}

Composition comp_of_set(IndexSet s, int n) { return comp_of_set(SubsetLabel(n, s)); }

Composition comp_of_set(const SubsetLabel& s) {
    std::vector<int> parts;
    if (s.ambient() == 0) return Composition{};
    int prev = 0;
    for (int x : s.members().elements()) {
        parts.push_back(x - prev);
        prev = x;
    }
    parts.push_back(s.ambient() - prev);
    return Composition(std::move(parts));
}

SubsetLabel set_of_comp(const Composition& alpha) {
    IndexSet s;
    int partial = 0;
    for (int i = 0; i + 1 < alpha.length(); ++i) {
        partial += alpha[i];
        s.insert(partial);
    }
    return SubsetLabel(alpha.size(), s);
}

Composition complement(const Composition& alpha) {
    const SubsetLabel s = set_of_comp(alpha);
    return comp_of_set(SubsetLabel(s.ambient(), split_points(s.ambient()) - s.members()));
}

Composition concat(const Composition& alpha, const Composition& beta) {
    std::vector<int> parts = alpha.parts();
    parts.insert(parts.end(), beta.begin(), beta.end());
    return Composition(std::move(parts));
}

Composition near_concat(const Composition& alpha, const Composition& beta) {
    if (alpha.empty()) return beta;
    if (beta.empty()) return alpha;
    std::vector<int> parts = alpha.parts();
    parts.back() += beta[0];
    parts.insert(parts.end(), beta.begin() + 1, beta.end());
    return Composition(std::move(parts));
}

bool refines(const Composition& alpha, const Composition& beta) {
    if (alpha.size() != beta.size()) return false;
    return set_of_comp(beta).members().subset_of(set_of_comp(alpha).members());
}

std::vector<Composition> compositions(int n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    for (IndexSet s : subsets_of(split_points(n))) out.push_back(comp_of_set(s, n));
    return out;
}

Composition RunDecomposition::lengths() const {
    std::vector<int> parts;
    parts.reserve(runs.size());
    for (IndexSet r : runs) parts.push_back(r.size());
    return Composition(std::move(parts));
}

RunDecomposition run_decomposition(IndexSet a) {
    RunDecomposition out;
    IndexSet current;
    int prev = -1;
    for (int x : a.elements()) {
        if (x != prev + 1 && !current.empty()) {
            out.runs.push_back(current);
            current = IndexSet{};
        }
        current.insert(x);
        prev = x;
    }
    if (!current.empty()) out.runs.push_back(current);
    return out;
}

RunMarkers run_markers(IndexSet a, int k) {
    const IndexSet ambient = IndexSet::range(k);
    if (!a.subset_of(ambient)) {
        throw std::invalid_argument(a.to_string() + " is not a subset of [" + std::to_string(k) + "]");
    }
    RunMarkers out;
    for (IndexSet r : run_decomposition(a).runs) out.c1.insert(r.max());
    for (IndexSet r : run_decomposition(ambient - a).runs) out.c2.insert(r.max());
    out.c1.erase(k);
    out.c2.erase(k);
    out.c = out.c1 | out.c2;
    return out;
}

IndexSet preshuffle(IndexSet i, IndexSet j, IndexSet a, int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("negative degree in preshuffle");
    if (m + n > kMaxElement) throw std::out_of_range("m + n exceeds the split-point bound");
    const IndexSet ambient = IndexSet::range(m + n);
    if (!a.subset_of(ambient) || a.size() != n) {
        throw std::invalid_argument("A = " + a.to_string() + " must be an " + std::to_string(n) +
                                    "-subset of [" + std::to_string(m + n) + "]");
    }
    if (!i.subset_of(split_points(m))) throw std::invalid_argument("I must be a subset of [m-1]");
    if (!j.subset_of(split_points(n))) throw std::invalid_argument("J must be a subset of [n-1]");

    const IndexSet ac = ambient - a;
    IndexSet out;
    for (int x : i.elements()) out.insert(ac.nth(x));
    for (int x : j.elements()) out.insert(a.nth(x));
    return out;
}

IndexSet a_shuffle(IndexSet i, IndexSet j, IndexSet a, int m, int n) {
    const IndexSet pre = preshuffle(i, j, a, m, n);
    if (m == 0) return j;
    if (n == 0) return i;
    const RunMarkers rm = run_markers(a, m + n);
    return rm.c1 | (pre - rm.c);
}

SubsetLabel preshuffle(const SubsetLabel& i, const SubsetLabel& j, IndexSet a) {
    const int m = i.ambient();
    const int n = j.ambient();
    return SubsetLabel(m + n, preshuffle(i.members(), j.members(), a, m, n));
}

SubsetLabel a_shuffle(const SubsetLabel& i, const SubsetLabel& j, IndexSet a) {
    const int m = i.ambient();
    const int n = j.ambient();
    return SubsetLabel(m + n, a_shuffle(i.members(), j.members(), a, m, n));
}

bool shuffle_admissible(IndexSet k, IndexSet pre, const RunMarkers& markers) {
    return (pre & markers.c).empty() && pre.subset_of(k) && k.subset_of(pre | markers.c);
}

namespace {

void overlap_rec(const std::vector<int>& a, std::size_t ia, const std::vector<int>& b, std::size_t ib,
                 std::vector<int>& prefix, Multiset<Composition>& out) {
    if (ia == a.size() && ib == b.size()) {
        ++out[Composition(prefix)];
        return;
    }
    if (ia < a.size()) {
        prefix.push_back(a[ia]);
        overlap_rec(a, ia + 1, b, ib, prefix, out);
        prefix.pop_back();
    }
    if (ib < b.size()) {
        prefix.push_back(b[ib]);
        overlap_rec(a, ia, b, ib + 1, prefix, out);
        prefix.pop_back();
    }
    if (ia < a.size() && ib < b.size()) {
        prefix.push_back(a[ia] + b[ib]);
        overlap_rec(a, ia + 1, b, ib + 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

Multiset<Composition> overlapping_shuffles(const Composition& alpha, const Composition& beta) {
    Multiset<Composition> out;
    std::vector<int> prefix;
    overlap_rec(alpha.parts(), 0, beta.parts(), 0, prefix, out);
    return out;
}

SubsetLabel descent_set(const Word& w) {
    IndexSet d;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1]) d.insert(static_cast<int>(i) + 1);
    }
    return SubsetLabel(static_cast<int>(w.size()), d);
}

Word standardize(const Word& w) {
    std::vector<std::size_t> order(w.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return w[x] < w[y]; });
    Word out(w.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) out[order[rank]] = static_cast<int>(rank) + 1;
    return out;
}

Word shuffle_at(const Word& u, const Word& v, IndexSet a) {
    const int total = static_cast<int>(u.size() + v.size());
    if (a.size() != static_cast<int>(v.size()) || !a.subset_of(IndexSet::range(total))) {
        throw std::invalid_argument("shuffle positions do not match the word lengths");
    }
    Word out;
    out.reserve(static_cast<std::size_t>(total));
    std::size_t iu = 0;
    std::size_t iv = 0;
    for (int pos = 1; pos <= total; ++pos) out.push_back(a.contains(pos) ? v[iv++] : u[iu++]);
    return out;
}

Multiset<Word> shifted_shuffle(const Word& u, const Word& v, int m) {
    Word shifted = v;
    for (int& x : shifted) x += m;
    Multiset<Word> out;
    const int total = static_cast<int>(u.size() + v.size());
    for (IndexSet a : k_subsets(total, static_cast<int>(v.size()))) ++out[shuffle_at(u, shifted, a)];
    return out;
}

Word descent_representative(const SubsetLabel& i) {
    const int n = i.ambient();
    Word w(static_cast<std::size_t>(n));
    // ascending runs are the blocks between consecutive descents
    std::vector<std::pair<int, int>> blocks;
    int start = 1;
    for (int d : i.members().elements()) {
        blocks.emplace_back(start, d);
        start = d + 1;
    }
    if (n > 0) blocks.emplace_back(start, n);
    int next = 1;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        for (int pos = it->first; pos <= it->second; ++pos) w[static_cast<std::size_t>(pos - 1)] = next++;
    }
    return w;
}

std::vector<Word> permutations_with_descents(const SubsetLabel& i) {
    Word w(static_cast<std::size_t>(i.ambient()));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Word> out;
    do {
        if (descent_set(w) == i) out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    bool wide = false;
    for (int x : w) wide = wide || x > 9;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (wide && k) os << ' ';
        os << w[k];
    }
    return os.str();
}

}  // namespace hopfscf
