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

#include "hopfscf/nsym.hpp"

#include <map>
#include <stdexcept>

namespace hopfscf {

std::string to_string(NSymBasis b) {
    switch (b) {
        case NSymBasis::H: return "H";
        case NSymBasis::Lambda: return "Lambda";
        case NSymBasis::R: return "R";
        case NSymBasis::Estar: return "Estar";
        case NSymBasis::B: return "B";
        case NSymBasis::Bhat: return "Bhat";
    }
    return "?";
}

std::optional<NSymBasis> parse_nsym_basis(std::string_view tag) {
    if (tag == "H") return NSymBasis::H;
    if (tag == "Lambda") return NSymBasis::Lambda;
    if (tag == "R") return NSymBasis::R;
    if (tag == "Estar") return NSymBasis::Estar;
    if (tag == "B") return NSymBasis::B;
    if (tag == "Bhat") return NSymBasis::Bhat;
    return std::nullopt;
}

namespace {

bool uses_params(NSymBasis b) { return b == NSymBasis::B || b == NSymBasis::Bhat; }

BasisParams effective(NSymBasis b, const BasisParams& p) { return uses_params(b) ? p : BasisParams{}; }

ScalarQT sign(int exponent) { return (exponent & 1) == 0 ? 1 : -1; }

FormalSum<Composition> to_H(NSymBasis basis, const Composition& alpha, const BasisParams& params) {
    switch (basis) {
        case NSymBasis::H: return FormalSum<Composition>(alpha, 1);
        case NSymBasis::Lambda:
        case NSymBasis::R:
        case NSymBasis::Estar: return classic_to_H(basis, alpha);
        case NSymBasis::B: return b_to_H(alpha, params);
        case NSymBasis::Bhat: return b_to_H(complement(alpha), params);
    }
    throw std::logic_error("unknown NSym basis");
}

FormalSum<Composition> from_H(NSymBasis basis, const Composition& alpha, const BasisParams& params) {
    const int n = alpha.size();
    const IndexSet full = split_points(n);
    const IndexSet k = set_of_comp(alpha).members();
    FormalSum<Composition> out;
    if (n == 0 && !uses_params(basis)) return FormalSum<Composition>(alpha, 1);
    switch (basis) {
        case NSymBasis::H: return FormalSum<Composition>(alpha, 1);
        case NSymBasis::Lambda:
            for (IndexSet extra : subsets_of(full - k)) {
                const IndexSet j = k | extra;
                out.add(comp_of_set(j, n), sign((n - 1) - j.size()));
            }
            return out;
        case NSymBasis::Estar:
            for (IndexSet extra : subsets_of(full - k)) out.add(comp_of_set(k | extra, n), 1);
            return out;
        case NSymBasis::R:
            for (IndexSet j : subsets_of(k)) out.add(comp_of_set(j, n), 1);
            return out;
        case NSymBasis::B: return H_to_B(alpha, params);
        case NSymBasis::Bhat:
            for (const auto& [beta, c] : H_to_B(alpha, params)) out.add(complement(beta), c);
            return out;
    }
    throw std::logic_error("unknown NSym basis");
}

using LabelCache = std::map<Composition, FormalSum<Composition>>;

const FormalSum<Composition>& relabel_cached(NSymBasis from, const BasisParams& pf, NSymBasis to,
                                             const BasisParams& pt, const Composition& alpha, LabelCache& cache) {
    if (auto it = cache.find(alpha); it != cache.end()) return it->second;
    FormalSum<Composition> out;
    if (from == to && (!uses_params(from) || pf == pt)) {
        out.add(alpha, 1);
    } else {
        for (const auto& [beta, c] : to_H(from, alpha, pf)) out += from_H(to, beta, pt) * c;
    }
    return cache.emplace(alpha, std::move(out)).first->second;
}

}  // namespace

// ---------------------------------------------------------------------------
// Transition formulas

FormalSum<Composition> b_to_H(const Composition& alpha, const BasisParams& params) {
    const int n = alpha.size();
    const IndexSet full = split_points(n);
    const IndexSet i = set_of_comp(alpha).members();
    FormalSum<Composition> out;
    for (IndexSet inner : subsets_of(i)) {
        const IndexSet j = (full - i) | inner;
        out.add(comp_of_set(j, n), params.a.pow((i - j).size()) * params.b.pow((i & j).size()));
    }
    return out;
}

ScalarQT inverse_entry(IndexSet i, IndexSet j, int n, const BasisParams& params) {
    if (!(i & j).empty()) return 0;
    if (n <= 0) return 1;
    if (params.a.is_zero()) throw std::domain_error("the B(a,b) basis degenerates at a = 0");
    return params.a.pow(j.size() - (n - 1)) * (-params.b).pow((n - 1) - i.size() - j.size());
}

FormalSum<Composition> H_to_B(const Composition& alpha, const BasisParams& params) {
    const int n = alpha.size();
    const IndexSet j = set_of_comp(alpha).members();
    FormalSum<Composition> out;
    // H_{comp(J)} = Σ_I N_{I,J} B_{comp(I)}, with N_{I,J} = 0 unless I ∩ J = ∅
    for (IndexSet i : subsets_of(split_points(n) - j)) out.add(comp_of_set(i, n), inverse_entry(i, j, n, params));
    return out;
}

FormalSum<Composition> classic_to_H(NSymBasis basis, const Composition& alpha) {
    const int n = alpha.size();
    const IndexSet full = split_points(n);
    const IndexSet k = set_of_comp(alpha).members();
    FormalSum<Composition> out;
    if (n == 0) return FormalSum<Composition>(alpha, 1);
    switch (basis) {
        case NSymBasis::Lambda:
            for (IndexSet extra : subsets_of(full - k)) {
                const IndexSet j = k | extra;
                out.add(comp_of_set(j, n), sign((n - 1) - j.size()));
            }
            break;
        case NSymBasis::Estar:
            for (IndexSet extra : subsets_of(full - k)) out.add(comp_of_set(k | extra, n), sign(extra.size()));
            break;
        case NSymBasis::R:
            for (IndexSet j : subsets_of(k)) out.add(comp_of_set(j, n), sign((k - j).size()));
            break;
        default: throw std::invalid_argument("classic_to_H expects Lambda, R or Estar");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Elements

NSymElem::NSymElem(NSymBasis basis, BasisParams params) : basis_(basis), params_(effective(basis, params)) {}

NSymElem::NSymElem(NSymBasis basis, FormalSum<Composition> terms, BasisParams params)
    : basis_(basis), params_(effective(basis, params)), terms_(std::move(terms)) {}

NSymElem NSymElem::basis_element(NSymBasis basis, const Composition& alpha, BasisParams params) {
    return NSymElem(basis, FormalSum<Composition>(alpha, 1), std::move(params));
}

NSymElem& NSymElem::operator+=(const NSymElem& o) {
    terms_ += convert(o, basis_, params_).terms_;
    return *this;
}

NSymElem& NSymElem::operator-=(const NSymElem& o) {
    terms_ -= convert(o, basis_, params_).terms_;
    return *this;
}

NSymElem& NSymElem::operator*=(const ScalarQT& c) {
    terms_ *= c;
    return *this;
}

bool operator==(const NSymElem& a, const NSymElem& b) {
    if (a.basis_ == b.basis_ && a.params_ == b.params_) return a.terms_ == b.terms_;
    return convert(a, NSymBasis::H).terms_ == convert(b, NSymBasis::H).terms_;
}

bool operator==(const NSymTensor& a, const NSymTensor& b) {
    if (a.basis == b.basis && a.params == b.params) return a.terms == b.terms;
    return convert(a, NSymBasis::H).terms == convert(b, NSymBasis::H).terms;
}

NSymElem convert(const NSymElem& x, NSymBasis target, const BasisParams& params) {
    const BasisParams pt = effective(target, params);
    if (x.basis() == target && x.params() == pt) return x;
    LabelCache cache;
    FormalSum<Composition> out;
    for (const auto& [alpha, c] : x.terms()) {
        out += relabel_cached(x.basis(), x.params(), target, pt, alpha, cache) * c;
    }
    return NSymElem(target, std::move(out), pt);
}

NSymTensor convert(const NSymTensor& x, NSymBasis target, const BasisParams& params) {
    const BasisParams pt = effective(target, params);
    if (x.basis == target && x.params == pt) return x;
    LabelCache cache;
    NSymTensor out{target, pt, {}};
    for (const auto& [pair, c] : x.terms) {
        const auto& left = relabel_cached(x.basis, x.params, target, pt, pair.first, cache);
        const auto& right = relabel_cached(x.basis, x.params, target, pt, pair.second, cache);
        for (const auto& [a, ca] : left) {
            for (const auto& [b, cb] : right) out.terms.add({a, b}, c * ca * cb);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hopf structure

NSymElem product(const NSymElem& x, const NSymElem& y) {
    const bool same = x.basis() == y.basis() && x.params() == y.params();
    if (same && (x.basis() == NSymBasis::H || x.basis() == NSymBasis::B || x.basis() == NSymBasis::Bhat)) {
        FormalSum<Composition> out;
        for (const auto& [a, ca] : x.terms()) {
            for (const auto& [b, cb] : y.terms()) {
                out.add(x.basis() == NSymBasis::B ? near_concat(a, b) : concat(a, b), ca * cb);
            }
        }
        return NSymElem(x.basis(), std::move(out), x.params());
    }
    const NSymElem p = product(convert(x, NSymBasis::H), convert(y, NSymBasis::H));
    return same ? convert(p, x.basis(), x.params()) : p;
}

namespace {

void split_parts(const std::vector<int>& parts, std::size_t pos, std::vector<int>& left, std::vector<int>& right,
                 const ScalarQT& c, FormalSum<CompPair>& out) {
    if (pos == parts.size()) {
        out.add({Composition(left), Composition(right)}, c);
        return;
    }
    for (int i = 0; i <= parts[pos]; ++i) {
        if (i > 0) left.push_back(i);
        if (i < parts[pos]) right.push_back(parts[pos] - i);
        split_parts(parts, pos + 1, left, right, c, out);
        if (i > 0) left.pop_back();
        if (i < parts[pos]) right.pop_back();
    }
}

}  // namespace

NSymTensor coproduct(const NSymElem& x) {
    NSymTensor h{NSymBasis::H, {}, {}};
    const NSymElem xh = convert(x, NSymBasis::H);
    for (const auto& [alpha, c] : xh.terms()) {
        std::vector<int> left;
        std::vector<int> right;
        split_parts(alpha.parts(), 0, left, right, c, h.terms);
    }
    return convert(h, x.basis(), x.params());
}

ScalarQT structconst(IndexSet k, IndexSet i, int m, IndexSet j, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("negative degree in structconst");
    if (!k.subset_of(split_points(m + n))) throw std::invalid_argument("K must be a subset of [m+n-1]");
    if (!i.subset_of(split_points(m))) throw std::invalid_argument("I must be a subset of [m-1]");
    if (!j.subset_of(split_points(n))) throw std::invalid_argument("J must be a subset of [n-1]");
    const ScalarQT q = ScalarQT::q();
    const ScalarQT t = ScalarQT::t();
    ScalarQT sum;
    for (IndexSet a : k_subsets(m + n, n)) {
        const IndexSet pre = preshuffle(i, j, a, m, n);
        const RunMarkers rm = run_markers(a, m + n);
        if (!shuffle_admissible(k, pre, rm)) continue;
        sum += (q + t).pow((k & rm.c2).size()) * t.pow((k - rm.c2).size());
    }
    return sum * t.pow(-(i.size() + j.size()));
}

std::vector<StructConstRow> structconst_table(int k, IndexSet big_k, std::optional<int> only_m) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (!big_k.subset_of(split_points(k))) {
        throw std::invalid_argument(big_k.to_string() + " is not a subset of [" + std::to_string(k - 1) + "]");
    }
    std::vector<StructConstRow> rows;
    for (int m = 0; m <= k; ++m) {
        if (only_m && *only_m != m) continue;
        const int n = k - m;
        for (IndexSet i : subsets_of(split_points(m))) {
            for (IndexSet j : subsets_of(split_points(n))) {
                ScalarQT v = structconst(big_k, i, m, j, n);
                if (!v.is_zero()) rows.push_back({m, i, j, std::move(v)});
            }
        }
    }
    return rows;
}

std::vector<BhatCoproductTerm> coproduct_bhat_terms(int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    const ScalarQT q = ScalarQT::q();
    const ScalarQT t = ScalarQT::t();
    const IndexSet full = IndexSet::range(k);
    std::vector<BhatCoproductTerm> out;
    for (IndexSet a : subsets_of(full)) {
        const RunMarkers rm = run_markers(a, k);
        out.push_back({a, (q + t).pow(rm.c2.size()) * t.pow(rm.c1.size()), run_decomposition(a).lengths(),
                       run_decomposition(full - a).lengths()});
    }
    return out;
}

NSymTensor coproduct_bhat_n(int k) {
    NSymTensor out{NSymBasis::Bhat, {}, {}};
    for (const auto& term : coproduct_bhat_terms(k)) out.terms.add({term.left, term.right}, term.coeff);
    return out;
}

NSymElem omega(const NSymElem& x) {
    FormalSum<Composition> out;
    const NSymElem xh = convert(x, NSymBasis::H);
    for (const auto& [alpha, c] : xh.terms()) out.add(alpha.reversed(), c);
    return NSymElem(NSymBasis::Lambda, std::move(out));
}

ScalarQT pairing(const NSymElem& f, const QSymElem& x) {
    const NSymElem h = convert(f, NSymBasis::H);
    const QSymElem m = convert(x, QSymBasis::M);
    ScalarQT sum;
    for (const auto& [alpha, c] : h.terms()) sum += c * m.terms().coefficient(alpha);
    return sum;
}

NSymElem specialize(const NSymElem& x, const ScalarQT& q0, const ScalarQT& t0) {
    FormalSum<Composition> out;
    for (const auto& [alpha, c] : x.terms()) out.add(alpha, substitute(c, q0, t0));
    BasisParams p{substitute(x.params().a, q0, t0), substitute(x.params().b, q0, t0)};
    return NSymElem(x.basis(), std::move(out), p);
}

std::string to_string(const NSymElem& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [a, c] : x.terms()) {
        if (!out.empty()) out += " + ";
        std::string coeff = c.to_string();
        if (coeff.find(' ') != std::string::npos) coeff = "(" + coeff + ")";
        if (coeff != "1") out += coeff + "*";
        out += to_string(x.basis()) + a.to_string();
    }
    return out;
}

}  // namespace hopfscf
