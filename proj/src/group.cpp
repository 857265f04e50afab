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

#include "hopfscf/group.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace hopfscf {

std::size_t max_group_order() {
    constexpr std::size_t kDefault = std::size_t{1} << 20;
    const char* env = std::getenv("HOPF_SCF_MAX_GROUP");
    if (env == nullptr || *env == '\0') return kDefault;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
        throw std::invalid_argument(std::string("HOPF_SCF_MAX_GROUP must be a positive integer, got \"") + env + "\"");
    }
    return static_cast<std::size_t>(v);
}

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec::GroupSpec(int nu, IndexSet index_set) : nu_(nu), index_set_(index_set), indices_(index_set.elements()) {
    if (nu < 2) throw std::invalid_argument("nu must be at least 2, got " + std::to_string(nu));
    const std::size_t bound = max_group_order();
    for (std::size_t p = 0; p < indices_.size(); ++p) {
        if (order_ > bound / static_cast<std::size_t>(nu)) {
            throw std::length_error("Q_S(" + std::to_string(nu) + ") with S = " + index_set.to_string() + " has " +
                                    std::to_string(nu) + "^" + std::to_string(indices_.size()) +
                                    " elements, above the enumeration bound " + std::to_string(bound) +
                                    " (set HOPF_SCF_MAX_GROUP to raise it)");
        }
        order_ *= static_cast<std::size_t>(nu);
    }
}

int GroupSpec::position(int s) const {
    if (!index_set_.contains(s)) {
        throw std::out_of_range("index " + std::to_string(s) + " is not in " + index_set_.to_string());
    }
    return (index_set_ & IndexSet::interval(1, s - 1)).size();
}

std::vector<int> GroupSpec::decode(std::size_t element) const {
    std::vector<int> coords(indices_.size());
    for (auto& c : coords) {
        c = static_cast<int>(element % static_cast<std::size_t>(nu_));
        element /= static_cast<std::size_t>(nu_);
    }
    return coords;
}

std::size_t GroupSpec::encode(const std::vector<int>& coords) const {
    if (coords.size() != indices_.size()) throw std::invalid_argument("coordinate vector has the wrong length");
    std::size_t out = 0;
    for (std::size_t p = coords.size(); p-- > 0;) {
        if (coords[p] < 0 || coords[p] >= nu_) throw std::out_of_range("coordinate outside Z/nu");
        out = out * static_cast<std::size_t>(nu_) + static_cast<std::size_t>(coords[p]);
    }
    return out;
}

IndexSet GroupSpec::support(std::size_t element) const {
    IndexSet out;
    for (int s : indices_) {
        if (element % static_cast<std::size_t>(nu_) != 0) out.insert(s);
        element /= static_cast<std::size_t>(nu_);
    }
    return out;
}

std::vector<IndexSet> GroupSpec::supports() const {
    std::vector<IndexSet> out(order_);
    for (std::size_t g = 0; g < order_; ++g) out[g] = support(g);
    return out;
}

std::size_t GroupSpec::representative(IndexSet i) const {
    if (!i.subset_of(index_set_)) throw std::invalid_argument(i.to_string() + " is not a subset of " + index_set_.to_string());
    std::vector<int> coords(indices_.size());
    for (std::size_t p = 0; p < indices_.size(); ++p) coords[p] = i.contains(indices_[p]) ? 1 : 0;
    return encode(coords);
}

std::size_t GroupSpec::inverse(std::size_t element) const {
    std::vector<int> coords = decode(element);
    for (int& c : coords) c = (nu_ - c) % nu_;
    return encode(coords);
}

std::string GroupSpec::to_string() const {
    return "Q_" + index_set_.to_string() + "(" + std::to_string(nu_) + ")";
}

// ---------------------------------------------------------------------------
// ClassFunction

ClassFunction::ClassFunction(GroupSpec spec) : spec_(spec), values_(spec.order()) {}

ClassFunction::ClassFunction(GroupSpec spec, std::vector<Rational> values) : spec_(spec), values_(std::move(values)) {
    if (values_.size() != spec_.order()) throw std::invalid_argument("value vector does not match " + spec_.to_string());
}

ClassFunction ClassFunction::constant(const GroupSpec& spec, const Rational& c) {
    return ClassFunction(spec, std::vector<Rational>(spec.order(), c));
}

bool ClassFunction::is_zero() const {
    for (const auto& v : values_) {
        if (v != 0) return false;
    }
    return true;
}

bool ClassFunction::is_superclass_function() const {
    std::map<IndexSet, const Rational*> seen;
    for (std::size_t g = 0; g < values_.size(); ++g) {
        auto [it, fresh] = seen.emplace(spec_.support(g), &values_[g]);
        if (!fresh && *it->second != values_[g]) return false;
    }
    return true;
}

void ClassFunction::require_same_spec(const ClassFunction& o) const {
    if (!(spec_ == o.spec_)) {
        throw std::invalid_argument("class functions live on different groups: " + spec_.to_string() + " vs " +
                                    o.spec_.to_string());
    }
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    require_same_spec(o);
    for (std::size_t g = 0; g < values_.size(); ++g) values_[g] += o.values_[g];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    require_same_spec(o);
    for (std::size_t g = 0; g < values_.size(); ++g) values_[g] -= o.values_[g];
    return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& c) {
    for (auto& v : values_) v *= c;
    return *this;
}

ClassFunction pointwise(const ClassFunction& a, const ClassFunction& b) {
    if (!(a.spec() == b.spec())) throw std::invalid_argument("pointwise product of functions on different groups");
    ClassFunction out(a.spec());
    for (std::size_t g = 0; g < a.spec().order(); ++g) out[g] = a[g] * b[g];
    return out;
}

// ---------------------------------------------------------------------------
// Basis functions

ClassFunction FactorVector::expand(const GroupSpec& spec) const {
    for (const auto& [s, f] : factors) {
        if (!spec.index_set().contains(s)) {
            throw std::invalid_argument("factor at index " + std::to_string(s) + " outside " + spec.to_string());
        }
    }
    std::vector<CoordFactor> per_position(spec.indices().size(), CoordFactor::one());
    for (std::size_t p = 0; p < per_position.size(); ++p) {
        if (auto it = factors.find(spec.indices()[p]); it != factors.end()) per_position[p] = it->second;
    }
    ClassFunction out(spec);
    for (std::size_t g = 0; g < spec.order(); ++g) {
        const std::vector<int> coords = spec.decode(g);
        Rational v = prefactor;
        for (std::size_t p = 0; p < coords.size() && v != 0; ++p) v *= per_position[p](coords[p]);
        out[g] = v;
    }
    return out;
}

namespace {

void require_subset(const GroupSpec& spec, IndexSet i) {
    if (!i.subset_of(spec.index_set())) {
        throw std::invalid_argument(i.to_string() + " is not a subset of " + spec.index_set().to_string());
    }
}

}  // namespace

FactorVector kappa_factors(const GroupSpec& spec, IndexSet i) {
    require_subset(spec, i);
    FactorVector out;
    for (int s : spec.indices()) {
        out.factors[s] = i.contains(s) ? CoordFactor::one_minus_reg_over_nu() : CoordFactor::reg_over_nu();
    }
    return out;
}

FactorVector chi_factors(const GroupSpec& spec, IndexSet i) {
    require_subset(spec, i);
    FactorVector out;
    for (int s : spec.indices()) {
        out.factors[s] = i.contains(s) ? CoordFactor::one() : CoordFactor::reg_minus_one(spec.nu());
    }
    return out;
}

ClassFunction kappa(const GroupSpec& spec, IndexSet i) {
    require_subset(spec, i);
    ClassFunction out(spec);
    for (std::size_t g = 0; g < spec.order(); ++g) {
        if (spec.support(g) == i) out[g] = 1;
    }
    return out;
}

ClassFunction chi(const GroupSpec& spec, IndexSet i) {
    require_subset(spec, i);
    ClassFunction out(spec);
    const int nu = spec.nu();
    for (std::size_t g = 0; g < spec.order(); ++g) {
        const std::vector<int> coords = spec.decode(g);
        BigInt v = 1;
        for (std::size_t p = 0; p < coords.size(); ++p) {
            if (!i.contains(spec.indices()[p])) v *= coords[p] == 0 ? nu - 1 : -1;
        }
        out[g] = v;
    }
    return out;
}

ClassFunction dot_chi(const GroupSpec& spec, IndexSet i) {
    ClassFunction out = chi(spec, i);
    out *= Rational(1) / out[0];
    return out;
}

// ---------------------------------------------------------------------------
// Lattice oracle

namespace {

using Membership = std::vector<bool>;

// Subgroup generated by the unit vectors e_s, s ∈ J, by closing {0} under addition.
Membership generated_subgroup(const GroupSpec& spec, IndexSet j) {
    Membership in(spec.order(), false);
    std::vector<std::size_t> frontier{0};
    in[0] = true;
    std::vector<std::size_t> gens;
    for (int s : j.elements()) {
        std::vector<int> e(spec.indices().size(), 0);
        e[static_cast<std::size_t>(spec.position(s))] = 1;
        gens.push_back(spec.encode(e));
    }
    while (!frontier.empty()) {
        const std::size_t g = frontier.back();
        frontier.pop_back();
        const std::vector<int> cg = spec.decode(g);
        for (std::size_t e : gens) {
            const std::vector<int> ce = spec.decode(e);
            std::vector<int> sum(cg.size());
            for (std::size_t p = 0; p < sum.size(); ++p) sum[p] = (cg[p] + ce[p]) % spec.nu();
            const std::size_t h = spec.encode(sum);
            if (!in[h]) {
                in[h] = true;
                frontier.push_back(h);
            }
        }
    }
    return in;
}

bool contained(const Membership& a, const Membership& b) {
    for (std::size_t g = 0; g < a.size(); ++g) {
        if (a[g] && !b[g]) return false;
    }
    return true;
}

// N° for every member of the lattice, keyed by the generating index set.
std::map<IndexSet, Membership> lattice_cores(const GroupSpec& spec) {
    const std::vector<IndexSet> labels = subsets_of(spec.index_set());
    std::vector<Membership> members;
    members.reserve(labels.size());
    for (IndexSet j : labels) members.push_back(generated_subgroup(spec, j));
    const std::size_t count = members.size();
    std::vector<std::vector<bool>> below(count, std::vector<bool>(count, false));  // below[a][b]: a ⊊ b
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) below[a][b] = a != b && contained(members[a], members[b]);
    }
    std::map<IndexSet, Membership> out;
    for (std::size_t o = 0; o < count; ++o) {
        Membership core = members[o];
        for (std::size_t l = 0; l < count; ++l) {
            if (!below[l][o]) continue;
            bool covers = true;
            for (std::size_t mid = 0; mid < count && covers; ++mid) covers = !(below[l][mid] && below[mid][o]);
            if (!covers) continue;
            for (std::size_t g = 0; g < core.size(); ++g) {
                if (members[l][g]) core[g] = false;
            }
        }
        out.emplace(labels[o], std::move(core));
    }
    return out;
}

ClassFunction indicator(const GroupSpec& spec, const Membership& m) {
    ClassFunction out(spec);
    for (std::size_t g = 0; g < spec.order(); ++g) {
        if (m[g]) out[g] = 1;
    }
    return out;
}

// Integer coefficients of the nu-th cyclotomic polynomial, lowest degree first.
std::vector<long long> cyclotomic(int nu) {
    std::vector<long long> p(static_cast<std::size_t>(nu) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(nu)] = 1;
    for (int d = 1; d < nu; ++d) {
        if (nu % d != 0) continue;
        const std::vector<long long> phi = cyclotomic(d);
        // exact division by the monic phi
        const std::size_t dp = phi.size() - 1;
        std::vector<long long> quot(p.size() - dp, 0);
        for (std::size_t k = p.size(); k-- > dp;) {
            const long long c = p[k];
            quot[k - dp] = c;
            for (std::size_t i = 0; i <= dp; ++i) p[k - dp + i] -= c * phi[i];
        }
        p = quot;
    }
    return p;
}

// Σ c_r ζ^r reduced modulo the cyclotomic polynomial; returns the integer
// value if the sum is rational, and sets ok = false otherwise.
long long cyclotomic_value(std::vector<long long> counts, const std::vector<long long>& phi, bool& ok) {
    const std::size_t d = phi.size() - 1;
    for (std::size_t k = counts.size(); k-- > d;) {
        const long long c = counts[k];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= d; ++i) counts[k - d + i] -= c * phi[i];
    }
    for (std::size_t k = 1; k < std::min(d, counts.size()); ++k) {
        if (counts[k] != 0) ok = false;
    }
    return counts[0];
}

// Σ over the character block {a : supp(a) = S \ I} of the characters g ↦ ζ^{a·g}.
ClassFunction block_character_sum(const GroupSpec& spec, IndexSet i, const std::vector<IndexSet>& supports,
                                  bool& rational) {
    const int nu = spec.nu();
    const std::vector<long long> phi = cyclotomic(nu);
    const IndexSet block_support = spec.index_set() - i;
    std::vector<std::vector<int>> block;
    for (std::size_t a = 0; a < spec.order(); ++a) {
        if (supports[a] == block_support) block.push_back(spec.decode(a));
    }
    ClassFunction out(spec);
    rational = true;
    for (std::size_t g = 0; g < spec.order(); ++g) {
        const std::vector<int> cg = spec.decode(g);
        std::vector<long long> counts(static_cast<std::size_t>(nu), 0);
        for (const auto& a : block) {
            int dot = 0;
            for (std::size_t p = 0; p < cg.size(); ++p) dot = (dot + a[p] * cg[p]) % nu;
            ++counts[static_cast<std::size_t>(dot)];
        }
        out[g] = static_cast<long>(cyclotomic_value(std::move(counts), phi, rational));
    }
    return out;
}

std::string element_string(const GroupSpec& spec, std::size_t g) {
    std::ostringstream os;
    os << '(';
    const auto coords = spec.decode(g);
    for (std::size_t p = 0; p < coords.size(); ++p) os << (p ? "," : "") << coords[p];
    os << ')';
    return os.str();
}

}  // namespace

ClassFunction lattice_superclass_oracle(const GroupSpec& spec, IndexSet i) {
    require_subset(spec, i);
    return indicator(spec, lattice_cores(spec).at(i));
}

AxiomReport verify_axioms(const GroupSpec& spec) {
    AxiomReport report;
    auto fail = [&report](std::string what) {
        report.ok = false;
        report.failure = std::move(what);
        return report;
    };
    const std::vector<IndexSet> labels = subsets_of(spec.index_set());
    const std::vector<IndexSet> supports = spec.supports();
    const auto cores = lattice_cores(spec);
    const ClassFunction one = ClassFunction::constant(spec, 1);

    // superclasses
    std::vector<ClassFunction> kappas;
    ClassFunction total(spec);
    for (IndexSet i : labels) {
        kappas.push_back(kappa(spec, i));
        const ClassFunction oracle = indicator(spec, cores.at(i));
        if (!(oracle == kappas.back())) {
            for (std::size_t g = 0; g < spec.order(); ++g) {
                if (oracle[g] != kappas.back()[g]) {
                    return fail("lattice core of Q_" + i.to_string() + " disagrees with the support class at " +
                                element_string(spec, g));
                }
            }
        }
        if (kappas.back().is_zero()) return fail("superclass " + i.to_string() + " is empty");
        total += kappas.back();
    }
    if (!(total == one)) return fail("superclasses do not partition " + spec.to_string());
    report.passed.push_back("superclasses partition the group and match the lattice cores");
    Membership identity(spec.order(), false);
    identity[0] = true;
    if (!(kappas.front() == indicator(spec, identity))) {
        return fail("C1: {e} is not a superclass");
    }
    report.passed.push_back("C1: {e} is a superclass");

    // supercharacters as block sums of irreducible characters
    std::vector<ClassFunction> chis;
    std::size_t blocks_seen = 0;
    for (IndexSet i : labels) {
        bool rational = false;
        ClassFunction block = block_character_sum(spec, i, supports, rational);
        if (!rational) return fail("C3: block sum for " + i.to_string() + " is not rational-valued");
        if (!(block == chi(spec, i))) return fail("supercharacter " + i.to_string() + " differs from its closed form");
        if (block[0] == 0) return fail("C2: empty character block for " + i.to_string());
        ++blocks_seen;
        for (std::size_t g = 0; g < spec.order(); ++g) {
            const std::size_t r = spec.representative(supports[g]);
            if (block[g] != block[r]) {
                return fail("C3: chi^" + i.to_string() + " is not constant on superclass " + supports[g].to_string() +
                            ", witness " + element_string(spec, g));
            }
        }
        chis.push_back(std::move(block));
    }
    if (blocks_seen != labels.size() || kappas.size() != labels.size()) {
        return fail("C2: superclass and supercharacter counts differ");
    }
    report.passed.push_back("C2: " + std::to_string(labels.size()) + " superclasses and " +
                            std::to_string(blocks_seen) + " supercharacters");
    report.passed.push_back("C3: every supercharacter is constant on superclasses");

    // Hall orthogonality and norms
    const int nu = spec.nu();
    const int rank = spec.rank();
    for (std::size_t a = 0; a < labels.size(); ++a) {
        for (std::size_t b = a; b < labels.size(); ++b) {
            const Rational cc = hall_inner(chis[a], chis[b]);
            const Rational kk = hall_inner(kappas[a], kappas[b]);
            if (a != b) {
                if (cc != 0) return fail("chi^" + labels[a].to_string() + " and chi^" + labels[b].to_string() + " are not orthogonal");
                if (kk != 0) return fail("kappa_" + labels[a].to_string() + " and kappa_" + labels[b].to_string() + " are not orthogonal");
                continue;
            }
            const int i_size = labels[a].size();
            if (cc != pow(Rational(nu - 1), rank - i_size)) return fail("norm of chi^" + labels[a].to_string());
            if (kk != pow(Rational(nu - 1), i_size) / pow(Rational(nu), rank)) {
                return fail("norm of kappa_" + labels[a].to_string());
            }
        }
    }
    report.passed.push_back("Hall orthogonality; <chi^I,chi^I> = (nu-1)^|S\\I|, <kappa_I,kappa_I> = (nu-1)^|I| / nu^|S|");
    return report;
}

// ---------------------------------------------------------------------------
// Restriction, tensoring, relabelling

ClassFunction restrict(const ClassFunction& phi, IndexSet t) {
    const GroupSpec& src = phi.spec();
    require_subset(src, t);
    const GroupSpec dst(src.nu(), t);
    std::vector<std::size_t> weight(dst.indices().size());
    for (std::size_t p = 0; p < weight.size(); ++p) {
        std::size_t w = 1;
        for (int k = 0; k < src.position(dst.indices()[p]); ++k) w *= static_cast<std::size_t>(src.nu());
        weight[p] = w;
    }
    ClassFunction out(dst);
    for (std::size_t h = 0; h < dst.order(); ++h) {
        const std::vector<int> coords = dst.decode(h);
        std::size_t g = 0;
        for (std::size_t p = 0; p < coords.size(); ++p) g += weight[p] * static_cast<std::size_t>(coords[p]);
        out[h] = phi[g];
    }
    return out;
}

ClassFunction tensor_embed(const ClassFunction& phi, const ClassFunction& psi) {
    const GroupSpec& a = phi.spec();
    const GroupSpec& b = psi.spec();
    if (a.nu() != b.nu()) throw std::invalid_argument("tensor of functions with different nu");
    if (!(a.index_set() & b.index_set()).empty()) {
        throw std::invalid_argument("tensor factors " + a.index_set().to_string() + " and " + b.index_set().to_string() +
                                    " overlap");
    }
    const GroupSpec target(a.nu(), a.index_set() | b.index_set());
    ClassFunction out(target);
    for (std::size_t g = 0; g < target.order(); ++g) {
        const std::vector<int> coords = target.decode(g);
        std::vector<int> ca;
        std::vector<int> cb;
        for (std::size_t p = 0; p < coords.size(); ++p) {
            (a.index_set().contains(target.indices()[p]) ? ca : cb).push_back(coords[p]);
        }
        out[g] = phi[a.encode(ca)] * psi[b.encode(cb)];
    }
    return out;
}

ClassFunction relabel(const ClassFunction& phi, IndexSet target) {
    if (target.size() != phi.spec().rank()) {
        throw std::invalid_argument("cannot relabel " + phi.spec().to_string() + " onto " + target.to_string());
    }
    return ClassFunction(GroupSpec(phi.spec().nu(), target), phi.values());
}

ClassFunction standardize(const ClassFunction& phi) { return relabel(phi, IndexSet::range(phi.spec().rank())); }

// ---------------------------------------------------------------------------
// Product and coproduct

namespace {

void require_standard(const ClassFunction& phi, int n, const char* what) {
    if (n < 0 || phi.spec().index_set() != split_points(n)) {
        throw std::invalid_argument(std::string(what) + " must live on Q_" + std::to_string(n) + ", got " +
                                    phi.spec().to_string());
    }
}

// phi ⊗_1 (reg - 1)/(nu - 1): the extra coordinate sits at index n.
ClassFunction append_normalized_reg(const ClassFunction& phi, int n) {
    const int nu = phi.spec().nu();
    FactorVector f;
    f.factors[n] = CoordFactor::normalized_reg_minus_one(nu);
    return tensor_embed(phi, f.expand(GroupSpec(nu, IndexSet{n})));
}

}  // namespace

ClassFunction product_mA(const ClassFunction& phi, int m, const ClassFunction& psi, int n, IndexSet a) {
    require_standard(phi, m, "left factor");
    require_standard(psi, n, "right factor");
    if (phi.spec().nu() != psi.spec().nu()) throw std::invalid_argument("factors have different nu");
    const int nu = phi.spec().nu();
    const IndexSet ambient = IndexSet::range(m + n);
    if (a.size() != n || !a.subset_of(ambient)) {
        throw std::invalid_argument("A = " + a.to_string() + " must be an " + std::to_string(n) + "-subset of [" +
                                    std::to_string(m + n) + "]");
    }
    if (m == 0) return psi * phi[0];
    if (n == 0) return phi * psi[0];

    const ClassFunction left = relabel(append_normalized_reg(phi, m), ambient - a);
    const ClassFunction right = relabel(append_normalized_reg(psi, n), a);
    const ClassFunction s = tensor_embed(left, right);
    const RunMarkers rm = run_markers(a, m + n);
    const ClassFunction restricted = restrict(s, split_points(m + n) - rm.c);
    return tensor_embed(dot_chi(GroupSpec(nu, rm.c), rm.c1), restricted);
}

ClassFunction product_m(const ClassFunction& phi, int m, const ClassFunction& psi, int n) {
    ClassFunction out(GroupSpec::standard(phi.spec().nu(), m + n));
    for (IndexSet a : k_subsets(m + n, n)) out += product_mA(phi, m, psi, n, a);
    return out;
}

TensorFunction coproduct_k(const ClassFunction& phi, int n, int k) {
    require_standard(phi, n, "argument");
    if (k < 0 || k > n) throw std::out_of_range("k = " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
    IndexSet kept = split_points(n);
    if (k >= 1) kept.erase(k);
    return TensorFunction{k, n, restrict(phi, kept)};
}

std::vector<TensorFunction> coproduct(const ClassFunction& phi, int n) {
    std::vector<TensorFunction> out;
    for (int k = 0; k <= n; ++k) out.push_back(coproduct_k(phi, n, k));
    return out;
}

Rational hall_inner(const ClassFunction& phi, const ClassFunction& psi) {
    if (!(phi.spec() == psi.spec())) throw std::invalid_argument("Hall inner product of functions on different groups");
    const GroupSpec& spec = phi.spec();
    Rational sum = 0;
    for (std::size_t g = 0; g < spec.order(); ++g) {
        if (phi[g] != 0) sum += phi[g] * psi[spec.inverse(g)];
    }
    return sum / static_cast<unsigned long>(spec.order());
}

std::map<IndexSet, Rational> expand_in_kappa(const ClassFunction& phi) {
    if (!phi.is_superclass_function()) throw std::invalid_argument("not constant on superclasses");
    std::map<IndexSet, Rational> out;
    for (IndexSet i : subsets_of(phi.spec().index_set())) {
        const Rational& v = phi[phi.spec().representative(i)];
        if (v != 0) out.emplace(i, v);
    }
    return out;
}

std::map<IndexSet, Rational> expand_in_dot_chi(const ClassFunction& phi) {
    std::map<IndexSet, Rational> out;
    for (IndexSet i : subsets_of(phi.spec().index_set())) {
        const ClassFunction c = chi(phi.spec(), i);
        const Rational coeff = hall_inner(phi, c) / hall_inner(c, c) * c[0];
        if (coeff != 0) out.emplace(i, coeff);
    }
    return out;
}

std::map<LabelPair, Rational> split_tensor(const TensorFunction& x, const std::map<IndexSet, Rational>& joint) {
    std::map<LabelPair, Rational> out;
    const IndexSet left = IndexSet::interval(1, x.k - 1);
    for (const auto& [label, c] : joint) {
        out.emplace(LabelPair{label & left, (label - left).shifted(-x.k)}, c);
    }
    return out;
}

std::map<IndexSet, Rational> kappa_product_formula(IndexSet i, int m, IndexSet j, int n, int nu) {
    if (nu < 2) throw std::invalid_argument("nu must be at least 2");
    const Rational base = Rational(1) / Rational(1 - nu);
    std::map<IndexSet, Rational> out;
    for (IndexSet a : k_subsets(m + n, n)) {
        const IndexSet pre = preshuffle(i, j, a, m, n);
        const RunMarkers rm = run_markers(a, m + n);
        if (!(pre & rm.c).empty()) continue;
        for (IndexSet extra : subsets_of(rm.c)) {
            const IndexSet k = pre | extra;
            out[k] += pow(base, (k & rm.c2).size());
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace hopfscf
