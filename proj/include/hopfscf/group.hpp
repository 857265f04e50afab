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

#ifndef HOPFSCF_GROUP_HPP
#define HOPFSCF_GROUP_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfscf/combinatorics.hpp"
#include "hopfscf/scalars.hpp"

namespace hopfscf {

/// Largest group order the dense routines will enumerate. Defaults to 2^20;
/// the HOPF_SCF_MAX_GROUP environment variable overrides it.
std::size_t max_group_order();

/**
 * Q_S(nu), the direct sum of copies of C_nu indexed by S. Elements are encoded
 * in mixed radix: coordinate p (the p-th smallest index of S) has weight nu^p.
 */
class GroupSpec {
   public:
    GroupSpec(int nu, IndexSet index_set);
    /// Q_n(nu) = Q_{[n-1]}(nu).
    static GroupSpec standard(int nu, int n) { return GroupSpec(nu, split_points(n)); }

    [[nodiscard]] int nu() const noexcept { return nu_; }
    [[nodiscard]] IndexSet index_set() const noexcept { return index_set_; }
    [[nodiscard]] int rank() const noexcept { return static_cast<int>(indices_.size()); }
    [[nodiscard]] std::size_t order() const noexcept { return order_; }
    [[nodiscard]] const std::vector<int>& indices() const noexcept { return indices_; }
    /// Coordinate position of index s; throws std::out_of_range if s is not in S.
    [[nodiscard]] int position(int s) const;

    [[nodiscard]] std::vector<int> decode(std::size_t element) const;
    [[nodiscard]] std::size_t encode(const std::vector<int>& coords) const;
    /// Indices s with g_s != 0.
    [[nodiscard]] IndexSet support(std::size_t element) const;
    /// Supports of every element, indexed by encoding.
    [[nodiscard]] std::vector<IndexSet> supports() const;
    /// The element with coordinate 1 on I and 0 elsewhere.
    [[nodiscard]] std::size_t representative(IndexSet i) const;
    /// Componentwise negation.
    [[nodiscard]] std::size_t inverse(std::size_t element) const;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

    [[nodiscard]] std::string to_string() const;

   private:
    int nu_;
    IndexSet index_set_;
    std::vector<int> indices_;
    std::size_t order_ = 1;
};

/// Rational-valued function on Q_S(nu), stored densely.
class ClassFunction {
   public:
    explicit ClassFunction(GroupSpec spec);
    ClassFunction(GroupSpec spec, std::vector<Rational> values);
    static ClassFunction constant(const GroupSpec& spec, const Rational& c);

    [[nodiscard]] const GroupSpec& spec() const noexcept { return spec_; }
    [[nodiscard]] const std::vector<Rational>& values() const noexcept { return values_; }
    [[nodiscard]] const Rational& operator[](std::size_t element) const { return values_[element]; }
    [[nodiscard]] Rational& operator[](std::size_t element) { return values_[element]; }
    [[nodiscard]] bool is_zero() const;
    /// Constant on every support class {g : supp(g) = I}.
    [[nodiscard]] bool is_superclass_function() const;

    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator-=(const ClassFunction& o);
    ClassFunction& operator*=(const Rational& c);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend ClassFunction operator*(ClassFunction a, const Rational& c) { return a *= c; }
    friend ClassFunction operator*(const Rational& c, ClassFunction a) { return a *= c; }
    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

   private:
    void require_same_spec(const ClassFunction& o) const;
    GroupSpec spec_;
    std::vector<Rational> values_;
};

/// Pointwise product.
ClassFunction pointwise(const ClassFunction& a, const ClassFunction& b);

/// A function on C_nu depending only on whether g = 0.
struct CoordFactor {
    Rational at_zero;
    Rational off_zero;

    static CoordFactor one() { return {1, 1}; }
    static CoordFactor reg(int nu) { return {nu, 0}; }
    static CoordFactor reg_minus_one(int nu) { return {nu - 1, -1}; }
    /// (reg - 1)/(nu - 1)
    static CoordFactor normalized_reg_minus_one(int nu) { return {1, Rational(-1, nu - 1)}; }
    /// reg / nu
    static CoordFactor reg_over_nu() { return {1, 0}; }
    /// 1 - reg / nu
    static CoordFactor one_minus_reg_over_nu() { return {0, 1}; }

    [[nodiscard]] const Rational& operator()(int g) const { return g == 0 ? at_zero : off_zero; }
    friend bool operator==(const CoordFactor&, const CoordFactor&) = default;
};

/// prefactor * ⊗_s factors[s]; indices without an entry carry the trivial factor.
struct FactorVector {
    Rational prefactor = 1;
    std::map<int, CoordFactor> factors;

    [[nodiscard]] ClassFunction expand(const GroupSpec& spec) const;
};

FactorVector kappa_factors(const GroupSpec& spec, IndexSet i);
FactorVector chi_factors(const GroupSpec& spec, IndexSet i);

/// Indicator of the superclass {g : supp(g) = I}.
ClassFunction kappa(const GroupSpec& spec, IndexSet i);
/// Supercharacter: trivial on I, reg - 1 on S \ I.
ClassFunction chi(const GroupSpec& spec, IndexSet i);
/// chi / chi(0).
ClassFunction dot_chi(const GroupSpec& spec, IndexSet i);

/// Q_I(nu)° computed from the covering relation of the lattice {Q_J : J ⊆ S}
/// of subgroups, as explicit element sets. Returns its indicator.
ClassFunction lattice_superclass_oracle(const GroupSpec& spec, IndexSet i);

struct AxiomReport {
    bool ok = true;
    std::vector<std::string> passed;
    std::string failure;  ///< first violation with a witness, empty if ok
};
/// C1, C2, C3 for the normal supercharacter theory of Q_S(nu), together with
/// Hall orthogonality and norms of the supercharacters and superclass identifiers.
AxiomReport verify_axioms(const GroupSpec& spec);

/// Restriction to Q_T(nu), T ⊆ S.
ClassFunction restrict(const ClassFunction& phi, IndexSet t);
/// (phi ⊗ psi)(a, b) = phi(a) psi(b) on Q_{S ⊔ T}; S and T must be disjoint.
ClassFunction tensor_embed(const ClassFunction& phi, const ClassFunction& psi);
/// Transport along the order-preserving bijection between index sets.
ClassFunction relabel(const ClassFunction& phi, IndexSet target);
/// relabel onto {1, ..., |S|}.
ClassFunction standardize(const ClassFunction& phi);

/// m_A(phi, psi) for phi on Q_m and psi on Q_n (standard index sets), A ⊆ [m+n], |A| = n.
ClassFunction product_mA(const ClassFunction& phi, int m, const ClassFunction& psi, int n, IndexSet a);
/// Sum of m_A over all A.
ClassFunction product_m(const ClassFunction& phi, int m, const ClassFunction& psi, int n);

/// An element of cf(Q_k) ⊗ cf(Q_{n-k}), stored as a function on
/// Q_{[1,k-1] ⊔ [k+1,n-1]}.
struct TensorFunction {
    int k = 0;
    int n = 0;
    ClassFunction joint;
};
/// ▲_k(phi) for phi on Q_n, 0 <= k <= n.
TensorFunction coproduct_k(const ClassFunction& phi, int n, int k);
std::vector<TensorFunction> coproduct(const ClassFunction& phi, int n);

/// (1/|G|) Σ phi(g) psi(g^{-1}).
Rational hall_inner(const ClassFunction& phi, const ClassFunction& psi);

/// Coefficients in the basis {kappa_I}, read off at representatives; the input
/// must be a superclass function.
std::map<IndexSet, Rational> expand_in_kappa(const ClassFunction& phi);
/// Coefficients in the basis {dot_chi^I}, by Hall inner products.
std::map<IndexSet, Rational> expand_in_dot_chi(const ClassFunction& phi);

using LabelPair = std::pair<IndexSet, IndexSet>;
/// Splits a joint expansion into (left label, right label shifted down by k).
std::map<LabelPair, Rational> split_tensor(const TensorFunction& x, const std::map<IndexSet, Rational>& joint);

/// d_K of m(kappa_I, kappa_J), I ⊆ [m-1], J ⊆ [n-1], from the closed A-sum.
std::map<IndexSet, Rational> kappa_product_formula(IndexSet i, int m, IndexSet j, int n, int nu);

}  // namespace hopfscf

#endif  // HOPFSCF_GROUP_HPP
