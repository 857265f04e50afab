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

#ifndef HOPFSCF_NSYM_HPP
#define HOPFSCF_NSYM_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfscf/formal_sum.hpp"
#include "hopfscf/qsym.hpp"

namespace hopfscf {

/// Complete (H), elementary (Lambda), ribbon (R), the dual essential basis
/// (Estar), and the two-parameter bases B(a,b) and Bhat(a,b).
enum class NSymBasis { H, Lambda, R, Estar, B, Bhat };

std::string to_string(NSymBasis b);
/// Accepts "H", "Lambda", "R", "Estar", "B", "Bhat".
std::optional<NSymBasis> parse_nsym_basis(std::string_view tag);

/// Parameters (a, b) of B(a,b) and Bhat(a,b); the default is (q, t).
struct BasisParams {
    ScalarQT a = ScalarQT::q();
    ScalarQT b = ScalarQT::t();
    friend bool operator==(const BasisParams&, const BasisParams&) = default;
};

class NSymElem {
   public:
    explicit NSymElem(NSymBasis basis = NSymBasis::H, BasisParams params = {});
    NSymElem(NSymBasis basis, FormalSum<Composition> terms, BasisParams params = {});
    static NSymElem basis_element(NSymBasis basis, const Composition& alpha, BasisParams params = {});

    [[nodiscard]] NSymBasis basis() const noexcept { return basis_; }
    [[nodiscard]] const BasisParams& params() const noexcept { return params_; }
    [[nodiscard]] const FormalSum<Composition>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.is_zero(); }
    void add(const Composition& alpha, const ScalarQT& c) { terms_.add(alpha, c); }

    NSymElem& operator+=(const NSymElem& o);
    NSymElem& operator-=(const NSymElem& o);
    NSymElem& operator*=(const ScalarQT& c);
    friend NSymElem operator+(NSymElem a, const NSymElem& b) { return a += b; }
    friend NSymElem operator-(NSymElem a, const NSymElem& b) { return a -= b; }
    friend NSymElem operator*(NSymElem a, const ScalarQT& c) { return a *= c; }
    friend NSymElem operator*(const ScalarQT& c, NSymElem a) { return a *= c; }

    /// Equality in NSym (compared in H).
    friend bool operator==(const NSymElem& a, const NSymElem& b);

   private:
    NSymBasis basis_;
    BasisParams params_;
    FormalSum<Composition> terms_;
};

struct NSymTensor {
    NSymBasis basis = NSymBasis::H;
    BasisParams params;
    FormalSum<CompPair> terms;

    friend bool operator==(const NSymTensor& a, const NSymTensor& b);
};

/// B(a,b)_{comp(I)} = Σ_{J : I ∪ J = [n-1]} a^|I\J| b^|I∩J| H_{comp(J)}.
FormalSum<Composition> b_to_H(const Composition& alpha, const BasisParams& params = {});
/// H_alpha in the B(a,b) basis, through the inverse matrix N; needs a != 0.
FormalSum<Composition> H_to_B(const Composition& alpha, const BasisParams& params = {});
/// Entry N_{I,J} of the inverse of the matrix (B -> H)^T: a^{|J|-(n-1)} (-b)^{(n-1)-|I|-|J|} [I ∩ J = ∅].
ScalarQT inverse_entry(IndexSet i, IndexSet j, int n, const BasisParams& params = {});
/// Lambda, R or Estar basis element expanded in H.
FormalSum<Composition> classic_to_H(NSymBasis basis, const Composition& alpha);

NSymElem convert(const NSymElem& x, NSymBasis target, const BasisParams& params = {});
NSymTensor convert(const NSymTensor& x, NSymBasis target, const BasisParams& params = {});

/// Concatenation in H and Bhat, near-concatenation in B, through H otherwise.
NSymElem product(const NSymElem& x, const NSymElem& y);
/// Computed in H (H_n ↦ Σ H_i ⊗ H_{n-i}, extended multiplicatively) and converted back.
NSymTensor coproduct(const NSymElem& x);

/// C^K_{I,J}(q,t) from the closed sum over A ∈ binom([m+n], n); K ⊆ [m+n-1].
ScalarQT structconst(IndexSet k, IndexSet i, int m, IndexSet j, int n);

struct StructConstRow {
    int m = 0;
    IndexSet i;
    IndexSet j;
    ScalarQT value;
};
/// Every nonzero C^K_{I,J} with m + n = k, ordered by (m, I, J).
std::vector<StructConstRow> structconst_table(int k, IndexSet big_k, std::optional<int> only_m = std::nullopt);

/// One summand of the closed coproduct of Bhat_k.
struct BhatCoproductTerm {
    IndexSet a;
    ScalarQT coeff;
    Composition left;
    Composition right;
};
/// Σ_{A ⊆ [k]} (q+t)^|c2(A)| t^|c1(A)| Bhat_{alpha_A} ⊗ Bhat_{beta_A}, one entry per A.
std::vector<BhatCoproductTerm> coproduct_bhat_terms(int k);
/// The same sum with equal tensor labels combined.
NSymTensor coproduct_bhat_n(int k);

/// Anti-automorphism H_alpha ↦ Lambda_{alpha^r}; the result is in Lambda.
NSymElem omega(const NSymElem& x);

/// (H_alpha, M_beta) = delta, extended bilinearly.
ScalarQT pairing(const NSymElem& f, const QSymElem& x);

/// Substitutes numbers or expressions for (q, t) in the coefficients.
NSymElem specialize(const NSymElem& x, const ScalarQT& q0, const ScalarQT& t0);

std::string to_string(const NSymElem& x);

}  // namespace hopfscf

#endif  // HOPFSCF_NSYM_HPP
