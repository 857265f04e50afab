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

#ifndef HOPFSCF_CHARMAP_HPP
#define HOPFSCF_CHARMAP_HPP

#include <compare>
#include <map>
#include <string>

#include "hopfscf/group.hpp"
#include "hopfscf/qsym.hpp"

namespace hopfscf {

enum class ScfBasis { kappa, chi_dot };

struct ScfLabel {
    int degree = 0;
    ScfBasis basis = ScfBasis::kappa;
    IndexSet set;  ///< subset of [degree-1]
    friend auto operator<=>(const ScfLabel&, const ScfLabel&) = default;
    friend bool operator==(const ScfLabel&, const ScfLabel&) = default;
};

/// Element of ⊕_n scf(Q_n(nu)), kept symbolically in the κ and χ̇ bases.
class ScfElem {
   public:
    explicit ScfElem(int nu);
    static ScfElem basis_element(int nu, int degree, ScfBasis basis, IndexSet set);

    [[nodiscard]] int nu() const noexcept { return nu_; }
    [[nodiscard]] const std::map<ScfLabel, Rational>& terms() const noexcept { return terms_; }
    /// Throws std::invalid_argument if `label.set` is not inside [degree-1].
    void add(const ScfLabel& label, const Rational& c);

   private:
    int nu_;
    std::map<ScfLabel, Rational> terms_;
};

/// χ̇^I ↦ L_{comp(I)}, κ_I ↦ (nu-1)^{|I|} Pi(nu)_{comp(I)}; the result is in L.
QSymElem ch(const ScfElem& x);
/// The degree-n part as a dense function on Q_n(nu).
ClassFunction lower(const ScfElem& x, int degree);

struct DiagramReport {
    bool ok = true;
    std::size_t products = 0;
    std::size_t coproducts = 0;
    std::string failure;
};
/// ch∘m = product∘(ch⊗ch) and (ch⊗ch)∘▲ = Δ∘ch on every pair of κ/χ̇ basis
/// elements of total degree <= bound, with the group side computed densely.
DiagramReport verify_diagrams(int nu, int bound);

}  // namespace hopfscf

#endif  // HOPFSCF_CHARMAP_HPP
