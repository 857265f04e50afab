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

#ifndef HOPFSCF_QSYM_HPP
#define HOPFSCF_QSYM_HPP

#include <optional>
#include <string>
#include <string_view>

#include "hopfscf/formal_sum.hpp"
#include "hopfscf/matrix.hpp"

namespace hopfscf {

/// Monomial, fundamental (also called F), essential, and Pi(nu).
enum class QSymBasis { M, L, E, Pi };

std::string to_string(QSymBasis b);
/// Accepts "M", "L", "F", "E", "Pi".
std::optional<QSymBasis> parse_qsym_basis(std::string_view tag);

/// Element of QSym over Q(q,t) written in a single basis. The Pi basis carries
/// its integer parameter nu >= 2; the other bases ignore it.
class QSymElem {
   public:
    explicit QSymElem(QSymBasis basis = QSymBasis::M, int nu = 0);
    QSymElem(QSymBasis basis, FormalSum<Composition> terms, int nu = 0);
    static QSymElem basis_element(QSymBasis basis, const Composition& alpha, int nu = 0);
    static QSymElem one() { return basis_element(QSymBasis::M, Composition{}); }

    [[nodiscard]] QSymBasis basis() const noexcept { return basis_; }
    [[nodiscard]] int nu() const noexcept { return nu_; }
    [[nodiscard]] const FormalSum<Composition>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.is_zero(); }
    void add(const Composition& alpha, const ScalarQT& c) { terms_.add(alpha, c); }

    /// Sums convert the right operand into the left operand's basis.
    QSymElem& operator+=(const QSymElem& o);
    QSymElem& operator-=(const QSymElem& o);
    QSymElem& operator*=(const ScalarQT& c);
    friend QSymElem operator+(QSymElem a, const QSymElem& b) { return a += b; }
    friend QSymElem operator-(QSymElem a, const QSymElem& b) { return a -= b; }
    friend QSymElem operator*(QSymElem a, const ScalarQT& c) { return a *= c; }
    friend QSymElem operator*(const ScalarQT& c, QSymElem a) { return a *= c; }

    /// Equality as elements of QSym (compared in the M basis).
    friend bool operator==(const QSymElem& a, const QSymElem& b);

   private:
    QSymBasis basis_;
    int nu_;
    FormalSum<Composition> terms_;
};

/// Element of QSym ⊗ QSym, both factors in the same basis.
struct QSymTensor {
    QSymBasis basis = QSymBasis::M;
    int nu = 0;
    FormalSum<CompPair> terms;

    friend bool operator==(const QSymTensor& a, const QSymTensor& b);
};

/// Change of basis. `nu` is needed only when the target is Pi.
QSymElem convert(const QSymElem& x, QSymBasis target, int nu = 0);
QSymTensor convert(const QSymTensor& x, QSymBasis target, int nu = 0);

/// M products use overlapping shuffles, L products use A-shuffles; other
/// inputs are multiplied in M. The result is in x's basis when both agree.
QSymElem product(const QSymElem& x, const QSymElem& y);
/// Deconcatenation on M, (near-)concatenation on L, through M otherwise.
QSymTensor coproduct(const QSymElem& x);
ScalarQT counit(const QSymElem& x);
/// S(M_alpha) = (-1)^l(alpha) Σ_{gamma coarsening alpha^r} M_gamma.
QSymElem antipode_M(const Composition& alpha);
QSymElem antipode(const QSymElem& x);

// Transition coefficients on a single pair of labels in degree n, read off the
// closed forms; these back convert() for the Pi basis.

/// Coefficient of Pi(nu)_{comp(J)} in L_{comp(I)}.
Rational coeff_L_to_Pi(IndexSet i, IndexSet j, int n, int nu);
/// Coefficient of L_{comp(I)} in Pi(nu)_{comp(J)}.
Rational coeff_Pi_to_L(IndexSet j, IndexSet i, int n, int nu);
/// Coefficient of Pi(nu)_{comp(J)} in M_{comp(I)}.
Rational coeff_M_to_Pi(IndexSet i, IndexSet j, int n, int nu);
/// Coefficient of M_{comp(I)} in Pi(nu)_{comp(J)}.
Rational coeff_Pi_to_M(IndexSet j, IndexSet i, int n, int nu);

/// Entry (a, b) is the coefficient of the b-th target basis element in the
/// a-th source basis element; labels are subsets of [n-1] in bit order.
RationalMatrix transition_matrix(QSymBasis from, QSymBasis to, int n, int nu = 0);

std::string to_string(const QSymElem& x);

}  // namespace hopfscf

#endif  // HOPFSCF_QSYM_HPP
