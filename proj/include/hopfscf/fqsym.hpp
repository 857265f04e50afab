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

#ifndef HOPFSCF_FQSYM_HPP
#define HOPFSCF_FQSYM_HPP

#include <utility>

#include "hopfscf/qsym.hpp"

namespace hopfscf {

/// Linear combination of F_w over permutations w (of any size).
using FQSymElem = FormalSum<Word>;
using FQSymTensor = FormalSum<std::pair<Word, Word>>;

bool is_permutation(const Word& w);

/// F_u F_v = Σ_{w ∈ u ⧢ v[|u|]} F_w. Throws std::invalid_argument on non-permutations.
FQSymElem product_F(const Word& u, const Word& v);
FQSymElem product(const FQSymElem& x, const FQSymElem& y);
/// ΔF_w = Σ_k F_{std(w_1..w_k)} ⊗ F_{std(w_{k+1}..w_n)}.
FQSymTensor coproduct_F(const Word& w);
FQSymTensor coproduct(const FQSymElem& x);

/// F_w ↦ L_{comp(Des(w))}.
QSymElem project_pi(const FQSymElem& x);
QSymTensor project_pi(const FQSymTensor& x);

}  // namespace hopfscf

#endif  // HOPFSCF_FQSYM_HPP
