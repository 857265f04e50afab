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

#include "hopfscf/fqsym.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfscf {

bool is_permutation(const Word& w) {
    std::vector<bool> seen(w.size() + 1, false);
    for (int x : w) {
        if (x < 1 || x > static_cast<int>(w.size()) || seen[static_cast<std::size_t>(x)]) return false;
        seen[static_cast<std::size_t>(x)] = true;
    }
    return true;
}

namespace {

void require_permutation(const Word& w) {
    if (!is_permutation(w)) throw std::invalid_argument(word_to_string(w) + " is not a permutation");
}

Composition descent_composition(const Word& w) { return comp_of_set(descent_set(w)); }

}  // namespace

FQSymElem product_F(const Word& u, const Word& v) {
    require_permutation(u);
    require_permutation(v);
    FQSymElem out;
    for (const auto& [w, mult] : shifted_shuffle(u, v, static_cast<int>(u.size()))) {
        out.add(w, ScalarQT(static_cast<long>(mult)));
    }
    return out;
}

FQSymElem product(const FQSymElem& x, const FQSymElem& y) {
    FQSymElem out;
    for (const auto& [u, cu] : x) {
        for (const auto& [v, cv] : y) out += product_F(u, v) * (cu * cv);
    }
    return out;
}

FQSymTensor coproduct_F(const Word& w) {
    require_permutation(w);
    FQSymTensor out;
    for (std::size_t k = 0; k <= w.size(); ++k) {
        const Word left(w.begin(), w.begin() + static_cast<long>(k));
        const Word right(w.begin() + static_cast<long>(k), w.end());
        out.add({standardize(left), standardize(right)}, 1);
    }
    return out;
}

FQSymTensor coproduct(const FQSymElem& x) {
    FQSymTensor out;
    for (const auto& [w, c] : x) out += coproduct_F(w) * c;
    return out;
}

QSymElem project_pi(const FQSymElem& x) {
    QSymElem out(QSymBasis::L);
    for (const auto& [w, c] : x) out.add(descent_composition(w), c);
    return out;
}

QSymTensor project_pi(const FQSymTensor& x) {
    QSymTensor out{QSymBasis::L, 0, {}};
    for (const auto& [pr, c] : x) out.terms.add({descent_composition(pr.first), descent_composition(pr.second)}, c);
    return out;
}

}  // namespace hopfscf
