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

#include "hopfscf/charmap.hpp"

#include <stdexcept>
#include <vector>

namespace hopfscf {

ScfElem::ScfElem(int nu) : nu_(nu) {
    if (nu < 2) throw std::invalid_argument("nu must be at least 2");
}

ScfElem ScfElem::basis_element(int nu, int degree, ScfBasis basis, IndexSet set) {
    ScfElem out(nu);
    out.add({degree, basis, set}, 1);
    return out;
}

void ScfElem::add(const ScfLabel& label, const Rational& c) {
    if (label.degree < 0 || !label.set.subset_of(split_points(label.degree))) {
        throw std::invalid_argument(label.set.to_string() + " is not a subset of [" + std::to_string(label.degree - 1) + "]");
    }
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(label, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QSymElem ch(const ScfElem& x) {
    QSymElem out(QSymBasis::L);
    for (const auto& [label, c] : x.terms()) {
        const Composition alpha = comp_of_set(label.set, label.degree);
        if (label.basis == ScfBasis::chi_dot) {
            out.add(alpha, c);
        } else {
            const Rational scale = c * pow(Rational(x.nu() - 1), label.set.size());
            out += QSymElem::basis_element(QSymBasis::Pi, alpha, x.nu()) * ScalarQT(scale);
        }
    }
    return out;
}

ClassFunction lower(const ScfElem& x, int degree) {
    const GroupSpec spec = GroupSpec::standard(x.nu(), degree);
    ClassFunction out(spec);
    for (const auto& [label, c] : x.terms()) {
        if (label.degree != degree) continue;
        out += (label.basis == ScfBasis::kappa ? kappa(spec, label.set) : dot_chi(spec, label.set)) * c;
    }
    return out;
}

namespace {

QSymElem dot_chi_to_L(const std::map<IndexSet, Rational>& coeffs, int degree) {
    QSymElem out(QSymBasis::L);
    for (const auto& [i, c] : coeffs) out.add(comp_of_set(i, degree), c);
    return out;
}

std::string describe(const ScfLabel& l) {
    return std::string(l.basis == ScfBasis::kappa ? "kappa" : "chi_dot") + l.set.to_string() + " (degree " +
           std::to_string(l.degree) + ")";
}

}  // namespace

DiagramReport verify_diagrams(int nu, int bound) {
    DiagramReport report;
    std::vector<std::vector<ScfLabel>> labels(static_cast<std::size_t>(bound + 1));
    for (int n = 0; n <= bound; ++n) {
        for (IndexSet s : subsets_of(split_points(n))) {
            for (ScfBasis b : {ScfBasis::kappa, ScfBasis::chi_dot}) labels[static_cast<std::size_t>(n)].push_back({n, b, s});
        }
    }
    std::map<ScfLabel, QSymElem> images;
    std::map<ScfLabel, ClassFunction> dense;
    for (const auto& row : labels) {
        for (const ScfLabel& l : row) {
            ScfElem e(nu);
            e.add(l, 1);
            images.emplace(l, ch(e));
            dense.emplace(l, lower(e, l.degree));
        }
    }

    for (int m = 0; m <= bound; ++m) {
        for (int n = 0; m + n <= bound; ++n) {
            for (const ScfLabel& x : labels[static_cast<std::size_t>(m)]) {
                for (const ScfLabel& y : labels[static_cast<std::size_t>(n)]) {
                    const ClassFunction p = product_m(dense.at(x), m, dense.at(y), n);
                    const QSymElem lhs = dot_chi_to_L(expand_in_dot_chi(p), m + n);
                    const QSymElem rhs = product(images.at(x), images.at(y));
                    ++report.products;
                    if (!(lhs == rhs)) {
                        report.ok = false;
                        report.failure = "product of " + describe(x) + " and " + describe(y);
                        return report;
                    }
                }
            }
        }
    }

    for (int n = 0; n <= bound; ++n) {
        for (const ScfLabel& x : labels[static_cast<std::size_t>(n)]) {
            QSymTensor lhs{QSymBasis::L, 0, {}};
            for (const TensorFunction& t : coproduct(dense.at(x), n)) {
                for (const auto& [pair, c] : split_tensor(t, expand_in_dot_chi(t.joint))) {
                    lhs.terms.add({comp_of_set(pair.first, t.k), comp_of_set(pair.second, n - t.k)}, c);
                }
            }
            ++report.coproducts;
            if (!(lhs == coproduct(images.at(x)))) {
                report.ok = false;
                report.failure = "coproduct of " + describe(x);
                return report;
            }
        }
    }
    return report;
}

}  // namespace hopfscf
