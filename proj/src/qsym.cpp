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

#include "hopfscf/qsym.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hopfscf {

std::string to_string(QSymBasis b) {
    switch (b) {
        case QSymBasis::M: return "M";
        case QSymBasis::L: return "L";
        case QSymBasis::E: return "E";
        case QSymBasis::Pi: return "Pi";
    }
    return "?";
}

std::optional<QSymBasis> parse_qsym_basis(std::string_view tag) {
    if (tag == "M") return QSymBasis::M;
    if (tag == "L" || tag == "F") return QSymBasis::L;
    if (tag == "E") return QSymBasis::E;
    if (tag == "Pi") return QSymBasis::Pi;
    return std::nullopt;
}

namespace {

int checked_nu(QSymBasis b, int nu) {
    if (b != QSymBasis::Pi) return 0;
    if (nu < 2) throw std::invalid_argument("the Pi basis needs an integer nu >= 2, got " + std::to_string(nu));
    return nu;
}

Rational sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

using Row = std::vector<std::pair<IndexSet, Rational>>;

// basis element (b, I) of degree n expanded in M
Row to_monomial(QSymBasis b, IndexSet i, int n, int nu) {
    Row out;
    const IndexSet full = split_points(n);
    switch (b) {
        case QSymBasis::M:
            out.emplace_back(i, 1);
            break;
        case QSymBasis::L:
            for (IndexSet extra : subsets_of(full - i)) out.emplace_back(i | extra, 1);
            break;
        case QSymBasis::E:
            for (IndexSet k : subsets_of(i)) out.emplace_back(k, 1);
            break;
        case QSymBasis::Pi:
            for (IndexSet k : subsets_of(full - i)) out.emplace_back(k, coeff_Pi_to_M(i, k, n, nu));
            break;
    }
    return out;
}

// M_I expanded in basis b
Row from_monomial(QSymBasis b, IndexSet i, int n, int nu) {
    Row out;
    const IndexSet full = split_points(n);
    switch (b) {
        case QSymBasis::M:
            out.emplace_back(i, 1);
            break;
        case QSymBasis::L:
            for (IndexSet extra : subsets_of(full - i)) out.emplace_back(i | extra, sign(extra.size()));
            break;
        case QSymBasis::E:
            for (IndexSet k : subsets_of(i)) out.emplace_back(k, sign((i - k).size()));
            break;
        case QSymBasis::Pi:
            // I ∪ J = [n-1]: J = ([n-1] \ I) ⊔ (any subset of I)
            for (IndexSet inner : subsets_of(i)) {
                const IndexSet j = (full - i) | inner;
                out.emplace_back(j, coeff_M_to_Pi(i, j, n, nu));
            }
            break;
    }
    return out;
}

FormalSum<Composition> expand_label(QSymBasis from, int nu_from, const Composition& alpha, QSymBasis to, int nu_to,
                                    std::map<Composition, FormalSum<Composition>>& cache) {
    if (auto it = cache.find(alpha); it != cache.end()) return it->second;
    const int n = alpha.size();
    const IndexSet i = set_of_comp(alpha).members();
    std::map<IndexSet, Rational> mono;
    for (const auto& [k, c] : to_monomial(from, i, n, nu_from)) mono[k] += c;
    std::map<IndexSet, Rational> target;
    for (const auto& [k, c] : mono) {
        if (c == 0) continue;
        for (const auto& [j, d] : from_monomial(to, k, n, nu_to)) target[j] += c * d;
    }
    FormalSum<Composition> out;
    for (const auto& [j, c] : target) out.add(comp_of_set(j, n), ScalarQT(c));
    cache.emplace(alpha, out);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Transition coefficients

Rational coeff_L_to_Pi(IndexSet i, IndexSet j, int n, int nu) {
    if (n <= 1) return i == j ? 1 : 0;
    return sign((j - i).size()) * pow(Rational(nu - 1), (i & j).size());
}

Rational coeff_Pi_to_L(IndexSet j, IndexSet i, int n, int nu) {
    if (n <= 1) return i == j ? 1 : 0;
    const IndexSet outside = split_points(n) - (i | j);
    return sign((j - i).size()) * pow(Rational(nu - 1), outside.size()) / pow(Rational(nu), n - 1);
}

Rational coeff_M_to_Pi(IndexSet i, IndexSet j, int n, int nu) {
    if ((i | j) != split_points(n)) return 0;
    return pow(Rational(-nu), (j - i).size()) * pow(Rational(nu - 1), (i & j).size());
}

Rational coeff_Pi_to_M(IndexSet j, IndexSet i, int n, int nu) {
    if (!(i & j).empty()) return 0;
    if (n <= 1) return 1;
    return pow(Rational(1) / Rational(1 - nu), j.size()) * pow(Rational(nu - 1, nu), (n - 1) - i.size());
}

RationalMatrix transition_matrix(QSymBasis from, QSymBasis to, int n, int nu) {
    const std::vector<IndexSet> labels = subsets_of(split_points(n));
    RationalMatrix out(labels.size(), labels.size());
    auto index_of = [&labels](IndexSet s) {
        return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), s) - labels.begin());
    };
    for (std::size_t a = 0; a < labels.size(); ++a) {
        const IndexSet i = labels[a];
        if (from == QSymBasis::L && to == QSymBasis::Pi) {
            for (std::size_t b = 0; b < labels.size(); ++b) out(a, b) = coeff_L_to_Pi(i, labels[b], n, nu);
        } else if (from == QSymBasis::Pi && to == QSymBasis::L) {
            for (std::size_t b = 0; b < labels.size(); ++b) out(a, b) = coeff_Pi_to_L(i, labels[b], n, nu);
        } else {
            const int nf = checked_nu(from, nu);
            const int nt = checked_nu(to, nu);
            for (const auto& [k, c] : to_monomial(from, i, n, nf)) {
                for (const auto& [j, d] : from_monomial(to, k, n, nt)) out(a, index_of(j)) += c * d;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Elements

QSymElem::QSymElem(QSymBasis basis, int nu) : basis_(basis), nu_(checked_nu(basis, nu)) {}

QSymElem::QSymElem(QSymBasis basis, FormalSum<Composition> terms, int nu)
    : basis_(basis), nu_(checked_nu(basis, nu)), terms_(std::move(terms)) {}

QSymElem QSymElem::basis_element(QSymBasis basis, const Composition& alpha, int nu) {
    return QSymElem(basis, FormalSum<Composition>(alpha, 1), nu);
}

QSymElem& QSymElem::operator+=(const QSymElem& o) {
    terms_ += convert(o, basis_, nu_).terms_;
    return *this;
}

QSymElem& QSymElem::operator-=(const QSymElem& o) {
    terms_ -= convert(o, basis_, nu_).terms_;
    return *this;
}

QSymElem& QSymElem::operator*=(const ScalarQT& c) {
    terms_ *= c;
    return *this;
}

bool operator==(const QSymElem& a, const QSymElem& b) {
    if (a.basis_ == b.basis_ && a.nu_ == b.nu_) return a.terms_ == b.terms_;
    return convert(a, QSymBasis::M).terms_ == convert(b, QSymBasis::M).terms_;
}

bool operator==(const QSymTensor& a, const QSymTensor& b) {
    if (a.basis == b.basis && a.nu == b.nu) return a.terms == b.terms;
    return convert(a, QSymBasis::M).terms == convert(b, QSymBasis::M).terms;
}

QSymElem convert(const QSymElem& x, QSymBasis target, int nu) {
    nu = checked_nu(target, nu);
    if (x.basis() == target && x.nu() == nu) return x;
    std::map<Composition, FormalSum<Composition>> cache;
    FormalSum<Composition> out;
    for (const auto& [alpha, c] : x.terms()) out += expand_label(x.basis(), x.nu(), alpha, target, nu, cache) * c;
    return QSymElem(target, std::move(out), nu);
}

QSymTensor convert(const QSymTensor& x, QSymBasis target, int nu) {
    nu = checked_nu(target, nu);
    if (x.basis == target && x.nu == nu) return x;
    std::map<Composition, FormalSum<Composition>> cache;
    QSymTensor out{target, nu, {}};
    for (const auto& [pair, c] : x.terms) {
        const auto left = expand_label(x.basis, x.nu, pair.first, target, nu, cache);
        const auto right = expand_label(x.basis, x.nu, pair.second, target, nu, cache);
        for (const auto& [a, ca] : left) {
            for (const auto& [b, cb] : right) out.terms.add({a, b}, c * ca * cb);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hopf structure

QSymElem product(const QSymElem& x, const QSymElem& y) {
    if (x.basis() == QSymBasis::M && y.basis() == QSymBasis::M) {
        FormalSum<Composition> out;
        for (const auto& [a, ca] : x.terms()) {
            for (const auto& [b, cb] : y.terms()) {
                const ScalarQT c = ca * cb;
                for (const auto& [g, mult] : overlapping_shuffles(a, b)) out.add(g, c * ScalarQT(static_cast<long>(mult)));
            }
        }
        return QSymElem(QSymBasis::M, std::move(out));
    }
    if (x.basis() == QSymBasis::L && y.basis() == QSymBasis::L) {
        FormalSum<Composition> out;
        for (const auto& [a, ca] : x.terms()) {
            for (const auto& [b, cb] : y.terms()) {
                const ScalarQT c = ca * cb;
                const int m = a.size();
                const int n = b.size();
                if (m == 0 || n == 0) {
                    out.add(m == 0 ? b : a, c);
                    continue;
                }
                const IndexSet i = set_of_comp(a).members();
                const IndexSet j = set_of_comp(b).members();
                for (IndexSet s : k_subsets(m + n, n)) out.add(comp_of_set(a_shuffle(i, j, s, m, n), m + n), c);
            }
        }
        return QSymElem(QSymBasis::L, std::move(out));
    }
    const QSymElem p = product(convert(x, QSymBasis::M), convert(y, QSymBasis::M));
    if (x.basis() == y.basis() && x.nu() == y.nu()) return convert(p, x.basis(), x.nu());
    return p;
}

QSymTensor coproduct(const QSymElem& x) {
    if (x.basis() == QSymBasis::M) {
        QSymTensor out{QSymBasis::M, 0, {}};
        for (const auto& [a, c] : x.terms()) {
            const auto& parts = a.parts();
            for (std::size_t i = 0; i <= parts.size(); ++i) {
                out.terms.add({Composition(std::vector<int>(parts.begin(), parts.begin() + static_cast<long>(i))),
                               Composition(std::vector<int>(parts.begin() + static_cast<long>(i), parts.end()))},
                              c);
            }
        }
        return out;
    }
    if (x.basis() == QSymBasis::L) {
        QSymTensor out{QSymBasis::L, 0, {}};
        for (const auto& [g, c] : x.terms()) {
            const auto& parts = g.parts();
            std::set<CompPair> pairs;
            for (std::size_t i = 0; i <= parts.size(); ++i) {
                pairs.insert({Composition(std::vector<int>(parts.begin(), parts.begin() + static_cast<long>(i))),
                              Composition(std::vector<int>(parts.begin() + static_cast<long>(i), parts.end()))});
            }
            for (std::size_t j = 0; j < parts.size(); ++j) {
                for (int left = 1; left < parts[j]; ++left) {
                    std::vector<int> a(parts.begin(), parts.begin() + static_cast<long>(j));
                    a.push_back(left);
                    std::vector<int> b{parts[j] - left};
                    b.insert(b.end(), parts.begin() + static_cast<long>(j) + 1, parts.end());
                    pairs.insert({Composition(a), Composition(b)});
                }
            }
            for (const auto& p : pairs) out.terms.add(p, c);
        }
        return out;
    }
    return convert(coproduct(convert(x, QSymBasis::M)), x.basis(), x.nu());
}

ScalarQT counit(const QSymElem& x) { return x.terms().coefficient(Composition{}); }

QSymElem antipode_M(const Composition& alpha) {
    const SubsetLabel rev = set_of_comp(alpha.reversed());
    FormalSum<Composition> out;
    const ScalarQT s = alpha.length() % 2 == 0 ? 1 : -1;
    for (IndexSet k : subsets_of(rev.members())) out.add(comp_of_set(k, rev.ambient()), s);
    return QSymElem(QSymBasis::M, std::move(out));
}

QSymElem antipode(const QSymElem& x) {
    QSymElem out(QSymBasis::M);
    const QSymElem xm = convert(x, QSymBasis::M);
    for (const auto& [a, c] : xm.terms()) out += antipode_M(a) * c;
    return convert(out, x.basis(), x.nu());
}

std::string to_string(const QSymElem& x) {
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
