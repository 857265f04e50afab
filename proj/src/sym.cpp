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

#include "hopfscf/sym.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hopfscf/matrix.hpp"

namespace hopfscf {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::of(const Composition& alpha) {
    std::vector<int> parts = alpha.parts();
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int Partition::size() const noexcept {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> out;
    for (int p : parts_) ++out[p];
    return out;
}

std::string Partition::to_string() const { return Composition(parts_).to_string(); }

std::vector<Partition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

BigInt c_lambda(const Partition& lambda) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(lambda.length()));
    for (const auto& [part, mult] : lambda.multiplicities()) {
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(mult));
        out /= f;
    }
    return out;
}

SymElem& SymElem::operator+=(const SymElem& o) {
    terms_ += o.terms_;
    return *this;
}

SymElem& SymElem::operator-=(const SymElem& o) {
    terms_ -= o.terms_;
    return *this;
}

SymElem& SymElem::operator*=(const ScalarQT& c) {
    terms_ *= c;
    return *this;
}

SymElem product(const SymElem& x, const SymElem& y) {
    SymElem out;
    for (const auto& [a, ca] : x.terms()) {
        for (const auto& [b, cb] : y.terms()) {
            std::vector<int> parts = a.parts();
            parts.insert(parts.end(), b.parts().begin(), b.parts().end());
            out.add(Partition::of(Composition(parts)), ca * cb);
        }
    }
    return out;
}

SymElem comm(const NSymElem& x) {
    const NSymElem h = convert(x, NSymBasis::H);
    SymElem out;
    for (const auto& [alpha, c] : h.terms()) out.add(Partition::of(alpha), c);
    return out;
}

SymElem elementary(int n) {
    return comm(NSymElem::basis_element(NSymBasis::Lambda, n == 0 ? Composition{} : Composition{n}));
}

SymElem comm_bhat_closed(int n, const ScalarQT& a, const ScalarQT& b) {
    SymElem out;
    for (const Partition& lambda : partitions(n)) {
        const int len = lambda.length();
        if (len == 0) {
            out.add(lambda, 1);
            continue;
        }
        out.add(lambda, a.pow(n - len) * b.pow(len - 1) * ScalarQT(Rational(c_lambda(lambda))));
    }
    return out;
}

std::string to_string(const SymElem& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [lambda, c] : x.terms()) {
        if (!out.empty()) out += " + ";
        std::string coeff = c.to_string();
        if (coeff.find(' ') != std::string::npos) coeff = "(" + coeff + ")";
        if (coeff != "1") out += coeff + "*";
        out += "h" + lambda.to_string();
    }
    return out;
}

bool RankReport::full() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const RankRow& r) { return r.nsym_rank == r.nsym_dim && r.sym_rank == r.sym_dim; });
}

RankReport generating_set_rank(const Rational& a, const Rational& b, int n_max) {
    if (a == 0) throw std::invalid_argument("a = 0: the generators Bhat(0,b)_n are degenerate");
    const BasisParams params{ScalarQT(a), ScalarQT(b)};
    // Bhat(a,b)_k in H, for k <= n_max
    std::vector<NSymElem> gens;
    for (int k = 0; k <= n_max; ++k) {
        gens.push_back(convert(NSymElem::basis_element(NSymBasis::Bhat, k == 0 ? Composition{} : Composition{k}, params),
                               NSymBasis::H));
    }
    auto constant = [](const ScalarQT& c) { return eval_at(c, 0, 0); };

    RankReport report;
    for (int n = 1; n <= n_max; ++n) {
        RankRow row;
        row.n = n;
        const auto comps = compositions(n);
        std::map<Composition, std::size_t> column;
        for (const auto& c : comps) column.emplace(c, column.size());
        RationalMatrix nsym(comps.size(), comps.size());
        for (std::size_t r = 0; r < comps.size(); ++r) {
            NSymElem acc = NSymElem::basis_element(NSymBasis::H, Composition{});
            for (int part : comps[r]) acc = product(acc, gens[static_cast<std::size_t>(part)]);
            for (const auto& [alpha, c] : acc.terms()) {
                nsym(r, column.at(alpha)) = constant(c);
            }
        }
        row.nsym_dim = comps.size();
        row.nsym_rank = nsym.rank();

        const auto parts = partitions(n);
        RationalMatrix sym(parts.size(), parts.size());
        for (std::size_t r = 0; r < parts.size(); ++r) {
            SymElem acc = SymElem::h(Partition{});
            for (int part : parts[r].parts()) acc = product(acc, comm(gens[static_cast<std::size_t>(part)]));
            for (const auto& [lambda, c] : acc.terms()) {
                const auto col = std::find(parts.begin(), parts.end(), lambda);
                sym(r, static_cast<std::size_t>(col - parts.begin())) = constant(c);
            }
        }
        row.sym_dim = parts.size();
        row.sym_rank = sym.rank();
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace hopfscf
