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

#ifndef HOPFSCF_SYM_HPP
#define HOPFSCF_SYM_HPP

#include <map>
#include <string>
#include <vector>

#include "hopfscf/nsym.hpp"

namespace hopfscf {

/// Weakly decreasing sequence of positive integers.
class Partition {
   public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    /// Throws std::invalid_argument unless the parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    /// λ(α): the parts of α sorted.
    static Partition of(const Composition& alpha);

    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    [[nodiscard]] int size() const noexcept;
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    /// part -> m_i(λ)
    [[nodiscard]] std::map<int, int> multiplicities() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

   private:
    std::vector<int> parts_;
};

/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions(int n);
/// C_λ = ℓ(λ)! / Π_i m_i(λ)!, the number of compositions that sort to λ.
BigInt c_lambda(const Partition& lambda);

/// Symmetric function in the complete homogeneous basis {h_λ}.
class SymElem {
   public:
    SymElem() = default;
    explicit SymElem(FormalSum<Partition> terms) : terms_(std::move(terms)) {}
    static SymElem h(const Partition& lambda) { return SymElem(FormalSum<Partition>(lambda, 1)); }

    [[nodiscard]] const FormalSum<Partition>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.is_zero(); }
    void add(const Partition& lambda, const ScalarQT& c) { terms_.add(lambda, c); }

    SymElem& operator+=(const SymElem& o);
    SymElem& operator-=(const SymElem& o);
    SymElem& operator*=(const ScalarQT& c);
    friend SymElem operator+(SymElem a, const SymElem& b) { return a += b; }
    friend SymElem operator-(SymElem a, const SymElem& b) { return a -= b; }
    friend SymElem operator*(SymElem a, const ScalarQT& c) { return a *= c; }
    friend bool operator==(const SymElem& a, const SymElem& b) { return a.terms_ == b.terms_; }

   private:
    FormalSum<Partition> terms_;
};

/// h_λ h_μ = h_{λ ∪ μ}.
SymElem product(const SymElem& x, const SymElem& y);
/// H_alpha ↦ h_{λ(alpha)}.
SymElem comm(const NSymElem& x);
/// e_n = comm(Lambda_n), written in h.
SymElem elementary(int n);
/// Σ_{λ ⊢ n} a^{n-ℓ(λ)} b^{ℓ(λ)-1} C_λ h_λ.
SymElem comm_bhat_closed(int n, const ScalarQT& a, const ScalarQT& b);
std::string to_string(const SymElem& x);

struct RankRow {
    int n = 0;
    std::size_t nsym_rank = 0;
    std::size_t nsym_dim = 0;
    std::size_t sym_rank = 0;
    std::size_t sym_dim = 0;
};
struct RankReport {
    std::vector<RankRow> rows;
    [[nodiscard]] bool full() const;
};
/// For each 1 <= n <= n_max: the rank of {Bhat(a,b)_{α_1} ⋯ Bhat(a,b)_{α_l} : α ⊨ n}
/// in NSym_n and of {comm(Bhat(a,b)_{λ_1}) ⋯ : λ ⊢ n} in Sym_n. Throws
/// std::invalid_argument when a = 0.
RankReport generating_set_rank(const Rational& a, const Rational& b, int n_max);

}  // namespace hopfscf

#endif  // HOPFSCF_SYM_HPP
