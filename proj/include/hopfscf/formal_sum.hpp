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

#ifndef HOPFSCF_FORMAL_SUM_HPP
#define HOPFSCF_FORMAL_SUM_HPP

#include <map>
#include <utility>

#include "hopfscf/combinatorics.hpp"
#include "hopfscf/scalars.hpp"

namespace hopfscf {

/// Finite linear combination of labels with ScalarQT coefficients. Zero
/// coefficients are never stored, so equality is termwise.
template <typename Label>
class FormalSum {
   public:
    using Map = std::map<Label, ScalarQT>;

    FormalSum() = default;
    FormalSum(const Label& label, ScalarQT coeff) { add(label, std::move(coeff)); }

    void add(const Label& label, const ScalarQT& coeff) {
        if (coeff.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(label, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    [[nodiscard]] const Map& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] ScalarQT coefficient(const Label& label) const {
        auto it = terms_.find(label);
        return it == terms_.end() ? ScalarQT() : it->second;
    }
    [[nodiscard]] auto begin() const noexcept { return terms_.begin(); }
    [[nodiscard]] auto end() const noexcept { return terms_.end(); }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [label, c] : o.terms_) add(label, c);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o) {
        for (const auto& [label, c] : o.terms_) add(label, -c);
        return *this;
    }
    FormalSum& operator*=(const ScalarQT& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [label, x] : terms_) x *= c;
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend FormalSum operator*(FormalSum a, const ScalarQT& c) { return a *= c; }
    friend FormalSum operator*(const ScalarQT& c, FormalSum a) { return a *= c; }

    friend bool operator==(const FormalSum& a, const FormalSum& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib) {
            if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
        }
        return true;
    }

   private:
    Map terms_;
};

using CompPair = std::pair<Composition, Composition>;

}  // namespace hopfscf

#endif  // HOPFSCF_FORMAL_SUM_HPP
