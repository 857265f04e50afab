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

#ifndef HOPFSCF_SCALARS_HPP
#define HOPFSCF_SCALARS_HPP

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hopfscf {

using BigInt = mpz_class;
using Rational = mpq_class;

/// "3", "-2/5"
std::string to_string(const Rational& r);
Rational pow(const Rational& base, int exponent);

/// q^q t^t, nonnegative exponents.
struct Monomial {
    int q = 0;
    int t = 0;
    friend constexpr bool operator==(Monomial, Monomial) = default;
    friend constexpr auto operator<=>(Monomial, Monomial) = default;  // lex, q first
};

/**
 * Sparse polynomial in commuting q, t over the rationals. Terms are kept sorted
 * by (q, t) exponent with no zero coefficients, so equality is structural.
 */
class PolyQT {
   public:
    using Term = std::pair<Monomial, Rational>;

    PolyQT() = default;
    PolyQT(const Rational& c);  // NOLINT(google-explicit-constructor)
    PolyQT(long c) : PolyQT(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    PolyQT(int c) : PolyQT(Rational(c)) {}   // NOLINT(google-explicit-constructor)

    static PolyQT monomial(const Rational& c, int q_exp, int t_exp);
    static PolyQT q() { return monomial(1, 1, 0); }
    static PolyQT t() { return monomial(1, 0, 1); }

    [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const noexcept;
    [[nodiscard]] bool is_monomial() const noexcept { return terms_.size() == 1; }
    /// Constant coefficient; only meaningful when is_constant().
    [[nodiscard]] Rational constant() const;
    [[nodiscard]] bool has_integer_coefficients() const;
    /// Largest term in lex order (q before t).
    [[nodiscard]] const Term& leading() const { return terms_.back(); }
    /// Componentwise minimum exponent over all terms.
    [[nodiscard]] Monomial min_exponents() const;
    [[nodiscard]] int total_degree() const;

    PolyQT& operator+=(const PolyQT& o);
    PolyQT& operator-=(const PolyQT& o);
    PolyQT& operator*=(const PolyQT& o);
    PolyQT& operator*=(const Rational& c);
    friend PolyQT operator+(PolyQT a, const PolyQT& b) { return a += b; }
    friend PolyQT operator-(PolyQT a, const PolyQT& b) { return a -= b; }
    friend PolyQT operator*(const PolyQT& a, const PolyQT& b);
    PolyQT operator-() const;
    [[nodiscard]] PolyQT pow(int e) const;
    /// Divide every exponent by the monomial m (which must divide every term).
    [[nodiscard]] PolyQT shift_down(Monomial m) const;

    friend bool operator==(const PolyQT& a, const PolyQT& b) { return a.terms_ == b.terms_; }

    /// Exact quotient if `d` divides this polynomial in Q[q,t], nullopt otherwise.
    [[nodiscard]] std::optional<PolyQT> divide_exact(const PolyQT& d) const;
    [[nodiscard]] Rational eval(const Rational& q0, const Rational& t0) const;
    /// Canonical display: terms by total degree, then q-degree, both descending.
    [[nodiscard]] std::string to_string() const;

   private:
    void add_term(Monomial m, const Rational& c);
    std::vector<Term> terms_;
};

/**
 * Element of Q(q, t) as num/den. Reduction is heuristic (monomial content,
 * rational content, exact division when one side divides the other); equality
 * is decided by cross-multiplication so it never depends on the reduction.
 */
class ScalarQT {
   public:
    ScalarQT() : num_(), den_(1) {}
    ScalarQT(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    ScalarQT(long c) : ScalarQT(Rational(c)) {}        // NOLINT(google-explicit-constructor)
    ScalarQT(int c) : ScalarQT(Rational(c)) {}         // NOLINT(google-explicit-constructor)
    ScalarQT(PolyQT p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    ScalarQT(PolyQT num, PolyQT den);

    static ScalarQT q() { return ScalarQT(PolyQT::q()); }
    static ScalarQT t() { return ScalarQT(PolyQT::t()); }

    [[nodiscard]] const PolyQT& num() const noexcept { return num_; }
    [[nodiscard]] const PolyQT& den() const noexcept { return den_; }
    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
    [[nodiscard]] bool is_one() const;

    ScalarQT& operator+=(const ScalarQT& o);
    ScalarQT& operator-=(const ScalarQT& o);
    ScalarQT& operator*=(const ScalarQT& o);
    ScalarQT& operator/=(const ScalarQT& o);
    friend ScalarQT operator+(ScalarQT a, const ScalarQT& b) { return a += b; }
    friend ScalarQT operator-(ScalarQT a, const ScalarQT& b) { return a -= b; }
    friend ScalarQT operator*(ScalarQT a, const ScalarQT& b) { return a *= b; }
    friend ScalarQT operator/(ScalarQT a, const ScalarQT& b) { return a /= b; }
    ScalarQT operator-() const;
    /// Integer powers; negative exponents invert.
    [[nodiscard]] ScalarQT pow(int e) const;

    friend bool operator==(const ScalarQT& a, const ScalarQT& b);

    [[nodiscard]] std::string to_string() const;

   private:
    void normalize();
    PolyQT num_;
    PolyQT den_;
};

/// Exact substitution (q, t) := (q0, t0). Throws std::domain_error if the
/// denominator vanishes there.
Rational eval_at(const ScalarQT& s, const Rational& q0, const Rational& t0);
/// Formal composition q := e1, t := e2.
ScalarQT substitute(const ScalarQT& s, const ScalarQT& e1, const ScalarQT& e2);
bool is_polynomial(const ScalarQT& s);
/// The polynomial if `s` lies in Z[q,t], nullopt otherwise.
std::optional<PolyQT> as_integer_poly(const ScalarQT& s);

/// Parses the display grammar: integers, q, t, + - * / ^ and parentheses.
/// Throws std::invalid_argument on malformed input.
ScalarQT parse_scalar(std::string_view text);

}  // namespace hopfscf

#endif  // HOPFSCF_SCALARS_HPP
