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

#include "hopfscf/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hopfscf {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("zero raised to a negative power");
        return pow(Rational(1) / base, -exponent);
    }
    Rational out = 1;
    Rational b = base;
    for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
        if (e & 1U) out *= b;
        if (e > 1) b *= b;
    }
    return out;
}

// ---------------------------------------------------------------------------
// PolyQT

namespace {

bool display_before(Monomial a, Monomial b) {
    const int da = a.q + a.t;
    const int db = b.q + b.t;
    if (da != db) return da > db;
    return a.q > b.q;
}

std::string monomial_string(Monomial m) {
    std::string out;
    auto var = [&out](char v, int e) {
        if (e == 0) return;
        if (!out.empty()) out += '*';
        out += v;
        if (e > 1) out += '^' + std::to_string(e);
    };
    var('q', m.q);
    var('t', m.t);
    return out;
}

}  // namespace

PolyQT::PolyQT(const Rational& c) {
    if (c != 0) terms_.emplace_back(Monomial{}, c);
}

PolyQT PolyQT::monomial(const Rational& c, int q_exp, int t_exp) {
    if (q_exp < 0 || t_exp < 0) throw std::invalid_argument("PolyQT exponents must be nonnegative");
    PolyQT p;
    if (c != 0) p.terms_.emplace_back(Monomial{q_exp, t_exp}, c);
    return p;
}

bool PolyQT::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first == Monomial{});
}

Rational PolyQT::constant() const {
    if (terms_.empty() || terms_.front().first != Monomial{}) return 0;
    return terms_.front().second;
}

bool PolyQT::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& x) { return x.second.get_den() == 1; });
}

Monomial PolyQT::min_exponents() const {
    if (terms_.empty()) return {};
    Monomial m{terms_.front().first.q, terms_.front().first.t};
    for (const auto& [mono, c] : terms_) {
        m.q = std::min(m.q, mono.q);
        m.t = std::min(m.t, mono.t);
    }
    return m;
}

int PolyQT::total_degree() const {
    int d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.q + mono.t);
    return d;
}

void PolyQT::add_term(Monomial m, const Rational& c) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& x, Monomial key) { return x.first < key; });
    if (it != terms_.end() && it->first == m) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else if (c != 0) {
        terms_.insert(it, Term{m, c});
    }
}

PolyQT& PolyQT::operator+=(const PolyQT& o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            Rational c = a->second + b->second;
            if (c != 0) merged.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

PolyQT& PolyQT::operator-=(const PolyQT& o) { return *this += -o; }

PolyQT PolyQT::operator-() const {
    PolyQT out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

PolyQT operator*(const PolyQT& a, const PolyQT& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_constant()) {
        PolyQT out = a;
        out *= b.constant();
        return out;
    }
    if (a.is_constant()) {
        PolyQT out = b;
        out *= a.constant();
        return out;
    }
    std::map<Monomial, Rational> acc;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) acc[Monomial{ma.q + mb.q, ma.t + mb.t}] += ca * cb;
    }
    PolyQT out;
    for (auto& [m, c] : acc) {
        if (c != 0) out.terms_.emplace_back(m, std::move(c));
    }
    return out;
}

PolyQT& PolyQT::operator*=(const PolyQT& o) { return *this = *this * o; }

PolyQT& PolyQT::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

PolyQT PolyQT::pow(int e) const {
    if (e < 0) throw std::invalid_argument("PolyQT::pow needs a nonnegative exponent");
    PolyQT out = 1;
    PolyQT b = *this;
    for (unsigned k = static_cast<unsigned>(e); k != 0; k >>= 1) {
        if (k & 1U) out *= b;
        if (k > 1) b *= b;
    }
    return out;
}

PolyQT PolyQT::shift_down(Monomial m) const {
    PolyQT out = *this;
    for (auto& [mono, c] : out.terms_) {
        mono.q -= m.q;
        mono.t -= m.t;
        if (mono.q < 0 || mono.t < 0) throw std::logic_error("shift_down below zero exponent");
    }
    return out;
}

std::optional<PolyQT> PolyQT::divide_exact(const PolyQT& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (d.is_constant()) {
        PolyQT out = *this;
        out *= Rational(1) / d.constant();
        return out;
    }
    PolyQT rem = *this;
    PolyQT quot;
    const auto& [ld, lc] = d.leading();
    while (!rem.is_zero()) {
        const auto& [lr, rc] = rem.leading();
        if (lr.q < ld.q || lr.t < ld.t) return std::nullopt;
        const PolyQT step = monomial(rc / lc, lr.q - ld.q, lr.t - ld.t);
        quot += step;
        rem -= step * d;
    }
    return quot;
}

Rational PolyQT::eval(const Rational& q0, const Rational& t0) const {
    Rational out = 0;
    for (const auto& [m, c] : terms_) out += c * hopfscf::pow(q0, m.q) * hopfscf::pow(t0, m.t);
    return out;
}

std::string PolyQT::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    order.reserve(terms_.size());
    for (const auto& x : terms_) order.push_back(&x);
    std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) { return display_before(a->first, b->first); });
    std::string out;
    bool first = true;
    for (const Term* term : order) {
        const Rational& c = term->second;
        const Rational mag = abs(c);
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const std::string mono = monomial_string(term->first);
        if (mono.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str() + "*" + mono;
        }
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// ScalarQT

ScalarQT::ScalarQT(PolyQT num, PolyQT den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void ScalarQT::normalize() {
    if (den_.is_zero()) throw std::domain_error("division by zero in Q(q,t)");
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_.is_constant()) {
        if (den_.constant() != 1) {
            num_ *= Rational(1) / den_.constant();
            den_ = 1;
        }
        return;
    }
    const Monomial mn = num_.min_exponents();
    const Monomial md = den_.min_exponents();
    const Monomial common{std::min(mn.q, md.q), std::min(mn.t, md.t)};
    if (common != Monomial{}) {
        num_ = num_.shift_down(common);
        den_ = den_.shift_down(common);
    }
    if (!den_.is_monomial()) {
        if (auto quot = num_.divide_exact(den_)) {
            num_ = std::move(*quot);
            den_ = 1;
            return;
        }
        if (auto inv = den_.divide_exact(num_)) {
            den_ = std::move(*inv);
            num_ = 1;
        }
    }
    if (den_.is_constant()) {
        num_ *= Rational(1) / den_.constant();
        den_ = 1;
        return;
    }
    // integer coefficients with gcd 1 in the denominator, display-leading term positive
    BigInt den_lcm = 1;
    BigInt num_gcd = 0;
    const PolyQT::Term* lead = nullptr;
    for (const auto& term : den_.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), term.second.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), term.second.get_num_mpz_t());
        if (lead == nullptr || display_before(term.first, lead->first)) lead = &term;
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (lead->second < 0) scale = -scale;
    if (scale != 1) {
        num_ *= scale;
        den_ *= scale;
    }
}

bool ScalarQT::is_one() const { return num_ == den_; }

ScalarQT& ScalarQT::operator+=(const ScalarQT& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else if (den_.is_constant() && o.den_.is_constant()) {
        num_ += o.num_;  // both are 1 after normalization
    } else if (auto r = o.den_.divide_exact(den_)) {
        num_ = num_ * *r + o.num_;
        den_ = o.den_;
    } else if (auto s = den_.divide_exact(o.den_)) {
        num_ += o.num_ * *s;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

ScalarQT& ScalarQT::operator-=(const ScalarQT& o) { return *this += -o; }

ScalarQT& ScalarQT::operator*=(const ScalarQT& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = ScalarQT{};
    num_ *= o.num_;
    den_ *= o.den_;
    if (den_.is_constant()) return *this;  // both denominators were 1
    normalize();
    return *this;
}

ScalarQT& ScalarQT::operator/=(const ScalarQT& o) {
    if (o.is_zero()) throw std::domain_error("division by zero in Q(q,t)");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

ScalarQT ScalarQT::operator-() const {
    ScalarQT out = *this;
    out.num_ = -out.num_;
    return out;
}

ScalarQT ScalarQT::pow(int e) const {
    if (e < 0) {
        if (is_zero()) throw std::domain_error("zero raised to a negative power");
        return ScalarQT(den_.pow(-e), num_.pow(-e));
    }
    ScalarQT out;
    out.num_ = num_.pow(e);
    out.den_ = den_.pow(e);
    return out;
}

bool operator==(const ScalarQT& a, const ScalarQT& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string ScalarQT::to_string() const {
    if (den_.is_constant()) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    return n + " / (" + den_.to_string() + ")";
}

Rational eval_at(const ScalarQT& s, const Rational& q0, const Rational& t0) {
    const Rational d = s.den().eval(q0, t0);
    if (d == 0) {
        throw std::domain_error("denominator " + s.den().to_string() + " vanishes at (q,t) = (" + q0.get_str() +
                                "," + t0.get_str() + ")");
    }
    return s.num().eval(q0, t0) / d;
}

namespace {

ScalarQT substitute_poly(const PolyQT& p, const ScalarQT& e1, const ScalarQT& e2, std::vector<ScalarQT>& q_pows,
                         std::vector<ScalarQT>& t_pows) {
    auto power = [](std::vector<ScalarQT>& cache, const ScalarQT& base, int k) -> const ScalarQT& {
        if (cache.empty()) cache.emplace_back(1);
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * base);
        return cache[static_cast<std::size_t>(k)];
    };
    ScalarQT out;
    for (const auto& [m, c] : p.terms()) out += ScalarQT(c) * power(q_pows, e1, m.q) * power(t_pows, e2, m.t);
    return out;
}

}  // namespace

ScalarQT substitute(const ScalarQT& s, const ScalarQT& e1, const ScalarQT& e2) {
    std::vector<ScalarQT> q_pows;
    std::vector<ScalarQT> t_pows;
    const ScalarQT n = substitute_poly(s.num(), e1, e2, q_pows, t_pows);
    const ScalarQT d = substitute_poly(s.den(), e1, e2, q_pows, t_pows);
    if (d.is_zero()) throw std::domain_error("substitution makes the denominator vanish");
    return n / d;
}

bool is_polynomial(const ScalarQT& s) {
    if (s.den().is_constant()) return true;
    return s.num().divide_exact(s.den()).has_value();
}

std::optional<PolyQT> as_integer_poly(const ScalarQT& s) {
    std::optional<PolyQT> p = s.num().divide_exact(s.den());
    if (!p || !p->has_integer_coefficients()) return std::nullopt;
    return p;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class ScalarParser {
   public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    ScalarQT parse() {
        ScalarQT v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return v;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cannot parse scalar \"" + std::string(text_) + "\": " + what + " at offset " +
                                    std::to_string(pos_));
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    ScalarQT expr() {
        ScalarQT v = term();
        while (true) {
            if (accept('+')) {
                v += term();
            } else if (accept('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }
    ScalarQT term() {
        ScalarQT v = unary();
        while (true) {
            if (accept('*')) {
                v *= unary();
            } else if (accept('/')) {
                ScalarQT d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }
    ScalarQT unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }
    ScalarQT power() {
        ScalarQT base = atom();
        if (accept('^')) {
            skip_ws();
            bool negative = false;
            if (pos_ < text_.size() && text_[pos_] == '-') {
                negative = true;
                ++pos_;
            }
            const std::string digits = number_token();
            if (digits.empty()) fail("expected an exponent");
            const int e = std::stoi(digits);
            return base.pow(negative ? -e : e);
        }
        return base;
    }
    std::string number_token() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }
    ScalarQT atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ScalarQT v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (c == 'q') {
            ++pos_;
            return ScalarQT::q();
        }
        if (c == 't') {
            ++pos_;
            return ScalarQT::t();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return ScalarQT(Rational(BigInt(number_token())));
        fail("unexpected character");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ScalarQT parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace hopfscf
