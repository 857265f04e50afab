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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hopfscf/group.hpp"
#include "hopfscf/nsym.hpp"
#include "hopfscf/verify.hpp"

using namespace hopfscf;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome from_suite(const SuiteReport& r) {
    Outcome out;
    std::size_t cases = 0;
    for (const auto& c : r.checks) {
        cases += c.cases;
        if (!c.ok && out.ok) {
            out.ok = false;
            out.detail = c.name + ": " + c.detail;
        }
    }
    if (out.ok) out.detail = std::to_string(r.checks.size()) + " checks, " + std::to_string(cases) + " cases";
    return out;
}

Outcome suite(std::string_view name, SuiteOptions options = {}) { return from_suite(run_suite(name, options)); }

Outcome a_shuffle_example() {
    const IndexSet expected{1, 3, 4, 5, 6};
    if (a_shuffle({2, 3}, {2}, {1, 3, 4}, 4, 3) != expected) return {false, "combinatorial A-shuffle differs"};
    for (int nu : {2, 3}) {
        const ClassFunction phi = dot_chi(GroupSpec::standard(nu, 4), {2, 3});
        const ClassFunction psi = dot_chi(GroupSpec::standard(nu, 3), {2});
        if (!(product_mA(phi, 4, psi, 3, {1, 3, 4}) == dot_chi(GroupSpec::standard(nu, 7), expected))) {
            return {false, "dense m_A differs at nu = " + std::to_string(nu)};
        }
    }
    return {true, "{2,3} A-shuffle {2} at A={1,3,4} = {1,3,4,5,6}; dense m_A agrees for nu = 2, 3"};
}

Outcome bhat3_example() {
    // The displayed expansion: one summand per A ⊆ [3], the two giving Bhat_1 ⊗ Bhat_2 merged.
    using Entry = std::pair<CompPair, std::string>;
    std::vector<Entry> listed;
    ScalarQT merged;
    for (const auto& term : coproduct_bhat_terms(3)) {
        if (term.left == Composition{1} && term.right == Composition{2}) {
            merged += term.coeff;
            continue;
        }
        listed.push_back({{term.left, term.right}, term.coeff.to_string()});
    }
    listed.push_back({{Composition{1}, Composition{2}}, merged.to_string()});
    std::sort(listed.begin(), listed.end());
    std::vector<Entry> expected{
        {{Composition{}, Composition{3}}, "1"},
        {{Composition{1}, Composition{2}}, "q + 2*t"},
        {{Composition{1}, Composition{1, 1}}, "q*t + t^2"},
        {{Composition{2}, Composition{1}}, "t"},
        {{Composition{1, 1}, Composition{1}}, "q*t + t^2"},
        {{Composition{2}, Composition{1}}, "q + t"},
        {{Composition{3}, Composition{}}, "1"},
    };
    std::sort(expected.begin(), expected.end());
    if (listed != expected) return {false, "seven-term list differs"};
    if (!(coproduct_bhat_n(3) == coproduct(NSymElem::basis_element(NSymBasis::Bhat, Composition{3})))) {
        return {false, "closed form differs from the H-route coproduct"};
    }
    return {true, "coefficients 1, q + 2*t, q*t + t^2, t, q*t + t^2, q + t, 1; agrees with the H-route"};
}

Outcome kappa_bridge() {
    Outcome out = suite("kappa-bridge", {6, {2, 3}});
    if (!out.ok) return out;
    std::ifstream in(std::string(HOPFSCF_GOLDEN_DIR) + "/kappa_product_m2_n3_I1_J2.txt");
    if (!in) return {false, "golden file missing"};
    std::map<int, std::map<IndexSet, Rational>> golden;
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        int nu = 0;
        std::string k;
        std::string coeff;
        row >> nu >> k >> coeff;
        for (char& ch : k) {
            if (ch == '{' || ch == '}' || ch == ',') ch = ' ';
        }
        std::istringstream ks(k);
        std::vector<int> elems;
        for (int x = 0; ks >> x;) elems.push_back(x);
        golden[nu][IndexSet(elems)] = Rational(coeff);
    }
    for (const auto& [nu, expansion] : golden) {
        const ClassFunction a = kappa(GroupSpec::standard(nu, 2), {1});
        const ClassFunction b = kappa(GroupSpec::standard(nu, 3), {2});
        if (expand_in_kappa(product_m(a, 2, b, 3)) != expansion) return {false, "golden file differs at nu = " + std::to_string(nu)};
    }
    out.detail += "; golden m(kappa_{1}, kappa_{2}) matches for nu = 2, 3";
    return out;
}

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "A-shuffle worked example, combinatorial and dense", 1, a_shuffle_example},
        {2, "coproduct of Bhat(q,t)_3, seven-term expansion", 1, bhat3_example},
        {3, "specializations B(1,0), B(-1,1), B(1,-1), |alpha| <= 7", 30, [] { return suite("specializations", {7, {}}); }},
        {4, "ch intertwines the group and QSym Hopf structures (nu=2: deg <= 6, nu=3: deg <= 5)", 120,
         [] {
             Outcome a = suite("diagrams", {6, {2}});
             Outcome b = suite("diagrams", {5, {3}});
             if (!a.ok) return a;
             if (!b.ok) return b;
             return Outcome{true, "nu=2: " + a.detail + "; nu=3: " + b.detail};
         }},
        {5, "Pi/L, Pi/M and B/H transition matrices are mutually inverse, n <= 8", 60,
         [] { return suite("transitions", {8, {2, 3, 5}}); }},
        {6, "structure constants: closed sum = H-route, all in Z[q,t], k <= 6", 120, [] { return suite("integrality", {6, {}}); }},
        {7, "kappa-bridge: dense d_K = closed formula = rescaled C^K_{I,J}(-nu, nu-1), m+n <= 6", 60, kappa_bridge},
        {8, "omega(Bhat(q,t)_alpha) = Bhat(-q, q+t)_{alpha^r} and omega^2 = id, |alpha| <= 6", 30,
         [] { return suite("omega", {6, {}}); }},
        {9, "overlapping shuffles: three equal sets, C(1,0) count, M-product vs L-route (<= 8)", 60,
         [] { return suite("overlap", {8, {}}); }},
        {10,
         "group axioms C1-C3, partition, lattice cores, Hall norms (kappa norm checked as the reciprocal of "
         "nu^{n-1}/(nu-1)^{|I|}); nu=2 n<=7, nu=3 n<=5",
         60, [] { return suite("group-axioms", {std::nullopt, {2, 3}}); }},
        {11, "generating sets: NSym_n rank 2^{n-1}, Sym_n rank p(n), (a,b) in {(2,3),(1,1)}, n <= 8", 60,
         [] { return suite("generating-sets", {8, {}}); }},
        {12, "pairing matrices (H,M), (R,L), (Estar,E) are the identity, n <= 6", 30, [] { return suite("dualities", {6, {}}); }},
    };

    bool all = true;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_seconds;
        const bool pass = o.ok && in_time;
        all = all && pass;
        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << c.id << "] " << c.title << "  (" << std::fixed
             << std::setprecision(2) << secs << " s, limit " << std::setprecision(0) << c.limit_seconds << " s)";
        if (!in_time) line << "  over the time limit";
        if (!o.detail.empty()) line << "  -- " << o.detail;
        std::cout << line.str() << std::endl;
    }
    return all ? 0 : 1;
}
