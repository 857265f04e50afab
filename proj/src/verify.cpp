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

#include "hopfscf/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

#include "hopfscf/charmap.hpp"
#include "hopfscf/fqsym.hpp"
#include "hopfscf/group.hpp"
#include "hopfscf/nsym.hpp"
#include "hopfscf/qsym.hpp"
#include "hopfscf/sym.hpp"

namespace hopfscf {

bool SuiteReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

namespace {

class Check {
   public:
    explicit Check(CheckResult& r) : r_(r) {}
    void expect(bool cond, const std::function<std::string()>& what) {
        ++r_.cases;
        if (!cond && r_.ok) {
            r_.ok = false;
            r_.detail = what();
        }
    }
    void count(std::size_t n) { r_.cases += n; }
    void note(std::string text) {
        if (r_.ok) r_.detail = std::move(text);
    }

   private:
    CheckResult& r_;
};

void run_check(SuiteReport& report, std::string name, const std::function<void(Check&)>& body) {
    CheckResult r;
    r.name = std::move(name);
    Check c(r);
    try {
        body(c);
    } catch (const std::exception& e) {
        r.ok = false;
        r.detail = std::string("exception: ") + e.what();
    }
    report.checks.push_back(std::move(r));
}

std::vector<Composition> compositions_up_to(int n) {
    std::vector<Composition> out;
    for (int k = 0; k <= n; ++k) {
        for (auto& c : compositions(k)) out.push_back(std::move(c));
    }
    return out;
}

Composition single(int k) { return k == 0 ? Composition{} : Composition{k}; }

std::string str(int x) { return std::to_string(x); }

QSymElem qbasis(QSymBasis b, const Composition& alpha, int nu = 0) {
    return QSymElem::basis_element(b, alpha, b == QSymBasis::Pi ? nu : 0);
}

NSymElem nbasis(NSymBasis b, const Composition& alpha, BasisParams p = {}) { return NSymElem::basis_element(b, alpha, p); }

QSymTensor qsym_tensor_product(const QSymTensor& x, const QSymTensor& y) {
    const QSymTensor a = convert(x, QSymBasis::M);
    const QSymTensor b = convert(y, QSymBasis::M);
    QSymTensor out{QSymBasis::M, 0, {}};
    for (const auto& [p, cp] : a.terms) {
        for (const auto& [r, cr] : b.terms) {
            const QSymElem left = product(qbasis(QSymBasis::M, p.first), qbasis(QSymBasis::M, r.first));
            const QSymElem right = product(qbasis(QSymBasis::M, p.second), qbasis(QSymBasis::M, r.second));
            for (const auto& [g1, c1] : left.terms()) {
                for (const auto& [g2, c2] : right.terms()) out.terms.add({g1, g2}, cp * cr * c1 * c2);
            }
        }
    }
    return out;
}

NSymTensor nsym_tensor_product(const NSymTensor& x, const NSymTensor& y) {
    const NSymTensor a = convert(x, NSymBasis::H);
    const NSymTensor b = convert(y, NSymBasis::H);
    NSymTensor out{NSymBasis::H, {}, {}};
    for (const auto& [p, cp] : a.terms) {
        for (const auto& [r, cr] : b.terms) out.terms.add({concat(p.first, r.first), concat(p.second, r.second)}, cp * cr);
    }
    return out;
}

std::vector<int> nus_or(const SuiteOptions& o, std::vector<int> fallback) { return o.nus.empty() ? fallback : o.nus; }

std::string nu_list(const std::vector<int>& nus) {
    std::string out;
    for (int nu : nus) out += (out.empty() ? "" : ",") + str(nu);
    return out;
}

// ---------------------------------------------------------------------------

SuiteReport hopf_axioms(const SuiteOptions& o) {
    const int d = o.max_degree.value_or(5);
    SuiteReport report{"hopf-axioms", {}};
    run_check(report, "QSym: coproduct of M-products is multiplicative, total degree <= " + str(d), [&](Check& c) {
        for (const auto& a : compositions_up_to(d)) {
            for (const auto& b : compositions_up_to(d - a.size())) {
                const QSymElem x = qbasis(QSymBasis::M, a);
                const QSymElem y = qbasis(QSymBasis::M, b);
                c.expect(coproduct(product(x, y)) == qsym_tensor_product(coproduct(x), coproduct(y)),
                         [&] { return "M" + a.to_string() + " M" + b.to_string(); });
            }
        }
    });
    run_check(report, "QSym: counit and antipode axioms on M_alpha, |alpha| <= " + str(d), [&](Check& c) {
        for (int n = 0; n <= d; ++n) {
            for (const auto& g : compositions(n)) {
                QSymElem left(QSymBasis::M);
                QSymElem right(QSymBasis::M);
                QSymElem unit_l(QSymBasis::M);
                QSymElem unit_r(QSymBasis::M);
                for (const auto& [pr, k] : coproduct(qbasis(QSymBasis::M, g)).terms) {
                    left += product(antipode_M(pr.first), qbasis(QSymBasis::M, pr.second)) * k;
                    right += product(qbasis(QSymBasis::M, pr.first), antipode_M(pr.second)) * k;
                    unit_l += qbasis(QSymBasis::M, pr.second) * (k * counit(qbasis(QSymBasis::M, pr.first)));
                    unit_r += qbasis(QSymBasis::M, pr.first) * (k * counit(qbasis(QSymBasis::M, pr.second)));
                }
                const QSymElem expected = n == 0 ? QSymElem::one() : QSymElem(QSymBasis::M);
                c.expect(left == expected && right == expected, [&] { return "antipode on M" + g.to_string(); });
                c.expect(unit_l == qbasis(QSymBasis::M, g) && unit_r == qbasis(QSymBasis::M, g),
                         [&] { return "counit on M" + g.to_string(); });
            }
        }
    });
    run_check(report, "NSym: coproduct is an algebra map on H pairs, total degree <= " + str(d), [&](Check& c) {
        for (const auto& a : compositions_up_to(d)) {
            for (const auto& b : compositions_up_to(d - a.size())) {
                const NSymElem x = nbasis(NSymBasis::H, a);
                const NSymElem y = nbasis(NSymBasis::H, b);
                c.expect(coproduct(product(x, y)) == nsym_tensor_product(coproduct(x), coproduct(y)),
                         [&] { return "H" + a.to_string() + " H" + b.to_string(); });
            }
        }
    });
    run_check(report, "NSym: coassociativity on B_alpha, |alpha| <= " + str(std::min(d, 5)), [&](Check& c) {
        using Triple = std::tuple<Composition, Composition, Composition>;
        for (const auto& g : compositions_up_to(std::min(d, 5))) {
            std::map<Triple, ScalarQT> left;
            std::map<Triple, ScalarQT> right;
            for (const auto& [pr, k] : coproduct(nbasis(NSymBasis::B, g)).terms) {
                for (const auto& [inner, x] : coproduct(nbasis(NSymBasis::B, pr.first)).terms) {
                    left[{inner.first, inner.second, pr.second}] += k * x;
                }
                for (const auto& [inner, x] : coproduct(nbasis(NSymBasis::B, pr.second)).terms) {
                    right[{pr.first, inner.first, inner.second}] += k * x;
                }
            }
            std::erase_if(left, [](const auto& kv) { return kv.second.is_zero(); });
            std::erase_if(right, [](const auto& kv) { return kv.second.is_zero(); });
            c.expect(left == right, [&] { return "B" + g.to_string(); });
        }
    });
    run_check(report, "FQSym: projection to QSym respects product and coproduct, n <= 4", [&](Check& c) {
        for (int m = 0; m <= 4; ++m) {
            std::vector<Word> us;
            Word u(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) u[static_cast<std::size_t>(i)] = i + 1;
            do {
                us.push_back(u);
            } while (std::next_permutation(u.begin(), u.end()));
            for (const Word& w : us) {
                const FQSymElem f(w, 1);
                c.expect(project_pi(coproduct(f)) == coproduct(project_pi(f)), [&] { return "Delta F_" + word_to_string(w); });
                for (int n = 0; m + n <= 6 && n <= 2; ++n) {
                    const Word v = descent_representative(SubsetLabel(n, split_points(n)));
                    c.expect(project_pi(product_F(w, v)) == product(project_pi(f), project_pi(FQSymElem(v, 1))),
                             [&] { return "F_" + word_to_string(w) + " F_" + word_to_string(v); });
                }
            }
        }
    });
    return report;
}

SuiteReport diagrams(const SuiteOptions& o) {
    SuiteReport report{"diagrams", {}};
    for (int nu : nus_or(o, {2, 3})) {
        const int bound = o.max_degree.value_or(nu == 2 ? 6 : nu == 3 ? 5 : 4);
        run_check(report, "nu=" + str(nu) + ": ch intertwines (m, coproduct) with (product, coproduct), degree <= " + str(bound),
                  [&](Check& c) {
                      const DiagramReport r = verify_diagrams(nu, bound);
                      c.count(r.products + r.coproducts - 1);
                      c.expect(r.ok, [&] { return r.failure; });
                      c.note(str(static_cast<int>(r.products)) + " products, " + str(static_cast<int>(r.coproducts)) + " coproducts");
                  });
    }
    return report;
}

SuiteReport dualities(const SuiteOptions& o) {
    const int d = o.max_degree.value_or(6);
    SuiteReport report{"dualities", {}};
    struct Pair {
        const char* name;
        NSymBasis left;
        QSymBasis right;
    };
    for (const Pair& p : {Pair{"(H, M)", NSymBasis::H, QSymBasis::M}, Pair{"(R, L)", NSymBasis::R, QSymBasis::L},
                          Pair{"(Estar, E)", NSymBasis::Estar, QSymBasis::E}}) {
        run_check(report, std::string("pairing matrix ") + p.name + " is the identity, n <= " + str(d), [&](Check& c) {
            for (int n = 0; n <= d; ++n) {
                const auto comps = compositions(n);
                std::vector<QSymElem> right;
                for (const auto& b : comps) right.push_back(convert(qbasis(p.right, b), QSymBasis::M));
                for (const auto& a : comps) {
                    const NSymElem f = convert(nbasis(p.left, a), NSymBasis::H);
                    for (std::size_t j = 0; j < comps.size(); ++j) {
                        c.expect(pairing(f, right[j]) == ScalarQT(a == comps[j] ? 1 : 0),
                                 [&] { return a.to_string() + " against " + comps[j].to_string(); });
                    }
                }
            }
        });
    }
    const auto nus = nus_or(o, {2, 3, 5});
    run_check(report, "Pi(nu) is dual to B(-nu, nu-1), n <= " + str(d) + ", nu in {" + nu_list(nus) + "}", [&](Check& c) {
        for (int nu : nus) {
            for (int n = 0; n <= d; ++n) {
                const auto comps = compositions(n);
                std::vector<QSymElem> right;
                for (const auto& b : comps) right.push_back(convert(qbasis(QSymBasis::Pi, b, nu), QSymBasis::M));
                for (const auto& a : comps) {
                    const NSymElem f = convert(nbasis(NSymBasis::B, a, {-nu, nu - 1}), NSymBasis::H);
                    for (std::size_t j = 0; j < comps.size(); ++j) {
                        c.expect(pairing(f, right[j]) == ScalarQT(a == comps[j] ? 1 : 0),
                                 [&] { return "nu=" + str(nu) + " " + a.to_string() + " against " + comps[j].to_string(); });
                    }
                }
            }
        }
    });
    return report;
}

SuiteReport specializations(const SuiteOptions& o) {
    const int d = o.max_degree.value_or(7);
    SuiteReport report{"specializations", {}};
    struct Spec {
        const char* name;
        int a;
        int b;
        NSymBasis target;
    };
    for (const Spec& s : {Spec{"B(1,0)_alpha = H_{alpha^c}", 1, 0, NSymBasis::H},
                          Spec{"B(-1,1)_alpha = Lambda_{alpha^c}", -1, 1, NSymBasis::Lambda},
                          Spec{"B(1,-1)_alpha = Estar_{alpha^c}", 1, -1, NSymBasis::Estar}}) {
        run_check(report, std::string(s.name) + ", |alpha| <= " + str(d), [&](Check& c) {
            for (const auto& alpha : compositions_up_to(d)) {
                const NSymElem lhs = nbasis(NSymBasis::B, alpha, {s.a, s.b});
                const NSymElem via_sub = specialize(nbasis(NSymBasis::B, alpha), s.a, s.b);
                const NSymElem rhs = nbasis(s.target, complement(alpha));
                c.expect(lhs == rhs && via_sub == rhs, [&] { return "alpha = " + alpha.to_string(); });
            }
        });
    }
    run_check(report, "coproduct of Bhat_k at (1,0) and (-1,1) gives those of H_k and Lambda_k, k <= " + str(d),
              [&](Check& c) {
                  for (int k = 0; k <= d; ++k) {
                      const NSymTensor closed = coproduct_bhat_n(k);
                      for (auto [a, b, basis] : {std::tuple{1, 0, NSymBasis::H}, std::tuple{-1, 1, NSymBasis::Lambda}}) {
                          // Bhat(a,b)_alpha = B(a,b)_{alpha^c}, which is H_alpha or Lambda_alpha here
                          NSymTensor spec{basis, {}, {}};
                          for (const auto& [pr, x] : closed.terms) spec.terms.add(pr, substitute(x, a, b));
                          c.expect(spec.terms.size() == static_cast<std::size_t>(k + 1) && spec == coproduct(nbasis(basis, single(k))),
                                   [&] { return "k = " + str(k) + " at (" + str(a) + "," + str(b) + ")"; });
                      }
                  }
              });
    return report;
}

SuiteReport omega_suite(const SuiteOptions& o) {
    const int d = o.max_degree.value_or(6);
    SuiteReport report{"omega", {}};
    const ScalarQT q = ScalarQT::q();
    const ScalarQT t = ScalarQT::t();
    run_check(report, "omega(Bhat(q,t)_alpha) = Bhat(-q, q+t)_{alpha^r}, |alpha| <= " + str(d), [&](Check& c) {
        for (const auto& alpha : compositions_up_to(d)) {
            c.expect(omega(nbasis(NSymBasis::Bhat, alpha)) == nbasis(NSymBasis::Bhat, alpha.reversed(), {-q, q + t}),
                     [&] { return "alpha = " + alpha.to_string(); });
        }
    });
    run_check(report, "omega is an involution on H_alpha and B_alpha, |alpha| <= " + str(d), [&](Check& c) {
        for (const auto& alpha : compositions_up_to(d)) {
            for (NSymBasis b : {NSymBasis::H, NSymBasis::B}) {
                const NSymElem x = nbasis(b, alpha);
                c.expect(omega(omega(x)) == x, [&] { return to_string(b) + alpha.to_string(); });
            }
        }
    });
    const int pd = std::min(d, 5);
    run_check(report, "omega(xy) = omega(y) omega(x) on (R, Estar) pairs, total degree <= " + str(pd), [&](Check& c) {
        for (const auto& a : compositions_up_to(pd)) {
            for (const auto& b : compositions_up_to(pd - a.size())) {
                const NSymElem x = nbasis(NSymBasis::R, a);
                const NSymElem y = nbasis(NSymBasis::Estar, b);
                c.expect(omega(product(x, y)) == product(omega(y), omega(x)),
                         [&] { return "R" + a.to_string() + " Estar" + b.to_string(); });
            }
        }
    });
    return report;
}

SuiteReport overlap(const SuiteOptions& o) {
    const int d = o.max_degree.value_or(8);
    SuiteReport report{"overlap", {}};
    run_check(report, "the three overlapping-shuffle sets have equal size, 1 <= m, n <= 4", [&](Check& c) {
        for (int m = 1; m <= 4; ++m) {
            for (int n = 1; n <= 4; ++n) {
                const IndexSet full = split_points(m + n);
                for (IndexSet i : subsets_of(split_points(m))) {
                    for (IndexSet j : subsets_of(split_points(n))) {
                        const auto brute = overlapping_shuffles_brute_force(complement(comp_of_set(i, m)), complement(comp_of_set(j, n)));
                        for (IndexSet k : subsets_of(full)) {
                            const auto it = brute.find(comp_of_set(full - k, m + n));
                            const long long size_a = it == brute.end() ? 0 : it->second;
                            long long size_b = 0;
                            long long size_c = 0;
                            for (IndexSet a : k_subsets(m + n, n)) {
                                const RunMarkers rm = run_markers(a, m + n);
                                if (!shuffle_admissible(k, preshuffle(i, j, a, m, n), rm)) continue;
                                if ((k - rm.c2).size() == i.size() + j.size()) ++size_b;
                                if ((k & rm.c2).empty()) ++size_c;
                            }
                            c.expect(size_a == size_b && size_b == size_c, [&] {
                                return "m=" + str(m) + " n=" + str(n) + " I=" + i.to_string() + " J=" + j.to_string() +
                                       " K=" + k.to_string();
                            });
                        }
                    }
                }
            }
        }
    });
    run_check(report, "C^K_{I,J}(1,0) equals the brute-force overlapping-shuffle count, 1 <= m, n <= 4", [&](Check& c) {
        for (int m = 1; m <= 4; ++m) {
            for (int n = 1; n <= 4; ++n) {
                const IndexSet full = split_points(m + n);
                for (IndexSet i : subsets_of(split_points(m))) {
                    for (IndexSet j : subsets_of(split_points(n))) {
                        const auto brute = overlapping_shuffles_brute_force(complement(comp_of_set(i, m)), complement(comp_of_set(j, n)));
                        for (IndexSet k : subsets_of(full)) {
                            const auto it = brute.find(comp_of_set(full - k, m + n));
                            const Rational count = it == brute.end() ? 0 : static_cast<long>(it->second);
                            c.expect(eval_at(structconst(k, i, m, j, n), 1, 0) == count, [&] {
                                return "I=" + i.to_string() + " J=" + j.to_string() + " K=" + k.to_string();
                            });
                        }
                    }
                }
            }
        }
    });
    const int gd = std::min(d, 7);
    run_check(report, "overlapping-shuffle generator agrees with brute force, |alpha|+|beta| <= " + str(gd), [&](Check& c) {
        for (const auto& a : compositions_up_to(gd)) {
            for (const auto& b : compositions_up_to(gd - a.size())) {
                c.expect(overlapping_shuffles(a, b) == overlapping_shuffles_brute_force(a, b),
                         [&] { return a.to_string() + " and " + b.to_string(); });
            }
        }
    });
    run_check(report, "M-product by overlapping shuffles equals the L-route, |alpha|+|beta| <= " + str(d), [&](Check& c) {
        for (const auto& a : compositions_up_to(d)) {
            for (const auto& b : compositions_up_to(d - a.size())) {
                const QSymElem x = qbasis(QSymBasis::M, a);
                const QSymElem y = qbasis(QSymBasis::M, b);
                const QSymElem via_l = product(convert(x, QSymBasis::L), convert(y, QSymBasis::L));
                c.expect(product(x, y) == via_l, [&] { return "M" + a.to_string() + " M" + b.to_string(); });
            }
        }
    });
    return report;
}

SuiteReport group_axioms(const SuiteOptions& o) {
    SuiteReport report{"group-axioms", {}};
    for (int nu : nus_or(o, {2, 3})) {
        const int bound = o.max_degree.value_or(nu == 2 ? 7 : nu == 3 ? 5 : 3);
        run_check(report,
                  "nu=" + str(nu) + ", n <= " + str(bound) +
                      ": C1-C3, superclass partition, lattice cores, Hall orthogonality",
                  [&](Check& c) {
                      for (int n = 1; n <= bound; ++n) {
                          const AxiomReport r = verify_axioms(GroupSpec::standard(nu, n));
                          c.expect(r.ok, [&] { return "n=" + str(n) + ": " + r.failure; });
                      }
                  });
        run_check(report,
                  "nu=" + str(nu) + ", n <= " + str(bound) +
                      ": <chi^I,chi^I> = (nu-1)^{|I^c|}; <kappa_I,kappa_I> is the reciprocal of nu^{n-1}/(nu-1)^{|I|}",
                  [&](Check& c) {
                      for (int n = 1; n <= bound; ++n) {
                          const GroupSpec spec = GroupSpec::standard(nu, n);
                          const IndexSet full = split_points(n);
                          for (IndexSet i : subsets_of(full)) {
                              const ClassFunction x = chi(spec, i);
                              const ClassFunction k = kappa(spec, i);
                              const Rational displayed = pow(Rational(nu), n - 1) / pow(Rational(nu - 1), i.size());
                              c.expect(hall_inner(x, x) == pow(Rational(nu - 1), (full - i).size()),
                                       [&] { return "chi norm, n=" + str(n) + " I=" + i.to_string(); });
                              c.expect(hall_inner(k, k) * displayed == 1,
                                       [&] { return "kappa norm, n=" + str(n) + " I=" + i.to_string(); });
                          }
                      }
                      c.note("kappa norms equal (nu-1)^{|I|}/nu^{n-1} under (1/|G|) sum phi(g) psi(g^-1)");
                  });
    }
    return report;
}

SuiteReport integrality(const SuiteOptions& o) {
    const int d = o.max_degree.value_or(6);
    SuiteReport report{"integrality", {}};
    run_check(report, "C^K_{I,J} from the closed sum equals the coefficient of the H-route coproduct of B_K, k <= " + str(d),
              [&](Check& c) {
                  for (int k = 0; k <= d; ++k) {
                      for (IndexSet big_k : subsets_of(split_points(k))) {
                          const NSymTensor via_h = coproduct(nbasis(NSymBasis::B, comp_of_set(big_k, k)));
                          const auto table = structconst_table(k, big_k);
                          c.expect(table.size() == via_h.terms.size(),
                                   [&] { return "term count, k=" + str(k) + " K=" + big_k.to_string(); });
                          for (int m = 0; m <= k; ++m) {
                              for (IndexSet i : subsets_of(split_points(m))) {
                                  for (IndexSet j : subsets_of(split_points(k - m))) {
                                      const ScalarQT closed = structconst(big_k, i, m, j, k - m);
                                      const ScalarQT route = via_h.terms.coefficient({comp_of_set(i, m), comp_of_set(j, k - m)});
                                      c.expect(closed == route, [&] {
                                          return "K=" + big_k.to_string() + " m=" + str(m) + " I=" + i.to_string() +
                                                 " J=" + j.to_string() + ": " + closed.to_string() + " vs " + route.to_string();
                                      });
                                  }
                              }
                          }
                      }
                  }
              });
    run_check(report, "every C^K_{I,J} lies in Z[q,t], k <= " + str(d), [&](Check& c) {
        for (int k = 0; k <= d; ++k) {
            for (IndexSet big_k : subsets_of(split_points(k))) {
                for (const StructConstRow& row : structconst_table(k, big_k)) {
                    c.expect(as_integer_poly(row.value).has_value(), [&] {
                        return "K=" + big_k.to_string() + " I=" + row.i.to_string() + " J=" + row.j.to_string() + ": " +
                               row.value.to_string();
                    });
                }
            }
        }
    });
    run_check(report, "closed coproduct of Bhat_k equals the H-route, k <= " + str(d), [&](Check& c) {
        for (int k = 0; k <= d; ++k) {
            c.expect(coproduct_bhat_n(k) == coproduct(nbasis(NSymBasis::Bhat, single(k))), [&] { return "k = " + str(k); });
        }
    });
    return report;
}

SuiteReport transitions(const SuiteOptions& o) {
    const int d = o.max_degree.value_or(8);
    const auto nus = nus_or(o, {2, 3, 5});
    SuiteReport report{"transitions", {}};
    struct Pair {
        const char* name;
        QSymBasis other;
    };
    for (const Pair& p : {Pair{"L", QSymBasis::L}, Pair{"M", QSymBasis::M}}) {
        run_check(report,
                  std::string("Pi(nu)/") + p.name + " transition matrices are mutually inverse, n <= " + str(d) +
                      ", nu in {" + nu_list(nus) + "}",
                  [&](Check& c) {
                      for (int nu : nus) {
                          for (int n = 0; n <= d; ++n) {
                              const RationalMatrix to = transition_matrix(p.other, QSymBasis::Pi, n, nu);
                              const RationalMatrix from = transition_matrix(QSymBasis::Pi, p.other, n, nu);
                              const RationalMatrix id = RationalMatrix::identity(to.rows());
                              c.expect(to * from == id && from * to == id, [&] { return "nu=" + str(nu) + " n=" + str(n); });
                          }
                      }
                  });
    }
    run_check(report, "B(q,t)/H matrix M and its inverse N satisfy MN = NM = I symbolically, n <= " + str(d), [&](Check& c) {
        for (int n = 0; n <= d; ++n) {
            const auto labels = subsets_of(split_points(n));
            std::map<IndexSet, std::size_t> index;
            for (IndexSet s : labels) index.emplace(s, index.size());
            // rows of M (B -> H), sparse
            std::vector<std::vector<std::pair<std::size_t, ScalarQT>>> rows;
            for (IndexSet i : labels) {
                auto& row = rows.emplace_back();
                for (const auto& [beta, x] : b_to_H(comp_of_set(i, n))) row.emplace_back(index.at(set_of_comp(beta).members()), x);
            }
            std::vector<std::vector<ScalarQT>> inv(labels.size(), std::vector<ScalarQT>(labels.size()));
            for (std::size_t a = 0; a < labels.size(); ++a) {
                for (std::size_t b = 0; b < labels.size(); ++b) inv[a][b] = inverse_entry(labels[a], labels[b], n);
            }
            bool ok = true;
            for (std::size_t a = 0; a < labels.size() && ok; ++a) {
                for (std::size_t a2 = 0; a2 < labels.size() && ok; ++a2) {
                    ScalarQT s;
                    for (const auto& [j, x] : rows[a]) s += x * inv[a2][j];
                    ok = s == ScalarQT(a == a2 ? 1 : 0);
                }
            }
            c.expect(ok, [&] { return "MN, n=" + str(n); });
            // NM: Σ_I N_{I,J} M_{I,J'}
            std::vector<std::vector<ScalarQT>> nm(labels.size(), std::vector<ScalarQT>(labels.size()));
            for (std::size_t a = 0; a < labels.size(); ++a) {
                for (const auto& [j2, x] : rows[a]) {
                    for (std::size_t j = 0; j < labels.size(); ++j) {
                        if (!inv[a][j].is_zero()) nm[j][j2] += inv[a][j] * x;
                    }
                }
            }
            ok = true;
            for (std::size_t j = 0; j < labels.size(); ++j) {
                for (std::size_t j2 = 0; j2 < labels.size(); ++j2) ok = ok && nm[j][j2] == ScalarQT(j == j2 ? 1 : 0);
            }
            c.expect(ok, [&] { return "NM, n=" + str(n); });
        }
    });
    return report;
}

SuiteReport kappa_bridge(const SuiteOptions& o) {
    const int d = o.max_degree.value_or(6);
    SuiteReport report{"kappa-bridge", {}};
    for (int nu : nus_or(o, {2, 3})) {
        run_check(report,
                  "nu=" + str(nu) + ", m+n <= " + str(d) +
                      ": dense m(kappa_I, kappa_J) = closed A-sum = (nu-1)^{|I|+|J|-|K|} C^K_{I,J}(-nu, nu-1)",
                  [&](Check& c) {
                      for (int m = 0; m <= d; ++m) {
                          for (int n = 0; m + n <= d; ++n) {
                              for (IndexSet i : subsets_of(split_points(m))) {
                                  for (IndexSet j : subsets_of(split_points(n))) {
                                      const ClassFunction a = kappa(GroupSpec::standard(nu, m), i);
                                      const ClassFunction b = kappa(GroupSpec::standard(nu, n), j);
                                      const auto dense = expand_in_kappa(product_m(a, m, b, n));
                                      const auto closed = kappa_product_formula(i, m, j, n, nu);
                                      auto tag = [&] { return "m=" + str(m) + " n=" + str(n) + " I=" + i.to_string() + " J=" + j.to_string(); };
                                      c.expect(dense == closed, tag);
                                      for (IndexSet k : subsets_of(split_points(m + n))) {
                                          const auto it = dense.find(k);
                                          const Rational dk = it == dense.end() ? Rational(0) : it->second;
                                          const Rational cst = eval_at(structconst(k, i, m, j, n), -nu, nu - 1);
                                          c.expect(cst == pow(Rational(nu - 1), k.size() - i.size() - j.size()) * dk,
                                                   [&] { return tag() + " K=" + k.to_string(); });
                                      }
                                  }
                              }
                          }
                      }
                  });
    }
    return report;
}

SuiteReport generating_sets(const SuiteOptions& o) {
    const int d = o.max_degree.value_or(8);
    SuiteReport report{"generating-sets", {}};
    for (auto [a, b] : {std::pair{2, 3}, std::pair{1, 1}}) {
        run_check(report,
                  "(a,b)=(" + str(a) + "," + str(b) + "): Bhat(a,b)_n generate NSym_n (rank 2^{n-1}) and their comm images span Sym_n (rank p(n)), n <= " +
                      str(d),
                  [&](Check& c) {
                      const RankReport r = generating_set_rank(a, b, d);
                      std::string ranks;
                      for (const RankRow& row : r.rows) {
                          c.expect(row.nsym_rank == row.nsym_dim && row.sym_rank == row.sym_dim, [&] {
                              return "n=" + str(row.n) + ": NSym rank " + std::to_string(row.nsym_rank) + "/" +
                                     std::to_string(row.nsym_dim) + ", Sym rank " + std::to_string(row.sym_rank) + "/" +
                                     std::to_string(row.sym_dim);
                          });
                          ranks += (ranks.empty() ? "" : " ") + std::to_string(row.nsym_rank) + "/" + std::to_string(row.sym_rank);
                      }
                      c.note("ranks (NSym/Sym) by n: " + ranks);
                  });
    }
    return report;
}

using SuiteFn = SuiteReport (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"hopf-axioms", hopf_axioms},   {"diagrams", diagrams},         {"dualities", dualities},
        {"specializations", specializations}, {"omega", omega_suite},   {"overlap", overlap},
        {"group-axioms", group_axioms}, {"integrality", integrality},   {"transitions", transitions},
        {"kappa-bridge", kappa_bridge}, {"generating-sets", generating_sets},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
    for (const auto& [n, fn] : registry()) {
        if (n == name) return fn(options);
    }
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

Multiset<Composition> overlapping_shuffles_brute_force(const Composition& alpha, const Composition& beta) {
    Multiset<Composition> out;
    const int a = alpha.length();
    const int b = beta.length();
    for (int len = std::max(a, b); len <= a + b; ++len) {
        const IndexSet all = IndexSet::range(len);
        for (IndexSet pa : k_subsets(len, a)) {
            for (IndexSet pb : k_subsets(len, b)) {
                if ((pa | pb) != all) continue;
                std::vector<int> parts(static_cast<std::size_t>(len), 0);
                const auto ea = pa.elements();
                const auto eb = pb.elements();
                for (int x = 0; x < a; ++x) parts[static_cast<std::size_t>(ea[static_cast<std::size_t>(x)] - 1)] += alpha[x];
                for (int x = 0; x < b; ++x) parts[static_cast<std::size_t>(eb[static_cast<std::size_t>(x)] - 1)] += beta[x];
                ++out[Composition(parts)];
            }
        }
    }
    return out;
}

}  // namespace hopfscf
