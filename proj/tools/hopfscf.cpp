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

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include "hopfscf/fqsym.hpp"
#include "hopfscf/nsym.hpp"
#include "hopfscf/qsym.hpp"
#include "hopfscf/verify.hpp"

using namespace hopfscf;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<int> parse_int_list(const std::string& body, const std::string& what) {
    std::vector<int> out;
    if (trim(body).empty()) return out;
    std::stringstream ss(body);
    for (std::string item; std::getline(ss, item, ',');) {
        item = trim(item);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError("bad integer '" + item + "' in " + what);
        }
        if (used != item.size()) throw UsageError("bad integer '" + item + "' in " + what);
        out.push_back(v);
    }
    return out;
}

// "(1,3,2)" or "()"
Composition parse_composition(const std::string& text) {
    const std::string s = trim(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw UsageError("composition must look like (1,3,2): '" + text + "'");
    try {
        return Composition(parse_int_list(s.substr(1, s.size() - 2), "composition"));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// "{1,3}" or "{}"
IndexSet parse_subset(const std::string& text) {
    const std::string s = trim(text);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw UsageError("subset must look like {1,3}: '" + text + "'");
    try {
        return IndexSet(parse_int_list(s.substr(1, s.size() - 2), "subset"));
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
}

using AnyBasis = std::variant<QSymBasis, NSymBasis>;

AnyBasis parse_basis(const std::string& tag) {
    if (auto b = parse_qsym_basis(tag)) return *b;
    if (auto b = parse_nsym_basis(tag)) return *b;
    throw UsageError("unknown basis '" + tag + "'");
}

struct Context {
    int nu = 0;
    BasisParams params;
};

using AnyElem = std::variant<QSymElem, NSymElem>;

// "B:(1,2)"
AnyElem parse_element(const std::string& text, const Context& ctx) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("element must look like BASIS:(parts), got '" + text + "'");
    const AnyBasis basis = parse_basis(trim(text.substr(0, colon)));
    const Composition alpha = parse_composition(text.substr(colon + 1));
    if (const auto* q = std::get_if<QSymBasis>(&basis)) {
        if (*q == QSymBasis::Pi && ctx.nu < 2) throw UsageError("the Pi basis needs --nu >= 2");
        return QSymElem::basis_element(*q, alpha, *q == QSymBasis::Pi ? ctx.nu : 0);
    }
    return NSymElem::basis_element(std::get<NSymBasis>(basis), alpha, ctx.params);
}

Json terms_json(const FormalSum<Composition>& terms) {
    Json out = Json::array();
    for (const auto& [alpha, c] : terms) out.push_back(Json{{"comp", alpha.parts()}, {"coeff", c.to_string()}});
    return out;
}

Json to_json(const QSymElem& x) {
    Json out;
    out["basis"] = to_string(x.basis());
    if (x.basis() == QSymBasis::Pi) out["nu"] = x.nu();
    out["terms"] = terms_json(x.terms());
    return out;
}

Json to_json(const NSymElem& x) {
    Json out;
    out["basis"] = to_string(x.basis());
    if ((x.basis() == NSymBasis::B || x.basis() == NSymBasis::Bhat) && !(x.params() == BasisParams{})) {
        out["params"] = {x.params().a.to_string(), x.params().b.to_string()};
    }
    out["terms"] = terms_json(x.terms());
    return out;
}

Json tensor_json(const FormalSum<CompPair>& terms) {
    Json out = Json::array();
    for (const auto& [pr, c] : terms) {
        out.push_back(Json{{"left", pr.first.parts()}, {"right", pr.second.parts()}, {"coeff", c.to_string()}});
    }
    return out;
}

AnyElem convert_any(const AnyElem& x, const AnyBasis& target, const Context& ctx) {
    if (const auto* q = std::get_if<QSymElem>(&x)) {
        const auto* tb = std::get_if<QSymBasis>(&target);
        if (tb == nullptr) throw UsageError("cannot convert a QSym element to an NSym basis");
        if (*tb == QSymBasis::Pi && ctx.nu < 2) throw UsageError("the Pi basis needs --nu >= 2");
        return convert(*q, *tb, ctx.nu);
    }
    const auto* tb = std::get_if<NSymBasis>(&target);
    if (tb == nullptr) throw UsageError("cannot convert an NSym element to a QSym basis");
    return convert(std::get<NSymElem>(x), *tb, ctx.params);
}

void print_elem(const AnyElem& x, bool json) {
    if (json) {
        std::cout << std::visit([](const auto& e) { return to_json(e); }, x).dump() << '\n';
    } else {
        std::cout << std::visit([](const auto& e) { return to_string(e); }, x) << '\n';
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::vector<int> parse_nu_list(const std::string& text) {
    std::vector<int> out = parse_int_list(text, "--nu");
    for (int nu : out) {
        if (nu < 2) throw UsageError("nu must be at least 2");
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in QSym and NSym: basis changes, products, structure constants, verification suites"};
    app.require_subcommand(1);

    std::string elem;
    std::string left;
    std::string right;
    std::string to;
    std::string nu_text;
    std::string a_text = "q";
    std::string b_text = "t";
    bool json = false;
    bool csv = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--nu", nu_text, "integer nu >= 2 for the Pi basis (a list for verify)");
        cmd->add_option("--a", a_text, "first parameter of B/Bhat (default q)");
        cmd->add_option("--b", b_text, "second parameter of B/Bhat (default t)");
        cmd->add_flag("--json", json, "machine-readable JSON output");
    };

    CLI::App* expand = app.add_subcommand("expand", "write an element in another basis");
    expand->add_option("--elem", elem, "element, e.g. B:(1,2) or Pi:(2,1)")->required();
    expand->add_option("--to", to, "target basis: M L F E Pi | H Lambda R Estar B Bhat")->required();
    add_common(expand);

    CLI::App* prod = app.add_subcommand("product", "multiply two basis elements");
    prod->add_option("--left", left, "left factor, e.g. L:(2,1)")->required();
    prod->add_option("--right", right, "right factor")->required();
    prod->add_option("--to", to, "basis of the result");
    add_common(prod);

    CLI::App* coprod = app.add_subcommand("coproduct", "coproduct of a basis element");
    coprod->add_option("--elem", elem, "element, e.g. M:(1,2)")->required();
    add_common(coprod);

    int k = 0;
    std::string k_set;
    std::optional<int> filter_m;
    CLI::App* sc = app.add_subcommand("structconst", "table of C^K_{I,J}(q,t) for a fixed K");
    sc->add_option("--k", k, "degree k = m + n")->required()->check(CLI::NonNegativeNumber);
    sc->add_option("--K", k_set, "K as a subset of [k-1], e.g. {1,2}")->required();
    sc->add_option("--filter", filter_m, "only rows with this m");
    sc->add_flag("--csv", csv, "CSV output with a header row");

    std::string suite;
    std::optional<int> max_degree;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name")->required();
    verify->add_option("--max-degree", max_degree, "degree bound")->check(CLI::NonNegativeNumber);
    verify->add_option("--nu", nu_text, "comma-separated nu values");
    verify->add_flag("--json", json, "print only the JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        Context ctx;
        if (!nu_text.empty() && !verify->parsed()) {
            const auto nus = parse_nu_list(nu_text);
            if (nus.size() != 1) throw UsageError("--nu takes a single value here");
            ctx.nu = nus.front();
        }
        try {
            ctx.params = {parse_scalar(a_text), parse_scalar(b_text)};
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("bad parameter: ") + e.what());
        }

        if (expand->parsed()) {
            print_elem(convert_any(parse_element(elem, ctx), parse_basis(to), ctx), json);
            return 0;
        }

        if (prod->parsed()) {
            const AnyElem x = parse_element(left, ctx);
            const AnyElem y = parse_element(right, ctx);
            if (x.index() != y.index()) throw UsageError("both factors must lie in QSym or both in NSym");
            AnyElem p = std::holds_alternative<QSymElem>(x) ? AnyElem(product(std::get<QSymElem>(x), std::get<QSymElem>(y)))
                                                            : AnyElem(product(std::get<NSymElem>(x), std::get<NSymElem>(y)));
            if (!to.empty()) p = convert_any(p, parse_basis(to), ctx);
            print_elem(p, json);
            return 0;
        }

        if (coprod->parsed()) {
            const AnyElem x = parse_element(elem, ctx);
            FormalSum<CompPair> terms;
            std::string tag;
            if (const auto* q = std::get_if<QSymElem>(&x)) {
                terms = coproduct(*q).terms;
                tag = to_string(q->basis());
            } else {
                const auto& n = std::get<NSymElem>(x);
                terms = coproduct(n).terms;
                tag = to_string(n.basis());
            }
            if (json) {
                std::cout << Json{{"basis", tag}, {"terms", tensor_json(terms)}}.dump() << '\n';
            } else {
                for (const auto& [pr, c] : terms) {
                    std::cout << std::setw(16) << c.to_string() << "  " << tag << pr.first.to_string() << " ⊗ " << tag
                              << pr.second.to_string() << '\n';
                }
            }
            return 0;
        }

        if (sc->parsed()) {
            const IndexSet big_k = parse_subset(k_set);
            if (!big_k.subset_of(split_points(k))) {
                throw UsageError(big_k.to_string() + " is not a subset of [" + std::to_string(k - 1) + "]");
            }
            const auto rows = structconst_table(k, big_k, filter_m);
            if (csv) {
                std::cout << "k,K,m,I,J,polynomial\n";
                for (const auto& r : rows) {
                    std::cout << k << ',' << csv_field(big_k.to_string()) << ',' << r.m << ',' << csv_field(r.i.to_string()) << ','
                              << csv_field(r.j.to_string()) << ',' << csv_field(r.value.to_string()) << '\n';
                }
            } else {
                std::cout << std::left << std::setw(4) << "m" << std::setw(12) << "I" << std::setw(12) << "J"
                          << "C^K_{I,J}(q,t)   (k = " << k << ", K = " << big_k.to_string() << ")\n";
                for (const auto& r : rows) {
                    std::cout << std::setw(4) << r.m << std::setw(12) << r.i.to_string() << std::setw(12) << r.j.to_string()
                              << r.value.to_string() << '\n';
                }
            }
            return 0;
        }

        if (verify->parsed()) {
            SuiteOptions options;
            options.max_degree = max_degree;
            if (!nu_text.empty()) options.nus = parse_nu_list(nu_text);
            const auto& names = suite_names();
            if (std::find(names.begin(), names.end(), suite) == names.end()) {
                std::string known;
                for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
                throw UsageError("unknown suite '" + suite + "' (known: " + known + ")");
            }
            const SuiteReport report = run_suite(suite, options);
            Json summary{{"suite", report.suite}, {"ok", report.ok()}, {"checks", Json::array()}};
            for (const auto& c : report.checks) {
                summary["checks"].push_back(Json{{"name", c.name}, {"ok", c.ok}, {"cases", c.cases}, {"detail", c.detail}});
                if (!json) {
                    std::cout << (c.ok ? "PASS  " : "FAIL  ") << c.name << "  [" << c.cases << " cases]";
                    if (!c.detail.empty()) std::cout << (c.ok ? "  " : "  first failure: ") << c.detail;
                    std::cout << '\n';
                }
            }
            std::cout << summary.dump() << '\n';
            return report.ok() ? 0 : kExitFailure;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return 0;
}
