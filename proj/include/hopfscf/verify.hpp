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

#ifndef HOPFSCF_VERIFY_HPP
#define HOPFSCF_VERIFY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfscf/combinatorics.hpp"

namespace hopfscf {

struct CheckResult {
    std::string name;
    bool ok = true;
    std::size_t cases = 0;
    std::string detail;  ///< first failing case, or a note
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    [[nodiscard]] bool ok() const;
};

struct SuiteOptions {
    /// Degree bound; every suite has its own default.
    std::optional<int> max_degree;
    /// nu values for the group-side and Pi suites; empty means the suite default.
    std::vector<int> nus;
};

/// hopf-axioms, diagrams, dualities, specializations, omega, overlap,
/// group-axioms, integrality, transitions, kappa-bridge, generating-sets.
const std::vector<std::string>& suite_names();
/// Runs a named suite. Throws std::invalid_argument for unknown names.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

/// Overlapping shuffles of α and β by direct enumeration of the two position
/// sets (independent of the recursive generator).
Multiset<Composition> overlapping_shuffles_brute_force(const Composition& alpha, const Composition& beta);

}  // namespace hopfscf

#endif  // HOPFSCF_VERIFY_HPP
