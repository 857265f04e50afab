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

#ifndef HOPFSCF_MATRIX_HPP
#define HOPFSCF_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "hopfscf/scalars.hpp"

namespace hopfscf {

/// Dense row-major matrix over Q, for transition-matrix and rank checks.
class RationalMatrix {
   public:
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static RationalMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    [[nodiscard]] const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    [[nodiscard]] RationalMatrix transposed() const;
    /// Rank by Gaussian elimination over Q.
    [[nodiscard]] std::size_t rank() const;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

}  // namespace hopfscf

#endif  // HOPFSCF_MATRIX_HPP
