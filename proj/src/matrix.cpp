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

#include "hopfscf/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hopfscf {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not match");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& y = b(k, j);
                if (y != 0) out(i, j) += x * y;
            }
        }
    }
    return out;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
}

std::size_t RationalMatrix::rank() const {
    RationalMatrix m = *this;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && m(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank) {
            for (std::size_t j = col; j < cols_; ++j) std::swap(m(pivot, j), m(rank, j));
        }
        const Rational inv = Rational(1) / m(rank, col);
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            if (m(r, col) == 0) continue;
            const Rational f = m(r, col) * inv;
            for (std::size_t j = col; j < cols_; ++j) m(r, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace hopfscf
