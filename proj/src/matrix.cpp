/*
   Copyright 2026 The modinv Authors

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

#include "modinv/matrix.hpp"

namespace modinv {

Integer determinant(Matrix<Integer> a) {
    if (!a.square()) throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) throw Error(Errc::DimensionMismatch, "determinant of an empty matrix");
    int sign = 1;
    BigInt previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && a(pivot, k).is_zero()) ++pivot;
            if (pivot == n) return Integer(0);
            a.swap_rows(pivot, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Exact by Sylvester's identity.
                BigInt v = a(k, k).value() * a(i, j).value() - a(i, k).value() * a(k, j).value();
                a(i, j) = Integer(BigInt(v / previous));
            }
        }
        previous = a(k, k).value();
    }
    const Integer det = a(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

}  // namespace modinv
