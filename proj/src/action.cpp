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

#include "modinv/action.hpp"

#include <algorithm>
#include <numeric>

namespace modinv {

void RepresentationSpec::validate() const {
    if (!is_prime(p)) throw Error(Errc::InvalidSpec, "p = " + std::to_string(p) + " is not prime");
    if (blocks.empty()) throw Error(Errc::InvalidSpec, "at least one block is required");
    for (int b : blocks) {
        if (b < 1) throw Error(Errc::InvalidSpec, "block sizes must be >= 1");
        if (static_cast<std::uint32_t>(b) > p) {
            throw Error(Errc::BlockExceedsP, "block size exceeds p (" + std::to_string(b) + " > " +
                                                 std::to_string(p) + ")");
        }
    }
}

int RepresentationSpec::n() const { return std::accumulate(blocks.begin(), blocks.end(), 0); }

int RepresentationSpec::m() const {
    return static_cast<int>(std::count_if(blocks.begin(), blocks.end(), [](int b) { return b >= 2; }));
}

int RepresentationSpec::r() const {
    return static_cast<int>(std::count(blocks.begin(), blocks.end(), 1));
}

}  // namespace modinv
