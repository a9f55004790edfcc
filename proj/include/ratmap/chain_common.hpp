/*
   Copyright 2026 The ratmap Authors

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

#ifndef RATMAP_CHAIN_COMMON_HPP
#define RATMAP_CHAIN_COMMON_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "error.hpp"

namespace ratmap {

/// A reversed link is traversed from T = 1 to T = 0.
enum class Orientation { forward, reversed };

inline std::string to_string(Orientation o) { return o == Orientation::forward ? "forward" : "reversed"; }

inline Orientation parse_orientation(std::string_view s) {
    if (s == "forward" || s == "F") return Orientation::forward;
    if (s == "reversed" || s == "R") return Orientation::reversed;
    throw SchemaError("orientation must be \"forward\" or \"reversed\", got \"" + std::string(s) + "\"");
}

inline Orientation flipped(Orientation o) { return o == Orientation::forward ? Orientation::reversed : Orientation::forward; }

/// Parameter value at which a link starts (first) and ends (second).
inline std::pair<int, int> traversal(Orientation o) { return o == Orientation::forward ? std::pair{0, 1} : std::pair{1, 0}; }

/// Name of the junction before link i (0-based) in a chain of `count` links; i == count names the final one.
inline std::string junction_label(std::size_t i, std::size_t count) {
    std::string left = i == 0 ? "from" : std::to_string(i);
    std::string right = i == count ? "to" : std::to_string(i + 1);
    return left + "/" + right;
}

}  // namespace ratmap

#endif
