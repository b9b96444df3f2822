// Copyright 2026 The Jaqal Toolchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JAQAL_RNG_HPP
#define JAQAL_RNG_HPP

#include <array>
#include <cstdint>
#include <string_view>

namespace jaqal {

/// xoshiro256** (Blackman & Vigna), state seeded from a 64-bit seed with
/// splitmix64. Output is identical on every platform.
class Xoshiro256StarStar {
   public:
    static constexpr std::string_view kAlgorithm = "xoshiro256**/splitmix64";

    explicit Xoshiro256StarStar(std::uint64_t seed);

    std::uint64_t next();
    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Advances 2^128 steps; used to split independent streams.
    void jump();

    const std::array<std::uint64_t, 4> &state() const { return s_; }

   private:
    std::array<std::uint64_t, 4> s_{};
};

std::uint64_t splitmix64(std::uint64_t &state);

}  // namespace jaqal

#endif
