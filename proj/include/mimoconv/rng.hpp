// SPDX-License-Identifier: Apache-2.0
//
// mimo-converge: convergence simulator for massive MIMO channels and precoders
// Copyright (C) 2026 The mimo-converge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MIMOCONV_RNG_HPP
#define MIMOCONV_RNG_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace mimoconv {

// Philox4x32-10 counter-based generator (Salmon et al., Random123).
// Output is a pure function of (counter, key); no state is carried between draws.
namespace philox {

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

inline constexpr std::uint32_t kMul0 = 0xD2511F53u;
inline constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
inline constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

constexpr Counter round(const Counter &ctr, const Key &key)
{
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
    return {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

constexpr Counter generate(Counter ctr, Key key)
{
    ctr = round(ctr, key);
    for (int r = 1; r < 10; ++r)
    {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
        ctr = round(ctr, key);
    }
    return ctr;
}

} // namespace philox

/// Independent random stream identified by (seed, stream id).
///
/// Draw `index` of a stream is the Philox block at counter
/// [index_lo, index_hi, stream_lo, stream_hi] under key [seed_lo, seed_hi],
/// so any draw can be computed without generating the ones before it, and
/// results do not depend on thread scheduling.
class RngStream {
public:
    constexpr RngStream(std::uint64_t seed, std::uint64_t stream) noexcept : seed_(seed), stream_(stream) {}

    constexpr std::uint64_t seed() const noexcept { return seed_; }
    constexpr std::uint64_t stream() const noexcept { return stream_; }

    constexpr philox::Counter block(std::uint64_t index) const noexcept
    {
        return philox::generate({lo(index), hi(index), lo(stream_), hi(stream_)}, {lo(seed_), hi(seed_)});
    }

    /// Two uniforms from one block: first in (0,1], second in [0,1).
    std::array<double, 2> uniform_pair(std::uint64_t index) const noexcept
    {
        const auto b = block(index);
        const std::uint64_t a = (static_cast<std::uint64_t>(b[1]) << 32) | b[0];
        const std::uint64_t c = (static_cast<std::uint64_t>(b[3]) << 32) | b[2];
        constexpr double ulp = 1.0 / 9007199254740992.0; // 2^-53
        return {static_cast<double>((a >> 11) + 1) * ulp, static_cast<double>(c >> 11) * ulp};
    }

    /// Circularly-symmetric CN(0,1) draw: real and imaginary parts each N(0, 1/2).
    std::complex<double> complex_normal(std::uint64_t index) const noexcept
    {
        const auto [u1, u2] = uniform_pair(index);
        const double r = std::sqrt(-std::log(u1));
        const double phase = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(phase), r * std::sin(phase)};
    }

private:
    static constexpr std::uint32_t lo(std::uint64_t v) noexcept { return static_cast<std::uint32_t>(v); }
    static constexpr std::uint32_t hi(std::uint64_t v) noexcept { return static_cast<std::uint32_t>(v >> 32); }

    std::uint64_t seed_;
    std::uint64_t stream_;
};

} // namespace mimoconv

#endif
