// Copyright 2026 The stinekit developers
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

#ifndef STINEKIT_RNG_HPP
#define STINEKIT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "stinekit/matrix.hpp"

namespace stinekit {

/// Seeded deterministic random source. Distributions are derived from the
/// raw mt19937_64 stream by hand so that identical seeds give identical
/// values on every platform and standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller.
    double gaussian() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        cached_ = radius * std::sin(angle);
        has_cached_ = true;
        return radius * std::cos(angle);
    }

    complex gaussian_complex() {
        const double re = gaussian();
        const double im = gaussian();
        return complex(re, im);
    }

    Matrix gaussian_matrix(std::size_t rows, std::size_t cols) {
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                m(r, c) = gaussian_complex();
            }
        }
        return m;
    }

    Matrix hermitian_matrix(std::size_t n) {
        return hermitize(gaussian_matrix(n, n));
    }

  private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace stinekit

#endif
