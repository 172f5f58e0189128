// Copyright 2026 The mzx Authors
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

#pragma once

// Test-only oracles. Nothing here calls into the element chain; closed forms
// are written out by hand and products are brute-force index loops.

#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "mzx/qcore.hpp"

namespace mzx::oracle {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Amp kI{0.0, 1.0};

using Amps = std::array<Amp, 4>;

/// kron(a, b)[2i + k][2j + l] = a[i][j] * b[k][l].
inline Mat4 kron(const Mat2 &a, const Mat2 &b) {
    Mat4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

inline Mat2 mat2(Amp a, Amp b, Amp c, Amp d) {
    Mat2 m;
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

/// Output amplitudes of the product preparation, in [t'H, t'V, r'H, r'V].
inline Amps product_output(double phi) {
    const Amp e = std::exp(kI * phi);
    return {kI * (1.0 + e) / 2.0, 0.0, (1.0 - e) / 2.0, 0.0};
}

/// Output amplitudes of the entangled preparation.
inline Amps entangled_output(double phi) {
    const Amp e = std::exp(kI * phi);
    return {kI * e / 2.0, kI / 2.0, -e / 2.0, 0.5};
}

inline double max_diff(const Amps &a, const Amps &b) {
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}

/// Gaussian-random complex entries, seeded per test.
class Random {
  public:
    explicit Random(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
    double angle() { return uniform(0.0, 2.0 * kPi); }
    Amp amp() { return {normal_(gen_), normal_(gen_)}; }

    Amps unit4() {
        Amps a;
        double n2 = 0.0;
        for (Amp &z : a) {
            z = amp();
            n2 += std::norm(z);
        }
        for (Amp &z : a) z /= std::sqrt(n2);
        return a;
    }

    Mat2 mat2() {
        Mat2 m;
        for (Amp &z : m.m) z = amp();
        return m;
    }

    Mat4 mat4() {
        Mat4 m;
        for (Amp &z : m.m) z = amp();
        return m;
    }

    Mat4 hermitian4() {
        const Mat4 x = mat4();
        return Amp(0.5) * (x + x.adjoint());
    }

    /// Haar-ish unitary: Gram-Schmidt on the columns of a Gaussian matrix.
    Mat4 unitary4() {
        Mat4 m = mat4();
        for (int c = 0; c < 4; ++c) {
            for (int p = 0; p < c; ++p) {
                Amp dot = 0.0;
                for (int r = 0; r < 4; ++r) dot += std::conj(m(r, p)) * m(r, c);
                for (int r = 0; r < 4; ++r) m(r, c) -= dot * m(r, p);
            }
            double n2 = 0.0;
            for (int r = 0; r < 4; ++r) n2 += std::norm(m(r, c));
            for (int r = 0; r < 4; ++r) m(r, c) /= std::sqrt(n2);
        }
        return m;
    }

  private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace mzx::oracle
