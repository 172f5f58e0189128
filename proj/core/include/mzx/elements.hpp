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

#include <cstdint>
#include <string_view>

#include "mzx/qcore.hpp"

namespace mzx {

inline constexpr double kPi = 3.14159265358979323846;

/// Relative phase introduced on the r arm, canonicalized into [0, 2pi).
class PhaseShift {
  public:
    /// Throws ArgumentError for a non-finite angle.
    explicit PhaseShift(double radians);

    static PhaseShift from_degrees(double degrees);

    double radians() const { return phi_; }

  private:
    double phi_;
};

/// Orientation of the two output polarizers, in radians.
class PolarizerAngle {
  public:
    /// Throws ArgumentError for a non-finite angle.
    explicit PolarizerAngle(double radians);

    static PolarizerAngle from_degrees(double degrees);

    double radians() const { return alpha_; }

  private:
    double alpha_;
};

/// Exit channel of BS2.
enum class Channel : std::uint8_t { t_prime = 0, r_prime = 1 };

std::string_view to_string(Channel channel);

/// BS1: lossless symmetric 50:50 splitter on path, identity on polarization.
/// The incident port is slot t, which goes to (|t> + i|r>)/sqrt(2).
ElementOp bs1();

/// Half-wave plate in arm t: swaps tH <-> tV, leaves arm r alone.
ElementOp hwp_on_t();

/// Multiplies both r-arm amplitudes by e^{i phi}.
ElementOp phase_shifter(PhaseShift phi);

/// BS2 recombination: a_t' = (i a_t + a_r)/sqrt(2), a_r' = (a_t + i a_r)/sqrt(2).
/// Consumes an input-side state and yields an output-side one.
ElementOp bs2();

/// Mirrors M1/M2 carry no relative phase, so they act as the identity.
ElementOp mirror();

/// Path observable beta_phi on the input {t, r} basis:
///   [[0, -i e^{-i phi}], [i e^{i phi}, 0]] = -sin(phi) sigma_x + cos(phi) sigma_y,
/// lifted over polarization. Eigenvalues are exactly +1 and -1.
ElementOp path_observable(PhaseShift phi);

/// The 2x2 block of path_observable(), before lifting.
Mat2 path_observable_2x2(PhaseShift phi);

/// Polarization observable |H'><H'| - |V'><V'| with
/// |H'> = cos(a)|H> + sin(a)|V>, |V'> = sin(a)|H> - cos(a)|V>,
/// i.e. [[cos 2a, sin 2a], [sin 2a, -cos 2a]], lifted over path.
ElementOp pol_observable(PolarizerAngle alpha);

Mat2 pol_observable_2x2(PolarizerAngle alpha);

/// Projector onto one BS2 exit channel (both polarizations kept).
/// Output-side only; using it on an input-side state throws BasisSideError.
ElementOp channel_projector(Channel channel);

}  // namespace mzx
