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

#include "mzx/elements.hpp"

#include <cmath>

#include "mzx/errors.hpp"

namespace mzx {

namespace {

constexpr Amp kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

/// Lift a 2x2 path map and retag it with its verified properties and side action.
ElementOp path_element(const Mat2 &op2, OpKind claimed, const char *label, SideAction action) {
    return ElementOp(lift_path(op2).matrix(), claimed, label, action);
}

}  // namespace

PhaseShift::PhaseShift(double radians) {
    if (!std::isfinite(radians)) {
        throw ArgumentError("phase shift must be finite");
    }
    double phi = std::fmod(radians, 2.0 * kPi);
    if (phi < 0.0) phi += 2.0 * kPi;
    if (phi >= 2.0 * kPi) phi = 0.0;
    phi_ = phi;
}

PhaseShift PhaseShift::from_degrees(double degrees) { return PhaseShift(degrees * kPi / 180.0); }

PolarizerAngle::PolarizerAngle(double radians) : alpha_(radians) {
    if (!std::isfinite(radians)) {
        throw ArgumentError("polarizer angle must be finite");
    }
}

PolarizerAngle PolarizerAngle::from_degrees(double degrees) {
    return PolarizerAngle(degrees * kPi / 180.0);
}

std::string_view to_string(Channel channel) {
    return channel == Channel::t_prime ? "t'" : "r'";
}

ElementOp bs1() {
    Mat2 m;
    m(0, 0) = kInvSqrt2;
    m(0, 1) = kI * kInvSqrt2;
    m(1, 0) = kI * kInvSqrt2;
    m(1, 1) = kInvSqrt2;
    return path_element(m, OpKind::unitary, "BS1", SideAction::input_only);
}

ElementOp hwp_on_t() {
    Mat4 m = Mat4::identity();
    m(kIndexH0, kIndexH0) = 0.0;
    m(kIndexV0, kIndexV0) = 0.0;
    m(kIndexH0, kIndexV0) = 1.0;
    m(kIndexV0, kIndexH0) = 1.0;
    return ElementOp(m, OpKind::unitary, "HWP(t)", SideAction::input_only);
}

ElementOp phase_shifter(PhaseShift phi) {
    Mat2 m = Mat2::identity();
    m(1, 1) = std::polar(1.0, phi.radians());
    return path_element(m, OpKind::unitary, "PS", SideAction::input_only);
}

ElementOp bs2() {
    Mat2 m;
    m(0, 0) = kI * kInvSqrt2;
    m(0, 1) = kInvSqrt2;
    m(1, 0) = kInvSqrt2;
    m(1, 1) = kI * kInvSqrt2;
    return path_element(m, OpKind::unitary, "BS2", SideAction::input_to_output);
}

ElementOp mirror() { return ElementOp(Mat4::identity(), OpKind::unitary, "M", SideAction::any); }

Mat2 path_observable_2x2(PhaseShift phi) {
    const double p = phi.radians();
    Mat2 m;
    m(0, 1) = -kI * std::polar(1.0, -p);
    m(1, 0) = kI * std::polar(1.0, p);
    return m;
}

ElementOp path_observable(PhaseShift phi) {
    return path_element(path_observable_2x2(phi), OpKind::hermitian | OpKind::unitary, "beta",
                        SideAction::input_only);
}

Mat2 pol_observable_2x2(PolarizerAngle alpha) {
    const double c = std::cos(2.0 * alpha.radians());
    const double s = std::sin(2.0 * alpha.radians());
    Mat2 m;
    m(0, 0) = c;
    m(0, 1) = s;
    m(1, 0) = s;
    m(1, 1) = -c;
    return m;
}

ElementOp pol_observable(PolarizerAngle alpha) {
    return ElementOp(lift_pol(pol_observable_2x2(alpha)).matrix(), OpKind::hermitian, "delta",
                     SideAction::any);
}

ElementOp channel_projector(Channel channel) {
    Mat4 m;
    const std::size_t path = static_cast<std::size_t>(channel);
    m(basis_index(path, 0), basis_index(path, 0)) = 1.0;
    m(basis_index(path, 1), basis_index(path, 1)) = 1.0;
    return ElementOp(m, OpKind::projector | OpKind::hermitian,
                     channel == Channel::t_prime ? "Pi_t'" : "Pi_r'", SideAction::output_only);
}

}  // namespace mzx
