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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace mzx {

using Amp = std::complex<double>;

/// Absolute tolerance for every claim that holds exactly in infinite precision.
inline constexpr double kExactTol = 1e-12;

/// Two-level amplitude vector (path or polarization factor).
using Vec2 = std::array<Amp, 2>;

/// Row-major 2x2 complex matrix.
struct Mat2 {
    std::array<Amp, 4> m{};

    constexpr Amp &operator()(std::size_t row, std::size_t col) { return m[row * 2 + col]; }
    constexpr const Amp &operator()(std::size_t row, std::size_t col) const { return m[row * 2 + col]; }

    static Mat2 identity();
    static Mat2 pauli_x();
    static Mat2 pauli_y();
    static Mat2 pauli_z();

    Mat2 adjoint() const;
    friend Mat2 operator*(const Mat2 &a, const Mat2 &b);
    friend Mat2 operator+(const Mat2 &a, const Mat2 &b);
    friend Mat2 operator-(const Mat2 &a, const Mat2 &b);
    friend Mat2 operator*(Amp s, const Mat2 &a);
};

/// Row-major 4x4 complex matrix over the path (x) polarization space.
struct Mat4 {
    std::array<Amp, 16> m{};

    constexpr Amp &operator()(std::size_t row, std::size_t col) { return m[row * 4 + col]; }
    constexpr const Amp &operator()(std::size_t row, std::size_t col) const { return m[row * 4 + col]; }

    static Mat4 identity();

    Mat4 adjoint() const;
    friend Mat4 operator*(const Mat4 &a, const Mat4 &b);
    friend Mat4 operator+(const Mat4 &a, const Mat4 &b);
    friend Mat4 operator-(const Mat4 &a, const Mat4 &b);
    friend Mat4 operator*(Amp s, const Mat4 &a);
};

/// Largest elementwise magnitude of a - b.
double max_abs_diff(const Mat2 &a, const Mat2 &b);
double max_abs_diff(const Mat4 &a, const Mat4 &b);

bool is_finite(const Mat4 &a);
bool is_unitary(const Mat4 &a, double tol = kExactTol);
bool is_hermitian(const Mat4 &a, double tol = kExactTol);
bool is_projector(const Mat4 &a, double tol = kExactTol);

/// Which side of BS2 a basis refers to. Index order is path-major in both:
/// input  [tH, tV, rH, rV], output [t'H, t'V, r'H, r'V].
enum class Side : std::uint8_t { input, output };

std::string_view to_string(Side side);

/// Basis index helpers for the fixed path-major ordering.
inline constexpr std::size_t kIndexH0 = 0;  // tH  / t'H
inline constexpr std::size_t kIndexV0 = 1;  // tV  / t'V
inline constexpr std::size_t kIndexH1 = 2;  // rH  / r'H
inline constexpr std::size_t kIndexV1 = 3;  // rV  / r'V

constexpr std::size_t basis_index(std::size_t path, std::size_t pol) { return path * 2 + pol; }

/// A single-photon pure state over path (x) polarization.
///
/// Construction checks that every amplitude is finite and that the squared
/// norm is 1 within kExactTol; both failures throw NormalizationError.
class PathPolState {
  public:
    using Amps = std::array<Amp, 4>;

    PathPolState(Amps amps, Side side);

    const Amps &amps() const { return amps_; }
    const Amp &operator[](std::size_t i) const { return amps_[i]; }
    Side side() const { return side_; }
    double norm_squared() const;

  private:
    Amps amps_;
    Side side_;
};

/// Verified algebraic properties of an operator. An operator can carry
/// several; the identity is unitary, Hermitian and a projector at once.
enum class OpKind : std::uint8_t {
    none = 0,
    unitary = 1U << 0,
    hermitian = 1U << 1,
    projector = 1U << 2,
};

constexpr OpKind operator|(OpKind a, OpKind b) {
    return static_cast<OpKind>(static_cast<std::uint8_t>(a) | static_cast<std::uint8_t>(b));
}
constexpr OpKind operator&(OpKind a, OpKind b) {
    return static_cast<OpKind>(static_cast<std::uint8_t>(a) & static_cast<std::uint8_t>(b));
}
constexpr bool has_kind(OpKind set, OpKind k) { return (set & k) == k && k != OpKind::none; }

std::string to_string(OpKind kinds);

/// How an operator relates to the BS2 basis switch.
enum class SideAction : std::uint8_t {
    any,              // basis-agnostic (lifted identities, polarization operators)
    input_only,       // defined on {t, r}; maps input to input
    output_only,      // defined on {t', r'}; maps output to output
    input_to_output,  // consumes {t, r} amplitudes, yields {t', r'} amplitudes
};

std::string_view to_string(SideAction action);

/// A 4x4 operator tagged with the properties it was verified to have.
class ElementOp {
  public:
    /// Verifies every property in `claimed`; throws KindError if one fails.
    /// Properties not claimed are still detected and recorded.
    ElementOp(Mat4 matrix, OpKind claimed, std::string label, SideAction action = SideAction::any);

    /// Records whatever properties the matrix actually has.
    static ElementOp classify(Mat4 matrix, std::string label, SideAction action = SideAction::any);

    const Mat4 &matrix() const { return matrix_; }
    OpKind kinds() const { return kinds_; }
    bool is(OpKind k) const { return has_kind(kinds_, k); }
    const std::string &label() const { return label_; }
    SideAction action() const { return action_; }

  private:
    Mat4 matrix_;
    OpKind kinds_;
    std::string label_;
    SideAction action_;
};

/// `second` after `first`, i.e. matrix second * first. Side actions chain;
/// an impossible chain (e.g. two input->output maps) throws BasisSideError.
ElementOp then(const ElementOp &first, const ElementOp &second);

/// path (x) pol in the fixed basis order. Both factors must be normalized.
PathPolState tensor(const Vec2 &path, const Vec2 &pol, Side side = Side::input);

/// op (x) I_pol.
ElementOp lift_path(const Mat2 &op2, std::string label = "path");

/// I_path (x) op.
ElementOp lift_pol(const Mat2 &op2, std::string label = "pol");

/// M |s>. Requires a unitary operator whose side action accepts `s`.
PathPolState apply(const ElementOp &op, const PathPolState &s);

/// <s| M |s>. Requires a Hermitian (or projector) operator. The imaginary
/// residue is checked against kExactTol and then dropped.
double expectation(const ElementOp &op, const PathPolState &s);

/// max |AB - BA| elementwise.
double commutator_norm(const ElementOp &a, const ElementOp &b);

}  // namespace mzx
