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

#include "mzx/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "mzx/errors.hpp"

namespace mzx {

namespace {

constexpr Amp kI{0.0, 1.0};

template <std::size_t N, class M>
M matmul(const M &a, const M &b) {
    M out;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t k = 0; k < N; ++k) {
            const Amp aik = a(i, k);
            for (std::size_t j = 0; j < N; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

template <std::size_t N, class M>
M adjoint_of(const M &a) {
    M out;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

template <class M>
double max_abs_diff_of(const M &a, const M &b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.m.size(); ++k) {
        worst = std::max(worst, std::abs(a.m[k] - b.m[k]));
    }
    return worst;
}

bool finite(const Amp &z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_side(SideAction action, Side side, const std::string &label) {
    const bool ok = action == SideAction::any ||
                    (side == Side::input && (action == SideAction::input_only ||
                                             action == SideAction::input_to_output)) ||
                    (side == Side::output && action == SideAction::output_only);
    if (!ok) {
        throw BasisSideError("operator '" + label + "' (" + std::string(to_string(action)) +
                             ") cannot act on a " + std::string(to_string(side)) + "-side state");
    }
}

double vec_norm_squared(const Vec2 &v) { return std::norm(v[0]) + std::norm(v[1]); }

}  // namespace

Mat2 Mat2::identity() {
    Mat2 r;
    r(0, 0) = 1.0;
    r(1, 1) = 1.0;
    return r;
}

Mat2 Mat2::pauli_x() {
    Mat2 r;
    r(0, 1) = 1.0;
    r(1, 0) = 1.0;
    return r;
}

Mat2 Mat2::pauli_y() {
    Mat2 r;
    r(0, 1) = -kI;
    r(1, 0) = kI;
    return r;
}

Mat2 Mat2::pauli_z() {
    Mat2 r;
    r(0, 0) = 1.0;
    r(1, 1) = -1.0;
    return r;
}

Mat2 Mat2::adjoint() const { return adjoint_of<2>(*this); }
Mat2 operator*(const Mat2 &a, const Mat2 &b) { return matmul<2>(a, b); }

Mat2 operator+(const Mat2 &a, const Mat2 &b) {
    Mat2 r;
    for (std::size_t k = 0; k < 4; ++k) r.m[k] = a.m[k] + b.m[k];
    return r;
}

Mat2 operator-(const Mat2 &a, const Mat2 &b) {
    Mat2 r;
    for (std::size_t k = 0; k < 4; ++k) r.m[k] = a.m[k] - b.m[k];
    return r;
}

Mat2 operator*(Amp s, const Mat2 &a) {
    Mat2 r;
    for (std::size_t k = 0; k < 4; ++k) r.m[k] = s * a.m[k];
    return r;
}

Mat4 Mat4::identity() {
    Mat4 r;
    for (std::size_t i = 0; i < 4; ++i) r(i, i) = 1.0;
    return r;
}

Mat4 Mat4::adjoint() const { return adjoint_of<4>(*this); }
Mat4 operator*(const Mat4 &a, const Mat4 &b) { return matmul<4>(a, b); }

Mat4 operator+(const Mat4 &a, const Mat4 &b) {
    Mat4 r;
    for (std::size_t k = 0; k < 16; ++k) r.m[k] = a.m[k] + b.m[k];
    return r;
}

Mat4 operator-(const Mat4 &a, const Mat4 &b) {
    Mat4 r;
    for (std::size_t k = 0; k < 16; ++k) r.m[k] = a.m[k] - b.m[k];
    return r;
}

Mat4 operator*(Amp s, const Mat4 &a) {
    Mat4 r;
    for (std::size_t k = 0; k < 16; ++k) r.m[k] = s * a.m[k];
    return r;
}

double max_abs_diff(const Mat2 &a, const Mat2 &b) { return max_abs_diff_of(a, b); }
double max_abs_diff(const Mat4 &a, const Mat4 &b) { return max_abs_diff_of(a, b); }

bool is_finite(const Mat4 &a) { return std::all_of(a.m.begin(), a.m.end(), finite); }

bool is_unitary(const Mat4 &a, double tol) {
    return max_abs_diff(a.adjoint() * a, Mat4::identity()) <= tol;
}

bool is_hermitian(const Mat4 &a, double tol) { return max_abs_diff(a, a.adjoint()) <= tol; }

bool is_projector(const Mat4 &a, double tol) {
    return is_hermitian(a, tol) && max_abs_diff(a * a, a) <= tol;
}

std::string_view to_string(Side side) { return side == Side::input ? "input" : "output"; }

std::string_view to_string(SideAction action) {
    switch (action) {
        case SideAction::any: return "any";
        case SideAction::input_only: return "input-only";
        case SideAction::output_only: return "output-only";
        case SideAction::input_to_output: return "input-to-output";
    }
    return "?";
}

std::string to_string(OpKind kinds) {
    std::string out;
    auto add = [&](OpKind k, const char *name) {
        if (has_kind(kinds, k)) {
            if (!out.empty()) out += '|';
            out += name;
        }
    };
    add(OpKind::unitary, "unitary");
    add(OpKind::hermitian, "hermitian");
    add(OpKind::projector, "projector");
    return out.empty() ? "none" : out;
}

PathPolState::PathPolState(Amps amps, Side side) : amps_(amps), side_(side) {
    if (!std::all_of(amps_.begin(), amps_.end(), finite)) {
        throw NormalizationError("state has a non-finite amplitude");
    }
    const double n2 = norm_squared();
    if (std::abs(n2 - 1.0) > kExactTol) {
        throw NormalizationError("state norm^2 = " + std::to_string(n2) + ", expected 1");
    }
}

double PathPolState::norm_squared() const {
    double n2 = 0.0;
    for (const Amp &a : amps_) n2 += std::norm(a);
    return n2;
}

ElementOp::ElementOp(Mat4 matrix, OpKind claimed, std::string label, SideAction action)
    : matrix_(matrix), kinds_(OpKind::none), label_(std::move(label)), action_(action) {
    if (!is_finite(matrix_)) {
        throw NumericalError("operator '" + label_ + "' has a non-finite entry");
    }
    if (is_unitary(matrix_)) kinds_ = kinds_ | OpKind::unitary;
    if (is_hermitian(matrix_)) kinds_ = kinds_ | OpKind::hermitian;
    if (is_projector(matrix_)) kinds_ = kinds_ | OpKind::projector;
    if ((kinds_ & claimed) != claimed) {
        throw KindError("operator '" + label_ + "' claimed " + to_string(claimed) + " but verified as " +
                        to_string(kinds_));
    }
}

ElementOp ElementOp::classify(Mat4 matrix, std::string label, SideAction action) {
    return ElementOp(matrix, OpKind::none, std::move(label), action);
}

ElementOp then(const ElementOp &first, const ElementOp &second) {
    const SideAction a = first.action();
    const SideAction b = second.action();
    SideAction chained = SideAction::any;
    if (a == SideAction::any) {
        chained = b;
    } else if (b == SideAction::any) {
        chained = a;
    } else if (a == SideAction::input_only &&
               (b == SideAction::input_only || b == SideAction::input_to_output)) {
        chained = b;
    } else if (a == SideAction::input_to_output && b == SideAction::output_only) {
        chained = a;
    } else if (a == SideAction::output_only && b == SideAction::output_only) {
        chained = a;
    } else {
        throw BasisSideError("cannot apply '" + second.label() + "' (" + std::string(to_string(b)) +
                             ") after '" + first.label() + "' (" + std::string(to_string(a)) + ")");
    }
    return ElementOp::classify(second.matrix() * first.matrix(), second.label() + "*" + first.label(),
                               chained);
}

PathPolState tensor(const Vec2 &path, const Vec2 &pol, Side side) {
    for (const Vec2 *v : {&path, &pol}) {
        if (!finite((*v)[0]) || !finite((*v)[1])) {
            throw NormalizationError("tensor factor has a non-finite amplitude");
        }
        if (std::abs(vec_norm_squared(*v) - 1.0) > kExactTol) {
            throw NormalizationError("tensor factor is not normalized");
        }
    }
    PathPolState::Amps amps;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            amps[basis_index(i, j)] = path[i] * pol[j];
        }
    }
    return PathPolState(amps, side);
}

ElementOp lift_path(const Mat2 &op2, std::string label) {
    Mat4 r;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t p = 0; p < 2; ++p) {
                r(basis_index(i, p), basis_index(j, p)) = op2(i, j);
            }
        }
    }
    return ElementOp::classify(r, std::move(label));
}

ElementOp lift_pol(const Mat2 &op2, std::string label) {
    Mat4 r;
    for (std::size_t path = 0; path < 2; ++path) {
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                r(basis_index(path, i), basis_index(path, j)) = op2(i, j);
            }
        }
    }
    return ElementOp::classify(r, std::move(label));
}

PathPolState apply(const ElementOp &op, const PathPolState &s) {
    if (!op.is(OpKind::unitary)) {
        throw KindError("apply() needs a unitary; '" + op.label() + "' is " + to_string(op.kinds()));
    }
    check_side(op.action(), s.side(), op.label());
    PathPolState::Amps out{};
    const Mat4 &m = op.matrix();
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            out[i] += m(i, j) * s[j];
        }
    }
    const Side side = op.action() == SideAction::input_to_output ? Side::output : s.side();
    return PathPolState(out, side);
}

double expectation(const ElementOp &op, const PathPolState &s) {
    if (!op.is(OpKind::hermitian)) {
        throw KindError("expectation() needs a Hermitian operator; '" + op.label() + "' is " +
                        to_string(op.kinds()));
    }
    check_side(op.action(), s.side(), op.label());
    Amp acc = 0.0;
    const Mat4 &m = op.matrix();
    for (std::size_t i = 0; i < 4; ++i) {
        Amp row = 0.0;
        for (std::size_t j = 0; j < 4; ++j) row += m(i, j) * s[j];
        acc += std::conj(s[i]) * row;
    }
    if (std::abs(acc.imag()) > kExactTol) {
        throw NumericalError("expectation of '" + op.label() + "' has imaginary residue " +
                             std::to_string(acc.imag()));
    }
    return acc.real();
}

double commutator_norm(const ElementOp &a, const ElementOp &b) {
    return max_abs_diff(a.matrix() * b.matrix(), b.matrix() * a.matrix());
}

}  // namespace mzx
