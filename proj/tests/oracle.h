// Copyright 2026 The belldisc Authors
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

// Reference simulator for tests: every gate is expanded into a full
// 2^n x 2^n matrix by Kronecker products and permutation, independently of
// the library's in-place kernel.

#pragma once

#include <cmath>

#include "belldisc/circuit.h"
#include "belldisc/qmath.h"

namespace oracle {

using belldisc::Complex;
using belldisc::ComplexMatrix;

inline ComplexMatrix single(char name) {
    ComplexMatrix m(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    switch (name) {
        case 'H':
            m << r, r, r, -r;
            break;
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'S':
            m << 1, 0, 0, Complex(0, 1);
            break;
        default:  // S dagger
            m << 1, 0, 0, Complex(0, -1);
            break;
    }
    return m;
}

inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
}

inline ComplexMatrix embed(const ComplexMatrix &u, int target, int n) {
    ComplexMatrix r = ComplexMatrix::Identity(1, 1);
    for (int q = 0; q < n; ++q)
        r = kron(r, q == target ? u : ComplexMatrix::Identity(2, 2));
    return r;
}

// CNOT as |0><0|_c (x) I + |1><1|_c (x) X_t.
inline ComplexMatrix cnot(int c, int t, int n) {
    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2), p1 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1;
    p1(1, 1) = 1;
    ComplexMatrix a = ComplexMatrix::Identity(1, 1), b = ComplexMatrix::Identity(1, 1);
    for (int q = 0; q < n; ++q) {
        a = kron(a, q == c ? p0 : ComplexMatrix::Identity(2, 2));
        b = kron(b, q == c ? p1 : q == t ? single('X') : ComplexMatrix::Identity(2, 2));
    }
    return a + b;
}

inline ComplexMatrix unitary(const belldisc::Circuit &circuit) {
    const int n = circuit.n_qubits();
    ComplexMatrix u = ComplexMatrix::Identity(1 << n, 1 << n);
    for (const belldisc::Gate &g : circuit.gates()) {
        ComplexMatrix step;
        switch (g.kind) {
            case belldisc::GateKind::CNOT:
                step = cnot(*g.control, g.target, n);
                break;
            case belldisc::GateKind::H:
                step = embed(single('H'), g.target, n);
                break;
            case belldisc::GateKind::X:
                step = embed(single('X'), g.target, n);
                break;
            case belldisc::GateKind::S:
                step = embed(single('S'), g.target, n);
                break;
            case belldisc::GateKind::SDG:
                step = embed(single('D'), g.target, n);
                break;
        }
        u = step * u;
    }
    return u;
}

inline belldisc::StateVector run(const belldisc::Circuit &circuit) {
    return belldisc::StateVector(unitary(circuit).col(0));
}

}  // namespace oracle
