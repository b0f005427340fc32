// gates.hpp
// Single-qubit gates and the three two-qubit Hadamard variants.

#pragma once

#include "evenodd/quantum_core.hpp"

namespace evenodd::gates {

// H = (1/sqrt2) [[1, 1], [1, -1]]; self-inverse.
UnitaryOperator hadamard();
UnitaryOperator identity();
UnitaryOperator pauli_x();
UnitaryOperator pauli_z();

// General single-qubit unitary
//   [[cos(t/2), -e^{i lambda} sin(t/2)], [e^{i phi} sin(t/2), e^{i(phi+lambda)} cos(t/2)]]
UnitaryOperator u3(double theta, double phi, double lambda);

// Selective and non-selective Hadamards on a two-qubit register, built from
// an arbitrary single-qubit "Hadamard" so that alternative gates can be
// substituted (verification runs a sign-flipped H to prove it is caught).
struct HadamardSet {
    UnitaryOperator first;   // H (x) I
    UnitaryOperator second;  // I (x) H
    UnitaryOperator both;    // H (x) H

    static HadamardSet from(const UnitaryOperator& h);
};

const HadamardSet& standard_hadamards();

}  // namespace evenodd::gates
