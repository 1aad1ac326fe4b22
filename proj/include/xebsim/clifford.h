// Copyright 2026 The xebsim Authors
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

#ifndef XEBSIM_CLIFFORD_H
#define XEBSIM_CLIFFORD_H

#include <cstdint>
#include <string>
#include <vector>

#include "xebsim/pauli.h"

namespace xebsim {

// Elementary operations a gate decomposes into; the dense oracle rebuilds the
// exact unitary (global phase fixed by the word) from these.
enum class CliffOp : uint8_t {
    H0,
    H1,
    S0,
    S1,
    Sdg0,
    Sdg1,
    Cnot01,
    Cnot10,
};

// A 1- or 2-qubit Clifford gate given by the images of X_k and Z_k on its
// support under U (.) U^dag, plus a build word over elementary gates.
struct CliffordGate {
    std::vector<uint32_t> support;     // 1 or 2 qubit indices; local qubit i = support[i]
    std::vector<PauliString> images;   // [X_0, Z_0, (X_1, Z_1)] images on support.size() qubits
    std::vector<CliffOp> word;         // elementary decomposition, applied left-to-right

    static CliffordGate identity1(uint32_t q);
    static CliffordGate hadamard(uint32_t q);
    static CliffordGate phase_s(uint32_t q);
    static CliffordGate phase_sdg(uint32_t q);
    static CliffordGate cnot(uint32_t control, uint32_t target);

    size_t arity() const {
        return support.size();
    }
    // Symplectic condition + Hermitian images; throws on violation.
    void validate() const;
    CliffordGate inverse() const;
    // Same tableau retargeted onto new support qubits.
    CliffordGate retargeted(const std::vector<uint32_t> &new_support) const;

    bool operator==(const CliffordGate &other) const {
        return support == other.support && images == other.images;
    }
};

// Gate with images pre-embedded into an n-qubit register, for tight loops.
struct EmbeddedGate {
    std::vector<uint32_t> support;
    std::vector<PauliString> images;  // embedded on n qubits

    EmbeddedGate(const CliffordGate &g, uint32_t n);
};

// U p U^dag. The embedded form is the hot path; the plain form wraps it.
void conjugate_inplace(PauliString &p, const EmbeddedGate &g);
PauliString conjugated(const PauliString &p, const CliffordGate &g, uint32_t n_qubits_hint = 0);

// Allocation-free conjugation by a gate with local images, placed at the given
// register qubits. Used by the simulation inner loops.
void conjugate_1q_inplace(PauliString &p, const CliffordGate &local_gate, uint32_t q);
void conjugate_2q_inplace(PauliString &p, const CliffordGate &local_gate, uint32_t a, uint32_t b);

// An n-qubit Clifford map as images of every X_k and Z_k; supports composition
// with gates on either side. Used for Heisenberg pushes and ladder absorption.
class CliffordMap {
  public:
    explicit CliffordMap(uint32_t n_qubits);

    uint32_t n() const {
        return n_;
    }
    const PauliString &image_x(uint32_t q) const {
        return img_x_[q];
    }
    const PauliString &image_z(uint32_t q) const {
        return img_z_[q];
    }

    PauliString apply(const PauliString &p) const;

    // M' = conj_gate o M  (gate applied after everything in M).
    void then_conjugate_by(const CliffordGate &gate);
    // M' = M o conj_{gate^dag}  (i.e. M'(P) = M(U^dag P U)); used to extend
    // a running U_1^dag ... U_j^dag (.) U_j ... U_1 push by one more layer gate.
    void absorb_inverse_before(const CliffordGate &gate);

  private:
    uint32_t n_;
    std::vector<PauliString> img_x_;
    std::vector<PauliString> img_z_;
};

}  // namespace xebsim

#endif
