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

#ifndef XEBSIM_DENSE_H
#define XEBSIM_DENSE_H

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "xebsim/circuit.h"
#include "xebsim/pauli.h"

namespace xebsim {

// Brute-force dense engine for small systems. Pure states hold 2^n amplitudes
// (n <= 14); mixed mode holds the full 2^n x 2^n density matrix (n <= 7) so
// erasure channels stay exact rather than trajectory-averaged.
struct DenseState {
    uint32_t n = 0;
    bool mixed = false;
    std::vector<std::complex<double>> amps;  // 2^n entries, or 4^n row-major when mixed

    static constexpr uint32_t kMaxPure = 14;
    static constexpr uint32_t kMaxMixed = 7;

    static DenseState zero_state(uint32_t n);
    static DenseState maximally_mixed(uint32_t n);
    // |0T0T...>: |T> on odd qubit indices, |0> on even ones.
    static DenseState magic_alternating(uint32_t n);
    // |T>^k.
    static DenseState t_register(uint32_t k);
    static DenseState from_stabilizers(const GeneratorSet &group);

    size_t dim() const {
        return size_t{1} << n;
    }
    void to_mixed();

    void apply_elementary(CliffOp op, uint32_t q0, uint32_t q1);
    void apply_gate(const CliffordGate &gate);
    void apply_gate_at(const CliffordGate &local_gate, uint32_t a, uint32_t b);

    // Probability of outcome bit m when measuring Hermitian p.
    double measure_prob(const PauliString &p, bool m) const;
    // Collapse onto (1 + (-1)^m p)/2 and renormalize by the given probability.
    void project(const PauliString &p, bool m, double prob);
    void erase(uint32_t q);  // requires mixed mode

    double trace() const;           // trace (mixed) or norm^2 (pure)
    std::complex<double> expect_pauli(const PauliString &p) const;
    // Trace overlap tr[rho sigma]; both states are promoted to mixed form.
    static double overlap(const DenseState &a, const DenseState &b);
    double distance_to(const DenseState &other) const;  // max abs entry difference, mixed form
};

// Exact record-probability table keyed by the record bits packed LSB-first in
// measure-event order. Probabilities carry ~1e-12 float tolerance.
struct RecordDistribution {
    size_t n_measurements = 0;
    std::map<uint64_t, double> probs;

    double total() const;
    double tvd(const RecordDistribution &other) const;
    double sum_p_squared() const;
};

// Depth-first branch enumeration over measurement outcomes with exact
// projectors. Erase events force mixed mode. Branch budget: <= 20 measurements.
RecordDistribution enumerate_records(const Circuit &c, const DenseState &initial);

// Eq.-style literal evaluation of chi from two record distributions:
// sum_m p^rho_m p^sigma_m / sum_m (p^sigma_m)^2; 1.0 when there are no records.
double exact_chi_dense(const Circuit &noisy, const Circuit &clean, const DenseState &rho,
                       const DenseState &sigma);

// Column form of the full 2^n x 2^n matrix of a Pauli: column b holds the single
// entry `factors[b]` at row `b ^ x_mask`. Test oracle for the bit-level algebra.
struct PauliColumnMatrix {
    uint64_t x_mask = 0;
    std::vector<std::complex<double>> factors;

    static PauliColumnMatrix of(const PauliString &p);
    // Matrix product this * other.
    PauliColumnMatrix times(const PauliColumnMatrix &other) const;
    bool approx_equal(const PauliColumnMatrix &other, double tol) const;
};

}  // namespace xebsim

#endif
