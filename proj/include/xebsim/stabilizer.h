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

#ifndef XEBSIM_STABILIZER_H
#define XEBSIM_STABILIZER_H

#include <cstdint>
#include <string>
#include <vector>

#include "xebsim/clifford.h"
#include "xebsim/pauli.h"
#include "xebsim/rng.h"

namespace xebsim {

struct MeasurementOutcome {
    bool bit = false;
    bool deterministic = false;
};

// A (possibly mixed) stabilizer state on n qubits, stored as a list of d <= n
// independent commuting generators: rho = 2^-n * sum over the generated group.
// Erasure and dephasing shrink the list; measurement case (c) grows it.
//
// The state is confined to one worker; outcome sampling draws from the attached
// stream, consuming exactly one bit per random measurement.
class MixedStabilizerState {
  public:
    MixedStabilizerState(uint32_t n_qubits, RngStream *rng)
        : group_(n_qubits), rng_(rng) {}
    MixedStabilizerState(GeneratorSet group, RngStream *rng)
        : group_(std::move(group)), rng_(rng) {}

    static MixedStabilizerState all_zero(uint32_t n, RngStream *rng);
    static MixedStabilizerState maximally_mixed(uint32_t n, RngStream *rng);
    static MixedStabilizerState plus_all(uint32_t n, RngStream *rng);

    uint32_t n() const {
        return group_.n();
    }
    size_t d() const {
        return group_.size();
    }
    bool pure() const {
        return group_.size() == group_.n();
    }
    const GeneratorSet &group() const {
        return group_;
    }
    void set_rng(RngStream *rng) {
        rng_ = rng;
    }

    // Every generator g is replaced by U g U^dag; d is unchanged.
    void apply_gate(const CliffordGate &gate);
    // Gate with local images placed at explicit register qubits (hot path).
    void apply_local_gate(const CliffordGate &local_gate, uint32_t a, uint32_t b);
    void apply_local_gate(const CliffordGate &local_gate, uint32_t q);

    // Measures Hermitian p with sign +1 (signs are the caller's business).
    // Case (a): p in +-S, deterministic bit, state untouched. Case (b): p
    // anticommutes with a generator, fair bit, generator replacement. Case (c):
    // p commutes and is independent, fair bit, group grows by one.
    MeasurementOutcome measure(const PauliString &p);
    // Same update rules, but random branches adopt `forced_bit` instead of
    // sampling. Deterministic branches report their own bit (which the caller
    // may compare against a record).
    MeasurementOutcome measure_forced(const PauliString &p, bool forced_bit);

    // E(rho) = rho/2 + P rho P / 2: keeps the generators commuting with p.
    void dephase(const PauliString &p);
    // Z- then X-dephase on the qubit; afterwards no generator touches it.
    void erase(uint32_t q);

    // Generators of {g in S : supp(g) within region}, restricted to the region
    // (ascending order). This is the stabilizer group of the reduced state.
    GeneratorSet reduced_group(const std::vector<uint32_t> &region) const;

    std::string str() const;

  private:
    enum class Branch { Deterministic, Anticommuting, Independent };
    Branch classify(const PauliString &p, size_t *anti_index, int *det_sign) const;
    MeasurementOutcome measure_impl(const PauliString &p, const bool *forced);

    GeneratorSet group_;
    RngStream *rng_;
};

}  // namespace xebsim

#endif
