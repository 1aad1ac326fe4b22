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

#ifndef XEBSIM_CIRCUIT_H
#define XEBSIM_CIRCUIT_H

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "xebsim/clifford.h"
#include "xebsim/rng.h"

namespace xebsim {

// The full two-qubit Clifford group modulo global phase (11520 elements),
// generated once by closure over {H, S, CNOT} words and sorted by a canonical
// tableau key so indices are stable across platforms and releases.
class CliffordTable {
  public:
    static const CliffordTable &instance();

    size_t size() const {
        return gates_.size();
    }
    // Gate with local support {0, 1}.
    const CliffordGate &gate(size_t idx) const {
        return gates_[idx];
    }
    // Index of a local two-qubit gate by tableau (images + signs), if present.
    std::optional<uint32_t> find(const CliffordGate &local_gate) const;

    static uint32_t canonical_key(const CliffordGate &local_gate);

  private:
    CliffordTable();
    std::vector<CliffordGate> gates_;
    std::unordered_map<uint32_t, uint32_t> by_key_;
};

// Uniform over the two-qubit Clifford group mod phase; support is {0, 1}.
const CliffordGate &sample_two_qubit_clifford(RngStream &stream);

enum class Connectivity : uint8_t {
    Chain1D,
    AllToAll,
};

enum class Boundary : uint8_t {
    Open,      // no wrap-around bond; odd 1D layers carry L/2-1 gates
    Periodic,  // wrap-around bond on odd 1D layers; every layer carries L/2 gates
};

struct CircuitSpec {
    uint32_t L = 0;  // even
    Connectivity connectivity = Connectivity::Chain1D;
    double p = 0.0;  // measurement rate in [0,1]
    double encoding_ratio = 3.0;
    double bulk_ratio = 3.0;
    Boundary boundary = Boundary::Open;
    uint64_t seed = 0;

    uint32_t t_encoding() const;  // round(encoding_ratio * L) to nearest integer
    uint32_t t_bulk() const;
    void validate() const;
};

struct NoisySpec {
    double q = 0.0;  // erasure probability per (qubit, layer) spacetime location
    CircuitSpec base;
};

struct Event {
    enum Kind : uint8_t { Gate, Measure, Erase } kind;
    uint32_t layer;
    uint32_t a;        // first qubit
    uint32_t b;        // second qubit (Gate only)
    uint32_t gate_id;  // Gate only: CliffordTable index, or kExtraGateBase + offset

    static constexpr uint32_t kExtraGateBase = 1u << 24;
};

// Ordered layers of two-qubit Clifford gates, single-qubit Z measurements, and
// (after noise injection) erasure events. Events carry a global total order;
// within a layer the order is gates, then measurements, then erasures.
struct Circuit {
    uint32_t L = 0;
    size_t stage_boundary = 0;  // index of the first bulk-stage event
    std::vector<Event> events;
    std::vector<CliffordGate> extra_gates;  // gates not in the two-qubit table

    void add_gate(uint32_t layer, uint32_t a, uint32_t b, uint32_t table_id);
    void add_gate(uint32_t layer, const CliffordGate &gate);
    void add_measure(uint32_t layer, uint32_t q);
    void add_erase(uint32_t layer, uint32_t q);

    // The gate of a Gate event, retargeted onto (a, b) lazily by the caller:
    // returned gate has local support; use event qubits for placement.
    const CliffordGate &local_gate(const Event &e) const;

    size_t measure_count() const;
    size_t erase_count() const;
    size_t gate_count() const;
    uint32_t layer_count() const;
    bool has_noise() const {
        return erase_count() > 0;
    }

    std::string to_text() const;
    static Circuit from_text(const std::string &text);

    bool operator==(const Circuit &other) const;
};

// Deterministic function of (spec, spec.seed). Encoding stage is measurement-free.
Circuit build_circuit(const CircuitSpec &spec);

// Independently with probability q, appends an Erase after each (qubit, layer)
// location's events, across both stages. The input circuit is left untouched.
Circuit inject_noise(const Circuit &clean, const NoisySpec &noisy, RngStream &stream);

}  // namespace xebsim

#endif
