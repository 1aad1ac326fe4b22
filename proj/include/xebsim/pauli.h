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

#ifndef XEBSIM_PAULI_H
#define XEBSIM_PAULI_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace xebsim {

// An n-qubit Pauli operator stored as packed X/Z bit-vectors plus a power-of-i
// phase tracked mod 4.
//
// Value convention: value = i^phase * (tensor product over qubits of H(x_k, z_k))
// where H(0,0)=I, H(1,0)=X, H(0,1)=Z, H(1,1)=Y. Every per-qubit factor is Hermitian,
// so a Pauli is Hermitian exactly when its phase is even (0 -> +1, 2 -> -1).
// Intermediate products may carry odd phases (factors of +-i); group containers
// reject them at their boundaries.
struct PauliString {
    uint32_t n = 0;
    uint8_t phase = 0;  // power of i, mod 4
    std::vector<uint64_t> x_bits;
    std::vector<uint64_t> z_bits;

    PauliString() = default;
    explicit PauliString(uint32_t n_qubits);

    static PauliString identity(uint32_t n_qubits);
    // "-XIZY": optional sign, then one of I/X/Y/Z per qubit; character k = qubit k.
    static PauliString from_literal(const std::string &literal);

    static size_t words_for(uint32_t n_qubits) {
        return (static_cast<size_t>(n_qubits) + 63) / 64;
    }

    bool x(uint32_t q) const {
        return (x_bits[q >> 6] >> (q & 63)) & 1;
    }
    bool z(uint32_t q) const {
        return (z_bits[q >> 6] >> (q & 63)) & 1;
    }
    void set_x(uint32_t q, bool v);
    void set_z(uint32_t q, bool v);

    bool is_identity_bits() const;
    bool is_hermitian() const {
        return (phase & 1) == 0;
    }
    // +1 or -1; requires a Hermitian operator.
    int sign() const;
    // Number of qubits acted on non-trivially.
    uint32_t weight() const;
    bool acts_on(uint32_t q) const {
        return x(q) || z(q);
    }

    // Copy of this operator with the listed qubits kept (in list order); the
    // dropped qubits must all be identity unless allow_truncation is set.
    PauliString restricted_to(const std::vector<uint32_t> &qubits) const;
    // Place a k-qubit operator onto the listed positions of an n-qubit register.
    static PauliString embedded(const PauliString &local, uint32_t n_qubits,
                                const std::vector<uint32_t> &positions);

    std::string str() const;

    bool operator==(const PauliString &other) const = default;
    bool same_bits(const PauliString &other) const {
        return x_bits == other.x_bits && z_bits == other.z_bits;
    }
};

// Exact product a*b including the power-of-i phase. O(n/64).
PauliString pauli_mul(const PauliString &a, const PauliString &b);
// In-place a *= b, returning nothing; same phase bookkeeping as pauli_mul.
void pauli_mul_inplace(PauliString &a, const PauliString &b);
// Symplectic commutation test: <a.x,b.z> + <a.z,b.x> == 0 mod 2. Phase-independent.
bool commutes(const PauliString &a, const PauliString &b);

struct MembershipResult {
    bool member = false;
    int sign = 0;  // +1 / -1 when member
};

struct IntersectionResult {
    uint32_t log2_unsigned = 0;  // dimension of the unsigned intersection
    bool contradiction = false;  // -1 in S_a * S_b
    // |S_a intersect S_b| as signed groups (2^log2_unsigned, halved on contradiction).
    uint64_t count() const {
        uint32_t d = log2_unsigned - (contradiction && log2_unsigned > 0 ? 1 : 0);
        return uint64_t{1} << d;
    }
};

// An ordered list of independent, pairwise-commuting Hermitian Paulis generating
// a signed stabilizer group, with a lazily rebuilt row-reduced form used by
// membership queries. Mutating calls invalidate the cache.
class GeneratorSet {
  public:
    GeneratorSet() = default;
    explicit GeneratorSet(uint32_t n_qubits) : n_(n_qubits) {}
    GeneratorSet(uint32_t n_qubits, std::vector<PauliString> generators);

    uint32_t n() const {
        return n_;
    }
    size_t size() const {
        return generators_.size();
    }
    const std::vector<PauliString> &generators() const {
        return generators_;
    }
    const PauliString &operator[](size_t i) const {
        return generators_[i];
    }

    // Throws std::invalid_argument on odd phase, anticommutation, or dependence.
    void add(const PauliString &p);
    // Fast-path mutators for simulation code; invariants are the caller's job
    // (they hold by construction in the stabilizer update rules).
    void add_unchecked(PauliString p);
    void replace(size_t i, PauliString p);
    void remove(size_t i);
    void multiply_into(size_t i, const PauliString &p);  // g_i <- g_i * p
    void clear();

    // Checks pairwise commutation, independence, and Hermitian phases.
    void validate() const;

    MembershipResult membership(const PauliString &p) const;
    // True iff the unsigned part of p lies in the unsigned span.
    bool contains_unsigned(const PauliString &p) const;

    std::string str() const;

  private:
    struct Echelon {
        std::vector<PauliString> rows;    // fully reduced, exact phases
        std::vector<uint32_t> pivot_col;  // per row, column index (2q for x, 2q+1 for z)
    };
    const Echelon &echelon() const;

    uint32_t n_ = 0;
    std::vector<PauliString> generators_;
    mutable std::optional<Echelon> echelon_cache_;
};

// Two-case trace-overlap bookkeeping for signed stabilizer groups:
// the dimension of the unsigned intersection and whether -1 lies in S_a*S_b.
// tr[rho_a rho_b] = 2^-n * count when there is no contradiction, and 0 otherwise.
IntersectionResult group_intersection_size(const GeneratorSet &a, const GeneratorSet &b);

}  // namespace xebsim

#endif
