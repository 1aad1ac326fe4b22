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

#include "xebsim/clifford.h"

#include <stdexcept>

namespace xebsim {

namespace {

PauliString local_pauli(uint32_t k, uint32_t q, bool x, bool z, uint8_t phase = 0) {
    PauliString p(k);
    p.phase = phase;
    p.set_x(q, x);
    p.set_z(q, z);
    return p;
}

}  // namespace

CliffordGate CliffordGate::identity1(uint32_t q) {
    CliffordGate g;
    g.support = {q};
    g.images = {local_pauli(1, 0, true, false), local_pauli(1, 0, false, true)};
    return g;
}

CliffordGate CliffordGate::hadamard(uint32_t q) {
    CliffordGate g;
    g.support = {q};
    g.images = {local_pauli(1, 0, false, true), local_pauli(1, 0, true, false)};
    g.word = {CliffOp::H0};
    return g;
}

CliffordGate CliffordGate::phase_s(uint32_t q) {
    CliffordGate g;
    g.support = {q};
    g.images = {local_pauli(1, 0, true, true), local_pauli(1, 0, false, true)};
    g.word = {CliffOp::S0};
    return g;
}

CliffordGate CliffordGate::phase_sdg(uint32_t q) {
    CliffordGate g;
    g.support = {q};
    g.images = {local_pauli(1, 0, true, true, 2), local_pauli(1, 0, false, true)};
    g.word = {CliffOp::Sdg0};
    return g;
}

CliffordGate CliffordGate::cnot(uint32_t control, uint32_t target) {
    CliffordGate g;
    g.support = {control, target};
    PauliString xx(2), z0(2), x1(2), zz(2);
    xx.set_x(0, true);
    xx.set_x(1, true);
    z0.set_z(0, true);
    x1.set_x(1, true);
    zz.set_z(0, true);
    zz.set_z(1, true);
    g.images = {xx, z0, x1, zz};
    g.word = {CliffOp::Cnot01};
    return g;
}

void CliffordGate::validate() const {
    size_t k = support.size();
    if (k == 0 || k > 2 || images.size() != 2 * k) {
        throw std::invalid_argument("CliffordGate: malformed support/images");
    }
    if (k == 2 && support[0] == support[1]) {
        throw std::invalid_argument("CliffordGate: repeated support qubit");
    }
    for (const auto &img : images) {
        if (img.n != k) {
            throw std::invalid_argument("CliffordGate: image dimension mismatch");
        }
        if (!img.is_hermitian()) {
            throw std::invalid_argument("CliffordGate: non-Hermitian image");
        }
    }
    // The symplectic condition: images must reproduce the commutation relations
    // of the basis operators X_0, Z_0, X_1, Z_1.
    for (size_t i = 0; i < images.size(); i++) {
        for (size_t j = i + 1; j < images.size(); j++) {
            bool basis_commute = !(i / 2 == j / 2);  // X_k and Z_k anticommute
            if (commutes(images[i], images[j]) != basis_commute) {
                throw std::invalid_argument("CliffordGate: images break commutation relations");
            }
        }
    }
}

CliffordGate CliffordGate::retargeted(const std::vector<uint32_t> &new_support) const {
    if (new_support.size() != support.size()) {
        throw std::invalid_argument("retargeted: arity mismatch");
    }
    CliffordGate g = *this;
    g.support = new_support;
    return g;
}

EmbeddedGate::EmbeddedGate(const CliffordGate &g, uint32_t n) : support(g.support) {
    images.reserve(g.images.size());
    for (const auto &img : g.images) {
        images.push_back(PauliString::embedded(img, n, g.support));
    }
}

void conjugate_inplace(PauliString &p, const EmbeddedGate &g) {
    // P = i^ph * prod_k [ i^{x_k z_k} X_k^{x_k} Z_k^{z_k} ]; conjugation replaces
    // each support factor by the corresponding image, in (X,Z) per-qubit order.
    size_t k = g.support.size();
    bool bx[2] = {false, false};
    bool bz[2] = {false, false};
    for (size_t i = 0; i < k; i++) {
        uint32_t q = g.support[i];
        bx[i] = p.x(q);
        bz[i] = p.z(q);
        if (bx[i] && bz[i]) {
            p.phase = static_cast<uint8_t>((p.phase + 1) & 3);
        }
        p.set_x(q, false);
        p.set_z(q, false);
    }
    for (size_t i = 0; i < k; i++) {
        if (bx[i]) {
            pauli_mul_inplace(p, g.images[2 * i]);
        }
        if (bz[i]) {
            pauli_mul_inplace(p, g.images[2 * i + 1]);
        }
    }
}

PauliString conjugated(const PauliString &p, const CliffordGate &g, uint32_t n_qubits_hint) {
    uint32_t n = n_qubits_hint ? n_qubits_hint : p.n;
    EmbeddedGate eg(g, n);
    PauliString out = p;
    conjugate_inplace(out, eg);
    return out;
}

namespace {

// Power-of-i contribution of one qubit lane of a product (left operand first).
inline unsigned lane_phase(bool x1, bool z1, bool x2, bool z2) {
    bool anti = (x2 && z1) != (x1 && z2);
    if (!anti) {
        return 0;
    }
    bool is3 = ((x1 != x2) != (z1 != z2)) != (x1 && z2);
    return is3 ? 3u : 1u;
}

// p *= (img placed at qubits qs), for a 1- or 2-qubit local image.
template <size_t K>
inline void mul_embedded(PauliString &p, const PauliString &img, const uint32_t (&qs)[K]) {
    unsigned tally = img.phase;
    for (size_t i = 0; i < K; i++) {
        bool x2 = img.x(static_cast<uint32_t>(i));
        bool z2 = img.z(static_cast<uint32_t>(i));
        if (!x2 && !z2) {
            continue;
        }
        uint32_t q = qs[i];
        bool x1 = p.x(q);
        bool z1 = p.z(q);
        tally += lane_phase(x1, z1, x2, z2);
        p.set_x(q, x1 != x2);
        p.set_z(q, z1 != z2);
    }
    p.phase = static_cast<uint8_t>((p.phase + tally) & 3);
}

}  // namespace

void conjugate_1q_inplace(PauliString &p, const CliffordGate &g, uint32_t q) {
    bool bx = p.x(q);
    bool bz = p.z(q);
    if (!bx && !bz) {
        return;
    }
    if (bx && bz) {
        p.phase = static_cast<uint8_t>((p.phase + 1) & 3);
    }
    p.set_x(q, false);
    p.set_z(q, false);
    uint32_t qs[1] = {q};
    if (bx) {
        mul_embedded(p, g.images[0], qs);
    }
    if (bz) {
        mul_embedded(p, g.images[1], qs);
    }
}

void conjugate_2q_inplace(PauliString &p, const CliffordGate &g, uint32_t a, uint32_t b) {
    bool xa = p.x(a);
    bool za = p.z(a);
    bool xb = p.x(b);
    bool zb = p.z(b);
    if (!xa && !za && !xb && !zb) {
        return;
    }
    unsigned extra = (xa && za) + (xb && zb);
    p.phase = static_cast<uint8_t>((p.phase + extra) & 3);
    p.set_x(a, false);
    p.set_z(a, false);
    p.set_x(b, false);
    p.set_z(b, false);
    uint32_t qs[2] = {a, b};
    if (xa) {
        mul_embedded(p, g.images[0], qs);
    }
    if (za) {
        mul_embedded(p, g.images[1], qs);
    }
    if (xb) {
        mul_embedded(p, g.images[2], qs);
    }
    if (zb) {
        mul_embedded(p, g.images[3], qs);
    }
}

CliffordGate CliffordGate::inverse() const {
    size_t k = support.size();
    CliffordGate inv;
    inv.support = support;
    inv.images.resize(2 * k);
    // Local support for self-conjugation of candidates.
    std::vector<uint32_t> local(k);
    for (uint32_t i = 0; i < k; i++) {
        local[i] = i;
    }
    CliffordGate self = retargeted(local);
    EmbeddedGate eg(self, static_cast<uint32_t>(k));
    for (size_t bi = 0; bi < 2 * k; bi++) {
        PauliString target = local_pauli(static_cast<uint32_t>(k), static_cast<uint32_t>(bi / 2), bi % 2 == 0,
                                         bi % 2 == 1);
        bool found = false;
        for (uint32_t bits = 0; bits < (1u << (2 * k)) && !found; bits++) {
            PauliString cand(static_cast<uint32_t>(k));
            for (uint32_t q = 0; q < k; q++) {
                cand.set_x(q, (bits >> (2 * q)) & 1);
                cand.set_z(q, (bits >> (2 * q + 1)) & 1);
            }
            PauliString img = cand;
            conjugate_inplace(img, eg);
            if (img.same_bits(target)) {
                cand.phase = static_cast<uint8_t>((4 - img.phase) & 3);
                inv.images[bi] = cand;
                found = true;
            }
        }
        if (!found) {
            throw std::logic_error("CliffordGate::inverse: no preimage (invalid tableau)");
        }
    }
    inv.word.reserve(word.size());
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        switch (*it) {
            case CliffOp::S0:
                inv.word.push_back(CliffOp::Sdg0);
                break;
            case CliffOp::S1:
                inv.word.push_back(CliffOp::Sdg1);
                break;
            case CliffOp::Sdg0:
                inv.word.push_back(CliffOp::S0);
                break;
            case CliffOp::Sdg1:
                inv.word.push_back(CliffOp::S1);
                break;
            default:
                inv.word.push_back(*it);  // H and CNOT are involutions
                break;
        }
    }
    return inv;
}

CliffordMap::CliffordMap(uint32_t n_qubits) : n_(n_qubits) {
    img_x_.reserve(n_);
    img_z_.reserve(n_);
    for (uint32_t q = 0; q < n_; q++) {
        img_x_.push_back(local_pauli(n_, q, true, false));
        img_z_.push_back(local_pauli(n_, q, false, true));
    }
}

PauliString CliffordMap::apply(const PauliString &p) const {
    if (p.n != n_) {
        throw std::invalid_argument("CliffordMap::apply: dimension mismatch");
    }
    PauliString out = PauliString::identity(n_);
    out.phase = p.phase;
    for (uint32_t q = 0; q < n_; q++) {
        bool bx = p.x(q);
        bool bz = p.z(q);
        if (bx && bz) {
            out.phase = static_cast<uint8_t>((out.phase + 1) & 3);
        }
        if (bx) {
            pauli_mul_inplace(out, img_x_[q]);
        }
        if (bz) {
            pauli_mul_inplace(out, img_z_[q]);
        }
    }
    return out;
}

void CliffordMap::then_conjugate_by(const CliffordGate &gate) {
    EmbeddedGate eg(gate, n_);
    for (uint32_t q = 0; q < n_; q++) {
        conjugate_inplace(img_x_[q], eg);
        conjugate_inplace(img_z_[q], eg);
    }
}

void CliffordMap::absorb_inverse_before(const CliffordGate &gate) {
    CliffordGate inv = gate.inverse();
    std::vector<PauliString> new_x;
    std::vector<PauliString> new_z;
    size_t k = gate.support.size();
    new_x.reserve(k);
    new_z.reserve(k);
    for (size_t i = 0; i < k; i++) {
        new_x.push_back(apply(PauliString::embedded(inv.images[2 * i], n_, gate.support)));
        new_z.push_back(apply(PauliString::embedded(inv.images[2 * i + 1], n_, gate.support)));
    }
    for (size_t i = 0; i < k; i++) {
        img_x_[gate.support[i]] = std::move(new_x[i]);
        img_z_[gate.support[i]] = std::move(new_z[i]);
    }
}

}  // namespace xebsim
