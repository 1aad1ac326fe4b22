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

#include "xebsim/pauli.h"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace xebsim {

PauliString::PauliString(uint32_t n_qubits)
    : n(n_qubits), x_bits(words_for(n_qubits), 0), z_bits(words_for(n_qubits), 0) {
}

PauliString PauliString::identity(uint32_t n_qubits) {
    return PauliString(n_qubits);
}

PauliString PauliString::from_literal(const std::string &literal) {
    size_t k = 0;
    uint8_t phase = 0;
    if (k < literal.size() && (literal[k] == '+' || literal[k] == '-')) {
        phase = literal[k] == '-' ? 2 : 0;
        k++;
    }
    PauliString p(static_cast<uint32_t>(literal.size() - k));
    p.phase = phase;
    for (uint32_t q = 0; k < literal.size(); k++, q++) {
        switch (literal[k]) {
            case 'I':
                break;
            case 'X':
                p.set_x(q, true);
                break;
            case 'Z':
                p.set_z(q, true);
                break;
            case 'Y':
                p.set_x(q, true);
                p.set_z(q, true);
                break;
            default:
                throw std::invalid_argument("bad Pauli literal character in '" + literal + "'");
        }
    }
    return p;
}

void PauliString::set_x(uint32_t q, bool v) {
    uint64_t m = uint64_t{1} << (q & 63);
    if (v) {
        x_bits[q >> 6] |= m;
    } else {
        x_bits[q >> 6] &= ~m;
    }
}

void PauliString::set_z(uint32_t q, bool v) {
    uint64_t m = uint64_t{1} << (q & 63);
    if (v) {
        z_bits[q >> 6] |= m;
    } else {
        z_bits[q >> 6] &= ~m;
    }
}

bool PauliString::is_identity_bits() const {
    for (size_t w = 0; w < x_bits.size(); w++) {
        if (x_bits[w] | z_bits[w]) {
            return false;
        }
    }
    return true;
}

int PauliString::sign() const {
    if (phase & 1) {
        throw std::logic_error("sign() on non-Hermitian Pauli");
    }
    return phase == 0 ? +1 : -1;
}

uint32_t PauliString::weight() const {
    uint32_t w = 0;
    for (size_t k = 0; k < x_bits.size(); k++) {
        w += static_cast<uint32_t>(std::popcount(x_bits[k] | z_bits[k]));
    }
    return w;
}

PauliString PauliString::restricted_to(const std::vector<uint32_t> &qubits) const {
    PauliString out(static_cast<uint32_t>(qubits.size()));
    out.phase = phase;
    for (uint32_t i = 0; i < qubits.size(); i++) {
        out.set_x(i, x(qubits[i]));
        out.set_z(i, z(qubits[i]));
    }
    return out;
}

PauliString PauliString::embedded(const PauliString &local, uint32_t n_qubits,
                                  const std::vector<uint32_t> &positions) {
    if (positions.size() != local.n) {
        throw std::invalid_argument("embedded: position count mismatch");
    }
    PauliString out(n_qubits);
    out.phase = local.phase;
    for (uint32_t i = 0; i < local.n; i++) {
        out.set_x(positions[i], local.x(i));
        out.set_z(positions[i], local.z(i));
    }
    return out;
}

std::string PauliString::str() const {
    std::string s;
    s.reserve(n + 1);
    switch (phase) {
        case 0:
            s += '+';
            break;
        case 1:
            s += 'i';
            break;
        case 2:
            s += '-';
            break;
        default:
            s += 'j';  // -i, only reachable on internal dumps
            break;
    }
    for (uint32_t q = 0; q < n; q++) {
        s += "IXZY"[x(q) + 2 * z(q)];
    }
    return s;
}

void pauli_mul_inplace(PauliString &a, const PauliString &b) {
    if (a.n != b.n) {
        throw std::invalid_argument("pauli_mul: dimension mismatch");
    }
    // Word-parallel tally of the +-i contributions from anticommuting qubit
    // positions: (cnt2, cnt1) is a per-lane 2-bit counter of the power of i.
    uint64_t cnt1 = 0;
    uint64_t cnt2 = 0;
    for (size_t w = 0; w < a.x_bits.size(); w++) {
        uint64_t x1 = a.x_bits[w];
        uint64_t z1 = a.z_bits[w];
        uint64_t x2 = b.x_bits[w];
        uint64_t z2 = b.z_bits[w];
        uint64_t nx = x1 ^ x2;
        uint64_t nz = z1 ^ z2;
        uint64_t x1z2 = x1 & z2;
        uint64_t anti = (x2 & z1) ^ x1z2;
        cnt2 ^= (cnt1 ^ nx ^ nz ^ x1z2) & anti;
        cnt1 ^= anti;
        a.x_bits[w] = nx;
        a.z_bits[w] = nz;
    }
    unsigned tally = static_cast<unsigned>(std::popcount(cnt1)) + 2u * static_cast<unsigned>(std::popcount(cnt2));
    a.phase = static_cast<uint8_t>((a.phase + b.phase + tally) & 3);
}

PauliString pauli_mul(const PauliString &a, const PauliString &b) {
    PauliString out = a;
    pauli_mul_inplace(out, b);
    return out;
}

bool commutes(const PauliString &a, const PauliString &b) {
    if (a.n != b.n) {
        throw std::invalid_argument("commutes: dimension mismatch");
    }
    uint64_t parity = 0;
    for (size_t w = 0; w < a.x_bits.size(); w++) {
        parity ^= std::popcount((a.x_bits[w] & b.z_bits[w]) ^ (a.z_bits[w] & b.x_bits[w])) & 1;
    }
    return parity == 0;
}

namespace {

bool col_bit(const PauliString &p, uint32_t col) {
    uint32_t q = col >> 1;
    return (col & 1) ? p.z(q) : p.x(q);
}

}  // namespace

GeneratorSet::GeneratorSet(uint32_t n_qubits, std::vector<PauliString> generators)
    : n_(n_qubits), generators_(std::move(generators)) {
    for (const auto &g : generators_) {
        if (g.n != n_) {
            throw std::invalid_argument("GeneratorSet: generator dimension mismatch");
        }
    }
}

void GeneratorSet::add(const PauliString &p) {
    if (p.n != n_) {
        throw std::invalid_argument("GeneratorSet::add: dimension mismatch");
    }
    if (!p.is_hermitian()) {
        throw std::invalid_argument("GeneratorSet::add: phase must be even (Hermitian)");
    }
    for (const auto &g : generators_) {
        if (!commutes(g, p)) {
            throw std::invalid_argument("GeneratorSet::add: anticommutes with existing generator");
        }
    }
    if (contains_unsigned(p)) {
        throw std::invalid_argument("GeneratorSet::add: dependent on existing generators");
    }
    add_unchecked(p);
}

void GeneratorSet::add_unchecked(PauliString p) {
    generators_.push_back(std::move(p));
    echelon_cache_.reset();
}

void GeneratorSet::replace(size_t i, PauliString p) {
    generators_[i] = std::move(p);
    echelon_cache_.reset();
}

void GeneratorSet::remove(size_t i) {
    generators_.erase(generators_.begin() + static_cast<ptrdiff_t>(i));
    echelon_cache_.reset();
}

void GeneratorSet::multiply_into(size_t i, const PauliString &p) {
    pauli_mul_inplace(generators_[i], p);
    echelon_cache_.reset();
}

void GeneratorSet::clear() {
    generators_.clear();
    echelon_cache_.reset();
}

void GeneratorSet::validate() const {
    for (size_t i = 0; i < generators_.size(); i++) {
        if (!generators_[i].is_hermitian()) {
            throw std::invalid_argument("GeneratorSet: non-Hermitian generator " + std::to_string(i));
        }
        for (size_t j = i + 1; j < generators_.size(); j++) {
            if (!commutes(generators_[i], generators_[j])) {
                throw std::invalid_argument("GeneratorSet: generators " + std::to_string(i) + "," +
                                            std::to_string(j) + " anticommute");
            }
        }
    }
    const auto &e = echelon();
    if (e.rows.size() != generators_.size()) {
        throw std::invalid_argument("GeneratorSet: generators are dependent over F2");
    }
}

const GeneratorSet::Echelon &GeneratorSet::echelon() const {
    if (echelon_cache_.has_value()) {
        return *echelon_cache_;
    }
    Echelon e;
    e.rows = generators_;
    size_t fill = 0;
    for (uint32_t col = 0; col < 2 * n_ && fill < e.rows.size(); col++) {
        size_t r = fill;
        while (r < e.rows.size() && !col_bit(e.rows[r], col)) {
            r++;
        }
        if (r == e.rows.size()) {
            continue;
        }
        std::swap(e.rows[fill], e.rows[r]);
        for (size_t k = 0; k < e.rows.size(); k++) {
            if (k != fill && col_bit(e.rows[k], col)) {
                pauli_mul_inplace(e.rows[k], e.rows[fill]);
            }
        }
        e.pivot_col.push_back(col);
        fill++;
    }
    // Rows past `fill` reduced to identity: the generators were dependent. A
    // leftover -1 row would mean an inconsistent group; both are rejected by
    // validate(), and membership just ignores the zero rows.
    e.rows.resize(fill);
    echelon_cache_ = std::move(e);
    return *echelon_cache_;
}

MembershipResult GeneratorSet::membership(const PauliString &p) const {
    if (p.n != n_) {
        throw std::invalid_argument("membership: dimension mismatch");
    }
    const auto &e = echelon();
    PauliString r = p;
    for (size_t i = 0; i < e.rows.size(); i++) {
        if (col_bit(r, e.pivot_col[i])) {
            pauli_mul_inplace(r, e.rows[i]);
        }
    }
    if (!r.is_identity_bits()) {
        return {false, 0};
    }
    // p * Q = i^c with Q in the group and Q^2 = 1, so p = i^c * Q.
    if (r.phase & 1) {
        throw std::logic_error("membership: odd phase on Hermitian reduction");
    }
    return {true, r.phase == 0 ? +1 : -1};
}

bool GeneratorSet::contains_unsigned(const PauliString &p) const {
    const auto &e = echelon();
    PauliString r = p;
    for (size_t i = 0; i < e.rows.size(); i++) {
        if (col_bit(r, e.pivot_col[i])) {
            pauli_mul_inplace(r, e.rows[i]);
        }
    }
    return r.is_identity_bits();
}

std::string GeneratorSet::str() const {
    std::ostringstream out;
    out << "<";
    for (size_t i = 0; i < generators_.size(); i++) {
        out << (i ? ", " : "") << generators_[i].str();
    }
    out << ">";
    return out.str();
}

IntersectionResult group_intersection_size(const GeneratorSet &a, const GeneratorSet &b) {
    if (a.n() != b.n()) {
        throw std::invalid_argument("group_intersection_size: dimension mismatch");
    }
    size_t r = a.size();
    size_t s = b.size();
    size_t cols_n = r + s;
    uint32_t rows_n = 2 * a.n();

    // Kernel of the 2n x (r+s) matrix whose columns are the symplectic vectors of
    // the generators of a and b. Kernel vectors (lambda|mu) give the elements
    // sum(lambda_i a_i) = sum(mu_j b_j) of the unsigned intersection.
    struct Col {
        std::vector<uint64_t> v;     // 2n bits
        std::vector<uint64_t> tail;  // r+s bits
        bool used = false;
    };
    size_t vw = (rows_n + 63) / 64;
    size_t tw = (cols_n + 63) / 64;
    std::vector<Col> cols(cols_n);
    for (size_t j = 0; j < cols_n; j++) {
        cols[j].v.assign(vw, 0);
        cols[j].tail.assign(tw, 0);
        cols[j].tail[j >> 6] |= uint64_t{1} << (j & 63);
        const PauliString &g = j < r ? a[j] : b[j - r];
        for (uint32_t q = 0; q < a.n(); q++) {
            if (g.x(q)) {
                cols[j].v[(2 * q) >> 6] |= uint64_t{1} << ((2 * q) & 63);
            }
            if (g.z(q)) {
                cols[j].v[(2 * q + 1) >> 6] |= uint64_t{1} << ((2 * q + 1) & 63);
            }
        }
    }
    auto v_bit = [&](const Col &c, uint32_t row) {
        return (c.v[row >> 6] >> (row & 63)) & 1;
    };
    for (uint32_t row = 0; row < rows_n; row++) {
        size_t pivot = cols_n;
        for (size_t j = 0; j < cols_n; j++) {
            if (!cols[j].used && v_bit(cols[j], row)) {
                pivot = j;
                break;
            }
        }
        if (pivot == cols_n) {
            continue;
        }
        cols[pivot].used = true;
        for (size_t j = 0; j < cols_n; j++) {
            if (j != pivot && !cols[j].used && v_bit(cols[j], row)) {
                for (size_t w = 0; w < vw; w++) {
                    cols[j].v[w] ^= cols[pivot].v[w];
                }
                for (size_t w = 0; w < tw; w++) {
                    cols[j].tail[w] ^= cols[pivot].tail[w];
                }
            }
        }
    }

    IntersectionResult res;
    for (size_t j = 0; j < cols_n; j++) {
        if (cols[j].used) {
            continue;
        }
        res.log2_unsigned++;
        PauliString pa = PauliString::identity(a.n());
        PauliString pb = PauliString::identity(a.n());
        for (size_t k = 0; k < cols_n; k++) {
            if ((cols[j].tail[k >> 6] >> (k & 63)) & 1) {
                if (k < r) {
                    pauli_mul_inplace(pa, a[k]);
                } else {
                    pauli_mul_inplace(pb, b[k - r]);
                }
            }
        }
        if (!pa.same_bits(pb)) {
            throw std::logic_error("group_intersection_size: kernel vector is not an intersection element");
        }
        if (pa.phase != pb.phase) {
            res.contradiction = true;
        }
    }
    return res;
}

}  // namespace xebsim
