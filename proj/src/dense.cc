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

#include "xebsim/dense.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace xebsim {

namespace {

constexpr double kBranchTol = 1e-14;

const std::complex<double> kPowI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

struct PauliAction {
    uint64_t x_mask = 0;
    uint64_t z_mask = 0;
    std::complex<double> base;  // i^(phase + #Y)

    explicit PauliAction(const PauliString &p) {
        if (p.n > 64) {
            throw std::invalid_argument("dense oracle: too many qubits");
        }
        uint32_t y_count = 0;
        for (uint32_t q = 0; q < p.n; q++) {
            if (p.x(q)) {
                x_mask |= uint64_t{1} << q;
            }
            if (p.z(q)) {
                z_mask |= uint64_t{1} << q;
            }
            y_count += p.x(q) && p.z(q);
        }
        base = kPowI[(p.phase + y_count) & 3];
    }

    // P|b> = factor(b) |b ^ x_mask>.
    std::complex<double> factor(uint64_t b) const {
        return (std::popcount(b & z_mask) & 1) ? -base : base;
    }
};

}  // namespace

DenseState DenseState::zero_state(uint32_t n) {
    if (n > kMaxPure) {
        throw std::invalid_argument("dense oracle: pure-state budget exceeded");
    }
    DenseState s;
    s.n = n;
    s.amps.assign(size_t{1} << n, 0.0);
    s.amps[0] = 1.0;
    return s;
}

DenseState DenseState::maximally_mixed(uint32_t n) {
    if (n > kMaxMixed) {
        throw std::invalid_argument("dense oracle: mixed-state budget exceeded");
    }
    DenseState s;
    s.n = n;
    s.mixed = true;
    size_t dim = size_t{1} << n;
    s.amps.assign(dim * dim, 0.0);
    double w = 1.0 / static_cast<double>(dim);
    for (size_t i = 0; i < dim; i++) {
        s.amps[i * dim + i] = w;
    }
    return s;
}

DenseState DenseState::magic_alternating(uint32_t n) {
    DenseState s = zero_state(n);
    const std::complex<double> t1 = std::exp(std::complex<double>(0, M_PI / 4));
    for (uint64_t b = 0; b < s.dim(); b++) {
        std::complex<double> amp = 1.0;
        for (uint32_t q = 0; q < n; q++) {
            bool bit = (b >> q) & 1;
            if (q % 2 == 0) {
                if (bit) {
                    amp = 0.0;
                    break;
                }
            } else {
                amp *= (bit ? t1 : 1.0) / std::sqrt(2.0);
            }
        }
        s.amps[b] = amp;
    }
    return s;
}

DenseState DenseState::t_register(uint32_t k) {
    DenseState s = zero_state(k);
    const std::complex<double> t1 = std::exp(std::complex<double>(0, M_PI / 4));
    for (uint64_t b = 0; b < s.dim(); b++) {
        std::complex<double> amp = 1.0;
        for (uint32_t q = 0; q < k; q++) {
            amp *= (((b >> q) & 1) ? t1 : 1.0) / std::sqrt(2.0);
        }
        s.amps[b] = amp;
    }
    return s;
}

DenseState DenseState::from_stabilizers(const GeneratorSet &group) {
    DenseState s = maximally_mixed(group.n());
    size_t dim = s.dim();
    // rho = 2^-n * prod_i (1 + g_i), built by repeated left multiplication.
    for (const auto &g : group.generators()) {
        PauliAction act(g);
        std::vector<std::complex<double>> next = s.amps;
        for (uint64_t r = 0; r < dim; r++) {
            uint64_t src = r ^ act.x_mask;
            std::complex<double> f = act.factor(src);
            for (uint64_t c = 0; c < dim; c++) {
                next[r * dim + c] += f * s.amps[src * dim + c];
            }
        }
        s.amps = std::move(next);
    }
    return s;
}

void DenseState::to_mixed() {
    if (mixed) {
        return;
    }
    if (n > kMaxMixed) {
        throw std::invalid_argument("dense oracle: mixed-state budget exceeded");
    }
    size_t dim = this->dim();
    std::vector<std::complex<double>> rho(dim * dim);
    for (uint64_t r = 0; r < dim; r++) {
        for (uint64_t c = 0; c < dim; c++) {
            rho[r * dim + c] = amps[r] * std::conj(amps[c]);
        }
    }
    amps = std::move(rho);
    mixed = true;
}

namespace {

using Mat2 = std::array<std::complex<double>, 4>;  // row-major u00,u01,u10,u11

const Mat2 kHadamard = {M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2};
const Mat2 kPhaseS = {1.0, 0.0, 0.0, std::complex<double>(0, 1)};
const Mat2 kPhaseSdg = {1.0, 0.0, 0.0, std::complex<double>(0, -1)};

void transform_pairs(std::vector<std::complex<double>> &v, size_t dim, size_t stride_block, uint64_t qmask,
                     const Mat2 &u, bool conj_u, size_t fixed_count, size_t fixed_stride) {
    // Applies u to the qubit axis `qmask` of each of `fixed_count` vectors laid
    // out with stride `fixed_stride` (fixed index = the untouched matrix axis).
    Mat2 m = u;
    if (conj_u) {
        for (auto &e : m) {
            e = std::conj(e);
        }
    }
    for (size_t f = 0; f < fixed_count; f++) {
        std::complex<double> *base = v.data() + f * fixed_stride;
        for (uint64_t i = 0; i < dim; i++) {
            if (i & qmask) {
                continue;
            }
            std::complex<double> a0 = base[i * stride_block];
            std::complex<double> a1 = base[(i | qmask) * stride_block];
            base[i * stride_block] = m[0] * a0 + m[1] * a1;
            base[(i | qmask) * stride_block] = m[2] * a0 + m[3] * a1;
        }
    }
}

void permute_cnot(std::vector<std::complex<double>> &v, size_t dim, size_t stride_block, uint64_t cmask,
                  uint64_t tmask, size_t fixed_count, size_t fixed_stride) {
    for (size_t f = 0; f < fixed_count; f++) {
        std::complex<double> *base = v.data() + f * fixed_stride;
        for (uint64_t i = 0; i < dim; i++) {
            if ((i & cmask) && !(i & tmask)) {
                std::swap(base[i * stride_block], base[(i | tmask) * stride_block]);
            }
        }
    }
}

}  // namespace

void DenseState::apply_elementary(CliffOp op, uint32_t q0, uint32_t q1) {
    size_t d = dim();
    auto one_qubit = [&](const Mat2 &u, uint32_t q) {
        uint64_t qmask = uint64_t{1} << q;
        if (!mixed) {
            transform_pairs(amps, d, 1, qmask, u, false, 1, 0);
        } else {
            transform_pairs(amps, d, d, qmask, u, false, d, 1);  // rows (ket axis)
            transform_pairs(amps, d, 1, qmask, u, true, d, d);   // cols (bra axis)
        }
    };
    auto cnot = [&](uint32_t c, uint32_t t) {
        uint64_t cm = uint64_t{1} << c;
        uint64_t tm = uint64_t{1} << t;
        if (!mixed) {
            permute_cnot(amps, d, 1, cm, tm, 1, 0);
        } else {
            permute_cnot(amps, d, d, cm, tm, d, 1);
            permute_cnot(amps, d, 1, cm, tm, d, d);
        }
    };
    switch (op) {
        case CliffOp::H0:
            one_qubit(kHadamard, q0);
            break;
        case CliffOp::H1:
            one_qubit(kHadamard, q1);
            break;
        case CliffOp::S0:
            one_qubit(kPhaseS, q0);
            break;
        case CliffOp::S1:
            one_qubit(kPhaseS, q1);
            break;
        case CliffOp::Sdg0:
            one_qubit(kPhaseSdg, q0);
            break;
        case CliffOp::Sdg1:
            one_qubit(kPhaseSdg, q1);
            break;
        case CliffOp::Cnot01:
            cnot(q0, q1);
            break;
        case CliffOp::Cnot10:
            cnot(q1, q0);
            break;
    }
}

void DenseState::apply_gate(const CliffordGate &gate) {
    uint32_t a = gate.support[0];
    uint32_t b = gate.arity() == 2 ? gate.support[1] : a;
    std::vector<uint32_t> local(gate.arity());
    for (uint32_t i = 0; i < local.size(); i++) {
        local[i] = i;
    }
    apply_gate_at(gate.retargeted(local), a, b);
}

void DenseState::apply_gate_at(const CliffordGate &local_gate, uint32_t a, uint32_t b) {
    if (local_gate.word.empty()) {
        for (size_t i = 0; i < local_gate.images.size(); i++) {
            uint32_t q = static_cast<uint32_t>(i / 2);
            PauliString basis(static_cast<uint32_t>(local_gate.arity()));
            if (i % 2 == 0) {
                basis.set_x(q, true);
            } else {
                basis.set_z(q, true);
            }
            if (!(local_gate.images[i] == basis)) {
                throw std::invalid_argument("dense oracle: gate without a build word");
            }
        }
        return;  // identity
    }
    for (CliffOp op : local_gate.word) {
        apply_elementary(op, a, b);
    }
}

std::complex<double> DenseState::expect_pauli(const PauliString &p) const {
    PauliAction act(p);
    size_t d = dim();
    std::complex<double> acc = 0.0;
    if (!mixed) {
        for (uint64_t b = 0; b < d; b++) {
            acc += std::conj(amps[b ^ act.x_mask]) * act.factor(b) * amps[b];
        }
    } else {
        for (uint64_t r = 0; r < d; r++) {
            uint64_t src = r ^ act.x_mask;
            acc += act.factor(src) * amps[src * d + r];
        }
    }
    return acc;
}

double DenseState::measure_prob(const PauliString &p, bool m) const {
    double e = expect_pauli(p).real();
    return 0.5 * (1.0 + (m ? -e : e));
}

void DenseState::project(const PauliString &p, bool m, double prob) {
    PauliAction act(p);
    size_t d = dim();
    double s = m ? -1.0 : 1.0;
    double norm = 1.0 / (mixed ? prob : std::sqrt(prob));
    if (!mixed) {
        std::vector<std::complex<double>> next(d);
        for (uint64_t r = 0; r < d; r++) {
            uint64_t src = r ^ act.x_mask;
            next[r] = 0.5 * (amps[r] + s * act.factor(src) * amps[src]) * norm;
        }
        amps = std::move(next);
        return;
    }
    // rho -> M rho M / prob with M = (1 + s p)/2, via left then right action.
    std::vector<std::complex<double>> left(d * d);
    for (uint64_t r = 0; r < d; r++) {
        uint64_t src = r ^ act.x_mask;
        std::complex<double> f = s * act.factor(src);
        for (uint64_t c = 0; c < d; c++) {
            left[r * d + c] = 0.5 * (amps[r * d + c] + f * amps[src * d + c]);
        }
    }
    std::vector<std::complex<double>> next(d * d);
    for (uint64_t r = 0; r < d; r++) {
        for (uint64_t c = 0; c < d; c++) {
            uint64_t src = c ^ act.x_mask;
            next[r * d + c] = 0.5 * (left[r * d + c] + s * act.factor(c) * left[r * d + src]) * norm;
        }
    }
    amps = std::move(next);
}

void DenseState::erase(uint32_t q) {
    if (!mixed) {
        throw std::logic_error("erase requires mixed mode");
    }
    size_t d = dim();
    uint64_t qm = uint64_t{1} << q;
    std::vector<std::complex<double>> next(d * d, 0.0);
    for (uint64_t r = 0; r < d; r++) {
        for (uint64_t c = 0; c < d; c++) {
            if ((r & qm) != (c & qm)) {
                continue;
            }
            // (1/2) tr_q rho at the reduced coordinates of (r, c).
            std::complex<double> t = amps[(r & ~qm) * d + (c & ~qm)] + amps[(r | qm) * d + (c | qm)];
            next[r * d + c] = 0.5 * t;
        }
    }
    amps = std::move(next);
}

double DenseState::trace() const {
    size_t d = dim();
    double t = 0.0;
    if (!mixed) {
        for (const auto &a : amps) {
            t += std::norm(a);
        }
    } else {
        for (uint64_t r = 0; r < d; r++) {
            t += amps[r * d + r].real();
        }
    }
    return t;
}

double DenseState::overlap(const DenseState &a, const DenseState &b) {
    DenseState am = a;
    DenseState bm = b;
    am.to_mixed();
    bm.to_mixed();
    size_t d = am.dim();
    std::complex<double> acc = 0.0;
    for (uint64_t r = 0; r < d; r++) {
        for (uint64_t c = 0; c < d; c++) {
            acc += am.amps[r * d + c] * bm.amps[c * d + r];
        }
    }
    return acc.real();
}

double DenseState::distance_to(const DenseState &other) const {
    DenseState am = *this;
    DenseState bm = other;
    am.to_mixed();
    bm.to_mixed();
    double m = 0.0;
    for (size_t i = 0; i < am.amps.size(); i++) {
        m = std::max(m, std::abs(am.amps[i] - bm.amps[i]));
    }
    return m;
}

double RecordDistribution::total() const {
    double t = 0.0;
    for (const auto &[k, p] : probs) {
        t += p;
    }
    return t;
}

double RecordDistribution::tvd(const RecordDistribution &other) const {
    double acc = 0.0;
    for (const auto &[k, p] : probs) {
        auto it = other.probs.find(k);
        acc += std::abs(p - (it == other.probs.end() ? 0.0 : it->second));
    }
    for (const auto &[k, p] : other.probs) {
        if (!probs.count(k)) {
            acc += p;
        }
    }
    return 0.5 * acc;
}

double RecordDistribution::sum_p_squared() const {
    double acc = 0.0;
    for (const auto &[k, p] : probs) {
        acc += p * p;
    }
    return acc;
}

namespace {

void enumerate_dfs(const Circuit &c, size_t event_index, DenseState state, double path_prob, uint64_t key,
                   uint32_t bit_pos, RecordDistribution &out) {
    for (size_t i = event_index; i < c.events.size(); i++) {
        const Event &e = c.events[i];
        switch (e.kind) {
            case Event::Gate:
                state.apply_gate_at(c.local_gate(e), e.a, e.b);
                break;
            case Event::Erase:
                state.erase(e.a);
                break;
            case Event::Measure: {
                PauliString z(c.L);
                z.set_z(e.a, true);
                double p0 = state.measure_prob(z, false);
                double p1 = 1.0 - p0;
                if (p0 * path_prob > kBranchTol) {
                    DenseState branch = state;
                    branch.project(z, false, p0);
                    enumerate_dfs(c, i + 1, std::move(branch), path_prob * p0, key, bit_pos + 1, out);
                }
                if (p1 * path_prob > kBranchTol) {
                    state.project(z, true, p1);
                    enumerate_dfs(c, i + 1, std::move(state), path_prob * p1, key | (uint64_t{1} << bit_pos),
                                  bit_pos + 1, out);
                }
                return;
            }
        }
    }
    out.probs[key] += path_prob;
}

}  // namespace

RecordDistribution enumerate_records(const Circuit &c, const DenseState &initial) {
    if (initial.n != c.L) {
        throw std::invalid_argument("enumerate_records: state/circuit size mismatch");
    }
    size_t nm = c.measure_count();
    if (nm > 20) {
        throw std::invalid_argument("enumerate_records: measurement budget (20) exceeded");
    }
    bool need_mixed = c.erase_count() > 0 || initial.mixed;
    if (c.L > (need_mixed ? DenseState::kMaxMixed : DenseState::kMaxPure)) {
        throw std::invalid_argument("enumerate_records: qubit budget exceeded");
    }
    DenseState st = initial;
    if (need_mixed) {
        st.to_mixed();
    }
    RecordDistribution out;
    out.n_measurements = nm;
    enumerate_dfs(c, 0, std::move(st), 1.0, 0, 0, out);
    return out;
}

double exact_chi_dense(const Circuit &noisy, const Circuit &clean, const DenseState &rho,
                       const DenseState &sigma) {
    if (noisy.measure_count() != clean.measure_count()) {
        throw std::invalid_argument("exact_chi_dense: measurement records misaligned");
    }
    RecordDistribution pr = enumerate_records(noisy, rho);
    RecordDistribution ps = enumerate_records(clean, sigma);
    double num = 0.0;
    for (const auto &[k, p] : pr.probs) {
        auto it = ps.probs.find(k);
        if (it != ps.probs.end()) {
            num += p * it->second;
        }
    }
    double den = ps.sum_p_squared();
    return num / den;
}

PauliColumnMatrix PauliColumnMatrix::of(const PauliString &p) {
    PauliAction act(p);
    PauliColumnMatrix m;
    m.x_mask = act.x_mask;
    m.factors.resize(size_t{1} << p.n);
    for (uint64_t b = 0; b < m.factors.size(); b++) {
        m.factors[b] = act.factor(b);
    }
    return m;
}

PauliColumnMatrix PauliColumnMatrix::times(const PauliColumnMatrix &other) const {
    PauliColumnMatrix m;
    m.x_mask = x_mask ^ other.x_mask;
    m.factors.resize(other.factors.size());
    for (uint64_t b = 0; b < m.factors.size(); b++) {
        m.factors[b] = other.factors[b] * factors[b ^ other.x_mask];
    }
    return m;
}

bool PauliColumnMatrix::approx_equal(const PauliColumnMatrix &other, double tol) const {
    if (x_mask != other.x_mask || factors.size() != other.factors.size()) {
        return false;
    }
    for (size_t i = 0; i < factors.size(); i++) {
        if (std::abs(factors[i] - other.factors[i]) > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace xebsim
