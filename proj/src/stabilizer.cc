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

#include "xebsim/stabilizer.h"

#include <algorithm>
#include <stdexcept>

namespace xebsim {

MixedStabilizerState MixedStabilizerState::all_zero(uint32_t n, RngStream *rng) {
    GeneratorSet g(n);
    for (uint32_t q = 0; q < n; q++) {
        PauliString z(n);
        z.set_z(q, true);
        g.add_unchecked(std::move(z));
    }
    return MixedStabilizerState(std::move(g), rng);
}

MixedStabilizerState MixedStabilizerState::maximally_mixed(uint32_t n, RngStream *rng) {
    return MixedStabilizerState(GeneratorSet(n), rng);
}

MixedStabilizerState MixedStabilizerState::plus_all(uint32_t n, RngStream *rng) {
    GeneratorSet g(n);
    for (uint32_t q = 0; q < n; q++) {
        PauliString x(n);
        x.set_x(q, true);
        g.add_unchecked(std::move(x));
    }
    return MixedStabilizerState(std::move(g), rng);
}

void MixedStabilizerState::apply_gate(const CliffordGate &gate) {
    if (gate.arity() == 1) {
        apply_local_gate(gate.retargeted({0}), gate.support[0], gate.support[0]);
    } else {
        apply_local_gate(gate.retargeted({0, 1}), gate.support[0], gate.support[1]);
    }
}

void MixedStabilizerState::apply_local_gate(const CliffordGate &local_gate, uint32_t a, uint32_t b) {
    if (a >= n() || b >= n()) {
        throw std::invalid_argument("apply_gate: support out of range");
    }
    size_t d = group_.size();
    if (local_gate.arity() == 1) {
        for (size_t i = 0; i < d; i++) {
            PauliString g = group_[i];
            conjugate_1q_inplace(g, local_gate, a);
            group_.replace(i, std::move(g));
        }
        return;
    }
    for (size_t i = 0; i < d; i++) {
        PauliString g = group_[i];
        conjugate_2q_inplace(g, local_gate, a, b);
        group_.replace(i, std::move(g));
    }
}

void MixedStabilizerState::apply_local_gate(const CliffordGate &local_gate, uint32_t q) {
    apply_local_gate(local_gate, q, q);
}

MixedStabilizerState::Branch MixedStabilizerState::classify(const PauliString &p, size_t *anti_index,
                                                            int *det_sign) const {
    for (size_t i = 0; i < group_.size(); i++) {
        if (!commutes(group_[i], p)) {
            *anti_index = i;
            return Branch::Anticommuting;
        }
    }
    MembershipResult m = group_.membership(p);
    if (m.member) {
        *det_sign = m.sign;
        return Branch::Deterministic;
    }
    return Branch::Independent;
}

MeasurementOutcome MixedStabilizerState::measure_impl(const PauliString &p, const bool *forced) {
    if (!p.is_hermitian() || p.phase != 0) {
        throw std::invalid_argument("measure: operator must be Hermitian with sign +1");
    }
    size_t anti = 0;
    int det_sign = +1;
    Branch branch = classify(p, &anti, &det_sign);
    if (branch == Branch::Deterministic) {
        return {det_sign < 0, true};
    }
    bool bit = forced ? *forced : rng_->next_bit();
    PauliString signed_p = p;
    signed_p.phase = bit ? 2 : 0;
    if (branch == Branch::Anticommuting) {
        PauliString g = group_[anti];
        for (size_t i = 0; i < group_.size(); i++) {
            if (i != anti && !commutes(group_[i], p)) {
                group_.multiply_into(i, g);
            }
        }
        group_.replace(anti, std::move(signed_p));
    } else {
        group_.add_unchecked(std::move(signed_p));
    }
    return {bit, false};
}

MeasurementOutcome MixedStabilizerState::measure(const PauliString &p) {
    return measure_impl(p, nullptr);
}

MeasurementOutcome MixedStabilizerState::measure_forced(const PauliString &p, bool forced_bit) {
    return measure_impl(p, &forced_bit);
}

void MixedStabilizerState::dephase(const PauliString &p) {
    if (!p.is_hermitian()) {
        throw std::invalid_argument("dephase: operator must be Hermitian");
    }
    size_t first = group_.size();
    for (size_t i = 0; i < group_.size(); i++) {
        if (!commutes(group_[i], p)) {
            first = i;
            break;
        }
    }
    if (first == group_.size()) {
        return;
    }
    // Canonicalize so exactly one independent generator anticommutes, then drop it.
    PauliString g = group_[first];
    for (size_t i = first + 1; i < group_.size(); i++) {
        if (!commutes(group_[i], p)) {
            group_.multiply_into(i, g);
        }
    }
    group_.remove(first);
}

void MixedStabilizerState::erase(uint32_t q) {
    if (q >= n()) {
        throw std::invalid_argument("erase: qubit out of range");
    }
    PauliString z(n());
    z.set_z(q, true);
    dephase(z);
    PauliString x(n());
    x.set_x(q, true);
    dephase(x);
}

GeneratorSet MixedStabilizerState::reduced_group(const std::vector<uint32_t> &region) const {
    std::vector<bool> in_region(n(), false);
    for (uint32_t q : region) {
        if (q >= n()) {
            throw std::invalid_argument("reduced_group: region qubit out of range");
        }
        in_region[q] = true;
    }
    std::vector<PauliString> rows = group_.generators();
    std::vector<bool> discarded(rows.size(), false);
    // Eliminate every column outside the region; rows that pivot there are the
    // ones with unavoidable outside support and get discarded.
    for (uint32_t q = 0; q < n(); q++) {
        if (in_region[q]) {
            continue;
        }
        for (int side = 0; side < 2; side++) {
            auto bit = [&](const PauliString &r) { return side == 0 ? r.x(q) : r.z(q); };
            size_t pivot = rows.size();
            for (size_t i = 0; i < rows.size(); i++) {
                if (!discarded[i] && bit(rows[i])) {
                    pivot = i;
                    break;
                }
            }
            if (pivot == rows.size()) {
                continue;
            }
            for (size_t i = 0; i < rows.size(); i++) {
                if (i != pivot && !discarded[i] && bit(rows[i])) {
                    pauli_mul_inplace(rows[i], rows[pivot]);
                }
            }
            discarded[pivot] = true;
        }
    }
    std::vector<uint32_t> sorted_region = region;
    std::sort(sorted_region.begin(), sorted_region.end());
    GeneratorSet out(static_cast<uint32_t>(sorted_region.size()));
    for (size_t i = 0; i < rows.size(); i++) {
        if (!discarded[i]) {
            out.add_unchecked(rows[i].restricted_to(sorted_region));
        }
    }
    return out;
}

std::string MixedStabilizerState::str() const {
    return group_.str();
}

}  // namespace xebsim
