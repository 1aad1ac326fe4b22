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

#include "xebsim/circuit.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace xebsim {

uint32_t CliffordTable::canonical_key(const CliffordGate &g) {
    uint32_t key = 0;
    for (size_t i = 0; i < 4; i++) {
        const PauliString &img = g.images[i];
        uint32_t bits = static_cast<uint32_t>(img.x(0)) | (static_cast<uint32_t>(img.z(0)) << 1) |
                        (static_cast<uint32_t>(img.x(1)) << 2) | (static_cast<uint32_t>(img.z(1)) << 3) |
                        (static_cast<uint32_t>(img.phase == 2) << 4);
        key |= bits << (5 * i);
    }
    return key;
}

CliffordTable::CliffordTable() {
    auto promote = [](const CliffordGate &g1, uint32_t which) {
        CliffordGate g;
        g.support = {0, 1};
        PauliString x0(2), z0(2), x1(2), z1(2);
        x0.set_x(0, true);
        z0.set_z(0, true);
        x1.set_x(1, true);
        z1.set_z(1, true);
        g.images = {x0, z0, x1, z1};
        g.images[2 * which].set_x(which, g1.images[0].x(0));
        g.images[2 * which].set_z(which, g1.images[0].z(0));
        g.images[2 * which].phase = g1.images[0].phase;
        g.images[2 * which + 1].set_x(which, g1.images[1].x(0));
        g.images[2 * which + 1].set_z(which, g1.images[1].z(0));
        g.images[2 * which + 1].phase = g1.images[1].phase;
        for (CliffOp op : g1.word) {
            g.word.push_back(which == 0 ? op : (op == CliffOp::H0 ? CliffOp::H1 : op == CliffOp::S0 ? CliffOp::S1 : CliffOp::Sdg1));
        }
        return g;
    };

    std::vector<CliffordGate> gens = {
        promote(CliffordGate::hadamard(0), 0),
        promote(CliffordGate::hadamard(0), 1),
        promote(CliffordGate::phase_s(0), 0),
        promote(CliffordGate::phase_s(0), 1),
        CliffordGate::cnot(0, 1),
    };
    gens[4].support = {0, 1};

    CliffordGate ident;
    ident.support = {0, 1};
    PauliString x0(2), z0(2), x1(2), z1(2);
    x0.set_x(0, true);
    z0.set_z(0, true);
    x1.set_x(1, true);
    z1.set_z(1, true);
    ident.images = {x0, z0, x1, z1};

    std::vector<EmbeddedGate> gen_embedded;
    for (const auto &g : gens) {
        gen_embedded.emplace_back(g, 2);
    }

    std::unordered_map<uint32_t, uint32_t> seen;
    std::deque<CliffordGate> queue;
    std::vector<CliffordGate> found;
    seen.emplace(canonical_key(ident), 0);
    found.push_back(ident);
    queue.push_back(ident);
    while (!queue.empty()) {
        CliffordGate cur = std::move(queue.front());
        queue.pop_front();
        for (size_t gi = 0; gi < gens.size(); gi++) {
            CliffordGate next = cur;
            for (auto &img : next.images) {
                conjugate_inplace(img, gen_embedded[gi]);
            }
            next.word.insert(next.word.end(), gens[gi].word.begin(), gens[gi].word.end());
            uint32_t key = canonical_key(next);
            if (!seen.count(key)) {
                seen.emplace(key, 0);
                found.push_back(next);
                queue.push_back(found.back());
            }
        }
    }
    if (found.size() != 11520) {
        throw std::logic_error("two-qubit Clifford closure has wrong size: " + std::to_string(found.size()));
    }
    std::sort(found.begin(), found.end(), [](const CliffordGate &a, const CliffordGate &b) {
        return canonical_key(a) < canonical_key(b);
    });
    gates_ = std::move(found);
    for (uint32_t i = 0; i < gates_.size(); i++) {
        by_key_.emplace(canonical_key(gates_[i]), i);
    }
}

const CliffordTable &CliffordTable::instance() {
    static CliffordTable table;
    return table;
}

std::optional<uint32_t> CliffordTable::find(const CliffordGate &local_gate) const {
    auto it = by_key_.find(canonical_key(local_gate));
    if (it == by_key_.end()) {
        return std::nullopt;
    }
    return it->second;
}

const CliffordGate &sample_two_qubit_clifford(RngStream &stream) {
    const CliffordTable &table = CliffordTable::instance();
    return table.gate(stream.next_below(table.size()));
}

uint32_t CircuitSpec::t_encoding() const {
    return static_cast<uint32_t>(std::lround(encoding_ratio * L));
}

uint32_t CircuitSpec::t_bulk() const {
    return static_cast<uint32_t>(std::lround(bulk_ratio * L));
}

void CircuitSpec::validate() const {
    if (L < 2 || L % 2 != 0) {
        throw std::invalid_argument("CircuitSpec: L must be even and >= 2");
    }
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("CircuitSpec: p must lie in [0,1]");
    }
    if (encoding_ratio < 0.0 || bulk_ratio < 0.0) {
        throw std::invalid_argument("CircuitSpec: ratios must be nonnegative");
    }
}

void Circuit::add_gate(uint32_t layer, uint32_t a, uint32_t b, uint32_t table_id) {
    events.push_back(Event{Event::Gate, layer, a, b, table_id});
}

void Circuit::add_gate(uint32_t layer, const CliffordGate &gate) {
    uint32_t a = gate.support[0];
    uint32_t b = gate.arity() == 2 ? gate.support[1] : a;
    std::vector<uint32_t> local(gate.arity());
    for (uint32_t i = 0; i < local.size(); i++) {
        local[i] = i;
    }
    CliffordGate localized = gate.retargeted(local);
    if (gate.arity() == 2) {
        if (auto id = CliffordTable::instance().find(localized)) {
            add_gate(layer, a, b, *id);
            return;
        }
    }
    extra_gates.push_back(std::move(localized));
    events.push_back(Event{Event::Gate, layer, a, b,
                           Event::kExtraGateBase + static_cast<uint32_t>(extra_gates.size() - 1)});
}

void Circuit::add_measure(uint32_t layer, uint32_t q) {
    events.push_back(Event{Event::Measure, layer, q, q, 0});
}

void Circuit::add_erase(uint32_t layer, uint32_t q) {
    events.push_back(Event{Event::Erase, layer, q, q, 0});
}

const CliffordGate &Circuit::local_gate(const Event &e) const {
    if (e.gate_id >= Event::kExtraGateBase) {
        return extra_gates[e.gate_id - Event::kExtraGateBase];
    }
    return CliffordTable::instance().gate(e.gate_id);
}

size_t Circuit::measure_count() const {
    size_t c = 0;
    for (const auto &e : events) {
        c += e.kind == Event::Measure;
    }
    return c;
}

size_t Circuit::erase_count() const {
    size_t c = 0;
    for (const auto &e : events) {
        c += e.kind == Event::Erase;
    }
    return c;
}

size_t Circuit::gate_count() const {
    size_t c = 0;
    for (const auto &e : events) {
        c += e.kind == Event::Gate;
    }
    return c;
}

uint32_t Circuit::layer_count() const {
    uint32_t layers = 0;
    for (const auto &e : events) {
        layers = std::max(layers, e.layer + 1);
    }
    return layers;
}

bool Circuit::operator==(const Circuit &other) const {
    if (L != other.L || stage_boundary != other.stage_boundary || events.size() != other.events.size()) {
        return false;
    }
    for (size_t i = 0; i < events.size(); i++) {
        const Event &x = events[i];
        const Event &y = other.events[i];
        if (x.kind != y.kind || x.layer != y.layer || x.a != y.a || x.b != y.b) {
            return false;
        }
        if (x.kind == Event::Gate && !(local_gate(x) == other.local_gate(y))) {
            return false;
        }
    }
    return true;
}

Circuit build_circuit(const CircuitSpec &spec) {
    spec.validate();
    RngStream stream(spec.seed);
    Circuit c;
    c.L = spec.L;
    uint32_t t_enc = spec.t_encoding();
    uint32_t t_total = t_enc + spec.t_bulk();
    std::vector<uint32_t> perm(spec.L);
    for (uint32_t t = 0; t < t_total; t++) {
        if (t == t_enc) {
            c.stage_boundary = c.events.size();
        }
        if (spec.connectivity == Connectivity::Chain1D) {
            uint32_t off = t & 1;
            for (uint32_t a = off; a + 1 < spec.L; a += 2) {
                c.add_gate(t, a, a + 1, static_cast<uint32_t>(stream.next_below(CliffordTable::instance().size())));
            }
            if (off && spec.boundary == Boundary::Periodic && spec.L > 2) {
                c.add_gate(t, spec.L - 1, 0, static_cast<uint32_t>(stream.next_below(CliffordTable::instance().size())));
            }
        } else {
            for (uint32_t i = 0; i < spec.L; i++) {
                perm[i] = i;
            }
            for (uint32_t i = spec.L - 1; i > 0; i--) {
                uint32_t j = static_cast<uint32_t>(stream.next_below(i + 1));
                std::swap(perm[i], perm[j]);
            }
            for (uint32_t i = 0; i + 1 < spec.L; i += 2) {
                c.add_gate(t, perm[i], perm[i + 1],
                           static_cast<uint32_t>(stream.next_below(CliffordTable::instance().size())));
            }
        }
        if (t >= t_enc) {
            for (uint32_t q = 0; q < spec.L; q++) {
                if (stream.bernoulli(spec.p)) {
                    c.add_measure(t, q);
                }
            }
        }
    }
    if (t_enc >= t_total) {
        c.stage_boundary = c.events.size();
    }
    return c;
}

Circuit inject_noise(const Circuit &clean, const NoisySpec &noisy, RngStream &stream) {
    if (noisy.q < 0.0 || noisy.q > 1.0) {
        throw std::invalid_argument("inject_noise: q must lie in [0,1]");
    }
    Circuit out;
    out.L = clean.L;
    out.extra_gates = clean.extra_gates;
    uint32_t layers = clean.layer_count();
    size_t i = 0;
    bool boundary_set = false;
    for (uint32_t layer = 0; layer < layers; layer++) {
        while (i < clean.events.size() && clean.events[i].layer == layer) {
            if (i == clean.stage_boundary) {
                out.stage_boundary = out.events.size();
                boundary_set = true;
            }
            out.events.push_back(clean.events[i]);
            i++;
        }
        if (noisy.q > 0.0) {
            for (uint32_t q = 0; q < clean.L; q++) {
                if (stream.bernoulli(noisy.q)) {
                    out.add_erase(layer, q);
                }
            }
        }
    }
    if (!boundary_set) {
        out.stage_boundary = out.events.size();
    }
    return out;
}

namespace {

std::string image_literal(const PauliString &img) {
    std::string s;
    s += img.phase == 2 ? '-' : '+';
    for (uint32_t q = 0; q < 2; q++) {
        s += "IXZY"[img.x(q) + 2 * img.z(q)];
    }
    return s;
}

PauliString parse_image(const std::string &lit, size_t at) {
    PauliString p(2);
    if (lit[at] == '-') {
        p.phase = 2;
    } else if (lit[at] != '+') {
        throw std::invalid_argument("gate literal: bad sign character");
    }
    for (uint32_t q = 0; q < 2; q++) {
        switch (lit[at + 1 + q]) {
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
                throw std::invalid_argument("gate literal: bad Pauli character");
        }
    }
    return p;
}

// 24 characters: the four images of X1,Z1,X2,Z2 under U(.)U^dag followed by the
// four images under U^dag(.)U, each as sign + two Pauli characters.
std::string gate_literal(const CliffordGate &g) {
    std::string s;
    for (const auto &img : g.images) {
        s += image_literal(img);
    }
    CliffordGate inv = g.inverse();
    for (const auto &img : inv.images) {
        s += image_literal(img);
    }
    return s;
}

CliffordGate parse_gate_literal(const std::string &lit) {
    if (lit.size() != 24) {
        throw std::invalid_argument("gate literal must be 24 characters");
    }
    CliffordGate g;
    g.support = {0, 1};
    for (size_t i = 0; i < 4; i++) {
        g.images.push_back(parse_image(lit, 3 * i));
    }
    g.validate();
    CliffordGate inv = g.inverse();
    for (size_t i = 0; i < 4; i++) {
        if (!(parse_image(lit, 12 + 3 * i) == inv.images[i])) {
            throw std::invalid_argument("gate literal: inverse half is inconsistent");
        }
    }
    return g;
}

}  // namespace

std::string Circuit::to_text() const {
    std::ostringstream out;
    out << "L=" << L << " stage_boundary=" << stage_boundary << "\n";
    for (const auto &e : events) {
        switch (e.kind) {
            case Event::Gate: {
                const CliffordGate &g = local_gate(e);
                if (g.arity() != 2) {
                    throw std::invalid_argument("Circuit::to_text: only two-qubit gates are serializable");
                }
                out << "G " << e.layer << " " << e.a << " " << e.b << " " << gate_literal(g) << "\n";
                break;
            }
            case Event::Measure:
                out << "M " << e.layer << " " << e.a << "\n";
                break;
            case Event::Erase:
                out << "E " << e.layer << " " << e.a << "\n";
                break;
        }
    }
    return out.str();
}

Circuit Circuit::from_text(const std::string &text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) {
        throw std::invalid_argument("circuit text: missing header");
    }
    Circuit c;
    if (sscanf(header.c_str(), "L=%u stage_boundary=%zu", &c.L, &c.stage_boundary) != 2) {
        throw std::invalid_argument("circuit text: malformed header");
    }
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream ls(line);
        char kind;
        ls >> kind;
        if (kind == 'G') {
            uint32_t t, a, b;
            std::string lit;
            ls >> t >> a >> b >> lit;
            if (!ls) {
                throw std::invalid_argument("circuit text: malformed gate line");
            }
            CliffordGate g = parse_gate_literal(lit);
            auto id = CliffordTable::instance().find(g);
            if (!id) {
                throw std::invalid_argument("circuit text: gate not a two-qubit Clifford");
            }
            c.add_gate(t, a, b, *id);
        } else if (kind == 'M' || kind == 'E') {
            uint32_t t, q;
            ls >> t >> q;
            if (!ls) {
                throw std::invalid_argument("circuit text: malformed event line");
            }
            if (kind == 'M') {
                c.add_measure(t, q);
            } else {
                c.add_erase(t, q);
            }
        } else {
            throw std::invalid_argument("circuit text: unknown event kind");
        }
    }
    if (c.stage_boundary > c.events.size()) {
        throw std::invalid_argument("circuit text: stage boundary out of range");
    }
    return c;
}

}  // namespace xebsim
