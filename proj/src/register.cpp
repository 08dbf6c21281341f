// Copyright 2026 The labelsim Authors
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

#include "labelsim/register.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "labelsim/errors.hpp"

namespace labelsim {

Register::Register(std::vector<SubsystemSpec> specs) : specs_(std::move(specs)) {
    if (specs_.empty()) {
        throw RegisterError("register needs at least one subsystem");
    }
    by_label_.resize(specs_.size());
    for (std::size_t i = 0; i < specs_.size(); ++i) {
        const auto &spec = specs_[i];
        if (spec.name.empty()) {
            throw RegisterError("subsystem name must not be empty");
        }
        if (!by_name_.emplace(spec.name, i).second) {
            throw RegisterError("duplicate subsystem name '" + spec.name + "'");
        }
        if (spec.labels.size() < 2) {
            throw RegisterError("subsystem '" + spec.name +
                                "' needs at least two labels");
        }
        for (std::size_t j = 0; j < spec.labels.size(); ++j) {
            if (!by_label_[i].emplace(spec.labels[j], j).second) {
                throw RegisterError("duplicate label '" + spec.labels[j] +
                                    "' in subsystem '" + spec.name + "'");
            }
        }
    }
    strides_.assign(specs_.size(), 1);
    for (std::size_t i = specs_.size(); i-- > 0;) {
        strides_[i] = dimension_;
        const auto d = static_cast<std::uint64_t>(specs_[i].labels.size());
        if (dimension_ > std::numeric_limits<std::uint64_t>::max() / d) {
            throw RegisterError("joint dimension overflows 64 bits");
        }
        dimension_ *= d;
    }
}

bool Register::contains(std::string_view name) const {
    return by_name_.find(name) != by_name_.end();
}

std::size_t Register::index_of(std::string_view name) const {
    const auto it = by_name_.find(name);
    if (it == by_name_.end()) {
        throw LabelError("unknown subsystem '" + std::string(name) + "'");
    }
    return it->second;
}

std::size_t Register::label_index(std::size_t subsystem,
                                  std::string_view label) const {
    const auto &labels = by_label_.at(subsystem);
    const auto it = labels.find(label);
    if (it == labels.end()) {
        throw LabelError("unknown label '" + std::string(label) +
                         "' for subsystem '" + specs_[subsystem].name + "'");
    }
    return it->second;
}

std::uint64_t Register::encode(const Assignment &full) const {
    if (full.size() != specs_.size()) {
        for (const auto &spec : specs_) {
            if (!full.contains(spec.name)) {
                throw LabelError("assignment does not name subsystem '" +
                                 spec.name + "'");
            }
        }
    }
    std::uint64_t joint = 0;
    for (const auto &[name, label] : full) {
        const auto sub = index_of(name);
        joint += label_index(sub, label) * strides_[sub];
    }
    return joint;
}

Assignment Register::decode(std::uint64_t joint) const {
    Assignment out;
    for (std::size_t i = 0; i < specs_.size(); ++i) {
        out.emplace(specs_[i].name, specs_[i].labels[digit(joint, i)]);
    }
    return out;
}

bool Register::operator==(const Register &other) const {
    if (specs_.size() != other.specs_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < specs_.size(); ++i) {
        if (specs_[i].name != other.specs_[i].name ||
            specs_[i].labels != other.specs_[i].labels) {
            return false;
        }
    }
    return true;
}

RegisterPtr new_register(std::vector<SubsystemSpec> specs) {
    return std::make_shared<const Register>(std::move(specs));
}

Pattern::Pattern(const Register &reg, const Assignment &partial) {
    digits_.reserve(partial.size());
    for (const auto &[name, label] : partial) {
        const auto sub = reg.index_of(name);
        digits_.emplace_back(sub, reg.label_index(sub, label));
    }
}

bool Pattern::matches(const Register &reg, std::uint64_t joint) const {
    for (const auto &[sub, label] : digits_) {
        if (reg.digit(joint, sub) != label) {
            return false;
        }
    }
    return true;
}

StateVector::StateVector(RegisterPtr reg, Amplitudes amplitudes)
    : reg_(std::move(reg)) {
    if (!reg_) {
        throw RegisterError("state vector needs a register");
    }
    for (const auto &[joint, amp] : amplitudes) {
        if (joint >= reg_->dimension()) {
            throw LabelError("joint index outside the register");
        }
        if (std::abs(amp) >= kPruneThreshold) {
            amplitudes_.emplace(joint, amp);
        }
    }
}

Complex StateVector::amplitude(std::uint64_t joint) const {
    const auto it = amplitudes_.find(joint);
    return it == amplitudes_.end() ? Complex{} : it->second;
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto &[joint, amp] : amplitudes_) {
        total += std::norm(amp);
    }
    return total;
}

StateVector StateVector::normalized() const {
    const double n2 = norm_squared();
    if (n2 <= 0.0) {
        throw OperationError("cannot normalize a zero state");
    }
    const double scale = 1.0 / std::sqrt(n2);
    Amplitudes out;
    for (const auto &[joint, amp] : amplitudes_) {
        out.emplace(joint, amp * scale);
    }
    return {reg_, std::move(out)};
}

std::vector<Complex> StateVector::dense() const {
    std::vector<Complex> out(reg_->dimension());
    for (const auto &[joint, amp] : amplitudes_) {
        out[joint] = amp;
    }
    return out;
}

StateVector superpose(const RegisterPtr &reg, const std::vector<Term> &terms,
                      bool normalize) {
    StateVector::Amplitudes amps;
    for (const auto &term : terms) {
        amps[reg->encode(term.assignment)] += term.amplitude;
    }
    StateVector state(reg, std::move(amps));
    if (normalize) {
        if (state.norm_squared() <= 0.0) {
            throw OperationError("superposition has zero norm");
        }
        return state.normalized();
    }
    if (std::abs(state.norm_squared() - 1.0) > kNormTolerance) {
        throw OperationError("superposition is not normalized");
    }
    return state;
}

StateVector basis_state(const RegisterPtr &reg, const Assignment &full) {
    return StateVector(reg, {{reg->encode(full), Complex{1.0, 0.0}}});
}

Complex amplitude(const StateVector &state, const Assignment &full) {
    return state.amplitude(state.reg().encode(full));
}

namespace {

void require_same_register(const StateVector &a, const StateVector &b) {
    if (a.register_ptr() != b.register_ptr() && !(a.reg() == b.reg())) {
        throw RegisterError("states live on different registers");
    }
}

} // namespace

Complex inner_product(const StateVector &a, const StateVector &b) {
    require_same_register(a, b);
    Complex total{};
    const auto &small = a.amplitudes().size() <= b.amplitudes().size()
                            ? a.amplitudes()
                            : b.amplitudes();
    for (const auto &[joint, amp] : small) {
        (void)amp;
        total += std::conj(a.amplitude(joint)) * b.amplitude(joint);
    }
    return total;
}

double fidelity(const StateVector &a, const StateVector &b) {
    const double f = std::norm(inner_product(a, b)) /
                     (a.norm_squared() * b.norm_squared());
    return std::min(f, 1.0);
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    auto specs = a.reg().subsystems();
    for (const auto &spec : b.reg().subsystems()) {
        specs.push_back(spec);
    }
    auto reg = new_register(std::move(specs));
    const auto scale = b.reg().dimension();
    StateVector::Amplitudes out;
    for (const auto &[ja, xa] : a.amplitudes()) {
        for (const auto &[jb, xb] : b.amplitudes()) {
            out.emplace(ja * scale + jb, xa * xb);
        }
    }
    return {reg, std::move(out)};
}

StateVector drop_definite(const StateVector &state,
                          const std::vector<std::string> &names) {
    const auto &reg = state.reg();
    std::vector<bool> dropped(reg.size(), false);
    for (const auto &name : names) {
        dropped[reg.index_of(name)] = true;
    }
    std::vector<SubsystemSpec> kept;
    for (std::size_t i = 0; i < reg.size(); ++i) {
        if (!dropped[i]) {
            kept.push_back(reg.subsystem(i));
        }
    }
    auto out_reg = new_register(std::move(kept));

    bool first = true;
    std::vector<std::size_t> fixed(reg.size(), 0);
    StateVector::Amplitudes out;
    for (const auto &[joint, amp] : state.amplitudes()) {
        std::uint64_t reduced = 0;
        std::size_t k = 0;
        for (std::size_t i = 0; i < reg.size(); ++i) {
            const auto d = reg.digit(joint, i);
            if (dropped[i]) {
                if (first) {
                    fixed[i] = d;
                } else if (fixed[i] != d) {
                    throw OperationError("subsystem '" + reg.subsystem(i).name +
                                         "' is not in a definite basis state");
                }
            } else {
                reduced += d * out_reg->stride(k++);
            }
        }
        first = false;
        out.emplace(reduced, amp);
    }
    return {out_reg, std::move(out)};
}

std::string format_assignment(const Register &reg, const Assignment &a) {
    std::ostringstream os;
    bool first = true;
    for (const auto &spec : reg.subsystems()) {
        const auto it = a.find(spec.name);
        if (it == a.end()) {
            continue;
        }
        os << (first ? "" : ", ") << spec.name << '=' << it->second;
        first = false;
    }
    return os.str();
}

} // namespace labelsim
