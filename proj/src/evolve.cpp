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

#include "labelsim/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "labelsim/errors.hpp"

namespace labelsim {

namespace {

// Applies a k x k unitary to the listed labels of one subsystem, leaving
// every other label untouched.
StateVector apply_local(const StateVector &state, std::size_t sub,
                        const std::vector<std::size_t> &labels,
                        const Eigen::MatrixXcd &u) {
    const auto &reg = state.reg();
    const auto k = static_cast<Eigen::Index>(labels.size());
    std::vector<int> slot(reg.subsystem_dimension(sub), -1);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        slot[labels[i]] = static_cast<int>(i);
    }

    StateVector::Amplitudes out;
    std::map<std::uint64_t, Eigen::VectorXcd> groups;
    for (const auto &[joint, amp] : state.amplitudes()) {
        const auto d = reg.digit(joint, sub);
        if (slot[d] < 0) {
            out[joint] += amp;
            continue;
        }
        const auto base = reg.with_digit(joint, sub, 0);
        auto [it, inserted] =
            groups.try_emplace(base, Eigen::VectorXcd::Zero(k));
        it->second[slot[d]] = amp;
    }
    for (const auto &[base, in] : groups) {
        const Eigen::VectorXcd result = u * in;
        for (Eigen::Index i = 0; i < k; ++i) {
            out[reg.with_digit(base, sub, labels[static_cast<std::size_t>(i)])] +=
                result[i];
        }
    }
    return {state.register_ptr(), std::move(out)};
}

std::vector<std::size_t> distinct_labels(const Register &reg, std::size_t sub,
                                         const std::vector<std::string> &names) {
    std::vector<std::size_t> out;
    std::set<std::size_t> seen;
    for (const auto &name : names) {
        const auto idx = reg.label_index(sub, name);
        if (!seen.insert(idx).second) {
            throw OperationError("label '" + name + "' used twice in subsystem '" +
                                 reg.subsystem(sub).name + "'");
        }
        out.push_back(idx);
    }
    return out;
}

bool is_unitary(const Eigen::Matrix2cd &u) {
    return (u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <=
           kNormTolerance;
}

using Digits = std::vector<std::size_t>;

// A relabel op compiled to digit tuples over a fixed, ordered subsystem set.
struct CompiledRelabel {
    Pattern condition;
    std::vector<std::size_t> subsystems;
    std::map<Digits, Digits> forward;
};

Digits pattern_digits(const Register &reg, const std::vector<std::size_t> &subs,
                      const Assignment &pattern) {
    if (pattern.size() != subs.size()) {
        throw OperationError(
            "relabel patterns must all name the same subsystems");
    }
    Digits out;
    out.reserve(subs.size());
    for (const auto sub : subs) {
        const auto &name = reg.subsystem(sub).name;
        const auto it = pattern.find(name);
        if (it == pattern.end()) {
            throw OperationError(
                "relabel patterns must all name the same subsystems");
        }
        out.push_back(reg.label_index(sub, it->second));
    }
    return out;
}

Assignment digits_pattern(const Register &reg,
                          const std::vector<std::size_t> &subs,
                          const Digits &digits) {
    Assignment out;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        out.emplace(reg.subsystem(subs[i]).name, reg.label(subs[i], digits[i]));
    }
    return out;
}

CompiledRelabel compile_relabel(const Register &reg, const RelabelOp &op) {
    CompiledRelabel c;
    c.condition = Pattern(reg, op.condition);
    if (op.mapping.empty()) {
        return c;
    }
    for (const auto &[name, label] : op.mapping.front().from) {
        (void)label;
        c.subsystems.push_back(reg.index_of(name));
    }
    std::sort(c.subsystems.begin(), c.subsystems.end());
    for (const auto &[sub, label] : c.condition.digits()) {
        (void)label;
        if (std::find(c.subsystems.begin(), c.subsystems.end(), sub) !=
            c.subsystems.end()) {
            throw OperationError("relabel condition overlaps the mapped subsystem '" +
                                 reg.subsystem(sub).name + "'");
        }
    }
    std::set<Digits> targets;
    for (const auto &pair : op.mapping) {
        auto from = pattern_digits(reg, c.subsystems, pair.from);
        auto to = pattern_digits(reg, c.subsystems, pair.to);
        if (!targets.insert(to).second) {
            throw OperationError("relabel mapping is not injective");
        }
        if (!c.forward.emplace(std::move(from), std::move(to)).second) {
            throw OperationError("relabel mapping lists a source twice");
        }
    }
    return c;
}

Digits digits_of(const Register &reg, const std::vector<std::size_t> &subs,
                 std::uint64_t joint) {
    Digits out;
    out.reserve(subs.size());
    for (const auto sub : subs) {
        out.push_back(reg.digit(joint, sub));
    }
    return out;
}

RelabelOp complete_relabel(const StateVector &state, const RelabelOp &op) {
    const auto &reg = state.reg();
    auto c = compile_relabel(reg, op);
    if (c.forward.empty()) {
        return op;
    }
    std::set<Digits> image;
    for (const auto &[from, to] : c.forward) {
        image.insert(to);
    }
    std::map<Digits, Digits> closing;
    for (const auto &[start, unused] : c.forward) {
        (void)unused;
        if (image.contains(start)) {
            continue;
        }
        Digits end = start;
        while (c.forward.contains(end)) {
            end = c.forward.at(end);
        }
        closing.emplace(end, start);
    }
    for (const auto &[end, start] : closing) {
        (void)start;
        for (const auto &[joint, amp] : state.amplitudes()) {
            (void)amp;
            if (c.condition.matches(reg, joint) &&
                digits_of(reg, c.subsystems, joint) == end) {
                throw OperationError(
                    "relabel target " +
                    format_assignment(reg, digits_pattern(reg, c.subsystems, end)) +
                    " is populated, so the mapping is not a permutation");
            }
        }
    }
    RelabelOp completed = op;
    for (const auto &[end, start] : closing) {
        completed.mapping.push_back({digits_pattern(reg, c.subsystems, end),
                                     digits_pattern(reg, c.subsystems, start)});
    }
    return completed;
}

StateVector apply_permutation(const StateVector &state, const RelabelOp &op) {
    const auto &reg = state.reg();
    const auto c = compile_relabel(reg, op);
    if (c.forward.empty()) {
        return state;
    }
    StateVector::Amplitudes out;
    for (const auto &[joint, amp] : state.amplitudes()) {
        auto target = joint;
        if (c.condition.matches(reg, joint)) {
            const auto it = c.forward.find(digits_of(reg, c.subsystems, joint));
            if (it != c.forward.end()) {
                for (std::size_t i = 0; i < c.subsystems.size(); ++i) {
                    target = reg.with_digit(target, c.subsystems[i], it->second[i]);
                }
            }
        }
        out[target] += amp;
    }
    return {state.register_ptr(), std::move(out)};
}

} // namespace

Eigen::Matrix2cd hadamard() {
    const double r = std::numbers::sqrt2 / 2.0;
    Eigen::Matrix2cd h;
    h << r, r, r, -r;
    return h;
}

StateVector apply_split(const StateVector &state, const std::string &subsystem,
                        const SplitPorts &ports) {
    const auto &reg = state.reg();
    const auto sub = reg.index_of(subsystem);
    const auto labels = distinct_labels(
        reg, sub, {ports.source, ports.dump, ports.first, ports.second});
    const double r = std::numbers::sqrt2 / 2.0;
    Eigen::Matrix4cd m;
    // order: source, dump, first, second
    m << 0, 0, r, r,
         0, 0, r, -r,
         r, r, 0, 0,
         r, -r, 0, 0;
    return apply_local(state, sub, labels, m);
}

StateVector apply_rotation(const StateVector &state,
                           const std::string &subsystem, const LabelPair &pair,
                           double angle) {
    const auto &reg = state.reg();
    const auto sub = reg.index_of(subsystem);
    const auto labels = distinct_labels(reg, sub, {pair.first, pair.second});
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Eigen::Matrix2cd m;
    m << c, -s, s, c;
    return apply_local(state, sub, labels, m);
}

StateVector apply_basis_change(const StateVector &state,
                               const std::string &subsystem,
                               const LabelPair &from, const Eigen::Matrix2cd &u,
                               const std::optional<LabelPair> &to) {
    if (!is_unitary(u)) {
        throw OperationError("basis-change matrix is not unitary");
    }
    const auto &reg = state.reg();
    const auto sub = reg.index_of(subsystem);
    if (!to) {
        return apply_local(state, sub,
                           distinct_labels(reg, sub, {from.first, from.second}),
                           u);
    }
    const auto labels = distinct_labels(
        reg, sub, {from.first, from.second, to->first, to->second});
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m.block<2, 2>(0, 2) = u.adjoint();
    m.block<2, 2>(2, 0) = u;
    return apply_local(state, sub, labels, m);
}

StateVector controlled_relabel(const StateVector &state,
                               const Assignment &condition,
                               const std::vector<Relabel> &mapping) {
    return apply_permutation(state,
                             complete_relabel(state, {condition, mapping}));
}

StateVector controlled_phase(const StateVector &state,
                             const Assignment &condition, double phi) {
    const auto &reg = state.reg();
    const Pattern pattern(reg, condition);
    const Complex factor = std::polar(1.0, phi);
    StateVector::Amplitudes out;
    for (const auto &[joint, amp] : state.amplitudes()) {
        out.emplace(joint, pattern.matches(reg, joint) ? amp * factor : amp);
    }
    return {state.register_ptr(), std::move(out)};
}

namespace {

template <class... Ts> struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> Overloaded(Ts...) -> Overloaded<Ts...>;

std::string describe_pattern(const Assignment &a) {
    std::ostringstream os;
    bool first = true;
    for (const auto &[name, label] : a) {
        os << (first ? "" : ",") << name << '=' << label;
        first = false;
    }
    return os.str();
}

} // namespace

StateVector apply(const StateVector &state, const Operation &op) {
    return std::visit(
        Overloaded{
            [&](const SplitOp &o) {
                return apply_split(state, o.subsystem, o.ports);
            },
            [&](const RotationOp &o) {
                return apply_rotation(state, o.subsystem, o.pair, o.angle);
            },
            [&](const BasisChangeOp &o) {
                return apply_basis_change(state, o.subsystem, o.from, o.u, o.to);
            },
            [&](const RelabelOp &o) {
                return controlled_relabel(state, o.condition, o.mapping);
            },
            [&](const PhaseOp &o) {
                return controlled_phase(state, o.condition, o.phi);
            },
            [&](const ProjectionMarker &o) -> StateVector {
                throw NonInvertible("cannot replay projection '" +
                                    o.description + "'");
            },
        },
        op);
}

Operation inverse(const Operation &op) {
    return std::visit(
        Overloaded{
            [](const SplitOp &o) -> Operation { return o; },
            [](const RotationOp &o) -> Operation {
                return RotationOp{o.subsystem, o.pair, -o.angle};
            },
            [](const BasisChangeOp &o) -> Operation {
                if (o.to) {
                    return o;
                }
                return BasisChangeOp{o.subsystem, o.from, o.u.adjoint(), {}};
            },
            [](const RelabelOp &o) -> Operation {
                RelabelOp inv{o.condition, {}};
                for (const auto &pair : o.mapping) {
                    inv.mapping.push_back({pair.to, pair.from});
                }
                return inv;
            },
            [](const PhaseOp &o) -> Operation {
                return PhaseOp{o.condition, -o.phi};
            },
            [](const ProjectionMarker &o) -> Operation {
                throw NonInvertible("projection '" + o.description +
                                    "' has no inverse");
            },
        },
        op);
}

std::string describe(const Operation &op) {
    std::ostringstream os;
    std::visit(
        Overloaded{
            [&](const SplitOp &o) {
                os << "split " << o.subsystem << ": " << o.ports.source << " -> ("
                   << o.ports.first << ", " << o.ports.second << "), dump "
                   << o.ports.dump;
            },
            [&](const RotationOp &o) {
                os << "rotate " << o.subsystem << " (" << o.pair.first << ", "
                   << o.pair.second << ") by " << o.angle;
            },
            [&](const BasisChangeOp &o) {
                os << "basis change " << o.subsystem << " (" << o.from.first
                   << ", " << o.from.second << ")";
                if (o.to) {
                    os << " -> (" << o.to->first << ", " << o.to->second << ")";
                }
            },
            [&](const RelabelOp &o) {
                os << "relabel";
                if (!o.condition.empty()) {
                    os << " if " << describe_pattern(o.condition);
                }
                os << ':';
                for (const auto &pair : o.mapping) {
                    os << " [" << describe_pattern(pair.from) << " -> "
                       << describe_pattern(pair.to) << ']';
                }
            },
            [&](const PhaseOp &o) {
                os << "phase " << o.phi;
                if (!o.condition.empty()) {
                    os << " if " << describe_pattern(o.condition);
                }
            },
            [&](const ProjectionMarker &o) { os << "projection " << o.description; },
        },
        op);
    return os.str();
}

Operation resolve(const StateVector &state, const Operation &op) {
    if (const auto *relabel = std::get_if<RelabelOp>(&op)) {
        return complete_relabel(state, *relabel);
    }
    return op;
}

StateVector OpLog::record(const StateVector &state, const Operation &op) {
    auto resolved = resolve(state, op);
    auto out = labelsim::apply(state, resolved);
    entries_.push_back(std::move(resolved));
    return out;
}

void OpLog::mark_projection(std::string description) {
    entries_.emplace_back(ProjectionMarker{std::move(description)});
}

bool OpLog::unitary() const {
    return std::none_of(entries_.begin(), entries_.end(), [](const Operation &op) {
        return std::holds_alternative<ProjectionMarker>(op);
    });
}

std::vector<OpLog> OpLog::segments() const {
    std::vector<OpLog> out;
    OpLog current;
    for (const auto &op : entries_) {
        if (std::holds_alternative<ProjectionMarker>(op)) {
            if (!current.empty()) {
                out.push_back(std::move(current));
                current = OpLog{};
            }
            continue;
        }
        current.entries_.push_back(op);
    }
    if (!current.empty()) {
        out.push_back(std::move(current));
    }
    return out;
}

StateVector time_reverse(const StateVector &state, const OpLog &log) {
    if (!log.unitary()) {
        throw NonInvertible("log contains a projection; only unitary segments "
                            "can be time-reversed");
    }
    StateVector out = state;
    const auto &entries = log.entries();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        out = labelsim::apply(out, inverse(*it));
    }
    return out;
}

double recombine_probability(const StateVector &state,
                             const std::string &subsystem,
                             const SplitPorts &ports) {
    const auto returned = apply_split(state, subsystem, ports);
    const auto &reg = returned.reg();
    const auto sub = reg.index_of(subsystem);
    const auto source = reg.label_index(sub, ports.source);
    double p = 0.0;
    for (const auto &[joint, amp] : returned.amplitudes()) {
        if (reg.digit(joint, sub) == source) {
            p += std::norm(amp);
        }
    }
    return p / returned.norm_squared();
}

} // namespace labelsim
