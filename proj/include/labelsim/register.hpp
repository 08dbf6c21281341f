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

/**
 * @file
 * Composite registers over labeled finite-dimensional subsystems, and the
 * sparse state-vector type the rest of the library operates on.
 *
 * Joint basis states are enumerated in mixed radix with the first subsystem
 * varying slowest, so joint index 0 is "every subsystem in its first label".
 */
#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace labelsim {

using Complex = std::complex<double>;

/// Subsystem name -> basis label. Used both for full joint assignments and
/// for partial ones (conditions, post-selections).
using Assignment = std::map<std::string, std::string, std::less<>>;

/// Norm and unitarity tolerance used across the library.
inline constexpr double kNormTolerance = 1e-10;
/// Outcome probabilities at or below this are treated as impossible.
inline constexpr double kProbabilityFloor = 1e-12;
/// Amplitudes with smaller magnitude are not stored.
inline constexpr double kPruneThreshold = 1e-15;

struct SubsystemSpec {
    std::string name;
    std::vector<std::string> labels;
};

class Register {
  public:
    /// Throws RegisterError on empty spec list, duplicate names, duplicate
    /// labels, dimension < 2, or a joint dimension that overflows 64 bits.
    explicit Register(std::vector<SubsystemSpec> specs);

    [[nodiscard]] std::size_t size() const { return specs_.size(); }
    [[nodiscard]] std::uint64_t dimension() const { return dimension_; }
    [[nodiscard]] const std::vector<SubsystemSpec> &subsystems() const {
        return specs_;
    }
    [[nodiscard]] const SubsystemSpec &subsystem(std::size_t i) const {
        return specs_.at(i);
    }
    [[nodiscard]] std::size_t subsystem_dimension(std::size_t i) const {
        return specs_.at(i).labels.size();
    }

    [[nodiscard]] bool contains(std::string_view name) const;
    /// Throws LabelError for unknown names.
    [[nodiscard]] std::size_t index_of(std::string_view name) const;
    /// Throws LabelError for unknown labels.
    [[nodiscard]] std::size_t label_index(std::size_t subsystem,
                                          std::string_view label) const;
    [[nodiscard]] const std::string &label(std::size_t subsystem,
                                           std::size_t index) const {
        return specs_.at(subsystem).labels.at(index);
    }

    [[nodiscard]] std::uint64_t stride(std::size_t subsystem) const {
        return strides_[subsystem];
    }
    [[nodiscard]] std::size_t digit(std::uint64_t joint,
                                    std::size_t subsystem) const {
        return static_cast<std::size_t>((joint / strides_[subsystem]) %
                                        specs_[subsystem].labels.size());
    }
    [[nodiscard]] std::uint64_t with_digit(std::uint64_t joint,
                                           std::size_t subsystem,
                                           std::size_t label) const {
        const auto old = digit(joint, subsystem);
        return joint - old * strides_[subsystem] + label * strides_[subsystem];
    }

    /// Full assignment -> joint index. Every subsystem must be named.
    [[nodiscard]] std::uint64_t encode(const Assignment &full) const;
    [[nodiscard]] Assignment decode(std::uint64_t joint) const;

    bool operator==(const Register &other) const;

  private:
    std::vector<SubsystemSpec> specs_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t dimension_ = 1;
    std::map<std::string, std::size_t, std::less<>> by_name_;
    std::vector<std::map<std::string, std::size_t, std::less<>>> by_label_;
};

using RegisterPtr = std::shared_ptr<const Register>;

RegisterPtr new_register(std::vector<SubsystemSpec> specs);

/// A partial assignment resolved against a register: the (subsystem, label)
/// digits a joint basis state must carry to match.
class Pattern {
  public:
    Pattern() = default;
    Pattern(const Register &reg, const Assignment &partial);

    [[nodiscard]] bool matches(const Register &reg, std::uint64_t joint) const;
    [[nodiscard]] const std::vector<std::pair<std::size_t, std::size_t>> &
    digits() const {
        return digits_;
    }
    [[nodiscard]] bool empty() const { return digits_.empty(); }

  private:
    std::vector<std::pair<std::size_t, std::size_t>> digits_;
};

/// Immutable sparse amplitude map over the joint basis of a register.
/// Absent entries are zero; iteration follows canonical basis order.
class StateVector {
  public:
    using Amplitudes = std::map<std::uint64_t, Complex>;

    StateVector(RegisterPtr reg, Amplitudes amplitudes);

    [[nodiscard]] const Register &reg() const { return *reg_; }
    [[nodiscard]] const RegisterPtr &register_ptr() const { return reg_; }
    [[nodiscard]] const Amplitudes &amplitudes() const { return amplitudes_; }
    [[nodiscard]] Complex amplitude(std::uint64_t joint) const;
    [[nodiscard]] double norm_squared() const;
    /// Throws OperationError if the norm is zero.
    [[nodiscard]] StateVector normalized() const;
    /// Dense copy in canonical order (for diagnostics and small registers).
    [[nodiscard]] std::vector<Complex> dense() const;

  private:
    RegisterPtr reg_;
    Amplitudes amplitudes_;
};

struct Term {
    Complex amplitude;
    Assignment assignment;
};

/// Builds a state from (amplitude, full assignment) terms; duplicate
/// assignments sum. Without normalization the terms must already have unit
/// norm within kNormTolerance.
StateVector superpose(const RegisterPtr &reg, const std::vector<Term> &terms,
                      bool normalize);

StateVector basis_state(const RegisterPtr &reg, const Assignment &full);

Complex amplitude(const StateVector &state, const Assignment &full);

/// <a|b>; both states must live on equal registers.
Complex inner_product(const StateVector &a, const StateVector &b);

/// |<a|b>|^2, insensitive to global phase.
double fidelity(const StateVector &a, const StateVector &b);

/// a ⊗ b on the concatenated register (subsystem names must not clash).
StateVector tensor(const StateVector &a, const StateVector &b);

/// Removes subsystems that sit in one definite basis assignment, returning
/// the remaining factor. Throws OperationError when the named subsystems are
/// not in a single basis state (i.e. still entangled or superposed).
StateVector drop_definite(const StateVector &state,
                          const std::vector<std::string> &names);

/// Human-readable "name=label, ..." form of an assignment, in register order.
std::string format_assignment(const Register &reg, const Assignment &a);

} // namespace labelsim
