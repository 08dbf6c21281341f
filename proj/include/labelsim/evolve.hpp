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
 * Unitary dynamics on labeled registers: beam-splitter style splits,
 * two-level rotations, basis changes, controlled relabelings and controlled
 * phases, plus an operation log that can be replayed backwards.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "labelsim/register.hpp"

namespace labelsim {

using LabelPair = std::pair<std::string, std::string>;

/// Ports of a splitter acting inside one subsystem. The forward pass sends
/// `source` to (first + second)/√2; the return pass sends first/second back
/// to (source ± dump)/√2. The map is its own inverse.
struct SplitPorts {
    std::string source;
    std::string first;
    std::string second;
    std::string dump;
};

struct SplitOp {
    std::string subsystem;
    SplitPorts ports;
};

/// |from> -> cos a |from> + sin a |to>;  |to> -> -sin a |from> + cos a |to>.
struct RotationOp {
    std::string subsystem;
    LabelPair pair;
    double angle = 0.0;
};

/// Applies `u` to the amplitudes of `from`. With `to` set, the transformed
/// amplitudes land on the `to` labels and the `to` amplitudes return to
/// `from` through u†, which re-expresses a two-level system in a second,
/// separately labeled basis.
struct BasisChangeOp {
    std::string subsystem;
    LabelPair from;
    Eigen::Matrix2cd u;
    std::optional<LabelPair> to;
};

struct Relabel {
    Assignment from;
    Assignment to;
};

/// Moves amplitude from each `from` pattern to its `to` pattern on basis
/// states that also match `condition`.
struct RelabelOp {
    Assignment condition;
    std::vector<Relabel> mapping;
};

struct PhaseOp {
    Assignment condition;
    double phi = 0.0;
};

/// Placeholder recorded where a scenario projected the state. Not invertible.
struct ProjectionMarker {
    std::string description;
};

using Operation = std::variant<SplitOp, RotationOp, BasisChangeOp, RelabelOp,
                               PhaseOp, ProjectionMarker>;

StateVector apply_split(const StateVector &state, const std::string &subsystem,
                        const SplitPorts &ports);

StateVector apply_rotation(const StateVector &state,
                           const std::string &subsystem, const LabelPair &pair,
                           double angle);

/// Throws OperationError if `u` is not unitary within kNormTolerance.
StateVector apply_basis_change(const StateVector &state,
                               const std::string &subsystem,
                               const LabelPair &from, const Eigen::Matrix2cd &u,
                               const std::optional<LabelPair> &to = {});

/// The mapping must be injective, name the same subsystems in every pattern,
/// and be disjoint from the condition. Open chains (a target that is not also
/// a source) are closed by sending the target back to the chain start; that
/// is only allowed when the target is unpopulated under the condition.
/// Violations throw OperationError.
StateVector controlled_relabel(const StateVector &state,
                               const Assignment &condition,
                               const std::vector<Relabel> &mapping);

StateVector controlled_phase(const StateVector &state,
                             const Assignment &condition, double phi);

/// The Hadamard-form 2x2 matrix (1/√2)[[1,1],[1,-1]].
Eigen::Matrix2cd hadamard();

/// Dispatches to the matching apply_* function. Throws NonInvertible for a
/// ProjectionMarker.
StateVector apply(const StateVector &state, const Operation &op);

/// Throws NonInvertible for a ProjectionMarker.
Operation inverse(const Operation &op);

std::string describe(const Operation &op);

/// Returns `op` with its relabel mapping closed into an explicit permutation
/// (checked against `state`); other kinds are returned unchanged.
Operation resolve(const StateVector &state, const Operation &op);

/// Append-only record of the operations applied during one run.
class OpLog {
  public:
    /// Applies `op` to `state`, appends the resolved operation, and returns
    /// the new state.
    StateVector record(const StateVector &state, const Operation &op);
    void mark_projection(std::string description);

    [[nodiscard]] const std::vector<Operation> &entries() const {
        return entries_;
    }
    [[nodiscard]] bool empty() const { return entries_.empty(); }
    [[nodiscard]] bool unitary() const;

    /// Maximal runs of unitary entries between projection markers.
    [[nodiscard]] std::vector<OpLog> segments() const;

  private:
    std::vector<Operation> entries_;
};

/// Applies the inverses of the log entries in reverse order.
StateVector time_reverse(const StateVector &state, const OpLog &log);

/// Probability of finding `subsystem` on `ports.source` after the return
/// pass through the splitter. The input state is not modified.
double recombine_probability(const StateVector &state,
                             const std::string &subsystem,
                             const SplitPorts &ports);

} // namespace labelsim
