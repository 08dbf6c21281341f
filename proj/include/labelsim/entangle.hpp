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
 * Bipartite entanglement diagnostics for pure register states: reduced
 * density matrices, Schmidt spectra and von Neumann entropy in bits.
 */
#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "labelsim/register.hpp"

namespace labelsim {

struct DensityMatrix {
    /// Kept subsystems, in register order.
    std::vector<std::string> subsystems;
    /// Joint assignments of the kept subsystems in canonical order; row i of
    /// `rho` refers to basis[i].
    std::vector<Assignment> basis;
    Eigen::MatrixXcd rho;

    [[nodiscard]] double trace() const { return rho.trace().real(); }
    [[nodiscard]] double purity() const;
    /// Eigenvalues in descending order.
    [[nodiscard]] std::vector<double> eigenvalues() const;
};

struct Bipartition {
    std::vector<std::string> first;
    std::vector<std::string> second;
};

/// Squared singular values across a cut, descending, values <= 1e-14 dropped.
struct SchmidtSpectrum {
    std::vector<double> coefficients;

    [[nodiscard]] std::size_t rank() const { return coefficients.size(); }
    [[nodiscard]] double second() const {
        return coefficients.size() > 1 ? coefficients[1] : 0.0;
    }
};

/// `keep` must be a nonempty proper subset of the register's subsystems.
DensityMatrix partial_trace(const StateVector &state,
                            const std::vector<std::string> &keep);

/// The two halves must partition the register's subsystems.
SchmidtSpectrum schmidt(const StateVector &state, const Bipartition &cut);

/// Cut of one subsystem against everything else.
Bipartition split_off(const Register &reg, const std::vector<std::string> &first);

/// −Σ λ log₂ λ, ignoring λ < 1e-12. Throws OperationError on eigenvalues
/// below −1e-10.
double entropy(const std::vector<double> &eigenvalues);
double entropy(const SchmidtSpectrum &spectrum);
double entropy(const DensityMatrix &rho);
double entropy(const StateVector &state, const Bipartition &cut);

bool is_product(const StateVector &state, const Bipartition &cut,
                double tol = 1e-9);

} // namespace labelsim
