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

#include "labelsim/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "labelsim/errors.hpp"

namespace labelsim {

namespace {

constexpr double kSchmidtFloor = 1e-14;
constexpr double kEigenFloor = 1e-12;
constexpr double kNegativeTolerance = 1e-10;

struct Split {
    std::vector<std::size_t> a;
    std::vector<std::size_t> b;
};

std::vector<std::size_t> resolve_names(const Register &reg,
                                       const std::vector<std::string> &names) {
    std::set<std::size_t> seen;
    for (const auto &n : names) {
        if (!seen.insert(reg.index_of(n)).second) {
            throw OperationError("subsystem '" + n + "' listed twice");
        }
    }
    return {seen.begin(), seen.end()};
}

std::uint64_t sub_index(const Register &reg, std::uint64_t joint,
                        const std::vector<std::size_t> &subs) {
    std::uint64_t idx = 0;
    for (const auto s : subs) {
        idx = idx * reg.subsystem_dimension(s) + reg.digit(joint, s);
    }
    return idx;
}

std::uint64_t sub_dimension(const Register &reg, const std::vector<std::size_t> &subs) {
    std::uint64_t d = 1;
    for (const auto s : subs) {
        d *= reg.subsystem_dimension(s);
    }
    return d;
}

Eigen::MatrixXcd amplitude_matrix(const StateVector &state, const Split &split) {
    const auto &reg = state.reg();
    const auto rows = sub_dimension(reg, split.a);
    const auto cols = sub_dimension(reg, split.b);
    if (rows * cols > (1ULL << 26)) {
        throw OperationError("bipartition too large for dense diagnostics");
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows),
                                                static_cast<Eigen::Index>(cols));
    const double norm = std::sqrt(state.norm_squared());
    for (const auto &[joint, amp] : state.amplitudes()) {
        m(static_cast<Eigen::Index>(sub_index(reg, joint, split.a)),
          static_cast<Eigen::Index>(sub_index(reg, joint, split.b))) += amp / norm;
    }
    return m;
}

Split split_of(const Register &reg, const Bipartition &cut) {
    Split s{resolve_names(reg, cut.first), resolve_names(reg, cut.second)};
    std::set<std::size_t> all(s.a.begin(), s.a.end());
    for (const auto b : s.b) {
        if (!all.insert(b).second) {
            throw OperationError("bipartition halves overlap");
        }
    }
    if (s.a.empty() || s.b.empty() || all.size() != reg.size()) {
        throw OperationError("bipartition must split every subsystem into two "
                             "nonempty halves");
    }
    return s;
}

} // namespace

double DensityMatrix::purity() const { return (rho * rho).trace().real(); }

std::vector<double> DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    std::vector<double> out(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(out.rbegin(), out.rend());
    return out;
}

DensityMatrix partial_trace(const StateVector &state,
                            const std::vector<std::string> &keep) {
    const auto &reg = state.reg();
    const auto kept = resolve_names(reg, keep);
    if (kept.empty() || kept.size() >= reg.size()) {
        throw OperationError("partial trace needs a nonempty proper subset to keep");
    }
    Split split{kept, {}};
    for (std::size_t s = 0; s < reg.size(); ++s) {
        if (!std::binary_search(kept.begin(), kept.end(), s)) {
            split.b.push_back(s);
        }
    }
    const auto m = amplitude_matrix(state, split);

    DensityMatrix out;
    for (const auto s : kept) {
        out.subsystems.push_back(reg.subsystem(s).name);
    }
    const auto dim = sub_dimension(reg, kept);
    for (std::uint64_t i = 0; i < dim; ++i) {
        Assignment a;
        auto rest = i;
        for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
            const auto d = reg.subsystem_dimension(*it);
            a.emplace(reg.subsystem(*it).name,
                      reg.label(*it, static_cast<std::size_t>(rest % d)));
            rest /= d;
        }
        out.basis.push_back(std::move(a));
    }
    out.rho = m * m.adjoint();
    return out;
}

SchmidtSpectrum schmidt(const StateVector &state, const Bipartition &cut) {
    const auto m = amplitude_matrix(state, split_of(state.reg(), cut));
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    SchmidtSpectrum out;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        const double s = svd.singularValues()[i];
        if (s * s > kSchmidtFloor) {
            out.coefficients.push_back(s * s);
        }
    }
    std::sort(out.coefficients.rbegin(), out.coefficients.rend());
    return out;
}

Bipartition split_off(const Register &reg, const std::vector<std::string> &first) {
    const auto a = resolve_names(reg, first);
    Bipartition cut;
    for (std::size_t s = 0; s < reg.size(); ++s) {
        (std::binary_search(a.begin(), a.end(), s) ? cut.first : cut.second)
            .push_back(reg.subsystem(s).name);
    }
    return cut;
}

double entropy(const std::vector<double> &eigenvalues) {
    double h = 0.0;
    for (const double l : eigenvalues) {
        if (l < -kNegativeTolerance) {
            throw OperationError("density matrix has a negative eigenvalue");
        }
        if (l >= kEigenFloor) {
            h -= l * std::log2(l);
        }
    }
    return std::max(0.0, h);
}

double entropy(const SchmidtSpectrum &spectrum) { return entropy(spectrum.coefficients); }

double entropy(const DensityMatrix &rho) { return entropy(rho.eigenvalues()); }

double entropy(const StateVector &state, const Bipartition &cut) {
    return entropy(schmidt(state, cut));
}

bool is_product(const StateVector &state, const Bipartition &cut, double tol) {
    return schmidt(state, cut).second() < tol;
}

} // namespace labelsim
