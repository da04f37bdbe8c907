// Copyright 2026 The covchan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "covchan/states.hpp"

#include <cmath>

namespace covchan {

CovarianceMatrix tmss(double r) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
        throw Error("tmss: squeeze parameter must be finite and >= 0");
    }
    const double c = 0.5 * std::cosh(2.0 * r);
    const double s = 0.5 * std::sinh(2.0 * r);
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m.diagonal() << c, c, c, c;
    m(0, 2) = s;
    m(2, 0) = s;
    m(1, 3) = -s;
    m(3, 1) = -s;
    return CovarianceMatrix(2, m);
}

CovarianceMatrix vacuum(int n_modes) {
    if (n_modes < 1) {
        throw DimensionError("vacuum: n_modes must be >= 1");
    }
    return CovarianceMatrix(
        n_modes, kVacuumVariance * Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

TwoModeBlocks blocks(const CovarianceMatrix& cm) {
    if (cm.n_modes() != 2) {
        throw DimensionError("blocks: needs exactly 2 modes");
    }
    TwoModeBlocks b;
    b.alpha = cm.mat().block<2, 2>(0, 0);
    b.beta = cm.mat().block<2, 2>(2, 2);
    b.gamma = cm.mat().block<2, 2>(0, 2);
    return b;
}

bool is_pure(const CovarianceMatrix& cm, double tol) {
    for (double nu : symplectic_eigenvalues(cm)) {
        if (std::abs(nu - 0.5) > tol) return false;
    }
    return true;
}

namespace {

SymplecticMatrix local_or_identity(const std::vector<EulerTriple>& ops, std::size_t i) {
    if (i < ops.size()) {
        return one_mode_symplectic(ops[i].theta, ops[i].squeeze, ops[i].phi);
    }
    return SymplecticMatrix(1, Eigen::Matrix2d::Identity());
}

}  // namespace

CovarianceMatrix random_pure_two_mode(const PureStateSpec& spec) {
    if (spec.n_modes != 2) {
        throw DimensionError("random_pure_two_mode: spec must have 2 modes");
    }
    if (spec.local_ops.size() > 2) {
        throw DimensionError("random_pure_two_mode: expected at most two local ops");
    }
    const SymplecticMatrix s =
        direct_sum(local_or_identity(spec.local_ops, 0), local_or_identity(spec.local_ops, 1));
    return transform(s, tmss(spec.squeeze_r));
}

CovarianceMatrix random_pure_n_mode(const PureStateSpec& spec) {
    const int n = spec.n_modes;
    if (n < 3) {
        throw DimensionError("random_pure_n_mode: needs n_modes >= 3");
    }
    // Base state: modes 0..N-3 vacuum, modes (N-2, N-1) two-mode squeezed.
    Eigen::MatrixXd base = Eigen::MatrixXd::Identity(2 * n, 2 * n) * kVacuumVariance;
    base.bottomRightCorner(4, 4) = tmss(spec.squeeze_r).mat();

    const SymplecticMatrix mixer =
        spec.mixer_seed ? random_symplectic(n - 1, *spec.mixer_seed)
                        : SymplecticMatrix(n - 1, Eigen::MatrixXd::Identity(2 * (n - 1),
                                                                            2 * (n - 1)));
    const SymplecticMatrix s = direct_sum(mixer, local_or_identity(spec.local_ops, 0));
    return transform(s, CovarianceMatrix(n, std::move(base)));
}

CovarianceMatrix pure_state(const PureStateSpec& spec) {
    return spec.n_modes == 2 ? random_pure_two_mode(spec) : random_pure_n_mode(spec);
}

PureStateSpec draw_pure_state_spec(Rng& rng, int n_modes, double r_min, double r_max) {
    if (n_modes < 2) {
        throw DimensionError("draw_pure_state_spec: n_modes must be >= 2");
    }
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> squeeze(-1.5, 1.5);
    std::uniform_real_distribution<double> r_dist(r_min, r_max);

    PureStateSpec spec;
    spec.n_modes = n_modes;
    spec.squeeze_r = r_dist(rng);
    const int n_locals = n_modes == 2 ? 2 : 1;
    for (int i = 0; i < n_locals; ++i) {
        spec.local_ops.push_back({angle(rng), squeeze(rng), angle(rng)});
    }
    if (n_modes >= 3) {
        spec.mixer_seed = rng();
    }
    return spec;
}

}  // namespace covchan
