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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "covchan/random.hpp"
#include "covchan/symplectic.hpp"

namespace covchan {

/// 2x2 blocks of a two-mode CM written as [[alpha, gamma], [gamma^T, beta]].
struct TwoModeBlocks {
    Eigen::Matrix2d alpha;
    Eigen::Matrix2d beta;
    Eigen::Matrix2d gamma;
};

/// Two-mode squeezed vacuum with squeeze parameter r: diagonal blocks
/// (cosh 2r)/2 * I, off-diagonal blocks (sinh 2r)/2 * diag(1, -1).
/// Pure for every r, entangled exactly for r > 0.
CovarianceMatrix tmss(double r);

/// (1/2) * identity on n modes.
CovarianceMatrix vacuum(int n_modes);

/// Block decomposition of a two-mode CM.
TwoModeBlocks blocks(const CovarianceMatrix& cm);

/// True iff every symplectic eigenvalue equals 1/2 within tol.
bool is_pure(const CovarianceMatrix& cm, double tol = 1e-8);

/// Euler parameters (theta, squeeze, phi) of a one-mode symplectic.
struct EulerTriple {
    double theta = 0.0;
    double squeeze = 0.0;
    double phi = 0.0;
};

/// Parameters of a random pure Gaussian state.
///
/// n_modes == 2: local_ops holds the triples of S_A and S_B and the state is
/// (S_A (+) S_B)[tmss(r)].
///
/// n_modes >= 3: the state is (S_mix (+) S_B)[vacuum(N-2) (+) tmss(r)] with
/// mode B last, S_B given by the single entry of local_ops and S_mix the
/// (N-1)-mode random symplectic drawn from mixer_seed. Missing local_ops /
/// mixer_seed mean identity operations.
struct PureStateSpec {
    int n_modes = 2;
    double squeeze_r = 0.0;
    std::vector<EulerTriple> local_ops;
    std::optional<std::uint64_t> mixer_seed;
};

CovarianceMatrix random_pure_two_mode(const PureStateSpec& spec);
CovarianceMatrix random_pure_n_mode(const PureStateSpec& spec);

/// Realizes either constructor depending on spec.n_modes.
CovarianceMatrix pure_state(const PureStateSpec& spec);

/// Draws a spec with squeeze uniform on [r_min, r_max], angles uniform on
/// [0, 2pi) and local squeezes uniform on [-1.5, 1.5].
PureStateSpec draw_pure_state_spec(Rng& rng, int n_modes, double r_min, double r_max);

}  // namespace covchan
