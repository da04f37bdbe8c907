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

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "covchan/errors.hpp"

namespace covchan {

/// Variance of each vacuum quadrature in this convention (hbar = 1).
inline constexpr double kVacuumVariance = 0.5;

/// Real symmetric 2N x 2N matrix of quadrature second moments, quadrature
/// ordering (q1, p1, q2, p2, ...). The sole state representation used by
/// this library; the matrix is symmetrized on construction.
class CovarianceMatrix {
  public:
    CovarianceMatrix(int n_modes, Eigen::MatrixXd data);

    /// Builds from a square matrix of even dimension, inferring n_modes.
    static CovarianceMatrix from_matrix(Eigen::MatrixXd data);

    int n_modes() const noexcept { return n_modes_; }
    int dim() const noexcept { return 2 * n_modes_; }
    const Eigen::MatrixXd& mat() const noexcept { return data_; }

  private:
    int n_modes_;
    Eigen::MatrixXd data_;
};

/// Real 2N x 2N matrix S with S Omega S^T = Omega; represents a Gaussian
/// unitary at the covariance level. The constructor validates the
/// symplectic condition to `tol` (max-abs residual).
class SymplecticMatrix {
  public:
    SymplecticMatrix(int n_modes, Eigen::MatrixXd data, double tol = 1e-10);

    int n_modes() const noexcept { return n_modes_; }
    int dim() const noexcept { return 2 * n_modes_; }
    const Eigen::MatrixXd& mat() const noexcept { return data_; }

  private:
    int n_modes_;
    Eigen::MatrixXd data_;
};

/// Block-diagonal symplectic form, per-mode blocks [[0, 1], [-1, 0]].
Eigen::MatrixXd symplectic_form(int n_modes);

/// a * b * a^T.
Eigen::MatrixXd congruence(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Symplectic congruence S[sigma] = S sigma S^T as a state transformation.
CovarianceMatrix transform(const SymplecticMatrix& s, const CovarianceMatrix& cm);

/// The N moduli of the eigenvalue pairs of i*Omega*sigma, ascending.
/// Pairs are matched by magnitude; a failed match throws EigensolverError.
std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& cm);

/// Minimum eigenvalue of the Hermitian matrix sigma + (i/2) Omega.
/// Non-negative exactly for valid quantum states.
double physicality_margin(const CovarianceMatrix& cm);

/// Robertson-Schroedinger test: sigma + (i/2) Omega >= 0 within tol.
bool is_physical(const CovarianceMatrix& cm, double tol = 1e-9);

/// Result of the two-mode determinant-form physicality test built from the
/// Williamson invariants (block determinants and det sigma) instead of the
/// eigenvalues of sigma + (i/2) Omega.
struct DeterminantPhysicality {
    bool physical = false;
    /// nu_min - 1/2 where nu_min is the smaller Williamson eigenvalue
    /// obtained from the invariants; NaN when the spectrum is not real.
    double nu_min_margin = 0.0;
    /// det alpha + det beta + 2 det gamma - (4 det sigma + 1/4), <= 0 for
    /// physical states.
    double rs_margin = 0.0;
};

/// Two-mode physicality decided purely from determinants: one-mode block
/// conditions, sigma >= 0, seralian >= 1/2 and the determinant-form
/// Robertson-Schroedinger inequality.
DeterminantPhysicality two_mode_physical_det_form(const CovarianceMatrix& cm,
                                                  double tol = 1e-9);

/// Sign flip of the p-quadrature of one mode: Lambda sigma Lambda.
CovarianceMatrix partial_transpose(const CovarianceMatrix& cm, int mode);

/// Euler-form one-mode symplectic R(theta) diag(e^s, e^-s) R(phi).
SymplecticMatrix one_mode_symplectic(double theta, double squeeze, double phi);

/// Beam splitter acting on modes (mode, mode + 1) of an n-mode register.
SymplecticMatrix beam_splitter(int n_modes, int mode, double theta);

/// Direct sum a (+) b.
SymplecticMatrix direct_sum(const SymplecticMatrix& a, const SymplecticMatrix& b);

/// Random n-mode symplectic: a depth-n layered circuit of one-mode Euler
/// symplectics (angles uniform on [0, 2pi), squeeze uniform on
/// [-1.5, 1.5]) interleaved with nearest-neighbor beam splitters. Covers a
/// full-measure subset; not Haar-uniform.
SymplecticMatrix random_symplectic(int n_modes, std::uint64_t seed);

}  // namespace covchan
