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

#include "covchan/symplectic.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "covchan/random.hpp"

namespace covchan {

namespace {

void check_square_even(const Eigen::MatrixXd& m, int n_modes, const char* what) {
    if (n_modes < 1) {
        throw DimensionError(std::string(what) + ": n_modes must be >= 1");
    }
    if (m.rows() != m.cols() || m.rows() != 2 * n_modes) {
        throw DimensionError(std::string(what) + ": expected a " +
                             std::to_string(2 * n_modes) + "x" +
                             std::to_string(2 * n_modes) + " matrix");
    }
}

}  // namespace

CovarianceMatrix::CovarianceMatrix(int n_modes, Eigen::MatrixXd data)
    : n_modes_(n_modes), data_(std::move(data)) {
    check_square_even(data_, n_modes_, "CovarianceMatrix");
    data_ = 0.5 * (data_ + data_.transpose()).eval();
}

CovarianceMatrix CovarianceMatrix::from_matrix(Eigen::MatrixXd data) {
    if (data.rows() != data.cols() || data.rows() < 2 || data.rows() % 2 != 0) {
        throw DimensionError("CovarianceMatrix: dimension must be even and >= 2");
    }
    const int n = static_cast<int>(data.rows()) / 2;
    return CovarianceMatrix(n, std::move(data));
}

SymplecticMatrix::SymplecticMatrix(int n_modes, Eigen::MatrixXd data, double tol)
    : n_modes_(n_modes), data_(std::move(data)) {
    check_square_even(data_, n_modes_, "SymplecticMatrix");
    const Eigen::MatrixXd omega = symplectic_form(n_modes_);
    const double residual =
        (data_ * omega * data_.transpose() - omega).cwiseAbs().maxCoeff();
    if (!(residual <= tol)) {
        throw Error("SymplecticMatrix: S Omega S^T - Omega residual " +
                    std::to_string(residual) + " exceeds tolerance");
    }
}

Eigen::MatrixXd symplectic_form(int n_modes) {
    if (n_modes < 1) {
        throw DimensionError("symplectic_form: n_modes must be >= 1");
    }
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
    for (int k = 0; k < n_modes; ++k) {
        omega(2 * k, 2 * k + 1) = 1.0;
        omega(2 * k + 1, 2 * k) = -1.0;
    }
    return omega;
}

Eigen::MatrixXd congruence(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    if (b.rows() != b.cols() || a.cols() != b.rows()) {
        throw DimensionError("congruence: inner dimensions incompatible");
    }
    return a * b * a.transpose();
}

CovarianceMatrix transform(const SymplecticMatrix& s, const CovarianceMatrix& cm) {
    if (s.n_modes() != cm.n_modes()) {
        throw DimensionError("transform: mode counts differ");
    }
    return CovarianceMatrix(cm.n_modes(), congruence(s.mat(), cm.mat()));
}

std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& cm) {
    const int n = cm.n_modes();
    const Eigen::MatrixXd omega = symplectic_form(n);
    std::vector<double> moduli(2 * n);

    // For sigma = L L^T > 0 the matrix i Omega sigma is similar to the
    // Hermitian i L^T Omega L, so the moduli are the singular values of
    // L^T Omega L (each appearing twice). This route stays accurate for the
    // strongly squeezed states where the eigenvectors of Omega sigma become
    // ill-conditioned. Indefinite inputs fall back to the general solver.
    Eigen::LLT<Eigen::MatrixXd> llt(cm.mat());
    if (llt.info() == Eigen::Success) {
        const Eigen::MatrixXd l = llt.matrixL();
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(l.transpose() * omega * l);
        for (int i = 0; i < 2 * n; ++i) {
            moduli[i] = svd.singularValues()(i);
        }
    } else {
        Eigen::EigenSolver<Eigen::MatrixXd> solver(omega * cm.mat(),
                                                   /*computeEigenvectors=*/false);
        if (solver.info() != Eigen::Success) {
            throw EigensolverError("symplectic_eigenvalues: eigensolver failed");
        }
        for (int i = 0; i < 2 * n; ++i) {
            moduli[i] = std::abs(solver.eigenvalues()(i));
        }
    }
    std::sort(moduli.begin(), moduli.end());

    // Eigenvalues of i*Omega*sigma come in +/- pairs; adjacent sorted moduli
    // must agree to relative tolerance 1e-8 or the input is ill-conditioned.
    std::vector<double> out(n);
    for (int k = 0; k < n; ++k) {
        const double lo = moduli[2 * k];
        const double hi = moduli[2 * k + 1];
        if (hi - lo > 1e-8 * std::max(1.0, hi)) {
            throw EigensolverError(
                "symplectic_eigenvalues: eigenvalue pairing failed (" +
                std::to_string(lo) + " vs " + std::to_string(hi) + ")");
        }
        out[k] = 0.5 * (lo + hi);
    }
    return out;
}

double physicality_margin(const CovarianceMatrix& cm) {
    const std::complex<double> half_i(0.0, 0.5);
    Eigen::MatrixXcd h = cm.mat().cast<std::complex<double>>();
    h += half_i * symplectic_form(cm.n_modes()).cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw EigensolverError("physicality_margin: eigensolver failed");
    }
    return solver.eigenvalues()(0);
}

bool is_physical(const CovarianceMatrix& cm, double tol) {
    return physicality_margin(cm) >= -tol;
}

DeterminantPhysicality two_mode_physical_det_form(const CovarianceMatrix& cm,
                                                  double tol) {
    if (cm.n_modes() != 2) {
        throw DimensionError("two_mode_physical_det_form: needs exactly 2 modes");
    }
    const Eigen::MatrixXd& s = cm.mat();
    const Eigen::Matrix2d alpha = s.block<2, 2>(0, 0);
    const Eigen::Matrix2d beta = s.block<2, 2>(2, 2);
    const Eigen::Matrix2d gamma = s.block<2, 2>(0, 2);

    const double det_alpha = alpha.determinant();
    const double det_beta = beta.determinant();
    const double det_gamma = gamma.determinant();
    const double det_sigma = s.determinant();
    const double seralian = det_alpha + det_beta + 2.0 * det_gamma;

    DeterminantPhysicality res;
    res.rs_margin = seralian - (4.0 * det_sigma + 0.25);
    res.nu_min_margin = std::numeric_limits<double>::quiet_NaN();

    // One-mode marginals must be states: positive diagonal, det >= 1/4.
    const bool blocks_ok =
        alpha(0, 0) > 0.0 && det_alpha >= 0.25 - tol &&
        beta(0, 0) > 0.0 && det_beta >= 0.25 - tol;

    // sigma >= 0, tested on sigma itself (not on sigma + (i/2) Omega).
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s);
    if (solver.info() != Eigen::Success) {
        throw EigensolverError("two_mode_physical_det_form: eigensolver failed");
    }
    const bool psd_ok = solver.eigenvalues()(0) >= -tol;

    // Williamson moduli from the invariants: nu^2 are the roots of
    // t^2 - seralian * t + det sigma.
    const double disc = seralian * seralian - 4.0 * det_sigma;
    const bool real_spectrum = disc >= -tol;
    if (real_spectrum) {
        const double root = std::sqrt(std::max(disc, 0.0));
        const double nu_min_sq = std::max(0.5 * (seralian - root), 0.0);
        res.nu_min_margin = std::sqrt(nu_min_sq) - 0.5;
    }

    res.physical = blocks_ok && psd_ok && real_spectrum &&
                   seralian >= 0.5 - tol && res.rs_margin <= tol;
    return res;
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& cm, int mode) {
    if (mode < 0 || mode >= cm.n_modes()) {
        throw ModeIndexError("partial_transpose: mode index out of range");
    }
    Eigen::VectorXd lambda = Eigen::VectorXd::Ones(cm.dim());
    lambda(2 * mode + 1) = -1.0;
    const Eigen::MatrixXd flipped =
        lambda.asDiagonal() * cm.mat() * lambda.asDiagonal();
    return CovarianceMatrix(cm.n_modes(), flipped);
}

SymplecticMatrix one_mode_symplectic(double theta, double squeeze, double phi) {
    const auto rot = [](double t) {
        Eigen::Matrix2d r;
        r << std::cos(t), std::sin(t), -std::sin(t), std::cos(t);
        return r;
    };
    Eigen::Matrix2d sq = Eigen::Matrix2d::Zero();
    sq(0, 0) = std::exp(squeeze);
    sq(1, 1) = std::exp(-squeeze);
    return SymplecticMatrix(1, rot(theta) * sq * rot(phi));
}

SymplecticMatrix beam_splitter(int n_modes, int mode, double theta) {
    if (mode < 0 || mode + 1 >= n_modes) {
        throw ModeIndexError("beam_splitter: needs modes (mode, mode+1) in range");
    }
    Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    const Eigen::Matrix2d id2 = Eigen::Matrix2d::Identity();
    s.block<2, 2>(2 * mode, 2 * mode) = c * id2;
    s.block<2, 2>(2 * mode, 2 * mode + 2) = sn * id2;
    s.block<2, 2>(2 * mode + 2, 2 * mode) = -sn * id2;
    s.block<2, 2>(2 * mode + 2, 2 * mode + 2) = c * id2;
    return SymplecticMatrix(n_modes, s);
}

SymplecticMatrix direct_sum(const SymplecticMatrix& a, const SymplecticMatrix& b) {
    const int n = a.n_modes() + b.n_modes();
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    s.topLeftCorner(a.dim(), a.dim()) = a.mat();
    s.bottomRightCorner(b.dim(), b.dim()) = b.mat();
    return SymplecticMatrix(n, s, 1e-9);
}

SymplecticMatrix random_symplectic(int n_modes, std::uint64_t seed) {
    if (n_modes < 1) {
        throw DimensionError("random_symplectic: n_modes must be >= 1");
    }
    Rng rng = make_rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> squeeze(-1.5, 1.5);

    const int d = 2 * n_modes;
    Eigen::MatrixXd s = Eigen::MatrixXd::Identity(d, d);
    for (int layer = 0; layer < n_modes; ++layer) {
        for (int m = 0; m < n_modes; ++m) {
            const SymplecticMatrix local =
                one_mode_symplectic(angle(rng), squeeze(rng), angle(rng));
            Eigen::MatrixXd embed = Eigen::MatrixXd::Identity(d, d);
            embed.block<2, 2>(2 * m, 2 * m) = local.mat();
            s = embed * s;
        }
        for (int m = layer % 2; m + 1 < n_modes; m += 2) {
            s = beam_splitter(n_modes, m, angle(rng)).mat() * s;
        }
    }
    return SymplecticMatrix(n_modes, std::move(s), 1e-9);
}

}  // namespace covchan
