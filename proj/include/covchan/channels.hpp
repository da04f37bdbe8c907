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

#include "covchan/random.hpp"
#include "covchan/symplectic.hpp"

namespace covchan {

/// Single-mode Gaussian channel in the (f, g) representation: acting on mode
/// B of a state it maps sigma -> (1 (+) f) sigma (1 (+) f)^T + (0 (+) g).
///
/// A pair describes a genuine channel iff g is symmetric PSD-compatible with
/// 4 det g >= (det f - 1)^2; equivalently g + (i/2)(1 - det f) Omega_1 >= 0.
class GaussianChannel {
  public:
    /// Validates symmetry of g and complete positivity; throws
    /// AsymmetricNoiseError / NotAChannelError.
    static GaussianChannel validated(const Eigen::Matrix2d& f,
                                     const Eigen::Matrix2d& g, double tol = 1e-9);

    /// Skips validation. For diagnostics and file inspection only; never use
    /// the result to evolve states.
    static GaussianChannel unchecked(const Eigen::Matrix2d& f,
                                     const Eigen::Matrix2d& g);

    const Eigen::Matrix2d& f() const noexcept { return f_; }
    const Eigen::Matrix2d& g() const noexcept { return g_; }
    double det_f() const { return f_.determinant(); }
    double det_g() const { return g_.determinant(); }

    /// 4 det g - (det f - 1)^2; >= 0 for genuine channels.
    double physicality_margin() const;

    /// Minimum eigenvalue of g + (i/2)(1 - det f) Omega_1; the complete
    /// positivity condition in PSD form.
    double noise_psd_margin() const;

  private:
    GaussianChannel(Eigen::Matrix2d f, Eigen::Matrix2d g);
    Eigen::Matrix2d f_;
    Eigen::Matrix2d g_;
};

/// Validated construction (alias of GaussianChannel::validated).
GaussianChannel make_channel(const Eigen::Matrix2d& f, const Eigen::Matrix2d& g,
                             double tol = 1e-9);

/// Applies the channel to one mode: congruence by identity-except-f-on-mode,
/// then g added to that mode's diagonal block.
CovarianceMatrix apply_one_sided(const CovarianceMatrix& cm,
                                 const GaussianChannel& ch, int mode);

enum class ChannelKind { Disentangling, Preserving, Boundary };

const char* to_string(ChannelKind kind);

/// Classification against 4 det g >= (det f + 1)^2 with
/// margin = 4 det g - (det f + 1)^2: Disentangling above +tol, Preserving
/// below -tol, Boundary within tol. For the binary criterion the boundary
/// counts as disentangling (the condition is an inclusive inequality).
struct ChannelVerdict {
    ChannelKind kind;
    double margin;
};

/// 4 det g - (det f + 1)^2.
double separability_margin(const GaussianChannel& ch);

ChannelVerdict classify(const GaussianChannel& ch, double tol = 1e-9);

// Catalog of named channel families; all saturate or respect the
// complete-positivity bound.
GaussianChannel pure_loss(double eta);          // f = sqrt(eta) I, g = (1-eta)/2 I
GaussianChannel amplifier(double gain);         // f = sqrt(G) I,   g = (G-1)/2 I
GaussianChannel classical_noise(double n);      // f = I,           g = n I
GaussianChannel phase_conjugate(double gain);   // f = sqrt(G) diag(1,-1), g = (G+1)/2 I
GaussianChannel erase_to_vacuum();              // f = 0,           g = I/2

/// Rejection-samples a valid channel: f = a R(theta) diag(1, +/-1) R(phi)
/// with a uniform on [0, 2], g = Q diag(g1, g2) Q^T with g1, g2 uniform on
/// [0, 3]. Covers both det f signs and both verdicts.
GaussianChannel sample_channel(Rng& rng);

/// Same g sampler, but f = R(theta) diag(a, 0) R(phi), so det f = 0.
GaussianChannel sample_rank_deficient_channel(Rng& rng);

}  // namespace covchan
