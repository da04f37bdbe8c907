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

#include "covchan/channels.hpp"

#include <cmath>
#include <string>

namespace covchan {

GaussianChannel::GaussianChannel(Eigen::Matrix2d f, Eigen::Matrix2d g)
    : f_(std::move(f)), g_(std::move(g)) {}

GaussianChannel GaussianChannel::validated(const Eigen::Matrix2d& f,
                                           const Eigen::Matrix2d& g, double tol) {
    if (std::abs(g(0, 1) - g(1, 0)) > 1e-12) {
        throw AsymmetricNoiseError("channel noise matrix g is not symmetric");
    }
    Eigen::Matrix2d g_sym = 0.5 * (g + g.transpose());
    GaussianChannel ch(f, std::move(g_sym));
    if (ch.physicality_margin() < -tol || ch.noise_psd_margin() < -tol) {
        throw NotAChannelError(
            "(f, g) violates complete positivity: 4 det g - (det f - 1)^2 = " +
            std::to_string(ch.physicality_margin()) +
            ", PSD margin = " + std::to_string(ch.noise_psd_margin()));
    }
    return ch;
}

GaussianChannel GaussianChannel::unchecked(const Eigen::Matrix2d& f,
                                           const Eigen::Matrix2d& g) {
    return GaussianChannel(f, 0.5 * (g + g.transpose()));
}

double GaussianChannel::physicality_margin() const {
    const double df = det_f();
    return 4.0 * det_g() - (df - 1.0) * (df - 1.0);
}

double GaussianChannel::noise_psd_margin() const {
    // Eigenvalues of the 2x2 Hermitian matrix g + i c J with
    // c = (1 - det f)/2 and J = [[0, 1], [-1, 0]]:
    // (tr g)/2 -/+ sqrt(((g00 - g11)/2)^2 + g01^2 + c^2).
    const double c = 0.5 * (1.0 - det_f());
    const double half_diff = 0.5 * (g_(0, 0) - g_(1, 1));
    const double radius =
        std::sqrt(half_diff * half_diff + g_(0, 1) * g_(0, 1) + c * c);
    return 0.5 * (g_(0, 0) + g_(1, 1)) - radius;
}

GaussianChannel make_channel(const Eigen::Matrix2d& f, const Eigen::Matrix2d& g,
                             double tol) {
    return GaussianChannel::validated(f, g, tol);
}

CovarianceMatrix apply_one_sided(const CovarianceMatrix& cm,
                                 const GaussianChannel& ch, int mode) {
    if (mode < 0 || mode >= cm.n_modes()) {
        throw ModeIndexError("apply_one_sided: mode index out of range");
    }
    const int d = cm.dim();
    Eigen::MatrixXd scatter = Eigen::MatrixXd::Identity(d, d);
    scatter.block<2, 2>(2 * mode, 2 * mode) = ch.f();
    Eigen::MatrixXd out = congruence(scatter, cm.mat());
    out.block<2, 2>(2 * mode, 2 * mode) += ch.g();
    return CovarianceMatrix(cm.n_modes(), std::move(out));
}

const char* to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::Disentangling: return "Disentangling";
        case ChannelKind::Preserving: return "Preserving";
        case ChannelKind::Boundary: return "Boundary";
    }
    return "?";
}

double separability_margin(const GaussianChannel& ch) {
    const double df = ch.det_f();
    return 4.0 * ch.det_g() - (df + 1.0) * (df + 1.0);
}

ChannelVerdict classify(const GaussianChannel& ch, double tol) {
    const double margin = separability_margin(ch);
    ChannelKind kind = ChannelKind::Boundary;
    if (margin > tol) {
        kind = ChannelKind::Disentangling;
    } else if (margin < -tol) {
        kind = ChannelKind::Preserving;
    }
    return {kind, margin};
}

namespace {

Eigen::Matrix2d iso(double v) { return v * Eigen::Matrix2d::Identity(); }

}  // namespace

GaussianChannel pure_loss(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw Error("pure_loss: transmissivity must lie in [0, 1]");
    }
    return make_channel(iso(std::sqrt(eta)), iso(0.5 * (1.0 - eta)));
}

GaussianChannel amplifier(double gain) {
    if (!(gain >= 1.0)) {
        throw Error("amplifier: gain must be >= 1");
    }
    return make_channel(iso(std::sqrt(gain)), iso(0.5 * (gain - 1.0)));
}

GaussianChannel classical_noise(double n) {
    if (!(n >= 0.0)) {
        throw Error("classical_noise: variance must be >= 0");
    }
    return make_channel(Eigen::Matrix2d::Identity(), iso(n));
}

GaussianChannel phase_conjugate(double gain) {
    if (!(gain >= 1.0)) {
        throw Error("phase_conjugate: gain must be >= 1");
    }
    Eigen::Matrix2d f = Eigen::Matrix2d::Zero();
    f(0, 0) = std::sqrt(gain);
    f(1, 1) = -std::sqrt(gain);
    return make_channel(f, iso(0.5 * (gain + 1.0)));
}

GaussianChannel erase_to_vacuum() {
    return make_channel(Eigen::Matrix2d::Zero(), iso(0.5));
}

namespace {

Eigen::Matrix2d rotation(double t) {
    Eigen::Matrix2d r;
    r << std::cos(t), std::sin(t), -std::sin(t), std::cos(t);
    return r;
}

Eigen::Matrix2d sample_noise(Rng& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> noise(0.0, 3.0);
    const Eigen::Matrix2d q = rotation(angle(rng));
    Eigen::Matrix2d diag = Eigen::Matrix2d::Zero();
    diag(0, 0) = noise(rng);
    diag(1, 1) = noise(rng);
    return q * diag * q.transpose();
}

}  // namespace

GaussianChannel sample_channel(Rng& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> scale(0.0, 2.0);
    for (;;) {
        const double sign = (rng() & 1u) ? 1.0 : -1.0;
        Eigen::Matrix2d diag = Eigen::Matrix2d::Zero();
        diag(0, 0) = scale(rng);
        diag(1, 1) = sign * diag(0, 0);
        const Eigen::Matrix2d f = rotation(angle(rng)) * diag * rotation(angle(rng));
        const Eigen::Matrix2d g = sample_noise(rng);
        try {
            return make_channel(f, g);
        } catch (const NotAChannelError&) {
            // resample
        }
    }
}

GaussianChannel sample_rank_deficient_channel(Rng& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> scale(0.0, 2.0);
    for (;;) {
        Eigen::Matrix2d diag = Eigen::Matrix2d::Zero();
        diag(0, 0) = scale(rng);
        const Eigen::Matrix2d f = rotation(angle(rng)) * diag * rotation(angle(rng));
        const Eigen::Matrix2d g = sample_noise(rng);
        try {
            return make_channel(f, g);
        } catch (const NotAChannelError&) {
            // resample
        }
    }
}

}  // namespace covchan
