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

#include "covchan/verifier.hpp"

#include <algorithm>
#include <cmath>

namespace covchan {

namespace {

const char* separability_name(bool separable) {
    return separable ? "separable" : "entangled";
}

void validate(const TrialConfig& cfg) {
    if (cfg.n_trials < 1) {
        throw Error("TrialConfig: n_trials must be >= 1");
    }
    if (cfg.n_modes < 2) {
        throw Error("TrialConfig: n_modes must be >= 2");
    }
    if (!(cfg.r_min > 0.0) || !(cfg.r_max >= cfg.r_min)) {
        throw Error("TrialConfig: squeeze range must satisfy 0 < r_min <= r_max");
    }
    if (!(cfg.boundary_exclusion >= 0.0)) {
        throw Error("TrialConfig: boundary exclusion must be >= 0");
    }
}

/// Oracle on the evolved state. For more than two modes with pure inputs,
/// the partial transpose of the output carries exactly N-2 eigenvalues
/// pinned at 1/2: the modes symplectically decoupled from the squeezed pair
/// of the input sit on the PPT boundary by construction and would push
/// every separable-output trial into the exclusion band. With
/// discount_spectators set, the N-2 values closest to 1/2 are dropped and
/// the squeezed pair decides the margin.
SeparabilityVerdict output_oracle(const CovarianceMatrix& out, double tol,
                                  bool discount_spectators) {
    if (out.n_modes() == 2) {
        return two_mode_separable(out, tol);
    }
    const int last = out.n_modes() - 1;
    if (!discount_spectators) {
        return ppt_separable(out, last, tol);
    }
    std::vector<double> nus = symplectic_eigenvalues(partial_transpose(out, last));
    std::sort(nus.begin(), nus.end(), [](double a, double b) {
        return std::abs(0.5 - a) > std::abs(0.5 - b);
    });
    const double margin = 0.5 - std::min(nus[0], nus[1]);
    return {margin <= tol, margin, SeparabilityMethod::PPTForm};
}

}  // namespace

VerificationReport verify_proposition(const TrialConfig& cfg) {
    validate(cfg);
    VerificationReport report;
    report.campaign = "prop1";
    report.config = cfg;
    report.trials_run = cfg.n_trials;

    for (long i = 0; i < cfg.n_trials; ++i) {
        Rng rng = make_rng(trial_seed(cfg.seed, static_cast<std::uint64_t>(i)));
        const GaussianChannel ch = sample_channel(rng);
        const PureStateSpec spec =
            draw_pure_state_spec(rng, cfg.n_modes, cfg.r_min, cfg.r_max);
        const CovarianceMatrix input = pure_state(spec);
        const int mode_b = cfg.n_modes - 1;
        const CovarianceMatrix out = apply_one_sided(input, ch, mode_b);

        const double channel_margin = separability_margin(ch);
        const SeparabilityVerdict oracle = output_oracle(out, cfg.tol.separability, true);
        if (std::abs(channel_margin) <= cfg.boundary_exclusion ||
            std::abs(oracle.margin) <= cfg.boundary_exclusion) {
            ++report.trials_excluded_boundary;
            continue;
        }
        const bool predicted_separable = channel_margin > 0.0;
        ++report.counts[predicted_separable ? "predicted_separable"
                                            : "predicted_entangled"];
        if (predicted_separable != oracle.separable) {
            TrialRecord rec;
            rec.trial = i;
            rec.predicted = separability_name(predicted_separable);
            rec.oracle = separability_name(oracle.separable);
            rec.channel_margin = channel_margin;
            rec.state_margin = oracle.margin;
            rec.channel = {ch.f(), ch.g()};
            rec.state = spec;
            report.mismatches.push_back(std::move(rec));
        }
    }
    report.pass = report.mismatches.empty();
    return report;
}

VerificationReport verify_input_independence(const TrialConfig& cfg,
                                             int inputs_per_channel) {
    validate(cfg);
    VerificationReport report;
    report.campaign = "independence";
    report.config = cfg;
    report.trials_run = cfg.n_trials * inputs_per_channel;
    report.counts["channels"] = cfg.n_trials;
    report.counts["inputs_per_channel"] = inputs_per_channel;

    for (long c = 0; c < cfg.n_trials; ++c) {
        Rng rng = make_rng(trial_seed(cfg.seed, static_cast<std::uint64_t>(c)));
        // Fix a channel away from the classification boundary.
        GaussianChannel ch = sample_channel(rng);
        while (std::abs(separability_margin(ch)) <= cfg.boundary_exclusion) {
            ch = sample_channel(rng);
        }
        const double channel_margin = separability_margin(ch);
        const int mode_b = cfg.n_modes - 1;

        bool have_baseline = false;
        bool baseline = false;
        for (int j = 0; j < inputs_per_channel; ++j) {
            const PureStateSpec spec =
                draw_pure_state_spec(rng, cfg.n_modes, cfg.r_min, cfg.r_max);
            const CovarianceMatrix out =
                apply_one_sided(pure_state(spec), ch, mode_b);
            const SeparabilityVerdict oracle =
                output_oracle(out, cfg.tol.separability, true);
            if (std::abs(oracle.margin) <= cfg.boundary_exclusion) {
                ++report.trials_excluded_boundary;
                continue;
            }
            if (!have_baseline) {
                have_baseline = true;
                baseline = oracle.separable;
                continue;
            }
            if (oracle.separable != baseline) {
                TrialRecord rec;
                rec.trial = c * inputs_per_channel + j;
                rec.predicted = separability_name(baseline);
                rec.oracle = separability_name(oracle.separable);
                rec.channel_margin = channel_margin;
                rec.state_margin = oracle.margin;
                rec.channel = {ch.f(), ch.g()};
                rec.state = spec;
                report.mismatches.push_back(std::move(rec));
            }
        }
    }
    report.pass = report.mismatches.empty();
    return report;
}

VerificationReport verify_detf_zero(long n_trials, std::uint64_t seed) {
    TrialConfig cfg;
    cfg.n_trials = n_trials;
    cfg.seed = seed;
    validate(cfg);

    VerificationReport report;
    report.campaign = "detf0";
    report.config = cfg;
    report.trials_run = n_trials;

    for (long i = 0; i < n_trials; ++i) {
        Rng rng = make_rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
        const GaussianChannel ch = sample_rank_deficient_channel(rng);
        const PureStateSpec spec = draw_pure_state_spec(rng, 2, cfg.r_min, cfg.r_max);
        const CovarianceMatrix out =
            apply_one_sided(random_pure_two_mode(spec), ch, 1);
        const SeparabilityVerdict oracle =
            two_mode_separable(out, cfg.tol.separability);
        if (std::abs(oracle.margin) <= cfg.boundary_exclusion) {
            ++report.trials_excluded_boundary;
            continue;
        }
        ++report.counts[oracle.separable ? "separable_outputs" : "entangled_outputs"];
        if (!oracle.separable) {
            TrialRecord rec;
            rec.trial = i;
            rec.predicted = "separable";
            rec.oracle = "entangled";
            rec.channel_margin = separability_margin(ch);
            rec.state_margin = oracle.margin;
            rec.channel = {ch.f(), ch.g()};
            rec.state = spec;
            report.mismatches.push_back(std::move(rec));
        }
    }
    report.pass = report.mismatches.empty();
    return report;
}

namespace {

/// Mixture of physical and unphysical two-mode symmetric matrices.
CovarianceMatrix sample_two_mode_symmetric(Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> nu_dist(0.5, 2.5);
    std::uniform_real_distribution<double> r_dist(0.0, 1.5);
    std::uniform_real_distribution<double> entry(-1.0, 1.5);

    const auto thermal = [&](double nu1, double nu2) {
        Eigen::MatrixXd d = Eigen::MatrixXd::Zero(4, 4);
        d.diagonal() << nu1, nu1, nu2, nu2;
        return transform(random_symplectic(2, rng()), CovarianceMatrix(2, d));
    };

    switch (rng() % 5) {
        case 0:  // physical, generically mixed
            return thermal(nu_dist(rng), nu_dist(rng));
        case 1: {  // scaled pure entangled state; unphysical for scale < 1
            std::uniform_real_distribution<double> scale(0.55, 1.45);
            const CovarianceMatrix pure =
                transform(random_symplectic(2, rng()), tmss(r_dist(rng)));
            return CovarianceMatrix(2, scale(rng) * pure.mat());
        }
        case 2: {  // raw symmetric matrix with a diagonal shift
            Eigen::Matrix4d a;
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) a(r, c) = entry(rng);
            std::uniform_real_distribution<double> shift(-0.2, 1.2);
            return CovarianceMatrix(
                2, (0.5 * (a + a.transpose()) + shift(rng) * Eigen::Matrix4d::Identity())
                       .eval());
        }
        case 3: {  // physical minus vacuum-scale noise; crosses the boundary
            const CovarianceMatrix base = thermal(nu_dist(rng), nu_dist(rng));
            std::uniform_real_distribution<double> sub(0.0, 0.8);
            return CovarianceMatrix(
                2, (base.mat() - sub(rng) * Eigen::Matrix4d::Identity()).eval());
        }
        default: {  // hugs the physicality boundary from both sides
            std::uniform_real_distribution<double> near(0.5 - 0.02, 0.5 + 0.02);
            return thermal(near(rng), nu_dist(rng));
        }
    }
}

}  // namespace

VerificationReport crosscheck_physicality(long n_trials, std::uint64_t seed) {
    TrialConfig cfg;
    cfg.n_trials = n_trials;
    cfg.seed = seed;
    validate(cfg);

    VerificationReport report;
    report.campaign = "physicality";
    report.config = cfg;
    report.trials_run = n_trials;

    for (long i = 0; i < n_trials; ++i) {
        Rng rng = make_rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
        const CovarianceMatrix sigma = sample_two_mode_symmetric(rng);
        const double psd_margin = physicality_margin(sigma);
        const DeterminantPhysicality det =
            two_mode_physical_det_form(sigma, cfg.tol.physicality);
        const bool near_boundary =
            std::abs(psd_margin) <= cfg.boundary_exclusion ||
            (std::isfinite(det.nu_min_margin) &&
             std::abs(det.nu_min_margin) <= cfg.boundary_exclusion);
        if (near_boundary) {
            ++report.trials_excluded_boundary;
            continue;
        }
        const bool psd_physical = psd_margin >= -cfg.tol.physicality;
        ++report.counts[psd_physical ? "physical" : "unphysical"];
        if (psd_physical != det.physical) {
            TrialRecord rec;
            rec.trial = i;
            rec.predicted = det.physical ? "physical" : "unphysical";
            rec.oracle = psd_physical ? "physical" : "unphysical";
            rec.channel_margin = det.nu_min_margin;
            rec.state_margin = psd_margin;
            rec.matrix = sigma.mat();
            report.mismatches.push_back(std::move(rec));
        }
    }
    report.pass = report.mismatches.empty();
    return report;
}

VerificationReport explore_mixed_inputs(const TrialConfig& cfg) {
    validate(cfg);
    VerificationReport report;
    report.campaign = "mixed-exploratory";
    report.config = cfg;

    constexpr int kInputsPerChannel = 20;
    report.counts["channels"] = cfg.n_trials;
    report.counts["inputs_per_channel"] = kInputsPerChannel;
    long channels_mixed = 0;

    for (long c = 0; c < cfg.n_trials; ++c) {
        Rng rng = make_rng(trial_seed(cfg.seed, static_cast<std::uint64_t>(c)));
        GaussianChannel ch = sample_channel(rng);
        while (std::abs(separability_margin(ch)) <= cfg.boundary_exclusion) {
            ch = sample_channel(rng);
        }
        const int mode_b = cfg.n_modes - 1;
        std::uniform_real_distribution<double> noise_scale(0.0, 0.15);

        bool have_baseline = false;
        bool baseline = false;
        bool mixed = false;
        for (int j = 0; j < kInputsPerChannel; ++j) {
            const PureStateSpec spec =
                draw_pure_state_spec(rng, cfg.n_modes, cfg.r_min, cfg.r_max);
            CovarianceMatrix input = pure_state(spec);
            // Blur the pure input with random classical noise, keeping it
            // entangled across the channel-side bipartition.
            Eigen::MatrixXd l(input.dim(), input.dim());
            std::normal_distribution<double> gauss(0.0, 1.0);
            for (int r = 0; r < l.rows(); ++r)
                for (int k = 0; k < l.cols(); ++k) l(r, k) = gauss(rng);
            const Eigen::MatrixXd mixed_mat =
                input.mat() + noise_scale(rng) * (l * l.transpose()) / input.dim();
            input = CovarianceMatrix(input.n_modes(), mixed_mat);
            const SeparabilityVerdict in_verdict =
                input.n_modes() == 2
                    ? two_mode_separable(input, cfg.tol.separability)
                    : ppt_separable(input, mode_b, cfg.tol.separability);
            if (in_verdict.separable) {
                ++report.counts["inputs_skipped_separable"];
                continue;
            }
            ++report.trials_run;
            const CovarianceMatrix out = apply_one_sided(input, ch, mode_b);
            const SeparabilityVerdict oracle =
                output_oracle(out, cfg.tol.separability, false);
            if (std::abs(oracle.margin) <= cfg.boundary_exclusion) {
                ++report.trials_excluded_boundary;
                continue;
            }
            ++report.counts[oracle.separable ? "separable_outputs"
                                             : "entangled_outputs"];
            if (!have_baseline) {
                have_baseline = true;
                baseline = oracle.separable;
            } else if (oracle.separable != baseline) {
                mixed = true;
            }
        }
        if (mixed) ++channels_mixed;
    }
    report.counts["channels_mixed_outcomes"] = channels_mixed;
    report.pass = true;  // exploratory: observations only
    return report;
}

std::vector<SweepRow> sweep_entanglement_ratio(const GaussianChannel& ch,
                                               const std::vector<double>& r_grid) {
    std::vector<SweepRow> rows;
    rows.reserve(r_grid.size());
    for (double r : r_grid) {
        if (!(r > 0.0) || !std::isfinite(r)) {
            throw Error("sweep_entanglement_ratio: grid values must be > 0");
        }
        const CovarianceMatrix input = tmss(r);
        const double e_in = log_negativity(input, 1);
        const double e_out = log_negativity(apply_one_sided(input, ch, 1), 1);
        rows.push_back({r, e_in, e_out, e_in > 0.0 ? e_out / e_in : 0.0});
    }
    return rows;
}

}  // namespace covchan
