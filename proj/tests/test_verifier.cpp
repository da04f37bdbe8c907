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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "covchan/io.hpp"
#include "covchan/verifier.hpp"

using namespace covchan;

TEST_SUITE("verify_proposition") {
    TEST_CASE("two-mode campaign finds no counterexamples") {
        TrialConfig cfg;
        cfg.n_trials = 1500;
        cfg.seed = 5;
        const VerificationReport rep = verify_proposition(cfg);
        CHECK(rep.pass);
        CHECK(rep.mismatches.empty());
        CHECK(rep.trials_run == 1500);
        CHECK(rep.trials_excluded_boundary < 75);
        CHECK(rep.counts.at("predicted_separable") > 100);
        CHECK(rep.counts.at("predicted_entangled") > 100);
    }

    TEST_CASE("three-mode campaign judges both outcome classes") {
        TrialConfig cfg;
        cfg.n_trials = 400;
        cfg.seed = 6;
        cfg.n_modes = 3;
        const VerificationReport rep = verify_proposition(cfg);
        CHECK(rep.pass);
        CHECK(rep.counts.at("predicted_separable") > 40);
        CHECK(rep.counts.at("predicted_entangled") > 40);
    }

    TEST_CASE("identical configs give byte-identical reports") {
        TrialConfig cfg;
        cfg.n_trials = 500;
        cfg.seed = 7;
        const std::string first = render_report(verify_proposition(cfg));
        CHECK(first == render_report(verify_proposition(cfg)));
        cfg.seed = 8;
        CHECK(first != render_report(verify_proposition(cfg)));
    }

    TEST_CASE("preserving channels keep every sampled input entangled") {
        Rng rng = make_rng(906);
        int channels = 0;
        while (channels < 40) {
            const GaussianChannel ch = sample_channel(rng);
            if (separability_margin(ch) >= -1e-6) continue;
            ++channels;
            for (double r : {0.1, 0.5, 1.0, 2.0}) {
                PureStateSpec spec = draw_pure_state_spec(rng, 2, r, r);
                const CovarianceMatrix out =
                    apply_one_sided(random_pure_two_mode(spec), ch, 1);
                CHECK_FALSE(two_mode_separable(out).separable);
            }
        }
    }

    TEST_CASE("disentangling channels separate every sampled input") {
        Rng rng = make_rng(907);
        int channels = 0;
        while (channels < 40) {
            const GaussianChannel ch = sample_channel(rng);
            if (separability_margin(ch) <= 1e-6) continue;
            ++channels;
            for (double r : {0.1, 0.5, 1.0, 2.0}) {
                PureStateSpec spec = draw_pure_state_spec(rng, 2, r, r);
                const CovarianceMatrix out =
                    apply_one_sided(random_pure_two_mode(spec), ch, 1);
                CHECK(two_mode_separable(out).separable);
            }
        }
    }

    TEST_CASE("channel margin sign mirrors the output-state margin sign") {
        // The reduction of the output-state criterion to the channel
        // criterion flips orientation: positive channel margin (separable)
        // pairs with a non-positive state margin and vice versa.
        long checked = 0;
        for (long i = 0; i < 3000; ++i) {
            Rng rng = make_rng(trial_seed(99, i));
            const GaussianChannel ch = sample_channel(rng);
            if (std::abs(ch.det_f()) <= 1e-6) continue;
            const PureStateSpec spec = draw_pure_state_spec(rng, 2, 0.1, 2.0);
            const CovarianceMatrix out =
                apply_one_sided(random_pure_two_mode(spec), ch, 1);
            const double state_margin = two_mode_separable(out).margin;
            const double channel_margin = separability_margin(ch);
            if (std::abs(channel_margin) <= 1e-9 || std::abs(state_margin) <= 1e-9)
                continue;
            ++checked;
            CHECK((channel_margin > 0.0) == (state_margin < 0.0));
        }
        CHECK(checked > 2900);
    }
}

TEST_SUITE("trial config validation") {
    TEST_CASE("rejects degenerate configs") {
        TrialConfig cfg;
        cfg.n_trials = 0;
        CHECK_THROWS_AS(verify_proposition(cfg), Error);
        cfg.n_trials = 10;
        cfg.r_min = 0.0;
        CHECK_THROWS_AS(verify_proposition(cfg), Error);
        cfg.r_min = 0.5;
        cfg.r_max = 0.2;
        CHECK_THROWS_AS(verify_proposition(cfg), Error);
        CHECK_THROWS_AS(verify_detf_zero(0, 1), Error);
    }
}

TEST_SUITE("verify_input_independence") {
    TEST_CASE("verdicts are constant per channel") {
        TrialConfig cfg;
        cfg.n_trials = 30;  // channels
        cfg.seed = 17;
        const VerificationReport rep = verify_input_independence(cfg, 30);
        CHECK(rep.pass);
        CHECK(rep.mismatches.empty());
        CHECK(rep.counts.at("channels") == 30);
    }

    TEST_CASE("holds for four-mode inputs too") {
        TrialConfig cfg;
        cfg.n_trials = 15;
        cfg.seed = 18;
        cfg.n_modes = 4;
        CHECK(verify_input_independence(cfg, 15).pass);
    }
}

TEST_SUITE("verify_detf_zero") {
    TEST_CASE("erasure output of a squeezed state is separable") {
        const CovarianceMatrix out =
            apply_one_sided(tmss(2.0), erase_to_vacuum(), 1);
        CHECK(two_mode_separable(out).separable);
    }

    TEST_CASE("quantum-limited rank-one channel outputs are separable") {
        Eigen::Matrix2d f = Eigen::Matrix2d::Zero();
        f(0, 0) = 1.0;
        const GaussianChannel ch =
            make_channel(f, 0.5 * Eigen::Matrix2d::Identity());
        for (double r : {0.2, 0.7, 1.3, 2.0}) {
            const SeparabilityVerdict v =
                two_mode_separable(apply_one_sided(tmss(r), ch, 1));
            CHECK(v.separable);
            CHECK(std::abs(v.margin) <= 1e-9);  // sits on the bound
        }
    }

    TEST_CASE("randomized campaign sees only separable outputs") {
        const VerificationReport rep = verify_detf_zero(400, 21);
        CHECK(rep.pass);
        CHECK(rep.counts.at("separable_outputs") +
                  rep.trials_excluded_boundary ==
              400);
        CHECK(rep.counts.count("entangled_outputs") == 0);
    }

    TEST_CASE("is deterministic in the seed") {
        CHECK(render_report(verify_detf_zero(150, 3)) ==
              render_report(verify_detf_zero(150, 3)));
    }
}

TEST_SUITE("crosscheck_physicality") {
    TEST_CASE("determinant and PSD routes agree across the mixture") {
        const VerificationReport rep = crosscheck_physicality(4000, 31);
        CHECK(rep.pass);
        CHECK(rep.mismatches.empty());
        CHECK(rep.counts.at("physical") > 800);
        CHECK(rep.counts.at("unphysical") > 800);
    }

    TEST_CASE("is deterministic in the seed") {
        CHECK(render_report(crosscheck_physicality(300, 41)) ==
              render_report(crosscheck_physicality(300, 41)));
    }
}

TEST_SUITE("explore_mixed_inputs") {
    TEST_CASE("reports observations without asserting") {
        TrialConfig cfg;
        cfg.n_trials = 40;
        cfg.seed = 23;
        const VerificationReport rep = explore_mixed_inputs(cfg);
        CHECK(rep.pass);  // exploratory campaigns never fail
        CHECK(rep.campaign == "mixed-exploratory");
        CHECK(rep.counts.at("channels") == 40);
        // mixed inputs genuinely break input-independence for some channels,
        // which is exactly what this campaign is for
        CHECK(rep.counts.count("channels_mixed_outcomes") == 1);
    }
}

TEST_SUITE("sweep_entanglement_ratio") {
    TEST_CASE("identity channel has unit ratio") {
        const GaussianChannel id =
            make_channel(Eigen::Matrix2d::Identity(), Eigen::Matrix2d::Zero());
        for (const SweepRow& row : sweep_entanglement_ratio(id, {0.5, 1.0})) {
            CHECK(row.ratio == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(row.e_in == doctest::Approx(2.0 * row.r).epsilon(1e-9));
        }
    }

    TEST_CASE("lossy channel ratio varies across the grid") {
        std::vector<double> grid;
        for (double r = 0.2; r <= 2.0001; r += 0.2) grid.push_back(r);
        const auto rows = sweep_entanglement_ratio(pure_loss(0.5), grid);
        double lo = rows.front().ratio;
        double hi = rows.front().ratio;
        for (const SweepRow& row : rows) {
            lo = std::min(lo, row.ratio);
            hi = std::max(hi, row.ratio);
            CHECK(row.e_out < row.e_in);  // loss never creates entanglement
            CHECK(row.e_out > 0.0);       // but a preserving channel keeps some
        }
        CHECK(hi - lo > 0.01);
    }

    TEST_CASE("input and output entanglement vanish together") {
        const auto rows = sweep_entanglement_ratio(pure_loss(0.5), {0.01, 0.02});
        for (const SweepRow& row : rows) {
            CHECK(row.e_in <= 0.05);
            CHECK(row.e_out <= row.e_in);
            CHECK(row.e_out > 0.0);
        }
    }

    TEST_CASE("disentangling channels zero the output column") {
        const auto rows =
            sweep_entanglement_ratio(classical_noise(2.0), {0.5, 1.0, 2.0});
        for (const SweepRow& row : rows) {
            CHECK(row.e_out == 0.0);
            CHECK(row.ratio == 0.0);
            CHECK(row.e_in > 0.0);
        }
    }

    TEST_CASE("rejects non-positive grid points") {
        CHECK_THROWS_AS(sweep_entanglement_ratio(pure_loss(0.5), {0.5, 0.0}),
                        Error);
    }
}
