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

// covchan: covariance-level Gaussian states and one-sided Gaussian channels.
//
// Exit codes form a stable contract:
//   classify: 0 Preserving, 2 Disentangling, 3 Boundary
//   verify:   0 pass, 1 fail
//   errors:   64 usage, 65 malformed file, 66 invalid channel,
//             67 mode index out of range

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "covchan/io.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitBadFile = 65;
constexpr int kExitBadChannel = 66;
constexpr int kExitBadMode = 67;

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            grid.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw covchan::Error("cannot parse r-grid entry '" + item + "'");
        }
    }
    if (grid.empty()) {
        throw covchan::Error("r-grid is empty");
    }
    return grid;
}

covchan::Json channel_record(const covchan::GaussianChannel& ch,
                             const covchan::ChannelVerdict& verdict) {
    covchan::Json rec;
    rec["kind"] = covchan::to_string(verdict.kind);
    rec["margin"] = verdict.margin;
    rec["det_f"] = ch.det_f();
    rec["det_g"] = ch.det_g();
    rec["physicality_margin"] = ch.physicality_margin();
    return rec;
}

covchan::Json state_record(const covchan::CovarianceMatrix& cm, int mode) {
    using namespace covchan;
    Json rec;
    rec["n_modes"] = cm.n_modes();
    const double psd = physicality_margin(cm);
    const bool physical = psd >= -1e-9;
    rec["physical"] = physical;
    rec["physicality_margin_psd"] = psd;
    if (cm.n_modes() == 2) {
        const DeterminantPhysicality det = two_mode_physical_det_form(cm);
        rec["physical_det_form"] = det.physical;
        rec["rs_margin_det_form"] = det.rs_margin;
    }
    if (!physical) {
        rec["separable"] = nullptr;  // not evaluated for unphysical input
        return rec;
    }
    if (cm.n_modes() == 2) {
        const SeparabilityVerdict v = two_mode_separable(cm);
        rec["separable"] = v.separable;
        rec["separability_margin"] = v.margin;
        rec["separability_method"] = to_string(v.method);
        rec["log_negativity"] = log_negativity(cm, 1);
    } else if (mode >= 0) {
        const SeparabilityVerdict v = ppt_separable(cm, mode);
        rec["separable"] = v.separable;
        rec["separability_margin"] = v.margin;
        rec["separability_method"] = to_string(v.method);
        rec["log_negativity"] = log_negativity(cm, mode);
        rec["bipartition_mode"] = mode;
    }
    return rec;
}

void print(const covchan::Json& doc) { std::cout << doc.dump(2) << "\n"; }

int run(int argc, char** argv) {
    using namespace covchan;

    CLI::App app{"covariance-level toolkit for Gaussian states and one-sided "
                 "Gaussian channels"};
    app.require_subcommand(1);

    // classify
    std::string classify_channel_path;
    bool classify_allow_invalid = false;
    CLI::App* classify_cmd = app.add_subcommand(
        "classify", "classify a channel as disentangling or preserving");
    classify_cmd->add_option("channel", classify_channel_path, "channel file")
        ->required();
    classify_cmd->add_flag("--allow-invalid", classify_allow_invalid,
                           "inspect an unphysical (f, g) pair without "
                           "validation; never used to evolve states");

    // evolve
    std::string evolve_state_path;
    std::string evolve_channel_path;
    int evolve_mode = 0;
    std::string evolve_out_path;
    CLI::App* evolve_cmd =
        app.add_subcommand("evolve", "apply a channel to one mode of a state");
    evolve_cmd->add_option("state", evolve_state_path, "input state file")
        ->required();
    evolve_cmd->add_option("channel", evolve_channel_path, "channel file")
        ->required();
    evolve_cmd->add_option("mode", evolve_mode, "mode index the channel acts on")
        ->required();
    evolve_cmd->add_option("output", evolve_out_path, "output state file")
        ->required();

    // check
    std::string check_state_path;
    int check_mode = -1;
    CLI::App* check_cmd = app.add_subcommand(
        "check", "physicality/separability verdicts for a state file");
    check_cmd->add_option("state", check_state_path, "state file")->required();
    check_cmd->add_option("mode", check_mode,
                          "mode index for the PPT bipartition (N > 2)");

    // verify
    std::string verify_campaign = "prop1";
    long verify_trials = 10000;
    std::uint64_t verify_seed = 0;
    int verify_modes = 2;
    double verify_r_min = 0.1;
    double verify_r_max = 2.0;
    int verify_inputs_per_channel = 100;
    std::string verify_out_path;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "randomized criterion-vs-oracle verification campaigns");
    verify_cmd
        ->add_option("--campaign", verify_campaign,
                     "prop1 | detf0 | physicality | independence | "
                     "mixed-exploratory")
        ->check(CLI::IsMember({"prop1", "detf0", "physicality", "independence",
                               "mixed-exploratory"}));
    verify_cmd->add_option("--trials", verify_trials, "number of trials")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", verify_seed, "campaign seed");
    verify_cmd->add_option("--modes", verify_modes, "input mode count (2..6)")
        ->check(CLI::Range(2, 6));
    verify_cmd->add_option("--r-min", verify_r_min, "squeeze range lower end");
    verify_cmd->add_option("--r-max", verify_r_max, "squeeze range upper end");
    verify_cmd->add_option("--inputs-per-channel", verify_inputs_per_channel,
                           "inputs per channel (independence campaign)");
    verify_cmd->add_option("--out", verify_out_path, "write the report here too");

    // sweep
    std::string sweep_channel_path;
    std::string sweep_out_path;
    std::string sweep_grid = "0.2,0.4,0.6,0.8,1.0,1.2,1.4,1.6,1.8,2.0";
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "input/output log-negativity of tmss(r) through a channel");
    sweep_cmd->add_option("channel", sweep_channel_path, "channel file")
        ->required();
    sweep_cmd->add_option("output", sweep_out_path, "output CSV file")->required();
    sweep_cmd->add_option("--r-grid", sweep_grid, "comma-separated squeeze grid");

    // gen-state
    double gen_tmss_r = -1.0;
    int gen_vacuum_n = 0;
    std::string gen_state_out;
    CLI::App* gen_state_cmd =
        app.add_subcommand("gen-state", "write a named state file");
    CLI::Option* tmss_opt =
        gen_state_cmd->add_option("--tmss", gen_tmss_r, "two-mode squeezed state");
    CLI::Option* vac_opt =
        gen_state_cmd->add_option("--vacuum", gen_vacuum_n, "n-mode vacuum");
    gen_state_cmd->add_option("output", gen_state_out, "state file")->required();
    tmss_opt->excludes(vac_opt);

    // gen-channel
    double gen_loss = -1.0;
    double gen_amp = -1.0;
    double gen_noise = -1.0;
    double gen_conj = -1.0;
    bool gen_erase = false;
    std::vector<double> gen_f;
    std::vector<double> gen_g;
    std::string gen_channel_out;
    CLI::App* gen_channel_cmd =
        app.add_subcommand("gen-channel", "write a named channel file");
    gen_channel_cmd->add_option("--pure-loss", gen_loss, "transmissivity in [0,1]");
    gen_channel_cmd->add_option("--amplifier", gen_amp, "gain >= 1");
    gen_channel_cmd->add_option("--classical-noise", gen_noise, "variance >= 0");
    gen_channel_cmd->add_option("--phase-conjugate", gen_conj, "gain >= 1");
    gen_channel_cmd->add_flag("--erase", gen_erase, "erase to vacuum");
    gen_channel_cmd->add_option("--f", gen_f, "row-major f entries")
        ->expected(4);
    gen_channel_cmd->add_option("--g", gen_g, "row-major g entries")
        ->expected(4);
    gen_channel_cmd->add_option("output", gen_channel_out, "channel file")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "covchan: " << e.what() << "\n";
        return kExitUsage;
    }

    if (classify_cmd->parsed()) {
        const GaussianChannel ch =
            load_channel(classify_channel_path, classify_allow_invalid);
        const ChannelVerdict verdict = classify(ch);
        Json rec = channel_record(ch, verdict);
        if (classify_allow_invalid) {
            rec["validated"] = false;
        }
        print(rec);
        switch (verdict.kind) {
            case ChannelKind::Preserving: return 0;
            case ChannelKind::Disentangling: return 2;
            case ChannelKind::Boundary: return 3;
        }
    }

    if (evolve_cmd->parsed()) {
        const CovarianceMatrix cm = load_state(evolve_state_path);
        const GaussianChannel ch = load_channel(evolve_channel_path);
        const CovarianceMatrix out = apply_one_sided(cm, ch, evolve_mode);
        save_state(out, evolve_out_path);
        print(state_record(out, evolve_mode));
        return 0;
    }

    if (check_cmd->parsed()) {
        const CovarianceMatrix cm = load_state(check_state_path);
        if (check_mode >= cm.n_modes()) {
            throw ModeIndexError("check: mode index out of range");
        }
        print(state_record(cm, check_mode));
        return 0;
    }

    if (verify_cmd->parsed()) {
        TrialConfig cfg;
        cfg.n_trials = verify_trials;
        cfg.seed = verify_seed;
        cfg.n_modes = verify_modes;
        cfg.r_min = verify_r_min;
        cfg.r_max = verify_r_max;
        VerificationReport report;
        if (verify_campaign == "prop1") {
            report = verify_proposition(cfg);
        } else if (verify_campaign == "detf0") {
            report = verify_detf_zero(cfg.n_trials, cfg.seed);
        } else if (verify_campaign == "physicality") {
            report = crosscheck_physicality(cfg.n_trials, cfg.seed);
        } else if (verify_campaign == "independence") {
            report = verify_input_independence(cfg, verify_inputs_per_channel);
        } else {
            report = explore_mixed_inputs(cfg);
        }
        const std::string text = render_report(report);
        std::cout << text;
        if (!verify_out_path.empty()) {
            write_text_file(verify_out_path, text);
        }
        return report.pass ? 0 : 1;
    }

    if (sweep_cmd->parsed()) {
        const GaussianChannel ch = load_channel(sweep_channel_path);
        if (classify(ch).kind == ChannelKind::Disentangling) {
            std::cerr << "covchan: warning: disentangling channel, output "
                         "entanglement column degenerates to zeros\n";
        }
        const auto rows = sweep_entanglement_ratio(ch, parse_grid(sweep_grid));
        write_text_file(sweep_out_path, render_sweep_csv(rows));
        return 0;
    }

    if (gen_state_cmd->parsed()) {
        if (gen_tmss_r >= 0.0) {
            save_state(tmss(gen_tmss_r), gen_state_out);
        } else if (gen_vacuum_n >= 1) {
            save_state(vacuum(gen_vacuum_n), gen_state_out);
        } else {
            std::cerr << "covchan: gen-state needs --tmss R or --vacuum N\n";
            return kExitUsage;
        }
        return 0;
    }

    if (gen_channel_cmd->parsed()) {
        GaussianChannel ch = erase_to_vacuum();
        if (gen_loss >= 0.0) {
            ch = pure_loss(gen_loss);
        } else if (gen_amp >= 0.0) {
            ch = amplifier(gen_amp);
        } else if (gen_noise >= 0.0) {
            ch = classical_noise(gen_noise);
        } else if (gen_conj >= 0.0) {
            ch = phase_conjugate(gen_conj);
        } else if (!gen_f.empty() || !gen_g.empty()) {
            if (gen_f.size() != 4 || gen_g.size() != 4) {
                std::cerr << "covchan: --f and --g need 4 entries each\n";
                return kExitUsage;
            }
            Eigen::Matrix2d f;
            Eigen::Matrix2d g;
            f << gen_f[0], gen_f[1], gen_f[2], gen_f[3];
            g << gen_g[0], gen_g[1], gen_g[2], gen_g[3];
            ch = make_channel(f, g);
        } else if (!gen_erase) {
            std::cerr << "covchan: gen-channel needs a family flag\n";
            return kExitUsage;
        }
        save_channel(ch, gen_channel_out);
        return 0;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const covchan::FileFormatError& e) {
        std::cerr << "covchan: " << e.what() << "\n";
        return kExitBadFile;
    } catch (const covchan::AsymmetricNoiseError& e) {
        std::cerr << "covchan: " << e.what() << "\n";
        return kExitBadChannel;
    } catch (const covchan::NotAChannelError& e) {
        std::cerr << "covchan: " << e.what() << "\n";
        return kExitBadChannel;
    } catch (const covchan::ModeIndexError& e) {
        std::cerr << "covchan: " << e.what() << "\n";
        return kExitBadMode;
    } catch (const covchan::Error& e) {
        std::cerr << "covchan: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "covchan: " << e.what() << "\n";
        return 1;
    }
}
