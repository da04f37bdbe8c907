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

#include "covchan/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace covchan {

namespace {

Json parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw FileFormatError("cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw FileFormatError(path.string() + ": " + e.what());
    }
}

double require_finite_number(const Json& v, const std::string& what) {
    if (!v.is_number()) {
        throw FileFormatError(what + " must be a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw FileFormatError(what + " must be finite");
    }
    return x;
}

std::vector<double> require_number_array(const Json& doc, const std::string& key,
                                         std::size_t expected) {
    if (!doc.contains(key) || !doc[key].is_array()) {
        throw FileFormatError("missing array field '" + key + "'");
    }
    const Json& arr = doc[key];
    if (arr.size() != expected) {
        throw FileFormatError("field '" + key + "' must hold " +
                              std::to_string(expected) + " numbers, got " +
                              std::to_string(arr.size()));
    }
    std::vector<double> out;
    out.reserve(expected);
    for (std::size_t i = 0; i < expected; ++i) {
        out.push_back(require_finite_number(arr[i], key + "[" + std::to_string(i) + "]"));
    }
    return out;
}

void require_schema_version(const Json& doc) {
    if (!doc.contains("schema_version") || !doc["schema_version"].is_string() ||
        doc["schema_version"].get<std::string>() != kSchemaVersion) {
        throw FileFormatError("unsupported or missing schema_version");
    }
}

Json matrix_to_array(const Eigen::MatrixXd& m) {
    Json arr = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            arr.push_back(m(r, c));
        }
    }
    return arr;
}

Eigen::Matrix2d array_to_matrix2(const std::vector<double>& v) {
    Eigen::Matrix2d m;
    m << v[0], v[1], v[2], v[3];
    return m;
}

}  // namespace

Json state_to_json(const CovarianceMatrix& cm) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["n_modes"] = cm.n_modes();
    doc["ordering"] = kQuadratureOrdering;
    doc["vacuum_variance"] = kVacuumVariance;
    doc["matrix"] = matrix_to_array(cm.mat());
    return doc;
}

CovarianceMatrix state_from_json(const Json& doc) {
    require_schema_version(doc);
    if (!doc.contains("n_modes") || !doc["n_modes"].is_number_integer()) {
        throw FileFormatError("missing integer field 'n_modes'");
    }
    const int n = doc["n_modes"].get<int>();
    if (n < 1) {
        throw FileFormatError("n_modes must be >= 1");
    }
    if (!doc.contains("ordering") || !doc["ordering"].is_string() ||
        doc["ordering"].get<std::string>() != kQuadratureOrdering) {
        throw FileFormatError("state file must declare ordering \"q1p1q2p2\"");
    }
    if (!doc.contains("vacuum_variance") ||
        require_finite_number(doc["vacuum_variance"], "vacuum_variance") !=
            kVacuumVariance) {
        throw FileFormatError("state file must declare vacuum_variance 0.5");
    }
    const int d = 2 * n;
    const std::vector<double> flat =
        require_number_array(doc, "matrix", static_cast<std::size_t>(d) * d);
    Eigen::MatrixXd m(d, d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            m(r, c) = flat[static_cast<std::size_t>(r) * d + c];
        }
    }
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-9) {
        throw FileFormatError("state matrix is not symmetric within 1e-9");
    }
    return CovarianceMatrix(n, std::move(m));
}

void save_state(const CovarianceMatrix& cm, const std::filesystem::path& path) {
    write_text_file(path, state_to_json(cm).dump(2) + "\n");
}

CovarianceMatrix load_state(const std::filesystem::path& path) {
    return state_from_json(parse_file(path));
}

Json channel_to_json(const GaussianChannel& ch) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["f"] = matrix_to_array(ch.f());
    doc["g"] = matrix_to_array(ch.g());
    return doc;
}

GaussianChannel channel_from_json(const Json& doc, bool allow_invalid) {
    require_schema_version(doc);
    const Eigen::Matrix2d f = array_to_matrix2(require_number_array(doc, "f", 4));
    const Eigen::Matrix2d g = array_to_matrix2(require_number_array(doc, "g", 4));
    return allow_invalid ? GaussianChannel::unchecked(f, g) : make_channel(f, g);
}

void save_channel(const GaussianChannel& ch, const std::filesystem::path& path) {
    write_text_file(path, channel_to_json(ch).dump(2) + "\n");
}

GaussianChannel load_channel(const std::filesystem::path& path, bool allow_invalid) {
    return channel_from_json(parse_file(path), allow_invalid);
}

Json spec_to_json(const PureStateSpec& spec) {
    Json doc;
    doc["n_modes"] = spec.n_modes;
    doc["squeeze_r"] = spec.squeeze_r;
    Json ops = Json::array();
    for (const EulerTriple& t : spec.local_ops) {
        ops.push_back(Json::array({t.theta, t.squeeze, t.phi}));
    }
    doc["local_ops"] = std::move(ops);
    doc["mixer_seed"] = spec.mixer_seed ? Json(*spec.mixer_seed) : Json(nullptr);
    return doc;
}

Json report_to_json(const VerificationReport& report) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["campaign"] = report.campaign;
    Json cfg;
    cfg["n_trials"] = report.config.n_trials;
    cfg["seed"] = report.config.seed;
    cfg["n_modes"] = report.config.n_modes;
    cfg["r_min"] = report.config.r_min;
    cfg["r_max"] = report.config.r_max;
    cfg["boundary_exclusion"] = report.config.boundary_exclusion;
    cfg["tolerances"] = Json{{"classify", report.config.tol.classify},
                             {"separability", report.config.tol.separability},
                             {"physicality", report.config.tol.physicality}};
    doc["config"] = std::move(cfg);
    doc["trials_run"] = report.trials_run;
    doc["trials_excluded_boundary"] = report.trials_excluded_boundary;
    Json mism = Json::array();
    for (const TrialRecord& rec : report.mismatches) {
        Json r;
        r["trial"] = rec.trial;
        r["predicted"] = rec.predicted;
        r["oracle"] = rec.oracle;
        r["channel_margin"] = rec.channel_margin;
        r["state_margin"] = rec.state_margin;
        if (rec.channel) {
            r["channel"] = Json{{"f", matrix_to_array(rec.channel->first)},
                                {"g", matrix_to_array(rec.channel->second)}};
        }
        if (rec.state) {
            r["state_spec"] = spec_to_json(*rec.state);
        }
        if (rec.matrix) {
            r["matrix"] = matrix_to_array(*rec.matrix);
        }
        mism.push_back(std::move(r));
    }
    doc["mismatches"] = std::move(mism);
    doc["pass"] = report.pass;
    Json counts;
    for (const auto& [key, value] : report.counts) {
        counts[key] = value;
    }
    doc["counts"] = std::move(counts);
    return doc;
}

std::string render_report(const VerificationReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

std::string format_significant(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
    return buf;
}

std::string render_sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "r,E_in,E_out,ratio\n";
    for (const SweepRow& row : rows) {
        out += format_significant(row.r) + "," + format_significant(row.e_in) +
               "," + format_significant(row.e_out) + "," +
               format_significant(row.ratio) + "\n";
    }
    return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw FileFormatError("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw FileFormatError("write failed for " + path.string());
    }
}

}  // namespace covchan
