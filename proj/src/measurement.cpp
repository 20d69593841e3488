/**********
 *   Copyright 2026 The polcal Authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
\**********/
#include "polcal/measurement.hpp"

#include "polcal/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace polcal {

namespace {

/// 17 significant digits guarantee double round-trip; "." decimal, no locale.
std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& s, const std::string& context) {
    try {
        size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw SchemaError("bad numeric field '" + s + "' in " + context);
    }
}

constexpr const char* kCsvHeader =
    "label,s0_in,s1_in,s2_in,s3_in,s0_out,s1_out,s2_out,s3_out,sample_idx";

} // namespace

StokesVector mean_stokes(const std::vector<StokesVector>& samples) {
    if (samples.empty()) {
        throw DomainError("mean_stokes: no samples");
    }
    StokesVector acc;
    for (const auto& s : samples) acc = acc + s;
    return acc * (1.0 / static_cast<double>(samples.size()));
}

StokesStatistics stokes_statistics(const std::vector<StokesVector>& samples) {
    if (samples.size() < 2) {
        throw DomainError("stokes_statistics: need at least 2 samples, got " +
                          std::to_string(samples.size()));
    }
    StokesStatistics out;
    out.mean = mean_stokes(samples);
    const double n = static_cast<double>(samples.size());
    for (const auto& s : samples) {
        Eigen::Vector4d d(s.s0 - out.mean.s0, s.s1 - out.mean.s1, s.s2 - out.mean.s2,
                          s.s3 - out.mean.s3);
        out.covariance += d * d.transpose();
    }
    out.covariance /= (n - 1.0);
    return out;
}

MeasurementSet load_measurement_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw SchemaError("cannot open measurement file: " + path);
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw SchemaError("empty measurement file: " + path);
    }
    {
        // Tolerate trailing \r from foreign line endings.
        std::string hdr = line;
        if (!hdr.empty() && hdr.back() == '\r') hdr.pop_back();
        if (hdr != kCsvHeader) {
            throw SchemaError("unexpected CSV header in " + path + ": '" + hdr + "'");
        }
    }
    MeasurementSet set;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        auto f = split_csv_line(line);
        if (f.size() != 10) {
            throw SchemaError("expected 10 fields on line " + std::to_string(lineno) + " of " +
                              path + ", got " + std::to_string(f.size()));
        }
        const std::string ctx = path + ":" + std::to_string(lineno);
        StokesVector s_in{parse_double(f[1], ctx), parse_double(f[2], ctx),
                          parse_double(f[3], ctx), parse_double(f[4], ctx)};
        StokesVector s_out{parse_double(f[5], ctx), parse_double(f[6], ctx),
                           parse_double(f[7], ctx), parse_double(f[8], ctx)};
        MeasurementRecord* rec = nullptr;
        for (auto& r : set.records) {
            if (r.label == f[0]) {
                rec = &r;
                break;
            }
        }
        if (!rec) {
            set.records.push_back({f[0], s_in, {}});
            rec = &set.records.back();
        } else {
            for (int i = 0; i < 4; ++i) {
                double scale = std::max(1.0, std::abs(rec->s_in[i]));
                if (std::abs(rec->s_in[i] - s_in[i]) > 1e-9 * scale) {
                    throw SchemaError("inconsistent s_in for label '" + f[0] + "' at " + ctx);
                }
            }
        }
        rec->samples_out.push_back(s_out);
    }
    if (set.records.empty()) {
        throw SchemaError("no measurement rows in " + path);
    }
    return set;
}

void write_measurement_csv(std::ostream& os, const MeasurementSet& set) {
    os << kCsvHeader << "\n";
    for (const auto& rec : set.records) {
        for (size_t i = 0; i < rec.samples_out.size(); ++i) {
            const auto& o = rec.samples_out[i];
            os << rec.label << ',' << fmt_double(rec.s_in.s0) << ',' << fmt_double(rec.s_in.s1)
               << ',' << fmt_double(rec.s_in.s2) << ',' << fmt_double(rec.s_in.s3) << ','
               << fmt_double(o.s0) << ',' << fmt_double(o.s1) << ',' << fmt_double(o.s2) << ','
               << fmt_double(o.s3) << ',' << i << "\n";
        }
    }
}

void save_measurement_csv(const std::string& path, const MeasurementSet& set) {
    std::ofstream out(path);
    if (!out) {
        throw SchemaError("cannot write measurement file: " + path);
    }
    write_measurement_csv(out, set);
}

namespace {

nlohmann::json stokes_to_json(const StokesVector& s) {
    return nlohmann::json::array({s.s0, s.s1, s.s2, s.s3});
}

StokesVector stokes_from_json(const nlohmann::json& j, const std::string& ctx) {
    if (!j.is_array() || j.size() != 4) {
        throw SchemaError("expected a 4-element Stokes array in " + ctx);
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

} // namespace

MeasurementSet load_measurement_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw SchemaError("cannot open measurement file: " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("invalid JSON in " + path + ": " + e.what());
    }
    MeasurementSet set;
    set.wavelength = j.value("wavelength", 0.0);
    set.fiber_length = j.value("fiber_length", 0.0);
    if (!j.contains("records") || !j["records"].is_array()) {
        throw SchemaError("missing 'records' array in " + path);
    }
    for (const auto& rj : j["records"]) {
        MeasurementRecord rec;
        rec.label = rj.value("label", "");
        rec.s_in = stokes_from_json(rj.at("s_in"), path);
        for (const auto& sj : rj.at("samples_out")) {
            rec.samples_out.push_back(stokes_from_json(sj, path));
        }
        if (rec.samples_out.empty()) {
            throw SchemaError("record '" + rec.label + "' has no samples in " + path);
        }
        set.records.push_back(std::move(rec));
    }
    if (set.records.empty()) {
        throw SchemaError("no records in " + path);
    }
    return set;
}

void save_measurement_json(const std::string& path, const MeasurementSet& set) {
    nlohmann::json j;
    j["wavelength"] = set.wavelength;
    j["fiber_length"] = set.fiber_length;
    j["records"] = nlohmann::json::array();
    for (const auto& rec : set.records) {
        nlohmann::json rj;
        rj["label"] = rec.label;
        rj["s_in"] = stokes_to_json(rec.s_in);
        rj["samples_out"] = nlohmann::json::array();
        for (const auto& s : rec.samples_out) rj["samples_out"].push_back(stokes_to_json(s));
        j["records"].push_back(std::move(rj));
    }
    std::ofstream out(path);
    if (!out) {
        throw SchemaError("cannot write measurement file: " + path);
    }
    out << j.dump(2) << "\n";
}

MeasurementSet load_measurement_file(const std::string& path) {
    auto dot = path.find_last_of('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    if (ext == ".json") return load_measurement_json(path);
    if (ext == ".csv") return load_measurement_csv(path);
    throw SchemaError("unknown measurement file extension (want .csv or .json): " + path);
}

} // namespace polcal
