// Copyright 2026 The nohide Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nohide/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>
#include <unistd.h>

namespace nohide::report {

json matrix_json(const ComplexMatrix& m) {
    json re = json::array(), im = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row_re = json::array(), row_im = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row_re.push_back(m(r, c).real());
            row_im.push_back(m(r, c).imag());
        }
        re.push_back(std::move(row_re));
        im.push_back(std::move(row_im));
    }
    return {{"re", std::move(re)}, {"im", std::move(im)}};
}

json statevector_json(const StateVector& s) {
    json re = json::array(), im = json::array();
    for (Complex a : s.amplitudes()) {
        re.push_back(a.real());
        im.push_back(a.imag());
    }
    return {{"num_qubits", s.num_qubits()}, {"amplitudes_re", re}, {"amplitudes_im", im}};
}

json counts_json(const tomo::ShotCounts& c) {
    json counts = json::object();
    for (const auto& [bits, n] : c.counts) counts[bits] = n;
    return {{"basis", c.basis}, {"shots", c.shots}, {"counts", std::move(counts)}};
}

tomo::ShotCounts counts_from_json(const json& j) {
    tomo::ShotCounts c;
    c.basis = j.at("basis").get<std::string>();
    c.shots = j.at("shots").get<std::uint64_t>();
    for (const auto& [bits, n] : j.at("counts").items()) c.counts[bits] = n.get<std::uint64_t>();
    return c;
}

json tomography_json(const tomo::TomographyResult& r) {
    json m = matrix_json(r.physical.matrix());
    return {{"raw_min_eigenvalue", r.raw.min_eigenvalue},
            {"fidelity", r.fidelity},
            {"trace_distance", r.trace_distance},
            {"matrix_re", std::move(m["re"])},
            {"matrix_im", std::move(m["im"])}};
}

json perfect_json(const PerfectResult& r, RandomizerTag tag, tomo::Shots shots, std::uint64_t seed) {
    auto counts = [](const tomo::TomographyResult& t) {
        json a = json::array();
        for (const auto& c : t.counts) a.push_back(counts_json(c));
        return a;
    };
    json shots_j = shots ? json(*shots) : json("exact");
    return {{"variant", std::string(tag_name(tag))},
            {"shots", shots_j},
            {"seed", seed},
            {"bell_fidelity", r.bell_fidelity},
            {"transfer_fidelity", r.transfer_fidelity},
            {"bell", tomography_json(r.bell)},
            {"transfer", tomography_json(r.transfer)},
            {"bell_counts", counts(r.bell)},
            {"transfer_counts", counts(r.transfer)}};
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string sweep_csv(std::span<const ExperimentRecord> records) {
    std::string out(kSweepCsvHeader);
    out += '\n';
    for (const auto& r : records) {
        for (double v : {r.p, r.trace_distance_to_mixed, r.trace_distance_tomo, r.fidelity_to_mixed,
                         r.fidelity_tomo, r.fidelity_lower_bound}) {
            out += format_double(v);
            out += ',';
        }
        out += format_double(r.raw_min_eigenvalue);
        out += '\n';
    }
    return out;
}

json sweep_json(std::span<const ExperimentRecord> records) {
    json a = json::array();
    for (const auto& r : records) {
        a.push_back({{"p", r.p},
                     {"trace_distance_exact", r.trace_distance_to_mixed},
                     {"trace_distance_tomo", r.trace_distance_tomo},
                     {"fidelity_exact", r.fidelity_to_mixed},
                     {"fidelity_tomo", r.fidelity_tomo},
                     {"fidelity_bound", r.fidelity_lower_bound},
                     {"raw_min_eigenvalue", r.raw_min_eigenvalue}});
    }
    return a;
}

void write_atomic(const std::filesystem::path& path, std::string_view contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        f.flush();
        if (!f) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("write to " + tmp.string() + " failed");
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace nohide::report
