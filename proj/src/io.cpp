// Copyright 2026 The superpose Authors
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

#include "superpose/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "superpose/error.hpp"

namespace superpose::io {

namespace {

void dump_into(std::string &out, const Json &j, int indent, int depth) {
    const auto newline = [&](int d) {
        if (indent >= 0) {
            out += '\n';
            out.append(static_cast<std::size_t>(indent * d), ' ');
        }
    };
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) {
                    out += ',';
                }
                first = false;
                newline(depth + 1);
                out += Json(it.key()).dump();
                out += indent >= 0 ? ": " : ":";
                dump_into(out, it.value(), indent, depth + 1);
            }
            newline(depth);
            out += '}';
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Arrays of scalars stay on one line.
            const bool flat = std::all_of(j.begin(), j.end(), [](const Json &e) { return e.is_primitive(); });
            out += '[';
            bool first = true;
            for (const Json &e : j) {
                if (!first) {
                    out += flat && indent >= 0 ? ", " : ",";
                }
                first = false;
                if (!flat) {
                    newline(depth + 1);
                }
                dump_into(out, e, indent, depth + 1);
            }
            if (!flat) {
                newline(depth);
            }
            out += ']';
            return;
        }
        case Json::value_t::number_float: {
            const double v = j.get<double>();
            out += std::isfinite(v) ? format_double(v) : "null";
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

Json require(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw IoError(std::string("channel JSON: missing field \"") + key + "\"");
    }
    return j.at(key);
}

CMatrix kraus_from_json(const Json &rows) {
    if (!rows.is_array() || rows.size() != 2) {
        throw IoError("channel JSON: a Kraus operator must have 2 rows");
    }
    CMatrix m(2, 4);
    for (std::size_t r = 0; r < 2; ++r) {
        if (!rows[r].is_array() || rows[r].size() != 4) {
            throw IoError("channel JSON: a Kraus row must have 4 entries");
        }
        for (std::size_t c = 0; c < 4; ++c) {
            m(r, c) = complex_from_json(rows[r][c]);
        }
    }
    return m;
}

/// [[re,im] x4] x2 has depth 3; a list of operators has depth 4.
bool is_operator_list(const Json &k) {
    return k.is_array() && !k.empty() && k[0].is_array() && !k[0].empty() && k[0][0].is_array() &&
           !k[0][0].empty() && k[0][0][0].is_array();
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);  // no "-0"
    return buf;
}

std::string dump(const Json &j, int indent) {
    std::string out;
    dump_into(out, j, indent, 0);
    return out;
}

Json complex_to_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw IoError("complex numbers must be [re, im] arrays");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json circle_to_json(const SphereCircle &circ) {
    return Json{{"mu", circ.mu}, {"nu", circ.nu}, {"c", circ.c}};
}

Json trace_to_json(const ExtractionTrace &t) {
    return Json{{"lambda", t.lambda}, {"r1", t.r1}, {"r2", t.r2}, {"gamma", t.gamma},
                {"A", t.A},           {"B", t.B},   {"C", t.C},   {"D", t.D}};
}

Json extraction_to_json(const Extraction &e) {
    return Json{{"circle", circle_to_json(e.circle)}, {"trace", trace_to_json(e.trace)}};
}

Json fit_report_to_json(const FitReport &r) {
    Json j;
    j["theta"] = r.theta ? Json(*r.theta) : Json(nullptr);
    j["lambda"] = r.lambda ? Json(*r.lambda) : Json(nullptr);
    j["residual"] = r.residual_norm;
    j["success_prob"] = r.success_prob;
    return j;
}

Json fraction_to_json(const FractionEstimate &f, std::optional<double> expected) {
    Json j;
    j["fraction"] = f.fraction;
    j["ci95"] = Json::array({f.ci95_lo, f.ci95_hi});
    j["expected"] = expected ? Json(*expected) : Json(nullptr);
    j["hits"] = f.hits;
    j["samples"] = f.samples;
    return j;
}

Json point_to_json(const BlochPoint &p) {
    return Json::array({p.x, p.y, p.z});
}

Json channel_to_json(const SuperpositionChannel &ch) {
    Json kraus = Json::array();
    const CMatrix &m = ch.kraus.matrix();
    for (std::size_t r = 0; r < 2; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < 4; ++c) {
            row.push_back(complex_to_json(m(r, c)));
        }
        kraus.push_back(row);
    }
    Json j;
    j["kraus"] = kraus;
    j["alpha"] = complex_to_json(ch.spec.alpha());
    j["beta"] = complex_to_json(ch.spec.beta());
    j["lambda"] = ch.lambda;
    j["circle"] = circle_to_json(ch.circle);
    j["output_state"] = Json::array({complex_to_json(ch.output_state.a0()), complex_to_json(ch.output_state.a1())});
    return j;
}

ChannelFile channel_from_json(const Json &j) {
    try {
        const Json kraus = require(j, "kraus");
        std::vector<KrausOperator> ops;
        if (is_operator_list(kraus)) {
            for (const Json &op : kraus) {
                ops.emplace_back(kraus_from_json(op));
            }
        } else {
            ops.emplace_back(kraus_from_json(kraus));
        }
        ChannelFile file{CPMap(std::move(ops)),
                         SuperpositionSpec(complex_from_json(require(j, "alpha")), complex_from_json(require(j, "beta"))),
                         std::nullopt, std::nullopt, std::nullopt};
        if (j.contains("lambda") && !j["lambda"].is_null()) {
            file.lambda = j["lambda"].get<double>();
        }
        if (j.contains("circle") && !j["circle"].is_null()) {
            const Json &c = j["circle"];
            SphereCircle circ;
            circ.mu = require(c, "mu").get<double>();
            circ.nu = require(c, "nu").get<double>();
            circ.c = require(c, "c").get<double>();
            circ.canonical = in_canonical_form(circ);
            file.circle = circ;
        }
        if (j.contains("output_state") && !j["output_state"].is_null()) {
            const Json &s = j["output_state"];
            if (!s.is_array() || s.size() != 2) {
                throw IoError("channel JSON: output_state must hold two amplitudes");
            }
            file.output_state = PureQubit::normalized(complex_from_json(s[0]), complex_from_json(s[1]));
        }
        return file;
    } catch (const Json::exception &e) {
        throw IoError(std::string("channel JSON: ") + e.what());
    }
}

ChannelFile read_channel_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception &e) {
        throw IoError("malformed JSON in " + path + ": " + e.what());
    }
    return channel_from_json(j);
}

void write_text_file(const std::string &path, const std::string &contents) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path);
    }
    out << contents;
    if (!out) {
        throw IoError("write failed for " + path);
    }
}

void write_points_csv(std::ostream &os, std::span<const BlochPoint> points) {
    os << "X,Y,Z\n";
    for (const BlochPoint &p : points) {
        os << format_double(p.x) << ',' << format_double(p.y) << ',' << format_double(p.z) << '\n';
    }
}

}  // namespace superpose::io
