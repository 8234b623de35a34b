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

#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "json.hpp"

#include "superpose/bloch.hpp"
#include "superpose/extract.hpp"
#include "superpose/measure.hpp"
#include "superpose/superposition.hpp"
#include "superpose/synthesize.hpp"

namespace superpose::io {

using Json = nlohmann::ordered_json;

/// Serializes with every floating-point number at 17 significant digits.
std::string dump(const Json &j, int indent = 2);

Json complex_to_json(Complex z);  ///< [re, im]
Complex complex_from_json(const Json &j);

Json circle_to_json(const SphereCircle &circ);
Json trace_to_json(const ExtractionTrace &t);
Json extraction_to_json(const Extraction &e);
Json fit_report_to_json(const FitReport &r);
Json fraction_to_json(const FractionEstimate &f, std::optional<double> expected);
Json point_to_json(const BlochPoint &p);

/// {"kraus": [[[re,im] x4] x2], "alpha", "beta", "lambda", "circle", "output_state"}
Json channel_to_json(const SuperpositionChannel &ch);

/// Channel file contents. "kraus" may hold one 2x4 matrix or a list of them;
/// "lambda", "circle" and "output_state" are optional.
struct ChannelFile {
    CPMap map;
    SuperpositionSpec spec;
    std::optional<double> lambda;
    std::optional<SphereCircle> circle;
    std::optional<PureQubit> output_state;
};

/// Throws IoError on malformed JSON or missing fields, DomainError when the
/// values violate an invariant (non-normalized weights, M^dagger M > I, ...).
ChannelFile channel_from_json(const Json &j);
ChannelFile read_channel_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &contents);

/// Header `X,Y,Z`, one point per row, 17 significant digits.
void write_points_csv(std::ostream &os, std::span<const BlochPoint> points);

/// printf("%.17g").
std::string format_double(double v);

}  // namespace superpose::io
