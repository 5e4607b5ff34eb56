// Copyright 2026 The stinekit developers
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

#ifndef STINEKIT_IO_HPP
#define STINEKIT_IO_HPP

#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "stinekit/channels.hpp"
#include "stinekit/diagnostics.hpp"
#include "stinekit/dilation.hpp"
#include "stinekit/gksl.hpp"

namespace stinekit {

using Json = nlohmann::ordered_json;

/// Malformed or out-of-contract input; the CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Matrices serialize as {"rows": r, "cols": c, "data": [[re, im], ...]} with
// row-major data; NaN or Inf entries are rejected on both read and write.
Json matrix_to_json(const Matrix &m);
Matrix matrix_from_json(const Json &j);

Json channel_to_json(const Channel &channel);
Channel channel_from_json(const Json &j);

Json choi_to_json(const Matrix &choi, std::size_t in_dim, std::size_t out_dim);

Json kraus_to_json(const KrausSet &kraus);
KrausSet kraus_from_json(const Json &j);

Json stinespring_to_json(const StinespringDilation &dilation);
StinespringDilation stinespring_from_json(const Json &j);

Json lindblad_to_json(const LindbladData &data);
LindbladData lindblad_from_json(const Json &j);

Json curve_to_json(const StinespringCurve &curve);
StinespringCurve curve_from_json(const Json &j, double tol = kDefaultTol);

/// Deterministic serialization: fixed key order (insertion order of the
/// builders above) and floats printed with 17 significant digits, so equal
/// documents are byte-identical.
std::string dump_canonical(const Json &j);

Json read_json_file(const std::string &path);
void write_json_file(const std::string &path, const Json &j);

/// CSV layout: header `t, re_00, im_00, ...` over the superoperator entries
/// in row-major order, one row per grid point, plus a trailing tp_residual
/// column with the trace-preservation defect.
void write_trace_csv(std::ostream &out, const CurveTrace &trace);

}  // namespace stinekit

#endif
