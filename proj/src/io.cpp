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

#include "stinekit/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace stinekit {

namespace {

void require(bool condition, const std::string &message) {
    if (!condition) {
        throw ValidationError(message);
    }
}

double finite_number(const Json &j, const std::string &context) {
    require(j.is_number(), context + ": expected a number");
    const double value = j.get<double>();
    require(std::isfinite(value), context + ": non-finite value");
    return value;
}

std::size_t positive_integer(const Json &j, const std::string &context) {
    require(j.is_number_integer() && j.get<long long>() > 0, context + ": expected a positive integer");
    return static_cast<std::size_t>(j.get<long long>());
}

const Json &member(const Json &j, const char *key) {
    require(j.is_object() && j.contains(key), std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void dump_value(const Json &j, std::string &out) {
    switch (j.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) {
                    out += ',';
                }
                first = false;
                out += Json(it.key()).dump();
                out += ':';
                dump_value(it.value(), out);
            }
            out += '}';
            break;
        }
        case Json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto &item : j) {
                if (!first) {
                    out += ',';
                }
                first = false;
                dump_value(item, out);
            }
            out += ']';
            break;
        }
        case Json::value_t::number_float: {
            const double value = j.get<double>();
            require(std::isfinite(value), "dump_canonical: non-finite number");
            out += format_double(value);
            break;
        }
        default:
            out += j.dump();
            break;
    }
}

}  // namespace

Json matrix_to_json(const Matrix &m) {
    require(m.rows() > 0 && m.cols() > 0, "matrix_to_json: empty matrix");
    Json data = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const complex x = m(r, c);
            require(std::isfinite(x.real()) && std::isfinite(x.imag()),
                    "matrix_to_json: non-finite entry");
            data.push_back(Json::array({x.real(), x.imag()}));
        }
    }
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["data"] = std::move(data);
    return j;
}

Matrix matrix_from_json(const Json &j) {
    const std::size_t rows = positive_integer(member(j, "rows"), "matrix rows");
    const std::size_t cols = positive_integer(member(j, "cols"), "matrix cols");
    const Json &data = member(j, "data");
    require(data.is_array() && data.size() == rows * cols,
            "matrix data length does not equal rows*cols");
    Matrix m(rows, cols);
    std::size_t idx = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c, ++idx) {
            const Json &entry = data[idx];
            require(entry.is_array() && entry.size() == 2, "matrix entry is not a [re, im] pair");
            m(r, c) = complex(finite_number(entry[0], "matrix entry"),
                              finite_number(entry[1], "matrix entry"));
        }
    }
    return m;
}

Json channel_to_json(const Channel &channel) {
    Json j;
    j["type"] = "channel";
    j["in_dim"] = channel.in_dim();
    j["out_dim"] = channel.out_dim();
    j["superop"] = matrix_to_json(channel.superop());
    return j;
}

Channel channel_from_json(const Json &j) {
    require(member(j, "type") == "channel", "expected a channel document");
    const std::size_t n = positive_integer(member(j, "in_dim"), "channel in_dim");
    const std::size_t m = positive_integer(member(j, "out_dim"), "channel out_dim");
    Matrix superop = matrix_from_json(member(j, "superop"));
    require(superop.rows() == m * m && superop.cols() == n * n,
            "channel superoperator shape inconsistent with dimensions");
    return Channel(n, m, std::move(superop));
}

Json choi_to_json(const Matrix &choi, std::size_t in_dim, std::size_t out_dim) {
    Json j;
    j["type"] = "choi";
    j["in_dim"] = in_dim;
    j["out_dim"] = out_dim;
    j["matrix"] = matrix_to_json(choi);
    return j;
}

Json kraus_to_json(const KrausSet &kraus) {
    Json ops = Json::array();
    for (const Matrix &k : kraus.operators) {
        ops.push_back(matrix_to_json(k));
    }
    Json j;
    j["type"] = "kraus";
    j["in_dim"] = kraus.in_dim;
    j["out_dim"] = kraus.out_dim;
    j["operators"] = std::move(ops);
    return j;
}

KrausSet kraus_from_json(const Json &j) {
    require(member(j, "type") == "kraus", "expected a kraus document");
    KrausSet kraus;
    kraus.in_dim = positive_integer(member(j, "in_dim"), "kraus in_dim");
    kraus.out_dim = positive_integer(member(j, "out_dim"), "kraus out_dim");
    const Json &ops = member(j, "operators");
    require(ops.is_array() && !ops.empty(), "kraus operator list empty");
    for (const Json &op : ops) {
        Matrix k = matrix_from_json(op);
        require(k.rows() == kraus.out_dim && k.cols() == kraus.in_dim,
                "kraus operator shape inconsistent with dimensions");
        kraus.operators.push_back(std::move(k));
    }
    return kraus;
}

Json stinespring_to_json(const StinespringDilation &dilation) {
    Json j;
    j["type"] = "stinespring";
    j["in_dim"] = dilation.in_dim;
    j["out_dim"] = dilation.out_dim;
    j["form"] = dilation.unitary_form ? "unitary" : "isometry";
    j["d"] = dilation.d;
    j["ell"] = dilation.ell;
    j["ancilla_index"] = dilation.ancilla_index + 1;  // 1-based e_1 in documents
    j["u"] = matrix_to_json(dilation.u);
    return j;
}

StinespringDilation stinespring_from_json(const Json &j) {
    require(member(j, "type") == "stinespring", "expected a stinespring document");
    StinespringDilation dilation;
    dilation.in_dim = positive_integer(member(j, "in_dim"), "stinespring in_dim");
    dilation.out_dim = positive_integer(member(j, "out_dim"), "stinespring out_dim");
    const Json &form = member(j, "form");
    require(form == "unitary" || form == "isometry", "stinespring form must be unitary or isometry");
    dilation.unitary_form = form == "unitary";
    require(member(j, "d").is_number_integer() && j.at("d").get<long long>() >= 0,
            "stinespring d must be a nonnegative integer");
    dilation.d = static_cast<std::size_t>(j.at("d").get<long long>());
    dilation.ell = positive_integer(member(j, "ell"), "stinespring ell");
    dilation.ancilla_index = positive_integer(member(j, "ancilla_index"), "ancilla_index") - 1;
    dilation.u = matrix_from_json(member(j, "u"));
    if (dilation.unitary_form) {
        const std::size_t total = dilation.d * dilation.ell;
        require(dilation.u.rows() == total && dilation.u.cols() == total,
                "stinespring unitary shape inconsistent with d*ell");
    } else {
        require(dilation.u.rows() == dilation.out_dim * dilation.ell &&
                    dilation.u.cols() == dilation.in_dim,
                "stinespring isometry shape inconsistent with dimensions");
    }
    return dilation;
}

Json lindblad_to_json(const LindbladData &data) {
    Json jumps = Json::array();
    for (const Matrix &v : data.jumps) {
        jumps.push_back(matrix_to_json(v));
    }
    Json j;
    j["type"] = "lindblad";
    j["dim"] = data.dim();
    j["h0"] = matrix_to_json(data.h0);
    j["jumps"] = std::move(jumps);
    return j;
}

LindbladData lindblad_from_json(const Json &j) {
    require(member(j, "type") == "lindblad", "expected a lindblad document");
    const std::size_t n = positive_integer(member(j, "dim"), "lindblad dim");
    LindbladData data;
    data.h0 = matrix_from_json(member(j, "h0"));
    require(data.h0.rows() == n && data.h0.cols() == n, "lindblad h0 shape inconsistent with dim");
    const Json &jumps = member(j, "jumps");
    require(jumps.is_array(), "lindblad jumps must be an array");
    for (const Json &v : jumps) {
        Matrix jump = matrix_from_json(v);
        require(jump.rows() == n && jump.cols() == n, "lindblad jump shape inconsistent with dim");
        data.jumps.push_back(std::move(jump));
    }
    return data;
}

Json curve_to_json(const StinespringCurve &curve) {
    Json j;
    j["type"] = "stinespring_curve";
    j["system_dim"] = curve.sys_dim;
    j["ancilla_dim"] = curve.anc_dim;
    j["hamiltonian"] = matrix_to_json(curve.hamiltonian);
    j["omega"] = matrix_to_json(curve.ancilla.omega);
    return j;
}

StinespringCurve curve_from_json(const Json &j, double tol) {
    require(member(j, "type") == "stinespring_curve", "expected a stinespring_curve document");
    const std::size_t n = positive_integer(member(j, "system_dim"), "curve system_dim");
    const std::size_t m = positive_integer(member(j, "ancilla_dim"), "curve ancilla_dim");
    const Matrix h = matrix_from_json(member(j, "hamiltonian"));
    const Matrix omega = matrix_from_json(member(j, "omega"));
    try {
        return make_curve(n, m, h, omega, tol);
    } catch (const std::invalid_argument &err) {
        throw ValidationError(err.what());
    }
}

std::string dump_canonical(const Json &j) {
    std::string out;
    dump_value(j, out);
    out += '\n';
    return out;
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open input file: " + path);
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &err) {
        throw ValidationError(std::string("invalid JSON in ") + path + ": " + err.what());
    }
}

void write_json_file(const std::string &path, const Json &j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ValidationError("cannot open output file: " + path);
    }
    out << dump_canonical(j);
}

void write_trace_csv(std::ostream &out, const CurveTrace &trace) {
    if (trace.channels.empty()) {
        throw ValidationError("write_trace_csv: empty trace");
    }
    const std::size_t n = trace.channels.front().in_dim();
    const std::size_t m = trace.channels.front().out_dim();
    out << "t";
    for (std::size_t r = 0; r < m * m; ++r) {
        for (std::size_t c = 0; c < n * n; ++c) {
            out << ", re_" << r << c << ", im_" << r << c;
        }
    }
    out << ", tp_residual\n";
    const Matrix target = vec(Matrix::identity(n));
    for (std::size_t i = 0; i < trace.grid.size(); ++i) {
        const Matrix &superop = trace.channels[i].superop();
        out << format_double(trace.grid[i]);
        for (std::size_t r = 0; r < superop.rows(); ++r) {
            for (std::size_t c = 0; c < superop.cols(); ++c) {
                out << ", " << format_double(superop(r, c).real())
                    << ", " << format_double(superop(r, c).imag());
            }
        }
        const double tp_residual =
            (superop.transpose() * vec(Matrix::identity(m)) - target).max_abs();
        out << ", " << format_double(tp_residual) << "\n";
    }
}

}  // namespace stinekit
