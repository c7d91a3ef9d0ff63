// Copyright 2026 The oaqec Authors
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

#include "oaqec/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "oaqec/errors.hpp"

namespace oaqec {

namespace {

std::string join(std::string_view path, std::string_view field) {
  std::string out(path);
  out += '.';
  out += field;
  return out;
}

std::string indexed(std::string_view path, std::size_t i) {
  return std::string(path) + "[" + std::to_string(i) + "]";
}

[[noreturn]] void fail(std::string_view path, std::string_view what) {
  throw InputError(std::string(path) + ": " + std::string(what));
}

const Json& field(const Json& j, std::string_view path, const char* name) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) fail(path, std::string("missing field '") + name + "'");
  return *it;
}

Index positive_int(const Json& j, std::string_view path) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) {
    fail(path, "expected a positive integer");
  }
  return static_cast<Index>(j.get<long long>());
}

double number(const Json& j, std::string_view path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(path, "non-finite number");
  return x;
}

RealMatrix real_rows(const Json& j, std::string_view path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of rows");
  const std::size_t rows = j.size();
  const Json& first = j[0];
  if (!first.is_array() || first.empty()) fail(indexed(path, 0), "expected a non-empty row");
  const std::size_t cols = first.size();
  RealMatrix out(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rpath = indexed(path, r);
    if (!j[r].is_array() || j[r].size() != cols) fail(rpath, "ragged row");
    for (std::size_t c = 0; c < cols; ++c) {
      out(static_cast<Index>(r), static_cast<Index>(c)) = number(j[r][c], indexed(rpath, c));
    }
  }
  return out;
}

Eigen::VectorXd real_entries(const Json& j, std::string_view path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array");
  Eigen::VectorXd out(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    out(static_cast<Index>(i)) = number(j[i], indexed(path, i));
  }
  return out;
}

Json real_to_json(const RealMatrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrices_to_json(const std::vector<Matrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

std::vector<Matrix> matrices_from_json(const Json& j, std::string_view path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(matrix_from_json(j[i], indexed(path, i)));
  }
  return out;
}

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

void render(const Json& j, int indent, int depth, std::string& out) {
  const auto pad = [&](int level) { out.append(static_cast<std::size_t>(indent * level), ' '); };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        pad(depth + 1);
        out += Json(it.key()).dump();
        out += ": ";
        render(it.value(), indent, depth + 1, out);
      }
      out += '\n';
      pad(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool flat = true;
      for (const auto& x : j) flat = flat && is_scalar(x);
      if (flat) {
        out += '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          render(j[i], indent, depth, out);
        }
        out += ']';
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        pad(depth + 1);
        render(j[i], indent, depth + 1, out);
      }
      out += '\n';
      pad(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

}  // namespace

Json to_json(const Matrix& m) {
  return Json{{"re", real_to_json(m.real())}, {"im", real_to_json(m.imag())}};
}

Json to_json(const Vector& v) {
  Json re = Json::array();
  Json im = Json::array();
  for (Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return Json{{"re", re}, {"im", im}};
}

Json to_json(const RealMatrix& m) { return real_to_json(m); }

Json to_json(const KrausChannel& ch) {
  return Json{{"dim_in", ch.dim_in()},
              {"dim_out", ch.dim_out()},
              {"kraus", matrices_to_json(ch.kraus())}};
}

Json to_json(const OperatorSpan& span) {
  return Json{{"dim", span.dim()},
              {"size", span.size()},
              {"adjoint_closed", span.adjoint_closed()},
              {"basis", matrices_to_json(span.basis())}};
}

Json to_json(const AlgebraStructure& structure) {
  Json sectors = Json::array();
  for (const auto& s : structure.sectors) {
    sectors.push_back(Json{{"projector", to_json(s.projector)},
                           {"n", s.n},
                           {"m", s.m},
                           {"frame", to_json(s.frame)}});
  }
  return Json{{"unit", to_json(structure.unit)}, {"sectors", sectors}};
}

Json to_json(const Verdict& verdict) {
  Json out{{"verdict", verdict.holds},
           {"residual_commutator", verdict.residual_commutator},
           {"algebra_dim", verdict.algebra_dim}};
  out["residual_definition"] =
      verdict.residual_definition ? Json(*verdict.residual_definition) : Json(nullptr);
  return out;
}

Json to_json(const RecoveryReport& report) {
  return Json{{"kraus", matrices_to_json(report.recovery.kraus())},
              {"heisenberg_residual", report.heisenberg_residual},
              {"schrodinger_residual", report.schrodinger_residual},
              {"tp_defect", report.tp_defect},
              {"scalarity_residual", report.scalarity_residual},
              {"syndromes", matrices_to_json(report.syndrome_projectors)}};
}

Json to_json(const LiftedSpace& lifted) {
  return Json{{"span", to_json(lifted.span)},
              {"fixed_point_residual", lifted.fixed_point_residual},
              {"code_residual", lifted.code_residual},
              {"closure_residual", lifted.closure_residual},
              {"multiplication_closed", lifted.multiplication_closed}};
}

Json to_json(const InfoFlowReport& report) {
  const auto& c = report.certificates;
  return Json{
      {"isometry", to_json(report.isometry.matrix)},
      {"system_dim", report.isometry.system_dim},
      {"apparatus_dim", report.isometry.apparatus_dim},
      {"system_channel", to_json(report.system_channel)},
      {"apparatus_channel", to_json(report.apparatus_channel)},
      {"system_algebra", to_json(report.system_algebra)},
      {"apparatus_algebra", to_json(report.apparatus_algebra)},
      {"duplicated", to_json(report.duplicated)},
      {"duplicated_projectors", matrices_to_json(report.duplicated_projectors)},
      {"system_povm", matrices_to_json(report.system_povm)},
      {"apparatus_povm", matrices_to_json(report.apparatus_povm)},
      {"correlation", real_to_json(report.correlation)},
      {"certificates",
       Json{{"apparatus_algebra_agreement", c.apparatus_algebra_agreement},
            {"duplicated_containment", c.duplicated_containment},
            {"commutant_containment", c.commutant_containment},
            {"duplicated_commutativity", c.duplicated_commutativity},
            {"complementary_overlap", c.complementary_overlap},
            {"povm_consistency", c.povm_consistency},
            {"correlation_deviation", c.correlation_deviation}}}};
}

Matrix matrix_from_json(const Json& j, std::string_view path) {
  const RealMatrix re = real_rows(field(j, path, "re"), join(path, "re"));
  RealMatrix im = RealMatrix::Zero(re.rows(), re.cols());
  if (j.contains("im")) {
    im = real_rows(j["im"], join(path, "im"));
    if (im.rows() != re.rows() || im.cols() != re.cols()) {
      fail(join(path, "im"), "shape differs from 're'");
    }
  }
  Matrix out(re.rows(), re.cols());
  out.real() = re;
  out.imag() = im;
  return out;
}

Vector vector_from_json(const Json& j, std::string_view path) {
  const Eigen::VectorXd re = real_entries(field(j, path, "re"), join(path, "re"));
  Eigen::VectorXd im = Eigen::VectorXd::Zero(re.size());
  if (j.contains("im")) {
    im = real_entries(j["im"], join(path, "im"));
    if (im.size() != re.size()) fail(join(path, "im"), "length differs from 're'");
  }
  Vector out(re.size());
  out.real() = re;
  out.imag() = im;
  return out;
}

KrausChannel channel_from_json(const Json& j, std::string_view path) {
  const Index dim_in = positive_int(field(j, path, "dim_in"), join(path, "dim_in"));
  const Index dim_out = positive_int(field(j, path, "dim_out"), join(path, "dim_out"));
  const std::string kpath = join(path, "kraus");
  std::vector<Matrix> kraus = matrices_from_json(field(j, path, "kraus"), kpath);
  for (std::size_t i = 0; i < kraus.size(); ++i) {
    if (kraus[i].rows() != dim_out || kraus[i].cols() != dim_in) {
      fail(indexed(kpath, i), "shape does not match dim_out x dim_in");
    }
  }
  return KrausChannel(std::move(kraus));
}

OperatorSpan span_from_json(const Json& j, std::string_view path) {
  const Index dim = positive_int(field(j, path, "dim"), join(path, "dim"));
  const bool has_basis = j.contains("basis");
  const bool has_generators = j.contains("generators");
  if (has_basis == has_generators) fail(path, "expected exactly one of 'basis' or 'generators'");
  const char* name = has_basis ? "basis" : "generators";
  const std::string mpath = join(path, name);
  std::vector<Matrix> mats = matrices_from_json(j[name], mpath);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (mats[i].rows() != dim || mats[i].cols() != dim) {
      fail(indexed(mpath, i), "expected a dim x dim matrix");
    }
  }
  return has_basis ? orthonormalize_span(mats) : generate_algebra(mats);
}

Json read_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw InputError(file + ": cannot open");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw InputError(file + ": " + e.what());
  }
}

std::string canonical_dump(const Json& j, int indent) {
  std::string out;
  render(j, indent, 0, out);
  out += '\n';
  return out;
}

}  // namespace oaqec
