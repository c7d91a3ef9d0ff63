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

#include "oaqec/channel.hpp"

#include <cmath>

#include "oaqec/errors.hpp"

namespace oaqec {

KrausChannel::KrausChannel(std::vector<Matrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw InputError("KrausChannel: empty Kraus list");
  dim_out_ = kraus_.front().rows();
  dim_in_ = kraus_.front().cols();
  if (dim_in_ <= 0 || dim_out_ <= 0) {
    throw InputError("KrausChannel: elements must be non-empty");
  }
  Matrix sum = Matrix::Zero(dim_in_, dim_in_);
  for (const auto& e : kraus_) {
    if (e.rows() != dim_out_ || e.cols() != dim_in_) {
      throw InputError("KrausChannel: Kraus elements have different shapes");
    }
    if (!e.allFinite()) throw InputError("KrausChannel: non-finite entry");
    sum += e.adjoint() * e;
  }
  tp_defect_ = op_norm(sum - Matrix::Identity(dim_in_, dim_in_));
}

KrausChannel KrausChannel::identity(Index dim) {
  return KrausChannel({Matrix::Identity(dim, dim)});
}

TpReport validate_tp(const KrausChannel& ch) {
  TpReport report;
  report.tp_defect = ch.tp_defect();
  report.trace_preserving = ch.trace_preserving();
  if (ch.dim_in() == ch.dim_out()) {
    Matrix sum = Matrix::Zero(ch.dim_out(), ch.dim_out());
    for (const auto& e : ch.kraus()) sum += e * e.adjoint();
    report.unital_defect = op_norm(sum - identity(ch.dim_out()));
  }
  return report;
}

Matrix apply_state(const KrausChannel& ch, const Matrix& rho) {
  if (rho.rows() != ch.dim_in() || rho.cols() != ch.dim_in()) {
    throw InputError("apply_state: state dimension does not match channel input");
  }
  Matrix out = Matrix::Zero(ch.dim_out(), ch.dim_out());
  for (const auto& e : ch.kraus()) out += e * rho * e.adjoint();
  return out;
}

Matrix apply_dual(const KrausChannel& ch, const Matrix& x) {
  if (x.rows() != ch.dim_out() || x.cols() != ch.dim_out()) {
    throw InputError("apply_dual: operator dimension does not match channel output");
  }
  Matrix out = Matrix::Zero(ch.dim_in(), ch.dim_in());
  for (const auto& e : ch.kraus()) out += e.adjoint() * x * e;
  return out;
}

KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner) {
  if (inner.dim_out() != outer.dim_in()) {
    throw InputError("compose: inner output dimension differs from outer input");
  }
  std::vector<Matrix> kraus;
  kraus.reserve(outer.size() * inner.size());
  for (const auto& r : outer.kraus()) {
    for (const auto& e : inner.kraus()) kraus.push_back(r * e);
  }
  return KrausChannel(std::move(kraus));
}

KrausChannel remix(const KrausChannel& ch, const Matrix& u) {
  const auto n = static_cast<Index>(ch.size());
  if (u.rows() != n || u.cols() != n) {
    throw InputError("remix: mixing matrix must be square of Kraus count");
  }
  std::vector<Matrix> kraus;
  for (Index a = 0; a < n; ++a) {
    Matrix e = Matrix::Zero(ch.dim_out(), ch.dim_in());
    for (Index b = 0; b < n; ++b) e += u(a, b) * ch[static_cast<std::size_t>(b)];
    kraus.push_back(std::move(e));
  }
  return KrausChannel(std::move(kraus));
}

KrausChannel normal_form(const KrausChannel& ch) {
  std::vector<Matrix> kept;
  for (const auto& e : ch.kraus()) {
    if (e.norm() > tol::kNegligibleNorm) kept.push_back(e);
  }
  if (kept.empty()) return KrausChannel({Matrix::Zero(ch.dim_out(), ch.dim_in())});
  const auto n = static_cast<Index>(kept.size());
  Matrix gram(n, n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      gram(a, b) = (kept[static_cast<std::size_t>(a)].adjoint() *
                    kept[static_cast<std::size_t>(b)]).trace();
    }
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(gram);
  std::vector<Matrix> out;
  // Largest weights first.
  for (Index i = n - 1; i >= 0; --i) {
    if (eig.eigenvalues()(i) <= tol::kNegligibleNorm * tol::kNegligibleNorm) continue;
    Matrix f = Matrix::Zero(ch.dim_out(), ch.dim_in());
    for (Index b = 0; b < n; ++b) {
      f += eig.eigenvectors()(b, i) * kept[static_cast<std::size_t>(b)];
    }
    out.push_back(std::move(f));
  }
  return KrausChannel(std::move(out));
}

Isometry isometry_from_unitary(const Matrix& u, const Vector& psi_apparatus) {
  const Index da = psi_apparatus.size();
  if (da <= 0 || u.rows() != u.cols() || u.rows() % da != 0) {
    throw InputError("isometry_from_unitary: U must be square on d_S * d_A");
  }
  if (op_norm(u.adjoint() * u - identity(u.rows())) > tol::kTracePreserving) {
    throw InputError("isometry_from_unitary: U is not unitary");
  }
  if (std::abs(psi_apparatus.norm() - 1.0) > tol::kTracePreserving) {
    throw InputError("isometry_from_unitary: apparatus state is not normalized");
  }
  const Index ds = u.rows() / da;
  return {u * kron(identity(ds), Matrix(psi_apparatus)), ds, da};
}

std::pair<KrausChannel, KrausChannel> marginal_channels(const Isometry& v) {
  const Index ds = v.system_dim;
  const Index da = v.apparatus_dim;
  if (v.matrix.rows() != ds * da || v.matrix.cols() != ds) {
    throw InputError("marginal_channels: isometry shape mismatch");
  }
  if (op_norm(v.matrix.adjoint() * v.matrix - identity(ds)) > tol::kTracePreserving) {
    throw InputError("marginal_channels: V^dag V != 1");
  }
  std::vector<Matrix> to_system;
  for (Index a = 0; a < da; ++a) {
    Matrix e(ds, ds);
    for (Index s = 0; s < ds; ++s) e.row(s) = v.matrix.row(s * da + a);
    to_system.push_back(std::move(e));
  }
  std::vector<Matrix> to_apparatus;
  for (Index s = 0; s < ds; ++s) {
    to_apparatus.push_back(v.matrix.middleRows(s * da, da));
  }
  return {KrausChannel(std::move(to_system)), KrausChannel(std::move(to_apparatus))};
}

Isometry canonical_dilation(const KrausChannel& ch) {
  if (ch.dim_in() != ch.dim_out()) {
    throw InputError("canonical_dilation: channel must be square");
  }
  const Index d = ch.dim_in();
  const auto k = static_cast<Index>(ch.size());
  Matrix v = Matrix::Zero(d * k, d);
  for (Index b = 0; b < k; ++b) {
    v += kron(ch[static_cast<std::size_t>(b)], Matrix(basis_vector(k, b)));
  }
  return {std::move(v), d, k};
}

KrausChannel complementary_channel(const KrausChannel& ch) {
  if (!ch.trace_preserving()) {
    throw InputError("complementary_channel: channel is not trace preserving");
  }
  const auto k = static_cast<Index>(ch.size());
  std::vector<Matrix> out;
  for (Index a = 0; a < ch.dim_out(); ++a) {
    Matrix f(k, ch.dim_in());
    for (Index b = 0; b < k; ++b) f.row(b) = ch[static_cast<std::size_t>(b)].row(a);
    out.push_back(std::move(f));
  }
  return KrausChannel(std::move(out));
}

}  // namespace oaqec
