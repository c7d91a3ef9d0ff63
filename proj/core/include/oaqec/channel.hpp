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

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "oaqec/linalg.hpp"
#include "oaqec/tolerances.hpp"

namespace oaqec {

// A completely positive map rho -> sum_a E_a rho E_a^dag in Kraus form.
//
// Trace-decreasing maps are valid values; trace preservation is a predicate
// (see validate_tp). The Kraus list is stored exactly as given.
class KrausChannel {
 public:
  // Throws InputError on an empty list or mismatched element shapes.
  explicit KrausChannel(std::vector<Matrix> kraus);

  static KrausChannel identity(Index dim);

  Index dim_in() const { return dim_in_; }
  Index dim_out() const { return dim_out_; }
  std::size_t size() const { return kraus_.size(); }
  const std::vector<Matrix>& kraus() const { return kraus_; }
  const Matrix& operator[](std::size_t a) const { return kraus_[a]; }

  // ||sum_a E_a^dag E_a - 1|| in operator norm.
  double tp_defect() const { return tp_defect_; }
  bool trace_preserving(double tol = tol::kTracePreserving) const {
    return tp_defect_ <= tol;
  }

 private:
  std::vector<Matrix> kraus_;
  Index dim_in_ = 0;
  Index dim_out_ = 0;
  double tp_defect_ = 0.0;
};

struct TpReport {
  bool trace_preserving = false;
  double tp_defect = 0.0;
  // ||sum_a E_a E_a^dag - 1||, i.e. unitality of the channel itself (which is
  // not the same as unitality of its dual). Only defined for square channels.
  std::optional<double> unital_defect;
};

TpReport validate_tp(const KrausChannel& ch);

// sum_a E_a rho E_a^dag
Matrix apply_state(const KrausChannel& ch, const Matrix& rho);
// sum_a E_a^dag X E_a
Matrix apply_dual(const KrausChannel& ch, const Matrix& x);

// outer o inner, Kraus set { R_a E_b } (a outer, b inner, b fastest).
KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner);

// Kraus elements E'_a = sum_b u(a, b) E_b for a unitary u; same channel.
KrausChannel remix(const KrausChannel& ch, const Matrix& u);

// Drops elements with Frobenius norm <= 1e-12 and orthogonalizes the rest in
// the Hilbert-Schmidt sense (Tr(F_a^dag F_b) = 0 for a != b).
KrausChannel normal_form(const KrausChannel& ch);

// An isometry V : H_S -> H_S (x) H_A. The system factor is the most
// significant tensor index.
struct Isometry {
  Matrix matrix;
  Index system_dim = 0;
  Index apparatus_dim = 0;
};

// V|psi> = U (|psi> (x) |psi_A>). Throws InputError when U is not unitary or
// psi_A is not normalized (both to 1e-9).
Isometry isometry_from_unitary(const Matrix& u, const Vector& psi_apparatus);

// E_SS(rho) = Tr_A(V rho V^dag) with elements (1 (x) <a|) V, and
// E_SA(rho) = Tr_S(V rho V^dag) with elements (<s| (x) 1) V.
std::pair<KrausChannel, KrausChannel> marginal_channels(const Isometry& v);

// Stinespring isometry V = sum_b E_b (x) |b> of a square channel, with the
// environment indexed by Kraus order.
Isometry canonical_dilation(const KrausChannel& ch);

// Complementary channel with elements F_a = sum_b |b><a| E_b, the environment
// basis indexed by Kraus order. Satisfies F_a^dag F_b = E^dag(|a><b|).
// Throws InputError for a channel that is not trace preserving.
KrausChannel complementary_channel(const KrausChannel& ch);

}  // namespace oaqec
