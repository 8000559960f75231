/**
 * Copyright 2026 The hrlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Shared helpers for the unit tests and the acceptance binary.

#pragma once

#include <optional>
#include <vector>

#include "hrlab/bilinear.hpp"
#include "hrlab/random.hpp"

namespace support {

using namespace hrlab;

/// P^T D P with P invertible; D is (1,-1,..,-1) a third of the time,
/// (1,-1,..,-1,0) a sixth of the time and otherwise random in {1,-1,0}.
inline SymBilinearForm random_form_mixed_signature(std::size_t n, Rng& rng) {
  Vector diag(n, Rational(-1));
  long kind = rng.uniform(0, 5);
  diag[0] = 1;
  if (kind == 2) diag[n - 1] = 0;
  if (kind >= 3)
    for (auto& x : diag) x = Rational(rng.uniform(-1, 1));
  Matrix p = random_invertible(n, rng);
  return {p.transpose() * Matrix::diagonal(diag) * p, "standard"};
}

inline std::optional<Vector> find_positive_vector(const SymBilinearForm& q, Rng& rng, int attempts = 60) {
  for (int a = 0; a < attempts; ++a) {
    Vector v = random_vector(q.dim(), rng);
    if (sgn(q.value(v)) > 0) return v;
  }
  // fall back to the congruence basis, which finds one whenever n_plus > 0
  Congruence c = diagonalize(q.matrix());
  for (std::size_t k = 0; k < c.diagonal.size(); ++k)
    if (sgn(c.diagonal[k]) > 0) return c.basis.column(k);
  return std::nullopt;
}

/// Condition (1): signature (1, n-1).
inline bool hr_signature(const SymBilinearForm& q) { return is_hr(q); }

/// Condition (2): some (n-1)-dimensional subspace is negative definite,
/// exhibited by the negative directions of a congruence diagonalisation.
inline bool hr_negative_subspace(const SymBilinearForm& q) {
  Congruence c = diagonalize(q.matrix());
  std::vector<Vector> neg;
  for (std::size_t k = 0; k < c.diagonal.size(); ++k)
    if (sgn(c.diagonal[k]) < 0) neg.push_back(c.basis.column(k));
  if (neg.size() + 1 < q.dim()) return false;
  neg.resize(q.dim() - 1);
  return neg.empty() || is_negative_definite(q.restrict_to(neg, "sub"));
}

/// Condition (3) at the given h' with Q(h') > 0.
inline bool hr_primitive_negative(const SymBilinearForm& q, const Vector& hp) {
  if (q.dim() == 1) return true;
  return is_negative_definite(primitive_restriction(q, hp));
}

/// Condition (4) at h': the defect is PSD and vanishes only on multiples of h'.
inline bool hr_hodge_index(const SymBilinearForm& q, const Vector& hp) {
  SymBilinearForm t = hodge_index_defect(q, hp);
  Signature s = signature(t);
  if (s.n_minus != 0) return false;
  if (s.n_zero != 1) return false;
  auto ker = nullspace(t.matrix());
  return ker.size() == 1 && in_span({hp}, ker.front());
}

}  // namespace support
