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

// Exact symmetric bilinear forms: inertia, the Hodge-Riemann predicates and
// the intersection form of a real (d-2,d-2)-form.
//
// A form Q has the Hodge-Riemann (HR) property when its signature is
// (1, n-1, 0). It has the weak HR property with respect to h when Q(h) > 0
// and Q has exactly one positive direction; equivalently the Hodge-index
// defect
//
//     T(v) = Q(v,h)^2 - Q(v) Q(h)
//
// is positive semidefinite. Every "for all v" statement in this file is
// decided by the signature of one explicitly assembled matrix.

#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hrlab/exterior.hpp"
#include "hrlab/matrix.hpp"
#include "hrlab/rational.hpp"

namespace hrlab {

struct Signature {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  std::size_t dim() const { return n_plus + n_minus + n_zero; }
  friend bool operator==(const Signature&, const Signature&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Signature& s) {
    return os << "(" << s.n_plus << "," << s.n_minus << "," << s.n_zero << ")";
  }
};

/// Symmetric bilinear form over a declared ordered basis.
class SymBilinearForm {
 public:
  SymBilinearForm() = default;
  SymBilinearForm(Matrix gram, std::string basis_tag = "standard")
      : g_(std::move(gram)), tag_(std::move(basis_tag)) {
    if (!g_.is_symmetric()) throw std::invalid_argument("SymBilinearForm: matrix is not symmetric");
  }

  static SymBilinearForm zero(std::size_t n, std::string tag = "standard") { return {Matrix(n, n), std::move(tag)}; }

  std::size_t dim() const { return g_.rows(); }
  const Matrix& matrix() const { return g_; }
  const std::string& basis_tag() const { return tag_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return g_(i, j); }

  Rational value(const Vector& u, const Vector& v) const { return dot(u, g_ * v); }
  /// Q(v) := Q(v, v).
  Rational value(const Vector& v) const { return value(v, v); }

  /// Restriction to span(columns), expressed in that spanning set.
  SymBilinearForm restrict_to(const std::vector<Vector>& columns, std::string tag) const {
    if (columns.empty()) return zero(0, std::move(tag));
    Matrix k = Matrix::from_columns(columns);
    return {k.transpose() * g_ * k, std::move(tag)};
  }

  SymBilinearForm scaled(const Rational& s) const { return {g_ * s, tag_}; }

  friend bool operator==(const SymBilinearForm& a, const SymBilinearForm& b) { return a.g_ == b.g_; }
  friend bool operator!=(const SymBilinearForm& a, const SymBilinearForm& b) { return !(a == b); }

 private:
  Matrix g_;
  std::string tag_ = "standard";
};

/// Result of a symmetric congruence reduction: basis^T G basis = diag(diagonal),
/// with `basis` invertible (its columns are the new basis vectors).
struct Congruence {
  Vector diagonal;
  Matrix basis;
};

/// Rational symmetric congruence reduction with diagonal pivoting. When the
/// remaining diagonal is zero but some entry G_ij is not, basis vector i is
/// replaced by v_i + v_j, producing the diagonal entry 2 G_ij.
inline Congruence diagonalize(const Matrix& g) {
  if (!g.is_symmetric()) throw std::invalid_argument("diagonalize: matrix is not symmetric");
  const std::size_t n = g.rows();
  Matrix a = g;
  Matrix p = Matrix::identity(n);
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(p(r, i), p(r, j));
  };
  Vector diag(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n && piv == n; ++i)
      if (sgn(a(i, i)) != 0) piv = i;
    if (piv == n) {
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n && bi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (sgn(a(i, j)) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi == n) break;  // remaining block is zero
      // v_bi <- v_bi + v_bj
      for (std::size_t c = 0; c < n; ++c) a(bi, c) += a(bj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, bi) += a(r, bj);
      for (std::size_t r = 0; r < n; ++r) p(r, bi) += p(r, bj);
      piv = bi;
    }
    swap_index(k, piv);
    const Rational pivot = a(k, k);
    diag[k] = pivot;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(a(k, r)) == 0) continue;
      Rational f = a(k, r) / pivot;
      for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
      for (std::size_t row = 0; row < n; ++row) p(row, r) -= f * p(row, k);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      a(k, r) = 0;
      a(r, k) = 0;
    }
  }
  return {std::move(diag), std::move(p)};
}

inline Signature signature(const Matrix& g) {
  Signature s;
  for (const auto& v : diagonalize(g).diagonal) {
    int c = sgn(v);
    if (c > 0)
      ++s.n_plus;
    else if (c < 0)
      ++s.n_minus;
    else
      ++s.n_zero;
  }
  return s;
}

inline Signature signature(const SymBilinearForm& q) { return signature(q.matrix()); }

inline bool is_positive_semidefinite(const SymBilinearForm& q) { return signature(q).n_minus == 0; }
inline bool is_negative_semidefinite(const SymBilinearForm& q) { return signature(q).n_plus == 0; }
inline bool is_negative_definite(const SymBilinearForm& q) {
  return signature(q).n_minus == q.dim();
}

/// Signature (1, n-1, 0).
inline bool is_hr(const SymBilinearForm& q) {
  Signature s = signature(q);
  return q.dim() >= 1 && s.n_plus == 1 && s.n_zero == 0;
}

inline bool is_hr_wrt(const SymBilinearForm& q, const Vector& h) { return sgn(q.value(h)) > 0 && is_hr(q); }

/// Q(h) > 0 and exactly one positive direction: the closure of the HR forms
/// that are positive on h.
inline bool is_weak_hr_wrt(const SymBilinearForm& q, const Vector& h) {
  return sgn(q.value(h)) > 0 && signature(q).n_plus == 1;
}

/// T(v) = Q(v,h)^2 - Q(v) Q(h) as a symmetric matrix: r r^T - Q(h) G, r = G h.
inline SymBilinearForm hodge_index_defect(const SymBilinearForm& q, const Vector& h) {
  Vector r = q.matrix() * h;
  Rational qh = dot(h, r);
  const std::size_t n = q.dim();
  Matrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) = r[i] * r[j] - qh * q(i, j);
  return {std::move(t), "defect(" + q.basis_tag() + ")"};
}

/// Basis of the primitive space {v : Q(v,h) = 0}. The pivot is the first
/// coordinate p with Q(e_p, h) != 0; the basis is e_j - (r_j / r_p) e_p, j != p.
inline std::vector<Vector> primitive_basis(const SymBilinearForm& q, const Vector& h) {
  Vector r = q.matrix() * h;
  std::size_t p = 0;
  while (p < r.size() && sgn(r[p]) == 0) ++p;
  if (p == r.size()) throw std::invalid_argument("primitive_basis: Q(., h) vanishes identically");
  std::vector<Vector> basis;
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (j == p) continue;
    Vector v = unit_vector(r.size(), j);
    v[p] = -r[j] / r[p];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Q restricted to the primitive space of h. Requires Q(h) != 0.
inline SymBilinearForm primitive_restriction(const SymBilinearForm& q, const Vector& h) {
  if (sgn(q.value(h)) == 0) throw std::invalid_argument("primitive_restriction: Q(h) = 0");
  return q.restrict_to(primitive_basis(q, h), "primitive(" + q.basis_tag() + ")");
}

inline bool is_zero_vector(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

inline bool in_span(const std::vector<Vector>& span, const Vector& v) {
  if (span.empty()) return is_zero_vector(v);
  std::vector<Vector> rows = span;
  std::size_t r0 = rank(Matrix::from_rows(rows));
  rows.push_back(v);
  return rank(Matrix::from_rows(rows)) == r0;
}

/// For Q with the HR property, V' a subspace on which Q is negative
/// semidefinite, and beta, gamma in V' isotropic with gamma != 0: the kappa
/// with beta = kappa gamma. Throws std::invalid_argument when the hypotheses
/// fail and std::logic_error when no kappa exists (which cannot happen for
/// inputs satisfying the hypotheses).
inline Rational proportionality_witness(const SymBilinearForm& q, const std::vector<Vector>& vprime,
                                        const Vector& beta, const Vector& gamma) {
  if (!is_hr(q)) throw std::invalid_argument("proportionality_witness: Q lacks the HR property");
  if (signature(q.restrict_to(vprime, "subspace")).n_plus != 0)
    throw std::invalid_argument("proportionality_witness: Q is not negative semidefinite on V'");
  if (!in_span(vprime, beta) || !in_span(vprime, gamma))
    throw std::invalid_argument("proportionality_witness: beta or gamma outside V'");
  if (sgn(q.value(beta)) != 0 || sgn(q.value(gamma)) != 0)
    throw std::invalid_argument("proportionality_witness: beta and gamma must be isotropic");
  if (is_zero_vector(gamma)) throw std::invalid_argument("proportionality_witness: gamma = 0");
  std::size_t p = 0;
  while (sgn(gamma[p]) == 0) ++p;
  Rational kappa = beta[p] / gamma[p];
  for (std::size_t j = 0; j < beta.size(); ++j)
    if (beta[j] != kappa * gamma[j])
      throw std::logic_error("proportionality_witness: beta is not proportional to gamma");
  return kappa;
}

/// Intersection form Q(a, b) = (a ^ omega ^ b) / vol on basis_11_real(d).
inline SymBilinearForm gram(const Form& omega) {
  const int d = omega.dim();
  if (d < 2) throw std::invalid_argument("gram: need d >= 2");
  if (!omega.is_homogeneous(d - 2, d - 2)) throw std::invalid_argument("gram: form is not of bidegree (d-2,d-2)");
  if (!is_real(omega)) throw std::invalid_argument("gram: form is not real");
  auto basis = basis_11_real(d);
  const std::size_t n = basis.size();
  std::vector<Form> right;
  right.reserve(n);
  for (const auto& b : basis) right.push_back(omega * b);
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = top_ratio(basis[i] * right[j]);
  return {std::move(g), "basis_11_real(" + std::to_string(d) + ")"};
}

}  // namespace hrlab
