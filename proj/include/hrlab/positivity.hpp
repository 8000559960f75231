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

// Positivity of real (p,p)-forms.
//
// Decidable here: strict positivity of (1,1)-forms (leading principal minors)
// and membership in the cone of positive forms P^{p,p}, via the Hermitian form
//
//     beta -> (eta ^ i^{(d-p)^2} beta ^ conj(beta)) / vol   on  Lambda^{d-p,0},
//
// which is decided exactly through the real 2N x 2N symmetric matrix
// [[Re M, -Im M], [Im M, Re M]]. Weak positivity is only ever refuted, by
// pairing against sampled simple forms; an unrefuted verdict is not a proof.

#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hrlab/bilinear.hpp"
#include "hrlab/exterior.hpp"
#include "hrlab/random.hpp"

namespace hrlab {

enum class Cone {
  kPositive,
  kStrictlyPositive,
  kNotPositive,
  kWeaklyPositiveUnfalsified,
  kWeaklyPositiveFalsified,
};

inline const char* to_string(Cone c) {
  switch (c) {
    case Cone::kPositive: return "POSITIVE";
    case Cone::kStrictlyPositive: return "STRICTLY_POSITIVE";
    case Cone::kNotPositive: return "NOT_POSITIVE";
    case Cone::kWeaklyPositiveUnfalsified: return "WEAKLY_POSITIVE_UNFALSIFIED";
    case Cone::kWeaklyPositiveFalsified: return "WEAKLY_POSITIVE_FALSIFIED";
  }
  return "?";
}

/// NOT_POSITIVE and WEAKLY_POSITIVE_FALSIFIED always carry a witness form.
struct ConeVerdict {
  Cone cone;
  std::optional<Form> witness;
  /// For a falsification: the negative pairing value.
  std::optional<Rational> pairing;
};

/// Leading principal minors of a Hermitian matrix, computed by fraction-field
/// elimination without pivoting (minor_k is the product of the first k pivots;
/// a zero pivot makes every later minor unavailable and the test fail).
inline std::vector<Rational> leading_principal_minors(const HermitianMatrix& h) {
  const int d = h.dim();
  std::vector<GaussianRational> a = h.entries();
  auto at = [&](int r, int c) -> GaussianRational& { return a[static_cast<std::size_t>(r * d + c)]; };
  std::vector<Rational> minors;
  Rational running(1);
  for (int k = 0; k < d; ++k) {
    GaussianRational piv = at(k, k);
    if (!piv.is_real()) throw std::logic_error("Hermitian elimination produced a non-real pivot");
    running *= piv.re();
    minors.push_back(running);
    if (piv.is_zero()) break;
    for (int r = k + 1; r < d; ++r) {
      GaussianRational f = at(r, k) / piv;
      if (f.is_zero()) continue;
      for (int c = k; c < d; ++c) at(r, c) -= f * at(k, c);
    }
  }
  return minors;
}

inline bool is_positive_definite_11(const HermitianMatrix& h) {
  auto minors = leading_principal_minors(h);
  if (static_cast<int>(minors.size()) != h.dim()) return false;
  for (const auto& m : minors)
    if (sgn(m) <= 0) return false;
  return true;
}

inline bool is_strictly_positive_11(const Form& a) {
  return a.is_homogeneous(1, 1) && is_real(a) && !a.is_zero() && is_positive_definite_11(form_to_hermitian(a));
}

/// i alpha_1 ^ conj(alpha_1) ^ ... ^ i alpha_p ^ conj(alpha_p).
inline Form simple_form(const std::vector<Form>& alphas, int d) {
  if (static_cast<int>(alphas.size()) > d) throw std::invalid_argument("simple_form: more factors than d");
  Form r = Form::one(d);
  for (const Form& a : alphas) {
    if (a.dim() != d) throw std::invalid_argument("simple_form: dimension mismatch");
    if (!a.is_homogeneous(1, 0)) throw std::invalid_argument("simple_form: factors must be (1,0)-forms");
    r = r * (GaussianRational::i() * (a * conjugate(a)));
  }
  return r;
}

namespace detail {
inline std::vector<std::uint32_t> subsets_of_size(int d, int k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << d); ++m)
    if (std::popcount(m) == k) out.push_back(m);
  return out;
}
}  // namespace detail

/// Hermitian matrix M[S][T] = (eta ^ i^{k^2} dz_S ^ dzbar_T) / vol, k = d - p,
/// over the subsets S, T of size k in increasing mask order.
inline std::vector<GaussianRational> induced_hermitian_form(const Form& eta, int p,
                                                            std::vector<std::uint32_t>* subsets = nullptr) {
  const int d = eta.dim();
  const int k = d - p;
  auto subs = detail::subsets_of_size(d, k);
  const std::size_t n = subs.size();
  const GaussianRational ik2 = i_power(static_cast<long>(k) * k);
  std::vector<GaussianRational> m(n * n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      Form b = Form::term(d, Monomial{subs[s], 0}, GaussianRational(1));
      Form bbar = Form::term(d, Monomial{0, subs[t]}, GaussianRational(1));
      m[s * n + t] = top_ratio_complex(eta * (b * bbar)) * ik2;
    }
  if (subsets) *subsets = std::move(subs);
  return m;
}

/// Decides eta in P^{p,p}; STRICTLY_POSITIVE iff the induced form is definite.
inline ConeVerdict is_positive_pp(const Form& eta) {
  const int d = eta.dim();
  int p = -1;
  if (eta.is_zero()) {
    p = 0;  // the zero form lies in every P^{p,p}; report at the scalar level
  } else {
    p = eta.terms().begin()->first.p();
  }
  if (!eta.is_homogeneous(p, p)) throw std::invalid_argument("is_positive_pp: form is not of pure bidegree (p,p)");
  if (!is_real(eta)) throw std::invalid_argument("is_positive_pp: form is not real");
  std::vector<std::uint32_t> subs;
  auto m = induced_hermitian_form(eta, p, &subs);
  const std::size_t n = subs.size();
  Matrix real(2 * n, 2 * n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      const auto& z = m[s * n + t];
      real(s, t) = z.re();
      real(n + s, n + t) = z.re();
      real(s, n + t) = -z.im();
      real(n + s, t) = z.im();
    }
  Congruence c = diagonalize(real);
  for (std::size_t k = 0; k < c.diagonal.size(); ++k) {
    if (sgn(c.diagonal[k]) >= 0) continue;
    // (x, y) is a negative direction of the real form; the pairing is
    // sum_{S,T} b_S M[S][T] conj(b_T), so the witness coefficients are x - i y.
    Form beta(d);
    for (std::size_t s = 0; s < n; ++s)
      beta.add_term(Monomial{subs[s], 0}, GaussianRational(c.basis(s, k), -c.basis(n + s, k)));
    return {Cone::kNotPositive, std::move(beta), std::nullopt};
  }
  bool definite = true;
  for (const auto& v : c.diagonal)
    if (sgn(v) == 0) definite = false;
  return {definite ? Cone::kStrictlyPositive : Cone::kPositive, std::nullopt, std::nullopt};
}

/// Pairs eta against `trials` random simple forms of complementary bidegree.
/// Finds a witness or returns UNFALSIFIED, which proves nothing.
inline ConeVerdict falsify_weak_positivity(const Form& eta, int trials, std::uint64_t seed) {
  const int d = eta.dim();
  int p = eta.is_zero() ? 0 : eta.terms().begin()->first.p();
  if (!eta.is_homogeneous(p, p) || !is_real(eta))
    throw std::invalid_argument("falsify_weak_positivity: expected a real (p,p)-form");
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    std::vector<Form> alphas;
    for (int j = 0; j < d - p; ++j) alphas.push_back(random_10_form(d, rng));
    Form gamma = simple_form(alphas, d);
    Rational pairing = top_ratio(eta * gamma);
    if (sgn(pairing) < 0) return {Cone::kWeaklyPositiveFalsified, std::move(gamma), pairing};
  }
  return {Cone::kWeaklyPositiveUnfalsified, std::nullopt, std::nullopt};
}

}  // namespace hrlab
