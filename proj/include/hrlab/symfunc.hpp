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

// Partitions, elementary symmetric functions, Schur polynomials and their
// derived (shifted-argument) coefficients, twisted Chern classes and convex
// combinations of Schur classes.
//
// Everything is evaluated in a commutative ring R (see algebra.hpp). For forms
// the ring is the even part of the exterior algebra; callers pass (1,1)-forms.

#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hrlab/algebra.hpp"
#include "hrlab/exterior.hpp"

namespace hrlab {

/// Weakly decreasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t n = 0; n < parts_.size(); ++n) {
      if (parts_[n] <= 0) throw std::invalid_argument("Partition: parts must be positive");
      if (n > 0 && parts_[n] > parts_[n - 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }

  /// "2,1" -> (2,1); "" -> the empty partition. Trailing zero parts are dropped.
  static Partition parse(const std::string& text) {
    std::vector<int> parts;
    if (text.find_first_not_of(" \t") == std::string::npos) return Partition();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto b = item.find_first_not_of(" \t");
      auto e = item.find_last_not_of(" \t");
      if (b == std::string::npos) throw std::invalid_argument("malformed partition: \"" + text + "\"");
      item = item.substr(b, e - b + 1);
      if (item.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed partition: \"" + text + "\"");
      if (item.size() > 6) throw std::invalid_argument("partition part too large");
      parts.push_back(std::stoi(item));
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Part n (0-based), zero beyond the length.
  int part(std::size_t n) const { return n < parts_.size() ? parts_[n] : 0; }

  std::string to_string() const {
    std::string s;
    for (std::size_t n = 0; n < parts_.size(); ++n) s += (n ? "," : "") + std::to_string(parts_[n]);
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Largest part at most e: the range in which the Hodge-Riemann statement is
/// made. Evaluations do not reject partitions outside it.
inline bool fits_rank(const Partition& lambda, int e) { return lambda.largest() <= e; }

/// All partitions of b with parts at most e, lexicographically decreasing.
/// partitions(0, e) is the single empty partition.
inline std::vector<Partition> partitions(int b, int e) {
  if (b < 0) throw std::invalid_argument("partitions: negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, b, e);
  return out;
}

/// e_k(roots); e_0 = 1 and e_k = 0 for k > #roots.
template <class R>
R elementary(int k, std::span<const R> roots, const R& one) {
  if (k < 0) return zero_like(one);
  if (k > static_cast<int>(roots.size())) return zero_like(one);
  std::vector<R> e(static_cast<std::size_t>(k) + 1, zero_like(one));
  e[0] = one;
  for (const R& r : roots)
    for (int j = k; j >= 1; --j) e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * r;
  return e[static_cast<std::size_t>(k)];
}

/// c_0..c_e for the given roots.
template <class R>
std::vector<R> chern_classes(std::span<const R> roots, const R& one) {
  std::vector<R> e(roots.size() + 1, zero_like(one));
  e[0] = one;
  for (const R& r : roots)
    for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] += e[j - 1] * r;
  return e;
}

namespace detail {

// Determinant of an N x N matrix over a commutative ring by row-wise Laplace
// expansion memoised on the set of used columns: O(N 2^N) ring products.
template <class R>
R subset_determinant(const std::vector<std::vector<R>>& a, const R& one) {
  std::size_t n = a.size();
  if (n == 0) return one;
  if (n > 20) throw std::invalid_argument("determinant: matrix too large");
  std::vector<R> f(std::size_t{1} << n, zero_like(one));
  std::vector<bool> live(f.size(), false);
  f[0] = one;
  live[0] = true;
  for (std::uint32_t mask = 0; mask < f.size(); ++mask) {
    if (!live[mask]) continue;
    std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    if (row == n) continue;
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (1u << col)) continue;
      // columns already used that sit to the right of col are the inversions
      int inv = std::popcount(mask >> (col + 1));
      R term = f[mask] * a[row][col];
      std::uint32_t next = mask | (1u << col);
      if (inv % 2 == 0)
        f[next] += term;
      else
        f[next] -= term;
      live[next] = true;
    }
  }
  return f.back();
}

}  // namespace detail

/// s_lambda as the determinant with entry (i,j) = c_{lambda_i - i + j}, where
/// c = (c_0, ..., c_e) and c_k = 0 for k < 0 or k > e.
template <class R>
R schur_from_chern(const Partition& lambda, const std::vector<R>& c) {
  if (c.empty()) throw std::invalid_argument("schur: need at least c_0");
  const R& one = c[0];
  std::size_t n = lambda.length();
  std::vector<std::vector<R>> m(n, std::vector<R>(n, zero_like(one)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long k = static_cast<long>(lambda.part(i)) - static_cast<long>(i) + static_cast<long>(j);
      if (k >= 0 && k < static_cast<long>(c.size())) m[i][j] = c[static_cast<std::size_t>(k)];
    }
  return detail::subset_determinant(m, one);
}

template <class R>
R schur(const Partition& lambda, std::span<const R> roots, const R& one) {
  return schur_from_chern(lambda, chern_classes(roots, one));
}

namespace detail {
inline int common_dimension(std::span<const Form> forms) {
  if (forms.empty()) throw std::invalid_argument("need at least one form");
  int d = forms.front().dim();
  for (const Form& f : forms) {
    if (f.dim() != d) throw std::invalid_argument("forms of mixed dimensions");
    if (!f.is_homogeneous(1, 1)) throw std::invalid_argument("expected (1,1)-forms");
  }
  return d;
}
}  // namespace detail

inline Form elementary(int k, std::span<const Form> forms) {
  int d = detail::common_dimension(forms);
  return elementary<Form>(k, forms, Form::one(d));
}

/// s_lambda(forms) as a real (|lambda|,|lambda|)-form.
inline Form schur(const Partition& lambda, std::span<const Form> forms) {
  int d = detail::common_dimension(forms);
  return schur<Form>(lambda, forms, Form::one(d));
}

/// c_p of the formal twist by delta: sum_{k=0}^p C(e-k, p-k) c_k delta^{p-k}.
template <class R>
R twisted_chern(const std::vector<R>& c, int e, const R& delta, int p) {
  if (p < 0 || p > e) throw std::invalid_argument("twisted_chern: p out of range [0, e]");
  if (c.empty()) throw std::invalid_argument("twisted_chern: need at least c_0");
  R total = zero_like(c[0]);
  for (int k = 0; k <= p; ++k) {
    if (k >= static_cast<int>(c.size())) break;
    R term = c[static_cast<std::size_t>(k)] * ring_power(delta, p - k);
    total += term * binomial(e - k, p - k);
  }
  return total;
}

/// All derived Schur polynomials: entry j is the coefficient of x^j in
/// s_lambda(a_1 + x, ..., a_e + x), for j = 0..|lambda|.
template <class R>
std::vector<R> derived_schur_all(const Partition& lambda, std::span<const R> roots, const R& one) {
  using P = PolyOver<R>;
  P x = P::variable(one);
  std::vector<P> shifted;
  shifted.reserve(roots.size());
  for (const R& r : roots) shifted.push_back(P::constant(r) + x);
  P s = schur<P>(lambda, shifted, P::constant(one));
  std::vector<R> out;
  for (int j = 0; j <= lambda.weight(); ++j) out.push_back(s.coefficient(j));
  return out;
}

/// s_lambda^{(j)}; zero for j outside [0, |lambda|].
template <class R>
R derived_schur(const Partition& lambda, std::span<const R> roots, int j, const R& one) {
  if (j < 0 || j > lambda.weight()) return zero_like(one);
  return derived_schur_all(lambda, roots, one)[static_cast<std::size_t>(j)];
}

inline Form derived_schur(const Partition& lambda, std::span<const Form> forms, int j) {
  int d = detail::common_dimension(forms);
  return derived_schur<Form>(lambda, forms, j, Form::one(d));
}

/// Point of the simplex: non-negative rationals summing to exactly 1, indexed
/// like partitions(b, e).
class WeightVector {
 public:
  explicit WeightVector(std::vector<Rational> x) : x_(std::move(x)) {
    Rational sum(0);
    for (const auto& v : x_) {
      if (sgn(v) < 0) throw std::invalid_argument("WeightVector: negative weight");
      sum += v;
    }
    if (sum != 1) throw std::invalid_argument("WeightVector: weights must sum to 1");
  }

  static WeightVector vertex(std::size_t k, std::size_t i) {
    std::vector<Rational> x(k, Rational(0));
    x.at(i) = 1;
    return WeightVector(std::move(x));
  }

  const std::vector<Rational>& weights() const { return x_; }
  std::size_t size() const { return x_.size(); }

 private:
  std::vector<Rational> x_;
};

/// Gamma_x = sum_i x_i s_{lambda^(i)} over partitions(b, e).
template <class R>
R gamma(const WeightVector& x, int b, int e, std::span<const R> roots, const R& one) {
  auto parts = partitions(b, e);
  if (parts.size() != x.size())
    throw std::invalid_argument("gamma: weight vector has " + std::to_string(x.size()) +
                                " entries but there are " + std::to_string(parts.size()) + " partitions");
  auto c = chern_classes(roots, one);
  R total = zero_like(one);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (sgn(x.weights()[i]) == 0) continue;
    total += schur_from_chern(parts[i], c) * x.weights()[i];
  }
  return total;
}

inline Form gamma(const WeightVector& x, int b, int e, std::span<const Form> forms) {
  int d = detail::common_dimension(forms);
  return gamma<Form>(x, b, e, forms, Form::one(d));
}

/// Lattice points of the (k-1)-simplex with denominator `resolution`, in
/// lexicographically decreasing order of numerators.
inline std::vector<WeightVector> simplex_grid(std::size_t k, int resolution) {
  if (k == 0 || resolution < 1) throw std::invalid_argument("simplex_grid: need k >= 1 and resolution >= 1");
  std::vector<WeightVector> out;
  std::vector<int> num(k, 0);
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 == k) {
      num[pos] = remaining;
      std::vector<Rational> x;
      for (int v : num) x.emplace_back(Rational(mpz_class(v), mpz_class(resolution)));
      for (auto& v : x) v.canonicalize();
      out.emplace_back(std::move(x));
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      num[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, resolution);
  return out;
}

}  // namespace hrlab
