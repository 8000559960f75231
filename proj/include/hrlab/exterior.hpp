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

// Exterior algebra of (p,q)-forms on a d-dimensional complex vector space E.
//
// A monomial is stored as a pair of bit masks (dz indices, dzbar indices) and
// always denotes the canonically ordered product
//
//     dz_{j1} ^ ... ^ dz_{jp} ^ dzbar_{k1} ^ ... ^ dzbar_{kq},   j1 < ... < jp, k1 < ... < kq,
//
// i.e. every holomorphic factor precedes every antiholomorphic one. Bit j-1 of a
// mask stands for the generator with (1-based) index j. Coefficients are exact
// Gaussian rationals; zero coefficients are never stored.

#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hrlab/gaussian.hpp"
#include "hrlab/rational.hpp"

namespace hrlab {

inline constexpr int kMaxDimension = 8;

struct Monomial {
  std::uint32_t holo = 0;  // dz factors
  std::uint32_t anti = 0;  // dzbar factors

  int p() const { return std::popcount(holo); }
  int q() const { return std::popcount(anti); }
  int degree() const { return p() + q(); }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

namespace detail {

// Number of pairs (x, y) with x in `left`, y in `right` and x > y: the count of
// transpositions needed to merge the two ascending runs.
inline int merge_inversions(std::uint32_t left, std::uint32_t right) {
  int n = 0;
  while (right != 0) {
    int y = std::countr_zero(right);
    right &= right - 1;
    n += std::popcount(y >= 31 ? 0u : (left >> (y + 1)));
  }
  return n;
}

inline std::uint32_t full_mask(int d) { return d >= 32 ? ~0u : ((1u << d) - 1u); }

}  // namespace detail

/// Product of two canonical monomials: returns {sign, product}; sign 0 means
/// the product vanishes (a repeated generator).
inline std::pair<int, Monomial> multiply(const Monomial& a, const Monomial& b) {
  if ((a.holo & b.holo) != 0 || (a.anti & b.anti) != 0) return {0, {}};
  // dz_A dzbar_A' dz_B dzbar_B' -> dz_A dz_B dzbar_A' dzbar_B'
  int swaps = a.q() * b.p() + detail::merge_inversions(a.holo, b.holo) +
              detail::merge_inversions(a.anti, b.anti);
  return {(swaps % 2 == 0) ? 1 : -1, Monomial{a.holo | b.holo, a.anti | b.anti}};
}

/// Element of the complexified exterior algebra on dz_1..dz_d, dzbar_1..dzbar_d.
/// `*` between two forms is the wedge product.
class Form {
 public:
  using Terms = std::map<Monomial, GaussianRational>;

  Form() = default;
  explicit Form(int d) : d_(d) {
    if (d < 0 || d > kMaxDimension)
      throw std::invalid_argument("Form: dimension must lie in [0, " +
                                  std::to_string(kMaxDimension) + "]");
  }

  static Form scalar(int d, const GaussianRational& c) {
    Form f(d);
    f.add_term({}, c);
    return f;
  }
  static Form one(int d) { return scalar(d, GaussianRational(1)); }

  static Form term(int d, Monomial m, const GaussianRational& c) {
    Form f(d);
    f.check_monomial(m);
    f.add_term(m, c);
    return f;
  }

  /// dz_j with 1-based j.
  static Form dz(int d, int j) { return term(d, {generator_bit(d, j), 0}, GaussianRational(1)); }
  /// dzbar_j with 1-based j.
  static Form dzbar(int d, int j) { return term(d, {0, generator_bit(d, j)}, GaussianRational(1)); }

  int dim() const { return d_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  GaussianRational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  /// True iff every monomial has bidegree (p, q). The zero form is homogeneous
  /// of every bidegree.
  bool is_homogeneous(int p, int q) const {
    for (const auto& [m, c] : terms_)
      if (m.p() != p || m.q() != q) return false;
    return true;
  }

  /// True iff every monomial has total degree `k`.
  bool has_total_degree(int k) const {
    for (const auto& [m, c] : terms_)
      if (m.degree() != k) return false;
    return true;
  }

  /// Total degree of a homogeneous nonzero form; -1 for zero or mixed degree.
  int total_degree() const {
    if (terms_.empty()) return -1;
    int k = terms_.begin()->first.degree();
    return has_total_degree(k) ? k : -1;
  }

  /// Adds c * m (m canonical). Keeps the zero-free invariant.
  void add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Form& operator+=(const Form& o) {
    require_same_dim(o, "+");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Form& operator-=(const Form& o) {
    require_same_dim(o, "-");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Form& operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  Form operator-() const {
    Form r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const GaussianRational& s) { return a *= s; }
  friend Form operator*(const GaussianRational& s, Form a) { return a *= s; }
  friend Form operator*(Form a, const Rational& s) { return a *= GaussianRational(s); }
  friend Form operator*(const Rational& s, Form a) { return a *= GaussianRational(s); }
  friend Form operator*(const Form& a, const Form& b);

  friend bool operator==(const Form& a, const Form& b) { return a.d_ == b.d_ && a.terms_ == b.terms_; }
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

  void require_same_dim(const Form& o, const char* op) const {
    if (d_ != o.d_)
      throw std::invalid_argument(std::string("Form ") + op + ": dimension mismatch (" +
                                  std::to_string(d_) + " vs " + std::to_string(o.d_) + ")");
  }

 private:
  static std::uint32_t generator_bit(int d, int j) {
    if (j < 1 || j > d) throw std::invalid_argument("generator index out of range");
    return 1u << (j - 1);
  }
  void check_monomial(const Monomial& m) const {
    auto mask = detail::full_mask(d_);
    if ((m.holo & ~mask) != 0 || (m.anti & ~mask) != 0)
      throw std::invalid_argument("monomial outside ambient dimension");
  }

  int d_ = 0;
  Terms terms_;
};

inline Form wedge(const Form& a, const Form& b) {
  a.require_same_dim(b, "wedge");
  Form r(a.dim());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      auto [sign, m] = multiply(ma, mb);
      if (sign == 0) continue;
      GaussianRational c = ca * cb;
      r.add_term(m, sign > 0 ? c : -c);
    }
  return r;
}

inline Form operator*(const Form& a, const Form& b) { return wedge(a, b); }

/// k-fold wedge power; power(a, 0) is the unit.
inline Form power(const Form& a, int k) {
  if (k < 0) throw std::invalid_argument("power: negative exponent");
  Form r = Form::one(a.dim());
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

/// Antilinear involution sending bidegree (p,q) to (q,p).
inline Form conjugate(const Form& a) {
  Form r(a.dim());
  for (const auto& [m, c] : a.terms()) {
    // conj(dz_H ^ dzbar_A) = dzbar_H ^ dz_A = (-1)^{|H||A|} dz_A ^ dzbar_H
    bool odd = (m.p() * m.q()) % 2 != 0;
    GaussianRational cc = c.conj();
    r.add_term(Monomial{m.anti, m.holo}, odd ? -cc : cc);
  }
  return r;
}

inline bool is_real(const Form& a) { return conjugate(a) == a; }

/// Coefficient of vol = i dz1^dzbar1 ^ ... ^ i dzd^dzbard on the canonical top
/// monomial dz_{1..d} ^ dzbar_{1..d}: i^d (-1)^{d(d-1)/2}. Reordering the
/// interleaved product moves each dzbar_j past dz_{j+1..d}. The exterior tests
/// rederive this constant by direct expansion for small d.
inline GaussianRational volume_coefficient(int d) {
  GaussianRational c = i_power(d);
  return ((d * (d - 1) / 2) % 2 == 0) ? c : -c;
}

inline Monomial top_monomial(int d) {
  auto m = detail::full_mask(d);
  return {m, m};
}

inline Form volume_form(int d) { return Form::term(d, top_monomial(d), volume_coefficient(d)); }

/// The complex number r with a = r vol. Requires a to be of bidegree (d,d).
inline GaussianRational top_ratio_complex(const Form& a) {
  if (!a.is_homogeneous(a.dim(), a.dim()))
    throw std::invalid_argument("top_ratio: form is not of bidegree (d,d)");
  return a.coefficient(top_monomial(a.dim())) / volume_coefficient(a.dim());
}

/// The rational r with a = r vol, for a real top-degree form.
inline Rational top_ratio(const Form& a) {
  GaussianRational r = top_ratio_complex(a);
  if (!r.is_real()) throw std::invalid_argument("top_ratio: form is not real");
  return r.re();
}

/// d x d Hermitian matrix over Q(i), the coordinate form of a real (1,1)-form
/// alpha = i sum_{j,k} H[j][k] dz_j ^ dzbar_k.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  HermitianMatrix(int d, std::vector<GaussianRational> row_major) : d_(d), a_(std::move(row_major)) {
    if (d < 1 || d > kMaxDimension) throw std::invalid_argument("HermitianMatrix: bad dimension");
    if (a_.size() != static_cast<std::size_t>(d * d))
      throw std::invalid_argument("HermitianMatrix: entry count must be d*d");
    for (int j = 0; j < d; ++j)
      for (int k = j; k < d; ++k)
        if ((*this)(j, k) != (*this)(k, j).conj())
          throw std::invalid_argument("HermitianMatrix: entries are not Hermitian-symmetric");
  }

  static HermitianMatrix identity(int d) {
    std::vector<GaussianRational> e(static_cast<std::size_t>(d * d));
    for (int j = 0; j < d; ++j) e[static_cast<std::size_t>(j * d + j)] = 1;
    return {d, std::move(e)};
  }

  static HermitianMatrix diagonal(const std::vector<Rational>& diag) {
    int d = static_cast<int>(diag.size());
    std::vector<GaussianRational> e(static_cast<std::size_t>(d * d));
    for (int j = 0; j < d; ++j) e[static_cast<std::size_t>(j * d + j)] = diag[static_cast<std::size_t>(j)];
    return {d, std::move(e)};
  }

  int dim() const { return d_; }
  const GaussianRational& operator()(int j, int k) const { return a_.at(static_cast<std::size_t>(j * d_ + k)); }
  const std::vector<GaussianRational>& entries() const { return a_; }

  friend bool operator==(const HermitianMatrix& a, const HermitianMatrix& b) {
    return a.d_ == b.d_ && a.a_ == b.a_;
  }

 private:
  int d_ = 0;
  std::vector<GaussianRational> a_;
};

inline Form hermitian_to_form(const HermitianMatrix& h) {
  int d = h.dim();
  Form f(d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      f.add_term(Monomial{1u << j, 1u << k}, GaussianRational::i() * h(j, k));
  return f;
}

inline HermitianMatrix form_to_hermitian(const Form& a) {
  if (!a.is_homogeneous(1, 1)) throw std::invalid_argument("form_to_hermitian: not a (1,1)-form");
  if (!is_real(a)) throw std::invalid_argument("form_to_hermitian: form is not real");
  int d = a.dim();
  if (d < 1) throw std::invalid_argument("form_to_hermitian: dimension must be positive");
  std::vector<GaussianRational> e(static_cast<std::size_t>(d * d));
  const GaussianRational minus_i(Rational(0), Rational(-1));
  for (const auto& [m, c] : a.terms()) {
    int j = std::countr_zero(m.holo), k = std::countr_zero(m.anti);
    e[static_cast<std::size_t>(j * d + k)] = minus_i * c;
  }
  return {d, std::move(e)};
}

/// Dimension of the real space of real (1,1)-forms.
inline std::size_t h11(int d) { return static_cast<std::size_t>(d * d); }

/// Ordered real basis of real (1,1)-forms, d^2 elements:
///   i dz_j ^ dzbar_j                       for j = 1..d, then for each j < k
///   i (dz_j ^ dzbar_k + dz_k ^ dzbar_j)    (Hermitian matrix E_jk + E_kj)
///   dz_j ^ dzbar_k - dz_k ^ dzbar_j        (Hermitian matrix -i E_jk + i E_kj)
/// The antisymmetric generator carries scaling constant 1.
inline std::vector<Form> basis_11_real(int d) {
  if (d < 1) throw std::invalid_argument("basis_11_real: d must be positive");
  std::vector<Form> basis;
  basis.reserve(h11(d));
  const GaussianRational i = GaussianRational::i();
  for (int j = 0; j < d; ++j) basis.push_back(Form::term(d, {1u << j, 1u << j}, i));
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      Form sym(d), anti(d);
      sym.add_term({1u << j, 1u << k}, i);
      sym.add_term({1u << k, 1u << j}, i);
      anti.add_term({1u << j, 1u << k}, GaussianRational(1));
      anti.add_term({1u << k, 1u << j}, GaussianRational(-1));
      basis.push_back(std::move(sym));
      basis.push_back(std::move(anti));
    }
  return basis;
}

/// Coordinates of a real (1,1)-form with respect to basis_11_real(d).
inline Vector coordinates_11(const Form& a) {
  HermitianMatrix h = form_to_hermitian(a);
  int d = h.dim();
  Vector v;
  v.reserve(h11(d));
  for (int j = 0; j < d; ++j) v.push_back(h(j, j).re());
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      v.push_back(h(j, k).re());
      v.push_back(-h(j, k).im());
    }
  return v;
}

inline Form form_from_coordinates(int d, const Vector& v) {
  if (v.size() != h11(d)) throw std::invalid_argument("form_from_coordinates: expected d^2 coordinates");
  auto basis = basis_11_real(d);
  Form f(d);
  for (std::size_t n = 0; n < v.size(); ++n)
    if (sgn(v[n]) != 0) f += basis[n] * v[n];
  return f;
}

inline std::ostream& operator<<(std::ostream& os, const Form& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (int j = 0; j < f.dim(); ++j)
      if (m.holo & (1u << j)) os << " dz" << j + 1;
    for (int j = 0; j < f.dim(); ++j)
      if (m.anti & (1u << j)) os << " dzb" << j + 1;
  }
  return os;
}

}  // namespace hrlab
