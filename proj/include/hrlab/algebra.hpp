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

// Commutative coefficient rings used by the symmetric-function code.
//
// The Schur and Chern routines in symfunc.hpp are written once against a
// minimal ring interface (+, -, *, scaling by Rational) and instantiated with
//   - Form restricted to even degrees (even forms commute under wedge),
//   - MPoly, polynomials in commuting scalar variables,
//   - PolyOver<R>, polynomials in one central variable over any of the above,
//     optionally truncated (R[z]/(z^{cap+1})).
// zero_like / one_like produce the additive and multiplicative units matching
// an exemplar (a Form needs its ambient dimension, an MPoly its variable count).

#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "hrlab/exterior.hpp"
#include "hrlab/rational.hpp"

namespace hrlab {

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Form zero_like(const Form& f) { return Form(f.dim()); }
inline Form one_like(const Form& f) { return Form::one(f.dim()); }

/// Polynomial with rational coefficients in a fixed number of commuting variables.
class MPoly {
 public:
  using Exponents = std::vector<int>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : n_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rational& c) {
    MPoly p(nvars);
    p.add(Exponents(nvars, 0), c);
    return p;
  }
  static MPoly variable(std::size_t nvars, std::size_t k) {
    if (k >= nvars) throw std::invalid_argument("MPoly::variable: index out of range");
    Exponents e(nvars, 0);
    e[k] = 1;
    MPoly p(nvars);
    p.add(e, Rational(1));
    return p;
  }

  std::size_t nvars() const { return n_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Exponents& e, const Rational& c) {
    if (e.size() != n_) throw std::invalid_argument("MPoly: exponent length mismatch");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  /// Every coefficient is a non-negative integer.
  bool is_monomial_positive() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
      return sgn(t.second) >= 0 && t.second.get_den() == 1;
    });
  }

  MPoly& operator+=(const MPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
  }
  MPoly& operator*=(const Rational& s) {
    if (sgn(s) == 0) terms_.clear();
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  MPoly operator-() const { return MPoly(*this) *= Rational(-1); }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
  friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check(b);
    MPoly r(a.n_);
    Exponents e(a.n_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < a.n_; ++k) e[k] = ea[k] + eb[k];
        r.add(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const MPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [e, c] : p.terms_) {
      os << (first ? "" : " + ") << c;
      first = false;
      for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k] != 0) os << "*x" << k + 1 << "^" << e[k];
    }
    return os;
  }

 private:
  void check(const MPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("MPoly: variable count mismatch");
  }

  std::size_t n_ = 0;
  std::map<Exponents, Rational> terms_;
};

inline MPoly zero_like(const MPoly& p) { return MPoly(p.nvars()); }
inline MPoly one_like(const MPoly& p) { return MPoly::constant(p.nvars(), Rational(1)); }

/// Polynomial in one central variable z with coefficients in R. With a
/// truncation degree `cap` >= 0 it models R[z]/(z^{cap+1}); cap < 0 means no
/// truncation.
template <class R>
class PolyOver {
 public:
  PolyOver(R zero, int cap = -1) : zero_(std::move(zero)), cap_(cap) {}

  /// The constant polynomial c.
  static PolyOver constant(const R& c, int cap = -1) {
    PolyOver p(zero_like(c), cap);
    p.set(0, c);
    return p;
  }
  /// The variable z itself.
  static PolyOver variable(const R& exemplar, int cap = -1) {
    PolyOver p(zero_like(exemplar), cap);
    p.set(1, one_like(exemplar));
    return p;
  }

  int cap() const { return cap_; }
  const R& zero() const { return zero_; }
  /// Highest stored index plus one (may include trailing zeros).
  std::size_t length() const { return c_.size(); }

  R coefficient(int j) const {
    if (j < 0 || static_cast<std::size_t>(j) >= c_.size()) return zero_;
    return c_[static_cast<std::size_t>(j)];
  }

  void set(int j, const R& v) {
    if (j < 0) throw std::invalid_argument("PolyOver: negative degree");
    if (cap_ >= 0 && j > cap_) return;
    if (static_cast<std::size_t>(j) >= c_.size()) c_.resize(static_cast<std::size_t>(j) + 1, zero_);
    c_[static_cast<std::size_t>(j)] = v;
  }

  PolyOver& operator+=(const PolyOver& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    return *this;
  }
  PolyOver& operator-=(const PolyOver& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
    return *this;
  }
  PolyOver& operator*=(const Rational& s) {
    for (auto& v : c_) v = v * s;
    return *this;
  }
  PolyOver operator-() const { return PolyOver(*this) *= Rational(-1); }

  friend PolyOver operator+(PolyOver a, const PolyOver& b) { return a += b; }
  friend PolyOver operator-(PolyOver a, const PolyOver& b) { return a -= b; }
  friend PolyOver operator*(PolyOver a, const Rational& s) { return a *= s; }
  friend PolyOver operator*(const Rational& s, PolyOver a) { return a *= s; }
  friend PolyOver operator*(const PolyOver& a, const PolyOver& b) {
    int cap = a.cap_ < 0 ? b.cap_ : (b.cap_ < 0 ? a.cap_ : std::min(a.cap_, b.cap_));
    PolyOver r(a.zero_, cap);
    if (a.c_.empty() || b.c_.empty()) return r;
    std::size_t n = a.c_.size() + b.c_.size() - 1;
    if (cap >= 0) n = std::min(n, static_cast<std::size_t>(cap) + 1);
    r.c_.assign(n, a.zero_);
    for (std::size_t i = 0; i < a.c_.size() && i < n; ++i)
      for (std::size_t j = 0; j < b.c_.size() && i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    return r;
  }

  friend bool operator==(const PolyOver& a, const PolyOver& b) {
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    for (std::size_t j = 0; j < n; ++j)
      if (a.coefficient(static_cast<int>(j)) != b.coefficient(static_cast<int>(j))) return false;
    return true;
  }

 private:
  R zero_;
  int cap_;
  std::vector<R> c_;
};

template <class R>
PolyOver<R> zero_like(const PolyOver<R>& p) {
  return PolyOver<R>(p.zero(), p.cap());
}
template <class R>
PolyOver<R> one_like(const PolyOver<R>& p) {
  return PolyOver<R>::constant(one_like(p.zero()), p.cap());
}

/// a^k in any of the rings above; a^0 = 1.
template <class R>
R ring_power(const R& a, int k) {
  R r = one_like(a);
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

}  // namespace hrlab
