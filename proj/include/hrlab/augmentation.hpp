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

// Augmentation: families of bilinear forms on V = W + R zeta and the checks
// that upgrade weak Hodge-Riemann families to Hodge-Riemann forms.
//
// Linear model. W is the space of real (1,1)-forms on a d-dimensional E with
// basis basis_11_real(d); zeta is one extra basis vector placed last. The
// projective factor is the truncated ring R[zeta]/(zeta^{d+1}) with the
// integral picking the coefficient of vol * zeta^d. For a partition lambda of
// d-2, strictly positive omega_1..omega_e and a strictly positive h in W:
//
//   Q_i(b, b') = integral of b s_lambda(omega + zeta) zeta^i h^{d-i} b',  0 <= i <= d,
//
// which in coordinates reads (s^(j) the derived Schur polynomials)
//
//   Q_i(a, a')       = (a ^ s^(d-i) ^ h^{d-i} ^ a') / vol     a, a' in W
//   Q_i(a, zeta)     = (a ^ s^(d-i-1) ^ h^{d-i}) / vol
//   Q_i(zeta, zeta)  = (s^(d-i-2) ^ h^{d-i}) / vol
//
// and R_{i,t} = sum_{k=0}^{i} C(d-i+k, k) t^k Q_{i-k}. Both constructions of
// Q_i are implemented and must agree exactly.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hrlab/algebra.hpp"
#include "hrlab/bilinear.hpp"
#include "hrlab/exterior.hpp"
#include "hrlab/positivity.hpp"
#include "hrlab/random.hpp"
#include "hrlab/symfunc.hpp"

namespace hrlab {

/// V = W + R zeta with the data h, omega_1..omega_e.
class AugmentedSpace {
 public:
  AugmentedSpace(int d, std::vector<Form> omega, Form h) : d_(d), omega_(std::move(omega)), h_(std::move(h)) {
    if (d < 2 || d > kMaxDimension) throw std::invalid_argument("AugmentedSpace: d must lie in [2, 8]");
    if (omega_.empty()) throw std::invalid_argument("AugmentedSpace: need e >= 1 forms");
    for (const Form& w : omega_) {
      if (w.dim() != d) throw std::invalid_argument("AugmentedSpace: omega has wrong dimension");
      if (!is_strictly_positive_11(w)) throw std::invalid_argument("AugmentedSpace: omega_j is not strictly positive");
    }
    if (h_.dim() != d || !is_strictly_positive_11(h_))
      throw std::invalid_argument("AugmentedSpace: h is not a strictly positive (1,1)-form");
  }

  /// omega and h drawn as B*B + I from one seeded stream (h first).
  static AugmentedSpace random(int d, int e, std::uint64_t seed) {
    Rng rng(seed);
    Form h = hermitian_to_form(random_positive_hermitian(d, rng));
    auto omega = random_positive_forms(d, e, rng);
    return {d, std::move(omega), std::move(h)};
  }

  int d() const { return d_; }
  int e() const { return static_cast<int>(omega_.size()); }
  const std::vector<Form>& omega() const { return omega_; }
  const Form& h() const { return h_; }

  std::size_t w_dim() const { return h11(d_); }
  std::size_t v_dim() const { return h11(d_) + 1; }
  std::size_t zeta_index() const { return h11(d_); }

  /// h in V coordinates (zero zeta component).
  Vector h_vector() const {
    Vector v = coordinates_11(h_);
    v.push_back(Rational(0));
    return v;
  }
  Vector zeta_vector() const { return unit_vector(v_dim(), zeta_index()); }

  std::string basis_tag() const { return "basis_11_real(" + std::to_string(d_) + ")+zeta"; }

 private:
  int d_;
  std::vector<Form> omega_;
  Form h_;
};

/// Polynomial family t -> sum_k t^k C_k of symmetric bilinear forms.
class FormFamily {
 public:
  explicit FormFamily(std::vector<SymBilinearForm> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("FormFamily: need at least one coefficient");
    for (const auto& q : c_)
      if (q.dim() != c_.front().dim()) throw std::invalid_argument("FormFamily: coefficient dimensions differ");
  }
  static FormFamily zero(std::size_t n, std::string tag) { return FormFamily({SymBilinearForm::zero(n, std::move(tag))}); }

  std::size_t dim() const { return c_.front().dim(); }
  const std::vector<SymBilinearForm>& coefficients() const { return c_; }
  const std::string& basis_tag() const { return c_.front().basis_tag(); }

  /// Exact Horner evaluation.
  SymBilinearForm eval(const Rational& t) const {
    Matrix acc = c_.back().matrix();
    for (std::size_t k = c_.size() - 1; k-- > 0;) acc = acc * t + c_[k].matrix();
    return {std::move(acc), basis_tag()};
  }

  FormFamily derivative() const {
    if (c_.size() == 1) return zero(dim(), basis_tag());
    std::vector<SymBilinearForm> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k].scaled(Rational(static_cast<long>(k))));
    return FormFamily(std::move(d));
  }

  /// Coefficient-wise equality, ignoring trailing zero coefficients.
  friend bool operator==(const FormFamily& a, const FormFamily& b) {
    if (a.dim() != b.dim()) return false;
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    for (std::size_t k = 0; k < n; ++k) {
      Matrix ma = k < a.c_.size() ? a.c_[k].matrix() : Matrix(a.dim(), a.dim());
      Matrix mb = k < b.c_.size() ? b.c_[k].matrix() : Matrix(b.dim(), b.dim());
      if (ma != mb) return false;
    }
    return true;
  }

  FormFamily scaled(const Rational& s) const {
    std::vector<SymBilinearForm> out;
    for (const auto& q : c_) out.push_back(q.scaled(s));
    return FormFamily(std::move(out));
  }

 private:
  std::vector<SymBilinearForm> c_;
};

inline SymBilinearForm family_eval(const FormFamily& f, const Rational& t) { return f.eval(t); }
inline FormFamily family_derivative(const FormFamily& f) { return f.derivative(); }

/// Drops the zeta row and column.
inline SymBilinearForm restrict_to_w(const SymBilinearForm& q, std::size_t zeta) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < q.dim(); ++j)
    if (j != zeta) cols.push_back(unit_vector(q.dim(), j));
  return q.restrict_to(cols, "W");
}

inline Vector drop_index(const Vector& v, std::size_t k) {
  Vector r;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (j != k) r.push_back(v[j]);
  return r;
}

/// Q_i and R_{i,t} for one (space, lambda). Derived Schur forms and powers of h
/// are computed once.
class AugmentationModel {
 public:
  AugmentationModel(AugmentedSpace space, Partition lambda) : space_(std::move(space)), lambda_(std::move(lambda)) {
    const int d = space_.d();
    if (lambda_.weight() != d - 2)
      throw std::invalid_argument("AugmentationModel: partition must have weight d-2");
    derived_ = derived_schur_all<Form>(lambda_, space_.omega(), Form::one(d));
    h_pow_.push_back(Form::one(d));
    for (int k = 1; k <= d; ++k) h_pow_.push_back(h_pow_.back() * space_.h());
    basis_ = basis_11_real(d);
    for (int i = 0; i <= d; ++i) q_.push_back(compute_q(i));
  }

  const AugmentedSpace& space() const { return space_; }
  const Partition& lambda() const { return lambda_; }
  int d() const { return space_.d(); }

  /// s_lambda^{(j)}(omega), zero outside [0, |lambda|].
  Form derived(int j) const {
    if (j < 0 || j >= static_cast<int>(derived_.size())) return Form(d());
    return derived_[static_cast<std::size_t>(j)];
  }

  /// Q_i from the three-case coordinate formula; zero for i outside [0, d].
  SymBilinearForm q(int i) const {
    if (i < 0 || i > d()) return SymBilinearForm::zero(space_.v_dim(), space_.basis_tag());
    return q_[static_cast<std::size_t>(i)];
  }

  /// Q_i by direct expansion of b s_lambda(omega + zeta) zeta^i h^{d-i} b' in
  /// (even forms)[zeta]/(zeta^{d+1}), integrating the zeta^d coefficient.
  SymBilinearForm q_product(int i) const {
    const int d = this->d();
    const std::size_t n = space_.v_dim();
    if (i < 0 || i > d) return SymBilinearForm::zero(n, space_.basis_tag());
    using T = PolyOver<Form>;
    const Form one = Form::one(d);
    const T zeta = T::variable(one, d);
    std::vector<T> shifted;
    for (const Form& w : space_.omega()) shifted.push_back(T::constant(w, d) + zeta);
    T middle = schur<T>(lambda_, shifted, T::constant(one, d));
    middle = middle * ring_power(zeta, i) * T::constant(h_pow_[static_cast<std::size_t>(d - i)], d);
    std::vector<T> vecs;
    for (const Form& b : basis_) vecs.push_back(T::constant(b, d));
    vecs.push_back(zeta);
    Matrix g(n, n);
    for (std::size_t b = 0; b < n; ++b) {
      T right = middle * vecs[b];
      for (std::size_t a = 0; a < n; ++a) {
        Form top = (vecs[a] * right).coefficient(d);
        g(a, b) = top.is_zero() ? Rational(0) : top_ratio(top);
      }
    }
    return {std::move(g), space_.basis_tag()};
  }

  /// R_{i,t} = sum_{k=0}^{i} C(d-i+k, k) t^k Q_{i-k}; the zero family outside [0, d].
  FormFamily r(int i) const {
    const int d = this->d();
    if (i < 0 || i > d) return FormFamily::zero(space_.v_dim(), space_.basis_tag());
    std::vector<SymBilinearForm> c;
    for (int k = 0; k <= i; ++k) c.push_back(q(i - k).scaled(binomial(d - i + k, k)));
    return FormFamily(std::move(c));
  }

 private:
  AugmentedSpace space_;
  Partition lambda_;
  std::vector<Form> derived_;
  std::vector<Form> h_pow_;
  std::vector<Form> basis_;
  std::vector<SymBilinearForm> q_;

  SymBilinearForm compute_q(int i) const {
    const int d = this->d();
    const std::size_t n = space_.v_dim(), z = space_.zeta_index();
    if (i < 0 || i > d) return SymBilinearForm::zero(n, space_.basis_tag());
    const Form& hp = h_pow_[static_cast<std::size_t>(d - i)];
    Matrix g(n, n);
    Form ww = derived(d - i) * hp;
    if (!ww.is_zero()) {
      SymBilinearForm gw = gram(ww);
      for (std::size_t a = 0; a < z; ++a)
        for (std::size_t b = 0; b < z; ++b) g(a, b) = gw(a, b);
    }
    Form wz = derived(d - i - 1) * hp;
    if (!wz.is_zero())
      for (std::size_t a = 0; a < z; ++a) {
        g(a, z) = top_ratio(basis_[a] * wz);
        g(z, a) = g(a, z);
      }
    Form zz = derived(d - i - 2) * hp;
    if (!zz.is_zero()) g(z, z) = top_ratio(zz);
    return {std::move(g), space_.basis_tag()};
  }
};

inline SymBilinearForm build_Qi(const AugmentedSpace& space, const Partition& lambda, int i) {
  return AugmentationModel(space, lambda).q(i);
}
inline SymBilinearForm build_Qi_product(const AugmentedSpace& space, const Partition& lambda, int i) {
  return AugmentationModel(space, lambda).q_product(i);
}
inline FormFamily build_R(const AugmentedSpace& space, const Partition& lambda, int i) {
  return AugmentationModel(space, lambda).r(i);
}

/// Default sample grid for the small-|t| conditions: 0, +-1/100, +-1/10.
inline std::vector<Rational> default_t_samples() {
  return {Rational(0), Rational(1, 100), Rational(-1, 100), Rational(1, 10), Rational(-1, 10)};
}

/// Weak-HR verdict of R_t at one sample, decided twice: by the one-positive-
/// direction characterisation and by PSD-ness of the Hodge-index defect.
struct WeakHrSample {
  Rational t;
  Signature sig;
  bool weak_hr = false;
  bool defect_psd = false;
  bool pass() const { return weak_hr && defect_psd; }
  bool consistent() const { return weak_hr == defect_psd; }
};

struct PsdSample {
  Rational t;
  bool psd = false;
};

/// The quadratic form S(b) = 2 R'(b,h) R(b,h) - R'(b) R(h). S is PSD iff
/// R'(b) R(h) <= 2 R'(b,h) R(b,h) holds for every b.
inline SymBilinearForm derivative_inequality_form(const SymBilinearForm& r, const SymBilinearForm& rp, const Vector& h) {
  Vector rh = r.matrix() * h, rph = rp.matrix() * h;
  Rational rhh = dot(h, rh);
  const std::size_t n = r.dim();
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = rph[i] * rh[j] + rh[i] * rph[j] - rhh * rp(i, j);
  return {std::move(s), r.basis_tag()};
}

inline WeakHrSample weak_hr_sample(const SymBilinearForm& q, const Vector& h, const Rational& t) {
  WeakHrSample s;
  s.t = t;
  s.sig = signature(q);
  s.weak_hr = is_weak_hr_wrt(q, h);
  s.defect_psd = sgn(q.value(h)) > 0 && is_positive_semidefinite(hodge_index_defect(q, h));
  return s;
}

/// Largest |t| such that every sample with |t'| <= |t| passes; nullopt if t=0
/// was not sampled or fails.
template <class Sample, class Pred>
std::optional<Rational> passing_radius(const std::vector<Sample>& samples, Pred pass) {
  std::optional<Rational> best;
  std::vector<Rational> radii;
  for (const auto& s : samples) radii.push_back(abs(s.t));
  std::sort(radii.begin(), radii.end());
  for (const auto& r : radii) {
    bool ok = true, has = false;
    for (const auto& s : samples)
      if (abs(s.t) <= r) {
        has = true;
        ok = ok && pass(s);
      }
    if (!has || !ok) break;
    best = r;
  }
  if (best && sgn(*best) == 0) {
    bool zero_sampled = false;
    for (const auto& s : samples) zero_sampled = zero_sampled || sgn(s.t) == 0;
    if (!zero_sampled) best.reset();
  }
  return best;
}

struct PropertyAReport {
  bool a1 = false, a2 = false, a3 = false, a4 = false, a5 = false;
  Rational r0_h, rp0_h, r0_zeta_h;
  std::vector<WeakHrSample> a2_samples;
  std::optional<Rational> a2_radius;
  Signature a3_signature;
  /// The constant c with R'_0(b, zeta) = c R_0(b, h); absent when R_0(., h) = 0.
  std::optional<Rational> a4_constant;
  bool all() const { return a1 && a2 && a3 && a4 && a5; }
};

inline PropertyAReport check_property_A(const FormFamily& f, const Vector& h, std::size_t zeta,
                                        const std::vector<Rational>& t_samples) {
  PropertyAReport rep;
  const FormFamily fp = f.derivative();
  const SymBilinearForm r0 = f.eval(0), rp0 = fp.eval(0);
  const Vector zvec = unit_vector(f.dim(), zeta);
  rep.r0_h = r0.value(h);
  rep.rp0_h = rp0.value(h);
  rep.a1 = sgn(rep.r0_h) > 0 && sgn(rep.rp0_h) > 0;

  rep.a2 = true;
  for (const auto& t : t_samples) {
    rep.a2_samples.push_back(weak_hr_sample(f.eval(t), h, t));
    rep.a2 = rep.a2 && rep.a2_samples.back().pass();
  }
  rep.a2_radius = passing_radius(rep.a2_samples, [](const WeakHrSample& s) { return s.pass(); });

  rep.a3_signature = signature(derivative_inequality_form(r0, rp0, h));
  rep.a3 = rep.a3_signature.n_minus == 0;

  Vector r0h = r0.matrix() * h;
  Vector rp0z = rp0.matrix() * zvec;
  std::size_t p = 0;
  while (p < r0h.size() && sgn(r0h[p]) == 0) ++p;
  if (p < r0h.size()) {
    Rational c = rp0z[p] / r0h[p];
    rep.a4_constant = c;
    rep.a4 = true;
    for (std::size_t j = 0; j < r0h.size(); ++j) rep.a4 = rep.a4 && rp0z[j] == c * r0h[j];
  } else {
    rep.a4 = is_zero_vector(rp0z);
  }

  rep.r0_zeta_h = r0.value(zvec, h);
  rep.a5 = sgn(rep.r0_zeta_h) > 0;
  return rep;
}

struct PropertyBReport {
  bool b1 = false, b2 = false, b3 = false, b4 = false, b5 = false;
  std::vector<WeakHrSample> b2_samples;
  std::vector<PsdSample> b3_samples;
  std::optional<Rational> b2_radius, b3_radius;
  bool all() const { return b1 && b2 && b3 && b4 && b5; }
};

inline PropertyBReport check_property_B(const FormFamily& f, const Vector& h, std::size_t zeta,
                                        const std::vector<Rational>& t_samples) {
  PropertyBReport rep;
  const FormFamily fp = f.derivative();
  const FormFamily fpp = fp.derivative();
  const SymBilinearForm r0 = f.eval(0), rp0 = fp.eval(0), rpp0 = fpp.eval(0);
  const Vector zvec = unit_vector(f.dim(), zeta);
  rep.b1 = sgn(r0.value(h)) > 0;

  rep.b2 = true;
  rep.b3 = true;
  for (const auto& t : t_samples) {
    SymBilinearForm rt = f.eval(t), rpt = fp.eval(t);
    rep.b2_samples.push_back(weak_hr_sample(rt, h, t));
    rep.b2 = rep.b2 && rep.b2_samples.back().pass();
    PsdSample s{t, is_positive_semidefinite(derivative_inequality_form(rt, rpt, h))};
    rep.b3_samples.push_back(s);
    rep.b3 = rep.b3 && s.psd;
  }
  rep.b2_radius = passing_radius(rep.b2_samples, [](const WeakHrSample& s) { return s.pass(); });
  rep.b3_radius = passing_radius(rep.b3_samples, [](const PsdSample& s) { return s.psd; });

  Vector rpp_z = rpp0.matrix() * zvec;
  Vector rp_h = rp0.matrix() * h;
  rep.b4 = true;
  for (std::size_t a = 0; a < f.dim(); ++a)
    if (a != zeta) rep.b4 = rep.b4 && rpp_z[a] == 2 * rp_h[a];
  rep.b5 = rpp0.value(zvec) == 2 * r0.value(h);
  return rep;
}

enum class Verdict { kConsistent, kNotApplicable, kInconsistent };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kConsistent: return "CONSISTENT";
    case Verdict::kNotApplicable: return "NOT-APPLICABLE";
    case Verdict::kInconsistent: return "INCONSISTENT";
  }
  return "?";
}

/// Outcome of checking a theorem on an instance: hypothesis flags, the
/// independently tested conclusion and the combined verdict. Hypotheses true
/// with the conclusion false is INCONSISTENT, which indicts the code.
struct TheoremReport {
  std::vector<std::pair<std::string, bool>> hypotheses;
  std::vector<std::pair<std::string, bool>> conclusions;
  Verdict verdict = Verdict::kNotApplicable;

  bool hypotheses_hold() const {
    for (const auto& [name, ok] : hypotheses)
      if (!ok) return false;
    return true;
  }
  bool conclusions_hold() const {
    for (const auto& [name, ok] : conclusions)
      if (!ok) return false;
    return true;
  }
  void settle() {
    if (!hypotheses_hold())
      verdict = Verdict::kNotApplicable;
    else
      verdict = conclusions_hold() ? Verdict::kConsistent : Verdict::kInconsistent;
  }
};

struct Augmentation1Report {
  PropertyAReport property_a;
  TheoremReport theorem;
};

/// Property (A) and R'_0 HR w.r.t. h imply R_0 HR w.r.t. h.
inline Augmentation1Report verify_augmentation1(const FormFamily& f, const Vector& h, std::size_t zeta,
                                                const std::vector<Rational>& t_samples) {
  Augmentation1Report rep;
  rep.property_a = check_property_A(f, h, zeta, t_samples);
  rep.theorem.hypotheses = {{"property_A", rep.property_a.all()},
                            {"derivative_hr", is_hr_wrt(f.derivative().eval(0), h)}};
  rep.theorem.conclusions = {{"r0_hr", is_hr_wrt(f.eval(0), h)}};
  rep.theorem.settle();
  return rep;
}

struct RecursionReport {
  int j = 0;
  /// Property (A) reports for i = 2..j (index i-2).
  std::vector<PropertyAReport> property_a;
  std::vector<Signature> r_signatures;  // R_{i,0} for i = 2..j
  TheoremReport theorem;
};

/// Recursive augmentation on R_{1..j}. For i >= 3 hypothesis (1) is the full
/// property (A). For i = 2 the derivative clause R'_{2,0}(h) > 0 of (A1) is
/// not required: R'_{2,0} = (d-1) Q_1 and Q_1(h) = 0 identically, while the
/// base case of the induction only uses R_{2,0}(h) > 0, (A2), (A4) and (A5).
inline RecursionReport verify_recursion(const AugmentationModel& model, int j, const std::vector<Rational>& t_samples) {
  const int d = model.d();
  if (j < 2 || j > d - 1) throw std::invalid_argument("verify_recursion: need 2 <= j <= d-1");
  const AugmentedSpace& space = model.space();
  const Vector h = space.h_vector();
  const std::size_t z = space.zeta_index();
  RecursionReport rep;
  rep.j = j;

  std::vector<FormFamily> fam;
  for (int i = 0; i <= j; ++i) fam.push_back(model.r(i));

  bool h1 = true, h2 = true;
  for (int i = 2; i <= j; ++i) {
    PropertyAReport a = check_property_A(fam[static_cast<std::size_t>(i)], h, z, t_samples);
    bool ok = (i == 2) ? (sgn(a.r0_h) > 0 && a.a2 && a.a3 && a.a4 && a.a5) : a.all();
    h1 = h1 && ok;
    rep.property_a.push_back(std::move(a));
    Rational ci(d - i + 1);
    SymBilinearForm lhs = fam[static_cast<std::size_t>(i)].derivative().eval(0);
    SymBilinearForm rhs = fam[static_cast<std::size_t>(i - 1)].eval(0).scaled(ci);
    h2 = h2 && sgn(ci) > 0 && lhs == rhs;
  }
  bool h3 = restrict_to_w(fam[1].eval(0), z).matrix().is_zero();
  bool h4 = is_hr_wrt(restrict_to_w(fam[2].eval(0), z), drop_index(h, z));
  const auto& c2 = rep.property_a.front().a4_constant;
  bool h5 = c2.has_value() && sgn(*c2) != 0;
  rep.theorem.hypotheses = {{"property_A", h1}, {"derivative_recursion", h2}, {"r1_vanishes_on_W", h3},
                            {"r2_hr_on_W", h4}, {"c_R2_nonzero", h5}};
  for (int i = 2; i <= j; ++i) {
    SymBilinearForm r0 = fam[static_cast<std::size_t>(i)].eval(0);
    rep.r_signatures.push_back(signature(r0));
    rep.theorem.conclusions.emplace_back("r" + std::to_string(i) + "_hr", is_hr_wrt(r0, h));
  }
  rep.theorem.settle();
  return rep;
}

struct Augmentation2Report {
  PropertyBReport property_b;
  Signature second_derivative_signature;
  /// Signature of R_{d,0}|_W, i.e. of the intersection form of s_lambda(omega).
  Signature restricted_signature;
  TheoremReport theorem;
};

/// Property (B) and R''_0 HR w.r.t. h imply R_{d,0}|_W HR w.r.t. h.
inline Augmentation2Report verify_augmentation2(const AugmentationModel& model, const std::vector<Rational>& t_samples) {
  const int d = model.d();
  const AugmentedSpace& space = model.space();
  const Vector h = space.h_vector();
  const std::size_t z = space.zeta_index();
  FormFamily f = model.r(d);
  Augmentation2Report rep;
  rep.property_b = check_property_B(f, h, z, t_samples);
  SymBilinearForm rpp = f.derivative().derivative().eval(0);
  rep.second_derivative_signature = signature(rpp);
  SymBilinearForm w = restrict_to_w(f.eval(0), z);
  rep.restricted_signature = signature(w);
  rep.theorem.hypotheses = {{"property_B", rep.property_b.all()}, {"second_derivative_hr", is_hr_wrt(rpp, h)}};
  rep.theorem.conclusions = {{"r0_hr_on_W", is_hr_wrt(w, drop_index(h, z))}};
  rep.theorem.settle();
  return rep;
}

/// R_t(x) = (1+t) x1^2 + 2 x1 x2 + (1-t) x2^2 - (1+t) sum_{i>=3} x_i^2 on R^n:
/// weak HR w.r.t. e1 at t = 0 with a one-dimensional kernel, HR for small t != 0.
inline FormFamily remark_family(std::size_t n = 3) {
  if (n < 2) throw std::invalid_argument("remark_family: need n >= 2");
  Matrix c0(n, n), c1(n, n);
  c0(0, 0) = 1;
  c0(0, 1) = c0(1, 0) = 1;
  c0(1, 1) = 1;
  c1(0, 0) = 1;
  c1(1, 1) = -1;
  for (std::size_t i = 2; i < n; ++i) {
    c0(i, i) = -1;
    c1(i, i) = -1;
  }
  return FormFamily({SymBilinearForm(c0, "R^" + std::to_string(n)), SymBilinearForm(c1, "R^" + std::to_string(n))});
}

}  // namespace hrlab
