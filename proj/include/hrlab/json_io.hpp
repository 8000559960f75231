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

// JSON encodings. Rationals are canonical strings ("3", "-1/2"); Gaussian
// rationals are {"re", "im"}; monomial indices are 1-based.
//
//   Form            {"d": 2, "terms": [{"dz": [1], "dzbar": [2], "coeff": {"re": "0", "im": "1"}}]}
//   Hermitian       {"d": 2, "entries": [[{"re","im"}, ...], ...]}
//   SymBilinearForm {"basis_tag": "...", "matrix": [["1", "0"], ["0", "-1"]]}

#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "hrlab/augmentation.hpp"
#include "hrlab/bilinear.hpp"
#include "hrlab/exterior.hpp"
#include "hrlab/positivity.hpp"
#include "hrlab/symfunc.hpp"

namespace hrlab {

using json = nlohmann::json;

inline json rational_to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational string");
}

inline json to_json(const GaussianRational& z) { return {{"re", to_string(z.re())}, {"im", to_string(z.im())}}; }

inline GaussianRational gaussian_from_json(const json& j) {
  if (!j.is_object()) return {rational_from_json(j), Rational(0)};
  Rational re = j.contains("re") ? rational_from_json(j.at("re")) : Rational(0);
  Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
  return {re, im};
}

namespace detail {
inline json mask_to_json(std::uint32_t m) {
  json a = json::array();
  for (int k = 0; k < 32; ++k)
    if (m & (1u << k)) a.push_back(k + 1);
  return a;
}

inline std::uint32_t mask_from_json(const json& a, int d) {
  std::uint32_t m = 0;
  for (const auto& v : a) {
    int k = v.get<int>();
    if (k < 1 || k > d) throw std::invalid_argument("monomial index out of range");
    if (m & (1u << (k - 1))) throw std::invalid_argument("repeated monomial index");
    m |= 1u << (k - 1);
  }
  return m;
}

/// Sign of the permutation sorting `idx` ascending.
inline int sort_sign(std::vector<int> idx) {
  int sign = 1;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (idx[a] > idx[b]) sign = -sign;
  return sign;
}
}  // namespace detail

inline json to_json(const Form& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms())
    terms.push_back({{"dz", detail::mask_to_json(m.holo)}, {"dzbar", detail::mask_to_json(m.anti)}, {"coeff", to_json(c)}});
  return {{"d", f.dim()}, {"terms", terms}};
}

/// Accepts index lists in any order; the factor order dz..., dzbar... is
/// reordered to canonical form with its sign.
inline Form form_from_json(const json& j) {
  int d = j.at("d").get<int>();
  if (d < 1 || d > kMaxDimension) throw std::invalid_argument("form dimension out of range");
  Form f(d);
  for (const auto& t : j.at("terms")) {
    std::vector<int> dz = t.value("dz", std::vector<int>{});
    std::vector<int> dzbar = t.value("dzbar", std::vector<int>{});
    Monomial m{detail::mask_from_json(dz, d), detail::mask_from_json(dzbar, d)};
    GaussianRational c = gaussian_from_json(t.at("coeff"));
    if (detail::sort_sign(dz) * detail::sort_sign(dzbar) < 0) c = -c;
    f.add_term(m, c);
  }
  return f;
}

inline json to_json(const HermitianMatrix& h) {
  json rows = json::array();
  for (int j = 0; j < h.dim(); ++j) {
    json row = json::array();
    for (int k = 0; k < h.dim(); ++k) row.push_back(to_json(h(j, k)));
    rows.push_back(row);
  }
  return {{"d", h.dim()}, {"entries", rows}};
}

inline HermitianMatrix hermitian_from_json(const json& j) {
  int d = j.at("d").get<int>();
  const json& rows = j.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != d) throw std::invalid_argument("hermitian: wrong row count");
  std::vector<GaussianRational> a;
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != d) throw std::invalid_argument("hermitian: wrong column count");
    for (const auto& z : row) a.push_back(gaussian_from_json(z));
  }
  return {d, std::move(a)};
}

inline json to_json(const Partition& p) { return p.parts(); }
inline Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

inline json to_json(const WeightVector& x) {
  json a = json::array();
  for (const auto& v : x.weights()) a.push_back(to_string(v));
  return a;
}
inline WeightVector weight_vector_from_json(const json& j) {
  std::vector<Rational> x;
  for (const auto& v : j) x.push_back(rational_from_json(v));
  return WeightVector(std::move(x));
}

inline json to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

inline json to_json(const SymBilinearForm& q) { return {{"basis_tag", q.basis_tag()}, {"matrix", to_json(q.matrix())}}; }

inline SymBilinearForm sym_bilinear_from_json(const json& j) {
  std::vector<Vector> rows;
  for (const auto& r : j.at("matrix")) {
    Vector row;
    for (const auto& x : r) row.push_back(rational_from_json(x));
    rows.push_back(std::move(row));
  }
  Matrix m = Matrix::from_rows(rows);
  if (!m.is_square()) throw std::invalid_argument("bilinear form matrix is not square");
  return {std::move(m), j.value("basis_tag", std::string("standard"))};
}

inline json to_json(const Signature& s) { return json::array({s.n_plus, s.n_minus, s.n_zero}); }

inline json to_json(const ConeVerdict& v) {
  json j = {{"cone", to_string(v.cone)}};
  j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  if (v.pairing) j["pairing"] = to_string(*v.pairing);
  return j;
}

inline json optional_rational(const std::optional<Rational>& q) { return q ? json(to_string(*q)) : json(nullptr); }

inline json to_json(const WeakHrSample& s) {
  return {{"t", to_string(s.t)}, {"signature", to_json(s.sig)}, {"weak_hr", s.weak_hr}, {"defect_psd", s.defect_psd}};
}

inline json to_json(const PropertyAReport& r) {
  json samples = json::array();
  for (const auto& s : r.a2_samples) samples.push_back(to_json(s));
  return {{"A1", r.a1},
          {"A2", r.a2},
          {"A3", r.a3},
          {"A4", r.a4},
          {"A5", r.a5},
          {"R0_h", to_string(r.r0_h)},
          {"dR0_h", to_string(r.rp0_h)},
          {"R0_zeta_h", to_string(r.r0_zeta_h)},
          {"A2_samples", samples},
          {"A2_radius", optional_rational(r.a2_radius)},
          {"A3_signature", to_json(r.a3_signature)},
          {"A4_constant", optional_rational(r.a4_constant)}};
}

inline json to_json(const PropertyBReport& r) {
  json b2 = json::array(), b3 = json::array();
  for (const auto& s : r.b2_samples) b2.push_back(to_json(s));
  for (const auto& s : r.b3_samples) b3.push_back({{"t", to_string(s.t)}, {"psd", s.psd}});
  return {{"B1", r.b1},
          {"B2", r.b2},
          {"B3", r.b3},
          {"B4", r.b4},
          {"B5", r.b5},
          {"B2_samples", b2},
          {"B3_samples", b3},
          {"B2_radius", optional_rational(r.b2_radius)},
          {"B3_radius", optional_rational(r.b3_radius)}};
}

inline json to_json(const TheoremReport& r) {
  json hyp = json::object(), con = json::object();
  for (const auto& [name, ok] : r.hypotheses) hyp[name] = ok;
  for (const auto& [name, ok] : r.conclusions) con[name] = ok;
  return {{"hypotheses", hyp}, {"conclusions", con}, {"verdict", to_string(r.verdict)}};
}

inline json to_json(const Augmentation1Report& r) {
  return {{"property_A", to_json(r.property_a)}, {"theorem", to_json(r.theorem)}};
}

inline json to_json(const RecursionReport& r) {
  json a = json::array(), sig = json::array();
  for (const auto& p : r.property_a) a.push_back(to_json(p));
  for (const auto& s : r.r_signatures) sig.push_back(to_json(s));
  return {{"j", r.j}, {"property_A", a}, {"R_signatures", sig}, {"theorem", to_json(r.theorem)}};
}

inline json to_json(const Augmentation2Report& r) {
  return {{"property_B", to_json(r.property_b)},
          {"second_derivative_signature", to_json(r.second_derivative_signature)},
          {"restricted_signature", to_json(r.restricted_signature)},
          {"theorem", to_json(r.theorem)}};
}

}  // namespace hrlab
