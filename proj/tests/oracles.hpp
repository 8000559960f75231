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

// Reference implementations that share no code path with the library: words
// of generators sorted by explicit inversion counting, Leibniz and cofactor
// determinants, and permutation double sums.

#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "hrlab/algebra.hpp"
#include "hrlab/exterior.hpp"

namespace oracle {

using hrlab::GaussianRational;
using hrlab::HermitianMatrix;
using hrlab::MPoly;
using hrlab::Rational;

/// A generator dz_j (anti = false) or dzbar_j (anti = true), j 1-based.
struct Gen {
  bool anti;
  int j;
};

/// Parity of the sort of a word of generators into the order in which vol is
/// written, i dz1 dzbar1 i dz2 dzbar2 ...; nullopt if a generator repeats.
inline std::optional<int> interleaved_sign(const std::vector<Gen>& word) {
  std::vector<int> key;
  for (const Gen& g : word) key.push_back(2 * (g.j - 1) + (g.anti ? 1 : 0));
  for (std::size_t a = 0; a < key.size(); ++a)
    for (std::size_t b = a + 1; b < key.size(); ++b)
      if (key[a] == key[b]) return std::nullopt;
  int inv = 0;
  for (std::size_t a = 0; a < key.size(); ++a)
    for (std::size_t b = a + 1; b < key.size(); ++b) inv += key[a] > key[b];
  return inv % 2 ? -1 : 1;
}

/// Sign of sorting a word into the library's canonical order (all dz
/// ascending, then all dzbar ascending); nullopt on repeats.
inline std::optional<int> canonical_sign(const std::vector<Gen>& word) {
  std::vector<int> key;
  for (const Gen& g : word) key.push_back((g.anti ? 100 : 0) + g.j);
  for (std::size_t a = 0; a < key.size(); ++a)
    for (std::size_t b = a + 1; b < key.size(); ++b)
      if (key[a] == key[b]) return std::nullopt;
  int inv = 0;
  for (std::size_t a = 0; a < key.size(); ++a)
    for (std::size_t b = a + 1; b < key.size(); ++b) inv += key[a] > key[b];
  return inv % 2 ? -1 : 1;
}

/// The canonical word of a monomial.
inline std::vector<Gen> word_of(const hrlab::Monomial& m, int d) {
  std::vector<Gen> w;
  for (int j = 1; j <= d; ++j)
    if (m.holo & (1u << (j - 1))) w.push_back({false, j});
  for (int j = 1; j <= d; ++j)
    if (m.anti & (1u << (j - 1))) w.push_back({true, j});
  return w;
}

/// (a_1 ^ ... ^ a_d) / vol for a_m = i sum H_m[j][k] dz_j dzbar_k, by
/// expanding every factor choice as a word of 2d generators and sorting it
/// into the interleaved order of vol = prod_j (i dz_j dzbar_j).
inline Rational top_ratio_of_11_product(const std::vector<HermitianMatrix>& hs) {
  const int d = hs.front().dim();
  const int n = static_cast<int>(hs.size());
  GaussianRational total;
  std::vector<int> choice(static_cast<std::size_t>(2 * n), 0);  // (j_m, k_m), 0-based
  std::function<void(int)> rec = [&](int m) {
    if (m == n) {
      std::vector<Gen> word;
      GaussianRational c(1);
      for (int f = 0; f < n; ++f) {
        int j = choice[static_cast<std::size_t>(2 * f)], k = choice[static_cast<std::size_t>(2 * f + 1)];
        word.push_back({false, j + 1});
        word.push_back({true, k + 1});
        c = c * GaussianRational::i() * hs[static_cast<std::size_t>(f)](j, k);
      }
      auto s = interleaved_sign(word);
      if (!s) return;
      // the word equals s * prod_j dz_j dzbar_j and vol = i^d prod_j dz_j dzbar_j
      GaussianRational id = hrlab::i_power(d);
      total += c * GaussianRational(Rational(*s)) / id;
      return;
    }
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        choice[static_cast<std::size_t>(2 * m)] = j;
        choice[static_cast<std::size_t>(2 * m + 1)] = k;
        rec(m + 1);
      }
  };
  rec(0);
  if (!total.is_real()) throw std::logic_error("oracle: non-real top ratio");
  return total.re();
}

/// Generic expansion of a wedge of forms into the interleaved vol order.
inline GaussianRational top_ratio_of_product(const std::vector<hrlab::Form>& forms) {
  const int d = forms.front().dim();
  GaussianRational total;
  std::vector<Gen> word;
  std::function<void(std::size_t, GaussianRational)> rec = [&](std::size_t f, GaussianRational c) {
    if (f == forms.size()) {
      if (static_cast<int>(word.size()) != 2 * d) return;
      auto s = interleaved_sign(word);
      if (!s) return;
      total += c * GaussianRational(Rational(*s)) / hrlab::i_power(d);
      return;
    }
    for (const auto& [m, coeff] : forms[f].terms()) {
      auto w = word_of(m, d);
      std::size_t before = word.size();
      word.insert(word.end(), w.begin(), w.end());
      rec(f + 1, c * coeff);
      word.resize(before);
    }
  };
  rec(0, GaussianRational(1));
  return total;
}

inline int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) inv += p[a] > p[b];
  return inv % 2 ? -1 : 1;
}

/// sum over sigma, tau of sgn(sigma) sgn(tau) prod_m A_m[sigma m][tau m]. This
/// is d! times the mixed discriminant D(A_1, ..., A_d).
inline GaussianRational mixed_discriminant_double_sum(const std::vector<HermitianMatrix>& a) {
  const int d = a.front().dim();
  std::vector<int> s(static_cast<std::size_t>(d));
  std::iota(s.begin(), s.end(), 0);
  GaussianRational total;
  do {
    std::vector<int> t(static_cast<std::size_t>(d));
    std::iota(t.begin(), t.end(), 0);
    do {
      GaussianRational p(permutation_sign(s) * permutation_sign(t));
      for (int m = 0; m < d; ++m) p = p * a[static_cast<std::size_t>(m)](s[static_cast<std::size_t>(m)], t[static_cast<std::size_t>(m)]);
      total += p;
    } while (std::next_permutation(t.begin(), t.end()));
  } while (std::next_permutation(s.begin(), s.end()));
  return total;
}

/// Leibniz determinant of a complex d x d matrix given row-major.
inline GaussianRational leibniz_det(const std::vector<GaussianRational>& m, int d) {
  std::vector<int> p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  GaussianRational total;
  do {
    GaussianRational t(permutation_sign(p));
    for (int r = 0; r < d; ++r) t = t * m[static_cast<std::size_t>(r * d + p[static_cast<std::size_t>(r)])];
    total += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// D(A_1..A_d) by polarisation: (1/d!) sum_S (-1)^{d-|S|} det(sum_{m in S} A_m).
inline GaussianRational mixed_discriminant_polarized(const std::vector<HermitianMatrix>& a) {
  const int d = a.front().dim();
  const int n = static_cast<int>(a.size());
  GaussianRational total;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<GaussianRational> sum(static_cast<std::size_t>(d * d));
    int size = 0;
    for (int m = 0; m < n; ++m)
      if (mask & (1 << m)) {
        ++size;
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += a[static_cast<std::size_t>(m)].entries()[k];
      }
    GaussianRational det = leibniz_det(sum, d);
    total += ((n - size) % 2 ? -det : det);
  }
  Rational fact(1);
  for (int k = 2; k <= d; ++k) fact *= k;
  return total / GaussianRational(fact);
}

/// Determinant by recursive first-row cofactor expansion.
inline MPoly cofactor_det(const std::vector<std::vector<MPoly>>& m, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly::constant(nvars, Rational(1));
  MPoly total(nvars);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<MPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    MPoly t = m[0][c] * cofactor_det(minor, nvars);
    if (c % 2) total -= t;
    else total += t;
  }
  return total;
}

/// e_k in variables x_0..x_{e-1} by summing over k-subsets.
inline MPoly elementary_by_subsets(int k, std::size_t e) {
  MPoly total(e);
  if (k < 0 || k > static_cast<int>(e)) return total;
  for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> ex(e, 0);
    for (std::size_t v = 0; v < e; ++v) ex[v] = (mask >> v) & 1u;
    total.add(ex, Rational(1));
  }
  return total;
}

/// Jacobi-Trudi determinant det(c_{lambda_i - i + j}) for an explicit (possibly
/// zero-padded) list of parts, via cofactor expansion.
inline MPoly schur_cofactor(const std::vector<int>& parts, std::size_t e) {
  const std::size_t n = parts.size();
  std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n, MPoly(e)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = elementary_by_subsets(parts[i] - static_cast<int>(i) + static_cast<int>(j), e);
  return cofactor_det(m, e);
}

}  // namespace oracle
