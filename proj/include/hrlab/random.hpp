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

// Seeded generators for exact test data. Only the raw mt19937_64 stream is
// used (its output is fixed by the standard), so a seed reproduces the same
// data on every conforming platform.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hrlab/exterior.hpp"
#include "hrlab/matrix.hpp"

namespace hrlab {

/// Stateless mixing of a campaign seed and a task index (splitmix64 finaliser).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
  long uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

  Rational rational(long box) { return Rational(uniform(-box, box)); }

  /// Nonzero rational p/q with |p| <= box, 1 <= q <= box.
  Rational small_fraction(long box) {
    long p = 0;
    while (p == 0) p = uniform(-box, box);
    Rational r(p);
    r /= Rational(uniform(1, box));
    return r;
  }

  GaussianRational gaussian_integer(long box) { return {rational(box), rational(box)}; }

 private:
  std::mt19937_64 engine_;
};

/// H = B* B + I with B a d x d matrix of Gaussian integers in [-box, box]^2:
/// positive definite by construction.
inline HermitianMatrix random_positive_hermitian(int d, Rng& rng, long box = 2) {
  std::vector<GaussianRational> b(static_cast<std::size_t>(d * d));
  for (auto& z : b) z = rng.gaussian_integer(box);
  std::vector<GaussianRational> h(static_cast<std::size_t>(d * d));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      GaussianRational s = (j == k) ? GaussianRational(1) : GaussianRational();
      for (int m = 0; m < d; ++m)
        s += b[static_cast<std::size_t>(m * d + j)].conj() * b[static_cast<std::size_t>(m * d + k)];
      h[static_cast<std::size_t>(j * d + k)] = s;
    }
  return {d, std::move(h)};
}

/// Arbitrary Hermitian matrix with Gaussian-integer entries in the box.
inline HermitianMatrix random_hermitian(int d, Rng& rng, long box = 3) {
  std::vector<GaussianRational> h(static_cast<std::size_t>(d * d));
  for (int j = 0; j < d; ++j) {
    h[static_cast<std::size_t>(j * d + j)] = rng.rational(box);
    for (int k = j + 1; k < d; ++k) {
      GaussianRational z = rng.gaussian_integer(box);
      h[static_cast<std::size_t>(j * d + k)] = z;
      h[static_cast<std::size_t>(k * d + j)] = z.conj();
    }
  }
  return {d, std::move(h)};
}

/// e strictly positive (1,1)-forms.
inline std::vector<Form> random_positive_forms(int d, int e, Rng& rng, long box = 2) {
  std::vector<Form> out;
  out.reserve(static_cast<std::size_t>(e));
  for (int j = 0; j < e; ++j) out.push_back(hermitian_to_form(random_positive_hermitian(d, rng, box)));
  return out;
}

/// Random (1,0)-form sum_j c_j dz_j with Gaussian-integer coefficients, not zero.
inline Form random_10_form(int d, Rng& rng, long box = 2) {
  for (;;) {
    Form f(d);
    for (int j = 0; j < d; ++j) f.add_term(Monomial{1u << j, 0}, rng.gaussian_integer(box));
    if (!f.is_zero()) return f;
  }
}

inline Matrix random_symmetric(std::size_t n, Rng& rng, long box = 3) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = rng.rational(box);
      m(j, i) = m(i, j);
    }
  return m;
}

inline Matrix random_invertible(std::size_t n, Rng& rng, long box = 2) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rational(box);
    if (rank(m) == n) return m;
  }
}

inline Vector random_vector(std::size_t n, Rng& rng, long box = 3) {
  Vector v(n);
  for (auto& x : v) x = rng.rational(box);
  return v;
}

}  // namespace hrlab
