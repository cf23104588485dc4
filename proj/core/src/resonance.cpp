// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#include "foliage/resonance.hpp"

#include <algorithm>
#include <cmath>

#include "foliage/errors.hpp"

namespace foliage {

namespace {

// Depth-first walk over multi-indices m with sum_j m_j w_j <= budget.
template <class W, class Visit>
void walk(const std::vector<W>& w, std::size_t j, const W& budget, const W& slack, MultiIndex& m, Visit&& visit) {
  if (j == w.size()) {
    visit(m, budget);
    return;
  }
  for (int k = 0;; ++k) {
    W left = budget - W(k) * w[j];
    if (left < -slack) break;
    m[j] = k;
    walk(w, j + 1, left, slack, m, visit);
  }
  m[j] = 0;
}

}  // namespace

bool is_essential(const Resonance& r, const std::vector<Eigenvalue>& eigs) {
  for (std::size_t j = 0; j < r.m.size(); ++j) {
    if (r.m[j] == 0 || static_cast<int>(j) == r.target) continue;
    if (!same_ray(eigs[r.target], eigs[j])) return false;
  }
  return true;
}

int resonance_degree_bound(const Spectrum& spec) {
  if (!spec.poincare) throw NotPoincareError("resonances need a Poincare spectrum");
  if (spec.exact && spec.c_squared) {
    Rational ratio = 0;
    for (const auto& e : spec.eigenvalues) ratio = std::max(ratio, Rational(e.exact->norm() / *spec.c_squared));
    int k = 0;
    while (Rational(k) * k < ratio) ++k;
    return k;
  }
  double m = 0.0;
  for (const auto& e : spec.eigenvalues) m = std::max(m, std::abs(e.value));
  return static_cast<int>(std::ceil(m / spec.c - 1e-12));
}

std::vector<Resonance> enumerate_resonances(const Spectrum& spec, const ResonanceOptions& options) {
  if (!spec.poincare) throw NotPoincareError("resonances need a Poincare spectrum");
  const int n = static_cast<int>(spec.eigenvalues.size());
  std::vector<Resonance> out;

  auto unit = [n](int i) {
    MultiIndex m(n, 0);
    m[i] = 1;
    return m;
  };

  if (spec.surd) {
    // Two conjugate irrational values: no integer relation except the trivial ones.
    for (int i = 0; i < n; ++i) out.push_back({i, unit(i), true, true, true, 0.0});
    return out;
  }

  MultiIndex m(n, 0);
  if (spec.exact) {
    const GaussianRational& p = *spec.nearest_exact;
    std::vector<Rational> w;
    for (const auto& e : spec.eigenvalues) w.push_back((*e.exact * p.conj()).re());
    for (int i = 0; i < n; ++i) {
      const GaussianRational& target = *spec.eigenvalues[i].exact;
      walk(w, 0, w[i], Rational(0), m, [&](const MultiIndex& cand, const Rational& left) {
        if (left != 0) return;
        GaussianRational sum;
        for (int j = 0; j < n; ++j)
          if (cand[j] != 0) sum += GaussianRational(cand[j]) * *spec.eigenvalues[j].exact;
        if (!(sum == target)) return;
        Resonance r{i, cand, cand == unit(i), false, true, 0.0};
        out.push_back(std::move(r));
      });
    }
  } else {
    const Complex p = *spec.nearest;
    std::vector<double> w;
    for (const auto& e : spec.eigenvalues) w.push_back((e.value * std::conj(p)).real());
    for (int i = 0; i < n; ++i) {
      const Complex target = spec.eigenvalues[i].value;
      const double tol = options.tolerance * (1.0 + std::abs(target));
      const double slack = tol * std::abs(p) + 1e-12 * std::abs(target) * std::abs(p);
      walk(w, 0, w[i], slack, m, [&](const MultiIndex& cand, double) {
        Complex sum = 0.0;
        for (int j = 0; j < n; ++j) sum += static_cast<double>(cand[j]) * spec.eigenvalues[j].value;
        double defect = std::abs(sum - target);
        if (defect > tol) return;
        out.push_back({i, cand, cand == unit(i), false, false, defect});
      });
    }
  }
  for (auto& r : out) r.essential = is_essential(r, spec.eigenvalues);
  std::sort(out.begin(), out.end(), [](const Resonance& a, const Resonance& b) {
    return a.target != b.target ? a.target < b.target : a.m < b.m;
  });
  return out;
}

}  // namespace foliage
