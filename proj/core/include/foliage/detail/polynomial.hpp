// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "foliage/detail/field.hpp"
#include "foliage/detail/linalg.hpp"

namespace foliage::detail {

inline int total_degree(const MultiIndex& m) { return std::accumulate(m.begin(), m.end(), 0); }

// Sparse polynomial in n variables; zero coefficients are never stored.
template <class K>
using Poly = std::map<MultiIndex, K>;

// Polynomial map C^n -> C^n, one Poly per component.
template <class K>
using PolyMap = std::vector<Poly<K>>;

template <class K>
void add_term(Poly<K>& p, const MultiIndex& m, const K& c) {
  if (Field<K>::is_zero(c)) return;
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (Field<K>::is_zero(it->second)) p.erase(it);
  }
}

template <class K>
void add_into(Poly<K>& acc, const Poly<K>& p, const K& factor) {
  for (const auto& [m, c] : p) add_term(acc, m, c * factor);
}

template <class K>
Poly<K> multiply(const Poly<K>& a, const Poly<K>& b, int max_degree) {
  Poly<K> out;
  if (a.empty() || b.empty()) return out;
  const std::size_t n = a.begin()->first.size();
  MultiIndex m(n);
  for (const auto& [ma, ca] : a) {
    int da = total_degree(ma);
    for (const auto& [mb, cb] : b) {
      if (da + total_degree(mb) > max_degree) continue;
      for (std::size_t j = 0; j < n; ++j) m[j] = ma[j] + mb[j];
      add_term(out, m, ca * cb);
    }
  }
  return out;
}

template <class K>
Poly<K> truncate(const Poly<K>& p, int max_degree) {
  Poly<K> out;
  for (const auto& [m, c] : p)
    if (total_degree(m) <= max_degree) out.emplace(m, c);
  return out;
}

template <class K>
PolyMap<K> truncate_map(const PolyMap<K>& p, int max_degree) {
  PolyMap<K> out;
  for (const auto& comp : p) out.push_back(truncate(comp, max_degree));
  return out;
}

template <class K>
Poly<K> homogeneous_part(const Poly<K>& p, int degree) {
  Poly<K> out;
  for (const auto& [m, c] : p)
    if (total_degree(m) == degree) out.emplace(m, c);
  return out;
}

template <class K>
Poly<K> derivative(const Poly<K>& p, int var) {
  Poly<K> out;
  for (const auto& [m, c] : p) {
    if (m[var] == 0) continue;
    MultiIndex d = m;
    d[var] -= 1;
    add_term(out, d, c * Field<K>::from_int(m[var]));
  }
  return out;
}

template <class K>
PolyMap<K> identity_map(int n) {
  PolyMap<K> id(n);
  for (int i = 0; i < n; ++i) {
    MultiIndex m(n, 0);
    m[i] = 1;
    id[i][m] = Field<K>::one();
  }
  return id;
}

template <class K>
PolyMap<K> linear_map(const Matrix<K>& a) {
  const int n = a.rows;
  PolyMap<K> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MultiIndex m(n, 0);
      m[j] = 1;
      add_term(out[i], m, a(i, j));
    }
  return out;
}

template <class K>
PolyMap<K> add_maps(const PolyMap<K>& a, const PolyMap<K>& b, const K& factor_b) {
  PolyMap<K> out = a;
  for (std::size_t i = 0; i < a.size(); ++i) add_into(out[i], b[i], factor_b);
  return out;
}

// Composition p(x(w)) truncated at max_degree. Partial products are shared
// along the lexicographic order of the monomials of p.
template <class K>
class Composer {
 public:
  Composer(const PolyMap<K>& x, int max_degree) : x_(x), max_degree_(max_degree), n_(static_cast<int>(x.size())) {
    powers_.resize(n_);
    for (int j = 0; j < n_; ++j) {
      Poly<K> one;
      one[MultiIndex(n_, 0)] = Field<K>::one();
      powers_[j].push_back(std::move(one));
    }
  }

  Poly<K> compose(const Poly<K>& p) {
    Poly<K> out;
    std::vector<Poly<K>> prefix(n_ + 1);
    MultiIndex last;
    prefix[0][MultiIndex(n_, 0)] = Field<K>::one();
    for (const auto& [m, c] : p) {
      int shared = 0;
      if (!last.empty()) {
        while (shared < n_ && m[shared] == last[shared]) ++shared;
      }
      for (int j = shared; j < n_; ++j) prefix[j + 1] = multiply(prefix[j], power(j, m[j]), max_degree_);
      add_into(out, prefix[n_], c);
      last = m;
    }
    return out;
  }

  PolyMap<K> compose(const PolyMap<K>& p) {
    PolyMap<K> out;
    for (const auto& comp : p) out.push_back(compose(comp));
    return out;
  }

 private:
  const Poly<K>& power(int j, int e) {
    while (static_cast<int>(powers_[j].size()) <= e)
      powers_[j].push_back(multiply(powers_[j].back(), x_[j], max_degree_));
    return powers_[j][e];
  }

  const PolyMap<K>& x_;
  int max_degree_;
  int n_;
  std::vector<std::vector<Poly<K>>> powers_;
};

template <class K>
PolyMap<K> compose(const PolyMap<K>& p, const PolyMap<K>& x, int max_degree) {
  Composer<K> c(x, max_degree);
  return c.compose(p);
}

// (Dh . v)_i = sum_j dh_i/dw_j * v_j, truncated.
template <class K>
PolyMap<K> jacobian_apply(const PolyMap<K>& h, const PolyMap<K>& v, int max_degree) {
  const int n = static_cast<int>(h.size());
  PolyMap<K> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (v[j].empty()) continue;
      Poly<K> d = derivative(h[i], j);
      if (d.empty()) continue;
      add_into(out[i], multiply(d, v[j], max_degree), Field<K>::one());
    }
  return out;
}

template <class K>
int map_degree(const PolyMap<K>& p) {
  int d = 0;
  for (const auto& comp : p)
    for (const auto& [m, c] : comp) d = std::max(d, total_degree(m));
  return d;
}

}  // namespace foliage::detail
