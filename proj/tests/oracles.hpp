#pragma once

// Reference implementations for tests. Nothing here calls the library's reduction,
// linear algebra or Buchberger code; only conversion helpers touch library types.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "macaulay/polymod.hpp"

namespace oracle {

using Exp = std::vector<int>;

struct Zp {
  static inline std::int64_t p = 32003;
  std::int64_t v = 0;
  Zp() = default;
  Zp(std::int64_t x) : v(((x % p) + p) % p) {}
  friend Zp operator+(Zp a, Zp b) { return Zp(a.v + b.v); }
  friend Zp operator-(Zp a, Zp b) { return Zp(a.v - b.v); }
  friend Zp operator*(Zp a, Zp b) { return Zp(a.v * b.v); }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  Zp operator-() const { return Zp(-v); }
  Zp inverse() const {
    std::int64_t r = 1, base = v, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return Zp(r);
  }
  friend bool operator==(Zp a, Zp b) { return a.v == b.v; }
};

inline bool is_zero(const mpq_class& q) { return sgn(q) == 0; }
inline bool is_zero(const Zp& z) { return z.v == 0; }

template <class K>
using Poly = std::map<Exp, K>;

enum class Order { Lex, Grevlex };

inline bool greater(const Exp& a, const Exp& b, Order order) {
  if (order == Order::Lex) return a > b;
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

template <class K>
Exp lead(const Poly<K>& f, Order order) {
  Exp best = f.begin()->first;
  for (const auto& [e, c] : f) {
    if (greater(e, best, order)) best = e;
  }
  return best;
}

template <class K>
void add_scaled(Poly<K>& f, const Poly<K>& g, const Exp& shift, const K& c) {
  for (const auto& [e, d] : g) {
    Exp s = e;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += shift[i];
    K v = c * d;
    if (auto it = f.find(s); it != f.end()) v = it->second + v;
    if (is_zero(v)) f.erase(s);
    else f[s] = v;
  }
}

inline bool divides(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// Full multivariate division remainder.
template <class K>
Poly<K> remainder(Poly<K> f, const std::vector<Poly<K>>& gs, Order order) {
  Poly<K> r;
  while (!f.empty()) {
    Exp lt = lead(f, order);
    K lc = f[lt];
    bool divided = false;
    for (const auto& g : gs) {
      Exp lg = lead(g, order);
      if (!divides(lg, lt)) continue;
      Exp shift(lt.size());
      for (std::size_t i = 0; i < lt.size(); ++i) shift[i] = lt[i] - lg[i];
      add_scaled(f, g, shift, K(-(lc / g.at(lg))));
      divided = true;
      break;
    }
    if (!divided) {
      r[lt] = lc;
      f.erase(lt);
    }
  }
  return r;
}

template <class K>
Poly<K> monic(Poly<K> f, Order order) {
  K lc = f[lead(f, order)];
  for (auto& [e, c] : f) c = c / lc;
  return f;
}

// Reduced Groebner basis, sorted by descending leading monomial.
template <class K>
std::vector<Poly<K>> groebner(std::vector<Poly<K>> gens, Order order) {
  std::vector<Poly<K>> g;
  for (auto& f : gens) {
    if (!f.empty()) g.push_back(monic(f, order));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) pairs.emplace_back(i, j);
  }
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    Exp a = lead(g[i], order), b = lead(g[j], order), l(a.size()), sa(a.size()), sb(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      l[k] = std::max(a[k], b[k]);
      sa[k] = l[k] - a[k];
      sb[k] = l[k] - b[k];
    }
    Poly<K> s;
    add_scaled(s, g[i], sa, K(K(1) / g[i].at(a)));
    add_scaled(s, g[j], sb, K(-(K(1) / g[j].at(b))));
    auto r = remainder(s, g, order);
    if (r.empty()) continue;
    g.push_back(monic(r, order));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }
  // Minimize, then interreduce.
  std::vector<Poly<K>> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      Exp li = lead(g[i], order), lj = lead(g[j], order);
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Poly<K>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly<K>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Exp li = lead(minimal[i], order);
    Poly<K> head{{li, minimal[i].at(li)}};
    Poly<K> tail = minimal[i];
    tail.erase(li);
    auto r = remainder(tail, others, order);
    for (auto& [e, c] : r) head[e] = c;
    reduced.push_back(monic(head, order));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Poly<K>& a, const Poly<K>& b) { return greater(lead(a, order), lead(b, order), order); });
  return reduced;
}

template <class K>
bool in_ideal(const Poly<K>& f, const std::vector<Poly<K>>& gb, Order order) {
  return remainder(f, gb, order).empty();
}

// Dense Gaussian elimination.
template <class K>
std::size_t rank(std::vector<std::vector<K>> rows) {
  std::size_t r = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && is_zero(rows[pivot][c])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || is_zero(rows[i][c])) continue;
      K f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] = rows[i][k] - f * rows[r][k];
    }
    ++r;
  }
  return r;
}

inline std::vector<Exp> monomials(std::size_t nvars, int degree) {
  std::vector<Exp> out;
  Exp cur(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
  };
  if (nvars == 0) return {Exp{}};
  rec(rec, 0, degree);
  return out;
}

inline int total(const Exp& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

// dim_k of the degree-b part of the ideal generated by homogeneous polynomials:
// rank of all multiplier-times-generator products landing in degree b.
template <class K>
std::size_t slice_dimension(const std::vector<Poly<K>>& gens, std::size_t nvars, int b) {
  auto basis = monomials(nvars, b);
  std::map<Exp, std::size_t> col;
  for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = i;
  std::vector<std::vector<K>> rows;
  for (const auto& g : gens) {
    int d = total(g.begin()->first);
    if (d > b) continue;
    for (const auto& mu : monomials(nvars, b - d)) {
      std::vector<K> row(basis.size(), K(0));
      for (const auto& [e, c] : g) {
        Exp s = e;
        for (std::size_t i = 0; i < nvars; ++i) s[i] += mu[i];
        row[col.at(s)] = c;
      }
      rows.push_back(std::move(row));
    }
  }
  return rank(rows);
}

inline Poly<mpq_class> to_q(const macaulay::Polynomial& p) {
  Poly<mpq_class> out;
  for (const auto& [m, c] : p.terms()) out[Exp(m.exponents().begin(), m.exponents().end())] = c.rational();
  return out;
}

inline Poly<Zp> to_zp(const macaulay::Polynomial& p) {
  Poly<Zp> out;
  for (const auto& [m, c] : p.terms()) out[Exp(m.exponents().begin(), m.exponents().end())] = Zp(c.residue());
  return out;
}

inline Poly<mpq_class> to_q(const macaulay::ModuleElement& m) { return to_q(m.component(0)); }
inline Poly<Zp> to_zp(const macaulay::ModuleElement& m) { return to_zp(m.component(0)); }

}  // namespace oracle
