#include "klyachko/characters/modular_linalg.hpp"

#include <algorithm>
#include <utility>

namespace klyachko {
namespace {

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

ModPoly sub(const ModularArena& z, const ModPoly& a, const ModPoly& b) {
  ModPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = z.sub(c[i], b[i]);
  trim(c);
  return c;
}

ModPoly mul(const ModularArena& z, const ModPoly& a, const ModPoly& b) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = z.add(c[i + j], z.mul(a[i], b[j]));
  }
  trim(c);
  return c;
}

ModPoly rem(const ModularArena& z, ModPoly a, const ModPoly& b) {
  trim(a);
  const int db = deg(b);
  const Residue lead_inv = z.inv(b.back());
  while (deg(a) >= db) {
    const int shift = deg(a) - db;
    const Residue c = z.mul(a.back(), lead_inv);
    for (int j = 0; j <= db; ++j) a[shift + j] = z.sub(a[shift + j], z.mul(c, b[j]));
    trim(a);
  }
  return a;
}

ModPoly quot(const ModularArena& z, ModPoly a, const ModPoly& b) {
  trim(a);
  const int db = deg(b);
  if (deg(a) < db) return {};
  ModPoly q(deg(a) - db + 1, 0);
  const Residue lead_inv = z.inv(b.back());
  while (deg(a) >= db) {
    const int shift = deg(a) - db;
    const Residue c = z.mul(a.back(), lead_inv);
    q[shift] = c;
    for (int j = 0; j <= db; ++j) a[shift + j] = z.sub(a[shift + j], z.mul(c, b[j]));
    trim(a);
  }
  trim(q);
  return q;
}

ModPoly monic(const ModularArena& z, ModPoly f) {
  if (f.empty()) return f;
  const Residue inv = z.inv(f.back());
  for (auto& c : f) c = z.mul(c, inv);
  return f;
}

ModPoly gcd(const ModularArena& z, ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = rem(z, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(z, a);
}

// base^k mod f.
ModPoly powmod(const ModularArena& z, ModPoly base, std::uint64_t k, const ModPoly& f) {
  ModPoly result{1};
  base = rem(z, base, f);
  while (k > 0) {
    if (k & 1U) result = rem(z, mul(z, result, base), f);
    base = rem(z, mul(z, base, base), f);
    k >>= 1U;
  }
  return result;
}

void split(const ModularArena& z, const ModPoly& f, std::mt19937_64& rng,
           std::vector<Residue>& out) {
  if (deg(f) == 1) {
    out.push_back(z.neg(z.mul(f[0], z.inv(f[1]))));
    return;
  }
  if (z.ell() == 2) {
    for (Residue x = 0; x < 2; ++x) {
      Residue v = 0;
      for (auto it = f.rbegin(); it != f.rend(); ++it) v = z.add(z.mul(v, x), *it);
      if (v == 0) out.push_back(x);
    }
    return;
  }
  std::uniform_int_distribution<Residue> pick(0, z.ell() - 1);
  for (;;) {
    const ModPoly shifted{pick(rng), 1};
    ModPoly h = powmod(z, shifted, (z.ell() - 1) / 2, f);
    h = sub(z, h, ModPoly{1});
    const ModPoly g = gcd(z, f, h);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      split(z, g, rng, out);
      split(z, monic(z, quot(z, f, g)), rng, out);
      return;
    }
  }
}

}  // namespace

ModPoly characteristic_polynomial(const ModularArena& z, ModMatrix a) {
  const std::size_t n = a.size();
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t pivot = j + 1;
    while (pivot < n && a(pivot, j) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(a(r, pivot), a(r, j + 1));
    }
    const Residue inv = z.inv(a(j + 1, j));
    for (std::size_t i = j + 2; i < n; ++i) {
      if (a(i, j) == 0) continue;
      const Residue u = z.mul(a(i, j), inv);
      for (std::size_t c = 0; c < n; ++c) a(i, c) = z.sub(a(i, c), z.mul(u, a(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r) a(r, j + 1) = z.add(a(r, j + 1), z.mul(u, a(r, i)));
    }
  }

  std::vector<ModPoly> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 0; m < n; ++m) {
    ModPoly next(p[m].size() + 1, 0);
    for (std::size_t i = 0; i < p[m].size(); ++i) {
      next[i + 1] = z.add(next[i + 1], p[m][i]);
      next[i] = z.sub(next[i], z.mul(a(m, m), p[m][i]));
    }
    Residue t = 1;
    for (std::size_t ii = m; ii-- > 0;) {
      t = z.mul(t, a(ii + 1, ii));
      const Residue c = z.mul(t, a(ii, m));
      if (c == 0) continue;
      for (std::size_t i = 0; i < p[ii].size(); ++i) next[i] = z.sub(next[i], z.mul(c, p[ii][i]));
    }
    trim(next);
    p[m + 1] = std::move(next);
  }
  return p[n];
}

std::optional<std::vector<Residue>> distinct_roots(const ModularArena& z, const ModPoly& f,
                                                   std::mt19937_64& rng) {
  ModPoly g = monic(z, f);
  trim(g);
  if (g.empty()) return std::nullopt;
  if (deg(g) == 0) return std::vector<Residue>{};
  // gcd(g, x^ell - x) collects each root once.
  ModPoly xl = powmod(z, ModPoly{0, 1}, z.ell(), g);
  xl = sub(z, xl, ModPoly{0, 1});
  const ModPoly linear = gcd(z, g, xl);
  if (deg(linear) != deg(g)) return std::nullopt;
  std::vector<Residue> roots;
  split(z, linear, rng, roots);
  std::sort(roots.begin(), roots.end());
  if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) return std::nullopt;
  return roots;
}

std::vector<std::vector<Residue>> kernel(const ModularArena& z, ModMatrix a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t pivot = row;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) continue;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(row, c));
    const Residue inv = z.inv(a(row, col));
    for (std::size_t c = 0; c < n; ++c) a(row, c) = z.mul(a(row, c), inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Residue u = a(r, col);
      for (std::size_t c = 0; c < n; ++c) a(r, c) = z.sub(a(r, c), z.mul(u, a(row, c)));
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<char> is_pivot(n, 0);
  for (auto c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<Residue>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = z.neg(a(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace klyachko
