#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond its value types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "asf/almost_symmetric.hpp"
#include "asf/fillings.hpp"

namespace oracle {

using asf::Rational;

// Calls visit for every vector in {1..maxValue}^length.
inline void forEachWord(int length, int maxValue, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> w(static_cast<std::size_t>(length), 1);
  if (maxValue < 1 && length > 0) return;
  for (;;) {
    visit(w);
    int i = length - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == maxValue) w[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) return;
    ++w[static_cast<std::size_t>(i)];
  }
}

// Number of fillings of the Young diagram of lambda with the given content
// whose rows weakly increase and columns strictly increase.
inline std::int64_t kostka(const std::vector<int>& lambda, const std::vector<int>& content) {
  int boxes = 0;
  for (int p : lambda) boxes += p;
  int total = 0;
  for (int c : content) total += c;
  if (boxes != total) return 0;
  std::int64_t count = 0;
  forEachWord(boxes, std::max<int>(1, static_cast<int>(content.size())), [&](const std::vector<int>& w) {
    std::vector<int> used(content.size() + 1, 0);
    for (int v : w) ++used[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < content.size(); ++i)
      if (used[i + 1] != content[i]) return;
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    for (int len : lambda) {
      rows.emplace_back(w.begin() + static_cast<long>(pos), w.begin() + static_cast<long>(pos + len));
      pos += static_cast<std::size_t>(len);
    }
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        if (c > 0 && rows[r][c - 1] > rows[r][c]) return;
        if (r > 0 && rows[r - 1][c] >= rows[r][c]) return;
      }
    ++count;
  });
  return count;
}

// Augmented column filling: label(i, j) for column i >= 1 and row j >= 0,
// with row 0 the basement. Labels are integer codes; larger means bigger.
struct Grid {
  std::vector<int> shape;
  std::vector<std::vector<std::int64_t>> cols;  // cols[i-1][j], j = 0 is basement

  int height(int i) const { return i >= 1 && i <= static_cast<int>(shape.size()) ? shape[static_cast<std::size_t>(i - 1)] : -1; }
  bool inAugmented(int i, int j) const { return i >= 1 && i <= static_cast<int>(shape.size()) && j >= 0 && j <= height(i); }
  std::int64_t at(int i, int j) const { return cols[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]; }
};

inline Grid gridOf(const asf::Filling& f) {
  Grid g;
  g.shape = f.diagram().shape().parts();
  for (std::size_t i = 0; i < g.shape.size(); ++i) {
    std::vector<std::int64_t> col{f.basement()[i].code()};
    for (const auto& l : f.columns()[i]) col.push_back(l.code());
    g.cols.push_back(std::move(col));
  }
  return g;
}

struct Cell {
  int i;
  int j;
};

inline std::vector<Cell> augmentedCells(const Grid& g) {
  std::vector<Cell> out;
  for (int i = 1; i <= static_cast<int>(g.shape.size()); ++i)
    for (int j = 0; j <= g.height(i); ++j) out.push_back({i, j});
  return out;
}

// Literal set definitions of the two arms.
inline int arm(const Grid& g, int i, int j) {
  int count = 0;
  const int mi = g.height(i);
  for (int k = 1; k < i; ++k)
    if (g.height(k) >= j && g.height(k) <= mi) ++count;
  for (int k = i + 1; k <= static_cast<int>(g.shape.size()); ++k)
    if (g.inAugmented(k, j - 1) && g.height(k) < mi) ++count;
  return count;
}

inline int leg(const Grid& g, int i, int j) { return g.height(i) - j; }

inline bool attacking(const Cell& a, const Cell& b) {
  if (a.i == b.i && a.j == b.j) return false;
  if (a.j == b.j) return true;
  const Cell& upper = a.j > b.j ? a : b;
  const Cell& lower = a.j > b.j ? b : a;
  return upper.j == lower.j + 1 && lower.i > upper.i;
}

// Position in reading order: rows top to bottom, right to left.
inline bool before(const Cell& a, const Cell& b) { return a.j != b.j ? a.j > b.j : a.i > b.i; }

inline bool nonAttacking(const Grid& g) {
  const auto cells = augmentedCells(g);
  for (std::size_t x = 0; x < cells.size(); ++x)
    for (std::size_t y = x + 1; y < cells.size(); ++y)
      if (attacking(cells[x], cells[y]) && g.at(cells[x].i, cells[x].j) == g.at(cells[y].i, cells[y].j)) return false;
  return true;
}

struct Stats {
  int maj = 0;
  int invSet = 0;
  int inv = 0;
  int coinv = 0;
  int triples = 0;
};

inline Stats stats(const Grid& g) {
  Stats s;
  const auto cells = augmentedCells(g);
  int armSum = 0;
  int desArm = 0;
  for (const Cell& c : cells) {
    if (c.j == 0) continue;
    armSum += arm(g, c.i, c.j);
    if (g.at(c.i, c.j) > g.at(c.i, c.j - 1)) {
      s.maj += leg(g, c.i, c.j) + 1;
      desArm += arm(g, c.i, c.j);
    }
  }
  for (const Cell& a : cells)
    for (const Cell& b : cells)
      if (attacking(a, b) && before(a, b) && g.at(a.i, a.j) > g.at(b.i, b.j)) ++s.invSet;
  int pairs = 0;
  const int n = static_cast<int>(g.shape.size());
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (g.height(a) <= g.height(b)) ++pairs;
  s.inv = s.invSet - pairs - desArm;
  s.coinv = armSum - s.inv;

  // Triples (u, v, w): w directly below u, v in the arm of u; counted when the
  // labels increase cyclically.
  for (const Cell& u : cells) {
    if (u.j == 0) continue;
    const Cell w{u.i, u.j - 1};
    std::vector<Cell> arms;
    const int mi = g.height(u.i);
    for (int k = 1; k < u.i; ++k)
      if (g.height(k) >= u.j && g.height(k) <= mi) arms.push_back({k, u.j});
    for (int k = u.i + 1; k <= n; ++k)
      if (g.inAugmented(k, u.j - 1) && g.height(k) < mi) arms.push_back({k, u.j - 1});
    for (const Cell& v : arms) {
      const auto x = g.at(u.i, u.j), y = g.at(v.i, v.j), z = g.at(w.i, w.j);
      if ((x < y && y < z) || (y < z && z < x) || (z < x && x < y)) ++s.triples;
    }
  }
  return s;
}

// Every filling of mu with labels in [n] and the standard basement, filtered
// for non-attacking.
inline std::vector<asf::Filling> nonAttackingFillings(const std::vector<int>& mu, int n) {
  int boxes = 0;
  for (int m : mu) boxes += m;
  std::vector<asf::Filling> out;
  forEachWord(boxes, n, [&](const std::vector<int>& w) {
    std::vector<std::vector<int>> cols;
    std::size_t pos = 0;
    for (int m : mu) {
      cols.emplace_back(w.begin() + static_cast<long>(pos), w.begin() + static_cast<long>(pos + m));
      pos += static_cast<std::size_t>(m);
    }
    asf::Filling f = asf::Filling::standard(asf::Composition(mu), cols);
    if (nonAttacking(gridOf(f))) out.push_back(std::move(f));
  });
  return out;
}

// Dense polynomial in up to three variables indexed by exponents < size.
using Dense = std::map<std::vector<int>, Rational>;

inline Dense dense(const asf::RatPoly& p, int vars) {
  Dense d;
  for (const auto& t : p.terms()) d[t.exponents.dense(vars)] += t.coeff;
  return d;
}

inline Dense denseProduct(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline Rational evaluate(const asf::QtPolynomial& p, const Rational& q, const Rational& t) {
  Rational sum = 0;
  for (const auto& term : p.terms()) {
    Rational v = term.coeff;
    for (std::uint32_t k = 0; k < term.q; ++k) v *= q;
    for (std::uint32_t k = 0; k < term.t; ++k) v *= t;
    sum += v;
  }
  return sum;
}

inline Rational evaluate(const asf::QtRational& f, const Rational& q, const Rational& t) {
  return evaluate(f.numerator(), q, t) / evaluate(f.denominator(), q, t);
}

// Coefficients c_0..c_order of the t-expansion of f at a fixed rational q,
// by long division of power series. Requires den(q, 0) != 0.
inline std::vector<Rational> tSeries(const asf::QtRational& f, const Rational& q, int order) {
  auto coeffs = [&](const asf::QtPolynomial& p) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    for (const auto& term : p.terms()) {
      if (static_cast<int>(term.t) > order) continue;
      Rational v = term.coeff;
      for (std::uint32_t k = 0; k < term.q; ++k) v *= q;
      c[term.t] += v;
    }
    return c;
  };
  const auto n = coeffs(f.numerator());
  const auto d = coeffs(f.denominator());
  std::vector<Rational> s(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int k = 0; k <= order; ++k) {
    Rational acc = n[static_cast<std::size_t>(k)];
    for (int j = 1; j <= k; ++j) acc -= d[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(k - j)];
    s[static_cast<std::size_t>(k)] = acc / d[0];
  }
  return s;
}

// All weights of a given length and sum, by brute force.
inline std::vector<std::vector<int>> weights(int length, int sum) {
  std::vector<std::vector<int>> out;
  if (length == 0) {
    if (sum == 0) out.push_back({});
    return out;
  }
  for (int first = sum; first >= 0; --first)
    for (auto& rest : weights(length - 1, sum - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

// Transitive closure of the Bruhat cover relations on one weight slice:
// for i < j with a_i < a_j, (ij)a < a, and if a_j - a_i > 1 also
// a + e_i - e_j < (ij)a.
inline std::set<std::pair<std::vector<int>, std::vector<int>>> bruhatClosure(int length, int sum) {
  const auto all = weights(length, sum);
  std::set<std::pair<std::vector<int>, std::vector<int>>> rel;  // (smaller, larger)
  for (const auto& a : all) {
    rel.insert({a, a});
    for (int i = 0; i < length; ++i)
      for (int j = i + 1; j < length; ++j) {
        if (a[static_cast<std::size_t>(i)] >= a[static_cast<std::size_t>(j)]) continue;
        auto s = a;
        std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]);
        rel.insert({s, a});
        if (a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(i)] > 1) {
          auto m = a;
          ++m[static_cast<std::size_t>(i)];
          --m[static_cast<std::size_t>(j)];
          rel.insert({m, s});
        }
      }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [x, y] : std::vector(rel.begin(), rel.end()))
      for (const auto& z : all)
        if (rel.count({y, z}) && rel.insert({x, z}).second) changed = true;
  }
  return rel;
}

// s_lambda(x_1..x_n) as the sum over SSYT, via brute-force Kostka numbers.
inline asf::RatPoly schur(const std::vector<int>& lambda, int n) {
  int size = 0;
  for (int p : lambda) size += p;
  std::vector<asf::RatPoly::Term> terms;
  for (const auto& w : weights(n, size)) {
    const auto k = kostka(lambda, w);
    if (k) terms.push_back({asf::ExponentVector::fromDense(w), Rational(static_cast<long>(k))});
  }
  return asf::RatPoly::fromTerms(std::move(terms));
}

inline asf::RatPoly poly(std::initializer_list<std::pair<std::vector<int>, int>> terms) {
  std::vector<asf::RatPoly::Term> out;
  for (const auto& [e, c] : terms) out.push_back({asf::ExponentVector::fromDense(e), Rational(c)});
  return asf::RatPoly::fromTerms(std::move(out));
}

}  // namespace oracle
