#pragma once

// Sparse polynomials in x1, x2, ... over a coefficient ring R (Rational or
// QtRational). R needs +, -, *, unary -, ==, R(0), R(1), isZero(R) and toText(R).

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "asf/errors.hpp"
#include "asf/qt.hpp"

namespace asf {

/// Monomial exponents as sorted (variable index >= 1, exponent > 0) pairs.
class ExponentVector {
 public:
  using Entry = std::pair<int, int>;

  ExponentVector() = default;

  /// exps[0] is the exponent of x1.
  static ExponentVector fromDense(const std::vector<int>& exps) {
    ExponentVector e;
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] != 0) e.entries_.push_back({static_cast<int>(i) + 1, exps[i]});
    return e;
  }

  static ExponentVector fromEntries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end());
    ExponentVector e;
    for (const auto& [idx, exp] : entries) {
      if (!e.entries_.empty() && e.entries_.back().first == idx) {
        e.entries_.back().second += exp;
      } else {
        e.entries_.push_back({idx, exp});
      }
    }
    std::erase_if(e.entries_, [](const Entry& x) { return x.second == 0; });
    return e;
  }

  static ExponentVector variable(int index, int exponent = 1) {
    ExponentVector e;
    if (exponent) e.entries_.push_back({index, exponent});
    return e;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool isOne() const { return entries_.empty(); }

  int operator[](int index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{index, 0});
    return it != entries_.end() && it->first == index ? it->second : 0;
  }

  int totalDegree() const {
    int d = 0;
    for (const auto& x : entries_) d += x.second;
    return d;
  }

  int maxIndex() const { return entries_.empty() ? 0 : entries_.back().first; }

  std::vector<int> dense(int n) const {
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    for (const auto& [idx, exp] : entries_)
      if (idx <= n) out[static_cast<std::size_t>(idx - 1)] = exp;
    return out;
  }

  /// Exchanges the exponents of x_i and x_j.
  ExponentVector swapped(int i, int j) const {
    const int a = (*this)[i];
    const int b = (*this)[j];
    if (a == b) return *this;
    ExponentVector e = *this;
    e.set(i, b);
    e.set(j, a);
    return e;
  }

  void set(int index, int exponent) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{index, 0});
    if (it != entries_.end() && it->first == index) {
      if (exponent == 0) {
        entries_.erase(it);
      } else {
        it->second = exponent;
      }
    } else if (exponent != 0) {
      entries_.insert(it, {index, exponent});
    }
  }

  friend ExponentVector operator*(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector e;
    e.entries_.reserve(a.entries_.size() + b.entries_.size());
    std::size_t i = 0, j = 0;
    while (i < a.entries_.size() || j < b.entries_.size()) {
      if (j == b.entries_.size() || (i < a.entries_.size() && a.entries_[i].first < b.entries_[j].first)) {
        e.entries_.push_back(a.entries_[i++]);
      } else if (i == a.entries_.size() || b.entries_[j].first < a.entries_[i].first) {
        e.entries_.push_back(b.entries_[j++]);
      } else {
        e.entries_.push_back({a.entries_[i].first, a.entries_[i].second + b.entries_[j].second});
        ++i;
        ++j;
      }
    }
    return e;
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Printing/iteration order: higher total degree first; ties broken at the
/// highest variable index where the exponents differ, larger exponent first.
inline bool termOrderBefore(const ExponentVector& a, const ExponentVector& b) {
  const int da = a.totalDegree();
  const int db = b.totalDegree();
  if (da != db) return da > db;
  const auto& x = a.entries();
  const auto& y = b.entries();
  auto i = x.rbegin();
  auto j = y.rbegin();
  while (i != x.rend() || j != y.rend()) {
    const int ia = i != x.rend() ? i->first : 0;
    const int ib = j != y.rend() ? j->first : 0;
    if (ia != ib) return ia > ib;
    if (i->second != j->second) return i->second > j->second;
    ++i;
    ++j;
  }
  return false;
}

struct TermOrder {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const { return termOrderBefore(a, b); }
};

template <class R>
class SparsePolynomial {
 public:
  struct Term {
    ExponentVector exponents;
    R coeff;
  };

  SparsePolynomial() = default;

  static SparsePolynomial constant(const R& c) { return monomial(ExponentVector(), c); }
  static SparsePolynomial one() { return constant(R(1)); }
  static SparsePolynomial variable(int index) { return monomial(ExponentVector::variable(index), R(1)); }
  static SparsePolynomial monomial(ExponentVector e, const R& c) {
    SparsePolynomial p;
    if (!asf::isZero(c)) p.terms_.push_back({std::move(e), c});
    return p;
  }

  /// Sort-merge builder: accepts duplicates and zeros in any order.
  static SparsePolynomial fromTerms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return termOrderBefore(a.exponents, b.exponents); });
    SparsePolynomial p;
    p.terms_.reserve(terms.size());
    for (auto& term : terms) {
      if (!p.terms_.empty() && p.terms_.back().exponents == term.exponents) {
        p.terms_.back().coeff = p.terms_.back().coeff + term.coeff;
      } else {
        if (!p.terms_.empty() && asf::isZero(p.terms_.back().coeff)) p.terms_.pop_back();
        p.terms_.push_back(std::move(term));
      }
    }
    if (!p.terms_.empty() && asf::isZero(p.terms_.back().coeff)) p.terms_.pop_back();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  R coefficientOf(const ExponentVector& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const ExponentVector& x) {
      return termOrderBefore(t.exponents, x);
    });
    if (it != terms_.end() && it->exponents == e) return it->coeff;
    return R(0);
  }

  int maxVariableIndex() const {
    int m = 0;
    for (const auto& t : terms_) m = std::max(m, t.exponents.maxIndex());
    return m;
  }

  int totalDegree() const { return terms_.empty() ? -1 : terms_.front().exponents.totalDegree(); }

  bool isHomogeneous() const {
    for (const auto& t : terms_)
      if (t.exponents.totalDegree() != totalDegree()) return false;
    return true;
  }

  SparsePolynomial operator-() const {
    SparsePolynomial p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o) { return *this = merge(*this, o, false); }
  SparsePolynomial& operator-=(const SparsePolynomial& o) { return *this = merge(*this, o, true); }
  friend SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b) {
    return merge(a, b, false);
  }
  friend SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b) {
    return merge(a, b, true);
  }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) out.push_back({x.exponents * y.exponents, x.coeff * y.coeff});
    return fromTerms(std::move(out));
  }
  SparsePolynomial& operator*=(const SparsePolynomial& o) { return *this = *this * o; }

  SparsePolynomial scaled(const R& c) const {
    if (asf::isZero(c)) return {};
    SparsePolynomial p = *this;
    for (auto& t : p.terms_) t.coeff = t.coeff * c;
    std::erase_if(p.terms_, [](const Term& t) { return asf::isZero(t.coeff); });
    return p;
  }

  /// Multiplies by the monomial x^e; order is preserved.
  SparsePolynomial timesMonomial(const ExponentVector& e) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.exponents * e, t.coeff});
    return fromTerms(std::move(out));
  }

  /// s_i: exchanges x_i and x_{i+1}.
  SparsePolynomial applyTransposition(int i) const { return swapVariables(i, i + 1); }

  SparsePolynomial swapVariables(int i, int j) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.exponents.swapped(i, j), t.coeff});
    return fromTerms(std::move(out));
  }

  /// f(x_{w(1)}, ..., x_{w(n)}): the exponent of x_i moves to x_{w(i)}.
  /// w[0] is unused; indices beyond w are fixed.
  SparsePolynomial permuteVariables(const std::vector<int>& w) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      std::vector<ExponentVector::Entry> e;
      e.reserve(t.exponents.entries().size());
      for (const auto& [idx, exp] : t.exponents.entries())
        e.push_back({idx < static_cast<int>(w.size()) ? w[static_cast<std::size_t>(idx)] : idx, exp});
      out.push_back({ExponentVector::fromEntries(std::move(e)), t.coeff});
    }
    return fromTerms(std::move(out));
  }

  /// Drops every term involving a variable of index > n.
  SparsePolynomial truncateVariables(int n) const {
    SparsePolynomial p;
    for (const auto& t : terms_)
      if (t.exponents.maxIndex() <= n) p.terms_.push_back(t);
    return p;
  }

  /// Invariant under s_i for from <= i < to.
  bool isSymmetricInRange(int from, int to) const {
    for (int i = from; i < to; ++i)
      if (applyTransposition(i) != *this) return false;
    return true;
  }

  /// Exact quotient by (x_i - x_j). Throws InternalError on a remainder.
  SparsePolynomial divideByDifference(int i, int j) const {
    // Group by the monomial in the other variables and the combined degree
    // d = a_i + a_j; each group is a binary form in x_i, x_j.
    std::map<std::pair<ExponentVector, int>, std::vector<std::pair<int, R>>> groups;
    for (const auto& t : terms_) {
      ExponentVector rest = t.exponents;
      const int a = rest[i];
      const int b = rest[j];
      rest.set(i, 0);
      rest.set(j, 0);
      groups[{std::move(rest), a + b}].push_back({a, t.coeff});
    }
    std::vector<Term> out;
    for (auto& [key, list] : groups) {
      std::sort(list.begin(), list.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      const int d = key.second;
      // b_a = b_{a-1} - c_a, quotient term b_a x_i^a x_j^{d-1-a}.
      R running(0);
      std::size_t pos = 0;
      int a = list.front().first;
      for (; a < d; ++a) {
        if (pos < list.size() && list[pos].first == a) running = running - list[pos++].second;
        if (!asf::isZero(running)) {
          ExponentVector e = key.first;
          e.set(i, a);
          e.set(j, d - 1 - a);
          out.push_back({std::move(e), running});
        }
      }
      if (pos < list.size() && list[pos].first == d) running = running - list[pos++].second;
      if (!asf::isZero(running) || pos != list.size())
        throw InternalError("polynomial is not divisible by a variable difference");
    }
    return fromTerms(std::move(out));
  }

  template <class S, class F>
  SparsePolynomial<S> mapCoefficients(F&& f) const {
    std::vector<typename SparsePolynomial<S>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.exponents, f(t.coeff)});
    return SparsePolynomial<S>::fromTerms(std::move(out));
  }

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
      if (a.terms_[k].exponents != b.terms_[k].exponents || !(a.terms_[k].coeff == b.terms_[k].coeff))
        return false;
    return true;
  }

 private:
  static SparsePolynomial merge(const SparsePolynomial& a, const SparsePolynomial& b, bool subtract) {
    SparsePolynomial p;
    p.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() ||
          (i < a.terms_.size() && termOrderBefore(a.terms_[i].exponents, b.terms_[j].exponents))) {
        p.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || termOrderBefore(b.terms_[j].exponents, a.terms_[i].exponents)) {
        p.terms_.push_back(b.terms_[j]);
        if (subtract) p.terms_.back().coeff = -p.terms_.back().coeff;
        ++j;
      } else {
        R c = subtract ? R(a.terms_[i].coeff - b.terms_[j].coeff) : R(a.terms_[i].coeff + b.terms_[j].coeff);
        if (!asf::isZero(c)) p.terms_.push_back({a.terms_[i].exponents, std::move(c)});
        ++i;
        ++j;
      }
    }
    return p;
  }

  std::vector<Term> terms_;
};

using RatPoly = SparsePolynomial<Rational>;
using QtPoly = SparsePolynomial<QtRational>;

inline ExponentVector exponentsOf(const std::vector<int>& dense) { return ExponentVector::fromDense(dense); }

/// "x1^2*x3", or "1" for the empty monomial.
inline std::string toText(const ExponentVector& e) {
  if (e.isOne()) return "1";
  std::string out;
  for (const auto& [idx, exp] : e.entries()) {
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(idx);
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out;
}

}  // namespace asf
