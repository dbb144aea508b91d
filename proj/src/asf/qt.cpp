#include "asf/qt.hpp"

#include <algorithm>
#include <utility>

#include "asf/errors.hpp"

namespace asf {

std::string toText(const Rational& r) { return r.get_str(); }

// ------------------------------------------------------------- QtPolynomial

namespace {

bool termLess(const QtPolynomial::Term& a, const QtPolynomial::Term& b) {
  return a.q != b.q ? a.q < b.q : a.t < b.t;
}

}  // namespace

QtPolynomial::QtPolynomial(int constant) {
  if (constant != 0) terms_.push_back({0, 0, Rational(constant)});
}

QtPolynomial::QtPolynomial(const Rational& constant) {
  if (sgn(constant) != 0) terms_.push_back({0, 0, constant});
}

QtPolynomial QtPolynomial::q() { return monomial(1, 0); }
QtPolynomial QtPolynomial::t() { return monomial(0, 1); }

QtPolynomial QtPolynomial::monomial(std::uint32_t qExp, std::uint32_t tExp, const Rational& c) {
  QtPolynomial p;
  if (sgn(c) != 0) p.terms_.push_back({qExp, tExp, c});
  return p;
}

QtPolynomial QtPolynomial::fromTerms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), termLess);
  QtPolynomial p;
  for (auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().q == term.q && p.terms_.back().t == term.t) {
      p.terms_.back().coeff += term.coeff;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(term));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  return p;
}

bool QtPolynomial::isOne() const {
  return terms_.size() == 1 && terms_[0].q == 0 && terms_[0].t == 0 && terms_[0].coeff == 1;
}

Rational QtPolynomial::constantTerm() const {
  if (!terms_.empty() && terms_[0].q == 0 && terms_[0].t == 0) return terms_[0].coeff;
  return Rational(0);
}

int QtPolynomial::degreeQ() const { return terms_.empty() ? -1 : static_cast<int>(terms_.back().q); }

int QtPolynomial::degreeT() const {
  int d = -1;
  for (const auto& term : terms_) d = std::max(d, static_cast<int>(term.t));
  return d;
}

int QtPolynomial::valuationT() const {
  if (terms_.empty()) return 0;
  std::uint32_t v = terms_[0].t;
  for (const auto& term : terms_) v = std::min(v, term.t);
  return static_cast<int>(v);
}

int QtPolynomial::valuationQ() const { return terms_.empty() ? 0 : static_cast<int>(terms_.front().q); }

QtPolynomial QtPolynomial::operator-() const {
  QtPolynomial p = *this;
  for (auto& term : p.terms_) term.coeff = -term.coeff;
  return p;
}

namespace {

template <bool Subtract>
std::vector<QtPolynomial::Term> mergeTerms(const std::vector<QtPolynomial::Term>& a,
                                           const std::vector<QtPolynomial::Term>& b) {
  std::vector<QtPolynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && termLess(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || termLess(b[j], a[i])) {
      out.push_back(b[j]);
      if constexpr (Subtract) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rational c = Subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (sgn(c) != 0) out.push_back({a[i].q, a[i].t, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

QtPolynomial& QtPolynomial::operator+=(const QtPolynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = mergeTerms<false>(terms_, o.terms_);
  return *this;
}

QtPolynomial& QtPolynomial::operator-=(const QtPolynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = mergeTerms<true>(terms_, o.terms_);
  return *this;
}

QtPolynomial operator*(const QtPolynomial& a, const QtPolynomial& b) {
  if (a.isZero() || b.isZero()) return QtPolynomial();
  std::vector<QtPolynomial::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back({x.q + y.q, x.t + y.t, x.coeff * y.coeff});
  return QtPolynomial::fromTerms(std::move(prod));
}

QtPolynomial& QtPolynomial::operator*=(const QtPolynomial& o) {
  *this = *this * o;
  return *this;
}

QtPolynomial& QtPolynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term.coeff *= c;
  return *this;
}

QtPolynomial QtPolynomial::pow(unsigned e) const {
  QtPolynomial result(1);
  QtPolynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

QtPolynomial QtPolynomial::shiftT(int k) const {
  QtPolynomial p = *this;
  for (auto& term : p.terms_) term.t -= static_cast<std::uint32_t>(k);
  return p;
}

QtPolynomial QtPolynomial::shiftQ(int k) const {
  QtPolynomial p = *this;
  for (auto& term : p.terms_) term.q -= static_cast<std::uint32_t>(k);
  return p;
}

QtPolynomial QtPolynomial::atTZero() const {
  QtPolynomial p;
  for (const auto& term : terms_)
    if (term.t == 0) p.terms_.push_back(term);
  return p;
}

QtPolynomial QtPolynomial::atQZero() const {
  QtPolynomial p;
  for (const auto& term : terms_)
    if (term.q == 0) p.terms_.push_back(term);
  return p;
}

QtPolynomial QtPolynomial::swapped() const {
  std::vector<Term> terms = terms_;
  for (auto& term : terms) std::swap(term.q, term.t);
  return fromTerms(std::move(terms));
}

bool QtPolynomial::divideExact(const QtPolynomial& divisor, QtPolynomial& quotient) const {
  if (divisor.isZero()) throw DivisionByZero();
  QtPolynomial rem = *this;
  std::vector<Term> quot;
  const Term& lead = divisor.leadingTerm();
  while (!rem.isZero()) {
    const Term& r = rem.leadingTerm();
    if (r.q < lead.q || r.t < lead.t) return false;
    QtPolynomial step = monomial(r.q - lead.q, r.t - lead.t, r.coeff / lead.coeff);
    quot.push_back(step.terms_[0]);
    rem -= step * divisor;
  }
  quotient = fromTerms(std::move(quot));
  return true;
}

bool operator==(const QtPolynomial& a, const QtPolynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.q != y.q || x.t != y.t || x.coeff != y.coeff) return false;
  }
  return true;
}

bool operator<(const QtPolynomial& a, const QtPolynomial& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.q != y.q) return x.q < y.q;
    if (x.t != y.t) return x.t < y.t;
    if (x.coeff != y.coeff) return x.coeff < y.coeff;
  }
  return a.terms_.size() < b.terms_.size();
}

std::string QtPolynomial::toString() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& term : terms_) {
    const bool negative = sgn(term.coeff) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(term.coeff);
    std::string mono;
    if (term.q) mono += term.q == 1 ? std::string("q") : "q^" + std::to_string(term.q);
    if (term.t) {
      if (!mono.empty()) mono += "*";
      mono += term.t == 1 ? std::string("t") : "t^" + std::to_string(term.t);
    }
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + "*" + mono;
    }
  }
  return out;
}

// ----------------------------------------------------- gcd via Q[q][t] PRS

namespace {

// Dense univariate polynomial in q over Q, index = exponent, no trailing zeros.
using UPoly = std::vector<Rational>;

void utrim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  utrim(r);
  return r;
}

UPoly usub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  utrim(r);
  return r;
}

// a = quot * b + rem over the field Q.
void udivmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem) {
  rem = a;
  quot.clear();
  if (udeg(a) < udeg(b)) return;
  quot.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (!rem.empty() && udeg(rem) >= udeg(b)) {
    const std::size_t shift = rem.size() - b.size();
    Rational factor = rem.back() / lead;
    quot[shift] = factor;
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= factor * b[j];
    rem.pop_back();
    utrim(rem);
  }
  utrim(quot);
}

void umakeMonic(UPoly& p) {
  if (p.empty()) return;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
}

UPoly ugcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly q, r;
    udivmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  umakeMonic(a);
  return a;
}

// Polynomial in t whose coefficients are UPoly in q; index = t-exponent.
using BPoly = std::vector<UPoly>;

void btrim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

BPoly toB(const QtPolynomial& f) {
  BPoly b;
  for (const auto& term : f.terms()) {
    if (b.size() <= term.t) b.resize(term.t + 1);
    UPoly& c = b[term.t];
    if (c.size() <= term.q) c.resize(term.q + 1, Rational(0));
    c[term.q] = term.coeff;
  }
  return b;
}

QtPolynomial fromB(const BPoly& b) {
  std::vector<QtPolynomial::Term> terms;
  for (std::size_t t = 0; t < b.size(); ++t)
    for (std::size_t q = 0; q < b[t].size(); ++q)
      if (sgn(b[t][q]) != 0)
        terms.push_back({static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(t), b[t][q]});
  return QtPolynomial::fromTerms(std::move(terms));
}

UPoly bcontent(const BPoly& b) {
  UPoly g;
  for (const auto& c : b) {
    if (c.empty()) continue;
    g = g.empty() ? c : ugcd(g, c);
    if (g.size() == 1) break;
  }
  umakeMonic(g);
  return g;
}

BPoly bprimitive(const BPoly& b, const UPoly& content) {
  BPoly out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].empty()) continue;
    UPoly q, r;
    udivmod(b[i], content, q, r);
    out[i] = std::move(q);
  }
  return out;
}

// Pseudo-remainder of a by b in Q[q][t].
BPoly bprem(BPoly a, const BPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const UPoly& lb = b.back();
  btrim(a);
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const int da = static_cast<int>(a.size()) - 1;
    const UPoly la = a.back();
    for (auto& c : a) c = umul(c, lb);
    const int shift = da - db;
    for (int j = 0; j <= db; ++j) {
      if (b[static_cast<std::size_t>(j)].empty()) continue;
      UPoly prod = umul(la, b[static_cast<std::size_t>(j)]);
      a[static_cast<std::size_t>(j + shift)] = usub(a[static_cast<std::size_t>(j + shift)], prod);
    }
    btrim(a);
  }
  return a;
}

QtPolynomial normalizeTrailing(QtPolynomial p) {
  if (p.isZero()) return p;
  Rational c = p.trailingTerm().coeff;
  if (c != 1) p *= Rational(1 / c);
  return p;
}

}  // namespace

QtPolynomial gcd(const QtPolynomial& a, const QtPolynomial& b) {
  if (a.isZero()) return normalizeTrailing(b);
  if (b.isZero()) return normalizeTrailing(a);
  if (a.isConstant() || b.isConstant()) return QtPolynomial(1);

  BPoly A = toB(a);
  BPoly B = toB(b);
  const UPoly ca = bcontent(A);
  const UPoly cb = bcontent(B);
  const UPoly content = ugcd(ca, cb);
  A = bprimitive(A, ca);
  B = bprimitive(B, cb);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty() && B.size() > 1) {
    BPoly R = bprem(A, B);
    A = std::move(B);
    if (R.empty()) {
      B.clear();
      break;
    }
    B = bprimitive(R, bcontent(R));
  }
  // B nonempty here means the last remainder was a nonzero element of Q[q],
  // so the primitive parts are coprime.
  BPoly g;
  if (B.empty()) {
    g = bprimitive(A, bcontent(A));
  } else {
    g = BPoly{UPoly{Rational(1)}};
  }
  for (auto& c : g) c = umul(c, content);
  btrim(g);
  return normalizeTrailing(fromB(g));
}

// --------------------------------------------------------------- QtRational

QtRational::QtRational(QtPolynomial num, QtPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.isZero()) throw DivisionByZero();
  if (num_.isZero()) {
    den_ = QtPolynomial(1);
    return;
  }
  if (!den_.isConstant() && !num_.isConstant()) {
    QtPolynomial g = gcd(num_, den_);
    if (!g.isOne()) {
      QtPolynomial n2, d2;
      if (!num_.divideExact(g, n2) || !den_.divideExact(g, d2)) throw InternalError("gcd does not divide");
      num_ = std::move(n2);
      den_ = std::move(d2);
    }
  }
  normalizeScale();
}

QtRational QtRational::fromCoprime(QtPolynomial num, QtPolynomial den) {
  if (den.isZero()) throw DivisionByZero();
  if (num.isZero()) return QtRational();
  QtRational r(Raw{}, std::move(num), std::move(den));
  r.normalizeScale();
  return r;
}

void QtRational::normalizeScale() {
  const Rational c = den_.trailingTerm().coeff;
  if (c != 1) {
    Rational inv = 1 / c;
    num_ *= inv;
    den_ *= inv;
  }
}

QtRational QtRational::operator-() const { return QtRational(Raw{}, -num_, den_); }

QtRational QtRational::inverse() const {
  if (num_.isZero()) throw DivisionByZero();
  return fromCoprime(den_, num_);
}

QtRational& QtRational::operator+=(const QtRational& o) {
  if (o.isZero()) return *this;
  if (isZero()) return *this = o;
  const bool oneA = den_.isOne();
  const bool oneB = o.den_.isOne();
  if (oneA && oneB) {
    num_ += o.num_;
    return *this;
  }
  if (oneA) {
    // a + c/d = (a d + c)/d is already reduced.
    QtPolynomial n = num_ * o.den_ + o.num_;
    return *this = fromCoprime(std::move(n), o.den_);
  }
  if (oneB) {
    QtPolynomial n = o.num_ * den_ + num_;
    return *this = fromCoprime(std::move(n), den_);
  }
  if (den_ == o.den_) {
    QtPolynomial n = num_ + o.num_;
    return *this = QtRational(std::move(n), den_);
  }
  const QtPolynomial g = gcd(den_, o.den_);
  QtPolynomial d1, d2;
  if (!den_.divideExact(g, d1) || !o.den_.divideExact(g, d2)) throw InternalError("gcd does not divide");
  QtPolynomial n = num_ * d2 + o.num_ * d1;
  QtPolynomial d = den_ * d2;
  if (n.isZero()) return *this = QtRational();
  // Any common factor of n and d already divides g.
  if (!g.isOne()) {
    QtPolynomial h = gcd(n, g);
    if (!h.isOne()) {
      QtPolynomial n2, dd;
      if (!n.divideExact(h, n2) || !d.divideExact(h, dd)) throw InternalError("gcd does not divide");
      n = std::move(n2);
      d = std::move(dd);
    }
  }
  return *this = fromCoprime(std::move(n), std::move(d));
}

QtRational& QtRational::operator-=(const QtRational& o) { return *this += -o; }

QtRational& QtRational::operator*=(const QtRational& o) {
  if (isZero() || o.isZero()) return *this = QtRational();
  if (den_.isOne() && o.den_.isOne()) {
    num_ *= o.num_;
    return *this;
  }
  QtPolynomial n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  auto cancel = [](QtPolynomial& n, QtPolynomial& d) {
    if (n.isConstant() || d.isConstant()) return;
    QtPolynomial g = gcd(n, d);
    if (g.isOne()) return;
    QtPolynomial a, b;
    if (!n.divideExact(g, a) || !d.divideExact(g, b)) throw InternalError("gcd does not divide");
    n = std::move(a);
    d = std::move(b);
  };
  cancel(n1, d2);
  cancel(n2, d1);
  return *this = fromCoprime(n1 * n2, d1 * d2);
}

QtRational& QtRational::operator/=(const QtRational& o) { return *this *= o.inverse(); }

namespace {

bool needsParens(const QtPolynomial& p) {
  return p.terms().size() > 1 || (p.terms().size() == 1 && sgn(p.terms()[0].coeff) < 0);
}

}  // namespace

std::string QtRational::toString() const {
  if (den_.isOne()) return num_.toString();
  std::string n = num_.toString();
  std::string d = den_.toString();
  if (needsParens(num_)) n = "(" + n + ")";
  if (needsParens(den_) || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

QtPolynomial tFactorial(int m) {
  QtPolynomial result(1);
  for (int i = 1; i <= m; ++i) {
    std::vector<QtPolynomial::Term> terms;
    for (int k = 0; k < i; ++k) terms.push_back({0, static_cast<std::uint32_t>(k), Rational(1)});
    result *= QtPolynomial::fromTerms(std::move(terms));
  }
  return result;
}

// ------------------------------------------------------------------ limits

QtRational limitT0(const QtRational& f) {
  if (f.isZero()) return f;
  const int k = std::min(f.numerator().valuationT(), f.denominator().valuationT());
  const QtPolynomial n = f.numerator().shiftT(k);
  const QtPolynomial d = f.denominator().shiftT(k);
  const QtPolynomial d0 = d.atTZero();
  if (d0.isZero()) throw PoleError(PoleError::Variable::T, "pole at t = 0 in " + f.toString());
  return QtRational(n.atTZero(), d0);
}

QtRational limitQ0(const QtRational& f) {
  if (f.isZero()) return f;
  const int k = std::min(f.numerator().valuationQ(), f.denominator().valuationQ());
  const QtPolynomial n = f.numerator().shiftQ(k);
  const QtPolynomial d = f.denominator().shiftQ(k);
  const QtPolynomial d0 = d.atQZero();
  if (d0.isZero()) throw PoleError(PoleError::Variable::Q, "pole at q = 0 in " + f.toString());
  return QtRational(n.atQZero(), d0);
}

Rational specializeZero(const QtRational& f) {
  const QtRational r = limitQ0(limitT0(f));
  if (!r.isConstant()) throw InternalError("iterated limit is not a constant: " + r.toString());
  return r.numerator().constantTerm();
}

}  // namespace asf
