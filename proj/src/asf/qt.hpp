#pragma once

// Exact arithmetic in Q[q,t] and its fraction field Q(q,t).

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace asf {

using Rational = mpq_class;

inline bool isZero(const Rational& r) { return sgn(r) == 0; }
std::string toText(const Rational& r);

/// Polynomial in q and t with rational coefficients. Terms are kept sorted
/// by (q-exponent, t-exponent) ascending and never store a zero.
class QtPolynomial {
 public:
  struct Term {
    std::uint32_t q = 0;
    std::uint32_t t = 0;
    Rational coeff;
  };

  QtPolynomial() = default;
  QtPolynomial(int constant);  // NOLINT(google-explicit-constructor)
  QtPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static QtPolynomial q();
  static QtPolynomial t();
  static QtPolynomial monomial(std::uint32_t qExp, std::uint32_t tExp, const Rational& c = 1);
  /// Builds from arbitrary terms, merging duplicates and dropping zeros.
  static QtPolynomial fromTerms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].q == 0 && terms_[0].t == 0); }
  bool isOne() const;
  Rational constantTerm() const;

  int degreeQ() const;
  int degreeT() const;
  /// Largest k with t^k dividing the polynomial (0 for the zero polynomial).
  int valuationT() const;
  int valuationQ() const;

  /// Highest term in (q,t)-lexicographic order.
  const Term& leadingTerm() const { return terms_.back(); }
  /// Lowest term in (q,t)-lexicographic order.
  const Term& trailingTerm() const { return terms_.front(); }

  QtPolynomial operator-() const;
  QtPolynomial& operator+=(const QtPolynomial& o);
  QtPolynomial& operator-=(const QtPolynomial& o);
  QtPolynomial& operator*=(const QtPolynomial& o);
  QtPolynomial& operator*=(const Rational& c);
  friend QtPolynomial operator+(QtPolynomial a, const QtPolynomial& b) { return a += b; }
  friend QtPolynomial operator-(QtPolynomial a, const QtPolynomial& b) { return a -= b; }
  friend QtPolynomial operator*(const QtPolynomial& a, const QtPolynomial& b);
  friend QtPolynomial operator*(QtPolynomial a, const Rational& c) { return a *= c; }

  QtPolynomial pow(unsigned e) const;
  /// Divides by t^k / q^k; the caller guarantees divisibility.
  QtPolynomial shiftT(int k) const;
  QtPolynomial shiftQ(int k) const;
  /// Substitutes t = 0 (resp. q = 0).
  QtPolynomial atTZero() const;
  QtPolynomial atQZero() const;
  /// Swaps the roles of q and t.
  QtPolynomial swapped() const;

  /// Quotient if `divisor` divides *this exactly, otherwise false.
  bool divideExact(const QtPolynomial& divisor, QtPolynomial& quotient) const;

  friend bool operator==(const QtPolynomial& a, const QtPolynomial& b);
  /// Deterministic total order (used as a map key).
  friend bool operator<(const QtPolynomial& a, const QtPolynomial& b);

  /// "1 - q*t^2", terms ascending by q-degree then t-degree.
  std::string toString() const;

 private:
  std::vector<Term> terms_;
};

/// Greatest common divisor in Q[q,t], normalized so that its trailing term
/// has coefficient 1. gcd(0, 0) = 0.
QtPolynomial gcd(const QtPolynomial& a, const QtPolynomial& b);

/// Element of Q(q,t) in canonical form: numerator and denominator coprime and
/// the denominator's trailing term (lowest in (q,t)-lex order) equal to 1.
/// Canonical forms are unique, so equality is structural.
class QtRational {
 public:
  QtRational() : num_(0), den_(1) {}
  QtRational(int c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QtRational(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QtRational(QtPolynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Reduces to canonical form. Throws DivisionByZero when den is zero.
  QtRational(QtPolynomial num, QtPolynomial den);

  /// Skips the gcd: the caller guarantees num and den are coprime and den's
  /// trailing coefficient is nonzero. Only the scale is normalized.
  static QtRational fromCoprime(QtPolynomial num, QtPolynomial den);

  static QtRational q() { return QtRational(QtPolynomial::q()); }
  static QtRational t() { return QtRational(QtPolynomial::t()); }

  const QtPolynomial& numerator() const { return num_; }
  const QtPolynomial& denominator() const { return den_; }
  bool isZero() const { return num_.isZero(); }
  bool isPolynomial() const { return den_.isOne(); }
  bool isConstant() const { return den_.isOne() && num_.isConstant(); }

  QtRational operator-() const;
  QtRational inverse() const;
  QtRational& operator+=(const QtRational& o);
  QtRational& operator-=(const QtRational& o);
  QtRational& operator*=(const QtRational& o);
  QtRational& operator/=(const QtRational& o);
  friend QtRational operator+(QtRational a, const QtRational& b) { return a += b; }
  friend QtRational operator-(QtRational a, const QtRational& b) { return a -= b; }
  friend QtRational operator*(QtRational a, const QtRational& b) { return a *= b; }
  friend QtRational operator/(QtRational a, const QtRational& b) { return a /= b; }

  friend bool operator==(const QtRational& a, const QtRational& b) = default;

  /// Re-runs canonicalization; idempotent on canonical values.
  QtRational canonical() const { return QtRational(num_, den_); }

  /// "(1 - t)/(1 - q*t^2)", or the bare numerator when the denominator is 1.
  std::string toString() const;

 private:
  struct Raw {};
  QtRational(Raw, QtPolynomial num, QtPolynomial den) : num_(std::move(num)), den_(std::move(den)) {}
  void normalizeScale();

  QtPolynomial num_;
  QtPolynomial den_;
};

inline bool isZero(const QtPolynomial& p) { return p.isZero(); }
inline std::string toText(const QtPolynomial& p) { return p.toString(); }
inline bool isZero(const QtRational& r) { return r.isZero(); }
inline std::string toText(const QtRational& r) { return r.toString(); }

/// [m]_t! = prod_{i=1..m} (1 - t^i)/(1 - t), as a polynomial in t.
QtPolynomial tFactorial(int m);

/// lim_{t->0} f. Throws PoleError(T) when f has a pole along t = 0.
QtRational limitT0(const QtRational& f);
/// lim_{q->0} f. Throws PoleError(Q) when f has a pole along q = 0.
QtRational limitQ0(const QtRational& f);
/// lim_{q->0} lim_{t->0} f as a plain rational number.
Rational specializeZero(const QtRational& f);

}  // namespace asf
