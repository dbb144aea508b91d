#pragma once

// Hecke operators, Hecke symmetrizers, isobaric divided differences, Weyl
// symmetrizers and the coefficientwise q = t = 0 specialization.

#include "asf/polynomial.hpp"

namespace asf {

inline constexpr int kDefaultMaxSymCost = 7;

/// T_i f = s_i f + (1-t) x_i (f - s_i f)/(x_i - x_{i+1}).
QtPoly applyTi(int i, const QtPoly& p);

/// eps_k^(n) = (1/[n-k]_t!) sum over the Young subgroup on x_{k+1..n} of
/// t^{C(n-k,2) - l(w)} T_w. Throws ResourceGuardError when n - k exceeds
/// maxSymCost and DomainError on bad ranges.
QtPoly applyEpsilonKn(int k, int n, const QtPoly& p, int maxSymCost = kDefaultMaxSymCost);

/// xi_i f = (x_i f - x_{i+1} s_i f)/(x_i - x_{i+1}), expanded monomialwise.
template <class R>
SparsePolynomial<R> applyXi(int i, const SparsePolynomial<R>& p);

/// Same operator computed by explicit division; used as a cross-check.
template <class R>
SparsePolynomial<R> applyXiByDivision(int i, const SparsePolynomial<R>& p);

/// xi_to ... xi_{from+1} xi_from p (xi_from acts first). Empty when from > to.
template <class R>
SparsePolynomial<R> applyXiChain(int from, int to, const SparsePolynomial<R>& p);

enum class WMethod { SumFormula, XiTower };

/// Partial Weyl symmetrizer over x_{k+1}, ..., x_n. SumFormula divides the
/// alternant by the Vandermonde in the tail; XiTower uses
/// W_k = xi_{n-1} ... xi_{k+1} W_{k+1}, W_n = id.
template <class R>
SparsePolynomial<R> applyWkn(int k, int n, const SparsePolynomial<R>& p, WMethod method,
                             int maxSymCost = kDefaultMaxSymCost);

/// Coefficientwise lim_{q->0} lim_{t->0}. A PoleError names the monomial
/// whose coefficient has the pole.
RatPoly upsilonPolynomial(const QtPoly& p);

}  // namespace asf
