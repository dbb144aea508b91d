#pragma once

// Column diagrams, labellings with finite or omega-shifted labels, the HHL
// statistics and the pruned enumerations built on them.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asf/combinatorics.hpp"
#include "asf/polynomial.hpp"
#include "asf/qt.hpp"

namespace asf {

/// Column index >= 1, row index >= 0 (row 0 is the basement).
struct Box {
  int column = 0;
  int row = 0;

  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// Reading order: rows top to bottom, right to left within a row.
inline bool readingBefore(const Box& a, const Box& b) {
  return a.row != b.row ? a.row > b.row : a.column > b.column;
}

/// Two distinct boxes in the same row, or in consecutive rows with the lower
/// one strictly to the right.
bool attacks(const Box& a, const Box& b);

class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(Composition shape);

  const Composition& shape() const { return shape_; }
  int columns() const { return shape_.length(); }
  /// 0 for columns outside 1..columns().
  int height(int column) const;
  int maxHeight() const;
  int size() const { return shape_.size(); }

  bool contains(const Box& b) const;
  /// Also accepts the basement boxes (i,0).
  bool containsAugmented(const Box& b) const;

  /// Boxes in reading order, basement last when augmented.
  std::vector<Box> boxes(bool augmented = false) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  Composition shape_;
};

/// mu_i - j. Throws DomainError for a box outside the diagram.
int legLength(const Diagram& d, const Box& u);
/// |arm_left(u)| + |arm_right(u)|, the right arm living in the row below.
int armLength(const Diagram& d, const Box& u);

/// Unordered attacking pairs of the augmented diagram, each listed with the
/// earlier box (in reading order) first.
std::vector<std::pair<Box, Box>> attackingPairs(const Diagram& d);

/// Triples (u, v, w): w is the box below u, v is an arm box of u.
std::vector<std::array<Box, 3>> coinversionTripleCandidates(const Diagram& d);

/// A positive integer, or omega + k for k >= 0. Every finite label is below
/// every omega label.
class StarLabel {
 public:
  static constexpr std::int64_t kOmega = std::int64_t{1} << 40;

  constexpr StarLabel() = default;
  static constexpr StarLabel finite(int value) { return StarLabel(value); }
  static constexpr StarLabel omega(int offset) { return StarLabel(kOmega + offset); }
  /// "5" or "w+2".
  static StarLabel parse(std::string_view text);

  bool isFinite() const { return code_ < kOmega; }
  int value() const { return static_cast<int>(code_); }
  int offset() const { return static_cast<int>(code_ - kOmega); }
  std::int64_t code() const { return code_; }

  std::string toString() const;

  friend bool operator==(const StarLabel&, const StarLabel&) = default;
  friend auto operator<=>(const StarLabel&, const StarLabel&) = default;

 private:
  constexpr explicit StarLabel(std::int64_t code) : code_(code) {}
  std::int64_t code_ = 0;
};

/// Basement j in column j.
std::vector<StarLabel> standardBasement(int columns);
/// Finite 1..headLength, then omega, omega+1, ...
std::vector<StarLabel> starBasement(int headLength, int columns);

class Filling {
 public:
  Filling() = default;
  /// columns[i][j-1] labels box (i+1, j). Throws DomainError on a shape
  /// mismatch.
  Filling(Diagram diagram, std::vector<std::vector<StarLabel>> columns, std::vector<StarLabel> basement);

  /// Finite labels, basement j in column j.
  static Filling standard(const Composition& shape, const std::vector<std::vector<int>>& columns);
  /// Labelling of dg'(mu * rev(lambda)) with the star basement.
  static Filling star(const SigmaPair& pair, const std::vector<std::vector<int>>& columns);

  const Diagram& diagram() const { return diagram_; }
  const std::vector<std::vector<StarLabel>>& columns() const { return columns_; }
  const std::vector<StarLabel>& basement() const { return basement_; }

  StarLabel at(const Box& b) const;

  /// x^sigma: one factor x_v per box with finite label v.
  ExponentVector monomial() const;

  friend bool operator==(const Filling&, const Filling&) = default;

 private:
  Diagram diagram_;
  std::vector<std::vector<StarLabel>> columns_;
  std::vector<StarLabel> basement_;
};

bool isNonAttacking(const Filling& f);
std::vector<Box> descents(const Filling& f);
int majStatistic(const Filling& f);

struct InvStatistics {
  int invSet = 0;  // |Inv|
  int inv = 0;
  int coinv = 0;
};
InvStatistics invStatistics(const Filling& f);

/// Co-inversion triples of both types.
int countCoinversionTriples(const Filling& f);

/// q^maj t^coinv prod (1-t)/(1-q^{leg+1}t^{a+1}) over boxes whose label
/// differs from the one below. Throws DomainError on an attacking filling.
QtRational hhlWeight(const Filling& f);

/// Stable-limit weight for a filling of mu * 0^m: like hhlWeight, but boxes
/// in row 1 contribute a bare (1-t). Throws DomainError unless every column
/// beyond headLength is empty.
QtRational stableGammaWeight(const Filling& f, int headLength);

/// Generic pruned search in reading order. Labels are 1..maxLabel.
struct FillingSearch {
  Composition shape;
  std::vector<StarLabel> basement;
  int maxLabel = 0;
  bool noDescents = false;
  bool noCoinversions = false;
  /// Labels above fixedFrom must be used exactly fixedContent[l-fixedFrom-1]
  /// times; disabled when fixedFrom < 0.
  int fixedFrom = -1;
  std::vector<int> fixedContent;
};

void searchFillings(const FillingSearch& spec, const std::function<void(const Filling&)>& visit);

/// Every non-attacking filling of mu with labels in [n].
void forEachNonAttackingFilling(const Composition& mu, int n, const std::function<void(const Filling&)>& visit);
std::vector<Filling> enumerateNonAttackingFillings(const Composition& mu, int n);

/// The set L(alpha): non-attacking, maj = 0, coinv = 0, labels in [l(alpha)].
void forEachKeyFilling(const Weight& alpha, const std::function<void(const Filling&)>& visit);
std::vector<Filling> enumerateKeyFillings(const Weight& alpha);

/// Labellings of dg'(mu * rev(lambda)) with labels in 1..l(mu)+l(nu), star
/// basement non-attacking, no descents, no co-inversion triples, and label
/// l(mu)+i used exactly nu_i times.
void forEachStarLabelling(const SigmaPair& pair, const Partition& tail,
                          const std::function<void(const Filling&)>& visit);
std::vector<Filling> enumerateStarLabellings(const SigmaPair& pair, const Partition& tail);

/// E_mu by the HHL sum over non-attacking fillings with labels in [l(mu)].
QtPoly computeE(const Composition& mu);

/// One term x^head m_tail[x_{n+1} + ...] of the stable-limit expansion.
struct StableTerm {
  Composition head;
  Partition tail;
  QtRational coeff;
};

/// Stable-limit HHL expansion of E~_(mu|empty) with n = l(mu): for every
/// partition |tail| <= |mu|, sums the stable weights of non-attacking
/// fillings of mu * 0^{l(tail)} with tail content fixed. Zero terms omitted.
std::vector<StableTerm> stableMacdonaldExpansion(const Composition& mu);

}  // namespace asf
