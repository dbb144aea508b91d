#include "asf/fillings.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "asf/errors.hpp"

namespace asf {

bool attacks(const Box& a, const Box& b) {
  if (a == b) return false;
  if (a.row == b.row) return true;
  if (a.row == b.row + 1) return b.column > a.column;
  if (b.row == a.row + 1) return a.column > b.column;
  return false;
}

// ------------------------------------------------------------------ Diagram

Diagram::Diagram(Composition shape) : shape_(std::move(shape)) {}

int Diagram::height(int column) const {
  if (column < 1 || column > columns()) return 0;
  return shape_[static_cast<std::size_t>(column - 1)];
}

int Diagram::maxHeight() const {
  int h = 0;
  for (int p : shape_.parts()) h = std::max(h, p);
  return h;
}

bool Diagram::contains(const Box& b) const {
  return b.column >= 1 && b.column <= columns() && b.row >= 1 && b.row <= height(b.column);
}

bool Diagram::containsAugmented(const Box& b) const {
  return contains(b) || (b.row == 0 && b.column >= 1 && b.column <= columns());
}

std::vector<Box> Diagram::boxes(bool augmented) const {
  std::vector<Box> out;
  for (int row = maxHeight(); row >= 1; --row)
    for (int col = columns(); col >= 1; --col)
      if (height(col) >= row) out.push_back({col, row});
  if (augmented)
    for (int col = columns(); col >= 1; --col) out.push_back({col, 0});
  return out;
}

namespace {

void requireBox(const Diagram& d, const Box& u) {
  if (!d.contains(u))
    throw DomainError("box (" + std::to_string(u.column) + "," + std::to_string(u.row) + ") is not in dg'(" +
                      d.shape().toString() + ")");
}

}  // namespace

int legLength(const Diagram& d, const Box& u) {
  requireBox(d, u);
  return d.height(u.column) - u.row;
}

int armLength(const Diagram& d, const Box& u) {
  requireBox(d, u);
  const int hu = d.height(u.column);
  int arm = 0;
  for (int i = 1; i < u.column; ++i)
    if (d.height(i) <= hu && d.contains({i, u.row})) ++arm;
  for (int i = u.column + 1; i <= d.columns(); ++i)
    if (d.height(i) < hu && d.containsAugmented({i, u.row - 1})) ++arm;
  return arm;
}

std::vector<std::pair<Box, Box>> attackingPairs(const Diagram& d) {
  const std::vector<Box> all = d.boxes(true);
  std::vector<std::pair<Box, Box>> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (attacks(all[i], all[j])) out.push_back({all[i], all[j]});
  return out;
}

std::vector<std::array<Box, 3>> coinversionTripleCandidates(const Diagram& d) {
  std::vector<std::array<Box, 3>> out;
  for (const Box& u : d.boxes()) {
    const Box w{u.column, u.row - 1};
    const int hu = d.height(u.column);
    for (int i = 1; i < u.column; ++i)
      if (d.height(i) <= hu && d.contains({i, u.row})) out.push_back({u, Box{i, u.row}, w});
    for (int i = u.column + 1; i <= d.columns(); ++i)
      if (d.height(i) < hu && d.containsAugmented({i, u.row - 1})) out.push_back({u, Box{i, u.row - 1}, w});
  }
  return out;
}

// --------------------------------------------------------------- StarLabel

StarLabel StarLabel::parse(std::string_view text) {
  auto number = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) throw ParseError("bad label: " + std::string(text));
    return v;
  };
  if (text == "w") return omega(0);
  if (text.starts_with("w+")) return omega(number(text.substr(2)));
  const int v = number(text);
  if (v < 1) throw ParseError("labels are positive: " + std::string(text));
  return finite(v);
}

std::string StarLabel::toString() const {
  if (isFinite()) return std::to_string(value());
  return offset() == 0 ? "w" : "w+" + std::to_string(offset());
}

std::vector<StarLabel> standardBasement(int columns) {
  std::vector<StarLabel> b;
  for (int j = 1; j <= columns; ++j) b.push_back(StarLabel::finite(j));
  return b;
}

std::vector<StarLabel> starBasement(int headLength, int columns) {
  std::vector<StarLabel> b;
  for (int j = 1; j <= columns; ++j)
    b.push_back(j <= headLength ? StarLabel::finite(j) : StarLabel::omega(j - headLength - 1));
  return b;
}

// ------------------------------------------------------------------ Filling

Filling::Filling(Diagram diagram, std::vector<std::vector<StarLabel>> columns, std::vector<StarLabel> basement)
    : diagram_(std::move(diagram)), columns_(std::move(columns)), basement_(std::move(basement)) {
  const int n = diagram_.columns();
  if (static_cast<int>(columns_.size()) != n || static_cast<int>(basement_.size()) != n)
    throw DomainError("filling does not match shape " + diagram_.shape().toString());
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(columns_[static_cast<std::size_t>(i)].size()) != diagram_.height(i + 1))
      throw DomainError("column " + std::to_string(i + 1) + " has the wrong height for shape " +
                        diagram_.shape().toString());
}

namespace {

std::vector<std::vector<StarLabel>> toLabels(const std::vector<std::vector<int>>& columns) {
  std::vector<std::vector<StarLabel>> out;
  for (const auto& col : columns) {
    std::vector<StarLabel> c;
    for (int v : col) {
      if (v < 1) throw DomainError("labels are positive");
      c.push_back(StarLabel::finite(v));
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

Filling Filling::standard(const Composition& shape, const std::vector<std::vector<int>>& columns) {
  return Filling(Diagram(shape), toLabels(columns), standardBasement(shape.length()));
}

Filling Filling::star(const SigmaPair& pair, const std::vector<std::vector<int>>& columns) {
  const Composition shape = concat(pair.mu(), reverseComposition(pair.lambda().asComposition()));
  return Filling(Diagram(shape), toLabels(columns), starBasement(pair.mu().length(), shape.length()));
}

StarLabel Filling::at(const Box& b) const {
  if (!diagram_.containsAugmented(b)) requireBox(diagram_, b);
  if (b.row == 0) return basement_[static_cast<std::size_t>(b.column - 1)];
  return columns_[static_cast<std::size_t>(b.column - 1)][static_cast<std::size_t>(b.row - 1)];
}

ExponentVector Filling::monomial() const {
  std::vector<ExponentVector::Entry> e;
  for (const auto& col : columns_)
    for (const StarLabel& l : col)
      if (l.isFinite()) e.push_back({l.value(), 1});
  return ExponentVector::fromEntries(std::move(e));
}

// --------------------------------------------------------------- statistics

bool isNonAttacking(const Filling& f) {
  for (const auto& [a, b] : attackingPairs(f.diagram()))
    if (f.at(a) == f.at(b)) return false;
  return true;
}

std::vector<Box> descents(const Filling& f) {
  std::vector<Box> out;
  for (const Box& u : f.diagram().boxes())
    if (f.at(u) > f.at({u.column, u.row - 1})) out.push_back(u);
  return out;
}

int majStatistic(const Filling& f) {
  int maj = 0;
  for (const Box& u : descents(f)) maj += legLength(f.diagram(), u) + 1;
  return maj;
}

InvStatistics invStatistics(const Filling& f) {
  const Diagram& d = f.diagram();
  InvStatistics s;
  for (const auto& [a, b] : attackingPairs(d))
    if (f.at(a) > f.at(b)) ++s.invSet;
  int weakPairs = 0;
  for (int i = 1; i <= d.columns(); ++i)
    for (int j = i + 1; j <= d.columns(); ++j)
      if (d.height(i) <= d.height(j)) ++weakPairs;
  int desArms = 0;
  for (const Box& u : descents(f)) desArms += armLength(d, u);
  int totalArms = 0;
  for (const Box& u : d.boxes()) totalArms += armLength(d, u);
  s.inv = s.invSet - weakPairs - desArms;
  s.coinv = totalArms - s.inv;
  return s;
}

namespace {

template <class T>
bool cyclicIncrease(const T& u, const T& v, const T& w) {
  return (u < v && v < w) || (v < w && w < u) || (w < u && u < v);
}

}  // namespace

int countCoinversionTriples(const Filling& f) {
  int count = 0;
  for (const auto& [u, v, w] : coinversionTripleCandidates(f.diagram()))
    if (cyclicIncrease(f.at(u), f.at(v), f.at(w))) ++count;
  return count;
}

namespace {

QtPolynomial oneMinus(std::uint32_t qExp, std::uint32_t tExp) {
  return QtPolynomial(1) - QtPolynomial::monomial(qExp, tExp);
}

QtRational weightImpl(const Filling& f, bool stableRowOne) {
  if (!isNonAttacking(f)) throw DomainError("filling is attacking");
  const Diagram& d = f.diagram();
  const int maj = majStatistic(f);
  const int coinv = invStatistics(f).coinv;
  QtPolynomial num = QtPolynomial::monomial(static_cast<std::uint32_t>(maj), static_cast<std::uint32_t>(coinv));
  QtPolynomial den(1);
  for (const Box& u : d.boxes()) {
    if (f.at(u) == f.at({u.column, u.row - 1})) continue;
    num *= oneMinus(0, 1);
    if (stableRowOne && u.row == 1) continue;
    den *= oneMinus(static_cast<std::uint32_t>(legLength(d, u) + 1), static_cast<std::uint32_t>(armLength(d, u) + 1));
  }
  return QtRational(std::move(num), std::move(den));
}

}  // namespace

QtRational hhlWeight(const Filling& f) { return weightImpl(f, false); }

QtRational stableGammaWeight(const Filling& f, int headLength) {
  const Diagram& d = f.diagram();
  if (headLength < 0 || headLength > d.columns()) throw DomainError("head length out of range");
  for (int i = headLength + 1; i <= d.columns(); ++i)
    if (d.height(i) != 0) throw DomainError("stable weight needs empty columns beyond the head");
  return weightImpl(f, true);
}

// ------------------------------------------------------------ the search

namespace {

struct Ref {
  int pos = -1;  // index of a placed box, or -1 for a constant
  std::int64_t code = 0;
};

struct Slot {
  Box box;
  std::vector<int> neqPos;
  std::vector<std::int64_t> neqConst;
  int abovePos = -1;
  std::int64_t basementBelow = -1;  // set for row 1
  std::vector<std::array<Ref, 3>> triples;
};

class Search {
 public:
  Search(const FillingSearch& search, const std::function<void(const Filling&)>& visit)
      : search_(search), visit_(visit), diagram_(search.shape) {
    if (static_cast<int>(search.basement.size()) != diagram_.columns())
      throw DomainError("basement length does not match the shape");
    const std::vector<Box> order = diagram_.boxes();
    std::map<Box, int> index;
    for (std::size_t p = 0; p < order.size(); ++p) index[order[p]] = static_cast<int>(p);
    auto ref = [&](const Box& b) {
      if (b.row == 0) return Ref{-1, search.basement[static_cast<std::size_t>(b.column - 1)].code()};
      return Ref{index.at(b), 0};
    };

    slots_.resize(order.size());
    for (std::size_t p = 0; p < order.size(); ++p) {
      Slot& s = slots_[p];
      s.box = order[p];
      for (std::size_t q = 0; q < p; ++q)
        if (attacks(order[q], order[p])) s.neqPos.push_back(static_cast<int>(q));
      if (s.box.row == 1) {
        for (int i = s.box.column + 1; i <= diagram_.columns(); ++i)
          s.neqConst.push_back(search.basement[static_cast<std::size_t>(i - 1)].code());
        s.basementBelow = search.basement[static_cast<std::size_t>(s.box.column - 1)].code();
      }
      const Box above{s.box.column, s.box.row + 1};
      if (diagram_.contains(above)) s.abovePos = index.at(above);
    }
    if (search.noCoinversions) {
      for (const auto& [u, v, w] : coinversionTripleCandidates(diagram_)) {
        std::array<Ref, 3> t{ref(u), ref(v), ref(w)};
        const int last = std::max({t[0].pos, t[1].pos, t[2].pos});
        slots_[static_cast<std::size_t>(last)].triples.push_back(t);
      }
    }

    labels_.assign(order.size(), 0);
    counts_.assign(static_cast<std::size_t>(search.maxLabel) + 1, 0);
    if (search.fixedFrom >= 0)
      for (int c : search.fixedContent) demand_ += c;
  }

  void run() {
    if (demand_ > static_cast<int>(slots_.size())) return;
    place(0);
  }

 private:
  bool allowed(std::size_t p, std::int64_t label) const {
    const Slot& s = slots_[p];
    for (int q : s.neqPos)
      if (labels_[static_cast<std::size_t>(q)] == label) return false;
    for (std::int64_t c : s.neqConst)
      if (c == label) return false;
    if (search_.noDescents) {
      if (s.abovePos >= 0 && labels_[static_cast<std::size_t>(s.abovePos)] > label) return false;
      if (s.box.row == 1 && label > s.basementBelow) return false;
    }
    if (search_.fixedFrom >= 0 && label > search_.fixedFrom) {
      const std::size_t idx = static_cast<std::size_t>(label - search_.fixedFrom - 1);
      if (idx >= search_.fixedContent.size()) return false;
      if (counts_[static_cast<std::size_t>(label)] >= search_.fixedContent[idx]) return false;
    }
    return true;
  }

  std::int64_t value(const Ref& r) const { return r.pos >= 0 ? labels_[static_cast<std::size_t>(r.pos)] : r.code; }

  bool completesTriple(std::size_t p) const {
    for (const auto& t : slots_[p].triples)
      if (cyclicIncrease(value(t[0]), value(t[1]), value(t[2]))) return true;
    return false;
  }

  void place(std::size_t p) {
    if (p == slots_.size()) {
      emit();
      return;
    }
    const int remainingAfter = static_cast<int>(slots_.size() - p - 1);
    for (int label = 1; label <= search_.maxLabel; ++label) {
      if (!allowed(p, label)) continue;
      const bool fixed = search_.fixedFrom >= 0 && label > search_.fixedFrom;
      const int demandAfter = demand_ - (fixed ? 1 : 0);
      if (demandAfter > remainingAfter) continue;
      labels_[p] = label;
      if (search_.noCoinversions && completesTriple(p)) continue;
      ++counts_[static_cast<std::size_t>(label)];
      demand_ = demandAfter;
      place(p + 1);
      --counts_[static_cast<std::size_t>(label)];
      demand_ += fixed ? 1 : 0;
    }
    labels_[p] = 0;
  }

  void emit() {
    std::vector<std::vector<StarLabel>> columns(static_cast<std::size_t>(diagram_.columns()));
    for (int i = 1; i <= diagram_.columns(); ++i)
      columns[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(diagram_.height(i)));
    for (std::size_t p = 0; p < slots_.size(); ++p) {
      const Box& b = slots_[p].box;
      columns[static_cast<std::size_t>(b.column - 1)][static_cast<std::size_t>(b.row - 1)] =
          StarLabel::finite(static_cast<int>(labels_[p]));
    }
    visit_(Filling(diagram_, std::move(columns), search_.basement));
  }

  const FillingSearch& search_;
  const std::function<void(const Filling&)>& visit_;
  Diagram diagram_;
  std::vector<Slot> slots_;
  std::vector<std::int64_t> labels_;
  std::vector<int> counts_;
  int demand_ = 0;
};

}  // namespace

void searchFillings(const FillingSearch& search, const std::function<void(const Filling&)>& visit) {
  Search(search, visit).run();
}

void forEachNonAttackingFilling(const Composition& mu, int n, const std::function<void(const Filling&)>& visit) {
  if (n < mu.length()) throw DomainError("need at least l(mu) labels");
  FillingSearch search;
  search.shape = mu;
  search.basement = standardBasement(mu.length());
  search.maxLabel = n;
  searchFillings(search, visit);
}

std::vector<Filling> enumerateNonAttackingFillings(const Composition& mu, int n) {
  std::vector<Filling> out;
  forEachNonAttackingFilling(mu, n, [&](const Filling& f) { out.push_back(f); });
  return out;
}

void forEachKeyFilling(const Weight& alpha, const std::function<void(const Filling&)>& visit) {
  FillingSearch search;
  search.shape = Composition(alpha.entries);
  search.basement = standardBasement(alpha.length());
  search.maxLabel = alpha.length();
  search.noDescents = true;
  search.noCoinversions = true;
  searchFillings(search, visit);
}

std::vector<Filling> enumerateKeyFillings(const Weight& alpha) {
  std::vector<Filling> out;
  forEachKeyFilling(alpha, [&](const Filling& f) { out.push_back(f); });
  return out;
}

void forEachStarLabelling(const SigmaPair& pair, const Partition& tail,
                          const std::function<void(const Filling&)>& visit) {
  FillingSearch search;
  search.shape = concat(pair.mu(), reverseComposition(pair.lambda().asComposition()));
  search.basement = starBasement(pair.mu().length(), search.shape.length());
  search.maxLabel = pair.mu().length() + tail.length();
  search.noDescents = true;
  search.noCoinversions = true;
  search.fixedFrom = pair.mu().length();
  search.fixedContent = tail.parts();
  searchFillings(search, visit);
}

std::vector<Filling> enumerateStarLabellings(const SigmaPair& pair, const Partition& tail) {
  std::vector<Filling> out;
  forEachStarLabelling(pair, tail, [&](const Filling& f) { out.push_back(f); });
  return out;
}

// -------------------------------------------------- HHL sums over fillings

namespace {

// 1 - q^c t^d = prod over e | gcd(c,d) of Phi_e(q^{c/g} t^{d/g}), with the
// e = 1 factor written as 1 - x. Distinct keys are distinct irreducibles.
struct FactorKey {
  int a = 0;
  int b = 0;
  int e = 0;
  friend auto operator<=>(const FactorKey&, const FactorKey&) = default;
};

std::vector<std::int64_t> cyclotomic(int e) {
  // x^e - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> p(static_cast<std::size_t>(e) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(e)] = 1;
  for (int d = 1; d < e; ++d) {
    if (e % d != 0) continue;
    const std::vector<std::int64_t> div = cyclotomic(d);
    const std::size_t dd = div.size() - 1;
    std::vector<std::int64_t> quot(p.size() - dd, 0);
    for (std::size_t k = p.size(); k-- > dd;) {
      const std::int64_t c = p[k];  // divisor is monic
      quot[k - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) p[k - dd + j] -= c * div[j];
    }
    p = std::move(quot);
  }
  return p;
}

QtPolynomial factorPolynomial(const FactorKey& key) {
  if (key.e == 1) return oneMinus(static_cast<std::uint32_t>(key.a), static_cast<std::uint32_t>(key.b));
  const std::vector<std::int64_t> c = cyclotomic(key.e);
  std::vector<QtPolynomial::Term> terms;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0)
      terms.push_back({static_cast<std::uint32_t>(key.a * static_cast<int>(k)),
                       static_cast<std::uint32_t>(key.b * static_cast<int>(k)), Rational(static_cast<long>(c[k]))});
  return QtPolynomial::fromTerms(std::move(terms));
}

using FactorMultiset = std::vector<FactorKey>;

void appendFactors(int c, int d, FactorMultiset& out) {
  const int g = std::gcd(c, d);
  for (int e = 1; e <= g; ++e)
    if (g % e == 0) out.push_back({c / g, d / g, e});
}

class HhlAccumulator {
 public:
  void add(const ExponentVector& mono, int qExp, int tExp, int oneMinusT, const std::vector<std::pair<int, int>>& dens) {
    FactorMultiset key;
    for (const auto& [c, d] : dens) appendFactors(c, d, key);
    std::sort(key.begin(), key.end());
    QtPolynomial& slot = groups_[mono][key];
    slot += QtPolynomial::monomial(static_cast<std::uint32_t>(qExp), static_cast<std::uint32_t>(tExp)) *
            oneMinusTPower(oneMinusT);
  }

  std::map<ExponentVector, QtRational> results() {
    std::map<ExponentVector, QtRational> out;
    for (auto& [mono, byKey] : groups_) {
      std::map<FactorKey, int> maxMult;
      for (const auto& [key, num] : byKey) {
        if (num.isZero()) continue;
        for (const auto& [f, m] : multiplicities(key)) maxMult[f] = std::max(maxMult[f], m);
      }
      QtPolynomial numerator;
      for (const auto& [key, num] : byKey) {
        if (num.isZero()) continue;
        std::map<FactorKey, int> mult = multiplicities(key);
        QtPolynomial term = num;
        for (const auto& [f, m] : maxMult) {
          const int missing = m - (mult.count(f) ? mult[f] : 0);
          if (missing > 0) term *= factor(f).pow(static_cast<unsigned>(missing));
        }
        numerator += term;
      }
      if (numerator.isZero()) continue;
      QtPolynomial denominator(1);
      for (auto& [f, m] : maxMult) {
        const QtPolynomial& fp = factor(f);
        QtPolynomial quotient;
        while (m > 0 && numerator.divideExact(fp, quotient)) {
          numerator = std::move(quotient);
          --m;
        }
        if (m > 0) denominator *= fp.pow(static_cast<unsigned>(m));
      }
      out.emplace(mono, QtRational::fromCoprime(std::move(numerator), std::move(denominator)));
    }
    return out;
  }

 private:
  static std::map<FactorKey, int> multiplicities(const FactorMultiset& key) {
    std::map<FactorKey, int> m;
    for (const auto& f : key) ++m[f];
    return m;
  }

  const QtPolynomial& factor(const FactorKey& key) {
    auto it = factors_.find(key);
    if (it == factors_.end()) it = factors_.emplace(key, factorPolynomial(key)).first;
    return it->second;
  }

  const QtPolynomial& oneMinusTPower(int m) {
    while (static_cast<int>(powers_.size()) <= m)
      powers_.push_back(powers_.empty() ? QtPolynomial(1) : powers_.back() * oneMinus(0, 1));
    return powers_[static_cast<std::size_t>(m)];
  }

  std::map<ExponentVector, std::map<FactorMultiset, QtPolynomial>> groups_;
  std::map<FactorKey, QtPolynomial> factors_;
  std::vector<QtPolynomial> powers_;
};

// Adds one filling to the accumulator. Row-1 boxes get a bare (1 - t) when
// stableRowOne is set.
void accumulate(HhlAccumulator& acc, const Filling& f, const ExponentVector& mono, bool stableRowOne) {
  const Diagram& d = f.diagram();
  const int maj = majStatistic(f);
  const int coinv = invStatistics(f).coinv;
  int changed = 0;
  std::vector<std::pair<int, int>> dens;
  for (const Box& u : d.boxes()) {
    if (f.at(u) == f.at({u.column, u.row - 1})) continue;
    ++changed;
    if (stableRowOne && u.row == 1) continue;
    dens.push_back({legLength(d, u) + 1, armLength(d, u) + 1});
  }
  acc.add(mono, maj, coinv, changed, dens);
}

}  // namespace

QtPoly computeE(const Composition& mu) {
  HhlAccumulator acc;
  forEachNonAttackingFilling(mu, mu.length(), [&](const Filling& f) { accumulate(acc, f, f.monomial(), false); });
  std::vector<QtPoly::Term> terms;
  for (auto& [mono, c] : acc.results()) terms.push_back({mono, std::move(c)});
  return QtPoly::fromTerms(std::move(terms));
}

std::vector<StableTerm> stableMacdonaldExpansion(const Composition& mu) {
  const int n = mu.length();
  std::vector<StableTerm> out;
  for (int size = 0; size <= mu.size(); ++size) {
    for (const Partition& tail : partitionsOf(size)) {
      const int l = tail.length();
      FillingSearch search;
      search.shape = mu.paddedTo(n + l);
      search.basement = standardBasement(n + l);
      search.maxLabel = n + l;
      search.fixedFrom = n;
      search.fixedContent = tail.parts();
      HhlAccumulator acc;
      searchFillings(search, [&](const Filling& f) {
        std::vector<int> head(static_cast<std::size_t>(n), 0);
        for (const auto& col : f.columns())
          for (const StarLabel& lab : col)
            if (lab.value() <= n) ++head[static_cast<std::size_t>(lab.value() - 1)];
        accumulate(acc, f, ExponentVector::fromDense(head), true);
      });
      for (auto& [mono, c] : acc.results())
        out.push_back({Composition(mono.dense(n)), tail, std::move(c)});
    }
  }
  return out;
}

}  // namespace asf
