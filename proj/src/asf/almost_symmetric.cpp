#include "asf/almost_symmetric.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "asf/errors.hpp"
#include "asf/fillings.hpp"

namespace asf {

// --------------------------------------------------------- AlmostSymFunction

void AlmostSymFunction::add(const Composition& head, const Partition& tail, const Rational& c) {
  if (sgn(c) == 0) return;
  Composition h = head.reduced();
  if (h.length() > threshold_)
    throw DomainError("head " + h.toString() + " is longer than the threshold " + std::to_string(threshold_));
  auto [it, inserted] = terms_.try_emplace(Key{std::move(h), tail}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational AlmostSymFunction::coefficient(const Composition& head, const Partition& tail) const {
  auto it = terms_.find(Key{head.reduced(), tail});
  return it == terms_.end() ? Rational(0) : it->second;
}

int AlmostSymFunction::homogeneousDegree() const {
  if (terms_.empty()) return -1;
  const int d = terms_.begin()->first.head.size() + terms_.begin()->first.tail.size();
  for (const auto& [key, c] : terms_)
    if (key.head.size() + key.tail.size() != d) return -2;
  return d;
}

// ------------------------------------------------------ finite conversions

AlmostSymFunction fromFinitePolynomial(const RatPoly& p, int n, int k) {
  if (k < 0 || k > n) throw DomainError("need 0 <= k <= n");
  if (p.maxVariableIndex() > n) throw DomainError("polynomial involves variables beyond x" + std::to_string(n));
  if (n < k + p.totalDegree())
    throw InsufficientVariablesError(std::to_string(n) + " variables cannot separate tails of degree " +
                                     std::to_string(p.totalDegree()) + " beyond x" + std::to_string(k));
  if (!p.isSymmetricInRange(k + 1, n))
    throw NotSymmetricError("polynomial is not symmetric in x" + std::to_string(k + 1) + "..x" + std::to_string(n));

  AlmostSymFunction f(k, TailBasis::Monomial);
  for (const auto& t : p.terms()) {
    const std::vector<int> all = t.exponents.dense(n);
    std::vector<int> tail(all.begin() + k, all.end());
    if (!std::is_sorted(tail.begin(), tail.end(), std::greater<>())) continue;
    std::erase(tail, 0);
    f.add(Composition(std::vector<int>(all.begin(), all.begin() + k)), Partition(std::move(tail)), t.coeff);
  }
  return f;
}

namespace {

// m_nu in the alphabet x_{k+1}, ..., x_n.
RatPoly monomialSymmetric(const Partition& nu, int k, int n) {
  const int m = n - k;
  if (nu.length() > m) return {};
  std::vector<int> exps = nu.parts();
  exps.resize(static_cast<std::size_t>(m), 0);
  std::sort(exps.begin(), exps.end());
  std::vector<RatPoly::Term> terms;
  do {
    std::vector<ExponentVector::Entry> e;
    for (int j = 0; j < m; ++j)
      if (exps[static_cast<std::size_t>(j)]) e.push_back({k + 1 + j, exps[static_cast<std::size_t>(j)]});
    terms.push_back({ExponentVector::fromEntries(std::move(e)), Rational(1)});
  } while (std::next_permutation(exps.begin(), exps.end()));
  return RatPoly::fromTerms(std::move(terms));
}

AlmostSymFunction convertTails(const AlmostSymFunction& f, TailBasis target) {
  if (f.basis() == target) return f;
  AlmostSymFunction out(f.threshold(), target);
  for (const auto& [key, c] : f.terms()) {
    const KostkaTable& table = kostkaTable(key.tail.size());
    const int row = table.indexOf(key.tail);
    for (std::size_t col = 0; col < table.partitions.size(); ++col) {
      // s_nu = sum_gamma K[nu][gamma] m_gamma and m_gamma = sum_nu Kinv[gamma][nu] s_nu.
      const std::int64_t entry = target == TailBasis::Monomial
                                     ? table.kostka[static_cast<std::size_t>(row)][col]
                                     : table.inverse[static_cast<std::size_t>(row)][col];
      if (entry != 0) out.add(key.head, table.partitions[col], c * Rational(static_cast<long>(entry)));
    }
  }
  return out;
}

}  // namespace

RatPoly toFinitePolynomial(const AlmostSymFunction& f, int n) {
  const int k = f.threshold();
  if (n < k) throw DomainError("need n >= threshold");
  const AlmostSymFunction mono = toMonomialBasis(f);
  std::map<Partition, RatPoly> tails;
  RatPoly result;
  for (const auto& [key, c] : mono.terms()) {
    auto it = tails.find(key.tail);
    if (it == tails.end()) it = tails.emplace(key.tail, monomialSymmetric(key.tail, k, n)).first;
    result += it->second.timesMonomial(ExponentVector::fromDense(key.head.parts())).scaled(c);
  }
  return result;
}

AlmostSymFunction toMonomialBasis(const AlmostSymFunction& f) { return convertTails(f, TailBasis::Monomial); }
AlmostSymFunction toSchurBasis(const AlmostSymFunction& f) { return convertTails(f, TailBasis::Schur); }

// --------------------------------------------------------- key polynomials

namespace {

struct KeyCache {
  std::shared_mutex mutex;
  std::map<std::vector<int>, std::shared_ptr<const RatPoly>> entries;
  std::string directory;
  bool directoryInitialized = false;
};

KeyCache& keyCache() {
  static KeyCache cache;
  return cache;
}

std::string cacheDirectoryLocked(KeyCache& cache) {
  if (!cache.directoryInitialized) {
    if (const char* env = std::getenv("ASK_CACHE_DIR")) cache.directory = env;
    cache.directoryInitialized = true;
  }
  return cache.directory;
}

std::string cacheFileName(const std::vector<int>& alpha) {
  std::string name = "key_";
  for (std::size_t i = 0; i < alpha.size(); ++i) name += (i ? "-" : "") + std::to_string(alpha[i]);
  return name + ".txt";
}

std::shared_ptr<const RatPoly> readCached(const std::string& dir, const std::vector<int>& alpha) {
  std::ifstream in(std::filesystem::path(dir) / cacheFileName(alpha));
  if (!in) return nullptr;
  std::string header;
  if (!std::getline(in, header) || header != "asf-key 1") return nullptr;
  std::vector<RatPoly::Term> terms;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string coeff;
    ls >> coeff;
    std::vector<ExponentVector::Entry> e;
    int idx = 0, exp = 0;
    char colon = 0;
    while (ls >> idx >> colon >> exp) {
      if (colon != ':') return nullptr;
      e.push_back({idx, exp});
    }
    try {
      terms.push_back({ExponentVector::fromEntries(std::move(e)), Rational(coeff)});
    } catch (const std::invalid_argument&) {
      return nullptr;
    }
  }
  return std::make_shared<const RatPoly>(RatPoly::fromTerms(std::move(terms)));
}

void writeCached(const std::string& dir, const std::vector<int>& alpha, const RatPoly& p) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto target = std::filesystem::path(dir) / cacheFileName(alpha);
  const auto tmp = target.string() + ".tmp" + std::to_string(reinterpret_cast<std::uintptr_t>(&p));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << "asf-key 1\n";
    for (const auto& t : p.terms()) {
      out << t.coeff.get_str();
      for (const auto& [idx, exp] : t.exponents.entries()) out << ' ' << idx << ':' << exp;
      out << '\n';
    }
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

RatPoly computeKey(std::vector<int> alpha) {
  std::vector<int> path;
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < alpha.size() && alpha[i] >= alpha[i + 1]) ++i;
    if (i + 1 >= alpha.size()) break;
    path.push_back(static_cast<int>(i) + 1);
    std::swap(alpha[i], alpha[i + 1]);
  }
  RatPoly p = RatPoly::monomial(ExponentVector::fromDense(alpha), Rational(1));
  for (auto it = path.rbegin(); it != path.rend(); ++it) p = applyXi(*it, p);
  return p;
}

}  // namespace

RatPoly keyPolynomial(const Weight& alpha) {
  std::vector<int> key = alpha.entries;
  for (int v : key)
    if (v < 0) throw DomainError("weights are non-negative");
  while (!key.empty() && key.back() == 0) key.pop_back();

  KeyCache& cache = keyCache();
  std::string dir;
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end()) return *it->second;
  }
  {
    std::unique_lock lock(cache.mutex);
    dir = cacheDirectoryLocked(cache);
  }
  std::shared_ptr<const RatPoly> value;
  if (!dir.empty()) value = readCached(dir, key);
  const bool fromDisk = value != nullptr;
  if (!value) value = std::make_shared<const RatPoly>(computeKey(key));
  {
    std::unique_lock lock(cache.mutex);
    cache.entries.emplace(key, value);
  }
  if (!dir.empty() && !fromDisk) writeCached(dir, key, *value);
  return *value;
}

void setKeyCacheDirectory(const std::string& dir) {
  KeyCache& cache = keyCache();
  std::unique_lock lock(cache.mutex);
  cache.directory = dir;
  cache.directoryInitialized = true;
}

std::string keyCacheDirectory() {
  KeyCache& cache = keyCache();
  std::unique_lock lock(cache.mutex);
  return cacheDirectoryLocked(cache);
}

void clearKeyCache() {
  KeyCache& cache = keyCache();
  std::unique_lock lock(cache.mutex);
  cache.entries.clear();
}

// ------------------------------------------------- almost symmetric Schur

namespace {

AlmostSymFunction keyRoute(const SigmaPair& pair, int n) {
  std::vector<int> alpha = pair.mu().parts();
  alpha.resize(static_cast<std::size_t>(n - pair.lambda().length()), 0);
  const Composition rev = reverseComposition(pair.lambda().asComposition());
  alpha.insert(alpha.end(), rev.parts().begin(), rev.parts().end());
  return fromFinitePolynomial(keyPolynomial(Weight(alpha)), n, pair.mu().length());
}

AlmostSymFunction towerRoute(const SigmaPair& pair, int n) {
  const int k = pair.mu().length();
  const int r = k + pair.lambda().length();
  RatPoly g = keyPolynomial(Weight(concat(pair.mu(), pair.lambda().asComposition())));
  // g is symmetric in x_{r+1..n}; each step applies W_j = xi_{n-1}...xi_{j+1} W_{j+1}.
  for (int j = r - 1; j >= k; --j) g = applyXiChain(j + 1, n - 1, g);
  return fromFinitePolynomial(g, n, k);
}

std::string describe(const SigmaPair& pair) { return pair.serialize(); }

}  // namespace

AlmostSymFunction almostSchurByRecursion(const SigmaPair& pair, StabilizationCertificate* certificate) {
  const int r = pair.mu().length() + pair.lambda().length();
  const int nStar = r + pair.degree();
  AlmostSymFunction main = keyRoute(pair, nStar);
  AlmostSymFunction witness = keyRoute(pair, nStar + 1);
  if (!(main == witness))
    throw StabilizationFailure("key expansions at n = " + std::to_string(nStar) + " and " +
                               std::to_string(nStar + 1) + " differ for " + describe(pair));
  AlmostSymFunction tower = towerRoute(pair, nStar);
  if (!(main == tower))
    throw StabilizationFailure("key route and W-tower disagree at n = " + std::to_string(nStar) + " for " +
                               describe(pair));
  if (certificate) *certificate = {nStar, nStar + 1};
  return main;
}

AlmostSymFunction almostSchurByCombinatorics(const SigmaPair& pair) {
  const int k = pair.mu().length();
  AlmostSymFunction f(k, TailBasis::Monomial);
  for (int size = 0; size <= pair.degree(); ++size) {
    for (const Partition& nu : partitionsOf(size)) {
      std::map<std::vector<int>, long> counts;
      forEachStarLabelling(pair, nu, [&](const Filling& s) {
        std::vector<int> head(static_cast<std::size_t>(k), 0);
        for (const auto& col : s.columns())
          for (const StarLabel& l : col)
            if (l.value() <= k) ++head[static_cast<std::size_t>(l.value() - 1)];
        ++counts[head];
      });
      for (const auto& [head, c] : counts) f.add(Composition(head), nu, Rational(c));
    }
  }
  return f;
}

std::int64_t kostkaAlmost(const SigmaPair& pair, const Composition& alpha, const Partition& nu) {
  const int k = pair.mu().length();
  const Composition target = alpha.reduced();
  if (target.length() > k) return 0;
  const std::vector<int> want = target.paddedTo(k).parts();
  std::int64_t count = 0;
  forEachStarLabelling(pair, nu, [&](const Filling& s) {
    std::vector<int> head(static_cast<std::size_t>(k), 0);
    for (const auto& col : s.columns())
      for (const StarLabel& l : col)
        if (l.value() <= k) ++head[static_cast<std::size_t>(l.value() - 1)];
    if (head == want) ++count;
  });
  return count;
}

AlmostSymFunction monomialSchurCoefficients(const SigmaPair& pair) {
  return toSchurBasis(almostSchurByCombinatorics(pair));
}

QtPoly stableMacdonaldTruncation(const SigmaPair& pair, int n, int maxSymCost) {
  const Composition base = concat(pair.mu(), pair.lambda().asComposition());
  if (n < base.length()) throw DomainError("need n >= l(mu) + l(lambda)");
  if (n - pair.mu().length() > maxSymCost)
    throw ResourceGuardError("symmetrizing " + std::to_string(n - pair.mu().length()) +
                             " variables exceeds the limit of " + std::to_string(maxSymCost) +
                             " (see --max-sym-cost)");
  return applyEpsilonKn(pair.mu().length(), n, computeE(base.paddedTo(n)), maxSymCost);
}

}  // namespace asf
