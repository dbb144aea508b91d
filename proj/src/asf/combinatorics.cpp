#include "asf/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <sstream>

#include "asf/errors.hpp"

namespace asf {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<int> parseIntegerList(std::string_view text) {
  text = trim(text);
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item =
        trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw ParseError("not an integer: '" + std::string(item) + "'");
    if (value < 0) throw ParseError("negative part: " + std::to_string(value));
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string joinParts(const std::vector<int>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------- Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw DomainError("composition parts must be non-negative");
}

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition Composition::parse(std::string_view text) { return Composition(parseIntegerList(text)); }

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Composition::isReduced() const { return parts_.empty() || parts_.back() != 0; }

Composition Composition::reduced() const {
  std::vector<int> p = parts_;
  while (!p.empty() && p.back() == 0) p.pop_back();
  return Composition(std::move(p));
}

Composition Composition::paddedTo(int length) const {
  if (length < this->length()) throw DomainError("cannot pad composition to a shorter length");
  std::vector<int> p = parts_;
  p.resize(static_cast<std::size_t>(length), 0);
  return Composition(std::move(p));
}

bool Composition::isWeaklyDecreasing() const {
  return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
}

std::string Composition::toString() const { return joinParts(parts_); }

// ------------------------------------------------------------------ Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts = parseIntegerList(text);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw ParseError("partition parts must be positive");
    if (i && parts[i] > parts[i - 1]) throw ParseError("partition parts must be weakly decreasing");
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::toString() const { return joinParts(parts_); }

bool Partition::dominates(const Partition& other) const {
  if (size() != other.size()) return false;
  int a = 0, b = 0;
  const std::size_t n = std::max(parts_.size(), other.parts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    a += i < parts_.size() ? parts_[i] : 0;
    b += i < other.parts_.size() ? other.parts_[i] : 0;
    if (a < b) return false;
  }
  return true;
}

// ------------------------------------------------------------------ SigmaPair

SigmaPair::SigmaPair(Composition mu, Partition lambda) : mu_(std::move(mu)), lambda_(std::move(lambda)) {
  if (!mu_.isReduced()) throw DomainError("mu must be a reduced composition: " + mu_.toString());
}

SigmaPair SigmaPair::parse(std::string_view text) {
  text = trim(text);
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("pair must look like 'mu=...;lambda=...'");
  std::string_view left = trim(text.substr(0, semi));
  std::string_view right = trim(text.substr(semi + 1));
  if (!left.starts_with("mu=")) throw ParseError("pair must start with 'mu='");
  if (!right.starts_with("lambda=")) throw ParseError("pair must contain 'lambda='");
  Composition mu = Composition::parse(left.substr(3));
  if (!mu.isReduced()) throw ParseError("mu must be reduced (no trailing zero): " + mu.toString());
  return SigmaPair(std::move(mu), Partition::parse(right.substr(7)));
}

std::string SigmaPair::serialize() const { return "mu=" + mu_.toString() + ";lambda=" + lambda_.toString(); }

int Weight::sum() const { return std::accumulate(entries.begin(), entries.end(), 0); }

// ------------------------------------------------------------ basic operations

Partition sortToPartition(const Composition& c) {
  std::vector<int> p;
  for (int x : c.parts())
    if (x) p.push_back(x);
  std::sort(p.begin(), p.end(), std::greater<>());
  return Partition(std::move(p));
}

Composition reverseComposition(const Composition& c) {
  std::vector<int> p(c.parts().rbegin(), c.parts().rend());
  return Composition(std::move(p));
}

Composition concat(const Composition& a, const Composition& b) {
  std::vector<int> p = a.parts();
  p.insert(p.end(), b.parts().begin(), b.parts().end());
  return Composition(std::move(p));
}

// -------------------------------------------------------------------- Bruhat

namespace {

// Elements directly below w: (ij)w when w_i < w_j, and, when w = (ij)a with
// a_j - a_i > 1, the weight a + e_i - e_j.
std::vector<std::vector<int>> bruhatLowerNeighbours(const std::vector<int>& w) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] < w[j]) {
        std::vector<int> swapped = w;
        std::swap(swapped[i], swapped[j]);
        out.push_back(std::move(swapped));
      } else if (w[i] - w[j] > 1) {
        std::vector<int> moved = w;
        moved[i] = w[j] + 1;
        moved[j] = w[i] - 1;
        out.push_back(std::move(moved));
      }
    }
  }
  return out;
}

class BruhatMemo {
 public:
  std::shared_ptr<const std::set<std::vector<int>>> downSet(const std::vector<int>& top) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = memo_.find(top); it != memo_.end()) return it->second;
    }
    auto result = std::make_shared<std::set<std::vector<int>>>();
    std::deque<std::vector<int>> queue{top};
    result->insert(top);
    while (!queue.empty()) {
      std::vector<int> w = std::move(queue.front());
      queue.pop_front();
      for (auto& v : bruhatLowerNeighbours(w))
        if (result->insert(v).second) queue.push_back(std::move(v));
    }
    std::unique_lock lock(mutex_);
    memo_.emplace(top, result);
    return result;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::vector<int>, std::shared_ptr<const std::set<std::vector<int>>>> memo_;
};

BruhatMemo& bruhatMemo() {
  static BruhatMemo memo;
  return memo;
}

}  // namespace

bool bruhatLeq(const Weight& a, const Weight& b) {
  if (a.length() != b.length()) throw DomainError("bruhatLeq: weights of different lengths");
  if (a.sum() != b.sum()) return false;
  if (a == b) return true;
  return bruhatMemo().downSet(b.entries)->count(a.entries) > 0;
}

std::vector<Weight> bruhatDownSet(const Weight& b) {
  auto set = bruhatMemo().downSet(b.entries);
  std::vector<Weight> out;
  out.reserve(set->size());
  for (const auto& w : *set) out.emplace_back(w);
  return out;
}

// ---------------------------------------------------------------------- SSYT

namespace {

struct SsytSearch {
  const std::vector<int>& shape;
  const std::vector<int>& content;
  const std::function<void(const Tableau&)>& visit;
  Tableau rows;

  // Adds `remaining` copies of `value` as a horizontal strip, deciding row r
  // (bottom to top is irrelevant; we go top to bottom with old lengths fixed).
  void addStrip(std::size_t valueIndex, std::size_t row, int remaining, const std::vector<int>& oldLengths) {
    if (row == shape.size()) {
      if (remaining == 0) place(valueIndex + 1);
      return;
    }
    const int current = static_cast<int>(rows[row].size());
    int cap = shape[row] - current;
    if (row > 0) cap = std::min(cap, oldLengths[row - 1] - current);
    cap = std::min(cap, remaining);
    for (int k = cap; k >= 0; --k) {
      for (int c = 0; c < k; ++c) rows[row].push_back(static_cast<int>(valueIndex) + 1);
      addStrip(valueIndex, row + 1, remaining - k, oldLengths);
      rows[row].resize(static_cast<std::size_t>(current));
    }
  }

  void place(std::size_t valueIndex) {
    if (valueIndex == content.size()) {
      visit(rows);
      return;
    }
    std::vector<int> oldLengths(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r) oldLengths[r] = static_cast<int>(rows[r].size());
    addStrip(valueIndex, 0, content[valueIndex], oldLengths);
  }
};

}  // namespace

void forEachSSYT(const Partition& shape, const Composition& content,
                 const std::function<void(const Tableau&)>& visit) {
  if (shape.size() != content.size()) return;
  SsytSearch search{shape.parts(), content.parts(), visit, Tableau(shape.parts().size())};
  search.place(0);
}

std::vector<Tableau> enumerateSSYT(const Partition& shape, const Composition& content) {
  std::vector<Tableau> out;
  forEachSSYT(shape, content, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

std::int64_t kostka(const Partition& lambda, const Composition& nu) {
  std::int64_t count = 0;
  forEachSSYT(lambda, nu, [&](const Tableau&) { ++count; });
  return count;
}

// ------------------------------------------------------------------- Kostka

namespace {

void partitionsRec(int remaining, int maxPart, int maxParts, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == maxParts) return;
  for (int p = std::min(remaining, maxPart); p >= 1; --p) {
    cur.push_back(p);
    partitionsRec(remaining - p, p, maxParts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitionsOf(int n, int maxParts) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitionsRec(n, n, maxParts, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitionsOf(int n) { return partitionsOf(n, std::max(n, 0)); }

int KostkaTable::indexOf(const Partition& p) const {
  auto it = std::lower_bound(partitions.begin(), partitions.end(), p);
  if (it == partitions.end() || *it != p) return -1;
  return static_cast<int>(it - partitions.begin());
}

namespace {

KostkaTable buildKostkaTable(int degree) {
  KostkaTable table;
  table.degree = degree;
  table.partitions = partitionsOf(degree);
  const std::size_t m = table.partitions.size();
  table.kostka.assign(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c)
      table.kostka[r][c] = kostka(table.partitions[r], table.partitions[c].asComposition());

  // Lower unitriangular, so forward substitution stays in the integers.
  table.inverse.assign(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t r = 0; r < m; ++r) {
    if (table.kostka[r][r] != 1) throw InternalError("Kostka matrix is not unitriangular");
    for (std::size_t c = r + 1; c < m; ++c)
      if (table.kostka[r][c] != 0) throw InternalError("Kostka matrix is not lower triangular");
  }
  for (std::size_t c = 0; c < m; ++c) {
    table.inverse[c][c] = 1;
    for (std::size_t r = c + 1; r < m; ++r) {
      std::int64_t acc = 0;
      for (std::size_t k = c; k < r; ++k) acc += table.kostka[r][k] * table.inverse[k][c];
      table.inverse[r][c] = -acc;
    }
  }
  return table;
}

}  // namespace

const KostkaTable& kostkaTable(int degree) {
  if (degree < 0) throw DomainError("negative degree");
  static std::shared_mutex mutex;
  static std::map<int, std::unique_ptr<KostkaTable>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(degree); it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<KostkaTable>(buildKostkaTable(degree));
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.emplace(degree, std::move(table));
  return *it->second;
}

std::int64_t inverseKostka(const Partition& gamma, const Partition& lambda) {
  if (gamma.size() != lambda.size()) return 0;
  const KostkaTable& table = kostkaTable(gamma.size());
  return table.inverse[static_cast<std::size_t>(table.indexOf(gamma))]
                      [static_cast<std::size_t>(table.indexOf(lambda))];
}

// ------------------------------------------------------------- pair sweeps

namespace {

void compositionsRec(int remaining, int slots, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int p = 0; p <= remaining; ++p) {
    cur.push_back(p);
    compositionsRec(remaining - p, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Weight> weightsOf(int length, int sum) {
  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  compositionsRec(sum, length, cur, raw);
  std::vector<Weight> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

std::vector<Composition> reducedCompositionsOf(int n, int maxLength) {
  std::vector<Composition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  for (int len = 1; len <= maxLength; ++len) {
    for (const Weight& w : weightsOf(len, n))
      if (w.entries.back() != 0) out.emplace_back(w.entries);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SigmaPair> enumerateSigmaPairs(int degree, int maxMuLength) {
  std::vector<SigmaPair> out;
  if (degree < 0 || maxMuLength < 0) return out;
  for (int a = degree; a >= 0; --a) {
    const auto mus = reducedCompositionsOf(a, maxMuLength);
    const auto lambdas = partitionsOf(degree - a);
    for (const auto& mu : mus)
      for (const auto& lambda : lambdas) out.emplace_back(mu, lambda);
  }
  return out;
}

}  // namespace asf
