#include "asf/render.hpp"

#include <sstream>

#include "asf/errors.hpp"

namespace asf {

namespace {

template <class R>
std::string renderTerms(const SparsePolynomial<R>& p) {
  if (p.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string c = toText(t.coeff);
    const bool negative = c.front() == '-' && c.find(' ') == std::string::npos;
    if (negative) c.erase(0, 1);
    const std::string mono = toText(t.exponents);
    std::string body;
    if (mono == "1") {
      body = c.find(' ') != std::string::npos ? "(" + c + ")" : c;
    } else if (c == "1") {
      body = mono;
    } else {
      body = (c.find(' ') != std::string::npos ? "(" + c + ")" : c) + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

template <class R>
nlohmann::json termsJson(const SparsePolynomial<R>& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    nlohmann::json e = nlohmann::json::object();
    for (const auto& [idx, exp] : t.exponents.entries()) e[std::to_string(idx)] = exp;
    arr.push_back({{"exponents", e}, {"coeff", toText(t.coeff)}});
  }
  return arr;
}

std::string joinParts(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

std::string renderText(const RatPoly& p) { return renderTerms(p); }
std::string renderText(const QtPoly& p) { return renderTerms(p); }

std::string renderText(const AlmostSymFunction& f) {
  if (f.isZero()) return "0";
  const char basis = f.basis() == TailBasis::Monomial ? 'm' : 's';
  const std::string alphabet = "(X" + std::to_string(f.threshold()) + ")";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : f.terms()) {
    std::vector<std::string> factors;
    const std::string head = toText(ExponentVector::fromDense(key.head.parts()));
    if (head != "1") factors.push_back(head);
    if (!key.tail.empty()) factors.push_back(std::string(1, basis) + "[" + joinParts(key.tail.parts()) + "]" + alphabet);
    std::string body;
    for (std::size_t i = 0; i < factors.size(); ++i) body += (i ? "*" : "") + factors[i];
    Rational a = abs(c);
    if (body.empty()) body = a.get_str();
    else if (a != 1) body = a.get_str() + "*" + body;
    if (first) out = sgn(c) < 0 ? "-" + body : body;
    else out += (sgn(c) < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

std::string renderText(const Filling& f) {
  const Diagram& d = f.diagram();
  const int cols = d.columns();
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& l : f.basement()) width = std::max(width, l.toString().size());
  for (const auto& col : f.columns())
    for (const auto& l : col) width = std::max(width, l.toString().size());
  auto pad = [&](std::string s) {
    s.insert(0, width - s.size(), ' ');
    return s;
  };
  std::ostringstream out;
  for (int row = d.maxHeight(); row >= 0; --row) {
    for (int c = 1; c <= cols; ++c) {
      if (c > 1) out << ' ';
      if (row == 0) out << pad(f.basement()[static_cast<std::size_t>(c - 1)].toString());
      else if (row <= d.height(c)) out << pad(f.at(Box{c, row}).toString());
      else out << pad(".");
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json toJson(const RatPoly& p) { return termsJson(p); }
nlohmann::json toJson(const QtPoly& p) { return termsJson(p); }

nlohmann::json toJson(const AlmostSymFunction& f, const SigmaPair* pair) {
  nlohmann::json j;
  if (pair) j["pair"] = pair->serialize();
  j["basis"] = f.basis() == TailBasis::Monomial ? "monomial" : "schur";
  j["threshold"] = f.threshold();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : f.terms())
    terms.push_back({{"head", key.head.parts()}, {"tail", key.tail.parts()}, {"coeff", c.get_str()}});
  j["terms"] = terms;
  return j;
}

nlohmann::json toJson(const Filling& f) {
  nlohmann::json labels = nlohmann::json::array();
  for (std::size_t c = 0; c < f.basement().size(); ++c)
    labels.push_back({static_cast<int>(c) + 1, 0, f.basement()[c].toString()});
  for (std::size_t c = 0; c < f.columns().size(); ++c)
    for (std::size_t r = 0; r < f.columns()[c].size(); ++r)
      labels.push_back({static_cast<int>(c) + 1, static_cast<int>(r) + 1, f.columns()[c][r].toString()});
  return {{"shape", f.diagram().shape().parts()}, {"labels", labels}};
}

AlmostSymFunction expansionFromJson(const nlohmann::json& j) {
  try {
    const std::string basis = j.at("basis").get<std::string>();
    if (basis != "monomial" && basis != "schur") throw ParseError("unknown basis '" + basis + "'");
    AlmostSymFunction f(j.at("threshold").get<int>(), basis == "monomial" ? TailBasis::Monomial : TailBasis::Schur);
    for (const auto& t : j.at("terms")) {
      Rational c;
      try {
        c = Rational(t.at("coeff").get<std::string>());
        c.canonicalize();
      } catch (const std::invalid_argument&) {
        throw ParseError("bad coefficient");
      }
      f.add(Composition(t.at("head").get<std::vector<int>>()), Partition(t.at("tail").get<std::vector<int>>()), c);
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed expansion JSON: ") + e.what());
  }
}

}  // namespace asf
