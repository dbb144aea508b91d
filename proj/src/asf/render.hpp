#pragma once

// Text and JSON renderings of polynomials, fillings and expansions.

#include <string>

#include "json.hpp"

#include "asf/almost_symmetric.hpp"
#include "asf/fillings.hpp"

namespace asf {

/// "3*x1^2*x2 - x3 + 1/2"; "0" for the zero polynomial.
std::string renderText(const RatPoly& p);
/// "x2 + ((1 - t)/(1 - q*t))*x1".
std::string renderText(const QtPoly& p);
/// "x1^3*s[2,1](X1) + x1^2*s[3,1](X1)", or m[...] for the monomial basis.
std::string renderText(const AlmostSymFunction& f);
/// Rows top to bottom, basement last, columns separated by spaces; "." marks
/// an empty cell.
std::string renderText(const Filling& f);

/// [{"exponents": {"1": 2}, "coeff": "3"}, ...]
nlohmann::json toJson(const RatPoly& p);
nlohmann::json toJson(const QtPoly& p);
/// {"pair", "basis", "threshold", "terms": [{"head", "tail", "coeff"}]}.
/// The pair field is omitted when pair is null.
nlohmann::json toJson(const AlmostSymFunction& f, const SigmaPair* pair);
/// {"shape": [...], "labels": [[col, row, "label"], ...]}; basement labels
/// use row 0.
nlohmann::json toJson(const Filling& f);

/// Inverse of toJson for expansions; throws ParseError on schema violations.
AlmostSymFunction expansionFromJson(const nlohmann::json& j);

}  // namespace asf
