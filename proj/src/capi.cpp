#include "asf/asf.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "asf/almost_symmetric.hpp"
#include "asf/errors.hpp"
#include "asf/fillings.hpp"
#include "asf/render.hpp"
#include "asf/verify.hpp"

struct asf_context {
  int maxSymCost = asf::kDefaultMaxSymCost;
  int jobs = 1;
  std::string lastError;
};

struct asf_expansion {
  asf::AlmostSymFunction value;
  asf::SigmaPair pair;
  std::vector<std::vector<int>> heads;
  std::vector<std::vector<int>> tails;
  std::vector<std::string> coefficients;
};

struct asf_report {
  std::string suite;
  std::vector<asf::PropertyResult> results;
};

namespace {

char* copyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs body, mapping exceptions onto status codes and recording the message.
template <class F>
asf_status guarded(asf_context* ctx, F&& body) {
  if (!ctx) return ASF_E_INVALID_ARGUMENT;
  ctx->lastError.clear();
  auto fail = [&](asf_status s, const char* what) {
    ctx->lastError = what;
    return s;
  };
  try {
    return body();
  } catch (const asf::ParseError& e) {
    return fail(ASF_E_PARSE, e.what());
  } catch (const asf::ResourceGuardError& e) {
    return fail(ASF_E_RESOURCE_GUARD, e.what());
  } catch (const asf::DomainError& e) {
    return fail(ASF_E_DOMAIN, e.what());
  } catch (const asf::InsufficientVariablesError& e) {
    return fail(ASF_E_DOMAIN, e.what());
  } catch (const asf::NotSymmetricError& e) {
    return fail(ASF_E_DOMAIN, e.what());
  } catch (const asf::PoleError& e) {
    return fail(ASF_E_MATH, e.what());
  } catch (const asf::StabilizationFailure& e) {
    return fail(ASF_E_MATH, e.what());
  } catch (const asf::DivisionByZero& e) {
    return fail(ASF_E_MATH, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ASF_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ASF_E_INTERNAL, e.what());
  }
}

asf_status invalid(asf_context* ctx, const char* what) {
  ctx->lastError = what;
  return ASF_E_INVALID_ARGUMENT;
}

bool validFormat(asf_format f) { return f == ASF_FORMAT_TEXT || f == ASF_FORMAT_JSON; }

std::vector<int> headCounts(const asf::Filling& f, int k) {
  std::vector<int> head(static_cast<std::size_t>(k), 0);
  for (const auto& col : f.columns())
    for (const auto& l : col)
      if (l.isFinite() && l.value() <= k) ++head[static_cast<std::size_t>(l.value() - 1)];
  return head;
}

}  // namespace

extern "C" {

const char* asf_version(void) { return "1.0.0"; }

const char* asf_status_name(asf_status status) {
  switch (status) {
    case ASF_OK: return "ok";
    case ASF_E_INVALID_ARGUMENT: return "invalid argument";
    case ASF_E_PARSE: return "parse error";
    case ASF_E_DOMAIN: return "domain error";
    case ASF_E_RESOURCE_GUARD: return "resource guard exceeded";
    case ASF_E_MISMATCH: return "mismatch";
    case ASF_E_MATH: return "mathematical failure";
    case ASF_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void asf_string_free(char* s) { std::free(s); }

asf_context* asf_context_new(void) { return new (std::nothrow) asf_context(); }
void asf_context_free(asf_context* ctx) { delete ctx; }

const char* asf_context_last_error(const asf_context* ctx) { return ctx ? ctx->lastError.c_str() : ""; }

asf_status asf_context_set_max_sym_cost(asf_context* ctx, int cost) {
  return guarded(ctx, [&] {
    if (cost < 0) return invalid(ctx, "cost must be non-negative");
    ctx->maxSymCost = cost;
    return ASF_OK;
  });
}

asf_status asf_context_set_jobs(asf_context* ctx, int jobs) {
  return guarded(ctx, [&] {
    if (jobs < 1) return invalid(ctx, "jobs must be positive");
    ctx->jobs = jobs;
    return ASF_OK;
  });
}

asf_status asf_context_set_cache_dir(asf_context* ctx, const char* dir) {
  return guarded(ctx, [&] {
    asf::setKeyCacheDirectory(dir ? dir : "");
    return ASF_OK;
  });
}

asf_status asf_key_polynomial(asf_context* ctx, const char* alpha, int vars, asf_format format, char** out) {
  return guarded(ctx, [&] {
    if (!alpha || !out || !validFormat(format)) return invalid(ctx, "null argument or bad format");
    std::vector<int> a = asf::Composition::parse(alpha).parts();
    if (vars != 0) {
      if (vars < static_cast<int>(a.size()))
        throw asf::DomainError("--vars " + std::to_string(vars) + " is smaller than the length of alpha");
      a.resize(static_cast<std::size_t>(vars), 0);
    }
    const asf::RatPoly p = asf::keyPolynomial(asf::Weight(a));
    *out = copyString(format == ASF_FORMAT_JSON ? asf::toJson(p).dump() : asf::renderText(p));
    return ASF_OK;
  });
}

asf_status asf_macdonald_e(asf_context* ctx, const char* mu, asf_format format, char** out) {
  return guarded(ctx, [&] {
    if (!mu || !out || !validFormat(format)) return invalid(ctx, "null argument or bad format");
    const asf::QtPoly e = asf::computeE(asf::Composition::parse(mu));
    *out = copyString(format == ASF_FORMAT_JSON ? asf::toJson(e).dump() : asf::renderText(e));
    return ASF_OK;
  });
}

asf_status asf_almost_schur(asf_context* ctx, const char* pair, asf_basis basis, asf_algorithm algorithm,
                            asf_expansion** out) {
  return guarded(ctx, [&] {
    if (!pair || !out) return invalid(ctx, "null argument");
    if (basis != ASF_BASIS_MONOMIAL && basis != ASF_BASIS_SCHUR) return invalid(ctx, "unknown basis");
    if (algorithm < ASF_ALGORITHM_RECURSION || algorithm > ASF_ALGORITHM_BOTH) return invalid(ctx, "unknown algorithm");
    *out = nullptr;
    const asf::SigmaPair p = asf::SigmaPair::parse(pair);
    asf::AlmostSymFunction f;
    if (algorithm == ASF_ALGORITHM_RECURSION) {
      f = asf::almostSchurByRecursion(p);
    } else if (algorithm == ASF_ALGORITHM_COMBINATORIAL) {
      f = asf::almostSchurByCombinatorics(p);
    } else {
      f = asf::almostSchurByRecursion(p);
      if (!(f == asf::almostSchurByCombinatorics(p))) {
        ctx->lastError = "recursion and labelling expansions differ for " + p.serialize();
        return ASF_E_MISMATCH;
      }
    }
    if (basis == ASF_BASIS_SCHUR) f = asf::toSchurBasis(f);
    auto e = std::make_unique<asf_expansion>();
    e->pair = p;
    for (const auto& [key, c] : f.terms()) {
      e->heads.push_back(key.head.parts());
      e->tails.push_back(key.tail.parts());
      e->coefficients.push_back(c.get_str());
    }
    e->value = std::move(f);
    *out = e.release();
    return ASF_OK;
  });
}

size_t asf_expansion_size(const asf_expansion* e) { return e ? e->coefficients.size() : 0; }
int asf_expansion_threshold(const asf_expansion* e) { return e ? e->value.threshold() : 0; }
asf_basis asf_expansion_basis(const asf_expansion* e) {
  return e && e->value.basis() == asf::TailBasis::Schur ? ASF_BASIS_SCHUR : ASF_BASIS_MONOMIAL;
}

asf_status asf_expansion_term(const asf_expansion* e, size_t index, const int** head, size_t* head_length,
                              const int** tail, size_t* tail_length, const char** coefficient) {
  if (!e || index >= e->coefficients.size()) return ASF_E_INVALID_ARGUMENT;
  if (head) *head = e->heads[index].data();
  if (head_length) *head_length = e->heads[index].size();
  if (tail) *tail = e->tails[index].data();
  if (tail_length) *tail_length = e->tails[index].size();
  if (coefficient) *coefficient = e->coefficients[index].c_str();
  return ASF_OK;
}

asf_status asf_expansion_render(const asf_expansion* e, asf_format format, char** out) {
  if (!e || !out || !validFormat(format)) return ASF_E_INVALID_ARGUMENT;
  try {
    *out = copyString(format == ASF_FORMAT_JSON ? asf::toJson(e->value, &e->pair).dump()
                                                : asf::renderText(e->value));
    return ASF_OK;
  } catch (const std::exception&) {
    return ASF_E_INTERNAL;
  }
}

void asf_expansion_free(asf_expansion* e) { delete e; }

asf_status asf_stable_truncation(asf_context* ctx, const char* pair, int n, asf_format format, char** out) {
  return guarded(ctx, [&] {
    if (!pair || !out || !validFormat(format)) return invalid(ctx, "null argument or bad format");
    const asf::QtPoly p = asf::stableMacdonaldTruncation(asf::SigmaPair::parse(pair), n, ctx->maxSymCost);
    *out = copyString(format == ASF_FORMAT_JSON ? asf::toJson(p).dump() : asf::renderText(p));
    return ASF_OK;
  });
}

asf_status asf_kostka(asf_context* ctx, const char* pair, const char* alpha, const char* nu, int64_t* out) {
  return guarded(ctx, [&] {
    if (!pair || !alpha || !nu || !out) return invalid(ctx, "null argument");
    *out = asf::kostkaAlmost(asf::SigmaPair::parse(pair), asf::Composition::parse(alpha), asf::Partition::parse(nu));
    return ASF_OK;
  });
}

asf_status asf_kostka_labellings(asf_context* ctx, const char* pair, const char* alpha, const char* nu,
                                 asf_format format, char** out) {
  return guarded(ctx, [&] {
    if (!pair || !alpha || !nu || !out || !validFormat(format)) return invalid(ctx, "null argument or bad format");
    const asf::SigmaPair p = asf::SigmaPair::parse(pair);
    const asf::Composition head = asf::Composition::parse(alpha).reduced();
    const int k = p.mu().length();
    nlohmann::json arr = nlohmann::json::array();
    std::string text;
    if (head.length() <= k) {
      const std::vector<int> want = head.paddedTo(k).parts();
      asf::forEachStarLabelling(p, asf::Partition::parse(nu), [&](const asf::Filling& f) {
        if (headCounts(f, k) != want) return;
        arr.push_back(asf::toJson(f));
        if (!text.empty()) text += '\n';
        text += asf::renderText(f);
      });
    }
    *out = copyString(format == ASF_FORMAT_JSON ? arr.dump() : text);
    return ASF_OK;
  });
}

asf_status asf_verify(asf_context* ctx, const char* suite, int degree, uint64_t seed, int samples, asf_report** out) {
  return guarded(ctx, [&] {
    if (!suite || !out) return invalid(ctx, "null argument");
    *out = nullptr;
    asf::VerifyOptions options;
    options.degree = degree;
    options.seed = seed;
    if (samples > 0) options.samples = samples;
    options.jobs = ctx->jobs;
    options.maxSymCost = ctx->maxSymCost;
    auto r = std::make_unique<asf_report>();
    r->suite = suite;
    r->results = asf::runSuite(suite, options);
    *out = r.release();
    return ASF_OK;
  });
}

size_t asf_report_size(const asf_report* r) { return r ? r->results.size() : 0; }

asf_status asf_report_entry(const asf_report* r, size_t index, const char** name, long* checked, long* failed,
                            const char** first_failure) {
  if (!r || index >= r->results.size()) return ASF_E_INVALID_ARGUMENT;
  const auto& e = r->results[index];
  if (name) *name = e.name.c_str();
  if (checked) *checked = e.checked;
  if (failed) *failed = e.failed;
  if (first_failure) *first_failure = e.firstFailure.c_str();
  return ASF_OK;
}

int asf_report_passed(const asf_report* r) {
  if (!r) return 0;
  for (const auto& e : r->results)
    if (!e.passed()) return 0;
  return 1;
}

asf_status asf_report_render(const asf_report* r, asf_format format, char** out) {
  if (!r || !out || !validFormat(format)) return ASF_E_INVALID_ARGUMENT;
  try {
    if (format == ASF_FORMAT_JSON) {
      nlohmann::json props = nlohmann::json::array();
      for (const auto& e : r->results) {
        nlohmann::json j{{"name", e.name}, {"checked", e.checked}, {"failed", e.failed}, {"passed", e.passed()}};
        if (!e.passed()) j["first_failure"] = e.firstFailure;
        props.push_back(std::move(j));
      }
      *out = copyString(nlohmann::json{{"suite", r->suite}, {"passed", asf_report_passed(r) == 1}, {"properties", props}}.dump());
    } else {
      std::string text;
      for (const auto& e : r->results) {
        text += (e.passed() ? "PASS " : "FAIL ") + e.name + " (" + std::to_string(e.checked) + " checked, " +
                std::to_string(e.failed) + " failed)";
        if (!e.passed()) text += ": " + e.firstFailure;
        text += '\n';
      }
      *out = copyString(text);
    }
    return ASF_OK;
  } catch (const std::exception&) {
    return ASF_E_INTERNAL;
  }
}

void asf_report_free(asf_report* r) { delete r; }

}  // extern "C"
