// ask: command-line front end to the almost symmetric function engine.
//
// Exit codes: 0 success, 1 verification failure or mismatch, 2 parse or
// input error, 3 resource guard exceeded.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "asf/asf.h"

namespace {

int exitCodeFor(asf_status s) {
  switch (s) {
    case ASF_OK: return 0;
    case ASF_E_PARSE:
    case ASF_E_DOMAIN:
    case ASF_E_INVALID_ARGUMENT: return 2;
    case ASF_E_RESOURCE_GUARD: return 3;
    default: return 1;
  }
}

struct Context {
  asf_context* ctx = asf_context_new();
  ~Context() { asf_context_free(ctx); }

  int fail(asf_status s) const {
    std::cerr << "error (" << asf_status_name(s) << "): " << asf_context_last_error(ctx) << '\n';
    return exitCodeFor(s);
  }
};

// Prints an owned string returned by the library.
int emit(char* s) {
  std::string text(s);
  asf_string_free(s);
  std::cout << text;
  if (text.empty() || text.back() != '\n') std::cout << '\n';
  return 0;
}

asf_format formatOf(const std::string& f) { return f == "json" ? ASF_FORMAT_JSON : ASF_FORMAT_TEXT; }

std::string joinInts(const int* v, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Key polynomials, non-symmetric Macdonald polynomials and almost symmetric Schur functions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(asf_version()));

  int maxSymCost = 7;
  int jobs = 1;
  std::string cacheDir;
  app.add_option("--max-sym-cost", maxSymCost, "largest n-k accepted by symmetrizers")->check(CLI::NonNegativeNumber);
  app.add_option("--jobs", jobs, "worker threads for verification")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cacheDir, "key polynomial cache directory (default $ASK_CACHE_DIR)");

  std::string format = "text";
  auto addFormat = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* key = app.add_subcommand("key", "key polynomial of a weight");
  std::string alpha;
  int vars = 0;
  key->add_option("alpha", alpha, "weight, e.g. 0,1,2")->required();
  key->add_option("--vars", vars, "number of variables (pads alpha with zeros)")->check(CLI::NonNegativeNumber);
  addFormat(key);

  auto* e = app.add_subcommand("e", "non-symmetric Macdonald polynomial E_mu");
  std::string mu;
  e->add_option("mu", mu, "composition, e.g. 0,1")->required();
  addFormat(e);

  auto* asSchur = app.add_subcommand("as-schur", "almost symmetric Schur function s_(mu|lambda)");
  std::string pair;
  std::string basis = "monomial";
  std::string algorithm = "recursion";
  asSchur->add_option("pair", pair, "pair, e.g. \"mu=2;lambda=3,1\"")->required();
  asSchur->add_option("--basis", basis, "tail basis")->check(CLI::IsMember({"monomial", "schur"}));
  asSchur->add_option("--algorithm", algorithm, "algorithm")
      ->check(CLI::IsMember({"recursion", "combinatorial", "both"}));
  addFormat(asSchur);

  auto* kostka = app.add_subcommand("kostka", "almost symmetric Kostka coefficients");
  std::optional<std::string> head;
  std::optional<std::string> tail;
  bool show = false;
  kostka->add_option("pair", pair, "pair, e.g. \"mu=2;lambda=3,1\"")->required();
  auto* headOpt = kostka->add_option("--head", head, "head composition alpha");
  auto* tailOpt = kostka->add_option("--tail", tail, "tail partition nu");
  headOpt->needs(tailOpt);
  tailOpt->needs(headOpt);
  kostka->add_flag("--show", show, "print the counted labellings (with --head/--tail)");
  addFormat(kostka);

  auto* truncate = app.add_subcommand("truncate", "Hecke-symmetrized E_(mu*lambda*0...) in n variables");
  int n = 0;
  truncate->add_option("pair", pair, "pair")->required();
  truncate->add_option("-n,--vars", n, "number of variables")->required();
  addFormat(truncate);

  auto* verify = app.add_subcommand("verify", "run a property suite");
  std::string suite;
  int degree = 3;
  std::uint64_t seed = 1;
  int samples = 100;
  verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"relations", "specialization", "positivity", "stability", "structure"}));
  verify->add_option("--degree", degree, "degree bound")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--samples", samples, "randomized instances per property")->check(CLI::PositiveNumber);
  addFormat(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForVersion& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return 2;
  }

  Context c;
  asf_context_set_max_sym_cost(c.ctx, maxSymCost);
  asf_context_set_jobs(c.ctx, jobs);
  if (!cacheDir.empty()) asf_context_set_cache_dir(c.ctx, cacheDir.c_str());
  const asf_format fmt = formatOf(format);
  char* out = nullptr;

  if (*key) {
    const asf_status s = asf_key_polynomial(c.ctx, alpha.c_str(), vars, fmt, &out);
    return s == ASF_OK ? emit(out) : c.fail(s);
  }
  if (*e) {
    const asf_status s = asf_macdonald_e(c.ctx, mu.c_str(), fmt, &out);
    return s == ASF_OK ? emit(out) : c.fail(s);
  }
  if (*truncate) {
    const asf_status s = asf_stable_truncation(c.ctx, pair.c_str(), n, fmt, &out);
    return s == ASF_OK ? emit(out) : c.fail(s);
  }
  if (*asSchur) {
    const asf_algorithm alg = algorithm == "recursion"       ? ASF_ALGORITHM_RECURSION
                              : algorithm == "combinatorial" ? ASF_ALGORITHM_COMBINATORIAL
                                                             : ASF_ALGORITHM_BOTH;
    asf_expansion* x = nullptr;
    asf_status s = asf_almost_schur(c.ctx, pair.c_str(), basis == "schur" ? ASF_BASIS_SCHUR : ASF_BASIS_MONOMIAL, alg, &x);
    if (s != ASF_OK) return c.fail(s);
    s = asf_expansion_render(x, fmt, &out);
    asf_expansion_free(x);
    return s == ASF_OK ? emit(out) : c.fail(s);
  }
  if (*kostka) {
    if (head) {
      if (show) {
        const asf_status s = asf_kostka_labellings(c.ctx, pair.c_str(), head->c_str(), tail->c_str(), fmt, &out);
        return s == ASF_OK ? emit(out) : c.fail(s);
      }
      std::int64_t value = 0;
      const asf_status s = asf_kostka(c.ctx, pair.c_str(), head->c_str(), tail->c_str(), &value);
      if (s != ASF_OK) return c.fail(s);
      if (fmt == ASF_FORMAT_JSON)
        std::cout << "{\"pair\":\"" << pair << "\",\"head\":\"" << *head << "\",\"tail\":\"" << *tail
                  << "\",\"value\":" << value << "}\n";
      else
        std::cout << value << '\n';
      return 0;
    }
    asf_expansion* x = nullptr;
    asf_status s = asf_almost_schur(c.ctx, pair.c_str(), ASF_BASIS_MONOMIAL, ASF_ALGORITHM_COMBINATORIAL, &x);
    if (s != ASF_OK) return c.fail(s);
    if (fmt == ASF_FORMAT_JSON) {
      s = asf_expansion_render(x, fmt, &out);
      asf_expansion_free(x);
      return s == ASF_OK ? emit(out) : c.fail(s);
    }
    std::cout << "head\ttail\tK\n";
    for (std::size_t i = 0; i < asf_expansion_size(x); ++i) {
      const int* h = nullptr;
      const int* t = nullptr;
      std::size_t hn = 0, tn = 0;
      const char* coeff = nullptr;
      asf_expansion_term(x, i, &h, &hn, &t, &tn, &coeff);
      std::cout << joinInts(h, hn) << '\t' << joinInts(t, tn) << '\t' << coeff << '\n';
    }
    asf_expansion_free(x);
    return 0;
  }
  if (*verify) {
    asf_report* r = nullptr;
    asf_status s = asf_verify(c.ctx, suite.c_str(), degree, seed, samples, &r);
    if (s != ASF_OK) return c.fail(s);
    const bool passed = asf_report_passed(r) == 1;
    s = asf_report_render(r, fmt, &out);
    asf_report_free(r);
    if (s != ASF_OK) return c.fail(s);
    emit(out);
    return passed ? 0 : 1;
  }
  return 2;
}
