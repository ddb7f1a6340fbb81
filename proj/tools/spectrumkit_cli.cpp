// Command-line front end. Talks to the library exclusively through the C
// API; the exit code is the API status code (0 holds/success, 1 negative,
// 2 usage/parse, 3 budget, 4 internal).
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include "CLI11.hpp"

#include "spectrumkit/spectrumkit.h"

namespace {

struct Options {
  std::string sem;
  std::string alphabet = "a,b";
  int depth = -1;
  long class_cap = 0;  // 0 = unset, fall back to env then library default
  std::string format = "text";
  unsigned long long seed = 1;
  long sample = 0;
  std::string suite;
  std::string arg1, arg2;
};

// deleter-wrapped context so every early return frees it
using CtxPtr = std::unique_ptr<sk_ctx, void (*)(sk_ctx*)>;

int print_and_free(int rc, char* out) {
  if (out) {
    std::fputs(out, stdout);
    sk_string_free(out);
  }
  return rc;
}

int fail(sk_ctx* cx, int rc) {
  std::fprintf(stderr, "error: %s\n", sk_last_error(cx));
  return rc;
}

long env_class_cap(bool& bad) {
  const char* v = std::getenv("SPECTRUMKIT_CLASS_CAP");
  if (!v || !*v) return 0;
  char* end = nullptr;
  long cap = std::strtol(v, &end, 10);
  if (*end || cap < 1) bad = true;
  return cap;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"linear-time/branching-time spectrum toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--sem", o.sem, "semantics id (S, CS, RS, TS, 2S, BS, T, CT, "
                                 "F, FT, R, RT, IF, PF, IFT, PFT, IS, PS, "
                                 "IST, PST, CONF)");
  app.add_option("--alphabet", o.alphabet, "action names, comma separated")
      ->capture_default_str();
  app.add_option("--depth", o.depth,
                 "universe depth bound (default: derived from the input)");
  app.add_option("--class-cap", o.class_cap,
                 "max enumerated bisimulation classes per universe");
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", o.seed, "seed for randomized verification")
      ->capture_default_str();

  auto* c_check = app.add_subcommand("check", "decide p <=_sem q");
  c_check->add_option("p", o.arg1, "left process")->required();
  c_check->add_option("q", o.arg2, "right process")->required();

  auto* c_equiv = app.add_subcommand("equiv", "decide p ==_sem q");
  c_equiv->add_option("p", o.arg1, "left process")->required();
  c_equiv->add_option("q", o.arg2, "right process")->required();

  auto* c_chi = app.add_subcommand("chi", "characteristic formula of p");
  c_chi->add_option("p", o.arg1, "process")->required();

  auto* c_barchi =
      app.add_subcommand("barchi", "anti-characteristic formula of p");
  c_barchi->add_option("p", o.arg1, "process")->required();

  auto* c_mc = app.add_subcommand("mc", "model check p against a formula");
  c_mc->add_option("p", o.arg1, "process")->required();
  c_mc->add_option("formula", o.arg2, "formula")->required();

  auto* c_dec = app.add_subcommand(
      "decompose", "split a formula around a minimal-model pivot");
  c_dec->add_option("formula", o.arg1, "formula")->required();

  auto* c_ver = app.add_subcommand(
      "verdict", "inconsistent, characteristic, or non-prime");
  c_ver->add_option("formula", o.arg1, "formula")->required();

  auto* c_spec = app.add_subcommand(
      "spectrum", "comparison matrix over all semantics for a pair");
  c_spec->add_option("p", o.arg1, "left process")->required();
  c_spec->add_option("q", o.arg2, "right process")->required();

  auto* c_enum = app.add_subcommand(
      "enumerate", "canonical processes up to the depth bound");

  auto* c_verify =
      app.add_subcommand("verify", "run one verification suite");
  c_verify->add_option("suite", o.suite, "suite name")->required();
  c_verify->add_option("--sample", o.sample,
                       "sample volume (0 = suite default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  bool bad_env = false;
  long cap = o.class_cap > 0 ? o.class_cap : env_class_cap(bad_env);
  if (bad_env && o.class_cap <= 0) {
    std::fprintf(stderr, "error: SPECTRUMKIT_CLASS_CAP is not a positive "
                         "integer\n");
    return 2;
  }

  CtxPtr cx(sk_ctx_create(o.alphabet.c_str()), sk_ctx_destroy);
  if (!cx) {
    std::fprintf(stderr, "error: bad alphabet '%s'\n", o.alphabet.c_str());
    return 2;
  }
  if (cap > 0 && sk_ctx_set_class_cap(cx.get(), cap) != 0) {
    std::fprintf(stderr, "error: bad class cap\n");
    return 2;
  }
  sk_ctx_set_seed(cx.get(), o.seed);

  int json = o.format == "json" ? 1 : 0;
  char* out = nullptr;
  int rc = 0;

  if (*c_check) {
    rc = sk_check(cx.get(), o.sem.c_str(), o.arg1.c_str(), o.arg2.c_str(),
                  json, &out);
  } else if (*c_equiv) {
    rc = sk_equiv(cx.get(), o.sem.c_str(), o.arg1.c_str(), o.arg2.c_str(),
                  json, &out);
  } else if (*c_chi) {
    rc = sk_chi(cx.get(), o.sem.c_str(), o.arg1.c_str(), json, &out);
  } else if (*c_barchi) {
    rc = sk_barchi(cx.get(), o.sem.c_str(), o.arg1.c_str(), json, &out);
  } else if (*c_mc) {
    rc = sk_mc(cx.get(), o.sem.c_str(), o.arg1.c_str(), o.arg2.c_str(), json,
               &out);
  } else if (*c_dec) {
    rc = sk_decompose(cx.get(), o.sem.c_str(), o.arg1.c_str(), o.depth, json,
                      &out);
  } else if (*c_ver) {
    rc = sk_verdict(cx.get(), o.sem.c_str(), o.arg1.c_str(), o.depth, json,
                    &out);
  } else if (*c_spec) {
    rc = sk_spectrum(cx.get(), o.arg1.c_str(), o.arg2.c_str(), json, &out);
  } else if (*c_enum) {
    rc = sk_enumerate(cx.get(), o.depth >= 0 ? o.depth : 2, json, &out);
  } else if (*c_verify) {
    rc = sk_verify(cx.get(), o.suite.c_str(), o.sem.c_str(), o.sample, json,
                   &out);
  }

  if (rc >= 2) {
    if (out) sk_string_free(out);
    return fail(cx.get(), rc);
  }
  return print_and_free(rc, out);
}
