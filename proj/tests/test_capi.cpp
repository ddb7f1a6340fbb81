#include "doctest.h"

#include <cstring>
#include <string>

#include "spectrumkit/spectrumkit.h"

namespace {

struct Out {
  char* s = nullptr;
  ~Out() { sk_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct Cx {
  sk_ctx* h;
  explicit Cx(const char* al = "a,b") : h(sk_ctx_create(al)) {}
  ~Cx() { sk_ctx_destroy(h); }
  operator sk_ctx*() const { return h; }
};

}  // namespace

TEST_CASE("context lifecycle and bad alphabets") {
  CHECK(sk_ctx_create("") == nullptr);
  CHECK(sk_ctx_create("a,a") == nullptr);
  CHECK(sk_ctx_create("A") == nullptr);
  sk_ctx* cx = sk_ctx_create("a,b");
  REQUIRE(cx != nullptr);
  CHECK(sk_ctx_set_class_cap(cx, 500) == 0);
  CHECK(sk_ctx_set_seed(cx, 42) == 0);
  sk_ctx_destroy(cx);
  sk_ctx_destroy(nullptr);  // must be a no-op
  sk_string_free(nullptr);  // likewise
}

TEST_CASE("status codes cover the four outcome classes") {
  Cx cx;
  Out o1;
  CHECK(sk_check(cx, "S", "a.0", "a.0 + b.0", 0, &o1.s) == 0);
  CHECK(o1.str() == "holds\n");

  Out o2;
  CHECK(sk_check(cx, "RS", "a.0", "a.0 + b.0", 0, &o2.s) == 1);
  CHECK(o2.str().find("does not hold") != std::string::npos);

  Out o3;
  CHECK(sk_check(cx, "XX", "a.0", "0", 0, &o3.s) == 2);
  CHECK(std::string(sk_last_error(cx)).find("XX") != std::string::npos);

  Out o4;
  CHECK(sk_chi(cx, "S", "a.c.0", 0, &o4.s) == 2);
  CHECK(sk_last_error(cx)[0] != '\0');

  // a tiny class cap turns deep enumeration into a budget failure
  Cx tight;
  CHECK(sk_ctx_set_class_cap(tight, 10) == 0);
  Out o5;
  CHECK(sk_enumerate(tight, 2, 0, &o5.s) == 3);

  Out o6;
  CHECK(sk_mc(cx, "T", "a.0", "<a>[a]ff", 0, &o6.s) == 2);  // not in L_T
  Out o7;
  CHECK(sk_mc(cx, "", "a.0", "<a>[a]ff", 0, &o7.s) == 0);  // grammar skipped
}

TEST_CASE("text outputs match the library's printer") {
  Cx cx;
  Out chi;
  REQUIRE(sk_chi(cx, "S", "a.0", 0, &chi.s) == 0);
  CHECK(chi.str() == "<a>tt\n");
  Out bar;
  REQUIRE(sk_barchi(cx, "RS", "0", 0, &bar.s) == 0);
  CHECK(bar.str() == "<a>tt \\/ <b>tt\n");

  Out eq;
  CHECK(sk_equiv(cx, "T", "a.b.0 + a.0", "a.b.0 + a.0", 0, &eq.s) == 0);

  Out spec;
  REQUIRE(sk_spectrum(cx, "a.b.0 + a.0", "a.b.0", 0, &spec.s) == 0);
  CHECK(spec.str().find("2S") != std::string::npos);
  CHECK(spec.str().find("CONF") != std::string::npos);

  Out dec;
  CHECK(sk_decompose(cx, "S", "<a>tt \\/ <b>tt", -1, 0, &dec.s) == 0);
  CHECK(dec.str().find("pivot") != std::string::npos);
  Out incon;
  CHECK(sk_decompose(cx, "S", "ff", -1, 0, &incon.s) == 1);

  Out v;
  CHECK(sk_verdict(cx, "S", "<a>tt", -1, 0, &v.s) == 0);
  Out nv;
  CHECK(sk_verdict(cx, "S", "<a>tt \\/ <b>tt", -1, 0, &nv.s) == 1);
}

TEST_CASE("json reports are byte-identical across contexts and calls") {
  auto chi_json = [](unsigned long long seed) {
    Cx cx;
    sk_ctx_set_seed(cx, seed);
    Out o;
    REQUIRE(sk_chi(cx, "F", "a.b.0 + a.0", 1, &o.s) == 0);
    return o.str();
  };
  std::string a = chi_json(1), b = chi_json(1), c = chi_json(9);
  CHECK(a == b);
  CHECK(a == c);  // chi does not consult the seed at all
  CHECK(a.find("\"chi\"") != std::string::npos);
  CHECK(a.back() == '\n');

  auto verify_json = [](const char* suite) {
    Cx cx;
    sk_ctx_set_seed(cx, 5);
    Out o;
    int rc = sk_verify(cx, suite, "S", 40, 1, &o.s);
    REQUIRE(rc == 0);
    return o.str();
  };
  CHECK(verify_json("decomposition") == verify_json("decomposition"));

  Cx cx;
  Out m;
  REQUIRE(sk_spectrum(cx, "a.0", "a.0 + b.0", 1, &m.s) == 0);
  Out m2;
  REQUIRE(sk_spectrum(cx, "a.0", "a.0 + b.0", 1, &m2.s) == 0);
  CHECK(m.str() == m2.str());
  CHECK(m.str().find("\"matrix\"") != std::string::npos);
}

TEST_CASE("suite listing names every harness") {
  Out o;
  REQUIRE(sk_verify_suites(&o.s) == 0);
  std::string s = o.str();
  for (const char* name :
       {"chi-biconditional", "barchi-lemmas", "decomposition", "primality",
        "linear-oracle", "spectrum-lattice", "conformance-chain",
        "word-normalization"}) {
    CAPTURE(name);
    CHECK(s.find(name) != std::string::npos);
  }
}
