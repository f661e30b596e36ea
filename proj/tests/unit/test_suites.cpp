#include <doctest.h>

#include <string>

#include "multicover/verify.hpp"

using namespace multicover;

// Small-scale runs of the four property suites; the acceptance gate reruns
// them at full corpus sizes.

TEST_CASE("duality suite passes at small scale") {
  VerifyOptions opt;
  opt.seed = 11;
  opt.count = 30;
  SuiteResult r = verify_duality(opt);
  CHECK(r.pass);
  CHECK(r.checks.size() >= 5);
}

TEST_CASE("lemmas suite passes at small scale") {
  VerifyOptions opt;
  opt.seed = 11;
  opt.count = 20;
  SuiteResult r = verify_lemmas(opt);
  CHECK(r.pass);
}

TEST_CASE("rounding suite passes at small scale") {
  VerifyOptions opt;
  opt.seed = 11;
  opt.flat_pairs = 2;
  opt.trials = 400;
  SuiteResult r = verify_rounding(opt);
  CHECK(r.pass);
}

TEST_CASE("ratios suite passes at small scale") {
  VerifyOptions opt;
  opt.seed = 11;
  opt.count = 25;
  opt.near_uniform_count = 6;
  SuiteResult r = verify_ratios(opt);
  CHECK(r.pass);
}

TEST_CASE("corpus builders are deterministic in the seed") {
  auto a = small_corpus(3, 10, 12);
  auto b = small_corpus(3, 10, 12);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].first == b[i].first);
    CHECK(a[i].second == b[i].second);
  }
  auto c = small_corpus(4, 10, 12);
  bool all_same = true;
  for (std::size_t i = 0; i < std::min(a.size(), c.size()); ++i)
    if (!(a[i].second == c[i].second)) all_same = false;
  CHECK_FALSE(all_same);
}

TEST_CASE("suite serializers carry every check") {
  VerifyOptions opt;
  opt.seed = 2;
  opt.count = 8;
  SuiteResult r = verify_duality(opt);
  std::string text = suite_to_text(r);
  std::string json = suite_to_json(r);
  for (const auto& c : r.checks) {
    CHECK(text.find(c.name) != std::string::npos);
    CHECK(json.find(c.name) != std::string::npos);
  }
  CHECK(text.find(r.pass ? "PASS" : "FAIL") != std::string::npos);
}
