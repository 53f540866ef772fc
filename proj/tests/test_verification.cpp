#include <doctest.h>

#include "ringcomm/catalog.hpp"
#include "ringcomm/verification.hpp"
#include "support/random_ring.hpp"

using namespace ringcomm;

TEST_CASE("E4 report covers every claim and passes") {
  const auto report = verify_ring(e4_ring(), "E4");
  REQUIRE(report.claims.size() == kClaimIds.size());
  for (std::size_t i = 0; i < kClaimIds.size(); ++i) CHECK(report.claims[i].id == kClaimIds[i]);
  CHECK(report.passed());
  for (const char* id : {"L2.1", "L2.2", "T2.3", "C2.4", "P2.5", "P2.6", "P2.7a", "P2.7b-even", "P2.8",
                         "P2.9", "P2.10", "T3.1"}) {
    INFO(id);
    CHECK(report.claim(id).status == CheckStatus::pass);
  }
  // E4 has no element with 2r != 0
  CHECK(report.claim("P2.7b-odd").status == CheckStatus::skipped);
  CHECK(report.claim("P2.8").lhs == Fraction(3, 8));
  CHECK(report.claim("P2.8").rhs == Fraction(3, 16));
  CHECK(report.claim("P2.10").lhs == Fraction(3, 8));
  CHECK(report.claim("P2.10").rhs == Fraction(3, 8));
}

TEST_CASE("commutative rings skip the non-commutative claims") {
  const auto report = verify_ring(zero_ring(2), "zero2");
  CHECK(report.passed());
  CHECK(report.claim("P2.8").status == CheckStatus::skipped);
  CHECK(report.claim("P2.10").status == CheckStatus::skipped);
  CHECK(report.claim("T2.3").status == CheckStatus::pass);
  CHECK(report.claim("T3.1").status == CheckStatus::pass);
}

TEST_CASE("odd characteristic exercises the 2r != 0 branch") {
  const auto report = verify_ring(triangular_ring(3, 2), "tri32");
  CHECK(report.passed());
  CHECK(report.claim("P2.7b-odd").status == CheckStatus::pass);
  CHECK(report.claim("P2.7b-even").status == CheckStatus::skipped);
}

TEST_CASE("sampled rings pass every claim") {
  testing::RandomRingSampler sampler(404, 32);
  for (int i = 0; i < 8; ++i) {
    const FiniteRing ring = sampler.next();
    const auto report = verify_ring(ring, "sample");
    INFO(format_report(report));
    CHECK(report.passed());
  }
}

TEST_CASE("report text is deterministic") {
  const std::string a = format_report(verify_ring(triangular_ring(2, 2), "tri22"));
  const std::string b = format_report(verify_ring(triangular_ring(2, 2), "tri22"));
  CHECK(a == b);
  CHECK(a.rfind("ring\ttri22\n", 0) == 0);
  CHECK(a.find("\nresult\tpass\n") != std::string::npos);
  CHECK(a.find("P2.10\tpass\t") != std::string::npos);
}
