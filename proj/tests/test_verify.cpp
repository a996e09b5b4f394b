#include <doctest.h>

#include "darboux/verify.hpp"

#include <map>

#include "darboux/json_io.hpp"
#include "test_support.hpp"

using namespace darboux;
using testsupport::Rng;

namespace {
std::map<std::string, CheckResult> by_name(const VerificationReport& r) {
  std::map<std::string, CheckResult> out;
  for (const CheckResult& c : r.checks) out[c.name] = c;
  return out;
}

int count_status(const VerificationReport& r, CheckStatus s) {
  int n = 0;
  for (const CheckResult& c : r.checks)
    if (c.status == s) ++n;
  return n;
}
}  // namespace

TEST_CASE("the worked two-atom example passes every check") {
  VerificationReport r =
      verify_all(testsupport::two_atom_spec(), 2, Shift::real(Rational(1, 2)));
  CHECK(r.all_passed());
  CHECK(count_status(r, CheckStatus::failed) == 0);
  auto m = by_name(r);
  // the chihara and imaginary groups split by the requested shift kind
  CHECK(m.at("chihara_matrix").status == CheckStatus::passed);
  CHECK(m.at("imaginary_matrix").status == CheckStatus::skipped);
  CHECK(m.at("extended_matrix").status == CheckStatus::passed);
  CHECK(m.at("neutrality").status == CheckStatus::passed);

  VerificationReport ri =
      verify_all(testsupport::two_atom_spec(), 2, Shift::imaginary(Rational(1)));
  CHECK(ri.all_passed());
  auto mi = by_name(ri);
  CHECK(mi.at("imaginary_matrix").status == CheckStatus::passed);
  CHECK(mi.at("imaginary_positivity").status == CheckStatus::passed);
  CHECK(mi.at("chihara_matrix").status == CheckStatus::skipped);
}

TEST_CASE("delta_0 yields a skipped-not-crashed report with a pivot witness") {
  MeasureSpec spec = RawMoments{{Rational(1), Rational(0), Rational(0), Rational(0)}};
  VerificationReport r = verify_all(spec, 1);
  CHECK(r.all_passed());  // nothing failed; the impossible parts are skipped
  auto m = by_name(r);
  CHECK(m.at("lu_round_trip").status == CheckStatus::skipped);
  CHECK(m.at("lu_round_trip").witness.find("SingularPivot") != std::string::npos);
  CHECK(m.at("extended_matrix").status == CheckStatus::skipped);
  CHECK(m.at("kernel_orthogonality").status == CheckStatus::skipped);
  CHECK(m.at("neutrality").status == CheckStatus::passed);
  CHECK(m.at("almost_orthogonality_even").status == CheckStatus::passed);
}

TEST_CASE("non-stieltjes input skips the stieltjes-only checks and passes the rest") {
  MeasureSpec spec = RawMoments{
      {Rational(1), Rational(0), Rational(1), Rational(0), Rational(1), Rational(0), Rational(1),
       Rational(0)}};
  VerificationReport r = verify_all(spec, 2);
  CHECK(r.all_passed());
  auto m = by_name(r);
  CHECK(m.at("sign_condition").status == CheckStatus::skipped);
  CHECK(m.at("sfraction_jfraction").status == CheckStatus::skipped);
  CHECK(m.at("even_contraction").status == CheckStatus::skipped);
  // Hamburger-side checks still run
  CHECK(m.at("almost_orthogonality_even").status == CheckStatus::passed);
  CHECK(m.at("char_poly_spectrum").status == CheckStatus::passed);
  CHECK(m.at("laurent_convergents").status == CheckStatus::passed);
  // lu exists here (P_j(0) ≠ 0 fails only at odd orders... the pivot P_1(0)=0)
  CHECK(m.at("lu_round_trip").status == CheckStatus::skipped);
}

TEST_CASE("reports are byte-for-byte deterministic") {
  MeasureSpec spec = testsupport::two_atom_spec();
  VerificationReport a = verify_all(spec, 2, Shift::real(Rational(1, 2)));
  VerificationReport b = verify_all(spec, 2, Shift::real(Rational(1, 2)));
  CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("every named check appears exactly once") {
  VerificationReport r = verify_all(testsupport::two_atom_spec(), 2);
  std::map<std::string, int> seen;
  for (const CheckResult& c : r.checks) seen[c.name]++;
  for (const auto& [name, count] : seen) {
    INFO(name);
    CHECK(count == 1);
  }
  CHECK(seen.size() == r.checks.size());
  CHECK(r.checks.size() >= 25);
}

TEST_CASE("random stieltjes corpus passes with real and imaginary shifts") {
  Rng rng(0x0c0ffee);
  const std::vector<long> squares{1, 4, 9, 16, 25, 36, 49, 64, 81, 100};
  for (int iter = 0; iter < 12; ++iter) {
    DiscreteMeasure m = rng.discrete(squares, 6);
    const int depth = static_cast<int>(m.atoms.size());
    // alpha inside the gap: |alpha| < 1 ≤ min point
    Rational alpha(rng.range(1, 3), 4);
    VerificationReport r = verify_all(m, depth, Shift::real(alpha));
    INFO(r.fingerprint);
    CHECK(r.all_passed());
    VerificationReport ri = verify_all(m, depth, Shift::imaginary(rng.positive_rational(6, 3)));
    INFO(ri.fingerprint);
    CHECK(ri.all_passed());
  }
}

TEST_CASE("rational-point corpus passes, with measure-level checks skipping as needed") {
  Rng rng(0xfab1e);
  for (int iter = 0; iter < 10; ++iter) {
    DiscreteMeasure m = rng.discrete_rational(6);
    const int depth = static_cast<int>(m.atoms.size());
    VerificationReport r = verify_all(m, depth);
    INFO(r.fingerprint);
    CHECK(r.all_passed());
  }
  // square rational points: the measure route runs instead of skipping
  for (int iter = 0; iter < 10; ++iter) {
    DiscreteMeasure m = rng.discrete_rational(5, /*square_points=*/true);
    Rational lo(100);
    for (const Atom& a : m.atoms) lo = a.point < lo ? a.point : lo;
    // alpha strictly inside the gap: alpha^2 < min point
    Rational alpha = *rational_sqrt(lo) / Rational(2);
    VerificationReport r = verify_all(m, static_cast<int>(m.atoms.size()), Shift::real(alpha));
    INFO(r.fingerprint);
    CHECK(r.all_passed());
    bool ran_measure_route = false;
    for (const CheckResult& c : r.checks)
      if (c.name == "unwrap_measure_moments" || c.name == "chihara_measure_moments")
        ran_measure_route = ran_measure_route || c.status == CheckStatus::passed;
    CHECK(ran_measure_route);
  }
}

TEST_CASE("laguerre family passes at depth 6") {
  VerificationReport r = verify_all(LaguerreMeasure{Rational(-1, 2)}, 6);
  CHECK(r.all_passed());
  auto m = by_name(r);
  // moment-route checks run even though the support is irrational
  CHECK(m.at("extended_matrix").status == CheckStatus::passed);
  CHECK(m.at("unwrap_measure_moments").status == CheckStatus::skipped);
  VerificationReport r2 =
      verify_all(LaguerreMeasure{Rational(1, 3)}, 4, Shift::imaginary(Rational(2, 7)));
  CHECK(r2.all_passed());
}

TEST_CASE("requested depth beyond the data is capped, not fatal") {
  MeasureSpec spec = RawMoments{{Rational(1), Rational(0), Rational(0), Rational(0)}};
  VerificationReport r = verify_all(spec, 8);
  CHECK(r.depth_requested == 8);
  CHECK(r.depth_effective == 1);
  CHECK(r.all_passed());
  CHECK_THROWS_AS(verify_all(spec, 0), DepthExceeded&);
  MeasureSpec tiny = RawMoments{{Rational(1), Rational(1)}};
  CHECK_THROWS_AS(verify_all(tiny, 1), InsufficientMoments&);
}

TEST_CASE("out-of-gap real shift is reported, not crashed") {
  VerificationReport r = verify_all(testsupport::two_atom_spec(), 2, Shift::real(Rational(3)));
  auto m = by_name(r);
  CHECK(m.at("chihara_sign_condition").status == CheckStatus::failed);
  CHECK(m.at("chihara_matrix").status == CheckStatus::skipped);  // lu refuses, so it skips
  CHECK(!r.all_passed());
}
