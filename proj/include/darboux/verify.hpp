#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "darboux/cfrac.hpp"
#include "darboux/darboux.hpp"
#include "darboux/errors.hpp"
#include "darboux/jacobi.hpp"
#include "darboux/moments.hpp"
#include "darboux/opoly.hpp"
#include "darboux/polynomial.hpp"
#include "darboux/rational.hpp"

namespace darboux {

enum class CheckStatus { passed, failed, skipped };

inline std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::skipped: return "skipped";
  }
  return "failed";
}

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string witness;  // counterexample or skip reason; empty for clean passes
};

struct VerificationReport {
  std::string fingerprint;
  int depth_requested = 0;
  int depth_effective = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
      return c.status == CheckStatus::failed;
    });
  }
};

namespace detail {

struct CheckOutcome {
  CheckStatus status;
  std::string witness;
};

inline CheckOutcome check_pass() { return {CheckStatus::passed, {}}; }
inline CheckOutcome check_fail(std::string w) { return {CheckStatus::failed, std::move(w)}; }
inline CheckOutcome check_skip(std::string w) { return {CheckStatus::skipped, std::move(w)}; }

template <typename Body>
void run_check(VerificationReport& report, const std::string& name, Body&& body) {
  CheckResult r;
  r.name = name;
  try {
    CheckOutcome outcome = body();
    r.status = outcome.status;
    r.witness = std::move(outcome.witness);
  } catch (const Error& e) {
    // Module errors mark unsatisfiable preconditions, not broken identities.
    r.status = CheckStatus::skipped;
    r.witness = e.what();
  } catch (const std::exception& e) {
    r.status = CheckStatus::failed;
    r.witness = e.what();
  }
  report.checks.push_back(std::move(r));
}

template <typename T>
std::string describe(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

inline std::string spec_fingerprint(const MeasureSpec& spec) {
  std::ostringstream os;
  if (const auto* d = std::get_if<DiscreteMeasure>(&spec)) {
    os << "discrete{";
    for (std::size_t i = 0; i < d->atoms.size(); ++i) {
      if (i) os << ",";
      os << "(" << d->atoms[i].point << "," << d->atoms[i].weight << ")";
    }
    os << "}";
  } else if (const auto* lag = std::get_if<LaguerreMeasure>(&spec)) {
    os << "laguerre{alpha=" << lag->alpha << "}";
  } else {
    const auto& raw = std::get<RawMoments>(spec);
    os << "moments{";
    for (std::size_t i = 0; i < raw.values.size(); ++i) {
      if (i) os << ",";
      os << raw.values[i];
    }
    os << "}";
  }
  return os.str();
}

}  // namespace detail

/// Runs every identity of the pipeline against one measure specification as
/// an exact (tolerance-free) check. Checks whose preconditions fail (a
/// non-Stieltjes input for the Stieltjes-only statements, a vanishing pivot,
/// missing moments) are reported as skipped with the reason, never as
/// crashes. The report is deterministic: identical inputs give identical
/// reports byte for byte.
inline VerificationReport verify_all(const MeasureSpec& spec, int depth,
                                     std::optional<Shift> shift = std::nullopt) {
  using detail::check_fail;
  using detail::check_pass;
  using detail::check_skip;
  using detail::CheckOutcome;
  using detail::describe;
  using Kind = MomentClassification::Kind;

  if (depth < 1) throw DepthExceeded("depth must be at least 1");

  int count = 4 * depth;
  if (const auto* raw = std::get_if<RawMoments>(&spec)) {
    detail::validate(*raw);
    count = std::min(count, static_cast<int>(raw->values.size()));
    if (count < 4) throw InsufficientMoments("verification needs at least 4 moments");
  }
  const MomentSequence s = measure_moments(spec, count);
  const int depth_eff = count / 4;
  const int n = std::min(depth_eff, usable_order(s));

  VerificationReport report;
  report.depth_requested = depth;
  report.depth_effective = depth_eff;
  {
    std::ostringstream fp;
    fp << detail::spec_fingerprint(spec) << "|depth=" << depth
       << "|shift=" << (shift ? shift->str() : std::string("none"));
    report.fingerprint = fp.str();
  }

  const MomentClassification cls = classify(s);
  const bool stieltjes = cls.kind == Kind::stieltjes;

  const MonicJacobi J = jacobi_from_moments(s, n);
  const OrthoSequence ops = ortho_polys(J, n, s[0]);
  const MomentSequence us = unwrap_moments(s);
  const MomentFunctional US{us};
  const OrthoSequence gops = compose_square(ops);
  const std::vector<RationalPoly> T = linearized_polys(gops, n);
  const RationalPoly lambda = RationalPoly::variable();

  // --- non-regular functional and almost orthogonality ---

  detail::run_check(report, "neutrality", [&]() -> CheckOutcome {
    Rational v = US(RationalPoly::one());
    if (!v.is_zero()) return check_fail("S(1) = " + v.str());
    return check_pass();
  });

  detail::run_check(report, "almost_orthogonality_even", [&]() -> CheckOutcome {
    for (int j = 0; j + 1 <= n; ++j)
      for (int k = 0; k <= 2 * n + 1; ++k) {
        if (j >= static_cast<int>(ops.norms.size())) break;
        Rational got = US(T[static_cast<std::size_t>(2 * j)] * T[static_cast<std::size_t>(k)]);
        Rational want = (k == 2 * j + 1) ? ops.norms[static_cast<std::size_t>(j)] : Rational(0);
        if (got != want)
          return check_fail("j=" + std::to_string(j) + " k=" + std::to_string(k) + " got " +
                            got.str() + " want " + want.str());
      }
    return check_pass();
  });

  detail::run_check(report, "almost_orthogonality_odd", [&]() -> CheckOutcome {
    for (int j = 0; j + 1 <= n; ++j)
      for (int k = 0; k <= 2 * n + 1; ++k) {
        if (j >= static_cast<int>(ops.norms.size())) break;
        Rational got = US(T[static_cast<std::size_t>(2 * j + 1)] * T[static_cast<std::size_t>(k)]);
        Rational want = (k == 2 * j) ? ops.norms[static_cast<std::size_t>(j)] : Rational(0);
        if (got != want)
          return check_fail("j=" + std::to_string(j) + " k=" + std::to_string(k) + " got " +
                            got.str() + " want " + want.str());
      }
    return check_pass();
  });

  detail::run_check(report, "power_orthogonality_even", [&]() -> CheckOutcome {
    RationalPoly power = RationalPoly::one();
    for (int k = 0; k <= 2 * n + 1; ++k) {
      for (int j = 0; j + 1 <= n && j < static_cast<int>(ops.norms.size()); ++j) {
        if (k > 2 * j + 1) continue;
        Rational got = US(T[static_cast<std::size_t>(2 * j)] * power);
        Rational want = (k == 2 * j + 1) ? ops.norms[static_cast<std::size_t>(j)] : Rational(0);
        if (got != want)
          return check_fail("j=" + std::to_string(j) + " k=" + std::to_string(k) + " got " +
                            got.str() + " want " + want.str());
      }
      power = power * lambda;
    }
    return check_pass();
  });

  detail::run_check(report, "power_orthogonality_odd", [&]() -> CheckOutcome {
    RationalPoly power = RationalPoly::one();
    for (int k = 0; k <= 2 * n; ++k) {
      for (int j = 0; j + 1 <= n && j < static_cast<int>(ops.norms.size()); ++j) {
        if (k > 2 * j) continue;
        Rational got = US(T[static_cast<std::size_t>(2 * j + 1)] * power);
        Rational want = (k == 2 * j) ? ops.norms[static_cast<std::size_t>(j)] : Rational(0);
        if (got != want)
          return check_fail("j=" + std::to_string(j) + " k=" + std::to_string(k) + " got " +
                            got.str() + " want " + want.str());
      }
      power = power * lambda;
    }
    return check_pass();
  });

  // --- classical orthogonality and the determinant oracle ---

  detail::run_check(report, "orthogonality", [&]() -> CheckOutcome {
    MomentFunctional S{s};
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        if (i == j && i >= static_cast<int>(ops.norms.size())) continue;
        Rational got = S(ops.polys[static_cast<std::size_t>(i)] * ops.polys[static_cast<std::size_t>(j)]);
        Rational want = (i == j) ? ops.norms[static_cast<std::size_t>(i)] : Rational(0);
        if (got != want)
          return check_fail("i=" + std::to_string(i) + " j=" + std::to_string(j) + " got " +
                            got.str() + " want " + want.str());
      }
    return check_pass();
  });

  detail::run_check(report, "determinant_formula", [&]() -> CheckOutcome {
    for (int j = 0; j <= std::min(n, 6); ++j) {
      RationalPoly det = ortho_poly_determinant(s, j);
      if (det != ops.polys[static_cast<std::size_t>(j)])
        return check_fail("j=" + std::to_string(j) + " determinant route gave " + describe(det));
    }
    return check_pass();
  });

  detail::run_check(report, "kernel_orthogonality", [&]() -> CheckOutcome {
    const std::vector<RationalPoly> kp = kernel_polys(ops, Rational(0));
    MomentFunctional Sp{shifted_moments(s)};
    for (std::size_t i = 0; i < kp.size(); ++i)
      for (std::size_t j = i + 1; j < kp.size(); ++j) {
        Rational got = Sp(kp[i] * kp[j]);
        if (!got.is_zero())
          return check_fail("i=" + std::to_string(i) + " j=" + std::to_string(j) + " got " +
                            got.str());
      }
    return check_pass();
  });

  detail::run_check(report, "sign_condition", [&]() -> CheckOutcome {
    if (!stieltjes) return check_skip("input is not Stieltjes");
    // Strict signs need the shifted measure t·dμ to be nontrivial; a boundary
    // case like δ_0 has a degenerate shifted family and no sign statement.
    const MomentSequence sp = shifted_moments(s);
    for (int j = 0; j < n && 2 * j + 1 <= static_cast<int>(sp.size()); ++j)
      if (hankel_det(sp, j).sign() <= 0)
        return check_skip("shifted Hankel family is not strictly positive at order " +
                          std::to_string(j));
    bool negate = false;
    for (std::size_t j = 0; j < ops.polys.size(); ++j) {
      Rational v = ops.polys[j](Rational(0));
      if ((negate ? -v : v).sign() <= 0)
        return check_fail("(-1)^" + std::to_string(j) + " P_" + std::to_string(j) +
                          "(0) = " + (negate ? -v : v).str());
      negate = !negate;
    }
    return check_pass();
  });

  detail::run_check(report, "definitizable", [&]() -> CheckOutcome {
    const bool by_signs = definitizable_check(s, n);
    bool by_dets = true;
    const MomentSequence sp = shifted_moments(s);
    for (int j = 0; j < n && 2 * j + 1 <= static_cast<int>(sp.size()); ++j)
      if (hankel_det(sp, j).sign() <= 0) {
        by_dets = false;
        break;
      }
    if (by_signs != by_dets)
      return check_fail(std::string("sign route ") + (by_signs ? "true" : "false") +
                        ", shifted-Hankel route " + (by_dets ? "true" : "false"));
    return check_pass();
  });

  // --- finite spectral surrogates ---

  detail::run_check(report, "gram_involution", [&]() -> CheckOutcome {
    const RationalMatrix g = gram(2 * n);
    for (int i = 0; i < g.order(); ++i)
      for (int j = 0; j < g.order(); ++j)
        if (g.at(i, j) != g.at(j, i)) return check_fail("not symmetric");
    if (g * g != RationalMatrix::identity(2 * n)) return check_fail("G^2 != I");
    return check_pass();
  });

  const GeneralizedJacobi GJ = generalized_from(J);

  detail::run_check(report, "char_poly_classical", [&]() -> CheckOutcome {
    for (int m = 1; m <= n; ++m) {
      RationalPoly cp = char_poly(truncate(J, m));
      if (cp != ops.polys[static_cast<std::size_t>(m)])
        return check_fail("order " + std::to_string(m) + " gave " + describe(cp));
    }
    return check_pass();
  });

  detail::run_check(report, "char_poly_spectrum", [&]() -> CheckOutcome {
    for (int m = 1; m <= n; ++m) {
      RationalPoly cp = char_poly(truncate(GJ, 2 * m));
      RationalPoly want = compose_square(ops.polys[static_cast<std::size_t>(m)]);
      if (cp != want) return check_fail("order " + std::to_string(2 * m) + " gave " + describe(cp));
    }
    return check_pass();
  });

  detail::run_check(report, "eigenvector_rows", [&]() -> CheckOutcome {
    const RationalMatrix M = truncate(GJ, 2 * n);
    for (int i = 0; i + 2 < 2 * n; ++i) {
      RationalPoly lhs;
      for (int k = 0; k < 2 * n; ++k) {
        if (M.at(i, k).is_zero()) continue;
        lhs = lhs + RationalPoly::constant(M.at(i, k)) * T[static_cast<std::size_t>(k)];
      }
      if (lhs != lambda * T[static_cast<std::size_t>(i)])
        return check_fail("row " + std::to_string(i));
    }
    return check_pass();
  });

  // --- LU and the Darboux transformations ---

  detail::run_check(report, "lu_round_trip", [&]() -> CheckOutcome {
    const LUFactors f = lu(J, Shift::none());
    if (lu_product(f) != J) return check_fail("L*U does not reproduce J");
    return check_pass();
  });

  detail::run_check(report, "contraction_identities", [&]() -> CheckOutcome {
    const LUFactors f = lu(J, Shift::none());
    for (std::size_t j = 0; j < f.u.size(); ++j) {
      Rational want = f.u[j] + (j >= 1 ? f.l[j - 1] : Rational(0));
      if (J.b[j] != want) return check_fail("b_" + std::to_string(j));
    }
    for (std::size_t j = 0; j < f.l.size(); ++j)
      if (J.c[j] != f.l[j] * f.u[j]) return check_fail("c_" + std::to_string(j));
    return check_pass();
  });

  detail::run_check(report, "block_lu", [&]() -> CheckOutcome {
    const BlockFactors<Rational> bf = block_factors(lu(J, Shift::none()));
    if (bf.lower * bf.upper != truncate(GJ, 2 * n))
      return check_fail("block L*U does not reproduce the generalized matrix");
    return check_pass();
  });

  detail::run_check(report, "extended_block_ul", [&]() -> CheckOutcome {
    const LUFactors f = lu(J, Shift::none());
    const BlockFactors<Rational> bf = block_factors(f);
    const DarbouxResult E = extended_darboux(J);
    if (bf.upper * bf.lower != truncate(E.matrix, 2 * n))
      return check_fail("block U*L does not reproduce the transformed matrix");
    return check_pass();
  });

  detail::run_check(report, "ul_matrix", [&]() -> CheckOutcome {
    const LUFactors f = lu(J, Shift::none());
    const MonicJacobi tJ = ul(f);
    const MomentSequence sp = shifted_moments(s);
    const int m = std::min(n, usable_order(sp));
    if (m < 1) return check_skip("shifted sequence supports no Jacobi order");
    const MonicJacobi want = jacobi_from_moments(sp, m);
    for (int j = 0; j + 1 < m; ++j) {
      if (tJ.b[static_cast<std::size_t>(j)] != want.b[static_cast<std::size_t>(j)])
        return check_fail("diagonal entry " + std::to_string(j));
      if (tJ.c[static_cast<std::size_t>(j)] != want.c[static_cast<std::size_t>(j)])
        return check_fail("chain entry " + std::to_string(j));
    }
    return check_pass();
  });

  detail::run_check(report, "extended_matrix", [&]() -> CheckOutcome {
    const DarbouxResult E = extended_darboux(J);
    const MomentSequence m = shifted_moments(us);
    const MonicJacobi want = jacobi_from_moments(m, 2 * n);
    if (E.matrix != want)
      return check_fail("transformed matrix disagrees with the unwrapped-moment Jacobi matrix");
    return check_pass();
  });

  detail::run_check(report, "extended_polys_kernel", [&]() -> CheckOutcome {
    const DarbouxResult E = extended_darboux(J);
    const std::vector<RationalPoly> kp = kernel_polys(ops, Rational(0));
    for (std::size_t j = 0; j < kp.size(); ++j) {
      RationalPoly want = lambda * compose_square(kp[j]);
      if (E.polys[2 * j + 1] != want) return check_fail("odd index " + std::to_string(2 * j + 1));
    }
    for (std::size_t j = 0; 2 * j < E.polys.size(); ++j)
      if (E.polys[2 * j] != gops.polys[j]) return check_fail("even index " + std::to_string(2 * j));
    return check_pass();
  });

  detail::run_check(report, "extended_recurrence", [&]() -> CheckOutcome {
    const DarbouxResult E = extended_darboux(J);
    for (std::size_t k = 0; k + 1 < E.polys.size(); ++k) {
      RationalPoly rhs = E.polys[k + 1] + RationalPoly::constant(E.matrix.b[k]) * E.polys[k];
      if (k >= 1) rhs = rhs + RationalPoly::constant(E.matrix.c[k - 1]) * E.polys[k - 1];
      if (lambda * E.polys[k] != rhs) return check_fail("index " + std::to_string(k));
    }
    return check_pass();
  });

  detail::run_check(report, "extended_orthogonality", [&]() -> CheckOutcome {
    const DarbouxResult E = extended_darboux(J);
    const MomentFunctional St = MomentFunctional::shifted(us);
    RationalPoly power = RationalPoly::one();
    for (int k = 0; k <= 2 * (n - 1); ++k) {
      for (int j = 0; j + 1 <= n; ++j) {
        if (k > 2 * j) continue;
        Rational got = St(E.polys[static_cast<std::size_t>(2 * j + 1)] * power);
        if (!got.is_zero())
          return check_fail("j=" + std::to_string(j) + " k=" + std::to_string(k) + " got " +
                            got.str());
      }
      power = power * lambda;
    }
    return check_pass();
  });

  detail::run_check(report, "unwrap_measure_moments", [&]() -> CheckOutcome {
    const auto* d = std::get_if<DiscreteMeasure>(&spec);
    if (!d) return check_skip("measure-level unwrapping needs a discrete spec");
    const DiscreteMeasure um = unwrap_measure(*d);
    const MomentSequence got = measure_moments(um, 2 * static_cast<int>(s.size()) - 1);
    const MomentSequence want = shifted_moments(us);
    if (got != want) return check_fail("unwrapped-measure moments are not (s_0, 0, s_1, 0, ...)");
    return check_pass();
  });

  // --- continued fractions ---

  detail::run_check(report, "sfraction_jfraction", [&]() -> CheckOutcome {
    if (!stieltjes) return check_skip("input is not Stieltjes");
    const ContinuedFraction sf = sfraction(s);
    const ContinuedFraction jf = jfraction(shifted_moments(us));
    for (const Rational& beta : jf.b)
      if (!beta.is_zero()) return check_fail("symmetric J-fraction has nonzero b");
    const std::size_t common = std::min(sf.d.size(), jf.c.size());
    for (std::size_t i = 0; i < common; ++i)
      if (sf.d[i] != jf.c[i]) return check_fail("chain entry " + std::to_string(i));
    return check_pass();
  });

  detail::run_check(report, "even_contraction", [&]() -> CheckOutcome {
    if (!stieltjes) return check_skip("input is not Stieltjes");
    const ContinuedFraction sf = sfraction(s);
    std::vector<Rational> d{Rational(0)};  // d_0 = 0
    d.insert(d.end(), sf.d.begin(), sf.d.end());
    const ContinuedFraction jf = jfraction(s);
    for (std::size_t j = 0; j < jf.b.size(); ++j) {
      if (2 * j + 1 >= d.size()) break;
      if (jf.b[j] != d[2 * j] + d[2 * j + 1]) return check_fail("b_" + std::to_string(j));
    }
    for (std::size_t j = 0; j < jf.c.size(); ++j) {
      if (2 * j + 2 >= d.size()) break;
      if (jf.c[j] != d[2 * j + 1] * d[2 * j + 2]) return check_fail("c_" + std::to_string(j));
    }
    return check_pass();
  });

  detail::run_check(report, "laurent_convergents", [&]() -> CheckOutcome {
    const ContinuedFraction jf = jfraction(s);
    for (int k = 1; k <= jf.levels(); ++k) {
      const int m = laurent_match(approximant(jf, k), s);
      if (m < std::min(2 * k, static_cast<int>(s.size())))
        return check_fail("k=" + std::to_string(k) + " matched only " + std::to_string(m));
    }
    return check_pass();
  });

  detail::run_check(report, "pfraction_denominators", [&]() -> CheckOutcome {
    const ContinuedFraction pf = pfraction(s);
    for (int k = 1; k <= std::min(pf.levels(), n); ++k) {
      const RationalApproximant a = approximant(pf, k);
      if (a.den != gops.polys[static_cast<std::size_t>(k)])
        return check_fail("k=" + std::to_string(k));
    }
    return check_pass();
  });

  // --- the Chihara construction ---

  const bool real_shift = shift && shift->kind == Shift::Kind::real;
  const bool imag_shift = shift && shift->kind == Shift::Kind::imaginary;
  const std::string no_real = "no real shift requested";
  const std::string no_imag = "no imaginary shift requested";

  detail::run_check(report, "chihara_sign_condition", [&]() -> CheckOutcome {
    if (!real_shift) return check_skip(no_real);
    const Rational a2 = shift->alpha * shift->alpha;
    bool negate = false;
    for (std::size_t j = 0; j < ops.polys.size(); ++j) {
      Rational v = ops.polys[j](a2);
      if ((negate ? -v : v).sign() <= 0)
        return check_fail("(-1)^" + std::to_string(j) + " P_" + std::to_string(j) + "(" +
                          a2.str() + ") = " + (negate ? -v : v).str());
      negate = !negate;
    }
    return check_pass();
  });

  detail::run_check(report, "chihara_lu", [&]() -> CheckOutcome {
    if (!real_shift) return check_skip(no_real);
    const LUFactors f = lu(J, *shift);
    if (lu_product(f) != J) return check_fail("shifted L*U does not reproduce J");
    return check_pass();
  });

  detail::run_check(report, "chihara_block_lu", [&]() -> CheckOutcome {
    if (!real_shift) return check_skip(no_real);
    const BlockFactors<Rational> bf = block_factors(lu(J, *shift));
    RationalMatrix shifted = truncate(GJ, 2 * n);
    for (int i = 0; i < 2 * n; ++i) shifted.at(i, i) -= shift->alpha;
    if (bf.lower * bf.upper != shifted)
      return check_fail("block L*U does not reproduce the alpha-shifted matrix");
    return check_pass();
  });

  detail::run_check(report, "chihara_block_ul", [&]() -> CheckOutcome {
    if (!real_shift) return check_skip(no_real);
    const BlockFactors<Rational> bf = block_factors(lu(J, *shift));
    const DarbouxResult C = chihara(J, shift->alpha);
    RationalMatrix got = bf.upper * bf.lower;
    for (int i = 0; i < 2 * n; ++i) got.at(i, i) += shift->alpha;
    if (got != truncate(C.matrix, 2 * n))
      return check_fail("block U*L + alpha*I does not reproduce the Chihara matrix");
    return check_pass();
  });

  detail::run_check(report, "chihara_matrix", [&]() -> CheckOutcome {
    if (!real_shift) return check_skip(no_real);
    const DarbouxResult C = chihara(J, shift->alpha);
    MomentSequence m;
    for (std::size_t k = 0; k + 1 < us.size(); ++k)
      m.push_back(us[k + 1] - shift->alpha * us[k]);
    const MonicJacobi want = jacobi_from_moments(m, 2 * n);
    if (C.matrix != want)
      return check_fail("matrix disagrees with the Jacobi matrix of (λ−α)S(λ²) moments");
    return check_pass();
  });

  detail::run_check(report, "chihara_polys_kernel", [&]() -> CheckOutcome {
    if (!real_shift) return check_skip(no_real);
    const DarbouxResult C = chihara(J, shift->alpha);
    const std::vector<RationalPoly> kp = kernel_polys(ops, shift->alpha * shift->alpha);
    const RationalPoly shift_factor{shift->alpha, Rational(1)};  // λ + α
    for (std::size_t j = 0; j < kp.size(); ++j) {
      if (C.polys[2 * j + 1] != shift_factor * compose_square(kp[j]))
        return check_fail("odd index " + std::to_string(2 * j + 1));
    }
    for (std::size_t j = 0; 2 * j < C.polys.size(); ++j)
      if (C.polys[2 * j] != gops.polys[j]) return check_fail("even index " + std::to_string(2 * j));
    return check_pass();
  });

  detail::run_check(report, "chihara_divisibility", [&]() -> CheckOutcome {
    if (!real_shift) return check_skip(no_real);
    const Rational a2 = shift->alpha * shift->alpha;
    const std::vector<RationalPoly> nums = detail::odd_numerators(ops, a2);
    const RationalPoly quad{-a2, Rational(0), Rational(1)};  // λ² − α², roots ±α
    for (std::size_t j = 0; j < nums.size(); ++j) {
      RationalPoly q = div_exact(nums[j], quad);
      if (quad * q != nums[j]) return check_fail("index " + std::to_string(j));
    }
    return check_pass();
  });

  detail::run_check(report, "chihara_recurrence", [&]() -> CheckOutcome {
    if (!real_shift) return check_skip(no_real);
    const DarbouxResult C = chihara(J, shift->alpha);
    for (std::size_t k = 0; k + 1 < C.polys.size(); ++k) {
      RationalPoly rhs = C.polys[k + 1] + RationalPoly::constant(C.matrix.b[k]) * C.polys[k];
      if (k >= 1) rhs = rhs + RationalPoly::constant(C.matrix.c[k - 1]) * C.polys[k - 1];
      if (lambda * C.polys[k] != rhs) return check_fail("index " + std::to_string(k));
    }
    return check_pass();
  });

  detail::run_check(report, "chihara_orthogonality", [&]() -> CheckOutcome {
    if (!real_shift) return check_skip(no_real);
    const DarbouxResult C = chihara(J, shift->alpha);
    const MomentFunctional Sa = MomentFunctional::shifted(us, shift->alpha);
    RationalPoly power = RationalPoly::one();
    for (int k = 0; k <= 2 * (n - 1); ++k) {
      for (int j = 0; j + 1 <= n; ++j) {
        if (k > 2 * j) continue;
        Rational got = Sa(C.polys[static_cast<std::size_t>(2 * j + 1)] * power);
        if (!got.is_zero())
          return check_fail("j=" + std::to_string(j) + " k=" + std::to_string(k) + " got " +
                            got.str());
      }
      power = power * lambda;
    }
    return check_pass();
  });

  detail::run_check(report, "chihara_measure_moments", [&]() -> CheckOutcome {
    if (!real_shift) return check_skip(no_real);
    const auto* d = std::get_if<DiscreteMeasure>(&spec);
    if (!d) return check_skip("measure-level comparison needs a discrete spec");
    const DiscreteMeasure cm = chihara_measure(*d, shift->alpha);
    const MomentSequence got = measure_moments(cm, 2 * static_cast<int>(s.size()) - 1);
    for (std::size_t k = 0; k < got.size(); ++k) {
      Rational want = us[k + 1] - shift->alpha * us[k];
      if (got[k] != want) return check_fail("moment " + std::to_string(k));
    }
    return check_pass();
  });

  // --- the imaginary shift ---

  detail::run_check(report, "imaginary_positivity", [&]() -> CheckOutcome {
    if (!imag_shift) return check_skip(no_imag);
    if (!stieltjes) return check_skip("positivity of the factors needs Stieltjes input");
    const LUFactors f = lu(J, *shift);
    for (const Rational& u : f.u)
      if (u.sign() <= 0) return check_fail("u = " + u.str());
    for (const Rational& l : f.l)
      if (l.sign() <= 0) return check_fail("l = " + l.str());
    return check_pass();
  });

  detail::run_check(report, "imaginary_contraction", [&]() -> CheckOutcome {
    if (!imag_shift) return check_skip(no_imag);
    const LUFactors f = lu(J, *shift);
    const Rational a2 = shift->alpha * shift->alpha;
    for (std::size_t j = 0; j < f.u.size(); ++j) {
      Rational want = f.u[j] + (j >= 1 ? f.l[j - 1] : Rational(0));
      if (J.b[j] + a2 != want) return check_fail("b_" + std::to_string(j));
    }
    for (std::size_t j = 0; j < f.l.size(); ++j)
      if (J.c[j] != f.l[j] * f.u[j]) return check_fail("c_" + std::to_string(j));
    return check_pass();
  });

  detail::run_check(report, "imaginary_matrix", [&]() -> CheckOutcome {
    if (!imag_shift) return check_skip(no_imag);
    const ComplexDarbouxResult C = chihara_imaginary(J, shift->alpha);
    const LUFactors f = lu(J, *shift);
    if (C.chain != interleave(f)) return check_fail("chain is not the interleaved LU data");
    const ComplexRational ia = imaginary(shift->alpha);
    for (std::size_t k = 0; k < C.diag.size(); ++k) {
      if (C.diag[k] != (k % 2 == 0 ? -ia : ia)) return check_fail("diagonal " + std::to_string(k));
      if (!C.diag[k].re.is_zero()) return check_fail("diagonal has a real part");
    }
    return check_pass();
  });

  detail::run_check(report, "imaginary_block_ul", [&]() -> CheckOutcome {
    if (!imag_shift) return check_skip(no_imag);
    const LUFactors f = lu(J, *shift);
    const BlockFactors<ComplexRational> bf = block_factors_complex(f);
    const ComplexDarbouxResult C = chihara_imaginary(J, shift->alpha);
    DenseMatrix<ComplexRational> got = bf.upper * bf.lower;
    const ComplexRational ia = imaginary(shift->alpha);
    for (int i = 0; i < 2 * n; ++i) got.at(i, i) += ia;
    DenseMatrix<ComplexRational> want(2 * n);
    for (int i = 0; i < 2 * n; ++i) {
      want.at(i, i) = C.diag[static_cast<std::size_t>(i)];
      if (i + 1 < 2 * n) {
        want.at(i, i + 1) = ComplexRational(Rational(1));
        want.at(i + 1, i) = ComplexRational(C.chain[static_cast<std::size_t>(i)]);
      }
    }
    if (got != want)
      return check_fail("block U*L + i*alpha*I does not reproduce the complex matrix");
    return check_pass();
  });

  detail::run_check(report, "imaginary_recurrence", [&]() -> CheckOutcome {
    if (!imag_shift) return check_skip(no_imag);
    const ComplexDarbouxResult C = chihara_imaginary(J, shift->alpha);
    const ComplexPoly clambda = ComplexPoly::variable();
    for (std::size_t k = 0; k + 1 < C.polys.size(); ++k) {
      ComplexPoly rhs = C.polys[k + 1] + ComplexPoly::constant(C.diag[k]) * C.polys[k];
      if (k >= 1)
        rhs = rhs + ComplexPoly::constant(ComplexRational(C.chain[k - 1])) * C.polys[k - 1];
      if (clambda * C.polys[k] != rhs) return check_fail("index " + std::to_string(k));
    }
    return check_pass();
  });

  return report;
}

}  // namespace darboux
