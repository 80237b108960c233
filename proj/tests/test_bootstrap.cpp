#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>
#include <vector>

#include "fsc/bootstrap.hpp"
#include "fsc/errors.hpp"

using namespace fsc;

namespace {

OperatorClass op_of(int d, int d0, const char* coeff) {
  return make_operator_class(d, d0, parse_space(coeff));
}

IndexTriple pair_of(const Rational& sigma, const Rational& inv_a) {
  return IndexTriple{sigma, inv_a, std::nullopt};
}

unsigned seed_from_env(unsigned fallback) {
  if (const char* s = std::getenv("FSC_SEED")) return static_cast<unsigned>(std::atoi(s));
  return fallback;
}

struct Sampler {
  std::mt19937 rng;
  explicit Sampler(unsigned seed) : rng(seed) {}

  Rational pick(const std::vector<Rational>& values) {
    std::uniform_int_distribution<std::size_t> d(0, values.size() - 1);
    return values[d(rng)];
  }
  int pick_int(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng);
  }
};

const std::vector<Rational> kInvPs = {rat(1, 4), rat(1, 3), rat(1, 2), rat(2, 3), rat(3, 4)};
const std::vector<Rational> kFines = {rat(1, 3), rat(1, 2), rat(2, 3)};

/// Draws (op, target) with Holder coefficients, nonempty set and an
/// in-set target; returns false when the draw is inadmissible.
bool draw_admissible(Sampler& s, SpaceKind kind, OperatorClass& op, IndexTriple& target) {
  const int d = s.pick_int(1, 4);
  const int d0 = s.pick_int(0, d);
  const int n = s.pick_int(1, 3);
  const Rational coeff_s = rat(s.pick_int(-4, 8), 2);
  const Rational inv_p = s.pick(kInvPs);
  std::optional<Rational> inv_q;
  if (kind_has_fine(kind)) inv_q = s.pick(kFines);

  if (!(coeff_s > Rational(n) * inv_p)) return false;
  op = make_operator_class(d, d0, make_space(kind, coeff_s, inv_p, inv_q, n));
  if (!index_set_nonempty(op).decision.verdict) return false;

  const Rational sigma = Rational(d) - coeff_s + rat(s.pick_int(0, 16), 4);
  const Rational inv_a = rat(s.pick_int(1, 11), 12);
  std::optional<Rational> inv_b;
  if (kind_has_fine(kind)) inv_b = s.pick(kFines);
  target = IndexTriple{sigma, inv_a, inv_b};
  if (!(inv_a > 0 && inv_a < 1)) return false;
  return mapping_ok(op, target).verdict;
}

}  // namespace

TEST_CASE("worked path: raise only") {
  const OperatorClass op = op_of(2, 0, "H[s=2,p=2;n=3]");
  const BootstrapPath path = plan_bootstrap(op, pair_of(2, rat(1, 2)));
  REQUIRE(path.steps.size() == 3);
  CHECK(path.steps[0].stage == "initial");
  CHECK(path.steps[0].from == pair_of(-1, rat(1, 2)));
  CHECK(path.steps[0].to == pair_of(0, rat(1, 2)));
  CHECK(path.steps[1].stage == "raise_sigma_fixed_a");
  CHECK(path.steps[1].to == pair_of(1, rat(1, 2)));
  CHECK(path.steps[2].to == pair_of(2, rat(1, 2)));
  CHECK(validate_path(op, path).verdict);
}

TEST_CASE("worked path: along the regularity line") {
  const OperatorClass op = op_of(2, 0, "H[s=2,p=2;n=3]");
  const BootstrapPath path = plan_bootstrap(op, pair_of(1, rat(2, 3)));
  REQUIRE(path.steps.size() == 3);
  CHECK(path.steps[0].to == pair_of(0, rat(1, 2)));
  CHECK(path.steps[1].stage == "raise_sigma_on_line");
  CHECK(path.steps[1].to == pair_of(rat(1, 2), rat(2, 3)));
  CHECK(path.steps[2].stage == "raise_sigma_fixed_a");
  CHECK(path.steps[2].to == pair_of(1, rat(2, 3)));
  CHECK(validate_path(op, path).verdict);
  // The intermediate rides the regularity line at value 1/2.
  CHECK(path.steps[1].to.inv_a - path.steps[1].to.sigma / 3 == rat(1, 2));
}

TEST_CASE("worked path: low-order reduction") {
  const OperatorClass op = op_of(2, 1, "H[s=2,p=2;n=3]");
  const BootstrapPath path = plan_bootstrap(op, pair_of(3, rat(1, 2)));
  REQUIRE(path.steps.size() == 4);
  CHECK(path.steps.back().stage == "d0_reduction");
  CHECK(path.steps.back().from == pair_of(2, rat(1, 2)));
  CHECK(path.steps.back().to == pair_of(3, rat(1, 2)));
  CHECK(validate_path(op, path).verdict);
}

TEST_CASE("planner errors") {
  CHECK_THROWS_AS(plan_bootstrap(op_of(2, 0, "H[s=1,p=2;n=3]"), pair_of(1, rat(1, 2))),
                  Error);  // coefficients not Holder (1 <= 3/2)
  try {
    plan_bootstrap(op_of(2, 0, "H[s=7/4,p=4;n=3]"), pair_of(4, rat(1, 2)));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TargetNotInS);
  }
  try {
    plan_bootstrap(op_of(4, 0, "H[s=7/4,p=4;n=3]"), pair_of(2, rat(1, 2)));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SetEmpty);
  }
}

TEST_CASE("validator flags corrupted paths") {
  const OperatorClass op = op_of(2, 0, "H[s=2,p=2;n=3]");
  BootstrapPath path = plan_bootstrap(op, pair_of(2, rat(1, 2)));

  BootstrapPath jump = path;
  // Raise sigma by 3/2 in one step.
  jump.steps[1].to.sigma = rat(3, 2);
  jump.steps[2].from.sigma = rat(3, 2);
  const Decision bad = validate_path(op, jump);
  CHECK_FALSE(bad.verdict);
  bool h3 = false;
  for (const Clause& c : bad.clauses)
    if (c.status == ClauseStatus::Violated && c.tag.rfind("H3", 0) == 0) h3 = true;
  CHECK(h3);

  BootstrapPath wrong_end = path;
  wrong_end.steps.pop_back();
  const Decision mismatch = validate_path(op, wrong_end);
  CHECK_FALSE(mismatch.verdict);
  bool terminal = false;
  for (const Clause& c : mismatch.clauses)
    if (c.tag == "terminal" && c.status == ClauseStatus::Violated) terminal = true;
  CHECK(terminal);

  BootstrapPath broken_chain = path;
  broken_chain.steps[1].to.inv_a = rat(1, 3);
  const Decision chain = validate_path(op, broken_chain);
  CHECK_FALSE(chain.verdict);
}

TEST_CASE("planned paths validate over random admissible inputs") {
  for (SpaceKind kind : {SpaceKind::BesselH, SpaceKind::SlobodeckijW, SpaceKind::TriebelF,
                         SpaceKind::BesovB}) {
    Sampler s(seed_from_env(0xf5c0 + static_cast<unsigned>(kind)));
    int planned = 0, attempts = 0, infeasible = 0;
    while (planned < 60 && attempts < 40000) {
      ++attempts;
      OperatorClass op = op_of(1, 0, "H[s=2,p=2;n=1]");
      IndexTriple target = pair_of(0, rat(1, 2));
      if (!draw_admissible(s, kind, op, target)) continue;
      BootstrapPath path{op, target, {}};
      try {
        path = plan_bootstrap(op, target);
      } catch (const Error& e) {
        CHECK(e.code() == Errc::PlanInfeasible);
        ++infeasible;
        continue;
      }
      ++planned;
      const Decision check = validate_path(op, path);
      CAPTURE(render_space(op.coeff));
      CAPTURE(render_operator_params(op));
      CAPTURE(render_triple(target));
      CHECK(check.verdict);
      CHECK(static_cast<long>(path.steps.size()) <= step_count_bound(op, target));
      // Fine discipline: every non-terminal step rides q*.
      if (kind_has_fine(kind)) {
        const Rational q_star = conjugate_inv(effective_inv_q(op.coeff));
        for (std::size_t i = 0; i + 1 < path.steps.size(); ++i) {
          const bool stage_terminal =
              path.steps[i].stage == "d0_reduction" || path.steps[i + 1].stage == "d0_reduction";
          if (!stage_terminal) CHECK(*path.steps[i].to.inv_b == q_star);
        }
      }
    }
    CHECK(planned == 60);
  }
}

TEST_CASE("every intermediate of a planned path is in the compatible set") {
  Sampler s(seed_from_env(0xabcd));
  int done = 0, attempts = 0;
  while (done < 40 && attempts < 20000) {
    ++attempts;
    OperatorClass op = op_of(1, 0, "H[s=2,p=2;n=1]");
    IndexTriple target = pair_of(0, rat(1, 2));
    if (!draw_admissible(s, SpaceKind::BesovB, op, target)) continue;
    BootstrapPath path{op, target, {}};
    try {
      path = plan_bootstrap(op, target);
    } catch (const Error&) {
      continue;
    }
    ++done;
    for (const BootstrapStep& st : path.steps) CHECK(mapping_ok(op, st.to).verdict);
  }
  CHECK(done == 40);
}

TEST_CASE("standalone fine improvement at the seed corner") {
  // Target sits at (d-s, p*) with a weaker fine exponent than q*: the only
  // movement is the final fine step.
  const OperatorClass op =
      make_operator_class(2, 0, parse_space("B[s=2,p=2,q=2;n=3]"));
  const IndexTriple target{rat(0), rat(1, 2), rat(2, 3)};  // b = 3/2 <= q* = 2
  REQUIRE(mapping_ok(op, target).verdict);
  const BootstrapPath path = plan_bootstrap(op, target);
  REQUIRE(path.steps.size() == 2);
  CHECK(path.steps[0].stage == "initial");
  CHECK(path.steps[1].stage == "fine_final");
  CHECK(path.steps[1].from.sigma == path.steps[1].to.sigma);
  CHECK(validate_path(op, path).verdict);
}

TEST_CASE("fractional slobodeckij path avoids the pinned order boundaries") {
  // Fractional s pins the Lebesgue exponent on both order boundaries; the
  // planner raises first, lowers in the interior and finishes the raise.
  const OperatorClass op =
      make_operator_class(2, 0, parse_space("W[s=3/2,p=3;n=3]"));
  const IndexTriple target{rat(3, 2), rat(1, 3), std::nullopt};  // pinned corner (s, p)
  REQUIRE(mapping_ok(op, target).verdict);
  const BootstrapPath path = plan_bootstrap(op, target);
  CHECK(validate_path(op, path).verdict);
  for (const BootstrapStep& st : path.steps) CHECK(mapping_ok(op, st.to).verdict);

  // A target needing pure lowering at sigma = d-s would sit off the pin and
  // is rejected as a membership failure, not planned around.
  const IndexTriple off_pin{rat(1, 2), rat(1, 3), std::nullopt};
  CHECK_FALSE(mapping_ok(op, off_pin).verdict);
  CHECK_THROWS_AS(plan_bootstrap(op, off_pin), Error);
}

TEST_CASE("besov low-order reduction keeps the fine discipline") {
  const OperatorClass op =
      make_operator_class(2, 1, parse_space("B[s=2,p=2,q=2;n=3]"));
  const IndexTriple target{rat(3), rat(1, 2), rat(1, 2)};  // (s+d0, p, q)
  REQUIRE(mapping_ok(op, target).verdict);
  const BootstrapPath path = plan_bootstrap(op, target);
  CHECK(validate_path(op, path).verdict);
  CHECK(path.steps.back().stage == "d0_reduction");
  CHECK(path.steps.back().to == target);
}
