#include "fsc/bootstrap.hpp"

#include "fsc/errors.hpp"

namespace fsc {

namespace {

std::string num(const Rational& r) { return format_rational(r); }

Rational reg_of(const IndexTriple& x, int n) { return x.inv_a - x.sigma / n; }

struct PlanContext {
  OperatorClass op;
  IndexTriple target;
  SpaceKind kind;
  bool has_fine = false;
  bool frac_w = false;
  int n = 1;
  Rational sigma_seed;   // d - s - 1
  Rational sigma_lo;     // d - s
  Rational inv_p_star;   // 1 - 1/p
  Rational inv_q_star;   // 1 - 1/q (effective)
  Rational reg_hi;       // 1/p* - (d-s)/n

  std::optional<Rational> path_fine() const {
    return has_fine ? std::optional<Rational>(inv_q_star) : std::nullopt;
  }
  IndexTriple seed() const { return {sigma_seed, inv_p_star, path_fine()}; }
  IndexTriple first() const { return {sigma_lo, inv_p_star, path_fine()}; }
};

PlanContext context_of(const OperatorClass& op, const IndexTriple& target) {
  PlanContext cx;
  cx.op = op;
  cx.target = target;
  cx.kind = op.coeff.kind;
  cx.has_fine = kind_has_fine(cx.kind);
  cx.frac_w = cx.kind == SpaceKind::SlobodeckijW && !is_integer(op.coeff.s);
  cx.n = op.coeff.n;
  cx.sigma_lo = Rational(op.d) - op.coeff.s;
  cx.sigma_seed = cx.sigma_lo - 1;
  cx.inv_p_star = conjugate_inv(op.coeff.inv_p);
  cx.inv_q_star = conjugate_inv(effective_inv_q(op.coeff));
  cx.reg_hi = cx.inv_p_star - cx.sigma_lo / cx.n;
  return cx;
}

/// Waypoint values from `from` (exclusive) to `to` (inclusive), each move of
/// size at most `max_step`; `strict` shrinks moves strictly below max_step.
std::vector<Rational> ladder(const Rational& from, const Rational& to,
                             const Rational& max_step, bool strict) {
  std::vector<Rational> out;
  Rational delta = to - from;
  const int dir = delta < 0 ? -1 : 1;
  if (delta < 0) delta = -delta;
  if (delta == 0) return out;
  if (strict) {
    const BigInt m = floor_rational(delta / max_step) + 1;
    const Rational step = delta / Rational(m);
    Rational v = from;
    for (BigInt i = 1; i < m; ++i) {
      v += dir * step;
      out.push_back(v);
    }
    out.push_back(to);
  } else {
    Rational v = from;
    while (true) {
      Rational remaining = dir > 0 ? to - v : v - to;
      if (remaining <= max_step) break;
      v += dir * max_step;
      out.push_back(v);
    }
    out.push_back(to);
  }
  return out;
}

struct Waypoint {
  IndexTriple x;
  std::string stage;
};

/// The d0 = 0 shaped path (also used at a frozen level ell for d0 > 0),
/// expressed as waypoints after the first triple (d-s, p*, q*).
std::vector<Waypoint> shape_waypoints(const PlanContext& cx, int level,
                                      const IndexTriple& t) {
  std::vector<Waypoint> wp;
  const bool strict = cx.has_fine;  // F/B move strictly inside H3/H4 bounds
  const Rational step_a = Rational(1) / cx.n;
  auto fine = cx.path_fine();
  const Rational sigma_top = cx.op.coeff.s + level;

  if (t.inv_a <= cx.inv_p_star) {
    if (cx.frac_w && t.inv_a != cx.inv_p_star) {
      // Fractional W pins the Lebesgue exponent on both order boundaries, so
      // raise first at p*, lower strictly inside the order interval, then
      // finish the raise.
      const bool top_target = t.sigma == sigma_top;
      Rational sigma_mid = t.sigma;
      if (top_target) {
        sigma_mid = t.sigma - rat(1, 2);
        const Rational inset = (cx.sigma_lo + t.sigma) / 2;
        if (sigma_mid <= cx.sigma_lo) sigma_mid = inset;
      }
      for (const Rational& sv : ladder(cx.sigma_lo, sigma_mid, Rational(1), false))
        wp.push_back({{sv, cx.inv_p_star, fine}, "raise_sigma_fixed_a"});
      for (const Rational& av : ladder(cx.inv_p_star, t.inv_a, step_a, false))
        wp.push_back({{sigma_mid, av, fine}, "lower_lebesgue"});
      for (const Rational& sv : ladder(sigma_mid, t.sigma, Rational(1), false))
        wp.push_back({{sv, t.inv_a, fine}, "raise_sigma_fixed_a"});
    } else {
      for (const Rational& av : ladder(cx.inv_p_star, t.inv_a, step_a, strict))
        wp.push_back({{cx.sigma_lo, av, fine}, "lower_lebesgue"});
      for (const Rational& sv : ladder(cx.sigma_lo, t.sigma, Rational(1), strict))
        wp.push_back({{sv, t.inv_a, fine}, "raise_sigma_fixed_a"});
    }
  } else {
    // 1/a > 1/p*: ride the high-regularity line up to sigma', then raise
    // sigma at the final Lebesgue exponent.
    const Rational sigma_prime = Rational(cx.n) * (t.inv_a - cx.reg_hi);
    for (const Rational& sv : ladder(cx.sigma_lo, sigma_prime, Rational(1), strict))
      wp.push_back({{sv, cx.reg_hi + sv / cx.n, fine}, "raise_sigma_on_line"});
    for (const Rational& sv : ladder(sigma_prime, t.sigma, Rational(1), strict))
      wp.push_back({{sv, t.inv_a, fine}, "raise_sigma_fixed_a"});
  }
  return wp;
}

/// Candidate targets for one reduction from level ell to ell-1.  The paper's
/// three rules come first (keep sigma and climb to the low-regularity line;
/// slide down the regularity line to the top order; or jump to the top
/// corner (s+ell-1, p), fine exponent max(q,b)).  A rule point can violate a
/// boundary fine condition of the lower level (bottom-order line with q > 2,
/// pinned exponents on the fractional W scale) or sink below the regularity
/// the remaining path still has to support, so corners and midpoints of the
/// feasible window follow; the caller validates every candidate and takes
/// the first workable one.
///
/// The window comes from the step conditions for the final step T' -> t and
/// the feasibility of the sub-path toward T' (no step may exceed the path
/// target's order or undercut its regularity):
///   sigma' in [max(d-s, sigma_t - 1), min(s+ell-1, sigma_target)]
///   reg'   in [max(lowreg(ell-1), reg_target), min(highreg, reg_t + 1/n)]
std::vector<IndexTriple> reduction_candidates(const PlanContext& cx, int level,
                                              const IndexTriple& t) {
  const Rational s_top = cx.op.coeff.s + (level - 1);
  const Rational lowreg1 = cx.op.coeff.inv_p - s_top / cx.n;
  const Rational reg_t = reg_of(t, cx.n);
  const Rational reg_target = reg_of(cx.target, cx.n);

  std::vector<std::optional<Rational>> fines;
  if (cx.has_fine) {
    const Rational inv_q = effective_inv_q(cx.op.coeff);
    fines.push_back(inv_q < *t.inv_b ? inv_q : *t.inv_b);  // b' = max(q,b)
    if (*fines.back() != cx.inv_q_star) fines.push_back(cx.inv_q_star);
  } else {
    fines.push_back(std::nullopt);
  }

  std::vector<std::pair<Rational, Rational>> points;  // (sigma', 1/a')
  auto add_point = [&](const Rational& sigma, const Rational& reg) {
    points.emplace_back(sigma, reg + sigma / cx.n);
  };

  // Paper rule points.
  if (t.sigma < s_top) {
    add_point(t.sigma, lowreg1);
  } else {
    if (lowreg1 <= reg_t) add_point(s_top, reg_t);
    add_point(s_top, cx.op.coeff.inv_p - s_top / cx.n);
  }

  // Window sweep.
  Rational sig_lo = t.sigma - 1;
  if (sig_lo < cx.sigma_lo) sig_lo = cx.sigma_lo;
  Rational sig_hi = s_top < cx.target.sigma ? s_top : cx.target.sigma;
  Rational reg_lo = lowreg1 > reg_target ? lowreg1 : reg_target;
  Rational reg_hi = reg_t + Rational(1) / cx.n;
  if (cx.reg_hi < reg_hi) reg_hi = cx.reg_hi;
  if (sig_lo <= sig_hi && reg_lo <= reg_hi) {
    const std::vector<Rational> sigmas = {sig_hi, (sig_lo + sig_hi) / 2, sig_lo};
    const std::vector<Rational> regs = {reg_t, (reg_lo + reg_hi) / 2, reg_lo, reg_hi};
    for (const Rational& sigma : sigmas)
      for (const Rational& reg : regs)
        if (reg >= reg_lo && reg <= reg_hi) add_point(sigma, reg);
  }

  std::vector<IndexTriple> candidates;
  for (const auto& [sigma, inv_a] : points)
    for (const auto& fine : fines)
      if (inv_a > 0 && inv_a < 1) candidates.push_back({sigma, inv_a, fine});
  return candidates;
}

}  // namespace

Decision check_step(const OperatorClass& op, const IndexTriple& target,
                    const IndexTriple& from, const IndexTriple& to) {
  const int n = op.coeff.n;
  const bool has_fine = kind_has_fine(op.coeff.kind);
  const bool besov = op.coeff.kind == SpaceKind::BesovB;
  const Rational reg_t = reg_of(target, n);
  const Rational reg_b = reg_of(to, n);
  const Rational soft_reg = from.inv_a - (from.sigma + 1) / n;

  DecisionBuilder out;
  out.require("H1", "sigma_B=" + num(to.sigma) + " <= sigma=" + num(target.sigma),
              to.sigma <= target.sigma, to.sigma == target.sigma);
  out.require("H2", "1/q-sigma/n=" + num(reg_t) + " <= 1/q_B-sigma_B/n=" + num(reg_b),
              reg_t <= reg_b, reg_t == reg_b);
  out.require("H3", "sigma_B=" + num(to.sigma) + " <= sigma_A+1=" + num(from.sigma + 1),
              to.sigma <= from.sigma + 1, to.sigma == from.sigma + 1);
  out.require("H4",
              "1/q_A-(sigma_A+1)/n=" + num(soft_reg) + " <= 1/q_B-sigma_B/n=" + num(reg_b),
              soft_reg <= reg_b, soft_reg == reg_b);

  if (has_fine) {
    if (to.sigma == target.sigma)
      out.require("H5", "sigma_B=sigma: 1/b_B=" + num(*to.inv_b) + " <= 1/b=" +
                            num(*target.inv_b),
                  *to.inv_b <= *target.inv_b, *to.inv_b == *target.inv_b);
    else
      out.inapplicable("H5", "sigma_B < sigma");
    if (to.sigma == from.sigma + 1)
      out.require("H6", "sigma_B=sigma_A+1: 1/b_B=" + num(*to.inv_b) + " <= 1/b_A=" +
                            num(*from.inv_b),
                  *to.inv_b <= *from.inv_b, *to.inv_b == *from.inv_b);
    else
      out.inapplicable("H6", "sigma_B < sigma_A+1");
  }
  if (besov) {
    if (reg_b == reg_t)
      out.require("H7", "equal regularity with target: 1/b_B=" + num(*to.inv_b) +
                            " <= 1/b=" + num(*target.inv_b),
                  *to.inv_b <= *target.inv_b, *to.inv_b == *target.inv_b);
    else
      out.inapplicable("H7", "regularities differ");
    if (reg_b == soft_reg)
      out.require("H8", "regularity exhausts the step: 1/b_B=" + num(*to.inv_b) +
                            " <= 1/b_A=" + num(*from.inv_b),
                  *to.inv_b <= *from.inv_b, *to.inv_b == *from.inv_b);
    else
      out.inapplicable("H8", "step regularity slack");
  }

  bool commutator = false;
  try {
    commutator = commutator_ok(op, from).verdict;
  } catch (const Error&) {
    commutator = false;
  }
  out.require("commutator", "commutator estimate available at (" + render_triple(from) + ")",
              commutator, false);
  out.require("membership", "(" + render_triple(to) + ") lies in the compatible set",
              mapping_ok(op, to).verdict, false);
  return std::move(out).take();
}

long step_count_bound(const OperatorClass& op, const IndexTriple& target) {
  const PlanContext cx = context_of(op, target);
  Rational da = target.inv_a - cx.inv_p_star;
  if (da < 0) da = -da;
  Rational ds = target.sigma - cx.sigma_lo;
  if (ds < 0) ds = 0;
  return 4 + op.d0 + ceil_rational(Rational(cx.n) * da).convert_to<long>() +
         ceil_rational(ds).convert_to<long>() + 1;
}

BootstrapPath plan_bootstrap(const OperatorClass& op, const IndexTriple& target) {
  if (!coefficients_holder(op))
    raise(Errc::CoefficientsNotHolder, "bootstrap requires s > n/p coefficients");
  if (!index_set_nonempty(op).decision.verdict)
    raise(Errc::SetEmpty, "compatible index set is empty");
  if (!mapping_ok(op, target).verdict)
    raise(Errc::TargetNotInS, "target outside the compatible index set");

  const PlanContext cx = context_of(op, target);
  auto level_op = [&](int level) { return OperatorClass{op.d, level, op.coeff}; };

  // Peel off low-order levels: each reduction contributes the path's final
  // steps, innermost level first.
  std::vector<BootstrapStep> reductions;  // collected outermost-first
  IndexTriple t = target;
  int level = op.d0;
  while (level > 0) {
    const OperatorClass lower = level_op(level - 1);
    if (!index_set_nonempty(lower).decision.verdict) break;
    if (mapping_ok(lower, t).verdict) {
      --level;
      continue;
    }
    std::optional<IndexTriple> reduced;
    for (const IndexTriple& candidate : reduction_candidates(cx, level, t)) {
      // The sub-path toward the candidate may neither exceed the path
      // target's order (H1) nor undercut its regularity (H2).
      if (candidate.sigma > target.sigma) continue;
      if (reg_of(candidate, op.coeff.n) < reg_of(target, op.coeff.n)) continue;
      if (!mapping_ok(lower, candidate).verdict) continue;
      if (!check_step(op, target, candidate, t).verdict) continue;
      reduced = candidate;
      break;
    }
    if (!reduced)
      raise(Errc::PlanInfeasible,
            "no admissible reduction from level " + std::to_string(level));
    reductions.push_back({*reduced, t, "d0_reduction", check_step(op, target, *reduced, t)});
    t = *reduced;
    --level;
  }

  const IndexTriple x1 = cx.first();
  std::vector<Waypoint> wp;
  if (t == x1) {
    // nothing beyond the initial step
  } else if (level == op.d0 && level > 0) {
    // No lower level to reduce through and no commutator beyond the first
    // step: only the corner itself is reachable.
    raise(Errc::PlanInfeasible,
          "compatible set has no zero-order sublevel to bootstrap within");
  } else {
    wp = shape_waypoints(cx, level, t);
  }

  // Fine exponent rides q* throughout and flips to the target value on the
  // final step; a standalone step covers the no-movement corner case.
  if (cx.has_fine) {
    if (!wp.empty()) {
      wp.back().x.inv_b = t.inv_b;
    } else if (*t.inv_b != cx.inv_q_star) {
      wp.push_back({t, "fine_final"});
    }
  }

  BootstrapPath path{op, target, {}};
  IndexTriple prev = cx.seed();
  auto push = [&](const IndexTriple& next, const std::string& stage) {
    path.steps.push_back({prev, next, stage, check_step(op, target, prev, next)});
    if (!path.steps.back().justification.verdict) {
      std::string why;
      for (const Clause& c : path.steps.back().justification.clauses)
        if (c.status == ClauseStatus::Violated) why += " [" + c.tag + ": " + c.citation + "]";
      raise(Errc::PlanInfeasible, "planned step (" + render_triple(prev) + ") -> (" +
                                      render_triple(next) + ") fails at stage " + stage + why);
    }
    prev = next;
  };

  push(x1, "initial");
  for (const Waypoint& w : wp) push(w.x, w.stage);
  for (auto it = reductions.rbegin(); it != reductions.rend(); ++it) {
    path.steps.push_back(*it);
    prev = it->to;
  }
  return path;
}

Decision validate_path(const OperatorClass& op, const BootstrapPath& path) {
  DecisionBuilder out;
  if (path.steps.empty()) {
    out.add("nonempty", "path has no steps", ClauseStatus::Violated);
    return std::move(out).take();
  }

  for (std::size_t k = 0; k + 1 < path.steps.size(); ++k) {
    const bool chained = path.steps[k].to == path.steps[k + 1].from;
    out.require("chain@" + std::to_string(k + 1), "steps chain end-to-start", chained, false);
  }
  out.require("terminal", "final triple equals the target",
              path.steps.back().to == path.target, false);

  for (std::size_t k = 0; k < path.steps.size(); ++k) {
    Decision step;
    try {
      step = check_step(op, path.target, path.steps[k].from, path.steps[k].to);
    } catch (const Error& e) {
      out.add("step@" + std::to_string(k), std::string("step check failed: ") + e.what(),
              ClauseStatus::Violated);
      continue;
    }
    for (const Clause& c : step.clauses) {
      if (c.status == ClauseStatus::Violated)
        out.add(c.tag + "@" + std::to_string(k), c.citation, ClauseStatus::Violated);
    }
    if (step.verdict)
      out.add("step@" + std::to_string(k), "all step conditions hold",
              step.any_marginal() ? ClauseStatus::Marginal : ClauseStatus::Satisfied);
  }
  return std::move(out).take();
}

}  // namespace fsc
