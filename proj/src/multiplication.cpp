#include "fsc/multiplication.hpp"

#include "fsc/errors.hpp"

namespace fsc {

namespace {

int sign_class(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

std::string num(const Rational& r) { return format_rational(r); }

/// One multiplication query with precomputed regularities and effective fine
/// exponents; the clause walk below is shared between the Decision builder
/// and the verdict-only sweep sink.
struct Indices {
  Rational s1, s2, st;
  Rational r1, r2, rt;        // Lebesgue regularities 1/r_i, 1/r
  Rational q1, q2, qt;        // effective 1/q_i, 1/q
  Rational p1, p2, pt;        // 1/p_i, 1/p
  bool int_s1 = false, int_s2 = false, int_st = false;
  SpaceKind kind = SpaceKind::BesselH;
};

Indices indices_of(const MultQuery& q) {
  Indices ix;
  ix.kind = q.f1.kind;
  ix.s1 = q.f1.s;
  ix.s2 = q.f2.s;
  ix.st = q.target.s;
  ix.r1 = lebesgue_regularity(q.f1);
  ix.r2 = lebesgue_regularity(q.f2);
  ix.rt = lebesgue_regularity(q.target);
  ix.q1 = effective_inv_q(q.f1);
  ix.q2 = effective_inv_q(q.f2);
  ix.qt = effective_inv_q(q.target);
  ix.p1 = q.f1.inv_p;
  ix.p2 = q.f2.inv_p;
  ix.pt = q.target.inv_p;
  ix.int_s1 = is_integer(ix.s1);
  ix.int_s2 = is_integer(ix.s2);
  ix.int_st = is_integer(ix.st);
  return ix;
}

// Sink interface: require(tag, citation, ok, equality) for triggered rules.
// Citations are assembled lazily so sweeps never pay for strings.
template <typename Require>
void evaluate_clauses(const Indices& ix, Require&& require) {
  const Rational sum_r = ix.r1 + ix.r2;
  const Rational min_s = ix.s1 < ix.s2 ? ix.s1 : ix.s2;
  const Rational max_s = ix.s1 > ix.s2 ? ix.s1 : ix.s2;
  const Rational max_r = ix.r1 > ix.r2 ? ix.r1 : ix.r2;
  const Rational one{1};

  require(
      "sum-smoothness", [&] { return "s1+s2=" + num(ix.s1 + ix.s2) + " >= 0"; },
      ix.s1 + ix.s2 >= 0, ix.s1 + ix.s2 == 0);
  require(
      "target-smoothness", [&] { return "min(s1,s2)=" + num(min_s) + " >= s=" + num(ix.st); },
      min_s >= ix.st, min_s == ix.st);
  require(
      "regularity-max",
      [&] { return "max(1/r1,1/r2)=" + num(max_r) + " <= 1/r=" + num(ix.rt); },
      max_r <= ix.rt, max_r == ix.rt);
  require(
      "integrability-barrier", [&] { return "1/r1+1/r2=" + num(sum_r) + " <= 1"; },
      sum_r <= one, sum_r == one);
  require(
      "regularity-sum", [&] { return "1/r1+1/r2=" + num(sum_r) + " <= 1/r=" + num(ix.rt); },
      sum_r <= ix.rt, sum_r == ix.rt);

  // Strictness escalation at the integrability boundary (all scales; the B
  // statement folds it into the equality caveat block with identical logic).
  const Rational min_r12 = ix.r1 < ix.r2 ? ix.r1 : ix.r2;
  const Rational dual_edge = one - ix.rt;
  const Rational min_edge = min_r12 < dual_edge ? min_r12 : dual_edge;
  if (min_edge == 0) {
    require(
        "regularity-sum-strictness",
        [&] {
          return "min(1/r1,1/r2,1-1/r)=0 requires 1/r1+1/r2=" + num(sum_r) + " < 1/r=" +
                 num(ix.rt);
        },
        sum_r < ix.rt, false);
  }

  switch (ix.kind) {
    case SpaceKind::BesselH:
      break;

    case SpaceKind::TriebelF: {
      auto fine_at_equal = [&](const char* tag, const Rational& si, const Rational& qi) {
        if (ix.st == si)
          require(
              tag, [&] { return "s=s_i: 1/q=" + num(ix.qt) + " <= 1/q_i=" + num(qi); },
              ix.qt <= qi, ix.qt == qi);
      };
      fine_at_equal("fine-at-equal-smoothness-f1", ix.s1, ix.q1);
      fine_at_equal("fine-at-equal-smoothness-f2", ix.s2, ix.q2);
      if (ix.s1 + ix.s2 == 0)
        require(
            "fine-duality-at-zero-sum",
            [&] { return "s1+s2=0: 1/q1+1/q2=" + num(ix.q1 + ix.q2) + " >= 1"; },
            ix.q1 + ix.q2 >= one, ix.q1 + ix.q2 == one);
      if (ix.s1 == 0 && ix.s2 == 0 && ix.st == 0) {
        const Rational half = rat(1, 2);
        require(
            "fine-at-all-zero",
            [&] {
              return "s1=s2=s=0: 1/q=" + num(ix.qt) + " <= 1/2 <= min(1/q1,1/q2)=" +
                     num(ix.q1 < ix.q2 ? ix.q1 : ix.q2);
            },
            ix.qt <= half && ix.q1 >= half && ix.q2 >= half,
            ix.qt == half || ix.q1 == half || ix.q2 == half);
      }
      break;
    }

    case SpaceKind::SlobodeckijW: {
      auto pin_at_equal = [&](const char* tag, const Rational& si, const Rational& pi) {
        if (ix.st == si && !is_integer(ix.st))
          require(
              tag, [&] { return "s=s_i not integer: 1/p=" + num(ix.pt) + " = 1/p_i=" + num(pi); },
              ix.pt == pi, false);
      };
      pin_at_equal("lebesgue-pin-at-equal-smoothness-f1", ix.s1, ix.p1);
      pin_at_equal("lebesgue-pin-at-equal-smoothness-f2", ix.s2, ix.p2);
      if (!ix.int_s1 && !ix.int_s2 && ix.s1 + ix.s2 == 0)
        require(
            "lebesgue-duality-at-zero-sum",
            [&] { return "fractional s1+s2=0: 1/p1+1/p2=" + num(ix.p1 + ix.p2) + " = 1"; },
            ix.p1 + ix.p2 == one, false);
      break;
    }

    case SpaceKind::BesovB: {
      auto fine_at_equal = [&](const char* tag, const Rational& si, const Rational& ri,
                               const Rational& qi) {
        if (ix.st == si || ix.rt == ri)
          require(
              tag,
              [&] { return "s=s_i or 1/r=1/r_i: 1/q=" + num(ix.qt) + " <= 1/q_i=" + num(qi); },
              ix.qt <= qi, ix.qt == qi);
      };
      fine_at_equal("fine-at-equal-smoothness-or-regularity-f1", ix.s1, ix.r1, ix.q1);
      fine_at_equal("fine-at-equal-smoothness-or-regularity-f2", ix.s2, ix.r2, ix.q2);
      if (ix.s1 + ix.s2 == 0 || sum_r == one)
        require(
            "fine-duality-at-zero-sum-or-barrier",
            [&] {
              return "s1+s2=0 or 1/r1+1/r2=1: 1/q1+1/q2=" + num(ix.q1 + ix.q2) + " >= 1";
            },
            ix.q1 + ix.q2 >= one, ix.q1 + ix.q2 == one);

      if (sum_r == ix.rt) {
        if (min_s <= 0) {
          require(
              "equality-nonpositive-min-duality",
              [&] {
                return "equality with min(s1,s2)<=0: 1/q1+1/q2=" + num(ix.q1 + ix.q2) + " >= 1";
              },
              ix.q1 + ix.q2 >= one, ix.q1 + ix.q2 == one);
          require(
              "equality-nonpositive-min-target-fine",
              [&] {
                return "equality with min(s1,s2)<=0: 1/q=" + num(ix.qt) + " <= 1/r=" + num(ix.rt);
              },
              ix.qt <= ix.rt, ix.qt == ix.rt);
        }
        const int cls_min = sign_class(min_s);
        const int cls_max = sign_class(max_s);
        auto sign_min_rule = [&](const char* tag, const Rational& si, const Rational& qi) {
          if (sign_class(si) == cls_min)
            require(
                tag,
                [&] {
                  return "equality, sign(s_i)=sign(min): 1/q=" + num(ix.qt) + " <= 1/q_i=" +
                         num(qi);
                },
                ix.qt <= qi, ix.qt == qi);
        };
        auto sign_max_rule = [&](const char* tag, const Rational& si, const Rational& ri,
                                 const Rational& qi) {
          if (sign_class(si) == cls_max)
            require(
                tag,
                [&] {
                  return "equality, sign(s_i)=sign(max): 1/r_i=" + num(ri) + " <= 1/q_i=" +
                         num(qi);
                },
                ri <= qi, ri == qi);
        };
        sign_min_rule("equality-fine-sign-min-f1", ix.s1, ix.q1);
        sign_min_rule("equality-fine-sign-min-f2", ix.s2, ix.q2);
        sign_max_rule("equality-fine-sign-max-f1", ix.s1, ix.r1, ix.q1);
        sign_max_rule("equality-fine-sign-max-f2", ix.s2, ix.r2, ix.q2);
        if (ix.st == 0) {
          require(
              "equality-fine-at-zero-target",
              [&] {
                return "equality with s=0: 1/q <= min(1/q1,1/q2) and 1/r_i <= 1/q_i";
              },
              ix.qt <= ix.q1 && ix.qt <= ix.q2 && ix.r1 <= ix.q1 && ix.r2 <= ix.q2,
              ix.qt == ix.q1 || ix.qt == ix.q2 || ix.r1 == ix.q1 || ix.r2 == ix.q2);
        }
      }

      if (ix.s1 == 0 && ix.s2 == 0 && ix.st == 0) {
        const Rational half = rat(1, 2);
        const Rational cap = half < ix.rt ? half : ix.rt;
        const Rational f1 = ix.r1 > half ? ix.r1 : half;
        const Rational f2 = ix.r2 > half ? ix.r2 : half;
        require(
            "fine-at-all-zero",
            [&] {
              return "s1=s2=s=0: 1/q=" + num(ix.qt) + " <= min(1/2,1/r) and max(1/2,1/r_i) <= 1/q_i";
            },
            ix.qt <= cap && f1 <= ix.q1 && f2 <= ix.q2,
            ix.qt == cap || f1 == ix.q1 || f2 == ix.q2);
      }
      break;
    }
  }
}

}  // namespace

MultQuery make_mult_query(SpaceSpec f1, SpaceSpec f2, SpaceSpec target) {
  if (f1.kind != f2.kind || f1.kind != target.kind)
    raise(Errc::KindMismatch, "multiplication requires one scale");
  if (f1.n != f2.n || f1.n != target.n)
    raise(Errc::DimensionMismatch, "multiplication requires one dimension");
  return MultQuery{std::move(f1), std::move(f2), std::move(target)};
}

Decision may_multiply(const MultQuery& query) {
  DecisionBuilder out;
  evaluate_clauses(indices_of(query), [&](const char* tag, auto&& citation, bool ok, bool eq) {
    out.require(tag, citation(), ok, eq);
  });
  return std::move(out).take();
}

MultVerdict may_multiply_verdict(const MultQuery& query) {
  VerdictSink sink;
  evaluate_clauses(indices_of(query), [&](const char*, auto&&, bool ok, bool eq) {
    sink.require(ok, eq);
  });
  return MultVerdict{sink.verdict(), sink.marginal()};
}

std::vector<SweepRow> mult_grid_sweep(SpaceKind kind, int n,
                                      const std::vector<Rational>& s_values,
                                      const std::vector<Rational>& inv_p_values,
                                      const std::vector<Rational>& inv_q_values) {
  const bool fine = kind_has_fine(kind);
  const std::vector<Rational> fine_values = fine ? inv_q_values : std::vector<Rational>{rat(1, 2)};

  std::vector<SweepRow> rows;
  for (const Rational& s1 : s_values)
    for (const Rational& s2 : s_values)
      for (const Rational& st : s_values)
        for (const Rational& p1 : inv_p_values)
          for (const Rational& p2 : inv_p_values)
            for (const Rational& pt : inv_p_values)
              for (const Rational& q1 : fine_values)
                for (const Rational& q2 : fine_values)
                  for (const Rational& qt : fine_values) {
                    SpaceSpec f1{kind, s1, p1, fine ? std::optional<Rational>(q1) : std::nullopt, n};
                    SpaceSpec f2{kind, s2, p2, fine ? std::optional<Rational>(q2) : std::nullopt, n};
                    SpaceSpec tg{kind, st, pt, fine ? std::optional<Rational>(qt) : std::nullopt, n};
                    MultVerdict v = may_multiply_verdict(MultQuery{f1, f2, tg});
                    rows.push_back(SweepRow{s1, s2, st, p1, p2, pt, q1, q2, qt,
                                            v.verdict, v.marginal});
                  }
  return rows;
}

}  // namespace fsc
