#include "fsc/embedding.hpp"

#include "fsc/errors.hpp"

namespace fsc {

namespace {

struct Side {
  Rational s;
  Rational inv_p;
  Rational inv_q;  // effective fine exponent (1/2 for H, s-dependent for W)
  Rational reg;    // 1/p - s/n
};

Side side_of(const SpaceSpec& sp) {
  return Side{sp.s, sp.inv_p, effective_inv_q(sp), lebesgue_regularity(sp)};
}

std::string cmp_text(const char* lhs, const Rational& a, const char* op, const Rational& b) {
  return std::string(lhs) + "=" + format_rational(a) + " " + op + " " + format_rational(b);
}

}  // namespace

Decision embeds(const SpaceSpec& src, const SpaceSpec& dst, DomainKind dom) {
  if (src.kind != dst.kind) raise(Errc::KindMismatch, "embedding requires equal scales");
  if (src.n != dst.n) raise(Errc::DimensionMismatch, "embedding requires equal dimensions");

  DecisionBuilder out;
  if (src == dst) {
    out.add("identity", "identical spaces", ClauseStatus::Satisfied);
    return std::move(out).take();
  }

  const Side a = side_of(src);
  const Side b = side_of(dst);
  const bool bounded = dom != DomainKind::WholeSpace;
  const bool besov = src.kind == SpaceKind::BesovB;
  const bool has_fine = src.kind != SpaceKind::BesselH;
  // For the F scale a strict loss of derivatives ignores the fine exponent;
  // for B the same is true except along equal Lebesgue regularity.
  const bool fine_free_drop = src.kind != SpaceKind::BesovB;
  const bool fine_mono = !has_fine || a.inv_q >= b.inv_q;

  if (a.s > b.s) {
    if (bounded) {
      if (a.reg < b.reg || (!besov && a.reg == b.reg)) {
        out.add(a.reg == b.reg ? "equal-regularity-sobolev" : "regularity-sobolev-bounded",
                cmp_text("s1", a.s, ">", b.s) + " and " +
                    cmp_text("1/p1-s1/n", a.reg, "<=", b.reg),
                a.reg == b.reg ? ClauseStatus::Marginal : ClauseStatus::Satisfied);
        return std::move(out).take();
      }
      if (besov && a.reg == b.reg && fine_mono) {
        out.add("equal-regularity-sobolev",
                cmp_text("s1", a.s, ">", b.s) + " at equal regularity " + format_rational(a.reg),
                ClauseStatus::Marginal);
        out.add("fine-monotone", cmp_text("1/q1", a.inv_q, ">=", b.inv_q),
                a.inv_q == b.inv_q ? ClauseStatus::Marginal : ClauseStatus::Satisfied);
        return std::move(out).take();
      }
    } else {
      if (a.inv_p == b.inv_p) {
        // Same Lebesgue exponent: a strict derivative loss embeds on R^n for
        // every scale with unrestricted fine exponents.
        out.add("derivative-loss-same-lebesgue",
                cmp_text("s1", a.s, ">", b.s) + " at p1=p2",
                ClauseStatus::Satisfied);
        return std::move(out).take();
      }
      if (a.reg == b.reg && (fine_free_drop ? true : fine_mono)) {
        out.add("equal-regularity-sobolev",
                cmp_text("s1", a.s, ">", b.s) + " at equal regularity " + format_rational(a.reg),
                ClauseStatus::Satisfied);
        if (besov)
          out.add("fine-monotone", cmp_text("1/q1", a.inv_q, ">=", b.inv_q),
                  a.inv_q == b.inv_q ? ClauseStatus::Marginal : ClauseStatus::Satisfied);
        return std::move(out).take();
      }
    }
  } else if (a.s == b.s) {
    const bool leb_ok = bounded ? a.inv_p <= b.inv_p : a.inv_p == b.inv_p;
    if (leb_ok && fine_mono) {
      if (a.inv_p != b.inv_p)
        out.add("lebesgue-monotone-bounded", cmp_text("1/p1", a.inv_p, "<=", b.inv_p),
                ClauseStatus::Satisfied);
      if (has_fine)
        out.add("fine-monotone", cmp_text("1/q1", a.inv_q, ">=", b.inv_q),
                a.inv_q == b.inv_q ? ClauseStatus::Marginal : ClauseStatus::Satisfied);
      return std::move(out).take();
    }
  }

  out.add("no-clause", "no embedding rule applies to this pair on " +
                           std::string(domain_name(dom)),
          ClauseStatus::Violated);
  return std::move(out).take();
}

HolderEmbedding holder_embedding(const SpaceSpec& sp) {
  const Rational alpha = sp.s - Rational(sp.n) * sp.inv_p;
  if (alpha <= 0) return {};
  if (alpha == 1) return {Rational(1), true};
  if (alpha > 1) return {Rational(1), false};
  return {alpha, false};
}

}  // namespace fsc
