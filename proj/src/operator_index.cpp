#include "fsc/operator_index.hpp"

#include "fsc/errors.hpp"

namespace fsc {

namespace {

std::string num(const Rational& r) { return format_rational(r); }

struct Bounds {
  Rational sigma_lo;  // d - s
  Rational sigma_hi;  // s + d0
  Rational reg_lo;    // 1/p - (s+d0)/n
  Rational reg_hi;    // 1/p* - (d-s)/n
};

Bounds bounds_of(const OperatorClass& op) {
  const Rational& s = op.coeff.s;
  const Rational& inv_p = op.coeff.inv_p;
  const int n = op.coeff.n;
  Bounds b;
  b.sigma_lo = Rational(op.d) - s;
  b.sigma_hi = s + Rational(op.d0);
  b.reg_lo = inv_p - b.sigma_hi / n;
  b.reg_hi = conjugate_inv(inv_p) - b.sigma_lo / n;
  return b;
}

void check_triple_shape(const OperatorClass& op, const IndexTriple& x) {
  if (kind_has_fine(op.coeff.kind)) {
    if (!x.inv_b) raise(Errc::RangeError, "index triple requires a fine slot on this scale");
    if (!(*x.inv_b > 0 && *x.inv_b < 1))
      raise(Errc::RangeError, "fine exponent of the triple outside (1,oo)");
  } else if (x.inv_b) {
    raise(Errc::RangeError, "index triple carries a fine slot on a scale without one");
  }
  if (!(x.inv_a > 0 && x.inv_a < 1))
    raise(Errc::RangeError, "Lebesgue exponent of the triple outside (1,oo)");
}

}  // namespace

OperatorClass make_operator_class(int d, int d0, SpaceSpec coeff) {
  if (d < 0 || d0 < 0 || d0 > d)
    raise(Errc::RangeError, "operator orders must satisfy 0 <= d0 <= d");
  return OperatorClass{d, d0, std::move(coeff)};
}

std::pair<int, int> parse_operator_params(std::string_view text) {
  auto fail = [&](std::size_t pos, const std::string& what) -> void {
    throw Error(Errc::ParseError, what, pos);
  };
  if (text.substr(0, 4) != "L[d=") fail(0, "expected 'L[d='");
  std::size_t comma = text.find(",d0=", 4);
  if (comma == std::string_view::npos) fail(4, "expected ',d0='");
  std::size_t close = text.find(']', comma + 4);
  if (close == std::string_view::npos || close + 1 != text.size())
    fail(text.size(), "expected closing ']'");
  Rational d = parse_rational(text.substr(4, comma - 4), 4);
  Rational d0 = parse_rational(text.substr(comma + 4, close - comma - 4), comma + 4);
  if (!is_integer(d) || !is_integer(d0)) fail(4, "orders must be integers");
  return {d.convert_to<int>(), d0.convert_to<int>()};
}

std::string render_operator_params(const OperatorClass& op) {
  return "L[d=" + std::to_string(op.d) + ",d0=" + std::to_string(op.d0) + "]";
}

std::string render_triple(const IndexTriple& x) {
  std::string out = "sigma=" + num(x.sigma) + ",a=" + num(Rational(1) / x.inv_a);
  if (x.inv_b) out += ",b=" + num(Rational(1) / *x.inv_b);
  return out;
}

IndexTriple parse_triple(std::string_view text, bool expect_fine) {
  auto read_field = [&](std::string_view key, std::size_t& pos) -> Rational {
    if (text.substr(pos, key.size()) != key)
      throw Error(Errc::ParseError, "expected '" + std::string(key) + "'", pos);
    pos += key.size();
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    Rational value = parse_rational(text.substr(pos, end - pos), pos);
    pos = end < text.size() ? end + 1 : end;
    return value;
  };

  std::size_t pos = 0;
  Rational sigma = read_field("sigma=", pos);
  Rational a = read_field("a=", pos);
  if (!(a > 1)) throw Error(Errc::RangeError, "a outside (1,oo)");
  IndexTriple x{std::move(sigma), Rational(1) / a, std::nullopt};
  if (expect_fine) {
    Rational b = read_field("b=", pos);
    if (!(b > 1)) throw Error(Errc::RangeError, "b outside (1,oo)");
    x.inv_b = Rational(1) / b;
  }
  if (pos < text.size()) throw Error(Errc::ParseError, "trailing input", pos);
  return x;
}

bool coefficients_holder(const OperatorClass& op) {
  return op.coeff.s > Rational(op.coeff.n) * op.coeff.inv_p;
}

Decision mapping_ok(const OperatorClass& op, const IndexTriple& x) {
  check_triple_shape(op, x);
  const Bounds b = bounds_of(op);
  const Rational reg = x.inv_a - x.sigma / op.coeff.n;
  const SpaceKind kind = op.coeff.kind;
  const Rational inv_q = effective_inv_q(op.coeff);

  DecisionBuilder out;
  out.require("order-lower", num(b.sigma_lo) + " <= sigma=" + num(x.sigma),
              x.sigma >= b.sigma_lo, x.sigma == b.sigma_lo);
  out.require("order-upper", "sigma=" + num(x.sigma) + " <= " + num(b.sigma_hi),
              x.sigma <= b.sigma_hi, x.sigma == b.sigma_hi);
  out.require("regularity-lower", num(b.reg_lo) + " <= 1/a-sigma/n=" + num(reg),
              reg >= b.reg_lo, reg == b.reg_lo);
  out.require("regularity-upper", "1/a-sigma/n=" + num(reg) + " <= " + num(b.reg_hi),
              reg <= b.reg_hi, reg == b.reg_hi);

  switch (kind) {
    case SpaceKind::BesselH:
      break;
    case SpaceKind::TriebelF: {
      if (x.sigma == b.sigma_hi)
        out.require("fine-at-top-order",
                    "sigma=s+d0: 1/q=" + num(inv_q) + " >= 1/b=" + num(*x.inv_b),
                    inv_q >= *x.inv_b, inv_q == *x.inv_b);
      if (x.sigma == b.sigma_lo)
        out.require("fine-at-bottom-order",
                    "sigma=d-s: 1/b=" + num(*x.inv_b) + " >= 1/q*=" + num(conjugate_inv(inv_q)),
                    *x.inv_b >= conjugate_inv(inv_q), *x.inv_b == conjugate_inv(inv_q));
      break;
    }
    case SpaceKind::SlobodeckijW: {
      if (!is_integer(op.coeff.s)) {
        if (x.sigma == b.sigma_hi)
          out.require("lebesgue-pin-at-top-order",
                      "fractional s, sigma=s+d0: 1/a=" + num(x.inv_a) + " = 1/p=" +
                          num(op.coeff.inv_p),
                      x.inv_a == op.coeff.inv_p, false);
        if (x.sigma == b.sigma_lo)
          out.require("lebesgue-pin-at-bottom-order",
                      "fractional s, sigma=d-s: 1/a=" + num(x.inv_a) + " = 1/p*=" +
                          num(conjugate_inv(op.coeff.inv_p)),
                      x.inv_a == conjugate_inv(op.coeff.inv_p), false);
      }
      break;
    }
    case SpaceKind::BesovB: {
      if (x.sigma == b.sigma_hi || reg == b.reg_lo)
        out.require("fine-at-top-order-or-low-regularity",
                    "sigma=s+d0 or low regularity boundary: 1/b=" + num(*x.inv_b) +
                        " <= 1/q=" + num(inv_q),
                    *x.inv_b <= inv_q, *x.inv_b == inv_q);
      if (x.sigma == b.sigma_lo || reg == b.reg_hi)
        out.require("fine-at-bottom-order-or-high-regularity",
                    "sigma=d-s or high regularity boundary: 1/b=" + num(*x.inv_b) +
                        " >= 1/q*=" + num(conjugate_inv(inv_q)),
                    *x.inv_b >= conjugate_inv(inv_q), *x.inv_b == conjugate_inv(inv_q));
      break;
    }
  }
  return std::move(out).take();
}

IndexSetReport index_set_nonempty(const OperatorClass& op) {
  const Rational& s = op.coeff.s;
  const Rational& inv_p = op.coeff.inv_p;
  const int n = op.coeff.n;
  const Rational gap = Rational(op.d - op.d0) / 2;
  const Rational half = rat(1, 2);
  const Rational reg = inv_p - s / n;
  const Rational reg_cap = half - gap / n;
  const SpaceKind kind = op.coeff.kind;

  DecisionBuilder out;
  out.require("order-width", "s=" + num(s) + " >= (d-d0)/2=" + num(gap), s >= gap, s == gap);
  out.require("regularity-width",
              "1/p-s/n=" + num(reg) + " <= 1/2-((d-d0)/2)/n=" + num(reg_cap), reg <= reg_cap,
              reg == reg_cap);

  const Rational inv_q = effective_inv_q(op.coeff);
  if (kind == SpaceKind::TriebelF && s == gap)
    out.require("marginal-fine", "s=(d-d0)/2: q <= 2, i.e. 1/q=" + num(inv_q) + " >= 1/2",
                inv_q >= half, inv_q == half);
  if (kind == SpaceKind::SlobodeckijW && !is_integer(s) && s == gap)
    out.require("marginal-lebesgue-pin", "fractional s=(d-d0)/2: p = 2",
                inv_p == half, false);
  if (kind == SpaceKind::BesovB) {
    if (s == gap)
      out.require("marginal-fine-order", "s=(d-d0)/2: q <= 2", inv_q >= half, inv_q == half);
    if (reg == reg_cap)
      out.require("marginal-fine-regularity", "regularity boundary: q <= 2", inv_q >= half,
                  inv_q == half);
  }

  IndexSetReport report{std::move(out).take(), {}};
  if (report.decision.verdict) {
    const bool fine = kind_has_fine(kind);
    auto triple = [&](Rational sigma, Rational inv_a, Rational inv_b) {
      return IndexTriple{std::move(sigma), std::move(inv_a),
                         fine ? std::optional<Rational>(std::move(inv_b)) : std::nullopt};
    };
    report.canonical.push_back(triple(s + op.d0, inv_p, inv_q));
    report.canonical.push_back(
        triple(Rational(op.d) - s, conjugate_inv(inv_p), conjugate_inv(inv_q)));
    report.canonical.push_back(triple(Rational(op.d + op.d0) / 2, half, half));
  }
  return report;
}

Decision commutator_ok(const OperatorClass& op, const IndexTriple& x) {
  if (!coefficients_holder(op))
    raise(Errc::CoefficientsNotHolder,
          "commutator estimate requires s > n/p for the coefficient space");
  check_triple_shape(op, x);

  IndexTriple shifted{x.sigma + 1, x.inv_a, x.inv_b};
  const bool shifted_ok = mapping_ok(op, shifted).verdict;

  DecisionBuilder out;
  if (shifted_ok) {
    out.add("shifted-index-in-class",
            "(" + render_triple(shifted) + ") lies in the compatible set",
            ClauseStatus::Satisfied);
    out.inapplicable("zero-lowest-order-relaxation", "not needed");
    return std::move(out).take();
  }
  if (op.d0 == 0) {
    OperatorClass base{op.d, 0, op.coeff};
    if (mapping_ok(base, x).verdict) {
      out.add("zero-lowest-order-relaxation",
              "d0=0 and (" + render_triple(x) + ") lies in the compatible set",
              ClauseStatus::Satisfied);
      out.inapplicable("shifted-index-in-class", "shifted triple leaves the set");
      return std::move(out).take();
    }
    out.add("shifted-index-in-class", "shifted triple leaves the compatible set",
            ClauseStatus::Violated);
    out.add("zero-lowest-order-relaxation", "triple itself leaves the compatible set",
            ClauseStatus::Violated);
    return std::move(out).take();
  }
  out.add("shifted-index-in-class", "shifted triple leaves the compatible set",
          ClauseStatus::Violated);
  out.inapplicable("zero-lowest-order-relaxation", "requires d0=0");
  return std::move(out).take();
}

RegionPolygon region_polygon(const OperatorClass& op) {
  if (!index_set_nonempty(op).decision.verdict)
    raise(Errc::EmptyRegion, "compatible index set is empty");

  const Bounds b = bounds_of(op);
  const int n = op.coeff.n;
  auto lowline = [&](const Rational& sigma) { return b.reg_lo + sigma / n; };
  auto highline = [&](const Rational& sigma) { return b.reg_hi + sigma / n; };

  const SpaceKind kind = op.coeff.kind;
  const bool frac_w = kind == SpaceKind::SlobodeckijW && !is_integer(op.coeff.s);
  std::string top_fine, bottom_fine, low_fine, high_fine;
  if (kind == SpaceKind::TriebelF) {
    top_fine = "1/b <= 1/q";
    bottom_fine = "1/b >= 1/q*";
  } else if (kind == SpaceKind::BesovB) {
    top_fine = "1/b <= 1/q";
    bottom_fine = "1/b >= 1/q*";
    low_fine = "1/b <= 1/q";
    high_fine = "1/b >= 1/q*";
  } else if (frac_w) {
    top_fine = "a = p";
    bottom_fine = "a = p*";
  }

  RegionPolygon poly;
  const bool sigma_degenerate = b.sigma_lo == b.sigma_hi;
  const bool reg_degenerate = b.reg_lo == b.reg_hi;

  if (sigma_degenerate && reg_degenerate) {
    poly.vertices = {{b.sigma_lo, lowline(b.sigma_lo)}};
    return poly;
  }
  if (sigma_degenerate) {
    poly.vertices = {{b.sigma_lo, lowline(b.sigma_lo)}, {b.sigma_lo, highline(b.sigma_lo)}};
    poly.edges = {{"order-segment", top_fine.empty() ? bottom_fine : top_fine}};
    return poly;
  }
  if (reg_degenerate) {
    poly.vertices = {{b.sigma_lo, lowline(b.sigma_lo)}, {b.sigma_hi, lowline(b.sigma_hi)}};
    poly.edges = {{"regularity-segment", low_fine}};
    return poly;
  }

  poly.vertices = {
      {b.sigma_lo, lowline(b.sigma_lo)},
      {b.sigma_hi, lowline(b.sigma_hi)},  // = (s+d0, 1/p)
      {b.sigma_hi, highline(b.sigma_hi)},
      {b.sigma_lo, highline(b.sigma_lo)},  // = (d-s, 1/p*)
  };
  poly.edges = {
      {"low-regularity", low_fine},
      {"top-order", top_fine},
      {"high-regularity", high_fine},
      {"bottom-order", bottom_fine},
  };
  return poly;
}

}  // namespace fsc
