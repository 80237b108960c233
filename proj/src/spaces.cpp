#include "fsc/spaces.hpp"

#include "fsc/errors.hpp"

namespace fsc {

char kind_letter(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::BesselH: return 'H';
    case SpaceKind::SlobodeckijW: return 'W';
    case SpaceKind::TriebelF: return 'F';
    case SpaceKind::BesovB: return 'B';
  }
  return '?';
}

const char* kind_name(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::BesselH: return "BesselH";
    case SpaceKind::SlobodeckijW: return "SlobodeckijW";
    case SpaceKind::TriebelF: return "TriebelF";
    case SpaceKind::BesovB: return "BesovB";
  }
  return "?";
}

const char* domain_name(DomainKind dom) {
  switch (dom) {
    case DomainKind::WholeSpace: return "WholeSpace";
    case DomainKind::BoundedOpen: return "BoundedOpen";
    case DomainKind::BoundedSmooth: return "BoundedSmooth";
  }
  return "?";
}

bool kind_has_fine(SpaceKind kind) {
  return kind == SpaceKind::TriebelF || kind == SpaceKind::BesovB;
}

SpaceSpec make_space(SpaceKind kind, Rational s, Rational inv_p,
                     std::optional<Rational> inv_q, int n) {
  if (n < 1) raise(Errc::RangeError, "dimension must be >= 1");
  if (!(inv_p > 0 && inv_p < 1))
    raise(Errc::RangeError, "Lebesgue exponent must lie in (1,oo)");
  if (kind_has_fine(kind)) {
    if (!inv_q) raise(Errc::RangeError, "fine exponent required for F and B scales");
    if (!(*inv_q > 0 && *inv_q < 1))
      raise(Errc::RangeError, "fine exponent must lie in (1,oo)");
  } else if (inv_q) {
    raise(Errc::RangeError, "fine exponent not allowed for H and W scales");
  }
  return SpaceSpec{kind, std::move(s), std::move(inv_p), std::move(inv_q), n};
}

Rational effective_inv_q(const SpaceSpec& sp) {
  switch (sp.kind) {
    case SpaceKind::BesselH: return rat(1, 2);
    case SpaceKind::SlobodeckijW:
      return is_integer(sp.s) ? rat(1, 2) : sp.inv_p;
    case SpaceKind::TriebelF:
    case SpaceKind::BesovB: return *sp.inv_q;
  }
  return rat(1, 2);
}

Rational lebesgue_regularity(const SpaceSpec& sp) {
  return sp.inv_p - sp.s / sp.n;
}

SpaceSpec dual_space(const SpaceSpec& sp) {
  if (sp.kind == SpaceKind::SlobodeckijW && !is_integer(sp.s))
    raise(Errc::DualUndefined,
          "dual of a fractional-order W space leaves the W scale");
  std::optional<Rational> dq;
  if (sp.inv_q) dq = conjugate_inv(*sp.inv_q);
  return SpaceSpec{sp.kind, -sp.s, conjugate_inv(sp.inv_p), dq, sp.n};
}

SpaceSpec interpolate(const SpaceSpec& a, const SpaceSpec& b, const Rational& theta) {
  if (a.kind != b.kind) raise(Errc::KindMismatch, "interpolation requires equal scales");
  if (a.n != b.n) raise(Errc::DimensionMismatch, "interpolation requires equal dimensions");
  if (!(theta > 0 && theta < 1))
    raise(Errc::ThetaOutOfRange, "interpolation weight must lie strictly in (0,1)");
  const Rational co = Rational(1) - theta;
  std::optional<Rational> q;
  if (a.inv_q) q = co * (*a.inv_q) + theta * (*b.inv_q);
  return SpaceSpec{a.kind, co * a.s + theta * b.s, co * a.inv_p + theta * b.inv_p, q, a.n};
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= text_.size(); }

  void expect(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token)
      throw Error(Errc::ParseError, "expected '" + std::string(token) + "'", pos_);
    pos_ += token.size();
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  // Reads up to (excluding) any of the stop characters.
  std::string_view read_until(std::string_view stops) {
    std::size_t start = pos_;
    while (pos_ < text_.size() && stops.find(text_[pos_]) == std::string_view::npos) ++pos_;
    return text_.substr(start, pos_ - start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Rational parse_exponent(std::string_view token, std::size_t offset, const char* name) {
  Rational value = parse_rational(token, offset);
  if (!(value > 1))
    throw Error(Errc::RangeError,
                std::string(name) + "=" + format_rational(value) + " outside (1,oo)", offset);
  return Rational(1) / value;
}

}  // namespace

SpaceSpec parse_space(std::string_view text) {
  Cursor cur(text);
  SpaceKind kind;
  if (cur.peek('H')) kind = SpaceKind::BesselH;
  else if (cur.peek('W')) kind = SpaceKind::SlobodeckijW;
  else if (cur.peek('F')) kind = SpaceKind::TriebelF;
  else if (cur.peek('B')) kind = SpaceKind::BesovB;
  else throw Error(Errc::ParseError, "expected scale letter H, W, F or B", cur.pos());
  cur.expect(text.substr(cur.pos(), 1));

  cur.expect("[");
  cur.expect("s=");
  std::size_t off = cur.pos();
  Rational s = parse_rational(cur.read_until(",;]"), off);

  cur.expect(",p=");
  off = cur.pos();
  Rational inv_p = parse_exponent(cur.read_until(",;]"), off, "p");

  std::optional<Rational> inv_q;
  if (cur.peek(',')) {
    cur.expect(",q=");
    off = cur.pos();
    inv_q = parse_exponent(cur.read_until(",;]"), off, "q");
  }

  cur.expect(";n=");
  off = cur.pos();
  Rational n_rat = parse_rational(cur.read_until("]"), off);
  if (!is_integer(n_rat) || n_rat < 1)
    throw Error(Errc::ParseError, "dimension must be a positive integer", off);
  cur.expect("]");
  if (!cur.done()) throw Error(Errc::ParseError, "trailing input", cur.pos());

  if (kind_has_fine(kind) && !inv_q)
    throw Error(Errc::ParseError, "scale requires a fine exponent q", cur.pos());
  if (!kind_has_fine(kind) && inv_q)
    throw Error(Errc::ParseError, "scale does not take a fine exponent q", cur.pos());

  return make_space(kind, std::move(s), std::move(inv_p), std::move(inv_q),
                    n_rat.convert_to<int>());
}

std::string render_space(const SpaceSpec& sp) {
  std::string out(1, kind_letter(sp.kind));
  out += "[s=";
  out += format_rational(sp.s);
  out += ",p=";
  out += format_rational(Rational(1) / sp.inv_p);
  if (sp.inv_q) {
    out += ",q=";
    out += format_rational(Rational(1) / *sp.inv_q);
  }
  out += ";n=";
  out += std::to_string(sp.n);
  out += ']';
  return out;
}

}  // namespace fsc
