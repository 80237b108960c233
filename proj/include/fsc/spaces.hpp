#ifndef FSC_SPACES_HPP
#define FSC_SPACES_HPP

#include <optional>
#include <string>
#include <string_view>

#include "fsc/rational.hpp"

namespace fsc {

enum class SpaceKind { BesselH, SlobodeckijW, TriebelF, BesovB };

enum class DomainKind { WholeSpace, BoundedOpen, BoundedSmooth };

char kind_letter(SpaceKind kind);
const char* kind_name(SpaceKind kind);
const char* domain_name(DomainKind dom);

/// One function space on R^n: scale kind, smoothness s, reciprocal Lebesgue
/// exponent 1/p and (for the F and B scales) reciprocal fine exponent 1/q.
/// Reciprocals are stored because every index condition is affine in them.
struct SpaceSpec {
  SpaceKind kind = SpaceKind::BesselH;
  Rational s;
  Rational inv_p;                  // in (0,1)
  std::optional<Rational> inv_q;   // in (0,1); present iff kind is F or B
  int n = 1;

  bool operator==(const SpaceSpec&) const = default;
};

/// Validates ranges and fine-parameter presence; throws RangeError.
SpaceSpec make_space(SpaceKind kind, Rational s, Rational inv_p,
                     std::optional<Rational> inv_q, int n);

bool kind_has_fine(SpaceKind kind);

/// The fine exponent the scale behaves as: H -> 1/2; W -> 1/2 for integer s
/// and 1/p otherwise; F/B -> the stored value.
Rational effective_inv_q(const SpaceSpec& sp);

/// 1/r = 1/p - s/n.
Rational lebesgue_regularity(const SpaceSpec& sp);

/// s -> -s, 1/p -> 1-1/p, 1/q -> 1-1/q.  The W scale is handled through its
/// integer-order identification; fractional W has no dual on the same scale
/// and raises DualUndefined.
SpaceSpec dual_space(const SpaceSpec& sp);

/// Componentwise affine combination with weight theta in (0,1).
SpaceSpec interpolate(const SpaceSpec& a, const SpaceSpec& b, const Rational& theta);

/// Grammar: KIND '[' 's=' RAT ',p=' RAT (',q=' RAT)? ';n=' INT ']' with
/// KIND in {H,W,F,B}.  p and q are given as exponents and stored as
/// reciprocals; p,q outside (1,oo) raise RangeError.
SpaceSpec parse_space(std::string_view text);

/// Canonical formatter; parse_space(render_space(sp)) == sp.
std::string render_space(const SpaceSpec& sp);

}  // namespace fsc

#endif
