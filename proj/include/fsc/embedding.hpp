#ifndef FSC_EMBEDDING_HPP
#define FSC_EMBEDDING_HPP

#include <optional>

#include "fsc/decision.hpp"
#include "fsc/spaces.hpp"

namespace fsc {

/// Decides src -> dst continuous embedding within one scale.  On the whole
/// space only the stated one-step rules apply; on bounded domains the engine
/// closes the rules under composition, which amounts to:
///   s strictly drops and the Lebesgue regularity 1/p - s/n does not drop
///   (strictly rises for the B scale unless the fine exponent is monotone),
///   or s is fixed and both 1/p and the fine exponent move monotonically.
/// Rules valid on BoundedOpen apply verbatim on BoundedSmooth.
Decision embeds(const SpaceSpec& src, const SpaceSpec& dst, DomainKind dom);

struct HolderEmbedding {
  std::optional<Rational> alpha;  // exponent of the target C^{0,alpha}
  bool marginal = false;          // alpha = 1 exactly; any exponent < 1 holds
};

/// alpha = s - n/p, clamped to 1; empty when alpha <= 0.
HolderEmbedding holder_embedding(const SpaceSpec& sp);

}  // namespace fsc

#endif
