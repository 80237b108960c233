#include "fsc/decision.hpp"

namespace fsc {

const char* clause_status_name(ClauseStatus status) {
  switch (status) {
    case ClauseStatus::Satisfied: return "satisfied";
    case ClauseStatus::Violated: return "violated";
    case ClauseStatus::Inapplicable: return "inapplicable";
    case ClauseStatus::Marginal: return "marginal";
  }
  return "?";
}

}  // namespace fsc
