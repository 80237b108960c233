#ifndef FSC_DECISION_HPP
#define FSC_DECISION_HPP

#include <string>
#include <utility>
#include <vector>

#include "fsc/rational.hpp"

namespace fsc {

enum class ClauseStatus { Satisfied, Violated, Inapplicable, Marginal };

const char* clause_status_name(ClauseStatus status);

struct Clause {
  std::string tag;       // stable machine-readable rule id
  std::string citation;  // the rule spelled out, with the evaluated numbers
  ClauseStatus status = ClauseStatus::Inapplicable;
};

/// Boolean verdict plus the evaluated rule list.  The verdict is true exactly
/// when no clause is violated; Marginal marks a rule satisfied with equality.
struct Decision {
  bool verdict = true;
  std::vector<Clause> clauses;

  bool any_marginal() const {
    for (const auto& c : clauses)
      if (c.status == ClauseStatus::Marginal) return true;
    return false;
  }
};

/// Builder used by all clause engines.  Keeps the verdict consistent with
/// the clause list by construction.
class DecisionBuilder {
 public:
  void add(std::string tag, std::string citation, ClauseStatus status) {
    if (status == ClauseStatus::Violated) verdict_ = false;
    clauses_.push_back({std::move(tag), std::move(citation), status});
  }

  /// Conjunctive rule: `ok` decides satisfied/violated, `equality` upgrades a
  /// satisfied rule to Marginal.
  void require(std::string tag, std::string citation, bool ok, bool equality = false) {
    add(std::move(tag), std::move(citation),
        !ok ? ClauseStatus::Violated
            : (equality ? ClauseStatus::Marginal : ClauseStatus::Satisfied));
  }

  void inapplicable(std::string tag, std::string citation) {
    add(std::move(tag), std::move(citation), ClauseStatus::Inapplicable);
  }

  bool verdict() const { return verdict_; }

  Decision take() && { return Decision{verdict_, std::move(clauses_)}; }

 private:
  bool verdict_ = true;
  std::vector<Clause> clauses_;
};

/// Verdict-only sink for grid sweeps; shares the clause-evaluation code with
/// DecisionBuilder without paying for string assembly.
class VerdictSink {
 public:
  void require(bool ok, bool equality = false) {
    if (!ok) verdict_ = false;
    if (ok && equality) marginal_ = true;
  }
  bool verdict() const { return verdict_; }
  bool marginal() const { return marginal_; }

 private:
  bool verdict_ = true;
  bool marginal_ = false;
};

}  // namespace fsc

#endif
