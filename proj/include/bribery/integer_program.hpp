#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bribery {

enum class Sense { kLessEqual, kGreaterEqual };

struct Term {
  int variable = 0;
  std::int64_t coefficient = 0;
};

struct LinearConstraint {
  std::vector<Term> terms;  // one term per variable, sorted by variable
  Sense sense = Sense::kLessEqual;
  std::int64_t rhs = 0;
  std::string label;
};

struct IntegerVariable {
  std::string name;
  std::int64_t upper = 0;  // domain is 0..upper
};

// Pure feasibility program over bounded non-negative integer variables.
class IntegerProgram {
 public:
  int add_variable(std::string name, std::int64_t upper);
  // Terms naming the same variable are merged; zero coefficients dropped.
  void add_constraint(std::vector<Term> terms, Sense sense, std::int64_t rhs, std::string label = {});

  int variable_count() const { return static_cast<int>(variables_.size()); }
  const std::vector<IntegerVariable>& variables() const { return variables_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }

  bool satisfied_by(std::span<const std::int64_t> values) const;

 private:
  std::vector<IntegerVariable> variables_;
  std::vector<LinearConstraint> constraints_;
};

struct IpResult {
  std::optional<std::vector<std::int64_t>> solution;
  std::uint64_t nodes = 0;
};

// Depth-first search over the variables in declaration order, values in
// ascending order. Each constraint restricts the current variable's range
// given the partial sum and the best case over the variables still open.
// Returns the first feasible point in that order. Throws CapExceeded("ip-node")
// when more than node_cap nodes would be expanded, so a "no" is always exact.
IpResult solve_ip_feasibility(const IntegerProgram& program, std::uint64_t node_cap);

}  // namespace bribery
