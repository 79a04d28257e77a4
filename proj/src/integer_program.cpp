#include "bribery/integer_program.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "bribery/common.hpp"

namespace bribery {
namespace {

// Keeps every partial sum well inside int64.
constexpr std::int64_t kMagnitudeLimit = std::int64_t{1} << 60;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  const std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// All constraints rewritten as sum(a * x) <= b.
struct Row {
  std::vector<Term> terms;
  std::vector<std::int64_t> tail_min;  // tail_min[t]: least value of terms t.. over the box
  std::int64_t bound = 0;
};

struct Incidence {
  int row = 0;
  int position = 0;
  std::int64_t coefficient = 0;
};

class Search {
 public:
  Search(const IntegerProgram& program, std::uint64_t node_cap) : node_cap_(node_cap) {
    const auto& vars = program.variables();
    upper_.reserve(vars.size());
    for (const auto& v : vars) upper_.push_back(v.upper);
    incidence_.resize(vars.size());

    for (const auto& c : program.constraints()) {
      Row row;
      const std::int64_t sign = c.sense == Sense::kLessEqual ? 1 : -1;
      row.bound = sign * c.rhs;
      for (const auto& t : c.terms) row.terms.push_back({t.variable, sign * t.coefficient});
      row.tail_min.assign(row.terms.size() + 1, 0);
      for (std::size_t t = row.terms.size(); t-- > 0;) {
        const auto& term = row.terms[t];
        row.tail_min[t] = row.tail_min[t + 1] + std::min<std::int64_t>(0, term.coefficient * upper_[static_cast<std::size_t>(term.variable)]);
      }
      const int index = static_cast<int>(rows_.size());
      for (std::size_t t = 0; t < row.terms.size(); ++t) {
        incidence_[static_cast<std::size_t>(row.terms[t].variable)].push_back(
            {index, static_cast<int>(t), row.terms[t].coefficient});
      }
      rows_.push_back(std::move(row));
    }
    partial_.assign(rows_.size(), 0);
    values_.assign(vars.size(), 0);
  }

  IpResult run() {
    IpResult result;
    bool root_ok = true;
    for (const auto& row : rows_) root_ok = root_ok && row.tail_min[0] <= row.bound;
    if (root_ok && descend(0)) result.solution = values_;
    result.nodes = nodes_;
    return result;
  }

 private:
  bool descend(std::size_t var) {
    if (++nodes_ > node_cap_) throw CapExceeded("ip-node", nodes_, node_cap_);
    if (var == values_.size()) return true;

    std::int64_t lo = 0;
    std::int64_t hi = upper_[var];
    for (const auto& inc : incidence_[var]) {
      const Row& row = rows_[static_cast<std::size_t>(inc.row)];
      // partial + a*x + tail_min[position + 1] <= bound
      const std::int64_t slack =
          row.bound - partial_[static_cast<std::size_t>(inc.row)] - row.tail_min[static_cast<std::size_t>(inc.position) + 1];
      if (inc.coefficient > 0) {
        hi = std::min(hi, floor_div(slack, inc.coefficient));
      } else {
        lo = std::max(lo, ceil_div(-slack, -inc.coefficient));
      }
    }
    for (std::int64_t x = lo; x <= hi; ++x) {
      for (const auto& inc : incidence_[var]) partial_[static_cast<std::size_t>(inc.row)] += inc.coefficient * x;
      values_[var] = x;
      const bool found = descend(var + 1);
      for (const auto& inc : incidence_[var]) partial_[static_cast<std::size_t>(inc.row)] -= inc.coefficient * x;
      if (found) return true;
    }
    values_[var] = 0;
    return false;
  }

  std::uint64_t node_cap_;
  std::uint64_t nodes_ = 0;
  std::vector<std::int64_t> upper_;
  std::vector<Row> rows_;
  std::vector<std::vector<Incidence>> incidence_;
  std::vector<std::int64_t> partial_;
  std::vector<std::int64_t> values_;
};

}  // namespace

int IntegerProgram::add_variable(std::string name, std::int64_t upper) {
  if (upper < 0 || upper > kMagnitudeLimit) throw std::invalid_argument("variable bound out of range: " + name);
  variables_.push_back({std::move(name), upper});
  return static_cast<int>(variables_.size()) - 1;
}

void IntegerProgram::add_constraint(std::vector<Term> terms, Sense sense, std::int64_t rhs, std::string label) {
  std::map<int, std::int64_t> merged;
  for (const auto& t : terms) {
    if (t.variable < 0 || t.variable >= variable_count()) throw std::invalid_argument("unknown variable in constraint");
    merged[t.variable] += t.coefficient;
  }
  if (rhs > kMagnitudeLimit || rhs < -kMagnitudeLimit) throw std::invalid_argument("constraint bound out of range");
  LinearConstraint c;
  c.sense = sense;
  c.rhs = rhs;
  c.label = std::move(label);
  __int128 magnitude = rhs < 0 ? -static_cast<__int128>(rhs) : rhs;
  for (const auto& [var, coef] : merged) {
    if (coef == 0) continue;
    const __int128 a = coef < 0 ? -static_cast<__int128>(coef) : coef;
    magnitude += a * variables_[static_cast<std::size_t>(var)].upper;
    if (magnitude > kMagnitudeLimit) throw std::overflow_error("constraint magnitude too large");
    c.terms.push_back({var, coef});
  }
  constraints_.push_back(std::move(c));
}

bool IntegerProgram::satisfied_by(std::span<const std::int64_t> values) const {
  if (values.size() != variables_.size()) return false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] > variables_[i].upper) return false;
  }
  for (const auto& c : constraints_) {
    __int128 sum = 0;
    for (const auto& t : c.terms) sum += static_cast<__int128>(t.coefficient) * values[static_cast<std::size_t>(t.variable)];
    if (c.sense == Sense::kLessEqual ? sum > c.rhs : sum < c.rhs) return false;
  }
  return true;
}

IpResult solve_ip_feasibility(const IntegerProgram& program, std::uint64_t node_cap) {
  return Search(program, node_cap).run();
}

}  // namespace bribery
