#include "tquery/criteria.hpp"

#include <cassert>
#include <utility>

namespace tquery {

Criterion Criterion::truth() { return Criterion{}; }

Criterion Criterion::exists(Path p) {
  Criterion c;
  c.kind = CriterionKind::Exists;
  c.path = std::move(p);
  return c;
}

Criterion Criterion::path_equals(Path p, TreeArray a) {
  assert(!a.is_null() && "comparison arrays are always materialized");
  Criterion c;
  c.kind = CriterionKind::PathEqArray;
  c.path = std::move(p);
  c.array = std::move(a);
  return c;
}

Criterion Criterion::paths_equal(Path left, Path right) {
  Criterion c;
  c.kind = CriterionKind::PathEqPath;
  c.path = std::move(left);
  c.other_path = std::move(right);
  return c;
}

Criterion Criterion::negation(Criterion inner) {
  Criterion c;
  c.kind = CriterionKind::Not;
  c.operands.push_back(std::move(inner));
  return c;
}

Criterion Criterion::conjunction(Criterion left, Criterion right) {
  Criterion c;
  c.kind = CriterionKind::And;
  c.operands.push_back(std::move(left));
  c.operands.push_back(std::move(right));
  return c;
}

Criterion Criterion::disjunction(Criterion left, Criterion right) {
  Criterion c;
  c.kind = CriterionKind::Or;
  c.operands.push_back(std::move(left));
  c.operands.push_back(std::move(right));
  return c;
}

bool satisfies(const Tree& t, const Criterion& c) {
  switch (c.kind) {
    case CriterionKind::True:
      return true;
    case CriterionKind::Exists:
      return !apply_path(t, c.path).is_null();
    case CriterionKind::PathEqArray:
      return apply_path(t, c.path) == c.array;
    case CriterionKind::PathEqPath:
      // Equal applications, including the case where both paths miss.
      return apply_path(t, c.path) == apply_path(t, c.other_path);
    case CriterionKind::Not:
      return !satisfies(t, c.operands[0]);
    case CriterionKind::And:
      return satisfies(t, c.operands[0]) && satisfies(t, c.operands[1]);
    case CriterionKind::Or:
      return satisfies(t, c.operands[0]) || satisfies(t, c.operands[1]);
  }
  return false;
}

}  // namespace tquery
