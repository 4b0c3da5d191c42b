#pragma once

#include <vector>

#include "tquery/path.hpp"
#include "tquery/tree.hpp"

namespace tquery {

enum class CriterionKind { True, Exists, PathEqArray, PathEqPath, Not, And, Or };

/// Boolean predicate over trees:
///   true | p == a | p1 == p2 | exists p | !c | c && c | c || c
/// The array in a path/array comparison is always materialized.
struct Criterion {
  CriterionKind kind = CriterionKind::True;
  Path path;                        // Exists, PathEqArray, PathEqPath (left)
  Path other_path;                  // PathEqPath (right)
  TreeArray array;                  // PathEqArray
  std::vector<Criterion> operands;  // Not: 1, And/Or: 2

  static Criterion truth();
  static Criterion exists(Path p);
  static Criterion path_equals(Path p, TreeArray a);
  static Criterion paths_equal(Path left, Path right);
  static Criterion negation(Criterion c);
  static Criterion conjunction(Criterion left, Criterion right);
  static Criterion disjunction(Criterion left, Criterion right);

  bool operator==(const Criterion&) const = default;
};

/// Satisfaction of a criterion by a tree. A path/array comparison holds when
/// the path application equals the array element-wise; a path/path
/// comparison also holds when both applications miss (both null). The
/// connectives are standard.
bool satisfies(const Tree& t, const Criterion& c);

}  // namespace tquery
