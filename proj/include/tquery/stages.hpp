#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tquery/criteria.hpp"
#include "tquery/path.hpp"
#include "tquery/tree.hpp"

namespace tquery {

enum class ValueDefKind { ScalarLit, PathRef, Seq, Crit, Ternary, ArrayLit };

/// Right-hand side of a projection: a scalar literal, a path reference, a
/// sequence of definitions, a criterion, or a ternary. ArrayLit is an
/// engine-internal literal array (used by group and lookup to project
/// concrete arrays); it has no query-text form.
struct ValueDef {
  ValueDefKind kind = ValueDefKind::ScalarLit;
  Scalar scalar;                    // ScalarLit
  Path path;                        // PathRef
  std::vector<ValueDef> items;      // Seq: n items; Ternary: {then, else}
  std::vector<Criterion> condition; // Crit / Ternary: exactly one
  TreeArray array;                  // ArrayLit

  static ValueDef lit(Scalar v);
  static ValueDef path_ref(Path p);
  static ValueDef seq(std::vector<ValueDef> defs);
  static ValueDef criterion(Criterion c);
  static ValueDef ternary(Criterion c, ValueDef then_def, ValueDef else_def);
  static ValueDef array_lit(TreeArray a);

  bool operator==(const ValueDef&) const = default;
};

/// One projection item: keep a path, or place a definition under a path.
struct ProjectionItem {
  enum class Kind { KeepPath, DefIntoPath };

  Kind kind = Kind::KeepPath;
  Path dest;
  ValueDef def;  // DefIntoPath only

  static ProjectionItem keep(Path p);
  static ProjectionItem define(ValueDef d, Path dest);

  bool operator==(const ProjectionItem&) const = default;
};

using ProjectionList = std::vector<ProjectionItem>;

struct PathPair {
  Path source;
  Path dest;

  bool operator==(const PathPair&) const = default;
};

/// Group parameters: the aggregation set (values collected under dest
/// paths) and the grouping set (keys grouped on, projected to dest paths).
/// Both are non-empty; the query-text omission sugar (dest = source) is
/// resolved at parse time.
struct GroupSpec {
  std::vector<PathPair> aggregations;  // q_i > p_i
  std::vector<PathPair> groupings;     // s_h > r_h

  bool operator==(const GroupSpec&) const = default;
};

/// Lookup parameters: join input trees whose local path value equals the
/// adjunct path value of trees in the named adjunct dataset; matches are
/// attached under dest.
struct LookupSpec {
  Path local;           // q, applied to input trees
  std::string adjunct;  // dataset name
  Path foreign;         // r, applied to adjunct trees
  Path dest;            // p

  bool operator==(const LookupSpec&) const = default;
};

// ---------------------------------------------------------------------------
// Stage operators. Every stage is a pure TreeArray -> TreeArray function,
// maps [ ] to [ ] and never returns the null array; a null input is treated
// as the empty case (it cannot arise inside a pipeline). Whenever an array
// is materialized as stage output or as a projected branch array, null-tree
// elements are dropped.
// ---------------------------------------------------------------------------

/// Order-preserving filter of the trees satisfying c.
TreeArray match_stage(const TreeArray& a, const Criterion& c);

/// Unwind expansion: one copy of t per element of a, with the labeled
/// branch replaced by the corresponding singleton (added when absent).
/// Empty or null a, or a null t, yields [ ].
TreeArray unwind_expand(const Tree& t, const TreeArray& a, std::string_view label);

/// Flattens the arrays reached through p, emitting one tree per innermost
/// element with singleton arrays along the path. The empty path is the
/// identity; trees lacking the path vanish.
TreeArray unwind_stage(const TreeArray& a, const Path& p);

/// Branch selection: rebuilds the spine of p (root becomes null-value) with
/// everything off the path removed; the empty path is the identity; a
/// missed path yields the null tree.
Tree project_path(const Tree& t, const Path& p);

/// Evaluates a value definition over a tree:
///   literal v -> [v{}]; criterion c -> [satisfies(t,c){}]; path -> t(p);
///   sequence -> concatenation of the evaluations (empty -> null array);
///   ternary -> evaluation of the selected branch only;
///   array literal -> the array itself (empty -> null array).
TreeArray eval_def(const ValueDef& d, const Tree& t);

/// Nests eval_def(d, t) under dest (singleton arrays along the spine);
/// yields the null tree when the evaluation is null. dest must be non-empty.
Tree project_def(const Tree& t, const ValueDef& d, const Path& dest);

/// Tree merge: the null tree is the identity on either side; differing
/// roots annihilate to the null tree; equal roots unite their label sets,
/// merging shared labels array-wise.
Tree merge(const Tree& t, const Tree& u);

/// Element-wise zip of the common prefix (annihilated elements elided),
/// with the longer remainder appended; [ ] and null are identities.
TreeArray merge_arrays(const TreeArray& a, const TreeArray& b);

/// Left fold of merge over the per-item projections. items must be
/// non-empty.
Tree project_tree(const Tree& t, const ProjectionList& items);

/// Element-wise project_tree; null-tree results are dropped.
TreeArray project_stage(const TreeArray& a, const ProjectionList& items);

/// Grouping over every subset of the grouping paths, concatenated in
/// increasing bitmask order of subsets (bit h-1 = grouping index h):
/// the empty set first, then {1}, {2}, {1,2}, {3}, ...
TreeArray group_stage(const TreeArray& a, const GroupSpec& g);

/// One powerset block. subset holds 0-based indices into g.groupings, in
/// increasing order. For every combination of distinct values of the subset
/// paths (per-axis values in first-occurrence order over the deduplicated
/// input, tuples enumerated lexicographically with the lowest index as the
/// most significant axis), emits one tree carrying the combination values
/// under the grouping dest paths and, per aggregation, the concatenation of
/// source-path values over the deduplicated matching trees under the
/// aggregation dest path. A combination whose match is empty for any
/// aggregation contributes nothing. Matching trees are those that have
/// the aggregation path, have exactly the subset's grouping paths, and
/// carry the combination's values on them.
TreeArray group_subset(const TreeArray& a, const GroupSpec& g,
                       const std::vector<std::size_t>& subset);

/// Projection items placing each combination value under its grouping dest
/// path; the empty subset yields the single keep-empty-path item, which
/// projects the input tree unchanged.
ProjectionList unfold_combination(const std::vector<TreeArray>& values,
                                  const std::vector<std::size_t>& subset,
                                  const std::vector<PathPair>& groupings);

/// Left join: one output tree per input tree, in order, extended under
/// spec.dest with the adjunct trees whose foreign-path value equals the
/// input tree's local-path value. When the local path is absent, adjunct
/// trees lacking the foreign path match. With no matches the input tree is
/// passed through unchanged. The adjunct array is never mutated.
TreeArray lookup_stage(const TreeArray& a, const LookupSpec& spec,
                       const TreeArray& adjunct);

}  // namespace tquery
