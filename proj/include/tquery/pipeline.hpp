#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "tquery/stages.hpp"

namespace tquery {

namespace stage {

struct Match {
  Criterion criterion;
  bool operator==(const Match&) const = default;
};

struct Unwind {
  Path path;
  bool operator==(const Unwind&) const = default;
};

struct Project {
  ProjectionList items;
  bool operator==(const Project&) const = default;
};

struct Group {
  GroupSpec spec;
  bool operator==(const Group&) const = default;
};

struct Lookup {
  LookupSpec spec;
  bool operator==(const Lookup&) const = default;
};

}  // namespace stage

using Stage = std::variant<stage::Match, stage::Unwind, stage::Project,
                           stage::Group, stage::Lookup>;

/// An ordered stage sequence plus named dataset bindings for lookup
/// adjuncts. Bindings are immutable snapshots: a pipeline cannot rebind
/// mid-run. Pipeline values are immutable and shareable; concurrent runs
/// over different inputs are independent.
struct Pipeline {
  std::vector<Stage> stages;
  std::map<std::string, TreeArray> bindings;

  bool operator==(const Pipeline&) const = default;
};

/// Left-to-right fold of stage application; the empty pipeline returns the
/// input unchanged. Throws EvalError on a null input array or when a lookup
/// names a dataset missing from the bindings.
TreeArray run(const Pipeline& pipeline, const TreeArray& input);

/// Applies one stage against the given bindings.
TreeArray run_stage(const Stage& s, const TreeArray& input,
                    const std::map<std::string, TreeArray>& bindings);

}  // namespace tquery
