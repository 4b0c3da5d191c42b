#include "tquery/pipeline.hpp"

#include "tquery/errors.hpp"

namespace tquery {

TreeArray run_stage(const Stage& s, const TreeArray& input,
                    const std::map<std::string, TreeArray>& bindings) {
  if (const auto* m = std::get_if<stage::Match>(&s)) {
    return match_stage(input, m->criterion);
  }
  if (const auto* u = std::get_if<stage::Unwind>(&s)) {
    return unwind_stage(input, u->path);
  }
  if (const auto* p = std::get_if<stage::Project>(&s)) {
    return project_stage(input, p->items);
  }
  if (const auto* g = std::get_if<stage::Group>(&s)) {
    return group_stage(input, g->spec);
  }
  const auto& l = std::get<stage::Lookup>(s);
  auto adjunct = bindings.find(l.spec.adjunct);
  if (adjunct == bindings.end()) {
    throw EvalError("unbound dataset '" + l.spec.adjunct + "' in lookup");
  }
  return lookup_stage(input, l.spec, adjunct->second);
}

TreeArray run(const Pipeline& pipeline, const TreeArray& input) {
  if (input.is_null()) throw EvalError("pipeline input is the null array");
  TreeArray current = input;
  for (const Stage& s : pipeline.stages) {
    current = run_stage(s, current, pipeline.bindings);
  }
  return current;
}

}  // namespace tquery
