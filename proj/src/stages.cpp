#include "tquery/stages.hpp"

#include <cassert>
#include <cstdint>
#include <utility>

#include "tquery/errors.hpp"

namespace tquery {

ValueDef ValueDef::lit(Scalar v) {
  ValueDef d;
  d.kind = ValueDefKind::ScalarLit;
  d.scalar = std::move(v);
  return d;
}

ValueDef ValueDef::path_ref(Path p) {
  ValueDef d;
  d.kind = ValueDefKind::PathRef;
  d.path = std::move(p);
  return d;
}

ValueDef ValueDef::seq(std::vector<ValueDef> defs) {
  ValueDef d;
  d.kind = ValueDefKind::Seq;
  d.items = std::move(defs);
  return d;
}

ValueDef ValueDef::criterion(Criterion c) {
  ValueDef d;
  d.kind = ValueDefKind::Crit;
  d.condition.push_back(std::move(c));
  return d;
}

ValueDef ValueDef::ternary(Criterion c, ValueDef then_def, ValueDef else_def) {
  ValueDef d;
  d.kind = ValueDefKind::Ternary;
  d.condition.push_back(std::move(c));
  d.items.push_back(std::move(then_def));
  d.items.push_back(std::move(else_def));
  return d;
}

ValueDef ValueDef::array_lit(TreeArray a) {
  ValueDef d;
  d.kind = ValueDefKind::ArrayLit;
  d.array = std::move(a);
  return d;
}

ProjectionItem ProjectionItem::keep(Path p) {
  ProjectionItem item;
  item.kind = Kind::KeepPath;
  item.dest = std::move(p);
  return item;
}

ProjectionItem ProjectionItem::define(ValueDef d, Path dest) {
  assert(!dest.empty() && "definition destinations are non-empty paths");
  ProjectionItem item;
  item.kind = Kind::DefIntoPath;
  item.def = std::move(d);
  item.dest = std::move(dest);
  return item;
}

// ---------------------------------------------------------------------------

TreeArray match_stage(const TreeArray& a, const Criterion& c) {
  if (a.is_null()) return TreeArray();
  std::vector<Tree> out;
  for (const Tree& t : a.elements()) {
    if (satisfies(t, c)) out.push_back(t);
  }
  return TreeArray(std::move(out));
}

TreeArray unwind_expand(const Tree& t, const TreeArray& a, std::string_view label) {
  if (t.is_null() || a.is_null()) return TreeArray();
  std::vector<Tree> out;
  out.reserve(static_cast<std::size_t>(a.size()));
  for (const Tree& element : a.elements()) {
    out.push_back(t.with_branch(label, TreeArray(std::vector<Tree>{element})));
  }
  return TreeArray(std::move(out));
}

TreeArray unwind_stage(const TreeArray& a, const Path& p) {
  if (p.empty()) return a;
  if (a.is_null()) return TreeArray();
  Path head(std::vector<std::string>{p.head()});
  Path rest = p.tail();
  TreeArray result;
  for (const Tree& t : a.elements()) {
    TreeArray inner = unwind_stage(apply_path(t, head), rest);
    result = concat(result, unwind_expand(t, inner, p.head()));
  }
  return result;
}

namespace {

// Element-wise branch selection with null-tree results elided.
TreeArray project_path_array(const TreeArray& a, const Path& p) {
  std::vector<Tree> out;
  for (const Tree& t : a.elements()) {
    Tree projected = project_path(t, p);
    if (!projected.is_null()) out.push_back(std::move(projected));
  }
  return TreeArray(std::move(out));
}

}  // namespace

Tree project_path(const Tree& t, const Path& p) {
  if (p.empty()) return t;
  if (t.is_null()) return Tree();
  if (apply_path(t, p).is_null()) return Tree();
  // The guard ensures the head branch exists and reaches at least one
  // subtree; deeper misses surface as elided elements.
  TreeArray selected = project_path_array(t.branch(p.head()), p.tail());
  return Tree::make(Scalar(), {Branch{p.head(), std::move(selected)}});
}

TreeArray eval_def(const ValueDef& d, const Tree& t) {
  switch (d.kind) {
    case ValueDefKind::ScalarLit:
      return TreeArray(std::vector<Tree>{Tree::leaf(d.scalar)});
    case ValueDefKind::Crit:
      return TreeArray(std::vector<Tree>{Tree::leaf(Scalar(satisfies(t, d.condition[0])))});
    case ValueDefKind::PathRef:
      return apply_path(t, d.path);
    case ValueDefKind::Seq: {
      TreeArray result = TreeArray::null();
      for (const ValueDef& item : d.items) {
        result = concat(result, eval_def(item, t));
      }
      return result;
    }
    case ValueDefKind::Ternary:
      return eval_def(satisfies(t, d.condition[0]) ? d.items[0] : d.items[1], t);
    case ValueDefKind::ArrayLit:
      // An empty literal behaves like the empty sequence: no value.
      if (d.array.is_null() || d.array.empty()) return TreeArray::null();
      return d.array;
  }
  return TreeArray::null();
}

Tree project_def(const Tree& t, const ValueDef& d, const Path& dest) {
  assert(!dest.empty());
  TreeArray value = eval_def(d, t);
  if (value.is_null()) return Tree();
  const auto& labels = dest.labels();
  Tree node = Tree::make(Scalar(), {Branch{labels.back(), std::move(value)}});
  for (std::size_t i = labels.size() - 1; i-- > 0;) {
    node = Tree::make(Scalar(), {Branch{labels[i], TreeArray(std::vector<Tree>{node})}});
  }
  return node;
}

TreeArray merge_arrays(const TreeArray& a, const TreeArray& b) {
  if (a.is_null() || a.empty()) return b;
  if (b.is_null() || b.empty()) return a;
  std::vector<Tree> out;
  std::int64_t overlap = std::min(a.size(), b.size());
  for (std::int64_t i = 1; i <= overlap; ++i) {
    Tree merged = merge(a.at(i), b.at(i));
    if (!merged.is_null()) out.push_back(std::move(merged));
  }
  const TreeArray& longer = a.size() > b.size() ? a : b;
  for (std::int64_t i = overlap + 1; i <= longer.size(); ++i) {
    out.push_back(longer.at(i));
  }
  return TreeArray(std::move(out));
}

Tree merge(const Tree& t, const Tree& u) {
  if (t.is_null()) return u;
  if (u.is_null()) return t;
  if (!(t.root() == u.root())) return Tree();
  std::vector<Branch> merged;
  for (const Branch& b : t.branches()) {
    TreeArray theirs = u.branch(b.label);
    merged.push_back(Branch{b.label, theirs.is_null() ? b.array : merge_arrays(b.array, theirs)});
  }
  for (const Branch& b : u.branches()) {
    if (t.branch(b.label).is_null()) merged.push_back(b);
  }
  return Tree::make(t.root(), std::move(merged));
}

Tree project_tree(const Tree& t, const ProjectionList& items) {
  assert(!items.empty());
  Tree result;
  for (const ProjectionItem& item : items) {
    Tree part = item.kind == ProjectionItem::Kind::KeepPath
                    ? project_path(t, item.dest)
                    : project_def(t, item.def, item.dest);
    result = merge(result, part);
  }
  return result;
}

TreeArray project_stage(const TreeArray& a, const ProjectionList& items) {
  if (a.is_null()) return TreeArray();
  std::vector<Tree> out;
  for (const Tree& t : a.elements()) {
    Tree projected = project_tree(t, items);
    if (!projected.is_null()) out.push_back(std::move(projected));
  }
  return TreeArray(std::move(out));
}

// ---------------------------------------------------------------------------
// Group

ProjectionList unfold_combination(const std::vector<TreeArray>& values,
                                  const std::vector<std::size_t>& subset,
                                  const std::vector<PathPair>& groupings) {
  assert(values.size() == subset.size());
  if (subset.empty()) return {ProjectionItem::keep(Path())};
  ProjectionList items;
  for (std::size_t k = 0; k < subset.size(); ++k) {
    items.push_back(ProjectionItem::define(ValueDef::array_lit(values[k]),
                                           groupings[subset[k]].dest));
  }
  return items;
}

namespace {

// Per-aggregation validity criterion for one combination: the aggregation
// path exists, no grouping path outside the subset exists, and every subset
// path carries exactly the combination's value.
Criterion combination_criterion(const GroupSpec& g, const std::vector<std::size_t>& subset,
                                const std::vector<TreeArray>& values, std::size_t agg_index) {
  Criterion psi = Criterion::exists(g.aggregations[agg_index].source);
  Criterion absent_others = Criterion::truth();
  bool have_others = false;
  for (std::size_t j = 0; j < g.groupings.size(); ++j) {
    bool in_subset = false;
    for (std::size_t h : subset) in_subset = in_subset || h == j;
    if (in_subset) continue;
    Criterion ex = Criterion::exists(g.groupings[j].source);
    absent_others = have_others ? Criterion::disjunction(std::move(absent_others), std::move(ex))
                                : std::move(ex);
    have_others = true;
  }
  if (have_others) {
    psi = Criterion::conjunction(std::move(psi), Criterion::negation(std::move(absent_others)));
  }
  for (std::size_t k = 0; k < subset.size(); ++k) {
    const Path& source = g.groupings[subset[k]].source;
    Criterion pinned = Criterion::conjunction(Criterion::path_equals(source, values[k]),
                                              Criterion::exists(source));
    psi = Criterion::conjunction(std::move(psi), std::move(pinned));
  }
  return psi;
}

}  // namespace

TreeArray group_subset(const TreeArray& a, const GroupSpec& g,
                       const std::vector<std::size_t>& subset) {
  if (a.is_null()) return TreeArray();
  TreeArray deduped = set_cast(a);

  // Candidate values per subset axis, in first-occurrence order.
  std::vector<std::vector<TreeArray>> domains(subset.size());
  for (std::size_t k = 0; k < subset.size(); ++k) {
    for (const Tree& t : deduped.elements()) {
      TreeArray value = apply_path(t, g.groupings[subset[k]].source);
      if (value.is_null()) continue;
      bool seen = false;
      for (const TreeArray& kept : domains[k]) seen = seen || kept == value;
      if (!seen) domains[k].push_back(std::move(value));
    }
    if (domains[k].empty()) return TreeArray();  // no combination can form
  }

  std::vector<Tree> out;
  std::vector<std::size_t> odometer(subset.size(), 0);
  while (true) {
    std::vector<TreeArray> combination;
    combination.reserve(subset.size());
    for (std::size_t k = 0; k < subset.size(); ++k) {
      combination.push_back(domains[k][odometer[k]]);
    }

    // Per-aggregation matches; the whole combination is dropped when any
    // aggregation has none.
    std::vector<TreeArray> matches;
    bool valid = true;
    for (std::size_t i = 0; i < g.aggregations.size() && valid; ++i) {
      TreeArray matched = set_cast(match_stage(a, combination_criterion(g, subset, combination, i)));
      valid = !matched.empty();
      matches.push_back(std::move(matched));
    }

    if (valid) {
      ProjectionList keys = unfold_combination(combination, subset, g.groupings);
      Tree grouped;
      for (std::size_t i = 0; i < g.aggregations.size(); ++i) {
        TreeArray collected = TreeArray::null();
        for (const Tree& t : matches[i].elements()) {
          collected = concat(collected, apply_path(t, g.aggregations[i].source));
        }
        ProjectionList items = keys;
        items.push_back(ProjectionItem::define(ValueDef::array_lit(std::move(collected)),
                                               g.aggregations[i].dest));
        grouped = merge(grouped, project_tree(Tree(), items));
      }
      if (!grouped.is_null()) out.push_back(std::move(grouped));
    }

    // Advance, last axis fastest; a single empty-subset combination runs once.
    std::size_t k = subset.size();
    while (k > 0) {
      if (++odometer[k - 1] < domains[k - 1].size()) break;
      odometer[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return TreeArray(std::move(out));
}

TreeArray group_stage(const TreeArray& a, const GroupSpec& g) {
  if (a.is_null()) return TreeArray();
  assert(!g.aggregations.empty() && !g.groupings.empty());
  if (g.groupings.size() >= 63) throw EvalError("too many grouping paths");
  TreeArray result;
  const std::uint64_t limit = std::uint64_t{1} << g.groupings.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t h = 0; h < g.groupings.size(); ++h) {
      if (mask & (std::uint64_t{1} << h)) subset.push_back(h);
    }
    result = concat(result, group_subset(a, g, subset));
  }
  return result;
}

// ---------------------------------------------------------------------------

TreeArray lookup_stage(const TreeArray& a, const LookupSpec& spec, const TreeArray& adjunct) {
  if (a.is_null()) return TreeArray();
  std::vector<Tree> out;
  for (const Tree& t : a.elements()) {
    TreeArray local_value = apply_path(t, spec.local);
    Criterion c = local_value.is_null()
                      ? Criterion::negation(Criterion::exists(spec.foreign))
                      : Criterion::path_equals(spec.foreign, std::move(local_value));
    TreeArray matched = match_stage(adjunct, c);
    ProjectionList items{
        ProjectionItem::keep(Path()),
        ProjectionItem::define(ValueDef::array_lit(std::move(matched)), spec.dest)};
    Tree joined = project_tree(t, items);
    if (!joined.is_null()) out.push_back(std::move(joined));
  }
  return TreeArray(std::move(out));
}

}  // namespace tquery
