#include "oracle/gen.hpp"

#include <algorithm>
#include <utility>

namespace tquery::testing {

namespace {

Tree gen_tree_at(Rng& rng, const GenConfig& cfg, int depth) {
  Scalar root = rng.pick(cfg.scalar_pool);
  if (depth >= cfg.max_depth || rng.chance(1, 3)) return Tree::leaf(std::move(root));
  std::vector<Branch> branches;
  std::size_t width = rng.below(static_cast<std::size_t>(cfg.max_branching) + 1);
  std::vector<std::string> labels = cfg.label_alphabet;
  for (std::size_t i = 0; i < width && !labels.empty(); ++i) {
    std::size_t pick = rng.below(labels.size());
    std::string label = labels[pick];
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(pick));
    std::vector<Tree> elements;
    std::size_t len = rng.below(static_cast<std::size_t>(cfg.max_array_len) + 1);
    for (std::size_t k = 0; k < len; ++k) {
      elements.push_back(gen_tree_at(rng, cfg, depth + 1));
    }
    branches.push_back(Branch{std::move(label), TreeArray(std::move(elements))});
  }
  return Tree::make(std::move(root), std::move(branches));
}

}  // namespace

Tree gen_tree(Rng& rng, const GenConfig& cfg) { return gen_tree_at(rng, cfg, 0); }

TreeArray gen_array(Rng& rng, const GenConfig& cfg) {
  std::vector<Tree> elements;
  std::size_t len = rng.below(static_cast<std::size_t>(cfg.max_array_len) + 2);
  for (std::size_t i = 0; i < len; ++i) {
    elements.push_back(gen_tree(rng, cfg));
  }
  return TreeArray(std::move(elements));
}

Path gen_path(Rng& rng, const GenConfig& cfg, int min_len, int max_len) {
  std::vector<std::string> labels;
  std::size_t len = static_cast<std::size_t>(min_len) +
                    rng.below(static_cast<std::size_t>(max_len - min_len) + 1);
  for (std::size_t i = 0; i < len; ++i) {
    labels.push_back(rng.pick(cfg.label_alphabet));
  }
  return Path(std::move(labels));
}

namespace {

TreeArray gen_leaf_array(Rng& rng, const GenConfig& cfg, bool allow_null) {
  std::vector<Tree> elements;
  std::size_t len = rng.below(3) + (allow_null ? 0 : 1);
  for (std::size_t i = 0; i < len; ++i) {
    Scalar v = rng.pick(cfg.scalar_pool);
    if (!allow_null && v.is_null()) v = Scalar(0);
    elements.push_back(Tree::leaf(std::move(v)));
  }
  return TreeArray(std::move(elements));
}

Criterion gen_criterion_at(Rng& rng, const GenConfig& cfg, int depth, bool dsl_only) {
  std::size_t choice = rng.below(depth > 0 ? 7 : 4);
  switch (choice) {
    case 0:
      return Criterion::truth();
    case 1:
      return Criterion::exists(gen_path(rng, cfg, 1, 3));
    case 2: {
      TreeArray rhs = dsl_only ? gen_leaf_array(rng, cfg, false)
                               : (rng.chance(1, 2) ? gen_leaf_array(rng, cfg, true)
                                                   : TreeArray(std::vector<Tree>{gen_tree(rng, cfg)}));
      return Criterion::path_equals(gen_path(rng, cfg, 1, 3), std::move(rhs));
    }
    case 3:
      return Criterion::paths_equal(gen_path(rng, cfg, 1, 2), gen_path(rng, cfg, 1, 2));
    case 4:
      return Criterion::negation(gen_criterion_at(rng, cfg, depth - 1, dsl_only));
    case 5:
      return Criterion::conjunction(gen_criterion_at(rng, cfg, depth - 1, dsl_only),
                                    gen_criterion_at(rng, cfg, depth - 1, dsl_only));
    default:
      return Criterion::disjunction(gen_criterion_at(rng, cfg, depth - 1, dsl_only),
                                    gen_criterion_at(rng, cfg, depth - 1, dsl_only));
  }
}

}  // namespace

Criterion gen_criterion(Rng& rng, const GenConfig& cfg, int depth) {
  return gen_criterion_at(rng, cfg, depth, false);
}

Criterion gen_criterion_dsl(Rng& rng, const GenConfig& cfg, int depth) {
  return gen_criterion_at(rng, cfg, depth, true);
}

TreeArray gen_records(Rng& rng, int count) {
  static const std::vector<Scalar> key_pool = {Scalar(1), Scalar(2), Scalar("x")};
  std::vector<Tree> records;
  for (int i = 0; i < count; ++i) {
    std::vector<Branch> branches;
    for (const char* label : {"g1", "g2"}) {
      if (rng.chance(2, 3)) {
        std::vector<Tree> vals;
        std::size_t len = 1 + rng.below(2);
        for (std::size_t k = 0; k < len; ++k) vals.push_back(Tree::leaf(rng.pick(key_pool)));
        branches.push_back(Branch{label, TreeArray(std::move(vals))});
      }
    }
    for (const char* label : {"q1", "q2"}) {
      if (rng.chance(3, 4)) {
        std::vector<Tree> vals;
        std::size_t len = 1 + rng.below(2);
        for (std::size_t k = 0; k < len; ++k) vals.push_back(Tree::leaf(rng.pick(key_pool)));
        branches.push_back(Branch{label, TreeArray(std::move(vals))});
      }
    }
    records.push_back(Tree::make(Scalar(), std::move(branches)));
  }
  return TreeArray(std::move(records));
}

namespace {

ValueDef gen_valuedef_at(Rng& rng, const GenConfig& cfg, int depth, bool dsl_only) {
  std::size_t choice = rng.below(depth > 0 ? 5 : 2);
  switch (choice) {
    case 0: {
      Scalar v = rng.pick(cfg.scalar_pool);
      if (dsl_only && v.is_null()) v = Scalar("z");
      return ValueDef::lit(std::move(v));
    }
    case 1:
      return ValueDef::path_ref(gen_path(rng, cfg, 1, 3));
    case 2: {
      std::vector<ValueDef> items;
      std::size_t len = rng.below(3);
      for (std::size_t i = 0; i < len; ++i) {
        items.push_back(gen_valuedef_at(rng, cfg, depth - 1, dsl_only));
      }
      return ValueDef::seq(std::move(items));
    }
    case 3:
      return ValueDef::criterion(gen_criterion_at(rng, cfg, 1, dsl_only));
    default:
      return ValueDef::ternary(gen_criterion_at(rng, cfg, 1, dsl_only),
                               gen_valuedef_at(rng, cfg, depth - 1, dsl_only),
                               gen_valuedef_at(rng, cfg, depth - 1, dsl_only));
  }
}

}  // namespace

ValueDef gen_valuedef(Rng& rng, const GenConfig& cfg, int depth) {
  return gen_valuedef_at(rng, cfg, depth, false);
}

ValueDef gen_valuedef_dsl(Rng& rng, const GenConfig& cfg, int depth) {
  return gen_valuedef_at(rng, cfg, depth, true);
}

ProjectionList gen_projection(Rng& rng, const GenConfig& cfg) {
  ProjectionList items;
  std::size_t count = 1 + rng.below(3);
  for (std::size_t i = 0; i < count; ++i) {
    if (rng.chance(1, 2)) {
      items.push_back(ProjectionItem::keep(gen_path(rng, cfg, rng.chance(1, 6) ? 0 : 1, 2)));
    } else {
      items.push_back(ProjectionItem::define(gen_valuedef(rng, cfg, 2), gen_path(rng, cfg, 1, 2)));
    }
  }
  return items;
}

GroupSpec gen_groupspec(Rng& rng, const GenConfig& cfg) {
  GroupSpec spec;
  static const std::vector<std::string> agg_labels = {"q1", "q2"};
  static const std::vector<std::string> group_labels = {"g1", "g2"};
  static const std::vector<std::string> dest_labels = {"out1", "out2", "key1", "key2"};
  std::size_t n = 1 + rng.below(2);
  std::size_t m = 1 + rng.below(2);
  for (std::size_t i = 0; i < n; ++i) {
    Path source(std::vector<std::string>{agg_labels[i]});
    Path dest = rng.chance(1, 2) ? source : Path(std::vector<std::string>{dest_labels[i]});
    spec.aggregations.push_back(PathPair{std::move(source), std::move(dest)});
  }
  for (std::size_t h = 0; h < m; ++h) {
    Path source(std::vector<std::string>{group_labels[h]});
    Path dest = rng.chance(1, 2) ? source : Path(std::vector<std::string>{dest_labels[2 + h]});
    spec.groupings.push_back(PathPair{std::move(source), std::move(dest)});
  }
  (void)cfg;
  return spec;
}

LookupSpec gen_lookupspec(Rng& rng, const GenConfig& cfg) {
  LookupSpec spec;
  spec.local = rng.chance(3, 4) ? Path(std::vector<std::string>{"g1"}) : gen_path(rng, cfg, 1, 2);
  spec.adjunct = "adjunct";
  spec.foreign = rng.chance(3, 4) ? Path(std::vector<std::string>{"g2"}) : gen_path(rng, cfg, 1, 2);
  spec.dest = rng.chance(1, 2) ? Path(std::vector<std::string>{"joined"})
                               : Path(std::vector<std::string>{"joined", "deep"});
  return spec;
}

Pipeline gen_pipeline_dsl(Rng& rng, const GenConfig& cfg) {
  // Labels beyond the plain alphabet exercise quoting in the printer.
  GenConfig dsl_cfg = cfg;
  dsl_cfg.label_alphabet = {"a", "b", "c", "my key", "match", "x-1"};
  dsl_cfg.scalar_pool = {Scalar(1),    Scalar(-7),   Scalar(2.5), Scalar(1e-3),
                         Scalar("x"),  Scalar("we\"ird\nx"), Scalar(true), Scalar(false)};
  Pipeline p;
  std::size_t count = 1 + rng.below(4);
  for (std::size_t i = 0; i < count; ++i) {
    switch (rng.below(5)) {
      case 0:
        p.stages.push_back(stage::Match{gen_criterion_dsl(rng, dsl_cfg, 2)});
        break;
      case 1:
        p.stages.push_back(stage::Unwind{gen_path(rng, dsl_cfg, 1, 3)});
        break;
      case 2: {
        ProjectionList items;
        std::size_t n = 1 + rng.below(3);
        for (std::size_t k = 0; k < n; ++k) {
          if (rng.chance(1, 2)) {
            items.push_back(ProjectionItem::keep(gen_path(rng, dsl_cfg, 1, 2)));
          } else {
            items.push_back(
                ProjectionItem::define(gen_valuedef_dsl(rng, dsl_cfg, 2), gen_path(rng, dsl_cfg, 1, 2)));
          }
        }
        p.stages.push_back(stage::Project{std::move(items)});
        break;
      }
      case 3: {
        GroupSpec spec;
        std::size_t n = 1 + rng.below(2);
        std::size_t m = 1 + rng.below(2);
        for (std::size_t k = 0; k < n; ++k) {
          Path source = gen_path(rng, dsl_cfg, 1, 2);
          spec.aggregations.push_back(
              PathPair{source, rng.chance(1, 2) ? source : gen_path(rng, dsl_cfg, 1, 2)});
        }
        for (std::size_t k = 0; k < m; ++k) {
          Path source = gen_path(rng, dsl_cfg, 1, 2);
          spec.groupings.push_back(
              PathPair{source, rng.chance(1, 2) ? source : gen_path(rng, dsl_cfg, 1, 2)});
        }
        p.stages.push_back(stage::Group{std::move(spec)});
        break;
      }
      default: {
        LookupSpec spec;
        spec.local = gen_path(rng, dsl_cfg, 1, 2);
        spec.adjunct = rng.chance(1, 2) ? "ds1" : "ds2";
        spec.foreign = gen_path(rng, dsl_cfg, 1, 2);
        spec.dest = gen_path(rng, dsl_cfg, 1, 2);
        p.stages.push_back(stage::Lookup{std::move(spec)});
        break;
      }
    }
  }
  return p;
}

// Edge depth: a leaf is 0 deep.
int tree_depth(const Tree& t) {
  if (t.is_null()) return 0;
  int deepest = -1;
  for (const Branch& b : t.branches()) {
    for (const Tree& child : b.array.elements()) {
      deepest = std::max(deepest, tree_depth(child));
    }
  }
  return deepest + 1;
}

}  // namespace tquery::testing
