#pragma once

// Deterministic pseudo-random generators for bounded trees, paths, criteria
// and stage parameters. Everything is driven by an explicit seed; the same
// seed always yields the same structures.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tquery/pipeline.hpp"
#include "tquery/stages.hpp"

namespace tquery::testing {

struct GenConfig {
  int max_depth = 3;
  int max_branching = 3;
  int max_array_len = 3;
  std::vector<std::string> label_alphabet = {"a", "b", "c"};
  std::vector<Scalar> scalar_pool = {Scalar(1), Scalar(2), Scalar("x"),
                                     Scalar("y"), Scalar(true), Scalar(1.5), Scalar()};
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) { return n == 0 ? 0 : engine_() % n; }
  bool chance(unsigned numerator, unsigned denominator) {
    return engine_() % denominator < numerator;
  }

  template <typename T>
  const T& pick(const std::vector<T>& pool) {
    return pool[below(pool.size())];
  }

 private:
  std::mt19937_64 engine_;
};

Tree gen_tree(Rng& rng, const GenConfig& cfg);
TreeArray gen_array(Rng& rng, const GenConfig& cfg);
Path gen_path(Rng& rng, const GenConfig& cfg, int min_len = 0, int max_len = 3);
Criterion gen_criterion(Rng& rng, const GenConfig& cfg, int depth = 2);

// Flat record trees (null root, single-label branches over leaf arrays):
// the realistic shape for group and lookup inputs.
TreeArray gen_records(Rng& rng, int count);

ValueDef gen_valuedef(Rng& rng, const GenConfig& cfg, int depth = 2);
ProjectionList gen_projection(Rng& rng, const GenConfig& cfg);
GroupSpec gen_groupspec(Rng& rng, const GenConfig& cfg);
LookupSpec gen_lookupspec(Rng& rng, const GenConfig& cfg);

// Query-text-expressible generators (no null literals, leaf comparison
// arrays only): used for print/parse round-trip properties.
Criterion gen_criterion_dsl(Rng& rng, const GenConfig& cfg, int depth = 2);
ValueDef gen_valuedef_dsl(Rng& rng, const GenConfig& cfg, int depth = 2);
Pipeline gen_pipeline_dsl(Rng& rng, const GenConfig& cfg);

int tree_depth(const Tree& t);

}  // namespace tquery::testing
