#include <doctest.h>

#include <stdexcept>

#include "oracle/fixtures.hpp"
#include "oracle/gen.hpp"
#include "oracle/reference.hpp"
#include "tquery/tree.hpp"

using namespace tquery;
using namespace tquery::testing;

namespace {

// The Example-2 shape: null {x: [null {z: [1, 2], y: [3]}]}
Tree example2_tree() {
  Tree inner = record({Branch{"z", leaves({Scalar(1), Scalar(2)})},
                       Branch{"y", leaves({Scalar(3)})}});
  return record({Branch{"x", TreeArray({inner})}});
}

}  // namespace

TEST_CASE("branch lookup") {
  Tree t = example2_tree();
  TreeArray x = t.branch("x");
  REQUIRE(!x.is_null());
  CHECK(x.size() == 1);
  CHECK(x.at(1).branch("z") == leaves({Scalar(1), Scalar(2)}));

  CHECK(record({}).branch("x").is_null());
  CHECK(Tree().branch("x").is_null());
}

TEST_CASE("indexing is 1-based and total") {
  TreeArray a = leaves({Scalar(1), Scalar(2)});
  CHECK(a.at(2) == Tree::leaf(Scalar(2)));
  CHECK(a.at(3).is_null());
  CHECK(a.at(0).is_null());
  CHECK(a.at(-1).is_null());
  CHECK(TreeArray().at(1).is_null());
  CHECK(TreeArray::null().at(1).is_null());
}

TEST_CASE("null array is distinct from the empty array") {
  CHECK(TreeArray::null() == TreeArray::null());
  CHECK(TreeArray() == TreeArray());
  CHECK(!(TreeArray::null() == TreeArray()));
  CHECK(TreeArray::null().is_null());
  CHECK(!TreeArray().is_null());
}

TEST_CASE("concatenation equivalences") {
  const TreeArray null_array = TreeArray::null();
  const TreeArray empty;
  const TreeArray a = leaves({Scalar(1), Scalar(2)});

  CHECK(concat(null_array, null_array) == null_array);
  CHECK(concat(null_array, empty) == empty);
  CHECK(concat(empty, null_array) == empty);
  CHECK(concat(empty, empty) == empty);
  CHECK(concat(null_array, a) == a);
  CHECK(concat(a, null_array) == a);
  CHECK(concat(empty, a) == a);
  CHECK(concat(a, empty) == a);

  CHECK(concat(leaves({Scalar(1)}), leaves({Scalar(2)})) == leaves({Scalar(1), Scalar(2)}));
}

TEST_CASE("concat is associative with the empty array as identity") {
  GenConfig cfg;
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    TreeArray a = gen_array(rng, cfg);
    TreeArray b = gen_array(rng, cfg);
    TreeArray c = gen_array(rng, cfg);
    CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
    CHECK(concat(a, TreeArray()) == a);
    CHECK(concat(TreeArray(), a) == a);
    CHECK(concat(a, b).size() == a.size() + b.size());
  }
}

TEST_CASE("tree equality ignores branch order but not array order") {
  Tree ab = record({Branch{"a", leaves({Scalar(1)})}, Branch{"b", leaves({Scalar(2)})}});
  Tree ba = record({Branch{"b", leaves({Scalar(2)})}, Branch{"a", leaves({Scalar(1)})}});
  CHECK(ab == ba);

  CHECK(Tree::leaf(Scalar(1)) == Tree::leaf(Scalar(1)));
  CHECK(!(Tree::leaf(Scalar(1)) == Tree::leaf(Scalar(1.0))));  // strict per variant
  CHECK(!(Tree::leaf(Scalar(true)) == Tree::leaf(Scalar(1))));
  CHECK(!(Tree::leaf(Scalar()) == Tree::leaf(Scalar(false))));

  Tree ordered = record({Branch{"a", leaves({Scalar(1), Scalar(2)})}});
  Tree reversed = record({Branch{"a", leaves({Scalar(2), Scalar(1)})}});
  CHECK(!(ordered == reversed));

  CHECK(Tree() == Tree());
  CHECK(!(Tree() == record({})));
}

TEST_CASE("tree equality is an equivalence relation") {
  GenConfig cfg;
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    Tree a = gen_tree(rng, cfg);
    Tree b = gen_tree(rng, cfg);
    Tree c = gen_tree(rng, cfg);
    CHECK(a == a);
    CHECK((a == b) == (b == a));
    if (a == b && b == c) CHECK(a == c);
  }
}

TEST_CASE("set cast") {
  Tree one = Tree::leaf(Scalar(1));
  Tree two = Tree::leaf(Scalar(2));
  CHECK(set_cast(TreeArray({one, two, one})) == TreeArray({one, two}));
  CHECK(set_cast(TreeArray()) == TreeArray());
}

TEST_CASE("set cast agrees with hash-based dedup and is idempotent") {
  GenConfig cfg;
  Rng rng(99);
  for (int i = 0; i < 100; ++i) {
    // Plant duplicates: concatenate an array with a shuffled copy of itself.
    TreeArray base = gen_array(rng, cfg);
    TreeArray doubled = concat(base, base);
    CHECK(set_cast(doubled) == hash_dedup(doubled));
    CHECK(set_cast(set_cast(doubled)) == set_cast(doubled));
  }
}

TEST_CASE("sizes") {
  CHECK(TreeArray().size() == 0);
  CHECK(leaves({Scalar(1), Scalar(2)}).size() == 2);
}

TEST_CASE("tree construction validates its invariants") {
  CHECK_THROWS_AS(Tree::make(Scalar(), {Branch{"a", leaves({})}, Branch{"a", leaves({})}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Tree::make(Scalar(), {Branch{"a", TreeArray::null()}}), std::invalid_argument);
}

TEST_CASE("with_branch replaces in place or appends") {
  Tree t = record({Branch{"a", leaves({Scalar(1)})}, Branch{"b", leaves({Scalar(2)})}});
  Tree replaced = t.with_branch("a", leaves({Scalar(9)}));
  CHECK(replaced.branch("a") == leaves({Scalar(9)}));
  CHECK(replaced.branch("b") == leaves({Scalar(2)}));
  CHECK(replaced.branches().front().label == "a");

  Tree appended = t.with_branch("c", leaves({Scalar(3)}));
  CHECK(appended.branch("c") == leaves({Scalar(3)}));
  CHECK(appended.branches().back().label == "c");
}
