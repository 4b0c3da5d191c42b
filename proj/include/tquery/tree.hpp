#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tquery/scalar.hpp"

namespace tquery {

class Tree;

/// Ordered sequence of trees — the value every stage consumes and produces.
///
/// A default-constructed TreeArray is the empty array [ ]. The null array
/// is a distinct sentinel (TreeArray::null()); it compares unequal to [ ]
/// and is absorbed by concatenation next to materialized arrays. User data
/// can never encode the null array.
///
/// Arrays are immutable after construction and cheap to copy (shared
/// storage), so they are safe to share across threads.
class TreeArray {
 public:
  TreeArray();
  explicit TreeArray(std::vector<Tree> elements);

  /// The null array.
  static TreeArray null();

  bool is_null() const { return elements_ == nullptr; }

  /// Element count. Requires a materialized (non-null) array.
  std::int64_t size() const;
  bool empty() const { return size() == 0; }

  /// 1-based indexing: the tree at position i, or the null tree when the
  /// index is out of range or the array is null.
  Tree at(std::int64_t index) const;

  const std::vector<Tree>& elements() const;

  /// Element-wise structural equality. null == null; null != [ ].
  bool operator==(const TreeArray& other) const;

 private:
  std::shared_ptr<const std::vector<Tree>> elements_;  // nullptr encodes null
};

/// One labeled array of subtrees. Labels within a tree are pairwise
/// distinct and branch arrays are always materialized.
struct Branch {
  std::string label;
  TreeArray array;

  bool operator==(const Branch&) const = default;
};

/// Immutable tree value: a root scalar plus labeled arrays of subtrees.
///
/// A default-constructed Tree is the null tree: it has no root and no
/// branches, and branch lookup on it yields the null array. Branch storage
/// preserves insertion order for deterministic serialization, but equality
/// treats branches as a set.
class Tree {
 public:
  Tree() = default;  // the null tree

  static Tree leaf(Scalar root);

  /// Throws std::invalid_argument on duplicate labels or a null branch array.
  static Tree make(Scalar root, std::vector<Branch> branches);

  bool is_null() const { return node_ == nullptr; }

  /// Requires a non-null tree.
  const Scalar& root() const;

  /// Insertion-ordered branches; empty for the null tree.
  const std::vector<Branch>& branches() const;

  /// The array bound to label, or the null array when the label is absent
  /// or the tree is null.
  TreeArray branch(std::string_view label) const;

  /// Copy of this tree with the named branch replaced (appended when
  /// absent). Requires a non-null tree and a materialized replacement.
  Tree with_branch(std::string_view label, TreeArray replacement) const;

  /// Structural equality: strict scalar roots, equal label sets, and
  /// element-wise equal arrays per label. Branch order is irrelevant.
  bool operator==(const Tree& other) const;

 private:
  struct Node {
    Scalar root;
    std::vector<Branch> branches;
  };

  explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline bool tree_equal(const Tree& a, const Tree& b) { return a == b; }

/// Concatenation with the structural equivalences for the null array:
/// null::null = null, and null or [ ] next to any other operand vanish.
TreeArray concat(const TreeArray& a, const TreeArray& b);

/// Duplicates removed by structural equality; first occurrence and its
/// position are kept, so the result is deterministic. Requires a
/// materialized array.
TreeArray set_cast(const TreeArray& a);

/// Diagnostic rendering, e.g. `null {date: [20181129], t: [37, 35]}`.
std::string to_debug(const Tree& t);
std::string to_debug(const TreeArray& a);

}  // namespace tquery
