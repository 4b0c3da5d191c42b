#include "tquery/tree.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace tquery {

namespace {

const std::shared_ptr<const std::vector<Tree>>& shared_empty_vector() {
  static const auto empty = std::make_shared<const std::vector<Tree>>();
  return empty;
}

}  // namespace

TreeArray::TreeArray() : elements_(shared_empty_vector()) {}

TreeArray::TreeArray(std::vector<Tree> elements)
    : elements_(std::make_shared<const std::vector<Tree>>(std::move(elements))) {}

TreeArray TreeArray::null() {
  TreeArray a;
  a.elements_ = nullptr;
  return a;
}

std::int64_t TreeArray::size() const {
  assert(!is_null() && "size of the null array is undefined");
  return static_cast<std::int64_t>(elements_->size());
}

Tree TreeArray::at(std::int64_t index) const {
  if (is_null() || index < 1 || index > size()) return Tree();
  return (*elements_)[static_cast<std::size_t>(index - 1)];
}

const std::vector<Tree>& TreeArray::elements() const {
  assert(!is_null() && "the null array has no elements");
  return *elements_;
}

bool TreeArray::operator==(const TreeArray& other) const {
  if (is_null() || other.is_null()) return is_null() == other.is_null();
  if (elements_->size() != other.elements_->size()) return false;
  return std::equal(elements_->begin(), elements_->end(), other.elements_->begin());
}

Tree Tree::leaf(Scalar root) {
  return Tree(std::make_shared<const Node>(Node{std::move(root), {}}));
}

Tree Tree::make(Scalar root, std::vector<Branch> branches) {
  for (std::size_t i = 0; i < branches.size(); ++i) {
    if (branches[i].array.is_null()) {
      throw std::invalid_argument("branch '" + branches[i].label +
                                  "' holds the null array; absent labels are modeled by absence");
    }
    for (std::size_t j = i + 1; j < branches.size(); ++j) {
      if (branches[i].label == branches[j].label) {
        throw std::invalid_argument("duplicate branch label '" + branches[i].label + "'");
      }
    }
  }
  return Tree(std::make_shared<const Node>(Node{std::move(root), std::move(branches)}));
}

const Scalar& Tree::root() const {
  assert(!is_null() && "the null tree has no root");
  return node_->root;
}

const std::vector<Branch>& Tree::branches() const {
  static const std::vector<Branch> none;
  return node_ ? node_->branches : none;
}

TreeArray Tree::branch(std::string_view label) const {
  if (node_) {
    for (const Branch& b : node_->branches) {
      if (b.label == label) return b.array;
    }
  }
  return TreeArray::null();
}

Tree Tree::with_branch(std::string_view label, TreeArray replacement) const {
  assert(!is_null());
  assert(!replacement.is_null());
  std::vector<Branch> branches = node_->branches;
  for (Branch& b : branches) {
    if (b.label == label) {
      b.array = std::move(replacement);
      return Tree(std::make_shared<const Node>(Node{node_->root, std::move(branches)}));
    }
  }
  branches.push_back(Branch{std::string(label), std::move(replacement)});
  return Tree(std::make_shared<const Node>(Node{node_->root, std::move(branches)}));
}

bool Tree::operator==(const Tree& other) const {
  if (node_ == other.node_) return true;  // shared structure, includes both null
  if (is_null() || other.is_null()) return false;
  if (!(node_->root == other.node_->root)) return false;
  if (node_->branches.size() != other.node_->branches.size()) return false;
  for (const Branch& b : node_->branches) {
    TreeArray theirs = other.branch(b.label);
    if (theirs.is_null() || !(b.array == theirs)) return false;
  }
  return true;
}

TreeArray concat(const TreeArray& a, const TreeArray& b) {
  if (a.is_null()) return b;
  if (b.is_null()) return a;
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<Tree> out;
  out.reserve(static_cast<std::size_t>(a.size() + b.size()));
  out.insert(out.end(), a.elements().begin(), a.elements().end());
  out.insert(out.end(), b.elements().begin(), b.elements().end());
  return TreeArray(std::move(out));
}

TreeArray set_cast(const TreeArray& a) {
  assert(!a.is_null() && "set cast of the null array is undefined");
  std::vector<Tree> out;
  for (const Tree& t : a.elements()) {
    bool seen = false;
    for (const Tree& kept : out) {
      if (kept == t) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(t);
  }
  return TreeArray(std::move(out));
}

std::string to_debug(const Tree& t) {
  if (t.is_null()) return "<null-tree>";
  std::string s = t.root().is_string() ? "\"" + t.root().as_string() + "\"" : t.root().to_text();
  if (!t.branches().empty()) {
    s += " {";
    bool first = true;
    for (const Branch& b : t.branches()) {
      if (!first) s += ", ";
      first = false;
      s += b.label + ": " + to_debug(b.array);
    }
    s += "}";
  }
  return s;
}

std::string to_debug(const TreeArray& a) {
  if (a.is_null()) return "<null-array>";
  std::string s = "[";
  bool first = true;
  for (const Tree& t : a.elements()) {
    if (!first) s += ", ";
    first = false;
    s += to_debug(t);
  }
  return s + "]";
}

}  // namespace tquery
