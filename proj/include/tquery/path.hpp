#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tquery/tree.hpp"

namespace tquery {

/// Finite sequence of labels used for tree traversal; the empty sequence is
/// the terminator. Textual form: dot-separated segments, quoted when a
/// segment is not a plain identifier, e.g. `M.D.L` or `"my key".x`.
class Path {
 public:
  Path() = default;  // the empty path

  /// Throws std::invalid_argument on an empty label.
  explicit Path(std::vector<std::string> labels);

  /// Parses the textual form. Throws std::invalid_argument on bad syntax.
  static Path parse(std::string_view text);

  bool empty() const { return labels_.empty(); }
  std::size_t length() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  const std::string& head() const { return labels_.front(); }

  /// Path with the first label removed. Requires a non-empty path.
  Path tail() const;

  /// Concatenation: this path followed by other.
  Path joined(const Path& other) const;

  std::string to_string() const;

  bool operator==(const Path&) const = default;

 private:
  std::vector<std::string> labels_;
};

/// Traversal: all subtrees of t reached by following p, ignoring array
/// indexes. The empty path yields [t]; a missing head label yields the null
/// array; deeper misses are absorbed by the concatenation equivalences
/// (null terms vanish next to materialized ones, and a traversal whose
/// sub-traversals all miss yields the null array). Applying any path to the
/// null tree yields the null array. The result never contains the null tree.
TreeArray apply_path(const Tree& t, const Path& p);

/// Concatenation of apply_path over the elements of a. Requires a
/// materialized array.
TreeArray apply_path_array(const TreeArray& a, const Path& p);

}  // namespace tquery
