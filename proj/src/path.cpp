#include "tquery/path.hpp"

#include <cassert>
#include <span>
#include <stdexcept>

namespace tquery {

Path::Path(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (const std::string& label : labels_) {
    if (label.empty()) throw std::invalid_argument("path labels must be non-empty");
  }
}

namespace {

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

}  // namespace

Path Path::parse(std::string_view text) {
  std::vector<std::string> labels;
  std::size_t i = 0;
  if (text.empty()) return Path();
  while (true) {
    if (i >= text.size()) throw std::invalid_argument("expected path segment");
    std::string label;
    if (text[i] == '"') {
      ++i;
      while (i < text.size() && text[i] != '"') {
        if (text[i] == '\\' && i + 1 < text.size()) ++i;
        label += text[i++];
      }
      if (i >= text.size()) throw std::invalid_argument("unterminated quoted segment");
      ++i;
      if (label.empty()) throw std::invalid_argument("path labels must be non-empty");
    } else if (is_ident_start(text[i])) {
      while (i < text.size() && is_ident_char(text[i])) label += text[i++];
    } else {
      throw std::invalid_argument("bad character in path segment");
    }
    labels.push_back(std::move(label));
    if (i == text.size()) break;
    if (text[i] != '.') throw std::invalid_argument("expected '.' between path segments");
    ++i;
  }
  return Path(std::move(labels));
}

Path Path::tail() const {
  assert(!empty());
  return Path(std::vector<std::string>(labels_.begin() + 1, labels_.end()));
}

Path Path::joined(const Path& other) const {
  std::vector<std::string> labels = labels_;
  labels.insert(labels.end(), other.labels_.begin(), other.labels_.end());
  return Path(std::move(labels));
}

std::string Path::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) s += '.';
    bool plain = is_ident_start(labels_[i][0]);
    for (char c : labels_[i]) plain = plain && is_ident_char(c);
    if (plain) {
      s += labels_[i];
    } else {
      s += '"';
      for (char c : labels_[i]) {
        if (c == '"' || c == '\\') s += '\\';
        s += c;
      }
      s += '"';
    }
  }
  return s;
}

namespace {

TreeArray apply(const Tree& t, std::span<const std::string> labels) {
  if (t.is_null()) return TreeArray::null();
  if (labels.empty()) return TreeArray(std::vector<Tree>{t});
  TreeArray reached = t.branch(labels.front());
  if (reached.is_null()) return TreeArray::null();
  // Concatenation over the sub-traversals, starting from the null array so
  // that an all-miss (or empty) branch collapses to the null array.
  TreeArray result = TreeArray::null();
  for (const Tree& sub : reached.elements()) {
    result = concat(result, apply(sub, labels.subspan(1)));
  }
  return result;
}

}  // namespace

TreeArray apply_path(const Tree& t, const Path& p) { return apply(t, p.labels()); }

TreeArray apply_path_array(const TreeArray& a, const Path& p) {
  assert(!a.is_null());
  TreeArray result = TreeArray::null();
  for (const Tree& t : a.elements()) {
    result = concat(result, apply_path(t, p));
  }
  if (result.is_null() && a.empty()) return a;
  return result;
}

}  // namespace tquery
