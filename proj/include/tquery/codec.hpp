#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tquery/tree.hpp"

namespace tquery {

enum class DataFormat { Json, Xml };

/// Canonical emission is lossless: every branch is written as an array and
/// a non-null root beside branches uses the reserved "#" field. Compact
/// emission additionally collapses singleton leaf arrays to bare scalars
/// (the usual hand-written JSON style). Emission mode never affects
/// decoding.
enum class EmissionMode { Canonical, Compact };

struct FormatOptions {
  DataFormat format = DataFormat::Json;
  EmissionMode emission = EmissionMode::Canonical;
  std::string xml_root_label = "root";
};

// JSON mapping: an object becomes a tree with null root and one branch per
// field; an array-valued field decodes element-wise; a scalar field becomes
// a singleton leaf; a top-level array becomes the tree array, any other
// top-level value a singleton. An object field "#" holding a scalar sets
// the tree root instead of a branch. Arrays nested directly inside arrays
// have no label to attach to and are rejected.
//
// XML mapping (elements only): an element becomes a tree whose root is the
// typed text content (integer if it parses as one, then float, else text;
// empty means null) and whose child elements, grouped by name in
// first-occurrence order, form the branches; repeated siblings keep
// document order. The document root decodes to a singleton array.
// Attributes, namespace prefixes, comments and processing instructions are
// ignored with a warning.

/// Decodes external text into a tree array. Appends human-readable notes to
/// warnings (if given) for ignored XML constructs. Throws DecodeError.
TreeArray decode(std::string_view text, const FormatOptions& options,
                 std::vector<std::string>* warnings = nullptr);

/// Encodes a materialized tree array. JSON: top level is always an array;
/// decode(encode(a)) == a in either emission mode for arrays free of the
/// reserved "#" label. XML: a single tree becomes the document root element
/// (named options.xml_root_label); other sizes wrap each tree in an <item>
/// element. Throws EncodeError when a tree carries both a non-null root and
/// a "#" branch.
std::string encode(const TreeArray& a, const FormatOptions& options);

}  // namespace tquery
