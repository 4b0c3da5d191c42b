#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include <json.hpp>

#include "codec_internal.hpp"
#include "tquery/codec.hpp"
#include "tquery/errors.hpp"

namespace tquery {

namespace detail {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void rethrow_with_position(const nlohmann::json::parse_error& e,
                                        std::string_view text) {
  // The exception carries a byte offset; recover 1-based line/column.
  std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
  if (offset > text.size()) offset = text.size();
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  std::string message = e.what();
  if (auto cut = message.find("] "); cut != std::string::npos) message = message.substr(cut + 2);
  throw DecodeError("malformed JSON: " + message, line, column);
}

Scalar decode_scalar(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return Scalar();
    case Json::value_t::boolean:
      return Scalar(j.get<bool>());
    case Json::value_t::number_integer:
      return Scalar(j.get<std::int64_t>());
    case Json::value_t::number_unsigned: {
      auto u = j.get<std::uint64_t>();
      if (u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        return Scalar(static_cast<std::int64_t>(u));
      }
      return Scalar(j.get<double>());
    }
    case Json::value_t::number_float:
      return Scalar(j.get<double>());
    case Json::value_t::string:
      return Scalar(j.get<std::string>());
    default:
      throw DecodeError("expected a JSON scalar");
  }
}

Tree decode_tree(const Json& j, const std::string& where);

// One element of an array (top-level or branch): scalars become leaves,
// objects become trees; an array here has no label to attach to.
Tree decode_element(const Json& j, const std::string& where) {
  if (j.is_array()) {
    throw DecodeError("array nested directly inside an array at " + where);
  }
  if (j.is_object()) return decode_tree(j, where);
  return Tree::leaf(decode_scalar(j));
}

Tree decode_tree(const Json& j, const std::string& where) {
  Scalar root;
  std::vector<Branch> branches;
  for (const auto& [key, value] : j.items()) {
    if (key == "#" && !value.is_array() && !value.is_object()) {
      root = decode_scalar(value);  // reserved root marker
      continue;
    }
    std::vector<Tree> elements;
    if (value.is_array()) {
      std::size_t index = 0;
      for (const Json& element : value) {
        elements.push_back(
            decode_element(element, where + "." + key + "[" + std::to_string(index++) + "]"));
      }
    } else {
      elements.push_back(decode_element(value, where + "." + key));
    }
    branches.push_back(Branch{key, TreeArray(std::move(elements))});
  }
  return Tree::make(std::move(root), std::move(branches));
}

Json encode_scalar(const Scalar& v) {
  switch (v.kind()) {
    case Scalar::Kind::Null:
      return nullptr;
    case Scalar::Kind::Bool:
      return v.as_bool();
    case Scalar::Kind::Int:
      return v.as_int();
    case Scalar::Kind::Float:
      return v.as_float();
    case Scalar::Kind::String:
      return v.as_string();
  }
  return nullptr;
}

bool is_leaf(const Tree& t) { return t.branches().empty(); }

Json encode_tree(const Tree& t, EmissionMode mode) {
  if (is_leaf(t)) return encode_scalar(t.root());
  Json obj = Json::object();
  if (!t.root().is_null()) {
    if (!t.branch("#").is_null()) {
      throw EncodeError("tree uses the reserved label \"#\" and carries a non-null root");
    }
    obj["#"] = encode_scalar(t.root());
  }
  for (const Branch& b : t.branches()) {
    // Compact mode writes singleton leaf arrays as bare scalars; "#" stays
    // an array so it cannot be mistaken for the root marker.
    if (mode == EmissionMode::Compact && b.array.size() == 1 && is_leaf(b.array.at(1)) &&
        b.label != "#") {
      obj[b.label] = encode_scalar(b.array.at(1).root());
      continue;
    }
    Json arr = Json::array();
    for (const Tree& child : b.array.elements()) {
      arr.push_back(encode_tree(child, mode));
    }
    obj[b.label] = std::move(arr);
  }
  return obj;
}

}  // namespace

TreeArray decode_json(std::string_view text) {
  Json parsed;
  try {
    parsed = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    rethrow_with_position(e, text);
  }
  std::vector<Tree> trees;
  if (parsed.is_array()) {
    std::size_t index = 0;
    for (const Json& element : parsed) {
      trees.push_back(decode_element(element, "$[" + std::to_string(index++) + "]"));
    }
  } else {
    trees.push_back(decode_element(parsed, "$"));
  }
  return TreeArray(std::move(trees));
}

std::string encode_json(const TreeArray& a, EmissionMode mode) {
  Json arr = Json::array();
  for (const Tree& t : a.elements()) {
    arr.push_back(encode_tree(t, mode));
  }
  return arr.dump();
}

}  // namespace detail

TreeArray decode(std::string_view text, const FormatOptions& options,
                 std::vector<std::string>* warnings) {
  switch (options.format) {
    case DataFormat::Json:
      return detail::decode_json(text);
    case DataFormat::Xml:
      return detail::decode_xml(text, warnings);
  }
  throw DecodeError("unknown input format");
}

std::string encode(const TreeArray& a, const FormatOptions& options) {
  if (a.is_null()) throw EncodeError("cannot encode the null array");
  switch (options.format) {
    case DataFormat::Json:
      return detail::encode_json(a, options.emission);
    case DataFormat::Xml:
      return detail::encode_xml(a, options.xml_root_label);
  }
  throw EncodeError("unknown output format");
}

}  // namespace tquery
