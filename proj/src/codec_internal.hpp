#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tquery/codec.hpp"
#include "tquery/tree.hpp"

namespace tquery::detail {

TreeArray decode_json(std::string_view text);
std::string encode_json(const TreeArray& a, EmissionMode mode);

TreeArray decode_xml(std::string_view text, std::vector<std::string>* warnings);
std::string encode_xml(const TreeArray& a, const std::string& root_label);

}  // namespace tquery::detail
