#include <cassert>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "codec_internal.hpp"
#include "tquery/errors.hpp"

namespace tquery::detail {

namespace {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}

bool is_name_char(char c) {
  return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '.';
}

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

// Text content typing: integer if it parses completely as one, then float,
// otherwise text; empty content is the null value.
Scalar sniff_scalar(const std::string& raw) {
  std::string text = trim(raw);
  if (text.empty()) return Scalar();
  std::int64_t integer = 0;
  auto [iptr, iec] = std::from_chars(text.data(), text.data() + text.size(), integer);
  if (iec == std::errc{} && iptr == text.data() + text.size()) return Scalar(integer);
  char* fend = nullptr;
  double real = std::strtod(text.c_str(), &fend);
  if (fend == text.c_str() + text.size()) return Scalar(real);
  return Scalar(text);
}

class XmlParser {
 public:
  XmlParser(std::string_view src, std::vector<std::string>* warnings)
      : src_(src), warnings_(warnings) {}

  Tree parse_document() {
    skip_prolog();
    if (at_end() || peek() != '<') fail("expected root element");
    Tree root = parse_element().second;
    skip_misc();
    if (!at_end()) fail("content after the root element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& message) {
    throw DecodeError("malformed XML: " + message, line_, column_);
  }

  void warn(const std::string& message) {
    if (warnings_) {
      warnings_->push_back(message + " at " + std::to_string(line_) + ":" +
                           std::to_string(column_));
    }
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  bool starts_with(std::string_view prefix) const {
    return src_.substr(pos_, prefix.size()) == prefix;
  }

  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip(std::size_t n) {
    for (std::size_t i = 0; i < n && !at_end(); ++i) advance();
  }

  void skip_whitespace() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  void expect_seq(std::string_view text) {
    if (!starts_with(text)) fail("expected '" + std::string(text) + "'");
    skip(text.size());
  }

  void skip_until(std::string_view terminator, const char* what) {
    while (!at_end()) {
      if (starts_with(terminator)) {
        skip(terminator.size());
        return;
      }
      advance();
    }
    fail(std::string("unterminated ") + what);
  }

  void skip_prolog() {
    skip_whitespace();
    if (starts_with("<?xml")) skip_until("?>", "XML declaration");
    skip_misc();
  }

  void skip_misc() {
    for (;;) {
      skip_whitespace();
      if (starts_with("<!--")) {
        warn("comment ignored");
        skip_until("-->", "comment");
      } else if (starts_with("<?")) {
        warn("processing instruction ignored");
        skip_until("?>", "processing instruction");
      } else if (starts_with("<!DOCTYPE")) {
        warn("DOCTYPE ignored");
        skip_until(">", "DOCTYPE");
      } else {
        return;
      }
    }
  }

  std::string parse_name() {
    if (at_end() || !is_name_start(peek())) fail("expected a name");
    std::string name;
    while (!at_end() && is_name_char(peek())) name += advance();
    if (auto colon = name.rfind(':'); colon != std::string::npos) {
      warn("namespace prefix '" + name.substr(0, colon) + "' ignored");
      name = name.substr(colon + 1);
      if (name.empty()) fail("empty local name");
    }
    return name;
  }

  void parse_attributes() {
    for (;;) {
      skip_whitespace();
      if (at_end() || peek() == '>' || peek() == '/' || peek() == '?') return;
      std::string name = parse_name();
      warn("attribute '" + name + "' ignored");
      skip_whitespace();
      if (peek() != '=') fail("expected '=' in attribute");
      advance();
      skip_whitespace();
      char quote_char = peek();
      if (quote_char != '"' && quote_char != '\'') fail("expected quoted attribute value");
      advance();
      while (!at_end() && peek() != quote_char) advance();
      if (at_end()) fail("unterminated attribute value");
      advance();
    }
  }

  std::string decode_entity() {
    expect_seq("&");
    std::string entity;
    while (!at_end() && peek() != ';') entity += advance();
    if (at_end()) fail("unterminated entity reference");
    advance();  // ';'
    if (entity == "amp") return "&";
    if (entity == "lt") return "<";
    if (entity == "gt") return ">";
    if (entity == "quot") return "\"";
    if (entity == "apos") return "'";
    if (!entity.empty() && entity[0] == '#') {
      int base = 10;
      std::string digits = entity.substr(1);
      if (!digits.empty() && (digits[0] == 'x' || digits[0] == 'X')) {
        base = 16;
        digits = digits.substr(1);
      }
      char* end = nullptr;
      long code = std::strtol(digits.c_str(), &end, base);
      if (end != digits.c_str() + digits.size() || code <= 0 || code > 0x10FFFF) {
        fail("bad character reference '&" + entity + ";'");
      }
      // UTF-8 encode.
      std::string out;
      auto cp = static_cast<unsigned long>(code);
      if (cp < 0x80) {
        out += static_cast<char>(cp);
      } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
      } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
      } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
      }
      return out;
    }
    fail("unknown entity '&" + entity + ";'");
  }

  std::pair<std::string, Tree> parse_element() {
    expect_seq("<");
    std::string name = parse_name();
    parse_attributes();
    std::vector<std::pair<std::string, std::vector<Tree>>> groups;
    std::string text;

    auto add_child = [&groups](std::string child_name, Tree child) {
      for (auto& [label, children] : groups) {
        if (label == child_name) {
          children.push_back(std::move(child));
          return;
        }
      }
      groups.emplace_back(std::move(child_name), std::vector<Tree>{std::move(child)});
    };

    if (starts_with("/>")) {
      skip(2);
    } else {
      expect_seq(">");
      for (;;) {
        if (at_end()) fail("unterminated element '" + name + "'");
        if (starts_with("</")) {
          skip(2);
          std::string closing = parse_name();
          if (closing != name) {
            fail("mismatched closing tag '" + closing + "' for element '" + name + "'");
          }
          skip_whitespace();
          expect_seq(">");
          break;
        }
        if (starts_with("<!--")) {
          warn("comment ignored");
          skip_until("-->", "comment");
        } else if (starts_with("<![CDATA[")) {
          skip(9);
          while (!at_end() && !starts_with("]]>")) text += advance();
          if (at_end()) fail("unterminated CDATA section");
          skip(3);
        } else if (starts_with("<?")) {
          warn("processing instruction ignored");
          skip_until("?>", "processing instruction");
        } else if (peek() == '<') {
          // Child elements are grouped by name, document order kept.
          auto [child_name, child] = parse_element();
          add_child(std::move(child_name), std::move(child));
        } else if (peek() == '&') {
          text += decode_entity();
        } else {
          text += advance();
        }
      }
    }

    std::vector<Branch> branches;
    branches.reserve(groups.size());
    for (auto& [label, children] : groups) {
      branches.push_back(Branch{label, TreeArray(std::move(children))});
    }
    return {std::move(name), Tree::make(sniff_scalar(text), std::move(branches))};
  }

  std::string_view src_;
  std::vector<std::string>* warnings_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

void escape_text(const std::string& text, std::string& out) {
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
}

void encode_element(const Tree& t, const std::string& name, std::string& out) {
  std::string content;
  if (!t.root().is_null()) escape_text(t.root().to_text(), content);
  for (const Branch& b : t.branches()) {
    for (const Tree& child : b.array.elements()) {
      encode_element(child, b.label, content);
    }
  }
  if (content.empty()) {
    out += "<" + name + "/>";
  } else {
    out += "<" + name + ">" + content + "</" + name + ">";
  }
}

}  // namespace

TreeArray decode_xml(std::string_view text, std::vector<std::string>* warnings) {
  XmlParser parser(text, warnings);
  return TreeArray(std::vector<Tree>{parser.parse_document()});
}

std::string encode_xml(const TreeArray& a, const std::string& root_label) {
  std::string out;
  if (a.size() == 1) {
    encode_element(a.at(1), root_label, out);
    return out;
  }
  std::string content;
  for (const Tree& t : a.elements()) {
    encode_element(t, "item", content);
  }
  if (content.empty()) {
    out += "<" + root_label + "/>";
  } else {
    out += "<" + root_label + ">" + content + "</" + root_label + ">";
  }
  return out;
}

}  // namespace tquery::detail
