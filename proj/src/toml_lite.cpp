#include "gabor/toml_lite.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gabor/error.hpp"

namespace gabor::toml {
namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Document run() {
    Document doc;
    std::string table;
    doc[table];
    while (true) {
      skip_ws_and_comments(true);
      if (eof()) break;
      if (peek() == '[') {
        ++pos_;
        skip_inline_ws();
        table = read_key();
        skip_inline_ws();
        expect(']');
        if (doc.count(table) && !doc[table].empty()) fail("duplicate table [" + table + "]");
        doc[table];
        end_of_line();
        continue;
      }
      const int key_line = line_;
      const std::string key = read_key();
      skip_inline_ws();
      expect('=');
      skip_inline_ws();
      Value v = read_value();
      v.line = key_line;
      auto& t = doc[table];
      if (t.count(key)) fail("duplicate key '" + key + "'");
      t.emplace(key, std::move(v));
      end_of_line();
    }
    return doc;
  }

 private:
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ConfigError, "config line " + std::to_string(line_) + ": " + what);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_inline_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++pos_;
  }

  void skip_ws_and_comments(bool newlines) {
    while (!eof()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else if (c == '\n' && newlines) {
        ++pos_;
        ++line_;
      } else if (c == '#') {
        while (!eof() && peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void end_of_line() {
    skip_inline_ws();
    if (peek() == '#') {
      while (!eof() && peek() != '\n') ++pos_;
    }
    if (eof()) return;
    if (peek() != '\n') fail("unexpected trailing characters");
    ++pos_;
    ++line_;
  }

  std::string read_key() {
    std::string key;
    while (!eof()) {
      const char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.') {
        key += c;
        ++pos_;
      } else {
        break;
      }
    }
    if (key.empty()) fail("expected a key");
    return key;
  }

  Value read_value() {
    Value v;
    const char c = peek();
    if (c == '"') {
      ++pos_;
      std::string out;
      while (!eof() && peek() != '"') {
        if (peek() == '\n') fail("unterminated string");
        if (peek() == '\\') {
          ++pos_;
          const char e = peek();
          switch (e) {
            case 'n': out += '\n'; break;
            case 't': out += '\t'; break;
            case '"': out += '"'; break;
            case '\\': out += '\\'; break;
            default: fail("unsupported escape");
          }
          ++pos_;
        } else {
          out += peek();
          ++pos_;
        }
      }
      expect('"');
      v.data = std::move(out);
      return v;
    }
    if (c == '[') {
      ++pos_;
      std::vector<Value> items;
      while (true) {
        skip_ws_and_comments(true);
        if (peek() == ']') {
          ++pos_;
          break;
        }
        items.push_back(read_value());
        skip_ws_and_comments(true);
        if (peek() == ',') {
          ++pos_;
        } else if (peek() != ']') {
          fail("expected ',' or ']' in array");
        }
      }
      v.data = std::move(items);
      return v;
    }
    std::string word;
    while (!eof()) {
      const char ch = peek();
      if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '.' || ch == '-' || ch == '+' || ch == '_') {
        word += ch;
        ++pos_;
      } else {
        break;
      }
    }
    if (word == "true" || word == "false") {
      v.data = (word == "true");
      return v;
    }
    if (word == "inf" || word == "+inf") {
      v.data = HUGE_VAL;
      return v;
    }
    if (word == "-inf") {
      v.data = -HUGE_VAL;
      return v;
    }
    std::string digits;
    for (char ch : word) {
      if (ch != '_') digits += ch;
    }
    if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
    double d = 0.0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) fail("invalid value '" + word + "'");
    v.data = d;
    v.integer = digits.find_first_of(".eE") == std::string::npos;
    return v;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

}  // namespace

Document parse(const std::string& text) { return Parser(text).run(); }

Document parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open config " + path.string(), "config");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace gabor::toml
