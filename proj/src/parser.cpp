#include "borel/parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "borel/errors.hpp"
#include "borel/json_io.hpp"

namespace borel {

namespace {

class TextParser {
 public:
  explicit TextParser(const std::string& text) : s_(text) {}

  MonomialIdeal run() {
    skip_ws();
    expect_keyword("vars");
    std::vector<std::string> names = parse_names();
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != ';') err("expected ';' after variable list");
    ++pos_;
    std::vector<Monomial> gens = parse_terms(names);
    skip_ws();
    if (pos_ != s_.size()) err("trailing input after ideal");
    const int n = static_cast<int>(names.size());
    return MonomialIdeal::make(n, std::move(gens), std::move(names));
  }

 private:
  [[noreturn]] void err(const std::string& message) {
    throw Error("parse", message + " (at byte " + std::to_string(pos_) + ")", pos_);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  static bool name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void expect_keyword(const std::string& kw) {
    if (s_.compare(pos_, kw.size(), kw) != 0) err("expected '" + kw + "'");
    pos_ += kw.size();
    if (pos_ < s_.size() && name_char(s_[pos_])) err("expected '" + kw + "'");
  }

  std::string parse_name() {
    skip_ws();
    if (pos_ >= s_.size() || !name_start(s_[pos_])) err("expected a variable name");
    std::size_t start = pos_;
    while (pos_ < s_.size() && name_char(s_[pos_])) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::vector<std::string> parse_names() {
    std::vector<std::string> names;
    names.push_back(parse_name());
    for (;;) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        names.push_back(parse_name());
      } else {
        break;
      }
    }
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j]) err("duplicate variable name '" + names[i] + "'");
    return names;
  }

  long long parse_exponent() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      err("expected an exponent");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > std::numeric_limits<int>::max())
        throw Error("overflow", "exponent exceeds 2^31-1 (at byte " + std::to_string(pos_) + ")",
                    pos_);
      ++pos_;
    }
    return v;
  }

  Monomial parse_term(const std::vector<std::string>& names) {
    skip_ws();
    Monomial u = Monomial::one(static_cast<int>(names.size()));
    if (pos_ < s_.size() && s_[pos_] == '1') {
      ++pos_;
      return u;
    }
    for (;;) {
      std::size_t name_pos = pos_;
      std::string name = parse_name();
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) {
        pos_ = name_pos;
        err("unknown variable '" + name + "'");
      }
      int idx = static_cast<int>(it - names.begin());
      long long e = 1;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        e = parse_exponent();
      }
      long long total = u.exps[idx] + e;
      if (total > std::numeric_limits<int>::max())
        err("exponent exceeds 2^31-1");
      u.exps[idx] = static_cast<int>(total);
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return u;
  }

  std::vector<Monomial> parse_terms(const std::vector<std::string>& names) {
    std::vector<Monomial> gens;
    skip_ws();
    if (pos_ == s_.size()) return gens;  // empty term list: zero ideal
    gens.push_back(parse_term(names));
    for (;;) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        gens.push_back(parse_term(names));
      } else {
        break;
      }
    }
    return gens;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

MonomialIdeal parse_json_ideal(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("parse", std::string("invalid JSON: ") + e.what(), e.byte);
  }
  return ideal_from_json(j);
}

}  // namespace

MonomialIdeal parse_ideal(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') return parse_json_ideal(text);
  return TextParser(text).run();
}

}  // namespace borel
