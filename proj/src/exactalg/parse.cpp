#include "veronese/parse.hpp"

#include <cctype>
#include <fstream>

namespace veronese {

std::string VarFamily::name(int i) const {
  if (letter == 't') return "t";
  return std::string(1, letter) + std::to_string(i);
}

namespace detail {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }
  // Digits immediately after a variable letter (no whitespace allowed).
  std::string index_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("variable needs an index");
    return std::string(text_.substr(start, pos_ - start));
  }
  void advance() { ++pos_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

void parse_factor(Cursor& cur, const VarFamily& family, RawTerm& term) {
  const char c = cur.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    term.integers.push_back(cur.digits());
    return;
  }
  if (!std::isalpha(static_cast<unsigned char>(c))) cur.fail("expected a coefficient or variable");
  if (c != family.letter) cur.fail(std::string("unexpected variable family '") + c + "'");
  cur.advance();
  int index = 0;
  if (family.letter != 't') {
    const auto idx = cur.index_digits();
    if (idx.size() > 2 || std::stoi(idx) >= family.count)
      cur.fail("variable index out of range (" + std::string(1, family.letter) + "0.." +
               family.name(family.count - 1) + ")");
    index = std::stoi(idx);
  }
  int power = 1;
  if (cur.accept('^')) {
    const auto e = cur.digits();
    if (e.size() > 2 || std::stoi(e) > kMaxDegree) cur.fail("exponent too large");
    power = std::stoi(e);
  }
  if (term.exponent[index] + power > kMaxDegree) cur.fail("exponent too large");
  term.exponent[index] = static_cast<std::uint8_t>(term.exponent[index] + power);
}

}  // namespace

std::vector<RawTerm> parse_terms(std::string_view text, const VarFamily& family) {
  Cursor cur(text);
  if (cur.done()) throw ParseError("empty polynomial");
  std::vector<RawTerm> terms;
  bool first = true;
  while (!cur.done()) {
    RawTerm term;
    if (cur.accept('-')) {
      term.negative = true;
    } else if (!cur.accept('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    parse_factor(cur, family, term);
    while (cur.accept('*')) parse_factor(cur, family, term);
    terms.push_back(std::move(term));
  }
  return terms;
}

}  // namespace detail

std::vector<std::string> read_content_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(first, last - first + 1));
  }
  return lines;
}

}  // namespace veronese
