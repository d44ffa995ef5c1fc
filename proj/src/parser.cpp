#include "lojinf/parser.hpp"

#include <cctype>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>

#include "lojinf/errors.hpp"

namespace lojinf {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

/// Recursive-descent parser over one right-hand side.
class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t line, std::size_t column_offset,
             const std::unordered_map<std::string, std::size_t>& variables)
      : text_(text), line_(line), offset_(column_offset), variables_(variables) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, offset_ + pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly sum = term();
    for (;;) {
      if (accept('+'))
        sum += term();
      else if (accept('-'))
        sum -= term();
      else
        return sum;
    }
  }

  MultiPoly term() {
    MultiPoly product = factor();
    while (accept('*')) product = product * factor();
    return product;
  }

  Integer uint_literal() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected an unsigned integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  MultiPoly factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const std::size_t arity = variables_.size();
    const char c = text_[pos_];

    if (c == '-') {
      ++pos_;
      skip_space();
      if (pos_ < text_.size() && is_digit(text_[pos_])) return MultiPoly::constant(arity, -rational());
      return -factor();
    }
    if (is_digit(c)) return MultiPoly::constant(arity, rational());
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto it = variables_.find(name);
      if (it == variables_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      MultiPoly v = MultiPoly::variable(arity, it->second);
      if (accept('^')) {
        const Integer k = uint_literal();
        if (k > std::numeric_limits<unsigned short>::max()) fail("exponent too large");
        return v.pow(static_cast<unsigned>(k.get_ui()));
      }
      return v;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Rational rational() {
    const Integer numerator = uint_literal();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const Integer denominator = uint_literal();
      if (denominator == 0) fail("zero denominator");
      Rational q(numerator, denominator);
      q.canonicalize();
      return q;
    }
    return Rational(numerator);
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  const std::unordered_map<std::string, std::size_t>& variables_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool is_blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

std::size_t first_non_space(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

}  // namespace

SystemFile parse_system_file(std::string_view text) {
  SystemFile file;
  std::unordered_map<std::string, std::size_t> variable_index;
  std::set<std::string> seen_names;
  bool have_vars = false;

  std::size_t line_no = 0;
  std::size_t cursor = 0;
  while (cursor <= text.size()) {
    const auto end = text.find('\n', cursor);
    std::string_view raw = text.substr(cursor, end == std::string_view::npos ? text.size() - cursor
                                                                              : end - cursor);
    cursor = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const std::string_view line = strip_comment(raw);
    if (is_blank(line)) continue;

    if (!have_vars) {
      const std::size_t start = first_non_space(line);
      if (line.substr(start, 5) != "vars:")
        throw ParseError("expected 'vars:' declaration", line_no, start + 1);
      std::size_t i = start + 5;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        if (!is_ident_start(line[i])) throw ParseError("invalid variable name", line_no, i + 1);
        const std::size_t s = i;
        while (i < line.size() && is_ident_char(line[i])) ++i;
        if (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
          throw ParseError("invalid variable name", line_no, i + 1);
        std::string name(line.substr(s, i - s));
        if (!variable_index.emplace(name, file.variables.size()).second)
          throw ParseError("duplicate variable '" + name + "'", line_no, s + 1);
        file.variables.push_back(std::move(name));
      }
      if (file.variables.empty()) throw ParseError("no variables declared", line_no, start + 1);
      have_vars = true;
      continue;
    }

    const auto eq = line.find('=');
    const std::size_t start = first_non_space(line);
    if (eq == std::string_view::npos) throw ParseError("expected '<name> = <expr>'", line_no, start + 1);
    std::size_t name_end = start;
    if (name_end >= eq || !is_ident_start(line[name_end]))
      throw ParseError("expected a polynomial name", line_no, start + 1);
    while (name_end < eq && is_ident_char(line[name_end])) ++name_end;
    if (!is_blank(line.substr(name_end, eq - name_end)))
      throw ParseError("invalid polynomial name", line_no, name_end + 1);
    std::string name(line.substr(start, name_end - start));
    if (!seen_names.insert(name).second)
      throw ParseError("duplicate polynomial '" + name + "'", line_no, start + 1);

    const std::string_view rhs = line.substr(eq + 1);
    if (is_blank(rhs)) throw ParseError("empty expression", line_no, eq + 2);
    ExprParser parser(rhs, line_no, eq + 1, variable_index);
    file.polynomials.push_back(parser.parse());
    file.names.push_back(std::move(name));
    file.lines.push_back(line_no);
  }
  if (!have_vars) throw ParseError("missing 'vars:' declaration", 1, 1);
  return file;
}

PolyMap parse_system(std::string_view text) {
  SystemFile file = parse_system_file(text);
  if (file.polynomials.size() != file.variables.size())
    throw ArityError("arity mismatch: " + std::to_string(file.polynomials.size()) +
                     " polynomials for " + std::to_string(file.variables.size()) + " variables");
  for (std::size_t i = 0; i < file.polynomials.size(); ++i) {
    const Degree d = file.polynomials[i].total_degree();
    if (d.is_minus_infinity() || d.value() == 0)
      throw ParseError("component '" + file.names[i] + "' is constant; degree >= 1 required",
                       file.lines[i], 1);
  }
  return PolyMap(std::move(file.polynomials), std::move(file.variables));
}

std::string print_system(const PolyMap& f) {
  std::ostringstream out;
  out << "vars:";
  for (const auto& v : f.variable_names()) out << ' ' << v;
  out << '\n';
  for (std::size_t i = 0; i < f.n(); ++i)
    out << 'F' << (i + 1) << " = " << to_string(f[i], f.variable_names()) << '\n';
  return out.str();
}

}  // namespace lojinf
