#include "symspace/group_template.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

#include "symspace/error.hpp"

namespace symspace {

namespace {

// c + Σ coeff[v]·v
struct Linear {
  long constant = 0;
  std::map<char, long> coeff;

  Linear& operator+=(const Linear& o) {
    constant += o.constant;
    for (const auto& [v, c] : o.coeff) coeff[v] += c;
    return *this;
  }
  Linear scaled(long k) const {
    Linear out;
    out.constant = constant * k;
    for (const auto& [v, c] : coeff) out.coeff[v] = c * k;
    return out;
  }
};

struct Factor {
  std::string family;
  std::vector<std::string> args;
  int power = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  std::vector<Factor> factors() {
    std::vector<Factor> out;
    for (;;) {
      out.push_back(factor());
      skip_space();
      if (pos_ == s_.size()) break;
      if (s_.compare(pos_, 2, "×") == 0) {
        pos_ += std::string("×").size();
      } else if (s_[pos_] == 'x') {
        ++pos_;
      } else {
        fail("expected ×");
      }
    }
    return out;
  }

 private:
  Factor factor() {
    skip_space();
    Factor f;
    while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*')) f.family += s_[pos_++];
    if (f.family.empty()) fail("expected a group name");
    expect('(');
    std::string arg;
    int depth = 0;
    while (pos_ < s_.size()) {
      const char c = s_[pos_++];
      if (c == '(') ++depth;
      if (c == ')' && depth-- == 0) break;
      if (c == ',' && depth == 0) {
        f.args.push_back(arg);
        arg.clear();
        continue;
      }
      arg += c;
    }
    f.args.push_back(arg);
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
      f.power = s_[pos_++] - '0';
    }
    return f;
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_space() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, "group template '" + s_ + "': " + what);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

// Linear expressions: terms like 2, n, 2n, 2(k+l), joined by + and -.
Linear parse_linear(const std::string& s, std::size_t& pos);

Linear parse_term(const std::string& s, std::size_t& pos) {
  long k = 1;
  bool has_number = false;
  if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    k = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) k = 10 * k + (s[pos++] - '0');
    has_number = true;
  }
  if (pos < s.size() && s[pos] == '(') {
    ++pos;
    Linear inner = parse_linear(s, pos);
    if (pos >= s.size() || s[pos] != ')') throw Error(ErrorKind::Parse, "unbalanced parenthesis in '" + s + "'");
    ++pos;
    return inner.scaled(k);
  }
  if (pos < s.size() && std::islower(static_cast<unsigned char>(s[pos]))) {
    Linear out;
    out.coeff[s[pos++]] = k;
    return out;
  }
  if (!has_number) throw Error(ErrorKind::Parse, "bad expression '" + s + "'");
  Linear out;
  out.constant = k;
  return out;
}

Linear parse_linear(const std::string& s, std::size_t& pos) {
  Linear out;
  long sign = 1;
  for (;;) {
    out += parse_term(s, pos).scaled(sign);
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      sign = s[pos++] == '+' ? 1 : -1;
      continue;
    }
    return out;
  }
}

Linear parse_expression(const std::string& s) {
  std::size_t pos = 0;
  Linear out = parse_linear(s, pos);
  if (pos != s.size()) throw Error(ErrorKind::Parse, "trailing characters in '" + s + "'");
  return out;
}

std::optional<Ring> ring_letter(const std::string& s) {
  if (s == "R") return Ring::R;
  if (s == "C") return Ring::C;
  if (s == "H") return Ring::H;
  return std::nullopt;
}

Linear substitute(const Linear& e, const Bindings& b) {
  Linear out;
  out.constant = e.constant;
  for (const auto& [v, c] : e.coeff) {
    if (c == 0) continue;
    auto it = b.find(v);
    if (it == b.end())
      out.coeff[v] += c;
    else
      out.constant += c * it->second;
  }
  return out;
}

std::size_t value(const std::string& arg, const Bindings& b) {
  const Linear e = substitute(parse_expression(arg), b);
  for (const auto& [v, c] : e.coeff)
    if (c != 0) throw Error(ErrorKind::BadParams, std::string("unbound parameter '") + v + "'");
  if (e.constant < 0) throw Error(ErrorKind::BadParams, "negative group parameter in '" + arg + "'");
  return static_cast<std::size_t>(e.constant);
}

std::string render_linear(const Linear& e) {
  std::string out;
  for (const auto& [v, c] : e.coeff) {
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? "+" : "-";
    else if (c < 0) out += "-";
    const long a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a);
    out += v;
  }
  if (e.constant != 0 || out.empty()) {
    if (out.empty()) return std::to_string(e.constant);
    out = std::to_string(e.constant) + (out[0] == '-' ? "" : "+") + out;
  }
  return out;
}

GroupLabel build_label(const Factor& f, const Bindings& b) {
  auto arg = [&](std::size_t t) -> std::size_t {
    if (t >= f.args.size()) throw Error(ErrorKind::Parse, "missing argument for " + f.family);
    return value(f.args[t], b);
  };
  const std::optional<Ring> second = f.args.size() > 1 ? ring_letter(f.args[1]) : std::nullopt;
  if (f.family == "GL") {
    if (!second) throw Error(ErrorKind::Parse, "GL needs a ring");
    return gl(*second, arg(0));
  }
  if (f.family == "O") return second ? complex_orthogonal(arg(0)) : orthogonal(arg(0), arg(1));
  if (f.family == "U") return unitary(arg(0), arg(1));
  if (f.family == "Sp") {
    if (!second) return quaternion_unitary(arg(0), arg(1));
    return second == Ring::R ? real_symplectic(arg(0)) : complex_symplectic(arg(0));
  }
  if (f.family == "SO*") return so_star(arg(0));
  throw Error(ErrorKind::Parse, "unknown group family '" + f.family + "'");
}

}  // namespace

GroupName evaluate_template(const std::string& tmpl, const Bindings& b) {
  GroupName out;
  for (const auto& f : Parser(tmpl).factors())
    for (int t = 0; t < f.power; ++t) out.push_back(build_label(f, b));
  return out;
}

std::string render_template(const std::string& tmpl, const Bindings& b) {
  std::string out;
  for (const auto& f : Parser(tmpl).factors()) {
    std::string one = f.family + "(";
    for (std::size_t t = 0; t < f.args.size(); ++t) {
      if (t) one += ",";
      const std::string& a = f.args[t];
      const bool bound = std::any_of(a.begin(), a.end(), [&](char c) { return b.count(c) > 0; });
      one += ring_letter(a) || !bound ? a : render_linear(substitute(parse_expression(a), b));
    }
    one += ")";
    for (int t = 0; t < f.power; ++t) out += (out.empty() ? "" : "×") + one;
  }
  return out;
}

}  // namespace symspace
