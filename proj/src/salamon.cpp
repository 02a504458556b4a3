#include "skt/salamon.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace skt {

namespace {

struct Term {
  double coeff;
  int p, q;  // e^p wedge e^q, 1-based as written
};

struct Parser {
  const std::string& s;
  const ParamMap& params;
  size_t pos = 0;

  explicit Parser(const std::string& text, const ParamMap& pm) : s(text), params(pm) {}

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "syntax error at position " << pos << ": " << msg;
    throw InputError(os.str());
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  // Maximal run of characters that can appear inside a term.
  std::string run() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '.' || s[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected a term");
    return s.substr(start, pos - start);
  }

  Term parse_term(double sign) {
    size_t term_pos = pos;
    std::string r = run();
    double coeff = sign;
    std::string digits;
    if (r.size() == 2 && std::isdigit(static_cast<unsigned char>(r[0])) &&
        std::isdigit(static_cast<unsigned char>(r[1]))) {
      digits = r;
    } else {
      size_t dot = r.rfind('.');
      if (dot == std::string::npos || dot + 3 != r.size()) {
        pos = term_pos;
        fail("term must be 'ij' or 'coeff.ij'");
      }
      digits = r.substr(dot + 1);
      std::string head = r.substr(0, dot);
      if (head.empty()) {
        pos = term_pos;
        fail("empty coefficient");
      }
      if (std::isdigit(static_cast<unsigned char>(head[0])) || head[0] == '.') {
        char* end = nullptr;
        double v = std::strtod(head.c_str(), &end);
        if (end != head.c_str() + head.size()) {
          pos = term_pos;
          fail("bad numeric coefficient '" + head + "'");
        }
        coeff *= v;
      } else {
        auto it = params.find(head);
        if (it == params.end()) throw InputError("unbound parameter '" + head + "'");
        coeff *= it->second;
      }
    }
    if (!std::isdigit(static_cast<unsigned char>(digits[0])) ||
        !std::isdigit(static_cast<unsigned char>(digits[1]))) {
      pos = term_pos;
      fail("expected two index digits");
    }
    Term t{coeff, digits[0] - '0', digits[1] - '0'};
    if (t.p == 0 || t.q == 0 || t.p == t.q) {
      pos = term_pos;
      fail("indices must be distinct and in 1..9");
    }
    return t;
  }

  // entry := 0 | term (('+'|'-') term)*
  std::vector<Term> parse_entry() {
    std::vector<Term> out;
    skip_ws();
    if (peek() == '0') {
      size_t save = pos;
      ++pos;
      char c = peek();
      if (c == ',' || c == ')') return out;
      pos = save;  // e.g. "0.5.21"
    }
    double sign = 1.0;
    if (peek() == '-') {
      sign = -1.0;
      ++pos;
    } else if (peek() == '+') {
      ++pos;
    }
    out.push_back(parse_term(sign));
    while (true) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos;
        out.push_back(parse_term(c == '-' ? -1.0 : 1.0));
      } else {
        break;
      }
    }
    return out;
  }
};

}  // namespace

LieAlgebra parse_salamon(const std::string& text, const ParamMap& params, const Tol& tol) {
  Parser p(text, params);
  p.expect('(');
  std::vector<std::vector<Term>> entries;
  entries.push_back(p.parse_entry());
  while (p.peek() == ',') {
    ++p.pos;
    entries.push_back(p.parse_entry());
  }
  p.expect(')');
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing characters");

  const int n = static_cast<int>(entries.size());
  if (n > 9) throw InputError("tuple dimension exceeds 9 (digit-pair indices)");
  LieAlgebra l(n);
  for (int m = 0; m < n; ++m)
    for (const Term& t : entries[m]) {
      if (t.p > n || t.q > n)
        throw InputError("index exceeds tuple dimension in entry " + std::to_string(m + 1));
      // de^m = coeff e^p ^ e^q  contributes  c^m_{pq} = -coeff.
      Vec v = Vec::Zero(n);
      v(m) = -t.coeff;
      l.add_bracket(t.p - 1, t.q - 1, v);
    }
  double jr = jacobi_residual(l);
  if (jr > tol.eps) {
    std::ostringstream os;
    os << "tuple violates the Jacobi identity (residual " << jr << ")";
    throw PreconditionError(os.str());
  }
  return l;
}

namespace {

std::string format_coeff(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find('e') != std::string::npos || s.find('E') != std::string::npos) {
    std::snprintf(buf, sizeof buf, "%.17f", v);
    s = buf;
  }
  return s;
}

}  // namespace

std::string print_salamon(const LieAlgebra& l) {
  const int n = l.dim();
  if (n > 9) throw InputError("print_salamon: dimension exceeds 9");
  std::ostringstream os;
  os << '(';
  for (int m = 0; m < n; ++m) {
    if (m) os << ',';
    bool any = false;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        double de = -l.bracket_basis(i, j)(m);  // coefficient of e^{i+1} ^ e^{j+1}
        if (de == 0.0) continue;
        if (any && de > 0) os << '+';
        if (de == 1.0) {
        } else if (de == -1.0) {
          os << '-';
        } else {
          os << format_coeff(de) << '.';
        }
        os << (i + 1) << (j + 1);
        any = true;
      }
    if (!any) os << '0';
  }
  os << ')';
  return os.str();
}

namespace {

double need(const ParamMap& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw InputError("missing parameter '" + name + "'");
  return it->second;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw InputError("parameter out of range: " + what);
}

}  // namespace

LieAlgebra catalog(const std::string& name, const ParamMap& params, const Tol& tol) {
  if (name == "abelian") {
    int n = static_cast<int>(std::lround(need(params, "n")));
    require(n >= 1, "abelian requires n >= 1");
    return LieAlgebra::abelian(n);
  }
  if (name == "R") return LieAlgebra::abelian(1);
  if (name == "aff") return parse_salamon("(0,21)", {}, tol);
  if (name == "h" || name == "h3" || name == "h5" || name == "h7") {
    int k;
    if (name == "h")
      k = static_cast<int>(std::lround(need(params, "k")));
    else
      k = (name[1] - '0' - 1) / 2;
    require(k >= 1 && k <= 4, "h(2k+1) requires 1 <= k <= 4");
    std::string t = "(";
    for (int i = 0; i < 2 * k; ++i) t += "0,";
    for (int i = 1; i <= k; ++i) {
      if (i > 1) t += "+";
      t += std::to_string(2 * i) + std::to_string(2 * i - 1);
    }
    t += ")";
    return parse_salamon(t, {}, tol);
  }
  if (name == "r3p") {
    double lam = need(params, "lambda");
    require(lam >= 0, "r3p requires lambda >= 0");
    return parse_salamon("(0,lambda.21+31,-21+lambda.31)", {{"lambda", lam}}, tol);
  }
  if (name == "r4") {
    double mu = need(params, "mu"), lam = need(params, "lambda");
    require(std::abs(lam) > 0 && std::abs(lam) <= std::abs(mu) && std::abs(mu) <= 1,
            "r4 requires 0 < |lambda| <= |mu| <= 1");
    return parse_salamon("(0,21,mu.31,lambda.41)", {{"mu", mu}, {"lambda", lam}}, tol);
  }
  if (name == "r4p") {
    double mu = need(params, "mu"), lam = need(params, "lambda");
    require(mu > 0, "r4p requires mu > 0");
    return parse_salamon("(0,mu.21,lambda.31+41,-31+lambda.41)", {{"mu", mu}, {"lambda", lam}},
                         tol);
  }
  if (name == "g5_14") {
    double a = need(params, "alpha");
    require(a >= 0, "g5_14 requires alpha >= 0");
    return parse_salamon("(0,0,21,alpha.41+51,-41+alpha.51)", {{"alpha", a}}, tol);
  }
  if (name == "g5_17") {
    double a = need(params, "alpha"), b = need(params, "beta"), c = need(params, "gamma");
    require(a >= 0 && c != 0, "g5_17 requires alpha >= 0, gamma != 0");
    return parse_salamon("(0,alpha.21+31,-21+alpha.31,beta.41+gamma.51,-gamma.41+alpha.51)",
                         {{"alpha", a}, {"beta", b}, {"gamma", c}}, tol);
  }
  if (name == "g6_1") {
    double a = need(params, "alpha"), b = need(params, "beta"), c = need(params, "gamma"),
           d = need(params, "delta");
    require(std::abs(d) > 0 && std::abs(d) <= std::abs(c) && std::abs(c) <= std::abs(b) &&
                std::abs(b) <= std::abs(a) && std::abs(a) <= 1,
            "g6_1 requires 0 < |delta| <= |gamma| <= |beta| <= |alpha| <= 1");
    return parse_salamon("(0,21,alpha.31,beta.41,gamma.51,delta.61)",
                         {{"alpha", a}, {"beta", b}, {"gamma", c}, {"delta", d}}, tol);
  }
  if (name == "g6_8") {
    double a = need(params, "alpha"), b = need(params, "beta"), c = need(params, "gamma"),
           d = need(params, "delta");
    require(std::abs(c) > 0 && std::abs(c) <= std::abs(b) && std::abs(b) <= std::abs(a),
            "g6_8 requires 0 < |gamma| <= |beta| <= |alpha|");
    return parse_salamon("(0,alpha.21,beta.31,gamma.41,delta.51+61,-51+delta.61)",
                         {{"alpha", a}, {"beta", b}, {"gamma", c}, {"delta", d}}, tol);
  }
  if (name == "g6_11") {
    double a = need(params, "alpha"), b = need(params, "beta"), c = need(params, "gamma"),
           d = need(params, "delta");
    require(a * d != 0, "g6_11 requires alpha*delta != 0");
    return parse_salamon("(0,alpha.21,beta.31+41,-31+beta.41,gamma.51+delta.61,-delta.51+gamma.61)",
                         {{"alpha", a}, {"beta", b}, {"gamma", c}, {"delta", d}}, tol);
  }
  if (name == "n37D") return parse_salamon("(0,0,0,0,12+34,13,24)", {}, tol);
  throw InputError("unknown catalog name '" + name + "'");
}

LieAlgebra catalog_expression(const std::string& target, const ParamMap& params, const Tol& tol) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : target) {
    if (c == '+') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  LieAlgebra sum;
  bool first = true;
  for (const std::string& part : parts) {
    if (part.empty()) throw InputError("empty term in catalog expression");
    size_t i = 0;
    int mult = 0;
    while (i < part.size() && std::isdigit(static_cast<unsigned char>(part[i]))) {
      mult = 10 * mult + (part[i] - '0');
      ++i;
    }
    if (mult == 0) mult = 1;
    std::string name = part.substr(i);
    int power = 1;
    size_t caret = name.find('^');
    if (caret != std::string::npos) {
      power = std::atoi(name.substr(caret + 1).c_str());
      name = name.substr(0, caret);
      if (power < 1) throw InputError("bad power in catalog expression");
    }
    LieAlgebra term =
        (name == "R") ? LieAlgebra::abelian(power) : catalog(name, params, tol);
    for (int rep = 0; rep < mult; ++rep) {
      if (first) {
        sum = term;
        first = false;
      } else {
        sum = direct_sum(sum, term);
      }
    }
  }
  return sum;
}

bool fingerprint_match(const LieAlgebra& l, const std::string& target, const ParamMap& params,
                       const Tol& tol) {
  return series(l, tol) == series(catalog_expression(target, params, tol), tol);
}

}  // namespace skt
