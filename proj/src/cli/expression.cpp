#include "okaforge/cli/expression.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "okaforge/error.hpp"
#include "okaforge/numeric/roots.hpp"

namespace okaforge::cli {

namespace {

enum class Kind { Number, Name, Symbol, End };

struct Token {
  Kind kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < s.size()) {
    char c = s[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = k;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      out.push_back({Kind::Number, s.substr(start, k - start)});
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = k;
      while (k < s.size() && std::isalpha(static_cast<unsigned char>(s[k]))) ++k;
      out.push_back({Kind::Name, s.substr(start, k - start)});
    } else if (std::string("+-*/^(),").find(c) != std::string::npos) {
      out.push_back({Kind::Symbol, std::string(1, c)});
      ++k;
    } else {
      throw Error(ErrorCode::ParseError, "unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Kind::End, ""});
  return out;
}

// A rational function times pi^pi, or exp(lambda z) which admits no further
// arithmetic.
struct Value {
  RationalFunction r;
  int pi = 0;
  std::optional<ExpLinear> exp;
};

void no_exp(const Value& v) {
  if (v.exp) throw Error(ErrorCode::ParseError, "exp(...) must be the whole second component");
}

Value add(Value a, const Value& b, bool subtract) {
  no_exp(a);
  no_exp(b);
  if (b.r.is_zero()) return a;
  RationalFunction rb = subtract ? -b.r : b.r;
  if (a.r.is_zero()) return {rb, b.pi, std::nullopt};
  if (a.pi != b.pi) throw Error(ErrorCode::ParseError, "pi may only appear as a common factor");
  return {a.r + rb, a.pi, std::nullopt};
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

  Value expression() {
    Value v = term();
    while (is("+") || is("-")) {
      bool minus = next().text == "-";
      v = add(v, term(), minus);
    }
    return v;
  }

  bool is(const char* symbol) const { return tokens_[pos_].kind == Kind::Symbol && tokens_[pos_].text == symbol; }
  bool at_end() const { return tokens_[pos_].kind == Kind::End; }
  void expect(const char* symbol) {
    if (!is(symbol)) throw Error(ErrorCode::ParseError, std::string("expected '") + symbol + "' near '" + peek().text + "'");
    ++pos_;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  bool starts_primary() const {
    const Token& t = peek();
    return t.kind == Kind::Number || t.kind == Kind::Name || (t.kind == Kind::Symbol && t.text == "(");
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (is("*")) {
        ++pos_;
        v = multiply(v, unary());
      } else if (is("/")) {
        ++pos_;
        Value d = unary();
        no_exp(d);
        if (d.r.is_zero()) throw Error(ErrorCode::ParseError, "division by zero");
        no_exp(v);
        v = {v.r / d.r, v.pi - d.pi, std::nullopt};
      } else if (starts_primary()) {
        v = multiply(v, power());
      } else {
        return v;
      }
    }
  }

  static Value multiply(const Value& a, const Value& b) {
    no_exp(a);
    no_exp(b);
    return {a.r * b.r, a.pi + b.pi, std::nullopt};
  }

  Value unary() {
    if (is("-")) {
      ++pos_;
      Value v = unary();
      no_exp(v);
      return {-v.r, v.pi, std::nullopt};
    }
    if (is("+")) {
      ++pos_;
      return unary();
    }
    return power();
  }

  int exponent() {
    bool paren = is("(");
    if (paren) ++pos_;
    int sign = 1;
    if (is("-") || is("+")) sign = next().text == "-" ? -1 : 1;
    if (peek().kind != Kind::Number) throw Error(ErrorCode::ParseError, "exponent must be an integer");
    std::string digits = next().text;
    if (digits.size() > 6) throw Error(ErrorCode::ParseError, "exponent too large");
    if (paren) expect(")");
    return sign * std::stoi(digits);
  }

  Value power() {
    Value base = primary();
    if (is("^")) {
      ++pos_;
      int e = exponent();
      no_exp(base);
      if (base.r.is_zero() && e < 0) throw Error(ErrorCode::ParseError, "zero to a negative power");
      return {base.r.pow(e), base.pi * e, std::nullopt};
    }
    return base;
  }

  Value primary() {
    const Token& t = next();
    if (t.kind == Kind::Number) {
      return {RationalFunction(Polynomial::constant(GaussianRational(Rational(Integer(t.text))))), 0, std::nullopt};
    }
    if (t.kind == Kind::Name) {
      if (t.text == "z") return {RationalFunction::identity(), 0, std::nullopt};
      if (t.text == "i") return {RationalFunction(Polynomial::constant(GaussianRational::i())), 0, std::nullopt};
      if (t.text == "pi") return {RationalFunction(Polynomial::constant(1)), 1, std::nullopt};
      if (t.text == "exp") {
        expect("(");
        Value arg = expression();
        expect(")");
        return exponential(arg);
      }
      throw Error(ErrorCode::ParseError, "unknown name '" + t.text + "'");
    }
    if (t.kind == Kind::Symbol && t.text == "(") {
      Value v = expression();
      expect(")");
      return v;
    }
    throw Error(ErrorCode::ParseError, "unexpected '" + t.text + "'");
  }

  static Value exponential(const Value& arg) {
    no_exp(arg);
    const RationalFunction& r = arg.r;
    bool linear = r.is_polynomial() && r.num().degree() == 1 && r.num().coeff(0).is_zero();
    if (!linear || (arg.pi != 0 && arg.pi != 1)) {
      throw Error(ErrorCode::ParseError, "exp argument must be c*z or c*pi*z");
    }
    GaussianRational lambda = r.num().coeff(1) / r.den().leading();
    return {RationalFunction(), 0, ExpLinear{Scalar{lambda, arg.pi}}};
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

RationalFunction plain(const Value& v) {
  no_exp(v);
  if (v.pi != 0 && !v.r.is_zero()) throw Error(ErrorCode::ParseError, "pi is only allowed inside exp(...)");
  return v.r;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    std::size_t a = item.find_first_not_of(" \t");
    std::size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

}  // namespace

RationalFunction parse_rational_function(const std::string& text) {
  Parser p(text);
  Value v = p.expression();
  if (!p.at_end()) throw Error(ErrorCode::ParseError, "trailing input in '" + text + "'");
  return plain(v);
}

MapPair parse_map(const std::string& text) {
  Parser p(text);
  p.expect("(");
  Value first = p.expression();
  p.expect(",");
  Value second = p.expression();
  p.expect(")");
  if (!p.at_end()) throw Error(ErrorCode::ParseError, "trailing input after the map");
  MapPair map{plain(first), FactoredRational()};
  if (second.exp) {
    if (second.exp->lambda.is_zero()) throw Error(ErrorCode::InvalidSecondComponent, "exp(0*z) is constant");
    map.second = *second.exp;
  } else {
    RationalFunction g = plain(second);
    if (g.is_zero()) throw Error(ErrorCode::InvalidSecondComponent, "second component is zero");
    FactoredRational factored;
    if (!numeric::try_factor(g, factored)) {
      throw Error(ErrorCode::InvalidSecondComponent, "second component needs Gaussian rational zeros and poles");
    }
    map.second = factored;
  }
  if (map.first.is_constant() && !map.has_exp_second() && map.factored().is_constant()) {
    throw Error(ErrorCode::InvalidParameter, "both components are constant");
  }
  return map;
}

std::vector<GaussianRational> parse_points(const std::string& text) {
  std::vector<GaussianRational> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_gaussian(item));
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "not an integer: '" + item + "'");
    }
  }
  return out;
}

std::vector<Hole> parse_holes(const std::string& text) {
  std::vector<Hole> out;
  for (const auto& item : split(text, ';')) {
    std::size_t colon = item.rfind(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "hole needs center:radius, got '" + item + "'");
    out.push_back({parse_gaussian(item.substr(0, colon)), parse_rational(item.substr(colon + 1))});
  }
  return out;
}

}  // namespace okaforge::cli
