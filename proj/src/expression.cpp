#include "bvforms/expression.hpp"

#include <cctype>
#include <vector>

#include "bvforms/errors.hpp"
#include "bvforms/operators.hpp"

namespace bvf {

namespace {

enum class TokenType { Integer, Generator, Hbar, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  TokenType type;
  std::size_t pos;
  std::string text;
  GeneratorId gen{GeneratorKind::X, 0};
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({TokenType::Integer, start, std::string(s.substr(start, i - start))});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
      const std::string name(s.substr(start, i - start));
      const std::size_t digits = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      const std::string index = std::string(s.substr(digits, i - digits));
      if (name == "h" && index.empty()) {
        out.push_back({TokenType::Hbar, start, "h"});
        continue;
      }
      GeneratorKind kind;
      if (name == "x") kind = GeneratorKind::X;
      else if (name == "p") kind = GeneratorKind::P;
      else if (name == "dx") kind = GeneratorKind::DX;
      else if (name == "dp") kind = GeneratorKind::DP;
      else throw ParseError("unknown identifier '" + name + index + "'", start);
      if (index.empty()) throw ParseError("generator '" + name + "' needs an index", start);
      if (index.size() > 3 || std::stoi(index) == 0)
        throw ParseError("generator index '" + index + "' out of range", digits);
      Token t{TokenType::Generator, start, name + index};
      t.gen = {kind, std::stoi(index)};
      out.push_back(t);
      continue;
    }
    TokenType type;
    switch (c) {
      case '+': type = TokenType::Plus; break;
      case '-': type = TokenType::Minus; break;
      case '*': type = TokenType::Star; break;
      case '/': type = TokenType::Slash; break;
      case '^': type = TokenType::Caret; break;
      case '(': type = TokenType::LParen; break;
      case ')': type = TokenType::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({type, start, std::string(1, c)});
    ++i;
  }
  out.push_back({TokenType::End, s.size(), ""});
  return out;
}

HbarForm multiply(const HbarForm& a, const HbarForm& b) {
  if (a.is_zero() || b.is_zero()) return HbarForm(a.n());
  std::vector<SuperForm> levels(a.levels().size() + b.levels().size() - 1, SuperForm(a.n()));
  for (std::size_t i = 0; i < a.levels().size(); ++i)
    for (std::size_t j = 0; j < b.levels().size(); ++j)
      levels[i + j] += mul(a.levels()[i], b.levels()[j]);
  return HbarForm(a.n(), std::move(levels));
}

HbarForm scaled(const HbarForm& a, const Scalar& c) {
  std::vector<SuperForm> levels;
  for (const auto& level : a.levels()) levels.push_back(level * c);
  return HbarForm(a.n(), std::move(levels));
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, int n) : tokens_(std::move(tokens)), n_(n) {}

  HbarForm parse_all() {
    HbarForm result = expr();
    if (peek().type != TokenType::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return result;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  bool accept(TokenType t) {
    if (peek().type != t) return false;
    ++pos_;
    return true;
  }

  HbarForm expr() {
    HbarForm acc = term();
    for (;;) {
      if (accept(TokenType::Plus)) acc = acc + term();
      else if (accept(TokenType::Minus)) acc = acc - term();
      else return acc;
    }
  }

  HbarForm term() {
    HbarForm acc = unary();
    while (accept(TokenType::Star)) acc = multiply(acc, unary());
    return acc;
  }

  HbarForm unary() {
    if (accept(TokenType::Minus)) return scaled(unary(), -1);
    return power();
  }

  HbarForm power() {
    HbarForm base = atom();
    if (!accept(TokenType::Caret)) return base;
    const Token& t = next();
    if (t.type != TokenType::Integer) throw ParseError("expected integer exponent", t.pos);
    if (t.text.size() > 5) throw ParseError("exponent too large", t.pos);
    int k = std::stoi(t.text);
    HbarForm result(SuperForm::constant(n_, 1));
    while (k-- > 0) result = multiply(result, base);
    return result;
  }

  HbarForm atom() {
    const Token& t = next();
    switch (t.type) {
      case TokenType::Integer: {
        std::string text = t.text;
        if (accept(TokenType::Slash)) {
          const Token& den = next();
          if (den.type != TokenType::Integer) throw ParseError("expected denominator", den.pos);
          if (mpz_class(den.text) == 0) throw ParseError("zero denominator", den.pos);
          text += "/" + den.text;
        }
        return HbarForm(SuperForm::constant(n_, parse_scalar(text)));
      }
      case TokenType::Generator:
        if (t.gen.index > n_)
          throw ParseError("generator " + t.text + " out of range for n = " + std::to_string(n_), t.pos);
        return HbarForm(SuperForm::generator(n_, t.gen));
      case TokenType::Hbar:
        return HbarForm(n_, {SuperForm(n_), SuperForm::constant(n_, 1)});
      case TokenType::LParen: {
        HbarForm inner = expr();
        if (!accept(TokenType::RParen)) throw ParseError("expected ')'", peek().pos);
        return inner;
      }
      case TokenType::End:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int n_;
};

std::string power_text(const std::string& base, int e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

// Appends the terms of f to out, each multiplied by the prefix (e.g. "h^2").
void append_terms(std::string& out, const SuperForm& f, const std::string& prefix) {
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c < 0;
    const Scalar magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::vector<std::string> factors;
    if (magnitude != 1) factors.push_back(to_string(magnitude));
    if (!prefix.empty()) factors.push_back(prefix);
    const std::string mono = print(m);
    if (mono != "1") factors.push_back(mono);
    if (factors.empty()) factors.push_back("1");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "*";
      out += factors[i];
    }
  }
}

}  // namespace

int max_generator_index(std::string_view text) {
  int best = 0;
  for (const Token& t : tokenize(text))
    if (t.type == TokenType::Generator) best = std::max(best, t.gen.index);
  return best;
}

HbarForm parse_hbar(std::string_view text, std::optional<int> n) {
  std::vector<Token> tokens = tokenize(text);
  int width = 1;
  for (const Token& t : tokens)
    if (t.type == TokenType::Generator) width = std::max(width, t.gen.index);
  if (n && (*n < 1 || *n > kMaxPairs))
    throw InvalidArgument("n must lie in 1.." + std::to_string(kMaxPairs));
  if (!n && width > kMaxPairs) {
    for (const Token& t : tokens)
      if (t.type == TokenType::Generator && t.gen.index > kMaxPairs)
        throw ParseError("generator " + t.text + " exceeds the supported n", t.pos);
  }
  return Parser(std::move(tokens), n.value_or(width)).parse_all();
}

SuperForm parse(std::string_view text, std::optional<int> n) {
  HbarForm z = parse_hbar(text, n);
  if (z.levels().size() > 1) {
    const std::size_t pos = text.find('h');
    throw ParseError("h is not allowed in a plain form", pos == std::string_view::npos ? 0 : pos);
  }
  return z.level(0);
}

std::string print(const Monomial& m) {
  std::vector<std::string> factors;
  for (GeneratorKind kind : {GeneratorKind::X, GeneratorKind::P, GeneratorKind::DX, GeneratorKind::DP}) {
    for (int i = 1; i <= kMaxPairs; ++i) {
      const GeneratorId g{kind, i};
      if (const int e = m.exponent(g)) factors.push_back(power_text(to_string(g), e));
    }
  }
  if (factors.empty()) return "1";
  std::string out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out += "*" + factors[i];
  return out;
}

std::string print(const SuperForm& f) {
  std::string out;
  append_terms(out, f, "");
  return out.empty() ? "0" : out;
}

std::string print(const HbarForm& z) {
  std::string out;
  for (std::size_t j = 0; j < z.levels().size(); ++j)
    append_terms(out, z.levels()[j], j == 0 ? "" : power_text("h", static_cast<int>(j)));
  return out.empty() ? "0" : out;
}

nlohmann::json to_json(const SuperForm& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : f.terms())
    out.push_back({{"monomial", print(m)}, {"coeff", to_fraction_string(c)}});
  return out;
}

SuperForm superform_from_json(const nlohmann::json& j, int n) {
  if (!j.is_array()) throw InvalidArgument("expected a JSON array of terms");
  SuperForm out(n);
  for (const auto& record : j) {
    if (!record.contains("monomial") || !record.contains("coeff"))
      throw InvalidArgument("term record needs 'monomial' and 'coeff'");
    SuperForm mono = parse(record.at("monomial").get<std::string>(), n);
    out += mono * parse_scalar(record.at("coeff").get<std::string>());
  }
  return out;
}

}  // namespace bvf
