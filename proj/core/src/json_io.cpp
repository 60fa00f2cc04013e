#include "qjack/json_io.hpp"

#include <cctype>
#include <stdexcept>

namespace qjack {

namespace {

nlohmann::ordered_json poly_to_json(const IntPoly& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

IntPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial: expected an array");
  std::vector<BigInt> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) {
    if (!c.is_string()) throw std::invalid_argument("polynomial: coefficients are strings");
    coeffs.emplace_back(c.get<std::string>());
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace

nlohmann::ordered_json ratfun_to_json(const RatFun& f) {
  nlohmann::ordered_json j;
  j["num"] = poly_to_json(f.num());
  j["den"] = poly_to_json(f.den());
  return j;
}

RatFun ratfun_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw std::invalid_argument("coefficient: expected {num, den}");
  }
  return RatFun(poly_from_json(j["num"]), poly_from_json(j["den"]));
}

nlohmann::ordered_json symexpr_to_json(const SymExpr& f) {
  nlohmann::ordered_json j;
  j["basis"] = std::string(1, basis_char(f.basis()));
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [la, c] : f.terms()) {
    nlohmann::ordered_json t;
    t["partition"] = la.to_string();
    t["coeff"] = ratfun_to_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

SymExpr symexpr_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("terms")) {
    throw std::invalid_argument("expression: expected {basis, terms}");
  }
  std::string b = j["basis"].get<std::string>();
  if (b.size() != 1) throw std::invalid_argument("expression: bad basis tag");
  SymExpr out(basis_from_char(b[0]));
  if (!j["terms"].is_array()) throw std::invalid_argument("expression: terms must be an array");
  for (const auto& t : j["terms"]) {
    out.add_term(Partition::parse(t.at("partition").get<std::string>()),
                 ratfun_from_json(t.at("coeff")));
  }
  return out;
}

BigRat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (text.empty()) throw std::invalid_argument("rational: empty input");
      return BigRat(BigInt(text));
    }
    std::string num_text = text.substr(0, slash);
    std::string den_text = text.substr(slash + 1);
    if (num_text.empty() || den_text.empty())
      throw std::invalid_argument("rational: missing numerator or denominator");
    BigInt num(num_text);
    BigInt den(den_text);
    if (den == 0) throw std::domain_error("rational: zero denominator");
    return BigRat(num, den);
  } catch (const std::domain_error&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  }
}

namespace {

// Recursive-descent parser for field elements.
class RatFunParser {
public:
  explicit RatFunParser(const std::string& text) : s_(text) {}

  RatFun run() {
    RatFun v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

private:
  RatFun expr() {
    RatFun v = term();
    for (;;) {
      skip();
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  RatFun term() {
    RatFun v = unary();
    for (;;) {
      skip();
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        RatFun d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else if (pos_ < s_.size() &&
                 (s_[pos_] == 'a' || s_[pos_] == '(' || std::isdigit(peek()))) {
        v *= unary();  // juxtaposition
      } else {
        return v;
      }
    }
  }

  RatFun unary() {
    skip();
    if (eat('-')) return -unary();
    return power();
  }

  RatFun power() {
    RatFun base = primary();
    skip();
    if (!eat('^')) return base;
    skip();
    if (pos_ >= s_.size() || !std::isdigit(peek())) fail("exponent expected");
    long e = 0;
    while (pos_ < s_.size() && std::isdigit(peek())) {
      e = e * 10 + (s_[pos_++] - '0');
      if (e > 4096) fail("exponent too large");
    }
    RatFun v(1);
    for (long i = 0; i < e; ++i) v *= base;
    return v;
  }

  RatFun primary() {
    skip();
    if (eat('(')) {
      RatFun v = expr();
      skip();
      if (!eat(')')) fail("')' expected");
      return v;
    }
    if (pos_ < s_.size() && s_[pos_] == 'a') {
      ++pos_;
      return RatFun::alpha();
    }
    if (pos_ < s_.size() && std::isdigit(peek())) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(peek())) ++pos_;
      return RatFun(BigInt(s_.substr(start, pos_ - start)));
    }
    fail("value expected");
    return RatFun();  // unreachable
  }

  unsigned char peek() const { return static_cast<unsigned char>(s_[pos_]); }
  void skip() {
    while (pos_ < s_.size() && std::isspace(peek())) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("expression '" + s_ + "': " + why + " at offset " +
                                std::to_string(pos_));
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

RatFun parse_ratfun_text(const std::string& text) { return RatFunParser(text).run(); }

} // namespace qjack
