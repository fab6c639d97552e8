#include "matchrb/io.hpp"

#include <cctype>
#include <fstream>

namespace matchrb {

namespace {

void check_symbol_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front())))
    throw ConfigError("symbol names must start with a letter: '" + name + "'");
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)))
      throw ConfigError("symbol names must be alphanumeric: '" + name + "'");
}

}  // namespace

Signature signature_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");
    std::vector<std::string> letters = doc.at("letters").get<std::vector<std::string>>();
    std::vector<OperatorSpec> operators;
    for (const auto& entry : doc.at("operators")) {
      const auto& weight = entry.at("weight");
      if (!weight.is_string()) throw ConfigError("operator weights must be strings such as \"1/2\"");
      operators.push_back({entry.at("name").get<std::string>(),
                           parse_rational(weight.get<std::string>())});
    }
    for (const auto& name : letters) check_symbol_name(name);
    for (const auto& op : operators) check_symbol_name(op.name);
    return Signature(std::move(letters), std::move(operators));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed configuration: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid configuration: ") + e.what());
  }
}

Signature load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration file '" + path + "'");
  try {
    return signature_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("malformed configuration: ") + e.what());
  }
}

Signature default_config_signature() {
  return Signature({"x", "y", "z"}, {{"a", 1}, {"b", -1}});
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  template <class Monomial>
  LinComb<Word> expression(Monomial&& monomial) {
    LinComb<Word> out;
    skip();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    for (;;) {
      term(out, negative, monomial);
      skip();
      if (at_end()) break;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        continue;
      }
      error("expected '+' or '-'");
    }
    return out;
  }

  std::vector<Token> word() {
    skip();
    if (peek() == '1' && !std::isdigit(static_cast<unsigned char>(peek(1)))) {
      ++pos_;
      return {};
    }
    std::vector<Token> tokens;
    factor(tokens);
    for (;;) {
      skip();
      if (at_end() || !starts_factor()) break;
      factor(tokens);
    }
    return tokens;
  }

  std::vector<Token> forest() {
    skip();
    if (peek() == '1' && !std::isdigit(static_cast<unsigned char>(peek(1)))) {
      ++pos_;
      return {};
    }
    std::vector<Token> tokens;
    tree(tokens);
    for (;;) {
      skip();
      if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) break;
      tree(tokens);
    }
    return tokens;
  }

  [[noreturn]] void error(const std::string& message) const { throw ParseError(message, pos_); }

 private:
  template <class Monomial>
  void term(LinComb<Word>& out, bool negative, Monomial& monomial) {
    skip();
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Rational value = number();
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        const std::size_t denominator_at = pos_;
        Rational d = number();
        if (d == 0) throw ParseError("zero denominator", denominator_at);
        value /= d;
        skip();
      }
      if (peek() != '*') {
        out.add_term(Word(), negative ? -value : value);
        return;
      }
      ++pos_;
      coeff = value;
    }
    std::vector<Token> tokens = monomial();
    out.add_term(Word::from_tokens(std::move(tokens)), negative ? -coeff : coeff);
  }

  Rational number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) error("expected a number");
    return Rational(std::string(text_.substr(start, pos_ - start)));
  }

  bool starts_factor() const {
    const char c = peek();
    return c == '[' || std::isalpha(static_cast<unsigned char>(c));
  }

  void factor(std::vector<Token>& tokens) {
    skip();
    if (peek() == '[') {
      ++pos_;
      std::vector<Token> body = word();
      expect(']');
      expect('_');
      const Op op = operator_name();
      tokens.push_back(open_token(op));
      tokens.insert(tokens.end(), body.begin(), body.end());
      tokens.push_back(kClose);
      return;
    }
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (name == "P" && peek() == '_') {
      ++pos_;
      const Op op = operator_name();
      expect('(');
      std::vector<Token> body = word();
      expect(')');
      tokens.push_back(open_token(op));
      tokens.insert(tokens.end(), body.begin(), body.end());
      tokens.push_back(kClose);
      return;
    }
    if (auto x = sig_.find_letter(name)) {
      tokens.push_back(static_cast<Token>(x->index));
      return;
    }
    if (sig_.find_operator(name))
      throw ParseError("operator '" + name + "' used as a letter", start);
    throw ParseError("unknown letter '" + name + "'", start);
  }

  void tree(std::vector<Token>& tokens) {
    skip();
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (auto x = sig_.find_letter(name)) {
      skip();
      if (peek() == '(') error("letter '" + name + "' cannot have children");
      tokens.push_back(static_cast<Token>(x->index));
      return;
    }
    auto op = sig_.find_operator(name);
    if (!op) throw ParseError("unknown symbol '" + name + "'", start);
    tokens.push_back(open_token(*op));
    skip();
    if (peek() == '(') {
      ++pos_;
      tree(tokens);
      for (;;) {
        skip();
        if (peek() == ')') break;
        tree(tokens);
      }
      ++pos_;
    }
    tokens.push_back(kClose);
  }

  Op operator_name() {
    skip();
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (auto op = sig_.find_operator(name)) return *op;
    throw ParseError("unknown operator '" + name + "'", start);
  }

  std::string identifier() {
    skip();
    const std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek()))) error("expected a name");
    while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip();
    if (peek() != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

LinComb<Word> parse_expression(std::string_view text, const Signature& sig) {
  Parser p(text, sig);
  return p.expression([&] { return p.word(); });
}

LinComb<Forest> parse_forest_expression(std::string_view text, const Signature& sig) {
  Parser p(text, sig);
  return theta(p.expression([&] { return p.forest(); }));
}

namespace {

void latex_span(const Signature& sig, TokenSpan tokens, std::string& out) {
  if (tokens.empty()) {
    out += "1";
    return;
  }
  bool first = true;
  for (const AtomView& atom : top_level_atoms(tokens)) {
    if (!first) out += " ";
    first = false;
    if (atom.bracket) {
      out += "\\lfloor ";
      latex_span(sig, atom.body, out);
      out += " \\rfloor_{" + sig.operator_name(Op{atom.symbol}) + "}";
    } else {
      out += sig.letter_name(Letter{atom.symbol});
    }
  }
}

std::string latex_coeff(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

template <class B, class F>
std::string latex_sum(const LinComb<B>& v, F&& monomial) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : v) {
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(c);
    const std::string m = monomial(b);
    if (m == "1") {
      out += latex_coeff(magnitude);
    } else {
      if (magnitude != 1) out += latex_coeff(magnitude) + " ";
      out += m;
    }
  }
  return out;
}

void ascii_tree(const Signature& sig, const Tree& t, const std::string& indent, bool root,
                bool last, std::string& out) {
  const Decoration& d = t.decoration();
  const std::string& label =
      d.is_operator() ? sig.operator_name(Op{d.index}) : sig.letter_name(Letter{d.index});
  out += root ? label + "\n" : indent + (last ? "└── " : "├── ") + label + "\n";
  const std::string next = root ? "" : indent + (last ? "    " : "│   ");
  const auto& children = t.children();
  for (std::size_t i = 0; i < children.size(); ++i)
    ascii_tree(sig, children[i], next, false, i + 1 == children.size(), out);
}

nlohmann::json tree_json(const Signature& sig, const Tree& t) {
  const Decoration& d = t.decoration();
  nlohmann::json node;
  node["label"] = d.is_operator() ? sig.operator_name(Op{d.index}) : sig.letter_name(Letter{d.index});
  node["kind"] = d.is_operator() ? "operator" : "letter";
  node["children"] = nlohmann::json::array();
  for (const Tree& c : t.children()) node["children"].push_back(tree_json(sig, c));
  return node;
}

nlohmann::json forest_json(const Signature& sig, const Forest& f) {
  nlohmann::json trees = nlohmann::json::array();
  for (const Tree& t : f.trees()) trees.push_back(tree_json(sig, t));
  return trees;
}

}  // namespace

std::string to_latex(const Signature& sig, const LinComb<Word>& v) {
  return latex_sum(v, [&](const Word& w) {
    std::string s;
    latex_span(sig, w.tokens(), s);
    return s;
  });
}

std::string to_latex(const Signature& sig, const TensorComb<Word>& v) {
  return latex_sum(v, [&](const std::pair<Word, Word>& p) {
    std::string s;
    latex_span(sig, p.first.tokens(), s);
    s += " \\otimes ";
    latex_span(sig, p.second.tokens(), s);
    return s;
  });
}

std::string to_ascii_tree(const Signature& sig, const Forest& f) {
  if (f.is_one()) return "1\n";
  std::string out;
  for (const Tree& t : f.trees()) ascii_tree(sig, t, "", true, true, out);
  return out;
}

std::string to_ascii_tree(const Signature& sig, const LinComb<Forest>& v) {
  if (v.is_zero()) return "0\n";
  std::string out;
  bool first = true;
  for (const auto& [f, c] : v) {
    if (!first) out += "\n";
    first = false;
    out += "coefficient " + to_string(c) + "\n" + to_ascii_tree(sig, f);
  }
  return out;
}

nlohmann::json to_json(const Signature& sig, const LinComb<Word>& v) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : v)
    terms.push_back({{"coeff", to_string(c)}, {"monomial", to_plain(sig, w)}});
  return {{"basis", "word"}, {"terms", terms}};
}

nlohmann::json to_json(const Signature& sig, const LinComb<Forest>& v) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [f, c] : v)
    terms.push_back({{"coeff", to_string(c)}, {"monomial", forest_json(sig, f)}});
  return {{"basis", "forest"}, {"terms", terms}};
}

nlohmann::json to_json(const Signature& sig, const TensorComb<Word>& v) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [p, c] : v)
    pairs.push_back({{"coeff", to_string(c)},
                     {"left", to_plain(sig, p.first)},
                     {"right", to_plain(sig, p.second)}});
  return {{"basis", "word"}, {"pairs", pairs}};
}

nlohmann::json to_json(const Signature& sig, const TensorComb<Forest>& v) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [p, c] : v)
    pairs.push_back({{"coeff", to_string(c)},
                     {"left", forest_json(sig, p.first)},
                     {"right", forest_json(sig, p.second)}});
  return {{"basis", "forest"}, {"pairs", pairs}};
}

}  // namespace matchrb
