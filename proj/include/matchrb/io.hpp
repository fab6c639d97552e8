#pragma once

#include "matchrb/format.hpp"
#include "matchrb/forest.hpp"
#include "matchrb/lincomb.hpp"
#include "matchrb/word.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace matchrb {

/// A malformed or unresolvable configuration document.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"letters": [...], "operators": [{"name": ..., "weight": "p/q"}, ...]}
Signature signature_from_json(const nlohmann::json& doc);
Signature load_config(const std::string& path);

/// Letters x, y, z and operators a (weight 1), b (weight -1).
Signature default_config_signature();

/// A syntax error or unknown symbol; `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// expr := ['-'] term (('+'|'-') term)*
/// term := coeff | [coeff '*'] word
/// word := '1' | factor+
/// factor := letter | '[' word ']' '_' op | 'P_' op '(' word ')'
/// A bare coefficient stands for that multiple of 1.
LinComb<Word> parse_expression(std::string_view text, const Signature& sig);

/// Same grammar with forests as monomials:
/// forest := '1' | tree+ ;  tree := letter | op ['(' tree+ ')']
LinComb<Forest> parse_forest_expression(std::string_view text, const Signature& sig);

std::string to_latex(const Signature& sig, const LinComb<Word>& v);
std::string to_latex(const Signature& sig, const TensorComb<Word>& v);

/// Forests drawn root-down, one block per term.
std::string to_ascii_tree(const Signature& sig, const Forest& f);
std::string to_ascii_tree(const Signature& sig, const LinComb<Forest>& v);

nlohmann::json to_json(const Signature& sig, const LinComb<Word>& v);
nlohmann::json to_json(const Signature& sig, const LinComb<Forest>& v);
nlohmann::json to_json(const Signature& sig, const TensorComb<Word>& v);
nlohmann::json to_json(const Signature& sig, const TensorComb<Forest>& v);

}  // namespace matchrb
