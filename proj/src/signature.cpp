#include "matchrb/signature.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace matchrb {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_integer = [](std::string_view digits, bool allow_sign) {
    if (allow_sign && !digits.empty() && (digits[0] == '-' || digits[0] == '+'))
      digits.remove_prefix(1);
    return !digits.empty() &&
           std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw std::invalid_argument("malformed rational '" + s + "'");
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Signature::Signature(std::vector<std::string> letters, std::vector<OperatorSpec> operators)
    : letters_(std::move(letters)), operators_(std::move(operators)) {
  if (operators_.empty()) throw std::invalid_argument("signature needs at least one operator");
  std::set<std::string> seen;
  for (const auto& name : letters_)
    if (name.empty() || !seen.insert(name).second)
      throw std::invalid_argument("duplicate or empty symbol '" + name + "'");
  for (const auto& op : operators_)
    if (op.name.empty() || !seen.insert(op.name).second)
      throw std::invalid_argument("duplicate or empty symbol '" + op.name + "'");
}

std::optional<Letter> Signature::find_letter(std::string_view name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] == name) return Letter{static_cast<std::uint32_t>(i)};
  return std::nullopt;
}

std::optional<Op> Signature::find_operator(std::string_view name) const {
  for (std::size_t i = 0; i < operators_.size(); ++i)
    if (operators_[i].name == name) return Op{static_cast<std::uint32_t>(i)};
  return std::nullopt;
}

Signature Signature::restricted(std::size_t letters, std::size_t operators) const {
  if (letters > letters_.size() || operators > operators_.size())
    throw std::invalid_argument("signature has fewer symbols than requested");
  return Signature({letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(letters)},
                   {operators_.begin(), operators_.begin() + static_cast<std::ptrdiff_t>(operators)});
}

bool Signature::has_constant_weight() const {
  return std::all_of(operators_.begin(), operators_.end(),
                     [&](const OperatorSpec& op) { return op.weight == operators_.front().weight; });
}

Signature default_signature() {
  return Signature({"x"}, {{"a", Rational(1)}, {"b", Rational(-1)}});
}

}  // namespace matchrb
