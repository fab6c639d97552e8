#pragma once

#include "matchrb/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace matchrb {

/// Index of a generator letter in the signature's ordered alphabet X.
struct Letter {
  std::uint32_t index = 0;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Index of an operator in the signature's ordered operator set Ω.
struct Op {
  std::uint32_t index = 0;
  friend auto operator<=>(const Op&, const Op&) = default;
};

struct OperatorSpec {
  std::string name;
  Rational weight;
};

/// The alphabet X, the operator set Ω (both ordered by list position) and
/// the weight map Ω -> Q.
class Signature {
 public:
  /// Throws std::invalid_argument when Ω is empty, a name repeats, or a
  /// letter and an operator share a name.
  Signature(std::vector<std::string> letters, std::vector<OperatorSpec> operators);

  std::size_t letter_count() const { return letters_.size(); }
  std::size_t operator_count() const { return operators_.size(); }

  const std::string& letter_name(Letter x) const { return letters_.at(x.index); }
  const std::string& operator_name(Op op) const { return operators_.at(op.index).name; }
  const Rational& weight(Op op) const { return operators_.at(op.index).weight; }

  std::optional<Letter> find_letter(std::string_view name) const;
  std::optional<Op> find_operator(std::string_view name) const;

  const std::vector<std::string>& letters() const { return letters_; }
  const std::vector<OperatorSpec>& operators() const { return operators_; }

  /// Keeps the first `letters` letters and `operators` operators.
  Signature restricted(std::size_t letters, std::size_t operators) const;

  /// True when every weight is the same value.
  bool has_constant_weight() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<std::string> letters_;
  std::vector<OperatorSpec> operators_;
};

/// X = {x}, Ω = {a, b}, λ_a = 1, λ_b = -1.
Signature default_signature();

}  // namespace matchrb
