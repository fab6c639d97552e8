#pragma once

#include "matchrb/lincomb.hpp"
#include "matchrb/word.hpp"

#include <compare>
#include <utility>

namespace matchrb {

/// Degree-lexicographic order on bracket-free words: letter count first,
/// then left to right by letter index. Throws std::domain_error if either
/// word contains a bracket.
std::strong_ordering compare_deg_lex(const Word& u, const Word& v);

/// The order ≤db on all bracketed words: P-degree, then P-breadth, then the
/// tuple (α_1, ů_1, …, α_r, ů_r, u_0, …, u_r) lexicographically, bodies
/// compared recursively and outer blocks by degree-lex.
std::strong_ordering compare_db(const Word& u, const Word& v);
std::strong_ordering compare_db(TokenSpan u, TokenSpan v);

/// A comparable view of a word exposing the quantities ≤db compares first.
/// Comparing keys agrees with compare_db on the underlying words.
class OrderKey {
 public:
  explicit OrderKey(TokenSpan tokens);

  std::size_t p_degree() const { return p_degree_; }
  std::size_t p_breadth() const { return p_breadth_; }
  TokenSpan tokens() const { return tokens_; }

  friend std::strong_ordering operator<=>(const OrderKey& a, const OrderKey& b);
  friend bool operator==(const OrderKey& a, const OrderKey& b) { return (a <=> b) == 0; }

 private:
  TokenSpan tokens_;
  std::size_t p_degree_ = 0;
  std::size_t p_breadth_ = 0;
};

/// Words are listed in descending ≤db order.
template <>
struct CanonicalOrder<Word> {
  bool operator()(const Word& a, const Word& b) const { return compare_db(a, b) > 0; }
};

/// ≤db-largest monomial with its coefficient. Throws std::invalid_argument
/// when v is zero or a scalar multiple of 1.
std::pair<Word, Rational> leading(const LinComb<Word>& v);

}  // namespace matchrb
