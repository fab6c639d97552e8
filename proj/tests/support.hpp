#pragma once

#include "matchrb/io.hpp"
#include "matchrb/signature.hpp"
#include "matchrb/word.hpp"

#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace support {

/// x, y, z with a (weight 1), b (weight -1), c (weight 1/2).
inline matchrb::Signature wide_signature() {
  return matchrb::Signature({"x", "y", "z"}, {{"a", matchrb::Rational(1)},
                                              {"b", matchrb::Rational(-1)},
                                              {"c", matchrb::Rational(1, 2)}});
}

inline matchrb::LinComb<matchrb::Word> lc(const matchrb::Signature& sig, std::string_view text) {
  return matchrb::parse_expression(text, sig);
}

inline matchrb::Word word(const matchrb::Signature& sig, std::string_view text) {
  const auto v = lc(sig, text);
  if (v.size() != 1 || v.begin()->second != 1)
    throw std::invalid_argument("not a single word: " + std::string(text));
  return v.begin()->first;
}

/// Random word of total degree exactly n over the first `letters` letters
/// and `operators` operators.
inline matchrb::Word random_word(std::mt19937_64& rng, std::size_t letters,
                                 std::size_t operators, std::size_t n) {
  std::vector<matchrb::Token> tokens;
  std::size_t left = n;
  std::vector<std::size_t> open_budget;  // remaining degree inside each open bracket
  while (left > 0 || !open_budget.empty()) {
    if (!open_budget.empty() && (open_budget.back() == 0 || rng() % 3 == 0)) {
      const std::size_t rest = open_budget.back();
      open_budget.pop_back();
      if (rest > 0 && !open_budget.empty()) open_budget.back() += rest;
      if (rest > 0 && open_budget.empty()) left += rest;
      tokens.push_back(matchrb::kClose);
      continue;
    }
    std::size_t& budget = open_budget.empty() ? left : open_budget.back();
    if (budget == 0) continue;
    --budget;
    if (rng() % 2 == 0) {
      tokens.push_back(static_cast<matchrb::Token>(rng() % letters));
    } else {
      tokens.push_back(
          matchrb::open_token(matchrb::Op{static_cast<std::uint32_t>(rng() % operators)}));
      const std::size_t inner = budget == 0 ? 0 : rng() % (budget + 1);
      budget -= inner;
      open_budget.push_back(inner);
    }
  }
  return matchrb::Word::from_tokens(std::move(tokens));
}

}  // namespace support
