#pragma once

#include "matchrb/signature.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace matchrb {

/// Flat encoding of a bracketed word. A letter is its index (>= 0), an
/// opening bracket ⌊·⌋_ω is `open_token(ω)` and every bracket is closed by
/// `kClose`. The encoding of a word is unique, so token equality is word
/// equality.
using Token = std::int32_t;

inline constexpr Token kClose = -1;
inline constexpr Token kHole = std::numeric_limits<Token>::min();

constexpr Token open_token(Op op) { return -2 - static_cast<Token>(op.index); }
constexpr bool is_letter_token(Token t) { return t >= 0; }
constexpr bool is_open_token(Token t) { return t <= -2 && t != kHole; }
constexpr Op op_of(Token t) { return Op{static_cast<std::uint32_t>(-2 - t)}; }

using TokenSpan = std::span<const Token>;

/// One top-level atom of a token span: a letter, or a bracket with its body.
struct AtomView {
  bool bracket = false;
  std::uint32_t symbol = 0;  ///< letter index, or operator index for brackets
  TokenSpan whole;           ///< the atom's tokens
  TokenSpan body;            ///< bracket body (empty for letters)
};

/// Splits a well-formed span into its top-level atoms.
std::vector<AtomView> top_level_atoms(TokenSpan tokens);

/// Index one past the atom starting at `pos`.
std::size_t atom_end(TokenSpan tokens, std::size_t pos);

/// An Ω-bracketed word; the empty word is the identity 1.
class Word {
 public:
  Word() = default;

  static Word letter(Letter x);
  static Word bracket(Op op, const Word& body);
  /// Throws std::invalid_argument unless the tokens are balanced and hole-free.
  static Word from_tokens(std::vector<Token> tokens);

  TokenSpan tokens() const { return {data_.data(), size_}; }
  bool is_one() const { return size_ == 0; }
  std::vector<AtomView> atoms() const { return top_level_atoms(tokens()); }

  /// Integer sequence whose lexicographic order is ≤db; empty for 1.
  std::span<const std::int32_t> order_key() const {
    return {data_.data() + size_, data_.size() - size_};
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  explicit Word(std::vector<Token> tokens);
  // the tokens followed by the order key
  std::vector<Token> data_;
  std::size_t size_ = 0;

  friend Word concat(const Word& a, const Word& b);
  friend Word word_from_span(TokenSpan tokens);
};

/// Appends the ≤db sort key of a well-formed span: P-degree, P-breadth,
/// then (operator, key of body) per top-level bracket, then (length,
/// letters) per bracket-free block. The encoding is self-delimiting, so
/// lexicographic comparison of keys agrees with ≤db.
void append_order_key(TokenSpan tokens, std::vector<std::int32_t>& key);

/// Copies a span known to be a well-formed word (no validation).
Word word_from_span(TokenSpan tokens);

Word concat(const Word& a, const Word& b);

/// Throws std::invalid_argument if a symbol is outside the signature.
void validate(const Signature& sig, const Word& w);

std::size_t depth(const Word& w);
std::size_t depth(TokenSpan tokens);

struct WordStatistics {
  std::size_t breadth = 0;
  std::size_t total_degree = 0;
  std::size_t p_degree = 0;
  std::size_t p_breadth = 0;
};

WordStatistics statistics(const Word& w);
std::size_t total_degree(const Word& w);

/// Letter count of a bracket-free word; std::domain_error otherwise.
std::size_t x_degree(const Word& w);

/// u_0 ⌊ů_1⌋_{α_1} u_1 ⋯ ⌊ů_r⌋_{α_r} u_r with bracket-free u_i.
struct Factorization {
  std::vector<Word> outer;                        ///< r + 1 blocks
  std::vector<std::pair<Op, Word>> brackets;      ///< r brackets

  Word reassemble() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

Factorization factorize(const Word& w);

/// A bracketed word with exactly one hole ⋆, anywhere in the tree.
class StarWord {
 public:
  /// The bare hole ⋆.
  StarWord() : tokens_{kHole} {}

  /// Throws std::invalid_argument unless balanced with exactly one hole.
  static StarWord from_tokens(std::vector<Token> tokens);
  /// prefix ⋆ suffix at the top level of the given words.
  static StarWord around(const Word& prefix, const Word& suffix);
  /// ⌊q⌋_ω
  static StarWord bracket(Op op, const StarWord& inner);

  TokenSpan tokens() const { return tokens_; }
  std::size_t hole_position() const;

  friend bool operator==(const StarWord&, const StarWord&) = default;

 private:
  explicit StarWord(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}
  std::vector<Token> tokens_;
};

/// q|_v : splices the atoms of v in place of the hole.
Word substitute(const StarWord& q, const Word& v);

/// Every (q, v) with substitute(q, v) == w where v is a nonempty run of
/// sibling atoms, plus the trivial pair (⋆, w) (which for w = 1 is (⋆, 1)).
std::vector<std::pair<StarWord, Word>> enumerate_contexts(const Word& w);

/// All words of total degree exactly n, in no particular order.
std::vector<Word> words_of_degree(std::size_t letters, std::size_t operators, std::size_t n);

/// All words with total degree <= n, each once, ascending in ≤db.
std::vector<Word> enumerate_words(const Signature& sig, std::size_t max_total_degree);

/// Star words whose non-hole atoms have total degree <= max_degree and whose
/// depth is <= max_depth, ascending by token encoding.
std::vector<StarWord> enumerate_star_words(const Signature& sig, std::size_t max_degree,
                                           std::size_t max_depth);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace matchrb
