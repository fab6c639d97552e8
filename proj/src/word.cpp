#include "matchrb/word.hpp"

#include "matchrb/order.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace matchrb {

namespace {

// Balanced with matching closes; counts holes.
bool well_formed(TokenSpan tokens, std::size_t& holes) {
  long open = 0;
  holes = 0;
  for (Token t : tokens) {
    if (t == kHole) {
      ++holes;
    } else if (t == kClose) {
      if (--open < 0) return false;
    } else if (is_open_token(t)) {
      ++open;
    }
  }
  return open == 0;
}

std::vector<Token> splice(TokenSpan a, TokenSpan b) {
  std::vector<Token> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

std::size_t atom_end(TokenSpan tokens, std::size_t pos) {
  if (!is_open_token(tokens[pos])) return pos + 1;
  std::size_t level = 0;
  for (std::size_t i = pos; i < tokens.size(); ++i) {
    if (is_open_token(tokens[i])) {
      ++level;
    } else if (tokens[i] == kClose && --level == 0) {
      return i + 1;
    }
  }
  throw std::logic_error("unbalanced token sequence");
}

std::vector<AtomView> top_level_atoms(TokenSpan tokens) {
  std::vector<AtomView> atoms;
  std::size_t pos = 0;
  while (pos < tokens.size()) {
    const std::size_t end = atom_end(tokens, pos);
    AtomView atom;
    atom.whole = tokens.subspan(pos, end - pos);
    if (is_open_token(tokens[pos])) {
      atom.bracket = true;
      atom.symbol = op_of(tokens[pos]).index;
      atom.body = tokens.subspan(pos + 1, end - pos - 2);
    } else {
      atom.symbol = static_cast<std::uint32_t>(tokens[pos]);
    }
    atoms.push_back(atom);
    pos = end;
  }
  return atoms;
}

Word::Word(std::vector<Token> tokens) : data_(std::move(tokens)), size_(data_.size()) {
  if (size_ == 0) return;
  std::vector<std::int32_t> key;
  key.reserve(2 * size_ + 4);
  append_order_key(TokenSpan(data_.data(), size_), key);
  data_.insert(data_.end(), key.begin(), key.end());
}

Word Word::letter(Letter x) { return Word({static_cast<Token>(x.index)}); }

Word Word::bracket(Op op, const Word& body) {
  std::vector<Token> t;
  t.reserve(body.size_ + 2);
  t.push_back(open_token(op));
  t.insert(t.end(), body.tokens().begin(), body.tokens().end());
  t.push_back(kClose);
  return Word(std::move(t));
}

Word Word::from_tokens(std::vector<Token> tokens) {
  std::size_t holes = 0;
  if (!well_formed(tokens, holes) || holes != 0)
    throw std::invalid_argument("token sequence is not a bracketed word");
  return Word(std::move(tokens));
}

Word word_from_span(TokenSpan tokens) { return Word(std::vector<Token>(tokens.begin(), tokens.end())); }

Word concat(const Word& a, const Word& b) { return Word(splice(a.tokens(), b.tokens())); }

void validate(const Signature& sig, const Word& w) {
  for (Token t : w.tokens()) {
    if (is_letter_token(t) && static_cast<std::size_t>(t) >= sig.letter_count())
      throw std::invalid_argument("letter index " + std::to_string(t) + " outside the signature");
    if (is_open_token(t) && op_of(t).index >= sig.operator_count())
      throw std::invalid_argument("operator index " + std::to_string(op_of(t).index) +
                                  " outside the signature");
  }
}

std::size_t depth(TokenSpan tokens) {
  std::size_t level = 0, best = 0;
  for (Token t : tokens) {
    if (is_open_token(t)) {
      best = std::max(best, ++level);
    } else if (t == kClose) {
      --level;
    }
  }
  return best;
}

std::size_t depth(const Word& w) { return depth(w.tokens()); }

WordStatistics statistics(const Word& w) {
  WordStatistics s;
  std::size_t level = 0;
  for (Token t : w.tokens()) {
    if (is_open_token(t)) {
      if (level == 0) {
        ++s.breadth;
        ++s.p_breadth;
      }
      ++level;
      ++s.p_degree;
      ++s.total_degree;
    } else if (t == kClose) {
      --level;
    } else {
      if (level == 0) ++s.breadth;
      ++s.total_degree;
    }
  }
  return s;
}

std::size_t total_degree(const Word& w) {
  return static_cast<std::size_t>(
      std::count_if(w.tokens().begin(), w.tokens().end(), [](Token t) { return t != kClose; }));
}

std::size_t x_degree(const Word& w) {
  for (Token t : w.tokens())
    if (!is_letter_token(t)) throw std::domain_error("x_degree of a word containing brackets");
  return w.tokens().size();
}

Factorization factorize(const Word& w) {
  Factorization f;
  std::vector<Token> block;
  for (const AtomView& atom : w.atoms()) {
    if (atom.bracket) {
      f.outer.push_back(Word::from_tokens(std::move(block)));
      block.clear();
      f.brackets.emplace_back(Op{atom.symbol}, word_from_span(atom.body));
    } else {
      block.push_back(static_cast<Token>(atom.symbol));
    }
  }
  f.outer.push_back(Word::from_tokens(std::move(block)));
  return f;
}

Word Factorization::reassemble() const {
  if (outer.size() != brackets.size() + 1)
    throw std::invalid_argument("factorization needs one more outer block than brackets");
  Word w = outer.front();
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    w = concat(w, Word::bracket(brackets[i].first, brackets[i].second));
    w = concat(w, outer[i + 1]);
  }
  return w;
}

StarWord StarWord::from_tokens(std::vector<Token> tokens) {
  std::size_t holes = 0;
  if (!well_formed(tokens, holes) || holes != 1)
    throw std::invalid_argument("star word needs balanced brackets and exactly one hole");
  return StarWord(std::move(tokens));
}

StarWord StarWord::around(const Word& prefix, const Word& suffix) {
  std::vector<Token> t(prefix.tokens().begin(), prefix.tokens().end());
  t.push_back(kHole);
  t.insert(t.end(), suffix.tokens().begin(), suffix.tokens().end());
  return StarWord(std::move(t));
}

StarWord StarWord::bracket(Op op, const StarWord& inner) {
  std::vector<Token> t;
  t.push_back(open_token(op));
  t.insert(t.end(), inner.tokens_.begin(), inner.tokens_.end());
  t.push_back(kClose);
  return StarWord(std::move(t));
}

std::size_t StarWord::hole_position() const {
  return static_cast<std::size_t>(std::find(tokens_.begin(), tokens_.end(), kHole) - tokens_.begin());
}

Word substitute(const StarWord& q, const Word& v) {
  const auto t = q.tokens();
  const std::size_t pos = q.hole_position();
  std::vector<Token> out;
  out.reserve(t.size() + v.tokens().size());
  out.insert(out.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), v.tokens().begin(), v.tokens().end());
  out.insert(out.end(), t.begin() + static_cast<std::ptrdiff_t>(pos) + 1, t.end());
  return Word::from_tokens(std::move(out));
}

namespace {

// Collects runs of sibling atoms inside `tokens[lo, hi)`, recursing into bodies.
void collect_runs(TokenSpan tokens, std::size_t lo, std::size_t hi,
                  std::vector<std::pair<std::size_t, std::size_t>>& runs) {
  std::vector<std::size_t> starts;
  for (std::size_t pos = lo; pos < hi; pos = atom_end(tokens, pos)) starts.push_back(pos);
  starts.push_back(hi);
  for (std::size_t i = 0; i + 1 < starts.size(); ++i)
    for (std::size_t j = i + 1; j < starts.size(); ++j) runs.emplace_back(starts[i], starts[j]);
  for (std::size_t i = 0; i + 1 < starts.size(); ++i)
    if (is_open_token(tokens[starts[i]]))
      collect_runs(tokens, starts[i] + 1, starts[i + 1] - 1, runs);
}

}  // namespace

std::vector<std::pair<StarWord, Word>> enumerate_contexts(const Word& w) {
  const auto t = w.tokens();
  std::vector<std::pair<StarWord, Word>> out;
  out.emplace_back(StarWord(), w);
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  collect_runs(t, 0, t.size(), runs);
  for (auto [lo, hi] : runs) {
    if (lo == 0 && hi == t.size()) continue;  // already the trivial pair
    std::vector<Token> q(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(lo));
    q.push_back(kHole);
    q.insert(q.end(), t.begin() + static_cast<std::ptrdiff_t>(hi), t.end());
    out.emplace_back(StarWord::from_tokens(std::move(q)), word_from_span(t.subspan(lo, hi - lo)));
  }
  return out;
}

namespace {

// Words of each exact total degree over `letters` extra-letter tokens and
// `operators` operators. Grammar: 1 | atom word, atom = letter | ⌊word⌋_ω.
class WordTable {
 public:
  WordTable(std::size_t letters, std::size_t operators) : letters_(letters), operators_(operators) {
    table_.push_back({{}});
  }

  const std::vector<std::vector<Token>>& of_degree(std::size_t n) {
    while (table_.size() <= n) extend();
    return table_[n];
  }

 private:
  void extend() {
    const std::size_t n = table_.size();
    std::vector<std::vector<Token>> words;
    // first atom a letter
    for (std::size_t x = 0; x < letters_; ++x)
      for (const auto& rest : table_[n - 1]) {
        std::vector<Token> w{static_cast<Token>(x)};
        w.insert(w.end(), rest.begin(), rest.end());
        words.push_back(std::move(w));
      }
    // first atom a bracket with body degree m, rest degree n - 1 - m
    for (std::size_t m = 0; m + 1 <= n; ++m)
      for (std::size_t op = 0; op < operators_; ++op)
        for (const auto& body : table_[m])
          for (const auto& rest : table_[n - 1 - m]) {
            std::vector<Token> w{open_token(Op{static_cast<std::uint32_t>(op)})};
            w.insert(w.end(), body.begin(), body.end());
            w.push_back(kClose);
            w.insert(w.end(), rest.begin(), rest.end());
            words.push_back(std::move(w));
          }
    table_.push_back(std::move(words));
  }

  std::size_t letters_;
  std::size_t operators_;
  std::vector<std::vector<std::vector<Token>>> table_;
};

}  // namespace

std::vector<Word> words_of_degree(std::size_t letters, std::size_t operators, std::size_t n) {
  WordTable table(letters, operators);
  std::vector<Word> out;
  for (const auto& t : table.of_degree(n)) out.push_back(Word::from_tokens(t));
  return out;
}

std::vector<Word> enumerate_words(const Signature& sig, std::size_t max_total_degree) {
  WordTable table(sig.letter_count(), sig.operator_count());
  std::vector<Word> out;
  for (std::size_t n = 0; n <= max_total_degree; ++n)
    for (const auto& t : table.of_degree(n)) out.push_back(Word::from_tokens(t));
  std::sort(out.begin(), out.end(),
            [](const Word& a, const Word& b) { return compare_db(a, b) < 0; });
  return out;
}

std::vector<StarWord> enumerate_star_words(const Signature& sig, std::size_t max_degree,
                                           std::size_t max_depth) {
  // The hole is generated as an extra letter with index letter_count().
  const Token hole_letter = static_cast<Token>(sig.letter_count());
  WordTable table(sig.letter_count() + 1, sig.operator_count());
  std::vector<StarWord> out;
  for (std::size_t n = 1; n <= max_degree + 1; ++n) {
    for (auto t : table.of_degree(n)) {
      if (std::count(t.begin(), t.end(), hole_letter) != 1) continue;
      if (depth(TokenSpan(t)) > max_depth) continue;
      std::replace(t.begin(), t.end(), hole_letter, kHole);
      out.push_back(StarWord::from_tokens(std::move(t)));
    }
  }
  std::sort(out.begin(), out.end(), [](const StarWord& a, const StarWord& b) {
    return std::lexicographical_compare(a.tokens().begin(), a.tokens().end(), b.tokens().begin(),
                                        b.tokens().end());
  });
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Token t : w.tokens()) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(t));
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace matchrb
