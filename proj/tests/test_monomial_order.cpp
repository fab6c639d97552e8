#include "matchrb/order.hpp"
#include "matchrb/rewriting.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace matchrb;
using support::word;

namespace {

oracle::Tokens toks(const Word& w) { return {w.tokens().begin(), w.tokens().end()}; }

}  // namespace

TEST_CASE("degree lexicographic order") {
  const auto sig = support::wide_signature();
  CHECK(compare_deg_lex(Word(), word(sig, "x")) < 0);
  CHECK(compare_deg_lex(word(sig, "x"), word(sig, "y")) < 0);
  CHECK(compare_deg_lex(word(sig, "x y"), word(sig, "y x")) < 0);
  CHECK(compare_deg_lex(word(sig, "z"), word(sig, "x x")) < 0);
  CHECK(compare_deg_lex(word(sig, "y x"), word(sig, "y x")) == 0);
  CHECK_THROWS_AS(compare_deg_lex(word(sig, "[x]_a"), word(sig, "x")), std::domain_error);
}

TEST_CASE("order examples") {
  const auto sig = support::wide_signature();
  CHECK(compare_db(word(sig, "x y z"), word(sig, "[1]_a")) < 0);
  CHECK(compare_db(word(sig, "x"), word(sig, "[x]_a")) < 0);
  CHECK(compare_db(word(sig, "[x [y]_b]_a"), word(sig, "[x]_a [y]_b")) < 0);
  CHECK(compare_db(word(sig, "[x]_a"), word(sig, "[x]_b")) < 0);
  CHECK(compare_db(word(sig, "y [x]_a"), word(sig, "[x]_a y")) > 0);
}

TEST_CASE("cached keys, the structural walk and the reference comparator agree") {
  const Signature sig({"x", "y"}, {{"a", Rational(1)}, {"b", Rational(-1)}});
  const auto corpus = enumerate_words(sig, 3);
  for (const Word& u : corpus)
    for (const Word& v : corpus) {
      const auto cached = compare_db(u, v);
      CHECK(cached == compare_db(u.tokens(), v.tokens()));
      CHECK(cached == oracle::compare_db(toks(u), toks(v)));
      CHECK(cached == (OrderKey(u.tokens()) <=> OrderKey(v.tokens())));
    }
}

TEST_CASE("reference comparator on random pairs of larger words") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5000; ++i) {
    const Word u = support::random_word(rng, 2, 3, 1 + rng() % 9);
    const Word v = support::random_word(rng, 2, 3, 1 + rng() % 9);
    CHECK(compare_db(u, v) == oracle::compare_db(toks(u), toks(v)));
  }
}

TEST_CASE("enumeration is ascending") {
  const auto corpus = enumerate_words(default_signature(), 4);
  for (std::size_t i = 1; i < corpus.size(); ++i) CHECK(compare_db(corpus[i - 1], corpus[i]) < 0);
}

TEST_CASE("one is minimal and bracketing increases") {
  const Signature sig = default_signature();
  for (const Word& u : enumerate_words(sig, 4)) {
    CHECK(compare_db(Word(), u) <= 0);
    for (std::uint32_t op = 0; op < 2; ++op) CHECK(compare_db(u, Word::bracket(Op{op}, u)) < 0);
  }
}

TEST_CASE("the relation leading word dominates the other terms") {
  const Signature sig = support::wide_signature().restricted(2, 3);
  const auto corpus = enumerate_words(sig, 2);
  for (const Word& x : corpus)
    for (const Word& y : corpus)
      for (std::uint32_t a = 0; a < 3; ++a)
        for (std::uint32_t b = 0; b < 3; ++b) {
          const SRelation f{x, Op{a}, y, Op{b}};
          const auto value = f.value(sig);
          const auto [lead, coeff] = leading(value);
          CHECK(lead == f.leading_word());
          CHECK(coeff == 1);
        }
}

TEST_CASE("monomial property on random contexts") {
  const Signature sig = support::wide_signature();
  std::mt19937_64 rng(17);
  const auto contexts = enumerate_star_words(sig.restricted(2, 2), 2, 2);
  for (int i = 0; i < 3000; ++i) {
    const Word u = support::random_word(rng, 3, 3, rng() % 6);
    const Word v = support::random_word(rng, 3, 3, rng() % 6);
    const auto c = compare_db(u, v);
    const StarWord& q = contexts[rng() % contexts.size()];
    CHECK(compare_db(substitute(q, u), substitute(q, v)) == c);
  }
}

TEST_CASE("leading") {
  const auto sig = support::wide_signature();
  const auto [w, c] = leading(support::lc(sig, "3 * [x]_a"));
  CHECK(w == word(sig, "[x]_a"));
  CHECK(c == 3);
  CHECK(leading(support::lc(sig, "x + x y")).first == word(sig, "x y"));
  CHECK_THROWS_AS(leading(LinComb<Word>()), std::invalid_argument);
  CHECK_THROWS_AS(leading(support::lc(sig, "2")), std::invalid_argument);
}
