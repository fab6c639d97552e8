#include "matchrb/word.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace matchrb;
using support::word;

TEST_CASE("concat") {
  const auto sig = support::wide_signature();
  const Word w = word(sig, "x [y]_a");
  CHECK(concat(Word(), w) == w);
  CHECK(concat(w, Word()) == w);
  CHECK(concat(word(sig, "x"), word(sig, "y")) == word(sig, "x y"));
  CHECK(concat(w, word(sig, "[1]_b")) == word(sig, "x [y]_a [1]_b"));
}

TEST_CASE("words and star words reject malformed tokens") {
  CHECK_THROWS_AS(Word::from_tokens({open_token(Op{0})}), std::invalid_argument);
  CHECK_THROWS_AS(Word::from_tokens({kClose}), std::invalid_argument);
  CHECK_THROWS_AS(Word::from_tokens({kHole}), std::invalid_argument);
  CHECK_THROWS_AS(StarWord::from_tokens({0}), std::invalid_argument);
  CHECK_THROWS_AS(StarWord::from_tokens({kHole, kHole}), std::invalid_argument);
  CHECK_NOTHROW(StarWord::from_tokens({open_token(Op{1}), kHole, kClose}));
}

TEST_CASE("validate against a signature") {
  const auto sig = default_signature();
  CHECK_NOTHROW(validate(sig, Word::from_tokens({0, open_token(Op{1}), kClose})));
  CHECK_THROWS_AS(validate(sig, Word::from_tokens({1})), std::invalid_argument);
  CHECK_THROWS_AS(validate(sig, Word::from_tokens({open_token(Op{2}), kClose})),
                  std::invalid_argument);
}

TEST_CASE("depth") {
  const auto sig = support::wide_signature();
  CHECK(depth(Word()) == 0);
  CHECK(depth(word(sig, "x y")) == 0);
  CHECK(depth(word(sig, "[1]_a")) == 1);
  CHECK(depth(word(sig, "[x [y]_a]_b")) == 2);
}

TEST_CASE("depth agrees with the layered construction") {
  const Signature sig = default_signature();
  const auto corpus = enumerate_words(sig, 4);
  for (std::size_t d = 0; d <= 4; ++d) {
    const auto layer = oracle::depth_layer(1, 2, d, 4);
    for (const Word& w : corpus) {
      const oracle::Tokens t(w.tokens().begin(), w.tokens().end());
      CHECK_MESSAGE((depth(w) <= d) == (layer.count(t) == 1), "d = " << d);
    }
  }
}

TEST_CASE("statistics") {
  const auto sig = support::wide_signature();
  CHECK(total_degree(word(sig, "[x y [x]_a z]_a")) == 6);

  const Signature seven({"x0", "x1", "x2", "x3", "x4", "x5", "x6"},
                        {{"a1", Rational(1)}, {"a2", Rational(1)}, {"a3", Rational(1)}});
  const Word u = word(seven, "x0 [x1]_a1 x2 [x3 [x4]_a3]_a2 x5 x6");
  const auto s = statistics(u);
  CHECK(s.p_degree == 3);
  CHECK(s.p_breadth == 2);
  CHECK(s.breadth == 6);
  CHECK(s.total_degree == 10);

  const auto one = statistics(Word());
  CHECK(one.breadth == 0);
  CHECK(one.total_degree == 0);
  CHECK(one.p_degree == 0);
  CHECK(one.p_breadth == 0);
  CHECK(x_degree(Word()) == 0);
  CHECK(x_degree(word(sig, "x y x")) == 3);
  CHECK_THROWS_AS(x_degree(word(sig, "x [1]_a")), std::domain_error);
}

TEST_CASE("factorize") {
  const auto sig = support::wide_signature();
  const auto f = factorize(word(sig, "x [y]_a z"));
  REQUIRE(f.outer.size() == 2);
  CHECK(f.outer[0] == word(sig, "x"));
  CHECK(f.outer[1] == word(sig, "z"));
  REQUIRE(f.brackets.size() == 1);
  CHECK(f.brackets[0].first == Op{0});
  CHECK(f.brackets[0].second == word(sig, "y"));

  const Signature seven({"x0", "x1", "x2", "x3", "x4", "x5", "x6"},
                        {{"a1", Rational(1)}, {"a2", Rational(1)}, {"a3", Rational(1)}});
  const auto g = factorize(word(seven, "x0 [x1]_a1 x2 [x3 [x4]_a3]_a2 x5 x6"));
  REQUIRE(g.brackets.size() == 2);
  CHECK(g.brackets[1].second == word(seven, "x3 [x4]_a3"));
  CHECK(g.outer[0] == word(seven, "x0"));
  CHECK(g.outer[1] == word(seven, "x2"));
  CHECK(g.outer[2] == word(seven, "x5 x6"));

  const auto e = factorize(Word());
  CHECK(e.outer == std::vector<Word>{Word()});
  CHECK(e.brackets.empty());
}

TEST_CASE("substitute") {
  const auto sig = support::wide_signature();
  const Word w = word(sig, "x [y]_a");
  CHECK(substitute(StarWord(), w) == w);
  CHECK(substitute(StarWord::bracket(Op{0}, StarWord()), word(sig, "x y")) ==
        word(sig, "[x y]_a"));
  const StarWord q = StarWord::around(word(sig, "x"), word(sig, "[y]_b"));
  CHECK(substitute(q, word(sig, "[x]_a")) == word(sig, "x [x]_a [y]_b"));
}

TEST_CASE("enumerate_contexts") {
  const auto sig = support::wide_signature();
  auto contains = [](const auto& list, const StarWord& q, const Word& v) {
    for (const auto& [a, b] : list)
      if (a == q && b == v) return true;
    return false;
  };
  const Word x = word(sig, "x");
  const auto cx = enumerate_contexts(x);
  CHECK(cx.size() == 1);
  CHECK(contains(cx, StarWord(), x));

  const auto cb = enumerate_contexts(word(sig, "[x]_a"));
  CHECK(contains(cb, StarWord::bracket(Op{0}, StarWord()), x));

  const Word xy = word(sig, "x y");
  const auto cxy = enumerate_contexts(xy);
  CHECK(contains(cxy, StarWord(), xy));
  CHECK(contains(cxy, StarWord::around(Word(), word(sig, "y")), x));
  CHECK(contains(cxy, StarWord::around(x, Word()), word(sig, "y")));
  CHECK(cxy.size() == 3);

  const auto c1 = enumerate_contexts(Word());
  CHECK(c1.size() == 1);
}

TEST_CASE("every context splices back and none has an empty v") {
  const Signature sig = default_signature();
  for (const Word& w : enumerate_words(sig, 4)) {
    const auto contexts = enumerate_contexts(w);
    std::set<std::pair<std::vector<Token>, std::vector<Token>>> seen;
    for (const auto& [q, v] : contexts) {
      CHECK(substitute(q, v) == w);
      if (!(q == StarWord())) CHECK_FALSE(v.is_one());
      seen.emplace(std::vector<Token>(q.tokens().begin(), q.tokens().end()),
                   std::vector<Token>(v.tokens().begin(), v.tokens().end()));
    }
    CHECK(seen.size() == contexts.size());
  }
}

TEST_CASE("enumerate_words") {
  const Signature one_op({"x"}, {{"a", Rational(1)}});
  CHECK(enumerate_words(one_op, 0) == std::vector<Word>{Word()});
  const auto w1 = enumerate_words(one_op, 1);
  CHECK(w1 == std::vector<Word>{Word(), word(one_op, "x"), word(one_op, "[1]_a")});
  const auto w2 = enumerate_words(one_op, 2);
  const std::set<std::string> expected{"1", "x", "x x", "[1]_a", "x [1]_a", "[1]_a x",
                                       "[x]_a", "[[1]_a]_a", "[1]_a [1]_a"};
  CHECK(w2.size() == 9);
  for (const std::string& s : expected)
    CHECK(std::find(w2.begin(), w2.end(), word(one_op, s)) != w2.end());
}

TEST_CASE("word counts match the recurrence") {
  for (std::size_t letters : {1u, 2u})
    for (std::size_t ops : {1u, 2u}) {
      const Signature s =
          Signature({"x", "y"}, {{"a", Rational(1)}, {"b", Rational(-1)}}).restricted(letters, ops);
      const auto counts = oracle::word_counts(letters, ops, 5);
      std::size_t cumulative = 0;
      for (std::size_t n = 0; n <= 5; ++n) {
        cumulative += counts[n];
        CHECK(words_of_degree(letters, ops, n).size() == counts[n]);
        if (n <= 4) {
          CHECK(enumerate_words(s, n).size() == cumulative);
        }
      }
    }
  CHECK(oracle::word_counts(1, 2, 5) == std::vector<std::size_t>{1, 3, 15, 93, 645, 4791});
}

TEST_CASE("depth and degree properties on random words") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Word a = support::random_word(rng, 3, 3, rng() % 7);
    const Word b = support::random_word(rng, 3, 3, rng() % 7);
    const Op op{static_cast<std::uint32_t>(rng() % 3)};
    CHECK(depth(concat(a, b)) == std::max(depth(a), depth(b)));
    CHECK(depth(Word::bracket(op, a)) == depth(a) + 1);
    CHECK(total_degree(concat(a, b)) == total_degree(a) + total_degree(b));
    CHECK(total_degree(Word::bracket(op, a)) == total_degree(a) + 1);
    CHECK(factorize(a).reassemble() == a);
    const auto f = factorize(a);
    CHECK(factorize(f.reassemble()) == f);
  }
}

TEST_CASE("random generator hits the requested degree") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 0; n < 9; ++n)
    for (int i = 0; i < 20; ++i) CHECK(total_degree(support::random_word(rng, 2, 2, n)) == n);
}
