#include "matchrb/forest.hpp"
#include "matchrb/format.hpp"
#include "matchrb/hopf.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace matchrb;
using support::word;

namespace {

Tree leaf(std::uint32_t x) { return Tree(Decoration::letter(Letter{x})); }
Tree dot(std::uint32_t op) { return Tree(Decoration::op(Op{op})); }

Forest forest_of(std::vector<Tree> trees) { return Forest(std::move(trees)); }

}  // namespace

TEST_CASE("internal vertices carry operators") {
  CHECK_THROWS_AS(Tree(Decoration::letter(Letter{0}), {leaf(0)}), std::invalid_argument);
  CHECK_NOTHROW(Tree(Decoration::op(Op{0}), {leaf(0)}));
  const auto sig = default_signature();
  CHECK_THROWS_AS(validate(sig, Forest(dot(2))), std::invalid_argument);
  CHECK_THROWS_AS(validate(sig, Forest(leaf(1))), std::invalid_argument);
  CHECK_NOTHROW(validate(sig, Forest(Tree(Decoration::op(Op{1}), {leaf(0), dot(0)}))));
}

TEST_CASE("graft") {
  CHECK(graft(Op{0}, Forest()) == dot(0));
  const Tree t = graft(Op{1}, Forest(leaf(0)));
  CHECK(t.decoration() == Decoration::op(Op{1}));
  CHECK(t.children() == std::vector<Tree>{leaf(0)});
  const Tree u = graft(Op{0}, forest_of({leaf(0), leaf(1)}));
  CHECK(u.children() == std::vector<Tree>{leaf(0), leaf(1)});
}

TEST_CASE("theta") {
  const auto sig = support::wide_signature();
  CHECK(theta(word(sig, "x")) == Forest(leaf(0)));
  CHECK(theta(Word()) == Forest());
  const Forest f(graft(Op{0}, Forest(leaf(0))));
  CHECK(theta(word(sig, "[x]_a")) == f);
  CHECK(theta_inv(f) == word(sig, "[x]_a"));
  CHECK(theta(word(sig, "x [y z]_b")) ==
        forest_of({leaf(0), graft(Op{1}, forest_of({leaf(1), leaf(2)}))}));
}

TEST_CASE("theta is a structure preserving bijection") {
  const Signature sig = default_signature();
  const auto corpus = enumerate_words(sig, 4);
  std::set<std::string> images;
  for (const Word& w : corpus) {
    const Forest f = theta(w);
    CHECK(theta_inv(f) == w);
    CHECK(theta(theta_inv(f)) == f);
    CHECK(degree(f) == total_degree(w));
    CHECK(forest_depth(f) == depth(w));
    CHECK(breadth(f) == statistics(w).breadth);
    images.insert(to_plain(sig, f));
    for (std::uint32_t op = 0; op < 2; ++op)
      CHECK(theta(Word::bracket(Op{op}, w)) == Forest(graft(Op{op}, f)));
  }
  CHECK(images.size() == corpus.size());
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    const Word u = support::random_word(rng, 1, 2, rng() % 4);
    const Word v = support::random_word(rng, 1, 2, rng() % 4);
    CHECK(theta(concat(u, v)) == concat(theta(u), theta(v)));
  }
}

TEST_CASE("degree, breadth and depth") {
  CHECK(degree(Forest()) == 0);
  CHECK(breadth(Forest()) == 0);
  CHECK(forest_depth(Forest()) == 0);
  CHECK(forest_depth(Forest(leaf(0))) == 0);
  CHECK(forest_depth(Forest(dot(0))) == 1);
  CHECK(forest_depth(Forest(graft(Op{0}, Forest(graft(Op{1}, Forest()))))) == 2);
  const Forest f = forest_of({leaf(0), graft(Op{0}, forest_of({leaf(0), dot(1)}))});
  CHECK(degree(f) == 4);
  CHECK(breadth(f) == 2);
  CHECK(forest_depth(f) == 2);
}

TEST_CASE("subforest pairs") {
  using Pairs = std::vector<std::pair<Forest, Forest>>;
  CHECK(subforest_pairs(Forest()) == Pairs{{Forest(), Forest()}});
  const Forest x(leaf(0));
  const auto px = subforest_pairs(x);
  CHECK(px.size() == 2);
  CHECK(std::count(px.begin(), px.end(), std::pair{Forest(), x}) == 1);
  CHECK(std::count(px.begin(), px.end(), std::pair{x, Forest()}) == 1);

  const Forest f(graft(Op{0}, x));
  const auto pf = subforest_pairs(f);
  CHECK(pf.size() == 3);
  CHECK(std::count(pf.begin(), pf.end(), std::pair{Forest(), f}) == 1);
  CHECK(std::count(pf.begin(), pf.end(), std::pair{x, Forest(dot(0))}) == 1);
  CHECK(std::count(pf.begin(), pf.end(), std::pair{f, Forest()}) == 1);

  const Forest xx = concat(x, x);
  const auto pxx = subforest_pairs(xx);
  CHECK(pxx.size() == 4);
  CHECK(std::count(pxx.begin(), pxx.end(), std::pair{x, x}) == 2);
}

TEST_CASE("subforests follow preorder and keep degrees") {
  const Signature sig = default_signature();
  for (const Forest& f : enumerate_forests(sig, 5)) {
    const auto pairs = subforest_pairs(f);
    CHECK(pairs.size() == oracle::antichain_count(f));
    for (const auto& [g, q] : pairs) {
      CHECK(degree(g) + degree(q) == degree(f));
      CHECK_NOTHROW(validate(sig, g));
      CHECK_NOTHROW(validate(sig, q));
      CHECK_NOTHROW(validate(sig, concat(g, q)));
    }
  }
}

TEST_CASE("selected subtrees are listed in preorder") {
  // a(x b(y)) with the antichain {x, y}
  const Forest f(graft(Op{0}, forest_of({leaf(0), graft(Op{1}, Forest(leaf(1)))})));
  const Forest g = forest_of({leaf(0), leaf(1)});
  const Forest q(graft(Op{0}, Forest(dot(1))));
  const auto pairs = subforest_pairs(f);
  CHECK(std::count(pairs.begin(), pairs.end(), std::pair{g, q}) == 1);
}
