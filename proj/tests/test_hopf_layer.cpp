#include "matchrb/hopf.hpp"
#include "matchrb/properties.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace matchrb;
using support::lc;
using support::word;

namespace {

Forest leaf(std::uint32_t x) { return Forest(Tree(Decoration::letter(Letter{x}))); }
Forest dot(std::uint32_t op) { return Forest(Tree(Decoration::op(Op{op}))); }

template <class B>
TensorComb<B> primitive(const B& b) {
  TensorComb<B> t;
  t.add_term({b, B()}, 1);
  t.add_term({B(), b}, 1);
  return t;
}

}  // namespace

TEST_CASE("coproduct on forests") {
  for (auto route : {CoproductRoute::Subforest, CoproductRoute::Cocycle}) {
    TensorComb<Forest> unit;
    unit.add_term({Forest(), Forest()}, 1);
    CHECK(coproduct_rt(Forest(), route) == unit);
    CHECK(coproduct_rt(dot(0), route) == primitive(dot(0)));
    CHECK(coproduct_rt(dot(1), route) == primitive(dot(1)));
    CHECK(coproduct_rt(leaf(0), route) == primitive(leaf(0)));
    const Forest f(graft(Op{0}, leaf(0)));
    auto expected = primitive(f);
    expected.add_term({leaf(0), dot(0)}, 1);
    CHECK(coproduct_rt(f, route) == expected);
  }
  CHECK(check_route_agreement(default_signature(), 4).passed);
  const Signature two({"x", "y"}, {{"a", Rational(1)}, {"b", Rational(1)}});
  CHECK(check_route_agreement(two, 3).passed);
}

TEST_CASE("counits") {
  LinComb<Forest> v(Forest(), 2);
  v.add_term(leaf(0), 3);
  CHECK(counit_rt(LinComb<Forest>(Forest())) == 1);
  CHECK(counit_rt(LinComb<Forest>(leaf(0))) == 0);
  CHECK(counit_rt(v) == 2);
  const auto sig = default_signature();
  CHECK(counit_mrb(lc(sig, "1")) == 1);
  CHECK(counit_mrb(lc(sig, "[1]_a")) == 0);
  CHECK(counit_mrb(lc(sig, "2 + 3 * x")) == 2);
  CHECK(counit_mrb(v) == 2);
}

TEST_CASE("coproduct on matching words") {
  const auto sig = default_signature();
  TensorComb<Word> unit;
  unit.add_term({Word(), Word()}, 1);
  CHECK(coproduct_mrb(sig, Word()) == unit);
  for (const char* text : {"[1]_a", "[1]_b", "x"})
    CHECK(coproduct_mrb(sig, word(sig, text)) == primitive(word(sig, text)));
  const Word w = word(sig, "[[1]_a]_b");
  auto expected = primitive(w);
  expected.add_term({word(sig, "[1]_a"), word(sig, "[1]_b")}, 1);
  CHECK(coproduct_mrb(sig, w) == expected);
  CHECK_THROWS_AS(coproduct_mrb(sig, word(sig, "[1]_a [1]_b")), std::invalid_argument);

  const auto on_forest = coproduct_mrb(sig, theta(w));
  TensorComb<Forest> transported;
  for (const auto& [t, c] : expected) transported.add_term({theta(t.first), theta(t.second)}, c);
  CHECK(on_forest == transported);
}

TEST_CASE("reduced coproduct") {
  const RtCarrier rt;
  CHECK(reduced_coproduct(rt, leaf(0)).is_zero());
  const Forest f(graft(Op{0}, leaf(0)));
  TensorComb<Forest> one_term;
  one_term.add_term({leaf(0), dot(0)}, 1);
  CHECK(reduced_coproduct(rt, f) == one_term);
  CHECK_THROWS_AS(reduced_coproduct(rt, Forest()), std::invalid_argument);

  const auto sig = default_signature();
  const MrbCarrier mrb(sig);
  TensorComb<Word> expected;
  expected.add_term({word(sig, "[1]_a"), word(sig, "[1]_b")}, 1);
  CHECK(reduced_coproduct(mrb, word(sig, "[[1]_a]_b")) == expected);
  for (const Word& b : enumerate_mrbw(sig, 4)) {
    if (b.is_one()) continue;
    for (const auto& [t, c] : reduced_coproduct(mrb, b)) {
      CHECK_FALSE(t.first.is_one());
      CHECK_FALSE(t.second.is_one());
      CHECK(total_degree(t.first) < total_degree(b));
      CHECK(total_degree(t.second) < total_degree(b));
    }
  }
}

TEST_CASE("antipode") {
  const auto sig = default_signature();
  const MrbCarrier mrb(sig);
  const Antipode<MrbCarrier> s(mrb);
  CHECK(s(Word()) == lc(sig, "1"));
  CHECK(s(word(sig, "x")) == lc(sig, "-x"));
  CHECK(s(word(sig, "[1]_a")) == lc(sig, "-[1]_a"));
  CHECK(s(word(sig, "[[1]_a]_b")) == lc(sig, "[[1]_b]_a - [1]_a"));
  CHECK(antipode_mrb(sig, lc(sig, "2 * [[1]_a]_b + x")) == lc(sig, "2 * [[1]_b]_a - 2 * [1]_a - x"));

  const RtCarrier rt;
  const Antipode<RtCarrier> srt(rt);
  CHECK(srt(Forest()) == LinComb<Forest>(Forest()));
  CHECK(srt(leaf(0)) == LinComb<Forest>(leaf(0), -1));
  const Forest f(graft(Op{0}, leaf(0)));
  LinComb<Forest> expected(f, -1);
  expected.add_term(concat(leaf(0), dot(0)), 1);
  CHECK(srt(f) == expected);
  CHECK(antipode_rt(LinComb<Forest>(f)) == expected);
}

TEST_CASE("axiom names") {
  CHECK(all_axioms().size() == 8);
  for (Axiom a : all_axioms()) CHECK(parse_axiom(axiom_name(a)) == a);
  CHECK_FALSE(parse_axiom("nonsense"));
}

TEST_CASE("axioms on small corpora") {
  const auto sig = default_signature();
  const MrbCarrier mrb(sig);
  const RtCarrier rt;
  const auto words = enumerate_mrbw(sig, 3);
  const auto forests = enumerate_forests(sig, 3);
  for (Axiom a : all_axioms()) {
    const auto on_mrb = check_axiom(sig, mrb, a, words, 3);
    CHECK_MESSAGE(on_mrb.passed(), axiom_name(a), " ", on_mrb.witness);
    CHECK(on_mrb.applicable == (a != Axiom::Graded));
    if (on_mrb.applicable) CHECK(on_mrb.checked > 0);
    const auto on_rt = check_axiom(sig, rt, a, forests, 3);
    CHECK_MESSAGE(on_rt.passed(), axiom_name(a), " ", on_rt.witness);
    CHECK(on_rt.checked > 0);
  }
  CHECK(check_psi_compatibility(sig, 3).passed);
}

TEST_CASE("a mixed-weight signature") {
  const Signature sig({"x"}, {{"a", Rational(2, 3)}, {"b", Rational(-7)}});
  const MrbCarrier mrb(sig);
  const auto words = enumerate_mrbw(sig, 3);
  for (Axiom a : {Axiom::Coassoc, Axiom::Bialgebra, Axiom::Antipode, Axiom::Cocycle})
    CHECK(check_axiom(sig, mrb, a, words, 3).passed());
}
