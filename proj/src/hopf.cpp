#include "matchrb/hopf.hpp"

#include "matchrb/format.hpp"
#include "matchrb/rewriting.hpp"

#include <array>
#include <stdexcept>

namespace matchrb {

namespace {

TensorComb<Forest> cocycle_tree(const Tree& t) {
  TensorComb<Forest> out;
  const Forest whole(t);
  out.add_term({whole, Forest()}, 1);
  if (!t.decoration().is_operator()) {
    out.add_term({Forest(), whole}, 1);
    return out;
  }
  const Op op{t.decoration().index};
  const Forest children(t.children());
  for (const auto& [p, c] : coproduct_rt(children, CoproductRoute::Cocycle))
    out.add_term({p.first, Forest(graft(op, p.second))}, c);
  return out;
}

LinComb<Forest> concat_product(const Forest& a, const Forest& b) {
  return LinComb<Forest>(concat(a, b));
}

}  // namespace

TensorComb<Forest> coproduct_rt(const Forest& f, CoproductRoute route) {
  TensorComb<Forest> out;
  if (route == CoproductRoute::Subforest) {
    for (auto& [g, q] : subforest_pairs(f)) out.add_term({std::move(g), std::move(q)}, 1);
    return out;
  }
  out.add_term({Forest(), Forest()}, 1);
  for (const Tree& t : f.trees()) out = tensor_product(out, cocycle_tree(t), concat_product);
  return out;
}

TensorComb<Forest> coproduct_rt(const LinComb<Forest>& v, CoproductRoute route) {
  TensorComb<Forest> out;
  for (const auto& [f, c] : v) out.add_scaled(coproduct_rt(f, route), c);
  return out;
}

Rational counit_rt(const LinComb<Forest>& v) { return v.coefficient(Forest()); }

TensorComb<Forest> coproduct_mrb(const Signature& sig, const Forest& f) {
  if (!is_mrbw(theta_inv(f))) throw std::invalid_argument("not a matching Rota-Baxter forest");
  TensorComb<Forest> out;
  for (const auto& [p, c] : coproduct_rt(f)) {
    TensorComb<Forest> legs = tensor(psi(sig, p.first), psi(sig, p.second));
    out.add_scaled(legs, c);
  }
  return out;
}

TensorComb<Word> coproduct_mrb(const Signature& sig, const Word& w) {
  if (!is_mrbw(w)) throw std::invalid_argument("not a matching Rota-Baxter word");
  TensorComb<Word> out;
  for (const auto& [p, c] : coproduct_rt(theta(w))) {
    TensorComb<Word> legs =
        tensor(normal_form(sig, theta_inv(p.first)), normal_form(sig, theta_inv(p.second)));
    out.add_scaled(legs, c);
  }
  return out;
}

TensorComb<Word> coproduct_mrb(const Signature& sig, const LinComb<Word>& v) {
  TensorComb<Word> out;
  for (const auto& [w, c] : v) out.add_scaled(coproduct_mrb(sig, w), c);
  return out;
}

Rational counit_mrb(const LinComb<Word>& v) { return v.coefficient(Word()); }
Rational counit_mrb(const LinComb<Forest>& v) { return v.coefficient(Forest()); }

const TensorComb<Word>& MrbCarrier::coproduct(const Word& w) const {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  return cache_.emplace(w, coproduct_mrb(*sig_, w)).first->second;
}

LinComb<Forest> antipode_rt(const LinComb<Forest>& v) {
  const RtCarrier carrier;
  return Antipode<RtCarrier>(carrier)(v);
}

LinComb<Word> antipode_mrb(const Signature& sig, const LinComb<Word>& v) {
  const MrbCarrier carrier(sig);
  return Antipode<MrbCarrier>(carrier)(v);
}

namespace {

constexpr std::array<std::pair<Axiom, std::string_view>, 8> kAxiomNames{{
    {Axiom::Coassoc, "coassoc"},
    {Axiom::Counit, "counit"},
    {Axiom::Bialgebra, "bialgebra"},
    {Axiom::Cocycle, "cocycle"},
    {Axiom::Antipode, "antipode"},
    {Axiom::EpsP, "epsP"},
    {Axiom::Graded, "graded"},
    {Axiom::Cofiltered, "cofiltered"},
}};

template <class B>
Rational counit_of(const B& b) {
  return b == B() ? Rational(1) : Rational(0);
}

template <class Carrier>
class AxiomChecker {
 public:
  using B = typename Carrier::Basis;

  AxiomChecker(const Signature& sig, const Carrier& carrier, AxiomReport& report)
      : sig_(sig), carrier_(carrier), report_(report), antipode_(carrier) {}

  void fail(const std::string& what) {
    if (report_.failures++ == 0) report_.witness = what;
  }

  template <class V>
  void expect_equal(const V& lhs, const V& rhs, const std::string& where) {
    ++report_.checked;
    if (!(lhs == rhs))
      fail(where + ": " + to_plain(sig_, lhs) + " != " + to_plain(sig_, rhs));
  }

  void coassoc(const B& b) {
    Tensor3Comb<B> lhs, rhs;
    for (const auto& [p, c] : carrier_.coproduct(b)) {
      for (const auto& [q, d] : carrier_.coproduct(p.first))
        lhs.add_term({q.first, q.second, p.second}, c * d);
      for (const auto& [q, d] : carrier_.coproduct(p.second))
        rhs.add_term({p.first, q.first, q.second}, c * d);
    }
    expect_equal(lhs, rhs, "(Δ⊗id)Δ vs (id⊗Δ)Δ at " + to_plain(sig_, b));
  }

  void counit(const B& b) {
    LinComb<B> left, right;
    for (const auto& [p, c] : carrier_.coproduct(b)) {
      left.add_term(p.second, c * counit_of(p.first));
      right.add_term(p.first, c * counit_of(p.second));
    }
    expect_equal(left, LinComb<B>(b), "(ε⊗id)Δ at " + to_plain(sig_, b));
    expect_equal(right, LinComb<B>(b), "(id⊗ε)Δ at " + to_plain(sig_, b));
  }

  void bialgebra(const B& a, const B& b) {
    const auto lhs = coproduct(carrier_, carrier_.product(a, b));
    const auto rhs = tensor_product(carrier_.coproduct(a), carrier_.coproduct(b),
                                    [&](const B& l, const B& r) { return carrier_.product(l, r); });
    expect_equal(lhs, rhs, "Δ(ab) vs Δ(a)Δ(b) at a = " + to_plain(sig_, a) +
                               ", b = " + to_plain(sig_, b));
  }

  void cocycle(Op op, const B& b) {
    const LinComb<B> raised = carrier_.raise(op, b);
    TensorComb<B> rhs;
    for (const auto& [r, c] : raised) rhs.add_term({r, B()}, c);
    for (const auto& [p, c] : carrier_.coproduct(b))
      for (const auto& [r, d] : carrier_.raise(op, p.second)) rhs.add_term({p.first, r}, c * d);
    expect_equal(coproduct(carrier_, raised), rhs,
                 "cocycle for " + sig_.operator_name(op) + " at " + to_plain(sig_, b));
  }

  void antipode(const B& b) {
    LinComb<B> left, right;
    for (const auto& [p, c] : carrier_.coproduct(b)) {
      left.add_scaled(product(carrier_, antipode_(p.first), LinComb<B>(p.second)), c);
      right.add_scaled(product(carrier_, LinComb<B>(p.first), antipode_(p.second)), c);
    }
    const LinComb<B> unit(B(), counit_of(b));
    expect_equal(left, unit, "m(S⊗id)Δ at " + to_plain(sig_, b));
    expect_equal(right, unit, "m(id⊗S)Δ at " + to_plain(sig_, b));
  }

  void eps_p(Op op, const B& b) {
    ++report_.checked;
    const LinComb<B> raised = carrier_.raise(op, b);
    if (raised.coefficient(B()) != 0)
      fail("ε P_" + sig_.operator_name(op) + " nonzero at " + to_plain(sig_, b));
  }

  void graded(const B& b) {
    ++report_.checked;
    const std::size_t n = carrier_.degree(b);
    for (const auto& [p, c] : carrier_.coproduct(b)) {
      if (carrier_.degree(p.first) + carrier_.degree(p.second) != n) {
        fail("degree of " + to_plain(sig_, p) + " in Δ(" + to_plain(sig_, b) + ")");
        return;
      }
    }
  }

  void cofiltered(const B& b) {
    ++report_.checked;
    const std::size_t n = carrier_.degree(b);
    for (const auto& [p, c] : carrier_.coproduct(b)) {
      if (carrier_.degree(p.first) + carrier_.degree(p.second) > n) {
        fail("degree of " + to_plain(sig_, p) + " exceeds that of " + to_plain(sig_, b));
        return;
      }
    }
    if (b == B()) return;
    for (const auto& [p, c] : reduced_coproduct(carrier_, b)) {
      if (p.first == B() || p.second == B()) {
        fail("reduced coproduct of " + to_plain(sig_, b) + " has a unit leg in " +
             to_plain(sig_, p));
        return;
      }
    }
  }

 private:
  const Signature& sig_;
  const Carrier& carrier_;
  AxiomReport& report_;
  Antipode<Carrier> antipode_;
};

template <class Carrier>
AxiomReport run_axiom(const Signature& sig, const Carrier& carrier, Axiom axiom,
                      const std::vector<typename Carrier::Basis>& corpus, std::size_t max_degree) {
  AxiomReport report;
  report.axiom = axiom;
  if (axiom == Axiom::Graded && !carrier.graded()) {
    report.applicable = false;
    return report;
  }
  AxiomChecker<Carrier> check(sig, carrier, report);
  std::vector<const typename Carrier::Basis*> in_range;
  for (const auto& b : corpus)
    if (carrier.degree(b) <= max_degree) in_range.push_back(&b);

  for (const auto* b : in_range) {
    switch (axiom) {
      case Axiom::Coassoc: check.coassoc(*b); break;
      case Axiom::Counit: check.counit(*b); break;
      case Axiom::Antipode: check.antipode(*b); break;
      case Axiom::Graded: check.graded(*b); break;
      case Axiom::Cofiltered: check.cofiltered(*b); break;
      case Axiom::Bialgebra:
        for (const auto* c : in_range)
          if (carrier.degree(*b) + carrier.degree(*c) <= max_degree) check.bialgebra(*b, *c);
        break;
      case Axiom::Cocycle:
      case Axiom::EpsP:
        if (carrier.degree(*b) >= max_degree) break;
        for (std::size_t i = 0; i < sig.operator_count(); ++i) {
          const Op op{static_cast<std::uint32_t>(i)};
          if (axiom == Axiom::Cocycle) {
            check.cocycle(op, *b);
          } else {
            check.eps_p(op, *b);
          }
        }
        break;
    }
  }
  return report;
}

}  // namespace

std::string_view axiom_name(Axiom axiom) {
  for (const auto& [a, name] : kAxiomNames)
    if (a == axiom) return name;
  return "unknown";
}

std::optional<Axiom> parse_axiom(std::string_view name) {
  for (const auto& [a, n] : kAxiomNames)
    if (n == name) return a;
  return std::nullopt;
}

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> axioms = [] {
    std::vector<Axiom> out;
    for (const auto& [a, name] : kAxiomNames) out.push_back(a);
    return out;
  }();
  return axioms;
}

AxiomReport check_axiom(const Signature& sig, const RtCarrier& carrier, Axiom axiom,
                        const std::vector<Forest>& corpus, std::size_t max_degree) {
  return run_axiom(sig, carrier, axiom, corpus, max_degree);
}

AxiomReport check_axiom(const Signature& sig, const MrbCarrier& carrier, Axiom axiom,
                        const std::vector<Word>& corpus, std::size_t max_degree) {
  return run_axiom(sig, carrier, axiom, corpus, max_degree);
}

std::vector<Forest> enumerate_forests(const Signature& sig, std::size_t max_degree) {
  std::vector<Forest> out;
  for (const Word& w : enumerate_words(sig, max_degree)) out.push_back(theta(w));
  return out;
}

std::vector<Word> enumerate_mrbw(const Signature& sig, std::size_t max_degree) {
  std::vector<Word> out;
  for (Word& w : enumerate_words(sig, max_degree))
    if (is_mrbw(w)) out.push_back(std::move(w));
  return out;
}

}  // namespace matchrb
