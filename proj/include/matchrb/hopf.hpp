#pragma once

#include "matchrb/algebra.hpp"
#include "matchrb/forest.hpp"
#include "matchrb/lincomb.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace matchrb {

enum class CoproductRoute { Subforest, Cocycle };

/// Δ_RT: Σ G ⊗ F/G over subforests, or the 1-cocycle recursion
/// Δ(B⁺_ω F) = B⁺_ω F ⊗ 1 + (id ⊗ B⁺_ω)Δ(F) extended multiplicatively.
TensorComb<Forest> coproduct_rt(const Forest& f, CoproductRoute route = CoproductRoute::Subforest);
TensorComb<Forest> coproduct_rt(const LinComb<Forest>& v,
                                CoproductRoute route = CoproductRoute::Subforest);

/// Coefficient of the empty forest.
Rational counit_rt(const LinComb<Forest>& v);

/// Δ_L = (ψ ⊗ ψ) Δ_RT on a matching Rota-Baxter forest.
TensorComb<Forest> coproduct_mrb(const Signature& sig, const Forest& f);
/// Δ_L on words, transported through θ. Requires is_mrbw.
TensorComb<Word> coproduct_mrb(const Signature& sig, const Word& w);
TensorComb<Word> coproduct_mrb(const Signature& sig, const LinComb<Word>& v);

/// Coefficient of 1.
Rational counit_mrb(const LinComb<Word>& v);
Rational counit_mrb(const LinComb<Forest>& v);

/// The Hopf algebra of decorated planar rooted forests under concatenation.
class RtCarrier {
 public:
  using Basis = Forest;

  explicit RtCarrier(CoproductRoute route = CoproductRoute::Subforest) : route_(route) {}

  TensorComb<Forest> coproduct(const Forest& f) const { return coproduct_rt(f, route_); }
  LinComb<Forest> product(const Forest& a, const Forest& b) const {
    return LinComb<Forest>(concat(a, b));
  }
  LinComb<Forest> raise(Op op, const Forest& f) const { return LinComb<Forest>(Forest(graft(op, f))); }
  std::size_t degree(const Forest& f) const { return matchrb::degree(f); }
  bool graded() const { return true; }

 private:
  CoproductRoute route_;
};

/// The free matching Rota-Baxter algebra on MRBWs with diamond and Δ_L.
/// Coproducts are memoized.
class MrbCarrier {
 public:
  using Basis = Word;

  explicit MrbCarrier(const Signature& sig) : sig_(&sig) {}

  const TensorComb<Word>& coproduct(const Word& w) const;
  LinComb<Word> product(const Word& a, const Word& b) const { return diamond(*sig_, a, b); }
  LinComb<Word> raise(Op op, const Word& w) const { return LinComb<Word>(Word::bracket(op, w)); }
  std::size_t degree(const Word& w) const { return total_degree(w); }
  bool graded() const { return false; }
  const Signature& signature() const { return *sig_; }

 private:
  const Signature* sig_;
  mutable std::map<Word, TensorComb<Word>, CanonicalOrder<Word>> cache_;
};

template <class Carrier>
TensorComb<typename Carrier::Basis> coproduct(const Carrier& carrier,
                                               const LinComb<typename Carrier::Basis>& v) {
  TensorComb<typename Carrier::Basis> out;
  for (const auto& [b, c] : v) out.add_scaled(carrier.coproduct(b), c);
  return out;
}

template <class Carrier>
LinComb<typename Carrier::Basis> product(const Carrier& carrier,
                                         const LinComb<typename Carrier::Basis>& u,
                                         const LinComb<typename Carrier::Basis>& v) {
  LinComb<typename Carrier::Basis> out;
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : v) out.add_scaled(carrier.product(a, b), ca * cb);
  return out;
}

/// Δ(b) − b ⊗ 1 − 1 ⊗ b; std::invalid_argument for b = 1.
template <class Carrier>
TensorComb<typename Carrier::Basis> reduced_coproduct(const Carrier& carrier,
                                                      const typename Carrier::Basis& b) {
  using B = typename Carrier::Basis;
  if (b == B()) throw std::invalid_argument("reduced coproduct of the unit");
  TensorComb<B> out = carrier.coproduct(b);
  out.add_term({b, B()}, -1);
  out.add_term({B(), b}, -1);
  return out;
}

/// S(1) = 1, S(b) = −b − Σ S(b′) b″ over the reduced coproduct. Values are
/// memoized per basis element for the lifetime of the object.
template <class Carrier>
class Antipode {
 public:
  using Basis = typename Carrier::Basis;

  explicit Antipode(const Carrier& carrier) : carrier_(&carrier) {}

  const LinComb<Basis>& operator()(const Basis& b) const {
    if (auto it = cache_.find(b); it != cache_.end()) return it->second;
    LinComb<Basis> out;
    if (b == Basis()) {
      out.add_term(b, 1);
    } else {
      out.add_term(b, -1);
      for (const auto& [t, c] : reduced_coproduct(*carrier_, b)) {
        const LinComb<Basis> left = (*this)(t.first);
        out.add_scaled(product(*carrier_, left, LinComb<Basis>(t.second)), -c);
      }
    }
    return cache_.emplace(b, std::move(out)).first->second;
  }

  LinComb<Basis> operator()(const LinComb<Basis>& v) const {
    LinComb<Basis> out;
    for (const auto& [b, c] : v) out.add_scaled((*this)(b), c);
    return out;
  }

 private:
  const Carrier* carrier_;
  mutable std::map<Basis, LinComb<Basis>, CanonicalOrder<Basis>> cache_;
};

LinComb<Forest> antipode_rt(const LinComb<Forest>& v);
LinComb<Word> antipode_mrb(const Signature& sig, const LinComb<Word>& v);

enum class Axiom { Coassoc, Counit, Bialgebra, Cocycle, Antipode, EpsP, Graded, Cofiltered };

std::string_view axiom_name(Axiom axiom);
std::optional<Axiom> parse_axiom(std::string_view name);
const std::vector<Axiom>& all_axioms();

struct AxiomReport {
  Axiom axiom = Axiom::Coassoc;
  bool applicable = true;     ///< false for gradedness on the MRB carrier
  std::size_t checked = 0;    ///< basis elements or pairs examined
  std::size_t failures = 0;
  std::string witness;        ///< first failure, in plain notation
  bool passed() const { return failures == 0; }
};

/// Exhaustive check over basis elements of degree <= max_degree of the
/// given corpus. Pairs (bialgebra) are limited to degree sums <= max_degree
/// and the cocycle/epsP checks raise elements of degree < max_degree.
AxiomReport check_axiom(const Signature& sig, const RtCarrier& carrier, Axiom axiom,
                        const std::vector<Forest>& corpus, std::size_t max_degree);
AxiomReport check_axiom(const Signature& sig, const MrbCarrier& carrier, Axiom axiom,
                        const std::vector<Word>& corpus, std::size_t max_degree);

/// θ of every word of total degree <= n, ascending in ≤db of θ⁻¹.
std::vector<Forest> enumerate_forests(const Signature& sig, std::size_t max_degree);

/// Every MRBW of total degree <= n, ascending in ≤db.
std::vector<Word> enumerate_mrbw(const Signature& sig, std::size_t max_degree);

}  // namespace matchrb
