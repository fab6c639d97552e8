#pragma once

#include "matchrb/forest.hpp"
#include "matchrb/lincomb.hpp"
#include "matchrb/word.hpp"

#include <map>
#include <vector>

namespace matchrb {

/// The top-level factors of a matching Rota-Baxter word. Throws
/// std::invalid_argument for w = 1 or a word with adjacent brackets.
std::vector<Word> alternating_decomposition(const Word& w);

/// The product of the free matching Rota-Baxter algebra. Both arguments
/// must satisfy is_mrbw (std::invalid_argument otherwise).
LinComb<Word> diamond(const Signature& sig, const Word& w, const Word& v);
LinComb<Word> diamond(const Signature& sig, const LinComb<Word>& u, const LinComb<Word>& v);

/// P_ω applied termwise.
LinComb<Word> p_op(Op op, const LinComb<Word>& v);

/// ψ = θ ∘ normal_form ∘ θ⁻¹.
LinComb<Forest> psi(const Signature& sig, const LinComb<Forest>& v);
LinComb<Forest> psi(const Signature& sig, const Forest& f);

/// F ⋄_l F′ = θ(θ⁻¹F ⋄ θ⁻¹F′).
LinComb<Forest> diamond_forest(const Signature& sig, const Forest& f, const Forest& g);
LinComb<Forest> diamond_forest(const Signature& sig, const LinComb<Forest>& f,
                               const LinComb<Forest>& g);

/// x ≺_ω y = x P_ω(y) + λ_ω xy
LinComb<Word> dendriform_prec(const Signature& sig, Op op, const LinComb<Word>& x,
                              const LinComb<Word>& y);
/// x ≻_ω y = P_ω(x) y
LinComb<Word> dendriform_succ(const Signature& sig, Op op, const LinComb<Word>& x,
                              const LinComb<Word>& y);
/// x ∗_ω y = P_ω(x) y − y P_ω(x) − λ_ω yx
LinComb<Word> pre_lie(const Signature& sig, Op op, const LinComb<Word>& x,
                      const LinComb<Word>& y);
/// x ⋆_ω y = x P_ω(y) + P_ω(x) y + λ_ω xy
LinComb<Word> double_product(const Signature& sig, Op op, const LinComb<Word>& x,
                             const LinComb<Word>& y);

/// Σ_ω k_ω P_ω(v); operators missing from k contribute nothing.
LinComb<Word> combined_operator(const std::map<Op, Rational>& k, const LinComb<Word>& v);

}  // namespace matchrb
