#pragma once

#include "matchrb/lincomb.hpp"
#include "matchrb/order.hpp"
#include "matchrb/word.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace matchrb {

/// f_{α,β}(x, y) = ⌊x⌋_α⌊y⌋_β − ⌊x⌊y⌋_β⌋_α − ⌊⌊x⌋_α y⌋_β − λ_β⌊xy⌋_α.
///
/// `drop_weight_term` removes the last summand; it exists only to build
/// negative controls for the composition checks.
struct SRelation {
  Word x;
  Op alpha;
  Word y;
  Op beta;
  bool drop_weight_term = false;

  /// ⌊x⌋_α⌊y⌋_β, the leading monomial.
  Word leading_word() const;
  LinComb<Word> value(const Signature& sig) const;
};

/// An occurrence of ⌊u⌋_α⌊v⌋_β inside a word: w = context|_{⌊u⌋_α⌊v⌋_β}.
struct Redex {
  StarWord context;
  Word left_body;
  Op left_op;
  Word right_body;
  Op right_op;
};

/// Leftmost-outermost redex, or nullopt when w ∈ Irr(S).
std::optional<Redex> find_redex(const Word& w);

/// Leftmost-innermost redex (one with no redex inside either bracket).
std::optional<Redex> find_innermost_redex(const Word& w);

/// Replaces the redex by ⌊u⌊v⌋_β⌋_α + ⌊⌊u⌋_α v⌋_β + λ_β⌊uv⌋_α in context.
LinComb<Word> rewrite_at(const Signature& sig, const Redex& redex);

/// rewrite_at on the leftmost-outermost redex; std::invalid_argument if w
/// is irreducible.
LinComb<Word> rewrite_once(const Signature& sig, const Word& w);

/// True iff no two bracket atoms are adjacent at any nesting level.
bool is_mrbw(const Word& w);
bool is_mrbw(const LinComb<Word>& v);

/// Monomials rewritten during a reduction, in the order they were rewritten.
struct ReductionTrace {
  std::vector<Word> rewritten;
};

/// The projection onto k·Irr(S): repeatedly rewrites the ≤db-largest
/// reducible monomial until none remains.
LinComb<Word> normal_form(const Signature& sig, const LinComb<Word>& v,
                          ReductionTrace* trace = nullptr);
LinComb<Word> normal_form(const Signature& sig, const Word& w);

/// Alternate strategy: depth-first, always rewriting the leftmost-innermost
/// redex. Kept for confluence checks against normal_form.
LinComb<Word> normal_form_innermost(const Signature& sig, const LinComb<Word>& v);

enum class CompositionKind { Intersection, Including };

struct CompositionReport {
  CompositionKind kind = CompositionKind::Intersection;
  Word ambiguity;
  LinComb<Word> composition;
  LinComb<Word> remainder;   ///< what is left after reduction; zero when trivial
  ReductionTrace trace;
  bool bounded = true;       ///< every rewritten monomial was below the ambiguity
  bool trivial() const { return remainder.is_zero() && bounded; }
};

/// (f, g)_w = f·⌊z⌋_γ − ⌊x⌋_α·g for f = f_{α,β}(x, y), g = g_{β,γ}(y, z).
/// std::invalid_argument unless f and g share the middle factor ⌊y⌋_β.
CompositionReport intersection_composition(const Signature& sig, const SRelation& f,
                                           const SRelation& g);

/// (f, g)_w = f − q|_g where the leading word of f equals q|_{ḡ}.
/// std::invalid_argument when the inclusion does not hold.
CompositionReport including_composition(const Signature& sig, const SRelation& f,
                                        const SRelation& g, const StarWord& q);

enum class Side { Left, Right };

/// The two inclusion shapes: with g = g_{β,γ}(x, y) and s = u|_{⌊x⌋_β⌊y⌋_γ},
/// Left builds f = f_{α,δ}(s, z) with q = ⌊u⌋_α⌊z⌋_δ, Right builds
/// f = f_{δ,α}(z, s) with q = ⌊z⌋_δ⌊u⌋_α.
CompositionReport including_case(const Signature& sig, const StarWord& u, const Word& x,
                                 const Word& y, const Word& z, Op alpha, Op beta, Op gamma,
                                 Op delta, Side side, bool drop_weight_term = false);

struct GsbBounds {
  std::size_t intersection_degree = 2;  ///< x, y, z range over total degree <= this
  std::size_t including_degree = 1;     ///< x, y, z for inclusions
  std::size_t context_depth = 2;
  std::size_t context_degree = 2;       ///< non-hole total degree of contexts
  bool drop_weight_term = false;        ///< negative control
  bool stop_at_first_nontrivial = false;
};

struct GsbSummary {
  std::size_t intersection_checked = 0;
  std::size_t including_checked = 0;
  std::size_t nontrivial = 0;
  std::size_t max_steps = 0;
  std::optional<CompositionReport> witness;  ///< first nontrivial composition
  bool passed() const { return nontrivial == 0; }
};

/// Runs every composition within the bounds; `each` (if given) sees every report.
GsbSummary verify_gsb(const Signature& sig, const GsbBounds& bounds,
                      const std::function<void(const CompositionReport&)>& each = {});

}  // namespace matchrb
