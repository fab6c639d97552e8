#pragma once

#include "matchrb/algebra.hpp"
#include "matchrb/hopf.hpp"
#include "matchrb/rewriting.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace matchrb {

/// Outcome of one exhaustive property check.
struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string witness;  ///< first counterexample, empty on success
  std::string note;     ///< optional detail for passing checks

  void fail(std::string what) {
    if (passed) witness = std::move(what);
    passed = false;
  }
};

/// All gs-engine compositions within the bounds reduce trivially.
CheckResult check_gsb(const Signature& sig, const GsbBounds& bounds);
/// Passes when dropping the weight term from the relations used to form
/// compositions produces at least one nontrivial composition.
CheckResult check_gsb_negative_control(const Signature& sig, GsbBounds bounds);

/// diamond(w, w′) = normal_form(w w′) for all MRBW pairs with degree sum
/// <= max_sum, plus `samples` random pairs of degree sum exactly sample_sum.
CheckResult check_diamond_oracle(const Signature& sig, std::size_t max_sum, std::size_t samples,
                                 std::size_t sample_sum, std::uint64_t seed);
/// Matching Rota-Baxter identity for all α, β and MRBWs x, y of degree <= n.
CheckResult check_rb_identity(const Signature& sig, std::size_t max_degree);
/// Σ k_ω P_ω is a Rota-Baxter operator of weight λ Σ k_ω. Requires a
/// constant-weight signature.
CheckResult check_combined_operator(const Signature& sig, const std::map<Op, Rational>& k,
                                    std::size_t max_degree);
/// Associativity of diamond and of every fixed-ω double product, and the
/// fixed-ω pre-Lie identity, on MRBW triples of degree <= n.
CheckResult check_diamond_associativity(const Signature& sig, std::size_t max_degree);
CheckResult check_double_product_associativity(const Signature& sig, std::size_t max_degree);
CheckResult check_pre_lie(const Signature& sig, std::size_t max_degree);
/// Every term of w ⋄ w′ has degree <= deg w + deg w′ for pairs with sum <= n.
CheckResult check_filtration(const Signature& sig, std::size_t max_sum);

/// Subforest and cocycle routes of Δ_RT agree on forests of degree <= n.
CheckResult check_route_agreement(const Signature& sig, std::size_t max_degree);
/// (ψ ⊗ ψ) Δ_RT = Δ_L ψ on forests of degree <= n.
CheckResult check_psi_compatibility(const Signature& sig, std::size_t max_degree);
CheckResult check_hopf_axiom(const Signature& sig, Axiom axiom, bool rt_carrier,
                             std::size_t max_degree);

/// Antisymmetry, totality and transitivity of ≤db on words of degree <= n.
CheckResult check_order_total(const Signature& sig, std::size_t max_degree);
/// u < v implies q|_u < q|_v for words of degree <= n and star words of the
/// given depth and non-hole degree.
CheckResult check_monomial_property(const Signature& sig, std::size_t max_degree,
                                    std::size_t context_depth, std::size_t context_degree);
/// Every rewrite at every redex of every word of degree <= n lowers ≤db.
CheckResult check_rewrite_decrease(const Signature& sig, std::size_t max_degree);
/// The outermost and innermost strategies give the same normal form.
CheckResult check_confluence(const Signature& sig, std::size_t max_degree);

/// θ is a degree- and depth-preserving bijection, ψ θ = θ φ, and ψ is a
/// homomorphism for products and grafting, on degree <= n.
CheckResult check_theta_transport(const Signature& sig, std::size_t max_degree);

struct SuiteOptions {
  std::optional<std::size_t> max_degree;
  std::size_t context_depth = 2;
  bool mutate_relations = false;
  std::uint64_t seed = 5489;
};

inline constexpr std::string_view kSuiteNames[] = {"gsb", "hopf", "mrba", "order"};

/// Runs a named suite ("gsb", "hopf", "mrba", "order" or "all").
/// std::invalid_argument for an unknown name.
std::vector<CheckResult> run_suite(const Signature& sig, std::string_view suite,
                                   const SuiteOptions& options);

}  // namespace matchrb
