#include "matchrb/properties.hpp"

#include "matchrb/format.hpp"

#include <random>
#include <stdexcept>

namespace matchrb {

namespace {

Op op_at(std::size_t i) { return Op{static_cast<std::uint32_t>(i)}; }

std::vector<std::vector<Word>> by_degree(std::vector<Word> words, std::size_t max_degree) {
  std::vector<std::vector<Word>> out(max_degree + 1);
  for (Word& w : words) out[total_degree(w)].push_back(std::move(w));
  return out;
}

std::string composition_witness(const Signature& sig, const CompositionReport& r) {
  std::string out = std::string(r.kind == CompositionKind::Intersection ? "intersection"
                                                                        : "including") +
                    " composition at " + to_plain(sig, r.ambiguity) + " leaves " +
                    to_plain(sig, r.remainder);
  if (!r.bounded) out += " (a rewritten monomial is not below the ambiguity)";
  return out;
}

// Planar forests with at most n vertices, generated directly from trees.
std::vector<std::vector<Forest>> forests_by_size(const Signature& sig, std::size_t n) {
  std::vector<std::vector<Tree>> trees(n + 1);
  std::vector<std::vector<Forest>> forests(n + 1);
  forests[0].push_back(Forest());
  for (std::size_t k = 1; k <= n; ++k) {
    if (k == 1) {
      for (std::size_t i = 0; i < sig.letter_count(); ++i)
        trees[1].emplace_back(Decoration::letter(Letter{static_cast<std::uint32_t>(i)}));
    }
    for (std::size_t i = 0; i < sig.operator_count(); ++i)
      for (const Forest& f : forests[k - 1]) trees[k].push_back(graft(op_at(i), f));
    for (std::size_t first = 1; first <= k; ++first)
      for (const Tree& t : trees[first])
        for (const Forest& rest : forests[k - first]) {
          std::vector<Tree> ts{t};
          ts.insert(ts.end(), rest.trees().begin(), rest.trees().end());
          forests[k].emplace_back(std::move(ts));
        }
  }
  return forests;
}

Signature constant_weight(const Signature& sig) {
  std::vector<OperatorSpec> ops = sig.operators();
  for (OperatorSpec& op : ops) op.weight = ops.front().weight;
  return Signature(sig.letters(), std::move(ops));
}

}  // namespace

CheckResult check_gsb(const Signature& sig, const GsbBounds& bounds) {
  CheckResult result{"gsb/compositions"};
  const GsbSummary s = verify_gsb(sig, bounds);
  result.checked = s.intersection_checked + s.including_checked;
  if (!s.passed())
    result.fail(std::to_string(s.nontrivial) + " nontrivial, first: " +
                composition_witness(sig, *s.witness));
  return result;
}

CheckResult check_gsb_negative_control(const Signature& sig, GsbBounds bounds) {
  CheckResult result{"gsb/negative-control"};
  bounds.drop_weight_term = true;
  bounds.stop_at_first_nontrivial = true;
  const GsbSummary s = verify_gsb(sig, bounds);
  result.checked = s.intersection_checked + s.including_checked;
  if (s.passed()) {
    result.fail("every composition is trivial without the weight term");
  } else {
    result.note = composition_witness(sig, *s.witness);
  }
  return result;
}

CheckResult check_diamond_oracle(const Signature& sig, std::size_t max_sum, std::size_t samples,
                                 std::size_t sample_sum, std::uint64_t seed) {
  CheckResult result{"mrba/diamond-oracle"};
  auto compare = [&](const Word& u, const Word& v) {
    ++result.checked;
    const LinComb<Word> native = diamond(sig, u, v);
    const LinComb<Word> oracle = normal_form(sig, concat(u, v));
    if (!(native == oracle))
      result.fail(to_plain(sig, u) + " ⋄ " + to_plain(sig, v) + " = " + to_plain(sig, native) +
                  " but the normal form is " + to_plain(sig, oracle));
  };
  const std::size_t top = std::max(max_sum, sample_sum > 0 ? sample_sum - 1 : 0);
  const auto words = by_degree(enumerate_mrbw(sig, top), top);
  for (std::size_t i = 0; i <= max_sum; ++i)
    for (std::size_t j = 0; i + j <= max_sum; ++j)
      for (const Word& u : words[i])
        for (const Word& v : words[j]) compare(u, v);
  if (samples > 0 && sample_sum >= 2) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> split(1, sample_sum - 1);
    for (std::size_t s = 0; s < samples; ++s) {
      const std::size_t d = split(rng);
      const auto& left = words[d];
      const auto& right = words[sample_sum - d];
      const Word& u = left[std::uniform_int_distribution<std::size_t>(0, left.size() - 1)(rng)];
      const Word& v = right[std::uniform_int_distribution<std::size_t>(0, right.size() - 1)(rng)];
      compare(u, v);
    }
  }
  return result;
}

CheckResult check_rb_identity(const Signature& sig, std::size_t max_degree) {
  CheckResult result{"mrba/rota-baxter-identity"};
  const auto words = enumerate_mrbw(sig, max_degree);
  for (std::size_t a = 0; a < sig.operator_count(); ++a)
    for (std::size_t b = 0; b < sig.operator_count(); ++b)
      for (const Word& x : words)
        for (const Word& y : words) {
          ++result.checked;
          const Op alpha = op_at(a), beta = op_at(b);
          const LinComb<Word> lx(x), ly(y);
          const LinComb<Word> lhs = diamond(sig, p_op(alpha, lx), p_op(beta, ly));
          LinComb<Word> rhs = p_op(alpha, diamond(sig, lx, p_op(beta, ly)));
          rhs += p_op(beta, diamond(sig, p_op(alpha, lx), ly));
          rhs.add_scaled(p_op(alpha, diamond(sig, lx, ly)), sig.weight(beta));
          if (!(lhs == rhs))
            result.fail("α = " + sig.operator_name(alpha) + ", β = " + sig.operator_name(beta) +
                        ", x = " + to_plain(sig, x) + ", y = " + to_plain(sig, y));
        }
  return result;
}

CheckResult check_combined_operator(const Signature& sig, const std::map<Op, Rational>& k,
                                    std::size_t max_degree) {
  if (!sig.has_constant_weight())
    throw std::invalid_argument("combined operator check needs a constant weight");
  std::string label;
  Rational total = 0;
  for (const auto& [op, c] : k) {
    label += (label.empty() ? "" : ", ") + sig.operator_name(op) + " = " + to_string(c);
    total += c;
  }
  CheckResult result{"mrba/combined-operator (" + label + ")"};
  const Rational mu = sig.weight(Op{0}) * total;
  auto q = [&](const LinComb<Word>& v) { return combined_operator(k, v); };
  const auto words = enumerate_mrbw(sig, max_degree);
  for (const Word& x : words)
    for (const Word& y : words) {
      ++result.checked;
      const LinComb<Word> lx(x), ly(y);
      const LinComb<Word> lhs = diamond(sig, q(lx), q(ly));
      LinComb<Word> rhs = q(diamond(sig, lx, q(ly)));
      rhs += q(diamond(sig, q(lx), ly));
      rhs.add_scaled(q(diamond(sig, lx, ly)), mu);
      if (!(lhs == rhs)) result.fail("x = " + to_plain(sig, x) + ", y = " + to_plain(sig, y));
    }
  return result;
}

namespace {

template <class Product>
CheckResult check_triples(const Signature& sig, std::string name, std::size_t max_degree,
                          Product&& mul) {
  CheckResult result{std::move(name)};
  const auto words = enumerate_mrbw(sig, max_degree);
  for (const Word& x : words)
    for (const Word& y : words)
      for (const Word& z : words) {
        ++result.checked;
        const LinComb<Word> lx(x), ly(y), lz(z);
        if (!mul(lx, ly, lz))
          result.fail("x = " + to_plain(sig, x) + ", y = " + to_plain(sig, y) +
                      ", z = " + to_plain(sig, z));
      }
  return result;
}

}  // namespace

CheckResult check_diamond_associativity(const Signature& sig, std::size_t max_degree) {
  return check_triples(sig, "mrba/diamond-associativity", max_degree,
                       [&](const auto& x, const auto& y, const auto& z) {
                         return diamond(sig, diamond(sig, x, y), z) ==
                                diamond(sig, x, diamond(sig, y, z));
                       });
}

CheckResult check_double_product_associativity(const Signature& sig, std::size_t max_degree) {
  return check_triples(sig, "mrba/double-product-associativity", max_degree,
                       [&](const auto& x, const auto& y, const auto& z) {
                         for (std::size_t i = 0; i < sig.operator_count(); ++i) {
                           const Op op = op_at(i);
                           if (!(double_product(sig, op, double_product(sig, op, x, y), z) ==
                                 double_product(sig, op, x, double_product(sig, op, y, z))))
                             return false;
                         }
                         return true;
                       });
}

CheckResult check_pre_lie(const Signature& sig, std::size_t max_degree) {
  return check_triples(sig, "mrba/pre-lie-identity", max_degree,
                       [&](const auto& x, const auto& y, const auto& z) {
                         for (std::size_t i = 0; i < sig.operator_count(); ++i) {
                           const Op op = op_at(i);
                           auto m = [&](const LinComb<Word>& a, const LinComb<Word>& b) {
                             return pre_lie(sig, op, a, b);
                           };
                           if (!(m(m(x, y), z) - m(x, m(y, z)) == m(m(y, x), z) - m(y, m(x, z))))
                             return false;
                         }
                         return true;
                       });
}

CheckResult check_filtration(const Signature& sig, std::size_t max_sum) {
  CheckResult result{"mrba/filtration"};
  const auto words = enumerate_mrbw(sig, max_sum);
  for (const Word& u : words)
    for (const Word& v : words) {
      const std::size_t n = total_degree(u) + total_degree(v);
      if (n > max_sum) continue;
      ++result.checked;
      for (const auto& [w, c] : diamond(sig, u, v))
        if (total_degree(w) > n)
          result.fail(to_plain(sig, w) + " in " + to_plain(sig, u) + " ⋄ " + to_plain(sig, v));
      for (std::size_t i = 0; i < sig.operator_count(); ++i)
        if (total_degree(Word::bracket(op_at(i), u)) != total_degree(u) + 1)
          result.fail("P_" + sig.operator_name(op_at(i)) + " at " + to_plain(sig, u));
    }
  return result;
}

CheckResult check_route_agreement(const Signature& sig, std::size_t max_degree) {
  CheckResult result{"hopf/route-agreement"};
  for (const Forest& f : enumerate_forests(sig, max_degree)) {
    ++result.checked;
    const auto a = coproduct_rt(f, CoproductRoute::Subforest);
    const auto b = coproduct_rt(f, CoproductRoute::Cocycle);
    if (!(a == b))
      result.fail(to_plain(sig, f) + ": subforests give " + to_plain(sig, a) +
                  ", the cocycle recursion gives " + to_plain(sig, b));
  }
  return result;
}

CheckResult check_psi_compatibility(const Signature& sig, std::size_t max_degree) {
  CheckResult result{"hopf/psi-compatibility"};
  for (const Forest& f : enumerate_forests(sig, max_degree)) {
    ++result.checked;
    TensorComb<Forest> lhs;
    for (const auto& [p, c] : coproduct_rt(f))
      lhs.add_scaled(tensor(psi(sig, p.first), psi(sig, p.second)), c);
    TensorComb<Forest> rhs;
    for (const auto& [g, c] : psi(sig, f)) rhs.add_scaled(coproduct_mrb(sig, g), c);
    if (!(lhs == rhs)) result.fail("at " + to_plain(sig, f));
  }
  return result;
}

CheckResult check_hopf_axiom(const Signature& sig, Axiom axiom, bool rt_carrier,
                             std::size_t max_degree) {
  AxiomReport report;
  if (rt_carrier) {
    const RtCarrier carrier;
    report = check_axiom(sig, carrier, axiom, enumerate_forests(sig, max_degree), max_degree);
  } else {
    const MrbCarrier carrier(sig);
    report = check_axiom(sig, carrier, axiom, enumerate_mrbw(sig, max_degree), max_degree);
  }
  CheckResult result{std::string("hopf/") + (rt_carrier ? "rt/" : "mrb/") +
                     std::string(axiom_name(axiom))};
  if (!report.applicable) result.name += " (not applicable)";
  result.checked = report.checked;
  if (!report.passed())
    result.fail(std::to_string(report.failures) + " failures, first: " + report.witness);
  return result;
}

CheckResult check_order_total(const Signature& sig, std::size_t max_degree) {
  CheckResult result{"order/total-order"};
  const auto words = enumerate_words(sig, max_degree);
  for (std::size_t i = 0; i < words.size(); ++i) {
    ++result.checked;
    if (compare_db(words[i], words[i]) != 0) result.fail("reflexivity at " + to_plain(sig, words[i]));
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (compare_db(words[i], words[j]) >= 0 || compare_db(words[j], words[i]) <= 0)
        result.fail("sorted pair out of order: " + to_plain(sig, words[i]) + " and " +
                    to_plain(sig, words[j]));
    }
  }
  return result;
}

CheckResult check_monomial_property(const Signature& sig, std::size_t max_degree,
                                    std::size_t context_depth, std::size_t context_degree) {
  CheckResult result{"order/monomial-property"};
  const auto words = enumerate_words(sig, max_degree);
  std::vector<StarWord> contexts{StarWord()};
  for (StarWord& q : enumerate_star_words(sig, context_degree, context_depth))
    if (!(q == StarWord())) contexts.push_back(std::move(q));
  for (const StarWord& q : contexts) {
    std::vector<Word> images;
    images.reserve(words.size());
    for (const Word& w : words) images.push_back(substitute(q, w));
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        ++result.checked;
        if (compare_db(images[i], images[j]) >= 0)
          result.fail(to_plain(sig, words[i]) + " < " + to_plain(sig, words[j]) +
                      " but not after substitution into a context");
      }
  }
  return result;
}

CheckResult check_rewrite_decrease(const Signature& sig, std::size_t max_degree) {
  CheckResult result{"order/rewrite-decrease"};
  for (const Word& w : enumerate_words(sig, max_degree)) {
    for (const auto& [q, v] : enumerate_contexts(w)) {
      const auto atoms = v.atoms();
      if (atoms.size() != 2 || !atoms[0].bracket || !atoms[1].bracket) continue;
      ++result.checked;
      const Redex redex{q, word_from_span(atoms[0].body), Op{atoms[0].symbol},
                        word_from_span(atoms[1].body), Op{atoms[1].symbol}};
      for (const auto& [u, c] : rewrite_at(sig, redex))
        if (compare_db(u, w) >= 0)
          result.fail(to_plain(sig, w) + " rewrites to the larger " + to_plain(sig, u));
    }
  }
  return result;
}

CheckResult check_confluence(const Signature& sig, std::size_t max_degree) {
  CheckResult result{"order/confluence"};
  for (const Word& w : enumerate_words(sig, max_degree)) {
    ++result.checked;
    const LinComb<Word> a = normal_form(sig, w);
    const LinComb<Word> b = normal_form_innermost(sig, LinComb<Word>(w));
    if (!(a == b)) {
      result.fail(to_plain(sig, w) + ": outermost gives " + to_plain(sig, a) +
                  ", innermost gives " + to_plain(sig, b));
    } else if (!is_mrbw(a)) {
      result.fail("normal form of " + to_plain(sig, w) + " has adjacent brackets");
    }
  }
  return result;
}

CheckResult check_theta_transport(const Signature& sig, std::size_t max_degree) {
  CheckResult result{"mrba/theta-transport"};
  const auto words = enumerate_words(sig, max_degree);
  std::vector<Forest> images;
  for (const Word& w : words) {
    ++result.checked;
    const Forest f = theta(w);
    const WordStatistics s = statistics(w);
    if (!(theta_inv(f) == w)) result.fail("θ⁻¹θ differs at " + to_plain(sig, w));
    if (degree(f) != s.total_degree || forest_depth(f) != depth(w) || breadth(f) != s.breadth)
      result.fail("θ changes degree, depth or breadth at " + to_plain(sig, w));
    if (!(psi(sig, f) == theta(normal_form(sig, w))))
      result.fail("ψθ differs from θφ at " + to_plain(sig, w));
    images.push_back(f);
  }
  std::size_t forest_count = 0;
  for (const auto& level : forests_by_size(sig, max_degree))
    for (const Forest& f : level) {
      ++forest_count;
      if (!(theta(theta_inv(f)) == f)) result.fail("θθ⁻¹ differs at " + to_plain(sig, f));
    }
  if (forest_count != images.size())
    result.fail(std::to_string(forest_count) + " forests but " + std::to_string(images.size()) +
                " words");

  for (const Forest& f : images)
    for (const Forest& g : images) {
      if (degree(f) + degree(g) > max_degree) continue;
      ++result.checked;
      if (!(psi(sig, concat(f, g)) == diamond_forest(sig, psi(sig, f), psi(sig, g))))
        result.fail("ψ(FF′) differs from ψ(F) ⋄ ψ(F′) at F = " + to_plain(sig, f) +
                    ", F′ = " + to_plain(sig, g));
    }
  for (const Forest& f : images) {
    if (degree(f) >= max_degree) continue;
    for (std::size_t i = 0; i < sig.operator_count(); ++i) {
      ++result.checked;
      const Op op = op_at(i);
      const LinComb<Forest> lhs = psi(sig, Forest(graft(op, f)));
      const LinComb<Forest> rhs = theta(p_op(op, theta_inv(psi(sig, f))));
      if (!(lhs == rhs))
        result.fail("ψB⁺ differs from P ψ at " + to_plain(sig, f) + " for " +
                    sig.operator_name(op));
    }
  }
  return result;
}

std::vector<CheckResult> run_suite(const Signature& sig, std::string_view suite,
                                   const SuiteOptions& options) {
  std::vector<CheckResult> out;
  if (suite == "all") {
    for (std::string_view name : kSuiteNames)
      for (CheckResult& r : run_suite(sig, name, options)) out.push_back(std::move(r));
    return out;
  }
  if (suite == "gsb") {
    GsbBounds bounds;
    if (options.max_degree) bounds.intersection_degree = *options.max_degree;
    bounds.including_degree = std::min(bounds.including_degree, bounds.intersection_degree);
    bounds.context_depth = options.context_depth;
    bounds.drop_weight_term = options.mutate_relations;
    bounds.stop_at_first_nontrivial = options.mutate_relations;
    out.push_back(check_gsb(sig, bounds));
  } else if (suite == "hopf") {
    const std::size_t n = options.max_degree.value_or(4);
    out.push_back(check_route_agreement(sig, n + 1));
    for (Axiom axiom : all_axioms()) {
      out.push_back(check_hopf_axiom(sig, axiom, false, n));
      out.push_back(check_hopf_axiom(sig, axiom, true, n + 1));
    }
    out.push_back(check_psi_compatibility(sig, n));
  } else if (suite == "mrba") {
    const std::size_t n = options.max_degree.value_or(4);
    const std::size_t half = n / 2;
    out.push_back(check_diamond_oracle(sig, n, 500, n + 2, options.seed));
    out.push_back(check_rb_identity(sig, half));
    const Signature constant = constant_weight(sig);
    const std::size_t ops = constant.operator_count();
    std::vector<std::map<Op, Rational>> choices{{{Op{0}, 1}}};
    if (ops > 1) {
      std::map<Op, Rational> halves, ones;
      for (std::size_t i = 0; i < ops; ++i) {
        halves[op_at(i)] = Rational(1, static_cast<long>(ops));
        ones[op_at(i)] = 1;
      }
      choices.push_back(halves);
      choices.push_back(ones);
    }
    for (const auto& k : choices) out.push_back(check_combined_operator(constant, k, half));
    out.push_back(check_diamond_associativity(sig, half));
    out.push_back(check_double_product_associativity(sig, half));
    out.push_back(check_pre_lie(sig, half));
    out.push_back(check_filtration(sig, n));
    out.push_back(check_theta_transport(sig, n));
  } else if (suite == "order") {
    const std::size_t n = options.max_degree.value_or(4);
    out.push_back(check_order_total(sig, n));
    out.push_back(check_monomial_property(sig, n, options.context_depth, 2));
    out.push_back(check_rewrite_decrease(sig, n));
    out.push_back(check_confluence(sig, n));
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  return out;
}

}  // namespace matchrb
