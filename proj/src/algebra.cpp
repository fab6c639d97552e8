#include "matchrb/algebra.hpp"

#include "matchrb/rewriting.hpp"

#include <stdexcept>
#include <unordered_map>

namespace matchrb {

namespace {

void require_mrbw(const Word& w) {
  if (!is_mrbw(w)) throw std::invalid_argument("not a matching Rota-Baxter word");
}

void require_mrbw(const LinComb<Word>& v) {
  for (const auto& [w, c] : v) require_mrbw(w);
}

LinComb<Word> diamond_unchecked(const Signature& sig, TokenSpan w, TokenSpan v);

Word join(TokenSpan a, TokenSpan b, TokenSpan c) {
  std::vector<Token> t;
  t.reserve(a.size() + b.size() + c.size());
  t.insert(t.end(), a.begin(), a.end());
  t.insert(t.end(), b.begin(), b.end());
  t.insert(t.end(), c.begin(), c.end());
  return word_from_span(t);
}

std::size_t last_atom_start(TokenSpan t) {
  if (t.back() != kClose) return t.size() - 1;
  std::size_t open = 0;
  for (std::size_t i = t.size(); i-- > 0;) {
    if (t[i] == kClose) {
      ++open;
    } else if (is_open_token(t[i]) && --open == 0) {
      return i;
    }
  }
  throw std::logic_error("unbalanced word");
}

struct TokensHash {
  std::size_t operator()(const std::vector<Token>& t) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Token x : t) h = (h ^ static_cast<std::uint32_t>(x)) * 1099511628211ull;
    return h;
  }
};

// Products of bracket pairs, keyed by the two atoms separated by a hole.
// Cleared whenever the weights change or the table grows large.
struct DiamondCache {
  std::vector<Rational> weights;
  std::unordered_map<std::vector<Token>, LinComb<Word>, TokensHash> products;

  void bind(const Signature& sig) {
    const auto& ops = sig.operators();
    bool same = weights.size() == ops.size();
    for (std::size_t i = 0; same && i < ops.size(); ++i) same = weights[i] == ops[i].weight;
    if (same && products.size() < 500000) return;
    products.clear();
    weights.clear();
    for (const auto& op : ops) weights.push_back(op.weight);
  }
};

thread_local DiamondCache cache;

LinComb<Word> bracket_product(const Signature& sig, TokenSpan left, TokenSpan right);

LinComb<Word> diamond_unchecked(const Signature& sig, TokenSpan w, TokenSpan v) {
  if (w.empty()) return LinComb<Word>(word_from_span(v));
  if (v.empty()) return LinComb<Word>(word_from_span(w));
  const std::size_t split = last_atom_start(w);
  if (!is_open_token(w[split]) || !is_open_token(v.front())) {
    return LinComb<Word>(join(w, v, {}));
  }
  const std::size_t v_end = atom_end(v, 0);
  const TokenSpan prefix = w.subspan(0, split);
  const TokenSpan left = w.subspan(split);
  const TokenSpan right = v.subspan(0, v_end);
  const TokenSpan suffix = v.subspan(v_end);
  const LinComb<Word>& core = [&]() -> const LinComb<Word>& {
    std::vector<Token> key(left.begin(), left.end());
    key.push_back(kHole);
    key.insert(key.end(), right.begin(), right.end());
    if (auto it = cache.products.find(key); it != cache.products.end()) return it->second;
    LinComb<Word> value = bracket_product(sig, left, right);
    return cache.products.emplace(std::move(key), std::move(value)).first->second;
  }();

  if (prefix.empty() && suffix.empty()) return core;
  LinComb<Word> out;
  for (const auto& [m, c] : core) out.add_term(join(prefix, m.tokens(), suffix), c);
  return out;
}

// ⌊ū⌋_α ⋄ ⌊v̄⌋_β = ⌊ū ⋄ ⌊v̄⌋_β⌋_α + ⌊⌊ū⌋_α ⋄ v̄⌋_β + λ_β⌊ū ⋄ v̄⌋_α
LinComb<Word> bracket_product(const Signature& sig, TokenSpan left, TokenSpan right) {
  const TokenSpan left_body = left.subspan(1, left.size() - 2);
  const TokenSpan right_body = right.subspan(1, right.size() - 2);
  const Op alpha = op_of(left.front());
  const Op beta = op_of(right.front());
  LinComb<Word> core = p_op(alpha, diamond_unchecked(sig, left_body, right));
  core += p_op(beta, diamond_unchecked(sig, left, right_body));
  core.add_scaled(p_op(alpha, diamond_unchecked(sig, left_body, right_body)), sig.weight(beta));
  return core;
}

}  // namespace

std::vector<Word> alternating_decomposition(const Word& w) {
  if (w.is_one()) throw std::invalid_argument("the empty word has no alternating decomposition");
  require_mrbw(w);
  std::vector<Word> factors;
  for (const AtomView& atom : w.atoms()) factors.push_back(word_from_span(atom.whole));
  return factors;
}

LinComb<Word> diamond(const Signature& sig, const Word& w, const Word& v) {
  require_mrbw(w);
  require_mrbw(v);
  cache.bind(sig);
  return diamond_unchecked(sig, w.tokens(), v.tokens());
}

LinComb<Word> diamond(const Signature& sig, const LinComb<Word>& u, const LinComb<Word>& v) {
  require_mrbw(u);
  require_mrbw(v);
  cache.bind(sig);
  LinComb<Word> out;
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : v) out.add_scaled(diamond_unchecked(sig, a.tokens(), b.tokens()), ca * cb);
  return out;
}

LinComb<Word> p_op(Op op, const LinComb<Word>& v) {
  LinComb<Word> out;
  for (const auto& [w, c] : v) out.add_term(Word::bracket(op, w), c);
  return out;
}

LinComb<Forest> psi(const Signature& sig, const LinComb<Forest>& v) {
  return theta(normal_form(sig, theta_inv(v)));
}

LinComb<Forest> psi(const Signature& sig, const Forest& f) {
  return psi(sig, LinComb<Forest>(f));
}

LinComb<Forest> diamond_forest(const Signature& sig, const Forest& f, const Forest& g) {
  return theta(diamond(sig, theta_inv(f), theta_inv(g)));
}

LinComb<Forest> diamond_forest(const Signature& sig, const LinComb<Forest>& f,
                               const LinComb<Forest>& g) {
  return theta(diamond(sig, theta_inv(f), theta_inv(g)));
}

LinComb<Word> dendriform_prec(const Signature& sig, Op op, const LinComb<Word>& x,
                              const LinComb<Word>& y) {
  LinComb<Word> out = diamond(sig, x, p_op(op, y));
  out.add_scaled(diamond(sig, x, y), sig.weight(op));
  return out;
}

LinComb<Word> dendriform_succ(const Signature& sig, Op op, const LinComb<Word>& x,
                              const LinComb<Word>& y) {
  return diamond(sig, p_op(op, x), y);
}

LinComb<Word> pre_lie(const Signature& sig, Op op, const LinComb<Word>& x,
                      const LinComb<Word>& y) {
  const LinComb<Word> px = p_op(op, x);
  LinComb<Word> out = diamond(sig, px, y);
  out -= diamond(sig, y, px);
  out.add_scaled(diamond(sig, y, x), -sig.weight(op));
  return out;
}

LinComb<Word> double_product(const Signature& sig, Op op, const LinComb<Word>& x,
                             const LinComb<Word>& y) {
  LinComb<Word> out = diamond(sig, x, p_op(op, y));
  out += diamond(sig, p_op(op, x), y);
  out.add_scaled(diamond(sig, x, y), sig.weight(op));
  return out;
}

LinComb<Word> combined_operator(const std::map<Op, Rational>& k, const LinComb<Word>& v) {
  LinComb<Word> out;
  for (const auto& [op, c] : k) out.add_scaled(p_op(op, v), c);
  return out;
}

}  // namespace matchrb
