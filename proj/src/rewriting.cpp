#include "matchrb/rewriting.hpp"

#include <algorithm>
#include <stdexcept>
#include <type_traits>
#include <unordered_map>

namespace matchrb {

namespace {

// Token positions of ⌊u⌋_α⌊v⌋_β: first bracket opens at `first`, second at
// `mid`, and the pair ends just before `last`.
struct Site {
  std::size_t first, mid, last;
};

std::optional<Site> outermost_site(TokenSpan t, std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> brackets;
  std::size_t prev_end = static_cast<std::size_t>(-1);
  std::size_t prev_start = 0;
  for (std::size_t pos = lo; pos < hi;) {
    const std::size_t end = atom_end(t, pos);
    if (is_open_token(t[pos])) {
      if (prev_end == pos) return Site{prev_start, pos, end};
      brackets.push_back(pos);
      prev_start = pos;
      prev_end = end;
    }
    pos = end;
  }
  for (std::size_t b : brackets) {
    const std::size_t end = atom_end(t, b);
    if (auto s = outermost_site(t, b + 1, end - 1)) return s;
  }
  return std::nullopt;
}

std::optional<Site> innermost_site(TokenSpan t, std::size_t lo, std::size_t hi) {
  for (std::size_t pos = lo; pos < hi;) {
    const std::size_t end = atom_end(t, pos);
    if (is_open_token(t[pos])) {
      if (auto s = innermost_site(t, pos + 1, end - 1)) return s;
      if (end < hi && is_open_token(t[end])) {
        const std::size_t next_end = atom_end(t, end);
        if (auto s = innermost_site(t, end + 1, next_end - 1)) return s;
        return Site{pos, end, next_end};
      }
    }
    pos = end;
  }
  return std::nullopt;
}

Redex to_redex(const Word& w, const Site& s) {
  const TokenSpan t = w.tokens();
  std::vector<Token> q(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(s.first));
  q.push_back(kHole);
  q.insert(q.end(), t.begin() + static_cast<std::ptrdiff_t>(s.last), t.end());
  return Redex{StarWord::from_tokens(std::move(q)),
               word_from_span(t.subspan(s.first + 1, s.mid - s.first - 2)), op_of(t[s.first]),
               word_from_span(t.subspan(s.mid + 1, s.last - s.mid - 2)), op_of(t[s.mid])};
}

// The three replacement words for the redex at `s`, with the λ_β factor
// applied to the last one.
void rewrite_site(const Signature& sig, TokenSpan t, const Site& s, const Rational& coeff,
                  LinComb<Word>& out) {
  const auto prefix = t.subspan(0, s.first);
  const auto u = t.subspan(s.first + 1, s.mid - s.first - 2);
  const auto v = t.subspan(s.mid + 1, s.last - s.mid - 2);
  const auto suffix = t.subspan(s.last);
  const Token alpha = t[s.first];
  const Token beta = t[s.mid];

  auto build = [&](auto&&... parts) {
    std::vector<Token> w;
    w.reserve(t.size());
    auto put = [&w](const auto& p) {
      if constexpr (std::is_same_v<std::decay_t<decltype(p)>, Token>) {
        w.push_back(p);
      } else {
        w.insert(w.end(), p.begin(), p.end());
      }
    };
    (put(parts), ...);
    return word_from_span(w);
  };

  // ⌊u⌊v⌋_β⌋_α
  out.add_term(build(prefix, alpha, u, beta, v, kClose, kClose, suffix), coeff);
  // ⌊⌊u⌋_α v⌋_β
  out.add_term(build(prefix, beta, alpha, u, kClose, v, kClose, suffix), coeff);
  // λ_β ⌊uv⌋_α
  const Rational& weight = sig.weight(op_of(beta));
  if (weight != 0) out.add_term(build(prefix, alpha, u, v, kClose, suffix), coeff * weight);
}

Word bracket_pair(const Word& x, Op alpha, const Word& y, Op beta) {
  return concat(Word::bracket(alpha, x), Word::bracket(beta, y));
}

LinComb<Word> multiply_right(const LinComb<Word>& v, const Word& w) {
  LinComb<Word> out;
  for (const auto& [u, c] : v) out.add_term(concat(u, w), c);
  return out;
}

LinComb<Word> multiply_left(const Word& w, const LinComb<Word>& v) {
  LinComb<Word> out;
  for (const auto& [u, c] : v) out.add_term(concat(w, u), c);
  return out;
}

LinComb<Word> substitute(const StarWord& q, const LinComb<Word>& v) {
  LinComb<Word> out;
  for (const auto& [u, c] : v) out.add_term(matchrb::substitute(q, u), c);
  return out;
}

void reduce_report(const Signature& sig, CompositionReport& report) {
  report.remainder = normal_form(sig, report.composition, &report.trace);
  report.bounded = true;
  for (const Word& w : report.trace.rewritten)
    if (compare_db(w, report.ambiguity) >= 0) report.bounded = false;
  for (const auto& [w, c] : report.composition)
    if (compare_db(w, report.ambiguity) >= 0) report.bounded = false;
}

}  // namespace

Word SRelation::leading_word() const { return bracket_pair(x, alpha, y, beta); }

LinComb<Word> SRelation::value(const Signature& sig) const {
  LinComb<Word> v(leading_word());
  v.add_term(Word::bracket(alpha, concat(x, Word::bracket(beta, y))), -1);
  v.add_term(Word::bracket(beta, concat(Word::bracket(alpha, x), y)), -1);
  if (!drop_weight_term) v.add_term(Word::bracket(alpha, concat(x, y)), -sig.weight(beta));
  return v;
}

std::optional<Redex> find_redex(const Word& w) {
  if (auto s = outermost_site(w.tokens(), 0, w.tokens().size())) return to_redex(w, *s);
  return std::nullopt;
}

std::optional<Redex> find_innermost_redex(const Word& w) {
  if (auto s = innermost_site(w.tokens(), 0, w.tokens().size())) return to_redex(w, *s);
  return std::nullopt;
}

LinComb<Word> rewrite_at(const Signature& sig, const Redex& redex) {
  const Word pair = bracket_pair(redex.left_body, redex.left_op, redex.right_body, redex.right_op);
  const Word w = substitute(redex.context, pair);
  const std::size_t first = redex.context.hole_position();
  const std::size_t mid = first + redex.left_body.tokens().size() + 2;
  const std::size_t last = first + pair.tokens().size();
  LinComb<Word> out;
  rewrite_site(sig, w.tokens(), Site{first, mid, last}, 1, out);
  return out;
}

LinComb<Word> rewrite_once(const Signature& sig, const Word& w) {
  auto s = outermost_site(w.tokens(), 0, w.tokens().size());
  if (!s) throw std::invalid_argument("word has no redex");
  LinComb<Word> out;
  rewrite_site(sig, w.tokens(), *s, 1, out);
  return out;
}

bool is_mrbw(const Word& w) {
  const TokenSpan t = w.tokens();
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (t[i] == kClose && is_open_token(t[i + 1])) return false;
  return true;
}

bool is_mrbw(const LinComb<Word>& v) {
  for (const auto& [w, c] : v)
    if (!is_mrbw(w)) return false;
  return true;
}

LinComb<Word> normal_form(const Signature& sig, const LinComb<Word>& v, ReductionTrace* trace) {
  LinComb<Word> pending = v;
  LinComb<Word> result;
  while (!pending.is_zero()) {
    auto [w, c] = pending.pop_first();
    const auto site = outermost_site(w.tokens(), 0, w.tokens().size());
    if (!site) {
      result.add_term(std::move(w), c);
      continue;
    }
    if (trace) trace->rewritten.push_back(w);
    rewrite_site(sig, w.tokens(), *site, c, pending);
  }
  return result;
}

LinComb<Word> normal_form(const Signature& sig, const Word& w) {
  return normal_form(sig, LinComb<Word>(w));
}

namespace {

const LinComb<Word>& innermost_nf(const Signature& sig, const Word& w,
                                  std::unordered_map<Word, LinComb<Word>, WordHash>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  LinComb<Word> out;
  if (auto s = innermost_site(w.tokens(), 0, w.tokens().size())) {
    LinComb<Word> step;
    rewrite_site(sig, w.tokens(), *s, 1, step);
    for (const auto& [u, c] : step) out.add_scaled(innermost_nf(sig, u, memo), c);
  } else {
    out.add_term(w, 1);
  }
  return memo.emplace(w, std::move(out)).first->second;
}

}  // namespace

LinComb<Word> normal_form_innermost(const Signature& sig, const LinComb<Word>& v) {
  std::unordered_map<Word, LinComb<Word>, WordHash> memo;
  LinComb<Word> out;
  for (const auto& [w, c] : v) out.add_scaled(innermost_nf(sig, w, memo), c);
  return out;
}

namespace {

CompositionReport build_intersection(const Signature& sig, const SRelation& f,
                                     const SRelation& g) {
  if (!(f.y == g.x) || f.beta != g.alpha)
    throw std::invalid_argument("relations do not overlap in a common bracket");
  CompositionReport report;
  report.kind = CompositionKind::Intersection;
  const Word right = Word::bracket(g.beta, g.y);
  const Word left = Word::bracket(f.alpha, f.x);
  report.ambiguity = concat(f.leading_word(), right);
  // breadth condition max(|f̄|, |ḡ|) < |w| < |f̄| + |ḡ| holds by construction: 2 < 3 < 4
  report.composition = multiply_right(f.value(sig), right) - multiply_left(left, g.value(sig));
  return report;
}

CompositionReport build_including(const Signature& sig, const SRelation& f, const SRelation& g,
                                  const StarWord& q) {
  if (!(f.leading_word() == substitute(q, g.leading_word())))
    throw std::invalid_argument("leading word of g does not occur in f at the given context");
  CompositionReport report;
  report.kind = CompositionKind::Including;
  report.ambiguity = f.leading_word();
  report.composition = f.value(sig) - substitute(q, g.value(sig));
  return report;
}

CompositionReport build_including_case(const Signature& sig, const StarWord& u, const Word& x,
                                       const Word& y, const Word& z, Op alpha, Op beta,
                                       Op gamma, Op delta, Side side, bool drop_weight_term) {
  const SRelation g{x, beta, y, gamma, drop_weight_term};
  const Word inner = substitute(u, g.leading_word());
  const Word zb = Word::bracket(delta, z);
  if (side == Side::Left) {
    const SRelation f{inner, alpha, z, delta, drop_weight_term};
    std::vector<Token> t{open_token(alpha)};
    t.insert(t.end(), u.tokens().begin(), u.tokens().end());
    t.push_back(kClose);
    t.insert(t.end(), zb.tokens().begin(), zb.tokens().end());
    return build_including(sig, f, g, StarWord::from_tokens(std::move(t)));
  }
  const SRelation f{z, delta, inner, alpha, drop_weight_term};
  std::vector<Token> t(zb.tokens().begin(), zb.tokens().end());
  t.push_back(open_token(alpha));
  t.insert(t.end(), u.tokens().begin(), u.tokens().end());
  t.push_back(kClose);
  return build_including(sig, f, g, StarWord::from_tokens(std::move(t)));
}

}  // namespace

CompositionReport intersection_composition(const Signature& sig, const SRelation& f,
                                           const SRelation& g) {
  CompositionReport report = build_intersection(sig, f, g);
  reduce_report(sig, report);
  return report;
}

CompositionReport including_composition(const Signature& sig, const SRelation& f,
                                        const SRelation& g, const StarWord& q) {
  CompositionReport report = build_including(sig, f, g, q);
  reduce_report(sig, report);
  return report;
}

CompositionReport including_case(const Signature& sig, const StarWord& u, const Word& x,
                                 const Word& y, const Word& z, Op alpha, Op beta, Op gamma,
                                 Op delta, Side side, bool drop_weight_term) {
  CompositionReport report =
      build_including_case(sig, u, x, y, z, alpha, beta, gamma, delta, side, drop_weight_term);
  reduce_report(sig, report);
  return report;
}

GsbSummary verify_gsb(const Signature& sig, const GsbBounds& bounds,
                      const std::function<void(const CompositionReport&)>& each) {
  GsbSummary summary;
  auto record = [&](CompositionReport&& report) {
    reduce_report(sig, report);
    summary.max_steps = std::max(summary.max_steps, report.trace.rewritten.size());
    if (each) each(report);
    if (!report.trivial()) {
      if (summary.nontrivial++ == 0) summary.witness = std::move(report);
    }
  };
  auto done = [&] { return bounds.stop_at_first_nontrivial && summary.nontrivial > 0; };
  const std::size_t ops = sig.operator_count();
  auto op = [](std::size_t i) { return Op{static_cast<std::uint32_t>(i)}; };

  const auto params = enumerate_words(sig, bounds.intersection_degree);
  for (const Word& x : params)
    for (const Word& y : params)
      for (const Word& z : params)
        for (std::size_t a = 0; a < ops; ++a)
          for (std::size_t b = 0; b < ops; ++b)
            for (std::size_t c = 0; c < ops; ++c) {
              const SRelation f{x, op(a), y, op(b), bounds.drop_weight_term};
              const SRelation g{y, op(b), z, op(c), bounds.drop_weight_term};
              record(build_intersection(sig, f, g));
              ++summary.intersection_checked;
              if (done()) return summary;
            }

  const auto small = enumerate_words(sig, bounds.including_degree);
  const auto contexts = enumerate_star_words(sig, bounds.context_degree, bounds.context_depth);
  std::vector<StarWord> all_contexts{StarWord()};
  all_contexts.insert(all_contexts.end(), contexts.begin(), contexts.end());
  all_contexts.erase(std::unique(all_contexts.begin(), all_contexts.end()), all_contexts.end());
  for (const StarWord& u : all_contexts)
    for (const Word& x : small)
      for (const Word& y : small)
        for (const Word& z : small)
          for (std::size_t a = 0; a < ops; ++a)
            for (std::size_t b = 0; b < ops; ++b)
              for (std::size_t c = 0; c < ops; ++c)
                for (std::size_t d = 0; d < ops; ++d)
                  for (Side side : {Side::Left, Side::Right}) {
                    record(build_including_case(sig, u, x, y, z, op(a), op(b), op(c), op(d), side,
                                          bounds.drop_weight_term));
                    ++summary.including_checked;
                    if (done()) return summary;
                  }
  return summary;
}

}  // namespace matchrb
