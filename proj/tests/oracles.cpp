#include "oracles.hpp"

#include <algorithm>
#include <variant>

namespace oracle {

std::vector<std::size_t> word_counts(std::size_t letters, std::size_t operators, std::size_t n) {
  std::vector<std::size_t> w(n + 1, 0), a(n + 1, 0);
  w[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    a[k] = operators * w[k - 1] + (k == 1 ? letters : 0);
    for (std::size_t j = 1; j <= k; ++j) w[k] += a[j] * w[k - j];
  }
  return w;
}

namespace {

std::size_t degree_of(const Tokens& t) {
  return static_cast<std::size_t>(
      std::count_if(t.begin(), t.end(), [](Token x) { return x != matchrb::kClose; }));
}

Tokens bracketed(std::size_t op, const Tokens& body) {
  Tokens t{static_cast<Token>(-2 - static_cast<Token>(op))};
  t.insert(t.end(), body.begin(), body.end());
  t.push_back(matchrb::kClose);
  return t;
}

// All concatenations of at least `min_atoms` atoms with degree <= n; when
// `alternate` is set, two bracket atoms never sit next to each other.
std::set<Tokens> products(const std::vector<Tokens>& letters, const std::vector<Tokens>& brackets,
                          std::size_t n, std::size_t min_atoms, bool alternate) {
  std::set<Tokens> out;
  struct Partial {
    Tokens t;
    std::size_t atoms;
    bool ends_bracket;
  };
  std::vector<Partial> frontier{{{}, 0, false}};
  while (!frontier.empty()) {
    std::vector<Partial> next;
    for (const Partial& p : frontier) {
      if (p.atoms >= min_atoms) out.insert(p.t);
      auto extend = [&](const Tokens& atom, bool is_bracket) {
        if (degree_of(p.t) + degree_of(atom) > n) return;
        if (alternate && is_bracket && p.ends_bracket) return;
        Tokens t = p.t;
        t.insert(t.end(), atom.begin(), atom.end());
        next.push_back({std::move(t), p.atoms + 1, is_bracket});
      };
      for (const Tokens& x : letters) extend(x, false);
      for (const Tokens& b : brackets) extend(b, true);
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<Tokens> letter_atoms(std::size_t letters) {
  std::vector<Tokens> out;
  for (std::size_t i = 0; i < letters; ++i) out.push_back({static_cast<Token>(i)});
  return out;
}

}  // namespace

std::set<Tokens> depth_layer(std::size_t letters, std::size_t operators, std::size_t d,
                             std::size_t n) {
  const auto xs = letter_atoms(letters);
  std::set<Tokens> layer = products(xs, {}, n, 0, false);
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Tokens> brackets;
    for (const Tokens& w : layer)
      for (std::size_t op = 0; op < operators; ++op)
        if (degree_of(w) + 1 <= n) brackets.push_back(bracketed(op, w));
    layer = products(xs, brackets, n, 0, false);
  }
  return layer;
}

std::set<Tokens> mrbw_by_construction(std::size_t letters, std::size_t operators,
                                      std::size_t n) {
  const auto xs = letter_atoms(letters);
  std::set<Tokens> layer = products(xs, {}, n, 0, false);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Tokens> brackets;
    for (const Tokens& w : layer)
      for (std::size_t op = 0; op < operators; ++op)
        if (degree_of(w) + 1 <= n) brackets.push_back(bracketed(op, w));
    layer = products(xs, brackets, n, 0, true);
  }
  return layer;
}

namespace {

struct Node;
using Item = std::variant<Token, std::pair<Token, std::vector<Node>>>;
struct Node {
  Item item;
};

std::vector<Node> parse(const Tokens& t, std::size_t& pos) {
  std::vector<Node> out;
  while (pos < t.size() && t[pos] != matchrb::kClose) {
    if (t[pos] >= 0) {
      out.push_back({t[pos++]});
    } else {
      const Token op = -2 - t[pos++];
      auto body = parse(t, pos);
      ++pos;
      out.push_back({std::make_pair(op, std::move(body))});
    }
  }
  return out;
}

std::size_t p_degree(const std::vector<Node>& w) {
  std::size_t n = 0;
  for (const Node& x : w)
    if (auto* b = std::get_if<1>(&x.item)) n += 1 + p_degree(b->second);
  return n;
}

std::strong_ordering compare(const std::vector<Node>& u, const std::vector<Node>& v);

// Splits a word into its outer bracket-free blocks and its top-level brackets.
void split(const std::vector<Node>& w, std::vector<std::vector<Token>>& blocks,
           std::vector<const std::pair<Token, std::vector<Node>>*>& brackets) {
  blocks.assign(1, {});
  for (const Node& x : w) {
    if (auto* letter = std::get_if<0>(&x.item)) {
      blocks.back().push_back(*letter);
    } else {
      brackets.push_back(&std::get<1>(x.item));
      blocks.emplace_back();
    }
  }
}

std::strong_ordering compare(const std::vector<Node>& u, const std::vector<Node>& v) {
  std::vector<std::vector<Token>> ub, vb;
  std::vector<const std::pair<Token, std::vector<Node>>*> ur, vr;
  split(u, ub, ur);
  split(v, vb, vr);
  const std::size_t pu = p_degree(u), pv = p_degree(v);
  auto deg_lex = [](const std::vector<Token>& a, const std::vector<Token>& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a <=> b;
  };
  if (pu == 0 && pv == 0) return deg_lex(ub[0], vb[0]);
  if (pu != pv) return pu <=> pv;
  if (ur.size() != vr.size()) return ur.size() <=> vr.size();
  for (std::size_t i = 0; i < ur.size(); ++i) {
    if (ur[i]->first != vr[i]->first) return ur[i]->first <=> vr[i]->first;
    if (auto c = compare(ur[i]->second, vr[i]->second); c != 0) return c;
  }
  for (std::size_t i = 0; i < ub.size(); ++i)
    if (auto c = deg_lex(ub[i], vb[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t tree_antichains(const matchrb::Tree& t) {
  std::size_t below = 1;
  for (const matchrb::Tree& c : t.children()) below *= tree_antichains(c);
  return below + 1;
}

}  // namespace

std::strong_ordering compare_db(const Tokens& u, const Tokens& v) {
  std::size_t i = 0, j = 0;
  return compare(parse(u, i), parse(v, j));
}

std::size_t antichain_count(const matchrb::Forest& f) {
  std::size_t n = 1;
  for (const matchrb::Tree& t : f.trees()) n *= tree_antichains(t);
  return n;
}

}  // namespace oracle
