#include "matchrb/forest.hpp"

#include <stdexcept>
#include <string>

namespace matchrb {

Tree::Tree(Decoration decoration, std::vector<Tree> children)
    : decoration_(decoration), children_(std::move(children)) {
  if (!children_.empty() && !decoration_.is_operator())
    throw std::invalid_argument("internal vertices must be decorated by operators");
}

std::size_t Tree::size() const {
  std::size_t n = 1;
  for (const Tree& c : children_) n += c.size();
  return n;
}

Forest concat(const Forest& a, const Forest& b) {
  std::vector<Tree> trees = a.trees();
  trees.insert(trees.end(), b.trees().begin(), b.trees().end());
  return Forest(std::move(trees));
}

Tree graft(Op op, const Forest& f) { return Tree(Decoration::op(op), f.trees()); }

namespace {

void validate_tree(const Signature& sig, const Tree& t) {
  const auto& d = t.decoration();
  const std::size_t bound = d.is_operator() ? sig.operator_count() : sig.letter_count();
  if (d.index >= bound)
    throw std::invalid_argument("decoration index " + std::to_string(d.index) +
                                " outside the signature");
  for (const Tree& c : t.children()) validate_tree(sig, c);
}

void append_tokens(const Tree& t, std::vector<Token>& out) {
  const auto& d = t.decoration();
  if (!d.is_operator()) {
    out.push_back(static_cast<Token>(d.index));
    return;
  }
  out.push_back(open_token(Op{d.index}));
  for (const Tree& c : t.children()) append_tokens(c, out);
  out.push_back(kClose);
}

std::vector<Tree> trees_of(TokenSpan tokens) {
  std::vector<Tree> trees;
  for (const AtomView& atom : top_level_atoms(tokens)) {
    if (atom.bracket) {
      trees.emplace_back(Decoration::op(Op{atom.symbol}), trees_of(atom.body));
    } else {
      trees.emplace_back(Decoration::letter(Letter{atom.symbol}));
    }
  }
  return trees;
}

std::size_t tree_depth(const Tree& t) {
  if (!t.decoration().is_operator()) return 0;
  std::size_t inner = 0;
  for (const Tree& c : t.children()) inner = std::max(inner, tree_depth(c));
  return inner + 1;
}

}  // namespace

void validate(const Signature& sig, const Forest& f) {
  for (const Tree& t : f.trees()) validate_tree(sig, t);
}

Forest theta(const Word& w) { return Forest(trees_of(w.tokens())); }

Word theta_inv(const Forest& f) {
  std::vector<Token> tokens;
  for (const Tree& t : f.trees()) append_tokens(t, tokens);
  return Word::from_tokens(std::move(tokens));
}

LinComb<Forest> theta(const LinComb<Word>& v) {
  LinComb<Forest> out;
  for (const auto& [w, c] : v) out.add_term(theta(w), c);
  return out;
}

LinComb<Word> theta_inv(const LinComb<Forest>& v) {
  LinComb<Word> out;
  for (const auto& [f, c] : v) out.add_term(theta_inv(f), c);
  return out;
}

std::size_t degree(const Forest& f) {
  std::size_t n = 0;
  for (const Tree& t : f.trees()) n += t.size();
  return n;
}

std::size_t breadth(const Forest& f) { return f.trees().size(); }

std::size_t forest_depth(const Forest& f) {
  std::size_t d = 0;
  for (const Tree& t : f.trees()) d = std::max(d, tree_depth(t));
  return d;
}

namespace {

// Vertices in preorder with the preorder index one past each subtree.
struct Flattened {
  std::vector<const Tree*> vertex;
  std::vector<std::size_t> subtree_end;  // one past the last descendant
};

void flatten(const Tree& t, Flattened& out) {
  const std::size_t id = out.vertex.size();
  out.vertex.push_back(&t);
  out.subtree_end.push_back(0);
  for (const Tree& c : t.children()) flatten(c, out);
  out.subtree_end[id] = out.vertex.size();
}

// Rebuilds the tree rooted at preorder index `id`, dropping selected subtrees.
Tree rebuild_without(const Flattened& fl, std::size_t id, const std::vector<bool>& selected) {
  std::vector<Tree> kids;
  std::size_t child = id + 1;
  while (child < fl.subtree_end[id]) {
    if (!selected[child]) kids.push_back(rebuild_without(fl, child, selected));
    child = fl.subtree_end[child];
  }
  return Tree(fl.vertex[id]->decoration(), std::move(kids));
}

void enumerate_antichains(const Flattened& fl, std::size_t pos, std::vector<bool>& selected,
                          const std::vector<std::size_t>& roots,
                          std::vector<std::pair<Forest, Forest>>& out) {
  if (pos == fl.vertex.size()) {
    std::vector<Tree> g;
    for (std::size_t v = 0; v < fl.vertex.size(); ++v)
      if (selected[v]) g.push_back(*fl.vertex[v]);
    std::vector<Tree> q;
    for (std::size_t r : roots)
      if (!selected[r]) q.push_back(rebuild_without(fl, r, selected));
    out.emplace_back(Forest(std::move(g)), Forest(std::move(q)));
    return;
  }
  // leave `pos` unselected and continue with its first descendant
  enumerate_antichains(fl, pos + 1, selected, roots, out);
  // select `pos`: none of its descendants may be selected
  selected[pos] = true;
  enumerate_antichains(fl, fl.subtree_end[pos], selected, roots, out);
  selected[pos] = false;
}

}  // namespace

std::vector<std::pair<Forest, Forest>> subforest_pairs(const Forest& f) {
  Flattened fl;
  std::vector<std::size_t> roots;
  for (const Tree& t : f.trees()) {
    roots.push_back(fl.vertex.size());
    flatten(t, fl);
  }
  std::vector<bool> selected(fl.vertex.size(), false);
  std::vector<std::pair<Forest, Forest>> out;
  enumerate_antichains(fl, 0, selected, roots, out);
  return out;
}

bool CanonicalOrder<Forest>::operator()(const Forest& a, const Forest& b) const {
  const std::size_t da = degree(a), db = degree(b);
  if (da != db) return da > db;
  return compare_db(theta_inv(a), theta_inv(b)) > 0;
}

}  // namespace matchrb
