#pragma once

#include "matchrb/lincomb.hpp"
#include "matchrb/order.hpp"
#include "matchrb/word.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace matchrb {

/// A vertex decoration: a letter of X or an operator of Ω.
struct Decoration {
  enum class Kind { Letter, Operator };
  Kind kind = Kind::Letter;
  std::uint32_t index = 0;

  static Decoration letter(Letter x) { return {Kind::Letter, x.index}; }
  static Decoration op(Op o) { return {Kind::Operator, o.index}; }
  bool is_operator() const { return kind == Kind::Operator; }

  friend auto operator<=>(const Decoration&, const Decoration&) = default;
};

class Forest;

/// A planar rooted tree whose internal vertices carry operators.
class Tree {
 public:
  /// Throws std::invalid_argument if a letter-decorated vertex has children.
  Tree(Decoration decoration, std::vector<Tree> children = {});

  const Decoration& decoration() const { return decoration_; }
  const std::vector<Tree>& children() const { return children_; }
  std::size_t size() const;

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  Decoration decoration_;
  std::vector<Tree> children_;
};

/// A planar rooted forest; the empty forest is the unit 1.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {}
  explicit Forest(Tree tree) { trees_.push_back(std::move(tree)); }

  const std::vector<Tree>& trees() const { return trees_; }
  bool is_one() const { return trees_.empty(); }

  friend bool operator==(const Forest&, const Forest&) = default;

 private:
  std::vector<Tree> trees_;
};

/// Forest concatenation.
Forest concat(const Forest& a, const Forest& b);

/// B⁺_ω: a new ω-decorated root with F's trees as ordered children.
Tree graft(Op op, const Forest& f);

/// Throws std::invalid_argument if a decoration lies outside the signature.
void validate(const Signature& sig, const Forest& f);

Forest theta(const Word& w);
Word theta_inv(const Forest& f);
LinComb<Forest> theta(const LinComb<Word>& v);
LinComb<Word> theta_inv(const LinComb<Forest>& v);

std::size_t degree(const Forest& f);
std::size_t breadth(const Forest& f);
std::size_t forest_depth(const Forest& f);

/// One pair (G, F/G) per vertex antichain of F, with multiplicity. G lists
/// the selected subtrees in preorder; F/G deletes them.
std::vector<std::pair<Forest, Forest>> subforest_pairs(const Forest& f);

/// Descending degree, then descending ≤db of θ⁻¹.
template <>
struct CanonicalOrder<Forest> {
  bool operator()(const Forest& a, const Forest& b) const;
};

}  // namespace matchrb
