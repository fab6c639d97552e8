#include "matchrb/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace matchrb {

namespace {

std::strong_ordering deg_lex(TokenSpan u, TokenSpan v) {
  if (auto c = u.size() <=> v.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(u.begin(), u.end(), v.begin(), v.end());
}

// Walks the top-level brackets of a span: each step yields the outer block
// before the next bracket and that bracket's operator and body.
class BracketCursor {
 public:
  explicit BracketCursor(TokenSpan tokens) : tokens_(tokens) {}

  bool next() {
    const std::size_t block_start = pos_;
    while (pos_ < tokens_.size() && !is_open_token(tokens_[pos_])) ++pos_;
    block_ = tokens_.subspan(block_start, pos_ - block_start);
    if (pos_ == tokens_.size()) return false;
    const std::size_t end = atom_end(tokens_, pos_);
    op_ = op_of(tokens_[pos_]);
    body_ = tokens_.subspan(pos_ + 1, end - pos_ - 2);
    pos_ = end;
    return true;
  }

  TokenSpan block() const { return block_; }
  Op op() const { return op_; }
  TokenSpan body() const { return body_; }

 private:
  TokenSpan tokens_;
  std::size_t pos_ = 0;
  TokenSpan block_;
  Op op_;
  TokenSpan body_;
};

}  // namespace

OrderKey::OrderKey(TokenSpan tokens) : tokens_(tokens) {
  std::size_t level = 0;
  for (Token t : tokens) {
    if (is_open_token(t)) {
      if (level++ == 0) ++p_breadth_;
      ++p_degree_;
    } else if (t == kClose) {
      --level;
    }
  }
}

std::strong_ordering operator<=>(const OrderKey& a, const OrderKey& b) {
  if (a.p_degree_ == 0 && b.p_degree_ == 0) return deg_lex(a.tokens_, b.tokens_);
  if (auto c = a.p_degree_ <=> b.p_degree_; c != 0) return c;
  if (auto c = a.p_breadth_ <=> b.p_breadth_; c != 0) return c;
  {
    BracketCursor ca(a.tokens_), cb(b.tokens_);
    while (ca.next() && cb.next()) {
      if (auto c = ca.op() <=> cb.op(); c != 0) return c;
      if (auto c = compare_db(ca.body(), cb.body()); c != 0) return c;
    }
  }
  BracketCursor ca(a.tokens_), cb(b.tokens_);
  bool more = true;
  while (more) {
    more = ca.next();
    cb.next();
    if (auto c = deg_lex(ca.block(), cb.block()); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_db(TokenSpan u, TokenSpan v) { return OrderKey(u) <=> OrderKey(v); }

std::strong_ordering compare_db(const Word& u, const Word& v) {
  const auto a = u.order_key();
  const auto b = v.order_key();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

void append_order_key(TokenSpan tokens, std::vector<std::int32_t>& key) {
  const OrderKey stats(tokens);
  key.push_back(static_cast<std::int32_t>(stats.p_degree()));
  key.push_back(static_cast<std::int32_t>(stats.p_breadth()));
  BracketCursor brackets(tokens);
  while (brackets.next()) {
    key.push_back(static_cast<std::int32_t>(brackets.op().index));
    append_order_key(brackets.body(), key);
  }
  BracketCursor blocks(tokens);
  bool more = true;
  while (more) {
    more = blocks.next();
    key.push_back(static_cast<std::int32_t>(blocks.block().size()));
    key.insert(key.end(), blocks.block().begin(), blocks.block().end());
  }
}

std::strong_ordering compare_deg_lex(const Word& u, const Word& v) {
  x_degree(u);
  x_degree(v);
  return deg_lex(u.tokens(), v.tokens());
}

std::pair<Word, Rational> leading(const LinComb<Word>& v) {
  if (v.is_zero()) throw std::invalid_argument("leading term of zero");
  const auto& [w, c] = *v.begin();
  if (w.is_one()) throw std::invalid_argument("leading term of a scalar");
  return {w, c};
}

}  // namespace matchrb
