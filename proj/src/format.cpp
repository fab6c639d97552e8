#include "matchrb/format.hpp"

namespace matchrb {

namespace {

void append_span(const Signature& sig, TokenSpan tokens, std::string& out) {
  if (tokens.empty()) {
    out += "1";
    return;
  }
  bool first = true;
  for (const AtomView& atom : top_level_atoms(tokens)) {
    if (!first) out += " ";
    first = false;
    if (atom.bracket) {
      out += "[";
      append_span(sig, atom.body, out);
      out += "]_" + sig.operator_name(Op{atom.symbol});
    } else {
      out += sig.letter_name(Letter{atom.symbol});
    }
  }
}

void append_tree(const Signature& sig, const Tree& t, std::string& out) {
  const Decoration& d = t.decoration();
  out += d.is_operator() ? sig.operator_name(Op{d.index}) : sig.letter_name(Letter{d.index});
  if (t.children().empty()) return;
  out += "(";
  bool first = true;
  for (const Tree& child : t.children()) {
    if (!first) out += " ";
    first = false;
    append_tree(sig, child, out);
  }
  out += ")";
}

}  // namespace

std::string to_plain(const Signature& sig, const Word& w) {
  std::string out;
  append_span(sig, w.tokens(), out);
  return out;
}

std::string to_plain(const Signature& sig, const Forest& f) {
  if (f.is_one()) return "1";
  std::string out;
  bool first = true;
  for (const Tree& t : f.trees()) {
    if (!first) out += " ";
    first = false;
    append_tree(sig, t, out);
  }
  return out;
}

std::string to_plain(const Signature& sig, const std::pair<Word, Word>& t) {
  return to_plain(sig, t.first) + " ⊗ " + to_plain(sig, t.second);
}

std::string to_plain(const Signature& sig, const std::pair<Forest, Forest>& t) {
  return to_plain(sig, t.first) + " ⊗ " + to_plain(sig, t.second);
}

}  // namespace matchrb
