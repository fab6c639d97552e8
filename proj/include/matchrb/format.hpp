#pragma once

#include "matchrb/forest.hpp"
#include "matchrb/lincomb.hpp"
#include "matchrb/word.hpp"

#include <string>
#include <tuple>

namespace matchrb {

/// Plain notation, readable back by the expression parser: factors are
/// separated by spaces, brackets print as "[body]_name", and 1 is "1".
std::string to_plain(const Signature& sig, const Word& w);

/// Trees as "name" for leaves and "name(children)" for operator roots,
/// trees separated by spaces, the empty forest as "1".
std::string to_plain(const Signature& sig, const Forest& f);

std::string to_plain(const Signature& sig, const std::pair<Word, Word>& t);
std::string to_plain(const Signature& sig, const std::pair<Forest, Forest>& t);

template <class B>
std::string to_plain(const Signature& sig, const std::tuple<B, B, B>& t) {
  return to_plain(sig, std::get<0>(t)) + " ⊗ " + to_plain(sig, std::get<1>(t)) + " ⊗ " +
         to_plain(sig, std::get<2>(t));
}

/// "c * m" terms joined by " + " and " - ", unit coefficients omitted,
/// multiples of 1 as bare coefficients, zero as "0".
template <class B>
std::string to_plain(const Signature& sig, const LinComb<B>& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : v) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(c);
    const std::string m = to_plain(sig, b);
    if (m == "1") {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1) out += to_string(magnitude) + " * ";
      out += m;
    }
  }
  return out;
}

}  // namespace matchrb
