#include "dihedral/group_word.hpp"

#include "dihedral/action_analysis.hpp"

#include <cctype>
#include <charconv>

namespace dihedral {

WordParseError::WordParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

GroupWord parse_word(std::string_view text) {
  GroupWord word;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_space();
  while (pos < text.size()) {
    const char gen = text[pos];
    if (gen != 'r' && gen != 's')
      throw WordParseError(pos, std::string("unknown generator '") + gen + "', expected 'r' or 's'");
    ++pos;
    WordToken token{gen, 1};
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const std::size_t start = pos;
      if (pos < text.size() && text[pos] == '-') ++pos;
      if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw WordParseError(pos, "expected an integer exponent after '^'");
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      const auto [end, ec] = std::from_chars(text.data() + start, text.data() + pos, token.exponent);
      if (ec != std::errc() || end != text.data() + pos) throw WordParseError(start, "exponent out of range");
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw WordParseError(pos, "expected whitespace between terms");
    word.tokens.push_back(token);
    skip_space();
  }
  return word;
}

AffineAuto evaluate_word(const GroupWord& word, const AffineAuto& r, const AffineAuto& s,
                         const EnlargedLattice& lattice, std::size_t order_cap) {
  AffineAuto result = AffineAuto::identity(lattice.dimension());
  if (word.is_identity()) return result;
  const long r_order = static_cast<long>(order(r, lattice, order_cap));
  const long s_order = static_cast<long>(order(s, lattice, order_cap));
  for (const auto& token : word.tokens) {
    const AffineAuto& g = token.generator == 'r' ? r : s;
    const long ord = token.generator == 'r' ? r_order : s_order;
    const long e = ((token.exponent % ord) + ord) % ord;
    result = compose(result, power(g, static_cast<std::size_t>(e), lattice), lattice);
  }
  return canonicalize(result, lattice);
}

}  // namespace dihedral
