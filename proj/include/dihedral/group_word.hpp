// Words in the generators r and s.
//
//   word := term*            (terms separated by whitespace)
//   term := ("r" | "s") ("^" integer)?
//
// A word is read as a composition of maps applied right to left: "r s"
// means r∘s, i.e. s acts first.  The empty word is the identity.

#pragma once

#include "dihedral/torus_model.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dihedral {

struct WordToken {
  char generator = 'r';
  long exponent = 1;

  friend bool operator==(const WordToken&, const WordToken&) = default;
};

struct GroupWord {
  std::vector<WordToken> tokens;
  bool is_identity() const { return tokens.empty(); }
};

class WordParseError : public std::runtime_error {
 public:
  WordParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

GroupWord parse_word(std::string_view text);

/// Evaluates the word with exponents reduced modulo each generator's order on
/// the lattice (negative exponents included).  Throws CapExceeded if a
/// generator's order exceeds order_cap.
AffineAuto evaluate_word(const GroupWord& word, const AffineAuto& r, const AffineAuto& s,
                         const EnlargedLattice& lattice, std::size_t order_cap);

}  // namespace dihedral
