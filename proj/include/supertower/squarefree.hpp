#pragma once

#include <vector>

#include "supertower/poly.hpp"
#include "supertower/rational.hpp"

namespace supertower {

struct SquarefreePart {
  Poly factor;  // monic, square-free
  int multiplicity;
  friend bool operator==(const SquarefreePart&, const SquarefreePart&) = default;
};

/// p = content * prod factor^multiplicity, factors pairwise coprime,
/// listed by increasing multiplicity.
struct SquarefreeDecomposition {
  Rat content;
  std::vector<SquarefreePart> parts;

  Poly expand() const;
};

/// Yun's algorithm over Q. Throws ArgumentError on the zero polynomial.
SquarefreeDecomposition squarefree_decompose(const Poly& p);

bool is_squarefree(const Poly& p);

}  // namespace supertower
