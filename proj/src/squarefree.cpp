#include "supertower/squarefree.hpp"

#include "supertower/errors.hpp"

namespace supertower {

Poly SquarefreeDecomposition::expand() const {
  Poly r = Poly::constant(content);
  for (const auto& part : parts) r = r * pow(part.factor, part.multiplicity);
  return r;
}

SquarefreeDecomposition squarefree_decompose(const Poly& p) {
  if (p.is_zero()) throw ArgumentError("square-free decomposition of the zero polynomial");
  SquarefreeDecomposition out{p.leading(), {}};
  if (p.degree() == 0) return out;

  const Poly f = p.monic();
  const Poly df = f.derivative();
  Poly a = gcd(f, df);
  Poly b = divmod(f, a).first;
  Poly c = divmod(df, a).first;
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly g = gcd(b, d);
    if (g.degree() > 0) out.parts.push_back({g, i});
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

bool is_squarefree(const Poly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace supertower
