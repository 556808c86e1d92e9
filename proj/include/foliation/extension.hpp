#ifndef FOLIATION_EXTENSION_HPP
#define FOLIATION_EXTENSION_HPP

#include "foliation/kpoly.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace foliation {

struct Extension {
    FieldPtr field;  // K[v]/(g) presented by a primitive element
    FieldElem point; // image of v
};

// g must be monic and squarefree over its field K with degree >= 1.
Extension extend(const KPoly& g);

// Branch fields for a split event, with tower data rebuilt over the same base.
std::pair<FieldPtr, FieldPtr> split_field(const SplitEvent& event);

// Trace of a down to an ancestor field of a.field().
FieldElem relative_trace(const FieldElem& a, const FieldPtr& ancestor);

// Characteristic polynomial over Q of multiplication by a.
QPoly characteristic_polynomial(const FieldElem& a);

// Complex roots of a squarefree rational polynomial (Aberth iteration).
std::vector<std::complex<double>> numeric_roots(const QPoly& p);

// Complex embeddings of the generator of F (roots of its modulus).
inline std::vector<std::complex<double>> embeddings(const FieldPtr& f) { return numeric_roots(f->modulus()); }

} // namespace foliation

#endif
