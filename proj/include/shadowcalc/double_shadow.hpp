#pragma once

#include "shadowcalc/graph.hpp"

namespace shadow {

// Shadow of the double of the 4-manifold of g, blown up |h| times with the
// sign of h. Every region gets a double bubble, every B vertex is replaced by
// a copy of the X12 portion. Throws DataMissing when g has a B vertex and the
// catalog's X12 portion is unresolved.
DecoratedGraph shadow_of_double(const DecoratedGraph& g, int h, const Catalog& cat = Catalog::active());

}  // namespace shadow
