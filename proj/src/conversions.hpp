#pragma once

// Bridges between the public Poly type and the Groebner engine.

#include "bdm/ideal.hpp"
#include "groebner_engine.hpp"

namespace bdm::detail {

TermOrder make_term_order(const MonomialOrder& order, std::size_t nvars, bool allow_negative);
GPoly to_gpoly(const Poly& p, const TermOrder& ord);
Poly from_gpoly(const GPoly& g, const RingPtr& ring);

}  // namespace bdm::detail
