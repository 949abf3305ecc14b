#pragma once

#include "skein/hecke.hpp"

namespace skein {

/// Close the last string of an element of H_{n+1}, giving an element of H_n.
///
/// Determined by: x (last string straight) -> delta * x, and
/// x * sigma_n * y -> v^-1 * x * y for x, y in H_n.
HeckeElem partial_close(const HeckeElem& x);

/// Framed Homfly polynomial of the closure, normalized to 1 on the empty
/// diagram: partial_close iterated down to H_0.
Scalar markov_trace(const HeckeElem& x);

} // namespace skein
