#pragma once

#include <stdexcept>
#include <vector>

#include "skein/annulus.hpp"
#include "skein/hecke.hpp"
#include "skein/series.hpp"

namespace skein {

/// A(t) = H(st) / H(s^-1 t).
Series series_A(int degree);

/// The closed braids A_1, ..., A_M in h-coordinates, read off A(t) and
/// divided exactly by z. Index 0 holds zero.
std::vector<AnnulusElem> braid_A_all(int degree);
AnnulusElem braid_A(int m);

/// Abar(t) = 1 - z * sum mirror(A_m) t^m.
Series series_A_bar(int degree);

/// Mirror image: bar on coefficients, h_i fixed.
inline AnnulusElem mirror(const AnnulusElem& x) { return x.mirror(); }

/// P_m = m * [t^m] ln H(t).
AnnulusElem power_sum(int m);
/// P_1, ..., P_M (index 0 holds zero).
std::vector<AnnulusElem> power_sums(int degree);

/// A_{i, m-1-i} for i = 0..m-1, from A_{0,m-1} = mirror(A_m) and
/// A_{i,j-1} = A_{i-1,j} + z A_i mirror(A_j). The endpoint A_{m-1,0} is
/// checked against A_m; a mismatch throws SkeinIdentityError.
std::vector<AnnulusElem> mixed_braids(int m);
AnnulusElem a_ij(int i, int j);

/// Pi_m = sum of the m closed braids A_{i, m-1-i}.
AnnulusElem pi_sum(int m);

/// Braid word of A_{i,j}: sigma_{i+j}^-1 ... sigma_{i+1}^-1 sigma_i ... sigma_1 on i+j+1 strings.
BraidWord mixed_braid_word(int i, int j);

/// <h_i> = markov_trace(a_i) / alpha_i.
Scalar h_value(int i);
/// Framed Homfly evaluation <X>, multiplicative in the h_i.
Scalar evaluate(const AnnulusElem& x);

} // namespace skein
