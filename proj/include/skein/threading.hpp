#pragma once

#include <map>

#include "skein/annulus.hpp"
#include "skein/hecke.hpp"

namespace skein {

/// gamma_{n,m}: the block of strings n+1..n+m passes once around strings
/// 1..n with positive crossings and returns; a positive word on n+m strings
/// whose permutation is the identity.
BraidWord threading_braid(int n, int m);

/// psi_n of the closure of a pattern x in H_m: close the m pattern strings
/// of (1_n (x) x) * gamma_{n,m}.
HeckeElem thread_element(const HeckeElem& pattern, int n);

/// psi_n of the closure of beta.
HeckeElem thread_braid(const BraidWord& beta, int n);

/// a_i = sum over S_i of s^length(pi) omega_pi.
HeckeElem symmetrizer(int i);

/// alpha_i with a_i * a_i = alpha_i * a_i. The relation sigma_j a_i = s a_i
/// is verified for every j, which reduces a_i^2 to (sum s^(2 length)) a_i;
/// a failed check throws SkeinIdentityError.
Scalar alpha(int i);

/// psi_n of an h-monomial / of an annulus element (n = 0 gives <X> times
/// the unit of H_0).
HeckeElem thread_h(const Monomial& m, int n);
HeckeElem thread(const AnnulusElem& x, int n);

/// Caches psi_n(h_i) for one n. Not thread-safe; use one per task.
class Threader {
  public:
    explicit Threader(int n) : n_(n) {}

    int strands() const { return n_; }
    const HeckeElem& h(int i);
    HeckeElem monomial(const Monomial& m);
    HeckeElem element(const AnnulusElem& x);
    HeckeElem braid(const BraidWord& beta) const { return thread_braid(beta, n_); }

  private:
    int n_;
    std::map<int, HeckeElem> h_cache_;
};

} // namespace skein
