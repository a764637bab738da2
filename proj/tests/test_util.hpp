#pragma once

#include <random>
#include <vector>

#include "soc3/invsys.hpp"

namespace soc3::testutil {

template <class F>
typename F::Elt small_coeff(const F& f, std::mt19937_64& rng);

inline Rat small_coeff(const QQ& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  return f.of_int(d(rng));
}

inline Fp small_coeff(const GF& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint64_t> d(0, f.p - 1);
  return Fp(d(rng), f.p);
}

template <class F>
DivPow<F> random_phi(const F& f, std::mt19937_64& rng) {
  DivPow<F> phi(f);
  for (const Mono& m : monomials(kAllVars, 3))
    phi.add_term(m, small_coeff(f, rng));
  return phi;
}

// Rejection-samples Phi with embedding dimension four (valid inverse
// systems).
template <class F>
std::vector<DivPow<F>> valid_corpus(const F& f, int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<DivPow<F>> out;
  while (static_cast<int>(out.size()) < n) {
    DivPow<F> phi = random_phi(f, rng);
    if (phi.is_zero()) continue;
    InverseSystem<F> sys{f, phi};
    AnnihilatorOracle<F> o = annihilator_oracle(f, phi);
    if (o.hf[1] != 4) continue;
    out.push_back(phi);
  }
  return out;
}

template <class F>
ScalarMat<F> random_invertible(const F& f, std::mt19937_64& rng) {
  while (true) {
    ScalarMat<F> m(f, 4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m.at(i, j) = small_coeff(f, rng);
    if (!det(m).is_zero()) return m;
  }
}

inline const char* kPhi9 = "x*y^2+x*z^2+x^2*w";
inline const char* kPhi7 = "x^2*y+z^3+x*z*w+x*w^2+w^3";
inline const char* kPhi6 = "-3*x^3-2*x^2*y+2*x^2*z+x*z^2-x^2*w-x*y*w+x*z*w+z^2*w";
inline const char* kPhiExc = "x^3+y*z*w";

}  // namespace soc3::testutil
