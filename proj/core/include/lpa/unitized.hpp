#pragma once

#include "lpa/lin_comb.hpp"

namespace lpa {

// Element of the unitization R + A, for identities written with (1 - x) factors.
template <class Alg>
struct Unitized {
  Coef unit = 0;
  typename Alg::Element body;
};

template <class Alg>
Unitized<Alg> u_one() {
  return Unitized<Alg>{Coef(1), {}};
}

template <class Alg>
Unitized<Alg> u_lift(const typename Alg::Element& a) {
  return Unitized<Alg>{Coef(0), a};
}

template <class Alg>
Unitized<Alg> u_add(const Alg& alg, const Unitized<Alg>& a, const Unitized<Alg>& b) {
  return {alg.ring().add(a.unit, b.unit), alg.add(a.body, b.body)};
}

template <class Alg>
Unitized<Alg> u_sub(const Alg& alg, const Unitized<Alg>& a, const Unitized<Alg>& b) {
  return {alg.ring().sub(a.unit, b.unit), alg.sub(a.body, b.body)};
}

template <class Alg>
Unitized<Alg> u_mul(const Alg& alg, const Unitized<Alg>& a, const Unitized<Alg>& b) {
  const Ring& r = alg.ring();
  auto body = alg.add(alg.add(alg.scale(b.body, a.unit), alg.scale(a.body, b.unit)),
                      alg.mul(a.body, b.body));
  return {r.mul(a.unit, b.unit), body};
}

// 1 - a
template <class Alg>
Unitized<Alg> u_complement(const Alg& alg, const typename Alg::Element& a) {
  return {Coef(1), alg.scale(a, Coef(-1))};
}

inline Truth as_truth(bool b) { return truth_of(b); }
inline Truth as_truth(Truth t) { return t; }

template <class Alg>
Truth u_equal(const Alg& alg, const Unitized<Alg>& a, const Unitized<Alg>& b) {
  if (alg.ring().canon(a.unit) != alg.ring().canon(b.unit)) return Truth::False;
  return as_truth(alg.equal(a.body, b.body));
}

}  // namespace lpa
