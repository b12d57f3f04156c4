#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lpa/ring.hpp"

namespace lpa {

enum class Truth { False, True, Unknown };

inline Truth truth_of(bool b) { return b ? Truth::True : Truth::False; }
inline const char* to_string(Truth t) {
  return t == Truth::True ? "true" : t == Truth::False ? "false" : "unknown";
}

// Finite R-linear combination of monomials with nonzero coefficients.
template <class M>
struct LinComb {
  std::map<M, Coef> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const LinComb&) const = default;
};

template <class M>
void add_term(LinComb<M>& x, const M& m, const Coef& c, const Ring& ring) {
  Coef cc = ring.canon(c);
  if (ring.is_zero(cc)) return;
  auto [it, fresh] = x.terms.emplace(m, cc);
  if (fresh) return;
  it->second = ring.add(it->second, cc);
  if (ring.is_zero(it->second)) x.terms.erase(it);
}

template <class M>
LinComb<M> lin_add(const LinComb<M>& a, const LinComb<M>& b, const Ring& ring) {
  LinComb<M> out = a;
  for (const auto& [m, c] : b.terms) add_term(out, m, c, ring);
  return out;
}

template <class M>
LinComb<M> lin_scale(const LinComb<M>& a, const Coef& r, const Ring& ring) {
  LinComb<M> out;
  for (const auto& [m, c] : a.terms) add_term(out, m, ring.mul(c, r), ring);
  return out;
}

template <class M>
LinComb<M> lin_sub(const LinComb<M>& a, const LinComb<M>& b, const Ring& ring) {
  return lin_add(a, lin_scale(b, Coef(-1), ring), ring);
}

// Deterministic sum rendering: "0", "x", "3 * x", "x - y".
std::string format_sum(const std::vector<std::pair<std::string, Coef>>& terms, const Ring& ring);

}  // namespace lpa
