#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lpa/lin_comb.hpp"
#include "lpa/structure.hpp"
#include "lpa/ultra_algebra.hpp"

namespace lpa {

// Middle factor of an Exel-Laca monomial: a vertex projection, or a product of
// range projections s_e^* s_e over a nonempty edge set.
struct ELMiddle {
  enum class Kind { Vertex, Ranges };
  Kind kind = Kind::Ranges;
  Vertex v = 0;
  std::vector<EdgeId> edges;  // sorted, unique
  auto operator<=>(const ELMiddle&) const = default;
  bool operator==(const ELMiddle&) const = default;
};

struct ELMono {
  std::vector<EdgeId> alpha;
  ELMiddle mid;
  std::vector<EdgeId> beta;
  auto operator<=>(const ELMono&) const = default;
  bool operator==(const ELMono&) const = default;
};

long degree(const ELMono& m);

class ELAlgebra {
 public:
  using Mono = ELMono;
  using Element = LinComb<ELMono>;

  ELAlgebra(std::shared_ptr<const Structure> g, Ring ring);

  const Structure& structure() const { return *g_; }
  std::shared_ptr<const Structure> structure_ptr() const { return g_; }
  const Ring& ring() const { return ring_; }
  const UltraAlgebra& ultra() const { return ultra_; }

  Element zero() const { return {}; }
  Element vertex(Vertex v) const;
  Element edge(EdgeId e) const;
  Element ghost(EdgeId e) const;
  // s_e^* s_e
  Element range_proj(EdgeId e) const;
  Element term(const Mono& m, const Coef& c = Coef(1)) const;

  Element add(const Element& a, const Element& b) const { return lin_add(a, b, ring_); }
  Element sub(const Element& a, const Element& b) const { return lin_sub(a, b, ring_); }
  Element scale(const Element& a, const Coef& r) const { return lin_scale(a, r, ring_); }
  Element mul(const Element& a, const Element& b) const;
  // Brings every term to a spanning form; finite range products expand to vertices.
  Element reduce(const Element& x) const;
  Element star(const Element& x) const;
  std::map<long, Element> degree_components(const Element& x) const;

  // The homomorphism p_v -> p_v, s_e -> s_e into the ultragraph algebra.
  UltraAlgebra::Element to_ultra(const Element& x) const;
  // True or False when decided; Unknown when the comparison is not complete here.
  Truth equal(const Element& a, const Element& b) const;
  Truth is_zero(const Element& a) const { return equal(a, zero()); }
  // Injectivity of to_ultra is known for finite structures without singular vertices.
  bool complete() const { return complete_; }

  std::string format(const Element& x) const;
  std::string format_mono(const Mono& m) const;

  Element canon(const Mono& m, const Coef& c) const;
  VertexSet middle_set(const ELMiddle& mid) const;
  // Product before canonicalization.
  std::optional<Mono> mul_mono(const Mono& a, const Mono& b) const;

 private:
  std::shared_ptr<const Structure> g_;
  Ring ring_;
  UltraAlgebra ultra_;
  bool complete_ = false;
};

}  // namespace lpa
