#pragma once

#include <cstddef>
#include <vector>

#include "heawood/error.hpp"
#include "heawood/perm.hpp"
#include "heawood/perm_group.hpp"

namespace heawood {

/// Rotation by one step and the reflection i -> -i of an n-gon, n >= 3.
inline std::vector<Perm> dihedral_generators(std::size_t n) {
  if (n < 3) throw InputError("polygon generators need n >= 3");
  std::vector<int> rot(n), ref(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<int>((i + 1) % n);
    ref[i] = static_cast<int>((n - i) % n);
  }
  return {Perm(rot), Perm(ref)};
}

/// D_n of order 2n. For n >= 3 it acts on an n-gon; the degenerate cases act
/// faithfully on 2 points (D_1 = Z2) and 4 points (D_2 = Klein four-group).
inline PermGroup make_dihedral(std::size_t n) {
  if (n < 1) throw InputError("dihedral group needs n >= 1");
  if (n == 1) return generate_group({Perm({1, 0})});
  if (n == 2) return generate_group({Perm({1, 0, 3, 2}), Perm({2, 3, 0, 1})});
  auto gens = dihedral_generators(n);
  return generate_group(gens);
}

/// Places `p` on points [offset, offset + p.degree()) of a ground set of size `degree`.
inline Perm shifted(const Perm& p, std::size_t offset, std::size_t degree) {
  std::vector<int> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < p.degree(); ++i) images[offset + i] = static_cast<int>(offset) + p(static_cast<int>(i));
  return Perm(images);
}

/// D_m x D_m for odd m, each factor on its own copy of the m-gon.
inline PermGroup make_dihedral_product(std::size_t m) {
  if (m % 2 == 0) throw InputError("dihedral product is defined here for odd m only");
  PermGroup factor = make_dihedral(m);
  const std::size_t d = factor.degree();
  std::vector<Perm> gens;
  for (const Perm& g : factor.generators()) {
    gens.push_back(shifted(g, 0, 2 * d));
    gens.push_back(shifted(g, d, 2 * d));
  }
  return generate_group(gens);
}

/// True iff every two elements of odd order commute.
inline bool odd_order_elements_commute(const PermGroup& g) {
  std::vector<const Perm*> odd;
  for (const Perm& p : g.elements())
    if (element_order(p) % 2 == 1) odd.push_back(&p);
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = i + 1; j < odd.size(); ++j)
      if (*odd[i] * *odd[j] != *odd[j] * *odd[i]) return false;
  return true;
}

}  // namespace heawood
