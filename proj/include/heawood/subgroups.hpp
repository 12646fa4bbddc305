#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <unordered_set>
#include <vector>

#include "heawood/error.hpp"
#include "heawood/iso_type.hpp"
#include "heawood/perm_group.hpp"

namespace heawood {

/// One subgroup of a parent PermGroup.
struct SubgroupRecord {
  std::vector<std::size_t> elements;  // sorted indices into parent.elements()
  std::size_t order = 0;
  IsoType iso_type;

  bool contains(std::size_t element_index) const {
    return std::binary_search(elements.begin(), elements.end(), element_index);
  }
  bool includes(const SubgroupRecord& other) const {
    return std::includes(elements.begin(), elements.end(), other.elements.begin(), other.elements.end());
  }
};

inline constexpr std::size_t kDefaultSubgroupBound = 400;

inline PermGroup subgroup_group(const PermGroup& parent, const SubgroupRecord& rec) {
  std::vector<Perm> perms;
  perms.reserve(rec.elements.size());
  for (std::size_t i : rec.elements) perms.push_back(parent.element(i));
  return PermGroup::from_elements(std::move(perms));
}

/// Every subgroup of g exactly once, ordered by (order, element indices).
///
/// Seeds with the cyclic subgroups, then extends each known subgroup H by one
/// representative g of each right coset Hg (g outside H) via <H, g>, until no
/// new subgroup appears. Any subgroup <g1, ..., gr> is reached along the chain
/// <g1> < <g1, g2> < ..., so the search is complete.
inline std::vector<SubgroupRecord> enumerate_subgroups(const PermGroup& g,
                                                      std::size_t bound = kDefaultSubgroupBound) {
  if (g.order() > bound)
    throw ResourceError("subgroup enumeration bound " + std::to_string(bound) + " exceeded by group of order " +
                        std::to_string(g.order()));
  const CayleyTable t(g);
  const std::size_t n = g.order();

  struct Found {
    std::vector<bool> members;
    std::vector<std::size_t> gens;
  };
  std::vector<Found> found;
  std::unordered_set<std::vector<bool>> known;
  std::deque<std::size_t> queue;

  auto add = [&](std::vector<bool> members, std::vector<std::size_t> gens) {
    if (!known.insert(members).second) return;
    found.push_back({std::move(members), std::move(gens)});
    queue.push_back(found.size() - 1);
  };

  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> gens;
    if (x != CayleyTable::kIdentity) gens.push_back(x);
    std::size_t seed[] = {x};
    add(t.closure(seed), gens);
  }

  while (!queue.empty()) {
    const std::size_t h = queue.front();
    queue.pop_front();
    const std::vector<bool> members = found[h].members;
    const std::vector<std::size_t> base_gens = found[h].gens;
    const auto h_elems = detail::members(members);
    std::vector<bool> covered = members;
    for (std::size_t x = 0; x < n; ++x) {
      if (covered[x]) continue;
      for (std::size_t e : h_elems) covered[t.mul(e, x)] = true;
      std::vector<std::size_t> gens = base_gens;
      gens.push_back(x);
      auto members_x = t.closure(gens);
      add(std::move(members_x), std::move(gens));
    }
  }

  std::vector<SubgroupRecord> out;
  out.reserve(found.size());
  for (const Found& f : found) {
    SubgroupRecord rec;
    rec.elements = detail::members(f.members);
    rec.order = rec.elements.size();
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(), [](const SubgroupRecord& a, const SubgroupRecord& b) {
    return a.order != b.order ? a.order < b.order : a.elements < b.elements;
  });
  for (SubgroupRecord& rec : out)
    rec.iso_type = rec.order <= kMaxIsoTypeOrder ? iso_type(subgroup_group(g, rec)) : IsoType::unrecognized();
  return out;
}

}  // namespace heawood
