#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heawood/error.hpp"
#include "heawood/perm_group.hpp"

namespace heawood {

/// Isomorphism-type label for the groups met in the Heawood subgroup census.
struct IsoType {
  enum class Kind { Trivial, Cyclic, Dihedral, A4, S4, PSL27, PGL27, Z7Z3, Z7Z6, Unrecognized };

  Kind kind = Kind::Unrecognized;
  std::size_t n = 0;  // Z_n, D_n

  static IsoType trivial() { return {Kind::Trivial, 0}; }
  static IsoType cyclic(std::size_t n) { return n == 1 ? trivial() : IsoType{Kind::Cyclic, n}; }
  static IsoType dihedral(std::size_t n) { return {Kind::Dihedral, n}; }
  static IsoType unrecognized() { return {Kind::Unrecognized, 0}; }

  std::string label() const {
    switch (kind) {
      case Kind::Trivial: return "trivial";
      case Kind::Cyclic: return "Z" + std::to_string(n);
      case Kind::Dihedral: return "D" + std::to_string(n);
      case Kind::A4: return "A4";
      case Kind::S4: return "S4";
      case Kind::PSL27: return "PSL(2,7)";
      case Kind::PGL27: return "PGL(2,7)";
      case Kind::Z7Z3: return "Z7⋊Z3";
      case Kind::Z7Z6: return "Z7⋊Z6";
      case Kind::Unrecognized: return "unrecognized";
    }
    return "unrecognized";
  }

  /// Order of a group of this type; 0 when unrecognized.
  std::size_t group_order() const {
    switch (kind) {
      case Kind::Trivial: return 1;
      case Kind::Cyclic: return n;
      case Kind::Dihedral: return 2 * n;
      case Kind::A4: return 12;
      case Kind::S4: return 24;
      case Kind::PSL27: return 168;
      case Kind::PGL27: return 336;
      case Kind::Z7Z3: return 21;
      case Kind::Z7Z6: return 42;
      case Kind::Unrecognized: return 0;
    }
    return 0;
  }

  static std::optional<IsoType> from_label(std::string_view s) {
    static const std::map<std::string, IsoType, std::less<>> fixed = {
        {"trivial", trivial()},           {"A4", {Kind::A4, 0}},          {"S4", {Kind::S4, 0}},
        {"PSL(2,7)", {Kind::PSL27, 0}},   {"PGL(2,7)", {Kind::PGL27, 0}}, {"Z7⋊Z3", {Kind::Z7Z3, 0}},
        {"Z7⋊Z6", {Kind::Z7Z6, 0}},       {"unrecognized", unrecognized()}};
    if (auto it = fixed.find(s); it != fixed.end()) return it->second;
    if (s.size() >= 2 && (s[0] == 'Z' || s[0] == 'D')) {
      std::size_t n = 0;
      for (char c : s.substr(1)) {
        if (c < '0' || c > '9') return std::nullopt;
        n = n * 10 + static_cast<std::size_t>(c - '0');
      }
      if (n == 0) return std::nullopt;
      if (s[0] == 'Z') return n >= 2 ? std::optional(cyclic(n)) : std::nullopt;
      return dihedral(n);
    }
    return std::nullopt;
  }

  friend auto operator<=>(const IsoType&, const IsoType&) = default;
};

/// Invariants read off a group's Cayley table.
struct GroupInvariants {
  std::size_t order = 0;
  bool abelian = false;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;         // |[G,G]|
  std::size_t second_derived_order = 0;  // |[G',G']|
  std::map<std::size_t, std::size_t> spectrum;

  std::size_t count_of_order(std::size_t k) const {
    auto it = spectrum.find(k);
    return it == spectrum.end() ? 0 : it->second;
  }
};

namespace detail {

inline std::vector<std::size_t> members(const std::vector<bool>& in) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

inline std::vector<bool> derived_subgroup(const CayleyTable& t, const std::vector<std::size_t>& of) {
  std::vector<bool> is_comm(t.order(), false);
  std::vector<std::size_t> comms;
  for (std::size_t a : of)
    for (std::size_t b : of) {
      std::size_t c = t.commutator(a, b);
      if (!is_comm[c]) {
        is_comm[c] = true;
        comms.push_back(c);
      }
    }
  return t.closure(comms);
}

}  // namespace detail

inline GroupInvariants group_invariants(const PermGroup& g) {
  CayleyTable t(g);
  GroupInvariants inv;
  inv.order = g.order();
  std::vector<std::size_t> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  for (std::size_t a : all) ++inv.spectrum[t.element_order(a)];
  for (std::size_t a : all) {
    bool central = true;
    for (std::size_t b : all)
      if (t.mul(a, b) != t.mul(b, a)) {
        central = false;
        break;
      }
    inv.center_order += central ? 1 : 0;
  }
  inv.abelian = inv.center_order == inv.order;
  auto derived = detail::members(detail::derived_subgroup(t, all));
  inv.derived_order = derived.size();
  inv.second_derived_order = detail::members(detail::derived_subgroup(t, derived)).size();
  return inv;
}

/// Decision table over invariants. Each branch pins the type uniquely among
/// groups of that order; anything else is reported as unrecognized.
inline IsoType classify_invariants(const GroupInvariants& inv) {
  using Kind = IsoType::Kind;
  const std::size_t n = inv.order;
  auto spectrum_is = [&](std::map<std::size_t, std::size_t> expected) { return inv.spectrum == expected; };
  if (n == 1) return IsoType::trivial();
  if (inv.abelian) {
    if (inv.count_of_order(n) > 0) return IsoType::cyclic(n);
    if (n == 4) return IsoType::dihedral(2);
    return IsoType::unrecognized();
  }
  // Nonabelian of order 2m with an element of order m and exactly m
  // involutions outside that cyclic subgroup: every outer element inverts it.
  if (n % 2 == 0) {
    const std::size_t m = n / 2;
    if (inv.count_of_order(m) > 0 && inv.count_of_order(2) == m + (m % 2 == 0 ? 1 : 0)) return IsoType::dihedral(m);
  }
  if (n == 12 && spectrum_is({{1, 1}, {2, 3}, {3, 8}})) return {Kind::A4, 0};
  if (n == 24 && inv.center_order == 1 && inv.derived_order == 12 && spectrum_is({{1, 1}, {2, 9}, {3, 8}, {4, 6}}))
    return {Kind::S4, 0};
  if (n == 21) return {Kind::Z7Z3, 0};
  // Order 42 types: Z42, D21, Z7xS3, Z3xD7, Z2x(Z7:Z3) all have a nontrivial
  // center or an element of order 21.
  if (n == 42 && inv.center_order == 1 && inv.count_of_order(21) == 0 &&
      spectrum_is({{1, 1}, {2, 7}, {3, 14}, {6, 14}, {7, 6}}))
    return {Kind::Z7Z6, 0};
  if (n == 168 && inv.derived_order == 168 && spectrum_is({{1, 1}, {2, 21}, {3, 56}, {4, 42}, {7, 48}}))
    return {Kind::PSL27, 0};
  // Trivial center with a perfect subgroup of order 168 embeds in Aut(PSL(2,7)).
  if (n == 336 && inv.center_order == 1 && inv.derived_order == 168 && inv.second_derived_order == 168)
    return {Kind::PGL27, 0};
  return IsoType::unrecognized();
}

inline constexpr std::size_t kMaxIsoTypeOrder = 336;

inline IsoType iso_type(const PermGroup& g) {
  if (g.order() > kMaxIsoTypeOrder) throw InputError("iso_type supports groups of order at most 336");
  return classify_invariants(group_invariants(g));
}

}  // namespace heawood
