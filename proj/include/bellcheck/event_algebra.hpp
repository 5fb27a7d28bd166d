#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <vector>

#include "bellcheck/bits.hpp"
#include "bellcheck/errors.hpp"

namespace bellcheck {

// An event is a subset of the history space, as a mask over its ordering.
using Event = Bits;

/// A finite Boolean subalgebra of the power set of the history space,
/// presented by its atoms: a partition of the space whose blocks are the
/// finest events the algebra can distinguish. Every event of the algebra is
/// a union of blocks. Atoms are kept in canonical order (sorted by their
/// smallest member), so equal algebras compare equal.
class Algebra {
 public:
  explicit Algebra(std::vector<Event> atoms) : atoms_(std::move(atoms)) {
    std::sort(atoms_.begin(), atoms_.end(),
              [](const Event& a, const Event& b) { return a.find_first() < b.find_first(); });
  }

  static Algebra trivial(std::size_t n_histories) {
    Event omega(n_histories);
    omega.set();
    return Algebra({omega});
  }

  const std::vector<Event>& atoms() const { return atoms_; }
  std::size_t atom_count() const { return atoms_.size(); }
  std::size_t history_count() const { return atoms_.empty() ? 0 : atoms_[0].size(); }
  bool is_trivial() const { return atoms_.size() == 1; }

  /// True iff the event is a union of atoms, i.e. belongs to the algebra.
  bool contains(const Event& e) const {
    for (const auto& atom : atoms_)
      if (atom.intersects(e) && !atom.is_subset_of(e)) return false;
    return true;
  }

  /// The atom containing history h.
  const Event& atom_of(std::size_t h) const {
    for (const auto& atom : atoms_)
      if (atom.test(h)) return atom;
    throw InputError("history index out of range");
  }

  /// True iff every event of this algebra is an event of `other`, i.e.
  /// `other`'s partition refines this one.
  bool subalgebra_of(const Algebra& other) const {
    for (const auto& fine : other.atoms()) {
      const auto h = fine.find_first();
      if (!fine.is_subset_of(atom_of(h))) return false;
    }
    return true;
  }

  bool operator==(const Algebra& other) const { return atoms_ == other.atoms_; }
  bool operator!=(const Algebra& other) const { return !(*this == other); }

 private:
  std::vector<Event> atoms_;
};

/// The algebra generated by a set of events: histories share an atom exactly
/// when they agree on membership in every generating event. An empty
/// generating set yields the trivial algebra {0, Omega}.
inline Algebra generated_algebra(std::size_t n_histories, const std::vector<Event>& events) {
  std::vector<Bits> fingerprints(n_histories, Bits(events.size()));
  for (std::size_t e = 0; e < events.size(); ++e) {
    if (events[e].size() != n_histories) throw InputError("event has wrong history count");
    for (auto h = events[e].find_first(); h != Bits::npos; h = events[e].find_next(h))
      fingerprints[h].set(e);
  }
  std::map<Bits, Event> groups;
  for (std::size_t h = 0; h < n_histories; ++h) {
    auto [it, fresh] = groups.emplace(fingerprints[h], Bits(n_histories));
    (void)fresh;
    it->second.set(h);
  }
  std::vector<Event> atoms;
  atoms.reserve(groups.size());
  for (auto& [fp, atom] : groups) atoms.push_back(std::move(atom));
  return Algebra(std::move(atoms));
}

/// Intersection of the two algebras' event sets: the finest common
/// coarsening of their partitions. Blocks are connected components of the
/// "shares an atom" relation across the two partitions.
inline Algebra algebra_meet(const Algebra& a, const Algebra& b) {
  const std::size_t n = a.history_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t x, std::size_t y) { parent[find(x)] = find(y); };
  for (const Algebra* alg : {&a, &b})
    for (const auto& atom : alg->atoms()) {
      const auto first = atom.find_first();
      for (auto h = atom.find_next(first); h != Bits::npos; h = atom.find_next(h))
        unite(first, h);
    }
  std::map<std::size_t, Event> blocks;
  for (std::size_t h = 0; h < n; ++h) {
    auto [it, fresh] = blocks.emplace(find(h), Bits(n));
    (void)fresh;
    it->second.set(h);
  }
  std::vector<Event> atoms;
  atoms.reserve(blocks.size());
  for (auto& [root, blk] : blocks) atoms.push_back(std::move(blk));
  return Algebra(std::move(atoms));
}

/// The algebra generated by the union of the two algebras' events: the
/// common refinement of their partitions.
inline Algebra algebra_join(const Algebra& a, const Algebra& b) {
  std::vector<Event> atoms;
  for (const auto& x : a.atoms())
    for (const auto& y : b.atoms()) {
      Event cut = x & y;
      if (cut.any()) atoms.push_back(std::move(cut));
    }
  return Algebra(std::move(atoms));
}

}  // namespace bellcheck
