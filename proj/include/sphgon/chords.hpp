#pragma once

// Chord diagrams in the disk: vertices sit on the boundary circle in a fixed
// cyclic order, vertex j carrying multiplicities[j] arc ends ("slots").  A
// diagram is a perfect matching of all slots by pairwise non-crossing chords,
// none of which joins two slots of the same vertex.  Slots are numbered
// clockwise along the boundary, so non-crossing is exactly the balanced
// nesting condition on the linear slot sequence.

#include "sphgon/tableau.hpp"

#include <utility>
#include <vector>

namespace sphgon {

using Arc = std::pair<int, int>;  // slot indices, first < second

inline std::vector<int> slot_vertices(const MultiplicityVector& mult) {
  std::vector<int> vertex_of;
  for (size_t v = 0; v < mult.size(); ++v)
    for (int s = 0; s < mult[v]; ++s) vertex_of.push_back(static_cast<int>(v));
  return vertex_of;
}

struct ChordDiagram {
  MultiplicityVector multiplicities;
  std::vector<Arc> arcs;  // sorted by first endpoint

  int total_slots() const { return static_cast<int>(multiplicity_sum(multiplicities)); }

  int vertex_of_slot(int slot) const {
    int v = 0;
    while (slot >= multiplicities[v]) slot -= multiplicities[v++];
    return v;
  }

  bool covers_all_slots_once() const {
    std::vector<int> seen(total_slots(), 0);
    for (const Arc& a : arcs) {
      if (a.first < 0 || a.second >= total_slots() || a.first >= a.second) return false;
      ++seen[a.first];
      ++seen[a.second];
    }
    for (int s : seen)
      if (s != 1) return false;
    return true;
  }

  bool noncrossing() const {
    for (size_t i = 0; i < arcs.size(); ++i)
      for (size_t j = i + 1; j < arcs.size(); ++j) {
        const auto& [a, b] = arcs[i];
        const auto& [c, d] = arcs[j];
        const bool c_inside = a < c && c < b;
        const bool d_inside = a < d && d < b;
        if (c_inside != d_inside) return false;
      }
    return true;
  }

  bool loop_free() const {
    for (const Arc& a : arcs)
      if (vertex_of_slot(a.first) == vertex_of_slot(a.second)) return false;
    return true;
  }

  bool operator==(const ChordDiagram& other) const = default;
};

namespace detail {

// Non-crossing loop-free perfect matchings of vertex_of[lo..hi].  The first
// slot of the range is matched to each admissible partner in ascending order;
// inner and outer sub-ranges are independent, which enforces non-crossing.
inline std::vector<std::vector<Arc>> noncrossing_matchings(const std::vector<int>& vertex_of,
                                                           int lo, int hi) {
  if (lo > hi) return {{}};
  std::vector<std::vector<Arc>> result;
  for (int j = lo + 1; j <= hi; j += 2) {
    if (vertex_of[lo] == vertex_of[j]) continue;
    const auto inner = noncrossing_matchings(vertex_of, lo + 1, j - 1);
    if (inner.empty()) continue;
    const auto outer = noncrossing_matchings(vertex_of, j + 1, hi);
    for (const auto& in : inner)
      for (const auto& out : outer) {
        std::vector<Arc> arcs;
        arcs.reserve(1 + in.size() + out.size());
        arcs.emplace_back(lo, j);
        arcs.insert(arcs.end(), in.begin(), in.end());
        arcs.insert(arcs.end(), out.begin(), out.end());
        result.push_back(std::move(arcs));
      }
  }
  return result;
}

}  // namespace detail

// Every chord diagram on the given multiplicity data, in deterministic order
// (lexicographic by sorted arc list).  The count agrees with kostka(mult);
// that identity is exercised by tests rather than assumed here.
inline std::vector<ChordDiagram> enumerate_diagrams(const MultiplicityVector& mult) {
  validate_multiplicities(mult);
  const auto vertex_of = slot_vertices(mult);
  if (vertex_of.size() % 2 != 0) return {};
  auto matchings =
      detail::noncrossing_matchings(vertex_of, 0, static_cast<int>(vertex_of.size()) - 1);
  std::vector<ChordDiagram> out;
  out.reserve(matchings.size());
  for (auto& arcs : matchings) {
    std::sort(arcs.begin(), arcs.end());
    out.push_back(ChordDiagram{mult, std::move(arcs)});
  }
  std::sort(out.begin(), out.end(),
            [](const ChordDiagram& a, const ChordDiagram& b) { return a.arcs < b.arcs; });
  return out;
}

}  // namespace sphgon
