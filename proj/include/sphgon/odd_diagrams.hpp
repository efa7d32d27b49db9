#pragma once

// Chord diagrams symmetric under the reflection z -> -conj(z) of the disk.
// Vertices sit at 0, a_1, ..., a_{n-2}, infinity, -a_{n-2}, ..., -a_1 on the
// boundary circle; the reflection fixes 0 and infinity (reversing their slot
// blocks in place) and exchanges the block at a_j with the block at -a_j,
// reversing slot order.  Slot counts at 0 and infinity must be even.
//
// Counting these symmetric diagrams reduces to a plain Kostka number: the
// axis vertices are traded for two auxiliary end vertices of multiplicities
// r and s, chosen large enough that no chord can travel "around the back".

#include "sphgon/chords.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sphgon {

struct OddDiagram {
  ChordDiagram diagram;         // on the doubled vertex circle
  std::vector<int> reflection;  // slot -> mirror slot
  int crossing_arcs = 0;        // arcs with one positive and one negative endpoint
};

struct AxisMultiplicities {
  int m0 = 0;                // slots at 0, even
  MultiplicityVector interior;  // slots at a_1..a_{n-2}, mirrored at -a_j
  int m_inf = 0;             // slots at infinity, even
};

inline void validate_axis(const AxisMultiplicities& axis) {
  if (axis.m0 < 0 || axis.m_inf < 0)
    throw std::invalid_argument("slot counts must be non-negative");
  if (axis.m0 % 2 != 0 || axis.m_inf % 2 != 0)
    throw std::invalid_argument("slot counts at 0 and infinity must be even");
  validate_multiplicities(axis.interior);
}

// Vertex layout on the doubled circle: 0, a_1..a_k, infinity, -a_k..-a_1.
inline MultiplicityVector doubled_multiplicities(const AxisMultiplicities& axis) {
  MultiplicityVector mult;
  mult.push_back(axis.m0);
  mult.insert(mult.end(), axis.interior.begin(), axis.interior.end());
  mult.push_back(axis.m_inf);
  mult.insert(mult.end(), axis.interior.rbegin(), axis.interior.rend());
  return mult;
}

// Per-slot mirror table for the reflection z -> -conj(z).
inline std::vector<int> reflection_table(const AxisMultiplicities& axis) {
  const int k = static_cast<int>(axis.interior.size());
  std::vector<int> offsets;  // block start per vertex
  int running = 0;
  offsets.push_back(running);
  running += axis.m0;
  for (int j = 0; j < k; ++j) {
    offsets.push_back(running);
    running += axis.interior[j];
  }
  offsets.push_back(running);
  running += axis.m_inf;
  for (int j = k - 1; j >= 0; --j) {
    offsets.push_back(running);
    running += axis.interior[j];
  }

  std::vector<int> mirror(running);
  auto reflect_block = [&](int from, int to, int size) {
    for (int t = 0; t < size; ++t) mirror[from + t] = to + size - 1 - t;
  };
  reflect_block(offsets[0], offsets[0], axis.m0);           // block at 0, in place
  reflect_block(offsets[k + 1], offsets[k + 1], axis.m_inf);  // block at infinity
  for (int j = 0; j < k; ++j) {
    const int positive = offsets[1 + j];
    const int negative = offsets[k + 2 + (k - 1 - j)];
    reflect_block(positive, negative, axis.interior[j]);
    reflect_block(negative, positive, axis.interior[j]);
  }
  return mirror;
}

namespace detail {

// Sign of each slot: +1 on the positive ray, -1 on the negative ray, 0 on the
// axis vertices 0 and infinity.
inline std::vector<int> slot_signs(const AxisMultiplicities& axis) {
  std::vector<int> signs;
  signs.insert(signs.end(), axis.m0, 0);
  for (int m : axis.interior) signs.insert(signs.end(), m, +1);
  signs.insert(signs.end(), axis.m_inf, 0);
  for (auto it = axis.interior.rbegin(); it != axis.interior.rend(); ++it)
    signs.insert(signs.end(), *it, -1);
  return signs;
}

inline bool reflection_invariant(const std::vector<Arc>& arcs, const std::vector<int>& mirror) {
  for (const Arc& arc : arcs) {
    int a = mirror[arc.first];
    int b = mirror[arc.second];
    if (a > b) std::swap(a, b);
    bool found = false;
    for (const Arc& other : arcs)
      if (other.first == a && other.second == b) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace detail

// All reflection-invariant diagrams on the doubled circle, in the same
// deterministic order as enumerate_diagrams.
inline std::vector<OddDiagram> enumerate_odd_diagrams(const AxisMultiplicities& axis) {
  validate_axis(axis);
  const auto mirror = reflection_table(axis);
  const auto signs = detail::slot_signs(axis);
  std::vector<OddDiagram> out;
  for (ChordDiagram& d : enumerate_diagrams(doubled_multiplicities(axis))) {
    if (!detail::reflection_invariant(d.arcs, mirror)) continue;
    int crossing = 0;
    for (const Arc& arc : d.arcs)
      if (signs[arc.first] * signs[arc.second] == -1) ++crossing;
    out.push_back(OddDiagram{std::move(d), mirror, crossing});
  }
  return out;
}

// Parameters of the reduction to a Kostka number.  mu decides the parity of
// the crossing-arc count; (r, s) are the auxiliary end multiplicities, with k
// the smallest admissible slack (both ends positive, r + s exceeding the
// interior total so no chord wraps around).
struct KostkaReduction {
  long mu = 0;
  bool crossing_count_even = true;
  long k = 0;
  long r = 0;
  long s = 0;
};

inline KostkaReduction reduction_params(const AxisMultiplicities& axis, long extra_k = 0) {
  validate_axis(axis);
  if (extra_k < 0) throw std::invalid_argument("extra_k must be non-negative");
  const long interior_sum = multiplicity_sum(axis.interior);
  KostkaReduction red;
  red.mu = (axis.m0 + axis.m_inf) / 2 + interior_sum;
  red.crossing_count_even = red.mu % 2 == 0;

  if (red.crossing_count_even) {
    const long r0 = axis.m0 / 2;
    const long s0 = axis.m_inf / 2;
    long k = std::max<long>({0, 1 - r0, 1 - s0});
    while (r0 + k + s0 + k <= interior_sum) ++k;
    red.k = k + extra_k;
    red.r = r0 + red.k;
    red.s = s0 + red.k;
  } else {
    // Shifting axis arcs with the odd-parity moves conserves m0 + m_inf, so
    // the auxiliary end vertex absorbs the full axis total (plus the extra
    // arc pair from the parity switch at the empty end).
    const long base = (axis.m0 + axis.m_inf) / 2;
    long k = 1;  // s = k must be positive
    while (base + 1 + 2 * k <= interior_sum) ++k;
    red.k = k + extra_k;
    red.r = base + red.k + 1;
    red.s = red.k;
  }
  return red;
}

// Number of reflection-invariant diagrams, computed through the Kostka
// reduction.  The result does not depend on extra_k; that stability is a
// tested property.
inline BigInt odd_count_formula(const AxisMultiplicities& axis, long extra_k = 0) {
  const KostkaReduction red = reduction_params(axis, extra_k);
  MultiplicityVector content;
  content.push_back(static_cast<int>(red.r));
  content.insert(content.end(), axis.interior.begin(), axis.interior.end());
  content.push_back(static_cast<int>(red.s));
  return kostka(content);
}

// Closed form for the chain 0, (1,)*m, infinity with empty axis vertices.
inline BigInt binomial_count(int m) {
  if (m < 1) throw std::invalid_argument("chain length must be positive");
  return binomial(m, m / 2);
}

}  // namespace sphgon
