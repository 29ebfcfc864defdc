#include "capture/circle.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>

#include "capture/errors.hpp"

namespace capture {

namespace {

// The partition skeleton: seven slots of total angular width 1/7 each, laid
// out symmetrically about the real axis with boundary points at odd
// fourteenths.  Slot 0 straddles 1/2, slot 6 straddles 0, slots 1..5 come in
// mirror-image pairs.
ArcSet slot_arcs(int k) {
  if (k == 0) return {Arc{Angle(6, 14), Angle(8, 14)}};
  if (k == 6) return {Arc{Angle(13, 14), Angle(1, 14)}};
  return normalize({Arc{Angle(6 - k, 14), Angle(7 - k, 14)},
                    Arc{Angle(7 + k, 14), Angle(8 + k, 14)}});
}

struct Layout {
  std::array<ArcSet, kAlphabetSize> arcs;  // per letter; C = both central arcs
  std::vector<Angle> boundary;
};

Layout derive_layout() {
  std::array<ArcSet, 7> slots;
  for (int k = 0; k < 7; ++k) slots[k] = slot_arcs(k);

  // Class labels 0..6 = L1,L2,L3,R1,R2,R3,central (BC/UC/C share a slot and
  // are separated afterwards).  A placement is valid when doubling carries
  // each label's slot exactly onto the union of its successors' slots.
  const std::array<std::vector<int>, 7> succ = {{
      {3, 4},  // L1 -> R1,R2
      {5, 6},  // L2 -> R3,central
      {1, 2},  // L3 -> L2,L3
      {3, 4},  // R1 -> R1,R2
      {5, 6},  // R2 -> R3,central
      {1, 2},  // R3 -> L2,L3
      {0},     // central -> L1
  }};

  std::optional<std::array<int, 7>> found;
  std::array<int, 7> perm{0, 1, 2, 3, 4, 5, 6};  // label -> slot
  do {
    bool ok = true;
    for (int label = 0; label < 7 && ok; ++label) {
      ArcSet want;
      for (int s : succ[label])
        for (const Arc& a : slots[perm[s]]) want.push_back(a);
      ok = same_up_to_boundary(double_image(slots[perm[label]]),
                               normalize(want));
    }
    if (ok) {
      if (found) throw std::logic_error("partition layout is not unique");
      found = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!found) throw std::logic_error("no consistent partition layout");

  Layout lay;
  auto put = [&](Letter l, const ArcSet& a) {
    lay.arcs[static_cast<std::size_t>(l)] = a;
  };
  put(Letter::L1, slots[(*found)[0]]);
  put(Letter::L2, slots[(*found)[1]]);
  put(Letter::L3, slots[(*found)[2]]);
  put(Letter::R1, slots[(*found)[3]]);
  put(Letter::R2, slots[(*found)[4]]);
  put(Letter::R3, slots[(*found)[5]]);
  const ArcSet& central = slots[(*found)[6]];
  if (central.size() != 2)
    throw std::logic_error("central class must occupy a two-arc slot");
  // UC names the copy in the upper half-circle (angles below 1/2), BC the
  // lower one; C stands for the whole class.
  const Angle half(1, 2);
  for (const Arc& a : central) {
    if (a.lo < a.hi && a.hi <= half)
      put(Letter::UC, {a});
    else
      put(Letter::BC, {a});
  }
  put(Letter::C, central);
  if (lay.arcs[static_cast<std::size_t>(Letter::UC)].empty() ||
      lay.arcs[static_cast<std::size_t>(Letter::BC)].empty())
    throw std::logic_error("central arcs do not split across the half-circles");

  for (Letter l : kAllLetters) {
    if (l == Letter::C) continue;
    for (const Arc& a : lay.arcs[static_cast<std::size_t>(l)]) {
      lay.boundary.push_back(a.lo);
      lay.boundary.push_back(a.hi);
    }
  }
  std::sort(lay.boundary.begin(), lay.boundary.end());
  lay.boundary.erase(std::unique(lay.boundary.begin(), lay.boundary.end()),
                     lay.boundary.end());
  return lay;
}

const Layout& layout() {
  static const Layout lay = derive_layout();
  return lay;
}

}  // namespace

const ArcSet& region_arcs(Letter a) {
  return layout().arcs[static_cast<std::size_t>(a)];
}

const std::vector<Angle>& partition_boundary() { return layout().boundary; }

bool is_boundary_angle(const Angle& t) {
  const auto& b = partition_boundary();
  return std::binary_search(b.begin(), b.end(), t,
                            [](const Angle& x, const Angle& y) { return x < y; });
}

Letter region_of(const Angle& t) {
  for (Letter l : kAllLetters) {
    if (l == Letter::C) continue;
    for (const Arc& a : region_arcs(l))
      if (a.contains(t)) return l;
  }
  throw BoundaryAngle(angle_text(t));
}

Word itinerary(const Angle& t, std::size_t n) {
  if (n == 0) throw std::invalid_argument("itinerary length must be positive");
  Word w;
  w.reserve(n);
  Angle cur = t;
  for (std::size_t i = 0; i < n; ++i) {
    Letter l = region_of(cur);
    if (i + 1 == n && is_c_class(l)) l = Letter::C;
    w.push_back(l);
    cur = double_angle(cur);
  }
  return w;
}

ArcSet cylinder_arcs(const Word& w) {
  if (w.empty()) throw EmptyWord();
  if (!is_admissible(w)) throw NotAdmissible(word_text(w));
  ArcSet acc = region_arcs(w.back());
  for (std::size_t i = w.size() - 1; i-- > 0;) {
    acc = intersect(halve_preimage(acc), region_arcs(w[i]));
    if (acc.size() > 2)
      throw std::logic_error("cylinder trace split into more than two arcs");
  }
  if (acc.empty()) throw EmptyCylinder(word_text(w));
  return acc;
}

Side minor_side(const Word& w, const Angle& a, const Angle& b) {
  if (a == b) throw std::invalid_argument("chord endpoints must differ");
  const ArcSet cyl = cylinder_arcs(w);
  const ArcSet kept{Arc{b, a}}, removed{Arc{a, b}};
  const bool meets_kept = !intersect(cyl, kept).empty();
  const bool meets_removed = !intersect(cyl, removed).empty();
  if (meets_kept && meets_removed) return Side::Straddles;
  return meets_kept ? Side::Kept : Side::Removed;
}

bool in_minor_region(const Word& w, const Angle& a, const Angle& b) {
  switch (minor_side(w, a, b)) {
    case Side::Kept: return true;
    case Side::Removed: return false;
    default: throw Straddles(word_text(w));
  }
}

bool in_minor_region(const Word& w) {
  return in_minor_region(w, Angle(1, 3), Angle(2, 3));
}

}  // namespace capture
