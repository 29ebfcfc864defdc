#pragma once

#include "capture/angle.hpp"

namespace capture {

// Unordered chord of the circle; endpoints kept in increasing angle order.
struct Chord {
  Angle a, b;
  Chord(Angle x, Angle y);
  friend bool operator==(const Chord&, const Chord&) = default;
};

// Strict crossing: endpoints of one chord separate the endpoints of the
// other.  Chords sharing an endpoint never cross strictly.
bool chords_cross(const Chord& c1, const Chord& c2);

struct Leaf {
  Chord chord;
  int depth = 0;
};

// The three seed leaves: the period-3 chord orbit under doubling.
std::vector<Chord> seed_chords();

// All leaves of the invariant lamination down to max_depth, depth by depth.
// Each leaf {a,b} at depth d+1 comes from a depth-d leaf {2a,2b}: of the two
// candidate pairings of the four half-angles, keep the one none of whose
// chords strictly crosses a chord built so far; when both pairings are
// crossing-free, keep the one whose chords are invariant under t -> -t (the
// symmetry all seeds share).  Throws AmbiguousPairing when neither rule
// decides.
std::vector<Leaf> build_lamination(int max_depth);

}  // namespace capture
