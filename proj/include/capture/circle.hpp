#pragma once

#include <optional>

#include "capture/angle.hpp"
#include "capture/letters.hpp"
#include "capture/words.hpp"

namespace capture {

// Arcs of the circle partition for the degree-2 map t -> 2t, one entry per
// letter.  The layout is found once by searching label assignments for the
// unique one compatible with the letter transition rules, then cached.
const ArcSet& region_arcs(Letter a);

// All partition boundary angles (denominators 7 and 14).
const std::vector<Angle>& partition_boundary();

bool is_boundary_angle(const Angle& t);

// Letter of the partition region containing t; throws BoundaryAngle if t is
// a boundary point.
Letter region_of(const Angle& t);

// Code of t under doubling: letters of the regions visited.  The final
// letter of a length-n itinerary reports the merged central class C when the
// orbit point lies in any of the three central regions.
Word itinerary(const Angle& t, std::size_t n);

// Exact trace of the set of angles whose itinerary is w (at most 2 arcs).
ArcSet cylinder_arcs(const Word& w);

enum class Side { Kept, Removed, Straddles };

// Position of the cylinder of w relative to the chord {a, b}: the kept side
// is the open arc running counterclockwise from b to a.
Side minor_side(const Word& w, const Angle& a, const Angle& b);

// Convenience: kept side of the chord {1/3, 2/3} (the arc through 0).
// Throws Straddles when the cylinder meets both sides.
bool in_minor_region(const Word& w);
bool in_minor_region(const Word& w, const Angle& a, const Angle& b);

}  // namespace capture
