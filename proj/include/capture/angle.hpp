#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

namespace capture {

using Int = boost::multiprecision::cpp_int;

// A point of the circle R/Z as a reduced fraction in [0,1).
struct Angle {
  Int num = 0;
  Int den = 1;

  Angle() = default;
  Angle(Int n, Int d);  // reduces and wraps into [0,1)
  Angle(long n, long d) : Angle(Int(n), Int(d)) {}

  friend bool operator==(const Angle& a, const Angle& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Angle& a, const Angle& b) { return !(a == b); }
  // order within the fundamental domain [0,1)
  friend bool operator<(const Angle& a, const Angle& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Angle& a, const Angle& b) { return !(b < a); }
};

Angle double_angle(const Angle& t);                 // 2t mod 1
Angle halve_angle(const Angle& t, bool add_half);   // t/2 (+ 1/2)
Angle add(const Angle& a, const Angle& b);
Angle sub(const Angle& a, const Angle& b);

std::string angle_text(const Angle& t);  // "p/q", reduced
Angle parse_angle(const std::string& s);

// Does t lie in the open arc running counterclockwise from lo to hi?
bool in_open_arc(const Angle& t, const Angle& lo, const Angle& hi);

// Open counterclockwise arc from lo to hi (lo != hi); length in (0,1).
struct Arc {
  Angle lo, hi;
  Angle length() const { return sub(hi, lo); }
  bool contains(const Angle& t) const { return in_open_arc(t, lo, hi); }
};

// A finite union of disjoint open arcs, kept sorted by lo.
using ArcSet = std::vector<Arc>;

ArcSet normalize(ArcSet arcs);              // sort; merge overlapping/touching
ArcSet intersect(const ArcSet& a, const ArcSet& b);
ArcSet double_image(const ArcSet& a);       // pointwise 2t; arcs must be shorter than 1/2
ArcSet halve_preimage(const ArcSet& a);     // full doubling preimage (two copies)
std::pair<Int, Int> total_length_frac(const ArcSet& a);  // exact, not wrapped
bool same_up_to_boundary(const ArcSet& a, const ArcSet& b);  // equal closures
bool contains_arc(const ArcSet& outer, const Arc& inner);    // up to endpoints

}  // namespace capture
