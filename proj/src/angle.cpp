#include "capture/angle.hpp"

#include <algorithm>
#include <stdexcept>

#include "capture/errors.hpp"

namespace capture {

Angle::Angle(Int n, Int d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  if (d < 0) { d = -d; n = -n; }
  n %= d;
  if (n < 0) n += d;
  Int g = gcd(n, d);
  num = n / g;
  den = d / g;
}

Angle double_angle(const Angle& t) { return Angle(2 * t.num, t.den); }

Angle halve_angle(const Angle& t, bool add_half) {
  Int n = t.num;
  if (add_half) n += t.den;
  return Angle(n, 2 * t.den);
}

Angle add(const Angle& a, const Angle& b) {
  return Angle(a.num * b.den + b.num * a.den, a.den * b.den);
}

Angle sub(const Angle& a, const Angle& b) {
  return Angle(a.num * b.den - b.num * a.den, a.den * b.den);
}

std::string angle_text(const Angle& t) {
  return t.num.str() + "/" + t.den.str();
}

Angle parse_angle(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Angle(Int(s), Int(1));
    return Angle(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError("bad angle '" + s + "'");
  }
}

bool in_open_arc(const Angle& t, const Angle& lo, const Angle& hi) {
  if (lo == hi) return false;
  if (lo < hi) return lo < t && t < hi;
  return lo < t || t < hi;  // wraps through 0
}

ArcSet normalize(ArcSet arcs) {
  if (arcs.empty()) return arcs;
  const Angle zero(0, 1);
  // split arcs through 0 so everything lives in [0,1]; hi==0 stands for 1
  ArcSet flat;
  for (const Arc& a : arcs) {
    if (a.hi < a.lo || a.hi == zero) {
      if (a.hi != zero) flat.push_back(Arc{zero, a.hi});
      flat.push_back(Arc{a.lo, zero});
    } else {
      flat.push_back(a);
    }
  }
  std::sort(flat.begin(), flat.end(),
            [](const Arc& x, const Arc& y) { return x.lo < y.lo; });
  auto end_key = [&](const Arc& a) {
    if (a.hi != zero) return a.hi;
    Angle one;  // the constructor would wrap 1/1 back to 0
    one.num = 1;
    one.den = 1;
    return one;
  };
  // closure merge: abutting open arcs coalesce (boundary points are never
  // significant for the sets this library manipulates)
  ArcSet merged;
  for (const Arc& a : flat) {
    if (!merged.empty() && !(end_key(merged.back()) < a.lo)) {
      if (end_key(merged.back()) < end_key(a)) merged.back().hi = a.hi;
      continue;
    }
    merged.push_back(a);
  }
  // re-wrap around 0
  if (merged.size() > 1 && merged.front().lo == zero &&
      merged.back().hi == zero) {
    merged.back().hi = merged.front().hi;
    merged.erase(merged.begin());
  }
  if (merged.size() == 1 && merged.front().lo == merged.front().hi)
    throw std::invalid_argument("arc set covers the full circle");
  return merged;
}

ArcSet intersect(const ArcSet& a, const ArcSet& b) {
  ArcSet out;
  for (const Arc& x : a) {
    const Angle lenx = x.length();
    for (const Arc& y : b) {
      const Angle leny = y.length();
      Int D = x.lo.den;
      D = D / gcd(D, y.lo.den) * y.lo.den;
      D = D / gcd(D, lenx.den) * lenx.den;
      D = D / gcd(D, leny.den) * leny.den;
      const Int sx = x.lo.num * (D / x.lo.den);
      const Int ex = sx + lenx.num * (D / lenx.den);
      const Int sy0 = y.lo.num * (D / y.lo.den);
      const Int ey0 = sy0 + leny.num * (D / leny.den);
      for (int shift = -1; shift <= 1; ++shift) {
        const Int sy = sy0 + shift * D, ey = ey0 + shift * D;
        const Int lo = std::max(sx, sy), hi = std::min(ex, ey);
        if (lo < hi) out.push_back(Arc{Angle(lo, D), Angle(hi, D)});
      }
    }
  }
  return normalize(out);
}

ArcSet double_image(const ArcSet& a) {
  ArcSet out;
  for (const Arc& x : a) {
    if (!(x.length() < Angle(1, 2)))
      throw std::invalid_argument("arc too long to double injectively");
    out.push_back(Arc{double_angle(x.lo), double_angle(x.hi)});
  }
  return normalize(out);
}

ArcSet halve_preimage(const ArcSet& a) {
  ArcSet out;
  for (const Arc& x : a) {
    Angle len = x.length();
    Angle half_len(len.num, 2 * len.den);
    for (bool up : {false, true}) {
      Angle s = halve_angle(x.lo, up);
      out.push_back(Arc{s, add(s, half_len)});
    }
  }
  return normalize(out);
}

std::pair<Int, Int> total_length_frac(const ArcSet& a) {
  Int n = 0, d = 1;
  for (const Arc& x : a) {
    Angle l = x.length();
    n = n * l.den + l.num * d;
    d *= l.den;
    Int g = gcd(n, d);
    if (g > 1) { n /= g; d /= g; }
  }
  return {n, d};
}

bool same_up_to_boundary(const ArcSet& a, const ArcSet& b) {
  ArcSet na = normalize(a), nb = normalize(b);
  if (na.size() != nb.size()) return false;
  for (std::size_t i = 0; i < na.size(); ++i)
    if (na[i].lo != nb[i].lo || na[i].hi != nb[i].hi) return false;
  return true;
}

bool contains_arc(const ArcSet& outer, const Arc& inner) {
  auto [n, d] = total_length_frac(intersect(outer, ArcSet{inner}));
  Angle want = inner.length();
  return n * want.den == want.num * d;
}

}  // namespace capture
