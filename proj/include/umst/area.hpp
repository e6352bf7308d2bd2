#pragma once

// Uncertainty areas: weight intervals with per-endpoint openness.
// An area is trivial when lo == hi (then both endpoints are closed).

#include "umst/errors.hpp"
#include "umst/rational.hpp"

namespace umst {

struct Area {
  Weight lo;
  Weight hi;
  bool lo_open = false;
  bool hi_open = false;

  static Area make(Weight lo, Weight hi, bool lo_open, bool hi_open) {
    if (lo > hi)
      throw Error(ErrorCode::MalformedArea,
                  "lo " + format_weight(lo) + " > hi " + format_weight(hi));
    if (lo == hi && (lo_open || hi_open))
      throw Error(ErrorCode::EmptyArea,
                  "degenerate area with an open endpoint at " + format_weight(lo));
    return Area{std::move(lo), std::move(hi), lo_open, hi_open};
  }

  static Area trivial(Weight w) { return Area{w, w, false, false}; }
  static Area open(Weight lo, Weight hi) { return make(std::move(lo), std::move(hi), true, true); }

  bool is_trivial() const { return lo == hi; }
  bool is_open() const { return lo_open && hi_open && lo < hi; }

  const Weight& inf() const { return lo; }  // limit, not necessarily attained
  const Weight& sup() const { return hi; }

  bool contains(const Weight& w) const {
    if (lo_open ? !(w > lo) : !(w >= lo)) return false;
    if (hi_open ? !(w < hi) : !(w <= hi)) return false;
    return true;
  }

  // Tolerant membership for projected instances: accepts values within
  // ord.tau outside the limits (openness is below the noise scale there).
  bool contains(const Weight& w, const WeightOrder& ord) const {
    if (ord.tau == 0) return contains(w);
    return ord.ge(w, lo) && ord.le(w, hi);
  }

  Area narrowed(const Weight& w) const {
    if (!contains(w))
      throw Error(ErrorCode::InconsistentReveal,
                  format_weight(w) + " is not in the area [" + format_weight(lo) + ", " +
                      format_weight(hi) + "]");
    return trivial(w);
  }

  // b subset-of a, used for narrowing monotonicity checks.
  bool covers(const Area& b) const {
    bool lo_ok = (lo < b.lo) || (lo == b.lo && (!lo_open || b.lo_open));
    bool hi_ok = (hi > b.hi) || (hi == b.hi && (!hi_open || b.hi_open));
    return lo_ok && hi_ok;
  }

  bool operator==(const Area& o) const {
    if (is_trivial() && o.is_trivial()) return lo == o.lo;
    return lo == o.lo && hi == o.hi && lo_open == o.lo_open && hi_open == o.hi_open;
  }

  std::string str() const {
    if (is_trivial()) return "{" + format_weight(lo) + "}";
    return std::string(lo_open ? "(" : "[") + format_weight(lo) + "," + format_weight(hi) +
           (hi_open ? ")" : "]");
  }
};

}  // namespace umst
