#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "seeds.hpp"
#include "tree.hpp"

namespace geomgroup {

/// m / 2^e in lowest terms (m odd or e = 0).
class Dyadic {
 public:
  constexpr Dyadic() = default;
  Dyadic(std::int64_t m, int e = 0) : m_(m), e_(e) { normalize(); }

  std::int64_t numerator() const { return m_; }
  int exponent() const { return e_; }

  friend Dyadic operator+(const Dyadic& x, const Dyadic& y) {
    int e = std::max(x.e_, y.e_);
    return Dyadic(x.scaled(e) + y.scaled(e), e);
  }
  friend Dyadic operator-(const Dyadic& x, const Dyadic& y) {
    int e = std::max(x.e_, y.e_);
    return Dyadic(x.scaled(e) - y.scaled(e), e);
  }
  /// x · 2^k
  Dyadic times_pow2(int k) const { return k >= 0 ? Dyadic(m_ << k, e_) : Dyadic(m_, e_ - k); }
  Dyadic half() const { return times_pow2(-1); }

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& x, const Dyadic& y) {
    int e = std::max(x.e_, y.e_);
    return x.scaled(e) <=> y.scaled(e);
  }

  /// k with x / y = 2^k, if that ratio is a power of two (x, y > 0).
  friend std::optional<int> log2_ratio(const Dyadic& x, const Dyadic& y) {
    auto [ox, vx] = x.split();
    auto [oy, vy] = y.split();
    if (ox != oy) return std::nullopt;
    return vx - vy;
  }

  std::string str() const {
    if (e_ == 0) return std::to_string(m_);
    return std::to_string(m_) + "/" + std::to_string(std::int64_t{1} << e_);
  }

 private:
  void normalize() {
    if (m_ == 0) e_ = 0;
    while (e_ > 0 && m_ % 2 == 0) m_ /= 2, --e_;
    while (e_ < 0) m_ *= 2, ++e_;
    if (e_ > 62) throw Error("dyadic exponent overflow");
  }
  std::int64_t scaled(int e) const { return m_ << (e - e_); }
  // odd part and 2-adic valuation
  std::pair<std::int64_t, int> split() const {
    std::int64_t m = m_;
    int v = -e_;
    while (m != 0 && m % 2 == 0) m /= 2, ++v;
    return {m, v};
  }

  std::int64_t m_ = 0;
  int e_ = 0;
};

struct Interval {
  Dyadic lo, hi;
  Dyadic length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

inline std::string print_interval(const Interval& i) { return "[" + i.lo.str() + "," + i.hi.str() + ")"; }

namespace detail {

template <class L>
void leaf_intervals(const BasicTree<L>& t, Interval at, std::vector<Interval>& out) {
  if (t.is_leaf()) {
    out.push_back(at);
    return;
  }
  Dyadic mid = at.lo + at.length().half();
  leaf_intervals(t.left(), {at.lo, mid}, out);
  leaf_intervals(t.right(), {mid, at.hi}, out);
}

}  // namespace detail

/// Leaf intervals, left to right, by recursive halving of [0,1].
template <class L>
std::vector<Interval> leaf_intervals(const BasicTree<L>& t) {
  std::vector<Interval> out;
  detail::leaf_intervals(t, {Dyadic(0), Dyadic(1)}, out);
  return out;
}

/// 0 = r0 < r1 < ... < rn = 1.
template <class L>
std::vector<Dyadic> partition(const BasicTree<L>& t) {
  std::vector<Dyadic> out{Dyadic(0)};
  for (const auto& i : leaf_intervals(t)) out.push_back(i.hi);
  return out;
}

/// Image of x under the affine map [from) -> [to).
inline Dyadic affine(const Interval& from, const Interval& to, const Dyadic& x) {
  auto k = log2_ratio(to.length(), from.length());
  if (!k) throw Error("affine piece with a slope that is not a power of two");
  return to.lo + (x - from.lo).times_pow2(*k);
}

// ---- F: piecewise linear homeomorphisms ----

class PLMap {
 public:
  using Point = std::pair<Dyadic, Dyadic>;

  PLMap() : points_{{Dyadic(0), Dyadic(0)}, {Dyadic(1), Dyadic(1)}} {}

  /// Breakpoints from (0,0) to (1,1); redundant collinear points are dropped.
  explicit PLMap(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.size() < 2 || points_.front() != Point{0, 0} || points_.back() != Point{1, 1})
      throw Error("PL map must run from (0,0) to (1,1)");
    for (std::size_t i = 1; i < points_.size(); ++i)
      if (!(points_[i - 1].first < points_[i].first) || !(points_[i - 1].second < points_[i].second))
        throw Error("PL map breakpoints must increase");
    simplify();
  }

  const std::vector<Point>& breakpoints() const { return points_; }

  Dyadic operator()(const Dyadic& x) const {
    for (std::size_t i = 1; i < points_.size(); ++i)
      if (x <= points_[i].first)
        return affine({points_[i - 1].first, points_[i].first}, {points_[i - 1].second, points_[i].second}, x);
    throw Error("PL map evaluated outside [0,1]");
  }

  PLMap inverse() const {
    std::vector<Point> p;
    for (const auto& [x, y] : points_) p.emplace_back(y, x);
    return PLMap(std::move(p));
  }

  /// Slopes of the pieces, as exponents of 2.
  std::vector<int> slope_exponents() const {
    std::vector<int> out;
    for (std::size_t i = 1; i < points_.size(); ++i) {
      auto k = log2_ratio(points_[i].second - points_[i - 1].second, points_[i].first - points_[i - 1].first);
      if (!k) throw Error("slope is not a power of two");
      out.push_back(*k);
    }
    return out;
  }

  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  void simplify() {
    std::vector<Point> out{points_.front()};
    for (std::size_t i = 1; i + 1 < points_.size(); ++i) {
      const Point &a = out.back(), &b = points_[i], &c = points_[i + 1];
      auto k1 = log2_ratio(b.second - a.second, b.first - a.first);
      auto k2 = log2_ratio(c.second - b.second, c.first - b.first);
      bool same = k1 && k2 && *k1 == *k2;
      if (!same) out.push_back(b);
    }
    out.push_back(points_.back());
    points_ = std::move(out);
  }

  std::vector<Point> points_;
};

/// f then g.
inline PLMap compose(const PLMap& f, const PLMap& g) {
  std::vector<Dyadic> xs;
  for (const auto& p : f.breakpoints()) xs.push_back(p.first);
  PLMap fi = f.inverse();
  for (const auto& p : g.breakpoints()) xs.push_back(fi(p.first));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<PLMap::Point> pts;
  for (const auto& x : xs) pts.emplace_back(x, g(f(x)));
  return PLMap(std::move(pts));
}

inline std::string print_pl(const PLMap& f) {
  std::string out;
  for (const auto& [x, y] : f.breakpoints()) {
    if (!out.empty()) out += ' ';
    out += "(" + x.str() + "," + y.str() + ")";
  }
  return out;
}

/// The map sending the source partition to the target partition, for seeds
/// whose two trees list the labels in the same order.
inline PLMap pl_of_seed(const Seed& s) {
  if (labels(s.source) != labels(s.target)) throw NotAnFSeed();
  auto xs = partition(s.source), ys = partition(s.target);
  std::vector<PLMap::Point> pts;
  for (std::size_t i = 0; i < xs.size(); ++i) pts.emplace_back(xs[i], ys[i]);
  return PLMap(std::move(pts));
}

// ---- V: bijections between dyadic partitions of [0,1) ----

class IntervalBijection {
 public:
  struct Piece {
    Interval source, target;
    friend bool operator==(const Piece&, const Piece&) = default;
  };

  IntervalBijection() : pieces_{{{Dyadic(0), Dyadic(1)}, {Dyadic(0), Dyadic(1)}}} {}

  /// Pieces are sorted by source and merged when adjacent on both sides with equal slope.
  explicit IntervalBijection(std::vector<Piece> pieces) : pieces_(std::move(pieces)) { normalize(); }

  const std::vector<Piece>& pieces() const { return pieces_; }

  Dyadic operator()(const Dyadic& x) const {
    for (const auto& p : pieces_)
      if (p.source.lo <= x && x < p.source.hi) return affine(p.source, p.target, x);
    throw Error("interval map evaluated outside [0,1)");
  }

  IntervalBijection inverse() const {
    std::vector<Piece> out;
    for (const auto& p : pieces_) out.push_back({p.target, p.source});
    return IntervalBijection(std::move(out));
  }

  friend bool operator==(const IntervalBijection&, const IntervalBijection&) = default;

 private:
  static std::optional<int> slope(const Piece& p) { return log2_ratio(p.target.length(), p.source.length()); }

  void normalize() {
    std::sort(pieces_.begin(), pieces_.end(), [](const Piece& a, const Piece& b) { return a.source.lo < b.source.lo; });
    std::vector<Piece> out;
    for (const auto& p : pieces_) {
      if (!out.empty() && out.back().source.hi == p.source.lo && out.back().target.hi == p.target.lo) {
        // adjacent on both sides: merge when the slope agrees
        Piece merged{{out.back().source.lo, p.source.hi}, {out.back().target.lo, p.target.hi}};
        if (slope(out.back()) == slope(p)) {
          out.back() = merged;
          continue;
        }
      }
      out.push_back(p);
    }
    pieces_ = std::move(out);
  }

  std::vector<Piece> pieces_;
};

/// f then g.
inline IntervalBijection compose(const IntervalBijection& f, const IntervalBijection& g) {
  std::vector<IntervalBijection::Piece> out;
  for (const auto& p : f.pieces())
    for (const auto& q : g.pieces()) {
      Dyadic lo = std::max(p.target.lo, q.source.lo), hi = std::min(p.target.hi, q.source.hi);
      if (!(lo < hi)) continue;
      Interval src{affine(p.target, p.source, lo), affine(p.target, p.source, hi)};
      Interval tgt{affine(q.source, q.target, lo), affine(q.source, q.target, hi)};
      out.push_back({src, tgt});
    }
  return IntervalBijection(std::move(out));
}

inline std::string print_vmap(const IntervalBijection& f) {
  std::string out;
  for (const auto& p : f.pieces()) {
    if (!out.empty()) out += ' ';
    out += print_interval(p.source) + "->" + print_interval(p.target);
  }
  return out;
}

/// Interval of the source leaf labelled l goes to the interval of the target
/// leaf labelled l.
inline IntervalBijection vmap_of_seed(const Seed& s) {
  auto src = leaf_intervals(s.source), tgt = leaf_intervals(s.target);
  auto sl = labels(s.source), tl = labels(s.target);
  std::map<int, Interval> where;
  for (std::size_t i = 0; i < tl.size(); ++i) where.emplace(tl[i], tgt[i]);
  std::vector<IntervalBijection::Piece> pieces;
  for (std::size_t i = 0; i < sl.size(); ++i) {
    auto it = where.find(sl[i]);
    if (it == where.end()) throw UnboundLabel(sl[i]);
    pieces.push_back({src[i], it->second});
  }
  return IntervalBijection(std::move(pieces));
}

inline PLMap pl_of_word(const Word& w) { return pl_of_seed(word_seed(w)); }
inline IntervalBijection vmap_of_word(const Word& w) { return vmap_of_seed(word_seed(w)); }

/// π(w1 w2) = π(w1) then π(w2), for both realizations that apply.
struct HomomorphismVerdict {
  bool holds = true;
  std::size_t tested = 0;
  Word w1, w2;  // first failing pair
};

template <class Realize>
HomomorphismVerdict homomorphism_check(const std::vector<std::pair<Word, Word>>& pairs, Realize realize) {
  HomomorphismVerdict v;
  for (const auto& [w1, w2] : pairs) {
    ++v.tested;
    if (realize(w1 + w2) != compose(realize(w1), realize(w2))) {
      v.holds = false;
      v.w1 = w1;
      v.w2 = w2;
      return v;
    }
  }
  return v;
}

}  // namespace geomgroup
