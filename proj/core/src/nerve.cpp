#include "fintop/nerve.hpp"

#include <algorithm>

#include <boost/rational.hpp>

namespace fintop {

namespace {

using Fraction = boost::rational<long long>;

struct Interval {
  Fraction lo, hi;
  bool lo_closed = false;
  bool hi_closed = false;

  bool empty() const { return hi < lo || (lo == hi && !(lo_closed && hi_closed)); }
};

Interval intersect(const Interval& a, const Interval& b) {
  Interval out;
  if (a.lo == b.lo) {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed && b.lo_closed;
  } else {
    const auto& larger = a.lo > b.lo ? a : b;
    out.lo = larger.lo;
    out.lo_closed = larger.lo_closed;
  }
  if (a.hi == b.hi) {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed && b.hi_closed;
  } else {
    const auto& smaller = a.hi < b.hi ? a : b;
    out.hi = smaller.hi;
    out.hi_closed = smaller.hi_closed;
  }
  return out;
}

bool contains(const Interval& outer, const Interval& inner) {
  const bool lo_ok = outer.lo < inner.lo || (outer.lo == inner.lo && (outer.lo_closed || !inner.lo_closed));
  const bool hi_ok = inner.hi < outer.hi || (outer.hi == inner.hi && (outer.hi_closed || !inner.hi_closed));
  return lo_ok && hi_ok;
}

struct Piece {
  unsigned branch = 0;
  Interval interval;
};

using Element = std::vector<Piece>;

struct Cover {
  std::vector<Element> elements;
  /// Position 0 of every branch is one point (the wedge point).
  bool glued_at_zero = false;
};

// Open arc of width 2/n centred at j/n on the circle [0, 1), split at 0.
Element circle_arc(unsigned branch, long long j, long long n) {
  const Fraction lo(j - 1, n), hi(j + 1, n);
  Element e;
  if (lo < Fraction(0)) {
    e.push_back({branch, {Fraction(0), hi, true, false}});
    e.push_back({branch, {lo + 1, Fraction(1), false, false}});
  } else if (hi > Fraction(1)) {
    e.push_back({branch, {lo, Fraction(1), false, false}});
    e.push_back({branch, {Fraction(0), hi - 1, true, false}});
  } else {
    e.push_back({branch, {lo, hi, false, false}});
  }
  return e;
}

Cover make_cover(const CoverSpec& spec) {
  if (spec.resolution < min_resolution(spec.model))
    throw Error(ErrorCode::ResolutionTooSmall,
                std::string(to_string(spec.model)) + " needs resolution >= " +
                    std::to_string(min_resolution(spec.model)) + ", got " +
                    std::to_string(spec.resolution));
  const auto n = static_cast<long long>(spec.resolution);
  Cover cover;
  switch (spec.model) {
    case CoverModel::circle:
      for (long long j = 0; j < n; ++j) cover.elements.push_back(circle_arc(0, j, n));
      break;
    case CoverModel::interval:
      for (long long j = 0; j < n; ++j) {
        Interval iv{Fraction(j - 1, n - 1), Fraction(j + 1, n - 1), false, false};
        if (j == 0) iv = {Fraction(0), iv.hi, true, false};
        if (j == n - 1) iv = {iv.lo, Fraction(1), iv.lo_closed, true};
        cover.elements.push_back({{0, iv}});
      }
      break;
    case CoverModel::wedge2: {
      cover.glued_at_zero = true;
      Element star = circle_arc(0, 0, n);
      for (auto& p : circle_arc(1, 0, n)) star.push_back(p);
      cover.elements.push_back(std::move(star));
      for (unsigned branch = 0; branch < 2; ++branch)
        for (long long j = 1; j < n; ++j) cover.elements.push_back(circle_arc(branch, j, n));
      break;
    }
  }
  return cover;
}

bool contains_zero(const Element& e) {
  return std::any_of(e.begin(), e.end(), [](const Piece& p) {
    return p.interval.lo == Fraction(0) && p.interval.lo_closed;
  });
}

Element intersect(const Element& a, const Element& b) {
  Element out;
  for (const auto& p : a)
    for (const auto& q : b) {
      if (p.branch != q.branch) continue;
      auto iv = intersect(p.interval, q.interval);
      if (!iv.empty()) out.push_back({p.branch, iv});
    }
  return out;
}

bool contains(const Element& outer, const Element& inner) {
  return std::all_of(inner.begin(), inner.end(), [&](const Piece& p) {
    return std::any_of(outer.begin(), outer.end(), [&](const Piece& q) {
      return q.branch == p.branch && contains(q.interval, p.interval);
    });
  });
}

}  // namespace

std::string_view to_string(CoverModel model) noexcept {
  switch (model) {
    case CoverModel::circle: return "circle";
    case CoverModel::interval: return "interval";
    case CoverModel::wedge2: return "wedge2";
  }
  return "?";
}

std::optional<CoverModel> parse_cover_model(std::string_view name) noexcept {
  if (name == "circle") return CoverModel::circle;
  if (name == "interval") return CoverModel::interval;
  if (name == "wedge2") return CoverModel::wedge2;
  return std::nullopt;
}

std::size_t min_resolution(CoverModel model) noexcept {
  return model == CoverModel::interval ? 2 : 3;
}

std::size_t cover_size(const CoverSpec& spec) { return make_cover(spec).elements.size(); }

SimplicialComplex nerve(const CoverSpec& spec) {
  const Cover cover = make_cover(spec);
  const std::size_t count = cover.elements.size();
  std::vector<Simplex> simplices;
  Simplex current;

  // Extends a family with larger indices; supersets of an empty intersection
  // are skipped.
  auto extend = [&](auto&& self, const Element& common, bool all_hold_zero) -> void {
    simplices.push_back(current);
    for (std::size_t next = current.back() + 1; next < count; ++next) {
      const auto& e = cover.elements[next];
      Element meet = intersect(common, e);
      const bool zero = cover.glued_at_zero && all_hold_zero && contains_zero(e);
      if (meet.empty() && !zero) continue;
      current.push_back(static_cast<std::uint32_t>(next));
      self(self, meet, zero);
      current.pop_back();
    }
  };
  for (std::size_t v = 0; v < count; ++v) {
    current.assign(1, static_cast<std::uint32_t>(v));
    extend(extend, cover.elements[v], contains_zero(cover.elements[v]));
  }
  return SimplicialComplex::from_simplices(std::move(simplices));
}

FiniteSpace face_poset(const SimplicialComplex& complex) {
  const auto simplices = complex.all_simplices();
  const std::size_t n = simplices.size();
  std::vector<PointSet> down(n, PointSet(n));
  std::vector<std::string> labels(n);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t s = 0; s < n; ++s)
      if (std::includes(simplices[t].begin(), simplices[t].end(), simplices[s].begin(),
                        simplices[s].end()))
        down[t].set(s);
    std::string label;
    for (auto v : simplices[t]) label += (label.empty() ? "" : ".") + std::to_string(v);
    labels[t] = std::move(label);
  }
  return FiniteSpace::from_down_sets(std::move(down), std::move(labels));
}

std::vector<std::uint32_t> refinement_map(const CoverSpec& fine, const CoverSpec& coarse) {
  const Cover f = make_cover(fine);
  const Cover c = make_cover(coarse);
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < f.elements.size(); ++i) {
    std::size_t j = 0;
    while (j < c.elements.size() && !contains(c.elements[j], f.elements[i])) ++j;
    if (j == c.elements.size())
      throw Error(ErrorCode::BondNotWellDefined,
                  "cover element " + std::to_string(i) + " lies in no coarser element");
    out.push_back(static_cast<std::uint32_t>(j));
  }
  return out;
}

InverseSequence build_tower(CoverModel model, std::size_t base_resolution, std::size_t depth) {
  InverseSequence seq;
  std::vector<SimplicialComplex> nerves;
  for (std::size_t i = 0; i < depth; ++i) {
    nerves.push_back(nerve({model, base_resolution << i}));
    seq.spaces.push_back(face_poset(nerves.back()));
  }
  for (std::size_t i = 0; i + 1 < depth; ++i) {
    const auto vertex_map =
        refinement_map({model, base_resolution << (i + 1)}, {model, base_resolution << i});
    const auto& fine = nerves[i + 1];
    const auto& coarse = nerves[i];
    std::vector<std::size_t> offset{0};
    for (int k = 0; k <= coarse.dimension(); ++k)
      offset.push_back(offset.back() + coarse.count(static_cast<std::size_t>(k)));

    std::vector<Point> images;
    for (const auto& s : fine.all_simplices()) {
      Simplex image;
      for (auto v : s) image.push_back(vertex_map[v]);
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      const auto idx = coarse.index_of(image);
      if (!idx)
        throw Error(ErrorCode::BondNotWellDefined, "image of a nerve simplex is not a simplex");
      images.push_back(offset[image.size() - 1] + *idx);
    }
    ContinuousMap bond(seq.spaces[i + 1], seq.spaces[i], std::move(images));
    seq.bonds.push_back(bond);
  }
  return seq;
}

}  // namespace fintop
