#include "fintop/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "field.hpp"

namespace fintop {

// ---------------------------------------------------------------------------
// SimplicialComplex

namespace {

const std::vector<Simplex> kNoSimplices;

void add_faces(const Simplex& s, std::vector<std::set<Simplex>>& out) {
  const std::size_t k = s.size();
  if (k > 24) throw Error(ErrorCode::InvariantViolation, "simplex dimension too large");
  if (out.size() < k) out.resize(k);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    Simplex face;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) face.push_back(s[i]);
    out[face.size() - 1].insert(std::move(face));
  }
}

void check_dense_vertices(const std::vector<std::vector<Simplex>>& by_dim) {
  if (by_dim.empty()) return;
  for (std::size_t v = 0; v < by_dim[0].size(); ++v)
    if (by_dim[0][v] != Simplex{static_cast<std::uint32_t>(v)})
      throw Error(ErrorCode::IndexOutOfRange, "vertex ids must be 0..V-1");
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertex_count,
                                                 std::vector<Simplex> facets) {
  std::vector<std::set<Simplex>> sets(vertex_count ? 1 : 0);
  for (std::uint32_t v = 0; v < vertex_count; ++v) sets[0].insert(Simplex{v});
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.empty()) continue;
    if (f.back() >= vertex_count)
      throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(f.back()));
    add_faces(f, sets);
  }
  SimplicialComplex k;
  for (auto& s : sets) k.by_dim_.emplace_back(s.begin(), s.end());
  return k;
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices) {
  std::vector<std::set<Simplex>> sets;
  for (auto& s : simplices) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) continue;
    if (sets.size() < s.size()) sets.resize(s.size());
    sets[s.size() - 1].insert(s);
  }
  for (std::size_t k = 1; k < sets.size(); ++k)
    for (const auto& s : sets[k])
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        if (!sets[k - 1].count(face))
          throw Error(ErrorCode::NotFaceClosed, "a face of a " + std::to_string(k) +
                                                    "-simplex is missing");
      }
  SimplicialComplex k;
  for (auto& s : sets) k.by_dim_.emplace_back(s.begin(), s.end());
  check_dense_vertices(k.by_dim_);
  return k;
}

const std::vector<Simplex>& SimplicialComplex::simplices(std::size_t k) const {
  return k < by_dim_.size() ? by_dim_[k] : kNoSimplices;
}

std::size_t SimplicialComplex::total_count() const {
  std::size_t total = 0;
  for (const auto& d : by_dim_) total += d.size();
  return total;
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
  std::vector<Simplex> out;
  out.reserve(total_count());
  for (const auto& d : by_dim_) out.insert(out.end(), d.begin(), d.end());
  return out;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty()) return std::nullopt;
  const auto& list = simplices(s.size() - 1);
  auto it = std::lower_bound(list.begin(), list.end(), s);
  if (it == list.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - list.begin());
}

// ---------------------------------------------------------------------------
// Results

std::vector<std::size_t> HomologyResult::betti_numbers() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.betti);
  return out;
}

bool HomologyResult::has_torsion() const {
  return std::any_of(degrees.begin(), degrees.end(),
                     [](const DegreeHomology& d) { return !d.torsion.empty(); });
}

const FieldMatrix& LinearMapOnHomology::degree(std::size_t k) const {
  static const FieldMatrix empty;
  return k < degrees.size() ? degrees[k] : empty;
}

// ---------------------------------------------------------------------------
// Order complex

SimplicialComplex order_complex(const FiniteSpace& space) {
  if (!is_t0(space)) throw Error(ErrorCode::NotT0, "order complex needs a T0 space");
  const std::size_t n = space.size();
  std::vector<Simplex> chains;
  Simplex chain;
  auto extend = [&](auto&& self, Point top) -> void {
    Simplex sorted = chain;
    std::sort(sorted.begin(), sorted.end());
    chains.push_back(std::move(sorted));
    const auto& above = space.up_set(top);
    for (auto q = above.find_first(); q != PointSet::npos; q = above.find_next(q)) {
      if (q == top) continue;
      chain.push_back(static_cast<std::uint32_t>(q));
      self(self, q);
      chain.pop_back();
    }
  };
  for (Point p = 0; p < n; ++p) {
    chain.assign(1, static_cast<std::uint32_t>(p));
    extend(extend, p);
  }
  return SimplicialComplex::from_simplices(std::move(chains));
}

long long euler_characteristic(const SimplicialComplex& complex) {
  long long chi = 0;
  for (int k = 0; k <= complex.dimension(); ++k)
    chi += (k % 2 ? -1 : 1) * static_cast<long long>(complex.count(static_cast<std::size_t>(k)));
  return chi;
}

// ---------------------------------------------------------------------------
// Field homology by column reduction

namespace {

template <class F>
using SparseColumn = std::vector<std::pair<std::uint32_t, typename F::Scalar>>;

// a += factor * b, both sorted by row.
template <class F>
void axpy(SparseColumn<F>& a, const typename F::Scalar& factor, const SparseColumn<F>& b,
          const F& field) {
  SparseColumn<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, field.mul(factor, b[j].second));
      ++j;
    } else {
      auto v = field.add(a[i].second, field.mul(factor, b[j].second));
      if (!field.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

template <class F>
SparseColumn<F> boundary_column(const SimplicialComplex& complex, const Simplex& s,
                                const F& field) {
  SparseColumn<F> col;
  if (s.size() < 2) return col;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex face = s;
    face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
    const auto row = complex.index_of(face);
    col.emplace_back(static_cast<std::uint32_t>(*row), field.from_int(i % 2 ? -1 : 1));
  }
  std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return col;
}

// R = D V with R reduced (distinct lowest rows among nonzero columns).
template <class F>
struct ReducedBoundary {
  std::vector<SparseColumn<F>> r;
  std::vector<SparseColumn<F>> v;
  std::map<std::uint32_t, std::size_t> column_by_low;

  std::size_t rank() const { return column_by_low.size(); }
};

template <class F>
ReducedBoundary<F> reduce_boundary(const SimplicialComplex& complex, std::size_t k, const F& field,
                                   bool track_v) {
  ReducedBoundary<F> red;
  const auto& cols = complex.simplices(k);
  red.r.reserve(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto col = k == 0 ? SparseColumn<F>{} : boundary_column(complex, cols[j], field);
    SparseColumn<F> v;
    if (track_v) v.emplace_back(static_cast<std::uint32_t>(j), field.one());
    while (!col.empty()) {
      auto it = red.column_by_low.find(col.back().first);
      if (it == red.column_by_low.end()) break;
      const auto& other = red.r[it->second];
      const auto factor = field.sub(field.zero(), field.div(col.back().second, other.back().second));
      axpy(col, factor, other, field);
      if (track_v) axpy(v, factor, red.v[it->second], field);
    }
    if (!col.empty()) red.column_by_low.emplace(col.back().first, j);
    red.r.push_back(std::move(col));
    red.v.push_back(std::move(v));
  }
  return red;
}

// Basis of H_k: essential cycles V_j (R_k column j zero, j not a low of
// R_{k+1}) completed by the boundaries R_{k+1}. The lowest rows of these
// vectors are distinct and cover every cycle's possible lowest row, so
// coordinates are read off by successive elimination.
template <class F>
struct HomologyBasis {
  struct Degree {
    std::vector<SparseColumn<F>> cycles;
    std::map<std::uint32_t, std::size_t> cycle_by_low;
    std::vector<SparseColumn<F>> boundaries;
    std::map<std::uint32_t, std::size_t> boundary_by_low;
  };
  SimplicialComplex complex;
  std::vector<Degree> degrees;

  std::vector<typename F::Scalar> coordinates(std::map<std::uint32_t, typename F::Scalar> z,
                                              std::size_t k, const F& field) const {
    const auto& d = degrees.at(k);
    std::vector<typename F::Scalar> out(d.cycles.size(), field.zero());
    auto subtract = [&](const SparseColumn<F>& basis, const typename F::Scalar& c) {
      for (const auto& [row, value] : basis) {
        auto& entry = z[row];
        entry = field.sub(entry, field.mul(c, value));
        if (field.is_zero(entry)) z.erase(row);
      }
    };
    while (!z.empty()) {
      const auto [low, value] = *z.rbegin();
      if (auto it = d.cycle_by_low.find(low); it != d.cycle_by_low.end()) {
        const auto& basis = d.cycles[it->second];
        const auto c = field.div(value, basis.back().second);
        out[it->second] = c;
        subtract(basis, c);
      } else if (auto jt = d.boundary_by_low.find(low); jt != d.boundary_by_low.end()) {
        const auto& basis = d.boundaries[jt->second];
        subtract(basis, field.div(value, basis.back().second));
      } else {
        throw Error(ErrorCode::InvariantViolation, "pushed-forward chain is not a cycle");
      }
    }
    return out;
  }
};

template <class F>
HomologyBasis<F> homology_basis(SimplicialComplex complex, const F& field) {
  HomologyBasis<F> basis;
  const std::size_t top = static_cast<std::size_t>(complex.dimension() + 1);
  std::vector<ReducedBoundary<F>> reduced;
  for (std::size_t k = 0; k <= top; ++k) reduced.push_back(reduce_boundary(complex, k, field, true));
  basis.degrees.resize(top);
  for (std::size_t k = 0; k < top; ++k) {
    auto& d = basis.degrees[k];
    const auto& here = reduced[k];
    const auto& next = reduced[k + 1];
    for (const auto& [low, col] : next.column_by_low) {
      d.boundary_by_low.emplace(low, d.boundaries.size());
      d.boundaries.push_back(next.r[col]);
    }
    for (std::size_t j = 0; j < here.r.size(); ++j) {
      if (!here.r[j].empty() || next.column_by_low.count(static_cast<std::uint32_t>(j))) continue;
      d.cycle_by_low.emplace(static_cast<std::uint32_t>(j), d.cycles.size());
      d.cycles.push_back(here.v[j]);
    }
  }
  basis.complex = std::move(complex);
  return basis;
}

HomologyResult integer_homology(const SimplicialComplex& complex) {
  const std::size_t top = static_cast<std::size_t>(complex.dimension() + 1);
  std::vector<std::size_t> ranks(top + 1, 0);
  std::vector<std::vector<Integer>> torsion(top + 1);
  for (std::size_t k = 1; k < top; ++k) {
    const auto& rows = complex.simplices(k - 1);
    const auto& cols = complex.simplices(k);
    Matrix<Integer> d(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < cols[j].size(); ++i) {
        Simplex face = cols[j];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        d(*complex.index_of(face), j) = i % 2 ? -1 : 1;
      }
    auto inv = smith_invariants(std::move(d));
    ranks[k] = inv.size();
    for (auto& e : inv)
      if (e > 1) torsion[k - 1].push_back(std::move(e));
  }
  HomologyResult result;
  result.coefficients = Coefficients::integers();
  for (std::size_t k = 0; k < top; ++k)
    result.degrees.push_back({complex.count(k) - ranks[k] - ranks[k + 1], std::move(torsion[k])});
  return result;
}

}  // namespace

HomologyResult homology(const SimplicialComplex& complex, const Coefficients& coeff) {
  if (!coeff.is_field()) return integer_homology(complex);
  return detail::with_field(coeff, [&](const auto& field) {
    const std::size_t top = static_cast<std::size_t>(complex.dimension() + 1);
    std::vector<std::size_t> ranks(top + 1, 0);
    for (std::size_t k = 1; k < top; ++k) ranks[k] = reduce_boundary(complex, k, field, false).rank();
    HomologyResult result;
    result.coefficients = coeff;
    for (std::size_t k = 0; k < top; ++k)
      result.degrees.push_back({complex.count(k) - ranks[k] - ranks[k + 1], {}});
    return result;
  });
}

LinearMapOnHomology induced_map(const PointMap& f, const Coefficients& coeff) {
  if (!f.is_continuous()) throw Error(ErrorCode::NotContinuous, "map is not order-preserving");
  if (!coeff.is_field())
    throw Error(ErrorCode::UnsupportedCoefficients, "induced maps are computed over fields");
  const auto dom = order_complex(f.dom);
  const auto cod = order_complex(f.cod);

  return detail::with_field(coeff, [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    const auto src = homology_basis(dom, field);
    const auto dst = homology_basis(cod, field);
    LinearMapOnHomology out;
    out.coefficients = coeff;
    const std::size_t degrees = std::max(src.degrees.size(), dst.degrees.size());
    for (std::size_t k = 0; k < degrees; ++k) {
      const std::size_t cols = k < src.degrees.size() ? src.degrees[k].cycles.size() : 0;
      const std::size_t rows = k < dst.degrees.size() ? dst.degrees[k].cycles.size() : 0;
      FieldMatrix m(rows, cols);
      for (std::size_t c = 0; c < cols; ++c) {
        std::map<std::uint32_t, typename F::Scalar> image;
        for (const auto& [idx, value] : src.degrees[k].cycles[c]) {
          const auto& s = dom.simplices(k)[idx];
          Simplex t;
          for (auto v : s) t.push_back(static_cast<std::uint32_t>(f.images[v]));
          // Parity of the sorting permutation; repeated vertices mean a degenerate image.
          std::size_t inversions = 0;
          for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j) inversions += t[i] > t[j];
          std::sort(t.begin(), t.end());
          if (std::adjacent_find(t.begin(), t.end()) != t.end()) continue;
          const auto target = cod.index_of(t);
          if (!target) throw Error(ErrorCode::InvariantViolation, "image of a chain is not a chain");
          const auto term = inversions % 2 ? field.sub(field.zero(), value) : value;
          auto& entry = image[static_cast<std::uint32_t>(*target)];
          entry = field.add(entry, term);
          if (field.is_zero(entry)) image.erase(static_cast<std::uint32_t>(*target));
        }
        if (rows == 0) continue;
        const auto coords = dst.coordinates(std::move(image), k, field);
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = field.to_rational(coords[r]);
      }
      out.degrees.push_back(std::move(m));
    }
    return out;
  });
}

}  // namespace fintop
