// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//   fintop_acceptance [work-dir]

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "cli.hpp"
#include "fintop/doubled.hpp"
#include "fintop/io.hpp"
#include "fintop/nerve.hpp"
#include "fintop/reflection.hpp"
#include "support/corpus.hpp"

using namespace fintop;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail << "first failure: " << what << "; ";
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Components by flood fill over the comparability graph.
std::size_t components_by_flood(const FiniteSpace& x) {
  std::vector<int> seen(x.size(), 0);
  std::size_t count = 0;
  for (Point s = 0; s < x.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<Point> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const Point p = stack.back();
      stack.pop_back();
      for (Point q = 0; q < x.size(); ++q)
        if (!seen[q] && (x.leq(p, q) || x.leq(q, p))) {
          seen[q] = 1;
          stack.push_back(q);
        }
    }
  }
  return count;
}

std::string describe(const FiniteSpace& x) {
  std::string out = "n=" + std::to_string(x.size());
  for (Point a = 0; a < x.size(); ++a)
    for (Point b = 0; b < x.size(); ++b)
      if (a != b && x.leq(a, b)) out += " " + std::to_string(a) + "<=" + std::to_string(b);
  return out;
}

const std::vector<FiniteSpace>& corpus() {
  static const auto spaces = testing::reflection_corpus(240, 20261019);
  return spaces;
}

Outcome r_tower() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t oracle_checked = 0;
  for (const auto& x : corpus()) {
    const auto opens = testing::open_sets(x);
    const auto r = r1(x);
    for (Point a = 0; a < x.size(); ++a) {
      o.require(r.related(a, a), "r1 not reflexive on " + describe(x));
      for (Point b = 0; b < x.size(); ++b) {
        o.require(r.related(a, b) == r.related(b, a), "r1 not symmetric on " + describe(x));
        o.require(r.related(a, b) == testing::r1_by_definition(opens, a, b),
                  "r1 differs from the neighbourhood definition on " + describe(x));
      }
    }
    const auto p2 = r2(x);
    o.require(p2 == connected_components(x) && p2.block_count() == components_by_flood(x),
              "r2 is not the component partition on " + describe(x));
    if (x.size() <= 5) {
      o.require(r3(x, R3Mode::fast) == r3(x, R3Mode::oracle), "r3 fast != oracle on " + describe(x));
      ++oracle_checked;
    }
  }
  const double t = seconds_since(start);
  o.require(t < 60.0, "runtime over 60 s");
  o.detail << corpus().size() << " spaces, " << oracle_checked << " oracle comparisons, " << t << " s";
  return o;
}

Outcome reflection_contract() {
  Outcome o;
  std::uint64_t maps = 0;
  for (const auto& x : corpus()) {
    const auto refl = hausdorff_reflection(x);
    o.require(refl.space.is_discrete(), "reflection not discrete on " + describe(x));
    o.require(refl.projection.is_surjective(), "projection not surjective on " + describe(x));
    const auto rep = verify_universal_property(x, 3);
    o.require(rep.passed(), "universal property failed on " + describe(x));
    o.require(rep.verified_maps == std::accumulate(rep.continuous_maps.begin(), rep.continuous_maps.end(),
                                                   std::uint64_t{0}),
              "not every continuous map was factored on " + describe(x));
    maps += rep.verified_maps;
  }
  o.detail << corpus().size() << " spaces, " << maps << " maps factored uniquely";
  return o;
}

Outcome finite_lemma() {
  Outcome o;
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = testing::random_space(rng, 1, 5);
    const auto y = testing::random_space(rng, 1, 5);
    const auto c = compare_reflection_of_product(x, y);
    o.require(reflection_commutes_with_product(x, y), "commutation failed for " + describe(x) + " x " + describe(y));
    o.require(c.witness.has_value(), "no witness for " + describe(x) + " x " + describe(y));
    if (c.witness)
      o.require(testing::is_order_isomorphism(c.reflection_of_product, c.product_of_reflections, *c.witness),
                "witness is not a homeomorphism for " + describe(x) + " x " + describe(y));
  }
  o.detail << "100 random pairs, witnesses checked";
  return o;
}

Outcome quotient_oracle() {
  Outcome o;
  std::mt19937_64 rng(91);
  std::size_t checked = 0, mismatches = 0;
  for (const auto& x : corpus()) {
    if (x.size() > 5) continue;
    for (int k = 0; k < 50; ++k) {
      const auto part = testing::random_partition(rng, x.size());
      try {
        const auto q = quotient(x, part);
        const auto rows = testing::quotient_order_by_openness(x, part);
        for (std::size_t c = 0; c < part.block_count(); ++c)
          for (std::size_t b = 0; b < part.block_count(); ++b)
            o.require(q.space.leq(b, c) == rows[c].contains(b), "quotient order differs on " + describe(x));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::QuotientMismatch) throw;
        ++mismatches;
        o.require(false, "QuotientMismatch on " + describe(x));
      }
      ++checked;
    }
  }
  o.detail << checked << " quotients, " << mismatches << " QuotientMismatch";
  return o;
}

Outcome pseudocircle() {
  Outcome o;
  const auto x = spaces::pseudocircle();
  const auto k = order_complex(x);
  bool cycle = k.dimension() == 1 && k.count(0) == 4 && k.count(1) == 4;
  std::vector<int> degree(4, 0);
  for (const auto& e : k.simplices(1)) ++degree[e[0]], ++degree[e[1]];
  for (int d : degree) cycle = cycle && d == 2;
  const auto h = homology(k, Coefficients::integers());
  cycle = cycle && h.betti(0) == 1;
  o.require(cycle, "order complex is not a 4-cycle");
  o.require(h.betti_numbers() == std::vector<std::size_t>{1, 1} && !h.has_torsion(), "H_* != (Z, Z)");
  const auto refl = hausdorff_reflection(x);
  o.require(refl.space.size() == 1, "reflection is not a point");
  const auto hr = homology(order_complex(refl.space), Coefficients::integers());
  o.require(hr.betti(0) == 1 && hr.betti(1) == 0 && !hr.has_torsion(), "reflection homology != (Z, 0)");
  o.detail << "H=(" << h.betti(0) << "," << h.betti(1) << "), reflection " << refl.space.size()
           << " point, reflection H=(" << hr.betti(0) << "," << hr.betti(1) << ")";
  return o;
}

Outcome towers(const fs::path& work) {
  Outcome o;
  struct Case {
    const char* model;
    std::size_t betti1;
  };
  for (const Case c : {Case{"circle", 1}, Case{"interval", 0}, Case{"wedge2", 2}}) {
    const auto start = Clock::now();
    const auto dir = work / c.model;
    fs::remove_all(dir);
    std::ostringstream out, err;
    const int code = cli::run({"demo", c.model, "--base", "4", "--depth", "4", "--out", dir.string()}, out, err);
    o.require(code == 0, std::string("demo ") + c.model + " failed: " + err.str());
    if (code != 0) continue;
    const auto seq = io::read_sequence(dir / "manifest");
    const auto rep = cech_homology(seq, 1, Coefficients::rationals(), 2);
    bool stages_ok = seq.length() == 4;
    for (auto b : rep.stage_betti) stages_ok = stages_ok && b == c.betti1;
    bool ranks_ok = true;
    for (std::size_t n = 0; n < rep.image_ranks.size(); ++n)
      for (auto r : rep.image_ranks[n]) ranks_ok = ranks_ok && r == c.betti1;
    bool points = true;
    for (const auto& s : stagewise_reflection(seq).spaces) points = points && s.size() == 1;
    const double t = seconds_since(start);
    o.require(stages_ok, std::string(c.model) + ": stage Betti_1 differs");
    o.require(ranks_ok, std::string(c.model) + ": window-2 image ranks differ");
    o.require(rep.stabilized, std::string(c.model) + ": not stabilized");
    o.require(rep.limit_dim == c.betti1, std::string(c.model) + ": limit_dim differs");
    o.require(points, std::string(c.model) + ": stagewise reflection is not all points");
    o.require(t < 30.0, std::string(c.model) + ": runtime over 30 s");
    o.detail << c.model << " limit_dim=" << (rep.limit_dim ? std::to_string(*rep.limit_dim) : "none") << " ("
             << t << " s); ";
  }
  return o;
}

Outcome doubled_examples() {
  Outcome o;
  const auto pc = homology(doubled::reflection(doubled::punctured_circle()), Coefficients::integers());
  const auto line = homology(doubled::reflection(doubled::two_origin_line()), Coefficients::integers());
  o.require(pc.betti_numbers() == std::vector<std::size_t>{1, 1}, "punctured circle reflection homology");
  o.require(line.betti_numbers() == std::vector<std::size_t>{1, 0}, "two-origin line reflection homology");
  o.detail << "punctured circle (" << pc.betti(0) << "," << pc.betti(1) << "), two-origin line (" << line.betti(0)
           << "," << line.betti(1) << ")";
  return o;
}

Outcome functoriality() {
  Outcome o;
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = testing::random_t0_space(rng, 1, 5);
    const auto y = testing::random_t0_space(rng, 1, 5);
    const auto z = testing::random_t0_space(rng, 1, 5);
    const auto f = testing::random_monotone_map(rng, x, y);
    const auto g = testing::random_monotone_map(rng, y, z);
    for (const auto& c : {Coefficients::rationals(), Coefficients::mod(2), Coefficients::mod(3)}) {
      const auto id = induced_map(ContinuousMap::identity(x), c);
      for (const auto& m : id.degrees) o.require(m == FieldMatrix::identity(m.rows()), "identity law");
      const auto fx = induced_map(f, c), gx = induced_map(g, c), gf = induced_map(compose(g, f), c);
      for (std::size_t k = 0; k < gf.degrees.size(); ++k) {
        const auto& a = gx.degree(k);
        const auto& b = fx.degree(k);
        if (a.cols() != b.rows()) {
          o.require(gf.degree(k).rows() * gf.degree(k).cols() == 0, "composition law shape");
          continue;
        }
        o.require(multiply(a, b, c) == gf.degree(k), "composition law in degree " + std::to_string(k));
      }
    }
  }

  std::vector<SimplicialComplex> complexes;
  for (const auto& x : corpus()) complexes.push_back(order_complex(kolmogorov_quotient(x).space));
  for (auto model : {CoverModel::circle, CoverModel::interval, CoverModel::wedge2})
    for (std::size_t n = min_resolution(model); n <= 32; n *= 2) {
      complexes.push_back(nerve({model, n}));
      if (n <= 8) complexes.push_back(order_complex(face_poset(complexes.back())));
    }
  complexes.push_back(doubled::doubled_complex(doubled::punctured_circle()));
  complexes.push_back(doubled::doubled_complex(doubled::two_origin_line()));
  for (const auto& k : complexes) {
    const auto hz = homology(k, Coefficients::integers());
    const auto hq = homology(k, Coefficients::rationals());
    o.require(hz.betti_numbers() == hq.betti_numbers(), "integer and rational Betti numbers differ");
    long long alt = 0;
    for (std::size_t d = 0; d < hq.degrees.size(); ++d)
      alt += (d % 2 ? -1 : 1) * static_cast<long long>(hq.betti(d));
    o.require(alt == euler_characteristic(k), "Euler characteristic identity");
  }
  o.detail << "50 map pairs x 3 fields, " << complexes.size() << " complexes";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path work = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "fintop_acceptance";
  fs::create_directories(work);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"R-tower correctness", r_tower},
      {"Reflection contract", reflection_contract},
      {"Finite lemma analog", finite_lemma},
      {"Quotient oracle", quotient_oracle},
      {"Pseudocircle invariants", pseudocircle},
      {"Circle/interval/wedge2 towers", [&] { return towers(work); }},
      {"Punctured circle and two-origin line", doubled_examples},
      {"Functoriality and numerics", functoriality},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name << "  [" << o.detail.str() << "]\n";
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << criteria.size() - failures << "/" << criteria.size()
            << '\n';
  return failures ? 1 : 0;
}
