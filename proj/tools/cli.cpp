#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "fintop/doubled.hpp"
#include "fintop/io.hpp"
#include "fintop/nerve.hpp"
#include "fintop/reflection.hpp"
#include "report.hpp"

namespace fintop::cli {

namespace {

namespace fs = std::filesystem;

FiniteSpace load_space(const std::string& path, Report& report) {
  const auto text = io::read_file(path);
  report.add_input(path, text);
  return io::parse_space(text, path);
}

void save(const fs::path& path, const std::string& text, Report& report) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  io::write_file(path, text);
  report.add_output(path.string(), text);
}

Json label_blocks(const std::vector<std::vector<Point>>& blocks, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const auto& b : blocks) {
    Json block = Json::array();
    for (auto p : b) block.push_back(labels.at(p));
    out.push_back(std::move(block));
  }
  return out;
}

Json related_pairs(const RelationMatrix& r, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (Point a = 0; a < r.size(); ++a)
    for (Point b = a + 1; b < r.size(); ++b)
      if (r.related(a, b)) out.push_back(Json::array({labels[a], labels[b]}));
  return out;
}

Json homology_json(const SimplicialComplex& k, const HomologyResult& h) {
  Json out;
  Json counts = Json::array();
  for (int d = 0; d <= k.dimension(); ++d) counts.push_back(k.count(static_cast<std::size_t>(d)));
  out["simplex_counts"] = std::move(counts);
  out["betti"] = h.betti_numbers();
  if (!h.coefficients.is_field()) {
    Json torsion = Json::array();
    for (const auto& d : h.degrees) {
      Json t = Json::array();
      for (const auto& c : d.torsion) t.push_back(c.str());
      torsion.push_back(std::move(t));
    }
    out["torsion"] = std::move(torsion);
    out["has_torsion"] = h.has_torsion();
  }
  out["euler_characteristic"] = euler_characteristic(k);
  return out;
}

struct Options {
  bool json = false;
  std::string space, other, file, manifest, out;
  bool oracle = false;
  std::string coeff = "z";
  std::string cech_coeff = "q";
  std::string emit_complex;
  std::size_t max_target = 3;
  std::size_t degree = 1;
  std::size_t window = kDefaultWindow;
  std::string model, name;
  std::size_t base = 4, depth = 4;
};

int cmd_reflect(const Options& o, Report& r) {
  const auto x = load_space(o.space, r);
  const auto mode = o.oracle ? R3Mode::oracle : R3Mode::fast;
  const auto classes = r3(x, mode);
  const auto refl = hausdorff_reflection(x);
  if (!(classes == refl.classes))
    throw Error(ErrorCode::InvariantViolation, "R3 oracle disagrees with the connected components");
  auto& res = r.results();
  res["points"] = x.size();
  res["t0"] = is_t0(x);
  res["r3_mode"] = o.oracle ? "oracle" : "fast";
  res["r1_pairs"] = related_pairs(r1(x), x.labels());
  res["classes"] = label_blocks(classes.blocks(), x.labels());
  res["reflection_size"] = refl.space.size();
  res["reflection_discrete"] = refl.space.is_discrete();
  Json projection = Json::object();
  for (Point p = 0; p < x.size(); ++p) projection[x.label(p)] = refl.projection(p);
  res["projection"] = std::move(projection);
  return kExitOk;
}

int cmd_t0(const Options& o, Report& r) {
  const auto x = load_space(o.space, r);
  const auto q = kolmogorov_quotient(x);
  auto& res = r.results();
  res["points"] = x.size();
  res["t0"] = is_t0(x);
  res["classes"] = label_blocks(q.classes.blocks(), x.labels());
  res["quotient_size"] = q.space.size();
  res["quotient_t0"] = is_t0(q.space);
  if (!o.out.empty()) save(o.out, io::format_space(q.space), r);
  return kExitOk;
}

int cmd_homology(const Options& o, Report& r) {
  const auto coeff = Coefficients::parse(o.coeff);
  const auto text = io::read_file(o.file);
  r.add_input(o.file, text);
  SimplicialComplex k;
  auto& res = r.results();
  if (io::looks_like_space(text)) {
    auto x = io::parse_space(text, o.file);
    res["source"] = "space";
    res["points"] = x.size();
    if (!is_t0(x)) {
      r.warn("space is not T0; using its Kolmogorov quotient, which has the same homology");
      x = kolmogorov_quotient(x).space;
    }
    k = order_complex(x);
  } else {
    k = io::parse_complex(text, o.file);
    res["source"] = "complex";
  }
  res["coefficients"] = coeff.name();
  const auto h = homology_json(k, homology(k, coeff));
  for (const auto& [key, value] : h.items()) res[key] = value;
  if (!o.emit_complex.empty()) save(o.emit_complex, io::format_complex(k), r);
  return kExitOk;
}

int cmd_product(const Options& o, Report& r) {
  const auto x = load_space(o.space, r);
  const auto y = load_space(o.other, r);
  const auto p = product(x, y);
  auto& res = r.results();
  res["factor_sizes"] = Json::array({x.size(), y.size()});
  res["points"] = p.size();
  res["t0"] = is_t0(p);
  res["components"] = connected_components(p).block_count();
  if (!o.out.empty()) save(o.out, io::format_space(p), r);
  return kExitOk;
}

int cmd_check_universal(const Options& o, Report& r) {
  const auto x = load_space(o.space, r);
  const auto rep = verify_universal_property(x, o.max_target);
  auto& res = r.results();
  res["points"] = rep.n;
  res["classes"] = rep.classes;
  res["max_target"] = rep.max_target;
  res["maps_enumerated"] = rep.maps_enumerated;
  res["continuous_maps"] = rep.continuous_maps;
  res["verified_maps"] = rep.verified_maps;
  res["failures"] = rep.failures;
  res["passed"] = rep.passed();
  return rep.passed() ? kExitOk : kExitPropertyFailure;
}

int cmd_check_lemma(const Options& o, Report& r) {
  const auto x = load_space(o.space, r);
  const auto y = load_space(o.other, r);
  const auto c = compare_reflection_of_product(x, y);
  auto& res = r.results();
  res["reflection_of_product"] = c.reflection_of_product.size();
  res["product_of_reflections"] = c.product_of_reflections.size();
  res["holds"] = c.holds();
  if (c.witness) {
    Json w = Json::object();
    for (Point p = 0; p < c.witness->size(); ++p)
      w[c.reflection_of_product.label(p)] = c.product_of_reflections.label((*c.witness)[p]);
    res["witness"] = std::move(w);
  }
  return c.holds() ? kExitOk : kExitPropertyFailure;
}

int cmd_cech(const Options& o, Report& r) {
  const auto coeff = Coefficients::parse(o.cech_coeff);
  r.add_input(o.manifest, io::read_file(o.manifest));
  for (const auto& f : io::sequence_files(o.manifest)) r.add_input(f.string(), io::read_file(f));
  const auto seq = io::read_sequence(o.manifest);
  const auto v = validate(seq);
  const auto rep = cech_homology(seq, o.degree, coeff, o.window);
  const auto refl = stagewise_reflection(seq);

  auto& res = r.results();
  res["stages"] = v.stages;
  res["sizes"] = v.sizes;
  res["degree"] = rep.degree;
  res["coefficients"] = coeff.name();
  res["window"] = rep.window;
  res["stage_betti"] = rep.stage_betti;
  res["image_ranks"] = rep.image_ranks;
  res["stabilized"] = rep.stabilized;
  res["mittag_leffler"] = rep.mittag_leffler;
  if (rep.limit_dim) {
    res["limit_dim"] = *rep.limit_dim;
  } else {
    res["limit_bracket"] = {{"lower", rep.limit_bracket->lower}, {"upper", rep.limit_bracket->upper}};
    r.warn("limit not determined within the tested depth; bracket reported");
  }
  Json sizes = Json::array();
  for (const auto& s : refl.spaces) sizes.push_back(s.size());
  res["reflection_sizes"] = std::move(sizes);
  return kExitOk;
}

int cmd_demo(const Options& o, Report& r) {
  const auto model = *parse_cover_model(o.model);
  const auto tower = build_tower(model, o.base, o.depth);
  const auto v = validate(tower);
  const auto written = io::write_sequence(tower, o.out);
  auto& res = r.results();
  res["model"] = to_string(model);
  Json resolutions = Json::array();
  for (std::size_t i = 0; i < o.depth; ++i) resolutions.push_back(o.base << i);
  res["resolutions"] = std::move(resolutions);
  res["stage_sizes"] = v.sizes;
  res["manifest"] = (fs::path(o.out) / "manifest").string();
  for (const auto& f : written.files) r.add_output((fs::path(o.out) / f.filename()).string(), io::read_file(f));
  r.add_output(res["manifest"].get<std::string>(), io::read_file(written.manifest));
  return kExitOk;
}

int cmd_doubled(const Options& o, Report& r) {
  const auto d = *doubled::named_example(o.name);
  const auto classes = doubled::r_classes(d);
  const auto h = doubled::reflection(d);
  auto& res = r.results();
  res["name"] = d.name;
  Json base_counts = Json::array();
  for (int k = 0; k <= d.base.dimension(); ++k) base_counts.push_back(d.base.count(static_cast<std::size_t>(k)));
  res["base_simplex_counts"] = std::move(base_counts);
  res["marked_points"] = classes.labels;
  res["r1_pairs"] = related_pairs(classes.r1, classes.labels);
  res["nontrivial_classes"] = label_blocks(classes.nontrivial_classes(), classes.labels);
  res["r2_equals_r3"] = classes.r2 == classes.r3;
  res["reflection"] = homology_json(h, homology(h, Coefficients::integers()));
  return kExitOk;
}

std::string join(const std::vector<std::string>& args) {
  std::string out = "fintop";
  for (const auto& a : args) out += " " + a;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hausdorff reflections, homology and towers of finite topological spaces", "fintop"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit the report as a single JSON document");

  std::function<int(const Options&, Report&)> handler;
  auto sub = [&](const char* name, const char* help, auto fn) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&handler, fn] { handler = fn; });
    return s;
  };
  const auto coeff_check = [](const std::string& c) {
    try {
      Coefficients::parse(c);
      return std::string();
    } catch (const Error& e) {
      return std::string(e.what());
    }
  };

  auto* reflect = sub("reflect", "Hausdorff reflection and R3 classes", cmd_reflect);
  reflect->add_option("space", o.space, "Space file")->required();
  reflect->add_flag("--oracle", o.oracle, "Compute R3 by enumerating maps to discrete spaces (n <= 6)");

  auto* t0 = sub("t0", "Kolmogorov (T0) quotient", cmd_t0);
  t0->add_option("space", o.space, "Space file")->required();
  t0->add_option("--out", o.out, "Write the quotient space here");

  auto* hom = sub("homology", "Simplicial homology of a space's order complex or of a complex", cmd_homology);
  hom->add_option("file", o.file, "Space or complex file")->required();
  hom->add_option("--coeff", o.coeff, "z, q or z<p> for a prime p")->check(coeff_check)->capture_default_str();
  hom->add_option("--emit-complex", o.emit_complex, "Write the complex used here");

  auto* prod = sub("product", "Product space", cmd_product);
  prod->add_option("first", o.space, "Space file")->required();
  prod->add_option("second", o.other, "Space file")->required();
  prod->add_option("--out", o.out, "Write the product space here");

  auto* univ = sub("check-universal", "Exhaustively verify the reflection's universal property", cmd_check_universal);
  univ->add_option("space", o.space, "Space file")->required();
  univ->add_option("--max-target", o.max_target, "Largest discrete target size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* lemma = sub("check-lemma", "Compare the reflection of a product with the product of reflections",
                    cmd_check_lemma);
  lemma->add_option("first", o.space, "Space file")->required();
  lemma->add_option("second", o.other, "Space file")->required();

  auto* cech = sub("cech", "Homology of an inverse sequence of finite spaces", cmd_cech);
  cech->add_option("manifest", o.manifest, "Sequence manifest")->required();
  cech->add_option("--degree", o.degree, "Homology degree")->capture_default_str();
  cech->add_option("--coeff", o.cech_coeff, "q or z<p>")->check(coeff_check)->capture_default_str();
  cech->add_option("--window", o.window, "Stabilization window")->capture_default_str();

  auto* demo = sub("demo", "Write a tower of nerve face posets", cmd_demo);
  demo->add_option("model", o.model, "circle, interval or wedge2")
      ->required()
      ->check(CLI::IsMember({"circle", "interval", "wedge2"}));
  demo->add_option("--base", o.base, "Resolution of the coarsest stage")->capture_default_str();
  demo->add_option("--depth", o.depth, "Number of stages")->check(CLI::PositiveNumber)->capture_default_str();
  demo->add_option("--out", o.out, "Output directory")->required();

  auto* dbl = sub("doubled", "R classes and reflection of a non-Hausdorff gluing", cmd_doubled);
  dbl->add_option("name", o.name, "punctured-circle or two-origin-line")
      ->required()
      ->check(CLI::IsMember({"punctured-circle", "two-origin-line"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  Report report(join(args));
  int code = kExitOk;
  try {
    code = handler(o, report);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_property_failure(e.code()) ? kExitPropertyFailure : kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  out << (o.json ? report.json() : report.text());
  return code;
}

}  // namespace fintop::cli
