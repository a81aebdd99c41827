#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arcforge/arc.hpp"
#include "arcforge/classify.hpp"
#include "arcforge/cut.hpp"
#include "arcforge/json_io.hpp"
#include "arcforge/parallel.hpp"
#include "arcforge/render.hpp"
#include "arcforge/surface.hpp"
#include "arcforge/system.hpp"
#include "arcforge/verify.hpp"

#ifndef ARCFORGE_DATA_DIR
#define ARCFORGE_DATA_DIR "data"
#endif

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

std::string rat_str(const arcforge::Rat& r) {
  std::ostringstream ss;
  ss << r.numerator();
  if (r.denominator() != 1) ss << "/" << r.denominator();
  return ss.str();
}

std::vector<int> parse_subset(const std::string& spec,
                              const arcforge::ArcSystem& s) {
  std::vector<int> idx;
  if (spec == "all") {
    for (size_t i = 0; i < s.members.size(); ++i) idx.push_back(static_cast<int>(i));
    return idx;
  }
  if (spec == "J") return arcforge::non_intersecting_subset(s);
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 0 ||
        v >= static_cast<int>(s.members.size()))
      throw std::invalid_argument("bad subset index '" + tok + "'");
    idx.push_back(v);
  }
  if (idx.empty()) throw std::invalid_argument("empty subset");
  return idx;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"enumeration, verification and classification of 1-systems "
               "of simple arcs on marked surfaces"};
  app.require_subcommand(1);

  std::string surface = "torus-2-marked";
  int bound = arcforge::kDefaultBound;
  int kbound = 1;
  int floor_size = 12;
  int threads = 0;
  std::string out_path, system_path, systems_path, golden_path;
  std::string subset = "all";

  auto add_surface = [&](CLI::App* c) {
    c->add_option("--surface", surface, "fixture name")->capture_default_str();
  };
  auto add_bound = [&](CLI::App* c) {
    c->add_option("--bound", bound, "max crossings per arc")
        ->capture_default_str();
  };
  auto add_threads = [&](CLI::App* c) {
    c->add_option("--threads", threads,
                  "worker threads (0 = ARCFORGE_THREADS or hardware)")
        ->capture_default_str();
  };
  auto add_out = [&](CLI::App* c) {
    c->add_option("--out", out_path, "output file ('-' = stdout)");
  };

  auto* cmd_enum = app.add_subcommand(
      "enumerate-arcs", "list all simple arc classes up to a crossing bound");
  add_surface(cmd_enum);
  add_bound(cmd_enum);
  add_out(cmd_enum);

  auto* cmd_intersect = app.add_subcommand(
      "intersect", "pairwise intersection matrix of the bounded arc pool");
  add_surface(cmd_intersect);
  add_bound(cmd_intersect);
  add_threads(cmd_intersect);
  add_out(cmd_intersect);

  auto* cmd_max = app.add_subcommand(
      "max-systems", "enumerate maximal k-systems by clique search");
  add_surface(cmd_max);
  add_bound(cmd_max);
  cmd_max->add_option("--k", kbound, "pairwise intersection bound")
      ->capture_default_str();
  cmd_max->add_option("--floor", floor_size, "smallest system size to keep")
      ->capture_default_str();
  add_threads(cmd_max);
  add_out(cmd_max);

  auto* cmd_cut = app.add_subcommand(
      "cut", "invariants of the surface cut along disjoint members");
  add_surface(cmd_cut);
  cmd_cut->add_option("--system", system_path, "system record (JSON)")
      ->required();
  cmd_cut->add_option("--subset", subset,
                      "'all', 'J', or comma-separated member indices")
      ->capture_default_str();
  add_out(cmd_cut);

  auto* cmd_classify = app.add_subcommand(
      "classify", "group systems by canonical code");
  add_surface(cmd_classify);
  cmd_classify->add_option("--systems", systems_path, "system list (JSON)")
      ->required();
  add_threads(cmd_classify);
  add_out(cmd_classify);

  auto* cmd_catalog = app.add_subcommand(
      "catalog", "regenerate the classified catalog and compare to a golden");
  add_surface(cmd_catalog);
  add_bound(cmd_catalog);
  cmd_catalog->add_option("--k", kbound, "pairwise intersection bound")
      ->capture_default_str();
  cmd_catalog->add_option("--floor", floor_size, "smallest system size to keep")
      ->capture_default_str();
  add_threads(cmd_catalog);
  add_out(cmd_catalog);
  cmd_catalog
      ->add_option("--golden", golden_path, "catalog to compare against")
      ->capture_default_str();

  auto* cmd_render = app.add_subcommand("render", "draw a system as SVG");
  add_surface(cmd_render);
  cmd_render->add_option("--system", system_path, "system record (JSON)")
      ->required();
  add_out(cmd_render);

  auto* cmd_verify = app.add_subcommand(
      "verify", "run the full verification battery");
  cmd_verify->add_option("--bound", bound, "search bound (paired with bound+2)")
      ->capture_default_str();
  add_threads(cmd_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const int nthreads = arcforge::resolve_threads(threads);

    if (app.got_subcommand(cmd_enum)) {
      const auto& T = arcforge::standard_fixture(surface);
      const auto pool = arcforge::enumerate_arcs(T, bound);
      spill(out_path, arcforge::arcs_to_json(T, pool));
      std::cerr << pool.size() << " arc classes with at most " << bound
                << " crossings on " << surface << "\n";
    } else if (app.got_subcommand(cmd_intersect)) {
      const auto& T = arcforge::standard_fixture(surface);
      const auto pool = arcforge::enumerate_arcs(T, bound);
      const auto m = arcforge::intersection_matrix(T, pool, nthreads);
      spill(out_path, arcforge::matrix_to_json(T, pool, m));
    } else if (app.got_subcommand(cmd_max)) {
      const auto& T = arcforge::standard_fixture(surface);
      const auto pool = arcforge::enumerate_arcs(T, bound);
      const auto g = arcforge::build_compatibility_graph(T, pool, kbound, nthreads);
      const auto cliques = arcforge::maximum_cliques(g, floor_size);
      std::vector<arcforge::ArcSystem> systems;
      systems.reserve(cliques.size());
      for (const auto& c : cliques)
        systems.push_back(arcforge::system_from_pool(T, pool, g.matrix, c, kbound));
      spill(out_path, arcforge::systems_to_json(T, systems));
      std::cerr << systems.size() << " maximal " << kbound << "-systems of "
                << floor_size << "+ members at bound " << bound << "\n";
    } else if (app.got_subcommand(cmd_cut)) {
      const auto& T = arcforge::standard_fixture(surface);
      const auto sys = arcforge::system_from_json(T, slurp(system_path));
      const auto idx = parse_subset(subset, sys);
      std::vector<arcforge::ArcClass> members;
      for (const int i : idx) members.push_back(sys.members[i]);
      const auto cut = arcforge::cut_along(
          T, arcforge::make_system(T, T.name, members, sys.k));
      std::ostringstream out;
      out << "cut along " << cut.along.members.size() << " arcs: "
          << cut.components.size() << " component"
          << (cut.components.size() == 1 ? "" : "s") << "\n";
      arcforge::Rat total(0);
      for (const auto& c : cut.components) {
        out << "  g=" << c.g << " b=" << c.b << " p=" << c.p << " v=" << c.v
            << " chi=" << rat_str(c.chi()) << "\n";
        total += c.chi();
      }
      out << "total chi " << rat_str(total) << ", boundary marked points "
          << cut.boundary_marked_total << "\n";
      spill(out_path, out.str());
    } else if (app.got_subcommand(cmd_classify)) {
      const auto& T = arcforge::standard_fixture(surface);
      const auto systems = arcforge::systems_from_json(T, slurp(systems_path));
      const auto classes = arcforge::classify(T, systems, nthreads);
      for (size_t i = 0; i < classes.size(); ++i) {
        const auto& c = classes[i];
        std::cerr << "class " << i << ": size " << c.size << ", |J| "
                  << c.j_size << ", crossings " << c.crossings << ", members "
                  << c.count << (c.amphichiral ? ", mirror-symmetric" : "")
                  << (c.swap_symmetric ? ", swap-symmetric" : "") << "\n";
      }
      spill(out_path, arcforge::catalog_to_json(T, classes));
    } else if (app.got_subcommand(cmd_catalog)) {
      const auto& T = arcforge::standard_fixture(surface);
      const auto pool = arcforge::enumerate_arcs(T, bound);
      const auto g = arcforge::build_compatibility_graph(T, pool, kbound, nthreads);
      const auto cliques = arcforge::maximum_cliques(g, floor_size);
      std::vector<arcforge::ArcSystem> systems;
      systems.reserve(cliques.size());
      for (const auto& c : cliques)
        systems.push_back(arcforge::system_from_pool(T, pool, g.matrix, c, kbound));
      const auto classes = arcforge::classify(T, systems, nthreads);
      const std::string text = arcforge::catalog_to_json(T, classes);
      if (!out_path.empty()) spill(out_path, text);
      const std::string golden =
          golden_path.empty() ? std::string(ARCFORGE_DATA_DIR) + "/catalog.json"
                              : golden_path;
      std::ifstream gf(golden, std::ios::binary);
      if (!gf) {
        std::cerr << "no golden catalog at " << golden << "\n";
        return out_path.empty() ? 1 : 0;
      }
      std::ostringstream gs;
      gs << gf.rdbuf();
      if (gs.str() != text) {
        std::cerr << "regenerated catalog differs from " << golden << "\n";
        return 1;
      }
      std::cerr << classes.size() << " classes, catalog matches " << golden
                << "\n";
    } else if (app.got_subcommand(cmd_render)) {
      const auto& T = arcforge::standard_fixture(surface);
      const auto sys = arcforge::system_from_json(T, slurp(system_path));
      spill(out_path, arcforge::render_svg(T, sys));
    } else if (app.got_subcommand(cmd_verify)) {
      const auto rep = arcforge::run_verification(bound, nthreads);
      std::cout << rep.text;
      return rep.all_pass ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
