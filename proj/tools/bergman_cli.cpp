#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bergman/complex.hpp"
#include "bergman/errors.hpp"
#include "bergman/json_io.hpp"
#include "bergman/lattice.hpp"
#include "bergman/matroid.hpp"
#include "bergman/treespace.hpp"
#include "bergman/verify.hpp"
#include "bergman/weights.hpp"

namespace {

using nlohmann::json;

// exit codes: 0 success, 1 domain error, 2 malformed input, 3 budget blown

struct malformed_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// runs f and reclassifies schema/parse failures as malformed input
template <typename F>
auto parsing(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const bergman::invalid_input& e) {
    throw malformed_input(e.what());
  } catch (const json::exception& e) {
    throw malformed_input(e.what());
  }
}

std::string slurp(const std::string& path) {
  std::ostringstream text;
  if (path.empty() || path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw malformed_input("cannot open " + path);
    text << file.rdbuf();
  }
  return text.str();
}

json load_json(const std::string& path) {
  const std::string text = slurp(path);
  return parsing([&] { return json::parse(text); });
}

void emit(const std::string& path, std::string text) {
  if (!text.empty() && text.back() != '\n') text.push_back('\n');
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot write " + path);
    file << text;
  }
}

struct StreamOptions {
  std::string in;
  std::string out;
  std::size_t budget = bergman::kDefaultEnumerationBudget;
};

void add_stream_options(CLI::App* cmd, StreamOptions& o) {
  cmd->add_option("--in", o.in, "input path, defaults to stdin");
  cmd->add_option("--out", o.out, "output path, defaults to stdout");
  cmd->add_option("--budget", o.budget, "enumeration limit before exit 3");
}

bergman::Matroid load_matroid(const std::string& path) {
  const json j = load_json(path);
  return parsing([&] { return bergman::matroid_from_json(j); });
}

struct WeightedMatroid {
  bergman::Matroid matroid;
  bergman::WeightVector weights;
};

WeightedMatroid load_weighted(const std::string& path) {
  const json j = load_json(path);
  if (!j.is_object() || !j.contains("matroid") || !j.contains("weights")) {
    throw malformed_input(
        "expected an object with \"matroid\" and \"weights\" fields");
  }
  bergman::Matroid m =
      parsing([&] { return bergman::matroid_from_json(j.at("matroid")); });
  bergman::WeightVector w =
      parsing([&] { return bergman::weights_from_json(j.at("weights")); });
  if (static_cast<int>(w.size()) != m.ground_size()) {
    throw malformed_input("weight vector length " + std::to_string(w.size()) +
                          " does not match ground size " +
                          std::to_string(m.ground_size()));
  }
  return {std::move(m), std::move(w)};
}

std::string flag_label(const bergman::Flag& f) {
  std::ostringstream os;
  bool first = true;
  for (const bergman::Subset& s : f.proper_sets()) {
    if (!first) os << " < ";
    os << s;
    first = false;
  }
  return os.str();
}

void run_flats(const StreamOptions& o) {
  const bergman::Matroid m = load_matroid(o.in);
  emit(o.out,
       bergman::lattice_to_json(bergman::FlatLattice::of(m, o.budget)).dump(2));
}

void run_fine(const StreamOptions& o, const std::string& format) {
  const bergman::Matroid m = load_matroid(o.in);
  const bergman::SimplicialComplex sc = bergman::order_complex_fine(m, o.budget);
  if (format == "dot") {
    emit(o.out, bergman::complex_to_dot(sc, "fine"));
  } else {
    emit(o.out, bergman::complex_to_json(sc).dump(2));
  }
}

void run_coarse(const StreamOptions& o, const std::string& format) {
  const bergman::Matroid m = load_matroid(o.in);
  const std::vector<bergman::CoarseCell> cells =
      bergman::coarse_cells(m, o.budget);
  if (format == "dot") {
    const bergman::SimpleGraph g = bergman::coarse_graph(cells);
    std::vector<std::string> labels;
    for (const bergman::CoarseCell& cell : cells) {
      if (cell.dimension() != 0) continue;
      std::ostringstream os;
      bool first = true;
      for (const bergman::Flag& f : cell.member_flags) {
        if (!first) os << " = ";
        os << flag_label(f);
        first = false;
      }
      labels.push_back(os.str());
    }
    emit(o.out, bergman::graph_to_dot(g, "coarse", labels));
  } else {
    emit(o.out,
         bergman::coarse_to_json(bergman::order_complex_fine(m, o.budget),
                                 cells)
             .dump(2));
  }
}

void run_mobius(const StreamOptions& o) {
  const bergman::Matroid m = load_matroid(o.in);
  emit(o.out,
       std::to_string(bergman::FlatLattice::of(m, o.budget).mobius_hat()));
}

void run_minbases(const StreamOptions& o) {
  const WeightedMatroid input = load_weighted(o.in);
  const bergman::BasisFamily family =
      bergman::min_bases_greedy(input.matroid, input.weights, o.budget);
  json out;
  out["type"] = "bases";
  out["n"] = input.matroid.ground_size();
  out["bases"] = json::array();
  for (const bergman::Subset& b : family.bases) {
    out["bases"].push_back(b.elements());
  }
  emit(o.out, out.dump(2));
}

void run_member(const StreamOptions& o) {
  const WeightedMatroid input = load_weighted(o.in);
  const bool inside =
      bergman::in_bergman_fan(input.matroid, input.weights, o.budget);
  emit(o.out, inside ? "true" : "false");
}

void run_tree_to_dist(const StreamOptions& o) {
  const json j = load_json(o.in);
  const bergman::EquidistantTree t =
      parsing([&] { return bergman::tree_from_json(j); });
  emit(o.out, bergman::dist_to_json(bergman::tree_to_ultrametric(t)).dump(2));
}

void run_dist_to_tree(const StreamOptions& o, const std::string& format) {
  const json j = load_json(o.in);
  const bergman::DissimilarityMap d =
      parsing([&] { return bergman::dist_from_json(j); });
  const bergman::EquidistantTree t = bergman::ultrametric_to_tree(d);
  if (format == "newick") {
    std::cerr << "note: newick branch lengths are decimal and may lose "
                 "exactness\n";
    emit(o.out, bergman::tree_to_newick(t));
  } else {
    emit(o.out, bergman::tree_to_json(t).dump(2));
  }
}

void run_check_ultrametric(const StreamOptions& o) {
  const json j = load_json(o.in);
  const bergman::DissimilarityMap d =
      parsing([&] { return bergman::dist_from_json(j); });
  const auto witness = bergman::ultrametric_violation(d);
  if (witness) {
    const auto [i, jj, k] = *witness;
    std::cerr << "violated on triple {" << i << "," << jj << "," << k << "}\n";
  }
  emit(o.out, witness ? "false" : "true");
}

int run_verify(const StreamOptions& o, const std::vector<std::string>& chosen,
               const bergman::SuiteOptions& vo, const std::string& format,
               bool list_only) {
  if (list_only) {
    std::ostringstream os;
    for (const std::string& name : bergman::suite_names()) os << name << "\n";
    emit(o.out, os.str());
    return 0;
  }
  std::vector<std::string> names =
      chosen.empty() ? bergman::suite_names() : chosen;
  const auto& known = bergman::suite_names();
  for (const std::string& name : names) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw malformed_input("unknown suite \"" + name + "\"");
    }
  }
  std::vector<bergman::SuiteReport> reports;
  for (const std::string& name : names) {
    reports.push_back(bergman::run_suite(name, vo));
  }
  bool all_passed = true;
  int suites_passed = 0;
  for (const bergman::SuiteReport& r : reports) {
    if (r.passed()) {
      ++suites_passed;
    } else {
      all_passed = false;
    }
  }
  if (format == "json") {
    json out;
    out["passed"] = all_passed;
    out["suites"] = json::array();
    for (const bergman::SuiteReport& r : reports) {
      json suite;
      suite["suite"] = r.suite;
      suite["passed"] = r.passed();
      suite["checks"] = json::array();
      for (const bergman::CheckResult& c : r.checks) {
        suite["checks"].push_back(
            {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      }
      out["suites"].push_back(std::move(suite));
    }
    emit(o.out, out.dump(2));
  } else {
    std::ostringstream os;
    for (const bergman::SuiteReport& r : reports) {
      for (const bergman::CheckResult& c : r.checks) {
        os << (c.passed ? "[PASS] " : "[FAIL] ") << r.suite << ": " << c.name;
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
      }
    }
    os << "suites passed: " << suites_passed << "/" << reports.size() << "\n";
    emit(o.out, os.str());
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bergman complexes of matroids and equidistant tree space"};
  app.require_subcommand(1);

  StreamOptions stream;
  std::string fine_format = "json";
  std::string coarse_format = "json";
  std::string tree_format = "json";
  std::string verify_format = "text";
  std::vector<std::string> suites;
  bool list_suites = false;
  bergman::SuiteOptions suite_options;
  int ret = 0;

  CLI::App* flats = app.add_subcommand(
      "flats", "lattice of flats of a matroid, as JSON");
  add_stream_options(flats, stream);
  flats->callback([&] { run_flats(stream); });

  CLI::App* fine = app.add_subcommand(
      "fine", "fine subdivision of the Bergman complex");
  add_stream_options(fine, stream);
  fine->add_option("--format", fine_format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  fine->callback([&] { run_fine(stream, fine_format); });

  CLI::App* coarse = app.add_subcommand(
      "coarse", "coarse subdivision with weight-class cells");
  add_stream_options(coarse, stream);
  coarse->add_option("--format", coarse_format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  coarse->callback([&] { run_coarse(stream, coarse_format); });

  CLI::App* mobius = app.add_subcommand(
      "mobius", "signless Mobius number of the lattice of flats");
  add_stream_options(mobius, stream);
  mobius->callback([&] { run_mobius(stream); });

  CLI::App* minbases = app.add_subcommand(
      "minbases", "bases of minimum weight, from matroid plus weights");
  add_stream_options(minbases, stream);
  minbases->callback([&] { run_minbases(stream); });

  CLI::App* member = app.add_subcommand(
      "member", "does the weight vector lie in the Bergman fan");
  add_stream_options(member, stream);
  member->callback([&] { run_member(stream); });

  CLI::App* tree_to_dist = app.add_subcommand(
      "tree-to-dist", "pairwise distances induced by an equidistant tree");
  add_stream_options(tree_to_dist, stream);
  tree_to_dist->callback([&] { run_tree_to_dist(stream); });

  CLI::App* dist_to_tree = app.add_subcommand(
      "dist-to-tree", "equidistant tree realizing an ultrametric");
  add_stream_options(dist_to_tree, stream);
  dist_to_tree->add_option("--format", tree_format, "json or newick")
      ->check(CLI::IsMember({"json", "newick"}));
  dist_to_tree->callback([&] { run_dist_to_tree(stream, tree_format); });

  CLI::App* check = app.add_subcommand(
      "check-ultrametric", "test the three-point condition");
  add_stream_options(check, stream);
  check->callback([&] { run_check_ultrametric(stream); });

  CLI::App* verify = app.add_subcommand(
      "verify", "run the cross-module property suites");
  verify->add_option("--out", stream.out, "output path, defaults to stdout");
  verify->add_option("--suite", suites, "suite names; default runs all");
  verify->add_flag("--list", list_suites, "print suite names and exit");
  verify->add_option("--n", suite_options.n, "restrict to one ground size");
  verify->add_option("--max-n", suite_options.max_n, "cap swept ground sizes");
  verify->add_option("--samples", suite_options.samples,
                     "random samples per sub-check");
  verify->add_option("--seed", suite_options.seed, "random generator seed");
  verify->add_option("--budget", suite_options.budget,
                     "enumeration limit before exit 3");
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->callback([&] {
    ret = run_verify(stream, suites, suite_options, verify_format, list_suites);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const malformed_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bergman::not_ultrametric& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const bergman::budget_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const bergman::invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return ret;
}
