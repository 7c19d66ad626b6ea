#include "bergman/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "bergman/complex.hpp"
#include "bergman/errors.hpp"
#include "bergman/lattice.hpp"

namespace bergman {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

Rational random_small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 4);
  std::uniform_int_distribution<int> den(1, 2);
  return Rational(num(rng), den(rng));
}

WeightVector random_weight_vector(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-2, 4);
  std::uniform_int_distribution<int> den(1, 2);
  WeightVector w;
  w.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w.push_back(Rational(num(rng), den(rng)));
  return w;
}

DissimilarityMap random_dissimilarity(int n, std::mt19937_64& rng) {
  DissimilarityMap d(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) d.set(i, j, random_small_rational(rng));
  }
  return d;
}

namespace {

using Node = EquidistantTree::Node;

std::vector<std::vector<int>> random_blocks(const std::vector<int>& leaves,
                                            std::mt19937_64& rng) {
  const int size = static_cast<int>(leaves.size());
  // at most four children per vertex keeps tied-weight explosions in the
  // spanning tree recursion at bay; ties themselves stay frequent
  std::uniform_int_distribution<int> pick(2, std::min(size, 4));
  const int blocks = pick(rng);
  std::vector<int> shuffled = leaves;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::vector<int> positions(static_cast<std::size_t>(size - 1));
  std::iota(positions.begin(), positions.end(), 1);
  std::shuffle(positions.begin(), positions.end(), rng);
  std::vector<int> cuts(positions.begin(), positions.begin() + blocks - 1);
  cuts.push_back(0);
  cuts.push_back(size);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::vector<int>> result;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    result.emplace_back(shuffled.begin() + cuts[i],
                        shuffled.begin() + cuts[i + 1]);
  }
  return result;
}

void assign_height(Node& node, std::mt19937_64& rng) {
  bool has_internal = false;
  Rational floor = 0;
  for (const Node& c : node.children) {
    if (!c.is_leaf()) {
      if (!has_internal || c.height > floor) floor = c.height;
      has_internal = true;
    }
  }
  if (has_internal) {
    std::uniform_int_distribution<int> inc(1, 4);
    node.height = floor + Rational(inc(rng), 2);
  } else {
    // heights from a small palette, negatives included, so ties happen
    std::uniform_int_distribution<int> base(-2, 4);
    node.height = Rational(base(rng), 2);
  }
}

Node random_subtree(const std::vector<int>& leaves, std::mt19937_64& rng) {
  if (leaves.size() == 1) {
    Node leaf;
    leaf.leaf = leaves.front();
    return leaf;
  }
  Node node;
  for (const auto& block : random_blocks(leaves, rng)) {
    node.children.push_back(random_subtree(block, rng));
  }
  assign_height(node, rng);
  return node;
}

void reassign_heights(Node& node, std::mt19937_64& rng) {
  if (node.is_leaf()) return;
  for (Node& c : node.children) reassign_heights(c, rng);
  assign_height(node, rng);
}

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t salt) {
  return std::mt19937_64(seed + salt * 0x9E3779B97F4A7C15ull);
}

}  // namespace

EquidistantTree random_equidistant_tree(int n, std::mt19937_64& rng) {
  std::vector<int> leaves(static_cast<std::size_t>(n));
  std::iota(leaves.begin(), leaves.end(), 1);
  return EquidistantTree(random_subtree(leaves, rng), n);
}

namespace {

// ---------- fixtures ----------

Matroid linear_fixture() {
  return Matroid::linear({{1, 0, 0, 1, 0, 1},
                          {0, 1, 0, 1, 1, 1},
                          {0, 0, 1, 0, 1, 1}});
}

struct Fixture {
  std::string name;
  Matroid matroid;
};

std::vector<Fixture> standard_fixtures() {
  std::vector<Fixture> fixtures;
  fixtures.push_back({"graphic K4", Matroid::complete_graph(4)});
  fixtures.push_back({"graphic K5", Matroid::complete_graph(5)});
  fixtures.push_back({"U(2,4)", Matroid::uniform(2, 4)});
  fixtures.push_back({"U(2,5)", Matroid::uniform(2, 5)});
  fixtures.push_back({"U(3,5)", Matroid::uniform(3, 5)});
  fixtures.push_back({"U(3,3)", Matroid::uniform(3, 3)});
  fixtures.push_back({"linear rank 3", linear_fixture()});
  return fixtures;
}

Node cherry(int a, int b, const Rational& height) {
  Node node;
  node.height = height;
  Node la;
  la.leaf = a;
  Node lb;
  lb.leaf = b;
  node.children.push_back(std::move(la));
  node.children.push_back(std::move(lb));
  return node;
}

// hand-picked instances pinning down tied heights, negative heights, the
// three-level chain, and the all-equal star
std::vector<EquidistantTree> handcrafted_trees(int max_n) {
  std::vector<EquidistantTree> trees;
  {
    Node root;
    root.height = 1;
    root.children.push_back(cherry(1, 2, Rational(1, 2)));
    root.children.push_back(cherry(3, 4, Rational(1, 2)));
    trees.push_back(EquidistantTree(std::move(root), 4));
  }
  {
    Node root;
    root.height = Rational(1, 2);
    root.children.push_back(cherry(1, 2, -1));
    root.children.push_back(cherry(3, 4, Rational(-1, 2)));
    trees.push_back(EquidistantTree(std::move(root), 4));
  }
  {
    Node inner = cherry(1, 2, Rational(1, 2));
    Node mid;
    mid.height = Rational(3, 4);
    mid.children.push_back(std::move(inner));
    Node leaf3;
    leaf3.leaf = 3;
    mid.children.push_back(std::move(leaf3));
    Node root;
    root.height = 1;
    root.children.push_back(std::move(mid));
    Node leaf4;
    leaf4.leaf = 4;
    root.children.push_back(std::move(leaf4));
    trees.push_back(EquidistantTree(std::move(root), 4));
  }
  if (max_n >= 5) {
    Node root;
    root.height = 1;
    for (int i = 1; i <= 5; ++i) {
      Node leaf;
      leaf.leaf = i;
      root.children.push_back(std::move(leaf));
    }
    trees.push_back(EquidistantTree(std::move(root), 5));
  }
  return trees;
}

// ---------- shared sample sets (reused verbatim by the oracle replay) ----------

std::vector<DissimilarityMap> membership_samples(int n, int samples,
                                                 std::uint64_t seed) {
  auto rng = seeded(seed, static_cast<std::uint64_t>(n));
  std::vector<DissimilarityMap> deltas;
  deltas.reserve(static_cast<std::size_t>(2 * samples));
  for (int s = 0; s < samples; ++s) {
    deltas.push_back(random_dissimilarity(n, rng));
  }
  for (int s = 0; s < samples; ++s) {
    deltas.push_back(tree_to_ultrametric(random_equidistant_tree(n, rng)));
  }
  return deltas;
}

std::vector<EquidistantTree> roundtrip_samples(int samples, int max_n,
                                               std::uint64_t seed) {
  auto rng = seeded(seed, 0xA11CEull);
  std::vector<EquidistantTree> trees = handcrafted_trees(max_n);
  std::uniform_int_distribution<int> leaf_count(2, max_n);
  for (int s = 0; s < samples; ++s) {
    trees.push_back(random_equidistant_tree(leaf_count(rng), rng));
  }
  return trees;
}

std::pair<DissimilarityMap, DissimilarityMap> tied_and_untied_pair() {
  DissimilarityMap tied(4);
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) tied.set(i, j, 2);
  }
  tied.set(1, 2, 1);
  tied.set(3, 4, 1);
  DissimilarityMap untied = tied;
  untied.set(3, 4, Rational(3, 2));
  return {std::move(tied), std::move(untied)};
}

std::vector<std::pair<DissimilarityMap, DissimilarityMap>>
correspondence_samples(int n, int samples, std::uint64_t seed) {
  auto rng = seeded(seed, 0xCE11ull + static_cast<std::uint64_t>(n));
  std::vector<std::pair<DissimilarityMap, DissimilarityMap>> pairs;
  if (n == 4) pairs.push_back(tied_and_untied_pair());
  std::uniform_int_distribution<int> coin(0, 1);
  for (int s = 0; s < samples; ++s) {
    EquidistantTree first = random_equidistant_tree(n, rng);
    if (coin(rng) == 0) {
      pairs.push_back({tree_to_ultrametric(first),
                       tree_to_ultrametric(random_equidistant_tree(n, rng))});
    } else {
      // same shape, fresh heights: exercises the equal-topology direction
      Node shape = first.root();
      reassign_heights(shape, rng);
      EquidistantTree second(std::move(shape), n);
      pairs.push_back(
          {tree_to_ultrametric(first), tree_to_ultrametric(second)});
    }
  }
  return pairs;
}

// ---------- reporting helpers ----------

template <typename T>
CheckResult expect_eq(std::string name, const T& got, const T& want) {
  std::ostringstream os;
  os << "expected " << want << ", got " << got;
  return {std::move(name), got == want, os.str()};
}

CheckResult expect_true(std::string name, bool got, std::string detail) {
  return {std::move(name), got, std::move(detail)};
}

CheckResult zero_failures(std::string name, long long failures,
                          std::string context) {
  std::ostringstream os;
  os << context << ", " << failures << " failures";
  return {std::move(name), failures == 0, os.str()};
}

// ---------- suites ----------

SuiteReport suite_k4_golden(const SuiteOptions& o) {
  SuiteReport r{"k4-golden", {}};
  const Matroid k4 = Matroid::complete_graph(4);
  const SimplicialComplex fine = order_complex_fine(k4, o.budget);
  r.checks.push_back(expect_eq("fine vertex count", fine.num_vertices(), 13));
  r.checks.push_back(expect_eq("fine edge count",
                               static_cast<int>(fine.maximal_faces.size()),
                               18));
  r.checks.push_back(expect_eq("fine dimension", fine.dimension(), 1));
  r.checks.push_back(
      expect_true("fine pure", fine.is_pure(), "every maximal face an edge"));
  r.checks.push_back(expect_true("fine connected", fine.is_connected(), ""));
  r.checks.push_back(
      expect_eq("reduced Euler characteristic", fine.reduced_euler(), -6ll));
  const FlatLattice lattice = FlatLattice::of(k4, o.budget);
  r.checks.push_back(expect_eq("flat count", lattice.num_flats(), 15));
  r.checks.push_back(expect_eq("Mobius number", lattice.mobius_hat(), 6ll));
  return r;
}

SuiteReport suite_petersen(const SuiteOptions& o) {
  SuiteReport r{"petersen", {}};
  const Matroid k4 = Matroid::complete_graph(4);
  const std::vector<CoarseCell> cells = coarse_cells(k4, o.budget);
  const SimpleGraph coarse = coarse_graph(cells);
  r.checks.push_back(expect_eq("coarse vertex count", coarse.num_vertices, 10));
  r.checks.push_back(expect_eq("coarse edge count", coarse.num_edges(), 15));
  const std::vector<int> degrees = coarse.degrees();
  r.checks.push_back(expect_true(
      "coarse 3-regular",
      std::all_of(degrees.begin(), degrees.end(),
                  [](int d) { return d == 3; }),
      "all degrees 3"));
  r.checks.push_back(expect_eq("coarse girth", coarse.girth(), 5));
  r.checks.push_back(expect_true(
      "coarse matches the Petersen graph",
      graphs_isomorphic(coarse, petersen_graph()), "isomorphism search"));
  const SimpleGraph fine = one_skeleton(order_complex_fine(k4, o.budget));
  const std::vector<int> fine_degrees = fine.degrees();
  r.checks.push_back(expect_eq(
      "fine degree-2 vertex count",
      static_cast<int>(std::count(fine_degrees.begin(), fine_degrees.end(), 2)),
      3));
  r.checks.push_back(expect_true(
      "smoothed fine graph matches the Petersen graph",
      graphs_isomorphic(smooth_degree_two(fine), petersen_graph()),
      "degree-2 vertices smoothed away"));
  return r;
}

SuiteReport suite_mobius_partition(const SuiteOptions& o) {
  SuiteReport r{"mobius-partition", {}};
  int lo = 3;
  int hi = o.max_n > 0 ? o.max_n : 7;
  if (o.n > 0) lo = hi = o.n;
  for (int n = lo; n <= hi; ++n) {
    const FlatLattice lattice =
        FlatLattice::of(Matroid::complete_graph(n), o.budget);
    long long factorial = 1;
    for (int i = 2; i < n; ++i) factorial *= i;
    r.checks.push_back(expect_eq("complete graph on " + std::to_string(n) +
                                     " vertices: Mobius number",
                                 lattice.mobius_hat(), factorial));
    if (n == 7) {
      r.checks.push_back(expect_eq("partition lattice size at n=7",
                                   lattice.num_flats(), 877));
    }
  }
  return r;
}

SuiteReport suite_euler_mobius(const SuiteOptions& o) {
  SuiteReport r{"euler-mobius", {}};
  for (const Fixture& fixture : standard_fixtures()) {
    const SimplicialComplex fine = order_complex_fine(fixture.matroid, o.budget);
    const FlatLattice lattice = FlatLattice::of(fixture.matroid, o.budget);
    const long long mu = lattice.mobius_hat();
    const long long want = fixture.matroid.rank() % 2 == 0 ? mu : -mu;
    r.checks.push_back(expect_eq(fixture.name + ": reduced Euler vs Mobius",
                                 fine.reduced_euler(), want));
    r.checks.push_back(expect_true(fixture.name + ": purity", fine.is_pure(),
                                   "maximal chains all full length"));
  }
  return r;
}

// every length-n vector over {0,1,2,3}, one layer count at a time
std::set<Flag> small_integer_flags(int n) {
  std::set<Flag> flags;
  WeightVector w(static_cast<std::size_t>(n), 0);
  while (true) {
    flags.insert(flag_of(w));
    int pos = 0;
    while (pos < n && w[static_cast<std::size_t>(pos)] == 3) {
      w[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == n) break;
    w[static_cast<std::size_t>(pos)] += 1;
  }
  return flags;
}

SuiteReport suite_flag_flats(const SuiteOptions& o) {
  SuiteReport r{"flag-flats", {}};
  const std::vector<Fixture> fixtures = {
      {"graphic K4", Matroid::complete_graph(4)},
      {"U(3,5)", Matroid::uniform(3, 5)}};
  for (const Fixture& fixture : fixtures) {
    const std::set<Flag> flags = small_integer_flags(fixture.matroid.ground_size());
    long long mismatches = 0;
    for (const Flag& f : flags) {
      bool all_closed = true;
      for (const Subset& s : f.chain()) {
        if (!fixture.matroid.is_flat(s)) {
          all_closed = false;
          break;
        }
      }
      if (is_valid_flag(fixture.matroid, f, o.budget) != all_closed) {
        ++mismatches;
      }
    }
    r.checks.push_back(zero_failures(
        fixture.name + ": loop-free minimum bases vs closed sets", mismatches,
        std::to_string(flags.size()) + " flags"));
  }
  return r;
}

SuiteReport suite_diamond(const SuiteOptions& o) {
  SuiteReport r{"diamond", {}};
  const std::vector<Fixture> fixtures = {
      {"graphic K4", Matroid::complete_graph(4)},
      {"U(3,5)", Matroid::uniform(3, 5)}};
  for (const Fixture& fixture : fixtures) {
    const std::vector<Flag> flags = maximal_valid_flags(fixture.matroid, o.budget);
    long long pairs = 0;
    long long disagreements = 0;
    for (std::size_t a = 0; a < flags.size(); ++a) {
      for (std::size_t b = a + 1; b < flags.size(); ++b) {
        int differing = 0;
        for (int i = 1; i <= flags[a].num_proper(); ++i) {
          if (flags[a].chain()[static_cast<std::size_t>(i)] !=
              flags[b].chain()[static_cast<std::size_t>(i)]) {
            ++differing;
          }
        }
        if (differing != 1) continue;
        ++pairs;
        if (!diamond_equivalence(fixture.matroid, flags[a], flags[b], o.budget)
                 .all_agree()) {
          ++disagreements;
        }
      }
    }
    r.checks.push_back(zero_failures(
        fixture.name + ": four-way agreement", disagreements,
        std::to_string(pairs) + " adjacent maximal flag pairs"));
    r.checks.push_back(expect_true(fixture.name + ": adjacency nonvacuous",
                                   pairs > 0, std::to_string(pairs) + " pairs"));
  }
  return r;
}

SuiteReport suite_greedy_oracle(const SuiteOptions& o) {
  SuiteReport r{"greedy-oracle", {}};
  const int samples = o.samples > 0 ? o.samples : 1000;
  std::uint64_t salt = 0;
  for (const Fixture& fixture : standard_fixtures()) {
    auto rng = seeded(o.seed, 0x6EEEull + salt++);
    long long mismatches = 0;
    long long exchange_failures = 0;
    for (int s = 0; s < samples; ++s) {
      const WeightVector w =
          random_weight_vector(fixture.matroid.ground_size(), rng);
      const BasisFamily greedy = min_bases_greedy(fixture.matroid, w, o.budget);
      const BasisFamily brute =
          min_bases_bruteforce(fixture.matroid, w, o.budget);
      if (greedy.bases != brute.bases) ++mismatches;
      if (!verify_basis_exchange(greedy.bases)) ++exchange_failures;
    }
    r.checks.push_back(zero_failures(fixture.name + ": greedy equals argmin",
                                     mismatches,
                                     std::to_string(samples) + " weightings"));
    r.checks.push_back(zero_failures(
        fixture.name + ": outputs satisfy basis exchange", exchange_failures,
        std::to_string(samples) + " weightings"));
  }
  return r;
}

SuiteReport suite_product_law(const SuiteOptions& o) {
  SuiteReport r{"product-law", {}};
  const std::vector<Fixture> fixtures = {
      {"graphic K4", Matroid::complete_graph(4)},
      {"U(3,5)", Matroid::uniform(3, 5)}};
  for (const Fixture& fixture : fixtures) {
    long long mismatches = 0;
    long long valid = 0;
    for (const Flag& f : small_integer_flags(fixture.matroid.ground_size())) {
      if (!is_valid_flag(fixture.matroid, f, o.budget)) continue;
      ++valid;
      const std::size_t whole =
          matroid_of_flag(fixture.matroid, f, o.budget)
              .enumerate_bases(o.budget)
              .size();
      std::size_t product = 1;
      for (const Matroid& minor : decompose_minors(fixture.matroid, f)) {
        product *= minor.enumerate_bases(o.budget).size();
      }
      if (whole != product) ++mismatches;
    }
    r.checks.push_back(zero_failures(
        fixture.name + ": basis counts multiply over layers", mismatches,
        std::to_string(valid) + " valid flags"));
  }
  return r;
}

SuiteReport suite_membership(const SuiteOptions& o) {
  SuiteReport r{"membership", {}};
  std::vector<int> ns = {4, 5, 6};
  if (o.n > 0) ns = {o.n};
  const int samples = o.samples > 0 ? o.samples : 500;
  for (int n : ns) {
    const Matroid kn = Matroid::complete_graph(n);
    long long discrepancies = 0;
    long long ultrametric_count = 0;
    const std::vector<DissimilarityMap> deltas =
        membership_samples(n, samples, o.seed);
    for (const DissimilarityMap& d : deltas) {
      const EdgeWeighting w = delta_to_weights(d);
      const bool ultra = is_ultrametric(d);
      const bool tri = membership_triangle(w);
      const bool cyc = membership_cycle(w);
      const bool mst = membership_mst(w, o.budget);
      const bool fan = in_bergman_fan(kn, w.w, o.budget);
      if (ultra) ++ultrametric_count;
      if (!(ultra == tri && tri == cyc && cyc == mst && mst == fan)) {
        ++discrepancies;
      }
    }
    std::ostringstream context;
    context << deltas.size() << " maps at n=" << n << ", " << ultrametric_count
            << " ultrametric";
    r.checks.push_back(zero_failures(
        "five-way equivalence at n=" + std::to_string(n), discrepancies,
        context.str()));
  }
  return r;
}

SuiteReport suite_tree_roundtrip(const SuiteOptions& o) {
  SuiteReport r{"tree-roundtrip", {}};
  const int samples = o.samples > 0 ? o.samples : 500;
  const int max_n = o.max_n > 0 ? o.max_n : 7;
  long long tree_failures = 0;
  long long distance_failures = 0;
  const std::vector<EquidistantTree> trees =
      roundtrip_samples(samples, max_n, o.seed);
  for (const EquidistantTree& t : trees) {
    const DissimilarityMap d = tree_to_ultrametric(t);
    const EquidistantTree back = ultrametric_to_tree(d);
    if (!(back == t) || ranked_topology(back) != ranked_topology(t)) {
      ++tree_failures;
    }
    if (!(tree_to_ultrametric(back) == d)) ++distance_failures;
  }
  const std::string context = std::to_string(trees.size()) + " trees, up to " +
                              std::to_string(max_n) + " leaves";
  r.checks.push_back(
      zero_failures("trees survive the round trip", tree_failures, context));
  r.checks.push_back(zero_failures("distances survive the round trip",
                                   distance_failures, context));
  return r;
}

SuiteReport suite_cell_correspondence(const SuiteOptions& o) {
  SuiteReport r{"cell-correspondence", {}};
  std::vector<int> ns = {4, 5};
  if (o.n > 0) ns = {o.n};
  const int samples = o.samples > 0 ? o.samples : 200;
  for (int n : ns) {
    const Matroid kn = Matroid::complete_graph(n);
    long long coarse_failures = 0;
    long long fine_failures = 0;
    long long reconstruction_failures = 0;
    long long equal_unranked = 0;
    const auto pairs = correspondence_samples(n, samples, o.seed);
    for (const auto& [da, db] : pairs) {
      const EdgeWeighting wa = delta_to_weights(da);
      const EdgeWeighting wb = delta_to_weights(db);
      const BasisFamily fam_a = min_bases_greedy(kn, wa.w, o.budget);
      const BasisFamily fam_b = min_bases_greedy(kn, wb.w, o.budget);
      const EquidistantTree ta = ultrametric_to_tree(da);
      const EquidistantTree tb = ultrametric_to_tree(db);
      const bool same_unranked =
          unranked_topology(ta) == unranked_topology(tb);
      const bool same_ranked = ranked_topology(ta) == ranked_topology(tb);
      if (same_unranked) ++equal_unranked;
      if (same_unranked != (fam_a.bases == fam_b.bases)) ++coarse_failures;
      if (same_ranked != (flag_of(wa.w) == flag_of(wb.w))) ++fine_failures;
      if (topology_from_min_bases(n, fam_a) != unranked_topology(ta) ||
          topology_from_min_bases(n, fam_b) != unranked_topology(tb)) {
        ++reconstruction_failures;
      }
    }
    std::ostringstream context;
    context << pairs.size() << " pairs at n=" << n << ", " << equal_unranked
            << " with equal coarse type";
    r.checks.push_back(zero_failures(
        "coarse type matches minimum-basis family at n=" + std::to_string(n),
        coarse_failures, context.str()));
    r.checks.push_back(zero_failures(
        "fine type matches flag at n=" + std::to_string(n), fine_failures,
        context.str()));
    r.checks.push_back(zero_failures(
        "shape recovered from bases alone at n=" + std::to_string(n),
        reconstruction_failures, context.str()));
  }
  if (o.n == 0 || o.n == 4) {
    const auto [tied, untied] = tied_and_untied_pair();
    const Flag tied_flag = flag_of(delta_to_weights(tied).w);
    const bool flag_is_matching =
        tied_flag.num_proper() == 1 &&
        tied_flag.proper_sets().front() == Subset{1, 6};
    r.checks.push_back(expect_true(
        "tied pair of cherries lands on the matching flat",
        flag_is_matching, "flag through the pair-of-pairs level set"));
    const EquidistantTree tied_tree = ultrametric_to_tree(tied);
    const EquidistantTree untied_tree = ultrametric_to_tree(untied);
    r.checks.push_back(expect_true(
        "tie changes the fine type only",
        unranked_topology(tied_tree) == unranked_topology(untied_tree) &&
            ranked_topology(tied_tree) != ranked_topology(untied_tree),
        "equal shape, different height order"));
  }
  return r;
}

SuiteReport suite_mst_oracle(const SuiteOptions& o) {
  SuiteReport r{"mst-oracle", {}};
  long long mismatches = 0;
  long long total = 0;
  auto compare = [&](const DissimilarityMap& d) {
    const EdgeWeighting w = delta_to_weights(d);
    ++total;
    if (min_spanning_trees_bruteforce(w, o.budget) !=
        min_spanning_trees_reverse_delete(w, o.budget)) {
      ++mismatches;
    }
  };
  const int membership_count = o.samples > 0 ? o.samples : 500;
  for (int n : {4, 5, 6}) {
    for (const DissimilarityMap& d :
         membership_samples(n, membership_count, o.seed)) {
      compare(d);
    }
  }
  for (const EquidistantTree& t :
       roundtrip_samples(o.samples > 0 ? o.samples : 500, 7, o.seed)) {
    compare(tree_to_ultrametric(t));
  }
  for (int n : {4, 5}) {
    for (const auto& [da, db] :
         correspondence_samples(n, o.samples > 0 ? o.samples : 200, o.seed)) {
      compare(da);
      compare(db);
    }
  }
  r.checks.push_back(zero_failures(
      "cycle-breaking agrees with exhaustive search", mismatches,
      std::to_string(total) + " weightings"));
  return r;
}

using SuiteFunction = SuiteReport (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFunction>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFunction>> table = {
      {"k4-golden", suite_k4_golden},
      {"petersen", suite_petersen},
      {"mobius-partition", suite_mobius_partition},
      {"euler-mobius", suite_euler_mobius},
      {"flag-flats", suite_flag_flats},
      {"diamond", suite_diamond},
      {"greedy-oracle", suite_greedy_oracle},
      {"product-law", suite_product_law},
      {"membership", suite_membership},
      {"tree-roundtrip", suite_tree_roundtrip},
      {"cell-correspondence", suite_cell_correspondence},
      {"mst-oracle", suite_mst_oracle},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> result;
    for (const auto& [name, fn] : suite_table()) result.push_back(name);
    return result;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  for (const auto& [suite, fn] : suite_table()) {
    if (suite == name) return fn(options);
  }
  throw invalid_input("unknown suite \"" + name + "\"");
}

}  // namespace bergman
