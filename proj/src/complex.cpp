#include "bergman/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bergman/errors.hpp"

namespace bergman {

int SimplicialComplex::dimension() const {
  int dim = -1;
  for (const auto& face : maximal_faces) {
    dim = std::max(dim, static_cast<int>(face.size()) - 1);
  }
  return dim;
}

bool SimplicialComplex::is_pure() const {
  for (const auto& face : maximal_faces) {
    if (static_cast<int>(face.size()) - 1 != dimension()) return false;
  }
  return true;
}

bool SimplicialComplex::is_connected() const {
  if (num_vertices() <= 1) return true;
  UnionFind uf(num_vertices());
  for (const auto& face : maximal_faces) {
    for (std::size_t i = 1; i < face.size(); ++i) {
      uf.unite(face[0], face[i]);
    }
  }
  return uf.components() == 1;
}

std::vector<long long> SimplicialComplex::f_vector() const {
  std::set<std::vector<int>> faces;
  for (const auto& face : maximal_faces) {
    const std::size_t k = face.size();
    // all nonempty subsets; maximal faces here are tiny chains
    for (std::uint32_t bits = 1; bits < (1u << k); ++bits) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < k; ++i) {
        if (bits & (1u << i)) sub.push_back(face[i]);
      }
      faces.insert(std::move(sub));
    }
  }
  std::vector<long long> f(static_cast<std::size_t>(dimension() + 1), 0);
  for (const auto& face : faces) ++f[face.size() - 1];
  return f;
}

long long SimplicialComplex::reduced_euler() const {
  long long chi = -1;
  const auto f = f_vector();
  for (std::size_t k = 0; k < f.size(); ++k) {
    chi += k % 2 == 0 ? f[k] : -f[k];
  }
  return chi;
}

SimpleGraph one_skeleton(const SimplicialComplex& sc) {
  if (sc.dimension() > 1) {
    throw invalid_input("graph view requires a complex of dimension at most 1");
  }
  SimpleGraph g;
  g.num_vertices = sc.num_vertices();
  for (const auto& face : sc.maximal_faces) {
    if (face.size() == 2) g.add_edge(face[0], face[1]);
  }
  return g;
}

SimplicialComplex order_complex_fine(const Matroid& m, std::size_t budget) {
  SimplicialComplex sc;
  if (!m.loops().empty() || m.rank() < 2) return sc;
  const FlatLattice lattice = FlatLattice::of(m, budget);
  // proper flats, in lattice order; their chains are the faces
  std::vector<int> vertex_of(static_cast<std::size_t>(lattice.num_flats()),
                             -1);
  for (int i = lattice.bottom() + 1; i < lattice.top(); ++i) {
    vertex_of[static_cast<std::size_t>(i)] = sc.num_vertices();
    sc.vertex_flats.push_back(lattice.flat(i));
  }
  const int r = m.rank();
  std::vector<int> chain;
  auto extend = [&](auto&& self, int flat_idx) -> void {
    chain.push_back(vertex_of[static_cast<std::size_t>(flat_idx)]);
    if (lattice.rank_of_flat(flat_idx) == r - 1) {
      sc.maximal_faces.push_back(chain);
    } else {
      for (int up : lattice.covers()[static_cast<std::size_t>(flat_idx)]) {
        self(self, up);
      }
    }
    chain.pop_back();
  };
  for (int atom : lattice.flats_of_rank(1)) extend(extend, atom);
  std::sort(sc.maximal_faces.begin(), sc.maximal_faces.end());
  return sc;
}

std::vector<Flag> valid_flags(const Matroid& m, std::size_t budget) {
  std::vector<Flag> flags;
  if (!m.loops().empty()) return flags;
  const FlatLattice lattice = FlatLattice::of(m, budget);
  std::vector<Subset> chain;
  auto extend = [&](auto&& self, int from) -> void {
    flags.push_back(Flag::from_proper(m.ground_size(), chain));
    for (int next = from; next < lattice.top(); ++next) {
      if (chain.empty() ||
          lattice.flat(next).contains_all(chain.back())) {
        chain.push_back(lattice.flat(next));
        self(self, next + 1);
        chain.pop_back();
      }
    }
  };
  extend(extend, lattice.bottom() + 1);
  return flags;
}

std::vector<Flag> maximal_valid_flags(const Matroid& m, std::size_t budget) {
  std::vector<Flag> flags;
  for (const Flag& f : valid_flags(m, budget)) {
    if (f.num_proper() == m.rank() - 1) flags.push_back(f);
  }
  return flags;
}

DiamondReport diamond_equivalence(const Matroid& m, const Flag& f,
                                  const Flag& g, std::size_t budget) {
  if (f.ground_size() != m.ground_size() ||
      g.ground_size() != m.ground_size()) {
    throw invalid_input("flag and matroid ground sets differ");
  }
  const int expected = std::max(m.rank() - 1, 0);
  if (f.num_proper() != expected || g.num_proper() != expected) {
    throw invalid_input("diamond test requires maximal flags");
  }
  int differing = -1;
  for (int i = 1; i <= f.num_proper(); ++i) {
    if (f.chain()[static_cast<std::size_t>(i)] !=
        g.chain()[static_cast<std::size_t>(i)]) {
      if (differing != -1) {
        throw invalid_input(
            "diamond test requires flags differing in exactly one position");
      }
      differing = i;
    }
  }
  if (differing == -1) {
    throw invalid_input(
        "diamond test requires flags differing in exactly one position");
  }
  const Matroid mf = matroid_of_flag(m, f, budget);
  const Matroid mg = matroid_of_flag(m, g, budget);
  if (!mf.loops().empty() || !mg.loops().empty()) {
    throw invalid_input("diamond test requires valid flags");
  }
  DiamondReport report;
  const auto bases_f = mf.enumerate_bases(budget).bases;
  report.same_min_bases = bases_f == mg.enumerate_bases(budget).bases;
  report.drop_redundant =
      bases_f ==
      matroid_of_flag(m, f.dropping(differing), budget)
          .enumerate_bases(budget)
          .bases;
  const Subset& below = f.chain()[static_cast<std::size_t>(differing - 1)];
  const Subset& above = f.chain()[static_cast<std::size_t>(differing + 1)];
  const Subset& mid_f = f.chain()[static_cast<std::size_t>(differing)];
  const Subset& mid_g = g.chain()[static_cast<std::size_t>(differing)];
  report.union_spans_next = mid_f.unite(mid_g) == above;
  // the flats strictly between are the closures of one-element extensions
  std::set<Subset> middles;
  const Subset gap = above.subtract(below);
  for (int e : gap.elements()) {
    middles.insert(m.closure_of(below.with(e)));
  }
  report.interval_diamond = middles.size() == 2;
  return report;
}

int CoarseCell::dimension() const {
  int dim = -1;
  for (const Flag& f : member_flags) {
    dim = std::max(dim, f.num_proper() - 1);
  }
  return dim;
}

std::vector<CoarseCell> coarse_cells(const Matroid& m, std::size_t budget) {
  std::map<std::set<Subset>, std::vector<Flag>> by_signature;
  for (const Flag& f : valid_flags(m, budget)) {
    if (f.num_proper() == 0) continue;  // lineality direction, not a cell
    by_signature[matroid_of_flag(m, f, budget).enumerate_bases(budget).bases]
        .push_back(f);
  }
  std::vector<CoarseCell> cells;
  cells.reserve(by_signature.size());
  for (auto& [signature, members] : by_signature) {
    CoarseCell cell;
    std::sort(members.begin(), members.end());
    cell.member_flags = std::move(members);
    cell.signature.rank = m.rank();
    cell.signature.bases = signature;
    cells.push_back(std::move(cell));
  }
  std::sort(cells.begin(), cells.end(),
            [](const CoarseCell& a, const CoarseCell& b) {
              return a.member_flags.front() < b.member_flags.front();
            });
  return cells;
}

SimpleGraph coarse_graph(const std::vector<CoarseCell>& cells) {
  std::map<Flag, int> cell_of;
  std::vector<int> vertex_cell_index(cells.size(), -1);
  SimpleGraph g;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].dimension() > 1) {
      throw invalid_input("graph view requires cells of dimension at most 1");
    }
    for (const Flag& f : cells[c].member_flags) {
      cell_of[f] = static_cast<int>(c);
    }
    if (cells[c].dimension() == 0) {
      vertex_cell_index[c] = g.num_vertices++;
    }
  }
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].dimension() != 1) continue;
    std::set<int> endpoints;
    for (const Flag& f : cells[c].member_flags) {
      if (f.num_proper() != 2) continue;
      for (int i = 1; i <= 2; ++i) {
        const int other = cell_of.at(f.dropping(i == 1 ? 2 : 1));
        if (other != static_cast<int>(c)) endpoints.insert(other);
      }
    }
    if (endpoints.size() != 2) {
      throw invalid_input("coarse cell does not bound two vertex cells");
    }
    const auto it = endpoints.begin();
    const int a = vertex_cell_index[static_cast<std::size_t>(*it)];
    const int b = vertex_cell_index[static_cast<std::size_t>(*std::next(it))];
    if (a < 0 || b < 0) {
      throw invalid_input("coarse cell does not bound two vertex cells");
    }
    g.add_edge(a, b);
  }
  return g;
}

}  // namespace bergman
