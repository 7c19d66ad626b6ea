#pragma once

#include <vector>

#include "bergman/graphs.hpp"
#include "bergman/lattice.hpp"
#include "bergman/matroid.hpp"
#include "bergman/weights.hpp"

namespace bergman {

// Abstract simplicial complex whose vertices are labeled by flats and whose
// faces are chains. Faces are stored maximal-only; subsets are implied.
struct SimplicialComplex {
  std::vector<Subset> vertex_flats;
  std::vector<std::vector<int>> maximal_faces;  // ascending vertex indices

  int num_vertices() const { return static_cast<int>(vertex_flats.size()); }
  int dimension() const;  // -1 for the empty complex
  bool is_pure() const;
  bool is_connected() const;
  // counts of k-faces for k = 0..dimension, vertices included
  std::vector<long long> f_vector() const;
  // alternating face-count sum minus 1; -1 on the empty complex
  long long reduced_euler() const;
};

// Graph view of a complex of dimension <= 1.
SimpleGraph one_skeleton(const SimplicialComplex& sc);

// Chains of flats strictly between the bottom and the ground set. Empty
// complex when the matroid has loops or rank < 2.
SimplicialComplex order_complex_fine(
    const Matroid& m, std::size_t budget = kDefaultEnumerationBudget);

// Every chain of flats from the empty set to the full ground set, the
// length-zero chain included; no flags at all when the matroid has loops.
std::vector<Flag> valid_flags(const Matroid& m,
                              std::size_t budget = kDefaultEnumerationBudget);

// Valid flags with one flat of every rank 1..r-1.
std::vector<Flag> maximal_valid_flags(
    const Matroid& m, std::size_t budget = kDefaultEnumerationBudget);

// Four equivalent ways to detect that two adjacent maximal flags carry the
// same minimum-basis matroid. The flags must differ in exactly one position.
struct DiamondReport {
  bool same_min_bases = false;    // basis families of the two flags coincide
  bool drop_redundant = false;    // dropping the differing flat changes nothing
  bool union_spans_next = false;  // the two differing flats join to the next one
  bool interval_diamond = false;  // exactly two flats strictly between neighbors

  bool all_agree() const {
    return same_min_bases == drop_redundant &&
           drop_redundant == union_spans_next &&
           union_spans_next == interval_diamond;
  }
  bool all_true() const {
    return same_min_bases && drop_redundant && union_spans_next &&
           interval_diamond;
  }
};

DiamondReport diamond_equivalence(
    const Matroid& m, const Flag& f, const Flag& g,
    std::size_t budget = kDefaultEnumerationBudget);

// A class of valid flags sharing one minimum-basis family.
struct CoarseCell {
  std::vector<Flag> member_flags;  // sorted
  BasisFamily signature;

  // largest chain length among members, minus one
  int dimension() const;
};

// Groups all nontrivial valid flags by basis-family equality. Cells are
// sorted by their smallest member flag.
std::vector<CoarseCell> coarse_cells(
    const Matroid& m, std::size_t budget = kDefaultEnumerationBudget);

// For a rank-3 matroid: vertices are the 0-dimensional coarse cells, edges
// the 1-dimensional ones, incidence through the faces of member chains.
SimpleGraph coarse_graph(const std::vector<CoarseCell>& cells);

}  // namespace bergman
