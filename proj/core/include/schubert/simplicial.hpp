#pragma once

#include "schubert/groebner.hpp"
#include "schubert/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace schubert {

// A simplicial complex stored by its facet bitmasks over a fixed, sorted
// vertex list. Bit k of a mask is vertices()[k]. The void complex (no faces
// at all, the Stanley-Reisner complex of the unit ideal) has no facets; the
// complex {emptyset} has the single facet 0. Facet lists are maximalized,
// deduplicated and sorted, so equal complexes compare equal.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;    // void

    // Stanley-Reisner complex of a squarefree monomial ideal on the given
    // vertex set: faces are the subsets containing no generator's support.
    // Throws on non-squarefree input, on generators outside the vertex set,
    // and when 2^|vertices| exceeds subset_limit.
    static SimplicialComplex from_squarefree(const MonomialIdeal& ideal,
                                             const std::vector<Var>& vertices,
                                             std::size_t subset_limit = 1u << 18);
    static SimplicialComplex from_facets(std::vector<std::uint32_t> facets,
                                         std::vector<Var> vertices);

    const std::vector<Var>& vertices() const { return vertices_; }
    const std::vector<std::uint32_t>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const;    // exactly {emptyset}
    int dim() const;                  // -1 for {emptyset}, -2 for void
    bool is_pure() const;
    bool is_simplex() const;          // single facet (covers {emptyset})
    bool is_face(std::uint32_t mask) const;

    // Vertex indices that appear in some facet.
    std::vector<int> active_vertices() const;

    SimplicialComplex link(int vertex_index) const;
    SimplicialComplex deletion(int vertex_index) const;

    // Every face, ascending as masks. Test oracle; guarded like
    // from_squarefree.
    std::vector<std::uint32_t> all_faces(std::size_t subset_limit = 1u << 18) const;

    bool operator==(const SimplicialComplex&) const = default;

  private:
    std::vector<Var> vertices_;
    std::vector<std::uint32_t> facets_;
};

struct VDOptions {
    int vertex_limit = 18;
};

// The recursive definition, verbatim: a complex is vertex decomposable iff
// it is pure and is a simplex, or is void or {emptyset}, or has a vertex
// whose deletion and link are both vertex decomposable with dim(deletion) =
// dim(complex) = dim(link) + 1. Candidate vertices are tried in canonical
// (ascending index) order and results are memoized on the facet list.
bool is_vertex_decomposable(const SimplicialComplex& c, const VDOptions& opt = {});

// Height of a monomial ideal: the minimum transversal of the generator
// supports (branch and bound). finite=false marks the unit ideal.
struct Codim {
    bool finite = true;
    int value = 0;

    bool operator==(const Codim&) const = default;
};

Codim codimension(const MonomialIdeal& ideal);

}  // namespace schubert
