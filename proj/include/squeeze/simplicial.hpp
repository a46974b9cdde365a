#ifndef SQUEEZE_SIMPLICIAL_HPP
#define SQUEEZE_SIMPLICIAL_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "squeeze/ideal.hpp"
#include "squeeze/monomial.hpp"

namespace squeeze {

// Faces are encoded as bitmasks: bit v-1 set means vertex v is in the face.
using FaceMask = std::uint64_t;

std::vector<int> mask_to_vertices(FaceMask mask);
FaceMask vertices_to_mask(const std::vector<int>& verts);

struct FHGVectors {
    std::vector<long long> f;  // f_0 .. f_{d-1}
    std::vector<long long> h;  // h_0 .. h_d
    std::vector<long long> g;  // g_0 .. g_{floor(d/2)}
};

// Simplicial complex on the vertex set [n], stored by its facets.
// By convention every singleton {j}, j in [n], is a face; intermediate
// objects (restrictions, boundaries) may relax this check.
class SimplicialComplex {
public:
    static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& facets,
                                         bool relaxed = false);
    static SimplicialComplex from_facet_masks(int n, std::vector<FaceMask> facets,
                                              bool relaxed = false);

    int vertex_count() const { return n_; }
    // -1 for the empty complex {emptyset}.
    int dimension() const;
    bool is_pure() const;

    const std::vector<FaceMask>& facet_masks() const { return facets_; }
    std::vector<std::vector<int>> facets() const;

    bool is_face(FaceMask s) const;
    bool is_face(const std::vector<int>& verts) const;

    // All faces of the given cardinality.
    std::vector<FaceMask> faces_of_size(int k) const;
    long long face_count(int k) const;

    bool operator==(const SimplicialComplex& rhs) const {
        return n_ == rhs.n_ && facets_ == rhs.facets_;
    }

private:
    int n_ = 0;
    std::vector<FaceMask> facets_;  // inclusion-maximal, sorted by mask value
};

FHGVectors fhg_vectors(const SimplicialComplex& complex);

// Minimal non-faces as squarefree monomials.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);

// Inverse translation: faces are the subsets S with x_S not in the ideal.
SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal, int n, bool relaxed = false);

// Complex generated by the codimension-1 faces lying in exactly one facet.
// Correct for pseudomanifolds with boundary, which covers shellable balls.
SimplicialComplex boundary_of_pure(const SimplicialComplex& complex);

// Cone over the complex with apex n+1.
SimplicialComplex cone(const SimplicialComplex& complex, int apex);

bool is_shifted(const SimplicialComplex& complex);

// Hochster's formula: beta_{i,j}(I_Gamma) as the sum over j-subsets of the
// ranks of reduced homology of induced subcomplexes, over the rationals.
// Guarded at n <= 14.
BettiTable betti_hochster(const SimplicialComplex& complex);

// Reduced rational Betti numbers b~_{-1} .. b~_{dim} of the complex whose
// faces are given (the empty face is implicit).  Exposed for tests.
std::vector<long long> reduced_homology_ranks(const std::vector<FaceMask>& faces);

}  // namespace squeeze

#endif
