#include "squeeze/simplicial.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace squeeze {

std::vector<int> mask_to_vertices(FaceMask mask) {
    std::vector<int> verts;
    for (int v = 1; mask; ++v, mask >>= 1)
        if (mask & 1) verts.push_back(v);
    return verts;
}

FaceMask vertices_to_mask(const std::vector<int>& verts) {
    FaceMask mask = 0;
    for (int v : verts) {
        if (v < 1 || v > 63) throw std::out_of_range("vertex out of range");
        mask |= FaceMask{1} << (v - 1);
    }
    return mask;
}

SimplicialComplex SimplicialComplex::from_facets(int n,
                                                 const std::vector<std::vector<int>>& facets,
                                                 bool relaxed) {
    std::vector<FaceMask> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets) masks.push_back(vertices_to_mask(f));
    return from_facet_masks(n, std::move(masks), relaxed);
}

SimplicialComplex SimplicialComplex::from_facet_masks(int n, std::vector<FaceMask> facets,
                                                      bool relaxed) {
    if (n < 0 || n > 62) throw std::out_of_range("vertex count out of range");
    const FaceMask full = n == 0 ? 0 : (FaceMask{1} << n) - 1;
    FaceMask covered = 0;
    for (FaceMask f : facets) {
        if (f & ~full) throw std::out_of_range("vertex out of range");
        covered |= f;
    }
    if (!relaxed && covered != full)
        throw std::invalid_argument("every vertex of [n] must be a face");

    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<FaceMask> maximal;
    for (FaceMask f : facets) {
        bool contained = false;
        for (FaceMask g : facets)
            if (f != g && (f & ~g) == 0) {
                contained = true;
                break;
            }
        if (!contained) maximal.push_back(f);
    }

    SimplicialComplex c;
    c.n_ = n;
    c.facets_ = std::move(maximal);
    return c;
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (FaceMask f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
}

bool SimplicialComplex::is_pure() const {
    for (FaceMask f : facets_)
        if (std::popcount(f) != dimension() + 1) return false;
    return true;
}

std::vector<std::vector<int>> SimplicialComplex::facets() const {
    std::vector<std::vector<int>> out;
    out.reserve(facets_.size());
    for (FaceMask f : facets_) out.push_back(mask_to_vertices(f));
    std::sort(out.begin(), out.end());
    return out;
}

bool SimplicialComplex::is_face(FaceMask s) const {
    for (FaceMask f : facets_)
        if ((s & ~f) == 0) return true;
    return false;
}

bool SimplicialComplex::is_face(const std::vector<int>& verts) const {
    return is_face(vertices_to_mask(verts));
}

namespace {

void subsets_of_size(FaceMask set, int k, FaceMask acc, int lowest_bit,
                     std::set<FaceMask>& out) {
    if (k == 0) {
        out.insert(acc);
        return;
    }
    for (int b = lowest_bit; b < 64; ++b) {
        FaceMask bit = FaceMask{1} << b;
        if (bit > set) break;
        if (set & bit) subsets_of_size(set, k - 1, acc | bit, b + 1, out);
    }
}

}  // namespace

std::vector<FaceMask> SimplicialComplex::faces_of_size(int k) const {
    std::set<FaceMask> out;
    if (k == 0) {
        out.insert(0);
    } else if (k > 0) {
        for (FaceMask f : facets_)
            if (std::popcount(f) >= k) subsets_of_size(f, k, 0, 0, out);
    }
    return {out.begin(), out.end()};
}

long long SimplicialComplex::face_count(int k) const {
    return static_cast<long long>(faces_of_size(k).size());
}

FHGVectors fhg_vectors(const SimplicialComplex& complex) {
    FHGVectors v;
    int d = complex.dimension() + 1;
    for (int k = 1; k <= d; ++k) v.f.push_back(complex.face_count(k));

    auto f_at = [&](int idx) -> long long {  // f_{idx-1} with f_{-1} = 1
        if (idx == 0) return 1;
        return v.f[idx - 1];
    };
    for (int i = 0; i <= d; ++i) {
        long long h = 0;
        for (int j = 0; j <= i; ++j) {
            long long term = binomial(d - j, d - i) * f_at(j);
            h += ((i - j) % 2 == 0) ? term : -term;
        }
        v.h.push_back(h);
    }
    v.g.push_back(1);
    for (int i = 1; i <= d / 2; ++i) v.g.push_back(v.h[i] - v.h[i - 1]);
    return v;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
    int n = complex.vertex_count();
    if (!complex.is_face(FaceMask{0}))  // void complex
        return MonomialIdeal({Monomial::unit()});
    std::vector<Monomial> gens;
    // Minimal non-faces, by increasing cardinality.
    for (int k = 1; k <= n; ++k) {
        std::set<FaceMask> candidates;
        FaceMask full = (FaceMask{1} << n) - 1;
        subsets_of_size(full, k, 0, 0, candidates);
        for (FaceMask s : candidates) {
            if (complex.is_face(s)) continue;
            bool all_proper_faces = true;
            for (int b = 0; b < n && all_proper_faces; ++b) {
                FaceMask bit = FaceMask{1} << b;
                if ((s & bit) && !complex.is_face(s & ~bit)) all_proper_faces = false;
            }
            if (all_proper_faces) gens.push_back(Monomial::from_index_sequence(mask_to_vertices(s)));
        }
    }
    return minimalize(std::move(gens));
}

SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal, int n, bool relaxed) {
    if (n < 0 || n > 24) throw std::out_of_range("complex_of_ideal: vertex count too large");
    for (const auto& g : ideal.generators()) {
        if (!g.is_squarefree()) throw std::invalid_argument("non-squarefree generator");
        if (!g.is_unit() && g.max_index() > n) throw std::out_of_range("generator index exceeds n");
    }
    std::vector<FaceMask> gen_masks;
    for (const auto& g : ideal.generators()) {
        FaceMask m = 0;
        for (auto [i, e] : g.exponents()) m |= FaceMask{1} << (i - 1);
        gen_masks.push_back(m);
    }

    // Faces are the subsets containing no generator's support.
    std::vector<FaceMask> faces;
    FaceMask full = n == 0 ? 0 : (FaceMask{1} << n) - 1;
    for (FaceMask s = 0; ; ++s) {
        bool in_ideal = false;
        for (FaceMask g : gen_masks)
            if ((g & ~s) == 0) {
                in_ideal = true;
                break;
            }
        if (!in_ideal) faces.push_back(s);
        if (s == full) break;
    }
    // Keep the maximal ones.
    std::vector<FaceMask> facets;
    for (FaceMask s : faces) {
        bool maximal = true;
        for (int b = 0; b < n && maximal; ++b) {
            FaceMask bigger = s | (FaceMask{1} << b);
            if (bigger == s) continue;
            bool bigger_is_face = true;
            for (FaceMask g : gen_masks)
                if ((g & ~bigger) == 0) {
                    bigger_is_face = false;
                    break;
                }
            if (bigger_is_face) maximal = false;
        }
        if (maximal) facets.push_back(s);
    }
    return SimplicialComplex::from_facet_masks(n, std::move(facets), relaxed);
}

SimplicialComplex boundary_of_pure(const SimplicialComplex& complex) {
    if (!complex.is_pure()) throw std::invalid_argument("boundary requires a pure complex");
    std::map<FaceMask, int> ridge_count;
    for (FaceMask f : complex.facet_masks()) {
        for (int b = 0; b < 64; ++b) {
            FaceMask bit = FaceMask{1} << b;
            if (bit > f) break;
            if (f & bit) ridge_count[f & ~bit]++;
        }
    }
    std::vector<FaceMask> boundary;
    for (const auto& [ridge, count] : ridge_count)
        if (count == 1) boundary.push_back(ridge);
    return SimplicialComplex::from_facet_masks(complex.vertex_count(), std::move(boundary),
                                               /*relaxed=*/true);
}

SimplicialComplex cone(const SimplicialComplex& complex, int apex) {
    if (apex != complex.vertex_count() + 1)
        throw std::invalid_argument("cone apex must be n+1");
    FaceMask apex_bit = FaceMask{1} << (apex - 1);
    std::vector<FaceMask> facets;
    facets.reserve(complex.facet_masks().size());
    for (FaceMask f : complex.facet_masks()) facets.push_back(f | apex_bit);
    if (facets.empty()) facets.push_back(apex_bit);
    return SimplicialComplex::from_facet_masks(apex, std::move(facets));
}

bool is_shifted(const SimplicialComplex& complex) {
    return is_squarefree_strongly_stable(stanley_reisner_ideal(complex));
}

namespace {

// Rank of an integer matrix by fraction-free (Bareiss) elimination, with a
// preference for +-1 pivots to limit entry growth.
int rank_bareiss(std::vector<std::vector<mpz_class>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    mpz_class prev(1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = rows;
        for (size_t i = r; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            if (pivot == rows) pivot = i;
            if (m[i][c] == 1 || m[i][c] == -1) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                mpz_class num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace

std::vector<long long> reduced_homology_ranks(const std::vector<FaceMask>& faces) {
    int dim = -1;
    std::map<int, std::vector<FaceMask>> by_size;  // cardinality -> faces
    for (FaceMask f : faces) {
        int k = std::popcount(f);
        by_size[k].push_back(f);
        dim = std::max(dim, k - 1);
    }
    by_size[0] = {0};  // the empty face
    for (auto& [k, v] : by_size) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    // boundary_rank[k] = rank of d_k : C_{k-1-faces of size k+1}... indexed by
    // cardinality: map from size-(k) chains to size-(k-1) chains, k >= 1.
    std::vector<int> boundary_rank(dim + 3, 0);
    for (int k = 1; k <= dim + 1; ++k) {
        const auto& domain = by_size[k];
        const auto& codomain = by_size[k - 1];
        if (domain.empty() || codomain.empty()) continue;
        std::map<FaceMask, int> codomain_index;
        for (size_t i = 0; i < codomain.size(); ++i) codomain_index[codomain[i]] = static_cast<int>(i);
        std::vector<std::vector<mpz_class>> mat(domain.size(),
                                                std::vector<mpz_class>(codomain.size(), 0));
        for (size_t col = 0; col < domain.size(); ++col) {
            FaceMask f = domain[col];
            int sign = 1;
            for (int b = 0; b < 64; ++b) {
                FaceMask bit = FaceMask{1} << b;
                if (bit > f) break;
                if (f & bit) {
                    auto it = codomain_index.find(f & ~bit);
                    if (it == codomain_index.end())
                        throw std::logic_error("face set not closed under taking subsets");
                    mat[col][it->second] = sign;
                    sign = -sign;
                }
            }
        }
        boundary_rank[k] = rank_bareiss(std::move(mat));
    }

    std::vector<long long> ranks;  // b~_{-1}, b~_0, ..., b~_dim
    for (int q = -1; q <= dim; ++q) {
        long long chains = static_cast<long long>(by_size[q + 1].size());
        ranks.push_back(chains - boundary_rank[q + 1] - boundary_rank[q + 2]);
    }
    return ranks;
}

BettiTable betti_hochster(const SimplicialComplex& complex) {
    int n = complex.vertex_count();
    if (n > 14) throw std::out_of_range("betti_hochster guarded at n <= 14");

    // Collect all faces once; restrictions filter by mask.
    std::vector<FaceMask> all_faces;
    for (int k = 1; k <= complex.dimension() + 1; ++k) {
        auto fs = complex.faces_of_size(k);
        all_faces.insert(all_faces.end(), fs.begin(), fs.end());
    }

    BettiTable table;
    FaceMask full = n == 0 ? 0 : (FaceMask{1} << n) - 1;
    for (FaceMask sigma = 1; sigma <= full && full != 0; ++sigma) {
        int j = std::popcount(sigma);
        std::vector<FaceMask> restricted;
        for (FaceMask f : all_faces)
            if ((f & ~sigma) == 0) restricted.push_back(f);
        auto ranks = reduced_homology_ranks(restricted);
        // ranks[q+1] = b~_q; contribution to beta_{i, j} with q = j - i - 2.
        for (int q = -1; q < static_cast<int>(ranks.size()) - 1; ++q) {
            long long r = ranks[q + 1];
            if (r == 0) continue;
            int i = j - q - 2;
            if (i >= 0) table.add(i, j, r);
        }
    }
    return table;
}

}  // namespace squeeze
