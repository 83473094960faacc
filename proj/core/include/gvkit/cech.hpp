#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gvkit/rational.hpp"

namespace gvkit::cech {

/* A face is a sorted list of vertex indices. */
using Face = std::vector<int>;

/* Finite simplicial model of a cover: vertices are the cover elements,
 * k-element faces are the nonempty k-fold overlaps (k <= 4; nothing above
 * quadruple overlaps is needed for a 2-cocycle). Downward closure is
 * validated on construction. */
class Nerve {
public:
    Nerve(std::vector<std::string> vertices, const std::vector<Face>& pairs,
          const std::vector<Face>& triples, const std::vector<Face>& quads);

    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }

    /* Faces with the given number of vertices (1 to 4); singletons are the
     * vertices themselves. */
    const std::vector<Face>& faces(int nverts) const;

    std::optional<int> vertex_index(const std::string& name) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Face> faces_[4];  // by nverts - 1, each sorted
    std::map<Face, std::size_t> index_[4];

    friend std::optional<std::size_t> face_index(const Nerve&, int, const Face&);
};

std::optional<std::size_t> face_index(const Nerve& nerve, int nverts, const Face& f);

/* F2-valued k-cochain: one bit per k-face (k-faces have k+1 vertices).
 * Multiplicatively the bit 1 is the sign -1. */
struct Cochain {
    int dim = 0;
    std::map<Face, int> values;  // keys are exactly the (dim+1)-vertex faces
};

Cochain zero_cochain(const Nerve& nerve, int dim);

/* (delta c)(f) = sum of c over the codimension-1 subfaces of f, in F2. */
Cochain coboundary(const Nerve& nerve, const Cochain& c);

/* delta sigma = 0 on every quadruple face. */
bool is_cocycle(const Nerve& nerve, const Cochain& sigma);

struct Obstruction {
    bool trivial = false;
    std::optional<Cochain> witness;  // a 1-cochain with delta tau = sigma
};

/* Solves delta tau = sigma by F2 elimination; trivial iff solvable. The
 * witness is the gluing data; any two witnesses differ by a 1-cocycle. */
Obstruction obstruction_class(const Nerve& nerve, const Cochain& sigma);

/* |H^1(N; F2)| = 2^(dim ker delta^1 - rank delta^0): the number of
 * inequivalent square roots (2-torsion twists). */
Integer torsor_count(const Nerve& nerve);

struct TransitionCocycle {
    Cochain sigma;
    bool consistent = false;  // passes is_cocycle
};

/* sigma(abc) = d(ab) + d(bc) + d(ac) + correction(abc) over F2, the sign of
 * the determinant of a transition loop composed with the supplied triple
 * correction. Signs are +-1; missing faces default to +1. Inconsistent
 * data (delta sigma != 0) is flagged, never silently accepted. */
TransitionCocycle transition_sign_cocycle(const Nerve& nerve, const std::map<Face, int>& pair_signs,
                                          const std::map<Face, int>& triple_signs);

}  // namespace gvkit::cech
