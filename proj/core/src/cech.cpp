#include "gvkit/cech.hpp"

#include <algorithm>
#include <cstdint>

#include "gvkit/errors.hpp"

namespace gvkit::cech {

namespace {

std::string face_str(const Face& f, const std::vector<std::string>& names) {
    std::string out = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ",";
        out += (f[i] >= 0 && f[i] < static_cast<int>(names.size())) ? names[f[i]]
                                                                    : std::to_string(f[i]);
    }
    return out + "}";
}

/* Dense F2 matrix rows as 64-bit blocks, with an optional right-hand side
 * bit per row. */
class GF2System {
public:
    GF2System(std::size_t rows, std::size_t cols)
        : cols_(cols), words_((cols + 63) / 64), rows_(rows, std::vector<std::uint64_t>(words_, 0)),
          rhs_(rows, 0) {}

    void set(std::size_t r, std::size_t c) { rows_[r][c / 64] ^= std::uint64_t(1) << (c % 64); }
    void set_rhs(std::size_t r, int v) { rhs_[r] = v & 1; }

    /* Row-reduce; returns rank. If solve is set, also decides consistency
     * and fills a particular solution. */
    std::size_t eliminate(bool solve, bool* consistent, std::vector<int>* solution) {
        std::size_t rank = 0;
        std::vector<std::size_t> pivot_col;
        for (std::size_t c = 0; c < cols_ && rank < rows_.size(); ++c) {
            std::size_t p = rank;
            while (p < rows_.size() && !bit(p, c)) ++p;
            if (p == rows_.size()) continue;
            std::swap(rows_[rank], rows_[p]);
            std::swap(rhs_[rank], rhs_[p]);
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                if (r != rank && bit(r, c)) {
                    for (std::size_t w = 0; w < words_; ++w) rows_[r][w] ^= rows_[rank][w];
                    rhs_[r] ^= rhs_[rank];
                }
            }
            pivot_col.push_back(c);
            ++rank;
        }
        if (solve) {
            *consistent = true;
            for (std::size_t r = rank; r < rows_.size(); ++r) {
                if (rhs_[r]) {
                    *consistent = false;
                    break;
                }
            }
            if (*consistent && solution) {
                solution->assign(cols_, 0);
                for (std::size_t r = 0; r < rank; ++r) {
                    (*solution)[pivot_col[r]] = rhs_[r];
                }
            }
        }
        return rank;
    }

private:
    bool bit(std::size_t r, std::size_t c) const {
        return (rows_[r][c / 64] >> (c % 64)) & 1;
    }

    std::size_t cols_, words_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<int> rhs_;
};

/* Coboundary matrix from k-faces (columns) to (k+1)-faces (rows). */
GF2System coboundary_system(const Nerve& nerve, int k) {
    const std::vector<Face>& lo = nerve.faces(k + 1);
    const std::vector<Face>& hi = nerve.faces(k + 2);
    GF2System sys(hi.size(), lo.size());
    for (std::size_t r = 0; r < hi.size(); ++r) {
        Face sub = hi[r];
        for (std::size_t drop = 0; drop < hi[r].size(); ++drop) {
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
            auto idx = face_index(nerve, k + 1, sub);
            if (!idx) throw NerveError("missing subface during coboundary assembly");
            sys.set(r, *idx);
            sub = hi[r];
        }
    }
    return sys;
}

}  // namespace

Nerve::Nerve(std::vector<std::string> vertices, const std::vector<Face>& pairs,
             const std::vector<Face>& triples, const std::vector<Face>& quads)
    : vertices_(std::move(vertices)) {
    faces_[0].reserve(vertices_.size());
    for (int v = 0; v < static_cast<int>(vertices_.size()); ++v) faces_[0].push_back({v});

    const std::vector<Face>* input[3] = {&pairs, &triples, &quads};
    for (int size = 2; size <= 4; ++size) {
        std::set<Face> seen;
        for (Face f : *input[size - 2]) {
            std::sort(f.begin(), f.end());
            if (static_cast<int>(f.size()) != size ||
                std::adjacent_find(f.begin(), f.end()) != f.end()) {
                throw NerveError("face " + face_str(f, vertices_) + " is not a " +
                                 std::to_string(size) + "-element set");
            }
            if (f.front() < 0 || f.back() >= static_cast<int>(vertices_.size())) {
                throw NerveError("face " + face_str(f, vertices_) + " references unknown vertex");
            }
            seen.insert(std::move(f));
        }
        faces_[size - 1].assign(seen.begin(), seen.end());
    }
    for (int size = 1; size <= 4; ++size) {
        for (std::size_t i = 0; i < faces_[size - 1].size(); ++i) {
            index_[size - 1][faces_[size - 1][i]] = i;
        }
    }
    // Downward closure: every (size-1)-subset of a face is a face.
    for (int size = 3; size <= 4; ++size) {
        for (const Face& f : faces_[size - 1]) {
            Face sub = f;
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
                if (!index_[size - 2].count(sub)) {
                    throw NerveError("downward closure violated: " + face_str(f, vertices_) +
                                     " present but " + face_str(sub, vertices_) + " missing");
                }
                sub = f;
            }
        }
    }
}

const std::vector<Face>& Nerve::faces(int nverts) const {
    if (nverts < 1 || nverts > 4) throw NerveError("face size out of range");
    return faces_[nverts - 1];
}

std::optional<int> Nerve::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i] == name) return static_cast<int>(i);
    }
    return std::nullopt;
}

std::optional<std::size_t> face_index(const Nerve& nerve, int nverts, const Face& f) {
    const auto& idx = nerve.index_[nverts - 1];
    auto it = idx.find(f);
    if (it == idx.end()) return std::nullopt;
    return it->second;
}

Cochain zero_cochain(const Nerve& nerve, int dim) {
    if (dim < 0 || dim > 3) throw NerveError("cochain dimension out of range");
    Cochain c{dim, {}};
    for (const Face& f : nerve.faces(dim + 1)) c.values[f] = 0;
    return c;
}

Cochain coboundary(const Nerve& nerve, const Cochain& c) {
    if (c.dim >= 3) throw NerveError("no faces above quadruples");
    Cochain out = zero_cochain(nerve, c.dim + 1);
    for (auto& [f, v] : out.values) {
        int sum = 0;
        Face sub = f;
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
            auto it = c.values.find(sub);
            if (it == c.values.end()) throw NerveError("cochain not defined on a subface");
            sum ^= it->second & 1;
            sub = f;
        }
        v = sum;
    }
    return out;
}

bool is_cocycle(const Nerve& nerve, const Cochain& sigma) {
    if (sigma.dim != 2) throw NerveError("is_cocycle expects a 2-cochain");
    Cochain d = coboundary(nerve, sigma);
    for (const auto& [f, v] : d.values) {
        if (v) return false;
    }
    return true;
}

Obstruction obstruction_class(const Nerve& nerve, const Cochain& sigma) {
    if (!is_cocycle(nerve, sigma)) throw NerveError("obstruction_class needs a 2-cocycle");
    const std::vector<Face>& edges = nerve.faces(2);
    const std::vector<Face>& tris = nerve.faces(3);
    GF2System sys = coboundary_system(nerve, 1);
    for (std::size_t r = 0; r < tris.size(); ++r) {
        auto it = sigma.values.find(tris[r]);
        sys.set_rhs(r, it == sigma.values.end() ? 0 : it->second);
    }
    bool consistent = false;
    std::vector<int> solution;
    sys.eliminate(true, &consistent, &solution);
    Obstruction out;
    out.trivial = consistent;
    if (consistent) {
        Cochain tau = zero_cochain(nerve, 1);
        for (std::size_t i = 0; i < edges.size(); ++i) tau.values[edges[i]] = solution[i];
        out.witness = std::move(tau);
    }
    return out;
}

Integer torsor_count(const Nerve& nerve) {
    std::size_t edges = nerve.faces(2).size();
    GF2System d0 = coboundary_system(nerve, 0);
    GF2System d1 = coboundary_system(nerve, 1);
    std::size_t rank0 = d0.eliminate(false, nullptr, nullptr);
    std::size_t rank1 = d1.eliminate(false, nullptr, nullptr);
    std::size_t h1 = edges - rank1 - rank0;
    Integer out = 1;
    out <<= h1;
    return out;
}

TransitionCocycle transition_sign_cocycle(const Nerve& nerve, const std::map<Face, int>& pair_signs,
                                          const std::map<Face, int>& triple_signs) {
    auto f2_of_sign = [&](const std::map<Face, int>& signs, const Face& f, int nverts) -> int {
        Face key = f;
        std::sort(key.begin(), key.end());
        auto it = signs.find(key);
        if (it == signs.end()) return 0;  // +1
        if (it->second != 1 && it->second != -1) {
            throw NerveError("sign for " + face_str(key, nerve.vertices()) + " must be +-1");
        }
        if (!face_index(nerve, nverts, key)) {
            throw NerveError("sign given for unknown face " + face_str(key, nerve.vertices()));
        }
        return it->second == -1 ? 1 : 0;
    };
    for (const auto& entry : pair_signs) (void)f2_of_sign(pair_signs, entry.first, 2);
    for (const auto& entry : triple_signs) (void)f2_of_sign(triple_signs, entry.first, 3);

    TransitionCocycle out;
    out.sigma = zero_cochain(nerve, 2);
    for (auto& [f, v] : out.sigma.values) {
        int acc = f2_of_sign(triple_signs, f, 3);
        Face sub = f;
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
            acc ^= f2_of_sign(pair_signs, sub, 2);
            sub = f;
        }
        v = acc;
    }
    out.consistent = is_cocycle(nerve, out.sigma);
    return out;
}

}  // namespace gvkit::cech
