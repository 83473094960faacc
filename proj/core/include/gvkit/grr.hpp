#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gvkit/rational.hpp"

namespace gvkit::grr {

/* Intersection data of a Calabi-Yau threefold Y on the torsion-free parts:
 * named bases of H^2 and H^4, the (perfect) pairing H^2 x H^4 -> Z, the
 * symmetric triple product on H^2, and the coordinates of c2(T_Y) in the
 * H^4 basis. The point class is implicit and named "pt". */
struct CY3Data {
    std::vector<std::string> h2;
    std::vector<std::string> h4;
    std::vector<std::vector<Integer>> pairing;              // [h2][h4]
    std::vector<std::vector<std::vector<Integer>>> triple;  // [h2][h2][h2]
    std::vector<Integer> c2;                                // in the h4 basis

    void validate() const;  // shapes, symmetry, |det pairing| = 1
};

struct XGenerator {
    std::string name;
    int degree = 2;  // positive even
};

/* Everything needed to grade and multiply Kunneth classes: the free even
 * X-side generators and the Y-side intersection data. */
class GrrContext {
public:
    GrrContext(std::vector<XGenerator> xgens, CY3Data cy3);

    const std::vector<XGenerator>& x_generators() const { return xgens_; }
    const CY3Data& cy3() const { return cy3_; }

    bool is_x(const std::string& name) const;
    int x_degree(const std::string& name) const;
    bool is_y(const std::string& name) const;  // h2/h4 names and "pt"
    int y_degree(const std::string& name) const;
    std::size_t h2_index(const std::string& name) const;
    std::size_t h4_index(const std::string& name) const;

private:
    std::vector<XGenerator> xgens_;
    CY3Data cy3_;
    std::map<std::string, int> xdeg_;
    std::map<std::string, int> ydeg_;
};

/* Sorted (name, exponent >= 1) lists; the empty monomial is 1. */
using Monomial = std::vector<std::pair<std::string, int>>;

Monomial monomial_from_names(const std::vector<std::string>& names);

/* A rational combination of external products (X-monomial) x (Y-monomial)
 * on X x Y. Only even classes are modeled; the ring is commutative with no
 * Koszul signs. Y-monomials above degree 6 vanish (Y is a threefold) and
 * total degrees above 8 are cut: the degree-2 pushforward needs nothing
 * higher. */
class KunnethClass {
public:
    struct Term {
        Monomial x;
        Monomial y;
        friend auto operator<=>(const Term&, const Term&) = default;
    };

    KunnethClass() = default;
    static KunnethClass scalar(const Rational& c);

    void add_term(Monomial x, Monomial y, const Rational& coeff, const GrrContext& ctx);

    const std::map<Term, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const KunnethClass&, const KunnethClass&) = default;

private:
    std::map<Term, Rational> terms_;

    friend KunnethClass add(const KunnethClass&, const KunnethClass&);
    friend KunnethClass negate(const KunnethClass&);
    friend KunnethClass scale(const Rational&, const KunnethClass&);
    friend KunnethClass mul(const KunnethClass&, const KunnethClass&, const GrrContext&);
};

KunnethClass add(const KunnethClass& a, const KunnethClass& b);
KunnethClass sub(const KunnethClass& a, const KunnethClass& b);
KunnethClass negate(const KunnethClass& a);
KunnethClass scale(const Rational& c, const KunnethClass& a);
KunnethClass mul(const KunnethClass& a, const KunnethClass& b, const GrrContext& ctx);

int term_degree(const KunnethClass::Term& t, const GrrContext& ctx);
int term_y_degree(const KunnethClass::Term& t, const GrrContext& ctx);
KunnethClass degree_part(const KunnethClass& a, int degree, const GrrContext& ctx);
bool is_homogeneous(const KunnethClass& a, int degree, const GrrContext& ctx);

/* Chern input: rank, the Chern classes alpha_1..alpha_3 (degrees 2, 4, 6,
 * integral coordinates) and the degree-4 Chern-character component delta_4
 * (degree 8, rational coordinates, an independent input). */
struct ChernData {
    Integer rank = 0;
    KunnethClass alpha1;
    KunnethClass alpha2;
    KunnethClass alpha3;
    KunnethClass delta4;
};

void validate_chern(const ChernData& cd, const GrrContext& ctx);

/* r + a1 + (a1^2 - 2 a2)/2 + (a1^3 - 3 a1 a2 + 3 a3)/6 + d4, through total
 * degree 8. */
KunnethClass chern_character(const ChernData& cd, const GrrContext& ctx);

/* ch_i(E^dual) = (-1)^i ch_i(E): negates the parts of degree 2 mod 4. */
KunnethClass dual_character(const KunnethClass& ch, const GrrContext& ctx);

/* Multiply by td(Y) = 1 + c2(T_Y)/12 (Y side only). */
KunnethClass todd_multiply(const KunnethClass& ch, const GrrContext& ctx);

/* pi_*: the Y-point-class component of the total-degree-8 part, evaluated
 * with the CY3 tables (e*f pairings, e*e*e triple products). The result is
 * a rational combination of degree-2 X-generators. */
std::map<std::string, Rational> pushforward_c1(const KunnethClass& total, const GrrContext& ctx);

/* Whitney-sum replacement E -> F = E + det(E)^(-1): output has alpha1 = 0
 * and rank r + 1; the parity verdict is unchanged. */
ChernData det_twist_reduce(const ChernData& cd, const GrrContext& ctx);

struct ParityReport {
    std::map<std::string, Rational> c1;  // degree-2 X-generator -> coefficient
    bool integral = false;
    bool even = false;  // meaningful only when integral
    bool alpha1_zero = false;
    // Extras on the alpha1 = 0 path: c1 = int_Y alpha2^2 + 2r c1(pi_! E).
    std::optional<std::map<std::string, Rational>> int_alpha2_sq;
    std::optional<std::map<std::string, Rational>> c1_pi_shriek;
};

/* chern_character -> ch * dual(ch) -> Todd twist -> pushforward; asserts
 * every coefficient of c1 is an even integer. Non-integral coefficients
 * signal input outside the divisibility theorem's hypotheses: the report
 * carries integral = false and no parity verdict. */
ParityReport parity_check(const ChernData& cd, const GrrContext& ctx);

/* Genuine CY3 intersection lattices for fixtures and random corpora.
 * Arbitrary integer tables generically violate the Riemann-Roch
 * congruence int_Y (b^3/6 + b c2/12) in Z that actual threefolds satisfy,
 * so random Chern data is drawn over these. */
CY3Data quintic_cy3();      // h^2 rank 1: H^3 = 5,  c2.H = 50
CY3Data bicubic_cy3();      // h^2 rank 2: bidegree (3,3) in P^2 x P^2
CY3Data ci2222_cy3();       // h^2 rank 1: (2,2,2,2) in P^7

/* X side with a few generators of degree 2 and 4. */
GrrContext example_context(const CY3Data& cy3, int n_deg2 = 3, int n_deg4 = 2);

/* Chern data of a sum of line-bundle classes sum_i eps_i * L_i with random
 * integral first Chern classes, eps_i = +-1. Stays inside the theorem's
 * hypotheses by construction; delta4 is the honest rational ch_4. */
ChernData random_line_bundle_sum(std::mt19937_64& rng, const GrrContext& ctx, int max_summands);

/* Rank-zero data with alpha1 = 0 and arbitrary integral alpha2, alpha3,
 * delta4: the moduli-of-one-dimensional-sheaves shape, where evenness of
 * the pushforward is unconditional. */
ChernData random_rank_zero_data(std::mt19937_64& rng, const GrrContext& ctx);

/* Uniformly random integral class of the given degree (helper shared by
 * the generators and the Kunneth square tests). */
KunnethClass random_integral_class(std::mt19937_64& rng, const GrrContext& ctx, int degree,
                                   int max_coeff);

}  // namespace gvkit::grr
