#include "gvkit/grr.hpp"

#include <algorithm>

#include "gvkit/errors.hpp"

namespace gvkit::grr {

namespace {

/* Exact integer determinant (Bareiss). */
Integer det_integer(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return Integer(sign) * m[n - 1][n - 1];
}

Monomial mul_monomials(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

std::vector<std::string> flatten(const Monomial& m) {
    std::vector<std::string> out;
    for (const auto& [name, exp] : m) {
        for (int i = 0; i < exp; ++i) out.push_back(name);
    }
    return out;
}

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

Integer pick_coeff(std::mt19937_64& rng, int max_coeff) {
    return Integer(static_cast<long long>(pick(rng, 2 * max_coeff + 1)) - max_coeff);
}

}  // namespace

void CY3Data::validate() const {
    if (h2.size() != h4.size()) {
        throw Error("pairing must be square: rank H^2 = rank H^4 on the torsion-free parts");
    }
    if (pairing.size() != h2.size()) throw Error("pairing has wrong row count");
    for (const auto& row : pairing) {
        if (row.size() != h4.size()) throw Error("pairing has wrong column count");
    }
    Integer det = det_integer(pairing);
    if (det != 1 && det != -1) {
        throw Error("pairing matrix is not unimodular (det = " + det.str() + ")");
    }
    if (triple.size() != h2.size()) throw Error("triple product has wrong shape");
    for (std::size_t i = 0; i < h2.size(); ++i) {
        if (triple[i].size() != h2.size()) throw Error("triple product has wrong shape");
        for (std::size_t j = 0; j < h2.size(); ++j) {
            if (triple[i][j].size() != h2.size()) throw Error("triple product has wrong shape");
        }
    }
    for (std::size_t i = 0; i < h2.size(); ++i) {
        for (std::size_t j = 0; j < h2.size(); ++j) {
            for (std::size_t k = 0; k < h2.size(); ++k) {
                const Integer& v = triple[i][j][k];
                if (v != triple[j][i][k] || v != triple[i][k][j]) {
                    throw Error("triple product is not symmetric");
                }
            }
        }
    }
    if (c2.size() != h4.size()) throw Error("c2 has wrong length");
}

GrrContext::GrrContext(std::vector<XGenerator> xgens, CY3Data cy3)
    : xgens_(std::move(xgens)), cy3_(std::move(cy3)) {
    cy3_.validate();
    for (const XGenerator& g : xgens_) {
        if (g.degree <= 0 || g.degree % 2 != 0) {
            throw Error("X generator " + g.name + " must have positive even degree");
        }
        if (!xdeg_.emplace(g.name, g.degree).second) {
            throw Error("duplicate X generator " + g.name);
        }
    }
    for (const std::string& name : cy3_.h2) {
        if (!ydeg_.emplace(name, 2).second) throw Error("duplicate Y class " + name);
    }
    for (const std::string& name : cy3_.h4) {
        if (!ydeg_.emplace(name, 4).second) throw Error("duplicate Y class " + name);
    }
    if (!ydeg_.emplace("pt", 6).second) throw Error("the name pt is reserved");
    for (const auto& [name, deg] : ydeg_) {
        if (xdeg_.count(name) != 0) throw Error("name used on both sides: " + name);
    }
}

bool GrrContext::is_x(const std::string& name) const { return xdeg_.count(name) != 0; }

int GrrContext::x_degree(const std::string& name) const {
    auto it = xdeg_.find(name);
    if (it == xdeg_.end()) throw Error("unknown X generator " + name);
    return it->second;
}

bool GrrContext::is_y(const std::string& name) const { return ydeg_.count(name) != 0; }

int GrrContext::y_degree(const std::string& name) const {
    auto it = ydeg_.find(name);
    if (it == ydeg_.end()) throw Error("unknown Y class " + name);
    return it->second;
}

std::size_t GrrContext::h2_index(const std::string& name) const {
    auto it = std::find(cy3_.h2.begin(), cy3_.h2.end(), name);
    if (it == cy3_.h2.end()) throw Error("not an H^2 class: " + name);
    return static_cast<std::size_t>(it - cy3_.h2.begin());
}

std::size_t GrrContext::h4_index(const std::string& name) const {
    auto it = std::find(cy3_.h4.begin(), cy3_.h4.end(), name);
    if (it == cy3_.h4.end()) throw Error("not an H^4 class: " + name);
    return static_cast<std::size_t>(it - cy3_.h4.begin());
}

Monomial monomial_from_names(const std::vector<std::string>& names) {
    Monomial out;
    for (const std::string& n : names) out = mul_monomials(out, Monomial{{n, 1}});
    return out;
}

int term_y_degree(const KunnethClass::Term& t, const GrrContext& ctx) {
    int deg = 0;
    for (const auto& [name, exp] : t.y) deg += ctx.y_degree(name) * exp;
    return deg;
}

int term_degree(const KunnethClass::Term& t, const GrrContext& ctx) {
    int deg = term_y_degree(t, ctx);
    for (const auto& [name, exp] : t.x) deg += ctx.x_degree(name) * exp;
    return deg;
}

KunnethClass KunnethClass::scalar(const Rational& c) {
    KunnethClass out;
    if (c != 0) out.terms_[Term{}] = c;
    return out;
}

void KunnethClass::add_term(Monomial x, Monomial y, const Rational& coeff, const GrrContext& ctx) {
    if (coeff == 0) return;
    for (const auto& [name, exp] : x) {
        if (!ctx.is_x(name) || exp <= 0) throw Error("bad X monomial factor " + name);
    }
    for (const auto& [name, exp] : y) {
        if (!ctx.is_y(name) || exp <= 0) throw Error("bad Y monomial factor " + name);
    }
    Term t{std::move(x), std::move(y)};
    // H^{>6}(Y) vanishes and the pipeline never needs total degree > 8.
    if (term_y_degree(t, ctx) > 6 || term_degree(t, ctx) > 8) return;
    auto [it, inserted] = terms_.emplace(std::move(t), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

KunnethClass add(const KunnethClass& a, const KunnethClass& b) {
    KunnethClass out = a;
    for (const auto& [t, c] : b.terms_) {
        auto [it, inserted] = out.terms_.emplace(t, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

KunnethClass negate(const KunnethClass& a) {
    KunnethClass out;
    for (const auto& [t, c] : a.terms_) out.terms_.emplace(t, -c);
    return out;
}

KunnethClass scale(const Rational& c, const KunnethClass& a) {
    KunnethClass out;
    if (c == 0) return out;
    for (const auto& [t, v] : a.terms_) out.terms_.emplace(t, c * v);
    return out;
}

KunnethClass sub(const KunnethClass& a, const KunnethClass& b) { return add(a, negate(b)); }

KunnethClass mul(const KunnethClass& a, const KunnethClass& b, const GrrContext& ctx) {
    KunnethClass out;
    for (const auto& [ta, ca] : a.terms_) {
        for (const auto& [tb, cb] : b.terms_) {
            KunnethClass::Term t{mul_monomials(ta.x, tb.x), mul_monomials(ta.y, tb.y)};
            if (term_y_degree(t, ctx) > 6 || term_degree(t, ctx) > 8) continue;
            Rational c = ca * cb;
            auto [it, inserted] = out.terms_.emplace(std::move(t), std::move(c));
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

KunnethClass degree_part(const KunnethClass& a, int degree, const GrrContext& ctx) {
    KunnethClass out;
    for (const auto& [t, c] : a.terms()) {
        if (term_degree(t, ctx) == degree) out.add_term(t.x, t.y, c, ctx);
    }
    return out;
}

bool is_homogeneous(const KunnethClass& a, int degree, const GrrContext& ctx) {
    for (const auto& [t, c] : a.terms()) {
        if (term_degree(t, ctx) != degree) return false;
    }
    return true;
}

void validate_chern(const ChernData& cd, const GrrContext& ctx) {
    if (!is_homogeneous(cd.alpha1, 2, ctx)) throw Error("alpha1 must be homogeneous of degree 2");
    if (!is_homogeneous(cd.alpha2, 4, ctx)) throw Error("alpha2 must be homogeneous of degree 4");
    if (!is_homogeneous(cd.alpha3, 6, ctx)) throw Error("alpha3 must be homogeneous of degree 6");
    if (!is_homogeneous(cd.delta4, 8, ctx)) throw Error("delta4 must be homogeneous of degree 8");
    for (const KunnethClass* cls : {&cd.alpha1, &cd.alpha2, &cd.alpha3}) {
        for (const auto& [t, c] : cls->terms()) {
            if (!is_integer(c)) {
                throw Error("Chern class coordinates must be integers, got " + c.str());
            }
        }
    }
}

KunnethClass chern_character(const ChernData& cd, const GrrContext& ctx) {
    const KunnethClass& a1 = cd.alpha1;
    KunnethClass a1_sq = mul(a1, a1, ctx);
    KunnethClass ch = KunnethClass::scalar(Rational(cd.rank));
    ch = add(ch, a1);
    ch = add(ch, scale(Rational(1, 2), sub(a1_sq, scale(2, cd.alpha2))));
    KunnethClass cubic = mul(a1_sq, a1, ctx);
    cubic = sub(cubic, scale(3, mul(a1, cd.alpha2, ctx)));
    cubic = add(cubic, scale(3, cd.alpha3));
    ch = add(ch, scale(Rational(1, 6), cubic));
    ch = add(ch, cd.delta4);
    return ch;
}

KunnethClass dual_character(const KunnethClass& ch, const GrrContext& ctx) {
    KunnethClass out;
    for (const auto& [t, c] : ch.terms()) {
        int deg = term_degree(t, ctx);
        out.add_term(t.x, t.y, (deg % 4 == 2) ? -c : c, ctx);
    }
    return out;
}

KunnethClass todd_multiply(const KunnethClass& ch, const GrrContext& ctx) {
    KunnethClass c2;
    for (std::size_t j = 0; j < ctx.cy3().h4.size(); ++j) {
        c2.add_term({}, Monomial{{ctx.cy3().h4[j], 1}}, Rational(ctx.cy3().c2[j]), ctx);
    }
    return add(ch, scale(Rational(1, 12), mul(ch, c2, ctx)));
}

std::map<std::string, Rational> pushforward_c1(const KunnethClass& total, const GrrContext& ctx) {
    std::map<std::string, Rational> out;
    for (const auto& [t, c] : total.terms()) {
        if (term_degree(t, ctx) != 8 || term_y_degree(t, ctx) != 6) continue;
        std::vector<std::string> factors = flatten(t.y);
        Integer weight;
        if (factors.size() == 1) {
            weight = 1;  // the point class itself
        } else if (factors.size() == 2) {
            const std::string& a = factors[0];
            const std::string& b = factors[1];
            const std::string& e = ctx.y_degree(a) == 2 ? a : b;
            const std::string& f = ctx.y_degree(a) == 2 ? b : a;
            weight = ctx.cy3().pairing[ctx.h2_index(e)][ctx.h4_index(f)];
        } else if (factors.size() == 3) {
            weight = ctx.cy3().triple[ctx.h2_index(factors[0])][ctx.h2_index(factors[1])]
                                     [ctx.h2_index(factors[2])];
        } else {
            throw Error("unexpected Y monomial of degree 6");
        }
        if (t.x.size() != 1 || t.x[0].second != 1 || ctx.x_degree(t.x[0].first) != 2) {
            throw Error("pushforward left a non-linear X part");
        }
        Rational& slot = out[t.x[0].first];
        slot += c * Rational(weight);
        if (slot == 0) out.erase(t.x[0].first);
    }
    return out;
}

ChernData det_twist_reduce(const ChernData& cd, const GrrContext& ctx) {
    const KunnethClass& a1 = cd.alpha1;
    KunnethClass a1_sq = mul(a1, a1, ctx);
    ChernData out;
    out.rank = cd.rank + 1;
    out.alpha1 = KunnethClass{};  // alpha1 + c1(det E^-1) = 0 by construction
    out.alpha2 = sub(cd.alpha2, a1_sq);
    out.alpha3 = sub(cd.alpha3, mul(cd.alpha2, a1, ctx));
    out.delta4 = add(cd.delta4, scale(Rational(1, 24), mul(a1_sq, a1_sq, ctx)));
    return out;
}

ParityReport parity_check(const ChernData& cd, const GrrContext& ctx) {
    validate_chern(cd, ctx);
    ParityReport report;
    KunnethClass ch = chern_character(cd, ctx);
    KunnethClass rhom = mul(ch, dual_character(ch, ctx), ctx);
    report.c1 = pushforward_c1(todd_multiply(rhom, ctx), ctx);
    report.integral = true;
    report.even = true;
    for (const auto& [name, c] : report.c1) {
        if (!is_integer(c)) {
            report.integral = false;
            report.even = false;
            break;
        }
        if (!is_even(to_integer(c))) report.even = false;
    }
    report.alpha1_zero = cd.alpha1.is_zero();
    if (report.alpha1_zero) {
        report.int_alpha2_sq = pushforward_c1(mul(cd.alpha2, cd.alpha2, ctx), ctx);
        report.c1_pi_shriek = pushforward_c1(todd_multiply(ch, ctx), ctx);
    }
    return report;
}

CY3Data quintic_cy3() {
    CY3Data cy3;
    cy3.h2 = {"H"};
    cy3.h4 = {"L"};
    cy3.pairing = {{Integer(1)}};
    cy3.triple = {{{Integer(5)}}};
    cy3.c2 = {Integer(50)};
    return cy3;
}

CY3Data bicubic_cy3() {
    CY3Data cy3;
    cy3.h2 = {"a", "b"};
    cy3.h4 = {"A", "B"};
    cy3.pairing = {{Integer(1), Integer(0)}, {Integer(0), Integer(1)}};
    // a^2 b = a b^2 = 3, a^3 = b^3 = 0 on the (3,3) hypersurface.
    cy3.triple.assign(2, std::vector<std::vector<Integer>>(2, std::vector<Integer>(2, 0)));
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                if (i + j + k == 1 || i + j + k == 2) cy3.triple[i][j][k] = 3;
            }
        }
    }
    cy3.c2 = {Integer(36), Integer(36)};
    return cy3;
}

CY3Data ci2222_cy3() {
    CY3Data cy3;
    cy3.h2 = {"H"};
    cy3.h4 = {"L"};
    cy3.pairing = {{Integer(1)}};
    cy3.triple = {{{Integer(16)}}};
    cy3.c2 = {Integer(64)};
    return cy3;
}

GrrContext example_context(const CY3Data& cy3, int n_deg2, int n_deg4) {
    std::vector<XGenerator> xgens;
    for (int i = 1; i <= n_deg2; ++i) xgens.push_back({"B" + std::to_string(i), 2});
    for (int i = 1; i <= n_deg4; ++i) xgens.push_back({"C" + std::to_string(i), 4});
    return GrrContext(std::move(xgens), cy3);
}

KunnethClass random_integral_class(std::mt19937_64& rng, const GrrContext& ctx, int degree,
                                   int max_coeff) {
    // Basis shapes: X-monomials of degree dx paired with one Y basis
    // element of degree dy, dx + dy = degree.
    std::vector<std::pair<int, std::string>> ybasis = {{0, ""}};
    for (const std::string& e : ctx.cy3().h2) ybasis.emplace_back(2, e);
    for (const std::string& f : ctx.cy3().h4) ybasis.emplace_back(4, f);
    ybasis.emplace_back(6, "pt");

    std::vector<Monomial> xmonos_by_deg[5];  // index degree/2, 0..8
    xmonos_by_deg[0].push_back({});
    for (int half = 1; half <= 4; ++half) {
        int deg = 2 * half;
        for (const XGenerator& g : ctx.x_generators()) {
            if (g.degree > deg) continue;
            for (const Monomial& lower : xmonos_by_deg[(deg - g.degree) / 2]) {
                // Avoid duplicates: only extend by generators >= the largest
                // name already present.
                if (!lower.empty() && lower.back().first > g.name) continue;
                xmonos_by_deg[half].push_back(mul_monomials(lower, Monomial{{g.name, 1}}));
            }
        }
    }

    KunnethClass out;
    for (const auto& [ydeg, yname] : ybasis) {
        int xdeg = degree - ydeg;
        if (xdeg < 0 || xdeg > 8 || xdeg % 2 != 0) continue;
        for (const Monomial& xm : xmonos_by_deg[xdeg / 2]) {
            Integer c = pick_coeff(rng, max_coeff);
            if (c == 0) continue;
            Monomial ym = yname.empty() ? Monomial{} : Monomial{{yname, 1}};
            out.add_term(xm, ym, Rational(c), ctx);
        }
    }
    return out;
}

namespace {

/* A random integral degree-2 class: the first Chern class of a line
 * bundle on X x Y. */
KunnethClass random_degree2(std::mt19937_64& rng, const GrrContext& ctx, int max_coeff) {
    KunnethClass out;
    for (const XGenerator& g : ctx.x_generators()) {
        if (g.degree != 2) continue;
        Integer c = pick_coeff(rng, max_coeff);
        if (c != 0) out.add_term(Monomial{{g.name, 1}}, {}, Rational(c), ctx);
    }
    for (const std::string& e : ctx.cy3().h2) {
        Integer c = pick_coeff(rng, max_coeff);
        if (c != 0) out.add_term({}, Monomial{{e, 1}}, Rational(c), ctx);
    }
    return out;
}

}  // namespace

ChernData random_line_bundle_sum(std::mt19937_64& rng, const GrrContext& ctx, int max_summands) {
    int summands = 1 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(max_summands)));
    Integer rank = 0;
    KunnethClass ch1, ch2, ch3, ch4;
    for (int s = 0; s < summands; ++s) {
        int eps = pick(rng, 2) == 0 ? 1 : -1;
        KunnethClass l = random_degree2(rng, ctx, 2);
        KunnethClass l2 = mul(l, l, ctx);
        KunnethClass l3 = mul(l2, l, ctx);
        KunnethClass l4 = mul(l2, l2, ctx);
        rank += eps;
        ch1 = add(ch1, scale(eps, l));
        ch2 = add(ch2, scale(Rational(eps, 2), l2));
        ch3 = add(ch3, scale(Rational(eps, 6), l3));
        ch4 = add(ch4, scale(Rational(eps, 24), l4));
    }
    ChernData cd;
    cd.rank = rank;
    cd.alpha1 = ch1;
    KunnethClass a1_sq = mul(cd.alpha1, cd.alpha1, ctx);
    cd.alpha2 = sub(scale(Rational(1, 2), a1_sq), ch2);
    cd.alpha3 = add(sub(scale(2, ch3), scale(Rational(1, 3), mul(a1_sq, cd.alpha1, ctx))),
                    mul(cd.alpha1, cd.alpha2, ctx));
    cd.delta4 = ch4;
    validate_chern(cd, ctx);
    return cd;
}

ChernData random_rank_zero_data(std::mt19937_64& rng, const GrrContext& ctx) {
    ChernData cd;
    cd.rank = 0;
    cd.alpha2 = random_integral_class(rng, ctx, 4, 3);
    cd.alpha3 = random_integral_class(rng, ctx, 6, 3);
    cd.delta4 = random_integral_class(rng, ctx, 8, 3);
    validate_chern(cd, ctx);
    return cd;
}

}  // namespace gvkit::grr
