#include "gvkit/gvgw.hpp"

namespace gvkit::gvgw {

namespace {

VariableContext lambda_ctx(int order) {
    return VariableContext({VariableSpec::truncated(kLambda, order, -2)});
}

/* 2 - 2 cos(cover * lambda) = sum_{n>=1} (-1)^(n+1) * 2 * cover^(2n) / (2n)!
 * * lambda^(2n), exact to the order of ctx. */
TruncatedSeries two_minus_two_cos(int cover, const VariableContext& ctx, int order) {
    TruncatedSeries out(ctx);
    Integer factorial = 1;  // (2n)!
    Integer cpow = 1;       // cover^(2n)
    for (int n = 1; 2 * n <= order; ++n) {
        factorial *= Integer(2 * n - 1) * Integer(2 * n);
        cpow *= Integer(cover) * Integer(cover);
        Rational coeff = Rational(2 * cpow, factorial);
        if (n % 2 == 0) coeff = -coeff;
        out += TruncatedSeries::monomial(ctx, {{kLambda, 2 * n}}, coeff);
    }
    return out;
}

Rational lambda_coefficient(const TruncatedSeries& s, int exponent) {
    return s.coefficient({{kLambda, exponent}});
}

/* The conversions reuse the same (cover, genus) expansions across many
 * degrees; memoize them per call. */
class ExpansionCache {
public:
    explicit ExpansionCache(int order) : order_(order) {}

    const TruncatedSeries& get(int cover, int genus) {
        auto it = cache_.find({cover, genus});
        if (it == cache_.end()) {
            it = cache_.emplace(std::make_pair(cover, genus),
                                sin_power_expansion(cover, genus, order_))
                     .first;
        }
        return it->second;
    }

private:
    int order_;
    std::map<std::pair<int, int>, TruncatedSeries> cache_;
};

}  // namespace

TruncatedSeries sin_power_expansion(int cover, int genus, int order) {
    if (cover < 1) throw SeriesError("cover multiplicity must be positive");
    if (genus < 0) throw SeriesError("negative genus");
    if (order < 0) throw SeriesError("negative order");
    if (genus == 1) return TruncatedSeries::constant(lambda_ctx(order), 1);
    if (genus >= 2) {
        VariableContext ctx = lambda_ctx(order);
        return two_minus_two_cos(cover, ctx, order).pow(genus - 1);
    }
    // genus 0: invert the square. The lambda^-2 shift costs four orders of
    // honesty at the top, so expand with slack and cut back down.
    int slack_order = order + 4;
    VariableContext ctx = lambda_ctx(slack_order);
    TruncatedSeries inverse = invert_unit(two_minus_two_cos(cover, ctx, slack_order));
    return truncate_to(inverse, kLambda, order);
}

GwTable gv_to_gw(const GvTable& gv, int gmax, int dmax) {
    if (gmax < 0 || dmax < 0) throw SeriesError("negative bounds");
    int order = 2 * gmax + 2;
    ExpansionCache expansions(order);
    GwTable out;
    for (int d = 1; d <= dmax; ++d) {
        TruncatedSeries acc(lambda_ctx(order));
        for (int k = 1; k <= d; ++k) {
            if (d % k != 0) continue;
            for (const auto& [key, nh] : gv.n) {
                if (key.first != d / k) continue;
                acc += Rational(nh, k) * expansions.get(k, key.second);
            }
        }
        for (int g = 0; g <= gmax; ++g) {
            out.set(g, d, lambda_coefficient(acc, 2 * g - 2));
        }
    }
    return out;
}

GvTable gw_to_gv(const GwTable& gw, int hmax, int dmax) {
    if (hmax < 0 || dmax < 0) throw SeriesError("negative bounds");
    int order = 2 * hmax + 2;
    ExpansionCache expansions(order);
    GvTable out;
    for (int d = 1; d <= dmax; ++d) {
        VariableContext ctx = lambda_ctx(order);
        TruncatedSeries residual(ctx);
        for (int g = 0; g <= hmax; ++g) {
            Rational ng = gw.at(g, d);
            if (ng != 0) {
                residual += TruncatedSeries::monomial(ctx, {{kLambda, 2 * g - 2}}, ng);
            }
        }
        for (int k = 2; k <= d; ++k) {
            if (d % k != 0) continue;
            for (const auto& [key, nh] : out.n) {
                if (key.first != d / k) continue;
                residual -= Rational(nh, k) * expansions.get(k, key.second);
            }
        }
        for (int g = 0; g <= hmax; ++g) {
            Rational c = lambda_coefficient(residual, 2 * g - 2);
            if (c == 0) continue;
            if (!is_integer(c)) {
                throw InversionError("inconsistent GW input: n_" + std::to_string(g) + "(" +
                                     std::to_string(d) + ") = " + c.str() + " is not an integer");
            }
            out.set(g, d, to_integer(c));
            residual -= c * expansions.get(1, g);
        }
    }
    return out;
}

}  // namespace gvkit::gvgw
