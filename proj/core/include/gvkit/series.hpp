#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gvkit/rational.hpp"

namespace gvkit {

enum class VarKind { Truncated, Laurent };

/* One formal variable of a series context.
 *
 * Truncated variables track exponents in [floor, order]; everything above
 * order is cut, anything below floor is a representation overflow and an
 * error. floor is 0 except for variables like the genus parameter, which
 * carries a fixed Laurent floor of -2. Laurent variables admit any integer
 * exponent (finitely many terms). */
struct VariableSpec {
    std::string name;
    VarKind kind = VarKind::Laurent;
    int order = 0;
    int floor = 0;

    static VariableSpec truncated(std::string name, int order, int floor = 0);
    static VariableSpec laurent(std::string name);

    friend bool operator==(const VariableSpec&, const VariableSpec&) = default;
};

/* An ordered (by name) set of variables. Merging two contexts unions the
 * variables; a shared truncated variable keeps the minimum order, and any
 * kind or floor disagreement is a ContextError. */
class VariableContext {
public:
    VariableContext() = default;
    explicit VariableContext(std::vector<VariableSpec> vars);

    static VariableContext merge(const VariableContext& a, const VariableContext& b);

    std::size_t size() const { return vars_.size(); }
    const VariableSpec& at(std::size_t i) const { return vars_[i]; }
    const std::vector<VariableSpec>& variables() const { return vars_; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    bool contains(std::string_view name) const { return index_of(name).has_value(); }
    VariableContext without(std::string_view name) const;

    friend bool operator==(const VariableContext&, const VariableContext&) = default;

private:
    std::vector<VariableSpec> vars_;  // sorted by name, unique
};

/* Multivariate Laurent/power series with exact rational coefficients and
 * sparse exponent-vector storage. Values are immutable in spirit: every
 * operation returns a fresh series, so instances can be shared freely
 * across threads.
 *
 * Truncation bookkeeping follows the generating-function convention:
 * arithmetic narrows each shared truncated variable to the minimum order
 * of the operands instead of erroring. */
class TruncatedSeries {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    TruncatedSeries() = default;
    explicit TruncatedSeries(VariableContext ctx) : ctx_(std::move(ctx)) {}

    static TruncatedSeries constant(VariableContext ctx, const Rational& value);
    static TruncatedSeries monomial(VariableContext ctx, const std::map<std::string, int>& exps,
                                    const Rational& coeff);
    static TruncatedSeries variable(VariableContext ctx, std::string_view name);

    const VariableContext& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /* Coefficient of the monomial with the given exponents (defaulting
     * to 0 for unnamed variables). */
    Rational coefficient(const std::map<std::string, int>& exps) const;
    Rational constant_term() const { return coefficient({}); }

    /* Re-key into a context that contains at least the same variables;
     * terms beyond the new truncation orders are dropped. */
    TruncatedSeries in_context(const VariableContext& target) const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s);
    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    /* Integer power; negative exponents go through invert_unit. */
    TruncatedSeries pow(int e) const;

    std::string str() const;

private:
    VariableContext ctx_;
    TermMap terms_;

    void insert_term(Exponents e, Rational c);

    friend TruncatedSeries invert_unit(const TruncatedSeries& s);
    friend TruncatedSeries substitute(const TruncatedSeries& s, std::string_view var,
                                      const Rational& value);
    friend TruncatedSeries substitute(const TruncatedSeries& s, std::string_view var,
                                      const TruncatedSeries& value);
    friend TruncatedSeries coefficient_of(const TruncatedSeries& s, std::string_view var, int k);
    friend TruncatedSeries truncate_to(const TruncatedSeries& s, std::string_view var, int order);
};

/* Multiplicative inverse of a unit: the lowest part of s in the truncated
 * variables must be a single invertible monomial. mul(s, invert_unit(s))
 * is 1 up to the truncation order. */
TruncatedSeries invert_unit(const TruncatedSeries& s);

/* Exact substitution var := value for a Laurent variable; the variable is
 * dropped from the context. value is a nonzero rational or a monomial
 * (single-term series with nonzero coefficient). */
TruncatedSeries substitute(const TruncatedSeries& s, std::string_view var, const Rational& value);
TruncatedSeries substitute(const TruncatedSeries& s, std::string_view var,
                           const TruncatedSeries& value);

/* The exact coefficient of var^k as a series in the remaining variables. */
TruncatedSeries coefficient_of(const TruncatedSeries& s, std::string_view var, int k);

/* Lower the truncation order of one variable (drops terms above). */
TruncatedSeries truncate_to(const TruncatedSeries& s, std::string_view var, int order);

/* prod_{m=1..count} (1 - base * q^m)^exponent expanded exactly to the given
 * order in qvar. base is a monomial series not involving qvar. Factors with
 * m > order are invisible at the truncation, so any count >= order yields
 * identical output. */
TruncatedSeries product_factor(const TruncatedSeries& base, std::string_view qvar, int exponent,
                               int count, int order);

/* Smallest/largest exponent of var over the stored terms. */
std::optional<int> min_exponent(const TruncatedSeries& s, std::string_view var);
std::optional<int> max_exponent(const TruncatedSeries& s, std::string_view var);

}  // namespace gvkit
