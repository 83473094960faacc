#include "gvkit/series.hpp"

#include <algorithm>
#include <sstream>

namespace gvkit {

VariableSpec VariableSpec::truncated(std::string name, int order, int floor) {
    if (order < floor) throw SeriesError("truncation order below floor for " + name);
    if (floor > 0) throw SeriesError("truncated floor must be <= 0 for " + name);
    return VariableSpec{std::move(name), VarKind::Truncated, order, floor};
}

VariableSpec VariableSpec::laurent(std::string name) {
    return VariableSpec{std::move(name), VarKind::Laurent, 0, 0};
}

VariableContext::VariableContext(std::vector<VariableSpec> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end(),
              [](const VariableSpec& a, const VariableSpec& b) { return a.name < b.name; });
    for (std::size_t i = 1; i < vars_.size(); ++i) {
        if (vars_[i].name == vars_[i - 1].name) {
            throw ContextError("duplicate variable " + vars_[i].name);
        }
    }
}

std::optional<std::size_t> VariableContext::index_of(std::string_view name) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name,
                               [](const VariableSpec& v, std::string_view n) { return v.name < n; });
    if (it == vars_.end() || it->name != name) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

VariableContext VariableContext::merge(const VariableContext& a, const VariableContext& b) {
    std::vector<VariableSpec> out;
    std::size_t i = 0, j = 0;
    while (i < a.vars_.size() || j < b.vars_.size()) {
        if (j == b.vars_.size() || (i < a.vars_.size() && a.vars_[i].name < b.vars_[j].name)) {
            out.push_back(a.vars_[i++]);
        } else if (i == a.vars_.size() || b.vars_[j].name < a.vars_[i].name) {
            out.push_back(b.vars_[j++]);
        } else {
            const VariableSpec& x = a.vars_[i++];
            const VariableSpec& y = b.vars_[j++];
            if (x.kind != y.kind) {
                throw ContextError("variable " + x.name + " has incompatible kinds");
            }
            if (x.kind == VarKind::Truncated && x.floor != y.floor) {
                throw ContextError("variable " + x.name + " has incompatible floors");
            }
            VariableSpec merged = x;
            merged.order = std::min(x.order, y.order);
            out.push_back(std::move(merged));
        }
    }
    VariableContext ctx;
    ctx.vars_ = std::move(out);
    return ctx;
}

VariableContext VariableContext::without(std::string_view name) const {
    auto idx = index_of(name);
    if (!idx) throw ContextError("no variable named " + std::string(name));
    VariableContext out;
    out.vars_ = vars_;
    out.vars_.erase(out.vars_.begin() + static_cast<std::ptrdiff_t>(*idx));
    return out;
}

void TruncatedSeries::insert_term(Exponents e, Rational c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < ctx_.size(); ++i) {
        const VariableSpec& v = ctx_.at(i);
        if (v.kind != VarKind::Truncated) continue;
        if (e[i] > v.order) return;  // truncated away
        if (e[i] < v.floor) {
            throw SeriesError("exponent " + std::to_string(e[i]) + " of " + v.name +
                              " below floor " + std::to_string(v.floor));
        }
    }
    auto [it, inserted] = terms_.emplace(std::move(e), std::move(c));
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::constant(VariableContext ctx, const Rational& value) {
    TruncatedSeries s(std::move(ctx));
    s.insert_term(Exponents(s.ctx_.size(), 0), value);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(VariableContext ctx, const std::map<std::string, int>& exps,
                                          const Rational& coeff) {
    TruncatedSeries s(std::move(ctx));
    Exponents e(s.ctx_.size(), 0);
    for (const auto& [name, exp] : exps) {
        auto idx = s.ctx_.index_of(name);
        if (!idx) throw ContextError("no variable named " + name);
        e[*idx] = exp;
    }
    s.insert_term(std::move(e), coeff);
    return s;
}

TruncatedSeries TruncatedSeries::variable(VariableContext ctx, std::string_view name) {
    return monomial(std::move(ctx), {{std::string(name), 1}}, 1);
}

Rational TruncatedSeries::coefficient(const std::map<std::string, int>& exps) const {
    Exponents e(ctx_.size(), 0);
    for (const auto& [name, exp] : exps) {
        auto idx = ctx_.index_of(name);
        if (!idx) throw ContextError("no variable named " + name);
        e[*idx] = exp;
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

TruncatedSeries TruncatedSeries::in_context(const VariableContext& target) const {
    std::vector<std::size_t> where(ctx_.size());
    for (std::size_t i = 0; i < ctx_.size(); ++i) {
        auto idx = target.index_of(ctx_.at(i).name);
        if (!idx) throw ContextError("target context lacks " + ctx_.at(i).name);
        where[i] = *idx;
    }
    TruncatedSeries out(target);
    for (const auto& [e, c] : terms_) {
        Exponents ne(target.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
        out.insert_term(std::move(ne), c);
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(ctx_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.ctx_ == b.ctx_) {
        TruncatedSeries out = a;
        for (const auto& [e, c] : b.terms_) out.insert_term(e, c);
        return out;
    }
    VariableContext ctx = VariableContext::merge(a.ctx_, b.ctx_);
    TruncatedSeries ra = a.in_context(ctx);
    TruncatedSeries rb = b.in_context(ctx);
    for (const auto& [e, c] : rb.terms_) ra.insert_term(e, c);
    return ra;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.ctx_ == b.ctx_) {
        TruncatedSeries out(a.ctx_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                TruncatedSeries::Exponents e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.insert_term(std::move(e), ca * cb);
            }
        }
        return out;
    }
    VariableContext ctx = VariableContext::merge(a.ctx_, b.ctx_);
    return a.in_context(ctx) * b.in_context(ctx);
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s) {
    TruncatedSeries out(s.ctx_);
    if (c == 0) return out;
    for (const auto& [e, v] : s.terms_) out.terms_.emplace(e, c * v);
    return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.ctx_ == b.ctx_) return a.terms_ == b.terms_;
    VariableContext ctx = VariableContext::merge(a.context(), b.context());
    return a.in_context(ctx).terms() == b.in_context(ctx).terms();
}

TruncatedSeries TruncatedSeries::pow(int e) const {
    if (e < 0) return invert_unit(*this).pow(-e);
    TruncatedSeries acc = constant(ctx_, 1);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

TruncatedSeries invert_unit(const TruncatedSeries& s) {
    if (s.is_zero()) throw NonUnitError("cannot invert the zero series");
    const VariableContext& ctx = s.ctx_;

    std::vector<std::size_t> trunc_idx;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (ctx.at(i).kind == VarKind::Truncated) trunc_idx.push_back(i);
    }

    // Lowest exponent in each truncated variable; the unit part sits there.
    std::vector<int> mu(trunc_idx.size(), 0);
    bool first = true;
    for (const auto& [e, c] : s.terms_) {
        for (std::size_t t = 0; t < trunc_idx.size(); ++t) {
            int exp = e[trunc_idx[t]];
            if (first || exp < mu[t]) mu[t] = exp;
        }
        first = false;
    }

    const TruncatedSeries::Exponents* unit_exp = nullptr;
    const Rational* unit_coeff = nullptr;
    for (const auto& [e, c] : s.terms_) {
        bool lowest = true;
        for (std::size_t t = 0; t < trunc_idx.size() && lowest; ++t) {
            lowest = (e[trunc_idx[t]] == mu[t]);
        }
        if (!lowest) continue;
        if (unit_exp != nullptr) {
            throw NonUnitError("lowest part in the truncated variables is not a monomial");
        }
        unit_exp = &e;
        unit_coeff = &c;
    }

    TruncatedSeries::Exponents minus(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) minus[i] = -(*unit_exp)[i];
    TruncatedSeries unit_inv(ctx);
    unit_inv.insert_term(std::move(minus), rational_inverse(*unit_coeff));

    // s = unit * (1 + t) with every term of t of positive truncated degree,
    // so the geometric series for (1 + t)^-1 terminates at the truncation.
    TruncatedSeries tail = s * unit_inv - TruncatedSeries::constant(ctx, 1);
    TruncatedSeries acc = TruncatedSeries::constant(ctx, 1);
    TruncatedSeries power = TruncatedSeries::constant(ctx, 1);
    long guard = 1;
    for (std::size_t t = 0; t < trunc_idx.size(); ++t) {
        const VariableSpec& v = ctx.at(trunc_idx[t]);
        guard += v.order - v.floor + 1;
    }
    for (long i = 0; i < guard; ++i) {
        power = power * (-tail);
        if (power.is_zero()) break;
        acc += power;
    }
    if (!power.is_zero()) {
        throw NonUnitError("tail of the would-be unit does not vanish under truncation");
    }
    return acc * unit_inv;
}

TruncatedSeries substitute(const TruncatedSeries& s, std::string_view var, const Rational& value) {
    auto idx = s.ctx_.index_of(var);
    if (!idx) throw ContextError("no variable named " + std::string(var));
    if (s.ctx_.at(*idx).kind != VarKind::Laurent) {
        throw SeriesError("substitution requires a Laurent variable: " + std::string(var));
    }
    if (value == 0) throw SeriesError("zero value for Laurent variable " + std::string(var));
    VariableContext out_ctx = s.ctx_.without(var);
    TruncatedSeries out(out_ctx);
    for (const auto& [e, c] : s.terms_) {
        TruncatedSeries::Exponents ne;
        ne.reserve(e.size() - 1);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i != *idx) ne.push_back(e[i]);
        }
        out.insert_term(std::move(ne), c * rational_pow(value, e[*idx]));
    }
    return out;
}

TruncatedSeries substitute(const TruncatedSeries& s, std::string_view var,
                           const TruncatedSeries& value) {
    auto idx = s.ctx_.index_of(var);
    if (!idx) throw ContextError("no variable named " + std::string(var));
    if (s.ctx_.at(*idx).kind != VarKind::Laurent) {
        throw SeriesError("substitution requires a Laurent variable: " + std::string(var));
    }
    if (value.term_count() != 1) {
        throw SeriesError("substitution value must be a monomial");
    }
    if (value.context().contains(var)) {
        throw SeriesError("substitution value must not involve " + std::string(var));
    }
    VariableContext out_ctx = VariableContext::merge(s.ctx_.without(var), value.context());
    TruncatedSeries out(out_ctx);
    for (const auto& [e, c] : s.terms_) {
        TruncatedSeries piece(s.ctx_.without(var));
        {
            TruncatedSeries::Exponents ne;
            ne.reserve(e.size() - 1);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i != *idx) ne.push_back(e[i]);
            }
            piece.insert_term(std::move(ne), c);
        }
        out += piece * value.pow(e[*idx]);
    }
    return out;
}

TruncatedSeries coefficient_of(const TruncatedSeries& s, std::string_view var, int k) {
    auto idx = s.ctx_.index_of(var);
    if (!idx) throw ContextError("no variable named " + std::string(var));
    const VariableSpec& v = s.ctx_.at(*idx);
    if (v.kind == VarKind::Truncated && (k > v.order || k < v.floor)) {
        throw SeriesError("exponent " + std::to_string(k) + " outside the truncation of " + v.name);
    }
    TruncatedSeries out(s.ctx_.without(var));
    for (const auto& [e, c] : s.terms_) {
        if (e[*idx] != k) continue;
        TruncatedSeries::Exponents ne;
        ne.reserve(e.size() - 1);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i != *idx) ne.push_back(e[i]);
        }
        out.insert_term(std::move(ne), c);
    }
    return out;
}

TruncatedSeries truncate_to(const TruncatedSeries& s, std::string_view var, int order) {
    auto idx = s.ctx_.index_of(var);
    if (!idx) throw ContextError("no variable named " + std::string(var));
    if (s.ctx_.at(*idx).kind != VarKind::Truncated) {
        throw SeriesError("truncate_to requires a truncated variable");
    }
    std::vector<VariableSpec> vars = s.ctx_.variables();
    for (auto& v : vars) {
        if (v.name == var) v.order = std::min(v.order, order);
    }
    VariableContext target{std::move(vars)};
    TruncatedSeries out(target);
    for (const auto& [e, c] : s.terms_) out.insert_term(e, c);
    return out;
}

TruncatedSeries product_factor(const TruncatedSeries& base, std::string_view qvar, int exponent,
                               int count, int order) {
    if (count < 1) throw SeriesError("product_factor needs at least one factor");
    if (base.term_count() != 1) throw SeriesError("product_factor base must be a monomial");
    if (base.context().contains(qvar)) {
        throw SeriesError("product_factor base must not involve " + std::string(qvar));
    }
    VariableContext ctx = VariableContext::merge(
        base.context(), VariableContext({VariableSpec::truncated(std::string(qvar), order)}));
    TruncatedSeries acc = TruncatedSeries::constant(ctx, 1);
    if (exponent == 0) return acc;
    TruncatedSeries b = base.in_context(ctx);
    // Factors with m > order are 1 modulo the truncation.
    int effective = std::min(count, std::max(order, 1));
    for (int m = 1; m <= effective; ++m) {
        TruncatedSeries factor =
            TruncatedSeries::constant(ctx, 1) -
            b * TruncatedSeries::monomial(ctx, {{std::string(qvar), m}}, 1);
        acc = acc * factor.pow(exponent);
    }
    return acc;
}

std::optional<int> min_exponent(const TruncatedSeries& s, std::string_view var) {
    auto idx = s.context().index_of(var);
    if (!idx) throw ContextError("no variable named " + std::string(var));
    std::optional<int> out;
    for (const auto& [e, c] : s.terms()) {
        if (!out || e[*idx] < *out) out = e[*idx];
    }
    return out;
}

std::optional<int> max_exponent(const TruncatedSeries& s, std::string_view var) {
    auto idx = s.context().index_of(var);
    if (!idx) throw ContextError("no variable named " + std::string(var));
    std::optional<int> out;
    for (const auto& [e, c] : s.terms()) {
        if (!out || e[*idx] > *out) out = e[*idx];
    }
    return out;
}

std::string TruncatedSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << ctx_.at(i).name;
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace gvkit
