#include <doctest.h>

#include "gvkit/grr.hpp"
#include "oracles.hpp"

using namespace gvkit;
using grr::ChernData;
using grr::GrrContext;
using grr::KunnethClass;
using grr::Monomial;

namespace {

GrrContext quintic_ctx() { return grr::example_context(grr::quintic_cy3()); }

KunnethClass xgen(const GrrContext& ctx, const std::string& name, const Rational& c = 1) {
    KunnethClass out;
    out.add_term(Monomial{{name, 1}}, {}, c, ctx);
    return out;
}

KunnethClass ygen(const GrrContext& ctx, const std::string& name, const Rational& c = 1) {
    KunnethClass out;
    out.add_term({}, Monomial{{name, 1}}, c, ctx);
    return out;
}

ChernData line_bundle(const KunnethClass& l, const GrrContext& ctx) {
    ChernData cd;
    cd.rank = 1;
    cd.alpha1 = l;
    KunnethClass l2 = grr::mul(l, l, ctx);
    cd.delta4 = grr::scale(Rational(1, 24), grr::mul(l2, l2, ctx));
    return cd;
}

bool all_even(const std::map<std::string, Rational>& c1) {
    for (const auto& [name, c] : c1) {
        if (!is_integer(c) || !is_even(to_integer(c))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("chern_character: exponential of a line bundle") {
    auto ctx = quintic_ctx();
    auto l = grr::add(xgen(ctx, "B1"), ygen(ctx, "H", 2));
    auto cd = line_bundle(l, ctx);
    auto ch = grr::chern_character(cd, ctx);

    auto l2 = grr::mul(l, l, ctx);
    auto expected = grr::add(
        KunnethClass::scalar(1),
        grr::add(l, grr::add(grr::scale(Rational(1, 2), l2),
                             grr::add(grr::scale(Rational(1, 6), grr::mul(l2, l, ctx)),
                                      grr::scale(Rational(1, 24), grr::mul(l2, l2, ctx))))));
    CHECK(ch == expected);
}

TEST_CASE("chern_character: rank zero with vanishing alpha1") {
    auto ctx = quintic_ctx();
    ChernData cd;
    cd.rank = 0;
    cd.alpha2 = grr::mul(xgen(ctx, "B1"), ygen(ctx, "H"), ctx);
    cd.alpha3 = grr::mul(xgen(ctx, "B1"), ygen(ctx, "L"), ctx);
    cd.delta4 = grr::mul(xgen(ctx, "B1"), ygen(ctx, "pt"), ctx);
    auto ch = grr::chern_character(cd, ctx);
    auto expected =
        grr::add(grr::negate(cd.alpha2),
                 grr::add(grr::scale(Rational(1, 2), cd.alpha3), cd.delta4));
    CHECK(ch == expected);

    CHECK(grr::chern_character(ChernData{}, ctx) == KunnethClass{});
}

TEST_CASE("dual_character: sign flips by degree and involution") {
    auto ctx = quintic_ctx();
    auto scalar = KunnethClass::scalar(5);
    CHECK(grr::dual_character(scalar, ctx) == scalar);
    auto deg2 = xgen(ctx, "B1");
    CHECK(grr::dual_character(deg2, ctx) == grr::negate(deg2));

    std::mt19937_64 rng(501);
    for (int trial = 0; trial < 50; ++trial) {
        auto cls = grr::random_integral_class(rng, ctx, 2 * static_cast<int>(testing::pick(rng, 5)),
                                              3);
        CHECK(grr::dual_character(grr::dual_character(cls, ctx), ctx) == cls);
    }
}

TEST_CASE("ch(RHom(E,E)) has the symmetric-square shape") {
    auto ctx = quintic_ctx();
    std::mt19937_64 rng(502);
    for (int trial = 0; trial < 20; ++trial) {
        ChernData cd;
        cd.rank = Integer(static_cast<long long>(testing::pick(rng, 7)) - 3);
        cd.alpha1 = grr::random_integral_class(rng, ctx, 2, 2);
        cd.alpha2 = grr::random_integral_class(rng, ctx, 4, 2);
        cd.alpha3 = grr::random_integral_class(rng, ctx, 6, 2);
        cd.delta4 = grr::random_integral_class(rng, ctx, 8, 2);
        auto ch = grr::chern_character(cd, ctx);
        auto rhom = grr::mul(ch, grr::dual_character(ch, ctx), ctx);

        Rational r(cd.rank);
        auto a1_sq = grr::mul(cd.alpha1, cd.alpha1, ctx);
        // degree 0: r^2, degree 2 and 6: zero
        CHECK(grr::degree_part(rhom, 0, ctx) == KunnethClass::scalar(r * r));
        CHECK(grr::degree_part(rhom, 2, ctx) == KunnethClass{});
        CHECK(grr::degree_part(rhom, 6, ctx) == KunnethClass{});
        // degree 4: (r-1) alpha1^2 - 2 r alpha2
        auto deg4 = grr::sub(grr::scale(r - 1, a1_sq), grr::scale(2 * r, cd.alpha2));
        CHECK(grr::degree_part(rhom, 4, ctx) == deg4);
        // degree 8: -alpha1^4/12 + alpha2^2 - alpha1 alpha3 + 2 r delta4
        auto deg8 = grr::add(
            grr::sub(grr::add(grr::scale(Rational(-1, 12), grr::mul(a1_sq, a1_sq, ctx)),
                              grr::mul(cd.alpha2, cd.alpha2, ctx)),
                     grr::mul(cd.alpha1, cd.alpha3, ctx)),
            grr::scale(2 * r, cd.delta4));
        CHECK(grr::degree_part(rhom, 8, ctx) == deg8);
    }
}

TEST_CASE("ch(RHom(E,E)) at rank zero: alpha2^2 is the whole degree-8 part") {
    auto ctx = quintic_ctx();
    std::mt19937_64 rng(508);
    ChernData cd;
    cd.rank = 0;
    cd.alpha2 = grr::random_integral_class(rng, ctx, 4, 3);
    cd.alpha3 = grr::random_integral_class(rng, ctx, 6, 3);
    cd.delta4 = grr::random_integral_class(rng, ctx, 8, 3);
    auto ch = grr::chern_character(cd, ctx);
    auto rhom = grr::mul(ch, grr::dual_character(ch, ctx), ctx);
    CHECK(grr::degree_part(rhom, 8, ctx) == grr::mul(cd.alpha2, cd.alpha2, ctx));
}

TEST_CASE("todd_multiply: adds c2/12 and respects the degree cap") {
    auto ctx = quintic_ctx();
    auto five = KunnethClass::scalar(5);
    auto twisted = grr::todd_multiply(five, ctx);
    auto expected = grr::add(five, ygen(ctx, "L", Rational(50 * 5, 12)));
    CHECK(twisted == expected);

    // A Y-degree-6 class is pushed past degree 8 by c2 and survives alone.
    auto point_part = grr::mul(xgen(ctx, "B1"), ygen(ctx, "pt"), ctx);
    CHECK(grr::todd_multiply(point_part, ctx) == point_part);
}

TEST_CASE("pushforward_c1: zero cases and the line-bundle pipeline") {
    auto ctx = quintic_ctx();
    CHECK(grr::pushforward_c1(xgen(ctx, "B1"), ctx).empty());

    // Line bundle pulled back from Y: no X part anywhere, c1 = 0.
    auto from_y = line_bundle(ygen(ctx, "H", 3), ctx);
    auto report_y = grr::parity_check(from_y, ctx);
    CHECK(report_y.c1.empty());

    // Generic line bundle: RHom(L, L) = O, so c1 vanishes identically.
    std::mt19937_64 rng(503);
    for (int trial = 0; trial < 20; ++trial) {
        auto l = grr::random_integral_class(rng, ctx, 2, 3);
        auto report = grr::parity_check(line_bundle(l, ctx), ctx);
        CHECK(report.c1.empty());
        CHECK(report.integral);
        CHECK(report.even);
    }
}

TEST_CASE("det_twist_reduce: kills alpha1 and preserves the verdict") {
    auto ctx = quintic_ctx();

    std::mt19937_64 flat_rng(7);
    ChernData flat;
    flat.rank = 2;
    flat.alpha2 = grr::random_integral_class(flat_rng, ctx, 4, 2);
    auto reduced_flat = grr::det_twist_reduce(flat, ctx);
    CHECK(reduced_flat.rank == 3);
    CHECK(reduced_flat.alpha1 == KunnethClass{});
    CHECK(reduced_flat.alpha2 == flat.alpha2);
    CHECK(reduced_flat.alpha3 == flat.alpha3);
    CHECK(reduced_flat.delta4 == flat.delta4);

    auto t = xgen(ctx, "B1");
    ChernData rank1 = line_bundle(t, ctx);
    CHECK(grr::det_twist_reduce(rank1, ctx).alpha1 == KunnethClass{});

    std::mt19937_64 rng(504);
    for (int trial = 0; trial < 30; ++trial) {
        auto cd = grr::random_line_bundle_sum(rng, ctx, 4);
        auto raw = grr::parity_check(cd, ctx);
        auto reduced = grr::parity_check(grr::det_twist_reduce(cd, ctx), ctx);
        CHECK(raw.integral == reduced.integral);
        CHECK(raw.even == reduced.even);
    }
}

TEST_CASE("parity_check: the rank-zero Kunneth fixture") {
    auto ctx = quintic_ctx();
    ChernData cd;
    cd.rank = 0;
    // alpha2 = A2 x 1 + A1 x B1 + 1 x B2 in external-product notation.
    cd.alpha2 = grr::add(ygen(ctx, "L"),
                         grr::add(grr::mul(ygen(ctx, "H"), xgen(ctx, "B1"), ctx),
                                  xgen(ctx, "C1")));
    auto report = grr::parity_check(cd, ctx);
    REQUIRE(report.integral);
    CHECK(report.even);
    REQUIRE(report.c1.count("B1") == 1);
    CHECK(report.c1.at("B1") == 2);
    CHECK(report.c1.size() == 1);
    REQUIRE(report.alpha1_zero);
    CHECK(*report.int_alpha2_sq == report.c1);
}

TEST_CASE("parity_check: random corpora stay even") {
    std::mt19937_64 rng(505);
    grr::CY3Data lattices[3] = {grr::quintic_cy3(), grr::bicubic_cy3(), grr::ci2222_cy3()};
    for (int i = 0; i < 40; ++i) {
        GrrContext ctx = grr::example_context(lattices[i % 3]);
        ChernData cd = (i % 2 == 0)
                           ? grr::random_rank_zero_data(rng, ctx)
                           : grr::det_twist_reduce(grr::random_line_bundle_sum(rng, ctx, 4), ctx);
        auto report = grr::parity_check(cd, ctx);
        REQUIRE(report.integral);
        CHECK(report.even);
        // alpha1 = 0 on both paths: the decomposition identity
        // c1 = int_Y alpha2^2 + 2r c1(pi_! E) holds coefficientwise.
        REQUIRE(report.alpha1_zero);
        std::map<std::string, Rational> recombined = *report.int_alpha2_sq;
        for (const auto& [name, c] : *report.c1_pi_shriek) {
            recombined[name] += Rational(2 * cd.rank) * c;
            if (recombined[name] == 0) recombined.erase(name);
        }
        CHECK(recombined == report.c1);
    }
}

TEST_CASE("parity_check: integral alphas are required") {
    auto ctx = quintic_ctx();
    ChernData cd;
    cd.rank = 0;
    cd.alpha2 = grr::scale(Rational(1, 2), grr::mul(xgen(ctx, "B1"), ygen(ctx, "H"), ctx));
    CHECK_THROWS_AS(grr::parity_check(cd, ctx), Error);

    ChernData bad_degree;
    bad_degree.alpha1 = grr::mul(xgen(ctx, "B1"), ygen(ctx, "H"), ctx);  // degree 4, not 2
    CHECK_THROWS_AS(grr::parity_check(bad_degree, ctx), Error);
}

TEST_CASE("property: Whitney consistency of the determinant twist") {
    std::mt19937_64 rng(506);
    auto ctx = quintic_ctx();
    for (int trial = 0; trial < 50; ++trial) {
        auto cd = grr::random_line_bundle_sum(rng, ctx, 3);
        auto reduced = grr::det_twist_reduce(cd, ctx);
        ChernData inverse_det = line_bundle(grr::negate(cd.alpha1), ctx);
        auto lhs = grr::chern_character(reduced, ctx);
        auto rhs = grr::add(grr::chern_character(cd, ctx),
                            grr::chern_character(inverse_det, ctx));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("property: point component of a degree-4 square is even") {
    std::mt19937_64 rng(507);
    grr::CY3Data lattices[3] = {grr::quintic_cy3(), grr::bicubic_cy3(), grr::ci2222_cy3()};
    for (int trial = 0; trial < 60; ++trial) {
        GrrContext ctx = grr::example_context(lattices[trial % 3]);
        auto cls = grr::random_integral_class(rng, ctx, 4, 4);
        auto square = grr::pushforward_c1(grr::mul(cls, cls, ctx), ctx);
        CHECK(all_even(square));
    }
}
