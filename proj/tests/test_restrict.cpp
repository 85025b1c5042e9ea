#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "burnside/catgen.hpp"
#include "burnside/restrict.hpp"
#include "burnside/ring.hpp"
#include "testcats.hpp"

using namespace burnside;

namespace {

Functor identity_functor(const FinCat& cat) {
    Functor f;
    for (int c = 0; c < static_cast<int>(cat.object_count()); ++c) f.object_map.push_back(c);
    for (int m = 0; m < static_cast<int>(cat.morphism_count()); ++m)
        f.morphism_map.push_back(m);
    return f;
}

/// Inclusion of the epi category on sets up to d-1 into the one up to d,
/// matching morphisms by name.
Functor epi_inclusion(const FinCat& small, const FinCat& big) {
    Functor f;
    for (int c = 0; c < static_cast<int>(small.object_count()); ++c)
        f.object_map.push_back(big.object_id(small.object_label(c)));
    for (int m = 0; m < static_cast<int>(small.morphism_count()); ++m)
        f.morphism_map.push_back(big.morphism_id(small.morphism(m).name));
    return f;
}

RingElement random_element(const BurnsideRing& ring, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    RingElement x = ring.zero();
    for (auto& c : x.coeffs) c = Rational(num(rng), den(rng));
    return x;
}

RingElement apply_fstar(const BurnsideRing& sub, const RatMatrix& fstar, const RingElement& x) {
    (void)sub;
    return RingElement{mat_apply(fstar, x.coeffs)};
}

}  // namespace

TEST_CASE("the identity functor induces the identity matrix") {
    auto ring = burnside_ring(gen_epi(3));
    auto fstar = restriction_map(ring, ring, identity_functor(ring.cat));
    CHECK(fstar == RatMatrix::identity(3));
}

TEST_CASE("restriction along the epi inclusion kills the top object") {
    auto small = burnside_ring(gen_epi(2));
    auto big = burnside_ring(gen_epi(3));
    auto fstar = restriction_map(small, big, epi_inclusion(small.cat, big.cat));
    // f*[1] = [1], f*[2] = [2], f*[3] = 0
    REQUIRE(fstar.rows() == 2);
    REQUIRE(fstar.cols() == 3);
    CHECK(fstar == RatMatrix(2, 3,
                             {Rational(1), Rational(0), Rational(0),
                              Rational(0), Rational(1), Rational(0)}));
}

TEST_CASE("non-functors are rejected with the violated law") {
    auto small = gen_epi(2);
    auto big = gen_epi(3);
    auto f = epi_inclusion(small, big);

    auto broken_objects = f;
    broken_objects.object_map[1] = big.object_id("[3]");
    auto findings = functor_violations(small, big, broken_objects);
    CHECK_FALSE(findings.empty());

    auto broken_identity = f;
    broken_identity.morphism_map[small.identity_of(small.object_id("[2]"))] =
        big.morphism_id("s21");
    findings = functor_violations(small, big, broken_identity);
    bool has_identity_violation = false;
    for (const auto& s : findings)
        if (s.find("identity") != std::string::npos) has_identity_violation = true;
    CHECK(has_identity_violation);

    auto broken_compose = f;
    // send the swap to the identity: endpoints still match, composition breaks
    broken_compose.morphism_map[small.morphism_id("s21")] = big.morphism_id("id:[2]");
    findings = functor_violations(small, big, broken_compose);
    bool has_compose_violation = false;
    for (const auto& s : findings)
        if (s.find("composition") != std::string::npos) has_compose_violation = true;
    CHECK(has_compose_violation);
    CHECK_THROWS_AS(restriction_map(burnside_ring(std::move(small)),
                                    burnside_ring(std::move(big)), broken_compose),
                    std::invalid_argument);
}

TEST_CASE("kernel of the epi-category inclusions is the top object") {
    for (int d = 2; d <= 5; ++d) {
        auto big = burnside_ring(gen_epi(d));
        std::vector<int> kept;
        for (int k = 1; k < d; ++k)
            kept.push_back(big.cat.object_id("[" + std::to_string(k) + "]"));
        auto result = inclusion_kernel(big, kept);
        CHECK(result.hypothesis_holds);
        CHECK(result.structural);
        REQUIRE(result.kernel_basis.size() == 1);
        std::string top = "[" + std::to_string(d) + "]";
        CHECK(format_element(big, result.kernel_basis[0]) == top);

        // the kernel generator is d! times the top idempotent
        Rational dfact(1);
        for (long k = 2; k <= d; ++k) dfact *= Rational(k);
        auto top_idem = idempotents(big).back();
        CHECK(scale(dfact, top_idem) == result.kernel_basis[0]);

        // and f* indeed kills it
        auto image = apply_fstar(result.sub_ring, result.fstar, result.kernel_basis[0]);
        CHECK(image.is_zero());
    }
}

TEST_CASE("restricting to the whole category gives an empty kernel") {
    auto ring = burnside_ring(gen_epi(3));
    std::vector<int> all{0, 1, 2};
    auto result = inclusion_kernel(ring, all);
    CHECK(result.hypothesis_holds);
    CHECK(result.kernel_basis.empty());
    CHECK(result.fstar == RatMatrix::identity(3));
}

TEST_CASE("orbit restriction to the full fixed orbit is structural") {
    auto ring = burnside_ring(gen_orbit_category(gen_cyclic(6)));
    auto result = inclusion_kernel(ring, {ring.cat.object_id("C6/C6")});
    CHECK(result.hypothesis_holds);
    CHECK(result.structural);
    REQUIRE(result.kernel_basis.size() == 3);
    CHECK(format_element(ring, result.kernel_basis[0]) == "C6/C3");
    CHECK(format_element(ring, result.kernel_basis[1]) == "C6/C2");
    CHECK(format_element(ring, result.kernel_basis[2]) == "C6/C1");
}

TEST_CASE("restriction onto two orbits computes f* in the span") {
    auto ring = burnside_ring(gen_orbit_category(gen_cyclic(6)));
    auto result = inclusion_kernel(
        ring, {ring.cat.object_id("C6/C6"), ring.cat.object_id("C6/C3")});
    CHECK(result.hypothesis_holds);
    REQUIRE(result.fstar.rows() == 2);
    REQUIRE(result.fstar.cols() == 4);
    // columns follow the ambient basis C6/C6, C6/C3, C6/C2, C6/C1
    CHECK(result.fstar == RatMatrix(2, 4,
                                    {Rational(1), Rational(0), Rational(0), Rational(0),
                                     Rational(0), Rational(1), Rational(0), Rational(0)}));
    REQUIRE(result.kernel_basis.size() == 2);
    CHECK(format_element(ring, result.kernel_basis[0]) == "C6/C2");
    CHECK(format_element(ring, result.kernel_basis[1]) == "C6/C1");
}

TEST_CASE("a violated hypothesis falls back to the generic kernel") {
    auto ring = burnside_ring(gen_orbit_category(gen_cyclic(6)));
    auto result = inclusion_kernel(
        ring, {ring.cat.object_id("C6/C3"), ring.cat.object_id("C6/C1")});
    CHECK_FALSE(result.hypothesis_holds);
    CHECK_FALSE(result.structural);
    CHECK_FALSE(result.offending_morphism.empty());
    {
        int m = ring.cat.morphism_id(result.offending_morphism);
        REQUIRE(m >= 0);
        const auto& mor = ring.cat.morphism(m);
        auto src_label = ring.cat.object_label(mor.src);
        auto dst_label = ring.cat.object_label(mor.dst);
        bool src_kept = src_label == "C6/C3" || src_label == "C6/C1";
        bool dst_removed = dst_label == "C6/C6" || dst_label == "C6/C2";
        CHECK(src_kept);
        CHECK(dst_removed);
    }
    // dimension matches |removed| here as well, and f* kills every basis vector
    REQUIRE(result.kernel_basis.size() == 2);
    for (const auto& k : result.kernel_basis)
        CHECK(apply_fstar(result.sub_ring, result.fstar, k).is_zero());
    // the generic basis is not the removed objects themselves
    CHECK(format_element(ring, result.kernel_basis[0]) != "C6/C6");
}

TEST_CASE("kernel dimension equals the number of removed objects when structural") {
    auto ring = burnside_ring(gen_orbit_category(gen_cyclic(8)));
    // C8 subgroups are a chain; keeping a downward-closed-in-order prefix of
    // the basis keeps the hypothesis intact
    std::vector<int> kept{ring.basis[0], ring.basis[1]};
    auto result = inclusion_kernel(ring, kept);
    CHECK(result.hypothesis_holds);
    CHECK(result.kernel_basis.size() == ring.rank() - 2);
}

TEST_CASE("f* is a ring map") {
    auto small = burnside_ring(gen_epi(3));
    auto big = burnside_ring(gen_epi(4));
    auto incl = epi_inclusion(small.cat, big.cat);
    auto fstar = restriction_map(small, big, incl);

    std::mt19937 rng(501);
    for (int trial = 0; trial < 50; ++trial) {
        auto x = random_element(big, rng);
        auto y = random_element(big, rng);

        // multiplicativity
        auto lhs = apply_fstar(small, fstar, multiply(big, x, y));
        auto rhs = multiply(small, apply_fstar(small, fstar, x), apply_fstar(small, fstar, y));
        CHECK(lhs == rhs);

        // the phi square commutes: phi_C(f* x) = (phi_D x) o f on objects
        auto left = phi(small, apply_fstar(small, fstar, x));
        auto right_full = phi(big, x);
        for (std::size_t c = 0; c < small.rank(); ++c) {
            int image_obj = incl.object_map[small.basis[c]];
            CHECK(left[c] == right_full[big.basis_pos[image_obj]]);
        }
    }
    CHECK(apply_fstar(small, fstar, big.unit) == small.unit);
}

TEST_CASE("f* along the identity functor is a ring isomorphism on samples") {
    auto ring = burnside_ring(gen_orbit_category(gen_cyclic(6)));
    auto fstar = restriction_map(ring, ring, identity_functor(ring.cat));
    std::mt19937 rng(502);
    for (int trial = 0; trial < 50; ++trial) {
        auto x = random_element(ring, rng);
        auto y = random_element(ring, rng);
        CHECK(apply_fstar(ring, fstar, multiply(ring, x, y)) ==
              multiply(ring, apply_fstar(ring, fstar, x), apply_fstar(ring, fstar, y)));
    }
}

TEST_CASE("full subcategories keep names and composition") {
    auto cat = gen_epi(3);
    auto [sub, incl] = full_subcategory(cat, {cat.object_id("[1]"), cat.object_id("[2]")});
    CHECK(validate_category(sub).ok());
    CHECK(sub.object_count() == 2);
    CHECK(sub.morphism_count() == 4);
    CHECK(sub.morphism_id("s11") >= 0);
    CHECK_THROWS_AS(full_subcategory(cat, {17}), std::out_of_range);
}
