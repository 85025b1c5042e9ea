#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "burnside/catgen.hpp"
#include "burnside/restrict.hpp"
#include "burnside/ring.hpp"
#include "burnside/stirling.hpp"

namespace burnside {

namespace detail {

struct GoldenCheck {
    std::string label;
    std::function<bool()> run;
};

inline RatMatrix golden_matrix(std::size_t n, const std::vector<Rational>& entries) {
    return RatMatrix(n, n, entries);
}

}  // namespace detail

/// Recomputes the library's reference tables from scratch and compares them
/// entry by entry: hom matrices and inverses for the small epi categories and
/// the order-six orbit category, their idempotent tables, the multiplication
/// table of the order-six Burnside ring, top idempotents and restriction
/// kernels, and the closed-form surjection counts. Prints one line per check.
inline int verify_paper(std::ostream& out) {
    using detail::golden_matrix;
    const Rational half(1, 2), third(1, 3), sixth(1, 6), quarter(1, 4);

    std::vector<detail::GoldenCheck> checks;

    auto expect_element = [](const BurnsideRing& ring, const RingElement& got,
                             const std::vector<std::pair<std::string, Rational>>& want) {
        RingElement e = ring.zero();
        for (const auto& [label, value] : want) {
            int obj = ring.cat.object_id(label);
            if (obj < 0) return false;
            e.coeffs[ring.basis_pos[obj]] = value;
        }
        return got == e;
    };

    checks.push_back({"hom matrix of Epi<=2 and its inverse", [&] {
        auto ring = burnside_ring(gen_epi(2));
        return ring.H == golden_matrix(2, {1, 0, 1, 2}) &&
               ring.H_inv == golden_matrix(2, {Rational(1), Rational(0), -half, half});
    }});

    checks.push_back({"idempotents of A_Q(2)", [&] {
        auto ring = burnside_ring(gen_epi(2));
        return expect_element(ring, idempotents(ring)[1], {{"[2]", half}}) &&
               expect_element(ring, idempotents(ring)[0], {{"[1]", 1}, {"[2]", -half}});
    }});

    checks.push_back({"hom matrix of Epi<=3 and its inverse", [&] {
        auto ring = burnside_ring(gen_epi(3));
        return ring.H == golden_matrix(3, {1, 0, 0, 1, 2, 0, 1, 6, 6}) &&
               ring.H_inv == golden_matrix(3, {Rational(1), 0, 0, -half, half, 0, third,
                                               -half, sixth});
    }});

    checks.push_back({"idempotents of A_Q(3)", [&] {
        auto ring = burnside_ring(gen_epi(3));
        return expect_element(ring, idempotents(ring)[2], {{"[3]", sixth}}) &&
               expect_element(ring, idempotents(ring)[1], {{"[2]", half}, {"[3]", -half}}) &&
               expect_element(ring, idempotents(ring)[0],
                              {{"[1]", 1}, {"[2]", -half}, {"[3]", third}});
    }});

    checks.push_back({"hom matrix of Epi<=4 and its inverse", [&] {
        auto ring = burnside_ring(gen_epi(4));
        return ring.H == golden_matrix(4, {1, 0, 0, 0, 1, 2, 0, 0, 1, 6, 6, 0, 1, 14, 36, 24}) &&
               ring.H_inv ==
                   golden_matrix(4, {Rational(1), 0, 0, 0, -half, half, 0, 0, third, -half,
                                     sixth, 0, -quarter, Rational(11, 24), -quarter,
                                     Rational(1, 24)});
    }});

    checks.push_back({"idempotents of A_Q(4)", [&] {
        auto ring = burnside_ring(gen_epi(4));
        return expect_element(ring, idempotents(ring)[3], {{"[4]", Rational(1, 24)}}) &&
               expect_element(ring, idempotents(ring)[2], {{"[3]", sixth}, {"[4]", -quarter}}) &&
               expect_element(ring, idempotents(ring)[1],
                              {{"[2]", half}, {"[3]", -half}, {"[4]", Rational(11, 24)}}) &&
               expect_element(ring, idempotents(ring)[0],
                              {{"[1]", 1}, {"[2]", -half}, {"[3]", third}, {"[4]", -quarter}});
    }});

    checks.push_back({"table of marks of C6 and its inverse", [&] {
        auto ring = burnside_ring(gen_orbit_category(gen_cyclic(6)));
        bool order_ok = ring.rank() == 4 && ring.basis_label(0) == "C6/C6" &&
                        ring.basis_label(1) == "C6/C3" && ring.basis_label(2) == "C6/C2" &&
                        ring.basis_label(3) == "C6/C1";
        return order_ok &&
               ring.H == golden_matrix(4, {1, 0, 0, 0, 1, 2, 0, 0, 1, 0, 3, 0, 1, 2, 3, 6}) &&
               ring.H_inv == golden_matrix(4, {Rational(1), 0, 0, 0, -half, half, 0, 0,
                                               -third, 0, third, 0, sixth, -sixth, -sixth,
                                               sixth});
    }});

    checks.push_back({"idempotents of A_Q(C6)", [&] {
        auto ring = burnside_ring(gen_orbit_category(gen_cyclic(6)));
        return expect_element(ring, idempotents(ring)[3], {{"C6/C1", sixth}}) &&
               expect_element(ring, idempotents(ring)[2],
                              {{"C6/C2", third}, {"C6/C1", -sixth}}) &&
               expect_element(ring, idempotents(ring)[1],
                              {{"C6/C3", half}, {"C6/C1", -sixth}}) &&
               expect_element(ring, idempotents(ring)[0],
                              {{"C6/C6", 1}, {"C6/C3", -half}, {"C6/C2", -third},
                               {"C6/C1", sixth}});
    }});

    checks.push_back({"multiplication table of A_Q(C6)", [&] {
        auto ring = burnside_ring(gen_orbit_category(gen_cyclic(6)));
        auto basis_elt = [&](const char* label) {
            RingElement x = ring.zero();
            x.coeffs[ring.basis_pos[ring.cat.object_id(label)]] = Rational(1);
            return x;
        };
        auto product_is = [&](const char* x, const char* y,
                              const std::vector<std::pair<std::string, Rational>>& want) {
            return expect_element(ring, multiply(ring, basis_elt(x), basis_elt(y)), want);
        };
        return format_element(ring, ring.unit) == "C6/C6" &&
               product_is("C6/C1", "C6/C1", {{"C6/C1", 6}}) &&
               product_is("C6/C1", "C6/C3", {{"C6/C1", 2}}) &&
               product_is("C6/C1", "C6/C2", {{"C6/C1", 3}}) &&
               product_is("C6/C3", "C6/C3", {{"C6/C3", 2}}) &&
               product_is("C6/C2", "C6/C3", {{"C6/C1", 1}}) &&
               product_is("C6/C2", "C6/C2", {{"C6/C2", 3}});
    }});

    checks.push_back({"top idempotent spans the restriction kernel", [&] {
        for (int d = 2; d <= 4; ++d) {
            auto ring = burnside_ring(gen_epi(d));
            std::vector<int> kept;
            for (int k = 1; k < d; ++k)
                kept.push_back(ring.cat.object_id("[" + std::to_string(k) + "]"));
            auto kr = inclusion_kernel(ring, kept);
            if (!kr.hypothesis_holds || !kr.structural || kr.kernel_basis.size() != 1)
                return false;
            RingElement top = ring.zero();
            top.coeffs[ring.rank() - 1] = Rational(1, factorial(d));
            if (idempotents(ring).back() != top) return false;
            if (scale(Rational(factorial(d)), top) != kr.kernel_basis[0]) return false;
        }
        return true;
    }});

    checks.push_back({"surjection counts and the closed-form last row", [&] {
        if (surj_count(4, 2) != 14 || surj_count(4, 3) != 36) return false;
        for (std::size_t d = 2; d <= 4; ++d) {
            auto row = epi_inverse_last_row(d);
            auto ring = burnside_ring(gen_epi(static_cast<int>(d)));
            for (std::size_t k = 0; k < d; ++k)
                if (ring.H_inv(d - 1, k) != row[k]) return false;
            if (epi_hom_closed_form(d) != ring.H) return false;
        }
        return true;
    }});

    checks.push_back({"order-two orbit category agrees with Epi<=2", [&] {
        return hom_matrix(gen_orbit_category(gen_cyclic(2))) == hom_matrix(gen_epi(2));
    }});

    int failures = 0;
    for (const auto& check : checks) {
        bool ok = check.run();
        out << (ok ? "ok   " : "FAIL ") << check.label << "\n";
        if (!ok) ++failures;
    }
    out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
        << "\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace burnside
