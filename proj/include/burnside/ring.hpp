#pragma once

#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "burnside/fincat.hpp"
#include "burnside/matrix.hpp"
#include "burnside/rational.hpp"

namespace burnside {

/// A Q-linear combination of the objects of a category, stored densely in
/// basis order. Elements compare by exact coefficient equality.
struct RingElement {
    std::vector<Rational> coeffs;

    bool is_zero() const {
        for (const auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }
    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.coeffs == b.coeffs;
    }
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }
};

/// Hom-set matrix over a given basis order: entry (c, d) = |C(c, d)|.
inline RatMatrix hom_matrix(const FinCat& cat, const std::vector<int>& basis) {
    const std::size_t n = basis.size();
    RatMatrix h(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
            h(c, d) = Rational(long(cat.hom(basis[c], basis[d]).size()));
    return h;
}

inline RatMatrix hom_matrix(const FinCat& cat) {
    return hom_matrix(cat, order_objects(cat));
}

struct EamMatrices {
    RatMatrix e, a, m;
};

/// The epimorphism, automorphism and monomorphism matrices of a factorization
/// system: E(c,d) = |E(c,d)| / |Aut(d)|, A = diag(|Aut(c)|),
/// M(c,d) = |M(c,d)| / |Aut(c)|. Entries are integral for a verified system.
inline EamMatrices eam_matrices(const FinCat& cat, const FactorizationSystem& fs,
                                const std::vector<int>& basis) {
    if (fs.epis.size() != cat.morphism_count() || fs.monos.size() != cat.morphism_count())
        throw std::invalid_argument("eam_matrices: factorization classes do not match category");
    const std::size_t n = basis.size();
    std::vector<long> aut(n);
    for (std::size_t c = 0; c < n; ++c)
        aut[c] = static_cast<long>(automorphisms(cat, basis[c]).size());
    EamMatrices out{RatMatrix(n, n), RatMatrix(n, n), RatMatrix(n, n)};
    for (std::size_t c = 0; c < n; ++c) {
        out.a(c, c) = Rational(aut[c]);
        for (std::size_t d = 0; d < n; ++d) {
            long ne = 0, nm = 0;
            for (int f : cat.hom(basis[c], basis[d])) {
                if (fs.epis[f]) ++ne;
                if (fs.monos[f]) ++nm;
            }
            out.e(c, d) = Rational(ne, aut[d]);
            out.m(c, d) = Rational(nm, aut[c]);
        }
    }
    return out;
}

inline EamMatrices eam_matrices(const FinCat& cat, const FactorizationSystem& fs) {
    return eam_matrices(cat, fs, order_objects(cat));
}

/// True iff E*A*M equals the hom-set matrix exactly.
inline bool check_eam(const FinCat& cat, const FactorizationSystem& fs) {
    auto basis = order_objects(cat);
    auto eam = eam_matrices(cat, fs, basis);
    return mat_mul(mat_mul(eam.e, eam.a), eam.m) == hom_matrix(cat, basis);
}

/// The rational abstract Burnside ring of a category: ordered object basis,
/// hom-set matrix and its exact inverse, the unit, and the complete orthogonal
/// idempotent family (column d of the inverse, read as coefficients).
struct BurnsideRing {
    FinCat cat;
    FactorizationSystem fs;
    MorphismClasses classes;
    std::vector<int> basis;      // object ids in basis order
    std::vector<int> basis_pos;  // object id -> basis position
    RatMatrix H, H_inv;
    RingElement unit;
    std::vector<RingElement> idempotent_list;

    std::size_t rank() const { return basis.size(); }
    const std::string& basis_label(std::size_t pos) const {
        return cat.object_label(basis[pos]);
    }
    RingElement zero() const { return RingElement{std::vector<Rational>(rank())}; }
    RingElement basis_element(std::size_t pos) const {
        RingElement x = zero();
        x.coeffs[pos] = Rational(1);
        return x;
    }
};

/// Assembles the ring from parts the caller has already validated and
/// verified. Use burnside_ring for the checked entry point.
inline BurnsideRing assemble_burnside_ring(FinCat cat, FactorizationSystem fs,
                                           MorphismClasses classes) {
    BurnsideRing ring;
    ring.basis = order_objects(cat, classes);
    ring.basis_pos.resize(ring.basis.size());
    for (std::size_t pos = 0; pos < ring.basis.size(); ++pos)
        ring.basis_pos[ring.basis[pos]] = static_cast<int>(pos);
    ring.H = hom_matrix(cat, ring.basis);
    ring.H_inv = mat_inverse(ring.H);
    const std::size_t n = ring.basis.size();
    ring.unit.coeffs = mat_solve(ring.H, std::vector<Rational>(n, Rational(1)));
    for (std::size_t d = 0; d < n; ++d) {
        RingElement e;
        e.coeffs.resize(n);
        for (std::size_t c = 0; c < n; ++c) e.coeffs[c] = ring.H_inv(c, d);
        ring.idempotent_list.push_back(std::move(e));
    }
    ring.cat = std::move(cat);
    ring.fs = std::move(fs);
    ring.classes = std::move(classes);
    return ring;
}

/// Builds the ring after validating the category and verifying the
/// factorization system (the supplied one, or the maximal pair).
inline BurnsideRing burnside_ring(FinCat cat, const FactorizationSystem* fs_override = nullptr) {
    CheckReport valid = validate_category(cat);
    if (!valid.ok())
        throw std::invalid_argument("invalid category: " + valid.findings.front());
    MorphismClasses classes = classify_morphisms(cat);
    FactorizationSystem fs = fs_override ? *fs_override : maximal_classes(classes);
    CheckReport fs_report = verify_factorization_system(cat, fs, classes);
    if (!fs_report.ok())
        throw std::runtime_error(
            "no factorization system: A_Q(C) not certified as a Burnside ring (" +
            fs_report.findings.front() + ")");
    return assemble_burnside_ring(std::move(cat), std::move(fs), std::move(classes));
}

inline void check_support(const BurnsideRing& ring, const RingElement& x) {
    if (x.coeffs.size() != ring.rank())
        throw std::invalid_argument("ring element is not supported on this basis");
}

/// The Burnside homomorphism: phi(x) = H * x in basis coordinates.
inline std::vector<Rational> phi(const BurnsideRing& ring, const RingElement& x) {
    check_support(ring, x);
    return mat_apply(ring.H, x.coeffs);
}

inline RingElement phi_inverse(const BurnsideRing& ring, const std::vector<Rational>& v) {
    if (v.size() != ring.rank())
        throw std::invalid_argument("vector is not supported on this basis");
    return RingElement{mat_apply(ring.H_inv, v)};
}

/// Transported multiplication: phi^-1(phi(x) . phi(y)) with componentwise product.
inline RingElement multiply(const BurnsideRing& ring, const RingElement& x,
                            const RingElement& y) {
    auto vx = phi(ring, x);
    auto vy = phi(ring, y);
    for (std::size_t i = 0; i < vx.size(); ++i) vx[i] *= vy[i];
    return phi_inverse(ring, vx);
}

inline RingElement add(const RingElement& x, const RingElement& y) {
    RingElement z = x;
    for (std::size_t i = 0; i < z.coeffs.size(); ++i) z.coeffs[i] += y.coeffs[i];
    return z;
}

inline RingElement scale(const Rational& c, const RingElement& x) {
    RingElement z = x;
    for (auto& e : z.coeffs) e *= c;
    return z;
}

inline const std::vector<RingElement>& idempotents(const BurnsideRing& ring) {
    return ring.idempotent_list;
}

struct BasisProduct {
    std::size_t left, right;  // basis positions, left <= right
    RingElement product;
};

/// Expansion of every basis product in the basis (unordered pairs; the
/// multiplication is commutative).
inline std::vector<BasisProduct> structure_constants(const BurnsideRing& ring) {
    std::vector<BasisProduct> table;
    for (std::size_t i = 0; i < ring.rank(); ++i)
        for (std::size_t j = i; j < ring.rank(); ++j)
            table.push_back({i, j, multiply(ring, ring.basis_element(i), ring.basis_element(j))});
    return table;
}

/// Renders an element as a signed sum of basis labels, e.g.
/// "[1] - 1/2*[2] + 1/3*[3]". The zero element renders as "0".
inline std::string format_element(const BurnsideRing& ring, const RingElement& x) {
    check_support(ring, x);
    std::string out;
    for (std::size_t pos = 0; pos < ring.rank(); ++pos) {
        const Rational& c = x.coeffs[pos];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (mag != Rational(1)) out += mag.str() + "*";
        out += ring.basis_label(pos);
    }
    return out.empty() ? "0" : out;
}

}  // namespace burnside
