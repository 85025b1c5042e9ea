#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "burnside/fincat.hpp"
#include "burnside/matrix.hpp"
#include "burnside/ring.hpp"

namespace burnside {

/// A functor between finite categories, as explicit object and morphism maps.
struct Functor {
    std::vector<int> object_map;    // source object id -> target object id
    std::vector<int> morphism_map;  // source morphism id -> target morphism id
};

/// Checks that the maps form a functor: endpoints, identities and composition
/// are preserved. Returns one finding per violated law.
inline std::vector<std::string> functor_violations(const FinCat& src, const FinCat& dst,
                                                   const Functor& f) {
    std::vector<std::string> findings;
    detail::FindingSink sink(findings);
    if (f.object_map.size() != src.object_count() ||
        f.morphism_map.size() != src.morphism_count()) {
        sink.add("functor maps do not cover the source category");
        return findings;
    }
    for (int c = 0; c < static_cast<int>(src.object_count()); ++c)
        if (f.object_map[c] < 0 || f.object_map[c] >= static_cast<int>(dst.object_count())) {
            sink.add("object map sends " + src.object_label(c) + " outside the target");
            return findings;
        }
    for (int m = 0; m < static_cast<int>(src.morphism_count()); ++m)
        if (f.morphism_map[m] < 0 ||
            f.morphism_map[m] >= static_cast<int>(dst.morphism_count())) {
            sink.add("morphism map sends " + src.morphism(m).name + " outside the target");
            return findings;
        }

    for (int m = 0; m < static_cast<int>(src.morphism_count()); ++m) {
        const auto& sm = src.morphism(m);
        const auto& tm = dst.morphism(f.morphism_map[m]);
        if (tm.src != f.object_map[sm.src] || tm.dst != f.object_map[sm.dst])
            sink.add("functor breaks endpoints on " + sm.name);
    }
    for (int c = 0; c < static_cast<int>(src.object_count()); ++c) {
        int id = src.identity_of(c);
        if (id >= 0 && f.morphism_map[id] != dst.identity_of(f.object_map[c]))
            sink.add("functor does not preserve the identity of " + src.object_label(c));
    }
    for (int g = 0; g < static_cast<int>(src.morphism_count()); ++g) {
        for (int h : src.to_object(src.morphism(g).src)) {
            int gh = src.compose(g, h);
            if (gh < 0) continue;
            int image = dst.compose(f.morphism_map[g], f.morphism_map[h]);
            if (image != f.morphism_map[gh])
                sink.add("functor does not preserve composition on " + src.morphism(g).name +
                         " after " + src.morphism(h).name);
        }
    }
    return findings;
}

/// The induced ring map f*: A_Q(D) -> A_Q(C) for a functor f: C -> D, as the
/// matrix sending target-basis coefficients to source-basis coefficients.
/// Column d holds the coefficients of f*(d): the phi_C-preimage of the vector
/// (|D(f(c), d)|)_c.
inline RatMatrix restriction_map(const BurnsideRing& source, const BurnsideRing& target,
                                 const Functor& f) {
    auto findings = functor_violations(source.cat, target.cat, f);
    if (!findings.empty())
        throw std::invalid_argument("not a functor: " + findings.front());
    const std::size_t nc = source.rank(), nd = target.rank();
    RatMatrix fstar(nc, nd);
    std::vector<Rational> v(nc);
    for (std::size_t d = 0; d < nd; ++d) {
        for (std::size_t c = 0; c < nc; ++c)
            v[c] = Rational(long(
                target.cat.hom(f.object_map[source.basis[c]], target.basis[d]).size()));
        auto column = mat_solve(source.H, v);
        for (std::size_t c = 0; c < nc; ++c) fstar(c, d) = column[c];
    }
    return fstar;
}

inline RatMatrix restriction_map(const FinCat& source, const FinCat& target, const Functor& f) {
    return restriction_map(burnside_ring(source), burnside_ring(target), f);
}

/// The full subcategory on the given objects, with the inclusion functor back
/// into the ambient category. Morphism names are preserved.
inline std::pair<FinCat, Functor> full_subcategory(const FinCat& cat,
                                                   const std::vector<int>& object_ids) {
    for (int c : object_ids)
        if (c < 0 || c >= static_cast<int>(cat.object_count()))
            throw std::out_of_range("full_subcategory: unknown object id");
    FinCat sub;
    sub.name = cat.name + "|";
    std::vector<int> obj_to_sub(cat.object_count(), -1);
    Functor incl;
    for (int c : object_ids) {
        if (obj_to_sub[c] >= 0) continue;
        obj_to_sub[c] = sub.add_object(cat.object_label(c));
        incl.object_map.push_back(c);
        sub.name += (incl.object_map.size() > 1 ? "," : "") + cat.object_label(c);
    }
    std::vector<int> mor_to_sub(cat.morphism_count(), -1);
    for (int m = 0; m < static_cast<int>(cat.morphism_count()); ++m) {
        const auto& mor = cat.morphism(m);
        if (obj_to_sub[mor.src] < 0 || obj_to_sub[mor.dst] < 0) continue;
        mor_to_sub[m] = sub.add_morphism(mor.name, obj_to_sub[mor.src], obj_to_sub[mor.dst]);
        incl.morphism_map.push_back(m);
    }
    sub.finalize();
    for (std::size_t c = 0; c < incl.object_map.size(); ++c) {
        int amb_id = cat.identity_of(incl.object_map[c]);
        if (amb_id >= 0 && mor_to_sub[amb_id] >= 0)
            sub.set_identity(static_cast<int>(c), mor_to_sub[amb_id]);
    }
    for (std::size_t g = 0; g < incl.morphism_map.size(); ++g) {
        int amb_g = incl.morphism_map[g];
        for (int f : sub.to_object(sub.morphism(static_cast<int>(g)).src)) {
            int composite = cat.compose(amb_g, incl.morphism_map[f]);
            sub.set_compose(static_cast<int>(g), f,
                            composite < 0 ? -1 : mor_to_sub[composite]);
        }
    }
    return {std::move(sub), std::move(incl)};
}

/// Kernel of the restriction to a full subcategory.
struct KernelResult {
    BurnsideRing sub_ring;
    Functor inclusion;
    bool hypothesis_holds = false;  // no morphisms from kept objects to removed ones
    std::string offending_morphism;
    RatMatrix fstar;                 // rows: sub basis, cols: ambient basis
    bool structural = false;         // kernel basis read off the removed objects
    std::vector<int> removed;        // removed object ids, ambient basis order
    std::vector<RingElement> kernel_basis;  // elements of the ambient ring
};

/// Restriction of ring to the full subcategory on sub_objects: the induced
/// ring map's matrix and its kernel. When no morphism leaves the subcategory
/// towards a removed object, the kernel basis is the removed objects
/// themselves; otherwise it is computed by exact null-space elimination and
/// flagged generic.
inline KernelResult inclusion_kernel(const BurnsideRing& ring,
                                     const std::vector<int>& sub_objects) {
    KernelResult result;
    auto [sub, incl] = full_subcategory(ring.cat, sub_objects);
    result.sub_ring = burnside_ring(std::move(sub));
    result.inclusion = incl;

    std::vector<char> kept(ring.cat.object_count(), 0);
    for (int c : incl.object_map) kept[c] = 1;
    for (std::size_t pos = 0; pos < ring.rank(); ++pos)
        if (!kept[ring.basis[pos]]) result.removed.push_back(ring.basis[pos]);

    result.hypothesis_holds = true;
    for (int m = 0; m < static_cast<int>(ring.cat.morphism_count()) &&
                    result.hypothesis_holds; ++m) {
        const auto& mor = ring.cat.morphism(m);
        if (kept[mor.src] && !kept[mor.dst]) {
            result.hypothesis_holds = false;
            result.offending_morphism = mor.name;
        }
    }

    result.fstar = restriction_map(result.sub_ring, ring, incl);

    if (result.hypothesis_holds) {
        result.structural = true;
        for (int c : result.removed) {
            RingElement e = ring.zero();
            e.coeffs[ring.basis_pos[c]] = Rational(1);
            result.kernel_basis.push_back(std::move(e));
        }
    } else {
        result.structural = false;
        for (auto& v : nullspace_basis(result.fstar))
            result.kernel_basis.push_back(RingElement{std::move(v)});
    }
    return result;
}

}  // namespace burnside
