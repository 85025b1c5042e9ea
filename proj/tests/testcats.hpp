#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "burnside/fincat.hpp"

namespace testutil {

/// Independent epimorphism oracle: the literal definition, quantifying over
/// every parallel pair out of the target.
inline bool oracle_is_epi(const burnside::FinCat& cat, int f) {
    int b = cat.morphism(f).dst;
    for (int x = 0; x < static_cast<int>(cat.object_count()); ++x) {
        const auto& out = cat.hom(b, x);
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i + 1; j < out.size(); ++j)
                if (cat.compose(out[i], f) == cat.compose(out[j], f)) return false;
    }
    return true;
}

inline bool oracle_is_mono(const burnside::FinCat& cat, int f) {
    int a = cat.morphism(f).src;
    for (int x = 0; x < static_cast<int>(cat.object_count()); ++x) {
        const auto& in = cat.hom(x, a);
        for (std::size_t i = 0; i < in.size(); ++i)
            for (std::size_t j = i + 1; j < in.size(); ++j)
                if (cat.compose(f, in[i]) == cat.compose(f, in[j])) return false;
    }
    return true;
}

/// The category of the sets [1], ..., [n] and ALL functions between them,
/// with maps stored as image tuples. In this category a map is epi exactly
/// when surjective and mono exactly when injective, which makes it a fixture
/// for cross-checking the detectors.
struct FunctionCategory {
    burnside::FinCat cat;
    std::vector<std::vector<std::uint8_t>> tuples;

    bool surjective(int f) const {
        const auto& t = tuples[f];
        int j = cat.morphism(f).dst + 1;
        unsigned mask = 0;
        for (auto v : t) mask |= 1u << (v - 1);
        return mask == (1u << j) - 1;
    }
    bool injective(int f) const {
        const auto& t = tuples[f];
        unsigned mask = 0;
        for (auto v : t) {
            if (mask & (1u << (v - 1))) return false;
            mask |= 1u << (v - 1);
        }
        return true;
    }
};

inline FunctionCategory full_function_category(int n) {
    FunctionCategory fc;
    fc.cat.name = "Fun<=" + std::to_string(n);
    for (int k = 1; k <= n; ++k) fc.cat.add_object("[" + std::to_string(k) + "]");

    std::vector<std::vector<int>> tuple_id(static_cast<std::size_t>(n) * n);
    auto code_of = [](const std::vector<std::uint8_t>& t, int j) {
        std::size_t code = 0;
        for (int x = static_cast<int>(t.size()) - 1; x >= 0; --x)
            code = code * j + (t[x] - 1);
        return code;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            std::size_t span = 1;
            for (int x = 0; x < i; ++x) span *= j;
            auto& table = tuple_id[(i - 1) * n + (j - 1)];
            table.assign(span, -1);
            std::vector<std::uint8_t> t(i, 1);
            for (;;) {
                bool ident = i == j;
                if (ident)
                    for (int x = 0; x < i; ++x)
                        if (t[x] != x + 1) { ident = false; break; }
                std::string nm;
                if (ident) {
                    nm = "id:[" + std::to_string(i) + "]";
                } else {
                    nm = "f";
                    for (auto v : t) nm += std::to_string(int(v));
                    nm += ">" + std::to_string(j);
                }
                int id = fc.cat.add_morphism(nm, i - 1, j - 1);
                table[code_of(t, j)] = id;
                fc.tuples.push_back(t);
                int pos = i - 1;
                while (pos >= 0 && t[pos] == j) t[pos--] = 1;
                if (pos < 0) break;
                ++t[pos];
            }
        }
    fc.cat.finalize();
    for (int k = 1; k <= n; ++k) {
        std::vector<std::uint8_t> ident(k);
        for (int x = 0; x < k; ++x) ident[x] = static_cast<std::uint8_t>(x + 1);
        fc.cat.set_identity(k - 1, tuple_id[(k - 1) * n + (k - 1)][code_of(ident, k)]);
    }
    std::vector<std::uint8_t> composite;
    for (int g = 0; g < static_cast<int>(fc.cat.morphism_count()); ++g) {
        const auto& u = fc.tuples[g];
        int k = fc.cat.morphism(g).dst + 1;
        for (int f : fc.cat.to_object(fc.cat.morphism(g).src)) {
            const auto& t = fc.tuples[f];
            composite.resize(t.size());
            for (std::size_t x = 0; x < t.size(); ++x) composite[x] = u[t[x] - 1];
            int i = fc.cat.morphism(f).src + 1;
            fc.cat.set_compose(g, f, tuple_id[(i - 1) * n + (k - 1)][code_of(composite, k)]);
        }
    }
    return fc;
}

/// Two objects a, b with parallel arrows u, v: a -> b and an absorbing
/// endomorphism w of b satisfying w.u = w.v = u and w.w = w. Here w is not
/// epi (id and w disagree but agree after w) and u, v are not epi either.
inline burnside::FinCat parallel_pair_with_absorber() {
    burnside::FinCat cat;
    cat.name = "parallel-pair";
    int a = cat.add_object("a"), b = cat.add_object("b");
    int ida = cat.add_morphism("id:a", a, a);
    int idb = cat.add_morphism("id:b", b, b);
    int u = cat.add_morphism("u", a, b);
    int v = cat.add_morphism("v", a, b);
    int w = cat.add_morphism("w", b, b);
    cat.finalize();
    cat.set_identity(a, ida);
    cat.set_identity(b, idb);
    cat.set_compose(ida, ida, ida);
    cat.set_compose(idb, idb, idb);
    cat.set_compose(u, ida, u);
    cat.set_compose(v, ida, v);
    cat.set_compose(idb, u, u);
    cat.set_compose(idb, v, v);
    cat.set_compose(w, idb, w);
    cat.set_compose(idb, w, w);
    cat.set_compose(w, u, u);
    cat.set_compose(w, v, u);
    cat.set_compose(w, w, w);
    return cat;
}

/// Just the two parallel arrows, no extra endomorphism. Every morphism is
/// both epi and mono, so the maximal classes fail unique factorization.
inline burnside::FinCat bare_parallel_pair() {
    burnside::FinCat cat;
    cat.name = "bare-parallel-pair";
    int a = cat.add_object("a"), b = cat.add_object("b");
    int ida = cat.add_morphism("id:a", a, a);
    int idb = cat.add_morphism("id:b", b, b);
    int u = cat.add_morphism("u", a, b);
    int v = cat.add_morphism("v", a, b);
    cat.finalize();
    cat.set_identity(a, ida);
    cat.set_identity(b, idb);
    cat.set_compose(ida, ida, ida);
    cat.set_compose(idb, idb, idb);
    cat.set_compose(u, ida, u);
    cat.set_compose(v, ida, v);
    cat.set_compose(idb, u, u);
    cat.set_compose(idb, v, v);
    return cat;
}

/// Two distinct objects joined by mutually inverse morphisms: valid except
/// for skeletality.
inline burnside::FinCat isomorphic_pair() {
    burnside::FinCat cat;
    cat.name = "iso-pair";
    int a = cat.add_object("a"), b = cat.add_object("b");
    int ida = cat.add_morphism("id:a", a, a);
    int idb = cat.add_morphism("id:b", b, b);
    int f = cat.add_morphism("f", a, b);
    int g = cat.add_morphism("g", b, a);
    cat.finalize();
    cat.set_identity(a, ida);
    cat.set_identity(b, idb);
    cat.set_compose(ida, ida, ida);
    cat.set_compose(idb, idb, idb);
    cat.set_compose(f, ida, f);
    cat.set_compose(idb, f, f);
    cat.set_compose(g, idb, g);
    cat.set_compose(ida, g, g);
    cat.set_compose(g, f, ida);
    cat.set_compose(f, g, idb);
    return cat;
}

/// Chain a -> b -> c with composite z; optionally leaves the w.u entry unset.
inline burnside::FinCat chain_category(bool omit_composite) {
    burnside::FinCat cat;
    cat.name = "chain";
    int a = cat.add_object("a"), b = cat.add_object("b"), c = cat.add_object("c");
    int ida = cat.add_morphism("id:a", a, a);
    int idb = cat.add_morphism("id:b", b, b);
    int idc = cat.add_morphism("id:c", c, c);
    int u = cat.add_morphism("u", a, b);
    int w = cat.add_morphism("w", b, c);
    int z = cat.add_morphism("z", a, c);
    cat.finalize();
    cat.set_identity(a, ida);
    cat.set_identity(b, idb);
    cat.set_identity(c, idc);
    cat.set_compose(ida, ida, ida);
    cat.set_compose(idb, idb, idb);
    cat.set_compose(idc, idc, idc);
    cat.set_compose(u, ida, u);
    cat.set_compose(idb, u, u);
    cat.set_compose(w, idb, w);
    cat.set_compose(idc, w, w);
    cat.set_compose(z, ida, z);
    cat.set_compose(idc, z, z);
    if (!omit_composite) cat.set_compose(w, u, z);
    return cat;
}

/// One object, one morphism.
inline burnside::FinCat one_object_category() {
    burnside::FinCat cat;
    cat.name = "point";
    int a = cat.add_object("*");
    int ida = cat.add_morphism("id:*", a, a);
    cat.finalize();
    cat.set_identity(a, ida);
    cat.set_compose(ida, ida, ida);
    return cat;
}

}  // namespace testutil
