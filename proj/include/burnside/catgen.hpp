#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "burnside/fincat.hpp"

namespace burnside {

inline constexpr int kGroupOrderCap = 24;

namespace detail {

inline std::string epi_object_label(int k) { return "[" + std::to_string(k) + "]"; }

/// Name for a surjection given by its image tuple; identity tuples use the
/// reserved id names.
inline std::string surjection_name(const std::vector<std::uint8_t>& images, int j) {
    bool ident = static_cast<int>(images.size()) == j;
    if (ident)
        for (std::size_t x = 0; x < images.size(); ++x)
            if (images[x] != x + 1) { ident = false; break; }
    if (ident) return "id:" + epi_object_label(j);
    std::string s = "s";
    for (std::size_t x = 0; x < images.size(); ++x) {
        if (j > 9 && x > 0) s += '.';
        s += std::to_string(int(images[x]));
    }
    return s;
}

}  // namespace detail

/// The category of finite sets [1], ..., [d] and surjections between them,
/// with surjections stored as explicit image tuples. Composition is function
/// composition. Output is skeletal and valid by construction.
inline FinCat gen_epi(int d) {
    if (d < 1) throw std::invalid_argument("gen_epi: d must be >= 1");
    FinCat cat;
    cat.name = "Epi<=" + std::to_string(d);
    for (int k = 1; k <= d; ++k) cat.add_object(detail::epi_object_label(k));

    // tuple_id[(i-1)*d + (j-1)] maps the mixed-radix code of a tuple to its id
    std::vector<std::vector<int>> tuple_id(static_cast<std::size_t>(d) * d);
    std::vector<std::vector<std::uint8_t>> tuples;

    auto code_of = [](const std::vector<std::uint8_t>& t, int j) {
        std::size_t code = 0;
        for (int x = static_cast<int>(t.size()) - 1; x >= 0; --x)
            code = code * j + (t[x] - 1);
        return code;
    };

    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= i; ++j) {
            std::size_t span = 1;
            for (int x = 0; x < i; ++x) span *= j;
            auto& table = tuple_id[(i - 1) * d + (j - 1)];
            table.assign(span, -1);
            std::vector<std::uint8_t> t(i, 1);
            for (;;) {
                unsigned mask = 0;
                for (int x = 0; x < i; ++x) mask |= 1u << (t[x] - 1);
                if (mask == (1u << j) - 1) {
                    int id = cat.add_morphism(detail::surjection_name(t, j), i - 1, j - 1);
                    table[code_of(t, j)] = id;
                    tuples.push_back(t);
                }
                int pos = i - 1;
                while (pos >= 0 && t[pos] == j) t[pos--] = 1;
                if (pos < 0) break;
                ++t[pos];
            }
        }
    }

    cat.finalize();
    for (int k = 1; k <= d; ++k) {
        std::vector<std::uint8_t> ident(k);
        for (int x = 0; x < k; ++x) ident[x] = static_cast<std::uint8_t>(x + 1);
        cat.set_identity(k - 1, tuple_id[(k - 1) * d + (k - 1)][code_of(ident, k)]);
    }

    std::vector<std::uint8_t> composite;
    for (int g = 0; g < static_cast<int>(cat.morphism_count()); ++g) {
        const auto& gm = cat.morphism(g);
        const auto& u = tuples[g];
        int k = gm.dst + 1;
        for (int f : cat.to_object(gm.src)) {
            const auto& t = tuples[f];
            composite.resize(t.size());
            for (std::size_t x = 0; x < t.size(); ++x) composite[x] = u[t[x] - 1];
            int i = cat.morphism(f).src + 1;
            cat.set_compose(g, f, tuple_id[(i - 1) * d + (k - 1)][code_of(composite, k)]);
        }
    }
    return cat;
}

/// A finite group given by its Cayley table. Element 0 need not be the
/// identity; the identity index is detected during validation.
struct Group {
    std::string label;
    int order = 0;
    std::vector<std::string> elements;
    std::vector<int> table;  // row-major order x order
    int identity = -1;
    std::vector<int> inverses;

    int mul(int a, int b) const { return table[a * order + b]; }
    int inverse(int a) const { return inverses[a]; }
};

/// Validates raw Cayley data and returns the group. Throws with the specific
/// axiom violated: not a Latin square, no identity, no inverse, non-associative.
inline Group group_from_cayley(std::string label, std::vector<std::string> elements,
                               const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(elements.size());
    if (n < 1) throw std::invalid_argument("group: need at least one element");
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("group: table must be " + std::to_string(n) + "x" +
                                    std::to_string(n));
    Group g;
    g.label = std::move(label);
    g.order = n;
    g.elements = std::move(elements);
    g.table.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("group: table must be " + std::to_string(n) + "x" +
                                        std::to_string(n));
        for (int j = 0; j < n; ++j) {
            if (rows[i][j] < 0 || rows[i][j] >= n)
                throw std::invalid_argument("group: table entry out of range");
            g.table[i * n + j] = rows[i][j];
        }
    }

    std::vector<char> seen(n);
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) seen[g.mul(i, j)] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw std::invalid_argument("group: not a Latin square (row " + g.elements[i] + ")");
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) seen[g.mul(j, i)] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw std::invalid_argument("group: not a Latin square (column " + g.elements[i] + ")");
    }

    for (int e = 0; e < n && g.identity < 0; ++e) {
        bool ident = true;
        for (int x = 0; x < n && ident; ++x)
            ident = g.mul(e, x) == x && g.mul(x, e) == x;
        if (ident) g.identity = e;
    }
    if (g.identity < 0) throw std::invalid_argument("group: no identity element");

    g.inverses.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) {
                g.inverses[a] = b;
                break;
            }
        if (g.inverses[a] < 0)
            throw std::invalid_argument("group: no inverse for element " + g.elements[a]);
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw std::invalid_argument(
                        "group: non-associative: (" + g.elements[a] + "*" + g.elements[b] +
                        ")*" + g.elements[c] + " != " + g.elements[a] + "*(" + g.elements[b] +
                        "*" + g.elements[c] + ")");
    return g;
}

/// Z/n with elements g0, ..., g<n-1> and table (i + j) mod n.
inline Group gen_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("gen_cyclic: n must be >= 1");
    std::vector<std::string> elements;
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        elements.push_back("g" + std::to_string(i));
        for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
    }
    return group_from_cayley("C" + std::to_string(n), std::move(elements), rows);
}

/// Element-index set closed under the table and inversion, containing the
/// identity. Kept sorted.
struct Subgroup {
    std::vector<int> members;

    bool contains(int x) const {
        return std::binary_search(members.begin(), members.end(), x);
    }
    std::size_t size() const { return members.size(); }
    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.members == b.members;
    }
    friend bool operator<(const Subgroup& a, const Subgroup& b) {
        return a.members < b.members;
    }
};

inline bool is_subgroup(const Group& g, const Subgroup& s) {
    if (!s.contains(g.identity)) return false;
    for (int a : s.members) {
        if (!s.contains(g.inverse(a))) return false;
        for (int b : s.members)
            if (!s.contains(g.mul(a, b))) return false;
    }
    return true;
}

namespace detail {

inline Subgroup close_subset(const Group& g, std::vector<int> seed) {
    std::set<int> members(seed.begin(), seed.end());
    members.insert(g.identity);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> snapshot(members.begin(), members.end());
        for (int a : snapshot)
            for (int b : snapshot)
                if (members.insert(g.mul(a, b)).second) grew = true;
        for (int a : snapshot)
            if (members.insert(g.inverse(a)).second) grew = true;
    }
    return Subgroup{std::vector<int>(members.begin(), members.end())};
}

}  // namespace detail

/// All subgroups, found by closing the cyclic subgroups and then iteratively
/// closing pairwise joins until no new subgroup appears. Sorted by size, then
/// lexicographically. Group order is capped at kGroupOrderCap.
inline std::vector<Subgroup> subgroups(const Group& g) {
    if (g.order > kGroupOrderCap)
        throw std::invalid_argument("subgroups: group order exceeds cap of " +
                                    std::to_string(kGroupOrderCap));
    std::set<Subgroup> found;
    for (int x = 0; x < g.order; ++x) found.insert(detail::close_subset(g, {x}));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Subgroup> snapshot(found.begin(), found.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                std::vector<int> join = snapshot[i].members;
                join.insert(join.end(), snapshot[j].members.begin(),
                            snapshot[j].members.end());
                if (found.insert(detail::close_subset(g, std::move(join))).second)
                    grew = true;
            }
    }
    std::vector<Subgroup> result(found.begin(), found.end());
    for (const auto& s : result)
        if (!is_subgroup(g, s)) throw std::logic_error("subgroups: closure produced a non-subgroup");
    std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members < b.members;
    });
    return result;
}

inline Subgroup conjugate_subgroup(const Group& g, const Subgroup& s, int x) {
    std::vector<int> members;
    members.reserve(s.size());
    int xi = g.inverse(x);
    for (int h : s.members) members.push_back(g.mul(g.mul(x, h), xi));
    std::sort(members.begin(), members.end());
    return Subgroup{std::move(members)};
}

/// One representative per conjugacy class of subgroups: the lexicographically
/// least element-index set in its class. Classes are listed by decreasing
/// subgroup order, ties by the representative's member list.
inline std::vector<Subgroup> conjugacy_classes_of_subgroups(const Group& g) {
    std::vector<Subgroup> all = subgroups(g);
    std::set<Subgroup> assigned;
    std::vector<Subgroup> reps;
    for (const auto& s : all) {
        if (assigned.count(s)) continue;
        Subgroup least = s;
        for (int x = 0; x < g.order; ++x) {
            Subgroup conj = conjugate_subgroup(g, s, x);
            if (conj < least) least = conj;
            assigned.insert(std::move(conj));
        }
        reps.push_back(std::move(least));
    }
    std::sort(reps.begin(), reps.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.members < b.members;
    });
    return reps;
}

inline bool is_cyclic_subgroup(const Group& g, const Subgroup& s) {
    for (int x : s.members)
        if (detail::close_subset(g, {x}).size() == s.size()) return true;
    return false;
}

namespace detail {

/// Subgroup class labels: C<order> for cyclic classes, H<order> otherwise,
/// with a letter suffix when several classes share the same form.
inline std::vector<std::string> subgroup_labels(const Group& g, const std::vector<Subgroup>& reps) {
    std::vector<std::string> base(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
        base[i] = (is_cyclic_subgroup(g, reps[i]) ? "C" : "H") + std::to_string(reps[i].size());
    std::vector<std::string> labels(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        int same = 0;
        for (std::size_t j = 0; j < reps.size(); ++j) same += base[j] == base[i];
        if (same == 1) {
            labels[i] = base[i];
        } else {
            int before = 0;
            for (std::size_t j = 0; j < i; ++j) before += base[j] == base[i];
            labels[i] = base[i] + static_cast<char>('a' + before);
        }
    }
    return labels;
}

}  // namespace detail

/// The orbit category of g: objects G/H for conjugacy-class representatives H,
/// morphisms G/H -> G/K the cosets gK with g^-1 H g contained in K, composed
/// by coset multiplication. Coset representatives are canonical least indexes.
inline FinCat gen_orbit_category(const Group& g) {
    if (g.order > kGroupOrderCap)
        throw std::invalid_argument("gen_orbit_category: group order exceeds cap of " +
                                    std::to_string(kGroupOrderCap));
    std::vector<Subgroup> reps = conjugacy_classes_of_subgroups(g);
    std::vector<std::string> sub_labels = detail::subgroup_labels(g, reps);
    const int nobj = static_cast<int>(reps.size());

    FinCat cat;
    cat.name = "Orb(" + g.label + ")";
    for (int i = 0; i < nobj; ++i) cat.add_object(g.label + "/" + sub_labels[i]);

    // coset_rep[k][x]: least index in the coset x*K for K = reps[k]
    std::vector<std::vector<int>> coset_rep(nobj, std::vector<int>(g.order));
    for (int k = 0; k < nobj; ++k)
        for (int x = 0; x < g.order; ++x) {
            int least = g.order;
            for (int h : reps[k].members) least = std::min(least, g.mul(x, h));
            coset_rep[k][x] = least;
        }

    // (src object, dst object, coset rep) -> morphism id
    std::vector<std::vector<int>> id_of(static_cast<std::size_t>(nobj) * nobj,
                                        std::vector<int>(g.order, -1));
    for (int hi = 0; hi < nobj; ++hi) {
        for (int ki = 0; ki < nobj; ++ki) {
            std::vector<int> coset_reps;
            for (int x = 0; x < g.order; ++x)
                if (coset_rep[ki][x] == x) coset_reps.push_back(x);
            for (int r : coset_reps) {
                // the coset rK is a morphism G/H -> G/K iff r^-1 H r lies in K
                bool ok = true;
                int ri = g.inverse(r);
                for (int h : reps[hi].members)
                    if (!reps[ki].contains(g.mul(g.mul(ri, h), r))) { ok = false; break; }
                if (!ok) continue;
                bool ident = hi == ki && coset_rep[ki][g.identity] == r;
                std::string nm = ident ? "id:" + cat.object_label(hi)
                                       : "c" + std::to_string(r) + ":" + sub_labels[hi] +
                                             ">" + sub_labels[ki];
                id_of[hi * nobj + ki][r] = cat.add_morphism(nm, hi, ki);
            }
        }
    }

    cat.finalize();
    std::vector<int> src_of(cat.morphism_count()), dst_of(cat.morphism_count()),
        rep_of(cat.morphism_count());
    for (int hi = 0; hi < nobj; ++hi)
        for (int ki = 0; ki < nobj; ++ki)
            for (int r = 0; r < g.order; ++r) {
                int id = id_of[hi * nobj + ki][r];
                if (id < 0) continue;
                src_of[id] = hi;
                dst_of[id] = ki;
                rep_of[id] = r;
            }
    for (int hi = 0; hi < nobj; ++hi)
        cat.set_identity(hi, id_of[hi * nobj + hi][coset_rep[hi][g.identity]]);

    for (int outer = 0; outer < static_cast<int>(cat.morphism_count()); ++outer) {
        int k = src_of[outer], l = dst_of[outer], c = rep_of[outer];
        for (int inner : cat.to_object(k)) {
            int b = rep_of[inner];
            int composite = coset_rep[l][g.mul(b, c)];
            cat.set_compose(outer, inner, id_of[src_of[inner] * nobj + l][composite]);
        }
    }
    return cat;
}

}  // namespace burnside
