#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "burnside/matrix.hpp"
#include "burnside/restrict.hpp"
#include "burnside/ring.hpp"

namespace burnside {

struct ReportOptions {
    bool json = false;
    bool eam = false;
    bool idempotents = false;
    bool mult_table = false;
    bool det = false;

    bool all_sections() const { return !(eam || idempotents || mult_table || det); }
};

/// Exit code plus the rendered report. Reports are deterministic and
/// byte-stable for identical inputs; rationals appear as "p/q" strings.
struct Outcome {
    int exit_code = 0;
    std::string body;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitNoFactorization = 2;
inline constexpr int kExitIo = 3;

namespace detail {

inline void render_matrix_text(std::ostream& os, const RatMatrix& m) {
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            width[j] = std::max(width[j], m(i, j).str().size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::string s = m(i, j).str();
            os << ' ' << std::string(width[j] - s.size(), ' ') << s;
        }
        os << " ]\n";
    }
}

inline nlohmann::ordered_json matrix_json(const RatMatrix& m) {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Nonzero coefficients keyed by basis label, in basis order.
inline nlohmann::ordered_json element_json(const BurnsideRing& ring, const RingElement& x) {
    auto obj = nlohmann::ordered_json::object();
    for (std::size_t pos = 0; pos < ring.rank(); ++pos)
        if (!x.coeffs[pos].is_zero()) obj[ring.basis_label(pos)] = x.coeffs[pos].str();
    return obj;
}

inline std::string basis_line(const BurnsideRing& ring) {
    std::string line;
    for (std::size_t pos = 0; pos < ring.rank(); ++pos) {
        if (pos) line += ' ';
        line += ring.basis_label(pos);
    }
    return line;
}

inline Outcome failure_outcome(const std::string& name, const CheckReport& report,
                               bool fs_stage, bool json) {
    Outcome out;
    out.exit_code = fs_stage ? kExitNoFactorization : kExitInvalid;
    if (json) {
        nlohmann::ordered_json doc;
        doc["category"] = name;
        doc["status"] = fs_stage ? "no-factorization-system" : "invalid-category";
        doc["findings"] = report.findings;
        out.body = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "category: " << name << "\n";
        if (fs_stage) {
            os << "validation: ok\n";
            os << "factorization system: FAILED\n";
        } else {
            os << "validation: FAILED\n";
        }
        for (const auto& f : report.findings) os << "  - " << f << "\n";
        out.body = os.str();
    }
    return out;
}

}  // namespace detail

/// Validates, certifies the factorization system, builds the ring and renders
/// the requested sections. Exit codes: 0 ok, 1 invalid category, 2 no
/// factorization system.
inline Outcome analyze_category(FinCat cat, const std::optional<FactorizationSystem>& fs_override,
                                const ReportOptions& opt) {
    CheckReport valid = validate_category(cat);
    if (!valid.ok()) return detail::failure_outcome(cat.name, valid, false, opt.json);

    MorphismClasses classes = classify_morphisms(cat);
    FactorizationSystem fs = fs_override ? *fs_override : maximal_classes(classes);
    CheckReport fs_report = verify_factorization_system(cat, fs, classes);
    if (!fs_report.ok()) return detail::failure_outcome(cat.name, fs_report, true, opt.json);

    BurnsideRing ring = assemble_burnside_ring(std::move(cat), std::move(fs),
                                               std::move(classes));
    EamMatrices eam;
    bool eam_ok = false;
    if (opt.all_sections() || opt.eam || opt.det) {
        eam = eam_matrices(ring.cat, ring.fs, ring.basis);
        eam_ok = mat_mul(mat_mul(eam.e, eam.a), eam.m) == ring.H;
    }

    Outcome out;
    std::size_t n = ring.rank();
    if (opt.json) {
        nlohmann::ordered_json doc;
        doc["category"] = ring.cat.name;
        doc["status"] = "ok";
        doc["findings"] = nlohmann::ordered_json::array();
        auto objects = nlohmann::ordered_json::array();
        for (std::size_t pos = 0; pos < n; ++pos) objects.push_back(ring.basis_label(pos));
        doc["objects"] = std::move(objects);
        doc["H"] = detail::matrix_json(ring.H);
        doc["H_inv"] = detail::matrix_json(ring.H_inv);
        doc["unit"] = detail::element_json(ring, ring.unit);
        if (opt.all_sections() || opt.det) {
            doc["det"] = mat_det(ring.H).str();
            Rational prod(1);
            for (std::size_t pos = 0; pos < n; ++pos)
                prod *= eam.a(pos, pos);
            doc["aut_product"] = prod.str();
        }
        if (opt.all_sections() || opt.eam) {
            doc["E"] = detail::matrix_json(eam.e);
            doc["A"] = detail::matrix_json(eam.a);
            doc["M"] = detail::matrix_json(eam.m);
            doc["eam_equals_H"] = eam_ok;
        }
        if (opt.all_sections() || opt.idempotents) {
            auto list = nlohmann::ordered_json::array();
            for (std::size_t pos = 0; pos < n; ++pos)
                list.push_back({{"object", ring.basis_label(pos)},
                                {"element", detail::element_json(ring, idempotents(ring)[pos])}});
            doc["idempotents"] = std::move(list);
        }
        if (opt.all_sections() || opt.mult_table) {
            auto list = nlohmann::ordered_json::array();
            for (const auto& entry : structure_constants(ring))
                list.push_back({{"left", ring.basis_label(entry.left)},
                                {"right", ring.basis_label(entry.right)},
                                {"element", detail::element_json(ring, entry.product)}});
            doc["products"] = std::move(list);
        }
        out.body = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "category: " << ring.cat.name << "\n";
        os << "objects: " << detail::basis_line(ring) << "\n";
        os << "validation: ok\n";
        std::size_t ne = 0, nm = 0;
        for (char flag : ring.fs.epis) ne += flag;
        for (char flag : ring.fs.monos) nm += flag;
        os << "factorization system: ok (|E| = " << ne << ", |M| = " << nm << ")\n";
        os << "H:\n";
        detail::render_matrix_text(os, ring.H);
        os << "H^-1:\n";
        detail::render_matrix_text(os, ring.H_inv);
        os << "unit: " << format_element(ring, ring.unit) << "\n";
        if (opt.all_sections() || opt.det) {
            os << "det(H): " << mat_det(ring.H).str() << "\n";
            Rational prod(1);
            for (std::size_t pos = 0; pos < n; ++pos) prod *= eam.a(pos, pos);
            os << "aut product: " << prod.str() << "\n";
        }
        if (opt.all_sections() || opt.eam) {
            os << "E:\n";
            detail::render_matrix_text(os, eam.e);
            os << "A:\n";
            detail::render_matrix_text(os, eam.a);
            os << "M:\n";
            detail::render_matrix_text(os, eam.m);
            os << "H = E*A*M: " << (eam_ok ? "ok" : "FAILED") << "\n";
        }
        if (opt.all_sections() || opt.idempotents) {
            os << "idempotents:\n";
            for (std::size_t pos = 0; pos < n; ++pos)
                os << "  e(" << ring.basis_label(pos)
                   << ") = " << format_element(ring, idempotents(ring)[pos]) << "\n";
        }
        if (opt.all_sections() || opt.mult_table) {
            os << "products:\n";
            for (const auto& entry : structure_constants(ring))
                os << "  " << ring.basis_label(entry.left) << "*"
                   << ring.basis_label(entry.right) << " = "
                   << format_element(ring, entry.product) << "\n";
        }
        out.body = os.str();
    }
    return out;
}

/// Restriction report for the full subcategory on the named objects:
/// hypothesis verdict, the f* matrix and a kernel basis (structural when the
/// hypothesis holds, generic otherwise). Unknown labels throw
/// std::invalid_argument.
inline Outcome restrict_category(FinCat cat, const std::optional<FactorizationSystem>& fs_override,
                                 const std::vector<std::string>& object_labels, bool json) {
    CheckReport valid = validate_category(cat);
    if (!valid.ok()) return detail::failure_outcome(cat.name, valid, false, json);

    MorphismClasses classes = classify_morphisms(cat);
    FactorizationSystem fs = fs_override ? *fs_override : maximal_classes(classes);
    CheckReport fs_report = verify_factorization_system(cat, fs, classes);
    if (!fs_report.ok()) return detail::failure_outcome(cat.name, fs_report, true, json);

    std::vector<int> sub_objects;
    for (const auto& label : object_labels) {
        int id = cat.object_id(label);
        if (id < 0) throw std::invalid_argument("unknown object: " + label);
        sub_objects.push_back(id);
    }

    BurnsideRing ring = assemble_burnside_ring(std::move(cat), std::move(fs),
                                               std::move(classes));
    KernelResult kr;
    try {
        kr = inclusion_kernel(ring, sub_objects);
    } catch (const std::runtime_error& e) {
        CheckReport rep;
        rep.findings.push_back(e.what());
        return detail::failure_outcome(ring.cat.name, rep, true, json);
    }

    Outcome out;
    if (json) {
        nlohmann::ordered_json doc;
        doc["category"] = ring.cat.name;
        doc["status"] = "ok";
        auto objects = nlohmann::ordered_json::array();
        for (std::size_t pos = 0; pos < ring.rank(); ++pos)
            objects.push_back(ring.basis_label(pos));
        doc["objects"] = std::move(objects);
        auto sub = nlohmann::ordered_json::array();
        for (std::size_t pos = 0; pos < kr.sub_ring.rank(); ++pos)
            sub.push_back(kr.sub_ring.basis_label(pos));
        doc["subcategory"] = std::move(sub);
        doc["hypothesis"] = kr.hypothesis_holds ? "holds" : "violated";
        if (!kr.hypothesis_holds) doc["offending_morphism"] = kr.offending_morphism;
        doc["fstar"] = detail::matrix_json(kr.fstar);
        doc["kernel"] = kr.structural ? "structural" : "generic";
        auto basis = nlohmann::ordered_json::array();
        for (const auto& k : kr.kernel_basis) basis.push_back(detail::element_json(ring, k));
        doc["kernel_basis"] = std::move(basis);
        out.body = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "category: " << ring.cat.name << "\n";
        os << "objects: " << detail::basis_line(ring) << "\n";
        os << "subcategory: " << detail::basis_line(kr.sub_ring) << "\n";
        os << "validation: ok\n";
        if (kr.hypothesis_holds)
            os << "hypothesis: holds\n";
        else
            os << "hypothesis: violated by " << kr.offending_morphism << "\n";
        os << "f* (rows: subcategory basis, cols: ambient basis):\n";
        detail::render_matrix_text(os, kr.fstar);
        os << "kernel: " << (kr.structural ? "structural" : "generic") << "\n";
        os << "kernel basis:\n";
        for (const auto& k : kr.kernel_basis)
            os << "  " << format_element(ring, k) << "\n";
        out.body = os.str();
    }
    return out;
}

}  // namespace burnside
