#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncalg/invariant.hpp"
#include "ncalg/linalg.hpp"
#include "ncalg/membership.hpp"
#include "ncalg/parse.hpp"
#include "ncalg/poly.hpp"
#include "ncalg/rational.hpp"
#include "ncalg/witness.hpp"

namespace ncalg {

// Wire format for scalars: JSON integers, or "p/q" / "p" strings for
// anything that does not fit a plain integer.
inline Rat rat_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return Rat::from_string(j.get<std::string>());
    throw std::invalid_argument("rational entries must be integers or \"p/q\" strings");
}

inline nlohmann::json rat_to_json(const Rat& r) {
    if (r.is_integer() && r.numerator().fits_slong_p())
        return nlohmann::json(static_cast<std::int64_t>(r.numerator().get_si()));
    return nlohmann::json(r.str());
}

// Matrices are arrays of rows, row-major.
inline RatMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<Rat> entries;
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = j[i];
        if (!row.is_array()) throw std::invalid_argument("matrix rows must be arrays");
        if (i == 0) cols = row.size();
        else if (row.size() != cols) throw std::invalid_argument("matrix rows have unequal lengths");
        for (const auto& e : row) entries.push_back(rat_from_json(e));
    }
    return RatMatrix(rows, cols, std::move(entries));
}

inline nlohmann::json matrix_to_json(const RatMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Vectors are flat arrays; a single-column matrix is also accepted.
inline std::vector<Rat> vector_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("vector must be an array");
    std::vector<Rat> v;
    v.reserve(j.size());
    for (const auto& e : j) {
        if (e.is_array()) {
            if (e.size() != 1) throw std::invalid_argument("column vector rows must have one entry");
            v.push_back(rat_from_json(e[0]));
        } else {
            v.push_back(rat_from_json(e));
        }
    }
    return v;
}

inline nlohmann::json witness_to_json(const Witness& w) {
    nlohmann::json x = nlohmann::json::array();
    for (const RatMatrix& m : w.X.mats) x.push_back(matrix_to_json(m));
    return nlohmann::json{{"n", w.n}, {"r", w.r}, {"X", std::move(x)},
                          {"V", matrix_to_json(w.V)}, {"verified", w.checked}};
}

inline Witness witness_from_json(const nlohmann::json& j) {
    Witness w;
    w.n = j.at("n").get<std::size_t>();
    w.r = j.at("r").get<std::size_t>();
    std::vector<RatMatrix> mats;
    for (const auto& mj : j.at("X")) {
        RatMatrix m = matrix_from_json(mj);
        if (m.rows() != w.n || m.cols() != w.n)
            throw std::invalid_argument("witness: X matrices must be n x n");
        mats.push_back(std::move(m));
    }
    w.X = MatTuple(w.n, std::move(mats));
    w.V = matrix_from_json(j.at("V"));
    if (w.V.rows() != w.n || w.V.cols() != w.r)
        throw std::invalid_argument("witness: V must be n x r");
    w.checked = j.value("verified", false);
    return w;
}

inline nlohmann::json verdict_to_json(const MembershipVerdict& v) {
    nlohmann::json j;
    switch (v.kind) {
        case MembershipVerdict::Kind::member: j["verdict"] = "member"; break;
        case MembershipVerdict::Kind::non_member: j["verdict"] = "non-member"; break;
        case MembershipVerdict::Kind::unknown: j["verdict"] = "unknown"; break;
    }
    if (v.certificate) {
        j["h"] = format_poly(v.certificate->h, 'y');
        j["route"] = route_name(v.certificate->route);
        if (v.certificate->m) j["m"] = *v.certificate->m;
    }
    if (v.cap) j["cap"] = *v.cap;
    return j;
}

inline nlohmann::json closure_to_json(const KrylovClosure& c) {
    nlohmann::json basis = nlohmann::json::array();
    nlohmann::json labels = nlohmann::json::array();
    for (std::size_t k = 0; k < c.rank(); ++k) {
        nlohmann::json col = nlohmann::json::array();
        for (std::size_t i = 0; i < c.ambient_dim; ++i) col.push_back(rat_to_json(c.basis(i, k)));
        basis.push_back(std::move(col));
        std::string label = "1";
        if (!c.labels[k].word.is_empty()) {
            label.clear();
            detail::format_word(label, c.labels[k].word, 'y');
        }
        labels.push_back(label);
    }
    return nlohmann::json{{"ambient_dim", c.ambient_dim}, {"rank", c.rank()},
                          {"stabilized_at", c.stabilized_at}, {"basis", std::move(basis)},
                          {"labels", std::move(labels)}};
}

}  // namespace ncalg
