#pragma once

// JSON documents for representations, extension data, Picard invariants
// and K0 classes.

#include <json.hpp>

#include <string>

#include "extension.hpp"
#include "k0.hpp"
#include "parse.hpp"
#include "picard.hpp"

namespace sl2rat::io {

using Json = nlohmann::ordered_json;

[[noreturn]] inline void schema_error(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) schema_error(std::string("expected an object with field \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) schema_error(std::string("missing field \"") + key + "\"");
    return *it;
}

/// Accepts strings ("z/(z+1)") and JSON integers.
inline RatFunc ratfunc_from_json(const Json& j) {
    if (j.is_string()) return parse_ratfunc(j.get<std::string>());
    if (j.is_number_integer()) return RatFunc(Rational(j.get<long>()));
    schema_error("expected a rational function string, got " + j.dump());
}

inline Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    schema_error("expected a rational number string, got " + j.dump());
}

inline long integer_from_json(const Json& j) {
    if (!j.is_number_integer()) schema_error("expected an integer, got " + j.dump());
    return j.get<long>();
}

inline Json to_json(const RatFunc& f) { return f.to_string(); }
inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Mat mat_from_json(const Json& j, std::size_t rows, std::size_t cols, const char* what) {
    const std::string shape = std::to_string(rows) + "x" + std::to_string(cols);
    if (!j.is_array() || j.size() != rows) schema_error(std::string(what) + " must be a " + shape + " matrix");
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) schema_error(std::string(what) + " must be a " + shape + " matrix");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = ratfunc_from_json(j[i][k]);
    }
    return m;
}

inline Json to_json(const RationalRep& r) {
    return Json{{"dim", r.dim()}, {"L1", to_json(r.B)}, {"Lm1", to_json(r.A)}};
}

/// {"dim": m, "L1": [[...]], "Lm1": [[...]]}; shape-checked, not validated.
inline RationalRep rep_from_json(const Json& j) {
    long m = integer_from_json(field(j, "dim"));
    if (m < 1) schema_error("dim must be positive");
    auto n = static_cast<std::size_t>(m);
    return {mat_from_json(field(j, "Lm1"), n, n, "Lm1"), mat_from_json(field(j, "L1"), n, n, "L1")};
}

inline RationalRep valid_rep_from_json(const Json& j) {
    RationalRep r = rep_from_json(j);
    validate(r);
    return r;
}

/// {left, right, B1, T}: left and right are representation documents.
inline ExtDatum ext_datum_from_json(const Json& j) {
    RationalRep left = valid_rep_from_json(field(j, "left"));
    RationalRep right = valid_rep_from_json(field(j, "right"));
    return {left, right, mat_from_json(field(j, "B1"), left.dim(), right.dim(), "B1"),
            mat_from_json(field(j, "T"), left.dim(), right.dim(), "T")};
}

inline Json to_json(const PicInvariant& p) {
    Json classes = Json::array();
    for (const auto& [q, m] : p.classes) classes.push_back(Json::array({q.to_string(), m}));
    return Json{{"level", to_json(p.level)}, {"lead", to_json(p.lead)}, {"classes", std::move(classes)}};
}

/// Class keys must be monic irreducible canonical shift representatives.
inline PicInvariant pic_from_json(const Json& j) {
    PicInvariant p{rational_from_json(field(j, "level")), rational_from_json(field(j, "lead")), {}};
    if (p.lead == 0) schema_error("lead must be nonzero");
    const Json& cls = field(j, "classes");
    if (!cls.is_array()) schema_error("classes must be a list of [poly, multiplicity] pairs");
    for (const auto& e : cls) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string())
            schema_error("classes must be a list of [poly, multiplicity] pairs");
        Poly q = parse_poly(e[0].get<std::string>());
        if (q.degree() < 1 || !is_irreducible(q) || canonical_shift_rep(q).first != q)
            schema_error("class key " + q.to_string() + " is not a canonical irreducible shift representative");
        if (p.classes.count(q)) schema_error("class key " + q.to_string() + " repeated");
        long m = integer_from_json(e[1]);
        if (m != 0) p.classes[q] = static_cast<int>(m);
    }
    return p;
}

inline Json to_json(const FactorKey& k) {
    Json j{{"kind", k.opaque ? "Opaque" : "Rank1"}, {"level", to_json(k.level)}, {"dim", k.dim}};
    if (k.opaque) {
        j["witness"] = k.serial;
        j["certified"] = k.certified;
    } else {
        j["invariant"] = k.serial;
    }
    return j;
}

inline Json to_json(const K0Class& c) {
    Json terms = Json::array();
    for (const auto& [k, n] : c.terms()) {
        Json t = to_json(k);
        t["coefficient"] = n;
        terms.push_back(std::move(t));
    }
    return terms;
}

inline Json error_json(const Error& e) { return Json{{"error", kind_name(e.kind())}, {"message", e.what()}}; }

}  // namespace sl2rat::io
