#pragma once

// The sl2rat command line: every subcommand reads one JSON document and
// prints one result document.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "io.hpp"
#include "monoidal.hpp"

namespace sl2rat::cli {

using io::Json;

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

struct Options {
    std::string input;
    std::string format = "json";
    std::uint64_t seed = default_seed;
};

namespace detail {

using Handler = std::function<Json(const Json&, const Options&)>;

inline RationalRep rank1_rep(const Json& j) {
    RationalRep r = io::valid_rep_from_json(j);
    if (r.dim() != 1) throw Error(ErrorKind::DimensionMismatch, "expected a rank-1 module, got dim " + std::to_string(r.dim()));
    return r;
}

inline Json dims_json(const std::vector<std::size_t>& d) {
    Json a = Json::array();
    for (auto x : d) a.push_back(x);
    return a;
}

inline Json cmd_validate(const Json& in, const Options&) {
    RationalRep r = io::valid_rep_from_json(in);
    return Json{{"valid", true}, {"dim", r.dim()}};
}

inline Json cmd_casimir(const Json& in, const Options&) {
    RationalRep r = io::valid_rep_from_json(in);
    Mat c = casimir_matrix(r);
    auto lvl = casimir_level(r);
    return Json{{"casimir", io::to_json(c)}, {"constant", c.is_constant()}, {"level", lvl ? io::to_json(*lvl) : Json()}};
}

inline Json cmd_minpoly(const Json& in, const Options&) {
    return Json{{"minpoly", casimir_minpoly(io::valid_rep_from_json(in)).to_string("t")}};
}

inline Json cmd_levels(const Json& in, const Options&) {
    Json comps = Json::array();
    for (const auto& c : level_decompose(io::valid_rep_from_json(in)))
        comps.push_back(Json{{"level", io::to_json(c.level)},
                             {"exponent", c.exponent},
                             {"dim", c.rep.dim()},
                             {"basis", io::to_json(c.basis)},
                             {"rep", io::to_json(c.rep)}});
    return Json{{"components", std::move(comps)}};
}

inline Json cmd_filtration(const Json& in, const Options&) {
    Json comps = Json::array();
    for (const auto& c : level_decompose(io::valid_rep_from_json(in))) {
        Filtration f = canonical_filtration(c);
        Json steps = Json::array();
        for (const auto& s : f.steps) steps.push_back(Json{{"basis", io::to_json(s.basis)}, {"quotient", io::to_json(s.quotient)}});
        comps.push_back(Json{{"level", io::to_json(c.level)},
                             {"exponent", c.exponent},
                             {"length", f.steps.size()},
                             {"quotient_dims", dims_json(f.quotient_dims())},
                             {"steps", std::move(steps)}});
    }
    return Json{{"components", std::move(comps)}};
}

inline Json cmd_devissage(const Json& in, const Options& o) {
    Devissage d = devissage(io::valid_rep_from_json(in), o.seed);
    return Json{{"class", io::to_json(d.cls)},
                {"text", d.cls.to_string()},
                {"dim", k0_dim(d.cls)},
                {"complete", d.complete},
                {"certificate", d.tree.to_text()}};
}

inline Json cmd_tensor(const Json& in, const Options&) {
    return io::to_json(tensor(io::valid_rep_from_json(io::field(in, "left")), io::valid_rep_from_json(io::field(in, "right"))));
}

inline Json cmd_hom(const Json& in, const Options&) {
    return io::to_json(
        internal_hom(io::valid_rep_from_json(io::field(in, "left")), io::valid_rep_from_json(io::field(in, "right"))));
}

inline Json cmd_dual(const Json& in, const Options&) { return io::to_json(dual(io::valid_rep_from_json(in))); }

/// Either a rank-1 representation document or {"mu", "r"}.
inline Json cmd_pic_normalize(const Json& in, const Options&) {
    if (in.is_object() && in.contains("dim")) return io::to_json(pic_invariant(rank1_rep(in)));
    return io::to_json(pic_invariant(io::rational_from_json(io::field(in, "mu")), io::ratfunc_from_json(io::field(in, "r"))));
}

inline Json cmd_pic_mul(const Json& in, const Options&) {
    return io::to_json(pic_mul(io::pic_from_json(io::field(in, "left")), io::pic_from_json(io::field(in, "right"))));
}

inline Json cmd_pic_inv(const Json& in, const Options&) { return io::to_json(pic_inverse(io::pic_from_json(in))); }

inline Json cmd_iso(const Json& in, const Options&) {
    IsoResult r = iso_rank1(rank1_rep(io::field(in, "left")), rank1_rep(io::field(in, "right")));
    if (r.intertwiner) return Json{{"isomorphic", true}, {"intertwiner", io::to_json(*r.intertwiner)}};
    return Json{{"isomorphic", false}, {"reason", reason_name(r.reason)}};
}

inline Json cmd_classify(const Json& in, const Options&) {
    Rank1Classification c = classify_rank1(rank1_rep(in));
    Json kinds = Json::array();
    for (auto k : c.kinds) kinds.push_back(kind_name(k));
    if (c.kinds.empty()) return Json{{"result", "NotFromPolynomial"}, {"kinds", std::move(kinds)}};
    return Json{{"result", "FromPolynomial"}, {"kinds", std::move(kinds)}, {"gamma", io::to_json(c.gamma)}};
}

inline Rank1Kind kind_from_json(const Json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        for (Rank1Kind k : {Rank1Kind::I, Rank1Kind::II, Rank1Kind::III, Rank1Kind::IV})
            if (s == kind_name(k)) return k;
    }
    io::schema_error("kind must be one of I, II, III, IV, got " + j.dump());
}

/// Either {"kind", "mu", "gamma"} or a representation document with
/// polynomial entries.
inline Json cmd_rationalize(const Json& in, const Options&) {
    PolynomialRep p;
    if (in.is_object() && in.contains("kind"))
        p = poly_rank1(kind_from_json(in["kind"]), io::rational_from_json(io::field(in, "mu")),
                       io::rational_from_json(io::field(in, "gamma")));
    else
        p = to_polynomial_rep(io::rep_from_json(in));
    RationalRep r = rationalize(p);
    validate(r);
    return io::to_json(r);
}

inline Json cmd_solve_add(const Json& in, const Options&) {
    auto phi = solve_add_diff(io::ratfunc_from_json(io::field(in, "s")));
    if (!phi) return Json{{"solvable", false}};
    return Json{{"solvable", true}, {"phi", io::to_json(*phi)}};
}

inline Json cmd_solve_mult(const Json& in, const Options&) {
    auto t = solve_mult_diff(io::ratfunc_from_json(io::field(in, "f")));
    if (!t) return Json{{"solvable", false}};
    return Json{{"solvable", true}, {"t", io::to_json(*t)}};
}

inline Json cmd_ext_build(const Json& in, const Options&) { return io::to_json(ext_build(io::ext_datum_from_json(in))); }

inline Json cmd_ext_casimir(const Json& in, const Options&) {
    return Json{{"casimir", ext_is_casimir(io::ext_datum_from_json(in))}};
}

inline Json cmd_ext_class_eq(const Json& in, const Options&) {
    ExtClassResult r = ext_class_equal(rank1_rep(io::field(in, "left")), rank1_rep(io::field(in, "right")),
                                       io::ratfunc_from_json(io::field(in, "b1")), io::ratfunc_from_json(io::field(in, "b2")),
                                       io::rational_from_json(io::field(in, "T1")), io::rational_from_json(io::field(in, "T2")));
    return Json{{"result", result_name(r)}};
}

inline Json cmd_orbit(const Json& in, const Options&) {
    return Json{{"orbit", io::to_json(cyclic_orbit(io::rational_from_json(io::field(in, "mu")),
                                                    io::ratfunc_from_json(io::field(in, "r")),
                                                    io::integer_from_json(io::field(in, "m"))))}};
}

inline void render_text(const Json& j, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto is_leaf = [](const Json& v) {
        if (!v.is_structured()) return true;
        for (const auto& x : v)
            if (x.is_object() || (x.is_array() && std::any_of(x.begin(), x.end(), [](const Json& y) { return y.is_structured(); })))
                return false;
        return v.is_array();
    };
    for (const auto& [k, v] : j.items()) {
        if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
            out += pad + k + ":\n";
            std::istringstream lines(v.get<std::string>());
            for (std::string l; std::getline(lines, l);) out += pad + "  " + l + "\n";
        } else if (is_leaf(v)) {
            out += pad + k + ": " + scalar(v) + "\n";
        } else if (v.is_object()) {
            out += pad + k + ":\n";
            render_text(v, indent + 1, out);
        } else {
            out += pad + k + ":\n";
            for (const auto& x : v) {
                out += pad + "  -\n";
                if (x.is_object())
                    render_text(x, indent + 2, out);
                else
                    out += pad + "    " + scalar(x) + "\n";
            }
        }
    }
}

inline std::string render(const Json& j, const std::string& format) {
    if (format == "json") return j.dump() + "\n";
    std::string out;
    render_text(j, 0, out);
    return out;
}

}  // namespace detail

/// Runs one command line (without the program name). Input is read from
/// --input or, if absent, from `in`.
inline Result execute(const std::vector<std::string>& args, std::istream& in = std::cin) {
    Options opt;
    CLI::App app{"Exact computations with rational sl(2)-modules over Q(z).", "sl2rat"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--input", opt.input, "input JSON document (default: standard input)");
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", opt.seed, "seed for the cyclic vector search in devissage");

    std::vector<std::pair<CLI::App*, detail::Handler>> handlers;
    auto add = [&](CLI::App* parent, const char* name, const char* help, detail::Handler h) {
        handlers.emplace_back(parent->add_subcommand(name, help), std::move(h));
    };
    add(&app, "validate", "check the commutation relation and invertibility of L1", detail::cmd_validate);
    add(&app, "casimir", "Casimir matrix and its level when constant scalar", detail::cmd_casimir);
    add(&app, "minpoly", "minimal polynomial of the Casimir operator", detail::cmd_minpoly);
    add(&app, "levels", "decomposition into generalized Casimir components", detail::cmd_levels);
    add(&app, "filtration", "canonical filtration of each level component", detail::cmd_filtration);
    add(&app, "devissage", "K0 class with its certificate tree", detail::cmd_devissage);
    add(&app, "tensor", "tensor product of {left, right}", detail::cmd_tensor);
    add(&app, "hom", "internal Hom from left to right", detail::cmd_hom);
    add(&app, "dual", "dual module", detail::cmd_dual);
    CLI::App* pic = app.add_subcommand("pic", "Picard invariants of rank-1 modules");
    pic->require_subcommand(1);
    add(pic, "normalize", "invariant of a rank-1 module or of {mu, r}", detail::cmd_pic_normalize);
    add(pic, "mul", "product of {left, right}", detail::cmd_pic_mul);
    add(pic, "inv", "inverse invariant", detail::cmd_pic_inv);
    add(&app, "iso", "isomorphism test for rank-1 {left, right}", detail::cmd_iso);
    add(&app, "classify-rank1", "polynomial families rationalizing to the module", detail::cmd_classify);
    add(&app, "rationalize", "rational module of a polynomial rank-1 family or module", detail::cmd_rationalize);
    add(&app, "solve-add", "phi with phi(z+1) - phi(z) = s", detail::cmd_solve_add);
    add(&app, "solve-mult", "t with t(z) / t(z+1) = f", detail::cmd_solve_mult);
    CLI::App* ext = app.add_subcommand("ext", "extensions from data {left, right, B1, T}");
    ext->require_subcommand(1);
    add(ext, "build", "the extension module", detail::cmd_ext_build);
    add(ext, "casimir", "whether the extension is a Casimir module", detail::cmd_ext_casimir);
    add(ext, "class-eq", "compare rank-1 classes {left, right, b1, b2, T1, T2}", detail::cmd_ext_class_eq);
    add(&app, "orbit", "cyclic orbit product for {mu, r, m}", detail::cmd_orbit);

    Result res;
    std::vector<const char*> argv{"sl2rat"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        app.exit(e, out, err);
        res.out = out.str();
        res.err = err.str();
        res.code = e.get_exit_code() == 0 ? 0 : 2;
        return res;
    }

    const detail::Handler* handler = nullptr;
    for (const auto& [sub, h] : handlers)
        if (sub->parsed()) handler = &h;

    std::string text;
    if (opt.input.empty() || opt.input == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream f(opt.input, std::ios::binary);
        if (!f) {
            res.err = "sl2rat: cannot read input file " + opt.input + "\n";
            res.code = 2;
            return res;
        }
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }

    try {
        Json doc;
        try {
            doc = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw Error(ErrorKind::Syntax, std::string("input is not JSON: ") + e.what());
        }
        res.out = detail::render((*handler)(doc, opt), opt.format);
    } catch (const Error& e) {
        res.out = opt.format == "json" ? io::error_json(e).dump() + "\n"
                                       : std::string("error: ") + kind_name(e.kind()) + ": " + e.what() + "\n";
        res.code = 1;
    }
    return res;
}

}  // namespace sl2rat::cli
