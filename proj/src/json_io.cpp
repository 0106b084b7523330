#include "wicksos/json_io.hpp"

#include <json.hpp>

#include "wicksos/expr.hpp"

namespace wicksos {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw SchemaError("malformed JSON");
    return j;
}

const ordered_json& field(const ordered_json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw SchemaError(std::string("missing field '") + name + "'");
    return *it;
}

std::string str_field(const ordered_json& j, const char* name) {
    const auto& f = field(j, name);
    if (!f.is_string()) throw SchemaError(std::string("field '") + name + "' must be a string");
    return f.get<std::string>();
}

long int_field(const ordered_json& j, const char* name) {
    const auto& f = field(j, name);
    if (!f.is_number_integer()) throw SchemaError(std::string("field '") + name + "' must be an integer");
    return f.get<long>();
}

}  // namespace

std::string certificate_to_json(const Certificate& c) {
    ordered_json j;
    j["n"] = c.n;
    j["hbar"] = c.hbar.str();
    j["mu"] = c.mu.str();
    j["target"] = poly_str(c.target);
    ordered_json sos = ordered_json::array();
    for (const auto& atom : c.sos) {
        ordered_json a;
        a["lambda"] = atom.lambda.str();
        a["g"] = poly_str(atom.g);
        sos.push_back(std::move(a));
    }
    j["sos"] = std::move(sos);
    j["witness_h"] = poly_str(c.witness_h);
    j["verified"] = c.verified;
    ordered_json meta;
    meta["k"] = c.meta_k;
    meta["design_ref"] = c.design_ref;
    if (c.meta_alpha) meta["alpha"] = c.meta_alpha->str();
    j["meta"] = std::move(meta);
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    ordered_json j = parse_json(text);
    Certificate c((int)int_field(j, "n"));
    if (c.n < 1) throw SchemaError("n must be >= 1");
    try {
        c.hbar = Rat::parse(str_field(j, "hbar"));
        c.mu = Rat::parse(str_field(j, "mu"));
        c.target = parse_poly(str_field(j, "target"), c.n);
        const auto& sos = field(j, "sos");
        if (!sos.is_array()) throw SchemaError("'sos' must be an array");
        for (const auto& a : sos) {
            SosAtom atom{Rat::parse(str_field(a, "lambda")),
                         parse_poly(str_field(a, "g"), c.n)};
            c.sos.push_back(std::move(atom));
        }
        c.witness_h = parse_poly(str_field(j, "witness_h"), c.n);
        const auto& v = field(j, "verified");
        if (!v.is_boolean()) throw SchemaError("'verified' must be a boolean");
        c.verified = v.get<bool>();
        if (j.contains("meta")) {
            const auto& meta = j["meta"];
            if (meta.contains("k")) c.meta_k = (int)int_field(meta, "k");
            if (meta.contains("design_ref")) c.design_ref = str_field(meta, "design_ref");
            if (meta.contains("alpha")) c.meta_alpha = Rat::parse(str_field(meta, "alpha"));
        }
    } catch (const ParseError& e) {
        throw SchemaError(std::string("bad expression: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("bad number: ") + e.what());
    }
    return c;
}

std::string design_to_json(const Design& d) {
    ordered_json j;
    j["n"] = d.n;
    j["m"] = d.m;
    ordered_json atoms = ordered_json::array();
    for (const auto& atom : d.atoms) {
        ordered_json a;
        a["lambda"] = atom.lambda.str();
        ordered_json v = ordered_json::array();
        for (const auto& e : atom.v) v.push_back(e.str());
        a["v"] = std::move(v);
        a["N"] = atom.norm;
        atoms.push_back(std::move(a));
    }
    j["atoms"] = std::move(atoms);
    return j.dump(2) + "\n";
}

Design design_from_json(const std::string& text) {
    ordered_json j = parse_json(text);
    Design d;
    d.n = (int)int_field(j, "n");
    long m = int_field(j, "m");
    if (d.n < 1 || m < 0) throw SchemaError("bad design dimensions");
    d.m = (unsigned)m;
    const auto& atoms = field(j, "atoms");
    if (!atoms.is_array()) throw SchemaError("'atoms' must be an array");
    try {
        for (const auto& a : atoms) {
            DesignAtom atom;
            atom.lambda = Rat::parse(str_field(a, "lambda"));
            const auto& v = field(a, "v");
            if (!v.is_array()) throw SchemaError("atom 'v' must be an array");
            for (const auto& e : v) {
                if (!e.is_string()) throw SchemaError("vector entries must be strings");
                atom.v.push_back(GaussRat::parse(e.get<std::string>()));
            }
            if ((int)atom.v.size() != d.n + 1)
                throw SchemaError("vector length must be n+1");
            atom.norm = int_field(a, "N");
            d.atoms.push_back(std::move(atom));
        }
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("bad number: ") + e.what());
    }
    return d;
}

std::string fock_matrix_to_json(const FockMatrix& m) {
    ordered_json j;
    j["n"] = m.n;
    j["level"] = m.level;
    j["hbar"] = m.hbar.str();
    j["dim"] = m.dim();
    ordered_json basis = ordered_json::array();
    for (const auto& K : m.basis) {
        ordered_json row = ordered_json::array();
        for (auto e : K) row.push_back(e);
        basis.push_back(std::move(row));
    }
    j["basis"] = std::move(basis);
    ordered_json entries = ordered_json::array();
    for (const auto& row : m.op) {
        ordered_json r = ordered_json::array();
        for (const auto& e : row) r.push_back(e.str());
        entries.push_back(std::move(r));
    }
    j["entries"] = std::move(entries);
    ordered_json gram = ordered_json::array();
    for (const auto& w : m.gram) gram.push_back(w.str());
    j["gram_weights"] = std::move(gram);
    return j.dump(2) + "\n";
}

std::string herm_matrix_to_json(const HermMatrix& m) {
    ordered_json j;
    j["dim"] = m.dim;
    ordered_json entries = ordered_json::array();
    for (const auto& row : m.a) {
        ordered_json r = ordered_json::array();
        for (const auto& e : row) r.push_back(e.str());
        entries.push_back(std::move(r));
    }
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

HermMatrix herm_matrix_from_json(const std::string& text) {
    ordered_json j = parse_json(text);
    HermMatrix m;
    long dim = int_field(j, "dim");
    if (dim < 0) throw SchemaError("bad dimension");
    m.dim = (std::size_t)dim;
    const auto& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != m.dim)
        throw SchemaError("'entries' must be a dim x dim array");
    try {
        for (const auto& row : entries) {
            if (!row.is_array() || row.size() != m.dim)
                throw SchemaError("'entries' must be a dim x dim array");
            std::vector<GaussRat> r;
            for (const auto& e : row) {
                if (!e.is_string()) throw SchemaError("entries must be strings");
                r.push_back(GaussRat::parse(e.get<std::string>()));
            }
            m.a.push_back(std::move(r));
        }
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("bad number: ") + e.what());
    }
    return m;
}

std::string psd_result_to_json(const PsdResult& r) {
    ordered_json j;
    j["psd"] = r.psd;
    if (r.psd) {
        ordered_json fs = ordered_json::array();
        for (const auto& [d, col] : r.factors) {
            ordered_json f;
            f["d"] = d.str();
            ordered_json c = ordered_json::array();
            for (const auto& e : col) c.push_back(e.str());
            f["column"] = std::move(c);
            fs.push_back(std::move(f));
        }
        j["factors"] = std::move(fs);
    } else {
        ordered_json w = ordered_json::array();
        for (const auto& e : r.witness) w.push_back(e.str());
        j["witness"] = std::move(w);
        j["value"] = r.witness_value.str();
    }
    return j.dump(2) + "\n";
}

}  // namespace wicksos
