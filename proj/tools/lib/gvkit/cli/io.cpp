#include "gvkit/cli/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "gvkit/errors.hpp"

namespace gvkit::cli {

namespace {

using Json = nlohmann::ordered_json;

Json integer_to_json(const Integer& n) {
    static const Integer kMax = std::numeric_limits<std::int64_t>::max();
    static const Integer kMin = std::numeric_limits<std::int64_t>::min();
    if (n >= kMin && n <= kMax) return n.convert_to<std::int64_t>();
    return n.str();
}

Integer integer_from_json(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
            throw SchemaError("field " + field + " is not an integer");
        }
    }
    throw SchemaError("field " + field + " is not an integer");
}

int int_from_json(const Json& j, const std::string& field) {
    if (!j.is_number_integer()) throw SchemaError("field " + field + " is not an integer");
    return j.get<int>();
}

Json parse_root(const std::string& text) {
    Json root = Json::parse(text, nullptr, false);
    if (root.is_discarded()) throw SchemaError("input is not valid JSON");
    if (!root.is_object()) throw SchemaError("top-level value must be an object");
    return root;
}

const Json& require_field(const Json& obj, const std::string& field) {
    auto it = obj.find(field);
    if (it == obj.end()) throw SchemaError("missing field " + field);
    return *it;
}

}  // namespace

std::string gv_entries_to_json(const GvEntries& entries) {
    Json root;
    root["entries"] = Json::array();
    for (const auto& [key, n] : entries) {
        Json entry;
        entry["h"] = key.second;
        entry["k"] = key.first;
        entry["n"] = integer_to_json(n);
        root["entries"].push_back(std::move(entry));
    }
    return root.dump(2) + "\n";
}

std::string gv_entries_to_csv(const GvEntries& entries) {
    std::ostringstream os;
    os << "k,h,n\n";
    for (const auto& [key, n] : entries) {
        os << key.first << "," << key.second << "," << n.str() << "\n";
    }
    return os.str();
}

GvEntries parse_gv_entries_json(const std::string& text) {
    Json root = parse_root(text);
    const Json& arr = require_field(root, "entries");
    if (!arr.is_array()) throw SchemaError("field entries must be an array");
    GvEntries out;
    for (const Json& entry : arr) {
        if (!entry.is_object()) throw SchemaError("entries elements must be objects");
        int h = int_from_json(require_field(entry, "h"), "h");
        int k = int_from_json(require_field(entry, "k"), "k");
        if (h < 0) throw SchemaError("field h must be >= 0");
        if (k < 1) throw SchemaError("field k must be >= 1");
        Integer n = integer_from_json(require_field(entry, "n"), "n");
        if (n != 0) out[{k, h}] += n;
    }
    return out;
}

std::string gw_entries_to_json(const GwEntries& entries) {
    Json root;
    root["entries"] = Json::array();
    for (const auto& [key, value] : entries) {
        Json entry;
        entry["g"] = key.second;
        entry["d"] = key.first;
        entry["num"] = integer_to_json(numerator(value));
        entry["den"] = integer_to_json(denominator(value));
        root["entries"].push_back(std::move(entry));
    }
    return root.dump(2) + "\n";
}

std::string gw_entries_to_csv(const GwEntries& entries) {
    std::ostringstream os;
    os << "d,g,num,den\n";
    for (const auto& [key, value] : entries) {
        os << key.first << "," << key.second << "," << numerator(value).str() << ","
           << denominator(value).str() << "\n";
    }
    return os.str();
}

GwEntries parse_gw_entries_json(const std::string& text) {
    Json root = parse_root(text);
    const Json& arr = require_field(root, "entries");
    if (!arr.is_array()) throw SchemaError("field entries must be an array");
    GwEntries out;
    for (const Json& entry : arr) {
        if (!entry.is_object()) throw SchemaError("entries elements must be objects");
        int g = int_from_json(require_field(entry, "g"), "g");
        int d = int_from_json(require_field(entry, "d"), "d");
        if (g < 0) throw SchemaError("field g must be >= 0");
        if (d < 1) throw SchemaError("field d must be >= 1");
        Integer num = integer_from_json(require_field(entry, "num"), "num");
        Integer den = integer_from_json(require_field(entry, "den"), "den");
        if (den == 0) throw SchemaError("field den must be nonzero");
        Rational value = den < 0 ? Rational(-num, -den) : Rational(num, den);
        if (value != 0) out[{d, g}] += value;
    }
    return out;
}

namespace {

grr::KunnethClass parse_kunneth_terms(const Json& arr, const std::string& field,
                                      const grr::GrrContext& ctx) {
    if (!arr.is_array()) throw SchemaError("field " + field + " must be an array of terms");
    grr::KunnethClass out;
    for (const Json& term : arr) {
        if (!term.is_object()) throw SchemaError("terms of " + field + " must be objects");
        std::vector<std::string> names;
        const Json& xm = require_field(term, "x_monomial");
        if (!xm.is_array()) throw SchemaError(field + ".x_monomial must be an array of names");
        for (const Json& n : xm) {
            if (!n.is_string()) throw SchemaError(field + ".x_monomial entries must be strings");
            names.push_back(n.get<std::string>());
        }
        const Json& yb = require_field(term, "y_basis");
        if (!yb.is_string()) throw SchemaError(field + ".y_basis must be a string");
        std::string yname = yb.get<std::string>();
        Integer num = integer_from_json(require_field(term, "coeff_num"), field + ".coeff_num");
        Integer den = term.contains("coeff_den")
                          ? integer_from_json(term["coeff_den"], field + ".coeff_den")
                          : Integer(1);
        if (den == 0) throw SchemaError(field + ".coeff_den must be nonzero");
        Rational coeff = den < 0 ? Rational(-num, -den) : Rational(num, den);
        grr::Monomial y;
        if (yname != "1" && !yname.empty()) y = grr::Monomial{{yname, 1}};
        try {
            out.add_term(grr::monomial_from_names(names), std::move(y), coeff, ctx);
        } catch (const Error& e) {
            throw SchemaError("field " + field + ": " + e.what());
        }
    }
    return out;
}

std::vector<std::vector<Integer>> parse_matrix(const Json& j, const std::string& field) {
    if (!j.is_array()) throw SchemaError("field " + field + " must be a matrix");
    std::vector<std::vector<Integer>> out;
    for (const Json& row : j) {
        if (!row.is_array()) throw SchemaError("field " + field + " must be a matrix");
        std::vector<Integer> r;
        for (const Json& v : row) r.push_back(integer_from_json(v, field));
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

ChernInput parse_chern_json(const std::string& text) {
    Json root = parse_root(text);

    std::vector<grr::XGenerator> xgens;
    grr::CY3Data cy3;
    const Json& gens = require_field(root, "generators");
    if (!gens.is_array()) throw SchemaError("field generators must be an array");
    for (const Json& g : gens) {
        if (!g.is_object()) throw SchemaError("generators elements must be objects");
        const Json& name_j = require_field(g, "name");
        if (!name_j.is_string()) throw SchemaError("generator name must be a string");
        std::string name = name_j.get<std::string>();
        int degree = int_from_json(require_field(g, "degree"), "generator degree");
        const Json& side_j = require_field(g, "side");
        if (!side_j.is_string()) throw SchemaError("generator side must be \"x\" or \"y\"");
        std::string side = side_j.get<std::string>();
        if (side == "x") {
            xgens.push_back({name, degree});
        } else if (side == "y") {
            if (degree == 2) {
                cy3.h2.push_back(name);
            } else if (degree == 4) {
                cy3.h4.push_back(name);
            } else {
                throw SchemaError("y generators must have degree 2 or 4 (pt is implicit)");
            }
        } else {
            throw SchemaError("generator side must be \"x\" or \"y\"");
        }
    }

    const Json& cy = require_field(root, "cy3");
    if (!cy.is_object()) throw SchemaError("field cy3 must be an object");
    cy3.pairing = parse_matrix(require_field(cy, "pairing"), "cy3.pairing");
    const Json& triple = require_field(cy, "triple_product");
    if (!triple.is_array()) throw SchemaError("field cy3.triple_product must be a 3d array");
    for (const Json& plane : triple) {
        cy3.triple.push_back(parse_matrix(plane, "cy3.triple_product"));
    }
    const Json& c2 = require_field(cy, "c2");
    if (!c2.is_array()) throw SchemaError("field cy3.c2 must be an array");
    for (const Json& v : c2) cy3.c2.push_back(integer_from_json(v, "cy3.c2"));

    grr::GrrContext ctx = [&] {
        try {
            return grr::GrrContext(std::move(xgens), std::move(cy3));
        } catch (const Error& e) {
            throw SchemaError(e.what());
        }
    }();

    grr::ChernData data;
    data.rank = integer_from_json(require_field(root, "rank"), "rank");
    data.alpha1 = parse_kunneth_terms(require_field(root, "alpha1"), "alpha1", ctx);
    data.alpha2 = parse_kunneth_terms(require_field(root, "alpha2"), "alpha2", ctx);
    data.alpha3 = parse_kunneth_terms(require_field(root, "alpha3"), "alpha3", ctx);
    data.delta4 = parse_kunneth_terms(require_field(root, "delta4"), "delta4", ctx);
    return ChernInput{std::move(ctx), std::move(data)};
}

namespace {

cech::Face parse_face_names(const Json& arr, const std::vector<std::string>& vertices) {
    if (!arr.is_array()) throw SchemaError("faces must be arrays of vertex names");
    cech::Face f;
    for (const Json& v : arr) {
        if (!v.is_string()) throw SchemaError("face vertices must be strings");
        std::string name = v.get<std::string>();
        auto it = std::find(vertices.begin(), vertices.end(), name);
        if (it == vertices.end()) throw SchemaError("face references unknown vertex " + name);
        f.push_back(static_cast<int>(it - vertices.begin()));
    }
    return f;
}

std::vector<std::string> split_key(const std::string& key) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : key) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

CoverInput parse_cover_json(const std::string& text) {
    Json root = parse_root(text);
    const Json& verts = require_field(root, "vertices");
    if (!verts.is_array()) throw SchemaError("field vertices must be an array");
    std::vector<std::string> vertices;
    for (const Json& v : verts) {
        if (!v.is_string()) throw SchemaError("vertices must be strings");
        vertices.push_back(v.get<std::string>());
    }

    std::vector<cech::Face> faces[3];
    if (root.contains("faces")) {
        const Json& fo = root["faces"];
        if (!fo.is_object()) throw SchemaError("field faces must be an object");
        const char* keys[3] = {"2", "3", "4"};
        for (int i = 0; i < 3; ++i) {
            if (!fo.contains(keys[i])) continue;
            const Json& arr = fo[keys[i]];
            if (!arr.is_array()) throw SchemaError("faces." + std::string(keys[i]) +
                                                   " must be an array");
            for (const Json& f : arr) faces[i].push_back(parse_face_names(f, vertices));
        }
    }

    auto parse_signs = [&](const Json& obj, std::size_t arity) {
        std::map<cech::Face, int> out;
        if (!obj.is_object()) throw SchemaError("sign maps must be objects");
        for (const auto& [key, value] : obj.items()) {
            std::vector<std::string> names = split_key(key);
            if (names.size() != arity) {
                throw SchemaError("sign key " + key + " must list " + std::to_string(arity) +
                                  " vertices");
            }
            cech::Face f;
            for (const std::string& name : names) {
                auto it = std::find(vertices.begin(), vertices.end(), name);
                if (it == vertices.end()) {
                    throw SchemaError("sign key " + key + " references unknown vertex " + name);
                }
                f.push_back(static_cast<int>(it - vertices.begin()));
            }
            std::sort(f.begin(), f.end());
            if (!value.is_number_integer() ||
                (value.get<int>() != 1 && value.get<int>() != -1)) {
                throw SchemaError("sign for " + key + " must be 1 or -1");
            }
            out[f] = value.get<int>();
        }
        return out;
    };

    std::map<cech::Face, int> pair_signs, triple_signs;
    if (root.contains("signs")) {
        const Json& signs = root["signs"];
        if (!signs.is_object()) throw SchemaError("field signs must be an object");
        if (signs.contains("pairs")) pair_signs = parse_signs(signs["pairs"], 2);
        if (signs.contains("triples")) triple_signs = parse_signs(signs["triples"], 3);
    }

    try {
        cech::Nerve nerve(std::move(vertices), faces[0], faces[1], faces[2]);
        return CoverInput{std::move(nerve), std::move(pair_signs), std::move(triple_signs)};
    } catch (const NerveError& e) {
        throw SchemaError(e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << contents;
    if (!out) throw Error("write failed for " + path);
}

}  // namespace gvkit::cli
