#ifndef UFI_IO_HPP
#define UFI_IO_HPP

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "colouring.hpp"
#include "monomial.hpp"
#include "poset.hpp"
#include "simplicial.hpp"
#include "ufi.hpp"

namespace ufi {

using Json = nlohmann::ordered_json;

/// What an input document describes. Ideal documents carry no complex.
enum class InputKind { complex, poset, ideal };

struct Instance {
    InputKind kind = InputKind::complex;
    SimplicialComplex complex;
    Colouring colouring;
    MonomialIdeal ideal; // set for ideal documents
};

namespace detail {

/// A string is one label if it names a vertex, otherwise its characters are labels.
inline std::vector<std::string> split_tokens(const Json& j, const std::vector<std::string>& labels, const char* what) {
    std::vector<std::string> out;
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (std::find(labels.begin(), labels.end(), s) != labels.end()) {
            return {s};
        }
        for (char ch : s) {
            out.emplace_back(1, ch);
        }
        return out;
    }
    if (!j.is_array()) {
        fail_parse(std::string(what) + " must be a string or an array of vertex tokens");
    }
    for (const auto& t : j) {
        if (t.is_string()) {
            out.push_back(t.get<std::string>());
        } else if (t.is_number_integer()) {
            out.push_back(std::to_string(t.get<long long>()));
        } else {
            fail_parse(std::string(what) + " contains a token that is neither a string nor an integer");
        }
    }
    return out;
}

inline std::vector<std::string> vertex_labels(const Json& doc) {
    std::vector<std::string> labels;
    if (doc.contains("vertices")) {
        const Json& v = doc["vertices"];
        if (v.is_string()) {
            for (char ch : v.get<std::string>()) {
                labels.emplace_back(1, ch);
            }
        } else {
            labels = split_tokens(v, {}, "vertices");
        }
        return labels;
    }
    // no vertex list: order of first appearance in the facets
    for (const auto& f : doc["facets"]) {
        for (const auto& t : split_tokens(f, labels, "facet")) {
            if (std::find(labels.begin(), labels.end(), t) == labels.end()) {
                labels.push_back(t);
            }
        }
    }
    return labels;
}

inline int label_index(const std::vector<std::string>& labels, const std::string& tok) {
    auto it = std::find(labels.begin(), labels.end(), tok);
    if (it == labels.end()) {
        fail_parse("unknown vertex '" + tok + "' in colouring");
    }
    return static_cast<int>(it - labels.begin());
}

inline std::vector<int> int_vector(const Json& j, const char* what) {
    if (!j.is_array()) {
        fail_parse(std::string(what) + " must be an array of integers");
    }
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) {
            fail_parse(std::string(what) + " must be an array of integers");
        }
        out.push_back(x.get<int>());
    }
    return out;
}

inline Instance parse_complex_document(const Json& doc, bool allow_empty_classes) {
    if (!doc.contains("facets") || !doc["facets"].is_array()) {
        fail_parse("input needs a \"facets\" array");
    }
    std::vector<std::string> labels = vertex_labels(doc);
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : doc["facets"]) {
        facets.push_back(split_tokens(f, labels, "facet"));
    }
    bool allow_unused = doc.value("allow_unused_vertices", false);
    Instance in;
    in.complex = SimplicialComplex::from_facets(labels, facets, allow_unused);
    if (doc.contains("colouring") && !doc["colouring"].is_null()) {
        const Json& cj = doc["colouring"];
        if (!cj.is_array()) {
            fail_parse("\"colouring\" must be an array of classes");
        }
        for (const auto& cls : cj) {
            std::vector<int> members_of;
            for (const auto& tok : split_tokens(cls, labels, "colour class")) {
                members_of.push_back(label_index(labels, tok));
            }
            in.colouring.classes.push_back(members_of);
        }
    } else {
        in.colouring = singleton_colouring(in.complex);
    }
    in.colouring.allow_empty = allow_empty_classes;
    check_partition(in.complex, in.colouring);
    return in;
}

inline Instance parse_poset_document(const Json& doc, bool allow_empty_classes) {
    std::vector<int> sizes = int_vector(doc.at("class_sizes"), "class_sizes");
    std::set<IndexVector> vectors;
    for (const auto& e : doc.at("index_vectors")) {
        IndexVector v = int_vector(e, "index vector");
        if (v.size() != sizes.size()) {
            fail_parse("index vector length differs from the number of classes");
        }
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 0 || v[i] > sizes[i]) {
                fail_parse("index vector entry out of range");
            }
        }
        vectors.insert(v);
    }
    UfiPair p = complex_from_index_vectors(vectors, sizes);
    Instance in;
    in.kind = InputKind::poset;
    in.complex = p.complex;
    in.colouring = p.colouring;
    in.colouring.allow_empty = allow_empty_classes || p.colouring.allow_empty;
    return in;
}

inline Instance parse_ideal_document(const Json& doc) {
    std::vector<std::string> vars = split_tokens(doc.at("variables"), {}, "variables");
    std::vector<std::string> gens;
    for (const auto& g : doc.at("generators")) {
        if (!g.is_string()) {
            fail_parse("generators must be strings");
        }
        gens.push_back(g.get<std::string>());
    }
    Instance in;
    in.kind = InputKind::ideal;
    in.ideal = parse_ideal(gens, vars);
    return in;
}

} // namespace detail

/// Parse a document: a complex (facets, optional vertices and colouring), an
/// index-vector poset, or an ideal.
inline Instance parse_instance(const Json& doc, bool allow_empty_classes = false) {
    if (!doc.is_object()) {
        fail_parse("input must be a JSON object");
    }
    try {
        std::string kind = doc.value("kind", std::string(doc.contains("generators") ? "ideal" : ""));
        if (kind == "ideal") {
            return detail::parse_ideal_document(doc);
        }
        if (kind == "poset" || (kind.empty() && doc.contains("index_vectors"))) {
            return detail::parse_poset_document(doc, allow_empty_classes);
        }
        if (!kind.empty() && kind != "complex") {
            fail_parse("unknown input kind '" + kind + "'");
        }
        return detail::parse_complex_document(doc, allow_empty_classes);
    } catch (const Json::exception& e) {
        fail_parse(std::string("malformed input: ") + e.what());
    }
}

inline Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail_parse("cannot parse " + origin + ": " + e.what());
    }
}

/// Argument is inline JSON when it starts with '{', otherwise a file path.
inline Json read_json_argument(const std::string& arg) {
    auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') {
        return parse_json_text(arg, "inline JSON");
    }
    std::ifstream f(arg);
    if (!f) {
        fail_parse("cannot open '" + arg + "'");
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_json_text(ss.str(), "'" + arg + "'");
}

inline Instance load_instance(const std::string& arg, bool allow_empty_classes = false) {
    return parse_instance(read_json_argument(arg), allow_empty_classes);
}

inline Json complex_json(const SimplicialComplex& c, const Colouring& col) {
    Json doc;
    doc["kind"] = "complex";
    doc["vertices"] = c.labels();
    Json facets = Json::array();
    for (VertexSet f : c.facets()) {
        Json tokens = Json::array();
        for (int v : members(f)) {
            tokens.push_back(c.labels()[static_cast<std::size_t>(v)]);
        }
        facets.push_back(tokens);
    }
    doc["facets"] = facets;
    Json classes = Json::array();
    for (const auto& cls : col.classes) {
        Json tokens = Json::array();
        for (int v : cls) {
            tokens.push_back(c.labels()[static_cast<std::size_t>(v)]);
        }
        classes.push_back(tokens);
    }
    doc["colouring"] = classes;
    if (c.vertex_set() != c.ground_mask()) {
        doc["allow_unused_vertices"] = true;
    }
    return doc;
}

inline Json ideal_json(const MonomialIdeal& I) {
    Json doc;
    doc["kind"] = "ideal";
    doc["variables"] = I.variables();
    doc["generators"] = I.generator_strings();
    return doc;
}

inline Json poset_json(const IndexVectorPoset& p, const std::vector<int>& sizes) {
    Json doc;
    doc["kind"] = "poset";
    doc["class_sizes"] = sizes;
    Json vectors = Json::array();
    for (const auto& e : p.elements()) {
        vectors.push_back(e);
    }
    doc["index_vectors"] = vectors;
    Json covers = Json::array();
    for (const auto& cv : p.covers()) {
        covers.push_back({cv.lower, cv.upper});
    }
    doc["covers"] = covers;
    return doc;
}

} // namespace ufi

#endif
