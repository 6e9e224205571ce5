#pragma once

#include "classify.hpp"
#include "coneconj.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace cytoric {

using json = nlohmann::json;

struct PolytopeRecord {
    std::string id;
    std::size_t dim = 0;
    IntMat vertices;  // one vertex per row
    std::string source;

    Polytope polytope() const { return Polytope::from_int_points(dim, vertices); }
};

namespace detail {

inline long json_to_long(const json& j) {
    if (!j.is_number_integer()) throw ParseError("expected an integer");
    return j.get<long>();
}

}  // namespace detail

inline long to_long(const Int& x) {
    if (!x.fits_slong_p()) throw InternalError("integer too large for serialization");
    return x.get_si();
}

inline json vec_to_json(const IntVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(to_long(x));
    return a;
}

inline json mat_to_json(const IntMat& m) {
    json a = json::array();
    for (const IntVec& v : m) a.push_back(vec_to_json(v));
    return a;
}

inline json cone_to_json(const RationalCone& c) {
    return json{{"rays", mat_to_json(c.rays())}, {"facets", mat_to_json(c.facet_normals())}};
}

// ---------------------------------------------------------------------------
// Polytope data files
// ---------------------------------------------------------------------------
//
// Text format: records separated by blank lines or comments. Each record is
//     <id>
//     n r
//     n lines of r integers         (vertices as columns)
// The id line may be omitted when the file holds a single polytope.
//
// JSON format: {"id": ..., "dim": n, "vertices": [[...], ...]} with vertices
// as rows, or an array of such objects.

inline json record_to_json(const PolytopeRecord& rec) {
    return json{{"id", rec.id}, {"dim", rec.dim}, {"vertices", mat_to_json(rec.vertices)}};
}

inline PolytopeRecord record_from_json(const json& j, const std::string& source) {
    PolytopeRecord rec;
    rec.source = source;
    if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
        throw ParseError(source + ": polytope object needs 'dim' and 'vertices'");
    rec.id = j.value("id", std::string("input"));
    long d = detail::json_to_long(j.at("dim"));
    if (d < 1) throw ParseError(source + ": bad dimension");
    rec.dim = static_cast<std::size_t>(d);
    for (const json& row : j.at("vertices")) {
        IntVec v;
        for (const json& x : row) v.emplace_back(detail::json_to_long(x));
        if (v.size() != rec.dim) throw ParseError(source + ": vertex of wrong length");
        rec.vertices.push_back(v);
    }
    return rec;
}

inline std::string record_to_text(const PolytopeRecord& rec) {
    std::ostringstream os;
    os << rec.id << "\n" << rec.dim << " " << rec.vertices.size() << "\n";
    for (std::size_t coord = 0; coord < rec.dim; ++coord) {
        for (std::size_t v = 0; v < rec.vertices.size(); ++v)
            os << (v ? " " : "") << rec.vertices[v][coord].get_str();
        os << "\n";
    }
    return os.str();
}

inline std::vector<PolytopeRecord> parse_datafile_text(std::istream& in, const std::string& source) {
    std::vector<PolytopeRecord> records;
    std::set<std::string> ids;
    std::vector<std::pair<int, std::string>> lines;  // line number, content
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::size_t end = line.find_last_not_of(" \t\r");
        line = end == std::string::npos ? "" : line.substr(0, end + 1);
        if (!line.empty()) lines.emplace_back(no, line);
    }
    std::size_t pos = 0;
    auto fail = [&](int ln, const std::string& msg) -> ParseError {
        return ParseError(source + ":" + std::to_string(ln) + ": " + msg);
    };
    while (pos < lines.size()) {
        PolytopeRecord rec;
        rec.source = source;
        std::istringstream head(lines[pos].second);
        long a = 0, b = 0;
        std::string extra;
        if (head >> a >> b && !(head >> extra)) {
            rec.id = "input";  // anonymous single-record file
        } else {
            std::istringstream idline(lines[pos].second);
            idline >> rec.id;
            std::string more;
            if (idline >> more) throw fail(lines[pos].first, "record id must be a single token");
            ++pos;
            if (pos >= lines.size()) throw fail(lines[pos - 1].first, "missing 'n r' header after id");
            std::istringstream h2(lines[pos].second);
            if (!(h2 >> a >> b) || (h2 >> extra))
                throw fail(lines[pos].first, "expected 'n r' header");
        }
        if (a < 1 || b < 1) throw fail(lines[pos].first, "bad 'n r' header");
        rec.dim = static_cast<std::size_t>(a);
        std::size_t r = static_cast<std::size_t>(b);
        ++pos;
        IntMat coords;  // n rows of r entries
        for (std::size_t row = 0; row < rec.dim; ++row, ++pos) {
            if (pos >= lines.size()) throw fail(lines.back().first, "truncated vertex matrix");
            std::istringstream ls(lines[pos].second);
            IntVec v;
            std::string tok;
            while (ls >> tok) {
                try {
                    v.emplace_back(tok);
                } catch (const std::invalid_argument&) {
                    throw fail(lines[pos].first, "bad integer '" + tok + "'");
                }
            }
            if (v.size() != r)
                throw fail(lines[pos].first, "row has " + std::to_string(v.size()) +
                                                 " entries, expected " + std::to_string(r));
            coords.push_back(v);
        }
        rec.vertices = transpose(coords);
        if (!ids.insert(rec.id).second) throw ParseError(source + ": duplicate id '" + rec.id + "'");
        records.push_back(std::move(rec));
    }
    return records;
}

inline std::vector<PolytopeRecord> load_datafile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
        json j = json::parse(text);
        std::vector<PolytopeRecord> records;
        std::set<std::string> ids;
        auto add = [&](const json& obj) {
            PolytopeRecord rec = record_from_json(obj, path);
            if (!ids.insert(rec.id).second)
                throw ParseError(path + ": duplicate id '" + rec.id + "'");
            records.push_back(std::move(rec));
        };
        if (j.is_array())
            for (const json& obj : j) add(obj);
        else
            add(j);
        return records;
    }
    std::istringstream is(text);
    return parse_datafile_text(is, path);
}

// ---------------------------------------------------------------------------
// Verdict serialization
// ---------------------------------------------------------------------------

inline std::string cox_symbol_name(const CoxSymbol& s) {
    return std::string(1, s.kind) + std::to_string(s.index);
}

inline std::string cox_relation_to_string(const CoxRelation& rel) {
    std::string out;
    for (std::size_t t = 0; t < rel.size(); ++t) {
        if (t == 0)
            out += rel[t].sign < 0 ? "-" : "";
        else
            out += rel[t].sign < 0 ? " - " : " + ";
        for (std::size_t f = 0; f < rel[t].factors.size(); ++f) {
            if (f) out += "*";
            out += cox_symbol_name(rel[t].factors[f]);
        }
    }
    return out;
}

inline json presentation_to_json(const CoxPresentation& p) {
    json rels = json::array();
    for (const CoxRelation& r : p.relations) rels.push_back(cox_relation_to_string(r));
    json buckets = json::array();
    for (const DecompBucket& b : p.decomposition.buckets) {
        json prefix = json::object();
        for (const auto& [ray, e] : b.prefix) prefix["x" + std::to_string(ray)] = e;
        buckets.push_back(json{{"name", b.name},
                               {"prefix", prefix},
                               {"degree", vec_to_json(b.degree)},
                               {"monomials", static_cast<long>(b.dual_points.size())}});
    }
    json sdeg = json::array();
    for (const IntVec& d : p.s_degrees) sdeg.push_back(vec_to_json(d));
    json out{{"case", p.case_tag},
             {"distinguished_rays", p.assignment},
             {"buckets", buckets},
             {"extra_variable_degrees", sdeg},
             {"relations", rels}};
    if (p.requires_normalization) out["requires_normalization"] = true;
    return out;
}

inline json verdict_to_json(const std::string& id, std::size_t dim, const ClassificationVerdict& v) {
    json row{{"index", id}, {"dim", dim}, {"mds", mds_name(v.mds)}, {"method", method_name(v.method)}};
    json witness = json::object();
    if (v.presentation) witness["presentation"] = presentation_to_json(*v.presentation);
    if (v.thm2) {
        json wi = json::array(), wii = json::array();
        for (const auto& w : v.thm2->witnesses_i) wi.push_back(std::vector<int>(w.begin(), w.end()));
        for (const auto& w : v.thm2->witnesses_ii) wii.push_back(std::vector<int>(w.begin(), w.end()));
        witness["thm2"] = json{{"case_i", wi}, {"case_ii", wii}};
    }
    if (!v.involutions.empty()) {
        json invs = json::array();
        for (const InvolutionAction& a : v.involutions)
            invs.push_back(json{{"pair", std::vector<int>{a.pair.first, a.pair.second}},
                                {"matrix", mat_to_json(a.matrix)}});
        witness["involutions"] = invs;
    }
    if (v.candidate_cone) witness["candidate_cone"] = cone_to_json(*v.candidate_cone);
    if (!v.certificates.empty()) {
        json certs = json::array();
        for (const FacetCertificate& c : v.certificates) {
            json cert{{"facet_rays", mat_to_json(c.facet_rays)}, {"passed", c.passed}};
            if (c.passed) {
                cert["via_involution"] = c.via_involution;
                cert["witness"] = vec_to_json(c.result.witness);
                cert["q_matrix"] = mat_to_json(c.result.q);
            }
            certs.push_back(cert);
        }
        witness["testface"] = certs;
    }
    if (!witness.empty()) row["witness"] = witness;
    return row;
}

// Plain-text rendering grouped by verdict and method, one row per method.
inline std::string render_report(const std::vector<std::pair<std::string, ClassificationVerdict>>& rows) {
    std::vector<std::pair<std::string, std::string>> layout = {
        {"yes", "no-pairs"},  {"yes", "thm1-i"},   {"yes", "thm1-ii"}, {"yes", "thm1-iii"},
        {"yes", "thm1-iv"},   {"yes", "testface"}, {"yes", "ex117"},   {"no", "thm2-i"},
        {"no", "thm2-ii"},    {"no", "thm2-both"}, {"unknown", "testface"}};
    std::ostringstream os;
    os << "MDS      Method     Cases\n";
    os << "-------  ---------  -----\n";
    for (const auto& [mds, method] : layout) {
        std::string cases;
        for (const auto& [id, v] : rows) {
            if (mds_name(v.mds) != mds || method_name(v.method) != method) continue;
            if (!cases.empty()) cases += ", ";
            cases += id;
        }
        if (cases.empty()) continue;
        os << mds << std::string(9 - mds.size(), ' ') << method
           << std::string(method.size() < 11 ? 11 - method.size() : 1, ' ') << cases << "\n";
    }
    return os.str();
}

}  // namespace cytoric
