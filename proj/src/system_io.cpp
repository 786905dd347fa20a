#include "sgb/system_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "sgb/rational.hpp"

namespace sgb {

namespace {

std::string where(const std::string& path) { return path.empty() ? "" : " at " + path; }

const Json& require(const Json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError("missing field '" + std::string(key) + "'" + where(path));
    return *it;
}

Integer to_integer(const Json& v, const std::string& path) {
    if (!v.is_number_integer()) throw ParseError("expected an integer" + where(path));
    return v.get<Integer>();
}

IntVector integer_vector(const Json& v, const std::string& path) {
    if (!v.is_array()) throw ParseError("expected an array of integers" + where(path));
    IntVector out(static_cast<Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        out(static_cast<Index>(i)) = to_integer(v[i], path + "[" + std::to_string(i) + "]");
    return out;
}

Rational to_rational(const Json& v, const std::string& path) {
    if (v.is_number_integer()) return Rational(v.get<Integer>());
    if (!v.is_string()) throw ParseError("coefficient must be a string \"p\" or \"p/q\"" + where(path));
    try {
        return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + where(path));
    }
}

LaurentPolynomial parse_polynomial(const Json& terms, Index dim, const std::string& path) {
    if (!terms.is_array()) throw ParseError("polynomial must be an array of terms" + where(path));
    LaurentPolynomial f(dim);
    for (std::size_t j = 0; j < terms.size(); ++j) {
        const std::string tp = path + "[" + std::to_string(j) + "]";
        const Json& t = terms[j];
        if (!t.is_object()) throw ParseError("term must be an object" + where(tp));
        const IntVector exp = integer_vector(require(t, "exp", tp), tp + ".exp");
        if (exp.size() != dim)
            throw DimensionError("exponent of length " + std::to_string(exp.size()) + " for " +
                                 std::to_string(dim) + " variables" + where(tp));
        f.add_term(exp, to_rational(require(t, "coeff", tp), tp + ".coeff"));
    }
    return f;
}

IntMatrix rows_to_matrix(const Json& rows, const std::string& path) {
    if (!rows.is_array() || rows.empty()) throw ParseError("weight matrix must be a non-empty array of rows" + where(path));
    const std::size_t cols = rows[0].is_array() ? rows[0].size() : 0;
    IntMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const IntVector row = integer_vector(rows[i], path + "[" + std::to_string(i) + "]");
        if (static_cast<std::size_t>(row.size()) != cols) throw DimensionError("ragged weight matrix" + where(path));
        m.row(static_cast<Index>(i)) = row.transpose();
    }
    return m;
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json parse_json(std::string_view text, const std::string& what) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("malformed JSON in " + what + ": " + e.what());
    }
}

std::vector<LatticePoint> sorted_terms(const LaurentPolynomial& f, const ExponentGreater& greater) {
    std::vector<LatticePoint> exps = f.support();
    if (greater)
        std::stable_sort(exps.begin(), exps.end(), greater);
    else
        std::reverse(exps.begin(), exps.end());
    return exps;
}

} // namespace

bool operator==(const SystemFile& a, const SystemFile& b) {
    auto same_opt = [](const auto& x, const auto& y) {
        if (x.has_value() != y.has_value()) return false;
        return !x || (x->rows() == y->rows() && x->cols() == y->cols() && *x == *y);
    };
    auto same_points = [](const std::vector<std::vector<LatticePoint>>& x, const std::vector<std::vector<LatticePoint>>& y) {
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].size() != y[i].size()) return false;
            for (std::size_t j = 0; j < x[i].size(); ++j)
                if (x[i][j].size() != y[i][j].size() || x[i][j] != y[i][j]) return false;
        }
        return true;
    };
    auto same_degrees = [](const std::vector<MultiDegree>& x, const std::vector<MultiDegree>& y) {
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i].size() != y[i].size() || x[i] != y[i]) return false;
        return true;
    };
    return a.variables == b.variables && a.polynomials == b.polynomials && same_opt(a.order_matrix, b.order_matrix) &&
           same_opt(a.degree, b.degree) && same_points(a.polytopes, b.polytopes) && same_degrees(a.degrees, b.degrees);
}

SystemFile parse_system(std::string_view text) {
    const Json doc = parse_json(text, "system file");
    if (!doc.is_object()) throw ParseError("system file must be a JSON object");
    static const std::set<std::string> known{"variables", "polynomials", "order", "degree", "polytopes", "degrees"};
    for (const auto& [key, value] : doc.items())
        if (!known.count(key)) throw ParseError("unknown field '" + key + "' in system file");

    SystemFile sys;
    const Json& vars = require(doc, "variables", "");
    if (!vars.is_array() || vars.empty()) throw ParseError("'variables' must be a non-empty array of names");
    for (const auto& v : vars) {
        if (!v.is_string() || v.get<std::string>().empty()) throw ParseError("variable names must be non-empty strings");
        sys.variables.push_back(v.get<std::string>());
    }
    if (std::set<std::string>(sys.variables.begin(), sys.variables.end()).size() != sys.variables.size())
        throw ParseError("duplicate variable name");
    const Index n = sys.dim();

    const Json& polys = require(doc, "polynomials", "");
    if (!polys.is_array()) throw ParseError("'polynomials' must be an array");
    for (std::size_t i = 0; i < polys.size(); ++i)
        sys.polynomials.push_back(parse_polynomial(polys[i], n, "polynomials[" + std::to_string(i) + "]"));

    if (auto it = doc.find("order"); it != doc.end()) {
        if (it->is_string()) {
            if (it->get<std::string>() != "lex-default")
                throw ParseError("order must be \"lex-default\" or {\"matrix\": [[...]]}");
        } else {
            sys.order_matrix = parse_weight_matrix(*it);
        }
    }
    if (auto it = doc.find("degree"); it != doc.end()) sys.degree = integer_vector(*it, "degree");

    if (auto it = doc.find("polytopes"); it != doc.end()) {
        if (!it->is_array()) throw ParseError("'polytopes' must be an array of point lists");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string path = "polytopes[" + std::to_string(i) + "]";
            const Json& pts = (*it)[i];
            if (!pts.is_array() || pts.empty()) throw ParseError("polytope must be a non-empty array of points" + where(path));
            std::vector<LatticePoint> points;
            for (std::size_t j = 0; j < pts.size(); ++j) {
                points.push_back(integer_vector(pts[j], path + "[" + std::to_string(j) + "]"));
                if (points.back().size() != n) throw DimensionError("polytope point of the wrong length" + where(path));
            }
            sys.polytopes.push_back(std::move(points));
        }
    }
    if (auto it = doc.find("degrees"); it != doc.end()) {
        if (!it->is_array()) throw ParseError("'degrees' must be an array of multidegrees");
        for (std::size_t i = 0; i < it->size(); ++i)
            sys.degrees.push_back(integer_vector((*it)[i], "degrees[" + std::to_string(i) + "]"));
    }
    if (sys.polytopes.empty() != sys.degrees.empty())
        throw ParseError("'polytopes' and 'degrees' must be given together");
    if (!sys.degrees.empty()) {
        if (sys.degrees.size() != sys.polynomials.size())
            throw DimensionError("'degrees' needs one entry per polynomial");
        for (const auto& d : sys.degrees)
            if (d.size() != static_cast<Index>(sys.polytopes.size()))
                throw DimensionError("each degree needs one entry per polytope");
    }
    return sys;
}

SystemFile read_system_file(const std::filesystem::path& path) { return parse_system(read_text(path)); }

Json to_json(const SystemFile& sys) {
    Json doc = Json::object();
    doc["variables"] = sys.variables;
    Json polys = Json::array();
    for (const auto& f : sys.polynomials) polys.push_back(polynomial_to_json(f));
    doc["polynomials"] = std::move(polys);
    if (sys.order_matrix) {
        Json rows = Json::array();
        for (Index i = 0; i < sys.order_matrix->rows(); ++i)
            rows.push_back(lattice_point_to_json(sys.order_matrix->row(i).transpose()));
        doc["order"] = Json{{"matrix", std::move(rows)}};
    } else {
        doc["order"] = "lex-default";
    }
    if (sys.degree) doc["degree"] = lattice_point_to_json(*sys.degree);
    if (!sys.polytopes.empty()) {
        Json polytopes = Json::array();
        for (const auto& pts : sys.polytopes) {
            Json list = Json::array();
            for (const auto& p : pts) list.push_back(lattice_point_to_json(p));
            polytopes.push_back(std::move(list));
        }
        doc["polytopes"] = std::move(polytopes);
        Json degrees = Json::array();
        for (const auto& d : sys.degrees) degrees.push_back(lattice_point_to_json(d));
        doc["degrees"] = std::move(degrees);
    }
    return doc;
}

std::string write_system(const SystemFile& sys) { return to_json(sys).dump(2) + "\n"; }

IntMatrix parse_weight_matrix(const Json& value) {
    if (value.is_object()) return rows_to_matrix(require(value, "matrix", "order"), "order.matrix");
    return rows_to_matrix(value, "order");
}

IntMatrix read_weight_matrix(const std::filesystem::path& path) {
    return parse_weight_matrix(parse_json(read_text(path), path.string()));
}

MultiDegree parse_degree_list(std::string_view text) {
    std::vector<Integer> values;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        Integer v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw ParseError("bad degree list '" + std::string(text) + "': expected integers separated by commas");
        if (v < 0) throw ParseError("degree entries must be non-negative");
        values.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return from_std(values);
}

Json polynomial_to_json(const LaurentPolynomial& f, const ExponentGreater& greater) {
    Json out = Json::array();
    for (const auto& e : sorted_terms(f, greater))
        out.push_back(Json{{"coeff", to_string(f.coefficient(e))}, {"exp", lattice_point_to_json(e)}});
    return out;
}

LaurentPolynomial polynomial_from_json(const Json& terms, Index dim) { return parse_polynomial(terms, dim, "polynomial"); }

std::string format_polynomial(const LaurentPolynomial& f, const std::vector<std::string>& variables,
                              const ExponentGreater& greater) {
    if (f.is_zero()) return "0";
    if (static_cast<Index>(variables.size()) != f.dim()) throw DimensionError("variable names do not match polynomial");
    std::string out;
    bool first = true;
    for (const auto& e : sorted_terms(f, greater)) {
        Rational c = f.coefficient(e);
        const bool negative = c < 0;
        if (negative) c = -c;
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        first = false;

        std::string mono;
        for (Index i = 0; i < e.size(); ++i) {
            if (e(i) == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += variables[static_cast<std::size_t>(i)];
            if (e(i) != 1) mono += "^" + std::to_string(e(i));
        }
        if (mono.empty())
            out += to_string(c);
        else if (c == 1)
            out += mono;
        else
            out += to_string(c) + "*" + mono;
    }
    return out;
}

Json matrix_to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json lattice_point_to_json(const LatticePoint& p) {
    Json out = Json::array();
    for (Index i = 0; i < p.size(); ++i) out.push_back(p(i));
    return out;
}

std::vector<std::string> default_variable_names(Index n) {
    std::vector<std::string> out;
    for (Index i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
    return out;
}

} // namespace sgb
