#include "tcfkit/io.hpp"

#include "tcfkit/combinat.hpp"

#include <fstream>
#include <sstream>

namespace tcfkit::io {

namespace {

std::string expect_string(const Json& j, const char* field) {
    if (!j.contains(field) || !j.at(field).is_string())
        throw BadDocument(std::string("missing string field \"") + field + "\"");
    return j.at(field).get<std::string>();
}

int expect_n(const Json& j) {
    if (!j.contains("n") || !j.at("n").is_number_integer())
        throw BadDocument("missing integer field \"n\"");
    const int n = j.at("n").get<int>();
    if (n < 1) throw BadDocument("field \"n\" must be positive");
    return n;
}

void expect_type(const Json& j, const char* type) {
    if (!j.is_object()) throw BadDocument("expected a JSON object");
    if (expect_string(j, "type") != type)
        throw BadDocument(std::string("expected type \"") + type + "\", got \"" +
                          expect_string(j, "type") + "\"");
}

Rational field_rational(const Json& value) {
    if (!value.is_string()) throw BadDocument("numeric payloads must be \"p/q\" strings");
    return parse_rational(value.get<std::string>());
}

Integer field_integer(const Json& value) {
    const Rational r = field_rational(value);
    if (!is_integer(r)) throw BadDocument("expected an integer entry");
    return num(r);
}

Json rational_json(const Rational& r) { return Json(rational_str(r)); }

Json integer_json(const Integer& v) { return Json(v.str()); }

/** Map over subsets: only nonzero entries are stored. */
Json subset_map_json(int n, const std::vector<Rational>& by_mask, bool skip_empty_set) {
    Json out = Json::object();
    for (std::size_t a = skip_empty_set ? 1 : 0; a < by_mask.size(); ++a)
        if (by_mask[a] != 0) out[combinat::subset_str((combinat::Subset)a)] = rational_json(by_mask[a]);
    (void)n;
    return out;
}

std::vector<Rational> subset_map_from_json(int n, const Json& j, const char* field) {
    if (!j.contains(field) || !j.at(field).is_object())
        throw BadDocument(std::string("missing object field \"") + field + "\"");
    std::vector<Rational> out((std::size_t)1 << n, Rational(0));
    for (const auto& [key, value] : j.at(field).items()) {
        const combinat::Subset a = combinat::parse_subset(key, n);
        out[a] = field_rational(value);
    }
    return out;
}

}  // namespace

Json to_json(const tcf::TcfPoint& x) {
    Json chi = Json::array();
    for (const Rational& v : x.chi) chi.push_back(rational_json(v));
    return Json{{"type", "tcf_point"}, {"n", x.n}, {"chi", std::move(chi)}};
}

tcf::TcfPoint point_from_json(const Json& j) {
    expect_type(j, "tcf_point");
    const int n = expect_n(j);
    if (!j.contains("chi") || !j.at("chi").is_array())
        throw BadDocument("missing array field \"chi\"");
    std::vector<Rational> chi;
    chi.reserve(j.at("chi").size());
    for (const auto& v : j.at("chi")) chi.push_back(field_rational(v));
    if (chi.size() != combinat::edge_count(n))
        throw BadDocument("field \"chi\" has the wrong number of pair coordinates");
    return tcf::TcfPoint(n, std::move(chi));
}

Json to_json(const tcf::AffineInequality& q) {
    Json c = Json::array();
    for (const Integer& v : q.c) c.push_back(integer_json(v));
    Json out{{"type", "inequality"}, {"n", q.n}, {"c", std::move(c)}, {"c0", integer_json(q.c0)}};
    if (!q.name.empty()) out["name"] = q.name;
    return out;
}

tcf::AffineInequality inequality_from_json(const Json& j) {
    expect_type(j, "inequality");
    const int n = expect_n(j);
    if (!j.contains("c") || !j.at("c").is_array()) throw BadDocument("missing array field \"c\"");
    std::vector<Integer> c;
    c.reserve(j.at("c").size());
    for (const auto& v : j.at("c")) c.push_back(field_integer(v));
    if (c.size() != combinat::edge_count(n))
        throw BadDocument("field \"c\" has the wrong number of pair coordinates");
    Integer c0 = field_integer(j.at("c0"));
    std::string name = j.contains("name") ? expect_string(j, "name") : std::string{};
    return tcf::AffineInequality(n, std::move(c), std::move(c0), std::move(name));
}

Json to_json(const ecf::SetFunction& f) {
    return Json{{"type", "set_function"},
                {"n", f.n},
                {"values", subset_map_json(f.n, f.values, true)}};
}

ecf::SetFunction set_function_from_json(const Json& j) {
    expect_type(j, "set_function");
    ecf::SetFunction f(expect_n(j));
    f.values = subset_map_from_json(f.n, j, "values");
    return f;
}

Json to_json(const ecf::TmSpectralWeights& w) {
    return Json{{"type", "spectral_weights"},
                {"n", w.n},
                {"lambda", subset_map_json(w.n, w.lambda, true)}};
}

ecf::TmSpectralWeights weights_from_json(const Json& j) {
    expect_type(j, "spectral_weights");
    ecf::TmSpectralWeights w;
    w.n = expect_n(j);
    w.lambda = subset_map_from_json(w.n, j, "lambda");
    return w;
}

Json to_json(const ecf::BinaryModel& m) {
    return Json{{"type", "binary_model"},
                {"n", m.n},
                {"mass", subset_map_json(m.n, m.mass, false)}};
}

ecf::BinaryModel model_from_json(const Json& j) {
    expect_type(j, "binary_model");
    ecf::BinaryModel m;
    m.n = expect_n(j);
    m.mass = subset_map_from_json(m.n, j, "mass");
    return m;
}

std::string matrix_csv(const tcf::TcfPoint& x) {
    combinat::EdgeIndexer ei(x.n);
    std::string out;
    for (int i = 1; i <= x.n; ++i) {
        for (int j = 1; j <= x.n; ++j) {
            if (j > 1) out += ",";
            out += i == j ? "1" : rational_str(x.chi[ei.pos(i, j)]);
        }
        out += "\n";
    }
    return out;
}

tcf::TcfPoint parse_matrix_csv(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<Rational> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            const std::size_t a = cell.find_first_not_of(" \t\r");
            const std::size_t b = cell.find_last_not_of(" \t\r");
            if (a == std::string::npos) throw MalformedMatrix("empty cell in matrix row");
            try {
                row.push_back(parse_rational(cell.substr(a, b - a + 1)));
            } catch (const ParseError& e) {
                throw MalformedMatrix(std::string("bad matrix entry: ") + e.what());
            }
        }
        rows.push_back(std::move(row));
    }
    const std::size_t n = rows.size();
    if (n < 2) throw MalformedMatrix("matrix needs at least two rows");
    for (const auto& row : rows)
        if (row.size() != n) throw MalformedMatrix("matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        if (rows[i][i] != 1) throw MalformedMatrix("matrix diagonal must be all ones");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rows[i][j] != rows[j][i]) throw MalformedMatrix("matrix is not symmetric");
    combinat::EdgeIndexer ei((int)n);
    std::vector<Rational> chi(ei.size());
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            chi[ei.pos((int)i, (int)j)] = rows[i - 1][j - 1];
    return tcf::TcfPoint((int)n, std::move(chi));
}

tcf::TcfPoint read_point_file(const std::string& path) {
    const std::string text = read_file(path);
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw MalformedMatrix("empty input file: " + path);
    if (text[first] == '{') {
        Json j = Json::parse(text, nullptr, false);
        if (j.is_discarded()) throw MalformedMatrix("unparsable JSON in " + path);
        try {
            return point_from_json(j);
        } catch (const BadDocument& e) {
            throw MalformedMatrix(std::string(e.what()) + " in " + path);
        }
    }
    return parse_matrix_csv(text);
}

void write_lines(const std::string& path, const std::vector<Json>& lines) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw BadDocument("cannot write " + path);
    for (const Json& j : lines) out << j.dump() << "\n";
}

std::vector<Json> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadDocument("cannot read " + path);
    std::vector<Json> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Json j = Json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw BadDocument("unparsable JSON on line " + std::to_string(lineno) + " of " + path);
        out.push_back(std::move(j));
    }
    return out;
}

std::vector<tcf::TcfPoint> read_points(const std::string& path) {
    std::vector<tcf::TcfPoint> out;
    for (const Json& j : read_lines(path))
        if (j.is_object() && j.value("type", "") == "tcf_point") out.push_back(point_from_json(j));
    return out;
}

std::vector<tcf::AffineInequality> read_inequalities(const std::string& path) {
    std::vector<tcf::AffineInequality> out;
    for (const Json& j : read_lines(path))
        if (j.is_object() && j.value("type", "") == "inequality")
            out.push_back(inequality_from_json(j));
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BadDocument("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc | std::ios::binary);
    if (!out) throw BadDocument("cannot write " + path);
    out << text;
}

}  // namespace tcfkit::io
