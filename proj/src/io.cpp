#include "ncsurf/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "ncsurf/ncalgebra.hpp"

namespace ncsurf::io {

namespace {

using nlohmann::json;

Integer parse_integer(std::string_view tok)
{
    std::string s(tok);
    if (s.empty() || s.size() > 4096) {
        throw InputError("expected an integer, got '" + s + "'");
    }
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) {
        throw InputError("expected an integer, got '" + s + "'");
    }
    for (std::size_t i = start; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i])) == 0) {
            throw InputError("expected an integer, got '" + s + "'");
        }
    }
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    return Integer(s, 10);
}

Integer json_integer(const json& v)
{
    if (v.is_number_integer()) {
        return v.is_number_unsigned() ? Integer(v.get<unsigned long>()) : Integer(v.get<long>());
    }
    if (v.is_string()) {
        return parse_integer(v.get<std::string>());
    }
    throw InputError("matrix entry must be an integer or a decimal string, got " + v.dump());
}

json json_integer_value(const Integer& x)
{
    if (x.fits_slong_p()) {
        return json(x.get_si());
    }
    return json(x.get_str());
}

MatrixDocument parse_structured(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed structured matrix: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries")) {
        throw InputError("structured matrix needs fields 'n' and 'entries'");
    }
    if (!doc["n"].is_number_integer() || doc["n"].get<long>() < 1 || doc["n"].get<long>() > 64) {
        throw InputError("field 'n' must be an integer in 1..64");
    }
    const auto n = doc["n"].get<std::size_t>();
    const json& entries = doc["entries"];
    if (!entries.is_array() || entries.size() != n * n) {
        throw InputError("field 'entries' must be an array of " + std::to_string(n * n) + " integers");
    }
    MatrixDocument out{IntMatrix(n), std::nullopt};
    for (std::size_t k = 0; k < n * n; ++k) {
        out.matrix(k / n, k % n) = json_integer(entries[k]);
    }
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) {
            throw InputError("field 'name' must be a string");
        }
        out.name = doc["name"].get<std::string>();
    }
    return out;
}

MatrixDocument parse_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string tok;
    if (!(in >> tok)) {
        throw InputError("empty matrix document");
    }
    const Integer n = parse_integer(tok);
    if (n < 1 || n > 64) {
        throw InputError("matrix size must be in 1..64, got " + n.get_str());
    }
    const auto size = static_cast<std::size_t>(n.get_ui());
    MatrixDocument out{IntMatrix(size), std::nullopt};
    for (std::size_t k = 0; k < size * size; ++k) {
        if (!(in >> tok)) {
            throw InputError("matrix document ends after " + std::to_string(k) + " of " +
                             std::to_string(size * size) + " entries");
        }
        out.matrix(k / size, k % size) = parse_integer(tok);
    }
    if (in >> tok) {
        throw InputError("trailing token '" + tok + "' after matrix entries");
    }
    return out;
}

} // namespace

MatrixDocument parse_matrix_document(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        return parse_structured(text);
    }
    return parse_text(text);
}

MatrixDocument read_matrix_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open matrix file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_document(buf.str());
}

GramMatrix to_gram(const MatrixDocument& doc)
{
    try {
        return GramMatrix(doc.matrix);
    } catch (const InvalidGramMatrix& e) {
        throw InputError(e.what());
    }
}

GramMatrix named_matrix(std::string_view spec)
{
    const std::string s(spec);
    if (s == "P2") {
        return gram_p2();
    }
    if (s == "A") {
        return gram_quadric();
    }
    const auto colon = s.find(':');
    if (colon != std::string::npos) {
        const std::string family = s.substr(0, colon);
        const std::string arg = s.substr(colon + 1);
        if (family == "B" || family == "Bp") {
            const Integer m = parse_integer(arg);
            if (m < 0 || !m.fits_slong_p()) {
                throw InputError("family parameter must be a nonnegative integer, got '" + arg + "'");
            }
            return family == "B" ? gram_family(m.get_si()) : gram_family_blowup(m.get_si());
        }
    }
    throw InputError("unknown named matrix '" + s + "' (expected P2, A, B:m or Bp:m)");
}

std::string format_text(const IntMatrix& m)
{
    std::ostringstream os;
    os << m.size() << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            os << (j > 0 ? " " : "") << m(i, j);
        }
        os << '\n';
    }
    return os.str();
}

nlohmann::json to_json(const IntMatrix& m, const std::optional<std::string>& name)
{
    json doc;
    doc["n"] = m.size();
    json entries = json::array();
    for (const auto& x : m.entries()) {
        entries.push_back(json_integer_value(x));
    }
    doc["entries"] = std::move(entries);
    if (name) {
        doc["name"] = *name;
    }
    return doc;
}

std::string format_structured(const IntMatrix& m, const std::optional<std::string>& name)
{
    return to_json(m, name).dump() + "\n";
}

Rational parse_rational(std::string_view text)
{
    const std::string s(text);
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_integer(s));
    }
    const Integer num = parse_integer(s.substr(0, slash));
    const Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) {
        throw InputError("zero denominator in '" + s + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

QuadraticPresentation parse_presentation(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed presentation: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("generators") || !doc.contains("relations") ||
        !doc["generators"].is_number_integer() || !doc["relations"].is_array()) {
        throw InputError("presentation needs an integer 'generators' and an array 'relations'");
    }
    const long g = doc["generators"].get<long>();
    if (g < 1 || g > 16) {
        throw InputError("'generators' must be in 1..16");
    }
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rational>>> rels;
    for (const auto& rel : doc["relations"]) {
        if (!rel.is_array()) {
            throw InputError("each relation must be an array of [u, v, coefficient] triples");
        }
        auto& terms = rels.emplace_back();
        for (const auto& t : rel) {
            if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned()) {
                throw InputError("relation term must be [u, v, coefficient], got " + t.dump());
            }
            Rational c = t[2].is_string() ? parse_rational(t[2].get<std::string>()) : Rational(json_integer(t[2]));
            terms.emplace_back(t[0].get<std::size_t>(), t[1].get<std::size_t>(), std::move(c));
        }
    }
    try {
        return QuadraticPresentation::from_triples(static_cast<std::size_t>(g), rels);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

nlohmann::json to_json(const Fingerprint& fp)
{
    auto arr = [](const std::vector<Integer>& v) {
        json a = json::array();
        for (const auto& x : v) {
            a.push_back(json_integer_value(x));
        }
        return a;
    };
    return json{{"charpoly", arr(fp.charpoly)},
                {"rank_s_minus_id", fp.rank_s_minus_id},
                {"smith_s_minus_id", arr(fp.smith_s_minus_id)},
                {"smith_s_minus_id_squared", arr(fp.smith_s_minus_id_squared)},
                {"smith_symmetrized", arr(fp.smith_symmetrized)}};
}

nlohmann::json to_json(const ClassificationReport& report)
{
    json doc;
    doc["n"] = report.n;
    doc["bound"] = report.bound;
    doc["params"] = {{"entry_cap_orbit", report.params.entry_cap_orbit},
                     {"max_orbit_size", report.params.max_orbit_size},
                     {"max_word_length", report.params.max_word_length}};
    doc["family_cap"] = report.family_cap;
    doc["solutions"] = report.records.size();
    doc["unresolved"] = report.unresolved();
    json buckets = json::array();
    for (std::size_t b = 0; b < report.buckets.size(); ++b) {
        json bucket = to_json(report.buckets[b]);
        bucket["index"] = b;
        buckets.push_back(std::move(bucket));
    }
    doc["buckets"] = std::move(buckets);
    json records = json::array();
    for (const auto& r : report.records) {
        json rec;
        rec["entries"] = to_json(r.matrix.matrix())["entries"];
        rec["bucket"] = r.bucket;
        rec["fingerprint"] = to_json(r.fingerprint);
        rec["verdict"] = to_string(r.verdict);
        if (r.family_m) {
            rec["m"] = *r.family_m;
        }
        rec["witness"] = r.witness ? json(r.witness->str()) : json(nullptr);
        records.push_back(std::move(rec));
    }
    doc["records"] = std::move(records);
    return doc;
}

} // namespace ncsurf::io
