#include "format.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace hgl::cli {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

/// Location inside one document, for error messages.
struct Ctx {
    std::string file;
    std::string pointer;

    Ctx at(const std::string& key) const { return {file, pointer + "/" + key}; }
    Ctx at(std::size_t i) const { return {file, pointer + "/" + std::to_string(i)}; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError((file.empty() ? std::string("<input>") : file) + ": " +
                         (pointer.empty() ? std::string("/") : pointer) + ": " + what);
    }
};

const json& member(const json& obj, const std::string& key, const Ctx& ctx)
{
    if (!obj.is_object()) ctx.fail("expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) ctx.fail("missing field \"" + key + "\"");
    return *it;
}

std::size_t read_index(const json& v, std::size_t bound, const Ctx& ctx)
{
    if (!v.is_number_integer()) ctx.fail("expected a non-negative integer index");
    const auto i = v.get<std::int64_t>();
    if (i < 0 || static_cast<std::size_t>(i) >= bound)
        ctx.fail("index " + std::to_string(i) + " out of range [0, " + std::to_string(bound) + ")");
    return static_cast<std::size_t>(i);
}

std::size_t read_dim(const json& obj, const Ctx& ctx)
{
    const json& v = member(obj, "dim", ctx);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1) ctx.at("dim").fail("dimension must be a positive integer");
    return v.get<std::size_t>();
}

Scalar read_scalar(const json& v, const Field& f, const Ctx& ctx)
{
    try {
        if (v.is_number_integer()) return Scalar(f, static_cast<long>(v.get<std::int64_t>()));
        if (v.is_string()) return Scalar::parse(f, v.get<std::string>());
    } catch (const Error& e) {
        ctx.fail(e.what());
    }
    ctx.fail("expected an integer or a string such as \"2/3\"");
}

ojson write_scalar(const Scalar& s)
{
    if (s.field().is_prime()) return s.residue();
    const mpq_class& q = s.rational();
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

Field read_field(const json& doc, const Ctx& ctx)
{
    const json& v = member(doc, "field", ctx);
    if (!v.is_string()) ctx.at("field").fail("expected \"Q\" or \"GF(p)\"");
    try {
        return Field::parse(v.get<std::string>());
    } catch (const Error& e) {
        ctx.at("field").fail(e.what());
    }
}

std::vector<std::string> read_labels(const json& doc, std::size_t n, const Ctx& ctx)
{
    auto it = doc.find("labels");
    if (it == doc.end()) return {};
    const Ctx c = ctx.at("labels");
    if (!it->is_array() || it->size() != n) c.fail("expected " + std::to_string(n) + " label strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(*it)[i].is_string()) c.at(i).fail("expected a string");
        out.push_back((*it)[i].get<std::string>());
    }
    return out;
}

Matrix read_vector(const json& v, const Field& f, std::size_t n, const Ctx& ctx)
{
    if (!v.is_array() || v.size() != n) ctx.fail("expected a vector of length " + std::to_string(n));
    Matrix m(f, n, 1);
    for (std::size_t i = 0; i < n; ++i) m.set(i, 0, read_scalar(v[i], f, ctx.at(i)));
    return m;
}

/// Triples [i, j, k, v]; entry (row_of(j, k), col_of(i)) of the result receives v.
template <class RowCol>
Matrix read_triples(const json& v, const Field& f, std::size_t rows, std::size_t cols,
                    const std::vector<std::size_t>& bounds, RowCol place, const Ctx& ctx)
{
    if (!v.is_array()) ctx.fail("expected a list of sparse entries");
    Matrix m(f, rows, cols);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < v.size(); ++e) {
        const Ctx c = ctx.at(e);
        const json& t = v[e];
        if (!t.is_array() || t.size() != bounds.size() + 1)
            c.fail("expected an entry of " + std::to_string(bounds.size() + 1) + " values");
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < bounds.size(); ++k) idx.push_back(read_index(t[k], bounds[k], c.at(k)));
        const auto [r, col] = place(idx);
        if (!seen.emplace(r, col).second) c.fail("duplicate entry");
        m.set(r, col, read_scalar(t[bounds.size()], f, c.at(bounds.size())));
    }
    return m;
}

/// mult[i, j, k, v]: e_i e_j has coefficient v on e_k.
Matrix read_mult(const json& v, const Field& f, std::size_t n, const Ctx& ctx)
{
    return read_triples(v, f, n, n * n, {n, n, n},
                        [n](const std::vector<std::size_t>& i) { return std::make_pair(i[2], i[0] * n + i[1]); }, ctx);
}

ojson write_mult(const Matrix& m, std::size_t n)
{
    ojson out = ojson::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m.rows(); ++k)
                if (!m.is_zero_at(k, i * n + j)) out.push_back({i, j, k, write_scalar(m.at(k, i * n + j))});
    return out;
}

/// Coaction-shaped triples [i, j, k, v]: column i has coefficient v at row j * inner + k.
Matrix read_coproduct(const json& v, const Field& f, std::size_t src, std::size_t outer, std::size_t inner,
                      const Ctx& ctx)
{
    return read_triples(v, f, outer * inner, src, {src, outer, inner},
                        [inner](const std::vector<std::size_t>& i) { return std::make_pair(i[1] * inner + i[2], i[0]); },
                        ctx);
}

ojson write_coproduct(const Matrix& m, std::size_t inner)
{
    ojson out = ojson::array();
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (!m.is_zero_at(r, i)) out.push_back({i, r / inner, r % inner, write_scalar(m.at(r, i))});
    return out;
}

ojson write_column(const Matrix& m)
{
    ojson out = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(write_scalar(m.at(i, 0)));
    return out;
}

ojson write_row(const Matrix& m)
{
    ojson out = ojson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(write_scalar(m.at(0, j)));
    return out;
}

/// Antipode as sparse [i, j, v] (S(e_i) has coefficient v on e_j), or as dense rows
/// under "antipode_rows" with S(e_j) = Σ_i rows[i][j] e_i.
Matrix read_antipode(const json& doc, const Field& f, std::size_t n, const Ctx& ctx)
{
    auto dense = doc.find("antipode_rows");
    if (dense != doc.end()) {
        const Ctx c = ctx.at("antipode_rows");
        if (!dense->is_array() || dense->size() != n) c.fail("expected " + std::to_string(n) + " rows");
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            const json& row = (*dense)[i];
            if (!row.is_array() || row.size() != n) c.at(i).fail("expected a row of length " + std::to_string(n));
            for (std::size_t j = 0; j < n; ++j) m.set(i, j, read_scalar(row[j], f, c.at(i).at(j)));
        }
        return m;
    }
    return read_triples(member(doc, "antipode", ctx), f, n, n, {n, n},
                        [](const std::vector<std::size_t>& i) { return std::make_pair(i[1], i[0]); },
                        ctx.at("antipode"));
}

ojson write_antipode(const Matrix& s)
{
    ojson out = ojson::array();
    for (std::size_t i = 0; i < s.cols(); ++i)
        for (std::size_t j = 0; j < s.rows(); ++j)
            if (!s.is_zero_at(j, i)) out.push_back({i, j, write_scalar(s.at(j, i))});
    return out;
}

AlgebraData read_algebra_body(const json& doc, const Field& f, const Ctx& ctx)
{
    const std::size_t n = read_dim(doc, ctx);
    Matrix mult = read_mult(member(doc, "mult", ctx), f, n, ctx.at("mult"));
    Matrix unit = read_vector(member(doc, "unit", ctx), f, n, ctx.at("unit"));
    return AlgebraData(f, n, std::move(mult), std::move(unit), read_labels(doc, n, ctx));
}

HopfAlgebra read_hopf_body(const json& doc, const Ctx& ctx)
{
    const Field f = read_field(doc, ctx);
    AlgebraData alg = read_algebra_body(doc, f, ctx);
    const std::size_t n = alg.dim;
    Matrix comult = read_coproduct(member(doc, "comult", ctx), f, n, n, n, ctx.at("comult"));
    Matrix counit = read_vector(member(doc, "counit", ctx), f, n, ctx.at("counit")).transpose();
    Matrix s = read_antipode(doc, f, n, ctx);
    return HopfAlgebra(std::move(alg), CoalgebraData(f, n, std::move(comult), std::move(counit)), std::move(s));
}

json load_json(const std::string& text, const Ctx& ctx)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        ctx.fail(std::string("syntax error: ") + e.what());
    }
}

std::string read_all(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError(path.string() + ": cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Document parse_document(const json& doc, const std::filesystem::path& origin, const Ctx& ctx)
{
    const json& kind_v = member(doc, "kind", ctx);
    if (!kind_v.is_string()) ctx.at("kind").fail("expected a string");
    const std::string kind = kind_v.get<std::string>();
    if (kind == "hopf") return read_hopf_body(doc, ctx);
    if (kind == "algebra") return read_algebra_body(doc, read_field(doc, ctx), ctx);
    if (kind == "subspace") {
        const Field f = read_field(doc, ctx);
        const json& nv = member(doc, "ambient_dim", ctx);
        if (!nv.is_number_integer() || nv.get<std::int64_t>() < 0) ctx.at("ambient_dim").fail("expected a non-negative integer");
        const auto n = nv.get<std::size_t>();
        const json& vecs = member(doc, "vectors", ctx);
        if (!vecs.is_array()) ctx.at("vectors").fail("expected a list of vectors");
        Matrix rows(f, vecs.size(), n);
        for (std::size_t i = 0; i < vecs.size(); ++i) {
            const Matrix v = read_vector(vecs[i], f, n, ctx.at("vectors").at(i));
            for (std::size_t j = 0; j < n; ++j) rows.set(i, j, v.at(j, 0));
        }
        return Subspace::span(rows);
    }
    if (kind == "map") {
        const Field f = read_field(doc, ctx);
        const json& rows = member(doc, "rows", ctx);
        if (!rows.is_array() || rows.empty()) ctx.at("rows").fail("expected a non-empty list of rows");
        const std::size_t cols = rows[0].is_array() ? rows[0].size() : 0;
        Matrix m(f, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Matrix r = read_vector(rows[i], f, cols, ctx.at("rows").at(i));
            for (std::size_t j = 0; j < cols; ++j) m.set(i, j, r.at(j, 0));
        }
        return LinearMapFile{m};
    }
    if (kind == "comodule") {
        const json& hv = member(doc, "hopf", ctx);
        HopfAlgebra h;
        if (hv.is_string()) {
            const auto ref = origin.parent_path() / hv.get<std::string>();
            h = parse_hopf(ref);
        } else {
            h = read_hopf_body(hv, ctx.at("hopf"));
        }
        const Field f = h.field();
        const Ctx ac = ctx.at("algebra");
        AlgebraData alg = read_algebra_body(member(doc, "algebra", ctx), f, ac);
        auto it = doc.find("field");
        if (it != doc.end() && !(read_field(doc, ctx) == f)) ctx.at("field").fail("differs from the Hopf algebra field");
        Matrix coaction = read_coproduct(member(doc, "coaction", ctx), f, alg.dim, alg.dim, h.dim(), ctx.at("coaction"));
        return ComoduleAlgebra(std::move(h), std::move(alg), std::move(coaction));
    }
    ctx.at("kind").fail("unknown kind \"" + kind + "\" (expected hopf, algebra, comodule, subspace or map)");
}

/// Objects one key per line, lists of lists one inner list per line.
std::string pretty(const ojson& doc, const std::string& indent = "")
{
    std::ostringstream os;
    os << "{\n";
    std::size_t k = 0;
    const std::string in = indent + "  ";
    for (auto it = doc.begin(); it != doc.end(); ++it, ++k) {
        os << in << ojson(it.key()).dump() << ": ";
        const ojson& v = it.value();
        if (v.is_object()) {
            os << pretty(v, in);
        } else if (v.is_array() && !v.empty() && v[0].is_array()) {
            os << "[\n";
            for (std::size_t i = 0; i < v.size(); ++i) os << in << "  " << v[i].dump() << (i + 1 < v.size() ? ",\n" : "\n");
            os << in << "]";
        } else {
            os << v.dump();
        }
        os << (k + 1 < doc.size() ? ",\n" : "\n");
    }
    os << indent << "}";
    return os.str();
}

ojson hopf_json(const HopfAlgebra& h)
{
    ojson d = ojson::object();
    d["kind"] = "hopf";
    d["field"] = h.field().name();
    d["dim"] = h.dim();
    d["labels"] = h.labels();
    d["mult"] = write_mult(h.mult(), h.dim());
    d["unit"] = write_column(h.unit());
    d["comult"] = write_coproduct(h.comult(), h.dim());
    d["counit"] = write_row(h.counit());
    d["antipode"] = write_antipode(h.antipode());
    return d;
}

ojson algebra_json(const AlgebraData& a)
{
    ojson d = ojson::object();
    d["kind"] = "algebra";
    d["field"] = a.field.name();
    d["dim"] = a.dim;
    d["labels"] = a.labels;
    d["mult"] = write_mult(a.mult, a.dim);
    d["unit"] = write_column(a.unit);
    return d;
}

}  // namespace

Document parse_text(const std::string& text, const std::filesystem::path& origin)
{
    const Ctx ctx{origin.string(), ""};
    return parse_document(load_json(text, ctx), origin, ctx);
}

Document parse_file(const std::filesystem::path& path) { return parse_text(read_all(path), path); }

namespace {

template <class T>
T expect(const std::filesystem::path& path, const char* kind)
{
    Document d = parse_file(path);
    if (auto* v = std::get_if<T>(&d)) return std::move(*v);
    throw ParseError(path.string() + ": expected a document of kind \"" + kind + "\"");
}

}  // namespace

HopfAlgebra parse_hopf(const std::filesystem::path& path) { return expect<HopfAlgebra>(path, "hopf"); }
AlgebraData parse_algebra(const std::filesystem::path& path) { return expect<AlgebraData>(path, "algebra"); }
ComoduleAlgebra parse_comodule(const std::filesystem::path& path) { return expect<ComoduleAlgebra>(path, "comodule"); }
Subspace parse_subspace(const std::filesystem::path& path) { return expect<Subspace>(path, "subspace"); }
Matrix parse_map(const std::filesystem::path& path) { return expect<LinearMapFile>(path, "map").map; }

std::string serialise(const HopfAlgebra& h) { return pretty(hopf_json(h)) + "\n"; }

std::string serialise(const AlgebraData& a) { return pretty(algebra_json(a)) + "\n"; }

std::string serialise(const ComoduleAlgebra& a)
{
    ojson d = ojson::object();
    d["kind"] = "comodule";
    d["field"] = a.field().name();
    d["hopf"] = hopf_json(a.hopf());
    ojson alg = algebra_json(a.algebra());
    alg.erase("kind");
    alg.erase("field");
    d["algebra"] = alg;
    d["coaction"] = write_coproduct(a.coaction(), a.hopf().dim());
    return pretty(d) + "\n";
}

std::string serialise(const Subspace& s)
{
    ojson d = ojson::object();
    d["kind"] = "subspace";
    d["field"] = s.field().name();
    d["ambient_dim"] = s.ambient_dim();
    ojson vecs = ojson::array();
    for (std::size_t i = 0; i < s.dim(); ++i) vecs.push_back(write_row(s.basis().row(i)));
    d["vectors"] = vecs;
    return pretty(d) + "\n";
}

std::string serialise_map(const Matrix& m)
{
    ojson d = ojson::object();
    d["kind"] = "map";
    d["field"] = m.field().name();
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(write_row(m.row(i)));
    d["rows"] = rows;
    return pretty(d) + "\n";
}

}  // namespace hgl::cli
