#include "framekit/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "framekit/tolerances.hpp"

namespace framekit {

namespace {

using nlohmann::json;

std::string render(double x) {
    if (!std::isfinite(x))
        throw Error("serialize: non-finite value");
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    // "%.17g" prints negative zero as "-0", which reads back as the integer
    // zero and drops the sign bit
    if (buf[0] == '-' && buf[1] == '0' && buf[2] == '\0')
        return "-0.0";
    return buf;
}

void emit(std::string& out, const cplx& z) {
    out += '[';
    out += render(z.real());
    out += ',';
    out += render(z.imag());
    out += ']';
}

void emit(std::string& out, const CVector& v) {
    out += '[';
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i)
            out += ',';
        emit(out, v[i]);
    }
    out += ']';
}

void emit(std::string& out, const CMatrix& m) {
    out += '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i)
            out += ',';
        emit(out, m.row(i));
    }
    out += ']';
}

[[noreturn]] void fail(const std::string& what) {
    throw ParseError("parse: " + what);
}

void check_keys(const json& j, std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (item.key() == k) {
                known = true;
                break;
            }
        if (!known)
            fail("unknown field \"" + item.key() + "\"");
    }
    for (const char* k : allowed)
        if (!j.contains(k))
            fail(std::string("missing field \"") + k + "\"");
}

std::size_t read_dim(const json& j, const char* key) {
    const json& v = j.at(key);
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
        fail(std::string("\"") + key + "\" must be a positive integer");
    const std::uint64_t d = v.get<std::uint64_t>();
    if (d > tol::size_cap)
        fail(std::string("\"") + key + "\" exceeds the size cap");
    return static_cast<std::size_t>(d);
}

cplx read_complex(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        fail(where + ": complex scalar must be a [re, im] number pair");
    const double re = v[0].get<double>();
    const double im = v[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
        fail(where + ": non-finite number");
    return cplx{re, im};
}

CVector read_vector(const json& v, std::size_t dim, const std::string& where) {
    if (!v.is_array() || v.size() != dim)
        fail(where + ": expected an array of " + std::to_string(dim) + " complex scalars");
    CVector out(dim);
    for (std::size_t i = 0; i < dim; ++i)
        out[i] = read_complex(v[i], where + "[" + std::to_string(i) + "]");
    return out;
}

CMatrix read_matrix(const json& v, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!v.is_array() || v.size() != rows)
        fail(where + ": expected " + std::to_string(rows) + " rows");
    CMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const CVector r = read_vector(v[i], cols, where + "[" + std::to_string(i) + "]");
        for (std::size_t j = 0; j < cols; ++j)
            out(i, j) = r[j];
    }
    return out;
}

} // namespace

ParsedFile parse_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(e.what());
    }
    if (!j.is_object())
        fail("top level must be an object");
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer() ||
        j["schema_version"].get<std::int64_t>() != 1)
        fail("\"schema_version\" must be the integer 1");
    if (!j.contains("kind") || !j["kind"].is_string())
        fail("\"kind\" must be a string");
    const std::string kind = j["kind"].get<std::string>();

    if (kind == "vector") {
        check_keys(j, {"schema_version", "kind", "dim", "data"});
        const std::size_t dim = read_dim(j, "dim");
        return read_vector(j.at("data"), dim, "data");
    }
    if (kind == "frame") {
        check_keys(j, {"schema_version", "kind", "dim", "data"});
        const std::size_t dim = read_dim(j, "dim");
        const json& data = j.at("data");
        if (!data.is_array() || data.empty())
            fail("\"data\" must be a nonempty array of vectors");
        std::vector<CVector> elems;
        elems.reserve(data.size());
        for (std::size_t n = 0; n < data.size(); ++n)
            elems.push_back(read_vector(data[n], dim, "data[" + std::to_string(n) + "]"));
        return Frame(dim, std::move(elems));
    }
    if (kind == "operator_frame") {
        check_keys(j, {"schema_version", "kind", "dim_h", "dim_k", "data"});
        const std::size_t dh = read_dim(j, "dim_h");
        const std::size_t dk = read_dim(j, "dim_k");
        if (dh > tol::size_cap / dk)
            fail("dim_h * dim_k exceeds the size cap");
        const json& data = j.at("data");
        if (!data.is_array() || data.empty())
            fail("\"data\" must be a nonempty array of matrices");
        std::vector<HSElement> elems;
        elems.reserve(data.size());
        for (std::size_t n = 0; n < data.size(); ++n)
            elems.push_back(
                HSElement(read_matrix(data[n], dh, dk, "data[" + std::to_string(n) + "]")));
        return OperatorFrame(std::move(elems));
    }
    fail("\"kind\" must be \"frame\", \"operator_frame\", or \"vector\"");
}

ParsedFile load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("parse: cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_file(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " in \"" + path + "\"");
    }
}

std::string to_json(const Frame& f) {
    std::string out = "{\n  \"schema_version\": 1,\n  \"kind\": \"frame\",\n  \"dim\": " +
                      std::to_string(f.dim()) + ",\n  \"data\": [\n";
    for (std::size_t n = 0; n < f.count(); ++n) {
        out += "    ";
        emit(out, f[n]);
        out += n + 1 < f.count() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

std::string to_json(const OperatorFrame& of) {
    std::string out =
        "{\n  \"schema_version\": 1,\n  \"kind\": \"operator_frame\",\n  \"dim_h\": " +
        std::to_string(of.dim_h()) + ",\n  \"dim_k\": " + std::to_string(of.dim_k()) +
        ",\n  \"data\": [\n";
    for (std::size_t n = 0; n < of.count(); ++n) {
        out += "    ";
        emit(out, of[n].matrix());
        out += n + 1 < of.count() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

std::string to_json(const CVector& v) {
    std::string out = "{\n  \"schema_version\": 1,\n  \"kind\": \"vector\",\n  \"dim\": " +
                      std::to_string(v.dim()) + ",\n  \"data\": ";
    emit(out, v);
    out += "\n}\n";
    return out;
}

void save_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("save: cannot open \"" + path + "\" for writing");
    out << text;
    if (!out)
        throw Error("save: write to \"" + path + "\" failed");
}

} // namespace framekit
