#include "wedgent/state_file.hpp"

#include "wedgent/errors.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace wedgent {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& message)
{
    throw Error(ErrorCode::SchemaError, path + ": " + message);
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& path)
{
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (auto a : allowed)
            known = known || key == a;
        if (!known)
            schema_error(path + "." + key, "unknown field");
    }
}

const json& require(const json& obj, const char* key, const std::string& path)
{
    const auto it = obj.find(key);
    if (it == obj.end())
        schema_error(path + "." + key, "missing field");
    return *it;
}

std::size_t read_index(const json& v, const std::string& path)
{
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        schema_error(path, "expected a non-negative integer");
    return v.get<std::size_t>();
}

double read_real(const json& v, const std::string& path)
{
    if (!v.is_number())
        schema_error(path, "expected a number");
    return v.get<double>();
}

// Zero amplitudes are omitted unless a sign bit is set.
bool worth_writing(const Complex& a)
{
    return a.real() != 0.0 || a.imag() != 0.0 || std::signbit(a.real()) || std::signbit(a.imag());
}

} // namespace

PureState state_from_json(const json& doc)
{
    if (!doc.is_object())
        schema_error("$", "expected an object");
    reject_unknown(doc, {"dims", "amplitudes"}, "$");

    const json& jdims = require(doc, "dims", "$");
    if (!jdims.is_array() || jdims.empty())
        schema_error("$.dims", "expected a nonempty array");
    Dims dims;
    for (std::size_t j = 0; j < jdims.size(); ++j) {
        const std::string path = "$.dims[" + std::to_string(j) + "]";
        const std::size_t d = read_index(jdims[j], path);
        if (d == 0)
            schema_error(path, "dimension must be positive");
        dims.push_back(d);
    }

    std::size_t total = 0;
    try {
        total = total_dimension(dims);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::TooLarge)
            throw;
        schema_error("$.dims", e.what());
    }
    const PureState layout(dims, std::vector<Complex>(total));

    const json& jamps = require(doc, "amplitudes", "$");
    if (!jamps.is_array())
        schema_error("$.amplitudes", "expected an array");
    std::vector<Complex> amps(total);
    std::set<std::size_t> seen;
    for (std::size_t n = 0; n < jamps.size(); ++n) {
        const std::string path = "$.amplitudes[" + std::to_string(n) + "]";
        const json& rec = jamps[n];
        if (!rec.is_object())
            schema_error(path, "expected an object");
        reject_unknown(rec, {"idx", "re", "im"}, path);
        const json& jidx = require(rec, "idx", path);
        if (!jidx.is_array())
            schema_error(path + ".idx", "expected an array");
        if (jidx.size() != dims.size())
            schema_error(path + ".idx", "expected " + std::to_string(dims.size()) + " indices, got " +
                                            std::to_string(jidx.size()));
        MultiIndex idx;
        for (std::size_t j = 0; j < jidx.size(); ++j) {
            const std::string ipath = path + ".idx[" + std::to_string(j) + "]";
            const std::size_t i = read_index(jidx[j], ipath);
            if (i >= dims[j])
                schema_error(ipath, "index " + std::to_string(i) + " out of range for dimension " +
                                        std::to_string(dims[j]));
            idx.push_back(i);
        }
        const std::size_t flat = layout.flat_index(idx);
        if (!seen.insert(flat).second)
            schema_error(path + ".idx", "duplicate index");
        amps[flat] = Complex(read_real(require(rec, "re", path), path + ".re"),
                             read_real(require(rec, "im", path), path + ".im"));
    }
    return PureState(std::move(dims), std::move(amps));
}

json state_to_json(const PureState& state)
{
    json amps = json::array();
    for (std::size_t f = 0; f < state.size(); ++f) {
        const Complex a = state.at(f);
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw Error(ErrorCode::InvalidArgument, "cannot serialize a non-finite amplitude");
        if (!worth_writing(a))
            continue;
        amps.push_back({{"idx", state.multi_index(f)}, {"re", a.real()}, {"im", a.imag()}});
    }
    return {{"dims", state.dims()}, {"amplitudes", std::move(amps)}};
}

PureState load_state(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::SyntaxError, path.string() + ": " + e.what());
    }
    return state_from_json(doc);
}

void save_state(const std::filesystem::path& path, const PureState& state)
{
    const std::string text = state_to_json(state).dump(2) + "\n";
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    out << text;
    if (!out)
        throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

} // namespace wedgent
