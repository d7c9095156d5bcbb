#include "arrangement_file.hpp"

#include <vector>

namespace arrcover::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw InputError(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object())
        fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        fail(where, std::string("missing field \"") + key + "\"");
    return *it;
}

unsigned long positive_int(const json& v, const std::string& where, bool allow_zero)
{
    if (!v.is_number_integer())
        fail(where, "expected an integer");
    const auto x = v.get<long long>();
    if (x < 0 || (!allow_zero && x == 0))
        fail(where, allow_zero ? "expected a nonnegative integer" : "expected a positive integer");
    return static_cast<unsigned long>(x);
}

CycNum parse_cycnum(const json& v, unsigned order, const std::string& where)
{
    const std::size_t arity = euler_phi(order);
    if (!v.is_array())
        fail(where, "expected an array of " + std::to_string(arity) + " rational strings");
    if (v.size() != arity)
        fail(where, "expected " + std::to_string(arity) + " rational entries (phi(" + std::to_string(order) +
                        ")), got " + std::to_string(v.size()));
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string here = where + "[" + std::to_string(i) + "]";
        if (!v[i].is_string())
            fail(here, "expected a rational string such as \"-3/4\"");
        try {
            coeffs.push_back(Rational::parse(v[i].get<std::string>()));
        } catch (const std::exception& e) {
            fail(here, e.what());
        }
    }
    return CycNum::from_coeffs(std::move(coeffs), order);
}

} // namespace

ArrangementFile parse_file(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    const std::string root = "arrangement";
    const json& name = field(doc, "name", root);
    if (!name.is_string())
        fail(root + ".name", "expected a string");
    const auto dim = positive_int(field(doc, "ambient_dim", root), root + ".ambient_dim", true);
    const auto order = positive_int(field(doc, "cyclotomic_order", root), root + ".cyclotomic_order", false);
    const json& planes = field(doc, "hyperplanes", root);
    if (!planes.is_array())
        fail(root + ".hyperplanes", "expected an array");

    std::vector<Hyperplane> hyperplanes;
    for (std::size_t i = 0; i < planes.size(); ++i) {
        const std::string where = "hyperplanes[" + std::to_string(i) + "]";
        Hyperplane h;
        h.constant = parse_cycnum(field(planes[i], "constant", where), static_cast<unsigned>(order), where + ".constant");
        const json& coeffs = field(planes[i], "coeffs", where);
        if (!coeffs.is_array() || coeffs.size() != dim)
            fail(where + ".coeffs", "expected " + std::to_string(dim) + " coefficients");
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            h.coeffs.push_back(parse_cycnum(coeffs[j], static_cast<unsigned>(order),
                                            where + ".coeffs[" + std::to_string(j) + "]"));
        hyperplanes.push_back(std::move(h));
    }
    try {
        return {name.get<std::string>(),
                Arrangement::build(dim, static_cast<unsigned>(order), std::move(hyperplanes))};
    } catch (const ArrangementError& e) {
        throw InputError(e.what());
    }
}

json cycnum_to_json(const CycNum& x)
{
    json arr = json::array();
    for (const auto& c : x.coeffs())
        arr.push_back(c.to_string());
    return arr;
}

json arrangement_to_json(const std::string& name, const Arrangement& a)
{
    json planes = json::array();
    for (const auto& h : a.hyperplanes()) {
        json coeffs = json::array();
        for (const auto& c : h.coeffs)
            coeffs.push_back(cycnum_to_json(c));
        planes.push_back({{"constant", cycnum_to_json(h.constant)}, {"coeffs", std::move(coeffs)}});
    }
    return {{"name", name},
            {"ambient_dim", a.ambient_dim()},
            {"cyclotomic_order", a.cyc_order()},
            {"hyperplanes", std::move(planes)}};
}

std::string serialize(const std::string& name, const Arrangement& a)
{
    return arrangement_to_json(name, a).dump(2) + "\n";
}

} // namespace arrcover::cli
