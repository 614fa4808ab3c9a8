#pragma once

// JSON export/import of presentations and small JSON helpers shared by the CLI.
// Output is deterministic: keys keep insertion order and every list follows the
// canonical generator/relator order.

#include <json.hpp>

#include <string>
#include <vector>

#include "orbconf/error.hpp"
#include "orbconf/group_action.hpp"
#include "orbconf/presentation.hpp"
#include "orbconf/scalar.hpp"

namespace orbconf {

using Json = nlohmann::ordered_json;

// Integers outside the int64 range are written as decimal strings.
inline Json integer_json(const Integer& x) {
    if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
    return Json(x.get_str());
}

inline Json rational_json(const Rational& x) {
    Rational c = x;
    c.canonicalize();
    if (c.get_den() == 1) return integer_json(c.get_num());
    return Json(c.get_str());
}

inline Json generator_json(const Generator& x) {
    if (x.is_diag()) return Json{{"kind", "diag"}, {"k", x.j}, {"p", x.p}};
    return Json{{"kind", "offdiag"}, {"i", x.i}, {"j", x.j}, {"g", x.g}};
}

inline Json relator_data_json(RelatorFamily f, const RelatorData& d) {
    switch (f) {
        case RelatorFamily::rel1a: return Json{{"k", d.i}, {"p", d.p}, {"q", d.q}};
        case RelatorFamily::rel2: return Json{{"i", d.i}, {"j", d.j}, {"h", d.h}, {"p", d.p}};
        case RelatorFamily::rel3: return Json{{"i", d.i}, {"j", d.j}, {"k", d.k}, {"h", d.h}, {"g", d.g}};
        case RelatorFamily::rel4: return Json{{"i", d.i}, {"j", d.j}, {"h", d.h}, {"g", d.g}};
    }
    return Json::object();
}

// [[coeff, [a, b, ...]], ...] in monomial order.
inline Json terms_json(const Element<Integer>& x) {
    Json terms = Json::array();
    for (const auto& [m, c] : x.terms()) {
        Json factors = Json::array();
        for (auto f : m.factors()) factors.push_back(f);
        terms.push_back(Json::array({integer_json(c), factors}));
    }
    return terms;
}

inline Json action_json(const MarkedAction& a) {
    Json group{{"spec", a.spec()}, {"order", a.order()}, {"identity", a.group.identity}, {"mult", a.group.mult}, {"inv", a.group.inv}};
    Json pairs = Json::array();
    for (const auto& fp : a.fixed_pair) pairs.push_back(fp ? Json::array({fp->first, fp->second}) : Json());
    Json z{{"labels", a.points}, {"p_infinity", a.p_infinity}, {"action", a.act}, {"fixed_pairs", pairs}};
    return Json{{"group", group}, {"z", z}};
}

inline Json export_presentation(const Presentation& p) {
    Json doc = action_json(p.action());
    doc["n"] = p.n();
    doc["rel3_variant"] = rel3_variant_name(p.variant());
    doc["generator_count"] = p.generator_count();
    Json gens = Json::array();
    for (const auto& x : p.generators()) gens.push_back(generator_json(x));
    doc["generators"] = gens;
    Json rels = Json::array();
    for (const auto& r : p.relators())
        rels.push_back(Json{{"family", family_name(r.family)}, {"data", relator_data_json(r.family, r.data)}, {"terms", terms_json(r.element)}});
    doc["relators"] = rels;
    return doc;
}

namespace detail {

template <typename T>
T json_get(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad value for '") + key + "': " + e.what());
    }
}

inline void family_from_spec(MarkedAction& a, const std::string& spec) {
    const auto stop = spec.find_first_of(":+");
    const auto name = spec.substr(0, stop);
    static const std::vector<std::pair<std::string, Family>> names = {
        {"trivial", Family::trivial},         {"cyclic", Family::cyclic},         {"dihedral", Family::dihedral},
        {"tetrahedral", Family::tetrahedral}, {"octahedral", Family::octahedral}, {"icosahedral", Family::icosahedral},
        {"sphere", Family::sphere}};
    bool found = false;
    for (const auto& [n, f] : names)
        if (n == name) {
            a.family = f;
            found = true;
        }
    if (!found) throw ParseError("unknown group family '" + name + "'");
    try {
        if (stop != std::string::npos && spec[stop] == ':') a.parameter = static_cast<unsigned>(std::stoul(spec.substr(stop + 1)));
        if (auto plus = spec.find("+orbits:"); plus != std::string::npos) a.extra_orbits = std::stoul(spec.substr(plus + 8));
    } catch (const std::exception&) {
        throw ParseError("bad group spec '" + spec + "'");
    }
}

}  // namespace detail

inline MarkedAction import_action(const Json& doc) {
    using detail::json_get;
    const auto& g = doc.at("group");
    const auto& z = doc.at("z");
    MarkedAction a;
    detail::family_from_spec(a, json_get<std::string>(g, "spec"));
    a.group.mult = json_get<std::vector<std::vector<Elem>>>(g, "mult");
    a.group.inv = json_get<std::vector<Elem>>(g, "inv");
    a.group.identity = json_get<Elem>(g, "identity");
    if (json_get<std::size_t>(g, "order") != a.group.inv.size()) throw ParseError("group order does not match the tables");
    a.points = json_get<std::vector<std::string>>(z, "labels");
    a.p_infinity = json_get<Point>(z, "p_infinity");
    a.act = json_get<std::vector<std::vector<Point>>>(z, "action");
    for (const auto& fp : z.at("fixed_pairs")) {
        if (fp.is_null())
            a.fixed_pair.emplace_back(std::nullopt);
        else if (fp.is_array() && fp.size() == 2)
            a.fixed_pair.emplace_back(FixedPair{fp[0].get<Point>(), fp[1].get<Point>()});
        else
            throw ParseError("fixed pair must be null or a pair of point indices");
    }
    a.sphere_case = a.family == Family::sphere;
    auto report = validate(a);
    if (!report.ok()) throw ParseError("imported action is invalid: " + report.violations.front().code);
    return a;
}

// Rebuilds the presentation from the tables and checks it against the listed
// generators and relators.
inline Presentation import_presentation(const Json& doc) {
    try {
        auto action = import_action(doc);
        const auto n = detail::json_get<unsigned>(doc, "n");
        const auto variant_name = detail::json_get<std::string>(doc, "rel3_variant");
        Rel3Variant variant;
        if (variant_name == "derived")
            variant = Rel3Variant::derived;
        else if (variant_name == "printed")
            variant = Rel3Variant::printed;
        else
            throw ParseError("unknown rel3_variant '" + variant_name + "'");
        Presentation p(std::move(action), n, variant);
        const auto expected = export_presentation(p);
        if (detail::json_get<std::size_t>(doc, "generator_count") != doc.at("generators").size())
            throw ParseError("generator_count does not match the generator list");
        if (doc.at("generators") != expected.at("generators")) throw ParseError("generator list does not match the tables");
        if (doc.at("relators") != expected.at("relators")) throw ParseError("relator list does not match the tables");
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed presentation document: ") + e.what());
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("inconsistent presentation document: ") + e.what());
    }
}

inline Presentation import_presentation(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return import_presentation(doc);
}

}  // namespace orbconf
