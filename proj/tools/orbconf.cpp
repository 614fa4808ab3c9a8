// orbconf: command-line front end.
//
// Exit status: 0 on success, 2 when a mathematical check fails, 1 on usage
// errors (bad flags, bad group spec, violated preconditions, budget exceeded).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orbconf/orbconf.hpp"

namespace {

using namespace orbconf;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCheckFailed = 2;

struct Options {
    std::string group;
    unsigned n = 2;
    std::optional<unsigned> degree;
    unsigned i_max = 12;
    std::string format = "text";
    std::string p_infinity;
    std::string rel3_variant = "derived";
    std::uint64_t budget = OracleOptions{}.budget;
    std::string output;
    std::string expr;
    std::string profile;
    bool verify = false;
    bool rational = false;
    bool invariants = true;
};

struct Result {
    int code = kOk;
    std::string text;
};

bool json_format(const Options& o) { return o.format == "json"; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

MarkedAction load_action(const Options& o) {
    auto a = parse_group_spec(o.group);
    if (!o.p_infinity.empty()) a = with_p_infinity(std::move(a), o.p_infinity);
    return a;
}

Rel3Variant variant_of(const Options& o) { return o.rel3_variant == "printed" ? Rel3Variant::printed : Rel3Variant::derived; }

std::shared_ptr<const Presentation> load_presentation(const Options& o) {
    return std::make_shared<const Presentation>(load_action(o), o.n, variant_of(o));
}

Json integers_json(const std::vector<Integer>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(integer_json(x));
    return a;
}

std::string join(const std::vector<Integer>& xs, const char* sep = ", ") {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : sep) + x.get_str();
    return s;
}

Result describe_group(const Options& o) {
    const auto a = load_action(o);
    const auto report = validate(a);
    const auto orbs = orbits(a);
    Result r;
    r.code = report.ok() ? kOk : kCheckFailed;
    if (json_format(o)) {
        Json orbit_list = Json::array();
        for (const auto& orb : orbs) {
            Json labels = Json::array();
            for (auto p : orb) labels.push_back(a.points[p]);
            orbit_list.push_back(labels);
        }
        Json pairs = Json::array();
        for (Elem g = 0; g < a.order(); ++g)
            if (a.fixed_pair[g]) pairs.push_back(Json{{"element", g}, {"points", {a.points[a.fixed_pair[g]->first], a.points[a.fixed_pair[g]->second]}}});
        Json violations = Json::array();
        for (const auto& v : report.violations) violations.push_back(Json{{"code", v.code}, {"detail", v.detail}});
        Json doc{{"group", a.spec()},
                 {"order", a.order()},
                 {"cyclic", report.cyclic_group},
                 {"z", a.points},
                 {"p_infinity", a.z_size() ? Json(a.points[a.p_infinity]) : Json()},
                 {"orbits", orbit_list},
                 {"fixed_pairs", pairs},
                 {"irregular_count", report.irregular_count},
                 {"irregular_orbit_count", report.irregular_orbit_count},
                 {"violations", violations},
                 {"valid", report.ok()}};
        r.text = dump(doc);
        return r;
    }
    std::ostringstream out;
    out << "group: " << a.spec() << " (order " << a.order() << (report.cyclic_group ? ", cyclic" : "") << ")\n";
    out << "|Z| = " << a.z_size();
    if (a.z_size()) out << ", p_infinity = " << a.points[a.p_infinity];
    out << "\norbits:";
    for (const auto& orb : orbs) {
        out << " {";
        for (std::size_t k = 0; k < orb.size(); ++k) out << (k ? "," : "") << a.points[orb[k]];
        out << "}";
    }
    out << "\nirregular points: " << report.irregular_count << " in " << report.irregular_orbit_count << " orbits\n";
    if (report.ok())
        out << "valid\n";
    else
        for (const auto& v : report.violations) out << "violation: " << v.code << ": " << v.detail << "\n";
    r.text = out.str();
    return r;
}

Result presentation_cmd(const Options& o) {
    const auto p = load_presentation(o);
    if (json_format(o)) return {kOk, dump(export_presentation(*p))};
    std::ostringstream out;
    out << "generators (" << p->generator_count() << "):\n";
    for (GenIndex g = 0; g < p->generator_count(); ++g) out << "  " << g << "  " << p->generator_name(g) << "\n";
    out << "relators (" << p->relators().size() << "):\n";
    for (const auto& rel : p->relators()) out << "  " << family_name(rel.family) << "  " << format_element(*p, rel.element) << "\n";
    return {kOk, out.str()};
}

Result basis_cmd(const Options& o) {
    const auto p = load_presentation(o);
    const unsigned d = o.degree.value_or(o.n);
    const auto b = basis(*p, d);
    if (json_format(o)) {
        Json list = Json::array();
        for (const auto& m : b) {
            Json names = Json::array();
            for (auto f : m.factors()) names.push_back(p->generator_name(f));
            list.push_back(names);
        }
        return {kOk, dump(Json{{"degree", d}, {"count", b.size()}, {"dimension", integer_json(dimension(*p, d))}, {"monomials", list}})};
    }
    std::ostringstream out;
    for (const auto& m : b) out << format_element(*p, Element<Integer>::from_monomial(m)) << "\n";
    out << "count: " << b.size() << "\n";
    return {kOk, out.str()};
}

Json degree_report_json(const DegreeReport& r) {
    Json j{{"degree", r.degree},
           {"free_monomials", integer_json(r.free_monomials)},
           {"ideal_rank", r.ideal_rank},
           {"quotient_dim", integer_json(r.quotient_dim)},
           {"expected_dim", integer_json(r.expected_dim)}};
    if (r.invariant_factors) {
        // the list is all ones whenever the quotient is free; report it compactly
        bool all_one = true;
        for (const auto& f : *r.invariant_factors) all_one = all_one && f == 1;
        if (all_one)
            j["invariant_factors"] = Json{{"count", r.invariant_factors->size()}, {"all_one", true}};
        else
            j["invariant_factors"] = Json{{"count", r.invariant_factors->size()}, {"all_one", false}, {"values", integers_json(*r.invariant_factors)}};
    }
    j["pass"] = r.pass;
    return j;
}

std::string degree_report_text(const DegreeReport& r) {
    std::ostringstream out;
    out << "degree " << r.degree << ": free " << r.free_monomials << ", ideal rank " << r.ideal_rank << ", quotient " << r.quotient_dim
        << ", expected " << r.expected_dim;
    if (r.invariant_factors) {
        bool all_one = true;
        for (const auto& f : *r.invariant_factors) all_one = all_one && f == 1;
        out << ", invariant factors " << (all_one ? "all 1" : join(*r.invariant_factors, " "));
    }
    out << (r.pass ? "  pass" : "  FAIL") << "\n";
    return out.str();
}

Result betti_cmd(const Options& o) {
    const auto a = load_action(o);
    const auto poly = poincare_polynomial(a, o.n);
    std::vector<Integer> betti;
    for (long k = 0; k <= poly.degree(); ++k) betti.push_back(poly.coefficient(static_cast<std::size_t>(k)));
    Result r;
    std::optional<BasisReport> rep;
    if (o.verify) {
        QuotientOracle oracle(load_presentation(o), OracleOptions{o.budget});
        rep = oracle.check_basis(o.n, false);
        if (!rep->pass()) r.code = kCheckFailed;
    }
    if (json_format(o)) {
        Json doc{{"group", a.spec()},
                 {"n", o.n},
                 {"p_infinity", a.points[a.p_infinity]},
                 {"alpha", integers_json(alpha_profile(a, o.n))},
                 {"betti", integers_json(betti)},
                 {"polynomial", poly.to_string()}};
        if (rep) {
            Json degs = Json::array();
            for (const auto& d : rep->degrees) degs.push_back(degree_report_json(d));
            doc["verification"] = Json{{"degrees", degs}, {"pass", rep->pass()}};
        }
        r.text = dump(doc);
        return r;
    }
    r.text = poly.to_string() + "\n";
    if (rep) {
        for (const auto& d : rep->degrees) r.text += degree_report_text(d);
        r.text += rep->pass() ? "verified\n" : "verification FAILED\n";
    }
    return r;
}

template <typename Scalar>
Result multiply_with(const Options& o) {
    const auto p = load_presentation(o);
    const Algebra<Scalar> alg(p);
    const auto raw = parse_expression<Scalar>(*p, o.expr);
    const auto nf = alg.normalize(raw);
    Result r;
    std::optional<bool> agrees;
    const auto deg = raw.degree();
    if (o.verify) {
        if (!deg) throw PreconditionError("--verify needs a homogeneous expression");
        if (*deg <= p->n()) {
            QuotientOracle oracle(p, OracleOptions{o.budget});
            // clear denominators so the oracle sees an integer element
            Integer den(1);
            for (const auto& [m, c] : raw.terms()) {
                if constexpr (std::is_same_v<Scalar, Rational>) {
                    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
                }
            }
            Element<Integer> scaled;
            for (const auto& [m, c] : raw.terms()) scaled.add(m, Integer(Rational(c) * Rational(den)));
            auto ref = oracle.reduce_in_quotient(scaled, *deg);
            for (auto& x : ref) x /= Rational(den);
            const auto mine = alg.coordinates(nf, *deg);
            bool same = ref.size() == mine.size();
            for (std::size_t k = 0; same && k < ref.size(); ++k) same = ref[k] == Rational(mine[k]);
            agrees = same;
        } else {
            agrees = nf.is_zero();
        }
        if (!*agrees) r.code = kCheckFailed;
    }
    if (json_format(o)) {
        Json terms = Json::array();
        for (const auto& [m, c] : nf.terms()) {
            Json names = Json::array();
            for (auto f : m.factors()) names.push_back(p->generator_name(f));
            terms.push_back(Json::array({rational_json(Rational(c)), names}));
        }
        Json doc{{"input", o.expr}, {"normal_form", format_element(*p, nf)}, {"terms", terms}};
        if (deg && *deg <= p->n()) {
            Json coords = Json::array();
            for (const auto& c : alg.coordinates(nf, static_cast<unsigned>(*deg))) coords.push_back(rational_json(Rational(c)));
            doc["degree"] = *deg;
            doc["coordinates"] = coords;
        }
        if (agrees) doc["oracle_agrees"] = *agrees;
        r.text = dump(doc);
        return r;
    }
    r.text = format_element(*p, nf) + "\n";
    if (agrees) r.text += *agrees ? "oracle agrees\n" : "oracle DISAGREES\n";
    return r;
}

Result multiply_cmd(const Options& o) { return o.rational ? multiply_with<Rational>(o) : multiply_with<Integer>(o); }

Result verify_basis_cmd(const Options& o) {
    const auto p = load_presentation(o);
    const unsigned max_degree = o.degree.value_or(o.n);
    QuotientOracle oracle(p, OracleOptions{o.budget});
    const auto rep = oracle.check_basis(max_degree, o.invariants);
    Result r;
    r.code = rep.pass() ? kOk : kCheckFailed;
    if (json_format(o)) {
        Json degs = Json::array();
        for (const auto& d : rep.degrees) degs.push_back(degree_report_json(d));
        r.text = dump(Json{{"group", p->action().spec()},
                           {"n", o.n},
                           {"p_infinity", p->action().points[p->action().p_infinity]},
                           {"rel3_variant", rel3_variant_name(p->variant())},
                           {"degrees", degs},
                           {"pass", rep.pass()}});
        return r;
    }
    for (const auto& d : rep.degrees) r.text += degree_report_text(d);
    r.text += rep.pass() ? "pass\n" : "FAIL\n";
    return r;
}

std::vector<Integer> parse_profile(const std::string& text) {
    std::vector<Integer> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(' ');
        const auto last = item.find_last_not_of(' ');
        if (first == std::string::npos) throw ParseError("empty entry in --profile");
        out.push_back(parse_scalar<Integer>(item.substr(first, last - first + 1)));
    }
    if (out.empty()) throw ParseError("--profile is empty");
    return out;
}

Result lcs_cmd(const Options& o) {
    std::vector<Integer> profile;
    std::string label;
    if (!o.profile.empty()) {
        profile = parse_profile(o.profile);
        label = "profile";
    } else {
        const auto a = load_action(o);
        profile = alpha_profile(a, o.n);
        label = a.spec() + ", n = " + std::to_string(o.n);
    }
    const auto rep = verify_lcs_identity(profile, o.i_max);
    Result r;
    r.code = rep.ok() ? kOk : kCheckFailed;
    if (json_format(o)) {
        r.text = dump(Json{{"profile", integers_json(profile)}, {"i_max", o.i_max}, {"ranks", integers_json(rep.ranks)}, {"identity_ok", rep.ok()}});
        return r;
    }
    std::ostringstream out;
    out << label << "; profile (" << join(profile) << ")\n";
    out << "i\tphi_i\n";
    for (unsigned i = 1; i <= o.i_max; ++i) out << i << "\t" << rep.ranks[i - 1] << "\n";
    out << "identity_ok: " << (rep.ok() ? "true" : "false") << "\n";
    r.text = out.str();
    return r;
}

Result hypersurface_cmd(const Options& o) {
    const auto a = load_action(o);
    const auto inv = components(a, o.n);
    const auto pairing = period_pairing(a, o.n);
    const bool cyclic = a.family == Family::cyclic || a.family == Family::trivial;
    std::vector<Factor> factors;
    std::optional<bool> central;
    if (cyclic) {
        factors = defining_factors(a, o.n);
        central = is_central(a);
    }
    Result r;
    r.code = pairing.identity ? kOk : kCheckFailed;
    if (json_format(o)) {
        Json comps = Json::array();
        for (const auto& c : inv.components) comps.push_back(c.label(a));
        Json doc{{"group", a.spec()}, {"n", o.n}, {"component_count", inv.total()}, {"components", comps}};
        if (cyclic) {
            Json fs = Json::array();
            for (const auto& f : factors) {
                if (f.kind == Factor::Kind::diag)
                    fs.push_back(Json{{"kind", "diag"}, {"i", f.i}, {"point", f.point}});
                else
                    fs.push_back(Json{{"kind", "offdiag"}, {"i", f.i}, {"j", f.j}, {"exponent", f.exponent}});
            }
            doc["factors"] = fs;
            doc["central"] = *central;
        } else {
            doc["factors"] = Json();
        }
        Json mer = Json::array();
        for (const auto& m : pairing.meridians) mer.push_back(m.label(a));
        doc["meridians"] = mer;
        doc["period_matrix_identity"] = pairing.identity;
        r.text = dump(doc);
        return r;
    }
    std::ostringstream out;
    out << "components (" << inv.total() << "):";
    for (const auto& c : inv.components) out << " " << c.label(a);
    out << "\n";
    if (cyclic) {
        out << "factors:\n";
        for (const auto& f : factors) out << "  " << f.to_string() << "\n";
        out << "central: " << (*central ? "yes" : "no") << "\n";
    } else {
        out << "factors: unavailable for " << family_name(a.family) << " groups (no linear model)\n";
    }
    out << "period matrix: " << (pairing.identity ? "identity" : "NOT identity") << " of size " << pairing.generators.size() << "\n";
    r.text = out.str();
    return r;
}

Result sphere_cmd(const Options& o) {
    const auto poly = poincare_sphere(static_cast<int>(o.n));
    const auto profile = fundamental_group_profile(sphere_case(), o.n);
    std::optional<SphereLcsReport> lcs;
    if (o.n >= 4) lcs = verify_sphere_lcs(o.n, o.i_max);
    Result r;
    if (lcs && !lcs->ok()) r.code = kCheckFailed;
    if (json_format(o)) {
        Json doc{{"n", o.n},
                 {"poincare", poly.to_string()},
                 {"coefficients", integers_json(poly.coefficients())},
                 {"tower", integers_json(profile.tower)},
                 {"central_torsion_factor", profile.central_torsion_factor},
                 {"fundamental_group", profile.description}};
        if (lcs) {
            doc["i_max"] = o.i_max;
            doc["ranks"] = integers_json(lcs->tower.ranks);
            doc["identity_ok"] = lcs->ok();
        }
        r.text = dump(doc);
        return r;
    }
    std::ostringstream out;
    out << "P_" << o.n << "(t) = " << poly.to_string() << "\n";
    out << "pi_1 = " << profile.description << "\n";
    if (lcs) {
        out << "i\tphi_i\n";
        for (unsigned i = 1; i <= o.i_max; ++i) out << i << "\t" << lcs->tower.ranks[i - 1] << "\n";
        out << "identity_ok: " << (lcs->ok() ? "true" : "false") << "\n";
    }
    r.text = out.str();
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohomology and LCS data of orbit configuration spaces of the punctured sphere"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool needs_group) {
        auto* g = sub->add_option("--group", o.group, "cyclic:<m> | dihedral:<m> | tetrahedral | octahedral | icosahedral | trivial:<z>, optionally +orbits:<k>");
        if (needs_group) g->required();
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
        sub->add_option("--output", o.output, "write to this file instead of stdout");
    };
    auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "number of points")->check(CLI::Range(1u, 64u))->capture_default_str(); };
    auto add_pres = [&](CLI::App* sub) {
        sub->add_option("--p-infinity", o.p_infinity, "label of the basepoint (default: inf, else the first point)");
        sub->add_option("--rel3-variant", o.rel3_variant, "derived or printed")->check(CLI::IsMember({"derived", "printed"}))->capture_default_str();
    };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", o.budget, "maximum free monomials per degree for the oracle")->capture_default_str();
    };

    auto* describe = app.add_subcommand("describe-group", "validate a marked action and list its orbits");
    add_common(describe, true);
    describe->add_option("--p-infinity", o.p_infinity, "label of the basepoint");

    auto* pres = app.add_subcommand("presentation", "generators and relators (json exports the full document)");
    add_common(pres, true);
    add_n(pres);
    add_pres(pres);

    auto* basis_sub = app.add_subcommand("basis", "basis monomials of one degree");
    add_common(basis_sub, true);
    add_n(basis_sub);
    add_pres(basis_sub);
    basis_sub->add_option("--degree", o.degree, "degree (default n)");

    auto* betti = app.add_subcommand("betti", "Poincare polynomial and Betti numbers");
    add_common(betti, true);
    add_n(betti);
    add_pres(betti);
    add_budget(betti);
    betti->add_flag("--verify", o.verify, "confirm every degree with the oracle");

    auto* multiply = app.add_subcommand("multiply", "normal form of an expression such as 'w[1,2;0]^w[2;0]'");
    add_common(multiply, true);
    add_n(multiply);
    add_pres(multiply);
    add_budget(multiply);
    multiply->add_option("--expr", o.expr, "expression")->required();
    multiply->add_flag("--rational", o.rational, "allow rational coefficients");
    multiply->add_flag("--verify", o.verify, "compare with the oracle reduction");

    auto* verify = app.add_subcommand("verify-basis", "oracle ranks and invariant factors up to a degree");
    add_common(verify, true);
    add_n(verify);
    add_pres(verify);
    add_budget(verify);
    verify->add_option("--degree", o.degree, "maximum degree (default n)");
    verify->add_flag("!--no-invariants", o.invariants, "skip invariant factors");

    auto* lcs = app.add_subcommand("lcs", "lower central series ranks and the LCS identity");
    add_common(lcs, false);
    add_n(lcs);
    lcs->add_option("--imax", o.i_max, "largest i")->check(CLI::Range(1u, 200u))->capture_default_str();
    lcs->add_option("--profile", o.profile, "explicit exponent list such as 1,3 instead of --group");

    auto* hyper = app.add_subcommand("hypersurface", "components, defining factors and the period pairing");
    add_common(hyper, true);
    add_n(hyper);
    hyper->add_option("--p-infinity", o.p_infinity, "label of the basepoint");

    auto* sphere = app.add_subcommand("sphere", "configuration spaces of the whole sphere");
    sphere->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    sphere->add_option("--output", o.output, "write to this file instead of stdout");
    add_n(sphere);
    sphere->add_option("--imax", o.i_max, "largest i")->check(CLI::Range(1u, 200u))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    Result result;
    try {
        if (lcs->parsed() && o.group.empty() && o.profile.empty()) throw PreconditionError("lcs needs --group or --profile");
        if (*describe)
            result = describe_group(o);
        else if (*pres)
            result = presentation_cmd(o);
        else if (*basis_sub)
            result = basis_cmd(o);
        else if (*betti)
            result = betti_cmd(o);
        else if (*multiply)
            result = multiply_cmd(o);
        else if (*verify)
            result = verify_basis_cmd(o);
        else if (*lcs)
            result = lcs_cmd(o);
        else if (*hyper)
            result = hypersurface_cmd(o);
        else if (*sphere)
            result = sphere_cmd(o);
    } catch (const orbconf::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const orbconf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    if (!o.output.empty()) {
        std::ofstream f(o.output, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << o.output << "\n";
            return kUsage;
        }
        f << result.text;
    } else {
        std::cout << result.text;
    }
    return result.code;
}
