#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "arrangement_file.hpp"
#include "arrcover/covers.hpp"
#include "catalog.hpp"

namespace arrcover::cli {

using nlohmann::json;

namespace {

json int_json(const Integer& x)
{
    if (x.fits_slong_p())
        return x.get_si();
    return x.get_str();
}

json poly_json(const IntPoly& p)
{
    json arr = json::array();
    for (const auto& c : p.coeffs())
        arr.push_back(int_json(c));
    return arr;
}

std::vector<long> parse_int_list(const std::string& text, const std::string& what)
{
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError(what + ": \"" + text + "\" is not a comma-separated integer list");
        }
    }
    return out;
}

unsigned long parse_count(const std::string& s, const std::string& what)
{
    try {
        std::size_t used = 0;
        const long v = std::stol(s, &used);
        if (used == s.size() && v >= 0)
            return static_cast<unsigned long>(v);
    } catch (const std::exception&) {
    }
    throw InputError(what + ": \"" + s + "\" is not a nonnegative integer");
}

// "q=v" for local-betti, "k:q=v" elsewhere.
void parse_assertion(const std::string& text, std::optional<unsigned long> fixed_k, AssertedValues& into)
{
    const auto eq = text.find('=');
    if (eq == std::string::npos)
        throw InputError("--assert \"" + text + "\": expected " + (fixed_k ? "q=v" : "k:q=v"));
    std::string lhs = text.substr(0, eq);
    unsigned long k = 0;
    if (fixed_k) {
        k = *fixed_k;
    } else {
        const auto colon = lhs.find(':');
        if (colon == std::string::npos)
            throw InputError("--assert \"" + text + "\": expected k:q=v");
        k = parse_count(lhs.substr(0, colon), "--assert k");
        lhs = lhs.substr(colon + 1);
    }
    into[k][parse_count(lhs, "--assert q")] = parse_count(text.substr(eq + 1), "--assert value");
}

const char* method_name(LocalMethod m)
{
    switch (m) {
    case LocalMethod::trivial: return "trivial";
    case LocalMethod::nonresonant: return "nonresonant";
    case LocalMethod::bounds: return "bounds";
    case LocalMethod::central_split: return "central_split";
    }
    return "?";
}

json interval_json(const BettiInterval& b)
{
    json j{{"degree", b.degree},
           {"lower", b.lower},
           {"upper", b.upper},
           {"resolved", b.resolved()},
           {"asserted", b.asserted},
           {"euler_closed", b.euler_closed}};
    j["witness_shift"] = b.witness_shift ? json(*b.witness_shift) : json(nullptr);
    return j;
}

json local_json(const LocalBetti& lb)
{
    json intervals = json::array();
    for (const auto& b : lb.intervals)
        intervals.push_back(interval_json(b));
    return {{"k", lb.k}, {"method", method_name(lb.method)}, {"resolved", lb.resolved()}, {"intervals", intervals}};
}

std::string interval_text(const BettiInterval& b)
{
    std::ostringstream os;
    os << "q=" << b.degree << ' ';
    if (b.resolved())
        os << b.lower;
    else
        os << '[' << b.lower << ".." << b.upper << ']';
    if (b.asserted)
        os << " (asserted)";
    if (b.euler_closed)
        os << " (euler)";
    if (b.witness_shift) {
        os << " shift=(";
        for (std::size_t i = 0; i < b.witness_shift->size(); ++i)
            os << (i ? "," : "") << (*b.witness_shift)[i];
        os << ')';
    }
    return os.str();
}

json pairs_json(const std::map<unsigned long, std::size_t>& m)
{
    json arr = json::array();
    for (const auto& [k, v] : m)
        arr.push_back(json::array({k, v}));
    return arr;
}

std::string join(const std::vector<std::size_t>& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << v[i];
    return os.str();
}

struct Options {
    std::string catalog_key;
    std::string file;
    std::string format = "json";

    unsigned long k = 0;
    unsigned long m = 0;
    std::size_t q = 0;
    std::vector<std::string> shifts;
    std::vector<std::string> assertions;
    std::size_t exhaustive_limit = 16;
    bool matrices = false;
    std::string weights;
    std::string show_key;
};

struct Loaded {
    std::string name;
    Arrangement arrangement;
    const CatalogEntry* entry = nullptr;
};

Loaded load(const Options& o)
{
    if (!o.catalog_key.empty() && !o.file.empty())
        throw InputError("give either --catalog or --file, not both");
    if (!o.catalog_key.empty()) {
        const CatalogEntry* e = find_catalog_entry(o.catalog_key);
        if (!e)
            throw InputError("unknown catalog key \"" + o.catalog_key + "\"");
        return {e->key, e->arrangement, e};
    }
    if (o.file.empty())
        throw InputError("no arrangement given; use --catalog KEY or --file PATH");
    std::ifstream in(o.file, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + o.file);
    std::stringstream buf;
    buf << in.rdbuf();
    ArrangementFile f = parse_file(buf.str());
    return {f.name, f.arrangement, nullptr};
}

Resolution resolution_from(const Options& o, std::size_t n, std::optional<unsigned long> fixed_k)
{
    Resolution r;
    r.search.exhaustive_limit = o.exhaustive_limit;
    for (const auto& s : o.shifts) {
        auto v = parse_int_list(s, "--shift");
        if (v.size() != n)
            throw InputError("--shift \"" + s + "\": expected " + std::to_string(n) + " entries");
        r.search.extra_shifts.push_back(std::move(v));
    }
    for (const auto& a : o.assertions)
        parse_assertion(a, fixed_k, r.asserted);
    return r;
}

void emit(std::ostream& out, const Options& o, const json& j, const std::function<void(std::ostream&)>& text)
{
    if (o.format == "text")
        text(out);
    else
        out << j.dump() << '\n';
}

// ---------------------------------------------------------------- commands

void cmd_info(const Options& o, std::ostream& out)
{
    const Loaded l = load(o);
    const IntPoly p = poincare_polynomial(l.arrangement);
    const Integer chi = p.evaluate(-1);
    json j{{"name", l.name},
           {"n", l.arrangement.size()},
           {"ambient_dim", l.arrangement.ambient_dim()},
           {"cyclotomic_order", l.arrangement.cyc_order()},
           {"central", l.arrangement.is_central()},
           {"poincare", poly_json(p)},
           {"euler_characteristic", int_json(chi)},
           {"beta", int_json(Integer(abs(chi)))}};
    emit(out, o, j, [&](std::ostream& os) {
        os << l.name << ": n=" << l.arrangement.size() << " l=" << l.arrangement.ambient_dim()
           << " d=" << l.arrangement.cyc_order() << (l.arrangement.is_central() ? " central" : " affine") << '\n'
           << "P(A,t) = " << p.to_string() << '\n'
           << "chi = " << chi.get_str() << ", beta = " << Integer(abs(chi)).get_str() << '\n';
    });
}

json flat_json(const Flat& f)
{
    json j{{"codim", f.codim}, {"support", f.support}, {"mobius", f.mobius}, {"multiplicity", f.multiplicity()}};
    if (f.dense)
        j["dense"] = *f.dense;
    return j;
}

void cmd_lattice(const Options& o, std::ostream& out)
{
    const Loaded l = load(o);
    const IntersectionLattice lat = intersection_lattice(l.arrangement);
    const IntersectionLattice closure = dense_edges(l.arrangement);
    json flats = json::array(), cflats = json::array();
    for (const auto& level : lat.levels())
        for (const auto& f : level)
            flats.push_back(flat_json(f));
    for (const auto& level : closure.levels())
        for (const auto& f : level)
            cflats.push_back(flat_json(f));
    json j{{"flats", flats}, {"closure", {{"flats", cflats}, {"infinity_index", l.arrangement.size()}}}};
    emit(out, o, j, [&](std::ostream& os) {
        auto print = [&](const IntersectionLattice& L) {
            for (const auto& level : L.levels())
                for (const auto& f : level) {
                    os << "  codim " << f.codim << " {" << join(f.support) << "} mu=" << f.mobius;
                    if (f.dense)
                        os << (*f.dense ? " dense" : "");
                    os << '\n';
                }
        };
        os << "L(A): " << lat.flat_count() << " flats\n";
        print(lat);
        os << "L(A_inf) (H_inf = " << l.arrangement.size() << "): " << closure.flat_count() << " flats\n";
        print(closure);
    });
}

void cmd_os(const Options& o, std::ostream& out)
{
    const Loaded l = load(o);
    const OrlikSolomon os_alg(l.arrangement);
    std::vector<std::size_t> counts;
    for (const auto& b : os_alg.nbc_basis())
        counts.push_back(b.size());
    json j{{"nbc_counts", counts}};
    AomotoComplex complex;
    std::vector<long> weights(l.arrangement.size(), 1);
    if (o.matrices) {
        if (!o.weights.empty())
            weights = parse_int_list(o.weights, "--weights");
        if (weights.size() != l.arrangement.size())
            throw InputError("--weights: expected " + std::to_string(l.arrangement.size()) + " entries");
        complex = os_alg.aomoto_complex(weights);
        json diffs = json::array();
        for (const auto& d : complex.diff) {
            json entries = json::array();
            for (const auto& t : d.entries)
                entries.push_back(json::array({t.row, t.col, int_json(t.value)}));
            diffs.push_back({{"rows", d.rows}, {"cols", d.cols}, {"entries", entries}});
        }
        j["weights"] = weights;
        j["bases"] = os_alg.nbc_basis();
        j["differentials"] = diffs;
    }
    emit(out, o, j, [&](std::ostream& os) {
        os << "NBC counts: " << join(counts) << '\n';
        if (!o.matrices)
            return;
        for (std::size_t q = 0; q < complex.diff.size(); ++q) {
            const auto& d = complex.diff[q];
            os << "D^" << q << ": " << d.rows << "x" << d.cols << ", " << d.entries.size() << " nonzero\n";
            for (const auto& t : d.entries)
                os << "  (" << t.row << "," << t.col << ") " << t.value.get_str() << '\n';
        }
    });
}

void cmd_local_betti(const Options& o, std::ostream& out)
{
    if (o.k == 0)
        throw InputError("--k must be positive");
    const Loaded l = load(o);
    const Resolution r = resolution_from(o, l.arrangement.size(), o.k);
    const CoverCalculator calc(l.arrangement);
    const auto it = r.asserted.find(o.k);
    const LocalBetti lb = calc.local_betti(o.k, r.search, it == r.asserted.end() ? std::map<std::size_t, std::size_t>{} : it->second);
    if (!lb.resolved())
        throw UnresolvedLocalBetti({lb}); // reported by run()
    emit(out, o, local_json(lb), [&](std::ostream& os) {
        os << "b_q(L^" << lb.k << "_1), " << method_name(lb.method) << ":\n";
        for (const auto& b : lb.intervals)
            os << "  " << interval_text(b) << '\n';
    });
}

void cmd_cover_betti(const Options& o, std::ostream& out)
{
    if (o.m == 0)
        throw InputError("--m must be positive");
    const Loaded l = load(o);
    const CoverCalculator calc(l.arrangement);
    const CoverReport rep = calc.cover_betti(o.m, resolution_from(o, l.arrangement.size(), std::nullopt));
    json exps = json::array();
    for (const auto& e : rep.charpoly_exponents)
        exps.push_back(pairs_json(e));
    json j{{"m", rep.m}, {"betti", rep.betti}, {"charpoly_exponents", exps}, {"exact", rep.exact}};
    const bool milnor = l.entry && l.entry->milnor_fiber_m == o.m;
    if (milnor)
        j["label"] = l.entry->milnor_fiber_label;
    emit(out, o, j, [&](std::ostream& os) {
        os << "b_q(X_" << rep.m << "): " << join(rep.betti) << (rep.exact ? "" : " (uses asserted values)") << '\n';
        if (milnor)
            os << "X_" << rep.m << " is the " << l.entry->milnor_fiber_label << '\n';
    });
}

void cmd_charpoly(const Options& o, std::ostream& out)
{
    if (o.m == 0)
        throw InputError("--m must be positive");
    const Loaded l = load(o);
    const CoverCalculator calc(l.arrangement);
    const Charpoly cp = calc.monodromy_charpoly(o.m, o.q, resolution_from(o, l.arrangement.size(), std::nullopt));
    json j{{"m", cp.m},
           {"q", cp.degree_q},
           {"cyclotomic_exponents", pairs_json(cp.cyclotomic_exponents)},
           {"expanded", poly_json(cp.expanded)},
           {"degree", cp.expanded.degree()},
           {"exact", cp.exact}};
    j["power_form"] = cp.power_form ? pairs_json(*cp.power_form) : json(nullptr);
    emit(out, o, j, [&](std::ostream& os) {
        os << "Delta_" << cp.degree_q << " on X_" << cp.m << ":";
        for (const auto& [k, e] : cp.cyclotomic_exponents)
            os << " Phi_" << k << "^" << e;
        os << '\n';
        if (cp.power_form) {
            os << "  =";
            for (const auto& [k, e] : *cp.power_form)
                os << " (t^" << k << " - 1)^" << e;
            os << '\n';
        }
        os << "  degree " << cp.expanded.degree() << '\n';
    });
}

void cmd_periodicity(const Options& o, std::ostream& out)
{
    const Loaded l = load(o);
    const CoverCalculator calc(l.arrangement);
    const PeriodicityReport rep = calc.periodicity(resolution_from(o, l.arrangement.size(), std::nullopt));
    json classes = json::array();
    for (const auto& c : rep.classes) {
        json polys = json::array();
        for (const auto& p : c.polynomials)
            polys.push_back(poly_json(p));
        classes.push_back({{"divisor_pattern", c.divisor_pattern},
                           {"smallest_residue", int_json(c.smallest_residue)},
                           {"residue_count", int_json(c.residue_count)},
                           {"polynomials", polys}});
    }
    json j{{"period", int_json(rep.period)}, {"classes", classes}, {"exact", rep.exact}};
    emit(out, o, j, [&](std::ostream& os) {
        os << "period N = " << rep.period.get_str() << ", " << rep.classes.size() << " residue classes\n";
        for (const auto& c : rep.classes) {
            os << "  i with {k<=n : k|i} = {";
            for (std::size_t i = 0; i < c.divisor_pattern.size(); ++i)
                os << (i ? "," : "") << c.divisor_pattern[i];
            os << "} (" << c.residue_count.get_str() << " residues, e.g. " << c.smallest_residue.get_str() << "):";
            for (std::size_t q = 0; q < c.polynomials.size(); ++q)
                os << "  p_" << q << " = " << c.polynomials[q].to_string('x');
            os << '\n';
        }
    });
}

void cmd_zeta(const Options& o, std::ostream& out)
{
    const Loaded l = load(o);
    const CoverCalculator calc(l.arrangement);
    const ZetaReport z = calc.zeta_coefficients(o.q, resolution_from(o, l.arrangement.size(), std::nullopt));
    json terms = json::array();
    for (const auto& [k, c] : z.finite_terms)
        terms.push_back(json::array({k, c}));
    json j{{"finite_terms", terms}, {"tail_beta", int_json(z.tail_beta)}};
    if (!z.exact)
        j["exact"] = false;
    emit(out, o, j, [&](std::ostream& os) {
        os << "zeta_{A," << z.degree_q << "}(s) = zeta(s) * [";
        for (std::size_t i = 0; i < z.finite_terms.size(); ++i) {
            const auto& [k, c] = z.finite_terms[i];
            os << (i ? " + " : "") << c;
            if (k > 1)
                os << "*" << k << "^-s";
        }
        if (z.tail_beta != 0)
            os << " + " << z.tail_beta.get_str() << " * sum_{k>" << calc.arrangement().size() << "} phi(k) k^-s";
        os << "]\n";
    });
}

void cmd_catalog_list(const Options& o, std::ostream& out)
{
    json arr = json::array();
    for (const auto& e : catalog())
        arr.push_back({{"key", e.key}, {"notes", e.notes}});
    emit(out, o, arr, [&](std::ostream& os) {
        for (const auto& e : catalog())
            os << e.key << "  " << e.notes << '\n';
    });
}

void cmd_catalog_show(const Options& o, std::ostream& out)
{
    const CatalogEntry* e = find_catalog_entry(o.show_key);
    if (!e)
        throw InputError("unknown catalog key \"" + o.show_key + "\"");
    out << serialize(e->key, e->arrangement);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Betti numbers, monodromy and zeta data of cyclic covers of arrangement complements", "arrcover"};
    app.require_subcommand(1);
    Options o;
    std::function<void(const Options&, std::ostream&)> action;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--catalog", o.catalog_key, "built-in arrangement key (see `catalog list`)");
        sub->add_option("--file", o.file, "arrangement JSON file");
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
    };
    auto add_resolution = [&](CLI::App* sub, const char* assert_help) {
        sub->add_option("--shift", o.shifts, "extra shift vector for the lower bound, e.g. 0,0,-1,0,0");
        sub->add_option("--assert", o.assertions, assert_help);
        sub->add_option("--exhaustive-limit", o.exhaustive_limit,
                        "search all shifts in {-1,0}^n when n is at most this");
    };
    auto command = [&](const char* name, const char* help, void (*fn)(const Options&, std::ostream&)) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->callback([&action, fn] { action = fn; });
        add_input(sub);
        return sub;
    };

    command("info", "Poincare polynomial, beta, Euler characteristic", cmd_info);
    command("lattice", "intersection lattice and dense edges of the closure", cmd_lattice);
    auto* os_cmd = command("os", "Orlik-Solomon NBC basis and Aomoto differentials", cmd_os);
    os_cmd->add_flag("--matrices", o.matrices, "print the differential matrices");
    os_cmd->add_option("--weights", o.weights, "integer weights k_H (default all ones)");

    auto* lb = command("local-betti", "bounds on b_q(L^k_1)", cmd_local_betti);
    lb->add_option("--k", o.k, "k")->required();
    add_resolution(lb, "asserted value q=v");

    auto* cb = command("cover-betti", "Betti numbers of X_m", cmd_cover_betti);
    cb->add_option("--m", o.m, "m")->required();
    add_resolution(cb, "asserted value k:q=v");

    auto* cp = command("charpoly", "monodromy characteristic polynomial on H^q(X_m)", cmd_charpoly);
    cp->add_option("--m", o.m, "m")->required();
    cp->add_option("--q", o.q, "degree")->required();
    add_resolution(cp, "asserted value k:q=v");

    auto* per = command("periodicity", "polynomial periodicity of b_q(X_m)", cmd_periodicity);
    add_resolution(per, "asserted value k:q=v");

    auto* z = command("zeta", "coefficients of the zeta function of b_q(X_m)", cmd_zeta);
    z->add_option("--q", o.q, "degree")->required();
    add_resolution(z, "asserted value k:q=v");

    CLI::App* cat = app.add_subcommand("catalog", "built-in arrangements");
    cat->require_subcommand(1);
    CLI::App* list = cat->add_subcommand("list", "list catalog keys");
    list->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
    list->callback([&] { action = cmd_catalog_list; });
    CLI::App* show = cat->add_subcommand("show", "print a catalog arrangement in file format");
    show->add_option("key", o.show_key, "catalog key")->required();
    show->callback([&] { action = cmd_catalog_show; });

    std::vector<const char*> argv{"arrcover"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        action(o, out);
        return kExitOk;
    } catch (const UnresolvedLocalBetti& e) {
        json arr = json::array();
        for (const auto& lbv : e.unresolved())
            arr.push_back(local_json(lbv));
        if (o.format == "text") {
            for (const auto& lbv : e.unresolved())
                for (const auto& b : lbv.intervals)
                    if (!b.resolved())
                        out << "unresolved: k=" << lbv.k << ' ' << interval_text(b) << '\n';
        } else {
            out << json{{"error", "unresolved"}, {"unresolved", arr}}.dump() << '\n';
        }
        err << "arrcover: " << e.what() << '\n';
        return kExitUnresolved;
    } catch (const InputError& e) {
        err << "arrcover: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "arrcover: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::domain_error& e) {
        err << "arrcover: " << e.what() << '\n';
        return kExitInputError;
    }
}

} // namespace arrcover::cli
