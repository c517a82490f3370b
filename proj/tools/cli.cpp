#include "cli.hpp"

#include "a2act/duality.hpp"
#include "a2act/moddef.hpp"
#include "a2act/pipeline.hpp"
#include "a2act/variety.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace a2act {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Inconsistent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string case_name = "sym";
    std::string format = "table";
    std::string log;
    bool strict = false;
    bool dictionary = false;
    std::string what = "all";
    std::string point;
    std::string profile;
    std::string out_file;
    std::string map = "incl";
};

// Reference numbers checked by --strict.
struct Expected {
    std::vector<std::tuple<std::string, std::size_t, std::size_t, std::size_t>> steps;  // label, distinct, linear, basis
    std::size_t nonlinear_input, free, relations, points, sq8_points, self_dual;
};

Expected expected(ActionCase c) {
    switch (c) {
        case ActionCase::Symmetric: return {{{"sq8", 496, 452, 81}, {"sq16", 95, 50, 19}}, 19, 9, 1, 256, 16, 16};
        case ActionCase::General:
            return {{{"sq8", 564, 519, 105}, {"sq8 repeat", 22, 3, 3}, {"sq16", 92, 45, 18}, {"sq16 repeat", 22, 0, 0}},
                    22, 13, 3, 1600, 100, 40};
        case ActionCase::BOnly: return {{}, 1, 5, 0, 32, 16, 8};
    }
    throw std::logic_error("case");
}

void strict_check(bool enabled, const std::string& what, std::size_t got, std::size_t want) {
    if (enabled && got != want)
        throw Inconsistent(what + ": computed " + std::to_string(got) + ", expected " + std::to_string(want));
}

ActionCase get_case(const Options& o) {
    try {
        return parse_case(o.case_name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

VarietyPoint get_point(const Options& o, const VarietyDesc& d) {
    if (o.point.empty()) throw UsageError("--point is required");
    try {
        return parse_point(o.point, d.vars.size());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void require_on(const VarietyDesc& d, const VarietyPoint& p) {
    if (!on_variety(d, p)) throw UsageError(format_point(p) + " is not a point of " + d.label);
}

json names_json(const VarietyDesc& d) { return d.names(); }

json point_json(const VarietyPoint& p) {
    json j = json::array();
    for (auto b : p.bits) j.push_back(static_cast<int>(b));
    return j;
}

void print_points(std::ostream& out, const Options& o, const VarietyDesc& d, const std::vector<VarietyPoint>& pts) {
    if (o.format == "json") {
        json j{{"variety", d.label}, {"coordinates", names_json(d)}, {"count", pts.size()}, {"points", json::array()}};
        for (const auto& p : pts) j["points"].push_back(point_json(p));
        out << j.dump(2) << "\n";
        return;
    }
    auto names = d.names();
    out << "       " << format_table_header(names) << "\n";
    for (std::size_t i = 0; i < pts.size(); ++i)
        out << std::setw(4) << i + 1 << " : " << format_table_row(pts[i], names) << "\n";
}

json steps_json(const ReductionResult& r) {
    json j = json::array();
    for (const auto& s : r.log)
        j.push_back({{"step", s.label},
                     {"raw", s.raw},
                     {"distinct", s.distinct},
                     {"linear", s.linear},
                     {"basis", s.basis},
                     {"survivors", s.survivors}});
    return j;
}

int cmd_pipeline(const Options& o, std::ostream& out) {
    const ActionCase c = get_case(o);
    const auto& r = reduction(c);
    const Expected e = expected(c);
    for (const auto& [label, distinct, linear, basis] : e.steps) {
        auto it = std::find_if(r.log.begin(), r.log.end(), [&](const StepCounts& s) { return s.label == label; });
        if (it == r.log.end()) {
            if (o.strict) throw Inconsistent("missing step " + label);
            continue;
        }
        strict_check(o.strict, label + " distinct", it->distinct, distinct);
        strict_check(o.strict, label + " linear", it->linear, linear);
        strict_check(o.strict, label + " basis", it->basis, basis);
    }
    strict_check(o.strict, "nonlinear relations", r.nonlinear_input.size(), e.nonlinear_input);
    strict_check(o.strict, "free variables", r.free.size(), e.free);
    strict_check(o.strict, "residual relations", r.relations.size(), e.relations);

    if (o.log == "json") {
        out << json{{"case", case_name(c)}, {"steps", steps_json(r)}}.dump(2) << "\n";
        return 0;
    }
    if (o.format == "json") {
        json j{{"case", case_name(c)}, {"steps", steps_json(r)}, {"free", json::array()}, {"relations", json::array()},
               {"eliminations", json::array()}};
        for (Var v : r.free) j["free"].push_back(r.table.name(v));
        for (const auto& p : r.relations) j["relations"].push_back(format(p, r.table));
        for (const auto& el : r.eliminations)
            j["eliminations"].push_back({{"variable", r.table.name(el.var)}, {"relation", el.relation}});
        if (o.dictionary) {
            j["dictionary"] = json::array();
            for (std::size_t k = 0; k < r.table.size(); ++k) {
                Var v = static_cast<Var>(r.table.size() - 1 - k);
                j["dictionary"].push_back(
                    {{"index", k + 1}, {"name", r.table.name(v)}, {"value", format(r.dictionary[v], r.table)}});
            }
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "case " << case_name(c) << "\n";
    out << std::left << std::setw(13) << "step" << std::right << std::setw(7) << "raw" << std::setw(10) << "distinct"
        << std::setw(8) << "linear" << std::setw(7) << "basis" << std::setw(11) << "survivors" << "\n";
    for (const auto& s : r.log)
        out << std::left << std::setw(13) << s.label << std::right << std::setw(7) << s.raw << std::setw(10)
            << s.distinct << std::setw(8) << s.linear << std::setw(7) << s.basis << std::setw(11) << s.survivors << "\n";
    for (const auto& el : r.eliminations)
        out << "eliminate " << r.table.name(el.var) << " using r" << el.relation << "\n";
    out << "free:";
    for (Var v : r.free) out << " " << r.table.name(v);
    out << "\nrelations: " << r.relations.size() << "\n";
    for (const auto& p : r.relations) out << "  " << format(p, r.table) << "\n";
    if (o.dictionary) {
        out << "[\n";
        for (std::size_t k = 0; k < r.table.size(); ++k) {
            Var v = static_cast<Var>(r.table.size() - 1 - k);
            out << "    <" << k + 1 << ", " << r.table.name(v) << ", " << format(r.dictionary[v], r.table) << ">"
                << (k + 1 < r.table.size() ? "," : "") << "\n";
        }
        out << "]\n";
    }
    return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const ActionCase c = get_case(o);
    VarietyDesc d;
    if (o.what == "all") d = variety(c);
    else if (o.what == "sq8") d = sq8_subvariety(c);
    else if (o.what == "sq16") d = sq16_subvariety(c);
    else throw UsageError("--what must be all, sq8 or sq16");
    auto pts = enumerate_points(d);
    if (o.what == "all") strict_check(o.strict, "points", pts.size(), expected(c).points);
    if (o.what == "sq8") strict_check(o.strict, "Sq8 points", pts.size(), expected(c).sq8_points);
    print_points(out, o, d, pts);
    return 0;
}

int cmd_maps(const Options& o, std::ostream& out) {
    CoordinateMap m;
    if (o.map == "incl") m = map_sym_to_gen();
    else if (o.map == "q") m = map_q();
    else if (o.map == "s") m = map_s();
    else throw UsageError("--map must be incl, q or s");
    if (!o.point.empty()) {
        auto p = get_point(o, m.source);
        require_on(m.source, p);
        VarietyPoint img = m.name == "incl" ? m.apply(p) : map_to_b(m, p);
        if (o.format == "json") out << json{{"map", m.name}, {"point", point_json(p)}, {"image", point_json(img)}}.dump(2) << "\n";
        else out << format_point(img) << "\n";
        return 0;
    }
    if (o.format == "json") {
        json j{{"map", m.name}, {"source", m.source.label}, {"target", m.target.label}, {"images", json::object()}};
        for (std::size_t k = 0; k < m.images.size(); ++k)
            j["images"][m.target.table.name(m.target.vars[k])] = format(m.images[k], m.source.table);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << m.name << ": " << m.source.label << " -> " << m.target.label << "\n";
    for (std::size_t k = 0; k < m.images.size(); ++k)
        out << "  " << m.target.table.name(m.target.vars[k]) << " <- " << format(m.images[k], m.source.table) << "\n";
    return 0;
}

int cmd_self_dual(const Options& o, std::ostream& out) {
    const ActionCase c = get_case(o);
    auto pts = self_dual_points(c);
    strict_check(o.strict, "self-dual points", pts.size(), expected(c).self_dual);
    print_points(out, o, duality(c).variety, pts);
    return 0;
}

int cmd_dual_point(const Options& o, std::ostream& out) {
    const ActionCase c = get_case(o);
    const auto& d = duality(c);
    auto p = get_point(o, d.variety);
    require_on(d.variety, p);
    auto q = dual_point(d, p);
    if (o.format == "json") out << json{{"case", case_name(c)}, {"point", point_json(p)}, {"dual", point_json(q)}}.dump(2) << "\n";
    else out << format_point(q) << "\n";
    return 0;
}

int cmd_lift(const Options& o, std::ostream& out) {
    const auto b = variety(ActionCase::BOnly);
    auto p = get_point(o, b);
    require_on(b, p);
    auto lifts = lift_check(p);
    std::set<VarietyPoint> sq8;
    const auto sym = variety(ActionCase::Symmetric);
    const auto sub = sq8_subvariety(ActionCase::Symmetric);
    for (const auto& l : lifts) {
        VarietyPoint s;
        for (Var v : sub.vars) s.bits.push_back(l[sym.index_of(v)]);
        sq8.insert(s);
    }
    if (o.format == "json") {
        json j{{"point", point_json(p)}, {"lifts", lifts.size()}, {"sq8_lifts", json::array()}};
        for (const auto& s : sq8) j["sq8_lifts"].push_back(point_json(s));
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "symmetric lifts: " << lifts.size() << "\n";
    out << "Sq8 lifts " << format_table_header(sub.names()) << ": " << sq8.size() << "\n";
    for (const auto& s : sq8) out << "  " << format_table_row(s, sub.names()) << "\n";
    return 0;
}

int cmd_hopf(const Options& o, std::ostream& out) {
    if (o.profile.empty()) throw UsageError("--profile is required");
    std::vector<int> prof;
    std::stringstream ss(o.profile);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            prof.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("malformed profile '" + o.profile + "'");
        }
    }
    HopfReport r;
    try {
        r = hopf_identity_check(prof);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (o.format == "json") {
        out << json{{"profile", prof}, {"holds", r.holds}, {"left", r.left_holds}, {"right", r.right_holds},
                    {"difference", r.difference}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << (r.holds ? "true" : "false") << "\n";
    if (!r.holds) out << "difference: " << r.difference << "\n";
    return 0;
}

int cmd_moddef(const Options& o, std::ostream& out) {
    const ActionCase c = get_case(o);
    const auto d = variety(c);
    auto p = get_point(o, d);
    require_on(d, p);
    std::string text = write_moddef(export_moddef(c, p));
    if (o.out_file.empty()) {
        out << text;
        return 0;
    }
    std::ofstream f(o.out_file, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o.out_file);
    f << text;
    return 0;
}

int cmd_literature(const Options& o, std::ostream& out) {
    auto r = literature_actions();
    if (!r.consistent && o.strict) throw Inconsistent("q o incl of the symmetric zero point is not the B zero point");
    if (o.format == "json") {
        out << json{{"bbbcx", point_json(r.bbbcx)},   {"bbbcx_dual", point_json(r.bbbcx_dual)},
                    {"be", point_json(r.be)},         {"be_dual", point_json(r.be_dual)},
                    {"q_incl_bbbcx", point_json(r.q_of_bbbcx)}, {"consistent", r.consistent}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "symmetric action (all coordinates 0): " << format_point(r.bbbcx) << "\n";
    out << "  dual: " << format_point(r.bbbcx_dual) << "\n";
    out << "B(2) action (all coordinates 0): " << format_point(r.be) << "\n";
    out << "  dual: " << format_point(r.be_dual) << "\n";
    out << "q o incl of the symmetric action: " << format_point(r.q_of_bbbcx) << (r.consistent ? " (matches)" : " (MISMATCH)")
        << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Steenrod module structures on A(2) and B(2)", "a2act"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
    app.add_flag("--strict", o.strict, "Fail when a count differs from the reference value");

    auto add_case = [&](CLI::App* sub) {
        sub->add_option("--case", o.case_name, "sym, gen or b")->check(CLI::IsMember({"sym", "gen", "b"}));
    };
    auto fmt = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
        sub->add_flag("--strict", o.strict, "Fail when a count differs from the reference value");
    };

    auto* pipeline = app.add_subcommand("pipeline", "Run the reduction and print step counts and results");
    add_case(pipeline);
    fmt(pipeline);
    pipeline->add_option("--log", o.log, "Emit only the step log")->check(CLI::IsMember({"json"}));
    pipeline->add_flag("--dictionary", o.dictionary, "Also print every variable in terms of the free ones");

    auto* enumerate = app.add_subcommand("enumerate", "List the F2 points of a variety");
    add_case(enumerate);
    fmt(enumerate);
    enumerate->add_option("--what", o.what, "all, sq8 or sq16")->check(CLI::IsMember({"all", "sq8", "sq16"}));

    auto* maps = app.add_subcommand("maps", "Show or apply incl, q or s");
    fmt(maps);
    maps->add_option("--map", o.map, "incl, q or s")->check(CLI::IsMember({"incl", "q", "s"}));
    maps->add_option("--point", o.point, "Source point, comma separated");

    auto* self_dual = app.add_subcommand("self-dual", "List the self-dual points");
    add_case(self_dual);
    fmt(self_dual);

    auto* dual = app.add_subcommand("dual-point", "Apply the duality map to a point");
    add_case(dual);
    fmt(dual);
    dual->add_option("--point", o.point, "Point, comma separated")->required();

    auto* lift = app.add_subcommand("lift", "Symmetric lifts of a B(2) point");
    fmt(lift);
    lift->add_option("--point", o.point, "B(2) point a1,a2,a13,a23,c1")->required();

    auto* hopf = app.add_subcommand("hopf-check", "Check the coproduct identity for a profile");
    fmt(hopf);
    hopf->add_option("--profile", o.profile, "Comma separated, e.g. 3,2,1")->required();

    auto* moddef = app.add_subcommand("moddef", "Write a module definition file");
    add_case(moddef);
    moddef->add_option("--point", o.point, "Point, comma separated")->required();
    moddef->add_option("--out", o.out_file, "Output file (default stdout)");

    auto* literature = app.add_subcommand("literature", "The actions used in the literature and their duals");
    fmt(literature);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*pipeline) return cmd_pipeline(o, out);
        if (*enumerate) return cmd_enumerate(o, out);
        if (*maps) return cmd_maps(o, out);
        if (*self_dual) return cmd_self_dual(o, out);
        if (*dual) return cmd_dual_point(o, out);
        if (*lift) return cmd_lift(o, out);
        if (*hopf) return cmd_hopf(o, out);
        if (*moddef) return cmd_moddef(o, out);
        if (*literature) return cmd_literature(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace a2act
