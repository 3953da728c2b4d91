// Command-line front end: families, descent, branch, gggr, orbit, check.

#include "ugggr/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ugggr;

namespace {

const char* kWatermark =
    "paper mode: legacy counting (N_1 = q-1, N_2 = q^2-1, ordered fresh classes, "
    "2-transverse rule on every class); not consistent with the class equation";

struct Options {
    int n = -1;
    std::string orbit, partition, datum;
    std::string mode = "canonical";
    std::string format = "text";
    std::string out;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string read_datum_text(const std::string& arg) {
    if (arg.empty()) throw UsageError("--datum is required");
    if (arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw UsageError("--datum: cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LusztigDatum load_datum(const std::string& arg) {
    try {
        return datum_from_json(json::parse(read_datum_text(arg)));
    } catch (const json::exception& e) {
        throw UsageError(std::string("--datum: ") + e.what());
    }
}

Partition flag_partition(const std::string& flag, const std::string& value) {
    if (value.empty()) throw UsageError(flag + " is required");
    try {
        return parse_partition(value);
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

void header(std::ostream& os, const Options& o, const std::string& title) {
    if (o.format == "latex") {
        os << "% " << title << "\n";
        if (o.mode == "paper") os << "% " << kWatermark << "\n";
    } else {
        os << "# " << title << "\n";
        if (o.mode == "paper") os << "# " << kWatermark << "\n";
    }
}

json with_watermark(json j, const Options& o) {
    if (o.mode == "paper") j["watermark"] = kWatermark;
    return j;
}

std::string shape_text(const FamilyShape& s) {
    std::string r;
    for (size_t i = 0; i < s.slots.size(); ++i)
        r += (i ? " " : "") + std::to_string(s.slots[i].size) + ":" + to_string(s.slots[i].partition);
    return r;
}

int run_families(const Options& o, std::ostream& os) {
    if (o.n < 0) throw UsageError("--n is required");
    Mode mode = parse_mode(o.mode);
    auto shapes = enumerate_families(o.n);
    std::vector<QPoly> card;
    for (const auto& s : shapes) card.push_back(family_cardinality(s, mode));
    if (o.format == "json") {
        json arr = json::array();
        for (size_t i = 0; i < shapes.size(); ++i)
            arr.push_back({{"name", display_name(shapes[i])},
                           {"shape", to_json(shapes[i])},
                           {"cardinality", to_json(card[i])},
                           {"dimension", to_json(dimension(shapes[i]))},
                           {"descent_index", to_json(descent_index(representative(shapes[i])))}});
        os << with_watermark({{"n", o.n}, {"mode", o.mode}, {"families", arr}}, o).dump(2) << "\n";
        return 0;
    }
    header(os, o, "families of U_" + std::to_string(o.n) + ", mode=" + o.mode + ", " + std::to_string(shapes.size()) +
                      " shapes");
    if (o.format == "latex") {
        os << "\\begin{tabular}{llll}\n$X$ & shape & $|R(X)|$ & $\\dim$ \\\\\n\\hline\n";
        for (size_t i = 0; i < shapes.size(); ++i)
            os << display_name(shapes[i]) << " & " << shape_text(shapes[i]) << " & $" << render(card[i], Render::latex)
               << "$ & $" << render(dimension(shapes[i]), Render::latex) << "$ \\\\\n";
        os << "\\end{tabular}\n";
        return 0;
    }
    for (size_t i = 0; i < shapes.size(); ++i)
        os << display_name(shapes[i]) << "  [" << shape_text(shapes[i])
           << "]  card = " << render(card[i], Render::expanded)
           << "  dim = " << render(dimension(shapes[i]), Render::expanded)
           << "  descent = " << to_json_string(descent_index(representative(shapes[i]))) << "\n";
    return 0;
}

int run_descent(const Options& o, std::ostream& os) {
    LusztigDatum d = load_datum(o.datum);
    Partition ell = descent_index(d);
    if (o.format == "json") {
        json j = {{"descent_index", to_json(ell)}};
        if (d.n > 0) j["first_descent"] = to_json(first_descent(d));
        os << j.dump(2) << "\n";
        return 0;
    }
    if (o.format == "latex") {
        os << "$\\ell(\\pi) = " << to_string(ell) << "$\n";
        return 0;
    }
    os << to_json_string(ell) << "\n";
    if (d.n > 0) os << "first descent: " << to_json(first_descent(d)).dump() << "\n";
    return 0;
}

int run_branch(const Options& o, std::ostream& os) {
    LusztigDatum d = load_datum(o.datum);
    Partition hook = flag_partition("--orbit", o.orbit);
    if (hook.size() != d.n || !is_hook(hook))
        throw UsageError("--orbit must be a hook partition (l,1,...,1) of " + std::to_string(d.n));
    int l = hook.empty() ? 0 : hook[0];
    Mode mode = parse_mode(o.mode);
    auto terms = branch(d, l, mode);
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& t : terms) arr.push_back(to_json(t));
        os << with_watermark({{"hook", l}, {"mode", o.mode}, {"terms", arr}}, o).dump(2) << "\n";
        return 0;
    }
    header(os, o, "branching of U_" + std::to_string(d.n) + " datum along hook " + to_string(hook) + ", mode=" + o.mode);
    bool latex = o.format == "latex";
    for (const auto& t : terms) {
        os << (latex ? "$" : "") << render(t.coeff, latex ? Render::latex : Render::expanded) << (latex ? "$" : "")
           << " : " << to_json(t.datum).dump();
        for (const auto& s : t.datum.slots) {
            if (s.label.origin != Origin::fresh || s.label.exclusions.empty()) continue;
            os << "  " << s.label.id << " not in {";
            for (size_t i = 0; i < s.label.exclusions.size(); ++i) os << (i ? "," : "") << s.label.exclusions[i];
            os << "}";
        }
        os << "\n";
    }
    if (terms.empty()) os << "0\n";
    return 0;
}

int run_gggr(const Options& o, std::ostream& os) {
    if (o.n < 0) throw UsageError("--n is required");
    Partition lam = flag_partition("--orbit", o.orbit);
    if (lam.size() != o.n) throw UsageError("--orbit must be a partition of " + std::to_string(o.n));
    auto table = gggr_table(o.n, lam, parse_mode(o.mode));
    if (o.format == "json") {
        os << with_watermark(to_json(table), o).dump(2) << "\n";
        return 0;
    }
    header(os, o, "GGGR decomposition of U_" + std::to_string(o.n) + ", orbit " + to_string(lam) + ", mode=" + o.mode);
    if (o.format == "latex") {
        os << "\\begin{tabular}{lcl}\n";
        for (const auto& e : table.entries)
            os << "$f_{" << to_string(lam) << "}(" << display_name(e.shape) << ")$ & $=$ & $"
               << render(e.f, Render::latex) << "$ \\\\\n";
        os << "\\end{tabular}\n";
        return 0;
    }
    for (const auto& e : table.entries)
        os << "f(" << display_name(e.shape) << ") = " << render(e.f, Render::expanded) << "\n";
    return 0;
}

int run_orbit(const Options& o, std::ostream& os) {
    if (!o.partition.empty()) {
        if (o.n < 0) throw UsageError("--n is required with --partition (target group U_n)");
        Partition src = flag_partition("--partition", o.partition);
        Partition dst = moment_descent(src, o.n);
        if (o.format == "json")
            os << json{{"source", to_json(src)}, {"n", o.n}, {"descent", to_json(dst)}}.dump(2) << "\n";
        else
            os << "moment descent of " << to_string(src) << " to U_" << o.n << ": " << to_string(dst) << "\n";
        return 0;
    }
    Partition lam = flag_partition("--orbit", o.orbit);
    int n = o.n < 0 ? lam.size() : o.n;
    NilpotentOrbit orb = make_orbit(n, lam);
    auto g = grading_dims(orb);
    QPoly dim = gggr_dimension(orb);
    std::vector<Partition> below;
    for (const auto& mu : partitions_of(n))
        if (leq_parabolic(mu, lam)) below.push_back(mu);
    if (o.format == "json") {
        json gj = json::object();
        for (auto [k, v] : g) gj[std::to_string(k)] = v;
        json bj = json::array();
        for (const auto& mu : below) bj.push_back(to_json(mu));
        os << json{{"n", n},
                   {"partition", to_json(lam)},
                   {"weights", weights(lam)},
                   {"grading_dims", gj},
                   {"gggr_dimension", to_json(dim)},
                   {"closure", bj}}
                  .dump(2)
           << "\n";
        return 0;
    }
    bool latex = o.format == "latex";
    os << "orbit " << to_string(lam) << " of U_" << n << "\n";
    for (auto [k, v] : g) os << "dim g_" << k << " = " << v << "\n";
    os << "dim GGGR = " << (latex ? "$" : "") << render(dim, latex ? Render::latex : Render::expanded)
       << (latex ? "$" : "") << "\n";
    os << "closure:";
    for (const auto& mu : below) os << " " << to_string(mu);
    os << "\n";
    return 0;
}

int run_check(const Options& o, std::ostream& os) {
    if (o.n < 1) throw UsageError("--n must be at least 1");
    auto rep = consistency_check(o.n, parse_mode(o.mode));
    if (o.format == "json") {
        os << with_watermark(to_json(rep), o).dump(2) << "\n";
        return rep.pass() ? 0 : 2;
    }
    header(os, o, "consistency check, U_" + std::to_string(o.n) + ", mode=" + o.mode);
    int failures = 0;
    auto line = [&](const IdentityResult& r, const std::string& what) {
        failures += !r.pass();
        os << (r.pass() ? "PASS " : "FAIL ") << what;
        if (!r.error.empty())
            os << ": " << r.error;
        else if (!r.pass())
            os << ": residual = " << render(r.residual(), Render::expanded);
        os << "\n";
    };
    for (const auto& r : rep.identities) line(r, "orbit " + to_string(r.lambda));
    line(rep.sum_of_squares, "sum of squares");
    if (failures)
        os << "IDENTITY FAILURES: " << failures << "\n";
    else
        os << "ALL IDENTITIES PASS\n";
    return failures ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unitary group GGGR decomposition engine"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> modes{"canonical", "paper"}, formats{"text", "json", "latex"};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--mode", o.mode, "canonical | paper")->check(CLI::IsMember(modes));
        sub->add_option("--format", o.format, "text | json | latex")->check(CLI::IsMember(formats));
        sub->add_option("--out", o.out, "write output to FILE");
    };
    auto* fam = app.add_subcommand("families", "list family shapes of U_n");
    fam->add_option("--n", o.n, "rank")->required();
    auto* des = app.add_subcommand("descent", "descent index and first descent of a datum");
    des->add_option("--datum", o.datum, "datum JSON or @file")->required();
    auto* br = app.add_subcommand("branch", "branching along a hook orbit");
    br->add_option("--datum", o.datum, "datum JSON or @file")->required();
    br->add_option("--orbit", o.orbit, "hook partition l,1,...,1")->required();
    auto* gg = app.add_subcommand("gggr", "GGGR decomposition table");
    gg->add_option("--n", o.n, "rank")->required();
    gg->add_option("--orbit", o.orbit, "partition of n")->required();
    auto* orb = app.add_subcommand("orbit", "nilpotent orbit data or moment-map descent");
    orb->add_option("--n", o.n, "rank");
    auto* orb_opt = orb->add_option("--orbit", o.orbit, "partition of n");
    auto* par_opt = orb->add_option("--partition", o.partition, "source partition for moment-map descent to U_n");
    orb_opt->excludes(par_opt);
    auto* chk = app.add_subcommand("check", "verify the consistency identities");
    chk->add_option("--n", o.n, "rank")->required();
    for (auto* sub : {fam, des, br, gg, orb, chk}) common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    std::ostringstream os;
    int code = 0;
    try {
        if (*fam) code = run_families(o, os);
        if (*des) code = run_descent(o, os);
        if (*br) code = run_branch(o, os);
        if (*gg) code = run_gggr(o, os);
        if (*orb) {
            if (o.orbit.empty() && o.partition.empty()) throw UsageError("orbit needs --orbit or --partition");
            code = run_orbit(o, os);
        }
        if (*chk) code = run_check(o, os);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }

    if (o.out.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) {
            std::cerr << "usage error: --out: cannot write " << o.out << "\n";
            return 1;
        }
        f << os.str();
    }
    return code;
}
