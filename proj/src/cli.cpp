#include "genusbound/cli.hpp"

#include "genusbound/adjunction.hpp"
#include "genusbound/closedform.hpp"
#include "genusbound/json_io.hpp"
#include "genusbound/sphere.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace genusbound {

namespace {

using nlohmann::json;

struct Options {
    std::string algebra_path;
    std::string class_text;
    Int grid = -1;
    Int bound = -1;
    std::string format = "text";
    bool trace = false;
    bool basis = false;
};

Int max_grid_cap() {
    if (const char* env = std::getenv("GENUSBOUND_MAX_GRID")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw InvalidArgumentError("GENUSBOUND_MAX_GRID is not an integer");
        }
    }
    return 12;
}

AlgebraDescriptor load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgumentError("cannot open algebra file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InvalidArgumentError("algebra file is not valid JSON: " + std::string(e.what()));
    }
    return algebra_from_json(j);
}

std::string basis_description(const AlgebraDescriptor& alg) {
    std::ostringstream os;
    os << "form " << to_string(alg.form.tag) << ", rank " << alg.form.rank
       << ", basis order: ";
    switch (alg.form.tag.kind) {
        case FormKind::Odd: {
            os << "H";
            for (Int i = 1; i < alg.form.rank; ++i) os << ", E" << i;
            os << "  (H.H = 1, Ei.Ei = -1)";
            break;
        }
        case FormKind::Hyperbolic:
            os << "F, B  (F.F = B.B = 0, F.B = 1)";
            break;
        case FormKind::Even:
            os << "F, B, then " << 8 * alg.form.tag.param
               << " coordinates of the -E8 blocks  (F.F = B.B = 0, F.B = 1)";
            break;
        case FormKind::Vform:
            os << "F, B  (F.F = 0, F.B = B.B = 1)";
            break;
    }
    if (alg.im_t_generator) os << "; Im T generated by F = " << to_string(alg.f());
    return os.str();
}

std::string sphere_text(const SphereVerdict& v) {
    switch (v.status) {
        case SphereVerdict::Status::AdmissiblePattern:
            return "admissible(" + v.pattern + ")";
        case SphereVerdict::Status::Obstructed:
            return "obstructed(" + v.reason + ")";
        case SphereVerdict::Status::Unknown:
            return "unknown";
    }
    return "?";
}

// ------------------------------------------------------------------ rows ---

struct TableRow {
    Vec klass;
    Vec reduced;
    Int norm_value = 0;
    Int h = 0;
    std::string h_kind;
    std::string sign;
    std::string sphere;
};

json row_to_json(const TableRow& r) {
    return {{"class", vec_to_json(r.klass)},   {"reduced", vec_to_json(r.reduced)},
            {"norm", r.norm_value},            {"h", r.h},
            {"h_kind", r.h_kind},              {"sign", r.sign},
            {"sphere", r.sphere}};
}

std::vector<std::string> row_cells(const TableRow& r) {
    return {to_string(r.klass), to_string(r.reduced), std::to_string(r.norm_value),
            std::to_string(r.h), r.h_kind,            r.sign,
            r.sphere};
}

const std::vector<std::string>& row_headers() {
    static const std::vector<std::string> h = {"class", "reduced", "norm", "h",
                                               "h_kind", "sign",   "sphere"};
    return h;
}

void emit_rows_csv(const std::vector<TableRow>& rows, std::ostream& out) {
    const auto& hdr = row_headers();
    for (std::size_t i = 0; i < hdr.size(); ++i) out << (i ? "," : "") << hdr[i];
    out << "\n";
    for (const auto& r : rows) {
        auto cells = row_cells(r);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            std::string c = cells[i];
            if (c.find(',') != std::string::npos) c = "\"" + c + "\"";
            out << (i ? "," : "") << c;
        }
        out << "\n";
    }
}

void emit_rows_markdown(const std::vector<TableRow>& rows, std::ostream& out) {
    const auto& hdr = row_headers();
    out << "|";
    for (const auto& h : hdr) out << " " << h << " |";
    out << "\n|";
    for (std::size_t i = 0; i < hdr.size(); ++i) out << " --- |";
    out << "\n";
    for (const auto& r : rows) {
        out << "|";
        for (const auto& c : row_cells(r)) out << " " << c << " |";
        out << "\n";
    }
}

void emit_rows_text(const std::vector<TableRow>& rows, std::ostream& out) {
    const auto& hdr = row_headers();
    std::vector<std::size_t> width(hdr.size());
    for (std::size_t i = 0; i < hdr.size(); ++i) width[i] = hdr[i].size();
    for (const auto& r : rows) {
        auto cells = row_cells(r);
        for (std::size_t i = 0; i < cells.size(); ++i)
            width[i] = std::max(width[i], cells[i].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            out << std::left << std::setw(static_cast<int>(width[i]) + 2) << cells[i];
        out << "\n";
    };
    line(hdr);
    for (const auto& r : rows) line(row_cells(r));
}

// ----------------------------------------------------------- enumeration ---

/// Calls fn on every vector with coefficients in [-g, g], lexicographically.
template <typename Fn>
void for_each_in_box(Int rank, Int g, Fn&& fn) {
    Vec v = Vec::Constant(rank, -g);
    while (true) {
        fn(v);
        Int k = rank - 1;
        while (k >= 0 && v[k] == g) {
            v[k] = -g;
            --k;
        }
        if (k < 0) return;
        ++v[k];
    }
}

void check_grid(const Options& opt, const AlgebraDescriptor& alg, std::ostream& err) {
    if (opt.grid < 0) throw InvalidArgumentError("missing or negative --grid");
    Int cap = max_grid_cap();
    if (opt.grid > cap)
        throw InvalidArgumentError("--grid " + std::to_string(opt.grid) +
                                   " exceeds the cap " + std::to_string(cap) +
                                   " (set GENUSBOUND_MAX_GRID to raise it)");
    if (opt.grid > 12)
        err << "warning: grid " << opt.grid << " may take a long time\n";
    double points = std::pow(2.0 * static_cast<double>(opt.grid) + 1.0,
                             static_cast<double>(alg.form.rank));
    if (points > 5e7)
        err << "warning: enumerating about " << std::scientific << std::setprecision(1)
            << points << " classes on a rank-" << alg.form.rank << " form\n"
            << std::defaultfloat;
}

// --------------------------------------------------------------- compute ---

int cmd_compute(const Options& opt, const AlgebraDescriptor& alg, std::ostream& out) {
    Vec a = parse_class_list(opt.class_text);
    if (a.size() != alg.form.rank)
        throw InvalidArgumentError("class has " + std::to_string(a.size()) +
                                   " coefficients but the form has rank " +
                                   std::to_string(alg.form.rank));
    Int sq = norm(alg.form, a);
    if (sq < 0) throw PreconditionError("A.A = " + std::to_string(sq) + " < 0");

    CaseTag tag = classify_case(alg);
    json rep;
    rep["class"] = vec_to_json(a);
    rep["norm"] = sq;
    rep["case"] = to_string(tag);

    Int h = 0;
    std::string h_kind;
    switch (tag) {
        case CaseTag::Case1:
        case CaseTag::Case2:
        case CaseTag::Case3:
        case CaseTag::Case4:
        case CaseTag::Case5: {
            h = h_closed(alg, a);
            h_kind = "closed-form";
            rep["reduced"] =
                vec_to_json(tag == CaseTag::Case2 ? a : reduce(alg, a).output);
            rep["c0"] = vec_to_json(c_zero(alg));
            rep["sign"] = to_string(sign_class(alg, a));
            break;
        }
        case CaseTag::Extended42_1:
        case CaseTag::Extended42_2: {
            h = h_lower_bound(alg, a);
            h_kind = "lower-bound";
            rep["reduced"] = vec_to_json(reduce(alg, a).output);
            rep["c0"] = vec_to_json(c_zero(alg));
            break;
        }
        case CaseTag::Unsupported: {
            Int bound = opt.bound > 0 ? opt.bound : default_bound(a);
            auto w = h_bruteforce(alg, a, bound);
            if (!w)
                throw PreconditionError("no adjunction class within bound " +
                                        std::to_string(bound));
            h = w->value;
            h_kind = "oracle";
            rep["witness"] = vec_to_json(w->witness);
            rep["bound"] = bound;
            break;
        }
    }
    rep["h"] = h;
    rep["h_kind"] = h_kind;

    if (opt.format == "json") {
        out << rep.dump(2) << "\n";
    } else {
        out << "class:   " << to_string(a) << "  (norm " << sq << ")\n";
        out << "case:    " << to_string(tag) << "\n";
        if (rep.contains("reduced")) out << "reduced: " << rep["reduced"].dump() << "\n";
        if (rep.contains("c0")) out << "c0:      " << rep["c0"].dump() << "\n";
        out << "h:       " << h << "  [" << h_kind << "]\n";
        if (rep.contains("witness"))
            out << "witness: " << rep["witness"].dump() << "  (bound " << rep["bound"]
                << ")\n";
    }
    return 0;
}

// ---------------------------------------------------------------- reduce ---

int cmd_reduce(const Options& opt, const AlgebraDescriptor& alg, std::ostream& out) {
    Vec a = parse_class_list(opt.class_text);
    if (a.size() != alg.form.rank)
        throw InvalidArgumentError("class length does not match the form rank");
    ReductionTrace tr = reduce(alg, a);
    if (opt.format == "json" || opt.trace) {
        json j = opt.trace ? trace_to_json(tr)
                           : json{{"input", vec_to_json(tr.input)},
                                  {"output", vec_to_json(tr.output)},
                                  {"move_count", tr.moves.size()}};
        out << j.dump(2) << "\n";
    } else {
        out << "input:  " << to_string(tr.input) << "\n";
        out << "output: " << to_string(tr.output) << "\n";
        out << "moves:  " << tr.moves.size() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- sphere ---

int cmd_sphere(const Options& opt, const AlgebraDescriptor& alg, std::ostream& out) {
    Vec a = parse_class_list(opt.class_text);
    if (a.size() != alg.form.rank)
        throw InvalidArgumentError("class length does not match the form rank");
    SphereVerdict v = sphere_check(alg, a);
    if (opt.format == "json") {
        json j = {{"class", vec_to_json(a)},
                  {"status", to_string(v.status)},
                  {"reduced", vec_to_json(v.reduced)}};
        if (!v.pattern.empty()) j["pattern"] = v.pattern;
        if (!v.reason.empty()) j["reason"] = v.reason;
        if (v.h) {
            j["h"] = *v.h;
            j["h_is_lower_bound"] = v.h_is_lower_bound;
        }
        if (!v.note.empty()) j["note"] = v.note;
        out << j.dump(2) << "\n";
    } else {
        out << "class:   " << to_string(a) << "\n";
        out << "verdict: " << sphere_text(v) << "\n";
        out << "reduced: " << to_string(v.reduced) << "\n";
        if (v.h) out << "h:       " << *v.h << (v.h_is_lower_bound ? "  [lower bound]" : "")
                     << "\n";
        if (!v.note.empty()) out << "note:    " << v.note << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- table ---

int cmd_table(const Options& opt, const AlgebraDescriptor& alg, std::ostream& out,
              std::ostream& err) {
    check_grid(opt, alg, err);
    CaseTag tag = classify_case(alg);
    if (tag == CaseTag::Unsupported)
        throw UnsupportedCaseError("table: algebra outside the supported case list");

    std::vector<TableRow> rows;
    for_each_in_box(alg.form.rank, opt.grid, [&](const Vec& a) {
        Int sq = norm(alg.form, a);
        if (sq < 0) return;
        if (!is_reduced(alg, a)) return;  // one row per orbit, keyed by its reduced class
        TableRow r;
        r.klass = a;
        r.reduced = a;
        r.norm_value = sq;
        bool extended = tag == CaseTag::Extended42_1 || tag == CaseTag::Extended42_2;
        if (extended) {
            r.h = h_lower_bound(alg, a);
            r.h_kind = "lower-bound";
            r.sign = "-";
        } else {
            r.h = h_closed(alg, a);
            r.h_kind = "closed-form";
            r.sign = to_string(sign_class(alg, a));
        }
        r.sphere = is_zero(a) ? "-" : sphere_text(sphere_check(alg, a));
        rows.push_back(std::move(r));
    });

    if (opt.format == "json") {
        json j = {{"algebra", algebra_to_json(alg)}, {"grid", opt.grid}};
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(row_to_json(r));
        j["rows"] = std::move(arr);
        out << j.dump(2) << "\n";
    } else if (opt.format == "csv") {
        emit_rows_csv(rows, out);
    } else if (opt.format == "markdown") {
        emit_rows_markdown(rows, out);
    } else {
        emit_rows_text(rows, out);
    }
    return 0;
}

// ---------------------------------------------------------------- verify ---

int cmd_verify(const Options& opt, const AlgebraDescriptor& alg, std::ostream& out,
               std::ostream& err) {
    check_grid(opt, alg, err);
    if (opt.bound < 1) throw InvalidArgumentError("verify requires --bound >= 1");
    CaseTag tag = classify_case(alg);
    bool closed = tag == CaseTag::Case1 || tag == CaseTag::Case2 || tag == CaseTag::Case3 ||
                  tag == CaseTag::Case4 || tag == CaseTag::Case5;

    Int checked = 0, failures = 0;
    for_each_in_box(alg.form.rank, opt.grid, [&](const Vec& a) {
        if (!closed) return;
        if (norm(alg.form, a) < 0) return;
        ++checked;
        Int hc = h_closed(alg, a);
        auto w = h_bruteforce(alg, a, opt.bound);
        bool ok = w.has_value() && w->value == hc;
        if (!ok) {
            ++failures;
            if (failures <= 10) {
                out << "FAIL " << to_string(a) << ": closed form " << hc << ", oracle "
                    << (w ? std::to_string(w->value) : std::string("no witness in box"))
                    << "\n";
            }
        }
    });
    if (!closed)
        out << "note: algebra is " << to_string(tag)
            << "; no closed form to verify, 0 classes checked\n";
    out << (failures == 0 ? "PASS" : "FAIL") << ": " << checked
        << " classes checked, " << failures << " failures (grid " << opt.grid
        << ", bound " << opt.bound << ")\n";
    return failures == 0 ? 0 : 3;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact adjunction-type lower bounds for the minimal genus on b+=1 forms"};
    app.fallthrough();
    Options opt;
    app.add_option("--algebra", opt.algebra_path, "algebra descriptor JSON file");
    app.add_option("--class", opt.class_text, "class coefficients \"a,b,...\"");
    app.add_option("--grid", opt.grid, "coefficient ceiling for enumeration");
    app.add_option("--bound", opt.bound, "oracle box bound");
    app.add_option("--format", opt.format, "text, json, csv or markdown")
        ->check(CLI::IsMember({"text", "json", "csv", "markdown"}));
    app.add_flag("--trace", opt.trace, "emit the full move trace (reduce)");
    app.add_flag("--basis", opt.basis, "print the basis convention and continue");

    auto* compute = app.add_subcommand("compute", "h for one class");
    auto* reduce_cmd = app.add_subcommand("reduce", "reduced representative and trace");
    auto* sphere = app.add_subcommand("sphere", "sphere-representability verdict");
    auto* verify = app.add_subcommand("verify", "closed form against the oracle on a grid");
    auto* table = app.add_subcommand("table", "reduced classes with h and verdicts");
    app.require_subcommand(0, 1);

    std::vector<const char*> argv;
    std::string prog = "genusbound";
    argv.push_back(prog.c_str());
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (opt.algebra_path.empty()) throw InvalidArgumentError("--algebra is required");
        AlgebraDescriptor alg = load_algebra(opt.algebra_path);
        if (opt.basis) out << basis_description(alg) << "\n";

        auto need_class = [&]() {
            if (opt.class_text.empty())
                throw InvalidArgumentError("this command requires --class");
        };
        if (compute->parsed()) {
            need_class();
            return cmd_compute(opt, alg, out);
        }
        if (reduce_cmd->parsed()) {
            need_class();
            return cmd_reduce(opt, alg, out);
        }
        if (sphere->parsed()) {
            need_class();
            return cmd_sphere(opt, alg, out);
        }
        if (verify->parsed()) return cmd_verify(opt, alg, out, err);
        if (table->parsed()) return cmd_table(opt, alg, out, err);
        if (opt.basis) return 0;
        err << "error: no command given (try --help)\n";
        return 1;
    } catch (const InvalidArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const RankMismatchError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedCaseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace genusbound
