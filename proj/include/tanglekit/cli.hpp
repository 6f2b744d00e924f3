#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tanglekit/asymptotics.hpp"
#include "tanglekit/counting.hpp"
#include "tanglekit/oracle.hpp"
#include "tanglekit/render.hpp"

namespace tanglekit::cli {

using ordered_json = nlohmann::ordered_json;

/// 4 significant figures, scientific: mirrors the paper-style tables.
inline std::string sci4(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

inline std::string dec(const Int& v) { return v.str(); }

inline std::vector<long long> parse_list(const std::string& csv) {
    std::vector<long long> out;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoll(tok));
    return out;
}

/// Minimal column table with csv/json/text emitters; all cells
/// pre-stringified (counts as decimal strings, floats as sci4).
struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;

    std::string to_csv() const {
        std::ostringstream os;
        for (size_t i = 0; i < headers.size(); ++i) os << (i ? "," : "") << headers[i];
        os << "\n";
        for (const auto& r : rows) {
            for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
            os << "\n";
        }
        return os.str();
    }
    std::string to_json() const {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json obj;
            for (size_t i = 0; i < headers.size() && i < r.size(); ++i) obj[headers[i]] = r[i];
            arr.push_back(obj);
        }
        return arr.dump(2) + "\n";
    }
    std::string to_text() const {
        std::vector<size_t> w(headers.size(), 0);
        for (size_t i = 0; i < headers.size(); ++i) w[i] = headers[i].size();
        for (const auto& r : rows)
            for (size_t i = 0; i < r.size() && i < w.size(); ++i)
                w[i] = std::max(w[i], r[i].size());
        std::ostringstream os;
        auto emit = [&](const std::vector<std::string>& cells) {
            for (size_t i = 0; i < cells.size(); ++i) {
                if (i) os << "  ";
                os << cells[i] << std::string(w[i] - cells[i].size(), ' ');
            }
            os << "\n";
        };
        emit(headers);
        for (const auto& r : rows) emit(r);
        return os.str();
    }
    std::string render(const std::string& format) const {
        if (format == "csv") return to_csv();
        if (format == "json") return to_json();
        return to_text();
    }
};

struct Options {
    long long n = 0;
    long long n_max = 0;
    std::string ell = "";
    int k = 3;
    std::string method = "";
    int corrections = 3;
    long long fit_n = 2000;
    std::string ns = "";
    std::string format = "text";
    std::string out = "";
    std::string cls = "";
    long long count = 12;
};

inline void write_output(const std::string& text, const Options& opt, std::ostream& os) {
    if (opt.out.empty()) {
        os << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) fail(errc::io_error, "cannot open " + opt.out);
    f << text;
    if (!f) fail(errc::io_error, "write failed for " + opt.out);
}

inline std::vector<std::string> split_methods(const std::string& m, const std::string& fallback) {
    std::vector<std::string> out;
    std::istringstream ss(m.empty() ? fallback : m);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

// --- count ------------------------------------------------------------------

inline int cmd_count(const std::string& subject, const Options& opt, std::ostream& os) {
    Table t;
    if (subject == "p32") {
        long long nmax = opt.n ? opt.n : (opt.n_max ? opt.n_max : 12);
        auto methods = split_methods(opt.method, "sum,rec,dp");
        t.headers = {"n"};
        for (const auto& m : methods) t.headers.push_back(m);
        std::vector<Int> rec_terms;
        for (const auto& m : methods)
            if (m == "rec") rec_terms = evaluate(p32_recurrence(), nmax);
        for (long long n = 1; n <= nmax; ++n) {
            std::vector<std::string> row{std::to_string(n)};
            for (const auto& m : methods) {
                if (m == "sum") row.push_back(dec(p32_closed(n - 1)));
                else if (m == "rec") row.push_back(dec(rec_terms[static_cast<size_t>(n - 1)]));
                else if (m == "dp")
                    row.push_back(dec(count_vacillating(step_set_braid(opt.k), opt.k,
                                                        static_cast<int>(n - 1))));
                else if (m == "oracle")
                    row.push_back(dec(oracle_count({DiagramClass::two_regular_partition,
                                                    static_cast<int>(n), std::nullopt, opt.k})));
                else fail(errc::usage, "unknown method '" + m + "'");
            }
            t.rows.push_back(std::move(row));
        }
    } else if (subject == "f3") {
        long long pmax = opt.n ? opt.n : 12;
        auto methods = split_methods(opt.method, "closed,dp");
        t.headers = {"points"};
        for (const auto& m : methods) t.headers.push_back(m);
        for (long long p = 2; p <= pmax; p += 2) {
            std::vector<std::string> row{std::to_string(p)};
            for (const auto& m : methods) {
                if (m == "closed") row.push_back(dec(f3_closed(p)));
                else if (m == "dp")
                    row.push_back(dec(count_vacillating(step_set_matching(3), 3,
                                                        static_cast<int>(p))));
                else if (m == "oracle") {
                    Int c = 0;
                    enum_perfect_matchings(static_cast<int>(p), [&](const InflatedMatching& mm) {
                        if (crossing_number(mm) < 3) ++c;
                    });
                    row.push_back(dec(c));
                } else fail(errc::usage, "unknown method '" + m + "'");
            }
            t.rows.push_back(std::move(row));
        }
    } else if (subject == "d") {
        long long nmax = opt.n ? opt.n : 10;
        long long ell = opt.ell.empty() ? 1 : parse_list(opt.ell).at(0);
        auto methods = split_methods(opt.method, "closed");
        t.headers = {"n"};
        for (const auto& m : methods) t.headers.push_back(m);
        for (long long n = 1; n <= nmax; ++n) {
            std::vector<std::string> row{std::to_string(n)};
            for (const auto& m : methods) {
                if (m == "closed")
                    row.push_back(dec(d_count(static_cast<int>(n), static_cast<int>(ell), opt.k)));
                else if (m == "oracle")
                    row.push_back(dec(oracle_count({DiagramClass::general, static_cast<int>(n),
                                                    static_cast<int>(ell), opt.k})));
                else fail(errc::usage, "unknown method '" + m + "'");
            }
            t.rows.push_back(std::move(row));
        }
    } else {
        fail(errc::usage, "count subject must be p32, d or f3");
    }
    write_output(t.render(opt.format), opt, os);
    return 0;
}

// --- oracle ------------------------------------------------------------------

inline DiagramClass class_from_name(const std::string& name) {
    if (name == "matching") return DiagramClass::matching_with_isolated;
    if (name == "partition") return DiagramClass::partition;
    if (name == "two-regular") return DiagramClass::two_regular_partition;
    if (name == "braid") return DiagramClass::braid_no_isolated;
    if (name == "general") return DiagramClass::general;
    fail(errc::usage, "unknown class '" + name + "'");
}

inline int cmd_oracle(const Options& opt, std::ostream& os) {
    ClassSpec spec;
    spec.cls = class_from_name(opt.cls.empty() ? "general" : opt.cls);
    spec.n = static_cast<int>(opt.n);
    if (!opt.ell.empty()) spec.ell = static_cast<int>(parse_list(opt.ell).at(0));
    if (opt.k > 0) spec.k = opt.k;
    Table t;
    t.headers = {"class", "n", "ell", "k", "count"};
    t.rows.push_back({opt.cls.empty() ? "general" : opt.cls, std::to_string(spec.n),
                      spec.ell ? std::to_string(*spec.ell) : "-",
                      spec.k ? std::to_string(*spec.k) : "-", dec(oracle_count(spec))});
    write_output(t.render(opt.format), opt, os);
    return 0;
}

// --- checks -------------------------------------------------------------------

inline int cmd_bijection_check(const Options& opt, std::ostream& os) {
    int nmax = static_cast<int>(opt.n_max ? opt.n_max : 5);
    bool ok = true;
    std::ostringstream report;
    auto check = [&](const std::string& name, bool pass) {
        report << (pass ? "PASS  " : "FAIL  ") << name << "\n";
        ok = ok && pass;
    };

    int tangled_n = std::min(nmax, 6);
    bool roundtrip = true, rows_eq = true;
    for (int n = 1; n <= tangled_n; ++n) {
        enum_tangled(n, std::nullopt, [&](const TangledDiagram& d) {
            VacillatingTableau vt = diagram_to_tableau(d);
            if (tableau_to_diagram(vt) != d) roundtrip = false;
            if (vt.max_rows() != crossing_number(d)) rows_eq = false;
        });
    }
    check("diagram<->tableau round trip, tangled n <= " + std::to_string(tangled_n), roundtrip);
    check("max tableau rows = crossing number, tangled n <= " + std::to_string(tangled_n), rows_eq);

    int part_n = std::min(nmax + 3, 9);
    bool part_roundtrip = true;
    for (int n = 1; n <= part_n; ++n)
        enum_partitions(n, [&](const TangledDiagram& d) {
            if (tableau_to_diagram(diagram_to_tableau(d)) != d) part_roundtrip = false;
        });
    check("diagram<->tableau round trip, partitions n <= " + std::to_string(part_n),
          part_roundtrip);

    bool theta_ok = true;
    for (int n = 2; n <= part_n; ++n)
        enum_partitions(n, [&](const TangledDiagram& p) {
            if (!is_two_regular(p)) return;
            TangledDiagram b = theta(p);
            if (!satisfies(b, DiagramClass::braid_no_isolated)) theta_ok = false;
            if (theta_inv(b) != p) theta_ok = false;
        });
    check("theta bijection, 2-regular partitions n <= " + std::to_string(part_n), theta_ok);

    write_output(report.str(), opt, os);
    return ok ? 0 : 1;
}

inline int cmd_reflect_check(const Options& opt, std::ostream& os) {
    int nmax = static_cast<int>(opt.n_max ? opt.n_max : 12);
    bool ok = true;
    std::ostringstream report;
    for (int n = 0; n <= nmax; ++n) {
        Int refl = reflection_count(2 * n);
        Int direct = region_walks(2 * n);
        Int dp = count_vacillating(step_set_braid(3), 3, n);
        bool pass = refl == direct && refl == dp;
        ok = ok && pass;
        report << (pass ? "PASS" : "FAIL") << "  2n=" << 2 * n << "  difference=" << refl
               << "  constrained=" << direct << "  shape-dp=" << dp << "\n";
    }
    write_output(report.str(), opt, os);
    return ok ? 0 : 1;
}

// --- recurrence / asym ----------------------------------------------------------

inline PolyRecurrence recurrence_from_args(const std::vector<std::string>& pos) {
    if (pos.empty()) fail(errc::usage, "expected 'p32' or a recurrence literal");
    if (pos[0] == "p32") return p32_recurrence();
    if (pos[0] == "rec") {
        if (pos.size() != 4 || pos[2] != "seeds")
            fail(errc::usage, "expected: rec \"<polys>\" seeds s1,s2,...");
        return parse_recurrence(pos[1], pos[3]);
    }
    fail(errc::usage, "unknown recurrence '" + pos[0] + "'");
}

inline int cmd_recurrence(const std::vector<std::string>& pos, const Options& opt,
                          std::ostream& os) {
    PolyRecurrence rec = recurrence_from_args(pos);
    std::vector<Int> terms = evaluate(rec, opt.count);
    Table t;
    t.headers = {"index", "value"};
    for (size_t j = 0; j < terms.size(); ++j)
        t.rows.push_back(
            {std::to_string(static_cast<long long>(j) + rec.index_offset), dec(terms[j])});
    write_output(t.render(opt.format), opt, os);
    return 0;
}

inline int cmd_asym(const std::vector<std::string>& pos, const Options& opt, std::ostream& os) {
    PolyRecurrence rec = recurrence_from_args(pos);
    AsymptoticExpansion exp = analyze(rec, opt.corrections, opt.fit_n);

    std::vector<long long> ns =
        opt.ns.empty() ? std::vector<long long>{101, 501, 1001} : parse_list(opt.ns);
    long long need = opt.fit_n;
    for (long long n : ns) need = std::max(need, n);
    std::vector<Int> seq = evaluate(rec, need + 1);
    auto rows = subexp_table(ns, seq, exp);

    ordered_json j;
    j["lambda"] = exp.lambda.str();
    j["theta"] = exp.theta.str();
    j["corrections"] = ordered_json::array();
    for (const auto& c : exp.corrections) j["corrections"].push_back(c.str());
    {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.10g", exp.K);
        j["K"] = std::stod(buf);
    }
    j["fit_n"] = opt.fit_n;
    j["table"] = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["n"] = r.n;
        row["exact_ratio"] = sci4(r.exact_ratio);
        row["g"] = sci4(r.g);
        j["table"].push_back(row);
    }
    if (opt.format == "json") {
        write_output(j.dump(2) + "\n", opt, os);
    } else {
        std::ostringstream text;
        text << "lambda      " << exp.lambda.str() << "\n";
        text << "theta       " << exp.theta.str() << "\n";
        for (size_t i = 0; i < exp.corrections.size(); ++i)
            text << "c" << i + 1 << "          " << exp.corrections[i].str() << "\n";
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.10g", exp.K);
        text << "K           " << buf << "  (fit at n=" << opt.fit_n << ")\n";
        Table t;
        t.headers = {"n", "exact_ratio", "g"};
        for (const auto& r : rows)
            t.rows.push_back({std::to_string(r.n), sci4(r.exact_ratio), sci4(r.g)});
        text << t.render("text");
        write_output(text.str(), opt, os);
    }
    return 0;
}

// --- table ----------------------------------------------------------------------

inline int cmd_table(const std::string& subject, const Options& opt, std::ostream& os) {
    Table t;
    if (subject == "d") {
        long long nmax = opt.n_max ? opt.n_max : 10;
        std::vector<long long> ells = opt.ell.empty() ? std::vector<long long>{1, 2, 3}
                                                      : parse_list(opt.ell);
        t.headers = {"ell/n"};
        for (long long n = 1; n <= nmax; ++n) t.headers.push_back(std::to_string(n));
        for (long long ell : ells) {
            std::vector<std::string> row{std::to_string(ell)};
            for (long long n = 1; n <= nmax; ++n)
                row.push_back(dec(d_count(static_cast<int>(n), static_cast<int>(ell), opt.k)));
            t.rows.push_back(std::move(row));
        }
    } else if (subject == "p32") {
        long long nmax = opt.n_max ? opt.n_max : 12;
        std::vector<Int> terms = evaluate(p32_recurrence(), nmax);
        t.headers = {"n", "p32"};
        for (long long n = 1; n <= nmax; ++n)
            t.rows.push_back({std::to_string(n), dec(terms[static_cast<size_t>(n - 1)])});
    } else if (subject == "subexp") {
        std::vector<long long> ns = opt.ns.empty()
            ? std::vector<long long>{21, 31, 41, 51, 61, 71, 81, 91, 101, 501, 1001}
            : parse_list(opt.ns);
        PolyRecurrence rec = p32_recurrence();
        AsymptoticExpansion exp = analyze(rec, opt.corrections, opt.fit_n);
        long long need = opt.fit_n;
        for (long long n : ns) need = std::max(need, n);
        std::vector<Int> seq = evaluate(rec, need + 1);
        t.headers = {"n", "exact_ratio", "g"};
        for (const auto& r : subexp_table(ns, seq, exp))
            t.rows.push_back({std::to_string(r.n), sci4(r.exact_ratio), sci4(r.g)});
    } else {
        fail(errc::usage, "table subject must be d, p32 or subexp");
    }
    write_output(t.render(opt.format), opt, os);
    return 0;
}

// --- entry point -------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& os = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"tanglekit: exact enumeration and asymptotics for k-noncrossing "
                 "tangled diagrams, 2-regular partitions and braids"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", opt.n, "single parameter n");
        sub->add_option("--n-max", opt.n_max, "largest n");
        sub->add_option("--ell", opt.ell, "degree-2 vertex counts (comma separated)");
        sub->add_option("--k", opt.k, "noncrossing bound (default 3)");
        sub->add_option("--method", opt.method, "comma separated method list");
        sub->add_option("--corrections", opt.corrections, "number of correction terms");
        sub->add_option("--fit-n", opt.fit_n, "fit point for K");
        sub->add_option("--ns", opt.ns, "table rows (comma separated)");
        sub->add_option("--count", opt.count, "number of terms");
        sub->add_option("--format", opt.format, "csv|json|text")
            ->check(CLI::IsMember({"csv", "json", "text"}));
        sub->add_option("--out", opt.out, "write output to file");
    };

    std::string subject;
    std::vector<std::string> positionals;

    auto* count = app.add_subcommand("count", "cross-checked counting columns");
    count->add_option("subject", subject, "p32|d|f3")->required();
    add_common(count);

    auto* oracle = app.add_subcommand("oracle", "exhaustive small-n class count");
    oracle->add_option("--class", opt.cls, "matching|partition|two-regular|braid|general");
    add_common(oracle);

    auto* bij = app.add_subcommand("bijection-check", "round trips and crossing equivalences");
    add_common(bij);

    auto* refl = app.add_subcommand("reflect-check", "reflection principle identities");
    add_common(refl);

    auto* recur = app.add_subcommand("recurrence", "evaluate a P-recursive sequence");
    recur->add_option("spec", positionals, "p32 | rec \"<polys>\" seeds s1,...");
    add_common(recur);

    auto* asym = app.add_subcommand("asym", "formal series solution and K fit");
    asym->add_option("spec", positionals, "p32 | rec \"<polys>\" seeds s1,...");
    add_common(asym);

    auto* table = app.add_subcommand("table", "paper table reproductions");
    table->add_option("subject", subject, "d|p32|subexp")->required();
    add_common(table);

    auto* render = app.add_subcommand("render", "diagram to SVG");
    render->add_option("diagram", subject, "diagram literal, e.g. \"n=3; arcs=(1,3); crossed=\"")
        ->required();
    add_common(render);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        os << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (count->parsed()) return cmd_count(subject, opt, os);
        if (oracle->parsed()) return cmd_oracle(opt, os);
        if (bij->parsed()) return cmd_bijection_check(opt, os);
        if (refl->parsed()) return cmd_reflect_check(opt, os);
        if (recur->parsed()) return cmd_recurrence(positionals, opt, os);
        if (asym->parsed()) return cmd_asym(positionals, opt, os);
        if (table->parsed()) return cmd_table(subject, opt, os);
        if (render->parsed()) {
            if (opt.out.empty()) fail(errc::usage, "render requires --out");
            render_to_file(parse_diagram(subject), opt.out);
            return 0;
        }
    } catch (const error& e) {
        err << e.what() << "\n";
        return e.code() == errc::usage ? 2 : 1;
    }
    return 2;
}

} // namespace tanglekit::cli
