// Command-line front end: renders Sprague-Grundy tables, analyzes periodicity
// against the closed-form predictions, scans parameter ranges, and checks the
// published tables.

#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "grundy/analyze.hpp"
#include "grundy/figures.hpp"
#include "grundy/parse.hpp"
#include "grundy/render.hpp"

using nlohmann::json;
using namespace grundy;

namespace {

json prediction_json(const Prediction& p) {
    json out;
    out["kind"] = to_string(p.kind);
    if (!p.provenance.empty()) out["provenance"] = p.provenance;
    if (p.preperiod) out["preperiod"] = *p.preperiod;
    if (p.horizontal_period) out["p"] = *p.horizontal_period;
    if (p.vertical_period) out["q"] = *p.vertical_period;
    if (p.divisor_bound) out["g"] = *p.divisor_bound;
    if (p.reduced_to) out["reduced_to"] = p.reduced_to->label;
    return out;
}

json detected_json(const PeriodReport& r) {
    return json{{"preperiod", r.preperiod},
                {"p", r.horizontal_period},
                {"q", r.vertical_period},
                {"certified", r.certified},
                {"witness_column", r.witness_column},
                {"state_width", r.state_width},
                {"window", {r.window_width, r.window_height}}};
}

json structure_json(const StructureReport& s) {
    json out;
    out["nim_periodic"] = s.nim_periodic;
    if (s.nim_counterexample)
        out["nim_counterexample"] = {s.nim_counterexample->first, s.nim_counterexample->second};
    out["two_column_count"] = s.two_columns.size();
    out["two_block_rule"] = s.two_block_rule_holds;
    out["bad_pairs"] = s.bad_pair_count;
    out["last_bad_pair_column"] = s.last_bad_pair_column;
    out["longest_chain"] = s.longest_chain;
    if (s.diagonal_from) out["diagonal_from"] = *s.diagonal_from;
    return out;
}

json result_json(const AnalyzeResult& r) {
    json out;
    out["schema"] = 1;
    out["spec"] = r.rules.label;
    out["agreement"] = to_string(r.agreement);
    out["prediction"] = prediction_json(r.prediction);
    if (r.detected) out["detected"] = detected_json(*r.detected);
    if (r.structure) out["structure"] = structure_json(*r.structure);
    if (!r.note.empty()) out["note"] = r.note;
    out["wall_ms"] = static_cast<long long>(r.wall_seconds * 1000.0);
    return out;
}

int exit_code_for(Agreement a) {
    switch (a) {
        case Agreement::ExactMatch:
        case Agreement::DivisorOk: return 0;
        case Agreement::Mismatch: return 1;
        case Agreement::Undecided: return 2;
    }
    return 3;
}

struct Range {
    int lo = 0;
    int hi = 0;
};

// "A..B" or a single value; an inverted range is empty and sweeps nothing.
Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoi(text);
    } else {
        r.lo = std::stoi(text.substr(0, dots));
        r.hi = std::stoi(text.substr(dots + 2));
    }
    return r;
}

int run_scan(const Range& b, const Range& x1, const Range& y1, const Range& x2, const Range& y2,
             bool conjecture_filter, const std::string& out_path, bool allow_slow) {
    // The window cost is driven by g ~ 2b(x1+x2); the y's reduce mod 2b.
    const int widest = std::max({b.hi, x1.hi, x2.hi});
    if (widest > 8 && !allow_slow) {
        std::cerr << "scan: ranges beyond 8 can take hours (the full sweep to 20 runs hundreds of\n"
                     "thousands of games); pass --allow-slow to proceed\n";
        return 3;
    }

    std::set<std::string> done;
    {
        std::ifstream existing(out_path);
        std::string line;
        while (std::getline(existing, line)) {
            if (line.empty()) continue;
            try {
                done.insert(json::parse(line).at("spec").get<std::string>());
            } catch (const json::exception&) {
            }
        }
    }

    std::ofstream out(out_path, std::ios::app);
    if (!out) {
        std::cerr << "scan: cannot open " << out_path << " for writing\n";
        return 3;
    }

    long long exact = 0, divisor = 0, mismatch = 0, undecided = 0, skipped = 0;
    for (int vb = b.lo; vb <= b.hi; ++vb)
        for (int vx1 = x1.lo; vx1 <= x1.hi; ++vx1)
            for (int vy1 = y1.lo; vy1 <= y1.hi; ++vy1)
                for (int vx2 = x2.lo; vx2 <= x2.hi; ++vx2)
                    for (int vy2 = y2.lo; vy2 <= y2.hi; ++vy2) {
                        LengyelParams p{vb, vx1, vy1, vx2, vy2};
                        if (!p.valid()) continue;
                        if (conjecture_filter && !conjecture_applies(p)) continue;
                        if (done.count(p.label())) {
                            ++skipped;
                            continue;
                        }
                        AnalyzeResult r = analyze(build_lengyel(p));
                        switch (r.agreement) {
                            case Agreement::ExactMatch: ++exact; break;
                            case Agreement::DivisorOk: ++divisor; break;
                            case Agreement::Mismatch: ++mismatch; break;
                            case Agreement::Undecided: ++undecided; break;
                        }
                        out << result_json(r).dump() << "\n";
                        out.flush();
                        if (!out) {
                            std::cerr << "scan: write failed, partial file kept at " << out_path << "\n";
                            return 3;
                        }
                    }

    json tally{{"exact-match", exact},
               {"divisor-ok", divisor},
               {"mismatch", mismatch},
               {"undecided", undecided},
               {"resumed-skips", skipped}};
    std::cout << tally.dump() << "\n";
    if (mismatch > 0) return 1;
    if (undecided > 0) return 2;
    return 0;
}

int run_figure(const std::string& id_text) {
    std::vector<int> ids;
    if (id_text == "all") {
        ids = figure_ids();
    } else {
        try {
            ids.push_back(std::stoi(id_text));
        } catch (const std::exception&) {
            std::cerr << "figure: expected a figure id or 'all'\n";
            return 3;
        }
    }
    bool all_pass = true;
    for (int id : ids) {
        FigureResult r = reproduce_figure(id);
        for (const GridResult& g : r.grids) {
            std::cout << "figure " << id << "  " << g.spec << "  " << g.width << "x" << g.height
                      << "  " << (g.pass ? "PASS" : "FAIL");
            if (g.first_diff)
                std::cout << "  first difference at (" << g.first_diff->x << "," << g.first_diff->y
                          << "): computed " << g.first_diff->got << ", published "
                          << g.first_diff->want;
            std::cout << "\n";
            if (!g.pass) std::cout << g.rendered;
        }
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sprague-Grundy tables and periodicity analysis for vector subtraction-transfer games"};
    app.require_subcommand(1);

    std::string spec_text, format = "ascii", out_path, figure_id;
    int width = 0, height = 0;

    auto* sg = app.add_subcommand("sg", "compute and print a table of nim-values");
    sg->add_option("spec", spec_text, "game spec, e.g. L(2;3,0;1,1) or V[(0,-2);(-1,1)]")->required();
    sg->add_option("--width", width, "columns (default 16)");
    sg->add_option("--height", height, "rows (default 16)");
    sg->add_option("--format", format, "ascii|csv|json")->check(CLI::IsMember({"ascii", "csv", "json"}));

    auto* an = app.add_subcommand("analyze", "detect and certify periods, compare with predictions");
    an->add_option("spec", spec_text, "game spec")->required();
    an->add_option("--width", width, "window columns (default chosen from the prediction)");
    an->add_option("--height", height, "window rows");
    std::string an_format = "json";
    an->add_option("--format", an_format, "json|text")->check(CLI::IsMember({"json", "text"}));

    auto* sc = app.add_subcommand("scan", "sweep parameter ranges, appending NDJSON results");
    std::string rb = "1..4", rx1 = "1..4", ry1 = "0..0", rx2 = "1..4", ry2 = "0..4";
    bool conj = false, allow_slow = false;
    sc->add_option("--b", rb, "range A..B for b");
    sc->add_option("--x1", rx1, "range for x1");
    sc->add_option("--y1", ry1, "range for y1");
    sc->add_option("--x2", rx2, "range for x2");
    sc->add_option("--y2", ry2, "range for y2");
    sc->add_flag("--conjecture-filter", conj, "keep only games the exact-period formula claims");
    sc->add_flag("--allow-slow", allow_slow, "permit ranges beyond 8 per parameter");
    sc->add_option("--out", out_path, "output file (NDJSON, appended, resumable)")->required();

    auto* fg = app.add_subcommand("figure", "recompute a published table and compare");
    fg->add_option("id", figure_id, "figure id or 'all'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 3;
    }

    try {
        if (sg->parsed()) {
            GameRules rules = parse_spec(spec_text);
            if (rules.dimension > 2) {
                std::cerr << "sg: only 1-D and 2-D tables are rendered\n";
                return 3;
            }
            const int W = width > 0 ? width : 16;
            const int H = height > 0 ? height : 16;
            std::vector<int> shape{W};
            if (rules.dimension == 2) shape.push_back(H);
            SgTable t = compute_sg_table(rules, shape);
            RenderFormat f = format == "csv"    ? RenderFormat::Csv
                             : format == "json" ? RenderFormat::Json
                                                : RenderFormat::Ascii;
            std::cout << render_table(t, f);
            if (f == RenderFormat::Json) std::cout << "\n";
            return 0;
        }
        if (an->parsed()) {
            AnalyzeOptions opts;
            opts.width = width;
            opts.height = height;
            AnalyzeResult r = analyze(parse_spec(spec_text), opts);
            if (an_format == "json") {
                std::cout << result_json(r).dump(2) << "\n";
            } else {
                std::cout << r.rules.label << ": " << to_string(r.agreement);
                if (r.detected)
                    std::cout << "  detected (preperiod " << r.detected->preperiod << ", p "
                              << r.detected->horizontal_period << ", q " << r.detected->vertical_period
                              << ")";
                if (!r.note.empty()) std::cout << "  [" << r.note << "]";
                std::cout << "\n";
            }
            return exit_code_for(r.agreement);
        }
        if (sc->parsed())
            return run_scan(parse_range(rb), parse_range(rx1), parse_range(ry1), parse_range(rx2),
                            parse_range(ry2), conj, out_path, allow_slow);
        if (fg->parsed()) return run_figure(figure_id);
    } catch (const parse_error& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
