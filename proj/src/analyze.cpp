#include "grundy/analyze.hpp"

#include <chrono>
#include <numeric>

namespace grundy {

const char* to_string(Agreement a) {
    switch (a) {
        case Agreement::ExactMatch: return "exact-match";
        case Agreement::DivisorOk: return "divisor-ok";
        case Agreement::Mismatch: return "mismatch";
        case Agreement::Undecided: return "undecided";
    }
    return "unknown";
}

Prediction predict_rules(const GameRules& rules) {
    if (auto lp = lengyel_params_of(rules)) return predict(*lp);
    if (auto tm = two_move_params_of(rules)) {
        const auto [p, q] = two_move_period(tm->b, tm->x1, tm->y1);
        Prediction r;
        r.kind = PredictionKind::ExactPeriod;
        r.preperiod = 0;
        r.horizontal_period = p;
        r.vertical_period = q;
        r.provenance = "two-move-shift";
        return r;
    }
    if (auto mt = multitransfer_params_of(rules)) {
        if (mt->a == mt->b && mt->b == mt->c) {
            Prediction r;
            r.kind = PredictionKind::ExactPeriod;
            r.preperiod = 0;
            r.horizontal_period = mt->b == 1 ? 2 : multitransfer_period(mt->b);
            r.vertical_period = 2 * mt->b;
            r.provenance = "multitransfer-formula";
            return r;
        }
    }
    return {};
}

Agreement classify_agreement(const Prediction& prediction,
                             const std::optional<PeriodReport>& detected) {
    if (prediction.kind == PredictionKind::NoPrediction) return Agreement::Undecided;
    if (!detected || !detected->certified) return Agreement::Undecided;
    if (prediction.kind == PredictionKind::DivisorBound) {
        if (prediction.divisor_bound && *prediction.divisor_bound % detected->horizontal_period == 0)
            return Agreement::DivisorOk;
        return Agreement::Mismatch;
    }
    // Exact or sporadic: compare every component the prediction commits to.
    if (prediction.horizontal_period && *prediction.horizontal_period != detected->horizontal_period)
        return Agreement::Mismatch;
    if (prediction.preperiod && *prediction.preperiod != detected->preperiod)
        return Agreement::Mismatch;
    if (prediction.vertical_period && *prediction.vertical_period != detected->vertical_period)
        return Agreement::Mismatch;
    return Agreement::ExactMatch;
}

bool conjecture_applies(const LengyelParams& p) {
    if (!p.valid() || p.y1 != 0) return false;
    if (p.y2 <= 0 || p.y2 >= 2 * p.b) return false;
    if (std::gcd(p.x1, p.x2) != 1 || std::gcd(p.b, p.y2) != 1) return false;
    return predict(p).provenance == "conjectured-g-period";
}

namespace {

struct Window {
    int width = 64;
    int height = 8;
};

Window pick_window(const GameRules& rules, const Prediction& prediction) {
    Window w;
    int max_x = 1;
    for (const Move& m : rules.moves) max_x = std::max(max_x, -m[0]);
    long long span = 0;
    if (prediction.horizontal_period) span = *prediction.horizontal_period;
    if (prediction.divisor_bound) span = std::max(span, *prediction.divisor_bound);
    w.width = static_cast<int>(std::max<long long>(4 * span + 4 * max_x, 64));

    int rows = 16;
    if (auto b = vertical_drop(rules)) {
        rows = 4 * *b;
        if (auto lp = lengyel_params_of(rules))
            rows = std::max(rows, 2 * *b + (lp->y1 % (2 * *b)) + (lp->y2 % (2 * *b)) + 1);
    }
    w.height = rows;
    return w;
}

}  // namespace

AnalyzeResult analyze(const GameRules& rules, const AnalyzeOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    AnalyzeResult res;
    res.rules = rules;
    res.prediction = predict_rules(rules);

    Window win = pick_window(rules, res.prediction);
    if (opts.width > 0) win.width = opts.width;
    if (opts.height > 0) win.height = opts.height;
    const bool width_fixed = opts.width > 0;
    const bool height_fixed = opts.height > 0;

    const auto drop = vertical_drop(rules);
    const bool detectable = rules.dimension == 2 && drop.has_value();

    for (int attempt = 0;; ++attempt) {
        res.window_width = win.width;
        res.window_height = win.height;
        std::vector<int> shape{win.width};
        for (int k = 1; k < rules.dimension; ++k) shape.push_back(win.height);
        SgTable table;
        try {
            table = compute_sg_table(rules, shape, opts.limits);
        } catch (const budget_error& e) {
            res.note = e.what();
            break;
        }

        if (!detectable) {
            res.note = rules.dimension == 2
                           ? "no single vertical move; horizontal-period analysis does not apply"
                           : "periodicity analysis applies to 2-D tables only";
            break;
        }
        if (table.height() < 2 * *drop) {
            if (height_fixed) {
                res.note = "window too small: period detection needs at least 2b rows";
                break;
            }
            win.height = 4 * *drop;
            continue;
        }

        const auto nim = check_nim_periodicity(table, *drop);
        if (opts.with_structure) {
            StructureReport s;
            s.nim_periodic = nim.holds;
            s.nim_counterexample = nim.counterexample;
            if (nim.holds) {
                if (auto lp = lengyel_params_of(rules)) {
                    auto two = classify_2columns(table);
                    s.two_columns = std::move(two.two_columns);
                    s.two_block_rule_holds = two.block_rule_holds;
                    auto bad = find_bad_pairs(table, *lp);
                    s.bad_pair_count = static_cast<int>(bad.pairs.size());
                    for (const auto& pr : bad.pairs)
                        s.last_bad_pair_column = std::max(s.last_bad_pair_column, pr.cell.first);
                    for (const auto& ch : bad.chains) s.longest_chain = std::max(s.longest_chain, ch.length);
                    try {
                        s.diagonal_from = check_diagonal_periodicity(table, *lp);
                    } catch (const std::invalid_argument&) {
                        s.diagonal_from = std::nullopt;
                    }
                }
            }
            res.structure = s;
        }

        if (!nim.holds) {
            res.note = "nim-periodicity fails at (" + std::to_string(nim.counterexample->first) +
                       "," + std::to_string(nim.counterexample->second) + ")";
            break;
        }

        try {
            res.detected = detect_horizontal_period(table, *drop);
            break;
        } catch (const detection_error& e) {
            if (width_fixed || attempt >= opts.max_widenings) {
                res.note = e.what();
                break;
            }
            win.width *= 2;
        }
    }

    res.agreement = classify_agreement(res.prediction, res.detected);
    if (res.agreement == Agreement::Undecided && res.note.empty())
        res.note = res.detected ? "no applicable prediction" : "no certified detection";
    res.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace grundy
