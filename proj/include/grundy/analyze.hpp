#pragma once

#include <optional>
#include <string>

#include "grundy/closed_form.hpp"
#include "grundy/periodicity.hpp"
#include "grundy/table.hpp"

namespace grundy {

enum class Agreement { ExactMatch, DivisorOk, Mismatch, Undecided };

const char* to_string(Agreement a);

struct AnalyzeOptions {
    int width = 0;   // 0 picks a window from the prediction
    int height = 0;
    TableLimits limits;
    bool with_structure = true;
    int max_widenings = 2;  // doublings tried when no certified period fits
};

struct AnalyzeResult {
    GameRules rules;
    Prediction prediction;
    std::optional<PeriodReport> detected;
    std::optional<StructureReport> structure;
    Agreement agreement = Agreement::Undecided;
    std::string note;  // why the run stayed undecided, when it did
    int window_width = 0;
    int window_height = 0;
    double wall_seconds = 0.0;
};

// Closed-form prediction for whatever shape the rules have (three-move
// transfer, two-move, multitransfer); NoPrediction otherwise.
Prediction predict_rules(const GameRules& rules);

AnalyzeResult analyze(const GameRules& rules, const AnalyzeOptions& opts = {});

// Prediction vs certified detection.
Agreement classify_agreement(const Prediction& prediction,
                             const std::optional<PeriodReport>& detected);

// The conjectured exact-period formula applies to the raw parameters: y1 = 0,
// 0 < y2 < 2b, both gcd conditions, and no special family takes precedence.
bool conjecture_applies(const LengyelParams& p);

}  // namespace grundy
