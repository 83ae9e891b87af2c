#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gapbound/lemma_lab.hpp"

namespace gapbound {

inline constexpr std::string_view kToolVersion = "0.3.0";

enum class ReportFormat { Text, Json, Csv };

ReportFormat parse_report_format(std::string_view name);

struct PropCheckRecord {
    PlaceCluster place;
    unsigned n;
    DerivativeValuationCheck check;
};

struct AuxiliaryRecord {
    long n;
    AuxiliaryFunction aux;
    bool wronskian_nonzero;
    HeightDecomposition decomposition;
};

/// Everything a single verification run produced; rendered in any format.
struct ReportDocument {
    BoundReport bounds;
    std::optional<AuxiliaryRecord> lemma2;
    std::vector<PropCheckRecord> prop_checks;
    std::optional<RiemannRochCheck> rr_check;
    bool pass = true;
};

/// Runs the bound pipeline plus the lemma-lab checks for one (f, x, p).
/// lemma_n = 0 skips the auxiliary-function construction; prop_n bounds the
/// derivative orders tried at every place.
ReportDocument build_report(const RationalFunction& f, const RationalFunction& x, const BigRational& p, long order,
                            bool normalize, long lemma_n, unsigned prop_n);

nlohmann::ordered_json to_json(const ReportDocument& doc);
std::string render(const ReportDocument& doc, ReportFormat format);

/// One row per n: n,a_n,theorem_rhs,corollary_rhs,slack.
std::string render_csv_rows(const BoundReport& report);

nlohmann::ordered_json to_json(const GapSequence& g);
nlohmann::ordered_json to_json(const TruncatedSeries& s);

}  // namespace gapbound
