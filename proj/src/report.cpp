#include "gapbound/report.hpp"

#include <sstream>

#include "gapbound/error.hpp"

namespace gapbound {

using nlohmann::ordered_json;

ReportFormat parse_report_format(std::string_view name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    throw Error(ErrorKind::ConfigError, "unknown format '" + std::string(name) + "' (text, json, csv)");
}

ReportDocument build_report(const RationalFunction& f, const RationalFunction& x, const BigRational& p, long order,
                            bool normalize, long lemma_n, unsigned prop_n) {
    ReportDocument doc;
    doc.bounds = verify_bounds(f, x, p, order, normalize);
    const RationalFunction& g = doc.bounds.analyzed;

    if (lemma_n > 0) {
        if (lemma_n > doc.bounds.max_n())
            throw Error(ErrorKind::InsufficientGapTerms, "n = " + std::to_string(lemma_n) + " but only " +
                                                             std::to_string(doc.bounds.max_n()) +
                                                             " gap terms lie below the order");
        GapMatrix m = build_gap_matrix(doc.bounds.gaps, lemma_n);
        AuxiliaryRecord rec{lemma_n, assemble_F(g, x, p, m, nullspace_vector(m)), wronskian_nonvanishing(m), {}};
        rec.decomposition = check_height_decomposition(rec.aux, g, x, lemma_n);
        doc.pass = doc.pass && rec.wronskian_nonzero && rec.decomposition.holds;
        doc.lemma2 = std::move(rec);
    }

    if (!g.is_constant()) {
        for (auto& c : check_derivative_valuations(g, x, derivative_support(g, x, prop_n), prop_n)) {
            doc.pass = doc.pass && c.check.holds;
            doc.prop_checks.push_back({std::move(c.place), c.n, c.check});
        }
    }
    doc.rr_check = check_rr_identity(x);
    doc.pass = doc.pass && doc.rr_check->holds;
    return doc;
}

namespace {

std::vector<std::string> integer_strings(const std::vector<BigInt>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& z : v) out.push_back(z.get_str());
    return out;
}

}  // namespace

ordered_json to_json(const GapSequence& g) {
    ordered_json j;
    j["exponents"] = g.exponents;
    std::vector<std::string> alphas;
    for (const auto& a : g.coefficients) alphas.push_back(to_fraction_string(a));
    j["coefficients"] = alphas;
    j["window"] = g.window;
    j["terminated"] = g.terminated;
    return j;
}

ordered_json to_json(const TruncatedSeries& s) {
    ordered_json j;
    j["offset"] = s.offset();
    j["order"] = s.order();
    std::vector<std::string> c;
    for (const auto& a : s.coefficients()) c.push_back(to_fraction_string(a));
    j["coefficients"] = c;
    return j;
}

ordered_json to_json(const ReportDocument& doc) {
    const BoundReport& b = doc.bounds;
    ordered_json j;
    j["version"] = kToolVersion;
    j["f"] = b.f.to_string();
    j["x"] = b.x.to_string();
    j["point"] = to_fraction_string(b.point);
    j["order"] = b.order;
    if (b.normalization_power != 0) {
        j["analyzed_f"] = b.analyzed.to_string();
        j["normalization_power"] = b.normalization_power;
    }
    j["height"] = b.inputs.height_f;
    j["s1_count"] = b.inputs.s1_count;
    j["s2_count"] = b.inputs.s2_count;
    j["s2_sum"] = b.inputs.s2_sum;
    j["supp_x_count"] = b.inputs.supp_x_count;
    j["genus"] = b.inputs.genus;
    ordered_json rows = ordered_json::array();
    for (const auto& r : b.rows) {
        rows.push_back({{"n", r.n},
                        {"a_n", r.a_n},
                        {"alpha_n", to_fraction_string(r.alpha_n)},
                        {"theorem_rhs", r.theorem_rhs},
                        {"corollary_rhs", r.corollary_rhs},
                        {"slack", r.slack}});
    }
    j["rows"] = rows;
    ordered_json summary;
    summary["max_n"] = b.max_n();
    summary["is_sharp"] = b.is_sharp();
    if (auto s = b.min_slack()) summary["min_slack"] = *s;
    else summary["min_slack"] = nullptr;
    if (auto e = b.limsup_estimate()) summary["limsup_estimate"] = to_fraction_string(*e);
    else summary["limsup_estimate"] = nullptr;
    summary["limsup_bound"] = b.limsup_bound();
    j["summary"] = summary;

    if (doc.lemma2) {
        const auto& l = *doc.lemma2;
        ordered_json cases = ordered_json::array();
        for (std::size_t i = 0; i < l.decomposition.cases.size(); ++i) {
            const auto& c = l.decomposition.cases[i];
            cases.push_back({{"case", "S" + std::to_string(i + 1)},
                             {"points", c.points},
                             {"height_F", c.height_F},
                             {"height_f", c.height_f},
                             {"allowance", c.allowance},
                             {"holds", c.holds}});
        }
        j["lemma2"] = {{"n", l.n},
                       {"c", integer_strings(l.aux.c)},
                       {"hF", l.aux.height_F},
                       {"v_pF", l.aux.achieved_valuation},
                       {"F", l.aux.F.to_string()},
                       {"wronskian_nonzero", l.wronskian_nonzero},
                       {"height_decomposition", cases}};
    } else {
        j["lemma2"] = nullptr;
    }
    ordered_json props = ordered_json::array();
    for (const auto& p : doc.prop_checks) {
        ordered_json lhs = p.check.lhs ? ordered_json(*p.check.lhs) : ordered_json(nullptr);
        props.push_back(
            {{"place", p.place.to_string()}, {"n", p.n}, {"lhs", lhs}, {"rhs", p.check.rhs}, {"holds", p.check.holds}});
    }
    j["prop_checks"] = props;
    if (doc.rr_check)
        j["rr_check"] = {{"lhs", doc.rr_check->lhs_sum}, {"rhs", doc.rr_check->rhs}, {"holds", doc.rr_check->holds}};
    else
        j["rr_check"] = nullptr;
    j["pass"] = doc.pass;
    return j;
}

std::string render_csv_rows(const BoundReport& report) {
    std::ostringstream os;
    os << "n,a_n,theorem_rhs,corollary_rhs,slack\n";
    for (const auto& r : report.rows)
        os << r.n << ',' << r.a_n << ',' << r.theorem_rhs << ',' << r.corollary_rhs << ',' << r.slack << '\n';
    return os.str();
}

std::string render(const ReportDocument& doc, ReportFormat format) {
    if (format == ReportFormat::Json) return to_json(doc).dump(2) + "\n";
    if (format == ReportFormat::Csv) return render_csv_rows(doc.bounds);

    const BoundReport& b = doc.bounds;
    std::ostringstream os;
    os << "gapbound " << kToolVersion << "\n";
    os << "f      = " << b.f.to_string() << "\n";
    if (b.normalization_power != 0)
        os << "analyzed f / x^" << b.normalization_power << " = " << b.analyzed.to_string() << "\n";
    os << "x      = " << b.x.to_string() << "\n";
    os << "point  = " << b.point << "\n";
    os << "order  = " << b.order << "\n";
    os << "h(f) = " << b.inputs.height_f << ", #S1 = " << b.inputs.s1_count << ", #S2 = " << b.inputs.s2_count
       << ", S2 sum = " << b.inputs.s2_sum << ", #Supp{x} = " << b.inputs.supp_x_count << "\n\n";
    os << "     n    a_n  theorem  corollary  slack\n";
    for (const auto& r : b.rows) {
        char line[96];
        std::snprintf(line, sizeof line, "%6ld %6ld %8ld %10ld %6ld\n", r.n, r.a_n, r.theorem_rhs, r.corollary_rhs,
                      r.slack);
        os << line;
    }
    os << "\nmax n checked: " << b.max_n() << ", sharp: " << (b.is_sharp() ? "yes" : "no");
    if (auto s = b.min_slack()) os << ", min slack: " << *s;
    if (auto e = b.limsup_estimate()) os << ", a_N/N = " << *e;
    os << ", limsup bound: " << b.limsup_bound() << "\n";
    if (doc.lemma2) {
        const auto& l = *doc.lemma2;
        os << "\nauxiliary function (n = " << l.n << "): c = (";
        for (std::size_t i = 0; i < l.aux.c.size(); ++i) os << (i ? ", " : "") << l.aux.c[i].get_str();
        os << ")\n  F = " << l.aux.F.to_string() << "\n  v_p(F) = " << l.aux.achieved_valuation
           << ", h(F) = " << l.aux.height_F << " <= " << l.decomposition.theorem_rhs
           << ", wronskian nonzero: " << (l.wronskian_nonzero ? "yes" : "no") << "\n";
        for (std::size_t i = 0; i < l.decomposition.cases.size(); ++i) {
            const auto& c = l.decomposition.cases[i];
            os << "  S" << i + 1 << ": points " << c.points << ", height of F " << c.height_F << " <= " << c.allowance
               << (c.holds ? "" : "  FAILED") << "\n";
        }
    }
    std::size_t prop_ok = 0;
    for (const auto& p : doc.prop_checks) prop_ok += p.check.holds ? 1 : 0;
    os << "\nderivative valuation checks: " << prop_ok << "/" << doc.prop_checks.size() << " hold\n";
    if (doc.rr_check)
        os << "genus-0 identity: " << doc.rr_check->lhs_sum << " = " << doc.rr_check->rhs
           << (doc.rr_check->holds ? "" : "  FAILED") << "\n";
    os << (doc.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace gapbound
