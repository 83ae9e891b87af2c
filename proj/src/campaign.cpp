#include "gapbound/campaign.hpp"

#include <sstream>

#include "gapbound/error.hpp"
#include "gapbound/expression.hpp"

namespace gapbound {

using nlohmann::ordered_json;

void validate(const CampaignConfig& cfg) {
    auto fail = [](const std::string& what) { throw Error(ErrorKind::ConfigError, what); };
    if (cfg.trials < 1) fail("trials must be at least 1");
    if (cfg.max_degree < 1) fail("max degree must be at least 1");
    if (cfg.coeff_bound < 1) fail("coefficient bound must be at least 1");
    if (cfg.order <= cfg.max_degree) fail("order must exceed the max degree");
    if (cfg.parameter_family.empty()) fail("parameter family is empty");
    if (cfg.lemma_n < 0) fail("lemma n must be non-negative");
    for (const auto& text : cfg.parameter_family) {
        RationalFunction x = parse_rational_function(text);
        if (x.is_constant() || valuation(x, PlaceCluster::at(cfg.point)) != 1)
            fail("'" + text + "' is not a local parameter at t = " + cfg.point.to_string());
    }
    if (cfg.forced_f) parse_rational_function(*cfg.forced_f);
}

namespace {

Polynomial draw_polynomial(std::mt19937_64& rng, long max_degree, long bound) {
    std::uniform_int_distribution<long> degree(0, max_degree);
    std::uniform_int_distribution<long> coeff(-bound, bound);
    const long d = degree(rng);
    std::vector<BigRational> c(static_cast<std::size_t>(d) + 1);
    for (auto& v : c) v = coeff(rng);
    while (c.back().is_zero()) c.back() = coeff(rng);
    return Polynomial(std::move(c));
}

}  // namespace

RationalFunction draw_rational_function(std::mt19937_64& rng, long max_degree, long coeff_bound) {
    Polynomial num = draw_polynomial(rng, max_degree, coeff_bound);
    Polynomial den = draw_polynomial(rng, max_degree, coeff_bound);
    return RationalFunction(num, den);
}

std::optional<std::string> degeneracy(const RationalFunction& f, const std::vector<RationalFunction>& family,
                                      const BigRational& p) {
    if (f.is_constant()) return "constant";
    if (valuation(f, PlaceCluster::at(p)) != 0) return "v_p(f) != 0";
    for (const auto& x : family)
        if (polynomial_in_x_check(f, x, p)) return "polynomial in " + x.to_string();
    return std::nullopt;
}

bool CampaignResult::pass() const {
    if (!failures.empty()) return false;
    for (const auto& fam : families)
        if (!fam.rr.holds) return false;
    return true;
}

CampaignResult run_campaign(const CampaignConfig& cfg) {
    validate(cfg);
    CampaignResult result;
    result.config = cfg;
    std::vector<RationalFunction> family;
    for (const auto& text : cfg.parameter_family) {
        family.push_back(parse_rational_function(text));
        FamilyStats stats;
        stats.x = family.back().to_string();
        stats.rr = check_rr_identity(family.back());
        result.families.push_back(std::move(stats));
    }
    std::optional<RationalFunction> forced;
    if (cfg.forced_f) forced = parse_rational_function(*cfg.forced_f);

    std::mt19937_64 rng(cfg.seed);
    for (long trial = 0; trial < cfg.trials; ++trial) {
        RationalFunction f;
        if (forced) {
            f = *forced;
        } else {
            while (true) {
                f = draw_rational_function(rng, cfg.max_degree, cfg.coeff_bound);
                if (!degeneracy(f, family, cfg.point)) break;
                ++result.redraws;
            }
        }
        for (std::size_t i = 0; i < family.size(); ++i) {
            FamilyStats& stats = result.families[i];
            try {
                const long lemma_n = cfg.lemma_n;
                ReportDocument doc = build_report(f, family[i], cfg.point, cfg.order, false, 0, cfg.prop_n);
                const BoundReport& b = doc.bounds;
                for (long n = 1; n <= std::min(lemma_n, b.max_n()); ++n) {
                    GapMatrix m = build_gap_matrix(b.gaps, n);
                    AuxiliaryFunction aux = assemble_F(b.analyzed, b.x, b.point, m, nullspace_vector(m));
                    if (!wronskian_nonvanishing(m))
                        throw Error(ErrorKind::VerificationFailure, "vanishing Wronskian at n = " + std::to_string(n));
                    HeightDecomposition dec = check_height_decomposition(aux, b.analyzed, b.x, n);
                    if (!dec.holds || aux.height_F < aux.achieved_valuation)
                        throw Error(ErrorKind::VerificationFailure,
                                    "height decomposition fails at n = " + std::to_string(n));
                    ++stats.lemma_checks;
                }
                if (!doc.pass) throw Error(ErrorKind::VerificationFailure, "lemma-lab self-check failed");
                ++stats.verified;
                stats.rows += static_cast<long>(b.rows.size());
                stats.prop_checks += static_cast<long>(doc.prop_checks.size());
                if (b.is_sharp()) ++stats.sharp_trials;
                if (auto s = b.min_slack()) {
                    stats.min_slack = stats.min_slack ? std::min(*stats.min_slack, *s) : *s;
                    long mx = 0;
                    for (const auto& r : b.rows) mx = std::max(mx, r.slack);
                    stats.max_slack = stats.max_slack ? std::max(*stats.max_slack, mx) : mx;
                }
            } catch (const Error& e) {
                result.failures.push_back({trial, f.to_string(), stats.x, e.what()});
            }
        }
    }
    return result;
}

ordered_json to_json(const CampaignResult& r) {
    const auto& c = r.config;
    ordered_json j;
    j["version"] = kToolVersion;
    j["config"] = {{"trials", c.trials},
                   {"max_degree", c.max_degree},
                   {"coeff_bound", c.coeff_bound},
                   {"order", c.order},
                   {"parameter_family", c.parameter_family},
                   {"seed", c.seed},
                   {"point", to_fraction_string(c.point)},
                   {"forced_f", c.forced_f ? ordered_json(*c.forced_f) : ordered_json(nullptr)},
                   {"lemma_n", c.lemma_n},
                   {"prop_n", c.prop_n}};
    ordered_json fams = ordered_json::array();
    for (const auto& f : r.families) {
        fams.push_back({{"x", f.x},
                        {"verified", f.verified},
                        {"rows", f.rows},
                        {"min_slack", f.min_slack ? ordered_json(*f.min_slack) : ordered_json(nullptr)},
                        {"max_slack", f.max_slack ? ordered_json(*f.max_slack) : ordered_json(nullptr)},
                        {"sharp_trials", f.sharp_trials},
                        {"is_sharp", f.verified > 0 && f.sharp_trials == f.verified},
                        {"lemma_checks", f.lemma_checks},
                        {"prop_checks", f.prop_checks},
                        {"rr_check", {{"lhs", f.rr.lhs_sum}, {"rhs", f.rr.rhs}, {"holds", f.rr.holds}}}});
    }
    j["families"] = fams;
    j["redraws"] = r.redraws;
    ordered_json fails = ordered_json::array();
    for (const auto& f : r.failures) fails.push_back({{"trial", f.trial}, {"f", f.f}, {"x", f.x}, {"error", f.error}});
    j["failures"] = fails;
    j["pass"] = r.pass();
    return j;
}

std::string render(const CampaignResult& r, ReportFormat format) {
    if (format == ReportFormat::Json) return to_json(r).dump(2) + "\n";
    std::ostringstream os;
    if (format == ReportFormat::Csv) {
        os << "x,verified,rows,min_slack,max_slack,sharp_trials,lemma_checks,prop_checks\n";
        for (const auto& f : r.families) {
            os << '"' << f.x << "\"," << f.verified << ',' << f.rows << ','
               << (f.min_slack ? std::to_string(*f.min_slack) : "") << ','
               << (f.max_slack ? std::to_string(*f.max_slack) : "") << ',' << f.sharp_trials << ','
               << f.lemma_checks << ',' << f.prop_checks << '\n';
        }
        return os.str();
    }
    os << "gapbound " << kToolVersion << " campaign: " << r.config.trials << " trials, seed " << r.config.seed
       << ", order " << r.config.order << ", degrees <= " << r.config.max_degree << ", |coeff| <= "
       << r.config.coeff_bound << "\n";
    for (const auto& f : r.families) {
        os << "  x = " << f.x << ": " << f.verified << " verified, " << f.rows << " rows, min slack "
           << (f.min_slack ? std::to_string(*f.min_slack) : "-") << ", max slack "
           << (f.max_slack ? std::to_string(*f.max_slack) : "-") << ", sharp " << f.sharp_trials << ", lemma "
           << f.lemma_checks << ", prop " << f.prop_checks << ", genus-0 identity " << f.rr.lhs_sum << " = "
           << f.rr.rhs << "\n";
    }
    os << "  redraws: " << r.redraws << "\n";
    for (const auto& f : r.failures) os << "  FAILURE trial " << f.trial << " x = " << f.x << ": " << f.error << "\n";
    os << (r.pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace gapbound
