#include "gapbound/cli.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "gapbound/campaign.hpp"
#include "gapbound/error.hpp"
#include "gapbound/expression.hpp"
#include "gapbound/report.hpp"

namespace gapbound {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitInternal = 3;

struct Options {
    std::string f;
    std::vector<std::string> x;
    std::string point = "0";
    long order = 64;
    bool normalize = false;
    long n = 0;
    long k = 0;
    long m = 0;
    long trials = 100;
    long max_degree = 6;
    long coeff_bound = 10;
    std::uint64_t seed = 1;
    std::string format = "text";
};

std::string parameter(const Options& o) { return o.x.empty() ? std::string("t") : o.x.front(); }

void add_format(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
}

void add_single(CLI::App* cmd, Options& o, bool needs_f) {
    auto* f = cmd->add_option("--f", o.f, "Rational function of t");
    if (needs_f) f->required();
    cmd->add_option("--x", o.x, "Local parameter at the point (default t)")->expected(1);
    cmd->add_option("--point", o.point, "Expansion point, a rational number");
    cmd->add_option("--order", o.order, "Truncation order N")->check(CLI::PositiveNumber);
    cmd->add_flag("--normalize", o.normalize, "Analyze f / x^v_p(f) when v_p(f) != 0");
    add_format(cmd, o);
}

int status(bool pass) { return pass ? kExitOk : kExitInternal; }

int cmd_expand(const Options& o, std::ostream& out) {
    RationalFunction f = parse_rational_function(o.f);
    TruncatedSeries s = TruncatedSeries::zero(0);
    std::string variable = "t";
    if (!o.x.empty()) {
        s = expand_in_x(f, parse_rational_function(o.x.front()), parse_rational_constant(o.point), o.order);
        variable = "x";
    } else if (o.point == "inf") {
        s = expand_at(f, ExpansionPoint::infinity(), o.order);
        variable = "(1/t)";
    } else {
        BigRational p = parse_rational_constant(o.point);
        s = expand_at(f, ExpansionPoint::at(p), o.order);
        if (!p.is_zero()) variable = "(t - " + p.to_string() + ")";
    }
    const ReportFormat fmt = parse_report_format(o.format);
    if (fmt == ReportFormat::Json) {
        nlohmann::ordered_json j;
        j["version"] = kToolVersion;
        j["f"] = f.to_string();
        j["variable"] = variable;
        j["point"] = o.point == "inf" && o.x.empty() ? std::string("inf") : to_fraction_string(parse_rational_constant(o.point));
        j["series"] = to_json(s);
        out << j.dump(2) << "\n";
    } else if (fmt == ReportFormat::Csv) {
        out << "exponent,coefficient\n";
        for (std::size_t i = 0; i < s.coefficients().size(); ++i)
            if (!s.coefficients()[i].is_zero())
                out << s.offset() + static_cast<long>(i) << ',' << to_fraction_string(s.coefficients()[i]) << '\n';
    } else {
        out << "f = " << f.to_string() << "\nin powers of " << variable << ":\n" << s.to_string(variable) << "\n";
    }
    return kExitOk;
}

int cmd_gaps(const Options& o, std::ostream& out) {
    BoundReport b = verify_bounds(parse_rational_function(o.f), parse_rational_function(parameter(o)),
                                  parse_rational_constant(o.point), o.order, o.normalize);
    const ReportFormat fmt = parse_report_format(o.format);
    if (fmt == ReportFormat::Json) {
        nlohmann::ordered_json j;
        j["version"] = kToolVersion;
        j["f"] = b.f.to_string();
        j["x"] = b.x.to_string();
        j["point"] = to_fraction_string(b.point);
        j["order"] = b.order;
        j["gaps"] = to_json(b.gaps);
        out << j.dump(2) << "\n";
    } else if (fmt == ReportFormat::Csv) {
        out << "n,a_n,alpha_n\n";
        for (std::size_t i = 0; i < b.gaps.size(); ++i)
            out << i << ',' << b.gaps.exponents[i] << ',' << to_fraction_string(b.gaps.coefficients[i]) << '\n';
    } else {
        out << "gap sequence of " << b.analyzed.to_string() << " in x = " << b.x.to_string() << " below order "
            << b.order << ":\n";
        for (std::size_t i = 0; i < b.gaps.size(); ++i)
            out << "  a_" << i << " = " << b.gaps.exponents[i] << "  alpha = " << b.gaps.coefficients[i] << "\n";
        if (b.gaps.terminated) out << "  (expansion terminates)\n";
    }
    return kExitOk;
}

int cmd_report(const Options& o, long lemma_n, unsigned prop_n, std::ostream& out) {
    ReportDocument doc = build_report(parse_rational_function(o.f), parse_rational_function(parameter(o)),
                                      parse_rational_constant(o.point), o.order, o.normalize, lemma_n, prop_n);
    out << render(doc, parse_report_format(o.format));
    return status(doc.pass);
}

int cmd_rr(const Options& o, std::ostream& out) {
    RationalFunction x = parse_rational_function(parameter(o));
    RiemannRochCheck rr = check_rr_identity(x);
    const ReportFormat fmt = parse_report_format(o.format);
    if (fmt == ReportFormat::Json) {
        nlohmann::ordered_json j;
        j["version"] = kToolVersion;
        j["x"] = x.to_string();
        j["rr_check"] = {{"lhs", rr.lhs_sum}, {"rhs", rr.rhs}, {"holds", rr.holds}};
        j["pass"] = rr.holds;
        out << j.dump(2) << "\n";
    } else if (fmt == ReportFormat::Csv) {
        out << "x,lhs,rhs,holds\n\"" << x.to_string() << "\"," << rr.lhs_sum << ',' << rr.rhs << ','
            << (rr.holds ? "true" : "false") << '\n';
    } else {
        out << "x = " << x.to_string() << "\ngenus-0 identity: " << rr.lhs_sum << " = " << rr.rhs << "\n"
            << (rr.holds ? "PASS" : "FAIL") << "\n";
    }
    return status(rr.holds);
}

int cmd_extremal_family(const Options& o, std::ostream& out) {
    if (o.k <= o.m || o.m < 1) throw Error(ErrorKind::ConfigError, "paper-example requires k > m >= 1");
    const std::string f = "1 + t^" + std::to_string(o.k) + "/(1 - t^" + std::to_string(o.m) + ")";
    ReportDocument doc = build_report(parse_rational_function(f), RationalFunction::variable(), BigRational(0),
                                      o.order, false, 0, 0);
    const BoundReport& b = doc.bounds;
    bool exact = b.inputs.height_f == o.k && b.inputs.s1_count == o.m && b.is_sharp();
    for (const auto& r : b.rows) exact = exact && r.a_n == o.k + (r.n - 1) * o.m;
    doc.pass = doc.pass && exact;
    out << render(doc, parse_report_format(o.format));
    return status(doc.pass);
}

int cmd_campaign(const Options& o, std::ostream& out) {
    CampaignConfig cfg;
    cfg.trials = o.trials;
    cfg.max_degree = o.max_degree;
    cfg.coeff_bound = o.coeff_bound;
    cfg.order = o.order;
    if (!o.x.empty()) cfg.parameter_family = o.x;
    cfg.seed = o.seed;
    cfg.point = parse_rational_constant(o.point);
    if (!o.f.empty()) cfg.forced_f = o.f;
    if (o.n > 0) cfg.lemma_n = o.n;
    CampaignResult r = run_campaign(cfg);
    out << render(r, parse_report_format(o.format));
    return status(r.pass());
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of gap bounds for Taylor expansions of rational functions", "gapbound"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));
    Options o;

    auto* expand = app.add_subcommand("expand", "Print the truncated expansion of f");
    add_single(expand, o, true);
    auto* gaps = app.add_subcommand("gaps", "Print the gap sequence of f in x");
    add_single(gaps, o, true);
    auto* theorem = app.add_subcommand("check-theorem", "Check a_n against the theorem bound");
    add_single(theorem, o, true);
    auto* corollary = app.add_subcommand("check-corollary", "Check a_n against both bounds");
    add_single(corollary, o, true);
    auto* lemma = app.add_subcommand("lemma2", "Build the auxiliary function F for a given n");
    add_single(lemma, o, true);
    lemma->add_option("--n", o.n, "Number of gap terms")->required()->check(CLI::PositiveNumber);
    auto* prop = app.add_subcommand("check-prop", "Check derivative valuations at every place");
    add_single(prop, o, true);
    prop->add_option("--n", o.n, "Highest derivative order (default 3)")->check(CLI::NonNegativeNumber);
    auto* rr = app.add_subcommand("check-rr", "Check the genus-0 ramification identity for x");
    rr->add_option("--x", o.x, "Nonconstant rational function")->expected(1);
    add_format(rr, o);
    auto* example = app.add_subcommand("paper-example", "Check equality for f = 1 + t^k/(1 - t^m), x = t");
    example->add_option("--k", o.k)->required();
    example->add_option("--m", o.m)->required();
    example->add_option("--order", o.order, "Truncation order N")->check(CLI::PositiveNumber);
    add_format(example, o);
    auto* campaign = app.add_subcommand("campaign", "Randomized verification campaign");
    campaign->add_option("--f", o.f, "Use this f in every trial instead of random draws");
    campaign->add_option("--x", o.x, "Parameter family (repeatable, default t)");
    campaign->add_option("--point", o.point, "Expansion point");
    campaign->add_option("--order", o.order, "Truncation order N");
    campaign->add_option("--n", o.n, "Auxiliary-function checks up to this n (default 3)");
    campaign->add_option("--trials", o.trials);
    campaign->add_option("--max-degree", o.max_degree);
    campaign->add_option("--coeff-bound", o.coeff_bound);
    campaign->add_option("--seed", o.seed);
    add_format(campaign, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (expand->parsed()) return cmd_expand(o, out);
        if (gaps->parsed()) return cmd_gaps(o, out);
        if (theorem->parsed() || corollary->parsed()) return cmd_report(o, 0, 0, out);
        if (lemma->parsed()) return cmd_report(o, o.n, 0, out);
        if (prop->parsed()) return cmd_report(o, 0, static_cast<unsigned>(prop->count("--n") ? o.n : 3), out);
        if (rr->parsed()) return cmd_rr(o, out);
        if (example->parsed()) return cmd_extremal_family(o, out);
        if (campaign->parsed()) return cmd_campaign(o, out);
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (category(e.kind())) {
            case ErrorCategory::Usage: return kExitUsage;
            case ErrorCategory::Precondition: return kExitPrecondition;
            case ErrorCategory::Internal: return kExitInternal;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_command(args, out, err);
}

}  // namespace gapbound
