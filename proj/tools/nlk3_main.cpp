// nlk3 — exact Noether-Lefschetz numbers of 1-parameter K3 families, the
// reduced BPS tables, and the mirror-symmetry cross-checks.

#include <nlk3/bridge.hpp>
#include <nlk3/lattice.hpp>
#include <nlk3/mirror.hpp>
#include <nlk3/modforms.hpp>
#include <nlk3/picrank.hpp>
#include <nlk3/serialize.hpp>
#include <nlk3/verify.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

using namespace nlk3;

std::string family_for(std::int64_t l, int family) {
    switch (l) {
        case 2: return "l2-sextic";
        case 4: return "quartic-pencil";
        case 6: return family == 2 ? "l6-family2" : "l6-family1";
        case 8: return "l8-quadrics";
        default: throw std::invalid_argument("theta: l must be one of 2, 4, 6, 8");
    }
}

void print_series_text(const FracSeries& s, std::size_t limit = 32) {
    std::size_t shown = 0;
    for (const auto& [k, v] : s.terms()) {
        if (shown++ >= limit) {
            std::cout << " + ...";
            break;
        }
        if (shown > 1) std::cout << " + ";
        std::cout << rat_str(v) << "*q^(" << rat_str(s.exponent_at(k)) << ")";
    }
    if (s.terms().empty()) std::cout << "0";
    std::cout << "\n";
}

int cmd_theta(std::int64_t l, int family, int trunc, bool as_json) {
    const Family& fam = preset_family(family_for(l, family));
    FitResult fr = fit(fam.l, fam.constraints, trunc);
    FracSeries scalar = scalarize(fr.form);
    // a few NL values with nonnegative discriminant
    Json nl = Json::array();
    for (std::int64_t d = 1; d <= 4; ++d)
        for (std::int64_t h = 0; h <= h_top(l, d); ++h) {
            NLValue v = nl_lookup(fr.form, h, d);
            nl.push_back(Json::array(
                {h, d, rat_str(v.value), LatticePair{l, h, d}.disc()}));
        }
    if (as_json) {
        Json out{{"family", fam.name}, {"l", fam.l}};
        Json coeffs = Json::array();
        for (const auto& c : fr.coefficients) coeffs.push_back(rat_str(c));
        out["coefficients"] = coeffs;
        out["form"] = vvform_json(fr.form);
        out["scalar"] = series_json(scalar)["terms"];
        out["nl"] = nl;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "family: " << fam.name << " (l = " << fam.l << ")\n";
    std::cout << "fitted coefficients:";
    for (const auto& c : fr.coefficients) std::cout << " " << rat_str(c);
    std::cout << "\n";
    for (int r = 0; r < fr.form.orbit_count(); ++r) {
        std::cout << "component " << r << ": ";
        print_series_text(fr.form.components[static_cast<std::size_t>(r)], 8);
    }
    std::cout << "scalar: ";
    print_series_text(scalar, 12);
    std::cout << "NL values (h, d, NL, disc):\n";
    for (const auto& row : nl)
        std::cout << "  " << row[0] << " " << row[1] << " " << row[2].get<std::string>() << " "
                  << row[3] << "\n";
    return 0;
}

int cmd_nl_quartic(int dmax, bool doubled, const std::string& format) {
    int trunc = (dmax * dmax + 8) / 8 + 2;
    FitResult fr = fit(4, preset_family("quartic-pencil").constraints, trunc);
    NLTable table = nl_from_form(fr.form, dmax, doubled ? Rat(2) : Rat(1),
                                 NLProvenance::FittedModular);
    if (format == "csv") {
        std::cout << nl_table_csv(table);
    } else if (format == "json") {
        Json rows = Json::array();
        for (const auto& [hd, v] : table.values) {
            LatticePair lp{4, hd.first, hd.second};
            rows.push_back(Json::array({hd.first, hd.second, lp.disc(), lp.coset(), rat_str(v)}));
        }
        std::cout << Json{{"l", 4}, {"doubled", doubled}, {"columns", "h,d,disc,coset,value"},
                          {"rows", rows}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "h d disc coset value\n";
        for (const auto& [hd, v] : table.values) {
            LatticePair lp{4, hd.first, hd.second};
            std::cout << hd.first << " " << hd.second << " " << lp.disc() << " " << lp.coset()
                      << " " << rat_str(v) << "\n";
        }
    }
    return 0;
}

int cmd_gw(int dmax, int d2max, bool as_json) {
    Potential pot = potential(dmax, d2max);
    BPSTable bps = fiber_bps(dmax, d2max);
    if (as_json) {
        Json gw = Json::array(), n = Json::array();
        for (int d = 1; d <= dmax; ++d) {
            gw.push_back(Json::array({d, rat_str(pot.instanton.at(d, 0))}));
            n.push_back(Json::array({d, rat_str(bps.values.at({0, d}))}));
        }
        Json warn = Json::array();
        for (const auto& [g, d] : bps.non_integral) warn.push_back(Json::array({g, d}));
        std::cout << Json{{"N0", gw}, {"n0", n}, {"non_integral", warn}}.dump(2) << "\n";
        return 0;
    }
    std::cout << "d N_{0,d} n_{0,d}\n";
    for (int d = 1; d <= dmax; ++d)
        std::cout << d << " " << rat_str(pot.instanton.at(d, 0)) << " "
                  << rat_str(bps.values.at({0, d})) << "\n";
    for (const auto& [g, d] : bps.non_integral)
        std::cout << "warning: non-integral BPS value at (g,d) = (" << g << "," << d << ")\n";
    return 0;
}

int cmd_bps_kkv(int gmax, int hmax, bool as_json) {
    RTable t = kkv_table(gmax, hmax);
    if (as_json) {
        Json rows = Json::array();
        for (int g = 0; g <= gmax; ++g) {
            Json row = Json::array();
            for (int h = 0; h <= hmax; ++h) row.push_back(h >= g ? t.r(g, h).get_str() : "");
            rows.push_back(row);
        }
        std::cout << Json{{"gmax", gmax}, {"hmax", hmax}, {"rows", rows}}.dump(2) << "\n";
        return 0;
    }
    std::cout << "r_{g,h}";
    for (int h = 0; h <= hmax; ++h) std::cout << "\th=" << h;
    std::cout << "\n";
    for (int g = 0; g <= gmax; ++g) {
        std::cout << "g=" << g;
        for (int h = 0; h <= hmax; ++h) std::cout << "\t" << (h >= g ? t.r(g, h).get_str() : "");
        std::cout << "\n";
    }
    return 0;
}

int cmd_predict(int genus, int dmax, bool single, bool as_json) {
    int trunc = (dmax * dmax + 8) / 8 + 2;
    FitResult fr = fit(4, preset_family("quartic-pencil").constraints, trunc);
    NLTable nl = nl_from_form(fr.form, dmax, single ? Rat(1) : Rat(2),
                              NLProvenance::FittedModular);
    int hmax = static_cast<int>(h_top(4, dmax));
    RTable r = kkv_table(std::min(genus, hmax), hmax);
    Json rows = Json::array();
    for (int d = 1; d <= dmax; ++d) {
        Rat n = theorem1_genus(genus, nl, r, d);
        rows.push_back(Json::array({d, rat_str(n)}));
    }
    if (as_json) {
        std::cout << Json{{"genus", genus}, {"family", single ? "quartic pencil" : "doubled pencil"},
                          {"n", rows}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "n_{" << genus << ",d} for the " << (single ? "quartic" : "doubled")
              << " pencil\n";
    for (const auto& row : rows)
        std::cout << "d=" << row[0] << ": " << row[1].get<std::string>() << "\n";
    return 0;
}

int cmd_lattice_mu(std::int64_t l, std::int64_t h, std::int64_t d,
                   const std::vector<std::int64_t>& gram_entries, bool as_json) {
    if (gram_entries.size() != 4 || gram_entries[1] != gram_entries[2])
        throw std::invalid_argument("lattice mu: --gram expects a,b,b,c (symmetric)");
    Gram gram{gram_entries[0], gram_entries[1], gram_entries[3]};
    LatticePair lp{l, h, d};
    auto sols = mu_solutions(l, h, d, gram);
    Json solist = Json::array();
    std::map<std::int64_t, int> refined;
    for (const auto& [x, y] : sols) {
        solist.push_back(Json::array({x, y}));
        ++refined[std::gcd(std::abs(x), std::abs(y))];
    }
    if (as_json) {
        Json ref = Json::array();
        for (const auto& [m, cnt] : refined) ref.push_back(Json::array({m, cnt}));
        std::cout << Json{{"mu", sols.size()},   {"disc", lp.disc()}, {"coset", lp.coset()},
                          {"solutions", solist}, {"refined", ref}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "mu = " << sols.size() << " (disc " << lp.disc() << ", coset " << lp.coset()
              << ")\n";
    for (const auto& [x, y] : sols)
        std::cout << "  beta = (" << x << ", " << y << "), divisibility "
                  << std::gcd(std::abs(x), std::abs(y)) << "\n";
    return 0;
}

int cmd_picrank(std::int64_t l, std::int64_t sweep, bool as_json) {
    std::vector<std::int64_t> ls;
    if (sweep > 0)
        for (std::int64_t k = 2; k <= sweep; k += 2) ls.push_back(k);
    else
        ls.push_back(l);
    Json rows = Json::array();
    for (std::int64_t k : ls) {
        BruinierResult r = bruinier_rank_full(k);
        if (r.residual >= 1e-6)
            throw std::runtime_error("picrank: value is not near an integer at l=" +
                                     std::to_string(k));
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", r.value);
        rows.push_back(Json{{"l", k}, {"rank", r.rank}, {"value", buf}});
    }
    if (as_json) {
        std::cout << rows.dump(2) << "\n";
        return 0;
    }
    for (const auto& row : rows)
        std::cout << "l=" << row["l"] << ": " << row["rank"] << "  (formula value "
                  << row["value"].get<std::string>() << ")\n";
    return 0;
}

int cmd_verify(const std::string& suite) {
    bool all_pass = true;
    for (const CheckResult& r : run_suite(suite)) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.criterion << " — " << r.name;
        if (!r.pass) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Noether-Lefschetz / BPS / mirror-symmetry calculator for K3 pencils"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file; flags override");
    app.failure_message(CLI::FailureMessage::help);

    // theta
    std::int64_t theta_l = 4;
    int theta_family = 1, theta_trunc = 30;
    bool theta_json = false;
    CLI::App* theta = app.add_subcommand("theta", "fit a level-l generating form");
    theta->add_option("--l", theta_l, "polarization degree (2, 4, 6, 8)")->required();
    theta->add_option("--family", theta_family, "family preset for l=6 (1 or 2)");
    theta->add_option("--trunc", theta_trunc, "truncation order");
    theta->add_flag("--json", theta_json, "emit JSON");

    // nl
    CLI::App* nl = app.add_subcommand("nl", "Noether-Lefschetz tables");
    CLI::App* nlq = nl->add_subcommand("quartic", "quartic-pencil NL numbers");
    int nl_dmax = 6;
    bool nl_doubled = false, nl_json = false, nl_csv = false;
    nlq->add_option("--dmax", nl_dmax, "maximal degree d");
    nlq->add_flag("--doubled", nl_doubled, "doubled pencil normalization");
    nlq->add_flag("--json", nl_json, "emit JSON");
    nlq->add_flag("--csv", nl_csv, "emit CSV");

    // gw
    int gw_dmax = 6, gw_d2max = 2;
    bool gw_json = false;
    CLI::App* gw = app.add_subcommand("gw", "mirror-symmetry invariants of the doubled pencil");
    gw->add_option("--dmax", gw_dmax, "maximal fiber degree");
    gw->add_option("--d2max", gw_d2max, "base-degree truncation");
    gw->add_flag("--json", gw_json, "emit JSON");

    // bps
    CLI::App* bps = app.add_subcommand("bps", "reduced K3 BPS tables");
    CLI::App* kkv = bps->add_subcommand("kkv", "the r_{g,h} table");
    int kkv_gmax = 4, kkv_hmax = 4;
    bool kkv_json = false;
    kkv->add_option("--gmax", kkv_gmax, "maximal genus");
    kkv->add_option("--hmax", kkv_hmax, "maximal h");
    kkv->add_flag("--json", kkv_json, "emit JSON");

    // predict
    int pr_genus = 1, pr_dmax = 6;
    bool pr_single = false, pr_json = false;
    CLI::App* predict = app.add_subcommand("predict", "BPS numbers from NL numbers");
    predict->add_option("--genus", pr_genus, "genus g");
    predict->add_option("--dmax", pr_dmax, "maximal degree d");
    predict->add_flag("--single", pr_single, "single Lefschetz pencil normalization");
    predict->add_flag("--json", pr_json, "emit JSON");

    // lattice
    CLI::App* lattice = app.add_subcommand("lattice", "rank-2 lattice counts");
    CLI::App* mu_cmd = lattice->add_subcommand("mu", "multiplicity of (h,d) in a Gram matrix");
    std::int64_t mu_l = 4, mu_h = 0, mu_d = 0;
    std::vector<std::int64_t> mu_gram;
    bool mu_json = false;
    mu_cmd->set_help_flag("--help", "print help");  // frees --h for the option below
    mu_cmd->add_option("--l", mu_l, "polarization degree")->required();
    mu_cmd->add_option("--h", mu_h, "h")->required();
    mu_cmd->add_option("--d", mu_d, "d")->required();
    mu_cmd->add_option("--gram", mu_gram, "a,b,c,d entries of the Gram matrix (row-major)")
        ->required()
        ->delimiter(',');
    mu_cmd->add_flag("--json", mu_json, "emit JSON");

    // picrank
    std::int64_t pic_l = 4, pic_sweep = 0;
    bool pic_json = false;
    CLI::App* pic = app.add_subcommand("picrank", "Noether-Lefschetz Picard rank of the moduli space");
    pic->add_option("--l", pic_l, "polarization degree (even)");
    pic->add_option("--sweep", pic_sweep, "evaluate all even l up to this bound");
    pic->add_flag("--json", pic_json, "emit JSON");

    // verify
    std::string suite = "all";
    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--suite", suite,
                       "all | bpsk3 | modforms | bridge | mirror | picrank | qseries | lattice");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (theta->parsed()) return cmd_theta(theta_l, theta_family, theta_trunc, theta_json);
        if (nlq->parsed())
            return cmd_nl_quartic(nl_dmax, nl_doubled, nl_csv ? "csv" : (nl_json ? "json" : "text"));
        if (gw->parsed()) return cmd_gw(gw_dmax, gw_d2max, gw_json);
        if (kkv->parsed()) return cmd_bps_kkv(kkv_gmax, kkv_hmax, kkv_json);
        if (predict->parsed()) return cmd_predict(pr_genus, pr_dmax, pr_single, pr_json);
        if (mu_cmd->parsed()) return cmd_lattice_mu(mu_l, mu_h, mu_d, mu_gram, mu_json);
        if (pic->parsed()) return cmd_picrank(pic_l, pic_sweep, pic_json);
        if (verify->parsed()) return cmd_verify(suite);
        std::cerr << "no subcommand given\n" << app.help() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
