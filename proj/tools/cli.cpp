#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "abacus/calculus.hpp"
#include "abacus/fock.hpp"
#include "abacus/json_io.hpp"
#include "abacus/symfun.hpp"
#include "abacus/verify.hpp"

namespace abacus::cli {

Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = trim(text.substr(1, text.size() - 2));
    if (text.empty()) return {};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        const auto field = trim(text.substr(pos, comma - pos));
        int value = 0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || value < 0)
            throw UsageError("malformed partition literal: '" + std::string(text) + "'");
        if (!parts.empty() && parts.back() < value)
            throw UsageError("partition literal is not weakly decreasing: '" + std::string(text) + "'");
        parts.push_back(value);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

namespace {

StrictPartition parse_strict(std::string_view text) {
    auto p = parse_partition(text);
    if (!p.is_strict()) throw UsageError("expected a strict partition, got '" + std::string(text) + "'");
    return StrictPartition(std::move(p));
}

std::string bracket(const Partition& p) { return "(" + p.to_string() + ")"; }

std::string bracket_all(const std::vector<Partition>& ps) {
    std::string out = "(";
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) out += ',';
        out += bracket(ps[i]);
    }
    return out + ")";
}

std::string sign_text(Sign s) { return s.negative() ? "-1" : "1"; }

std::string render_rows(int runners, int rows, const std::function<bool(int)>& is_bead) {
    std::vector<std::string> cells;
    std::size_t width = 0;
    for (int pos = 0; pos < runners * rows; ++pos) {
        cells.push_back(is_bead(pos) ? "(" + std::to_string(pos) + ")" : std::to_string(pos));
        width = std::max(width, cells.back().size());
    }
    std::ostringstream os;
    for (int row = 0; row < rows; ++row) {
        for (int k = 0; k < runners; ++k) {
            const auto& cell = cells[static_cast<std::size_t>(row * runners + k)];
            if (k) os << ' ';
            os << std::string(width - cell.size(), ' ') << cell;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace

std::string render_abacus(const Partition& lambda, int r) {
    const Abacus ab(lambda, r);
    const int rows = ab.beads().front() / r + 1;
    return render_rows(r, rows, [&](int pos) { return ab.has_bead(pos); });
}

std::string render_bar_abacus(const StrictPartition& lambda) {
    const int rows = lambda.empty() ? 1 : lambda[0] / 3 + 1;
    const auto parts = lambda.parts();
    return render_rows(3, rows, [&](int pos) { return std::find(parts.begin(), parts.end(), pos) != parts.end(); });
}

namespace {

struct Options {
    int r = 2;
    std::string lambda;
    std::string rect;
    int ell = 1;
    int m = 0;
    int n = 0;
    int i = 0;
    int times = 1;
    std::string op = "f";
    std::string basis;
    std::string route = "substitution";
    bool json = false;
    bool analytic = false;
    bool bar = false;
    bool small_p = false;
    bool reduce = false;
    bool staircase = false;
    bool sequential = false;
    int max_ell = 6;
    std::optional<int> max_degree;
    std::string out_path;
};

int degree_cap(const Options& o) {
    if (o.max_degree) return *o.max_degree;
    return config_from_environment().max_degree;
}

void guard_degree(const Options& o, int degree) {
    if (degree > degree_cap(o))
        throw UsageError("conversion of degree " + std::to_string(degree) + " exceeds --max-degree " +
                         std::to_string(degree_cap(o)));
}

template <class Tag>
void emit(std::ostream& out, const PartitionSeries<Tag>& f, bool json) {
    out << (json ? to_json(f) : to_string(f)) << '\n';
}

int emit_reports(const Options& o, const std::vector<VerificationReport>& reports, std::ostream& out) {
    const bool all_ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.verified; });
    const std::string json = reports.size() == 1 ? report_to_json(reports.front()) : reports_to_json(reports);
    if (o.json) out << json << '\n';
    else
        for (const auto& r : reports) out << to_string(r) << '\n';
    if (!o.out_path.empty()) {
        std::ofstream file(o.out_path);
        if (!file) throw UsageError("cannot write " + o.out_path);
        file << json << '\n';
    }
    return all_ok ? ok : identity_failed;
}

std::pair<int, int> parse_rect(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--rect expects n,m");
    try {
        const int n = std::stoi(text.substr(0, comma));
        const int m = std::stoi(text.substr(comma + 1));
        if (n < 0 || m < 0) throw UsageError("--rect dimensions must be non-negative");
        return {n, m};
    } catch (const std::logic_error&) {
        throw UsageError("--rect expects n,m");
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"abacus-sf: cores, quotients, signs and symmetric-function identities"};
    app.require_subcommand(1, 1);
    Options o;
    std::function<int()> action;

    auto add_lambda = [&](CLI::App* sub, bool required = true) {
        auto* opt = sub->add_option("--lambda,-l", o.lambda, "partition, comma separated (e.g. 7,7,4,4,1)");
        if (required) opt->required();
    };
    auto add_r = [&](CLI::App* sub) { sub->add_option("--r,-r", o.r, "modulus")->required(); };

    auto* core = app.add_subcommand("core", "r-core of a partition");
    add_r(core);
    add_lambda(core);
    core->callback([&] { action = [&] { out << r_core(parse_partition(o.lambda), o.r).to_string() << '\n'; return int(ok); }; });

    auto* quotient = app.add_subcommand("quotient", "r-quotient of a partition");
    add_r(quotient);
    add_lambda(quotient);
    quotient->callback([&] {
        action = [&] { out << bracket_all(r_quotient(parse_partition(o.lambda), o.r)) << '\n'; return int(ok); };
    });

    auto* sign = app.add_subcommand("sign", "r-sign of a partition");
    add_r(sign);
    add_lambda(sign);
    sign->callback([&] { action = [&] { out << sign_text(r_sign(parse_partition(o.lambda), o.r)) << '\n'; return int(ok); }; });

    auto* barcore = app.add_subcommand("barcore", "3-bar core of a strict partition");
    add_lambda(barcore);
    barcore->callback([&] { action = [&] { out << bar_core3(parse_strict(o.lambda)).to_string() << '\n'; return int(ok); }; });

    auto* barquotient = app.add_subcommand("barquotient", "3-bar quotient of a strict partition");
    add_lambda(barquotient);
    barquotient->callback([&] {
        action = [&] {
            const auto q = bar_quotient3(parse_strict(o.lambda));
            out << bracket_all({q.zero.partition(), q.one}) << '\n';
            return int(ok);
        };
    });

    auto* barsign = app.add_subcommand("barsign", "3-bar sign of a strict partition");
    add_lambda(barsign);
    barsign->callback([&] { action = [&] { out << sign_text(bar_sign3(parse_strict(o.lambda))) << '\n'; return int(ok); }; });

    auto* dbl = app.add_subcommand("double", "double D(lambda) of a strict partition");
    add_lambda(dbl);
    dbl->callback([&] { action = [&] { out << double_of(parse_strict(o.lambda)).to_string() << '\n'; return int(ok); }; });

    auto* abacus_cmd = app.add_subcommand("abacus", "draw the r-abacus (or the 3-bar abacus with --bar)");
    abacus_cmd->add_option("--r,-r", o.r, "modulus");
    add_lambda(abacus_cmd);
    abacus_cmd->add_flag("--bar", o.bar, "3-bar abacus of a strict partition");
    abacus_cmd->callback([&] {
        action = [&] {
            out << (o.bar ? render_bar_abacus(parse_strict(o.lambda)) : render_abacus(parse_partition(o.lambda), o.r));
            return int(ok);
        };
    });

    auto* schur = app.add_subcommand("schur", "Schur function in the power-sum basis");
    add_lambda(schur);
    schur->add_flag("--json", o.json, "JSON output");
    schur->callback([&] {
        action = [&] {
            const auto lambda = parse_partition(o.lambda);
            guard_degree(o, lambda.weight());
            emit(out, schur_p(lambda), o.json);
            return int(ok);
        };
    });

    auto* qfn = app.add_subcommand("qfn", "Schur Q-function (or P with --p) in the power-sum basis");
    add_lambda(qfn);
    qfn->add_flag("--p", o.small_p, "P-function instead of Q");
    qfn->add_flag("--reduce", o.reduce, "kill p_k for 3 | k");
    qfn->add_flag("--json", o.json, "JSON output");
    qfn->callback([&] {
        action = [&] {
            const auto lambda = parse_strict(o.lambda);
            auto f = o.small_p ? schur_small_p(lambda) : schur_q(lambda);
            if (o.reduce) f = reduce_mod3(f);
            emit(out, f, o.json);
            return int(ok);
        };
    });

    auto* pleth = app.add_subcommand("plethysm", "p_r o S_lambda in the Schur basis");
    add_r(pleth);
    add_lambda(pleth, false);
    pleth->add_option("--rect", o.rect, "rectangle n,m (n rows of length m)");
    pleth->add_option("--route", o.route, "substitution | quotients | balanced")
        ->check(CLI::IsMember({"substitution", "quotients", "balanced"}));
    pleth->add_option("--basis", o.basis, "s (Schur, default) or p (power sums)")->check(CLI::IsMember({"s", "p"}));
    pleth->add_flag("--json", o.json, "JSON output");
    pleth->callback([&] {
        action = [&] {
            if (o.lambda.empty() == o.rect.empty()) throw UsageError("give exactly one of --lambda or --rect");
            Partition lambda;
            int n = 0, m = 0;
            if (!o.rect.empty()) {
                std::tie(n, m) = parse_rect(o.rect);
                lambda = rectangle(n, m);
            } else {
                lambda = parse_partition(o.lambda);
            }
            if (o.basis == "p") {
                emit(out, plethysm_pr(schur_p(lambda), o.r), o.json);
                return int(ok);
            }
            guard_degree(o, o.r * lambda.weight());
            SchurExpansion s;
            if (o.route == "quotients") s = plethysm_via_quotients(lambda, o.r);
            else if (o.route == "balanced") {
                if (o.rect.empty() || o.r != 2) throw UsageError("--route balanced needs --r 2 and --rect");
                s = plethysm_rect_balanced(n, m);
            } else
                s = to_schur_basis(plethysm_pr(schur_p(lambda), o.r));
            emit(out, s, o.json);
            return int(ok);
        };
    });

    auto* phi = app.add_subcommand("phi", "image of P_lambda under the principal-to-homogeneous map");
    add_lambda(phi);
    phi->callback([&] {
        action = [&] {
            const auto image = leidwanger_phi(FockElement::basis(parse_strict(o.lambda)));
            out << to_string(image) << '\n';
            for (const auto& [key, c] : image.terms()) out << "degree " << homogeneous_degree(key) << '\n';
            return int(ok);
        };
    });

    auto* apply = app.add_subcommand("apply", "apply e_i or f_i to P_lambda");
    add_lambda(apply);
    apply->add_option("--op", o.op, "e or f")->check(CLI::IsMember({"e", "f"}));
    apply->add_option("--i", o.i, "node residue")->check(CLI::IsMember({0, 1}));
    apply->add_option("--times", o.times, "number of applications")->check(CLI::NonNegativeNumber);
    apply->callback([&] {
        action = [&] {
            auto v = FockElement::basis(parse_strict(o.lambda));
            for (int t = 0; t < o.times; ++t) v = o.op == "e" ? apply_e(v, o.i) : apply_f(v, o.i);
            out << to_string(v) << '\n';
            return int(ok);
        };
    });

    auto* family = app.add_subcommand("family", "strict partitions obtained by adding m 1-nodes to Lambda_ell");
    family->add_option("--ell", o.ell, "ell")->required();
    family->add_option("--m", o.m, "number of 1-nodes")->required();
    family->add_flag("--staircase", o.staircase, "use the staircase Delta_ell with the checkerboard filling");
    family->callback([&] {
        action = [&] {
            const auto members = o.staircase ? add_one_nodes(staircase_delta(o.ell), o.m, NodeFilling::a11, false)
                                             : add_one_nodes(lambda_ell(o.ell), o.m, NodeFilling::a22, true);
            for (const auto& mu : members) {
                out << mu.to_string();
                if (!o.staircase) {
                    const StrictPartition s(mu);
                    out << "  sign " << sign_text(bar_sign3(s)) << "  quotient " << bracket(bar_quotient3(s).one);
                }
                out << '\n';
            }
            return int(ok);
        };
    });

    auto* verify = app.add_subcommand("verify", "machine-check an identity");
    verify->require_subcommand(1, 1);
    verify->add_flag("--json", o.json, "JSON report")->trigger_on_parse();
    verify->add_option("--out", o.out_path, "also write the JSON report to this path");
    verify->add_option("--max-degree", o.max_degree, "cap for analytic power-sum comparisons (default 18)");
    verify->fallthrough();

    auto verb = [&](const char* name, const char* help, std::function<std::vector<VerificationReport>()> body) {
        auto* sub = verify->add_subcommand(name, help);
        sub->fallthrough();
        sub->callback([&, body] { action = [&, body] { return emit_reports(o, body(), out); }; });
        return sub;
    };
    auto cfg = [&] {
        auto c = config_from_environment();
        if (o.max_degree) c.max_degree = *o.max_degree;
        return c;
    };

    auto* v_main = verb("main", "signed bar-quotient sum over F_1^m(Lambda_ell) vs p_2 o S_rectangle", [&] {
        const auto c = cfg();
        if (o.analytic && 2 * o.m * (o.ell - o.m) > c.max_degree)
            throw UsageError("analytic degree " + std::to_string(2 * o.m * (o.ell - o.m)) + " exceeds --max-degree " +
                             std::to_string(c.max_degree));
        return std::vector{verify_main(o.ell, o.m, o.analytic, c)};
    });
    v_main->add_option("--ell", o.ell)->required();
    v_main->add_option("--m", o.m)->required();
    v_main->add_flag("--analytic", o.analytic, "also compare in the power-sum basis");

    auto* v_a11 = verb("a11", "staircase family vs S_rectangle(u - v)", [&] {
        return std::vector{verify_a11(o.ell, o.m, o.analytic)};
    });
    v_a11->add_option("--ell", o.ell)->required();
    v_a11->add_option("--m", o.m)->required();
    v_a11->add_flag("--analytic", o.analytic, "also check complementarity of every quotient");

    auto* v_pleth = verb("plethysm", "quotient formula for p_r o S_lambda", [&] {
        const auto lambda = parse_partition(o.lambda);
        if (o.r * lambda.weight() > cfg().max_degree) throw UsageError("degree exceeds --max-degree");
        return std::vector{verify_plethysm_quotient(lambda, o.r)};
    });
    v_pleth->add_option("--r,-r", o.r)->required();
    v_pleth->add_option("--lambda,-l", o.lambda)->required();

    auto* v_bal = verb("balanced", "balanced-partition formula for p_2 o S_rectangle", [&] {
        return std::vector{verify_balanced_plethysm(o.n, o.m, cfg())};
    });
    v_bal->add_option("--n", o.n)->required();
    v_bal->add_option("--m", o.m)->required();

    auto* v_qb = verb("quotient-balance", "bar quotients of F_1^m(Lambda_ell) are W(ell-m, m)", [&] {
        return std::vector{verify_quotient_balance(o.ell, o.m)};
    });
    v_qb->add_option("--ell", o.ell)->required();
    v_qb->add_option("--m", o.m)->required();

    auto* v_sign = verb("sign-lemma", "2-sign of balanced partitions", [&] {
        return std::vector{verify_sign_lemma(o.n, o.m)};
    });
    v_sign->add_option("--n", o.n)->required();
    v_sign->add_option("--m", o.m)->required();

    auto* v_ag = verb("alpha-gamma", "alpha/gamma sequences over F_1^m(Lambda_ell)", [&] {
        return std::vector{verify_alpha_gamma(o.ell, o.m)};
    });
    v_ag->add_option("--ell", o.ell)->required();
    v_ag->add_option("--m", o.m)->required();

    auto* v_lw = verb("littlewood", "omega_r specialization of S_mu", [&] {
        const auto mu = parse_partition(o.lambda);
        if (mu.weight() > cfg().max_degree) throw UsageError("degree exceeds --max-degree");
        return std::vector{verify_littlewood(mu, o.r)};
    });
    v_lw->add_option("--r,-r", o.r)->required();
    v_lw->add_option("--lambda,-l", o.lambda)->required();

    auto* v_all = verb("all", "every verifier over its range", [&] { return verify_all(o.max_ell, cfg(), !o.sequential); });
    v_all->add_option("--max-ell", o.max_ell, "largest ell (default 6)");
    v_all->add_flag("--sequential", o.sequential, "run cases on one thread");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return usage_error;
    }

    if (!action) {
        err << "no command given\n";
        return usage_error;
    }
    try {
        return action();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
        err << "out of range: " << e.what() << '\n';
    }
    return usage_error;
}

}  // namespace abacus::cli
