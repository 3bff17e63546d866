#include "grouporder/cli.hpp"

#include <CLI11.hpp>
#include <optional>
#include <ostream>

#include "grouporder/jsonio.hpp"
#include "grouporder/magnus.hpp"
#include "grouporder/sampling.hpp"
#include "grouporder/selftest.hpp"

namespace grouporder {

namespace {

struct Config {
    int rank = 2;
    int radius = 3;
    std::uint64_t seed = kDefaultSeed;
    int truncation_cap = 0; // 0 = adaptive default
    std::string output = "text";

    bool json() const { return output == "json"; }
};

std::vector<Word> parse_gens(const std::string& text, int rank) {
    std::vector<Word> gens;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? comma : comma - start);
        if (piece.find_first_not_of(" \t") != std::string::npos) {
            gens.push_back(parse_word(piece, rank));
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return gens;
}

void print_json_or(std::ostream& out, const Config& cfg, const Json& j,
                   const std::string& text) {
    if (cfg.json()) {
        out << j.dump() << '\n';
    } else {
        out << text << '\n';
    }
}

void print_words(std::ostream& out, const Config& cfg, const std::vector<Word>& words) {
    if (cfg.json()) {
        Json j = Json::array();
        for (const Word& w : words) j.push_back(format_word(w));
        out << j.dump() << '\n';
    } else {
        for (const Word& w : words) out << format_word(w) << '\n';
    }
}

SIndex parse_sindex(const Config& cfg, const std::string& s_gens, const std::string& s_words) {
    if (!s_words.empty()) {
        return SIndex::explicit_finite(cfg.rank, parse_gens(s_words, cfg.rank));
    }
    return SIndex::cone_intersection(fold(cfg.rank, parse_gens(s_gens, cfg.rank)));
}

int run_selftest_command(const Config& cfg, std::ostream& out) {
    auto results = run_selftest({cfg.seed});
    bool all_ok = true;
    for (const auto& r : results) {
        all_ok = all_ok && r.ok;
        out << (r.ok ? "[PASS] " : "[FAIL] ");
        out << (r.id < 10 ? "0" : "") << r.id << ' ' << r.name << " (" << r.checks
            << " checks)\n";
        for (const auto& f : r.failures) out << "       " << f << '\n';
    }
    out << "selftest: " << (all_ok ? "all suites passed" : "FAILURES PRESENT") << '\n';
    return all_ok ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact bi-order, subgroup, central-extension and reduction toolkit for free groups"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--rank", cfg.rank, "ambient free-group rank")->check(CLI::Range(1, 4));
    app.add_option("--radius", cfg.radius, "ball radius")->check(CLI::Range(0, kDefaultRadiusCap));
    app.add_option("--seed", cfg.seed, "seed for all sampled suites");
    app.add_option("--truncation-cap", cfg.truncation_cap,
                   "override the adaptive truncation ceiling")
        ->check(CLI::PositiveNumber);
    app.add_option("--output", cfg.output, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string word_arg, word_arg2, gens_arg, gens_arg2, h_arg, g_arg;
    std::string s_gens_arg, s_words_arg, x_json, y_json, constraints_arg;
    int k_arg = 2;
    int k_max_arg = 4;
    int conj_radius = -1;

    // order
    auto* order = app.add_subcommand("order", "Magnus bi-order of the free group");
    auto* order_sign = order->add_subcommand("sign", "sign of a word");
    order_sign->add_option("word", word_arg, "word")->required();
    auto* order_compare = order->add_subcommand("compare", "compare two words");
    order_compare->add_option("u", word_arg, "left word")->required();
    order_compare->add_option("v", word_arg2, "right word")->required();

    // ball
    auto* ball_cmd = app.add_subcommand("ball", "reduced words of length <= radius, shortlex");
    ball_cmd->add_flag("--positive", "only the positive cone");

    // subgroup
    auto* subgroup = app.add_subcommand("subgroup", "Stallings graphs of f.g. subgroups");
    auto* sg_fold = subgroup->add_subcommand("fold", "folded core graph of <gens>");
    sg_fold->add_option("--gens", gens_arg, "comma-separated generator words")->required();
    auto* sg_contains = subgroup->add_subcommand("contains", "membership test");
    sg_contains->add_option("--gens", gens_arg, "generators")->required();
    sg_contains->add_option("word", word_arg, "word to test")->required();
    auto* sg_equal = subgroup->add_subcommand("equal", "subgroup equality");
    sg_equal->add_option("--gens", gens_arg, "generators")->required();
    sg_equal->add_option("--gens2", gens_arg2, "second generators")->required();
    auto* sg_conj = subgroup->add_subcommand("conjugate", "graph of h G h^-1");
    sg_conj->add_option("--gens", gens_arg, "generators")->required();
    sg_conj->add_option("--h", h_arg, "conjugator")->required();
    auto* sg_witness = subgroup->add_subcommand("witness", "conjugacy witness search");
    sg_witness->add_option("--gens", gens_arg, "generators")->required();
    sg_witness->add_option("--gens2", gens_arg2, "second generators")->required();

    // cone
    auto* cone = app.add_subcommand("cone", "finite-ball cone validators on the Magnus cone");
    auto* cone_rel = cone->add_subcommand("check-rel", "relative-cone conditions on a ball");
    auto* cone_bi = cone->add_subcommand("check-bi", "bi-cone conditions on a ball");
    cone_bi->add_option("--conj-radius", conj_radius, "conjugator ball radius");

    // hgp
    auto* hgp = app.add_subcommand("hgp", "arithmetic in H(G, P)");
    auto* hgp_mul = hgp->add_subcommand("mul", "product of two elements");
    hgp_mul->add_option("x", x_json, "element JSON")->required();
    hgp_mul->add_option("y", y_json, "element JSON")->required();
    auto* hgp_inv = hgp->add_subcommand("inv", "inverse of an element");
    hgp_inv->add_option("x", x_json, "element JSON")->required();
    auto* hgp_theta = hgp->add_subcommand("theta", "evaluate a window word at the generators");
    hgp_theta->add_option("word", word_arg, "word over x1..x_{k+1}")->required();
    hgp_theta->add_option("--k", k_arg, "rank of G");
    auto* hgp_comm = hgp->add_subcommand("comm", "commutator [(0,b_g),(0,b_h)]");
    hgp_comm->add_option("g", word_arg, "first index word")->required();
    hgp_comm->add_option("h", word_arg2, "second index word")->required();

    // quotient
    auto* quotient = app.add_subcommand("quotient", "the bi-orderable quotient H/A_S");
    auto* q_nf = quotient->add_subcommand("normal-form", "coset normal form");
    q_nf->add_option("x", x_json, "element JSON")->required();
    q_nf->add_option("--s-gens", s_gens_arg, "S = P n <gens>");
    q_nf->add_option("--s-words", s_words_arg, "explicit finite S (positive words)");
    auto* q_sign = quotient->add_subcommand("sign", "sign of a coset in the quotient bi-order");
    q_sign->add_option("x", x_json, "element JSON")->required();
    q_sign->add_option("--s-gens", s_gens_arg, "S = P n <gens>");
    q_sign->add_option("--s-words", s_words_arg, "explicit finite S (positive words)");

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "the weak reduction G -> N_G");
    auto* rd_member = reduce_cmd->add_subcommand("member", "membership in N_G");
    rd_member->add_option("--gens", gens_arg, "generators of G")->required();
    rd_member->add_option("word", word_arg, "window word")->required();
    rd_member->add_option("--k", k_arg, "rank of G");
    auto* rd_pre = reduce_cmd->add_subcommand("preimage", "preimage of the subbasic set U_g");
    rd_pre->add_option("--g", g_arg, "window word")->required();
    rd_pre->add_option("--k", k_arg, "rank of G");
    auto* rd_iso = reduce_cmd->add_subcommand("iso-witness", "isomorphism witness for conjugates");
    rd_iso->add_option("--gens", gens_arg, "generators of G1")->required();
    rd_iso->add_option("--gens2", gens_arg2, "generators of G2")->required();
    rd_iso->add_option("--h", h_arg, "conjugator")->required();
    auto* rd_inj = reduce_cmd->add_subcommand("inject-witness", "separating word for N_G1, N_G2");
    rd_inj->add_option("--gens", gens_arg, "generators of G1")->required();
    rd_inj->add_option("--gens2", gens_arg2, "generators of G2")->required();

    // demo
    auto* demo = app.add_subcommand("demo", "the convergence and perturbation constructions");
    auto* demo_conv = demo->add_subcommand("convergence", "membership table for the kernels N_k");
    demo_conv->add_option("--k-max", k_max_arg, "largest k (also the window)")
        ->check(CLI::Range(1, 6));
    auto* demo_perturb = demo->add_subcommand("perturb", "isolation-breaking perturbation of N_G");
    demo_perturb->add_option("--gens", gens_arg, "generators of G")->required();
    demo_perturb->add_option("--constraints", constraints_arg, "comma-separated member words");
    demo_perturb->add_option("--k", k_arg, "rank of G");

    auto* selftest_cmd = app.add_subcommand("selftest", "run the full invariant suite");

    std::vector<std::string> cli_args(args.rbegin(), args.rend()); // CLI11 wants reversed
    try {
        app.parse(cli_args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (cfg.truncation_cap > 0) {
            set_truncation_cap_override(cfg.truncation_cap);
        } else {
            set_truncation_cap_override(std::nullopt);
        }

        if (order_sign->parsed()) {
            Sign s = magnus_sign(parse_word(word_arg, cfg.rank));
            print_json_or(out, cfg, Json{{"sign", to_string(s)}}, to_string(s));
            return 0;
        }
        if (order_compare->parsed()) {
            Ordering o =
                magnus_compare(parse_word(word_arg, cfg.rank), parse_word(word_arg2, cfg.rank));
            print_json_or(out, cfg, Json{{"compare", to_string(o)}}, to_string(o));
            return 0;
        }
        if (ball_cmd->parsed()) {
            bool positive = ball_cmd->count("--positive") > 0;
            print_words(out, cfg,
                        positive ? positive_ball(cfg.rank, cfg.radius)
                                 : ball(cfg.rank, cfg.radius));
            return 0;
        }
        if (sg_fold->parsed()) {
            Json j = to_json(fold(cfg.rank, parse_gens(gens_arg, cfg.rank)));
            out << j.dump() << '\n';
            return 0;
        }
        if (sg_contains->parsed()) {
            bool in = contains(fold(cfg.rank, parse_gens(gens_arg, cfg.rank)),
                               parse_word(word_arg, cfg.rank));
            print_json_or(out, cfg, Json{{"contains", in}}, in ? "true" : "false");
            return 0;
        }
        if (sg_equal->parsed()) {
            bool eq = equal(fold(cfg.rank, parse_gens(gens_arg, cfg.rank)),
                            fold(cfg.rank, parse_gens(gens_arg2, cfg.rank)));
            print_json_or(out, cfg, Json{{"equal", eq}}, eq ? "true" : "false");
            return 0;
        }
        if (sg_conj->parsed()) {
            Json j = to_json(conjugate_subgroup(fold(cfg.rank, parse_gens(gens_arg, cfg.rank)),
                                                parse_word(h_arg, cfg.rank)));
            out << j.dump() << '\n';
            return 0;
        }
        if (sg_witness->parsed()) {
            auto h = conjugacy_witness(fold(cfg.rank, parse_gens(gens_arg, cfg.rank)),
                                       fold(cfg.rank, parse_gens(gens_arg2, cfg.rank)),
                                       cfg.radius);
            if (h.has_value()) {
                print_json_or(out, cfg, Json{{"witness", format_word(*h)}}, format_word(*h));
            } else {
                print_json_or(out, cfg, Json{{"witness", nullptr}}, "none");
            }
            return 0;
        }
        if (cone_rel->parsed() || cone_bi->parsed()) {
            ConeOracle<Word> oracle{[](const Word& w) {
                                        switch (magnus_sign(w)) {
                                        case Sign::Positive: return ConeClass::Pos;
                                        case Sign::Negative: return ConeClass::Neg;
                                        default: return ConeClass::Sub;
                                        }
                                    },
                                    "Magnus cone"};
            GroupOps<Word> ops{[](const Word& u, const Word& v) { return multiply(u, v); },
                               [](const Word& w) { return invert(w); }, Word::identity(cfg.rank),
                               [](const Word& w) { return format_word(w); }};
            std::vector<Word> elems = ball(cfg.rank, cfg.radius);
            BallReport report;
            if (cone_rel->parsed()) {
                report = check_relative_cone(oracle, ops, elems);
            } else {
                int cr = conj_radius >= 0 ? conj_radius : std::max(0, cfg.radius - 1);
                report = check_bicone(oracle, ops, elems, ball(cfg.rank, cr));
            }
            out << to_json(report).dump() << '\n';
            return report.ok ? 0 : 1;
        }
        if (hgp_mul->parsed()) {
            HElement x = h_from_json(Json::parse(x_json), cfg.rank);
            HElement y = h_from_json(Json::parse(y_json), cfg.rank);
            out << to_json(h_mul(x, y)).dump() << '\n';
            return 0;
        }
        if (hgp_inv->parsed()) {
            HElement x = h_from_json(Json::parse(x_json), cfg.rank);
            out << to_json(h_inv(x)).dump() << '\n';
            return 0;
        }
        if (hgp_theta->parsed()) {
            out << to_json(theta(parse_word(word_arg, k_arg + 1), k_arg)).dump() << '\n';
            return 0;
        }
        if (hgp_comm->parsed()) {
            HElement x{{AVector(cfg.rank), BVector::basis(parse_word(word_arg, cfg.rank))},
                       Word::identity(cfg.rank)};
            HElement y{{AVector(cfg.rank), BVector::basis(parse_word(word_arg2, cfg.rank))},
                       Word::identity(cfg.rank)};
            HElement comm = h_mul(h_mul(h_mul(x, y), h_inv(x)), h_inv(y));
            out << to_json(comm).dump() << '\n';
            return 0;
        }
        if (q_nf->parsed()) {
            SIndex s = parse_sindex(cfg, s_gens_arg, s_words_arg);
            HElement x = h_from_json(Json::parse(x_json), cfg.rank);
            out << to_json(as_mod(x, s)).dump() << '\n';
            return 0;
        }
        if (q_sign->parsed()) {
            SIndex s = parse_sindex(cfg, s_gens_arg, s_words_arg);
            HElement x = h_from_json(Json::parse(x_json), cfg.rank);
            Sign sign = hq_sign(x, s);
            print_json_or(out, cfg, Json{{"sign", to_string(sign)}}, to_string(sign));
            return 0;
        }
        if (rd_member->parsed()) {
            MarkedGroup n = reduce_map(fold(k_arg, parse_gens(gens_arg, k_arg)), k_arg);
            bool in = n.member_windowed(parse_word(word_arg, n.window));
            print_json_or(out, cfg, Json{{"member", in}}, in ? "true" : "false");
            return 0;
        }
        if (rd_pre->parsed()) {
            PreimageResult pre = preimage_query(parse_word(g_arg, k_arg + 1), k_arg);
            out << to_json(pre).dump() << '\n';
            return 0;
        }
        if (rd_iso->parsed()) {
            IsoWitnessReport report =
                iso_witness(fold(cfg.rank, parse_gens(gens_arg, cfg.rank)),
                            fold(cfg.rank, parse_gens(gens_arg2, cfg.rank)),
                            parse_word(h_arg, cfg.rank), cfg.seed);
            Json j;
            j["ok"] = report.ok;
            j["checks"] = report.checks;
            j["failures"] = report.failures;
            print_json_or(out, cfg, j,
                          report.ok ? "pass (" + std::to_string(report.checks) + " checks)"
                                    : "FAIL");
            return report.ok ? 0 : 1;
        }
        if (rd_inj->parsed()) {
            auto w = injectivity_witness(fold(cfg.rank, parse_gens(gens_arg, cfg.rank)),
                                         fold(cfg.rank, parse_gens(gens_arg2, cfg.rank)),
                                         cfg.radius);
            if (w.has_value()) {
                print_json_or(out, cfg, Json{{"witness", format_word(*w)}}, format_word(*w));
            } else {
                print_json_or(out, cfg, Json{{"witness", nullptr}}, "none");
            }
            return 0;
        }
        if (demo_conv->parsed()) {
            out << convergence_csv(convergence_demo(k_max_arg, cfg.radius));
            return 0;
        }
        if (demo_perturb->parsed()) {
            MarkedGroup n = reduce_map(fold(k_arg, parse_gens(gens_arg, k_arg)), k_arg);
            std::vector<Word> constraints = parse_gens(constraints_arg, n.window);
            MarkedGroup k = perturb(n, constraints);
            Json j;
            j["ell"] = k.window;
            Json agree = Json::array();
            for (const Word& c : constraints) {
                agree.push_back(Json{{"word", format_word(c)},
                                     {"agrees", k.member_windowed(c) == n.member_windowed(c)}});
            }
            j["constraints"] = std::move(agree);
            Word x_ell(k.window, {make_letter(k.window, +1)});
            j["differs_at"] = format_word(x_ell);
            j["k_member_at_xell"] = k.member(x_ell);
            out << j.dump() << '\n';
            return 0;
        }
        if (selftest_cmd->parsed()) {
            return run_selftest_command(cfg, out);
        }
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const Json::parse_error& e) {
        err << "error: JsonSyntax: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace grouporder
