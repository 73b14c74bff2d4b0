// bmcover: construct the exchange-move braid families, compute the homology
// monodromy and reduced Alexander polynomials of their double covering links,
// and sweep the printed closed forms against word-product oracles.

#include "bmcover/alexander.hpp"
#include "bmcover/cover.hpp"
#include "bmcover/json_io.hpp"
#include "bmcover/parallel.hpp"
#include "bmcover/sw_calc.hpp"
#include "bmcover/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

using namespace bmcover;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Output {
    Json params = Json::object();
    Json result = Json::object();
    Json discrepancies = Json::array();
    std::string text; // --format text rendering
    int exit_code = 0;
};

struct Common {
    std::string format = "json";
    std::string out_file;
    int jobs = 0;
};

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", common.out_file, "also write the JSON report to FILE");
    cmd->add_option("--jobs", common.jobs, "parallel sweep width (0 = runtime default)");
}

Json envelope(const std::vector<std::string>& args, const std::vector<std::string>& command,
              const Output& out) {
    Json j;
    j["tool"] = "bmcover";
    j["version"] = kVersion;
    j["command"] = command;
    j["args"] = args;
    j["params"] = out.params;
    j["result"] = out.result;
    j["discrepancies"] = out.discrepancies;
    j["exit"] = out.exit_code;
    return j;
}

int emit(const std::vector<std::string>& args, const std::vector<std::string>& command,
         const Common& common, const Output& out) {
    const Json report = envelope(args, command, out);
    const std::string bytes = report.dump(2) + "\n";
    if (common.format == "text" && !out.text.empty())
        std::cout << out.text;
    else
        std::cout << bytes;
    if (!common.out_file.empty()) {
        std::ofstream f(common.out_file, std::ios::binary);
        f << bytes;
    }
    return out.exit_code;
}

BraidWord word_from_flags(const std::optional<std::string>& word, std::optional<int> strands,
                          std::optional<int> m, std::optional<long long> k, bool covering) {
    if (word) {
        if (!strands) throw DomainError(Errc::bad_index, "--word needs --strands");
        return parse_braid_word(*word, *strands);
    }
    if (!m) throw DomainError(Errc::bad_index, "need --word/--strands or --m/--k");
    const int strand_count = covering ? 2 * *m : *m;
    return b_family(strand_count, k.value_or(0));
}

std::string poly_text(const LaurentPoly& p, const char* label) {
    std::ostringstream os;
    os << label << ": " << p.str() << "\n";
    return os.str();
}

std::string checks_text(const std::vector<VerifyCheck>& checks) {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "PASS" : (c.tier == VerifyCheck::Tier::required ? "FAIL" : "WARN"))
           << " [" << c.tier_name() << "] " << c.name << ": " << c.summary << "\n";
    }
    os << "required failures: " << (any_required_failure(checks) ? "yes" : "no")
       << ", expected mismatches: " << expected_mismatch_count(checks) << "\n";
    return os.str();
}

Output run_verify_command(const std::string& which, const VerifyOptions& opt) {
    Output out;
    out.params["set"] = which;
    out.params["m_max"] = opt.m_max;
    out.params["k_max"] = opt.k_max;
    const std::vector<VerifyCheck> checks = run_verify(which, opt);
    Json jchecks = Json::array();
    for (const auto& c : checks) {
        Json jc;
        jc["name"] = c.name;
        jc["tier"] = c.tier_name();
        jc["pass"] = c.pass;
        jc["summary"] = c.summary;
        if (!c.payload.is_null()) jc["detail"] = c.payload;
        jchecks.push_back(std::move(jc));
        if (!c.pass)
            out.discrepancies.push_back(std::string(c.tier_name()) + " " + c.name + ": " +
                                        c.summary);
    }
    out.result["checks"] = std::move(jchecks);
    out.result["required_failures"] = any_required_failure(checks);
    out.result["expected_mismatches"] = expected_mismatch_count(checks);
    out.exit_code = any_required_failure(checks) ? 4 : 0;
    out.text = checks_text(checks);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exchange-move braid families and their double covering links"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::vector<std::string> args(argv + 1, argv + argc);

    Common common;
    std::vector<std::string> command;
    std::function<Output()> action;

    // shared option storage
    std::optional<std::string> word;
    std::optional<int> strands;
    std::optional<int> m_opt;
    std::optional<long long> k_opt;
    std::optional<int> n_opt;
    long long i_val = 0, j_val = 0;
    int artin_index = 0;
    std::string family;
    CompareRanges ranges;
    bool sw_zero = false;
    VerifyOptions vopt;

    auto bind_word = [&](CLI::App* cmd, bool with_family) {
        cmd->add_option("--word", word, "braid word in the DSL");
        cmd->add_option("--strands", strands, "strand count for --word");
        if (with_family) {
            cmd->add_option("--m", m_opt, "family index m");
            cmd->add_option("--k", k_opt, "family index k (default 0)");
        }
    };

    // ----- braid ------------------------------------------------------------
    CLI::App* braid = app.add_subcommand("braid", "braid words and the braid families");
    braid->require_subcommand(1);
    {
        CLI::App* c = braid->add_subcommand("parse", "parse a braid word");
        c->add_option("--word", word, "braid word in the DSL")->required();
        c->add_option("--strands", strands, "strand count")->required();
        add_common(c, common);
        c->callback([&] {
            command = {"braid", "parse"};
            action = [&] {
                Output out;
                const BraidWord w = parse_braid_word(*word, *strands);
                out.params["word"] = *word;
                out.params["strands"] = *strands;
                out.result = to_json(w);
                out.text = "word: " + format_braid_word(w) + "\nstrands: " +
                           std::to_string(w.strands) + "\nlength: " + std::to_string(w.length()) +
                           "\n";
                return out;
            };
        });
    }
    {
        CLI::App* c = braid->add_subcommand("family", "emit the braid B_{m,k} (m strands)");
        c->add_option("--m", m_opt, "strand count m >= 4")->required();
        c->add_option("--k", k_opt, "exchange-move count k >= 0");
        add_common(c, common);
        c->callback([&] {
            command = {"braid", "family"};
            action = [&] {
                Output out;
                const BraidWord w = b_family(*m_opt, k_opt.value_or(0));
                out.params["m"] = *m_opt;
                out.params["k"] = k_opt.value_or(0);
                out.result = to_json(w);
                out.text = format_braid_word(w) + "\n";
                return out;
            };
        });
    }
    {
        CLI::App* c = braid->add_subcommand("info", "permutation, components, exponent sum");
        bind_word(c, true);
        add_common(c, common);
        c->callback([&] {
            command = {"braid", "info"};
            action = [&] {
                Output out;
                const BraidWord w = word_from_flags(word, strands, m_opt, k_opt, false);
                out.params["word"] = format_braid_word(w);
                out.params["strands"] = w.strands;
                const StrandPermutation perm = underlying_permutation(w);
                out.result["word"] = to_json(w);
                out.result["permutation"] = to_json(perm);
                out.result["components"] = closure_component_count(w);
                out.result["exponent_sum"] = exponent_sum(w);
                out.result["length"] = w.length();
                std::ostringstream os;
                os << "word: " << format_braid_word(w) << "\nstrands: " << w.strands
                   << "\nlength: " << w.length() << "\nexponent sum: " << exponent_sum(w)
                   << "\ncomponents: " << closure_component_count(w) << "\npermutation:";
                for (int img : perm.images) os << " " << img;
                os << "\n";
                out.text = os.str();
                return out;
            };
        });
    }
    {
        CLI::App* c = braid->add_subcommand(
            "artin", "free-group images of the generators and the pi1 presentation");
        bind_word(c, true);
        c->add_option("--i", artin_index, "only this generator index");
        add_common(c, common);
        c->callback([&] {
            command = {"braid", "artin"};
            action = [&] {
                Output out;
                const BraidWord w = word_from_flags(word, strands, m_opt, k_opt, false);
                out.params["word"] = format_braid_word(w);
                out.params["strands"] = w.strands;
                auto token = [](int l) {
                    std::string t = "mu" + std::to_string(l < 0 ? -l : l);
                    if (l < 0) t += "^-1";
                    return t;
                };
                Json images = Json::array();
                std::ostringstream os;
                const int lo = artin_index ? artin_index : 1;
                const int hi = artin_index ? artin_index : w.strands;
                for (int i = lo; i <= hi; ++i) {
                    const FreeWord img = artin_action(w, i);
                    Json ji;
                    ji["i"] = i;
                    Json toks = Json::array();
                    os << "mu" << i << " -> ";
                    for (std::size_t t = 0; t < img.letters.size(); ++t) {
                        toks.push_back(token(img.letters[t]));
                        os << (t ? "." : "") << token(img.letters[t]);
                    }
                    if (img.letters.empty()) os << "1";
                    os << "\n";
                    ji["image"] = std::move(toks);
                    images.push_back(std::move(ji));
                }
                out.result["images"] = std::move(images);
                if (!artin_index) out.result["presentation"] = to_json(pi1_presentation(w));
                out.text = os.str();
                return out;
            };
        });
    }

    // ----- cover ------------------------------------------------------------
    CLI::App* cover = app.add_subcommand("cover", "homology monodromy of the covering link");
    cover->require_subcommand(1);
    {
        CLI::App* c = cover->add_subcommand("monodromy",
                                            "twist-product matrix of a word or of B_{2m,k}");
        bind_word(c, true);
        add_common(c, common);
        c->callback([&] {
            command = {"cover", "monodromy"};
            action = [&] {
                Output out;
                const BraidWord w = word_from_flags(word, strands, m_opt, k_opt, true);
                out.params["word"] = format_braid_word(w);
                out.params["strands"] = w.strands;
                const IntMatrix omega = homology_monodromy(w);
                out.result = to_json(omega);
                out.text = matrix_text(omega);
                return out;
            };
        });
    }
    {
        CLI::App* c = cover->add_subcommand("closed-form", "printed closed-form matrices");
        c->add_option("--family", family, "gamma|phi|psi|omega")->required();
        c->add_option("--n", n_opt, "strand count n (gamma)");
        c->add_option("--m", m_opt, "half strand count m (phi/psi/omega; strands 2m)");
        c->add_option("--k", k_opt, "power / exchange-move count");
        add_common(c, common);
        c->callback([&] {
            command = {"cover", "closed-form"};
            action = [&] {
                Output out;
                const auto fam = closed_family_from_name(family);
                if (!fam) throw DomainError(Errc::bad_index, "unknown family '" + family + "'");
                out.params["family"] = family;
                IntMatrix m;
                switch (*fam) {
                case ClosedFamily::gamma:
                    if (!n_opt) throw DomainError(Errc::bad_index, "gamma needs --n");
                    out.params["n"] = *n_opt;
                    out.params["k"] = k_opt.value_or(0);
                    m = gamma_power_closed(*n_opt, k_opt.value_or(0));
                    break;
                case ClosedFamily::phi:
                    if (!m_opt) throw DomainError(Errc::bad_index, "phi needs --m");
                    out.params["m"] = *m_opt;
                    out.params["k"] = k_opt.value_or(0);
                    m = phi_closed(2 * *m_opt, k_opt.value_or(0));
                    break;
                case ClosedFamily::psi:
                    if (!m_opt) throw DomainError(Errc::bad_index, "psi needs --m");
                    out.params["m"] = *m_opt;
                    m = psi_closed(2 * *m_opt);
                    break;
                case ClosedFamily::omega:
                    if (!m_opt) throw DomainError(Errc::bad_index, "omega needs --m");
                    out.params["m"] = *m_opt;
                    out.params["k"] = k_opt.value_or(0);
                    m = omega_closed(2 * *m_opt, k_opt.value_or(0));
                    break;
                }
                out.result = to_json(m);
                out.text = matrix_text(m);
                return out;
            };
        });
    }
    {
        CLI::App* c = cover->add_subcommand("compare",
                                            "sweep a closed form against the word oracle");
        c->add_option("--family", family, "gamma|phi|psi|omega")->required();
        c->add_option("--n-min", ranges.n_min, "gamma: smallest n")->capture_default_str();
        c->add_option("--n-max", ranges.n_max, "gamma: largest n")->capture_default_str();
        c->add_option("--k-min", ranges.k_min, "gamma: smallest k")->capture_default_str();
        c->add_option("--k-max", ranges.k_max, "largest k")->capture_default_str();
        c->add_option("--m-min", ranges.m_min, "phi/psi/omega: smallest m")->capture_default_str();
        c->add_option("--m-max", ranges.m_max, "phi/psi/omega: largest m")->capture_default_str();
        add_common(c, common);
        c->callback([&, c] {
            command = {"cover", "compare"};
            action = [&, c] {
                Output out;
                const auto fam = closed_family_from_name(family);
                if (!fam) throw DomainError(Errc::bad_index, "unknown family '" + family + "'");
                CompareRanges r = ranges;
                if (*fam != ClosedFamily::gamma && !c->count("--k-max")) r.k_max = 4;
                out.params["family"] = family;
                if (*fam == ClosedFamily::gamma) {
                    out.params["n_min"] = r.n_min;
                    out.params["n_max"] = r.n_max;
                    out.params["k_min"] = r.k_min;
                    out.params["k_max"] = r.k_max;
                } else {
                    out.params["m_min"] = r.m_min;
                    out.params["m_max"] = r.m_max;
                    if (*fam != ClosedFamily::psi) out.params["k_max"] = r.k_max;
                }
                const DiscrepancyReport rep = compare_closed_vs_oracle(*fam, r);
                out.result = to_json(rep);
                std::ostringstream os;
                os << "family: " << rep.family << "\ncases: " << rep.cases.size()
                   << "\nmismatches: " << rep.mismatch_count()
                   << "\nrejected: " << rep.rejected_count() << "\n";
                for (const auto& cc : rep.cases) {
                    if (cc.supported && cc.equal) continue;
                    os << " ";
                    for (const auto& [name, value] : cc.params) os << " " << name << "=" << value;
                    if (!cc.supported) {
                        os << " rejected: " << cc.note << "\n";
                        continue;
                    }
                    os << " differs at";
                    for (const auto& [rr, cc2] : cc.diff_positions)
                        os << " (" << rr << "," << cc2 << ")";
                    os << "\n";
                    out.discrepancies.push_back("family " + rep.family + " mismatch");
                }
                out.text = os.str();
                return out;
            };
        });
    }
    {
        CLI::App* c = cover->add_subcommand(
            "alexander", "reduced Alexander polynomial of the covering link L_{2m,k}");
        c->add_option("--m", m_opt, "half strand count m >= 2")->required();
        c->add_option("--k", k_opt, "exchange-move count k >= 0");
        add_common(c, common);
        c->callback([&] {
            command = {"cover", "alexander"};
            action = [&] {
                Output out;
                const CoveringLinkInvariant inv = covering_invariants(*m_opt, k_opt.value_or(0));
                out.params["m"] = *m_opt;
                out.params["k"] = k_opt.value_or(0);
                out.result = to_json(inv);
                out.text = poly_text(inv.reduced_alexander, "reduced alexander") +
                           poly_text(inv.char_poly, "char poly") +
                           "evaluation at 1: " + to_decimal(inv.linking_eval) + "\n";
                return out;
            };
        });
    }

    // ----- alexander ----------------------------------------------------------
    CLI::App* alex = app.add_subcommand("alexander", "Alexander polynomials and linking data");
    alex->require_subcommand(1);
    {
        CLI::App* c = alex->add_subcommand("invariants", "full covering-link pipeline");
        c->add_option("--m", m_opt, "half strand count m >= 2")->required();
        c->add_option("--k", k_opt, "exchange-move count k >= 0");
        add_common(c, common);
        c->callback([&] {
            command = {"alexander", "invariants"};
            action = [&] {
                Output out;
                const CoveringLinkInvariant inv = covering_invariants(*m_opt, k_opt.value_or(0));
                out.params["m"] = *m_opt;
                out.params["k"] = k_opt.value_or(0);
                out.result = to_json(inv);
                out.text = poly_text(inv.reduced_alexander, "reduced alexander") +
                           poly_text(inv.char_poly, "char poly") +
                           "evaluation at 1: " + to_decimal(inv.linking_eval) + "\n";
                return out;
            };
        });
    }
    {
        CLI::App* c = alex->add_subcommand("theorem-dd", "printed reduced Alexander polynomial");
        c->add_option("--m", m_opt)->required();
        c->add_option("--k", k_opt);
        add_common(c, common);
        c->callback([&] {
            command = {"alexander", "theorem-dd"};
            action = [&] {
                Output out;
                const LaurentPoly p = theorem_dd(*m_opt, k_opt.value_or(0));
                out.params["m"] = *m_opt;
                out.params["k"] = k_opt.value_or(0);
                out.result = to_json(p);
                out.text = poly_text(p, "polynomial");
                return out;
            };
        });
    }
    {
        CLI::App* c = alex->add_subcommand("linking", "printed linking-number formula");
        c->add_option("--m", m_opt)->required();
        c->add_option("--k", k_opt);
        add_common(c, common);
        c->callback([&] {
            command = {"alexander", "linking"};
            action = [&] {
                Output out;
                const Int v = linking_formula(*m_opt, k_opt.value_or(0));
                out.params["m"] = *m_opt;
                out.params["k"] = k_opt.value_or(0);
                out.result["linking_formula"] = to_decimal(v);
                out.result["predicted_alexander_eval"] = to_decimal(-v);
                out.text = "linking formula: " + to_decimal(v) + "\npredicted evaluation at 1: " +
                           to_decimal(-v) + "\n";
                return out;
            };
        });
    }
    {
        CLI::App* c = alex->add_subcommand("unknot-check",
                                           "necessary-condition unknot certificate");
        bind_word(c, true);
        add_common(c, common);
        c->callback([&] {
            command = {"alexander", "unknot-check"};
            action = [&] {
                Output out;
                // here --m/--k address the braid family B_{m,k} itself
                const BraidWord w = word_from_flags(word, strands, m_opt, k_opt, false);
                out.params["word"] = format_braid_word(w);
                out.params["strands"] = w.strands;
                const UnknotEvidence ev = unknot_evidence(w);
                out.result = to_json(ev);
                out.text = "components: " + std::to_string(ev.component_count) + "\nalexander: " +
                           ev.alexander.str() + "\nverdict: " + unknot_verdict_name(ev.verdict) +
                           "\n";
                return out;
            };
        });
    }

    // ----- sw -----------------------------------------------------------------
    CLI::App* sw = app.add_subcommand("sw", "formal Seiberg-Witten product calculus");
    sw->require_subcommand(1);
    {
        CLI::App* c = sw->add_subcommand("e1", "total SW of the E(1) link-surgery manifold");
        c->add_option("--m", m_opt)->required();
        c->add_option("--k", k_opt);
        add_common(c, common);
        c->callback([&] {
            command = {"sw", "e1"};
            action = [&] {
                Output out;
                const int m = *m_opt;
                const long long k = k_opt.value_or(0);
                const CoveringLinkInvariant inv = covering_invariants(m, k);
                const SWExpr e = sw_link_surgery(symmetrize(inv.reduced_alexander),
                                                 {PieceDescriptor::e1(), PieceDescriptor::e1()});
                out.params["m"] = m;
                out.params["k"] = k;
                out.result["sw"] = to_json(e);
                out.result["total"] = to_decimal(total_sw(e));
                out.text = "sw: " + e.p.str("s") + "\ntotal: " + to_decimal(total_sw(e)) + "\n";
                return out;
            };
        });
    }
    {
        CLI::App* c = sw->add_subcommand("distinguish",
                                         "isotopy verdict for the k = i and k = j tori");
        c->add_option("--m", m_opt)->required();
        c->add_option("--i", i_val)->required();
        c->add_option("--j", j_val)->required();
        c->add_flag("--sw-zero", sw_zero, "drop the SW_X != 0 hypothesis");
        add_common(c, common);
        c->callback([&] {
            command = {"sw", "distinguish"};
            action = [&] {
                Output out;
                out.params["m"] = *m_opt;
                out.params["i"] = i_val;
                out.params["j"] = j_val;
                out.params["sw_nonzero"] = !sw_zero;
                const DistinguishVerdict v = distinguish(*m_opt, i_val, j_val, !sw_zero);
                out.result["verdict"] = distinguish_verdict_name(v);
                out.text = std::string("verdict: ") + distinguish_verdict_name(v) + "\n";
                return out;
            };
        });
    }
    {
        CLI::App* c = sw->add_subcommand("fiber-data", "fiber bookkeeping for a 2m-strand cover");
        c->add_option("--n", n_opt, "strand count (must be even, >= 4)")->required();
        add_common(c, common);
        c->callback([&] {
            command = {"sw", "fiber-data"};
            action = [&] {
                Output out;
                out.params["n"] = *n_opt;
                const FiberData fd = covering_fiber_data(*n_opt);
                out.result = to_json(fd);
                out.text = "fiber genus: " + std::to_string(fd.fiber_genus) +
                           "\nboundary components: " + std::to_string(fd.boundary_components) +
                           "\nh1 rank: " + std::to_string(fd.h1_rank) +
                           "\nlefschetz fiber genus: " + std::to_string(fd.lefschetz_fiber_genus) +
                           "\n";
                return out;
            };
        });
    }

    // ----- verify ---------------------------------------------------------------
    CLI::App* verify = app.add_subcommand("verify", "verification sweeps with machine reports");
    verify->require_subcommand(1);
    for (const char* which : {"gamma", "phi", "psi", "omega", "dd", "linking", "unknots", "all"}) {
        CLI::App* c = verify->add_subcommand(which, std::string("run the ") + which + " checks");
        c->add_option("--m-max", vopt.m_max, "largest covering index m")->capture_default_str();
        c->add_option("--k-max", vopt.k_max, "largest exchange-move count k")
            ->capture_default_str();
        c->add_option("--n-max", vopt.n_max, "largest strand count for the gamma sweep")
            ->capture_default_str();
        add_common(c, common);
        const std::string name = which;
        c->callback([&, name, c] {
            command = {"verify", name};
            action = [&, name, c] {
                VerifyOptions o = vopt;
                o.closed_m_max = o.m_max;
                if (name == "unknots") {
                    // here --m-max is the braid strand count of B_{m,k}
                    if (c->count("--m-max")) o.unknot_m_max = std::max(4, o.m_max);
                    if (c->count("--k-max")) o.unknot_k_max = o.k_max;
                    return run_verify_command(name, o);
                }
                if (c->count("--k-max")) {
                    o.gamma_k_max = o.k_max;
                    o.closed_k_max = o.k_max;
                    o.grid_k_max = o.k_max;
                } else {
                    o.closed_k_max = 4;
                }
                if (c->count("--m-max")) {
                    o.grid_m_max = std::max(2, std::min(o.m_max + 1, 6));
                    o.n_max = std::max(4, 2 * o.m_max);
                }
                return run_verify_command(name, o);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // help/version exit 0, usage errors exit 2
    }

    try {
        set_sweep_jobs(common.jobs);
        const Output out = action();
        return emit(args, command, common, out);
    } catch (const DomainError& e) {
        Output out;
        out.exit_code = (e.code() == Errc::parse_error || e.code() == Errc::macro_arity) ? 2 : 3;
        out.result["error"] = errc_name(e.code());
        out.result["message"] = e.what();
        out.text = std::string("error: ") + e.what() + "\n";
        std::cerr << "error: " << e.what() << "\n";
        return emit(args, command, common, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
