// concordia: knot concordance invariants from Seifert matrices.
//
// Exit codes: 0 pass/solution, 1 usage or I/O error, 2 obstruction violated,
// 3 inapplicable or bounded limits hit.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "concordia/concordia.hpp"

using json = nlohmann::json;
using namespace concordia;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolated = 2;
constexpr int kExitBounded = 3;

struct GlobalOpts {
    bool json_out = false;
    unsigned precision_bits = 128;

    SignatureOptions sig() const { return SignatureOptions{precision_bits, -40}; }
};

struct FnSource {
    std::string matrix_file, knot_name, steps_file;

    void attach(CLI::App* cmd, const std::string& suffix = "") {
        cmd->add_option("--matrix" + suffix, matrix_file, "Seifert matrix file");
        cmd->add_option("--knot" + suffix, knot_name, "catalog entry name");
        cmd->add_option("--steps" + suffix, steps_file, "rational step-function file");
    }

    bool has_matrix() const { return !matrix_file.empty() || !knot_name.empty(); }

    SeifertMatrix matrix() const {
        if (!knot_name.empty()) return catalog_lookup(knot_name).matrix;
        if (matrix_file.empty()) throw ParseError("no matrix input given (--matrix or --knot)");
        std::ifstream in(matrix_file);
        if (!in) throw ParseError("cannot open " + matrix_file);
        return read_matrix(in);
    }

    SignatureFunction function(const GlobalOpts& g) const {
        if (!steps_file.empty()) {
            std::ifstream in(steps_file);
            if (!in) throw ParseError("cannot open " + steps_file);
            return SignatureFunction::from_step(read_step_fn(in));
        }
        return SignatureFunction::from_matrix(matrix(), g.sig());
    }
};

json locus_json(const JumpLocus& l) {
    return json{{"zpoly", zp_to_laurent(l.zpoly).serialize()},
                {"z", {to_string(l.z_lo), to_string(l.z_hi)}},
                {"theta", {to_string(l.theta_lo), to_string(l.theta_hi)}}};
}

json violation_json(const CooperViolation& v) {
    return json{{"p", v.params.p}, {"c", v.params.c}, {"r", v.orbit_length},
                {"sum", to_string(v.sum)}};
}

IntMatrix read_int_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::size_t n = 0;
    if (!(in >> n)) throw ParseError("matrix file: missing size line");
    IntMatrix m(n, n);
    long long x;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!(in >> x)) throw ParseError("matrix file: truncated entries");
            m(i, j) = x;
        }
    return m;
}

FourierSeries read_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    // infer dimension from the first data line
    std::istringstream probe(buf.str());
    std::string line;
    int dim = 1;
    while (std::getline(probe, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        int count = 0;
        while (ls >> tok) ++count;
        dim = count - 1;
        break;
    }
    if (dim < 1) throw ParseError("series file has no data lines");
    std::istringstream data(buf.str());
    return FourierSeries::parse(data, dim);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"knot concordance invariants from Seifert matrices"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_flag("--json", g.json_out, "machine-readable output");
    app.add_option("--precision", g.precision_bits, "working float precision in bits")
        ->default_val(128);

    int exit_code = kExitPass;

    // ---- alexander ----
    auto* cmd_alex = app.add_subcommand("alexander", "Alexander polynomial det(S - t S^T)");
    FnSource alex_src;
    alex_src.attach(cmd_alex);
    cmd_alex->callback([&] {
        auto a = alexander(alex_src.matrix());
        if (g.json_out)
            std::cout << json{{"alexander", a.rep().serialize()},
                              {"display", a.rep().display()}} << "\n";
        else
            std::cout << a.rep().display() << "  [" << a.rep().serialize() << "]\n";
    });

    // ---- signature ----
    auto* cmd_sig = app.add_subcommand("signature", "Levine-Tristram signature function");
    FnSource sig_src;
    sig_src.attach(cmd_sig);
    std::string sig_theta;
    std::int64_t sig_csv = 0;
    bool sig_profile = false;
    cmd_sig->add_option("--theta", sig_theta, "rational angle in turns, e.g. 1/6");
    cmd_sig->add_flag("--profile", sig_profile, "print the full jump profile");
    cmd_sig->add_option("--csv", sig_csv, "sample to CSV on a uniform grid of this many steps");
    cmd_sig->callback([&] {
        if (sig_csv > 0) {
            write_csv_samples(std::cout, sig_src.function(g), sig_csv);
            return;
        }
        if (sig_profile) {
            SignatureProfile prof(sig_src.matrix(), g.sig());
            if (g.json_out) {
                json j{{"jumps", json::array()}};
                for (std::size_t i = 0; i < prof.loci().size(); ++i) {
                    auto lj = locus_json(prof.loci()[i]);
                    lj["amount"] = prof.jumps()[i];
                    j["jumps"].push_back(lj);
                }
                std::cout << j << "\n";
            } else {
                write_profile(std::cout, prof);
            }
            return;
        }
        if (sig_theta.empty()) throw ParseError("signature: give --theta, --profile or --csv");
        UnitAngle theta(parse_rational(sig_theta));
        Rational v = sig_src.has_matrix() && sig_src.steps_file.empty()
                         ? signature_at(sig_src.matrix(), theta, g.sig())
                         : sig_src.function(g).eval(theta, Side::averaged);
        if (g.json_out)
            std::cout << json{{"theta", theta.str()}, {"value", to_string(v)}} << "\n";
        else
            std::cout << "sigma(" << theta.str() << ") = " << to_string(v) << "\n";
    });

    // ---- fox-milnor ----
    auto* cmd_fm = app.add_subcommand("fox-milnor", "Fox-Milnor factorization test");
    FnSource fm_src;
    fm_src.attach(cmd_fm);
    std::string fm_poly;
    cmd_fm->add_option("--poly", fm_poly, "Laurent polynomial, coeff:exponent pairs");
    cmd_fm->callback([&] {
        LaurentPoly p = fm_poly.empty() ? alexander(fm_src.matrix()).rep()
                                        : LaurentPoly::parse(fm_poly);
        auto witness = fox_milnor(p);
        if (g.json_out) {
            json j{{"polynomial", p.serialize()}, {"fox_milnor", witness.has_value()}};
            if (witness) j["witness"] = witness->serialize();
            std::cout << j << "\n";
        } else if (witness) {
            std::cout << "yes: delta = " << witness->display() << "\n";
        } else {
            std::cout << "no: " << p.display()
                      << " admits no factorization delta(t) delta(1/t)\n";
        }
        if (!witness) exit_code = kExitViolated;
    });

    // ---- metabolizer ----
    auto* cmd_met = app.add_subcommand("metabolizer", "metabolizer / isotropic summand search");
    FnSource met_src;
    met_src.attach(cmd_met);
    std::int64_t met_height = 3;
    cmd_met->add_option("--height", met_height, "max-norm bound for the genus >= 2 search")
        ->default_val(3);
    cmd_met->callback([&] {
        SeifertMatrix S = met_src.matrix();
        if (S.size() == 2) {
            auto v = metabolizer_genus1(S);
            if (g.json_out)
                std::cout << json{{"found", v.has_value()},
                                  {"vector", v ? json({(*v)[0], (*v)[1]}) : json(nullptr)},
                                  {"exact", true}} << "\n";
            else if (v)
                std::cout << "found primitive isotropic vector (" << (*v)[0] << ", " << (*v)[1]
                          << ")\n";
            else
                std::cout << "none: the form has no isotropic vector (exact)\n";
            if (!v) exit_code = kExitViolated;
            return;
        }
        auto basis = isotropic_search(S, met_height);
        if (g.json_out) {
            json j{{"found", basis.has_value()}, {"exact", false}, {"height", met_height}};
            if (basis) j["basis"] = *basis;
            std::cout << j << "\n";
        } else if (basis) {
            std::cout << "found isotropic summand basis:\n";
            for (const auto& row : *basis) {
                for (auto x : row) std::cout << ' ' << x;
                std::cout << '\n';
            }
        } else {
            std::cout << "not found up to height " << met_height << " (bounded certificate)\n";
        }
        if (!basis) exit_code = kExitBounded;
    });

    // ---- cooper ----
    auto* cmd_coop = app.add_subcommand("cooper", "Cooper (m,n)-signature condition scan");
    FnSource coop_src;
    coop_src.attach(cmd_coop);
    std::int64_t cm = 0, cn = 0, cpmax = 50, ccmax = 0;
    cmd_coop->add_option("--m", cm, "m")->required();
    cmd_coop->add_option("--n", cn, "n")->required();
    cmd_coop->add_option("--pmax", cpmax, "modulus bound")->required();
    cmd_coop->add_option("--cmax", ccmax, "residue bound (default pmax)");
    cmd_coop->callback([&] {
        if (ccmax == 0) ccmax = cpmax;
        auto viols = cooper_scan(coop_src.function(g), cm, cn, cpmax, ccmax);
        if (g.json_out) {
            json j{{"violations", json::array()}, {"pmax", cpmax}, {"cmax", ccmax}};
            for (const auto& v : viols) j["violations"].push_back(violation_json(v));
            std::cout << j << "\n";
        } else if (viols.empty()) {
            std::cout << "condition holds on the scanned grid (p <= " << cpmax << ")\n";
        } else {
            for (const auto& v : viols)
                std::cout << "p=" << v.params.p << " c=" << v.params.c << " r=" << v.orbit_length
                          << " sum=" << to_string(v.sum) << "\n";
        }
        if (!viols.empty()) exit_code = kExitViolated;
    });

    // ---- solve-g ----
    auto* cmd_sg = app.add_subcommand("solve-g", "solve sigma(kx) = g(bx) - g(ax) on a grid");
    FnSource sg_src;
    sg_src.attach(cmd_sg);
    std::int64_t sa = 0, sb = 0, sk = 1, sp = 0;
    cmd_sg->add_option("--a", sa)->required();
    cmd_sg->add_option("--b", sb)->required();
    cmd_sg->add_option("--k", sk)->required();
    cmd_sg->add_option("--p", sp)->required();
    cmd_sg->callback([&] {
        auto sigma = sg_src.function(g);
        auto res = solve_g(sigma, sa, sb, sk, sp);
        if (auto* sol = std::get_if<OrbitSolution>(&res)) {
            if (verify_g(sigma, *sol, sa, sb, sk, sp))
                throw std::logic_error("solution failed verification");
            if (g.json_out) {
                json j{{"solution", json::array()}, {"free_orbit_reps", sol->free_reps}};
                for (std::int64_t y = 0; y < sp; ++y)
                    j["solution"].push_back(to_string(sol->values[y]));
                std::cout << j << "\n";
            } else {
                std::cout << "solution (one free value per orbit, fixed to 0):\n";
                for (std::int64_t y = 0; y < sp; ++y)
                    std::cout << "g(" << y << "/" << sp << ") = " << to_string(sol->values[y])
                              << "\n";
            }
        } else {
            auto& v = std::get<OrbitViolation>(res);
            if (g.json_out) {
                std::cout << json{{"violation", {{"orbit", v.orbit}, {"sum", to_string(v.sum)}}}}
                          << "\n";
            } else {
                std::cout << "infeasible: orbit {";
                for (std::size_t i = 0; i < v.orbit.size(); ++i)
                    std::cout << (i ? "," : "") << v.orbit[i];
                std::cout << "} has cycle sum " << to_string(v.sum) << "\n";
            }
            exit_code = kExitViolated;
        }
    });

    // ---- fourier-lemma ----
    auto* cmd_fl = app.add_subcommand("fourier-lemma", "finite Fourier analysis-lemma check");
    std::string fl_series, fl_matrix;
    std::int64_t fl_d = 0;
    cmd_fl->add_option("--series", fl_series, "series file: lines 'coeff i1 ... in'")->required();
    cmd_fl->add_option("--matrix-m", fl_matrix, "integer matrix file for M")->required();
    cmd_fl->add_option("--d", fl_d, "scalar action d")->required();
    cmd_fl->callback([&] {
        auto f = read_series(fl_series);
        auto M = read_int_matrix(fl_matrix);
        auto rep = lemma_check(f, M, fl_d);
        bool case2 = std::holds_alternative<Case2>(rep.dichotomy);
        if (g.json_out) {
            json j{{"off_axis_residual_zero", rep.off_axis_residual.is_zero()},
                   {"s", rep.s.serialize()},
                   {"case", case2 ? "case2" : "case1_up_to_bound"}};
            if (case2) {
                j["p"] = std::get<Case2>(rep.dichotomy).p;
                j["lambda"] = std::get<Case2>(rep.dichotomy).lambda.str();
                j["identity"] = rep.case2_identity == Case2Identity::verified   ? "verified"
                                : rep.case2_identity == Case2Identity::failed ? "failed"
                                                                              : "not_applicable";
            }
            std::cout << j << "\n";
        } else {
            std::cout << "off-axis residual: "
                      << (rep.off_axis_residual.is_zero() ? "0" : "nonzero") << "\n";
            std::cout << "axis part s:\n" << rep.s.serialize();
            if (case2) {
                auto& c2 = std::get<Case2>(rep.dichotomy);
                std::cout << "case 2 with p=" << c2.p << " lambda=" << c2.lambda.str()
                          << ", identity "
                          << (rep.case2_identity == Case2Identity::verified ? "verified" : "FAILED")
                          << "\n";
            } else {
                std::cout << "case 1 up to bound\n";
            }
        }
        if (rep.case2_identity == Case2Identity::failed ||
            (!case2 && rep.off_axis_residual.is_zero() && !rep.s.is_zero()))
            exit_code = kExitViolated;
        else if (!case2 || !rep.off_axis_residual.is_zero())
            exit_code = kExitBounded;
    });

    // ---- derivative-test ----
    auto* cmd_dt = app.add_subcommand("derivative-test",
                                      "can J be a derivative of a 1.5-solvable genus-one knot?");
    FnSource dt_src;
    dt_src.attach(cmd_dt);
    std::int64_t dt_m = 0, dt_pmax = 50, dt_cmax = 0;
    cmd_dt->add_option("--m", dt_m, "m with Delta_K = (mt-(m+1))((m+1)t-m)")->required();
    cmd_dt->add_option("--pmax", dt_pmax)->default_val(50);
    cmd_dt->add_option("--cmax", dt_cmax, "default pmax");
    cmd_dt->callback([&] {
        if (dt_cmax == 0) dt_cmax = dt_pmax;
        auto rep = derivative_obstruction(dt_m, dt_src.function(g), dt_pmax, dt_cmax);
        if (g.json_out) {
            json j{{"verdict", verdict_name(rep.verdict)}, {"parameters", rep.parameters},
                   {"violations", json::array()}};
            for (const auto& v : rep.violations) j["violations"].push_back(violation_json(v));
            std::cout << j << "\n";
        } else {
            std::cout << verdict_name(rep.verdict) << ": " << rep.summary << "\n";
            for (const auto& v : rep.violations)
                std::cout << "  p=" << v.params.p << " c=" << v.params.c << " r=" << v.orbit_length
                          << " sum=" << to_string(v.sum) << "\n";
        }
        if (rep.verdict == Verdict::violated) exit_code = kExitViolated;
    });

    // ---- doubling-test ----
    auto* cmd_db = app.add_subcommand("doubling-test",
                                      "doubling-operator signature obstruction");
    FnSource db_src;
    db_src.attach(cmd_db);
    std::string db_poly;
    std::int64_t db_pmax = 64, db_samples = 64;
    cmd_db->add_option("--poly", db_poly, "Delta_R, coeff:exponent pairs")->required();
    cmd_db->add_option("--pmax-poly", db_pmax)->default_val(64);
    cmd_db->add_option("--samples", db_samples)->default_val(64);
    cmd_db->callback([&] {
        LaurentPoly delta_r = LaurentPoly::parse(db_poly);
        ObstructionReport rep =
            db_src.steps_file.empty()
                ? doubling_obstruction(delta_r, db_src.matrix(), db_pmax, db_samples, g.sig())
                : doubling_obstruction(delta_r, db_src.function(g), db_pmax, db_samples);
        if (g.json_out) {
            json j{{"verdict", verdict_name(rep.verdict)}, {"parameters", rep.parameters},
                   {"nonzero_samples", json::array()}};
            for (const auto& [theta, v] : rep.nonzero_samples)
                j["nonzero_samples"].push_back({{"theta", theta.str()}, {"value", to_string(v)}});
            std::cout << j << "\n";
        } else {
            std::cout << verdict_name(rep.verdict) << ": " << rep.summary << "\n";
            for (const auto& [theta, v] : rep.nonzero_samples)
                std::cout << "  sigma(" << theta.str() << ") = " << to_string(v) << "\n";
        }
        if (rep.verdict == Verdict::violated) exit_code = kExitViolated;
        if (rep.verdict == Verdict::inapplicable) exit_code = kExitBounded;
    });

    // ---- sufficiency ----
    auto* cmd_suf = app.add_subcommand(
        "sufficiency", "check sigma_J(t) = sigma_T(mt) - sigma_T((m+1)t) on samples");
    FnSource suf_j, suf_t;
    suf_j.attach(cmd_suf);
    suf_t.attach(cmd_suf, "-t");
    std::int64_t suf_m = 0, suf_n = 100;
    cmd_suf->add_option("--m", suf_m)->required();
    cmd_suf->add_option("--samples", suf_n)->default_val(100);
    cmd_suf->callback([&] {
        std::vector<UnitAngle> samples;
        for (std::int64_t j = 1; j <= suf_n; ++j) samples.emplace_back(j, 2 * suf_n + 1);
        auto res = sufficiency_verify(suf_j.function(g), suf_t.function(g), suf_m, samples);
        if (g.json_out) {
            json j{{"pass", res.pass}};
            if (!res.pass) {
                j["witness"] = res.witness->str();
                j["lhs"] = to_string(res.lhs);
                j["rhs"] = to_string(res.rhs);
            }
            std::cout << j << "\n";
        } else if (res.pass) {
            std::cout << "pass on " << suf_n << " samples\n";
        } else {
            std::cout << "fail at theta = " << res.witness->str() << ": sigma_J = "
                      << to_string(res.lhs) << " but difference of cables = " << to_string(res.rhs)
                      << "\n";
        }
        if (!res.pass) exit_code = kExitViolated;
    });

    // ---- catalog ----
    auto* cmd_cat = app.add_subcommand("catalog", "knot table");
    auto* cmd_cat_list = cmd_cat->add_subcommand("list", "list entries");
    cmd_cat_list->callback([&] {
        if (g.json_out) {
            json j = json::array();
            for (const auto& e : catalog())
                j.push_back({{"name", e.name},
                             {"genus", e.matrix.genus()},
                             {"alexander", e.expected_alexander.rep().serialize()},
                             {"notes", e.notes}});
            std::cout << j << "\n";
        } else {
            for (const auto& e : catalog())
                std::cout << e.name << "  genus " << e.matrix.genus() << "  Delta = "
                          << e.expected_alexander.rep().display() << "  (" << e.notes << ")\n";
        }
    });
    cmd_cat->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
