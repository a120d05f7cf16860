// Command-line front end: enumeration, rendering and verification of the
// quadratic-unipotent block combinatorics.

#include <CLI11.hpp>
#include <iostream>

#include <set>
#include <sstream>

#include "qub/dimz.hpp"
#include "qub/heckeb.hpp"
#include "qub/json_io.hpp"
#include "qub/scan.hpp"

using namespace qub;

namespace {

int exit_fail(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

Exec exec_mode() {
    // QUB_THREADS=1 forces the serial path; anything else keeps OpenMP on.
    if (const char* env = std::getenv("QUB_THREADS"))
        if (std::atoi(env) == 1) return Exec::serial;
    return Exec::parallel;
}

struct SymbolOpts {
    std::string text;     // [c:parts][c:parts]
    long t = -1;          // alternative: Theta_t(mu1, mu2)
    std::string mu1, mu2;

    Symbol build() const {
        if (!text.empty()) return parse_symbol(text);
        if (t < 0) throw std::invalid_argument("give --symbol or --t with --mu1/--mu2");
        return symbol_from_bipartition(t, partition_from_string(mu1), partition_from_string(mu2));
    }
};

void add_symbol_opts(CLI::App* cmd, SymbolOpts& o, const std::string& prefix = "") {
    cmd->add_option("--" + prefix + "symbol", o.text, "symbol as [charge:parts][charge:parts]");
    cmd->add_option("--" + prefix + "t", o.t, "series parameter t of Theta_t(mu)");
    cmd->add_option("--" + prefix + "mu1", o.mu1, "first partition of mu");
    cmd->add_option("--" + prefix + "mu2", o.mu2, "second partition of mu");
}

void print_scan(const std::string& name, const ScanResult& r, bool as_json) {
    if (as_json) {
        json j{{"suite", name}, {"pass", r.pass}, {"items", r.items}, {"failures", r.failures}};
        if (!r.messages.empty()) j["messages"] = r.messages;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << name << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.items << " items";
        if (r.failures) std::cout << ", " << r.failures << " failures";
        std::cout << ")\n";
        for (const auto& m : r.messages) std::cout << "  " << m << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadratic-unipotent block combinatorics for odd orthogonal groups"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "ascii";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "ascii"}));

    // core
    auto* core = app.add_subcommand("core", "e-core and e-quotient of a partition");
    std::string core_partition;
    long core_e = 2, core_charge = 0;
    core->add_option("--partition", core_partition, "comma-separated decreasing parts")->required();
    core->add_option("--e", core_e, "hook length")->required();
    core->add_option("--charge", core_charge, "beta-set charge");

    // symbol
    auto* symcmd = app.add_subcommand("symbol", "defect, rank, d-core and d-cocore of a symbol");
    SymbolOpts sym_in;
    long sym_d = 1;
    add_symbol_opts(symcmd, sym_in);
    symcmd->add_option("--d", sym_d, "hook length d");

    // abacus
    auto* abacmd = app.add_subcommand("abacus", "2d-abacus rendering of a symbol");
    SymbolOpts aba_in;
    long aba_d = 1;
    add_symbol_opts(abacmd, aba_in);
    abacmd->add_option("--d", aba_d, "runner block size d")->required();

    // fock
    auto* fockcmd = app.add_subcommand("fock", "apply operator words in a charged Fock space");
    std::string fock_charges = "0", fock_signs, fock_word;
    long fock_e = 2;
    fockcmd->add_option("--e", fock_e, "quiver period (0 = infinite)");
    fockcmd->add_option("--charges", fock_charges, "component charges, comma separated");
    fockcmd->add_option("--signs", fock_signs, "component signs, e.g. +,-");
    fockcmd->add_option("--word", fock_word,
                        "operators applied left to right, e.g. f+0,f-1,e+0");

    // blocks
    auto* blockscmd = app.add_subcommand("blocks", "enumerate isolated blocks of a given rank");
    long b_q = 3, b_ell = 13, b_n = 4;
    blockscmd->add_option("--q", b_q)->required();
    blockscmd->add_option("--ell", b_ell)->required();
    blockscmd->add_option("--n", b_n, "total rank")->required();

    // tree
    auto* treecmd = app.add_subcommand("tree", "Brauer tree of a cyclic isolated block");
    SymbolOpts tree_plus, tree_minus;
    long t_q = 3, t_ell = 13;
    treecmd->add_option("--q", t_q)->required();
    treecmd->add_option("--ell", t_ell)->required();
    add_symbol_opts(treecmd, tree_plus, "plus-");
    add_symbol_opts(treecmd, tree_minus, "minus-");

    // rock
    auto* rockcmd = app.add_subcommand("rock", "RoCK test for a block label");
    SymbolOpts rock_plus, rock_minus;
    long r_q = 3, r_ell = 13, r_wp = 0, r_wm = 0;
    rockcmd->add_option("--q", r_q)->required();
    rockcmd->add_option("--ell", r_ell)->required();
    add_symbol_opts(rockcmd, rock_plus, "plus-");
    add_symbol_opts(rockcmd, rock_minus, "minus-");
    rockcmd->add_option("--w-plus", r_wp);
    rockcmd->add_option("--w-minus", r_wm);

    // verify
    auto* verify = app.add_subcommand("verify", "run a named property suite");
    std::string suite;
    verify->add_option("suite", suite, "one of: hecke-eigenvalues, klr-relations, weight-block, dimz, coset-oracle")
        ->required();
    long v_t = 2, v_m = 3, v_q0 = 3, v_q = 3, v_ell = 13, v_n = 6, v_d = 2, v_w = 3;
    verify->add_option("--t", v_t, "series parameter bound");
    verify->add_option("--m", v_m, "rank bound");
    verify->add_option("--q0", v_q0, "rational specialization of q");
    verify->add_option("--q", v_q);
    verify->add_option("--ell", v_ell);
    verify->add_option("--n", v_n, "rank bound for character scans");
    verify->add_option("--d", v_d);
    verify->add_option("--w", v_w, "total weight bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    bool as_json = format == "json";
    try {
        if (*core) {
            Partition lam = partition_from_string(core_partition);
            CoreQuotient cq = e_core_and_quotient(lam, core_charge, int(core_e));
            if (as_json) {
                json quot = json::array();
                for (const auto& c : cq.quotient.components) quot.push_back(to_json(c));
                json j{{"partition", to_json(lam)},
                       {"e", core_e},
                       {"core", to_json(cq.core)},
                       {"quotient", quot},
                       {"charges", cq.quotient.charges},
                       {"weight", cq.weight}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "core: " << cq.core.str() << "\n";
                std::cout << "quotient:";
                for (size_t i = 0; i < cq.quotient.components.size(); ++i)
                    std::cout << " " << cq.quotient.components[i].str() << "@"
                              << cq.quotient.charges[i];
                std::cout << "\nweight: " << cq.weight << "\n";
            }
        } else if (*symcmd) {
            Symbol s = sym_in.build();
            if (as_json) {
                json j = to_json(s);
                j["d"] = sym_d;
                j["d_core"] = to_json(d_core(s, sym_d));
                j["d_cocore"] = to_json(d_cocore(s, sym_d));
                j["d_hooks"] = d_hooks(s, sym_d).size();
                j["d_cohooks"] = d_cohooks(s, sym_d).size();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "symbol: " << s.str() << "\n";
                std::cout << "defect " << s.defect() << ", rank " << s.rank() << "\n";
                std::cout << sym_d << "-core:   " << d_core(s, sym_d).str() << "\n";
                std::cout << sym_d << "-cocore: " << d_cocore(s, sym_d).str() << "\n";
            }
        } else if (*abacmd) {
            Symbol s = aba_in.build();
            Abacus2d ab = to_abacus(s, aba_d);
            if (as_json) {
                json runners = json::array();
                for (const auto& r : ab.runners)
                    runners.push_back(json{{"beads", r.beads}, {"full_below", r.full_below}});
                std::cout << json{{"d", ab.d}, {"runners", runners}}.dump(2) << "\n";
            } else {
                std::cout << render_abacus(ab);
            }
        } else if (*fockcmd) {
            std::vector<long> charges;
            {
                std::stringstream ss(fock_charges);
                std::string tok;
                while (std::getline(ss, tok, ',')) charges.push_back(std::stol(tok));
            }
            std::vector<int> signs(charges.size(), +1);
            if (!fock_signs.empty()) {
                std::stringstream ss(fock_signs);
                std::string tok;
                size_t i = 0;
                while (std::getline(ss, tok, ',') && i < signs.size())
                    signs[i++] = tok == "-" ? -1 : +1;
            }
            QuiverSpec spec = build_quiver(
                fock_e == 0 ? std::optional<long>{} : std::optional<long>{fock_e}, {});
            std::vector<FockComponent> comps;
            for (size_t i = 0; i < charges.size(); ++i)
                comps.push_back({Side::unprimed, signs[i], charges[i]});
            FockSpace space(spec, comps);
            FockElement x = basis_element(space, MultiPartition(charges.size()));
            if (!fock_word.empty()) {
                std::stringstream ss(fock_word);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    if (tok.size() < 3 || (tok[0] != 'f' && tok[0] != 'e') ||
                        (tok[1] != '+' && tok[1] != '-'))
                        throw std::invalid_argument("word token must look like f+0 or e-2");
                    QuiverVertex v{Side::unprimed, tok[1] == '-' ? -1 : +1,
                                   std::stol(tok.substr(2))};
                    x = tok[0] == 'f' ? apply_f(x, v) : apply_e(x, v);
                }
            }
            if (as_json) {
                json j = to_json(x);
                json ws = json::array();
                for (const auto& [mp, c] : x.terms) ws.push_back(to_json(weight_of(space, mp)));
                j["weights"] = ws;
                std::cout << j.dump(2) << "\n";
            } else {
                if (x.is_zero()) std::cout << "0\n";
                for (const auto& [mp, c] : x.terms) {
                    std::cout << c << " * |";
                    for (size_t i = 0; i < mp.size(); ++i)
                        std::cout << (i ? "," : "") << mp[i].str();
                    std::cout << "> of weight " << weight_of(space, mp).str() << "\n";
                }
            }
        } else if (*blockscmd) {
            ModularContext ctx = make_context(b_q, b_ell);
            auto blocks = enumerate_blocks(b_n, ctx);
            if (as_json) {
                json arr = json::array();
                for (const auto& b : blocks) arr.push_back(to_json(b, ctx));
                std::cout << json{{"q", b_q}, {"ell", b_ell}, {"d", ctx.d},
                                  {"linear", ctx.linear}, {"n", b_n}, {"blocks", arr}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << (ctx.linear ? "linear" : "unitary") << " prime, d = " << ctx.d << ", "
                          << blocks.size() << " blocks of rank " << b_n << "\n";
                for (const auto& b : blocks) {
                    DefectInfo info = defect_info(b, ctx);
                    std::cout << "  " << b.str();
                    if (info.defect_zero) std::cout << "  [defect zero]";
                    else if (info.cyclic) std::cout << "  [cyclic]";
                    if (is_rock(b, ctx)) std::cout << "  [RoCK]";
                    std::cout << "\n";
                }
            }
        } else if (*treecmd) {
            ModularContext ctx = make_context(t_q, t_ell);
            CharacterLabel chi{tree_plus.build(), tree_minus.build()};
            BrauerTree tree = brauer_tree(chi, ctx);
            if (as_json) {
                std::cout << to_json(tree).dump(2) << "\n";
            } else {
                for (auto it = tree.left.rbegin(); it != tree.left.rend(); ++it)
                    std::cout << "(" << it->str() << ") - ";
                std::cout << "((exceptional))";
                for (const auto& lab : tree.right) std::cout << " - (" << lab.str() << ")";
                std::cout << "\n" << tree.a << " + " << tree.b << " edges\n";
            }
        } else if (*rockcmd) {
            ModularContext ctx = make_context(r_q, r_ell);
            BlockLabel b{rock_plus.build(), rock_minus.build(), r_wp, r_wm};
            bool rock = is_rock(b, ctx);
            if (as_json)
                std::cout << json{{"block", to_json(b, ctx)}, {"rock", rock}}.dump(2) << "\n";
            else
                std::cout << (rock ? "RoCK" : "not RoCK") << "\n";
            return 0;
        } else if (*verify) {
            Exec mode = exec_mode();
            if (suite == "hecke-eigenvalues") {
                bool pass = true;
                json spectra = json::array();
                for (int m = 1; m <= int(v_m); ++m) {
                    RegularRep rep = regular_representation({v_t, 0, m, 0}, Rat(v_q0));
                    auto spec = x_spectrum(rep, 0);
                    std::set<Rat> expect{rat_pow(Rat(-v_q0), v_t), rat_pow(Rat(-v_q0), -1 - v_t)};
                    bool ok = std::set<Rat>(spec.begin(), spec.end()) == expect;
                    pass = pass && ok;
                    json vals = json::array();
                    for (const auto& v : spec) vals.push_back(v.get_str());
                    spectra.push_back(json{{"m", m}, {"spectrum", vals}, {"pass", ok}});
                }
                if (as_json)
                    std::cout << json{{"suite", suite}, {"t", v_t}, {"q0", v_q0},
                                      {"pass", pass}, {"results", spectra}}
                                     .dump(2)
                              << "\n";
                else {
                    std::cout << "hecke-eigenvalues t=" << v_t << " q0=" << v_q0 << ": "
                              << (pass ? "pass" : "FAIL") << "\n";
                    for (const auto& row : spectra) {
                        std::cout << "  m=" << row["m"] << " spectrum {";
                        bool first = true;
                        for (const auto& v : row["spectrum"]) {
                            std::cout << (first ? "" : ", ") << v.get<std::string>();
                            first = false;
                        }
                        std::cout << "}\n";
                    }
                }
                return pass ? 0 : 1;
            } else if (suite == "klr-relations") {
                bool pass = true;
                for (long t = 0; t <= v_t && pass; ++t)
                    for (int m = 1; m <= int(v_m); ++m) {
                        CheckReport rep = klr_relation_check({t, 0, m, 0}, Rat(v_q0));
                        if (!rep.pass) {
                            pass = false;
                            for (const auto& f : rep.failures) std::cerr << "  " << f << "\n";
                            break;
                        }
                    }
                std::cout << (as_json ? json{{"suite", suite}, {"pass", pass}}.dump(2)
                                      : std::string("klr-relations: ") + (pass ? "pass" : "FAIL"))
                          << "\n";
                return pass ? 0 : 1;
            } else if (suite == "weight-block") {
                ModularContext ctx = make_context(v_q, v_ell);
                ScanResult r = weight_block_scan(ctx, v_n, mode);
                print_scan(suite, r, as_json);
                return r.pass ? 0 : 1;
            } else if (suite == "dimz") {
                bool pass = true;
                for (long wp = 0; wp <= v_w; ++wp)
                    for (long wm = 0; wp + wm <= v_w; ++wm)
                        pass = pass && dimz_identity_check(v_d, wp, wm).pass;
                std::cout << (as_json ? json{{"suite", suite}, {"d", v_d}, {"pass", pass}}.dump(2)
                                      : std::string("dimz: ") + (pass ? "pass" : "FAIL"))
                          << "\n";
                return pass ? 0 : 1;
            } else if (suite == "coset-oracle") {
                ScanResult r = coset_scan(int(v_m), mode);
                print_scan(suite, r, as_json);
                return r.pass ? 0 : 1;
            } else {
                return exit_fail("unknown suite: " + suite);
            }
        }
    } catch (const std::invalid_argument& e) {
        return exit_fail(e.what());
    } catch (const std::domain_error& e) {
        return exit_fail(e.what());
    }
    return 0;
}
