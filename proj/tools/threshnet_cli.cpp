#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "threshnet/dynamics.hpp"
#include "threshnet/errors.hpp"
#include "threshnet/heuristics.hpp"
#include "threshnet/instance.hpp"
#include "threshnet/oracle.hpp"
#include "threshnet/reductions.hpp"
#include "threshnet/rng.hpp"
#include "threshnet/verify.hpp"

namespace tn = threshnet;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tn::Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw tn::Error("cannot write " + path);
    out << body;
}

tn::SeedingMode parse_mode(const std::string& s) {
    if (s == "temporary") return tn::SeedingMode::temporary();
    if (s.rfind("fixed:", 0) == 0) {
        int d = 0;
        try {
            d = std::stoi(s.substr(6));
        } catch (...) {
            throw CLI::ValidationError("--mode", "expected temporary or fixed:<d>");
        }
        if (d < 1) throw CLI::ValidationError("--mode", "fixed duration must be >= 1");
        return tn::SeedingMode::fixed(d);
    }
    throw CLI::ValidationError("--mode", "expected temporary or fixed:<d>");
}

std::string mode_text(const std::optional<tn::Intervention>& iv) {
    if (!iv) return "none";
    if (iv->mode.kind == tn::SeedingMode::Kind::Temporary) return "temporary";
    return "fixed:" + std::to_string(iv->mode.duration);
}

std::string join_ids(const std::vector<int>& ids) {
    std::string s;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(ids[i]);
    }
    return s;
}

// RFC 4180: quote a field when it holds a comma, quote or newline
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    q += '"';
    return q;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string row;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) row += ',';
        row += csv_field(fields[i]);
    }
    row += '\n';
    return row;
}

std::string value_text(int value, tn::Objective obj) {
    if (obj == tn::Objective::PermanentCount) return std::to_string(value);
    return std::to_string(value / 2) + (value % 2 ? ".5" : ".0");
}

struct Shared {
    uint64_t rng_seed = 1;
    std::string mode;       // "", "temporary", "fixed:<d>"
    std::string objective = "perm";
    std::string release = "first";
    bool timings = false;

    tn::ReleasePhase phase() const {
        return release == "second" ? tn::ReleasePhase::Second : tn::ReleasePhase::First;
    }
    tn::Objective obj() const {
        return objective == "avg" ? tn::Objective::AverageAdoption
                                  : tn::Objective::PermanentCount;
    }
    // intervention for a loaded instance, with --mode taking precedence
    std::optional<tn::Intervention> intervention(const tn::Instance& inst) const {
        if (!mode.empty()) {
            tn::Intervention iv;
            if (inst.intervention) iv.seeds = inst.intervention->seeds;
            iv.mode = parse_mode(mode);
            return iv;
        }
        return inst.intervention;
    }
    tn::SeedingMode search_mode() const {
        return mode.empty() ? tn::SeedingMode::temporary() : parse_mode(mode);
    }
};

long long elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
}

int cmd_simulate(const std::string& path, bool trace, const Shared& sh) {
    tn::Instance inst = tn::parse_instance(read_file(path));
    tn::AdoptionVector x0 = inst.x0 ? *inst.x0 : tn::AdoptionVector(inst.net.n);
    tn::EvolveTrace tr = tn::evolve_traced(inst.net, x0, sh.intervention(inst), sh.phase());
    const tn::ConvergenceReport& rep = tr.report;
    if (trace) {
        int last = rep.transient_time + rep.cycle_len() - 1;
        for (int t = 0; t <= last; ++t) {
            const tn::AdoptionVector& x = tr.states[t];
            long long e2 = tn::scaled_energy(inst.net, x, tr.states[t + 1]);
            std::cout << "t=" << t << " ones=" << x.count() << " E2=" << e2
                      << " x=" << x.to_string() << "\n";
        }
    }
    std::cout << "cycle_len=" << rep.cycle_len() << " transient=" << rep.transient_time
              << " avg2=" << rep.adoption_avg2 << " perm=" << rep.permanent_count
              << " ops=" << rep.operation_count << "\n";
    return 0;
}

int cmd_evaluate(const std::string& path, const Shared& sh) {
    tn::Instance inst = tn::parse_instance(read_file(path));
    tn::AdoptionVector x0 = inst.x0 ? *inst.x0 : tn::AdoptionVector(inst.net.n);
    auto iv = sh.intervention(inst);
    tn::ConvergenceReport rep = tn::evolve(inst.net, x0, iv, sh.phase());
    std::cout << "instance=" << tn::instance_hash_hex(inst) << " mode=" << mode_text(iv)
              << " transient=" << rep.transient_time << " cycle_len=" << rep.cycle_len()
              << " avg2=" << rep.adoption_avg2 << " perm=" << rep.permanent_count
              << " ops=" << rep.operation_count << "\n";
    return 0;
}

int cmd_optimize(const std::string& path, const std::string& algo, const std::string& problem,
                 int budget, const tn::SearchConfig& cfg, const Shared& sh) {
    tn::Instance inst = tn::parse_instance(read_file(path));
    tn::AdoptionVector x0 = inst.x0 ? *inst.x0 : tn::AdoptionVector(inst.net.n);
    tn::SeedingMode mode = sh.search_mode();

    auto t0 = std::chrono::steady_clock::now();
    tn::SearchResult res;
    if (problem == "mcc") {
        if (algo != "greedy")
            throw CLI::ValidationError("--algo", "mcc supports only the greedy heuristic");
        res = tn::greedy_mcc(inst.net, x0, mode, cfg);
    } else if (algo == "greedy") {
        res = tn::greedy_bmc(inst.net, x0, mode, budget, cfg);
    } else if (algo == "local") {
        res = tn::local_search(inst.net, x0, mode, budget, cfg);
    } else if (algo == "anneal") {
        res = tn::anneal(inst.net, x0, mode, budget, cfg);
    } else {
        throw CLI::ValidationError("--algo", "expected greedy, local or anneal");
    }
    long long ms = elapsed_ms(t0);

    std::string value = problem == "mcc" ? std::to_string(res.value)
                                         : value_text(res.value, cfg.objective);
    std::cout << "instance,algo,budget,value,evals,wall_ms,seeds\n";
    std::cout << csv_row({tn::instance_hash_hex(inst), algo,
                          problem == "mcc" ? "" : std::to_string(budget), value,
                          std::to_string(res.eval_count),
                          sh.timings ? std::to_string(ms) : "", join_ids(res.seeds)});
    return 0;
}

int cmd_oracle_cycle(const std::string& path, const Shared& sh) {
    tn::Instance inst = tn::parse_instance(read_file(path));
    tn::AdoptionVector x0 = inst.x0 ? *inst.x0 : tn::AdoptionVector(inst.net.n);
    tn::OracleResult orc = tn::exact_limit_cycle(inst.net, x0, sh.intervention(inst), sh.phase());
    int avg2 = orc.cycle.front().count() + orc.cycle.back().count();
    int perm = orc.cycle_len() == 1 ? orc.cycle[0].count()
                                    : (orc.cycle[0] & orc.cycle[1]).count();
    std::cout << "transient=" << orc.transient << " cycle_len=" << orc.cycle_len()
              << " avg2=" << avg2 << " perm=" << perm << "\n";
    return 0;
}

int cmd_oracle_mcc(const std::string& path, const Shared& sh) {
    tn::Instance inst = tn::parse_instance(read_file(path));
    tn::AdoptionVector x0 = inst.x0 ? *inst.x0 : tn::AdoptionVector(inst.net.n);
    tn::MccResult res = tn::optimal_mcc(inst.net, x0, sh.search_mode());
    if (!res.feasible)
        std::cout << "infeasible\n";
    else
        std::cout << "size=" << res.size() << " seeds=" << join_ids(res.seeds) << "\n";
    return 0;
}

int cmd_oracle_bmc(const std::string& path, int budget, const Shared& sh) {
    tn::Instance inst = tn::parse_instance(read_file(path));
    tn::AdoptionVector x0 = inst.x0 ? *inst.x0 : tn::AdoptionVector(inst.net.n);
    tn::BmcResult res = tn::optimal_bmc(inst.net, x0, sh.search_mode(), budget, sh.obj());
    std::cout << "value=" << value_text(res.value, sh.obj()) << " seeds=" << join_ids(res.seeds)
              << "\n";
    return 0;
}

int cmd_reduce(bool budgeted, const std::string& in_path, const std::string& out_path,
               std::string map_path, std::optional<int> budget_flag) {
    tn::ParsedCover pc = tn::parse_setcover(read_file(in_path));
    if (map_path.empty()) map_path = out_path + ".map";

    tn::BuiltReduction built;
    if (budgeted) {
        tn::MaxCoverInstance mc;
        mc.cover = pc.cover;
        if (budget_flag)
            mc.budget = *budget_flag;
        else if (pc.budget)
            mc.budget = *pc.budget;
        else
            throw tn::Error("budgeted reduction needs a budget (file line or --budget)");
        built = tn::maxcover_to_bmc(mc);
    } else {
        built = tn::setcover_to_mcc(pc.cover);
    }

    tn::Instance inst;
    inst.net = built.net;
    write_file(out_path, tn::serialize_instance(inst));
    write_file(map_path, tn::serialize_mapping(built.map));
    std::cout << "instance=" << tn::instance_hash_hex(inst) << " nodes=" << built.net.n
              << " edges=" << built.net.edge_count << " out=" << out_path << " map=" << map_path
              << "\n";
    return 0;
}

int cmd_verify(const std::string& path, int random_count, bool weighted, int wmax,
               const Shared& sh) {
    std::vector<tn::PropertyResult> results;
    tn::VerifyOptions opt;
    opt.rng_seed = sh.rng_seed;
    opt.weighted = weighted;
    opt.weight_max = wmax;
    if (!path.empty()) {
        std::vector<tn::Instance> corpus;
        corpus.push_back(tn::parse_instance(read_file(path)));
        for (int i = 0; i < random_count; ++i) corpus.push_back(tn::gen_verify_instance(i, opt));
        results = tn::run_property_suite(corpus, sh.rng_seed);
    } else {
        opt.instances = random_count;
        results = tn::run_property_suite(opt);
    }

    bool bad = false;
    for (const auto& r : results) {
        if (r.ok()) {
            std::cout << "PASS " << r.name << " checks=" << r.checks << "\n";
        } else {
            bad = true;
            std::cout << "FAIL " << r.name << " checks=" << r.checks
                      << " violations=" << r.violations << " " << r.first_detail << "\n";
        }
    }
    return bad ? 1 : 0;
}

int cmd_gen_line(int n, int b, const std::string& out, const Shared&) {
    tn::Instance inst;
    inst.net = tn::gen_line(n, b);
    std::string body = tn::serialize_instance(inst);
    if (out.empty())
        std::cout << body;
    else
        write_file(out, body);
    return 0;
}

tn::ThresholdDist parse_tdist(const std::string& s) {
    if (s == "deg") return tn::ThresholdDist::degree_plus_one();
    if (s.rfind("uniform:", 0) == 0) {
        auto rest = s.substr(8);
        auto colon = rest.find(':');
        if (colon != std::string::npos) {
            try {
                int lo = std::stoi(rest.substr(0, colon));
                int hi = std::stoi(rest.substr(colon + 1));
                return tn::ThresholdDist::uniform(lo, hi);
            } catch (...) {
            }
        }
    }
    throw CLI::ValidationError("--tdist", "expected deg or uniform:<lo>:<hi>");
}

int cmd_gen_random(int n, double p, int wmax, const std::string& tdist, const std::string& x0kind,
                   const std::string& out, const Shared& sh) {
    tn::Instance inst;
    inst.net = tn::gen_random(n, p, parse_tdist(tdist), wmax, sh.rng_seed);
    if (x0kind == "random") {
        tn::SplitMix64 rng = tn::SplitMix64::substream(sh.rng_seed, 0x00f0f0f0ULL);
        tn::AdoptionVector bits(n);
        for (int i = 0; i < n; ++i) bits.set(i, rng.next() & 1);
        inst.x0 = bits;
    } else if (x0kind != "zeros") {
        throw CLI::ValidationError("--x0", "expected zeros or random");
    }
    std::string body = tn::serialize_instance(inst);
    if (out.empty())
        std::cout << body;
    else
        write_file(out, body);
    return 0;
}

// ------------------------------ bench ------------------------------

struct BenchFamily {
    std::string kind;  // line | random
    int n = 10;
    double p = 0.2;
    int wmax = 1;
    int b = 1;
    tn::ThresholdDist tdist = tn::ThresholdDist::degree_plus_one();
    int count = 1;
    bool random_x0 = false;
};

struct BenchSpec {
    uint64_t rng_seed = 1;
    tn::SeedingMode mode = tn::SeedingMode::temporary();
    tn::Objective objective = tn::Objective::PermanentCount;
    std::vector<int> budgets{1};
    std::vector<std::string> algos{"greedy", "local", "anneal"};
    int restarts = 4;
    long long max_evals = 5000;
    std::vector<BenchFamily> families;
};

BenchSpec parse_bench_spec(const std::string& text) {
    BenchSpec spec;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    auto fail = [&lineno](const std::string& msg) { return tn::ParseError(lineno, msg); };

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;

        if (kw == "rng-seed") {
            if (!(ls >> spec.rng_seed)) throw fail("expected: rng-seed <u64>");
        } else if (kw == "mode") {
            std::string m;
            if (!(ls >> m)) throw fail("expected: mode temporary|fixed:<d>");
            try {
                spec.mode = parse_mode(m);
            } catch (...) {
                throw fail("bad mode '" + m + "'");
            }
        } else if (kw == "objective") {
            std::string o;
            if (!(ls >> o) || (o != "perm" && o != "avg")) throw fail("expected: objective perm|avg");
            spec.objective =
                o == "avg" ? tn::Objective::AverageAdoption : tn::Objective::PermanentCount;
        } else if (kw == "budgets") {
            std::string list;
            if (!(ls >> list)) throw fail("expected: budgets a,b,c");
            spec.budgets.clear();
            std::istringstream bs(list);
            std::string tok;
            while (std::getline(bs, tok, ',')) {
                try {
                    spec.budgets.push_back(std::stoi(tok));
                } catch (...) {
                    throw fail("bad budget '" + tok + "'");
                }
            }
            if (spec.budgets.empty()) throw fail("empty budget list");
        } else if (kw == "algos") {
            std::string list;
            if (!(ls >> list)) throw fail("expected: algos greedy,local,anneal");
            spec.algos.clear();
            std::istringstream as(list);
            std::string tok;
            while (std::getline(as, tok, ',')) {
                if (tok != "greedy" && tok != "local" && tok != "anneal")
                    throw fail("unknown algo '" + tok + "'");
                spec.algos.push_back(tok);
            }
        } else if (kw == "restarts") {
            if (!(ls >> spec.restarts) || spec.restarts < 1) throw fail("bad restarts");
        } else if (kw == "max-evals") {
            if (!(ls >> spec.max_evals) || spec.max_evals < 1) throw fail("bad max-evals");
        } else if (kw == "family") {
            BenchFamily fam;
            if (!(ls >> fam.kind) || (fam.kind != "line" && fam.kind != "random"))
                throw fail("expected: family line|random key=value ...");
            std::string kv;
            while (ls >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) throw fail("expected key=value, got '" + kv + "'");
                std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                try {
                    if (key == "n")
                        fam.n = std::stoi(val);
                    else if (key == "p")
                        fam.p = std::stod(val);
                    else if (key == "wmax")
                        fam.wmax = std::stoi(val);
                    else if (key == "b")
                        fam.b = std::stoi(val);
                    else if (key == "count")
                        fam.count = std::stoi(val);
                    else if (key == "tdist")
                        fam.tdist = parse_tdist(val);
                    else if (key == "x0")
                        fam.random_x0 = val == "random";
                    else
                        throw fail("unknown family key '" + key + "'");
                } catch (const std::runtime_error&) {
                    throw;
                } catch (...) {
                    throw fail("bad value for '" + key + "'");
                }
            }
            spec.families.push_back(fam);
        } else {
            throw fail("unknown bench directive '" + kw + "'");
        }
    }
    return spec;
}

int cmd_bench(const std::string& spec_path, const std::string& out_path, bool timings) {
    BenchSpec spec = parse_bench_spec(read_file(spec_path));

    tn::SearchConfig cfg;
    cfg.restarts = spec.restarts;
    cfg.max_evals = spec.max_evals;
    cfg.objective = spec.objective;

    std::vector<std::string> rows;
    for (size_t fi = 0; fi < spec.families.size(); ++fi) {
        const BenchFamily& fam = spec.families[fi];
        for (int ii = 0; ii < fam.count; ++ii) {
            uint64_t iseed =
                tn::SplitMix64::substream(spec.rng_seed, fi * 1000003ULL + ii).next();
            tn::Instance inst;
            if (fam.kind == "line")
                inst.net = tn::gen_line(fam.n, fam.b);
            else
                inst.net = tn::gen_random(fam.n, fam.p, fam.tdist, fam.wmax, iseed);
            tn::AdoptionVector x0(inst.net.n);
            if (fam.random_x0) {
                tn::SplitMix64 rng(iseed ^ 0xb0b0ULL);
                for (int i = 0; i < inst.net.n; ++i) x0.set(i, rng.next() & 1);
                inst.x0 = x0;
            }
            std::string hash = tn::instance_hash_hex(inst);

            for (const std::string& algo : spec.algos) {
                for (int budget : spec.budgets) {
                    cfg.rng_seed = iseed ^ 0x5157ULL;
                    auto t0 = std::chrono::steady_clock::now();
                    tn::SearchResult res;
                    if (algo == "greedy")
                        res = tn::greedy_bmc(inst.net, x0, spec.mode, budget, cfg);
                    else if (algo == "local")
                        res = tn::local_search(inst.net, x0, spec.mode, budget, cfg);
                    else
                        res = tn::anneal(inst.net, x0, spec.mode, budget, cfg);
                    long long ms = elapsed_ms(t0);

                    tn::Intervention iv{res.seeds, spec.mode};
                    tn::ConvergenceReport rep = tn::evolve(inst.net, x0, iv);
                    rows.push_back(csv_row(
                        {hash, std::to_string(inst.net.n), std::to_string(inst.net.edge_count),
                         std::to_string(inst.net.weight_sum), algo, std::to_string(budget),
                         value_text(res.value, spec.objective), std::to_string(res.eval_count),
                         std::to_string(rep.transient_time), std::to_string(rep.operation_count),
                         timings ? std::to_string(ms) : ""}));
                }
            }
        }
    }

    std::sort(rows.begin(), rows.end());
    std::string csv = "instance,n,edges,wsum,algo,budget,value,evals,transient,ops,wall_ms\n";
    for (const auto& r : rows) csv += r;
    if (out_path.empty())
        std::cout << csv;
    else
        write_file(out_path, csv);
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"reversible-threshold network dynamics toolkit"};
    app.require_subcommand(1);
    Shared sh;
    app.add_option("--rng-seed", sh.rng_seed, "seed for every stochastic component");
    app.add_option("--mode", sh.mode, "seeding mode: temporary | fixed:<d>");
    app.add_option("--objective", sh.objective, "perm | avg")
        ->check(CLI::IsMember({"perm", "avg"}));
    app.add_option("--release-phase", sh.release, "first | second")
        ->check(CLI::IsMember({"first", "second"}));
    app.add_flag("--timings", sh.timings, "fill wall-clock columns (breaks byte reproducibility)");
    app.fallthrough();

    std::string path, out, map_path, algo = "greedy", problem = "bmc";
    int budget = 1, random_count = 100, wmax = 4;
    bool trace = false, weighted = false;
    tn::SearchConfig cfg;

    auto* sim = app.add_subcommand("simulate", "run the dynamics and report the limit cycle");
    sim->add_option("instance", path)->required();
    sim->add_flag("--trace", trace, "print one line per step");

    auto* ev = app.add_subcommand("evaluate", "one-line summary record");
    ev->add_option("instance", path)->required();

    auto* opt = app.add_subcommand("optimize", "heuristic seed-set search");
    opt->add_option("instance", path)->required();
    opt->add_option("--algo", algo, "greedy | local | anneal");
    opt->add_option("--problem", problem, "bmc | mcc")->check(CLI::IsMember({"bmc", "mcc"}));
    opt->add_option("--budget", budget, "seed budget");
    opt->add_option("--restarts", cfg.restarts);
    opt->add_option("--max-evals", cfg.max_evals);
    opt->add_option("--t0", cfg.initial_temp, "annealing start temperature");
    opt->add_option("--decay", cfg.decay, "annealing temperature decay");

    auto* orc = app.add_subcommand("oracle", "exact brute-force answers");
    auto* orc_cycle = orc->add_subcommand("cycle", "exact limit cycle by state hashing");
    orc_cycle->add_option("instance", path)->required();
    auto* orc_mcc = orc->add_subcommand("mcc", "smallest all-converting seed set");
    orc_mcc->add_option("instance", path)->required();
    auto* orc_bmc = orc->add_subcommand("bmc", "best seed set within budget");
    orc_bmc->add_option("instance", path)->required();
    orc_bmc->add_option("--budget", budget)->required();
    orc->require_subcommand(1);

    auto* red = app.add_subcommand("reduce", "build instances from cover problems");
    std::optional<int> budget_flag;
    auto* red_sc = red->add_subcommand("setcover", "full-conversion construction");
    red_sc->add_option("cover", path)->required();
    red_sc->add_option("-o,--out", out)->required();
    red_sc->add_option("--map", map_path, "mapping sidecar path (default <out>.map)");
    auto* red_mc = red->add_subcommand("maxcover", "budgeted-conversion construction");
    red_mc->add_option("cover", path)->required();
    red_mc->add_option("-o,--out", out)->required();
    red_mc->add_option("--map", map_path, "mapping sidecar path (default <out>.map)");
    red_mc->add_option("--budget", budget_flag, "overrides the file budget");
    red->require_subcommand(1);

    auto* ver = app.add_subcommand("verify", "run the dynamics property suite");
    ver->add_option("instance", path, "also exercise this instance");
    ver->add_option("--random", random_count, "random instances to generate");
    ver->add_flag("--weighted", weighted, "draw edge weights above 1");
    ver->add_option("--wmax", wmax, "largest edge weight for --weighted");

    auto* gen = app.add_subcommand("gen", "instance generators");
    int gn = 10, gb = 1;
    double gp = 0.2;
    int gwmax = 1;
    std::string tdist = "deg", x0kind = "zeros";
    auto* gen_line = gen->add_subcommand("line", "path graph with constant threshold");
    gen_line->add_option("--n", gn)->required();
    gen_line->add_option("--b", gb, "threshold at every node");
    gen_line->add_option("-o,--out", out);
    auto* gen_rand = gen->add_subcommand("random", "G(n,p) with random thresholds");
    gen_rand->add_option("--n", gn)->required();
    gen_rand->add_option("--p", gp)->required();
    gen_rand->add_option("--wmax", gwmax, "weights uniform in 1..wmax");
    gen_rand->add_option("--tdist", tdist, "deg | uniform:<lo>:<hi>");
    gen_rand->add_option("--x0", x0kind, "zeros | random");
    gen_rand->add_option("-o,--out", out);
    gen->require_subcommand(1);

    auto* ben = app.add_subcommand("bench", "run heuristics over generated families");
    ben->add_option("spec", path)->required();
    ben->add_option("-o,--out", out, "CSV output path (default stdout)");

    for (CLI::App* sub : {sim, ev, opt, orc, orc_cycle, orc_mcc, orc_bmc, red, red_sc, red_mc,
                          ver, gen, gen_line, gen_rand, ben})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.rng_seed = sh.rng_seed;
    cfg.objective = sh.obj();

    if (sim->parsed()) return cmd_simulate(path, trace, sh);
    if (ev->parsed()) return cmd_evaluate(path, sh);
    if (opt->parsed()) return cmd_optimize(path, algo, problem, budget, cfg, sh);
    if (orc->parsed()) {
        if (orc_cycle->parsed()) return cmd_oracle_cycle(path, sh);
        if (orc_mcc->parsed()) return cmd_oracle_mcc(path, sh);
        return cmd_oracle_bmc(path, budget, sh);
    }
    if (red->parsed())
        return cmd_reduce(red_mc->parsed(), path, out, map_path, budget_flag);
    if (ver->parsed()) return cmd_verify(path, random_count, weighted, wmax, sh);
    if (gen->parsed()) {
        if (gen_line->parsed()) return cmd_gen_line(gn, gb, out, sh);
        return cmd_gen_random(gn, gp, gwmax, tdist, x0kind, out, sh);
    }
    if (ben->parsed()) return cmd_bench(path, out, sh.timings);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const tn::BoundViolation& e) {
        std::cerr << "bound violation: " << e.what() << "\n";
        return 3;
    } catch (const tn::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const tn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
