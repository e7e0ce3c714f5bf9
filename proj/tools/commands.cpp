#include "commands.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "holedyn/parallel.hpp"

namespace holedyn::cli {

namespace {

using json = nlohmann::ordered_json;

struct Settings {
    std::size_t cap = 0;  // 0: per-pair default
    std::size_t kmax = 20;
    unsigned nmax = 16;
    std::size_t spec_nmax = 64;
    std::size_t window = 5;
    double tol = 1e-10;
    bool at_most = false;

    SpecOptions spec() const { return SpecOptions{spec_nmax, window, at_most}; }
    SpectralOptions spectral() const { return SpectralOptions{tol, 100000}; }
};

void load_config(const std::string& path, Settings& s) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::InvalidLiteral, "cannot read config " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto eq = line.find('=');
        auto trim = [](std::string t) {
            t.erase(0, t.find_first_not_of(" \t\r"));
            t.erase(t.find_last_not_of(" \t\r") + 1);
            return t;
        };
        if (trim(line).empty()) continue;
        if (eq == std::string::npos) throw Error(Errc::InvalidLiteral, "config line without '=': " + line);
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        try {
            if (key == "cap") s.cap = std::stoul(val);
            else if (key == "kmax") s.kmax = std::stoul(val);
            else if (key == "nmax") s.nmax = static_cast<unsigned>(std::stoul(val));
            else if (key == "spec_nmax") s.spec_nmax = std::stoul(val);
            else if (key == "window") s.window = std::stoul(val);
            else if (key == "tol") s.tol = std::stod(val);
            else if (key == "at_most") s.at_most = val == "1" || val == "true";
            else throw Error(Errc::InvalidLiteral, "unknown config key " + key);
        } catch (const std::logic_error&) {
            throw Error(Errc::InvalidLiteral, "bad config value for " + key);
        }
    }
}

json pair_json(const LexPair& p) { return json{{"alpha", p.alpha.str()}, {"beta", p.beta.str()}}; }

json opt_num(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }
json opt_num(const std::optional<std::size_t>& x) { return x ? json(*x) : json(nullptr); }

json entropy_json(const LexPair& p, const EntropyReport& e) {
    json j{{"h", opt_num(e.h)}, {"lower", e.lower}, {"upper", e.upper}, {"dim_H", opt_num(e.dim_h)},
           {"sft", e.sft}, {"states", e.states}};
    j["forbidden_factors"] = p.periodic() && in_lw(p) ? json(forbidden_factors(p)) : json(nullptr);
    return j;
}

json renorm_json(const RenormVerdict& v) {
    json j{{"kind", to_string(v.kind)}};
    switch (v.kind) {
        case RenormVerdict::Essential: j["assoc"] = json::array({v.omega, v.nu}); break;
        case RenormVerdict::Renormalizable:
            j["omega"] = v.omega;
            j["nu"] = v.nu;
            j["trivial"] = v.trivial;
            j["tail_form"] = to_string(v.tail);
            j["alpha_blocks"] = v.alpha_blocks.stream().str();
            j["beta_blocks"] = v.beta_blocks.stream().str();
            break;
        case RenormVerdict::InfiniteRenorm:
            j["finite_word"] = v.finite_word;
            j["side"] = v.side == RenormVerdict::Side::Alpha ? "Alpha" : "Beta";
            break;
        case RenormVerdict::Inconclusive: break;
    }
    j["cap"] = v.cap;
    return j;
}

json transitivity_json(const TransitivityVerdict& t) {
    json j{{"kind", to_string(t.kind)}, {"reason", to_string(t.reason)}};
    j["witness"] = t.witness ? json::array({t.witness->first, t.witness->second}) : json(nullptr);
    j["witness_verified"] = t.witness_verified;
    j["cap"] = t.cap;
    return j;
}

json spec_json(const SpecReport& r) {
    json m = json::object();
    for (auto [n, v] : r.m_values) m[std::to_string(n)] = v;
    json j{{"m_values", m}, {"spec_number", opt_num(r.spec_number)}, {"exact", r.exact}, {"verdict", to_string(r.verdict)}};
    if (!r.evidence.empty()) {
        json ev = json::array();
        for (const auto& e : r.evidence)
            ev.push_back(json{{"stage", e.stage}, {"bridge_length", e.bridge_length}, {"spec_number", opt_num(e.spec_number)}});
        j["evidence"] = ev;
    }
    return j;
}

Hole parse_hole(const std::string& a, const std::string& b) { return Hole{parse_rational(a), parse_rational(b)}; }

json analyze_hole(const Hole& h, const Settings& s) {
    HoleClass c = validate_hole(h);
    if (c != HoleClass::CentredCandidate) throw Error(Errc::InvalidInterval, std::string("hole class ") + to_string(c));
    LexPair raw = hole_to_pair(h);
    PairClass cls = classify(raw);
    LexPair p = normalize(raw);
    json j;
    j["hole"] = json::array({to_string(h.a), to_string(h.b)});
    j["raw_pair"] = pair_json(raw);
    j["normalized_pair"] = pair_json(p);
    j["class"] = to_string(cls);
    EntropyReport e = entropy(p, s.spectral());
    j["sft"] = e.sft;
    j["entropy"] = entropy_json(p, e);
    TransitivityVerdict t = transitivity(p, s.cap);
    j["renorm"] = renorm_json(t.renorm);
    j["transitivity"] = transitivity_json(t);
    if (p.periodic() && t.kind == TransitivityVerdict::Transitive) j["spec"] = spec_json(spec_report(p, s.spec()));
    j["bad_periods"] = bad_periods(h, s.nmax, Exec::Parallel);
    SMembership sm = s_membership(h);
    j["s_membership"] = json{{"n", opt_num(sm.n)}, {"m", opt_num(sm.m)}, {"in_s", sm.in_s()}};
    return j;
}

std::pair<unsigned, unsigned> parse_grid(const std::string& g) {
    auto x = g.find('x');
    try {
        if (x != std::string::npos) {
            unsigned w = static_cast<unsigned>(std::stoul(g.substr(0, x))), hh = static_cast<unsigned>(std::stoul(g.substr(x + 1)));
            if (w > 0 && hh > 0) return {w, hh};
        }
    } catch (const std::logic_error&) {
    }
    throw Error(Errc::InvalidLiteral, "grid must be WxH, got " + g);
}

// interior grid of the centred rectangle (1/4,1/2) x (1/2,3/4), ordered by (a, b)
void grid_sweep(const std::string& spec, bool csv, const Settings& s, std::ostream& out) {
    auto [w, hh] = parse_grid(spec);
    std::vector<Hole> holes;
    for (unsigned i = 1; i <= w; ++i)
        for (unsigned k = 1; k <= hh; ++k) {
            Q a = Q(1, 4) + Q(i, 4 * (w + 1)), b = Q(1, 2) + Q(k, 4 * (hh + 1));
            a.canonicalize();
            b.canonicalize();
            holes.push_back(Hole{a, b});
        }
    std::vector<json> rows(holes.size());
    for_each_index(holes.size(), [&](std::size_t i) {
        const Hole& h = holes[i];
        LexPair p = normalize(hole_to_pair(h));
        EntropyReport e = entropy(p, s.spectral());
        TransitivityVerdict t = transitivity(p, s.cap);
        rows[i] = json{{"a", to_string(h.a)}, {"b", to_string(h.b)}, {"alpha", p.alpha.str()}, {"beta", p.beta.str()},
                       {"sft", e.sft}, {"h", e.h ? json(*e.h) : json(e.upper)}, {"transitivity", to_string(t.kind)}};
    }, Exec::Parallel);
    if (csv) {
        out << "a,b,alpha,beta,sft,h,transitivity\n";
        for (const json& r : rows)
            out << r["a"].get<std::string>() << ',' << r["b"].get<std::string>() << ',' << r["alpha"].get<std::string>() << ','
                << r["beta"].get<std::string>() << ',' << (r["sft"].get<bool>() ? "true" : "false") << ',' << r["h"].dump() << ','
                << r["transitivity"].get<std::string>() << '\n';
    } else {
        out << json(rows).dump(2) << '\n';
    }
}

void staircase(std::size_t samples, const std::string& path, std::ostream& out) {
    if (samples < 2) throw Error(Errc::InvalidLiteral, "samples must be >= 2");
    std::vector<Q> xs;
    for (std::size_t i = 0; i < samples; ++i) {
        Q x = Q(1, 2) + Q(static_cast<unsigned long>(i), 2 * static_cast<unsigned long>(samples - 1));
        x.canonicalize();
        xs.push_back(x);
    }
    std::ostringstream csv;
    csv << "x,y\n";
    for (const auto& [x, y] : staircase_sample(xs)) csv << to_string(x) << ',' << to_string(y) << '\n';
    if (path.empty() || path == "-") {
        out << csv.str();
        return;
    }
    std::ofstream f(path);
    if (!f || !(f << csv.str())) throw std::runtime_error("cannot write " + path);
}

WordPair parse_word_pair(const std::string& t) {
    auto c = t.find(',');
    if (c == std::string::npos) throw Error(Errc::InvalidLiteral, "expected omega,nu got " + t);
    return {t.substr(0, c), t.substr(c + 1)};
}

json family(const std::string& mode, std::size_t stages, const std::string& seed_lit, const std::vector<std::string>& prime_lits,
            const Settings& s) {
    if (stages == 0) throw Error(Errc::PreconditionViolation, "stages must be >= 1");
    WordPair seed = parse_word_pair(seed_lit);
    std::vector<WordPair> primes;
    for (const auto& l : prime_lits) primes.push_back(parse_word_pair(l));
    std::vector<LexPair> pairs{pair_from_assoc(seed)};
    std::vector<LexPair> built;
    if (mode == "spec") {
        built = build_spec_family(seed, primes, stages - 1);
    } else if (mode == "nospec") {
        std::vector<std::pair<unsigned, unsigned>> ex(stages - 1, {2, 2});
        built = build_nospec_family(seed, primes, ex, stages - 1);
    } else {
        throw Error(Errc::InvalidLiteral, "mode must be spec or nospec");
    }
    pairs.insert(pairs.end(), built.begin(), built.end());
    std::vector<FamilyStage> st = analyze_stages(pairs, s.spec(), Exec::Parallel);
    json arr = json::array();
    for (std::size_t i = 0; i < st.size(); ++i) {
        json r = spec_json(st[i].report);
        r["stage"] = i + 1;
        r["pair"] = pair_json(st[i].pair);
        r["bridge"] = json{{"p1", st[i].bridge.p1}, {"p2", st[i].bridge.p2}, {"verified", st[i].bridge.verified}};
        r["bridge_length"] = st[i].bridge.p1.size() + st[i].bridge.p2.size();
        arr.push_back(r);
    }
    return json{{"mode", mode}, {"stages", arr}, {"verdict", to_string(spec_verdict(st))}};
}

int exit_code(Errc c) {
    switch (c) {
        case Errc::NonStabilized: return 3;
        default: return 2;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symbolic dynamics of the doubling map with a hole", "holedyn"};
    app.require_subcommand(1);
    Settings s;
    std::string config;
    std::size_t cap = 0, kmax = 0, spec_nmax = 0;
    unsigned nmax = 0;
    bool as_json = false, as_csv = false;
    app.add_option("--config", config, "key=value file with search caps");
    auto* o_cap = app.add_option("--cap", cap, "renormalisation search cap");
    auto* o_nmax = app.add_option("--nmax", nmax, "largest period for bad periods");
    auto* o_kmax = app.add_option("--kmax", kmax, "bridge length bound for brute-force checks");
    auto* o_snmax = app.add_option("--spec-nmax", spec_nmax, "largest n for m_n");
    app.add_flag("--json", as_json, "JSON output (default)");
    app.add_flag("--csv", as_csv, "CSV output where supported");
    app.fallthrough();

    std::string a, b, alpha, beta, grid, rlit, out_path = "-", mode = "spec", seed = "011,100";
    std::vector<std::string> primes{"01101,1001", "01,10"};
    std::size_t samples = 0, stages = 3;
    bool bf = false;

    auto* analyze = app.add_subcommand("analyze", "full pipeline for a hole (a,b)");
    analyze->add_option("a", a);
    analyze->add_option("b", b);
    analyze->add_option("--grid", grid, "sweep a WxH grid of holes");

    auto* stair = app.add_subcommand("staircase", "sample the devil's staircase on [1/2,1]");
    stair->add_option("samples", samples)->required();
    stair->add_option("out", out_path);

    auto* badp = app.add_subcommand("badperiods", "periods all of whose orbits meet the hole");
    badp->add_option("a", a)->required();
    badp->add_option("b", b)->required();

    auto add_pair = [&](CLI::App* c) {
        c->add_option("alpha", alpha)->required();
        c->add_option("beta", beta)->required();
    };
    auto* ent = app.add_subcommand("entropy", "topological entropy of a pair");
    add_pair(ent);
    auto* trans = app.add_subcommand("transitive", "transitivity verdict of a pair");
    add_pair(trans);
    trans->add_flag("--brute-force", bf, "cross-check with bounded bridge search");
    auto* ren = app.add_subcommand("renorm", "renormalisation verdict of a pair");
    add_pair(ren);
    auto* stu = app.add_subcommand("sturmian", "cyclically balanced words of ratio r");
    stu->add_option("r", rlit)->required();
    auto* spn = app.add_subcommand("specnum", "m_n and specification number of a periodic pair");
    add_pair(spn);
    auto* fam = app.add_subcommand("specfamily", "stages of a specification / no-specification family");
    fam->add_option("--mode", mode)->check(CLI::IsMember({"spec", "nospec"}));
    fam->add_option("--stages", stages, "number of stages including the seed");
    fam->add_option("--seed", seed, "omega,nu of the seed");
    fam->add_option("--primes", primes, "omega',nu' per built stage");

    std::vector<const char*> argv{"holedyn"};
    for (const auto& x : args) argv.push_back(x.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (!config.empty()) load_config(config, s);
        if (o_cap->count()) s.cap = cap;
        if (o_nmax->count()) s.nmax = nmax;
        if (o_kmax->count()) s.kmax = kmax;
        if (o_snmax->count()) s.spec_nmax = spec_nmax;
        if (as_json && as_csv) throw Error(Errc::InvalidLiteral, "--json and --csv are exclusive");
        auto emit = [&](const json& j) { out << j.dump(2) << '\n'; };

        if (*analyze) {
            if (!grid.empty()) {
                if (!a.empty()) throw Error(Errc::InvalidLiteral, "--grid takes no hole");
                grid_sweep(grid, as_csv, s, out);
                return 0;
            }
            if (a.empty() || b.empty()) throw Error(Errc::InvalidLiteral, "analyze needs a and b");
            emit(analyze_hole(parse_hole(a, b), s));
        } else if (*stair) {
            staircase(samples, out_path, out);
        } else if (*badp) {
            Hole h = parse_hole(a, b);
            if (h.a >= h.b) throw Error(Errc::InvalidInterval, "a >= b");
            auto bp = bad_periods(h, s.nmax, Exec::Parallel);
            if (as_csv) {
                out << "period\n";
                for (unsigned n : bp) out << n << '\n';
            } else {
                emit(json{{"hole", json::array({to_string(h.a), to_string(h.b)})}, {"nmax", s.nmax}, {"bad_periods", bp}});
            }
        } else if (*ent) {
            LexPair p = LexPair::parse(alpha, beta);
            emit(json{{"pair", pair_json(p)}, {"entropy", entropy_json(p, entropy(p, s.spectral()))}});
        } else if (*trans) {
            LexPair p = LexPair::parse(alpha, beta);
            TransitivityVerdict t = transitivity(p, s.cap);
            json j{{"pair", pair_json(p)}, {"transitivity", transitivity_json(t)}, {"renorm", renorm_json(t.renorm)}};
            if (bf) j["brute_force"] = brute_force_transitive(p, p.alpha.orbit_bound() + p.beta.orbit_bound(), s.kmax);
            emit(j);
            if (t.kind == TransitivityVerdict::Unknown) return 3;
        } else if (*ren) {
            LexPair p = LexPair::parse(alpha, beta);
            RenormVerdict v = detect_renorm(p, s.cap, Exec::Parallel);
            emit(json{{"pair", pair_json(p)}, {"renorm", renorm_json(v)}});
            if (v.kind == RenormVerdict::Inconclusive) return 3;
        } else if (*stu) {
            auto [om, nu] = sturmian_words(parse_rational(rlit));
            emit(json{{"omega", om}, {"nu", nu}});
        } else if (*spn) {
            LexPair p = LexPair::parse(alpha, beta);
            if (!p.periodic()) throw Error(Errc::NotPeriodic, p.str());
            SpecReport r = spec_report(p, s.spec());
            emit(json{{"pair", pair_json(p)}, {"spec", spec_json(r)}});
            if (r.verdict == SpecReport::Unknown) return 3;
        } else if (*fam) {
            emit(family(mode, stages, seed, primes, s));
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace holedyn::cli
