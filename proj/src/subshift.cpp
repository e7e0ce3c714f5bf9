#include "holedyn/subshift.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

namespace holedyn {

int Dfa::run(std::string_view w, int from) const {
    int s = from;
    for (char c : w) {
        if (s < 0) return -1;
        s = next[static_cast<std::size_t>(s)][c == '1'];
    }
    return s;
}

Dfa prune(const std::vector<std::array<int, 2>>& next, int start) {
    const std::size_t n = next.size();
    std::vector<char> alive(n, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < n; ++s) {
            if (!alive[s]) continue;
            bool out = false;
            for (int t : next[s]) out |= t >= 0 && alive[static_cast<std::size_t>(t)];
            if (!out) {
                alive[s] = 0;
                changed = true;
            }
        }
    }
    Dfa d;
    if (!alive[static_cast<std::size_t>(start)]) throw Error(Errc::NotInLW, "empty subshift");
    // renumber in BFS order from start so that isomorphic inputs give identical output
    std::vector<int> id(n, -1);
    std::deque<int> queue{start};
    id[static_cast<std::size_t>(start)] = 0;
    std::vector<int> order{start};
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int t : next[static_cast<std::size_t>(s)]) {
            if (t < 0 || !alive[static_cast<std::size_t>(t)] || id[static_cast<std::size_t>(t)] >= 0) continue;
            id[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
            order.push_back(t);
            queue.push_back(t);
        }
    }
    d.next.resize(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        for (int c = 0; c < 2; ++c) {
            int t = next[static_cast<std::size_t>(order[k])][static_cast<std::size_t>(c)];
            d.next[k][static_cast<std::size_t>(c)] =
                (t >= 0 && alive[static_cast<std::size_t>(t)]) ? id[static_cast<std::size_t>(t)] : -1;
        }
    }
    d.start = 0;
    return d;
}

namespace {

// Longest k <= i+1 with per[0..k-1) == per[i-k+1..i) and per[k-1] == s, reduced mod q.
int fallback(const Word& per, int i, char s) {
    const int q = static_cast<int>(per.size());
    for (int k = i + 1; k >= 1; --k) {
        if (per[static_cast<std::size_t>(k - 1)] != s) continue;
        if (per.compare(0, static_cast<std::size_t>(k - 1), per, static_cast<std::size_t>(i - k + 1),
                        static_cast<std::size_t>(k - 1)) == 0)
            return k % q;
    }
    return 0;
}

int step_upper(const Word& per, int i, char s) {
    const char c = per[static_cast<std::size_t>(i)];
    if (s > c) return -1;
    if (s == c) return (i + 1) % static_cast<int>(per.size());
    return fallback(per, i, s);
}

int step_lower(const Word& per, int j, char s) {
    const char c = per[static_cast<std::size_t>(j)];
    if (s < c) return -1;
    if (s == c) return (j + 1) % static_cast<int>(per.size());
    return fallback(per, j, s);
}

}  // namespace

WindowAutomaton build_automaton(const LexPair& p) {
    if (!p.periodic()) throw Error(Errc::NotPeriodic, "window automaton needs purely periodic components");
    if (!in_lw(p)) throw Error(Errc::NotInLW, p.str());
    const Word& a = p.alpha.per();
    const Word& b = p.beta.per();
    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> labels;
    std::vector<std::array<int, 2>> next;
    std::deque<int> queue;
    auto intern = [&](std::pair<int, int> st) {
        auto [it, fresh] = id.emplace(st, static_cast<int>(labels.size()));
        if (fresh) {
            labels.push_back(st);
            next.push_back({-1, -1});
            queue.push_back(it->second);
        }
        return it->second;
    };
    intern({0, 0});
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        auto [i, j] = labels[static_cast<std::size_t>(s)];
        for (char c : {'0', '1'}) {
            int ni = step_upper(a, i, c), nj = step_lower(b, j, c);
            int t = (ni < 0 || nj < 0) ? -1 : intern({ni, nj});
            next[static_cast<std::size_t>(s)][c == '1'] = t;
        }
    }
    // prune renumbers; carry the labels across by replaying the BFS order
    Dfa d = prune(next, 0);
    WindowAutomaton w;
    w.labels.resize(d.size());
    std::vector<int> old_of(d.size(), -1);
    old_of[0] = 0;
    std::deque<int> q2{0};
    std::vector<char> seen(d.size(), 0);
    seen[0] = 1;
    while (!q2.empty()) {
        int s = q2.front();
        q2.pop_front();
        for (int c = 0; c < 2; ++c) {
            int t = d.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)];
            if (t < 0 || seen[static_cast<std::size_t>(t)]) continue;
            seen[static_cast<std::size_t>(t)] = 1;
            old_of[static_cast<std::size_t>(t)] = next[static_cast<std::size_t>(old_of[static_cast<std::size_t>(s)])][static_cast<std::size_t>(c)];
            q2.push_back(t);
        }
    }
    for (std::size_t k = 0; k < d.size(); ++k) w.labels[k] = labels[static_cast<std::size_t>(old_of[k])];
    w.dfa = std::move(d);
    return w;
}

Dfa build_language_dfa(const LexPair& p) {
    using Tied = std::vector<std::uint32_t>;
    using State = std::pair<Tied, Tied>;
    std::map<State, int> id;
    std::vector<State> states;
    std::vector<std::array<int, 2>> next;
    std::deque<int> queue;
    auto intern = [&](State st) {
        auto [it, fresh] = id.emplace(st, static_cast<int>(states.size()));
        if (fresh) {
            states.push_back(std::move(st));
            next.push_back({-1, -1});
            queue.push_back(it->second);
        }
        return it->second;
    };
    // Each tied suffix still equals a prefix of alpha (beta); we keep the index to compare next.
    auto advance = [](const EpSeq& ref, const Tied& tied, char s, bool upper, bool& dead) {
        Tied out;
        auto visit = [&](std::uint32_t idx) {
            char c = ref.at(idx);
            if (upper ? s > c : s < c) dead = true;
            else if (s == c) out.push_back(static_cast<std::uint32_t>(ref.normalize_index(idx + 1)));
        };
        visit(0);
        for (auto idx : tied) visit(idx);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };
    intern(State{});
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (char c : {'0', '1'}) {
            bool dead = false;
            State cur = states[static_cast<std::size_t>(s)];
            Tied ta = advance(p.alpha, cur.first, c, true, dead);
            Tied tb = advance(p.beta, cur.second, c, false, dead);
            next[static_cast<std::size_t>(s)][c == '1'] = dead ? -1 : intern(State{std::move(ta), std::move(tb)});
        }
    }
    return prune(next, 0);
}

Dfa presentation(const LexPair& p) {
    if (p.periodic() && in_lw(p)) return build_automaton(p).dfa;
    return build_language_dfa(p);
}

mpz_class count_paths(const Dfa& d, std::size_t n) {
    std::vector<mpz_class> cur(d.size(), 0), nxt(d.size());
    cur[static_cast<std::size_t>(d.start)] = 1;
    for (std::size_t step = 0; step < n; ++step) {
        std::fill(nxt.begin(), nxt.end(), 0);
        for (std::size_t s = 0; s < d.size(); ++s) {
            if (cur[s] == 0) continue;
            for (int t : d.next[s])
                if (t >= 0) nxt[static_cast<std::size_t>(t)] += cur[s];
        }
        std::swap(cur, nxt);
    }
    mpz_class total = 0;
    for (auto& v : cur) total += v;
    return total;
}

std::vector<Word> words_of_length(const Dfa& d, std::size_t n) {
    std::vector<Word> out;
    Word w;
    auto rec = [&](auto&& self, int s) -> void {
        if (w.size() == n) {
            out.push_back(w);
            return;
        }
        for (int c = 0; c < 2; ++c) {
            int t = d.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)];
            if (t < 0) continue;
            w.push_back(static_cast<char>('0' + c));
            self(self, t);
            w.pop_back();
        }
    };
    rec(rec, d.start);
    return out;
}

std::vector<int> scc_ids(const Dfa& d, int& count) {
    // iterative Tarjan
    const int n = static_cast<int>(d.size());
    std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
        comp(static_cast<std::size_t>(n), -1);
    std::vector<char> on(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    std::vector<std::pair<int, int>> call;
    int counter = 0;
    count = 0;
    for (int root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] >= 0) continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            auto& [v, edge] = call.back();
            auto uv = static_cast<std::size_t>(v);
            if (edge == 0 && index[uv] < 0) {
                index[uv] = low[uv] = counter++;
                stack.push_back(v);
                on[uv] = 1;
            }
            if (edge < 2) {
                int w = d.next[uv][static_cast<std::size_t>(edge)];
                ++edge;
                if (w < 0) continue;
                auto uw = static_cast<std::size_t>(w);
                if (index[uw] < 0) {
                    call.push_back({w, 0});
                } else if (on[uw]) {
                    low[uv] = std::min(low[uv], index[uw]);
                }
                continue;
            }
            if (low[uv] == index[uv]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on[static_cast<std::size_t>(w)] = 0;
                    comp[static_cast<std::size_t>(w)] = count;
                } while (w != v);
                ++count;
            }
            int done = v;
            call.pop_back();
            if (!call.empty()) {
                auto up = static_cast<std::size_t>(call.back().first);
                low[up] = std::min(low[up], low[static_cast<std::size_t>(done)]);
            }
        }
    }
    return comp;
}

double spectral_radius(const Dfa& d, const SpectralOptions& opt) {
    int ncomp = 0;
    std::vector<int> comp = scc_ids(d, ncomp);
    std::vector<std::vector<int>> members(static_cast<std::size_t>(ncomp));
    for (std::size_t s = 0; s < d.size(); ++s) members[static_cast<std::size_t>(comp[s])].push_back(static_cast<int>(s));
    double best = 0;
    for (int c = 0; c < ncomp; ++c) {
        const auto& mem = members[static_cast<std::size_t>(c)];
        std::map<int, std::size_t> local;
        for (std::size_t k = 0; k < mem.size(); ++k) local[mem[k]] = k;
        std::vector<std::vector<std::size_t>> in_edges(mem.size());
        bool any = false, cycle_only = true;
        for (std::size_t k = 0; k < mem.size(); ++k) {
            std::size_t outdeg = 0;
            for (int t : d.next[static_cast<std::size_t>(mem[k])]) {
                if (t >= 0 && comp[static_cast<std::size_t>(t)] == c) {
                    in_edges[local[t]].push_back(k);
                    ++outdeg;
                    any = true;
                }
            }
            if (outdeg != 1) cycle_only = false;
        }
        if (!any) continue;
        if (cycle_only) {
            best = std::max(best, 1.0);
            continue;
        }
        // power iteration on A + I with Collatz-Wielandt bounds
        std::vector<double> v(mem.size(), 1.0), w(mem.size());
        double est = 0;
        for (std::size_t it = 0; it < opt.max_iter; ++it) {
            double lo = INFINITY, hi = 0, mx = 0;
            for (std::size_t k = 0; k < mem.size(); ++k) {
                double acc = v[k];
                for (std::size_t from : in_edges[k]) acc += v[from];
                w[k] = acc;
                lo = std::min(lo, acc / v[k]);
                hi = std::max(hi, acc / v[k]);
                mx = std::max(mx, acc);
            }
            est = 0.5 * (lo + hi);
            for (std::size_t k = 0; k < mem.size(); ++k) v[k] = w[k] / mx;
            if (hi - lo <= opt.tol * lo) break;
        }
        best = std::max(best, est - 1.0);
    }
    return best;
}

std::vector<Word> forbidden_factors(const LexPair& p) {
    if (!p.periodic()) throw Error(Errc::NotPeriodic, "forbidden factors need periodic components");
    if (!in_lw(p)) throw Error(Errc::NotInLW, p.str());
    std::set<Word> raw;
    const Word& a = p.alpha.per();
    const Word& b = p.beta.per();
    for (std::size_t k = 1; k <= a.size(); ++k)
        if (a[k - 1] == '0') raw.insert(a.substr(0, k - 1) + "1");
    for (std::size_t k = 1; k <= b.size(); ++k)
        if (b[k - 1] == '1') raw.insert(b.substr(0, k - 1) + "0");
    std::vector<Word> out;
    for (const Word& w : raw) {
        bool minimal = true;
        for (const Word& u : raw)
            if (u.size() < w.size() && w.find(u) != Word::npos) minimal = false;
        if (minimal) out.push_back(w);
    }
    std::sort(out.begin(), out.end(), [](const Word& x, const Word& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

WordCount count_words(const LexPair& p, std::size_t n) { return WordCount{count_paths(presentation(p), n), true}; }

EntropyReport entropy(const LexPair& p, const SpectralOptions& opt) {
    EntropyReport r;
    r.sft = is_sft(p);
    if (p.periodic()) {
        WindowAutomaton w = build_automaton(p);
        double h = std::log2(spectral_radius(w.dfa, opt));
        if (h < 0) h = 0;
        r.h = r.dim_h = h;
        r.lower = r.upper = h;
        r.states = w.dfa.size();
        return r;
    }
    Dfa d = build_language_dfa(p);
    r.states = d.size();
    r.upper = std::max(0.0, std::log2(spectral_radius(d, opt)));
    for (const LexPair& q : periodic_approximations(p, 12))
        r.lower = std::max(r.lower, std::max(0.0, std::log2(spectral_radius(build_automaton(q).dfa, opt))));
    return r;
}

bool is_sft(const LexPair& p) { return p.periodic(); }

bool point_in(const LexPair& p, const EpSeq& x) {
    for (const EpSeq& s : distinct_shifts(x))
        if (lex_less(s, p.beta) || lex_less(p.alpha, s)) return false;
    return true;
}

bool same_language_upto(const LexPair& p1, const LexPair& p2, std::size_t n) {
    if (p1 == p2) return true;
    Dfa d1 = build_language_dfa(p1), d2 = build_language_dfa(p2);
    std::set<std::pair<int, int>> layer{{d1.start, d2.start}};
    for (std::size_t k = 0; k < n && !layer.empty(); ++k) {
        std::set<std::pair<int, int>> nxt;
        for (auto [s1, s2] : layer) {
            for (int c = 0; c < 2; ++c) {
                int t1 = d1.next[static_cast<std::size_t>(s1)][static_cast<std::size_t>(c)];
                int t2 = d2.next[static_cast<std::size_t>(s2)][static_cast<std::size_t>(c)];
                if ((t1 < 0) != (t2 < 0)) return false;
                if (t1 >= 0) nxt.insert({t1, t2});
            }
        }
        layer = std::move(nxt);
    }
    return true;
}

}  // namespace holedyn
