#include "eds/solver.hpp"

#include "eds/oracle.hpp"

#include <algorithm>
#include <climits>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace eds {

const char* to_string(SolveVerdict v) {
    switch (v) {
        case SolveVerdict::found: return "found";
        case SolveVerdict::no_eds: return "no-eds";
        case SolveVerdict::class_violation: return "class-violation";
        case SolveVerdict::not_bipartite: return "not-bipartite";
        case SolveVerdict::give_up: return "give-up";
    }
    return "?";
}

namespace {

struct Ctx {
    const SolveOptions* opts = nullptr;
    SolveStats* stats = nullptr;
    std::vector<TraceEntry>* trace = nullptr;
    std::optional<PatternWitness>* debug_witness = nullptr;
    bool class_ok = false;
    long long fallback_left = 0;
};

// Result of one internal search step; solution ids are local to the graph
// the step ran on. pruned marks that some class-only bound narrowed the
// search, so an exhausted enumeration is conclusive only for class members.
struct Result {
    SolveVerdict verdict = SolveVerdict::no_eds;
    std::vector<int> solution;
    bool pruned = false;

    bool found() const { return verdict == SolveVerdict::found; }
};

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << '}';
    return os.str();
}

std::string join_ints(const Bitset& b) { return join_ints(b.to_vector()); }

void trace(Ctx& cx, int depth, const std::string& text) {
    cx.trace->push_back({depth, text});
}

Result solve_graph(const Graph& g, const Bitset& excluded, Ctx& cx, int depth,
                   std::optional<int> forced_root);

Result found_result(const EdsState& st) {
    Result r;
    r.verdict = SolveVerdict::found;
    r.solution = st.forced_vertices();
    return r;
}

// ---------------------------------------------------------------------------
// Defensive complete search. Branches on the undominated vertex with the
// fewest candidate dominators; every activation is logged and counted, and
// the acceptance corpus asserts it never fires on class members.
// ---------------------------------------------------------------------------

Result fallback_from(EdsState& st, Ctx& cx) {
    if (st.all_dominated()) return found_result(st);
    if (cx.fallback_left <= 0) {
        Result r;
        r.verdict = SolveVerdict::give_up;
        return r;
    }
    --cx.fallback_left;
    ++cx.stats->nodes;

    const Graph& g = st.graph();
    int best = -1, best_count = INT_MAX;
    for (int v = 0; v < g.n; ++v) {
        if (st.is_dominated(v)) continue;
        int c = st.candidates(v).count();
        if (c < best_count) {
            best = v;
            best_count = c;
        }
    }
    Result out;
    if (best_count == 0) return out;  // no dominator left: dead branch
    bool gave_up = false;
    Bitset cand = st.candidates(best);
    for (int u = cand.first(); u != -1; u = cand.next(u)) {
        std::size_t m = st.mark();
        if (st.assume_in_d(u).ok() && st.propagate().ok()) {
            Result r = fallback_from(st, cx);
            if (r.found()) return r;
            if (r.verdict == SolveVerdict::give_up) gave_up = true;
        }
        st.undo_to(m);
    }
    if (gave_up) out.verdict = SolveVerdict::give_up;
    return out;
}

Result fallback_exact(const Graph& g, const Bitset& excluded, Ctx& cx) {
    EdsState st(g, excluded);
    if (!st.propagate().ok()) return Result{};
    return fallback_from(st, cx);
}

// ---------------------------------------------------------------------------
// Reduce-and-recurse plumbing
// ---------------------------------------------------------------------------

Result reduce_and_recurse(EdsState& st, Ctx& cx, int depth) {
    ReducedInstance ri = reduce_graph(st);
    {
        std::ostringstream os;
        os << "reduce fragment=" << join_ints(ri.fragment) << " kept=" << ri.graph.n
           << " carried-excluded=" << join_ints(ri.carried_excluded);
        if (ri.graph.n > 0) os << " components=" << components(ri.graph).size();
        trace(cx, depth, os.str());
    }
    Result out;
    if (ri.graph.n == 0) {
        out.verdict = SolveVerdict::found;
        out.solution = ri.fragment;
        return out;
    }
    Result sub = solve_graph(ri.graph, ri.carried_excluded, cx, depth + 1, std::nullopt);
    out.pruned = sub.pruned;
    out.verdict = sub.verdict;
    if (sub.found()) {
        out.solution = ri.fragment;
        for (int v : sub.solution) out.solution.push_back(ri.orig[v]);
    }
    return out;
}

// After a handler finished its moves: a fully dominated state is a solution;
// deep handlers hand the remainder to the recursion, shallow ones expect
// settlement and treat leftovers as an off-class signal.
Result settle_or_recurse(EdsState& st, Ctx& cx, int depth, bool deep) {
    if (st.all_dominated()) return found_result(st);
    if (!deep) {
        trace(cx, depth, "shallow case left an unsettled state; exhaustive completion");
        ++cx.stats->fallback_activations;
        return fallback_from(st, cx);
    }
    return reduce_and_recurse(st, cx, depth);
}

// ---------------------------------------------------------------------------
// Structural debug assertions: two support vertices in level 3 span a 2P3
// through levels 2..4 whose level-2 feet must not share a level-1 neighbor
// and whose level-4 tips must not share a level-5 neighbor. A violation
// certifies the input is outside the class; extract and report the witness.
// ---------------------------------------------------------------------------

void audit_support_pairs(EdsState& st, const DistanceLevels& lv, Ctx& cx, int depth) {
    if (*cx.debug_witness) return;
    const Graph& g = st.graph();
    Bitset n1 = lv.level(1), n2 = lv.level(2), n3 = lv.level(3), n4 = lv.level(4),
           n5 = lv.level(5);
    std::vector<int> support;
    (st.forced_set() & n3).for_each([&](int y) {
        if (g.adj[y].intersects(n4)) support.push_back(y);
    });
    if (support.size() < 2) return;

    auto try_report = [&](const PatternWitness& w) {
        if (verify_pattern_witness(g, PatternSpec::s133(), w)) {
            *cx.debug_witness = w;
            trace(cx, depth, "structural audit: banned common neighbor, pattern witness " +
                                 join_ints(w.vertices()));
        }
    };

    for (std::size_t a = 0; a < support.size() && !*cx.debug_witness; ++a) {
        for (std::size_t b = a + 1; b < support.size() && !*cx.debug_witness; ++b) {
            int y1 = support[a], y2 = support[b];
            // lowest genuinely disjoint attachments (x_i, z_i)
            Bitset x1s = g.adj[y1] & n2, z1s = g.adj[y1] & n4;
            Bitset x2s = g.adj[y2] & n2, z2s = g.adj[y2] & n4;
            x1s -= g.adj[y2];
            x2s -= g.adj[y1];
            z1s -= g.adj[y2];
            z2s -= g.adj[y1];
            int x1 = -1, x2 = -1, z1 = -1, z2 = -1;
            for (int c1 = x1s.first(); c1 != -1 && x1 == -1; c1 = x1s.next(c1))
                for (int c2 = x2s.first(); c2 != -1; c2 = x2s.next(c2))
                    if (c1 != c2 && !g.has_edge(c1, c2) && !g.adj[c2].test(y1)) {
                        x1 = c1;
                        x2 = c2;
                        break;
                    }
            for (int c1 = z1s.first(); c1 != -1 && z1 == -1; c1 = z1s.next(c1))
                for (int c2 = z2s.first(); c2 != -1; c2 = z2s.next(c2))
                    if (c1 != c2 && !g.has_edge(c1, c2)) {
                        z1 = c1;
                        z2 = c2;
                        break;
                    }
            if (x1 == -1 || z1 == -1) continue;
            // cross pairs that complete the 2P3 check
            if (g.has_edge(x1, z2) || g.has_edge(x2, z1)) continue;

            Bitset foot_common = g.adj[x1] & g.adj[x2] & n1;
            if (foot_common.any()) {
                PatternWitness w;
                w.midpoint = foot_common.first();
                w.legs = {std::vector<int>{lv.root}, {x1, y1, z1}, {x2, y2, z2}};
                try_report(w);
            }
            Bitset tip_common = g.adj[z1] & g.adj[z2] & n5;
            if (tip_common.any() && !*cx.debug_witness) {
                int r = tip_common.first();
                Bitset stubs = g.adj[r];
                stubs.reset(z1);
                stubs.reset(z2);
                for (int s = stubs.first(); s != -1 && !*cx.debug_witness; s = stubs.next(s)) {
                    PatternWitness w;
                    w.midpoint = r;
                    w.legs = {std::vector<int>{s}, {z1, y1, x1}, {z2, y2, x2}};
                    try_report(w);
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Bounded support enumeration for level 3. The level-3 vertices with deeper
// contact can host at most two solution vertices, one if some solution vertex
// in level 3 has no deeper contact; enumerate the exact support set, exclude
// the rest of the pool, and propagate. deep = false expects the branch to
// settle completely (levels end at 4 or 5), deep = true reduces and recurses.
// ---------------------------------------------------------------------------

Result enum_level3_support(EdsState& st, const DistanceLevels& lv, Ctx& cx, int depth,
                           bool deep) {
    const Graph& g = st.graph();
    Bitset n3 = lv.level(3), n4 = lv.level(4);
    Bitset contact(g.n);
    n3.for_each([&](int y) {
        if (g.adj[y].intersects(n4)) contact.set(y);
    });
    bool nocontact_forced = (n3 - contact).intersects(st.forced_set());
    int budget = nocontact_forced ? 1 : 2;
    int used = (contact & st.forced_set()).count();
    int rem = budget - used;

    Result out;
    if (rem < 0) {
        out.pruned = true;
        trace(cx, depth, "level-3 support already over budget; dead end");
        return out;
    }
    std::vector<int> pool = (contact - st.excluded_set() - st.forced_set()).to_vector();
    if (int(pool.size()) > rem) out.pruned = true;

    // subsets of the pool, sizes ascending, lexicographic within a size
    std::vector<std::vector<int>> choices;
    choices.push_back({});
    if (rem >= 1)
        for (int y : pool) choices.push_back({y});
    if (rem >= 2)
        for (std::size_t i = 0; i < pool.size(); ++i)
            for (std::size_t j = i + 1; j < pool.size(); ++j)
                choices.push_back({pool[i], pool[j]});

    for (const auto& support : choices) {
        ++cx.stats->nodes;
        std::size_t m = st.mark();
        bool ok = true;
        for (int y : support)
            if (!st.assume_in_d(y).ok()) {
                ok = false;
                break;
            }
        if (ok)
            for (int y : pool) {
                if (std::find(support.begin(), support.end(), y) != support.end()) continue;
                if (!st.exclude(y).ok()) {
                    ok = false;
                    break;
                }
            }
        if (ok) ok = st.propagate().ok();
        if (ok && cx.opts->debug_checks) audit_support_pairs(st, lv, cx, depth);
        if (ok) {
            if (!support.empty())
                trace(cx, depth, "level-3 support " + join_ints(support));
            Result r = settle_or_recurse(st, cx, depth, deep);
            out.pruned = out.pruned || r.pruned;
            if (r.found() || r.verdict == SolveVerdict::give_up) {
                r.pruned = out.pruned;
                return r;
            }
        }
        st.undo_to(m);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Case handlers, dispatched on the deepest nonempty distance level K.
// ---------------------------------------------------------------------------

// K <= 3: propagation alone settles the component or proves a dead end.
Result handle_propagation_only(EdsState& st, Ctx& cx, int depth) {
    return settle_or_recurse(st, cx, depth, /*deep=*/false);
}

std::string n5_subcase(const EdsState& st, const DistanceLevels& lv) {
    const Graph& g = st.graph();
    Bitset d3 = st.forced_set() & lv.level(3);
    if (d3.none()) return "1";
    Bitset touched(g.n);
    d3.for_each([&](int y) { touched |= g.adj[y]; });
    if (lv.level(2).subset_of(touched)) return "2.1";
    Bitset n4 = lv.level(4);
    bool some_without_contact = false;
    d3.for_each([&](int y) {
        if (!g.adj[y].intersects(n4)) some_without_contact = true;
    });
    return some_without_contact ? "2.2.1" : "2.2.2";
}

// K == 4: no level 5. The level-3 support enumeration fully determines the
// branch; level-4 leftovers become self-dominating by propagation.
Result handle_n5_empty(EdsState& st, const DistanceLevels& lv, Ctx& cx, int depth, int root) {
    std::ostringstream os;
    os << "root " << root << " case=N5_EMPTY(" << n5_subcase(st, lv) << ")";
    trace(cx, depth, os.str());
    return enum_level3_support(st, lv, cx, depth, /*deep=*/false);
}

// K == 5: at most one level-4 solution vertex touches level 5. Enumerate it
// (or none), let propagation force the untouched level-5 vertices, then run
// the level-3 enumeration inside each branch.
Result handle_n6_empty(EdsState& st, const DistanceLevels& lv, Ctx& cx, int depth, int root) {
    trace(cx, depth, "root " + std::to_string(root) + " case=N6_EMPTY");
    const Graph& g = st.graph();
    Bitset n4 = lv.level(4), n5 = lv.level(5);
    Bitset contact(g.n);
    n4.for_each([&](int z) {
        if (g.adj[z].intersects(n5)) contact.set(z);
    });
    int used = (contact & st.forced_set()).count();
    int rem = 1 - used;
    Result out;
    if (rem < 0) {
        out.pruned = true;
        trace(cx, depth, "level-4 support already over budget; dead end");
        return out;
    }
    std::vector<int> pool = (contact - st.excluded_set() - st.forced_set()).to_vector();
    if (int(pool.size()) > rem) out.pruned = true;

    std::vector<std::vector<int>> choices;
    choices.push_back({});
    if (rem >= 1)
        for (int z : pool) choices.push_back({z});

    for (const auto& support : choices) {
        ++cx.stats->nodes;
        std::size_t m = st.mark();
        bool ok = true;
        for (int z : support) ok = ok && st.assume_in_d(z).ok();
        if (ok)
            for (int z : pool) {
                if (!support.empty() && support[0] == z) continue;
                if (!st.exclude(z).ok()) {
                    ok = false;
                    break;
                }
            }
        if (ok) ok = st.propagate().ok();
        if (ok) {
            if (!support.empty())
                trace(cx, depth, "level-4 support " + join_ints(support));
            Result r = enum_level3_support(st, lv, cx, depth, /*deep=*/false);
            out.pruned = out.pruned || r.pruned;
            if (r.found() || r.verdict == SolveVerdict::give_up) {
                r.pruned = out.pruned;
                return r;
            }
        }
        st.undo_to(m);
    }
    return out;
}

// K >= 6 with an anchored P8. The anchored level-2 vertices have unique
// level-3 neighbors (forced by propagation on class members); dispatch on
// whether a forced level-3 vertex without deeper contact exists (case A) and
// on whether the distinguished forced vertex covers all of level 2 (B.1) or
// a second support vertex must be enumerated (B.2). All branches reduce and
// recurse.
Result handle_p8(EdsState& st, const DistanceLevels& lv, const AnchoredP8& p8, Ctx& cx,
                 int depth, int root) {
    const Graph& g = st.graph();
    Bitset n2 = lv.level(2), n3 = lv.level(3), n4 = lv.level(4);
    Bitset contact(g.n);
    n3.for_each([&](int y) {
        if (g.adj[y].intersects(n4)) contact.set(y);
    });

    bool case_a = (n3 - contact).intersects(st.forced_set());
    if (case_a) {
        trace(cx, depth, "root " + std::to_string(root) + " case=P8_CASE(A)");
        return enum_level3_support(st, lv, cx, depth, /*deep=*/true);
    }

    Bitset forced_contact = contact & st.forced_set();
    if (forced_contact.none()) {
        // the anchored configuration should have pinned a level-3 vertex;
        // its absence certifies an off-class input
        trace(cx, depth,
              "root " + std::to_string(root) +
                  " case=P8_CASE(?) anchored path without forced level-3 vertex; exhaustive completion");
        ++cx.stats->fallback_activations;
        return fallback_from(st, cx);
    }
    int r3 = st.dominated_by(p8.r[1]);
    if (r3 == -1 || !n3.test(r3) || !st.is_forced(r3)) r3 = forced_contact.first();

    std::vector<int> pool = (contact - st.excluded_set() - st.forced_set()).to_vector();
    if (pool.empty()) {
        bool joins = n2.subset_of(g.adj[r3]);
        trace(cx, depth, std::string("root ") + std::to_string(root) +
                             (joins ? " case=P8_CASE(B.1)" : " case=P8_CASE(B.2)"));
        return settle_or_recurse(st, cx, depth, /*deep=*/true);
    }

    trace(cx, depth, "root " + std::to_string(root) + " case=P8_CASE(B.2)");
    Result out;
    int rem = 2 - forced_contact.count();
    if (rem <= 0) {
        ++cx.stats->nodes;
        out.pruned = true;  // a third contact-support vertex is impossible in class
        std::size_t m = st.mark();
        bool ok = true;
        for (int y : pool)
            if (!st.exclude(y).ok()) {
                ok = false;
                break;
            }
        if (ok) ok = st.propagate().ok();
        if (ok) {
            Result r = settle_or_recurse(st, cx, depth, /*deep=*/true);
            r.pruned = r.pruned || out.pruned;
            if (r.found() || r.verdict == SolveVerdict::give_up) return r;
            out.pruned = out.pruned || r.pruned;
        }
        st.undo_to(m);
        return out;
    }

    // the lowest undominated level-2 vertex needs a second support vertex
    // among its candidates
    int s2 = -1;
    for (int x = n2.first(); x != -1; x = n2.next(x))
        if (!st.is_dominated(x)) {
            s2 = x;
            break;
        }
    if (s2 == -1) {
        // every level-2 vertex is covered yet pool vertices remain undecided;
        // not a configuration the case analysis accounts for
        trace(cx, depth, "covered level 2 with open level-3 pool; exhaustive completion");
        ++cx.stats->fallback_activations;
        return fallback_from(st, cx);
    }
    Bitset cand = st.candidates(s2);
    if (pool.size() > 1) out.pruned = true;  // other pool vertices get cut per branch
    for (int s3 = cand.first(); s3 != -1; s3 = cand.next(s3)) {
        ++cx.stats->nodes;
        std::size_t m = st.mark();
        bool ok = st.assume_in_d(s3).ok();
        if (ok)
            for (int y : pool) {
                if (y == s3) continue;
                if (!st.exclude(y).ok()) {
                    ok = false;
                    break;
                }
            }
        if (ok) ok = st.propagate().ok();
        if (ok && cx.opts->debug_checks) audit_support_pairs(st, lv, cx, depth);
        if (ok) {
            trace(cx, depth, "second support " + std::to_string(s3));
            Result r = settle_or_recurse(st, cx, depth, /*deep=*/true);
            out.pruned = out.pruned || r.pruned;
            if (r.found() || r.verdict == SolveVerdict::give_up) {
                r.pruned = out.pruned;
                return r;
            }
        }
        st.undo_to(m);
    }
    return out;
}

// K >= 6 without an anchored P8.
Result handle_no_p8(EdsState& st, const DistanceLevels& lv, Ctx& cx, int depth, int root) {
    const Graph& g = st.graph();
    int deepest = lv.deepest();

    if (deepest >= 10) {
        trace(cx, depth, "root " + std::to_string(root) + " case=NO_P8(N10_NONEMPTY)");
        // one level-transversal path to level 8; its level-3 or level-4
        // vertex is in the solution
        std::vector<Bitset> reach(9);
        reach[8] = lv.level(8);
        for (int i = 7; i >= 1; --i) {
            reach[i] = Bitset(g.n);
            lv.level(i).for_each([&](int v) {
                if (g.adj[v].intersects(reach[i + 1])) reach[i].set(v);
            });
        }
        std::array<int, 9> path{};
        path[0] = lv.root;
        for (int i = 1; i <= 8; ++i) path[i] = (g.adj[path[i - 1]] & reach[i]).first();

        Result out;
        out.pruned = true;  // the two-way split is a class fact
        for (int pick : {path[3], path[4]}) {
            ++cx.stats->nodes;
            std::size_t m = st.mark();
            bool ok = st.assume_in_d(pick).ok() && st.propagate().ok();
            if (ok) {
                trace(cx, depth, "branch: path vertex " + std::to_string(pick) + " in solution");
                Result r = settle_or_recurse(st, cx, depth, /*deep=*/true);
                out.pruned = out.pruned || r.pruned;
                if (r.found() || r.verdict == SolveVerdict::give_up) {
                    r.pruned = out.pruned;
                    return r;
                }
            }
            st.undo_to(m);
        }
        return out;
    }

    const char* tag = deepest == 9   ? "NO_P8(N9_TERMINAL)"
                      : deepest == 8 ? "NO_P8(N8_TERMINAL)"
                      : deepest == 7 ? "NO_P8(N7_TERMINAL)"
                                     : "NO_P8(N7_EMPTY)";
    trace(cx, depth, "root " + std::to_string(root) + " case=" + tag);

    Result out;
    // level-5 vertices touching level 6 are never in a solution with the root
    auto exclude_frontier = [&](int lo) -> bool {
        Bitset frontier(g.n);
        lv.level(lo).for_each([&](int v) {
            if (g.adj[v].intersects(lv.level(lo + 1))) frontier.set(v);
        });
        std::vector<int> newly;
        bool ok = true;
        for (int v = frontier.first(); v != -1; v = frontier.next(v)) {
            if (st.is_forced(v)) {
                ok = false;
                break;
            }
            if (!st.is_excluded(v)) {
                newly.push_back(v);
                st.exclude(v);
            }
        }
        std::ostringstream os;
        os << "frontier exclusion level " << lo << ": " << join_ints(frontier)
           << " newly-excluded=" << join_ints(newly);
        if (!ok) os << " clashed-with-forced";
        trace(cx, depth, os.str());
        if (!newly.empty() || !ok) out.pruned = true;
        return ok;
    };

    if (!exclude_frontier(5)) return out;
    if (deepest == 9 && !exclude_frontier(8)) return out;
    if (!st.propagate().ok()) return out;

    if (deepest == 6 || deepest == 9) {
        // the deepest level is now forced wholesale by propagation
        Result r = settle_or_recurse(st, cx, depth, /*deep=*/true);
        r.pruned = r.pruned || out.pruned;
        return r;
    }

    // deepest is 7 or 8: at most one support vertex one level below it
    int sup_level = deepest - 1;
    Bitset nk = lv.level(deepest), nsup = lv.level(sup_level);
    Bitset contact(g.n);
    nsup.for_each([&](int v) {
        if (g.adj[v].intersects(nk)) contact.set(v);
    });
    int used = (contact & st.forced_set()).count();
    int rem = 1 - used;
    if (rem < 0) {
        out.pruned = true;
        trace(cx, depth, "deep support already over budget; dead end");
        return out;
    }
    std::vector<int> pool = (contact - st.excluded_set() - st.forced_set()).to_vector();
    if (int(pool.size()) > rem) out.pruned = true;

    std::vector<std::vector<int>> choices;
    choices.push_back({});
    if (rem >= 1)
        for (int v : pool) choices.push_back({v});
    for (const auto& support : choices) {
        ++cx.stats->nodes;
        std::size_t m = st.mark();
        bool ok = true;
        for (int v : support) ok = ok && st.assume_in_d(v).ok();
        if (ok)
            for (int v : pool) {
                if (!support.empty() && support[0] == v) continue;
                if (!st.exclude(v).ok()) {
                    ok = false;
                    break;
                }
            }
        if (ok) ok = st.propagate().ok();
        if (ok) {
            if (!support.empty())
                trace(cx, depth,
                      "level-" + std::to_string(sup_level) + " support " + join_ints(support));
            Result r = settle_or_recurse(st, cx, depth, /*deep=*/true);
            out.pruned = out.pruned || r.pruned;
            if (r.found() || r.verdict == SolveVerdict::give_up) {
                r.pruned = out.pruned;
                return r;
            }
        }
        st.undo_to(m);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Root driver: assume the root, propagate, dispatch on the deepest level.
// ---------------------------------------------------------------------------

Result run_root(const Graph& g, const Bitset& excluded, int d, Ctx& cx, int depth) {
    ++cx.stats->nodes;
    EdsState st(g, excluded);
    PropagationResult pr = st.assume_in_d(d);
    if (pr.ok()) pr = st.propagate();

    DistanceLevels lv = distance_levels(g, d);
    int deepest = lv.deepest();

    if (!pr.ok()) {
        const char* tag = deepest <= 3   ? "N4_EMPTY"
                          : deepest == 4 ? "N5_EMPTY"
                          : deepest == 5 ? "N6_EMPTY"
                                         : "DEEP";
        std::ostringstream os;
        os << "root " << d << " case=" << tag << " propagation contradiction at " << pr.vertex;
        trace(cx, depth, os.str());
        return Result{};
    }

    if (deepest <= 3) {
        trace(cx, depth, "root " + std::to_string(d) + " case=N4_EMPTY");
        return handle_propagation_only(st, cx, depth);
    }
    if (deepest == 4) return handle_n5_empty(st, lv, cx, depth, d);
    if (deepest == 5) return handle_n6_empty(st, lv, cx, depth, d);

    auto p8 = find_anchored_p8(g, lv);
    if (p8) return handle_p8(st, lv, *p8, cx, depth, d);
    return handle_no_p8(st, lv, cx, depth, d);
}

// Root loop over the closed neighborhood of the component's lowest vertex:
// any solution holds exactly one of those vertices.
Result solve_component(const Graph& g, const Bitset& excluded, Ctx& cx, int depth,
                       std::optional<int> forced_root) {
    if (g.n == 0) {
        Result r;
        r.verdict = SolveVerdict::found;
        return r;
    }
    std::vector<int> roots;
    if (forced_root) {
        roots.push_back(*forced_root);
    } else {
        int v0 = 0;
        Bitset cand = g.closed(v0);
        cand -= excluded;
        if (cand.none()) {
            trace(cx, depth, "no admissible dominator for vertex 0");
            return Result{};
        }
        roots = cand.to_vector();
    }

    Result out;
    bool gave_up = false;
    for (int d : roots) {
        Result r = run_root(g, excluded, d, cx, depth);
        out.pruned = out.pruned || r.pruned;
        if (r.found()) {
            r.pruned = out.pruned;
            return r;
        }
        if (r.verdict == SolveVerdict::give_up) gave_up = true;
    }
    if (gave_up) {
        out.verdict = SolveVerdict::give_up;
        return out;
    }
    if (out.pruned && !cx.class_ok) {
        // class-only bounds narrowed an exhausted search on an unverified
        // input; confirm the negative answer exactly
        trace(cx, depth, "confirming exhausted search on unverified input");
        ++cx.stats->fallback_activations;
        Result confirmed = fallback_exact(g, excluded, cx);
        confirmed.pruned = false;
        return confirmed;
    }
    return out;
}

Result solve_graph(const Graph& g, const Bitset& excluded, Ctx& cx, int depth,
                   std::optional<int> forced_root) {
    cx.stats->max_depth = std::max(cx.stats->max_depth, depth);
    Result out;
    out.verdict = SolveVerdict::found;
    for (const auto& comp : components(g)) {
        InducedSubgraph sub = induced_subgraph(g, comp);
        Bitset sub_excl(sub.graph.n);
        for (int i = 0; i < sub.graph.n; ++i)
            if (excluded.test(sub.orig[i])) sub_excl.set(i);
        std::optional<int> sub_root;
        if (forced_root) {
            for (int i = 0; i < sub.graph.n; ++i)
                if (sub.orig[i] == *forced_root) sub_root = i;
        }
        Result r = solve_component(sub.graph, sub_excl, cx, depth, sub_root);
        out.pruned = out.pruned || r.pruned;
        if (!r.found()) {
            out.verdict = r.verdict;
            out.solution.clear();
            return out;
        }
        for (int v : r.solution) out.solution.push_back(sub.orig[v]);
    }
    return out;
}

}  // namespace

SolveOutcome solve(const Graph& g, const SolveOptions& opts) {
    if (opts.root && (*opts.root < 0 || *opts.root >= g.n))
        throw std::invalid_argument("root out of range");

    SolveOutcome out;
    Ctx cx;
    cx.opts = &opts;
    cx.stats = &out.stats;
    cx.trace = &out.trace;
    cx.debug_witness = &out.witness;
    cx.fallback_left = opts.fallback_budget;
    cx.class_ok = opts.assume_class;

    if (opts.check_class) {
        ClassCheck check = is_s133_free_bipartite(g);
        if (check.verdict == ClassVerdict::not_bipartite) {
            out.verdict = SolveVerdict::not_bipartite;
            trace(cx, 0, "input is not bipartite");
            return out;
        }
        if (check.verdict == ClassVerdict::no) {
            out.verdict = SolveVerdict::class_violation;
            out.witness = check.witness;
            trace(cx, 0, "input contains the forbidden pattern " +
                             join_ints(check.witness->vertices()));
            return out;
        }
        cx.class_ok = true;
    }

    Result r = solve_graph(g, Bitset(g.n), cx, 0, opts.root);
    out.stats.class_pruned = r.pruned;
    out.verdict = r.verdict;
    if (r.found()) {
        std::sort(r.solution.begin(), r.solution.end());
        if (!verify_eds(g, r.solution).ok)
            throw std::logic_error("solver produced a set that fails verification");
        out.solution = std::move(r.solution);
    }
    return out;
}

SolveOutcome solve_with_root(const Graph& g, int root, const SolveOptions& opts) {
    SolveOptions o = opts;
    o.root = root;
    return solve(g, o);
}

}  // namespace eds
