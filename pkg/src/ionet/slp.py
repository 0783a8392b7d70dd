"""Structural liveness: token bounds, truncation, capped non-liveness search.

The non-liveness decision explores a finite surrogate of the (generally
infinite) state space: counts are capped at 2*w*|P| and each place remembers
whether it ever hit the cap, in which case single tokens may be regained at
any time.  A marking is non-live exactly when some configuration of this
capped space carries a witness, so the decision is:

  1. a siphon shortcut (an unmarked siphon that some transition reads from
     yields an immediate witness),
  2. a small over-approximation where every count is either exact below
     w+2 or "many": if no abstract state carries a witness the marking is
     live, since every real witness keeps at most w tokens per crucial place,
  3. an exact search of the capped space, guided toward the witness
     candidates found in step 2, which confirms non-liveness with a concrete
     capped path or proves liveness by exhausting the space.

Conservative nets too large for subset enumeration skip 2 and 3 and are
decided on their (finite) reachability graph directly.
"""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass

from .classify import classify, NotBimo
from .liveness import (
    BudgetError, BudgetExceeded, SubsetCapExceeded, Witness, check_witness,
    constructed_witness, reach_graph, witness_index, _back_closure, _enabled_nodes,
)
from .nets import NetError
from .structure import unmarked_siphon


class NotOrdImo(NetError):
    pass


class CandidateBudgetExceeded(NetError):
    def __init__(self, tested):
        self.tested = tested
        super().__init__(f"candidate budget exhausted after {tested} markings")


@dataclass(frozen=True)
class Bounds:
    """Per-class caps: live-marking component bound and liveness-determining bound."""
    first: int
    second: int


def bounds_for(net_class, p_count, w):
    """Table row for the finest class among the branching-observation family."""
    if net_class.imo and net_class.ordinary:
        return Bounds(1, 2 * p_count)
    if net_class.io:
        return Bounds(2, 4 * p_count)
    if net_class.imo:
        return Bounds(w, 2 * w * p_count)
    if net_class.bimo and net_class.ordinary:
        return Bounds(p_count, 2 * p_count)
    if net_class.bimo:
        return Bounds(w * p_count, 2 * w * p_count)
    raise NotBimo("bounds are defined for the branching-observation family only")


def cap_value(net):
    return 2 * net.max_weight * len(net.places)


def truncate(net, marking):
    """Cap every component at 2*w*|P|; liveness status is unaffected."""
    net.check_marking(marking)
    cap = cap_value(net)
    return tuple(x if x < cap else cap for x in marking)


# ---------------------------------------------------------------------------
# Capped configurations (public, used directly by tests and tools).

@dataclass(frozen=True)
class CappedConfig:
    counts: tuple
    saturated: tuple  # one boolean per place, monotone once true


def capped_config(net, marking):
    """Initial configuration: cap counts and record which places overflowed."""
    net.check_marking(marking)
    cap = cap_value(net)
    return CappedConfig(
        counts=tuple(x if x < cap else cap for x in marking),
        saturated=tuple(x > cap for x in marking),
    )


def capped_successors(net, cfg):
    """All one-step successors: each enabled firing (with re-capping), plus a
    token regained on each saturated place below the cap."""
    cap = cap_value(net)
    counts, sat = cfg.counts, cfg.saturated
    out = []
    for ti, t in enumerate(net.transitions):
        ok = True
        for i, w in net._pre_support[ti]:
            if counts[i] < w:
                ok = False
                break
        if not ok:
            continue
        raw = [a + d for a, d in zip(counts, net._delta[ti])]
        nsat = list(sat)
        for i, x in enumerate(raw):
            if x > cap:
                raw[i] = cap
                nsat[i] = True
        out.append(CappedConfig(tuple(raw), tuple(nsat)))
    for i in range(len(net.places)):
        if sat[i] and counts[i] < cap:
            bumped = list(counts)
            bumped[i] += 1
            out.append(CappedConfig(tuple(bumped), sat))
    return out


# ---------------------------------------------------------------------------
# Over-approximation with exact counts below w+1.

_FULL_TABLE_LIMIT = 20_000


class _AbstractEngine:
    """Counts are exact below a small threshold m or TOP (= at least m).

    Firing is always possible from TOP values; a TOP value drained by one
    token branches into "still TOP" and "exactly m-1".  Every reachable real
    marking is represented, so a run without witness states proves liveness.
    Witness states keep at most w tokens per crucial place, so any m > w
    detects them all; m = w + 2 keeps slightly more precision, which avoids
    most spurious drains on live markings.
    """

    def __init__(self, net, subset_cap):
        self.net = net
        self.m = net.max_weight + 2  # TOP sentinel; any value >= m means "many"
        self.idx = witness_index(net, subset_cap)
        if any(d < -1 for delta in net._delta for d in delta):
            raise NotBimo("abstract engine requires single-token source moves")
        self.flag_memo = {}
        self.table = None
        size = (self.m + 1) ** len(net.places)
        if size <= _FULL_TABLE_LIMIT:
            self._build_table()

    def alpha(self, marking):
        m = self.m
        return tuple(x if x < m else m for x in marking)

    def successors(self, state):
        net, m = self.net, self.m
        out = []
        for ti in range(len(net.transitions)):
            ok = True
            for i, w in net._pre_support[ti]:
                if state[i] < w:
                    ok = False
                    break
            if not ok:
                continue
            base = list(state)
            drain = None
            for i, d in enumerate(net._delta[ti]):
                if d == 0:
                    continue
                v = state[i]
                if v == m:
                    if d < 0:
                        drain = i
                else:
                    x = v + d
                    base[i] = x if x < m else m
            out.append(tuple(base))
            if drain is not None:
                alt = list(base)
                alt[drain] = m - 1
                out.append(tuple(alt))
        return out

    def flags(self, state):
        """Witness candidates visible at an abstract state (exact part only)."""
        hit = self.flag_memo.get(state, 0)
        if hit != 0:
            return hit
        m = self.m
        found = None
        for data in self.idx.entries:
            exact = True
            for i in data.indices:
                if state[i] >= m:
                    exact = False
                    break
            if not exact:
                continue
            r = tuple(state[i] for i in data.indices)
            dead = self.idx.dead_set(data, r)
            if dead:
                found = (data.indices, r)
                break
        self.flag_memo[state] = found
        return found

    def _build_table(self):
        """Full-space 'can reach a witness state' table for small nets."""
        from itertools import product
        states = list(product(range(self.m + 1), repeat=len(self.net.places)))
        index = {s: i for i, s in enumerate(states)}
        preds = [[] for _ in states]
        flagged = []
        for s in states:
            si = index[s]
            if self.flags(s):
                flagged.append(si)
            for nxt in self.successors(s):
                preds[index[nxt]].append(si)
        reach = bytearray(len(states))
        queue = deque()
        for si in flagged:
            reach[si] = 1
            queue.append(si)
        while queue:
            v = queue.popleft()
            for u in preds[v]:
                if not reach[u]:
                    reach[u] = 1
                    queue.append(u)
        self.table = {s: bool(reach[index[s]]) for s in states}
        self.all_targets = sorted(
            {self.flags(states[si]) for si in flagged}, key=lambda f: (len(f[0]), f))

    def probe(self, marking, node_budget):
        """(may_be_nonlive, witness targets).  A False first component is a
        proof of liveness."""
        start = self.alpha(marking)
        if self.table is not None:
            if not self.table[start]:
                return False, []
            return True, list(self.all_targets)[:32]
        seen = {start}
        queue = deque([start])
        targets = []
        explored = 0
        while queue:
            s = queue.popleft()
            explored += 1
            if explored > node_budget:
                raise BudgetError(explored)
            f = self.flags(s)
            if f:
                targets.append(f)
                if len(targets) >= 8:
                    return True, targets
                continue
            for nxt in self.successors(s):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return (len(targets) > 0), targets


def _abstract_engine(net, subset_cap):
    eng = net._analysis.get("abstract_engine")
    if eng is None:
        eng = _AbstractEngine(net, subset_cap)
        net._analysis["abstract_engine"] = eng
    return eng


# ---------------------------------------------------------------------------
# Verdicts.

@dataclass(frozen=True)
class LivenessVerdict:
    status: str                # "live" | "nonlive" | "budget_exceeded"
    witness: Witness = None
    configs_explored: int = 0
    method: str = ""

    @property
    def is_live(self):
        return self.status == "live"

    @property
    def is_nonlive(self):
        return self.status == "nonlive"

    def to_dict(self):
        out = {"verdict": self.status, "stats": {"configs_explored": self.configs_explored},
               "method": self.method}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        return out


def _siphon_witness(net, marking):
    """Unmarked siphon read by some transition: an instant witness."""
    s = unmarked_siphon(net, marking)
    if not s:
        return None
    idx = {net.place_index[p] for p in s}
    dead = tuple(t for ti, t in enumerate(net.transitions)
                 if any(net._pre[ti][i] for i in idx))
    if not dead:
        return None
    return Witness(m_wit=tuple(marking), p_cruc=tuple(s), t_dead=dead, path=())


def _relaxed_arcs(net):
    """(source index, destination indices) of each transition's presentation."""
    cached = net._analysis.get("relaxed_arcs")
    if cached is not None:
        return cached
    from .classify import presentation, dummy_augment, DUMMY_PLACE
    base = dummy_augment(net)
    arcs = []
    for t in net.transitions:
        pres = presentation(base, t)
        src = None if pres.source == DUMMY_PLACE else net.place_index[pres.source]
        dests = tuple(sorted(net.place_index[d] for d in set(pres.destinations)
                             if d != DUMMY_PLACE))
        arcs.append((src, dests))
    arcs = tuple(arcs)
    net._analysis["relaxed_arcs"] = arcs
    return arcs


def _drain_weights(net, indices):
    """Steps for a token to leave the place set, following cheapest moves."""
    cache = net._analysis.setdefault("drain_weights", {})
    got = cache.get(indices)
    if got is not None:
        return got
    inset = set(indices)
    far = 4 * len(indices) + 8
    dist = {i: far for i in indices}
    changed = True
    while changed:
        changed = False
        for src, dests in _relaxed_arcs(net):
            if src not in dist:
                continue
            if dests:
                best = 1 + min(dist.get(d, 0) for d in dests)
            else:
                best = 1
            if best < dist[src]:
                dist[src] = best
                changed = True
    out = tuple(dist[i] for i in indices)
    cache[indices] = out
    return out


def _heuristic(net, targets):
    """Distance estimate to the nearest witness candidate; surplus tokens on
    a crucial place are weighted by how many moves they need to leave it, so
    plain token conveyors descend strictly."""
    if not targets:
        return lambda counts: 0
    tables = []
    for indices, r in targets[:6]:
        weights = _drain_weights(net, indices)
        tables.append(tuple(zip(indices, r, weights)))

    def h(counts):
        best = -1
        for table in tables:
            d = 0
            for i, ri, wi in table:
                ci = counts[i]
                if ci > ri:
                    d += (ci - ri) * wi
                elif ci < ri:
                    d += ri - ci
            if best < 0 or d < best:
                best = d
                if best == 0:
                    break
        return best
    return h


def _drain_plan(net, indices):
    """Unconditional drain schedule for a place set, or None.

    Uses only transitions with a single unit pre-place, which stay enabled
    while their source is marked, processed from the innermost places out.
    A marking can be pushed along the plan by batched arithmetic; the result
    is a genuinely reachable capped configuration.
    """
    cache = net._analysis.setdefault("drain_plans", {})
    if indices in cache:
        return cache[indices]
    weights = dict(zip(indices, _drain_weights(net, indices)))
    inset = set(indices)
    plan = []
    covered = set()
    arcs = _relaxed_arcs(net)
    order = sorted(indices, key=lambda i: -weights[i])
    for i in order:
        best = None
        for ti in range(len(net.transitions)):
            if net._pre_support[ti] != ((i, 1),):
                continue
            if net._delta[ti][i] >= 0:
                continue
            spawn = sum(weights.get(d, 0) for d in arcs[ti][1])
            if best is None or spawn < best[0]:
                best = (spawn, ti)
        if best is not None:
            plan.append((i, best[1]))
            covered.add(i)
    result = tuple(plan) if covered == inset else None
    cache[indices] = result
    return result


def _try_drains(net, start, targets, idx):
    """Deterministically drain toward each witness candidate; cheap and
    sound (every batched step is a sequence of capped firings), but not
    complete."""
    cap = cap_value(net)
    for indices, _r in targets:
        plan = _drain_plan(net, indices)
        if plan is None:
            continue
        counts = list(start[0])
        flags = start[1]
        path = []
        for _ in range(len(indices) + 1):
            moved = False
            for i, ti in plan:
                k = counts[i]
                if not k:
                    continue
                delta = net._delta[ti]
                if delta[i] >= 0:
                    continue
                label = net.transitions[ti]
                for j, d in enumerate(delta):
                    if d:
                        x = counts[j] + d * k
                        if x > cap:
                            x = cap
                            flags |= 1 << j
                        counts[j] = x
                path.extend([label] * k)
                moved = True
            if not moved:
                break
        final = tuple(counts)
        hit = idx.witness_at(final)
        if hit is not None:
            return _witness_from(net, hit, final, tuple(path))
    return None


def _start_config(net, m0):
    cap = cap_value(net)
    counts0 = tuple(x if x < cap else cap for x in m0)
    flags0 = 0
    for i, x in enumerate(m0):
        if x > cap:
            flags0 |= 1 << i
    return counts0, flags0


def _witness_from(net, idx_hit, counts, path):
    indices, dead = idx_hit
    return Witness(
        m_wit=counts,
        p_cruc=tuple(net.places[i] for i in indices),
        t_dead=tuple(net.transitions[ti] for ti in sorted(dead)),
        path=path,
    )


def _guided_search(net, start, targets, node_budget, idx):
    """Best-first probe of the capped space toward the witness candidates.

    Returns (witness, explored) or (None, explored) when the budget runs out
    or nothing is confirmed; incomplete by design, the closure phase decides.
    """
    cap = cap_value(net)
    n = len(net.places)
    h = _heuristic(net, targets)
    heap = [(h(start[0]), 0, start)]
    visited = {start[0]: [start[1]]}
    parents = {start: None}
    popped = set()
    counter = 1
    explored = 0
    supports = net._pre_support
    deltas = net._delta
    n_t = len(net.transitions)

    def push(state, parent, label):
        nonlocal counter
        counts, flags = state
        kept = visited.get(counts)
        if kept is None:
            visited[counts] = [flags]
        else:
            for fm in kept:
                if fm | flags == fm:
                    return
            kept[:] = [fm for fm in kept if fm | flags != flags]
            kept.append(flags)
        parents[state] = (parent, label)
        heapq.heappush(heap, (h(counts), counter, state))
        counter += 1

    while heap:
        _, _, state = heapq.heappop(heap)
        if state in popped:
            continue
        popped.add(state)
        counts, flags = state
        explored += 1
        if explored > node_budget:
            return None, explored
        hit = idx.witness_at(counts)
        if hit is not None:
            path = []
            cur = state
            while parents[cur] is not None:
                prev, label = parents[cur]
                path.append(label)
                cur = prev
            return _witness_from(net, hit, counts, tuple(reversed(path))), explored
        for ti in range(n_t):
            ok = True
            for i, w in supports[ti]:
                if counts[i] < w:
                    ok = False
                    break
            if not ok:
                continue
            raw = [a + d for a, d in zip(counts, deltas[ti])]
            nflags = flags
            for i in range(n):
                if raw[i] > cap:
                    raw[i] = cap
                    nflags |= 1 << i
            push((tuple(raw), nflags), state, net.transitions[ti])
        if flags:
            for i in range(n):
                if flags >> i & 1 and counts[i] < cap:
                    bumped = list(counts)
                    bumped[i] += 1
                    push((tuple(bumped), flags), state, f"+{net.places[i]}")
    return None, explored


_PATH_RECORD_LIMIT = 100_000


def _closure_search(net, start, node_budget, idx):
    """Exhaustive capped exploration (plain breadth first, flag-dominance
    pruned).  Complete: returns a witness, None for a clean closure, or
    BudgetExceeded."""
    cap = cap_value(net)
    n = len(net.places)
    moves = [(net._pre_support[ti], net._delta[ti], t)
             for ti, t in enumerate(net.transitions)]
    place_bits = [(1 << i, i) for i in range(n)]
    queue = deque([start])
    visited = {start[0]: [start[1]]}
    parents = {start: None}
    explored = 0
    witness_at = idx.witness_at
    while queue:
        state = queue.popleft()
        counts, flags = state
        explored += 1
        if explored > node_budget:
            return BudgetExceeded(explored), explored
        hit = witness_at(counts)
        if hit is not None:
            path = None
            if state in parents:
                chain = []
                cur = state
                while parents.get(cur) is not None:
                    prev, label = parents[cur]
                    chain.append(label)
                    cur = prev
                path = tuple(reversed(chain))
            return _witness_from(net, hit, counts, path), explored
        record = explored <= _PATH_RECORD_LIMIT
        for support, delta, label in moves:
            ok = True
            for i, w in support:
                if counts[i] < w:
                    ok = False
                    break
            if not ok:
                continue
            raw = list(counts)
            nflags = flags
            for i, d in enumerate(delta):
                if d:
                    x = raw[i] + d
                    if x > cap:
                        x = cap
                        nflags |= 1 << i
                    raw[i] = x
            ncounts = tuple(raw)
            kept = visited.get(ncounts)
            if kept is None:
                visited[ncounts] = [nflags]
            else:
                dominated = False
                for fm in kept:
                    if fm | nflags == fm:
                        dominated = True
                        break
                if dominated:
                    continue
                kept[:] = [fm for fm in kept if fm | nflags != nflags]
                kept.append(nflags)
            nstate = (ncounts, nflags)
            if record:
                parents[nstate] = (state, label)
            queue.append(nstate)
        if flags:
            for bit, i in place_bits:
                if flags & bit and counts[i] < cap:
                    bumped = list(counts)
                    bumped[i] += 1
                    ncounts = tuple(bumped)
                    kept = visited.get(ncounts)
                    if kept is None:
                        visited[ncounts] = [flags]
                    else:
                        dominated = False
                        for fm in kept:
                            if fm | flags == fm:
                                dominated = True
                                break
                        if dominated:
                            continue
                        kept[:] = [fm for fm in kept if fm | flags != flags]
                        kept.append(flags)
                    nstate = (ncounts, flags)
                    if record:
                        parents[nstate] = (state, f"+{net.places[i]}")
                    queue.append(nstate)
    return None, explored


def _capped_search(net, m0, targets, node_budget, idx):
    start = _start_config(net, m0)
    explored = 0
    if targets:
        witness = _try_drains(net, start, targets, idx)
        if witness is not None:
            return witness, explored
        witness, n1 = _guided_search(net, start, targets,
                                     min(node_budget, 1_000), idx)
        explored += n1
        if witness is not None:
            return witness, explored
    result, n2 = _closure_search(net, start, node_budget, idx)
    return result, explored + n2


def _conservative_large(net, m0, node_budget):
    """Exact decision on the reachability graph for nets too large for
    subset enumeration (conservative, so the graph is finite)."""
    g = reach_graph(net, m0, node_budget)
    if isinstance(g, BudgetExceeded):
        return LivenessVerdict("budget_exceeded", configs_explored=g.explored,
                               method="reach-graph")
    nonlive = False
    for ti in range(len(net.transitions)):
        closure = _back_closure(g, _enabled_nodes(g, ti))
        if not all(closure):
            nonlive = True
            break
    if not nonlive:
        return LivenessVerdict("live", configs_explored=len(g.nodes),
                               method="reach-graph")
    wit = constructed_witness(net, g)
    variant = "ordinary" if classify(net).ordinary else "weighted"
    report = check_witness(net, wit, variant=variant)
    if not report.sound:
        raise NetError("internal error: constructed witness failed validation")
    return LivenessVerdict("nonlive", witness=wit, configs_explored=len(g.nodes),
                           method="reach-graph")


def is_nonlive(net, m0, node_budget=500_000, subset_cap=16):
    """Decide liveness of a marking of a branching-observation-family net.

    Exact for every input that fits the budgets; budget exhaustion is
    reported, never silently treated as an answer.
    """
    nc = classify(net)
    if not nc.bimo:
        raise NotBimo("the liveness decision covers the branching-observation family")
    net.check_marking(m0)
    m0 = tuple(m0)
    trunc = truncate(net, m0)
    explored = 0

    wit = _siphon_witness(net, trunc)
    if wit is not None:
        return LivenessVerdict("nonlive", witness=wit, configs_explored=0,
                               method="siphon")

    if len(net.places) > subset_cap:
        if nc.conservative:
            return _conservative_large(net, trunc, node_budget)
        raise SubsetCapExceeded(
            f"non-conservative net with |P|={len(net.places)} exceeds the "
            f"subset cap {subset_cap}")

    idx = witness_index(net, subset_cap)
    try:
        engine = _abstract_engine(net, subset_cap)
        maybe, targets = engine.probe(trunc, node_budget)
        explored += len(engine.flag_memo)
        if not maybe:
            return LivenessVerdict("live", configs_explored=explored,
                                   method="abstract")
        result, n_configs = _capped_search(net, m0, targets, node_budget, idx)
    except BudgetError as exc:
        return LivenessVerdict("budget_exceeded", configs_explored=exc.explored,
                               method="abstract")
    explored += n_configs
    if isinstance(result, BudgetExceeded):
        return LivenessVerdict("budget_exceeded", configs_explored=explored,
                               method="capped-search")
    if result is None:
        return LivenessVerdict("live", configs_explored=explored,
                               method="capped-search")
    return LivenessVerdict("nonlive", witness=result, configs_explored=explored,
                           method="capped-search")


# ---------------------------------------------------------------------------
# Structural liveness.

@dataclass(frozen=True)
class SlpVerdict:
    status: str              # structurally_live | not_structurally_live | budget_exceeded
    certificate: tuple = None
    candidates_tested: int = 0
    configs_explored: int = 0

    def to_dict(self):
        out = {"verdict": self.status,
               "stats": {"candidates_tested": self.candidates_tested,
                         "configs_explored": self.configs_explored}}
        if self.certificate is not None:
            out["certificate"] = list(self.certificate)
        return out


def _box_iter(n, bound):
    """Markings with components in [0, bound], ascending total then lex."""
    if n == 0:
        yield ()
        return
    for total in range(0, bound * n + 1):
        yield from _compositions(n, total, bound)


def _compositions(n, total, bound):
    if n == 1:
        if total <= bound:
            yield (total,)
        return
    for head in range(0, min(bound, total) + 1):
        for rest in _compositions(n - 1, total - head, bound):
            yield (head,) + rest


def decide_slp(net, candidate_budget=200_000, node_budget=500_000, subset_cap=16):
    """Search the per-class candidate box for a live marking.

    Candidates are enumerated by ascending token total (then lexicographic),
    so certificates are small and deterministic.  The budget caps how many
    candidates may be tested; liveness itself is never approximated, so no
    candidate is ever pruned on monotonicity grounds.
    """
    nc = classify(net)
    bounds = bounds_for(nc, len(net.places), net.max_weight)
    tested = 0
    explored = 0
    for cand in _box_iter(len(net.places), bounds.first):
        if tested >= candidate_budget:
            return SlpVerdict("budget_exceeded", candidates_tested=tested,
                              configs_explored=explored)
        tested += 1
        verdict = is_nonlive(net, cand, node_budget=node_budget, subset_cap=subset_cap)
        explored += verdict.configs_explored
        if verdict.status == "budget_exceeded":
            return SlpVerdict("budget_exceeded", candidates_tested=tested,
                              configs_explored=explored)
        if verdict.is_live:
            return SlpVerdict("structurally_live", certificate=cand,
                              candidates_tested=tested, configs_explored=explored)
    return SlpVerdict("not_structurally_live", candidates_tested=tested,
                      configs_explored=explored)


def slp_01_shortcut(net, candidate_budget=200_000, node_budget=500_000, subset_cap=16):
    """Structural liveness via 0/1 markings only; complete for ordinary nets
    whose transitions each move a single token."""
    nc = classify(net)
    if not (nc.imo and nc.ordinary):
        raise NotOrdImo("the 0/1 shortcut requires an ordinary single-move net")
    tested = 0
    explored = 0
    for cand in _box_iter(len(net.places), 1):
        if tested >= candidate_budget:
            return SlpVerdict("budget_exceeded", candidates_tested=tested,
                              configs_explored=explored)
        tested += 1
        verdict = is_nonlive(net, cand, node_budget=node_budget, subset_cap=subset_cap)
        explored += verdict.configs_explored
        if verdict.status == "budget_exceeded":
            return SlpVerdict("budget_exceeded", candidates_tested=tested,
                              configs_explored=explored)
        if verdict.is_live:
            return SlpVerdict("structurally_live", certificate=cand,
                              candidates_tested=tested, configs_explored=explored)
    return SlpVerdict("not_structurally_live", candidates_tested=tested,
                      configs_explored=explored)
