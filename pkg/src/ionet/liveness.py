"""Liveness decisions on explicit state spaces, and non-liveness witnesses.

A witness is a triple (marking, crucial places, dead transitions) that can be
checked locally: restricted to the crucial places, every non-dead transition
moves single tokens (so the restriction is conservative and its state space
finite), and no dead transition's restricted pre-mset is ever coverable.
Soundness: anything dead in the restriction is dead in the full net, because
ignored places can be imagined as holding arbitrarily many tokens.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .classify import classify, is_imo_msets
from .nets import NetError, UnknownNode, mleq, msize, carrier


class SubsetCapExceeded(NetError):
    pass


class BudgetError(NetError):
    """Internal signal that a bounded sub-search ran out of budget."""

    def __init__(self, explored):
        self.explored = explored
        super().__init__(f"exploration budget exceeded after {explored} states")


@dataclass(frozen=True)
class BudgetExceeded:
    """Returned (not raised) when a bounded search cannot finish."""
    explored: int = 0


class ReachGraph:
    """Reachability graph: markings as nodes, firings as labeled edges."""

    def __init__(self, net, root):
        self.net = net
        self.root = tuple(root)
        self.nodes = [self.root]
        self.index = {self.root: 0}
        self.edges = []            # (src_index, transition, dst_index)
        self.succ = [[]]           # per node: (transition, dst_index)
        self.pred = [[]]           # per node: src_index list
        self.parent = [None]       # (src_index, transition) BFS tree

    def path_to(self, v):
        out = []
        while self.parent[v] is not None:
            u, t = self.parent[v]
            out.append(t)
            v = u
        return tuple(reversed(out))


def reach_graph(net, m0, node_budget=200_000):
    """Breadth-first closure under firing; budget exhaustion is a result."""
    net.check_marking(m0)
    g = ReachGraph(net, m0)
    queue = deque([0])
    supports = net._pre_support
    deltas = net._delta
    while queue:
        v = queue.popleft()
        m = g.nodes[v]
        for ti, t in enumerate(net.transitions):
            ok = True
            for i, w in supports[ti]:
                if m[i] < w:
                    ok = False
                    break
            if not ok:
                continue
            nm = tuple(a + d for a, d in zip(m, deltas[ti]))
            j = g.index.get(nm)
            if j is None:
                if len(g.nodes) >= node_budget:
                    return BudgetExceeded(explored=len(g.nodes))
                j = len(g.nodes)
                g.index[nm] = j
                g.nodes.append(nm)
                g.succ.append([])
                g.pred.append([])
                g.parent.append((v, t))
                queue.append(j)
            g.edges.append((v, t, j))
            g.succ[v].append((t, j))
            g.pred[j].append(v)
    return g


def cover_basis(net, target, node_budget=200_000):
    """Minimal markings from which `target` is coverable (backward search).

    Exact for arbitrary nets; terminates by well-quasi-ordering of markings.
    """
    target = tuple(target)
    basis = [target]
    work = deque([target])
    expansions = 0
    while work:
        b = work.popleft()
        for ti in range(len(net.transitions)):
            expansions += 1
            if expansions > node_budget:
                return BudgetExceeded(explored=expansions)
            pre, post = net._pre[ti], net._post[ti]
            cand = tuple(p + (x - q if x > q else 0)
                         for p, q, x in zip(pre, post, b))
            if any(mleq(e, cand) for e in basis):
                continue
            basis = [e for e in basis if not mleq(cand, e)]
            basis.append(cand)
            work.append(cand)
    return basis


def dead_at(net, marking, t, node_budget=200_000):
    """True iff no marking reachable from `marking` enables `t`."""
    net.check_marking(marking)
    basis = cover_basis(net, pre_mset_of(net, t), node_budget)
    if isinstance(basis, BudgetExceeded):
        return basis
    m = tuple(marking)
    return not any(mleq(b, m) for b in basis)


def pre_mset_of(net, t):
    if t not in net.trans_index:
        raise UnknownNode(f"unknown transition {t!r}")
    return net._pre[net.trans_index[t]]


def _back_closure(graph, seeds):
    """Boolean array of nodes that can reach the seed set."""
    n = len(graph.nodes)
    inside = bytearray(n)
    queue = deque()
    for v in seeds:
        if not inside[v]:
            inside[v] = 1
            queue.append(v)
    while queue:
        v = queue.popleft()
        for u in graph.pred[v]:
            if not inside[u]:
                inside[u] = 1
                queue.append(u)
    return inside


def _enabled_nodes(graph, ti):
    net = graph.net
    sup = net._pre_support[ti]
    out = []
    for v, m in enumerate(graph.nodes):
        ok = True
        for i, w in sup:
            if m[i] < w:
                ok = False
                break
        if ok:
            out.append(v)
    return out


def is_live_exact(net, m0, node_budget=200_000):
    """Exact liveness by exploration: from every reachable marking, every
    transition must remain coverable.  Intended for conservative nets or any
    net whose reachability set fits the budget."""
    g = reach_graph(net, m0, node_budget)
    if isinstance(g, BudgetExceeded):
        return g
    n = len(g.nodes)
    for ti in range(len(net.transitions)):
        closure = _back_closure(g, _enabled_nodes(g, ti))
        if not all(closure):
            return False
    return True


def cached_cover_basis(net, t, node_budget=200_000):
    cache = net._analysis.setdefault("cover_basis", {})
    if t not in cache:
        cache[t] = cover_basis(net, pre_mset_of(net, t), node_budget)
    return cache[t]


def find_dl_marking(net, m0, node_budget=200_000):
    """Some reachable marking where each transition is dead or live and at
    least one is dead; None iff m0 is live.

    Deadness per marking is exact (backward coverability); a candidate
    qualifies when the net without its dead transitions is live there, which
    is equivalent because dead transitions never fire anyway.
    """
    from .slp import is_nonlive

    net.check_marking(m0)
    if is_nonlive(net, m0, node_budget=node_budget).is_live:
        return None
    bases = [cached_cover_basis(net, t, node_budget) for t in net.transitions]
    if any(isinstance(b, BudgetExceeded) for b in bases):
        return BudgetExceeded()
    restricted = {}
    seen = {tuple(m0)}
    queue = deque(seen)
    explored = 0
    while queue:
        m = queue.popleft()
        explored += 1
        if explored > node_budget:
            return BudgetExceeded(explored)
        dead = tuple(t for t, basis in zip(net.transitions, bases)
                     if not any(mleq(b, m) for b in basis))
        if dead:
            if dead not in restricted:
                keep = tuple(t for t in net.transitions if t not in dead)
                flow = {k: w for k, w in net.flow.items()
                        if k[0] in keep or k[1] in keep}
                from .nets import Net
                restricted[dead] = Net(net.name + ".dl", net.places, keep, flow)
            sub = restricted[dead]
            if not sub.transitions or is_nonlive(
                    sub, m, node_budget=node_budget).is_live:
                return m, dead, tuple(t for t in net.transitions if t not in dead)
        for ti in range(len(net.transitions)):
            ok = True
            for i, w in net._pre_support[ti]:
                if m[i] < w:
                    ok = False
                    break
            if ok:
                nm = tuple(a + d for a, d in zip(m, net._delta[ti]))
                if nm not in seen:
                    seen.add(nm)
                    queue.append(nm)
    return BudgetExceeded(explored)


def _dl_node(graph):
    net = graph.net
    n = len(graph.nodes)
    n_t = len(net.transitions)
    bad = []      # bad[ti][v]: ti is dead at node v
    nlv = []      # nlv[ti][v]: ti is non-live at node v
    for ti in range(n_t):
        can = _back_closure(graph, _enabled_nodes(graph, ti))
        b = bytearray(1 - x for x in can)
        bad.append(b)
        nlv.append(_back_closure(graph, [v for v in range(n) if b[v]]))
    for v in range(n):
        some_dead = False
        ok = True
        for ti in range(n_t):
            if bad[ti][v]:
                some_dead = True
            elif nlv[ti][v]:
                ok = False
                break
        if some_dead and ok:
            dead = tuple(net.transitions[ti] for ti in range(n_t) if bad[ti][v])
            live = tuple(net.transitions[ti] for ti in range(n_t) if not nlv[ti][v])
            return v, dead, live
    return None


# ---------------------------------------------------------------------------
# Witnesses.

@dataclass(frozen=True)
class Witness:
    m_wit: tuple
    p_cruc: tuple       # place names, declaration order
    t_dead: tuple       # transition names, declaration order
    path: tuple = None  # optional steps from the queried marking to m_wit

    def to_dict(self):
        return {
            "m_wit": list(self.m_wit),
            "p_cruc": list(self.p_cruc),
            "t_dead": list(self.t_dead),
            "path": None if self.path is None else list(self.path),
        }


@dataclass(frozen=True)
class WitnessReport:
    variant: str
    cond1: bool
    cond2: bool
    cond3: bool

    @property
    def sound(self):
        return self.cond2 and self.cond3

    def to_dict(self):
        return {"variant": self.variant, "cond1": self.cond1, "cond2": self.cond2,
                "cond3": self.cond3, "sound": self.sound}


def _sub(vec, indices):
    return tuple(vec[i] for i in indices)


def check_witness(net, witness, variant="ordinary", node_budget=200_000):
    """Check the three witness conditions; cond1 is diagnostic only.

    cond2 and cond3 together certify non-liveness of any marking that can
    reach `m_wit` in the full net.
    """
    if variant not in ("ordinary", "weighted"):
        raise NetError(f"unknown witness variant {variant!r}")
    net.check_marking(witness.m_wit)
    for p in witness.p_cruc:
        if p not in net.place_index:
            raise UnknownNode(f"unknown place {p!r}")
    for t in witness.t_dead:
        if t not in net.trans_index:
            raise UnknownNode(f"unknown transition {t!r}")
    if not witness.t_dead:
        raise NetError("witness requires a nonempty dead set")

    indices = tuple(sorted(net.place_index[p] for p in witness.p_cruc))
    r = _sub(witness.m_wit, indices)
    if variant == "ordinary":
        cond1 = msize(r) < len(indices) and all(x <= 1 for x in r)
    else:
        cond1 = all(x <= net.max_weight for x in r)

    dead_idx = sorted(net.trans_index[t] for t in witness.t_dead)
    dead_set = set(dead_idx)
    alive_idx = [ti for ti in range(len(net.transitions)) if ti not in dead_set]

    cond2 = all(
        is_imo_msets(_sub(net._pre[ti], indices), _sub(net._post[ti], indices))
        for ti in alive_idx)

    cond3 = _restricted_never_covers(net, indices, r, alive_idx, dead_idx, node_budget)
    return WitnessReport(variant=variant, cond1=cond1, cond2=cond2, cond3=cond3)


def _restricted_never_covers(net, indices, r, fire_idx, watch_idx, node_budget):
    """Explore the restriction firing `fire_idx` only; fail if any watched
    transition's restricted pre-mset gets covered."""
    watch = [(ti, _sub(net._pre[ti], indices)) for ti in watch_idx]
    moves = []
    for ti in fire_idx:
        pre = _sub(net._pre[ti], indices)
        post = _sub(net._post[ti], indices)
        if any(pre) or any(post):
            moves.append((pre, tuple(q - p for p, q in zip(pre, post))))
    seen = {r}
    queue = deque([r])
    explored = 0
    while queue:
        m = queue.popleft()
        explored += 1
        if explored > node_budget:
            raise BudgetError(explored)
        for _, wpre in watch:
            if mleq(wpre, m):
                return False
        for pre, delta in moves:
            if mleq(pre, m):
                nm = tuple(a + d for a, d in zip(m, delta))
                if nm not in seen:
                    seen.add(nm)
                    queue.append(nm)
    return True


# ---------------------------------------------------------------------------
# Witness search.  For each candidate set S of crucial places, let T_I be the
# transitions whose restriction to S still only moves one token; exploring the
# restriction with T_I and collecting the set E of transitions whose
# restricted pre-mset ever gets covered, S yields a witness exactly when
# E stays inside T_I and misses some transition.  The dead set is then the
# canonical D = T minus E, which subsumes every witness on (marking, S).

class _SubsetData:
    __slots__ = ("indices", "t_i", "fire", "covers", "universal")

    def __init__(self, net, indices):
        self.indices = indices
        n_t = len(net.transitions)
        t_i = []
        fire = []
        covers = []
        for ti in range(n_t):
            pre = _sub(net._pre[ti], indices)
            post = _sub(net._post[ti], indices)
            imo = is_imo_msets(pre, post)
            t_i.append(imo)
            covers.append(pre)
            if imo and (any(pre) or any(post)):
                fire.append((pre, tuple(q - p for p, q in zip(pre, post))))
        self.t_i = tuple(t_i)
        self.fire = tuple(fire)
        self.covers = tuple(covers)
        self.universal = all(t_i)

    @property
    def viable(self):
        # a transition with an empty restricted pre-mset is always covered,
        # so it must be inside T_I for any witness to exist on this subset
        return all(imo or any(pre) for imo, pre in zip(self.t_i, self.covers))


class WitnessIndex:
    """Per-net cache of subset data and memoized restricted explorations."""

    def __init__(self, net, subset_cap=16):
        if len(net.places) > subset_cap:
            raise SubsetCapExceeded(
                f"|P|={len(net.places)} exceeds the subset enumeration cap {subset_cap}")
        self.net = net
        self.entries = []
        n = len(net.places)
        masks = sorted(range(1, 1 << n),
                       key=lambda m: (bin(m).count("1"),
                                      tuple(i for i in range(n) if m >> i & 1)))
        for mask in masks:
            indices = tuple(i for i in range(n) if mask >> i & 1)
            data = _SubsetData(net, indices)
            if data.viable:
                self.entries.append(data)
        self.memo = {}
        self.at_memo = {}

    def dead_set(self, data, r, node_budget=1_000_000):
        """Canonical dead set for (subset, restricted marking) or None."""
        key = (data.indices, r)
        hit = self.memo.get(key, 0)
        if hit != 0:
            return hit
        n_t = len(self.net.transitions)
        t_i = data.t_i
        covered = [False] * n_t
        seen = {r}
        queue = deque([r])
        explored = 0
        result = None
        while queue:
            m = queue.popleft()
            explored += 1
            if explored > node_budget:
                raise BudgetError(explored)
            for ti in range(n_t):
                if not covered[ti] and mleq(data.covers[ti], m):
                    if not t_i[ti]:
                        self.memo[key] = None
                        return None
                    covered[ti] = True
            for pre, delta in data.fire:
                if mleq(pre, m):
                    nm = tuple(a + d for a, d in zip(m, delta))
                    if nm not in seen:
                        seen.add(nm)
                        queue.append(nm)
        if not all(covered):
            result = frozenset(ti for ti in range(n_t) if not covered[ti])
        self.memo[key] = result
        return result

    def witness_at(self, marking, strict=False):
        """First witness at the marking in (size, lex) subset order."""
        if strict:
            for data in self.entries:
                if not data.universal:
                    continue
                dead = self.dead_set(data, _sub(marking, data.indices))
                if dead:
                    return (data.indices, dead)
            return None
        if marking in self.at_memo:
            return self.at_memo[marking]
        found = None
        for data in self.entries:
            dead = self.dead_set(data, _sub(marking, data.indices))
            if dead:
                found = (data.indices, dead)
                break
        self.at_memo[marking] = found
        return found


def witness_index(net, subset_cap=16):
    cache = net._analysis
    idx = cache.get("witness_index")
    if idx is None:
        idx = WitnessIndex(net, subset_cap)
        cache["witness_index"] = idx
    return idx


def find_witness(net, marking, subset_cap=16, strict=False):
    """Search every subset of places for a witness at the given marking.

    In strict mode the whole transition set must restrict to single-token
    moves on the subset, mirroring the coarser check; the default follows the
    weaker (complete) condition that only non-dead transitions must.
    """
    net.check_marking(marking)
    idx = witness_index(net, subset_cap)
    hit = idx.witness_at(tuple(marking), strict=strict)
    if hit is None:
        return None
    indices, dead = hit
    return Witness(
        m_wit=tuple(marking),
        p_cruc=tuple(net.places[i] for i in indices),
        t_dead=tuple(net.transitions[ti] for ti in sorted(dead)),
        path=(),
    )


def constructed_witness(net, graph, node_budget=200_000):
    """Build a witness on a completed reach graph without subset enumeration.

    Finds a reachable marking where the transition set splits into dead and
    live parts, walks the live part down to a bottom component with maximal
    carrier, and takes the poor components of the relaxed live-restriction as
    the crucial places.  Works for nets too large for subset search.
    """
    from .structure import relaxed_net, sccs, rich_poor, _tarjan
    from .nets import Net
    from .classify import DUMMY_PLACE

    res = _dl_node(graph)
    if res is None:
        return None
    v0, dead, live = res
    live_set = set(live)

    # bottom SCC of the live-fired subgraph reachable from v0
    reach = [v0]
    seen = {v0}
    for v in reach:
        for t, w in graph.succ[v]:
            if t in live_set and w not in seen:
                seen.add(w)
                reach.append(w)
    local = {v: i for i, v in enumerate(reach)}
    succ = [[] for _ in reach]
    for v in reach:
        for t, w in graph.succ[v]:
            if t in live_set and w in local:
                succ[local[v]].append(local[w])
    comps = _tarjan(len(reach), succ)
    bottom = None
    for comp in comps:
        outs = {w for v in comp for w in succ[v]}
        if outs <= set(comp):
            bottom = comp
            break
    nodes = [reach[v] for v in bottom]
    v_star = max(nodes, key=lambda v: (len(carrier(graph.nodes[v])), -v))
    m_star = graph.nodes[v_star]

    flow = {k: w for k, w in net.flow.items()
            if (k[0] in live_set) or (k[1] in live_set)}
    live_net = Net(net.name + ".live", net.places, tuple(live), flow)
    rlx = relaxed_net(live_net)
    comps2 = sccs(rlx)
    m_ext = m_star if len(rlx.places) == len(net.places) else m_star + (1,)
    status = rich_poor(rlx, m_ext, comps2)
    cruc = []
    for comp in comps2:
        if status[comp] == "poor":
            cruc.extend(p for p in comp.places if p != DUMMY_PLACE)
    cruc = tuple(sorted(cruc, key=net.place_index.get))
    return Witness(
        m_wit=m_star,
        p_cruc=cruc,
        t_dead=tuple(dead),
        path=graph.path_to(v_star),
    )
