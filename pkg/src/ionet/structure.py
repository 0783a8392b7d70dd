"""Structural analysis: relaxed nets, components, siphons, bounded searches."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .classify import classify, dummy_augment, presentation, NotBimo
from .nets import Net, UnknownNode, carrier, mleq


@dataclass(frozen=True)
class Component:
    """One strongly connected component of a net viewed as a directed graph."""
    vertices: tuple  # place and transition names, by declaration index
    places: tuple
    is_top: bool
    is_bottom: bool

    @property
    def trivial(self):
        return len(self.vertices) == 1


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a bounded exploration: 'yes', 'no' or 'budget'."""
    status: str
    sequence: tuple = None   # for self-coverability
    marking: tuple = None    # counterexample marking for carrier maximality
    explored: int = 0


def relaxed_net(net):
    """Keep only the moving edges of each presentation, all with weight 1.

    Observation edges are dropped, so a transition keeps one incoming edge
    from its source place and one outgoing edge per destination place.
    """
    if not classify(net).bimo:
        raise NotBimo("relaxed net requires a net of the branching-observation family")
    base = dummy_augment(net)
    flow = {}
    for t in base.transitions:
        pres = presentation(base, t)
        flow[(pres.source, t)] = 1
        for d in set(pres.destinations):
            flow[(t, d)] = 1
    return Net(net.name + ".relaxed", base.places, base.transitions, flow)


def _graph(net):
    order = list(net.places) + list(net.transitions)
    index = {v: i for i, v in enumerate(order)}
    succ = [[] for _ in order]
    for (a, b) in net.flow:
        succ[index[a]].append(index[b])
    for lst in succ:
        lst.sort()
    return order, succ


def _tarjan(n_vertices, succ):
    """Iterative Tarjan; returns a list of vertex-index lists."""
    index = [None] * n_vertices
    low = [0] * n_vertices
    on_stack = [False] * n_vertices
    stack = []
    sccs = []
    counter = 0
    for root in range(n_vertices):
        if index[root] is not None:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for k in range(pi, len(succ[v])):
                w = succ[v][k]
                if index[w] is None:
                    work[-1] = (v, k + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(sorted(comp))
    return sccs


def sccs(net):
    """Strongly connected components, topologically ordered (sources first).

    Ties between independent components break on the lowest vertex index, so
    the output is reproducible.
    """
    order, succ = _graph(net)
    comps = _tarjan(len(order), succ)
    comp_of = {}
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    nc = len(comps)
    edges = [set() for _ in range(nc)]
    redges = [set() for _ in range(nc)]
    for v in range(len(order)):
        for w in succ[v]:
            a, b = comp_of[v], comp_of[w]
            if a != b:
                edges[a].add(b)
                redges[b].add(a)
    import heapq
    indeg = [len(r) for r in redges]
    heap = [(comps[ci][0], ci) for ci in range(nc) if indeg[ci] == 0]
    heapq.heapify(heap)
    topo = []
    while heap:
        _, ci = heapq.heappop(heap)
        topo.append(ci)
        for cj in sorted(edges[ci]):
            indeg[cj] -= 1
            if indeg[cj] == 0:
                heapq.heappush(heap, (comps[cj][0], cj))
    place_set = set(net.places)
    out = []
    for ci in topo:
        verts = tuple(order[v] for v in comps[ci])
        out.append(Component(
            vertices=verts,
            places=tuple(v for v in verts if v in place_set),
            is_top=not redges[ci],
            is_bottom=not edges[ci],
        ))
    return out


def rich_poor(relaxed, marking, components=None):
    """Map each component to 'rich' or 'poor' at the given marking.

    A component with places P_C is rich when the marking puts at least |P_C|
    tokens on P_C; place-free components are always rich.
    """
    if components is None:
        components = sccs(relaxed)
    out = {}
    for comp in components:
        total = sum(marking[relaxed.place_index[p]] for p in comp.places
                    if p in relaxed.place_index and relaxed.place_index[p] < len(marking))
        out[comp] = "rich" if total >= len(comp.places) else "poor"
    return out


def is_siphon(net, place_set):
    """True iff every transition feeding the set also drains it."""
    idx = set()
    for p in place_set:
        if p not in net.place_index:
            raise UnknownNode(f"unknown place {p!r}")
        idx.add(net.place_index[p])
    for ti in range(len(net.transitions)):
        post = net._post[ti]
        if any(post[i] for i in idx):
            pre = net._pre[ti]
            if not any(pre[i] for i in idx):
                return False
    return True


def unmarked_siphon(net, marking, minimize=False):
    """Largest siphon unmarked at the marking, or None.

    Runs the standard fixpoint: start from all unmarked places and prune any
    place fed by a transition whose pre-mset misses the current set.  With
    `minimize`, greedily drops places while a nonempty siphon remains.
    """
    net.check_marking(marking)

    def prune(start):
        s = set(start)
        changed = True
        while changed and s:
            changed = False
            for ti in range(len(net.transitions)):
                pre, post = net._pre[ti], net._post[ti]
                if any(pre[i] for i in s):
                    continue
                hit = [i for i in s if post[i]]
                if hit:
                    s.difference_update(hit)
                    changed = True
        return s

    base = prune(i for i, x in enumerate(marking) if x == 0)
    if not base:
        return None
    if minimize:
        for i in sorted(base):
            if i not in base:
                continue
            smaller = prune(base - {i})
            if smaller:
                base = smaller
    return tuple(net.places[i] for i in sorted(base))


def is_self_coverable(net, marking, node_budget=200_000):
    """Search for a full execution from the marking back above itself.

    Success needs marking -> M' with M' >= marking where every transition of
    the net occurred at least once.
    """
    net.check_marking(marking)
    start = tuple(marking)
    n_trans = len(net.transitions)
    full = (1 << n_trans) - 1
    init = (start, 0)
    seen = {init: None}
    queue = deque([init])
    explored = 0
    while queue:
        state = queue.popleft()
        m, mask = state
        explored += 1
        if mask == full and mleq(start, m):
            seq = []
            cur = state
            while seen[cur] is not None:
                prev, t = seen[cur]
                seq.append(t)
                cur = prev
            return SearchResult(status="yes", sequence=tuple(reversed(seq)), explored=explored)
        if explored > node_budget:
            return SearchResult(status="budget", explored=explored)
        for ti, t in enumerate(net.transitions):
            ok = True
            for i, w in net._pre_support[ti]:
                if m[i] < w:
                    ok = False
                    break
            if not ok:
                continue
            nxt = (tuple(a + d for a, d in zip(m, net._delta[ti])), mask | (1 << ti))
            if nxt not in seen:
                seen[nxt] = (state, t)
                queue.append(nxt)
    return SearchResult(status="no", explored=explored)


def is_carrier_maximal(net, marking, node_budget=200_000):
    """Check that no reachable marking has a strictly larger carrier."""
    net.check_marking(marking)
    start = tuple(marking)
    base = len(carrier(start))
    seen = {start}
    queue = deque([start])
    explored = 0
    while queue:
        m = queue.popleft()
        explored += 1
        if len(carrier(m)) > base:
            return SearchResult(status="no", marking=m, explored=explored)
        if explored > node_budget:
            return SearchResult(status="budget", explored=explored)
        for ti in range(len(net.transitions)):
            ok = True
            for i, w in net._pre_support[ti]:
                if m[i] < w:
                    ok = False
                    break
            if not ok:
                continue
            nxt = tuple(a + d for a, d in zip(m, net._delta[ti]))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return SearchResult(status="yes", explored=explored)
