"""Net class detection and canonical transition presentations.

A transition whose pre-mset minus post-mset has at most one element moves a
single "source" token while observing the rest; the presentation splits its
flow into source place, observation multiset and destination multiset.
Transitions with an empty pre-mset are handled through a reserved dummy
place that is read and written with weight 1.
"""
from __future__ import annotations

from dataclasses import dataclass

from .nets import Net, NetError, UnknownNode, msize, msub

DUMMY_PLACE = "__dummy"


class NotBimo(NetError):
    pass


@dataclass(frozen=True)
class TransitionPresentation:
    transition: str
    source: str
    observations: tuple  # place names with multiplicity, ordered by index
    destinations: tuple


@dataclass(frozen=True)
class NetClass:
    ordinary: bool
    conservative: bool
    bimo: bool
    bio: bool
    imo: bool
    io: bool
    max_weight: int

    def finest(self):
        for flag, label in (
            (self.io, "io"), (self.imo, "imo"), (self.bio, "bio"), (self.bimo, "bimo"),
        ):
            if flag:
                return ("ord-" + label) if self.ordinary else label
        return "general"


def _aug_sizes(pre, post):
    """(|pre|, |post|) after adding the dummy loop when pre is empty."""
    sp, sq = msize(pre), msize(post)
    if sp == 0:
        return 1, sq + 1
    return sp, sq


def is_bimo_msets(pre, post):
    return msize(msub(pre, post)) <= 1


def is_bio_msets(pre, post):
    sp, _ = _aug_sizes(pre, post)
    return is_bimo_msets(pre, post) and sp <= 2


def is_imo_msets(pre, post):
    """True iff the pair admits a one-destination presentation.

    Covers the empty/empty case (a no-op on the restricted places), which is
    treated as a move of the dummy token onto itself.
    """
    sp, sq = _aug_sizes(pre, post)
    return is_bimo_msets(pre, post) and sp == sq


def classify(net):
    """Compute all class flags; vacuously true on transition-free nets."""
    cached = net._analysis.get("class")
    if cached is not None:
        return cached
    ordinary = all(w == 1 for w in net.flow.values())
    conservative = True
    bimo = bio = imo = True
    for ti in range(len(net.transitions)):
        pre, post = net._pre[ti], net._post[ti]
        if msize(pre) != msize(post):
            conservative = False
        if not is_bimo_msets(pre, post):
            bimo = bio = imo = False
            continue
        if not is_bio_msets(pre, post):
            bio = False
        if not is_imo_msets(pre, post):
            imo = False
    result = NetClass(
        ordinary=ordinary,
        conservative=conservative,
        bimo=bimo,
        bio=bio,
        imo=imo and bimo,
        io=bio and imo and bimo,
        max_weight=net.max_weight,
    )
    net._analysis["class"] = result
    return result


def presentation(net, t):
    """Canonical (source, observations, destinations) split of a transition.

    When no place loses a token the source is the lowest-index marked
    pre-place, which keeps derived constructions reproducible.
    """
    if t not in net.trans_index:
        raise UnknownNode(f"unknown transition {t!r}")
    ti = net.trans_index[t]
    pre, post = net._pre[ti], net._post[ti]
    names = net.places
    if msize(pre) == 0:
        # dummy loop: source is the dummy, post gains the returned dummy token
        pre = pre + (1,)
        post = post + (1,)
        names = names + (DUMMY_PLACE,)
    diff = msub(pre, post)
    excess = msize(diff)
    if excess >= 2:
        raise NotBimo(f"transition {t!r} removes more than one token net")
    if excess == 1:
        src = next(i for i, d in enumerate(diff) if d)
    else:
        src = next(i for i, w in enumerate(pre) if w)
    obs = list(pre)
    obs[src] -= 1
    dest = [q - o for q, o in zip(post, obs)]
    if any(d < 0 for d in dest):  # cannot happen for BIMO transitions
        raise NotBimo(f"transition {t!r} has no valid presentation")

    def expand(vec):
        out = []
        for i, w in enumerate(vec):
            out.extend([names[i]] * w)
        return tuple(out)

    return TransitionPresentation(
        transition=t,
        source=names[src],
        observations=expand(obs),
        destinations=expand(dest),
    )


def dummy_augment(net):
    """Add the reserved dummy place looping on every empty-pre transition.

    Returns the input unchanged when no transition needs it.  Markings of the
    original net lift by appending one token for the dummy.
    """
    needy = [t for ti, t in enumerate(net.transitions) if msize(net._pre[ti]) == 0]
    if not needy:
        return net
    if DUMMY_PLACE in net.place_index or DUMMY_PLACE in net.trans_index:
        raise NetError(f"identifier {DUMMY_PLACE!r} is reserved")
    flow = dict(net.flow)
    for t in needy:
        flow[(DUMMY_PLACE, t)] = 1
        flow[(t, DUMMY_PLACE)] = 1
    return Net(net.name, net.places + (DUMMY_PLACE,), net.transitions, flow)


def augment_marking(marking):
    """Lift a marking of a net onto its dummy-augmented version."""
    return tuple(marking) + (1,)
