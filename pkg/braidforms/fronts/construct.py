"""Fronts of permutation-braid closures built from event words.

The tangle T_π realizes the negative permutation braid ν_π on 2n live
strands: the upper n strands travel left, the lower n travel right, and the
tangle closes them off pairwise with right cusps. Mirroring it (reverse the
word, swap births and deaths) gives the left-hand half of a closure.
"""

from ..algebra.braid import BraidWord, Permutation
from ..exceptions import BraidError
from .models import B, D, FrontDiagram, FrontEvent, X


def t_tangle_subword(pi: Permutation) -> tuple[FrontEvent, ...]:
    """Crossings and right cusps of T_π, consuming 2n live strands.

    For c = n down to 1, the dot c meets the p-th remaining upper strand,
    where p counts the remaining dots e ≤ c with π(e) ≤ π(c); it crosses the
    lower strands in between and dies with it.
    """
    events: list[FrontEvent] = []
    for c in range(pi.n, 0, -1):
        p = sum(1 for e in range(1, c + 1) if pi(e) <= pi(c))
        events.extend(X(i) for i in range(c, p, -1))
        events.append(D(p))
    return tuple(events)


def mirror(events: tuple[FrontEvent, ...]) -> tuple[FrontEvent, ...]:
    """180° rotation keeping vertical positions."""
    return tuple(e.mirrored() for e in reversed(events))


def closure_two_perms(pi: Permutation, kappa: Permutation) -> FrontDiagram:
    """Front of the closure of ν_π ν_κ*, from T_π and the rotated T_κ.

    Raises:
        BraidError: If π and κ act on different numbers of points.
    """
    if pi.n != kappa.n:
        raise BraidError(f"strand mismatch: {pi.n} vs {kappa.n}")
    return FrontDiagram(mirror(t_tangle_subword(kappa)) + t_tangle_subword(pi))


def closure_pos_braid(beta: BraidWord, pi: Permutation) -> FrontDiagram:
    """Front of the closure of β·ν_{π^{-1}} with exactly 2n cusps.

    Births open n nested eyes whose lower halves carry the braid rightward.
    Positions count top to bottom while braid generators count the other
    way, so σ_i acts on the lower strands at position 2n - i.

    Raises:
        BraidError: If β has a negative letter or the strand counts differ.
    """
    if not beta.is_positive():
        raise BraidError(f"braid {beta} has a negative letter")
    if beta.n != pi.n:
        raise BraidError(f"strand mismatch: {beta.n} vs {pi.n}")
    n = beta.n
    births = tuple(B(i) for i in range(1, n + 1))
    braid = tuple(X(2 * n - i) for i in beta.letters)
    return FrontDiagram(births + braid + t_tangle_subword(pi.inverse()))


def single_eye() -> FrontDiagram:
    """The max-tb unknot."""
    return FrontDiagram((B(1), D(1)))


def represented_word_two_perms(pi: Permutation, kappa: Permutation) -> BraidWord:
    """Braid word whose closure closure_two_perms(π, κ) represents."""
    return BraidWord.from_permutation(pi, -1) + BraidWord.from_permutation(
        kappa.inverse(), -1
    )


def represented_word_pos_braid(beta: BraidWord, pi: Permutation) -> BraidWord:
    """Braid word whose closure closure_pos_braid(β, π) represents."""
    return beta + BraidWord.from_permutation(pi.inverse(), -1)
