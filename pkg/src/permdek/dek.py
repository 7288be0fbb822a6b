"""The deque solitaire game: rules, solvers, and hints.

A shuffled one-suit deck sits face down; the goal is to build a face-up
pile running 1, 2, ..., n.  Whenever the next card the pile needs is
the top of the deck or at either end of the face-up deque, it may be
played to the pile; the top of the deck may always be moved to either
deque end instead.  Pile plays are optional, not forced: the rules are
permissive, and the solvers own the question of what is wise.

Two solvers answer "what is the chance of winning under optimal play":

* clairvoyant -- the player knows the face-down deck order.  Winnability
  of each shuffle is a 0/1 fact decided by search, and the probability
  is (#winnable shuffles) / n!.
* policy -- the player sees only the deque, the pile, and each card as
  it is drawn.  The value is an expectimax over belief states (deque,
  next needed rank, set of unseen ranks), with the unseen deck order
  uniform.

Both report exact rationals; information can only help, so the policy
value never exceeds the clairvoyant one.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import _core, perms
from .perms import Perm

log = logging.getLogger(__name__)

PLAY_DECK = "PLAY_DECK"
PLAY_LEFT = "PLAY_LEFT"
PLAY_RIGHT = "PLAY_RIGHT"
TO_LEFT = "TO_LEFT"
TO_RIGHT = "TO_RIGHT"

#: Fixed order used for hint tie-breaking and legal_moves listing.
MOVE_KINDS = (PLAY_DECK, PLAY_LEFT, PLAY_RIGHT, TO_LEFT, TO_RIGHT)

MAX_SOLVE_N = 10
MAX_PROB_N = 8
MAX_POLICY_N = 6

WinValue = Fraction


class DekError(ValueError):
    """An invalid game state or an illegal move."""


class GameLost(DekError):
    """Raised when a hint is requested but no legal move exists."""


@dataclass(frozen=True)
class DekState:
    """Deck (top first), deque (left to right), and the pile's next rank."""

    deck: tuple[int, ...]
    deque: tuple[int, ...]
    next_needed: int
    n: int

    @property
    def won(self) -> bool:
        return self.next_needed == self.n + 1


def validate_state(s: DekState) -> DekState:
    """Check the partition invariant; raise :class:`DekError` naming it."""
    if not 1 <= s.next_needed <= s.n + 1:
        raise DekError(f"next_needed {s.next_needed} outside 1..{s.n + 1}")
    for name, cards in (("deck", s.deck), ("deque", s.deque)):
        for v in cards:
            if isinstance(v, bool) or not isinstance(v, int):
                raise DekError(f"{name} rank {v!r} is not an integer")
    pile = set(range(1, s.next_needed))
    held = list(s.deck) + list(s.deque)
    union = pile | set(held)
    if len(held) + len(pile) != s.n or union != set(range(1, s.n + 1)):
        raise DekError(
            "deck, deque and pile must partition ranks 1..n "
            f"(deck={s.deck}, deque={s.deque}, pile below {s.next_needed}, n={s.n})"
        )
    return s


def new_game(shuffle: Perm) -> DekState:
    """Start a game: the whole shuffle face down, deque empty, 1 needed."""
    shuffle = perms.validate_permutation(shuffle)
    return DekState(deck=shuffle, deque=(), next_needed=1, n=len(shuffle))


def legal_moves(s: DekState) -> list[str]:
    """Legal moves in :data:`MOVE_KINDS` order; empty means the game is lost.

    Pile plays appear for every end holding the needed card; deck moves
    appear whenever the deck is nonempty.  Won states cannot be queried.
    """
    if s.won:
        raise DekError("the game is already won; no moves to list")
    k = s.next_needed
    moves = []
    if s.deck and s.deck[0] == k:
        moves.append(PLAY_DECK)
    if s.deque and s.deque[0] == k:
        moves.append(PLAY_LEFT)
    if s.deque and s.deque[-1] == k:
        moves.append(PLAY_RIGHT)
    if s.deck:
        moves.append(TO_LEFT)
        moves.append(TO_RIGHT)
    return moves


def is_lost(s: DekState) -> bool:
    """Deck exhausted and the needed card buried inside the deque."""
    return not s.won and not legal_moves(s)


def apply_move(s: DekState, move: str) -> DekState:
    """Apply one card transfer, validating legality with a reason."""
    if move not in MOVE_KINDS:
        raise DekError(f"unknown move {move!r}")
    if s.won:
        raise DekError("the game is already won")
    k = s.next_needed
    if move == PLAY_DECK:
        if not s.deck:
            raise DekError("PLAY_DECK illegal: the deck is empty")
        if s.deck[0] != k:
            raise DekError(f"PLAY_DECK illegal: deck top is {s.deck[0]}, pile needs {k}")
        return DekState(s.deck[1:], s.deque, k + 1, s.n)
    if move == PLAY_LEFT:
        if not s.deque:
            raise DekError("PLAY_LEFT illegal: the deque is empty")
        if s.deque[0] != k:
            raise DekError(f"PLAY_LEFT illegal: left end is {s.deque[0]}, pile needs {k}")
        return DekState(s.deck, s.deque[1:], k + 1, s.n)
    if move == PLAY_RIGHT:
        if not s.deque:
            raise DekError("PLAY_RIGHT illegal: the deque is empty")
        if s.deque[-1] != k:
            raise DekError(
                f"PLAY_RIGHT illegal: right end is {s.deque[-1]}, pile needs {k}"
            )
        return DekState(s.deck, s.deque[:-1], k + 1, s.n)
    if not s.deck:
        raise DekError(f"{move} illegal: the deck is empty")
    card = s.deck[0]
    if move == TO_LEFT:
        return DekState(s.deck[1:], (card,) + s.deque, k, s.n)
    return DekState(s.deck[1:], s.deque + (card,), k, s.n)


def state_winnable(s: DekState, single_end: bool = False) -> bool:
    """Clairvoyant winnability of an arbitrary position."""
    if s.n > MAX_SOLVE_N:
        raise ValueError(f"n must be at most {MAX_SOLVE_N}")
    return _core.dek_winnable(s.deck, s.deque, s.next_needed, s.n, single_end)


def clairvoyant_winnable(
    shuffle: Perm, single_end: bool = False
) -> tuple[bool, list[str] | None]:
    """Decide winnability of a shuffle and return a winning move list.

    The witness plays the needed card the moment it is available (a safe
    exchange argument shows delaying an available play never helps) and
    otherwise tries the left deque end before the right.
    """
    shuffle = perms.validate_permutation(shuffle)
    n = len(shuffle)
    if n > MAX_SOLVE_N:
        raise ValueError(f"n must be at most {MAX_SOLVE_N}")
    failed: set = set()

    def search(i: int, dq: tuple[int, ...], k: int) -> list[str] | None:
        if k > n:
            return []
        key = (i, k, min(dq, dq[::-1]))
        if key in failed:
            return None
        deck_left = i < n
        if deck_left and shuffle[i] == k:
            tail = search(i + 1, dq, k + 1)
            result = [PLAY_DECK] + tail if tail is not None else None
        elif dq and dq[0] == k:
            tail = search(i, dq[1:], k + 1)
            result = [PLAY_LEFT] + tail if tail is not None else None
        elif not single_end and dq and dq[-1] == k:
            tail = search(i, dq[:-1], k + 1)
            result = [PLAY_RIGHT] + tail if tail is not None else None
        elif deck_left:
            v = shuffle[i]
            tail = search(i + 1, (v,) + dq, k)
            result = [TO_LEFT] + tail if tail is not None else None
            if result is None and not single_end:
                tail = search(i + 1, dq + (v,), k)
                result = [TO_RIGHT] + tail if tail is not None else None
        else:
            result = None
        if result is None:
            failed.add(key)
        return result

    witness = search(0, (), 1)
    return (witness is not None, witness)


def winnable_count(n: int, single_end: bool = False) -> int:
    """Number of winnable shuffles of size n under clairvoyant play."""
    if not 0 <= n <= MAX_PROB_N:
        raise ValueError(f"n must be in 0..{MAX_PROB_N}")
    return sum(
        1
        for shuffle in perms.all_permutations_of(n)
        if _core.dek_winnable(shuffle, (), 1, n, single_end)
    )


def win_probability_clairvoyant(n: int) -> WinValue:
    """(#winnable shuffles) / n! as an exact reduced fraction."""
    if not 0 <= n <= MAX_PROB_N:
        raise ValueError(f"n must be in 0..{MAX_PROB_N}")
    return Fraction(winnable_count(n), math.factorial(n))


@lru_cache(maxsize=None)
def _policy_value(n: int, dq: tuple[int, ...], k: int) -> Fraction:
    """Expectimax value of the belief state (deque, next needed rank).

    The unseen set is determined: ranks not on the pile and not in the
    deque.  Chance nodes draw uniformly from it; after seeing the drawn
    card the player places it (pile if it is the needed rank, else
    either deque end, and parking the needed rank is allowed too).
    """
    if k > n:
        return Fraction(1)
    dq = min(dq, dq[::-1])
    best = Fraction(0)
    if dq and dq[0] == k:
        best = _policy_value(n, dq[1:], k + 1)
    elif dq and dq[-1] == k:
        best = _policy_value(n, dq[:-1], k + 1)
    unseen = [v for v in range(k, n + 1) if v not in dq]
    if unseen:
        total = Fraction(0)
        for c in unseen:
            after = max(
                _policy_value(n, (c,) + dq, k),
                _policy_value(n, dq + (c,), k),
            )
            if c == k:
                after = max(after, _policy_value(n, dq, k + 1))
            total += after
        drawn = total / len(unseen)
        best = max(best, drawn)
    return best


def optimal_policy_value(n: int) -> WinValue:
    """Value of the game for a non-peeking optimal player."""
    if not 0 <= n <= MAX_POLICY_N:
        raise ValueError(f"n must be in 0..{MAX_POLICY_N}")
    return _policy_value(n, (), 1)


def policy_state_value(s: DekState) -> WinValue:
    """Belief value of a position for the non-peeking player."""
    if s.n > MAX_POLICY_N:
        raise ValueError(f"n must be at most {MAX_POLICY_N}")
    return _policy_value(s.n, s.deque, s.next_needed)


def hint(s: DekState, mode: str = "clairvoyant") -> tuple[str, WinValue]:
    """A legal move maximizing the chosen solver's value, with that value.

    Ties break by :data:`MOVE_KINDS` order.  Clairvoyant hints need the
    true deck order and value moves 0 or 1.  Policy hints value deque
    plays exactly and value all deck moves together as one draw whose
    outcome is uniform over the unseen ranks; the concrete deck move
    returned places the actual top card best, which is fair because the
    player sees a drawn card before placing it.
    """
    validate_state(s)
    if s.won:
        raise DekError("the game is already won; nothing to hint")
    moves = legal_moves(s)
    if not moves:
        raise GameLost("no legal moves: the game is lost")
    if mode == "clairvoyant":
        scored = [
            (Fraction(1) if state_winnable(apply_move(s, m)) else Fraction(0), m)
            for m in moves
        ]
        value, move = max(scored, key=lambda vm: (vm[0], -MOVE_KINDS.index(vm[1])))
        return move, value
    if mode != "policy":
        raise ValueError(f"unknown hint mode {mode!r}")
    if s.n > MAX_POLICY_N:
        raise ValueError(f"policy hints need n at most {MAX_POLICY_N}")
    k = s.next_needed
    candidates: list[tuple[Fraction, int, str]] = []
    if PLAY_LEFT in moves:
        v = _policy_value(s.n, s.deque[1:], k + 1)
        candidates.append((v, MOVE_KINDS.index(PLAY_LEFT), PLAY_LEFT))
    if PLAY_RIGHT in moves:
        v = _policy_value(s.n, s.deque[:-1], k + 1)
        candidates.append((v, MOVE_KINDS.index(PLAY_RIGHT), PLAY_RIGHT))
    if s.deck:
        unseen = [v for v in range(k, s.n + 1) if v not in s.deque]
        total = Fraction(0)
        for c in unseen:
            after = max(
                _policy_value(s.n, (c,) + s.deque, k),
                _policy_value(s.n, s.deque + (c,), k),
            )
            if c == k:
                after = max(after, _policy_value(s.n, s.deque, k + 1))
            total += after
        draw_value = total / len(unseen)
        top = s.deck[0]
        placements = [
            (_policy_value(s.n, (top,) + s.deque, k), MOVE_KINDS.index(TO_LEFT), TO_LEFT),
            (_policy_value(s.n, s.deque + (top,), k), MOVE_KINDS.index(TO_RIGHT), TO_RIGHT),
        ]
        if top == k:
            placements.append(
                (_policy_value(s.n, s.deque, k + 1), MOVE_KINDS.index(PLAY_DECK), PLAY_DECK)
            )
        _, order, concrete = max(placements, key=lambda t: (t[0], -t[1]))
        candidates.append((draw_value, order, concrete))
    value, _, move = max(candidates, key=lambda t: (t[0], -t[1]))
    return move, value
