"""Signature machinery for crystal operators on tensor products.

Words over {+1, -1, 0} (plus/minus/zero) tagged with factor positions.
Reduction deletes zeros and cancels every adjacent (plus, minus) pair --
a plus immediately followed by a minus, never the other convention -- until
the word has shape minus^a plus^b.  The lowering operator acts at the factor
of the leftmost surviving plus, the raising operator at the rightmost
surviving minus.
"""

from __future__ import annotations

PLUS = 1
MINUS = -1
ZERO = 0


class UWord:
    """A signature word with per-symbol factor positions."""

    __slots__ = ("symbols", "positions")

    def __init__(self, symbols, positions=None):
        self.symbols = tuple(symbols)
        if positions is None:
            positions = range(len(self.symbols))
        self.positions = tuple(positions)
        if len(self.symbols) != len(self.positions):
            raise ValueError("symbols and positions must have equal length")

    def __eq__(self, other):
        return self.symbols == other.symbols and self.positions == other.positions

    def __repr__(self):
        sym = "".join({PLUS: "+", MINUS: "-", ZERO: "0"}[s] for s in self.symbols)
        return f"UWord({sym!r}, {self.positions})"


def reduce_word(word: UWord) -> UWord:
    """Reduce in a single left-to-right stack pass.

    Equivalent to deleting zeros and then repeatedly cancelling adjacent
    (plus, minus) pairs to the fixed point; the equivalence is a tested
    property, not an assumption.
    """
    plus_stack = []  # positions of surviving pluses
    minus_out = []  # positions of surviving minuses, left to right
    for sym, pos in zip(word.symbols, word.positions):
        if sym == ZERO:
            continue
        if sym == PLUS:
            plus_stack.append(pos)
        else:
            if plus_stack:
                plus_stack.pop()
            else:
                minus_out.append(pos)
    symbols = (MINUS,) * len(minus_out) + (PLUS,) * len(plus_stack)
    return UWord(symbols, tuple(minus_out) + tuple(plus_stack))


def reduce_brute(word: UWord) -> UWord:
    """Fixed-point reduction by repeated single-pair deletion (oracle)."""
    syms = list(word.symbols)
    poss = list(word.positions)
    keep = [i for i, s in enumerate(syms) if s != ZERO]
    syms = [syms[i] for i in keep]
    poss = [poss[i] for i in keep]
    while True:
        for i in range(len(syms) - 1):
            if syms[i] == PLUS and syms[i + 1] == MINUS:
                del syms[i : i + 2]
                del poss[i : i + 2]
                break
        else:
            return UWord(syms, poss)


def eps_phi(word: UWord) -> tuple[int, int]:
    """(number of minuses, number of pluses) after reduction."""
    red = reduce_word(word)
    eps = sum(1 for s in red.symbols if s == MINUS)
    return eps, len(red.symbols) - eps


def act_factor(op: str, ep_list) -> int | None:
    """Index of the factor an operator acts on, or None.

    ``ep_list`` holds one (eps_i, phi_i) pair per tensor factor, in tensor
    order (first factor leftmost).  'f' acts at the leftmost surviving plus,
    'e' at the rightmost surviving minus.
    """
    plus_stack = []
    last_minus = None
    for k, (e, f) in enumerate(ep_list):
        for _ in range(e):
            if plus_stack:
                plus_stack.pop()
            else:
                last_minus = k
        if f:
            plus_stack.extend([k] * f)
    if op == "f":
        return plus_stack[0] if plus_stack else None
    if op == "e":
        return last_minus
    raise ValueError(f"unknown operator {op!r}")


def tensor_apply(op: str, factors, uword_fn, apply_fn):
    """Apply a Kashiwara operator to a tensor product of crystal elements.

    ``factors`` is the sequence of factors in tensor order, ``uword_fn``
    returns the (eps, phi) pair of a factor for the active color, and
    ``apply_fn`` performs the single-factor step.  Returns the new factor
    list or None.  A callback whose (eps, phi) disagrees with the factor's
    sl2 string (apply_fn returning None where the signature demanded a
    step) is a contract violation and raises.
    """
    k = act_factor(op, [uword_fn(b) for b in factors])
    if k is None:
        return None
    image = apply_fn(op, factors[k])
    if image is None:
        raise ValueError(
            f"signature selected factor {k} but the factor's {op}-step is empty"
        )
    out = list(factors)
    out[k] = image
    return out
