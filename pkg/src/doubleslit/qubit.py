"""Admissibility rules for the environmental which-path qubit.

A two-state qubit sits at the slit wall and may mark which slit the
electron traversed.  Qubit value 1 corresponds to the upper slit (and is
the default state), value 2 to the lower slit.  Three behaviors are
modeled, each pinning the composite (electron, qubit) transitions that are
allowed between the wall (primed indices) and the screen:

* NONE      - the qubit never interacts: e' = e = 1.
* REMEMBERS - the qubit faithfully records the entry slit and keeps the
              record: e' matches the slit and e = e'.
* FORGETS   - the qubit records the entry slit but relaxes back to its
              default before detection: e' matches the slit and e = 1.

Transition probabilities for the qubit itself are all 0 or 1, so
admissibility is a pure predicate; disallowed composite transitions carry
zero amplitude.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "QubitBehavior",
    "is_allowed",
    "screen_state_weights",
    "TransitionMask",
    "build_mask",
    "interference_possible",
    "render_mask",
]


class QubitBehavior(Enum):
    NONE = "none"
    REMEMBERS = "remembers"
    FORGETS = "forgets"

    @classmethod
    def from_name(cls, name: str) -> "QubitBehavior":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValueError(
                f"unknown qubit behavior {name!r}; expected one of "
                f"{[b.value for b in cls]}"
            ) from None


def _validate_indices(n: int, i_prime: int, e_prime: int, e: int) -> None:
    if n < 2 or n % 2 != 0:
        raise ValueError(f"n must be an even integer >= 2, got {n}")
    if not 1 <= i_prime <= n:
        raise IndexError(f"slit index i' must be in 1..{n}, got {i_prime}")
    if e_prime not in (1, 2):
        raise IndexError(f"wall qubit state e' must be 1 or 2, got {e_prime}")
    if e not in (1, 2):
        raise IndexError(f"screen qubit state e must be 1 or 2, got {e}")


def is_allowed(behavior: QubitBehavior, n: int, i_prime: int, e_prime: int, e: int) -> bool:
    """Whether the composite transition (i', e') -> (any screen position, e) is allowed.

    Indices are 1-based: i' in 1..n with i' <= n/2 the lower slit, e' and e
    in {1, 2}.  The screen position index never enters; admissibility is
    constant along screen rows.
    """
    _validate_indices(n, i_prime, e_prime, e)
    if behavior is QubitBehavior.NONE:
        return e_prime == 1 and e == 1
    lower = i_prime <= n // 2
    faithful_record = (lower and e_prime == 2) or (not lower and e_prime == 1)
    if behavior is QubitBehavior.REMEMBERS:
        return faithful_record and e_prime == e
    if behavior is QubitBehavior.FORGETS:
        return faithful_record and e == 1
    raise TypeError(f"behavior must be a QubitBehavior, got {behavior!r}")


def screen_state_weights(behavior: QubitBehavior, n: int) -> np.ndarray:
    """(n, 2) array of 0/1 weights: weights[i'-1, e-1] = sum over e' of is_allowed.

    Because exactly one wall qubit state is admissible per slit position,
    entries are 0.0 or 1.0 and each row sums to 1.  The propagation step
    multiplies these into the kernel terms, which realizes the admissibility
    mask without materializing the full composite transition table.
    """
    weights = np.zeros((n, 2))
    for i_prime in range(1, n + 1):
        for e in (1, 2):
            count = sum(is_allowed(behavior, n, i_prime, e_prime, e) for e_prime in (1, 2))
            weights[i_prime - 1, e - 1] = float(count)
    return weights


@dataclass(frozen=True)
class TransitionMask:
    """Allowed/disallowed structure of the composite transition matrix.

    The mask is represented by the predicate; a dense table is materialized
    only on demand (intended for small n) since the structure depends on i'
    only through which slit it falls in, never on the screen index.
    """

    behavior: QubitBehavior
    n: int

    def allowed(self, i: int, e: int, i_prime: int, e_prime: int) -> bool:
        """Predicate over (screen index i, screen state e, slit index i', wall state e')."""
        if not 1 <= i <= self.n:
            raise IndexError(f"screen index i must be in 1..{self.n}, got {i}")
        return is_allowed(self.behavior, self.n, i_prime, e_prime, e)

    def composite_table(self) -> np.ndarray:
        """Dense (2n, 2n) boolean table.

        Rows are composite screen states ordered (e=1 block, then e=2 block,
        i ascending within each block); columns are composite wall states
        ordered the same way for (i', e').
        """
        n = self.n
        table = np.zeros((2 * n, 2 * n), dtype=bool)
        for e in (1, 2):
            for i in range(1, n + 1):
                row = (e - 1) * n + (i - 1)
                for e_prime in (1, 2):
                    for i_prime in range(1, n + 1):
                        col = (e_prime - 1) * n + (i_prime - 1)
                        table[row, col] = self.allowed(i, e, i_prime, e_prime)
        return table


def build_mask(behavior: QubitBehavior, n: int) -> TransitionMask:
    """Validate arguments and wrap them in a :class:`TransitionMask`."""
    if not isinstance(behavior, QubitBehavior):
        raise TypeError(f"behavior must be a QubitBehavior, got {behavior!r}")
    if n < 2 or n % 2 != 0:
        raise ValueError(f"n must be an even integer >= 2, got {n}")
    return TransitionMask(behavior=behavior, n=n)


def interference_possible(mask: TransitionMask) -> bool:
    """True when some screen qubit state collects amplitude from both slits."""
    half = mask.n // 2
    for e in (1, 2):
        from_lower = any(
            is_allowed(mask.behavior, mask.n, i_prime, e_prime, e)
            for i_prime in range(1, half + 1) for e_prime in (1, 2)
        )
        from_upper = any(
            is_allowed(mask.behavior, mask.n, i_prime, e_prime, e)
            for i_prime in range(half + 1, mask.n + 1) for e_prime in (1, 2)
        )
        if from_lower and from_upper:
            return True
    return False


def render_mask(mask: TransitionMask) -> str:
    """Plain-text export of the composite table: '#' allowed, '.' disallowed.

    First line is ``behavior=<name> n=<n>``; the 2n following lines are the
    rows of :meth:`TransitionMask.composite_table` in order.
    """
    table = mask.composite_table()
    lines = [f"behavior={mask.behavior.value} n={mask.n}"]
    for row in table:
        lines.append("".join("#" if cell else "." for cell in row))
    return "\n".join(lines) + "\n"
