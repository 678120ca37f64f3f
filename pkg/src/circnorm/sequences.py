"""Exact integer linear-recurrence sequences and their partial sums.

Everything here runs on Python's unbounded integers, so terms and sums
are exact at any index (Fibonacci-class growth leaves 64-bit range near
n = 93, and the identity checks below are meaningful only when exact).
All functions are pure and RecurrenceSpec is immutable, so values can
be shared freely across threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import islice
from operator import index as _as_int
from typing import Iterator, Union

from .errors import UnsupportedSequence

__all__ = [
    "RecurrenceSpec",
    "SequenceId",
    "FIBONACCI",
    "LUCAS",
    "PELL",
    "PERRIN",
    "BUILTIN_SEQUENCES",
    "PUBLISHED_SUM_FORMS",
    "resolve",
    "term",
    "prefix",
    "prefix_sum",
    "closed_form_sum",
    "audit_closed_form_identity",
    "AuditRow",
    "IdentityAudit",
]


@dataclass(frozen=True)
class RecurrenceSpec:
    """Order-k integer recurrence t(n) = a1*t(n-1) + ... + ak*t(n-k).

    ``coefficients`` holds (a1, ..., ak) and ``initial_terms`` holds
    (t(0), ..., t(k-1)); indexing is zero-based throughout. Terms may be
    negative or zero here; nonnegativity is enforced only where a
    circulant matrix is built from the sequence.
    """

    coefficients: tuple[int, ...]
    initial_terms: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(_as_int(a) for a in self.coefficients)
        init = tuple(_as_int(t) for t in self.initial_terms)
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "initial_terms", init)
        if not coeffs:
            raise ValueError("recurrence order must be at least 1")
        if len(init) != len(coeffs):
            raise ValueError(
                f"need exactly {len(coeffs)} initial terms, got {len(init)}"
            )

    @property
    def order(self) -> int:
        return len(self.coefficients)


FIBONACCI = RecurrenceSpec((1, 1), (0, 1))
LUCAS = RecurrenceSpec((1, 1), (2, 1))
PELL = RecurrenceSpec((2, 1), (0, 1))
PERRIN = RecurrenceSpec((0, 1, 1), (3, 0, 2))

BUILTIN_SEQUENCES: dict[str, RecurrenceSpec] = {
    "fibonacci": FIBONACCI,
    "lucas": LUCAS,
    "pell": PELL,
    "perrin": PERRIN,
}

#: Partial-sum identities as usually published, sum_{i<n} t(i) = form(n).
#: The Perrin form is reproduced verbatim even though it is off by a
#: constant; see audit_closed_form_identity.
PUBLISHED_SUM_FORMS: dict[str, str] = {
    "fibonacci": "F(n+1) - 1",
    "lucas": "F(n+2) + F(n) - 1",
    "pell": "(P(n) + P(n-1) - 1) / 2",
    "perrin": "R(n+4) - 1",
}

#: A sequence is either a builtin name ("fibonacci", "lucas", "pell",
#: "perrin") or an explicit custom RecurrenceSpec.
SequenceId = Union[str, RecurrenceSpec]


def resolve(seq: SequenceId) -> RecurrenceSpec:
    """Map a builtin name or explicit RecurrenceSpec to the spec itself."""
    if isinstance(seq, RecurrenceSpec):
        return seq
    if isinstance(seq, str):
        try:
            return BUILTIN_SEQUENCES[seq.lower()]
        except KeyError:
            pass
    raise UnsupportedSequence(
        f"unknown sequence {seq!r}; expected one of {sorted(BUILTIN_SEQUENCES)} "
        "or a RecurrenceSpec"
    )


def _iter_terms(spec: RecurrenceSpec) -> Iterator[int]:
    """Yield t(0), t(1), ... forever, exactly."""
    window = deque(spec.initial_terms, maxlen=spec.order)
    yield from spec.initial_terms
    coeffs = spec.coefficients
    while True:
        nxt = sum(a * t for a, t in zip(coeffs, reversed(window)))
        window.append(nxt)
        yield nxt


def term(seq: SequenceId, n: int) -> int:
    """Exact n-th term (zero-based); for n < order this is an initial term."""
    if n < 0:
        raise ValueError("term index must be nonnegative")
    return next(islice(_iter_terms(resolve(seq)), n, None))


def prefix(seq: SequenceId, n: int) -> list[int]:
    """First n terms [t(0), ..., t(n-1)], generated in one linear pass."""
    if n < 1:
        raise ValueError("term count must be positive")
    return list(islice(_iter_terms(resolve(seq)), n))


def prefix_sum(seq: SequenceId, n: int) -> int:
    """Exact sum of the first n terms.

    This direct summation is the oracle the closed forms are checked
    against; it never goes through floating point.
    """
    return sum(prefix(seq, n))


def _builtin_name(seq: SequenceId) -> str:
    if isinstance(seq, RecurrenceSpec):
        raise UnsupportedSequence("no closed-form sum for custom recurrence specs")
    name = seq.lower() if isinstance(seq, str) else seq
    if name not in BUILTIN_SEQUENCES:
        raise UnsupportedSequence(
            f"unknown sequence {seq!r}; expected one of {sorted(BUILTIN_SEQUENCES)}"
        )
    return name


def closed_form_sum(seq: SequenceId, n: int) -> int:
    """Partial-sum value by closed form; equals prefix_sum on every builtin.

    fibonacci: F(n+1) - 1
    lucas:     F(n+2) + F(n) - 1   (equivalently L(n+1) - 1)
    pell:      (P(n) + P(n-1) - 1) / 2
    perrin:    R(n+4) - 2

    The Perrin form is the constant-corrected variant: the identity as
    usually published, R(n+4) - 1, overshoots direct summation by exactly
    one at every n (run audit_closed_form_identity to see this per n).

    Raises UnsupportedSequence for custom recurrence specs.
    """
    if n < 1:
        raise ValueError("term count must be positive")
    name = _builtin_name(seq)
    if name == "fibonacci":
        return term(FIBONACCI, n + 1) - 1
    if name == "lucas":
        return term(FIBONACCI, n + 2) + term(FIBONACCI, n) - 1
    if name == "pell":
        numerator = term(PELL, n) + term(PELL, n - 1) - 1
        half, rem = divmod(numerator, 2)
        if rem:  # unreachable: Pell parities alternate, so the numerator is even
            raise ArithmeticError("Pell closed form produced an odd numerator")
        return half
    return term(PERRIN, n + 4) - 2


@dataclass(frozen=True)
class AuditRow:
    """One audited index: published formula value vs direct summation."""

    n: int
    published_value: int
    direct_sum: int
    matches: bool


@dataclass(frozen=True)
class IdentityAudit:
    """Per-n comparison of a published sum identity with direct summation."""

    sequence: str
    published_form: str
    rows: tuple[AuditRow, ...]

    @property
    def match_count(self) -> int:
        return sum(1 for row in self.rows if row.matches)

    @property
    def mismatch_count(self) -> int:
        return len(self.rows) - self.match_count

    @property
    def all_match(self) -> bool:
        return self.mismatch_count == 0


def audit_closed_form_identity(seq: SequenceId, n_max: int) -> IdentityAudit:
    """Evaluate the published partial-sum identity for 1 <= n <= n_max.

    The published forms for fibonacci, lucas and pell hold everywhere.
    The Perrin identity as usually published, sum = R(n+4) - 1, fails at
    every n; the constant must be 2, which is what closed_form_sum
    ships. The audit keeps the published form verbatim so the mismatch
    stays visible.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    name = _builtin_name(seq)
    # Index reach per formula: F(n+2) for lucas, P(n) for pell, R(n+4) for perrin.
    own = prefix(name, n_max + 5)
    fib = prefix(FIBONACCI, n_max + 3) if name in ("fibonacci", "lucas") else []

    rows = []
    running = 0
    for n in range(1, n_max + 1):
        running += own[n - 1]
        divides = True
        if name == "fibonacci":
            value = fib[n + 1] - 1
        elif name == "lucas":
            value = fib[n + 2] + fib[n] - 1
        elif name == "pell":
            value, rem = divmod(own[n] + own[n - 1] - 1, 2)
            divides = rem == 0
        else:
            value = own[n + 4] - 1
        rows.append(
            AuditRow(
                n=n,
                published_value=value,
                direct_sum=running,
                matches=divides and value == running,
            )
        )
    return IdentityAudit(
        sequence=name,
        published_form=PUBLISHED_SUM_FORMS[name],
        rows=tuple(rows),
    )
