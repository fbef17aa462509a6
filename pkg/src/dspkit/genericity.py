"""Exact eigenvalue assignments and genericity checking.

Values live in the rational span of a formal basis (1, t_1, ..., t_B): exact
vectors over Q with the t_b treated as independent transcendentals.  In the
multiplicative setting a value x stands for the eigenvalue exp(2*pi*i*x), so
"product equals 1" becomes "weighted sum is an integer with no formal part".

An assignment is generic when no proper sub-selection relation holds: for
every kappa strictly between 1 and n and every per-entry choice of
sub-multiplicities summing to kappa, the weighted sum is nonzero (additive)
or non-integral (multiplicative).
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import GenerationFailedError, ObstructionError, ResourceLimitError
from .jnf import JnfTuple

#: Relation search is a product over per-entry sub-multiplicity vectors; keep
#: the input size small enough that this stays instant.
GENERIC_CHECK_MAX_N = 14

_MAX_ATTEMPTS = 8


@dataclass(frozen=True)
class ExactValue:
    """q_0 + sum q_b * t_b with rational coefficients and formal basis t_b."""

    const: Fraction = Fraction(0)
    formal: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "const", Fraction(self.const))
        cleaned = tuple(sorted((int(i), Fraction(cf)) for i, cf in self.formal if cf))
        object.__setattr__(self, "formal", cleaned)

    @classmethod
    def rational(cls, q) -> "ExactValue":
        return cls(Fraction(q), ())

    @classmethod
    def basis(cls, index: int) -> "ExactValue":
        return cls(Fraction(0), ((index, Fraction(1)),))

    def _merge(self, other: "ExactValue", sign: int) -> "ExactValue":
        coeffs = dict(self.formal)
        for i, cf in other.formal:
            coeffs[i] = coeffs.get(i, Fraction(0)) + sign * cf
        return ExactValue(self.const + sign * other.const, tuple(coeffs.items()))

    def __add__(self, other: "ExactValue") -> "ExactValue":
        return self._merge(other, 1)

    def __sub__(self, other: "ExactValue") -> "ExactValue":
        return self._merge(other, -1)

    def __neg__(self) -> "ExactValue":
        return self.scaled(-1)

    def scaled(self, q) -> "ExactValue":
        q = Fraction(q)
        return ExactValue(self.const * q, tuple((i, cf * q) for i, cf in self.formal))

    @property
    def is_zero(self) -> bool:
        return not self.formal and self.const == 0

    @property
    def is_integral(self) -> bool:
        return not self.formal and self.const.denominator == 1

    def to_coeff_dict(self) -> dict[str, str]:
        out = {}
        if self.const:
            out["1"] = str(self.const)
        for i, cf in self.formal:
            out[f"t{i}"] = str(cf)
        return out

    @classmethod
    def from_coeff_dict(cls, data: dict[str, str]) -> "ExactValue":
        const = Fraction(0)
        formal = []
        for key, val in data.items():
            if key == "1":
                const = Fraction(val)
            elif key.startswith("t"):
                formal.append((int(key[1:]), Fraction(val)))
            else:
                raise ValueError(f"bad coefficient key {key!r}")
        return cls(const, tuple(formal))

    def __str__(self) -> str:
        terms = [str(self.const)] if self.const or not self.formal else []
        terms += [f"{cf}*t{i}" for i, cf in self.formal]
        return " + ".join(terms)


@dataclass(frozen=True)
class EigenvalueAssignment:
    """Per entry: (value, multiplicity) pairs matching the tuple's eigenvalue slots."""

    mode: str  # "additive" | "multiplicative"
    entries: tuple[tuple[tuple[ExactValue, int], ...], ...]

    def __post_init__(self) -> None:
        if self.mode not in ("additive", "multiplicative"):
            raise ValueError(f"unknown mode {self.mode!r}")
        entries = tuple(tuple((v, int(m)) for v, m in entry) for entry in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) < 2:
            raise ValueError("need at least two entries")
        sizes = set()
        for entry in entries:
            if any(m < 1 for _, m in entry):
                raise ValueError("multiplicities must be positive")
            vals = [v for v, _ in entry]
            if len(vals) != len(set(vals)):
                raise ValueError("eigenvalues within one entry must be distinct")
            sizes.add(sum(m for _, m in entry))
        if len(sizes) != 1:
            raise ValueError(f"entries disagree on total size: {sorted(sizes)}")

    @property
    def n(self) -> int:
        return sum(m for _, m in self.entries[0])

    def multiplicities(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(m for _, m in entry) for entry in self.entries)


@dataclass(frozen=True)
class NongenericityWitness:
    kappa: int
    sub_multiplicities: tuple[tuple[int, ...], ...]
    total: ExactValue


def weighted_total(a: EigenvalueAssignment) -> ExactValue:
    total = ExactValue()
    for entry in a.entries:
        for value, mult in entry:
            total = total + value.scaled(mult)
    return total


def trace_condition(a: EigenvalueAssignment) -> bool:
    """Sum of all values with multiplicity is 0 (additive) or integral
    (multiplicative, i.e. the product of the exp(2*pi*i*x) is 1)."""
    total = weighted_total(a)
    return total.is_zero if a.mode == "additive" else total.is_integral


def _weighted_subvectors(
    entry: Sequence[tuple[ExactValue, int]], kappa: int
) -> list[tuple[tuple[int, ...], ExactValue]]:
    """Sub-multiplicity vectors of one entry with sum kappa, lexicographically
    ascending, each with its weighted partial sum."""
    mults = [m for _, m in entry]
    values = [v for v, _ in entry]
    suffix = [0] * (len(mults) + 1)
    for i in range(len(mults) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + mults[i]
    out: list[tuple[tuple[int, ...], ExactValue]] = []

    def rec(i: int, remaining: int, vec: list[int], acc: ExactValue) -> None:
        if remaining > suffix[i]:
            return
        if i == len(mults):
            out.append((tuple(vec), acc))
            return
        for c in range(0, min(mults[i], remaining) + 1):
            vec.append(c)
            rec(i + 1, remaining - c, vec, acc + values[i].scaled(c) if c else acc)
            vec.pop()

    rec(0, kappa, [], ExactValue())
    return out


def _relation_key(v: ExactValue, multiplicative: bool):
    if multiplicative:
        return (v.formal, v.const % 1)
    return (v.formal, v.const)


def _negated_key(v: ExactValue, multiplicative: bool):
    neg = -v
    return _relation_key(neg, multiplicative)


def nongenericity_witness(a: EigenvalueAssignment) -> NongenericityWitness | None:
    """Smallest (kappa, lexicographic sub-multiplicity choice) violating relation,
    or None when the assignment is generic.

    The search space per kappa is the product over entries of that entry's
    sub-multiplicity vectors with sum kappa; it is scanned meet-in-the-middle.
    """
    n = a.n
    if n > GENERIC_CHECK_MAX_N:
        raise ResourceLimitError(f"genericity check limited to n <= {GENERIC_CHECK_MAX_N}")
    mult_mode = a.mode == "multiplicative"
    half = (len(a.entries) + 1) // 2
    for kappa in range(2, n):
        per = [_weighted_subvectors(entry, kappa) for entry in a.entries]
        left, right = per[:half], per[half:]
        table: dict = {}
        if right:
            for combo in itertools.product(*right):
                total = ExactValue()
                for _, partial in combo:
                    total = total + partial
                key = _relation_key(total, mult_mode)
                if key not in table:
                    table[key] = combo
        for combo in itertools.product(*left):
            total = ExactValue()
            for _, partial in combo:
                total = total + partial
            if right:
                hit = table.get(_negated_key(total, mult_mode))
                if hit is None:
                    continue
                vecs = tuple(v for v, _ in combo) + tuple(v for v, _ in hit)
                for _, partial in hit:
                    total = total + partial
            else:
                ok = total.is_integral if mult_mode else total.is_zero
                if not ok:
                    continue
                vecs = tuple(v for v, _ in combo)
            return NongenericityWitness(kappa, vecs, total)
    return None


def is_generic(a: EigenvalueAssignment) -> bool:
    return nongenericity_witness(a) is None


def gcd_obstruction(t: JnfTuple) -> int | None:
    """gcd of all eigenvalue multiplicities when it is >= 2, else None.

    A gcd g >= 2 forces the kappa = n/g sub-selection relation in the additive
    setting, so no additive generic assignment exists.
    """
    g = 0
    for e in t.entries:
        for m in e.eigenvalue_multiplicities():
            g = math.gcd(g, m)
    return g if g >= 2 else None


def candidate_assignment(
    t: JnfTuple,
    mode: str = "additive",
    *,
    offsets: Sequence[Fraction] | None = None,
    product_exponent: int = 1,
) -> EigenvalueAssignment:
    """The canonical trace-balanced assignment for ``t``, without validation.

    Every eigenvalue slot except the last slot of the last entry gets a fresh
    formal basis element (plus an optional rational offset); the last slot is
    solved from the trace condition.  In multiplicative mode the weighted sum
    is set to ``product_exponent`` (an integer, so the product is 1); when the
    multiplicities share a gcd g, the product over g-fold smaller
    multiplicities is then a primitive g-th root of unity iff
    gcd(product_exponent, g) == 1.
    """
    mult_lists = [e.eigenvalue_multiplicities() for e in t.entries]
    free = sum(len(m) for m in mult_lists) - 1
    offs = list(offsets) if offsets is not None else [Fraction(0)] * free
    if len(offs) != free:
        raise ValueError(f"need {free} offsets, got {len(offs)}")
    target = ExactValue.rational(0 if mode == "additive" else product_exponent)
    entries: list[list[tuple[ExactValue, int]]] = []
    basis = 0
    acc = ExactValue()
    for mults in mult_lists:
        entries.append([])
        for m in mults:
            if basis < free:
                value = ExactValue.basis(basis + 1) + ExactValue.rational(offs[basis])
                basis += 1
                acc = acc + value.scaled(m)
                entries[-1].append((value, m))
            else:
                value = (target - acc).scaled(Fraction(1, m))
                entries[-1].append((value, m))
    return EigenvalueAssignment(mode, tuple(tuple(e) for e in entries))


def generate_generic(
    t: JnfTuple,
    mode: str = "additive",
    seed: int = 0,
    *,
    product_exponent: int = 1,
) -> EigenvalueAssignment:
    """A certified-generic assignment for ``t``, deterministic in ``seed``.

    Raises ``ObstructionError`` in additive mode when the multiplicity gcd is
    >= 2, and ``GenerationFailedError`` (carrying the last witness) if every
    seeded retry is rejected.
    """
    if mode == "additive":
        g = gcd_obstruction(t)
        if g is not None:
            raise ObstructionError(
                f"multiplicity gcd {g} rules out additive generic eigenvalues")
    rng = random.Random(seed)
    free = sum(len(e.eigenvalue_multiplicities()) for e in t.entries) - 1
    last_witness = None
    for attempt in range(_MAX_ATTEMPTS):
        if attempt == 0:
            offsets = [Fraction(0)] * free
        else:
            offsets = [Fraction(rng.randrange(-4096, 4097), 4096) for _ in range(free)]
        try:
            a = candidate_assignment(t, mode, offsets=offsets,
                                     product_exponent=product_exponent)
        except ValueError:
            continue
        witness = nongenericity_witness(a)
        if witness is None:
            assert trace_condition(a)
            return a
        last_witness = witness
    raise GenerationFailedError("no generic assignment found within the retry budget",
                                witness=last_witness)


def assignment_to_dict(a: EigenvalueAssignment) -> dict:
    return {
        "mode": a.mode,
        "entries": [
            [{"coeffs": v.to_coeff_dict(), "mult": m} for v, m in entry]
            for entry in a.entries
        ],
    }


def assignment_from_dict(data: dict) -> EigenvalueAssignment:
    entries = tuple(
        tuple((ExactValue.from_coeff_dict(item["coeffs"]), int(item["mult"]))
              for item in entry)
        for entry in data["entries"]
    )
    return EigenvalueAssignment(data["mode"], entries)


def witness_to_dict(w: NongenericityWitness) -> dict:
    return {
        "kappa": w.kappa,
        "sub_multiplicities": [list(v) for v in w.sub_multiplicities],
        "total": w.total.to_coeff_dict(),
    }
