"""Rigidity arithmetic, multiplicity-vector moves, the named-series catalog,
and the constrained exhaustive enumerator of rigid diagonal tuples.

A tuple is rigid when its defect 2n^2 - sum(d_j) equals 2.  The catalog stores
one generator per named family, each family's reduction chain, and enough
inverse bookkeeping to recognize catalog members inside traces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .errors import (
    ChainMismatchError,
    ResourceLimitError,
    SeriesParameterError,
    UndefinedMoveError,
)
from .jnf import JnfTuple, format_pmv
from .partitions import Partition, normalize, partitions_of
from .reduction import decide, solvable_pmv

#: Default guard for the exhaustive enumerator (overridable, e.g. via DSPKIT_MAX_N).
DEFAULT_MAX_ENUM_N = 40
MAX_ENUM_ENTRIES = 6


# ---------------------------------------------------------------------------
# defect and multiplicity-vector moves


def defect(t: JnfTuple) -> int:
    """2n^2 - sum of class dimensions; invariant under the reduction step."""
    n = t.n
    return 2 * n * n - sum(e.d for e in t.entries)


def is_rigid(t: JnfTuple) -> bool:
    return defect(t) == 2


def passage(mv: Partition) -> Partition:
    """Rebalance one multiplicity vector: first strictly-smaller component up by 1,
    last component down by 1.  Preserves n and r, strictly decreases d."""
    parts = mv.parts
    mu = 1
    while mu < len(parts) and parts[mu] == parts[0]:
        mu += 1
    if mu >= len(parts) - 1:
        raise UndefinedMoveError(f"no passage defined for {mv}")
    out = list(parts)
    out[mu] += 1
    out[-1] -= 1
    return normalize(out)


def antipassage_targets(mv: Partition) -> frozenset[Partition]:
    """All vectors from which a single passage produces ``mv``."""
    counts = list(mv.parts)
    results = set()
    values = sorted(set(counts))

    def without(seq: list[int], value: int) -> list[int]:
        out = list(seq)
        out.remove(value)
        return out

    for w in values:
        if w < 2:
            continue
        base = without(counts, w)
        # the decremented component may have vanished entirely (it was a 1) ...
        cand = normalize(base + [w - 1, 1])
        try:
            if passage(cand) == mv:
                results.add(cand)
        except UndefinedMoveError:
            pass
        # ... or it is still present as some component z
        for z in sorted(set(base)):
            cand = normalize(without(base, z) + [w - 1, z + 1])
            try:
                if passage(cand) == mv:
                    results.add(cand)
            except UndefinedMoveError:
                pass
    return frozenset(results)


def min_d_mv(n: int, r: int) -> Partition:
    """The unique multiplicity vector of size ``n`` minimizing d at fixed rank ``r``."""
    if n < 1 or r < 0 or r > n - 1:
        raise ValueError(f"rank {r} out of range for size {n}")
    if 2 * r <= n:
        return normalize([n - r, r])
    m = n - r
    q = n % m or m
    return Partition((m,) * ((n - q) // m) + (q,))


def case_omega(n: int) -> JnfTuple:
    """The exceptional quadruple with defect 4 at even sizes."""
    if n < 4 or n % 2:
        raise ValueError("defined for even n >= 4")
    h = n // 2
    return JnfTuple.from_pmv([(2,) * h, (h, h), (h + 1, h - 1), (n - 1, 1)])


# ---------------------------------------------------------------------------
# named series


@dataclass(frozen=True)
class SeriesId:
    name: str
    param: int

    def __str__(self) -> str:
        if self.name == "Psi6":
            return "Psi6"
        return f"{self.name}_{self.param}"


def parse_series_id(text: str) -> SeriesId:
    text = text.strip()
    if text == "Psi6":
        return SeriesId("Psi6", 6)
    name, _, param = text.rpartition("_")
    if not name or not param.lstrip("-").isdigit():
        raise ValueError(f"expected NAME_PARAM, got {text!r}")
    if name not in FAMILIES:
        raise ValueError(f"unknown series {name!r}")
    return SeriesId(name, int(param))


@dataclass(frozen=True)
class _Family:
    n_of: Callable[[int], int]
    from_n: Callable[[int], int | None]
    ok: Callable[[int], bool]
    build: Callable[[int], list[list[int]]]


def _tw(twos: int, ones: int) -> list[int]:
    return [2] * twos + [1] * ones


def _div(n: int, shift: int, q: int) -> int | None:
    return (n - shift) // q if (n - shift) % q == 0 else None


FAMILIES: dict[str, _Family] = {
    # triples indexed by k
    "W": _Family(lambda k: 3 * k + 1, lambda n: _div(n, 1, 3), lambda k: k >= 0,
                 lambda k: [[k, k, k + 1]] * 3),
    "B": _Family(lambda k: 3 * k - 1, lambda n: _div(n, -1, 3), lambda k: k >= 1,
                 lambda k: [[k, k, k - 1]] * 3),
    "C": _Family(lambda k: 3 * k, lambda n: _div(n, 0, 3), lambda k: k >= 1,
                 lambda k: [[k, k, k], [k, k, k], [k, k + 1, k - 1]]),
    "D": _Family(lambda k: 4 * k + 1, lambda n: _div(n, 1, 4), lambda k: k >= 0,
                 lambda k: [[k, k, k, k + 1], [k, k, k, k + 1], [2 * k, 2 * k + 1]]),
    "E": _Family(lambda k: 4 * k - 1, lambda n: _div(n, -1, 4), lambda k: k >= 1,
                 lambda k: [[k, k, k, k - 1], [k, k, k, k - 1], [2 * k, 2 * k - 1]]),
    "F": _Family(lambda k: 4 * k, lambda n: _div(n, 0, 4), lambda k: k >= 1,
                 lambda k: [[k] * 4, [k] * 4, [2 * k + 1, 2 * k - 1]]),
    "Phi": _Family(lambda k: 4 * k, lambda n: _div(n, 0, 4), lambda k: k >= 1,
                   lambda k: [[k, k, k + 1, k - 1], [k] * 4, [2 * k, 2 * k]]),
    "G": _Family(lambda k: 4 * k + 2, lambda n: _div(n, 2, 4), lambda k: k >= 0,
                 lambda k: [[k, k, k + 1, k + 1], [k, k, k + 1, k + 1], [2 * k + 1, 2 * k + 1]]),
    "H": _Family(lambda k: 6 * k + 1, lambda n: _div(n, 1, 6), lambda k: k >= 0,
                 lambda k: [[k] * 5 + [k + 1], [3 * k, 3 * k + 1], [2 * k, 2 * k, 2 * k + 1]]),
    "I": _Family(lambda k: 6 * k - 1, lambda n: _div(n, -1, 6), lambda k: k >= 1,
                 lambda k: [[k] * 5 + [k - 1], [3 * k, 3 * k - 1], [2 * k, 2 * k, 2 * k - 1]]),
    "J": _Family(lambda k: 6 * k, lambda n: _div(n, 0, 6), lambda k: k >= 1,
                 lambda k: [[k] * 6, [3 * k + 1, 3 * k - 1], [2 * k] * 3]),
    "K": _Family(lambda k: 6 * k, lambda n: _div(n, 0, 6), lambda k: k >= 1,
                 lambda k: [[k] * 6, [3 * k, 3 * k], [2 * k, 2 * k + 1, 2 * k - 1]]),
    "L": _Family(lambda k: 6 * k, lambda n: _div(n, 0, 6), lambda k: k >= 1,
                 lambda k: [[k] * 4 + [k + 1, k - 1], [3 * k, 3 * k], [2 * k] * 3]),
    "V": _Family(lambda k: 6 * k + 2, lambda n: _div(n, 2, 6), lambda k: k >= 0,
                 lambda k: [[k] * 4 + [k + 1, k + 1], [3 * k + 1, 3 * k + 1],
                            [2 * k, 2 * k + 1, 2 * k + 1]]),
    "N": _Family(lambda k: 6 * k + 3, lambda n: _div(n, 3, 6), lambda k: k >= 0,
                 lambda k: [[k] * 3 + [k + 1] * 3, [3 * k + 1, 3 * k + 2], [2 * k + 1] * 3]),
    "P": _Family(lambda k: 6 * k - 2, lambda n: _div(n, -2, 6), lambda k: k >= 1,
                 lambda k: [[k] * 4 + [k - 1] * 2, [3 * k - 1, 3 * k - 1],
                            [2 * k, 2 * k - 1, 2 * k - 1]]),
    # quadruples / quintuple indexed by k; R_1's fourth vector degenerates to a
    # scalar, so R starts at 2
    "R": _Family(lambda k: 2 * k, lambda n: _div(n, 0, 2), lambda k: k >= 2,
                 lambda k: [[k, k]] * 3 + [[k + 1, k - 1]]),
    "S": _Family(lambda k: 2 * k + 1, lambda n: _div(n, 1, 2), lambda k: k >= 0,
                 lambda k: [[k + 1, k]] * 4),
    "T": _Family(lambda k: 4 * k, lambda n: _div(n, 0, 4), lambda k: k >= 1,
                 lambda k: [[2 * k + 1, 2 * k - 1]] + [[3 * k, k]] * 4),
    # classical triples indexed by n
    "HG": _Family(lambda n: n, lambda n: n, lambda n: n >= 1,
                  lambda n: [[n - 1, 1], [1] * n, [1] * n]),
    "OF": _Family(lambda n: n, lambda n: n, lambda n: n >= 3 and n % 2 == 1,
                  lambda n: [[(n + 1) // 2, (n - 1) // 2],
                             [(n - 1) // 2, (n - 1) // 2, 1], [1] * n]),
    "EF": _Family(lambda n: n, lambda n: n, lambda n: n >= 2 and n % 2 == 0,
                  lambda n: [[n // 2, n // 2], [n // 2, (n - 2) // 2, 1], [1] * n]),
    "FF": _Family(lambda n: n, lambda n: n, lambda n: 5 <= n <= 8,
                  lambda n: [[2] + [1] * (n - 2), _tw(n - 4, 8 - n), [n - 2, 2]]),
    "OG": _Family(lambda k: 2 * k + 1, lambda n: _div(n, 1, 2), lambda k: k >= 1,
                  lambda k: [_tw(k - 1, 3), _tw(k, 1), [2 * k - 1, 1, 1]]),
    # the (n+1)-entry hook series
    "Star": _Family(lambda n: n, lambda n: n, lambda n: n >= 2,
                    lambda n: [[n - 1, 1]] * (n + 1)),
    # quadruple classification families (even/odd n)
    "Xi": _Family(lambda n: n, lambda n: n, lambda n: n >= 4 and n % 2 == 0,
                  lambda n: [[2] * (n // 2), [n // 2] * 2, [n // 2] * 2, [n - 1, 1]]),
    "Theta": _Family(lambda n: n, lambda n: n, lambda n: n >= 4 and n % 2 == 0,
                     lambda n: [_tw((n - 2) // 2, 2), [n // 2] * 2,
                                [n // 2 + 1, n // 2 - 1], [n - 1, 1]]),
    "Psi6": _Family(lambda n: n, lambda n: n, lambda n: n == 6,
                    lambda n: [[2, 2, 2], [3, 3], [4, 1, 1], [5, 1]]),
    "Pi": _Family(lambda n: n, lambda n: n, lambda n: n >= 3 and n % 2 == 1,
                  lambda n: [_tw((n - 1) // 2, 1), [(n + 1) // 2, (n - 1) // 2],
                             [(n + 1) // 2, (n - 1) // 2], [n - 1, 1]]),
    "Delta": _Family(lambda n: n, lambda n: n, lambda n: n >= 3 and n % 2 == 1,
                     lambda n: [_tw((n - 1) // 2, 1)] * 2 + [[n - 1, 1]] * 2),
    # triple classification families, n even
    "Gamma1": _Family(lambda n: n, lambda n: n, lambda n: n >= 6 and n % 2 == 0,
                      lambda n: [[2] * (n // 2), _tw((n - 6) // 2, 6), [n - 2, 2]]),
    "Gamma2": _Family(lambda n: n, lambda n: n, lambda n: n >= 4 and n % 2 == 0,
                      lambda n: [_tw((n - 2) // 2, 2), _tw((n - 4) // 2, 4), [n - 2, 2]]),
    "Gamma3": _Family(lambda n: n, lambda n: n, lambda n: n >= 4 and n % 2 == 0,
                      lambda n: [_tw((n - 2) // 2, 2)] * 2 + [[n - 2, 1, 1]]),
    "Gamma4": _Family(lambda n: n, lambda n: n, lambda n: n >= 4 and n % 2 == 0,
                      lambda n: [[2] * (n // 2), _tw((n - 4) // 2, 4), [n - 2, 1, 1]]),
    "Y1": _Family(lambda n: n, lambda n: n, lambda n: n >= 4 and n % 2 == 0,
                  lambda n: [_tw((n - 4) // 2, 4), [(n - 2) // 2, (n - 2) // 2, 2],
                             [n // 2, n // 2]]),
    "Y2": _Family(lambda n: n, lambda n: n, lambda n: n >= 4 and n % 2 == 0,
                  lambda n: [_tw((n - 2) // 2, 2), [(n - 2) // 2, (n - 2) // 2, 1, 1],
                             [n // 2, n // 2]]),
    "Y3": _Family(lambda n: n, lambda n: n, lambda n: n >= 4 and n % 2 == 0,
                  lambda n: [_tw((n - 4) // 2, 4), [n // 2, (n - 4) // 2, 1, 1],
                             [n // 2, n // 2]]),
    "Y4": _Family(lambda n: n, lambda n: n, lambda n: n >= 6 and n % 2 == 0,
                  lambda n: [_tw((n - 6) // 2, 6), [n // 2, (n - 4) // 2, 2],
                             [n // 2, n // 2]]),
    "Y5": _Family(lambda n: n, lambda n: n, lambda n: n >= 2 and n % 2 == 0,
                  lambda n: [_tw((n - 2) // 2, 2), [n // 2, (n - 2) // 2, 1],
                             [n // 2, (n - 2) // 2, 1]]),
    "Y6": _Family(lambda n: n, lambda n: n, lambda n: n >= 4 and n % 2 == 0,
                  lambda n: [_tw((n - 4) // 2, 4), [(n - 2) // 2, (n - 2) // 2, 1, 1],
                             [(n + 2) // 2, (n - 2) // 2]]),
    "Y7": _Family(lambda n: n, lambda n: n, lambda n: n >= 6 and n % 2 == 0,
                  lambda n: [_tw((n - 6) // 2, 6), [(n - 2) // 2, (n - 2) // 2, 2],
                             [(n + 2) // 2, (n - 2) // 2]]),
    # triple classification families, n odd
    "X1": _Family(lambda n: n, lambda n: n, lambda n: n >= 5 and n % 2 == 1,
                  lambda n: [_tw((n - 5) // 2, 5), _tw((n - 1) // 2, 1), [n - 2, 2]]),
    "X2": _Family(lambda n: n, lambda n: n, lambda n: n >= 3 and n % 2 == 1,
                  lambda n: [_tw((n - 3) // 2, 3)] * 2 + [[n - 2, 2]]),
    "Z1": _Family(lambda n: n, lambda n: n, lambda n: n >= 3 and n % 2 == 1,
                  lambda n: [_tw((n - 1) // 2, 1), [(n - 1) // 2, (n - 1) // 2, 1],
                             [(n - 1) // 2, (n - 1) // 2, 1]]),
    "Z2": _Family(lambda n: n, lambda n: n, lambda n: n >= 5 and n % 2 == 1,
                  lambda n: [_tw((n - 5) // 2, 5), [(n - 1) // 2, (n - 3) // 2, 2],
                             [(n + 1) // 2, (n - 1) // 2]]),
    "Z3": _Family(lambda n: n, lambda n: n, lambda n: n >= 3 and n % 2 == 1,
                  lambda n: [_tw((n - 3) // 2, 3), [(n - 1) // 2, (n - 3) // 2, 1, 1],
                             [(n + 1) // 2, (n - 1) // 2]]),
    "Z4": _Family(lambda n: n, lambda n: n, lambda n: n >= 3 and n % 2 == 1,
                  lambda n: [_tw((n - 3) // 2, 3), [(n - 1) // 2, (n - 1) // 2, 1],
                             [(n + 1) // 2, (n - 3) // 2, 1]]),
}


def series_mvs(sid: SeriesId) -> tuple[Partition, ...]:
    """Canonical multiplicity vectors of the family instance."""
    fam = FAMILIES.get(sid.name)
    if fam is None:
        raise SeriesParameterError(f"unknown series {sid.name!r}")
    if not fam.ok(sid.param):
        raise SeriesParameterError(f"parameter {sid.param} out of range for {sid.name}")
    mvs = sorted((normalize(raw) for raw in fam.build(sid.param)), reverse=True)
    inst_n = {mv.size for mv in mvs}
    assert len(inst_n) == 1 and inst_n.pop() == fam.n_of(sid.param)
    return tuple(mvs)


def series(sid: SeriesId | str) -> JnfTuple:
    """Build the family instance as a canonicalized diagonal tuple."""
    if isinstance(sid, str):
        sid = parse_series_id(sid)
    return JnfTuple.from_pmv(series_mvs(sid))


def all_series_ids(max_n: int) -> Iterator[SeriesId]:
    """Every catalog instance of size up to ``max_n``, family by family."""
    for name, fam in FAMILIES.items():
        param = 0 if fam.ok(0) else 1
        while not fam.ok(param) and fam.n_of(param) <= max_n:
            param += 1
        while fam.ok(param) and fam.n_of(param) <= max_n:
            yield SeriesId(name, param)
            param += 1
            while not fam.ok(param) and fam.n_of(param) <= max_n:
                param += 1


def canonical_form(t: JnfTuple) -> JnfTuple:
    """Entry order normalized (descending); tuples equal up to permutation agree."""
    return JnfTuple(tuple(sorted(t.entries, reverse=True)))


def identify(t: JnfTuple) -> list[str]:
    """Names of every catalog instance equal to ``t`` up to entry permutation."""
    n = t.n
    count = len(t.entries)
    key = canonical_form(t)
    names = []
    for name, fam in FAMILIES.items():
        param = fam.from_n(n)
        if param is None or not fam.ok(param):
            continue
        sid = SeriesId(name, param)
        mvs = series_mvs(sid)
        if len(mvs) != count:
            continue
        if canonical_form(JnfTuple.from_pmv(mvs)) == key:
            names.append(str(sid))
    return sorted(names)


# ---------------------------------------------------------------------------
# reduction chains

_Succ = Callable[[int], "SeriesId | int | None"]

# Successor of each family instance in its reduction chain.  An ``int`` value
# means the chain ends in that many size-1 entries with no catalog name.
_SUCCESSORS: dict[str, _Succ] = {
    "W": lambda k: None if k == 0 else SeriesId("B", k),
    "B": lambda k: SeriesId("W", k - 1),
    "C": lambda k: SeriesId("B", k),
    "D": lambda k: None if k == 0 else SeriesId("E", k),
    "E": lambda k: SeriesId("G", k - 1),
    "F": lambda k: SeriesId("E", k),
    "Phi": lambda k: SeriesId("E", k),
    "G": lambda k: SeriesId("D", k),
    "H": lambda k: None if k == 0 else SeriesId("I", k),
    "I": lambda k: SeriesId("P", k),
    "J": lambda k: SeriesId("I", k),
    "K": lambda k: SeriesId("I", k),
    "L": lambda k: SeriesId("I", k),
    "P": lambda k: SeriesId("N", k - 1),
    "N": lambda k: SeriesId("V", k),
    "V": lambda k: SeriesId("H", k),
    "R": lambda k: SeriesId("S", k - 1),
    "S": lambda k: None if k == 0 else SeriesId("S", k - 1),
    "T": lambda k: 5 if k == 1 else SeriesId("S", k - 1),
    "HG": lambda n: None if n == 1 else SeriesId("HG", n - 1),
    "OF": lambda n: SeriesId("HG", 2) if n == 3 else SeriesId("EF", n - 1),
    "EF": lambda n: SeriesId("HG", 1) if n == 2 else SeriesId("OF", n - 1),
    "FF": lambda n: {5: SeriesId("HG", 3), 6: SeriesId("Y1", 4),
                     7: SeriesId("Z2", 5), 8: SeriesId("Gamma1", 6)}[n],
    "OG": lambda k: SeriesId("HG", 2) if k == 1 else SeriesId("OG", k - 1),
    "Star": lambda n: n + 1,
    "Xi": lambda n: SeriesId("Pi", n - 1),
    "Theta": lambda n: SeriesId("HG", 2) if n == 4 else SeriesId("Theta", n - 2),
    "Psi6": lambda n: SeriesId("Theta", 4),
    "Pi": lambda n: SeriesId("S", 0) if n == 3 else SeriesId("Pi", n - 2),
    "Delta": lambda n: SeriesId("S", 0) if n == 3 else SeriesId("Delta", n - 2),
    "Gamma1": lambda n: SeriesId("X1", 5) if n == 6 else SeriesId("Gamma1", n - 2),
    "Gamma2": lambda n: SeriesId("HG", 3) if n == 4 else SeriesId("Gamma2", n - 2),
    "Gamma3": lambda n: SeriesId("HG", 2) if n == 4 else SeriesId("Gamma3", n - 2),
    "Gamma4": lambda n: SeriesId("HG", 3) if n == 4 else SeriesId("Gamma4", n - 2),
    "X1": lambda n: SeriesId("Gamma2", 4) if n == 5 else SeriesId("X1", n - 2),
    "X2": lambda n: SeriesId("HG", 2) if n == 3 else SeriesId("X2", n - 2),
    "Y1": lambda n: SeriesId("HG", 3) if n == 4 else SeriesId("Z2", n - 1),
    "Y2": lambda n: SeriesId("Z3", n - 1),
    "Y3": lambda n: SeriesId("HG", 3) if n == 4 else SeriesId("Y6", n - 2),
    "Y4": lambda n: SeriesId("Z2", 5) if n == 6 else SeriesId("Y7", n - 2),
    "Y5": lambda n: SeriesId("HG", 1) if n == 2 else SeriesId("Y5", n - 2),
    "Y6": lambda n: SeriesId("HG", 3) if n == 4 else SeriesId("Y3", n - 2),
    "Y7": lambda n: SeriesId("X1", 5) if n == 6 else SeriesId("Y4", n - 2),
    "Z1": lambda n: SeriesId("Y5", n - 1),
    "Z2": lambda n: SeriesId("Gamma4", 4) if n == 5 else SeriesId("Z2", n - 2),
    "Z3": lambda n: SeriesId("HG", 2) if n == 3 else SeriesId("Z3", n - 2),
    "Z4": lambda n: SeriesId("HG", 2) if n == 3 else SeriesId("Z4", n - 2),
}


@dataclass(frozen=True)
class ChainStep:
    label: str
    state: JnfTuple


def expected_chain(sid: SeriesId | str) -> list[ChainStep]:
    """The family's symbolic reduction chain, fully instantiated."""
    if isinstance(sid, str):
        sid = parse_series_id(sid)
    chain: list[ChainStep] = []
    cur: SeriesId | None = sid
    while cur is not None:
        inst = series(cur)
        chain.append(ChainStep(str(cur), inst))
        if inst.n == 1:
            break
        nxt = _SUCCESSORS[cur.name](cur.param)
        if nxt is None:
            break
        if isinstance(nxt, int):
            ones = JnfTuple.from_pmv([(1,)] * nxt)
            chain.append(ChainStep(format_pmv(ones), ones))
            break
        cur = nxt
    return chain


def verify_chain(sid: SeriesId | str) -> list[str]:
    """Run the decision on the instance and match its trace against the chain.

    Returns the symbolic labels; raises ``ChainMismatchError`` on the first
    step whose state differs from the expected instance.
    """
    if isinstance(sid, str):
        sid = parse_series_id(sid)
    expected = expected_chain(sid)
    trace = decide(series(sid))
    if len(trace.steps) != len(expected):
        raise ChainMismatchError(
            f"{sid}: trace has {len(trace.steps)} steps, chain expects {len(expected)}")
    for i, (step, exp) in enumerate(zip(trace.steps, expected)):
        if canonical_form(step.state) != canonical_form(exp.state):
            raise ChainMismatchError(
                f"{sid}: step {i} is {step.state}, expected {exp.label} = {exp.state}")
    if not trace.verdict.solvable:
        raise ChainMismatchError(f"{sid}: chain ran but verdict is not solvable")
    return [c.label for c in expected]


# ---------------------------------------------------------------------------
# exhaustive enumeration


@dataclass(frozen=True)
class EnumConstraints:
    n: int
    num_entries: int
    max_first_part: int | None = None
    forbid_all_ones: bool = False
    forbid_scalar: bool = False
    require_defect: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1 or self.num_entries < 2:
            raise ValueError("need n >= 1 and at least two entries")


def _entry_allowed(mv: tuple[int, ...], c: EnumConstraints) -> bool:
    if c.forbid_scalar and len(mv) == 1:
        return False
    if c.forbid_all_ones and mv[0] == 1:
        return False
    return True


def _sum_squares(mv: tuple[int, ...]) -> int:
    return sum(x * x for x in mv)


def _enum_shard(args: tuple[tuple[int, ...], EnumConstraints]) -> set[tuple[tuple[int, ...], ...]]:
    first, c = args
    n = c.n
    pool = [mv for mv in partitions_of(n) if _entry_allowed(mv, c)]
    rem = c.num_entries - 1
    found: set[tuple[tuple[int, ...], ...]] = set()
    if c.require_defect is None:
        for combo in itertools.combinations_with_replacement(pool, rem):
            tup = (first, *combo)
            if solvable_pmv(tup):
                found.add(tuple(sorted(tup, reverse=True)))
        return found
    # sum over entries of sum-of-squares is pinned by the defect; bucket the
    # last entry by that value and only scan matching candidates
    target = c.require_defect + (c.num_entries - 2) * n * n
    buckets: dict[int, list[tuple[int, ...]]] = {}
    for mv in pool:
        buckets.setdefault(_sum_squares(mv), []).append(mv)
    base = _sum_squares(first)
    for combo in itertools.combinations_with_replacement(pool, rem - 1):
        s = base + sum(_sum_squares(mv) for mv in combo)
        for last in buckets.get(target - s, ()):
            tup = (first, *combo, last)
            if solvable_pmv(tup):
                found.add(tuple(sorted(tup, reverse=True)))
    return found


def enumerate_rigid(
    c: EnumConstraints,
    *,
    jobs: int = 1,
    max_n: int | None = None,
) -> list[JnfTuple]:
    """All diagonal tuples meeting the constraints whose decision is solvable,
    deduplicated up to entry permutation, in a deterministic order.

    With ``require_defect`` set, candidates are pre-filtered by the exact
    sum-of-squares budget that the defect imposes, which keeps full
    classification sweeps fast.  ``jobs > 1`` shards the first-entry
    candidates across processes; results are merged and sorted, so the output
    does not depend on the worker count.
    """
    limit = DEFAULT_MAX_ENUM_N if max_n is None else max_n
    if c.n > limit:
        raise ResourceLimitError(f"n={c.n} exceeds the enumeration guard {limit}")
    if c.num_entries > MAX_ENUM_ENTRIES:
        raise ResourceLimitError(f"at most {MAX_ENUM_ENTRIES} entries supported")
    cap = c.n if c.max_first_part is None else c.max_first_part
    firsts = [mv for mv in partitions_of(c.n, cap) if _entry_allowed(mv, c)]
    found: set[tuple[tuple[int, ...], ...]] = set()
    if jobs > 1 and len(firsts) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for part in ex.map(_enum_shard, [(f, c) for f in firsts]):
                found |= part
    else:
        for f in firsts:
            found |= _enum_shard((f, c))
    return [JnfTuple.from_pmv(mvs) for mvs in sorted(found)]


def catalog_lines(tuples: Iterable[JnfTuple]) -> list[dict]:
    """JSON-ready dump records: one per tuple, with defect and catalog names."""
    out = []
    for t in tuples:
        out.append({
            "n": t.n,
            "entries": [list(e.multiplicity_vector().parts) for e in t.entries],
            "defect": defect(t),
            "series_names": identify(t),
        })
    return out
