"""Shared generators for the test suite: seeded random shapes and exhaustive pools."""

from __future__ import annotations

import itertools
import random
from collections import Counter
from fractions import Fraction

from dspkit import EigenvalueAssignment, ExactValue, Jnf, JnfTuple, partitions_of


def random_partition(rng: random.Random, n: int) -> tuple[int, ...]:
    parts = []
    rem = n
    while rem:
        p = rng.randint(1, rem)
        parts.append(p)
        rem -= p
    parts.sort(reverse=True)
    return tuple(parts)


def random_jnf(rng: random.Random, n: int) -> Jnf:
    sizes = random_partition(rng, n)
    return Jnf.from_blocks([random_partition(rng, s) for s in sizes])


def random_jnf_tuple(rng: random.Random, n: int, entries: int) -> JnfTuple:
    return JnfTuple(tuple(random_jnf(rng, n) for _ in range(entries)))


def random_pmv(rng: random.Random, n: int, entries: int) -> tuple[tuple[int, ...], ...]:
    return tuple(random_partition(rng, n) for _ in range(entries))


def rational_assignment(rng: random.Random, mults, mode="additive", target=Fraction(0)):
    """Random distinct rationals per slot; the last slot balances the weighted sum."""
    flat = [(i, m) for i, entry in enumerate(mults) for m in entry]
    while True:
        values = [Fraction(rng.randrange(-400, 400), rng.randrange(1, 24)) for _ in flat]
        acc = sum(v * m for v, (_, m) in zip(values[:-1], flat[:-1]))
        values[-1] = (target - acc) / flat[-1][1]
        pos = 0
        entries = []
        ok = True
        for entry in mults:
            vals = values[pos:pos + len(entry)]
            pos += len(entry)
            if len(set(vals)) != len(vals):
                ok = False
                break
            entries.append(tuple((ExactValue.rational(v), m) for v, m in zip(vals, entry)))
        if ok:
            return EigenvalueAssignment(mode, tuple(entries))


def all_jnfs(n: int) -> list[Jnf]:
    """Every shape of size n: a multiset of nonempty slot partitions."""
    out = []
    for sizes in partitions_of(n):
        groups = Counter(sizes)
        per_group = [
            list(itertools.combinations_with_replacement(list(partitions_of(s)), cnt))
            for s, cnt in sorted(groups.items())
        ]
        for pick in itertools.product(*per_group):
            slots = [blocks for group in pick for blocks in group]
            out.append(Jnf.from_blocks(slots))
    return sorted(set(out), reverse=True)
