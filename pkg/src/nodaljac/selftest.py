"""Brute-force checks of the nodal group law, runnable without pytest.

Used by ``nodaljac selftest``. Every check returns ``(name, ok, detail)``.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .cantor import cantor_add
from .nodal import NodalCurve

CheckResult = tuple[str, bool, str]

DEFAULT_PRIME = 4294967311


def cayley_table(curve: NodalCurve):
    """Enumerate the group and tabulate ``add``; raises if the sum of two
    elements is not itself an enumerated element."""
    elems = list(curve.elements())
    index = {e: i for i, e in enumerate(elems)}
    table = []
    for a in elems:
        row = []
        for b in elems:
            s = curve.add(a, b)
            if s not in index:
                raise AssertionError(f"closure fails: {a} + {b} = {s}")
            row.append(index[s])
        table.append(row)
    return elems, table


def group_axioms(curve: NodalCurve) -> Iterator[CheckResult]:
    tag = f"(p={curve.p}, f={curve.f})"
    try:
        elems, table = cayley_table(curve)
    except AssertionError as exc:
        yield f"closure {tag}", False, str(exc)
        return
    n = len(elems)
    yield f"closure {tag}", True, f"{n * n} sums"
    yield f"order {tag}", n == curve.order(), f"enumerated {n}, order() {curve.order()}"
    hs = [e.h.coeffs for e in elems if e.h is not None]
    yield f"distinct representatives {tag}", len(set(hs)) == len(hs) == n - 1, f"{len(hs)} h"
    ident = elems.index(next(e for e in elems if e.is_identity))
    yield f"identity {tag}", all(table[ident][i] == i == table[i][ident] for i in range(n)), ""
    yield f"commutativity {tag}", all(
        table[i][j] == table[j][i] for i in range(n) for j in range(i)
    ), ""
    neg_ok = all(table[i][elems.index(curve.neg(e))] == ident for i, e in enumerate(elems))
    yield f"inverses {tag}", neg_ok, ""
    assoc = all(
        table[table[i][j]][k] == table[i][table[j][k]]
        for i, j, k in itertools.product(range(n), repeat=3)
    )
    yield f"associativity {tag}", assoc, f"{n ** 3} triples"


def oracle_equivalence(curve: NodalCurve, trials: int, rng: random.Random) -> CheckResult:
    H = curve.hyper_curve
    for _ in range(trials):
        a, b = curve.random_element(rng), curve.random_element(rng)
        composed = cantor_add(H, curve.to_mumford(a), curve.to_mumford(b), reduce=False)
        if composed != curve.to_mumford(curve.add(a, b)):
            return f"Cantor composition = nodal sum (p={curve.p}, d={curve.d})", False, f"{a}, {b}"
    return f"Cantor composition = nodal sum (p={curve.p}, d={curve.d})", True, f"{trials} pairs"


def annihilation(curve: NodalCurve, trials: int, rng: random.Random) -> CheckResult:
    N = curve.order()
    ok = all(curve.scalar_mul(N, curve.random_element(rng)).is_identity for _ in range(trials))
    return f"order * Q = identity (p={curve.p}, d={curve.d})", ok, f"{trials} elements"


def run(quick: bool = False, seed: int = 0) -> list[CheckResult]:
    from .poly import random_irreducible

    rng = random.Random(seed)
    small = [NodalCurve(7, [1, 0, 1])]
    if not quick:
        small.append(NodalCurve(5, [2, 0, 1]))
    results = []
    for c in small:
        results.extend(group_axioms(c))
        results.append(oracle_equivalence(c, 200, rng))
    if not quick:
        for d in (5, 11):
            c = NodalCurve(DEFAULT_PRIME, random_irreducible(d, DEFAULT_PRIME, rng))
            results.append(oracle_equivalence(c, 200, rng))
            results.append(annihilation(c, 5, rng))
    return results
