"""Invariant suites runnable from the command line or from tests.

Each suite returns a list of :class:`Check` results and stops a check at the
first counterexample, which is kept as the witness.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .lattice import (
    Antichain,
    _from_closed,
    all_antichains,
    all_downsets,
    canonicalize,
    check_nondominating,
    dual,
    from_downset,
    join,
    leq,
    meet,
    normalize,
    relabel,
)
from .partitions import (
    all_splits,
    lnd_partition,
    lnd_partition_interval,
    product_partition,
    verify_partition,
)
from .pcoeff import dedekind_pcoeff, dedekind_pcoeff_reference, pcoeff_bruteforce, pcoeff_k2
from .posets import Interval, graph_decompose
from .sizes import count_by_enumeration, interval_size, iter_interval_downsets, size_leveled

SUITES = ("lattice", "partitions", "sizes", "pcoeff", "sequences")


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""
    witness: str | None = None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f" [{self.detail}]" if self.detail else ""
        wit = f" witness: {self.witness}" if self.witness else ""
        return f"{status} {self.name}{extra}{wit}"


def meet_by_sets(a: Antichain, b: Antichain) -> Antichain:
    """Meet from pairwise intersections, independent of downset words."""
    return normalize((x & y for x in a.sets for y in b.sets), a.n)


def join_by_sets(a: Antichain, b: Antichain) -> Antichain:
    return normalize(a.sets + b.sets, a.n)


def leq_by_sets(a: Antichain, b: Antichain) -> bool:
    return all(any(x & y == x for y in b.sets) for x in a.sets)


def ordered_pairs(n: int) -> list[tuple[Antichain, Antichain]]:
    acs = all_antichains(n)
    return [(a, b) for a in acs for b in acs if leq(a, b)]


def random_pairs(n: int, count: int, seed: int) -> list[tuple[Antichain, Antichain]]:
    """Seeded intervals ``[x ∧ y, x ∨ y]`` for uniformly drawn antichains x, y."""
    rng = random.Random(seed)
    space = all_downsets(n)
    out = []
    for _ in range(count):
        x, y = rng.choice(space), rng.choice(space)
        out.append((_from_closed(x & y, n), _from_closed(x | y, n)))
    return out


def _first_failure(items, predicate: Callable) -> str | None:
    for item in items:
        if not predicate(item):
            return repr(item) if not isinstance(item, tuple) else " , ".join(str(x) for x in item)
    return None


def lattice_suite(n: int, seed: int = 0) -> list[Check]:
    acs = all_antichains(n)
    if n <= 4:
        pairs = [(a, b) for a in acs for b in acs]
    else:
        rng = random.Random(seed)
        pairs = [(rng.choice(acs), rng.choice(acs)) for _ in range(5000)]
    checks = []
    wit = _first_failure(
        pairs,
        lambda p: meet(*p) == meet_by_sets(*p) and join(*p) == join_by_sets(*p) and leq(*p) == leq_by_sets(*p),
    )
    checks.append(Check(f"operators agree with set definitions on A_{n}", wit is None, f"{len(pairs)} pairs", wit))
    wit = _first_failure(
        pairs,
        lambda p: leq(*p) == (join(*p) == p[1]) == (meet(*p) == p[0]),
    )
    checks.append(Check(f"order matches join and meet on A_{n}", wit is None, witness=wit))
    if n <= 3:
        triples = [(a, b, c) for a in acs for b in acs for c in acs]
        wit = _first_failure(
            triples,
            lambda t: meet(t[0], join(t[1], t[2])) == join(meet(t[0], t[1]), meet(t[0], t[2]))
            and join(join(t[0], t[1]), t[2]) == join(t[0], join(t[1], t[2]))
            and meet(meet(t[0], t[1]), t[2]) == meet(t[0], meet(t[1], t[2])),
        )
        checks.append(Check(f"distributivity and associativity on A_{n}", wit is None, f"{len(triples)} triples", wit))
    wit = _first_failure(pairs, lambda p: leq(*p) == leq(dual(p[1]), dual(p[0])) and dual(dual(p[0])) == p[0])
    checks.append(Check(f"dual is an order-reversing involution on A_{n}", wit is None, witness=wit))
    wit = _first_failure(acs, lambda a: from_downset(a.down, n) == a)
    checks.append(Check(f"downset round trip on A_{n}", wit is None, witness=wit))

    def check_ok(chi: Antichain) -> bool:
        rho = check_nondominating(chi)
        brute = _from_closed(sum(1 << m for m in range(1 << n) if all(m & x != x for x in chi.sets)), n)
        return rho == brute and not any(leq(normalize([x], n), rho) for x in chi.sets)

    wit = _first_failure(acs, check_ok)
    checks.append(Check(f"largest non-dominating antichain on A_{n}", wit is None, witness=wit))
    if n <= 6:
        rng = random.Random(seed)
        perms = []
        for _ in range(8):
            p = list(range(1, n + 1))
            rng.shuffle(p)
            perms.append(p)
        wit = _first_failure(
            acs if n <= 4 else rng.sample(acs, 200),
            lambda a: all(canonicalize(relabel(a, p)) == canonicalize(a) for p in perms),
        )
        checks.append(Check(f"canonical form is relabeling invariant on A_{n}", wit is None, witness=wit))
    return checks


def partitions_suite(n: int, seed: int = 0) -> list[Check]:
    checks = []
    acs = all_antichains(n)
    if n >= 5:
        acs = random.Random(seed).sample(acs, 100)
    mode = "full" if n <= 3 else "size"
    bad = None
    for a in acs:
        res = verify_partition(lnd_partition(a), mode)
        if not res:
            bad = f"alpha={a}: {res.detail} {res.witness or ''}"
            break
    checks.append(Check(f"largest-non-dominating partitions of A_{n} ({mode})", bad is None, f"{len(acs)} antichains", bad))
    if n <= 3:
        bad = None
        for lo, hi in ordered_pairs(n):
            iv = Interval(lo, hi)
            for a in iter_interval_downsets(lo.down, hi.down, n):
                res = verify_partition(lnd_partition_interval(_from_closed(a, n), iv))
                if not res:
                    bad = f"[{iv}] at {_from_closed(a, n)}: {res.detail}"
                    break
            if bad:
                break
        checks.append(Check(f"interval partitions inside A_{n}", bad is None, witness=bad))
    if n >= 2:
        bad = None
        for n1, n2 in all_splits(n):
            res = verify_partition(product_partition(n1, n2, n), "full" if n <= 4 else "size")
            if not res:
                bad = f"split {n1:b}/{n2:b}: {res.detail}"
                break
        checks.append(Check(f"direct-product partitions of A_{n}", bad is None, witness=bad))
    return checks


def sizes_suite(n: int, seed: int = 0, samples: int = 1000) -> list[Check]:
    pairs = ordered_pairs(n) if n <= 4 else random_pairs(n, samples, seed)
    label = "all ordered pairs" if n <= 4 else f"{len(pairs)} random pairs"
    bad = None
    for lo, hi in pairs:
        even = size_leveled(lo, hi, "even")
        odd = size_leveled(lo, hi, "odd")
        enum = count_by_enumeration(lo, hi)
        disp = interval_size(lo, hi)
        if not even == odd == enum == disp:
            bad = f"[{lo} ; {hi}] even={even} odd={odd} enum={enum} dispatch={disp}"
            break
    checks = [Check(f"parity sums equal enumeration on A_{n}", bad is None, label, bad)]
    bad = None
    for lo, hi in pairs:
        parts = graph_decompose(Interval(lo, hi))
        prod = 1
        for p in parts:
            prod *= size_leveled(p)
        if prod != size_leveled(lo, hi):
            bad = f"[{lo} ; {hi}]"
            break
    checks.append(Check(f"graph decomposition is multiplicative on A_{n}", bad is None, label, bad))
    return checks


def pcoeff_suite(n: int) -> list[Check]:
    checks = []
    if n <= 3:
        bad = None
        for lo, hi in ordered_pairs(n):
            if pcoeff_k2(lo, hi) != pcoeff_bruteforce(n, 2, lo, hi):
                bad = f"rho1={lo} rho2={hi}"
                break
        checks.append(Check(f"k=2 coefficients match brute force on A_{n}", bad is None, witness=bad))
        ref = dedekind_pcoeff_reference(n)
        red = dedekind_pcoeff(n, 2)
        checks.append(Check(f"expansion with and without symmetry, n={n}", ref == red, f"{red} vs {ref}"))
    elif n == 4:
        red = dedekind_pcoeff(n, 2)
        plain = dedekind_pcoeff(n, 2, symmetry=False)
        checks.append(Check(f"expansion with and without symmetry, n={n}", red == plain, f"{red} vs {plain}"))
    else:
        from .kernel import dedekind_pcoeff_compiled

        red = dedekind_pcoeff(n, 2)
        compiled = dedekind_pcoeff_compiled(n)
        checks.append(Check(f"Python and compiled expansions agree, n={n}", red == compiled, f"{red} vs {compiled}"))
    return checks


def sequences_suite(n: int) -> list[Check]:
    from .dedekind import sequence_table

    table = sequence_table(min(n, 5))
    return [Check(f"sequence table rows 0..{table.max_n} satisfy the recursions", table.consistent())]


def run_suites(n: int, suites=SUITES, seed: int = 0, samples: int = 1000) -> list[Check]:
    out: list[Check] = []
    for s in suites:
        if s == "lattice":
            out += lattice_suite(n, seed)
        elif s == "partitions":
            out += partitions_suite(n, seed)
        elif s == "sizes":
            out += sizes_suite(n, seed, samples)
        elif s == "pcoeff":
            out += pcoeff_suite(n)
        elif s == "sequences":
            out += sequences_suite(n)
        else:
            raise ValueError(f"unknown suite {s!r}")
    return out

