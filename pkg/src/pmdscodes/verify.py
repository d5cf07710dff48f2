"""Exhaustive checks of the SD / PMDS erasure-tolerance properties.

A pattern is tolerated exactly when the parity-check columns at the erased
coordinates are linearly independent (per CRT component over a ring).
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Any, Iterable, Iterator

from .codec import ArrayCode, ErasurePattern
from .construction import (
    CodeParams,
    DeltaInputs,
    Variant,
    build_lemma_matrix,
    build_parity_check,
    delta_closed_form,
)
from .linalg import Matrix, determinant, has_full_column_rank

SD = "SD"
PMDS = "PMDS"
LEMMA = "LEMMA"
FIGURE1 = "FIG1"


@dataclass
class VerificationReport:
    property: str
    passed: bool
    patterns_checked: int
    counterexample: Any = None
    params: str = ""
    details: list[str] = field(default_factory=list)

    def summary(self) -> str:
        unit = "tuples" if self.property == LEMMA else "patterns"
        return "%s %d %s" % ("PASS" if self.passed else "FAIL", self.patterns_checked, unit)


def enumerate_sd_patterns(params: CodeParams) -> Iterator[ErasurePattern]:
    """m whole columns plus any two further cells outside them."""
    r, n, m = params.r, params.n, params.m
    for cols in itertools.combinations(range(n), m):
        outside = [(j, c) for j in range(r) for c in range(n) if c not in cols]
        base = {(j, c) for c in cols for j in range(r)}
        for extra in itertools.combinations(outside, 2):
            yield ErasurePattern(base | set(extra))


def sd_pattern_count(params: CodeParams) -> int:
    r, n, m = params.r, params.n, params.m
    return comb(n, m) * comb(r * (n - m), 2)


def enumerate_pmds_patterns(params: CodeParams) -> Iterator[ErasurePattern]:
    """m erasures in every row, with m+2 in one row or m+1 in each of two rows."""
    r, n, m = params.r, params.n, params.m
    msets = list(itertools.combinations(range(n), m))

    def assemble(special: dict[int, tuple[int, ...]], rest: Iterable[tuple[int, ...]]):
        rest = iter(rest)
        cells = set()
        for j in range(r):
            cols = special[j] if j in special else next(rest)
            cells.update((j, c) for c in cols)
        return ErasurePattern(cells)

    for row in range(r):
        for big in itertools.combinations(range(n), m + 2):
            for rest in itertools.product(msets, repeat=r - 1):
                yield assemble({row: big}, rest)
    for a, b in itertools.combinations(range(r), 2):
        for cols_a in itertools.combinations(range(n), m + 1):
            for cols_b in itertools.combinations(range(n), m + 1):
                for rest in itertools.product(msets, repeat=r - 2):
                    yield assemble({a: cols_a, b: cols_b}, rest)


def pmds_pattern_count(params: CodeParams) -> int:
    r, n, m = params.r, params.n, params.m
    one_row = r * comb(n, m + 2) * comb(n, m) ** (r - 1)
    two_rows = comb(r, 2) * comb(n, m + 1) ** 2 * comb(n, m) ** max(r - 2, 0) if r >= 2 else 0
    return one_row + two_rows


def pattern_tolerated(H: Matrix, n: int, pattern: ErasurePattern) -> bool:
    coords = pattern.coordinates(n)
    if len(coords) > H.nrows:
        return False
    return has_full_column_rank(H.select_columns(coords))


def _first_failure(args) -> tuple[int, ErasurePattern | None]:
    H, n, patterns = args
    for k, pat in enumerate(patterns):
        if not pattern_tolerated(H, n, pat):
            return k, pat
    return len(patterns), None


def _chunks(it: Iterable, size: int) -> Iterator[list]:
    it = iter(it)
    while chunk := list(itertools.islice(it, size)):
        yield chunk


def verify(params: CodeParams, prop: str, jobs: int = 1, chunk_size: int = 512) -> VerificationReport:
    """Check every pattern the property demands against the code built from ``params``.

    The first failing pattern in enumeration order is reported, whether or
    not the sweep runs in parallel.
    """
    prop = prop.upper()
    if prop == SD:
        patterns = enumerate_sd_patterns(params)
    elif prop == PMDS:
        patterns = enumerate_pmds_patterns(params)
    else:
        raise ValueError("unknown property %r" % prop)
    H = build_parity_check(params).matrix
    n = params.n
    checked = 0
    counterexample = None
    work = ((H, n, chunk) for chunk in _chunks(patterns, chunk_size))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map preserves input order, so the first failing chunk wins
            for k, bad in pool.map(_first_failure, work):
                checked += k + (bad is not None)
                if bad is not None:
                    counterexample = bad
                    break
    else:
        for item in work:
            k, bad = _first_failure(item)
            checked += k + (bad is not None)
            if bad is not None:
                counterexample = bad
                break
    return VerificationReport(
        prop, counterexample is None, checked, counterexample, params.describe()
    )


def check_lemma(m: int, n: int, r: int, algebra) -> VerificationReport:
    """Closed-form determinant versus direct elimination, over all index tuples."""
    if not 1 <= m <= n - 2 or r < 2:
        raise ValueError("need 1 <= m <= n-2 and r >= 2")
    checked = 0
    for i_list in itertools.combinations(range(n), m + 1):
        for j_list in itertools.combinations(range(n), m + 1):
            for ell in range(1, r):
                inp = DeltaInputs(i_list, j_list, ell, n, r)
                checked += 1
                if delta_closed_form(inp, algebra) != determinant(build_lemma_matrix(inp, algebra)):
                    return VerificationReport(
                        LEMMA, False, checked, inp, "m=%d n=%d r=%d algebra=%s" % (m, n, r, algebra.name)
                    )
    return VerificationReport(LEMMA, True, checked, None, "m=%d n=%d r=%d algebra=%s" % (m, n, r, algebra.name))


def lemma_tuple_count(m: int, n: int, r: int) -> int:
    return comb(n, m + 1) ** 2 * (r - 1)


# Five erasure scenarios on a 4x5 stripe protected by a (1;2) code.
# (name, cells, expected to be tolerated by an SD code)
FIGURE1_SCENARIOS: list[tuple[str, frozenset, bool]] = [
    ("one erasure per row", frozenset({(0, 0), (1, 2), (2, 4), (3, 1)}), True),
    (
        "full column + 2 sectors in distinct rows",
        frozenset({(j, 1) for j in range(4)} | {(0, 3), (2, 4)}),
        True,
    ),
    (
        "full column + 2 sectors in one row",
        frozenset({(j, 1) for j in range(4)} | {(2, 0), (2, 3)}),
        True,
    ),
    (
        "one per row + 2 extra in one row",
        frozenset({(0, 0), (1, 2), (2, 4), (3, 1), (1, 0), (1, 3)}),
        False,
    ),
    (
        "one per row + 1 extra in two rows",
        frozenset({(0, 0), (1, 2), (2, 4), (3, 1), (0, 3), (3, 4)}),
        False,
    ),
]


def figure1_scenarios(sd_params: CodeParams, pmds_params: CodeParams, seed: int = 0) -> VerificationReport:
    """Decode a random stripe under each scenario with both codes.

    Passing requires the SD code to handle the first three scenarios and the
    PMDS code to handle all five; the SD code's verdicts on the last two are
    only reported.
    """
    for p in (sd_params, pmds_params):
        if (p.r, p.n, p.m) != (4, 5, 1):
            raise ValueError("scenarios are defined for r=4, n=5, m=1")
    rng = random.Random(seed)
    passed = True
    details = []
    checked = 0
    for label, params in (("SD", sd_params), ("PMDS", pmds_params)):
        code = ArrayCode(params)
        size = params.algebra.size
        for k, (name, cells, sd_expected) in enumerate(FIGURE1_SCENARIOS, 1):
            pattern = ErasurePattern(cells)
            data = [rng.randrange(size) for _ in code.data_coords]
            original = code.encode(data)
            out = code.decode(original.erase(pattern), pattern)
            ok = bool(out) and out == original
            required = params.variant is Variant.PMDS or sd_expected
            checked += 1
            if required and not ok:
                passed = False
            details.append(
                "%s scenario %d (%s): %s%s"
                % (label, k, name, "decoded" if ok else "undecodable", "" if required else " [reported only]")
            )
    return VerificationReport(FIGURE1, passed, checked, None, "r=4 n=5 m=1", details)



def sample_sd_pattern(params: CodeParams, rng: random.Random) -> ErasurePattern:
    """Uniform draw from the patterns ``enumerate_sd_patterns`` yields."""
    r, n, m = params.r, params.n, params.m
    cols = rng.sample(range(n), m)
    outside = [(j, c) for j in range(r) for c in range(n) if c not in cols]
    return ErasurePattern.columns(cols, r, rng.sample(outside, 2))
