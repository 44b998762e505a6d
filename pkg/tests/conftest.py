import itertools
from dataclasses import dataclass, field

import numpy as np
import pytest

from flagbott.lr import NumberingBatch, enumerate_fillings
from flagbott.partitions import partitions_of, skew_shapes

ACCEPTANCE_LINES: list[str] = []


def record(criterion: int, ok: bool, detail: str) -> None:
    line = f"criterion {criterion:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@dataclass
class SweepStats:
    numberings: int = 0
    lr_count: int = 0
    discrepancies: int = 0  # classical & Y  !=  eight conditions
    noncanonical: int = 0  # L1 & L2 & Y but c2 differs from the canonical one
    enumeration_mismatches: int = 0  # count differs from enumerate_fillings
    per_size: dict = field(default_factory=dict)


def _permutations(n: int) -> np.ndarray:
    if n == 0:
        return np.zeros((1, 0), dtype=np.intp)
    return np.array(list(itertools.permutations(range(n))), dtype=np.intp)


@pytest.fixture(scope="session")
def numbering_sweep() -> SweepStats:
    """Every bijective numbering of every skew shape with at most 7 cells."""
    stats = SweepStats()
    for n in range(8):
        perms = _permutations(n)
        before = (stats.numberings, stats.lr_count, stats.discrepancies)
        for shape in skew_shapes(n):
            cells = shape.cells()
            for v in partitions_of(n):
                batch = NumberingBatch(cells, v, perms)
                young = batch.young()
                lr = batch.classical() & young
                stats.discrepancies += int(np.count_nonzero(lr != batch.eight_all()))
                weak = batch.l1() & batch.l2() & young
                canon = batch.canonical_c2()
                stats.noncanonical += int(np.count_nonzero(weak & (canon != batch.c2).any(axis=1)))
                count = int(np.count_nonzero(lr))
                stats.lr_count += count
                stats.numberings += batch.size
                if count != len(enumerate_fillings(shape, v)):
                    stats.enumeration_mismatches += 1
        stats.per_size[n] = tuple(a - b for a, b in zip((stats.numberings, stats.lr_count, stats.discrepancies), before))
    return stats
