"""Exhaustive censuses of monic-polynomial discriminants.

A census enumerates all q^m monic polynomials of degree m over F_q and counts
how many have each discriminant value, either unrestricted, restricted to
irreducibles, or split by factorization type.  When the characteristic does
not divide m, the translation orbits f(x) -> f(x+t) partition the space into
classes of size q with constant discriminant, so only polynomials with zero
x^(m-1) coefficient are enumerated and counts are scaled by q at the end.

Enumeration order is the integer encoding of the coefficient sequence
(constant term fastest); work is split into contiguous encoding ranges per
worker and partial tables merge by addition, so worker count never changes a
result.
"""

from __future__ import annotations

import json
import os
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import __version__, kernels
from .field import FieldElement, FieldSpec, character_signs, make_field
from .partitions import Partition, partitions

PROGRESS_EVERY = 10**7


@dataclass(frozen=True)
class CensusMode:
    kind: str  # "all" | "irr" | "type"
    partition: Optional[Partition] = None

    def __post_init__(self):
        if self.kind not in ("all", "irr", "type"):
            raise ValueError(f"unknown census mode {self.kind!r}")
        if (self.kind == "type") != (self.partition is not None):
            raise ValueError("a partition is required exactly for type mode")

    def __str__(self):
        if self.kind == "type":
            return f"type{self.partition}"
        return self.kind


ALL_MONIC = CensusMode("all")
IRREDUCIBLE = CensusMode("irr")


def by_type(partition: Partition) -> CensusMode:
    return CensusMode("type", partition)


@dataclass(frozen=True)
class CensusTable:
    spec: FieldSpec
    degree: int
    mode: CensusMode
    counts: tuple[int, ...]  # indexed by discriminant encoding 0..q-1

    def __post_init__(self):
        if len(self.counts) != self.spec.q:
            raise ValueError("counts must have one entry per field element")

    @property
    def total(self) -> int:
        return sum(self.counts)

    def count(self, d) -> int:
        if isinstance(d, FieldElement):
            d = d.encoding
        return self.counts[d]


# ---------------------------------------------------------------------------
# Scan driver.


def _type_code(partition: Partition, m: int) -> int:
    code = 0
    for d, r in partition.multiplicities().items():
        code += r * (m + 1) ** (d - 1)
    return code


def _run_scan(spec, m, kind, codes, reduction, workers, progress):
    if m < 1:
        raise ValueError("census degree must be >= 1")
    if m > kernels.MAX_DEGREE:
        raise ValueError(f"census degree capped at {kernels.MAX_DEGREE}")
    q, p = spec.q, spec.p
    t = spec.tables()
    reduced = bool(reduction) and (m % p != 0)
    space = q ** (m - 1) if reduced else q**m

    if kind == "all":
        run = lambda a, b: kernels.scan_all(q, p, t.add, t.mul, t.neg, t.inv, m, a, b, reduced)
    elif kind == "irr":
        run = lambda a, b: kernels.scan_irr(q, p, t.add, t.mul, t.neg, t.inv, m, a, b, reduced)
    else:
        run = lambda a, b: kernels.scan_types(
            q, p, t.add, t.mul, t.neg, t.inv, m, a, b, reduced, codes
        )

    workers = max(1, int(workers))
    chunk = min(PROGRESS_EVERY, max(1, -(-space // workers)))
    ranges = [(a, min(a + chunk, space)) for a in range(0, space, chunk)]

    done = 0
    lock = threading.Lock()

    def job(rng):
        nonlocal done
        out = run(*rng)
        if progress is not None and space > PROGRESS_EVERY:
            with lock:
                done += rng[1] - rng[0]
                print(
                    f"census F_{q} deg {m} {kind}: {done}/{space} enumerated",
                    file=progress,
                    flush=True,
                )
        return out

    if workers == 1 or len(ranges) == 1:
        parts = [job(r) for r in ranges]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(job, ranges))
    merged = parts[0]
    for extra in parts[1:]:
        merged = merged + extra
    if reduced:
        merged = merged * q
    return merged


def census(
    spec: FieldSpec,
    m: int,
    mode: CensusMode,
    *,
    reduction: bool = True,
    workers: int = 1,
    progress=None,
    cache_dir: Optional[str] = None,
) -> CensusTable:
    """Exact distribution of discriminants over all monic degree-m polynomials."""
    if mode.kind == "type":
        if mode.partition.m != m:
            raise ValueError(f"{mode.partition} is not a partition of {m}")
        spectrum = type_spectrum(
            spec, m, reduction=reduction, workers=workers, progress=progress
        )
        return spectrum[mode.partition]
    if cache_dir:
        cached = load_table(spec, m, mode, cache_dir)
        if cached is not None:
            return cached
    counts = _run_scan(spec, m, mode.kind, None, reduction, workers, progress)
    table = CensusTable(spec, m, mode, tuple(int(v) for v in counts))
    if cache_dir:
        save_table(table, cache_dir)
    return table


def type_spectrum(
    spec: FieldSpec,
    m: int,
    *,
    reduction: bool = True,
    workers: int = 1,
    progress=None,
) -> dict[Partition, CensusTable]:
    """Censuses for every factorization type of degree m, from a single scan."""
    parts = partitions(m)
    coded = sorted((_type_code(lam, m), lam) for lam in parts)
    codes = np.array([c for c, _ in coded], dtype=np.int64)
    counts = _run_scan(spec, m, "type", codes, reduction, workers, progress)
    return {
        lam: CensusTable(spec, m, by_type(lam), tuple(int(v) for v in counts[i]))
        for i, (_, lam) in enumerate(coded)
    }


# ---------------------------------------------------------------------------
# Distribution verdicts and support.


@dataclass(frozen=True)
class DistributionVerdict:
    equal: bool
    expected_support: tuple[int, ...]
    counts: tuple[int, ...]
    reason: str = ""

    def __bool__(self):
        return self.equal


def _mode_part_count(mode: CensusMode) -> int:
    return 1 if mode.kind == "irr" else mode.partition.length


def is_equally_distributed(table: CensusTable) -> DistributionVerdict:
    """Whether the counts are uniform on exactly the support the theory allows.

    All-monic: all q counts equal (discriminant 0 included).  Irreducible or
    fixed-type over odd q: equal and nonzero precisely on the half of F_q^x
    whose quadratic character matches (-1)^(m - number of factors); over even
    q: equal and nonzero on all of F_q^x.
    """
    spec, q = table.spec, table.spec.q
    counts = table.counts
    if not counts:
        raise ValueError("empty census table")
    if table.mode.kind == "all":
        ok = len(set(counts)) == 1
        return DistributionVerdict(
            ok, tuple(range(q)), counts, "" if ok else "counts differ"
        )
    if q % 2 == 1:
        sign = -1 if (table.degree - _mode_part_count(table.mode)) % 2 else 1
        chi = character_signs(spec)
        expected = tuple(d for d in range(1, q) if chi[d] == sign)
    else:
        expected = tuple(range(1, q))
    support = tuple(d for d in range(q) if counts[d] > 0)
    if not support:
        return DistributionVerdict(False, expected, counts, "empty class")
    if support != expected:
        return DistributionVerdict(False, expected, counts, "support mismatch")
    ok = len({counts[d] for d in expected}) == 1
    return DistributionVerdict(ok, expected, counts, "" if ok else "counts differ")


def support_set(table: CensusTable) -> set[int]:
    """Encodings of discriminants attained by the class; not for all-monic mode."""
    if table.mode.kind == "all":
        raise ValueError("support of an all-monic census is trivially everything")
    return {d for d in range(table.spec.q) if table.counts[d] > 0}


# ---------------------------------------------------------------------------
# Verification operations.


@dataclass(frozen=True)
class VerifyReport:
    check: str
    q: int
    m: Optional[int]
    passed: bool
    detail: str = ""
    counterexample: Optional[str] = None

    def __bool__(self):
        return self.passed

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        where = f"q={self.q}" + (f" m={self.m}" if self.m is not None else "")
        out = f"{status}  {self.check} [{where}]"
        if self.detail:
            out += f": {self.detail}"
        if self.counterexample:
            out += f" (counterexample {self.counterexample})"
        return out


def _first_parity_counterexample(spec, m):
    """Slow scan for the first monic f violating the discriminant parity law."""
    from . import lowlevel as ll

    ops = spec.ops()
    chi = character_signs(spec)
    q = spec.q
    for e in range(q**m):
        coeffs = [(e // q**i) % q for i in range(m)] + [1]
        d = ll.discriminant(ops, coeffs)
        counts = ll.ddf_degree_counts(ops, coeffs)
        mu = 0 if counts is None else (-1 if sum(counts) & 1 else 1)
        lhs = chi[d] if d else 0
        rhs = (1 if m % 2 == 0 else -1) * mu
        if lhs != rhs or (d == 0) != (mu == 0):
            return ",".join(map(str, coeffs))
    return None


def verify_stickelberger(spec: FieldSpec, m: int, *, workers: int = 1) -> VerifyReport:
    """Check chi(disc f) = (-1)^m mu(f) over every monic f of degree m, and
    that disc f = 0 exactly when f has a repeated factor."""
    name = "stickelberger"
    if spec.q % 2 == 0:
        raise ValueError("the parity law needs odd q")
    if m < 2:
        raise ValueError("m must be >= 2")
    chi = character_signs(spec)
    spectrum = type_spectrum(spec, m, workers=workers)
    all_table = census(spec, m, ALL_MONIC, workers=workers)
    squarefree_total = 0
    for lam, table in spectrum.items():
        squarefree_total += table.total
        sign = -1 if (m - lam.length) % 2 else 1
        for d in range(spec.q):
            if table.counts[d] == 0:
                continue
            if d == 0 or chi[d] != sign:
                return VerifyReport(
                    name, spec.q, m, False,
                    f"type {lam} attains disc {d} with character {chi[d] if d else 0} != {sign}",
                    _first_parity_counterexample(spec, m),
                )
    if all_table.counts[0] != spec.q**m - squarefree_total:
        return VerifyReport(
            name, spec.q, m, False,
            f"disc=0 count {all_table.counts[0]} != non-squarefree count "
            f"{spec.q**m - squarefree_total}",
            _first_parity_counterexample(spec, m),
        )
    return VerifyReport(name, spec.q, m, True, f"all {spec.q**m} monic polynomials")


def verify_mobius_sums(spec: FieldSpec, m: int, *, workers: int = 1) -> VerifyReport:
    """Check sum mu(f) = 0 and sum |mu(f)| = q^m - q^(m-1) over monic degree-m f."""
    name = "mobius-sums"
    if m < 2:
        raise ValueError("m must be >= 2")
    spectrum = type_spectrum(spec, m, workers=workers)
    signed = 0
    absolute = 0
    for lam, table in spectrum.items():
        total = table.total
        absolute += total
        signed += -total if lam.length % 2 else total
    expected_abs = spec.q**m - spec.q ** (m - 1)
    ok = signed == 0 and absolute == expected_abs
    return VerifyReport(
        name, spec.q, m, ok,
        f"sum mu = {signed} (want 0), sum |mu| = {absolute} (want {expected_abs})",
    )


def verify_square_balance(table: CensusTable) -> VerifyReport:
    """Check that square and nonsquare discriminants are attained equally often
    among all monic polynomials of the table's degree (odd q)."""
    name = "square-balance"
    spec = table.spec
    if spec.q % 2 == 0:
        raise ValueError("square balance needs odd q")
    if table.mode.kind != "all":
        raise ValueError("square balance applies to all-monic censuses")
    if table.degree < 2:
        raise ValueError("m must be >= 2")
    chi = character_signs(spec)
    plus = sum(table.counts[d] for d in range(1, spec.q) if chi[d] == 1)
    minus = sum(table.counts[d] for d in range(1, spec.q) if chi[d] == -1)
    return VerifyReport(
        name, spec.q, table.degree, plus == minus,
        f"square side {plus}, nonsquare side {minus}",
    )


# ---------------------------------------------------------------------------
# Cache and serialization.


def table_to_json_dict(table: CensusTable) -> dict:
    out = {
        "p": table.spec.p,
        "k": table.spec.k,
        "modulus": list(table.spec.modulus),
        "m": table.degree,
        "mode": table.mode.kind,
        "counts": list(table.counts),
        "tool_version": __version__,
    }
    if table.mode.kind == "type":
        out["partition"] = list(table.mode.partition.parts)
    return out


def table_from_json_dict(data: dict) -> CensusTable:
    k = int(data["k"])
    spec = make_field(int(data["p"]), k, data["modulus"] if k > 1 else None)
    kind = data["mode"]
    mode = CensusMode(kind, Partition(tuple(data["partition"])) if kind == "type" else None)
    return CensusTable(spec, int(data["m"]), mode, tuple(int(v) for v in data["counts"]))


def _cache_name(spec: FieldSpec, m: int, mode: CensusMode) -> str:
    bits = [f"p{spec.p}", f"k{spec.k}"]
    if spec.modulus:
        bits.append("mod" + "-".join(map(str, spec.modulus)))
    bits.append(f"m{m}")
    bits.append(mode.kind)
    if mode.kind == "type":
        bits.append("-".join(map(str, mode.partition.parts)))
    return "_".join(bits) + ".json"


def save_table(table: CensusTable, cache_dir: str) -> Optional[str]:
    """Write the census to the cache; returns the path, or None if unwritable."""
    path = os.path.join(cache_dir, _cache_name(table.spec, table.degree, table.mode))
    try:
        os.makedirs(cache_dir, exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(table_to_json_dict(table), fh, sort_keys=True)
            fh.write("\n")
    except OSError:
        return None
    return path


def load_table(spec: FieldSpec, m: int, mode: CensusMode, cache_dir: str) -> Optional[CensusTable]:
    path = os.path.join(cache_dir, _cache_name(spec, m, mode))
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, ValueError):
        return None
    try:
        table = table_from_json_dict(data)
    except (KeyError, ValueError):
        return None
    if table.spec != spec or table.degree != m or table.mode != mode:
        return None
    return table


def render_csv(tables: Sequence[CensusTable]) -> str:
    """Rows are discriminant encodings, columns are degrees (the layout of the
    published tables, transposed to one row per discriminant)."""
    if not tables:
        raise ValueError("nothing to render")
    spec = tables[0].spec
    mode = tables[0].mode
    if any(t.spec != spec or t.mode.kind != mode.kind for t in tables):
        raise ValueError("csv export needs a single field and mode")
    lines = ["disc," + ",".join(f"deg{t.degree}" for t in tables)]
    start = 1 if mode.kind != "all" else 0
    for d in range(start, spec.q):
        lines.append(f"{d}," + ",".join(str(t.counts[d]) for t in tables))
    return "\n".join(lines) + "\n"


def parse_csv(spec: FieldSpec, mode: CensusMode, text: str) -> list[CensusTable]:
    lines = [ln for ln in text.strip().splitlines() if ln]
    header = lines[0].split(",")
    degrees = [int(h[3:]) for h in header[1:]]
    counts = {m: [0] * spec.q for m in degrees}
    for ln in lines[1:]:
        cells = ln.split(",")
        d = int(cells[0])
        for m, v in zip(degrees, cells[1:]):
            counts[m][d] = int(v)
    return [CensusTable(spec, m, mode, tuple(counts[m])) for m in degrees]
