from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from hyperpart.collapse import PeelSequence, greedy_collapse
from hyperpart.construct import HomogeneityReport, build_partition, homogeneity_report
from hyperpart.homology import BettiVector, betti
from hyperpart.hypercore import PartitionReport, verify_partition

SIZE_GUARD = 10**6


class SizeGuardError(ValueError):
    pass


def check_size(r: int, d: int, force: bool = False, limit: int = SIZE_GUARD) -> None:
    total = comb(r * d, r)
    if total > limit and not force:
        raise SizeGuardError(f"K_{r * d}^({r}) has {total} edges, above the guard of {limit}; "
                             "pass --force to proceed")


def _verdict(ok) -> str:
    return "pass" if ok else "FAIL"


@dataclass
class VerifyReport:
    r: int
    d: int
    partition: PartitionReport
    homogeneity: HomogeneityReport
    betti: list[BettiVector] | None = None
    collapse: list[PeelSequence] | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def betti_ok(self) -> bool:
        return self.betti is None or all(b.is_zero() for b in self.betti)

    @property
    def collapse_ok(self) -> bool:
        return self.collapse is None or all(seq.complete for seq in self.collapse)

    @property
    def passed(self) -> bool:
        return bool(self.partition) and bool(self.homogeneity) and self.betti_ok and self.collapse_ok

    def lines(self) -> list[str]:
        out = [f"partition r={self.r} d={self.d}",
               f"axioms: {_verdict(self.partition)}"]
        out += [f"  {v}" for v in self.partition.violations]
        out.append(f"homogeneity: {_verdict(self.homogeneity)}")
        for part, s, actual, expected in self.homogeneity.rows:
            label = "|E|" if s == self.r else f"|E_{s}|"
            out.append(f"  part {part} {label} = {actual} (expected {expected})")
        if self.betti is not None:
            out.append(f"betti: {_verdict(self.betti_ok)}")
            for i, b in enumerate(self.betti, 1):
                out.append(f"  part {i}: {b} [{b.method}]")
        if self.collapse is not None:
            out.append(f"collapse: {_verdict(self.collapse_ok)}")
            for i, seq in enumerate(self.collapse, 1):
                out.append(f"  part {i}: {len(seq)} steps, residual {len(seq.residual)}")
        out.append(f"verdict: {_verdict(self.passed)}")
        return out


def verify_construction(r: int, d: int, method: str = "both", betti_mode: str = "fast") -> VerifyReport:
    """Run every check of the acyclic-partition claim on the (r, d) construction."""
    if method not in ("betti", "collapse", "both"):
        raise ValueError(f"unknown method {method!r}")
    p = build_partition(r, d)
    report = VerifyReport(r, d, verify_partition(p), homogeneity_report(p))
    if method in ("betti", "both"):
        report.betti = [betti(part, betti_mode) for part in p.parts]
    if method in ("collapse", "both"):
        report.collapse = [greedy_collapse(part) for part in p.parts]
    return report
