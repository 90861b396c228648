"""Ready-made dialects, corpus scanning and size/compression reporting."""

from __future__ import annotations

import shutil
import subprocess
import time
from dataclasses import dataclass, field

from .dialect import Dialect, get_dialect
from .stream import COLON, COMMA, OPEN_MARK, SEPARATOR, TokenStream, tokenize
from .tree import StatsReport, stats

MARK_KINDS = (COLON, OPEN_MARK, SEPARATOR, COMMA)


def newick_dialect() -> Dialect:
    """Dialect for Newick tree files: only the parentheses are structural,
    quoted labels and square-bracket comments are opaque, and commas,
    semicolons and branch-length colons stay data."""
    return get_dialect("newick")


@dataclass
class CorpusEntry:
    path: str
    dialect: str
    report: StatsReport | None
    error: str | None = None


def scan_corpus(paths, dialect: Dialect) -> list[CorpusEntry]:
    """Per-file stats reports; unreadable or untokenizable files are flagged
    and the scan continues. Entries come back in the order given."""
    entries = []
    for path in paths:
        path = str(path)
        try:
            with open(path, "rb") as fh:
                data = fh.read()
            report = stats(tokenize(data, dialect))
        except Exception as exc:  # noqa: BLE001 - flagged, not fatal
            entries.append(CorpusEntry(path, dialect.name, None, str(exc)))
        else:
            entries.append(CorpusEntry(path, dialect.name, report))
    return entries


def aggregate_depth_histogram(entries) -> dict[int, int]:
    """Histogram of per-file maximum depths across a scan."""
    hist: dict[int, int] = {}
    for entry in entries:
        if entry.report is not None and entry.report.max_depth is not None:
            d = entry.report.max_depth
            hist[d] = hist.get(d, 0) + 1
    return hist


@dataclass
class CompressorResult:
    command: str
    original: int | None = None
    transformed: int | None = None
    error: str | None = None


@dataclass
class SizeReport:
    input_bytes: int
    output_bytes: int
    marks_added: int
    parens_before: int
    parens_after: int
    compressors: list[CompressorResult] = field(default_factory=list)
    wall_time: float = 0.0

    def to_kv(self) -> str:
        parts = [
            f"input_bytes={self.input_bytes}",
            f"output_bytes={self.output_bytes}",
            f"marks_added={self.marks_added}",
            f"parens_before={self.parens_before}",
            f"parens_after={self.parens_after}",
            f"wall_time={self.wall_time:.6f}",
        ]
        for c in self.compressors:
            tag = c.command.replace(" ", "_")
            if c.error is not None:
                parts.append(f"compressor_{tag}=absent")
            else:
                parts.append(f"compressor_{tag}_original={c.original}")
                parts.append(f"compressor_{tag}_transformed={c.transformed}")
        return "\n".join(parts)

    def to_text(self) -> str:
        rows = [("none", str(self.input_bytes), str(self.output_bytes))]
        for c in self.compressors:
            if c.error is not None:
                rows.append((c.command, "absent", "absent"))
            else:
                rows.append((c.command, str(c.original), str(c.transformed)))
        w0 = max(len(r[0]) for r in rows + [("compression", "", "")])
        w1 = max(len(r[1]) for r in rows + [("", "original", "")])
        w2 = max(len(r[2]) for r in rows + [("", "", "transformed")])
        lines = [f"{'compression':<{w0}}  {'original':>{w1}}  {'transformed':>{w2}}"]
        for r in rows:
            lines.append(f"{r[0]:<{w0}}  {r[1]:>{w1}}  {r[2]:>{w2}}")
        lines.append(
            f"marks added {self.marks_added}; parens {self.parens_before} -> "
            f"{self.parens_after}; {self.wall_time:.3f}s"
        )
        return "\n".join(lines)


def _filter_size(command: str, data: bytes) -> int:
    argv = command.split()
    proc = subprocess.run(
        argv, input=data, stdout=subprocess.PIPE, stderr=subprocess.DEVNULL, check=True
    )
    return len(proc.stdout)


def count_marks(stream: TokenStream) -> int:
    return sum(1 for t in stream.tokens if t.kind in MARK_KINDS)


def size_report(
    original: bytes,
    transformed: bytes,
    dialect: Dialect,
    compressor_cmds=(),
    wall_time: float = 0.0,
) -> SizeReport:
    """Raw before/after sizes plus optional external-compressor sizes. A
    missing or failing compressor is recorded, never fatal."""
    before = tokenize(original, dialect)
    after = tokenize(transformed, dialect)
    report = SizeReport(
        input_bytes=len(original),
        output_bytes=len(transformed),
        marks_added=count_marks(after) - count_marks(before),
        parens_before=stats(before).paren_count,
        parens_after=stats(after).paren_count,
        wall_time=wall_time,
    )
    for cmd in compressor_cmds:
        result = CompressorResult(cmd)
        if shutil.which(cmd.split()[0]) is None:
            result.error = "not found"
        else:
            try:
                t0 = time.perf_counter()
                result.original = _filter_size(cmd, original)
                result.transformed = _filter_size(cmd, transformed)
                del t0
            except (OSError, subprocess.CalledProcessError) as exc:
                result.error = str(exc)
                result.original = result.transformed = None
        report.compressors.append(result)
    return report
