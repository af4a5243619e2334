"""Measure-preserving transport between interval spaces and the isometries it carries.

The transport between two components (or two spaces) is the monotone map
matching cumulative measure: T = G^-1 o F for the cumulative measure
functions F, G of source and target.  With piecewise-constant densities it is
piecewise affine, so it is stored as finitely many affine pieces; unbounded
carriers contribute one unbounded tail piece.  Spaces are matched weight
group by weight group along concatenated mass lines, which also handles a
group whose two sides split their mass over different component counts.

On step functions the transport acts by ``lift`` (coefficients ride along,
intervals move), and ``weighting_isometry`` divides by a density to move
between the plain and the density-weighted norms.  ``verify_isometry`` is the
numerical end of the story: seeded random step functions, norms on both
sides, worst deviation reported.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Sequence

from .errors import LogSpaceError
from .extreal import ExtendedReal
from .measure import (
    Component,
    MeasurableSet,
    MeasureSpace,
    PiecewiseDensity,
    SpaceDensity,
    _slice,
)
from .render import format_real
from .stepfunctions import NormKind, StepFunction, StepPiece, _canonical, log_norm

_TOTAL_RTOL = 1e-12
_COVER_RTOL = 1e-9


@dataclass(frozen=True)
class AffinePiece:
    """y = offset + slope * x on [start, stop), landing on [image_start, image_stop)."""

    start: float
    stop: float
    slope: float
    offset: float
    image_start: float
    image_stop: float

    def __post_init__(self):
        if not self.start < self.stop:
            raise LogSpaceError("affine piece must satisfy start < stop")
        if not self.slope > 0.0:
            raise LogSpaceError("affine piece slope must be > 0")

    def image_of(self, x: float) -> float:
        """Map a point; endpoints snap to the stored image interval ends."""
        if x == self.start:
            return self.image_start
        if x == self.stop:
            return self.image_stop
        return self.offset + self.slope * x


@dataclass(frozen=True)
class ComponentTransport:
    src: int
    dst: int
    pieces: tuple[AffinePiece, ...]


@dataclass(frozen=True)
class TransportMap:
    entries: tuple[ComponentTransport, ...]
    src_components: int = 1
    dst_components: int = 1


@dataclass(frozen=True)
class IsometryReport:
    samples: int
    max_abs_deviation: float
    worst_case: str

    def __post_init__(self):
        if self.max_abs_deviation < 0.0:
            raise LogSpaceError("deviation must be >= 0")


@dataclass(frozen=True)
class _Cell:
    """One density piece on the concatenated mass line of a weight group."""

    m0: float
    m1: float
    comp: int
    p0: float
    p1: float
    dens: float

    def invert(self, m: float) -> float:
        """Position with mass m inside this cell; clamps and snaps at the ends."""
        if m <= self.m0:
            return self.p0
        if m >= self.m1:
            return self.p1
        return self.p0 + (m - self.m0) / self.dens


def _group_cells(items: Sequence[tuple[int, Component]]) -> tuple[list[_Cell], float]:
    """Mass cells of one weight group: finite components first, one unbounded tail."""
    finite = [(i, c) for i, c in items if c.measure().is_finite]
    unbounded = [(i, c) for i, c in items if not c.measure().is_finite]
    if len(unbounded) > 1:
        raise LogSpaceError("pairing incomplete")
    cells: list[_Cell] = []
    m = 0.0
    for idx, comp in finite + unbounded:
        for p in comp.density.pieces:
            if math.isinf(p.stop):
                cells.append(_Cell(m, math.inf, idx, p.start, math.inf, p.value))
                m = math.inf
            else:
                dm = p.length * p.value
                cells.append(_Cell(m, m + dm, idx, p.start, p.stop, p.value))
                m += dm
    return cells, m


def _check_totals(a: float, b: float) -> None:
    if math.isinf(a) and math.isinf(b):
        return
    if math.isinf(a) or math.isinf(b) or abs(a - b) > _TOTAL_RTOL * max(a, b):
        raise LogSpaceError("no measure-preserving map")


def _match_mass_lines(
    src_cells: list[_Cell], src_total: float, dst_cells: list[_Cell], dst_total: float
) -> list[ComponentTransport]:
    infinite = math.isinf(src_total)
    cuts = {c.m0 for c in src_cells} | {c.m0 for c in dst_cells}
    if infinite:
        pts = sorted(cuts)
        eps = _TOTAL_RTOL * (1.0 + pts[-1])
    else:
        total = min(src_total, dst_total)
        eps = _TOTAL_RTOL * (1.0 + total)
        pts = sorted(m for m in cuts if m < total - eps)
    deduped = [pts[0]]
    for m in pts[1:]:
        if m - deduped[-1] > eps:
            deduped.append(m)
    segments = list(zip(deduped, deduped[1:]))
    segments.append((deduped[-1], math.inf if infinite else total))

    entries: list[ComponentTransport] = []
    run: list[AffinePiece] = []
    run_pair: tuple[int, int] | None = None
    si = di = 0
    for m1, m2 in segments:
        # a cell with at most eps of mass left beyond m1 counts as exhausted;
        # deduped cuts can sit one ulp before a genuine cell boundary
        while si + 1 < len(src_cells) and src_cells[si].m1 <= m1 + eps:
            si += 1
        while di + 1 < len(dst_cells) and dst_cells[di].m1 <= m1 + eps:
            di += 1
        sc, dc = src_cells[si], dst_cells[di]
        p1, p2 = sc.invert(m1), sc.invert(m2)
        q1, q2 = dc.invert(m1), dc.invert(m2)
        if not p1 < p2:
            continue
        slope = sc.dens / dc.dens
        piece = AffinePiece(p1, p2, slope, q1 - slope * p1, q1, q2)
        pair = (sc.comp, dc.comp)
        if pair == run_pair:
            prev = run[-1]
            if (
                prev.stop == piece.start
                and prev.slope == piece.slope
                and prev.offset == piece.offset
            ):
                run[-1] = AffinePiece(
                    prev.start, piece.stop, prev.slope, prev.offset, prev.image_start, piece.image_stop
                )
            else:
                run.append(piece)
        else:
            if run_pair is not None:
                entries.append(ComponentTransport(run_pair[0], run_pair[1], tuple(run)))
            run = [piece]
            run_pair = pair
    if run_pair is not None:
        entries.append(ComponentTransport(run_pair[0], run_pair[1], tuple(run)))
    return entries


def _transport_pair(src: Component, dst: Component, si: int, di: int) -> list[ComponentTransport]:
    if not (src.realizable and dst.realizable):
        raise LogSpaceError("symbolic component")
    _check_totals(src.measure().value, dst.measure().value)
    src_cells, sm = _group_cells([(si, src)])
    dst_cells, dm = _group_cells([(di, dst)])
    return _match_mass_lines(src_cells, sm, dst_cells, dm)


def monotone_transport(src: Component, dst: Component) -> TransportMap:
    """Cumulative-measure matching between two components of equal total measure."""
    return TransportMap(tuple(_transport_pair(src, dst, 0, 0)), 1, 1)


def glue_transports(pairs: Sequence[tuple[Component, Component]]) -> TransportMap:
    """Componentwise gluing of monotone transports; pair k maps component k to k."""
    pairs = list(pairs)
    if not pairs or any(len(p) != 2 for p in pairs):
        raise LogSpaceError("pairing incomplete")
    entries: list[ComponentTransport] = []
    for k, (src, dst) in enumerate(pairs):
        entries.extend(_transport_pair(src, dst, k, k))
    return TransportMap(tuple(entries), len(pairs), len(pairs))


def transport_between_spaces(src: MeasureSpace, dst: MeasureSpace) -> TransportMap:
    """Monotone transport between whole spaces, matched weight group by weight group.

    Within a group the two sides may split their mass over different component
    counts; the concatenated mass lines take care of the pairing.
    """
    for sp in (src, dst):
        if any(not c.realizable for c in sp.components):
            raise LogSpaceError("symbolic component")
    src_groups: dict[int, list[tuple[int, Component]]] = {}
    for i, c in enumerate(src.components):
        src_groups.setdefault(c.weight, []).append((i, c))
    dst_groups: dict[int, list[tuple[int, Component]]] = {}
    for i, c in enumerate(dst.components):
        dst_groups.setdefault(c.weight, []).append((i, c))
    if set(src_groups) != set(dst_groups):
        raise LogSpaceError("no measure-preserving map")
    entries: list[ComponentTransport] = []
    for weight in sorted(src_groups):
        src_cells, sm = _group_cells(src_groups[weight])
        dst_cells, dm = _group_cells(dst_groups[weight])
        _check_totals(sm, dm)
        entries.extend(_match_mass_lines(src_cells, sm, dst_cells, dm))
    return TransportMap(tuple(entries), len(src.components), len(dst.components))


def _clip_to_entries(
    tmap: TransportMap, comp: int, a: float, b: float
) -> tuple[list[tuple[int, float, float]], float]:
    """Images of [a, b) under every entry piece of component `comp`.

    Returns (dst_component, image interval) triples and the covered source length.
    """
    images: list[tuple[int, float, float]] = []
    covered = 0.0
    for entry in tmap.entries:
        if entry.src != comp:
            continue
        for piece in entry.pieces:
            lo = max(a, piece.start)
            hi = min(b, piece.stop)
            if lo < hi:
                images.append((entry.dst, piece.image_of(lo), piece.image_of(hi)))
                if not math.isinf(hi):
                    covered += hi - lo
                else:
                    covered = math.inf
    return images, covered


def transport_set(tmap: TransportMap, mset: MeasurableSet) -> MeasurableSet:
    """Image of an interval set under the transport."""
    parts: list[tuple[int, float, float]] = []
    for comp, a, b in mset.parts:
        images, covered = _clip_to_entries(tmap, comp, a, b)
        if math.isinf(b):
            if not any(math.isinf(hi) for _, _, hi in images):
                raise LogSpaceError("unmapped support")
        elif (b - a) - covered > _COVER_RTOL * (1.0 + (b - a)):
            raise LogSpaceError("unmapped support")
        parts.extend(images)
    return MeasurableSet(tuple(parts))


def lift(tmap: TransportMap, f: StepFunction) -> StepFunction:
    """Carry a step function along the transport: (lift f)(y) = f(T^-1(y)).

    Coefficients are untouched; pieces move to their image intervals.  The
    support must lie in the mapped region up to a 1e-9 relative sliver.
    """
    if len(f.pieces) != tmap.src_components:
        raise LogSpaceError("function/space mismatch")
    buckets: list[list[tuple[float, float, complex]]] = [[] for _ in range(tmap.dst_components)]
    for comp, pieces in enumerate(f.pieces):
        for p in pieces:
            images, covered = _clip_to_entries(tmap, comp, p.start, p.stop)
            if math.isinf(p.stop):
                if not any(math.isinf(hi) for _, _, hi in images):
                    raise LogSpaceError("unmapped support")
            elif (p.stop - p.start) - covered > _COVER_RTOL * (1.0 + (p.stop - p.start)):
                raise LogSpaceError("unmapped support")
            for dst, lo, hi in images:
                if lo < hi:
                    buckets[dst].append((lo, hi, p.coef))
    return StepFunction(tuple(_canonical(b) for b in buckets))


def weighting_isometry(f: StepFunction, h: SpaceDensity | PiecewiseDensity) -> StepFunction:
    """U(f) = f / h; turns the plain norm of f into the h-weighted norm of U(f)."""
    if isinstance(h, PiecewiseDensity):
        h = (h,)
    h = tuple(h)
    if len(h) != len(f.pieces):
        raise LogSpaceError("kind/space mismatch")
    out = []
    for hc, pieces in zip(h, f.pieces):
        raw = []
        for p in pieces:
            if p.start < hc.start or (not math.isinf(p.stop) and p.stop > hc.stop):
                raise LogSpaceError("out of carrier")
            for sub in _slice(hc.pieces, p.start, p.stop):
                raw.append((sub.start, sub.stop, p.coef / sub.value))
        out.append(_canonical(raw))
    return StepFunction(tuple(out))


def _deviation(a: ExtendedReal, b: ExtendedReal) -> float:
    if a.is_finite and b.is_finite:
        return abs(a.value - b.value)
    return 0.0 if a == b else math.inf


def verify_isometry(
    transform: TransportMap | SpaceDensity | PiecewiseDensity,
    src_space: MeasureSpace,
    src_kind: NormKind,
    dst_space: MeasureSpace,
    dst_kind: NormKind,
    samples: int,
    seed: int,
) -> IsometryReport:
    """Worst norm deviation across seeded random step functions.

    `transform` is either a TransportMap (lift) or a density (weighting).
    Sample k draws from its own stream derived from (seed, k), so the report
    does not depend on evaluation order.
    """
    from .sampling import random_step_function

    if samples < 1:
        raise LogSpaceError("sample count must be >= 1")
    worst = -1.0
    worst_case = ""
    for k in range(samples):
        rng = random.Random(seed * 1_000_003 + k)
        f = random_step_function(rng, src_space)
        if isinstance(transform, TransportMap):
            g = lift(transform, f)
        else:
            g = weighting_isometry(f, transform)
        n_src = log_norm(f, src_space, src_kind)
        n_dst = log_norm(g, dst_space, dst_kind)
        dev = _deviation(n_src, n_dst)
        if dev > worst:
            worst = dev
            worst_case = f"sample {k}: source norm {n_src.value!r}, image norm {n_dst.value!r}"
    return IsometryReport(samples, worst, worst_case)


def render_transport(tmap: TransportMap) -> str:
    """One header line per component pair, one line per affine piece."""
    lines = []
    for entry in tmap.entries:
        lines.append(f"component {entry.src} -> {entry.dst}")
        for p in entry.pieces:
            lines.append(
                f"src=[{format_real(p.start)},{format_real(p.stop)})"
                f" slope={format_real(p.slope)} offset={format_real(p.offset)}"
            )
    return "\n".join(lines)
