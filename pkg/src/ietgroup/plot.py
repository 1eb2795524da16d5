"""Graph data for interval exchanges, one line segment per interval."""

from __future__ import annotations

from dataclasses import dataclass

from .iet import IntervalExchange
from .scalar import Scalar, format_scalar

__all__ = ["Segment", "plot_segments", "segments_tsv"]

DIGITS = 30


@dataclass(frozen=True)
class Segment:
    """The graph ``y = x + offset`` over ``[x_left, x_right)``."""

    x_left: Scalar
    x_right: Scalar
    offset: Scalar

    @property
    def y_left(self) -> Scalar:
        return self.x_left + self.offset

    @property
    def y_right(self) -> Scalar:
        return self.x_right + self.offset


def plot_segments(f: IntervalExchange) -> list[Segment]:
    return [Segment(lo, hi, w) for lo, hi, w in f.pieces()]


def segments_tsv(f: IntervalExchange) -> str:
    # left endpoints are attained, right endpoints are open
    cols = ["x_left", "x_right", "offset", "y_left", "y_right"]
    lines = ["\t".join(cols + [c + "_dec" for c in cols])]
    for seg in plot_segments(f):
        vals = [seg.x_left, seg.x_right, seg.offset, seg.y_left, seg.y_right]
        lines.append("\t".join([format_scalar(v) for v in vals] + [v.decimal(DIGITS) for v in vals]))
    return "\n".join(lines) + "\n"
