"""Pluggable measurement scales and their unit-interval normalization.

A scale is either ordinal (ordered labels) or continuous (a closed numeric
interval). Ordinal labels normalize to (i+1)/(k+1) so that no label maps to
0 or 1; this keeps negative influences effective at the extremes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from numbers import Real

from .errors import InvalidMeasure


@dataclass(frozen=True)
class Scale:
    kind: str  # "ordinal" | "continuous"
    labels: tuple[str, ...] = ()
    lo: float = 0.0
    hi: float = 1.0

    @staticmethod
    def ordinal(labels: tuple[str, ...] | list[str]) -> "Scale":
        labels = tuple(labels)
        if len(labels) < 2 or len(set(labels)) != len(labels):
            raise InvalidMeasure("ordinal scale needs >= 2 distinct labels")
        return Scale("ordinal", labels=labels)

    @staticmethod
    def continuous(lo: float, hi: float) -> "Scale":
        if not lo < hi:
            raise InvalidMeasure(f"continuous scale needs lo < hi, got [{lo}, {hi}]")
        return Scale("continuous", lo=float(lo), hi=float(hi))


LMH = Scale.ordinal(("Low", "Medium", "High"))
PERCENT = Scale.continuous(0.0, 100.0)
UNIT = Scale.continuous(0.0, 1.0)

NAMED_SCALES: dict[str, Scale] = {"lmh": LMH, "0-100": PERCENT}


def scale_by_name(name: str) -> Scale:
    try:
        return NAMED_SCALES[name]
    except KeyError:
        raise InvalidMeasure(f"unknown scale name {name!r}") from None


@dataclass(frozen=True)
class MeasureValue:
    scale: Scale
    raw: str | float

    def __post_init__(self) -> None:
        if self.scale.kind == "ordinal":
            if self.raw not in self.scale.labels:
                raise InvalidMeasure(
                    f"label {self.raw!r} not on scale {list(self.scale.labels)}"
                )
        else:
            if not isinstance(self.raw, Real):
                raise InvalidMeasure(f"continuous measure needs a number, got {self.raw!r}")
            if not self.scale.lo <= float(self.raw) <= self.scale.hi:
                raise InvalidMeasure(
                    f"value {self.raw} outside [{self.scale.lo}, {self.scale.hi}]"
                )


def normalize(value: MeasureValue) -> float:
    """Map a measure into the unit interval, monotonically."""
    scale = value.scale
    if scale.kind == "ordinal":
        i = scale.labels.index(value.raw)
        return (i + 1) / (len(scale.labels) + 1)
    return (float(value.raw) - scale.lo) / (scale.hi - scale.lo)


def to_scale(x: float, scale: Scale) -> MeasureValue:
    """Inverse of normalize: nearest label for ordinal scales, ties upward."""
    if not 0.0 <= x <= 1.0:
        raise InvalidMeasure(f"unit-interval value expected, got {x}")
    if scale.kind == "continuous":
        return MeasureValue(scale, scale.lo + x * (scale.hi - scale.lo))
    k = len(scale.labels)
    best_i = 0
    best_d = float("inf")
    for i in range(k):
        d = abs(x - (i + 1) / (k + 1))
        # <= keeps the later (higher) label on exact ties
        if d <= best_d:
            best_d, best_i = d, i
    return MeasureValue(scale, scale.labels[best_i])


_ORD_RE = re.compile(r"^ord\[([^\]]+)\]$")
_CONT_RE = re.compile(r"^cont\[([^,\]]+),([^,\]]+)\]$")


def _format_number(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else repr(float(x))


def parse_measure(text: str, line: int | None = None) -> MeasureValue:
    """Parse the ONT-I measure syntax, e.g. lmh:High, 0-100:85, ord[A|B]:B."""
    head, sep, raw = text.partition(":")
    if not sep or not raw:
        raise InvalidMeasure(f"malformed measure {text!r}, expected SCALE:VALUE", line)
    try:
        if head in NAMED_SCALES:
            scale = NAMED_SCALES[head]
        elif m := _ORD_RE.match(head):
            scale = Scale.ordinal(tuple(m.group(1).split("|")))
        elif m := _CONT_RE.match(head):
            scale = Scale.continuous(float(m.group(1)), float(m.group(2)))
        else:
            raise InvalidMeasure(f"unknown scale syntax {head!r}")
        if scale.kind == "continuous":
            return MeasureValue(scale, float(raw))
        return MeasureValue(scale, raw)
    except ValueError:
        raise InvalidMeasure(f"malformed measure {text!r}", line) from None
    except InvalidMeasure as exc:
        if exc.line is None and line is not None:
            raise InvalidMeasure(str(exc), line) from None
        raise


def format_measure(value: MeasureValue) -> str:
    """Canonical inverse of parse_measure (named scales kept by name)."""
    scale = value.scale
    for name, named in NAMED_SCALES.items():
        if scale == named:
            head = name
            break
    else:
        if scale.kind == "ordinal":
            head = f"ord[{'|'.join(scale.labels)}]"
        else:
            head = f"cont[{_format_number(scale.lo)},{_format_number(scale.hi)}]"
    raw = value.raw if scale.kind == "ordinal" else _format_number(float(value.raw))
    return f"{head}:{raw}"
