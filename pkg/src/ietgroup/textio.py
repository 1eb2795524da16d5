"""Line-oriented text formats for interval exchanges, step functions and flows.

An interval exchange file looks like::

    iet v1
    field Q
    n 4
    perm 3 2 1 4
    len 1/4 1/4 1/4 1/4

``field Qsqrt 2`` declares the quadratic field the scalars live in.  Blank
lines and ``#`` comments are ignored.  Non-canonical input is accepted and
canonicalized with a :class:`NonCanonicalInputWarning`.
"""

from __future__ import annotations

import os
import warnings
from pathlib import Path
from typing import Iterable, Optional, Union
from urllib.parse import unquote

from .flows import FlowSpec
from .iet import IntervalExchange, Permutation, canonicalize
from .metric import StepFunction
from .scalar import Scalar, ScalarParseError, format_scalar, is_squarefree, parse_scalar

__all__ = [
    "FormatError",
    "NonCanonicalInputWarning",
    "format_iet",
    "parse_iet",
    "read_iet",
    "write_iet",
    "format_stepfn",
    "parse_stepfn",
    "read_stepfn",
    "format_flow",
    "parse_flow",
    "read_flow",
    "sample_filename",
    "read_samples",
    "write_samples",
]

PathLike = Union[str, os.PathLike]


class FormatError(ValueError):
    """A file does not follow its declared format."""

    def __init__(self, source: str, message: str):
        self.source = source
        super().__init__(f"{source}: {message}")


class NonCanonicalInputWarning(UserWarning):
    """An interval exchange was given in non-canonical coordinates."""


def _field_line(values: Iterable[Scalar]) -> str:
    radicands = {v.d for v in values if v.d is not None}
    if not radicands:
        return "field Q"
    if len(radicands) > 1:
        raise ValueError(f"scalars from several fields: {sorted(radicands)}")
    return f"field Qsqrt {radicands.pop()}"


def _records(text: str, source: str, magic: str) -> dict[str, tuple[int, list[str]]]:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line.split()))
    if not lines or lines[0][1] != magic.split():
        raise FormatError(source, f"expected header {magic!r}")
    out: dict[str, tuple[int, list[str]]] = {}
    for lineno, words in lines[1:]:
        key = words[0]
        if key in out:
            raise FormatError(f"{source}:{lineno}", f"duplicate {key!r} line")
        out[key] = (lineno, words[1:])
    return out


def _field(records, source) -> Optional[int]:
    if "field" not in records:
        raise FormatError(source, "missing 'field' line")
    lineno, words = records["field"]
    if words == ["Q"]:
        return None
    if len(words) == 2 and words[0] == "Qsqrt":
        try:
            d = int(words[1])
        except ValueError:
            raise FormatError(f"{source}:{lineno}", f"bad radicand {words[1]!r}") from None
        if d < 2 or not is_squarefree(d):
            raise FormatError(f"{source}:{lineno}", f"radicand {d} is not squarefree or is a square")
        return d
    raise FormatError(f"{source}:{lineno}", f"unknown field {' '.join(words)!r}")


def _scalars(records, key, source, radicand) -> list[Scalar]:
    if key not in records:
        raise FormatError(source, f"missing {key!r} line")
    lineno, words = records[key]
    out = []
    for w in words:
        try:
            x = parse_scalar(w)
        except ScalarParseError as exc:
            raise FormatError(f"{source}:{lineno}", str(exc)) from None
        if x.d is not None and x.d != radicand:
            field = "Q" if radicand is None else f"Qsqrt {radicand}"
            raise FormatError(f"{source}:{lineno}", f"scalar {w!r} is not in the declared field {field}")
        out.append(x)
    return out


# -- interval exchanges ---------------------------------------------------


def format_iet(f: IntervalExchange) -> str:
    return (
        "iet v1\n"
        f"{_field_line(f.lengths)}\n"
        f"n {f.n}\n"
        f"perm {' '.join(map(str, f.perm.images))}\n"
        f"len {' '.join(format_scalar(v) for v in f.lengths)}\n"
    )


def parse_iet(text: str, source: str = "<iet>") -> IntervalExchange:
    records = _records(text, source, "iet v1")
    radicand = _field(records, source)
    lengths = _scalars(records, "len", source, radicand)
    if "perm" not in records:
        raise FormatError(source, "missing 'perm' line")
    lineno, words = records["perm"]
    try:
        perm = Permutation(tuple(int(w) for w in words))
    except ValueError as exc:
        raise FormatError(f"{source}:{lineno}", str(exc)) from None
    if "n" in records:
        n_line, n_words = records["n"]
        if n_words != [str(len(perm))]:
            raise FormatError(f"{source}:{n_line}", f"n {' '.join(n_words)} does not match {len(perm)} permutation entries")
    if len(lengths) != len(perm):
        raise FormatError(source, f"{len(perm)} permutation entries but {len(lengths)} lengths")
    if any(v < 0 for v in lengths):
        raise FormatError(source, "negative length")
    if sum(lengths, Scalar(0)) != 1:
        raise FormatError(source, f"lengths sum to {sum(lengths, Scalar(0))}, not 1")
    f = canonicalize(perm, lengths)
    if f.perm != perm or list(f.lengths) != lengths:
        warnings.warn(f"{source}: non-canonical input canonicalized to n={f.n}", NonCanonicalInputWarning, stacklevel=2)
    return f


def read_iet(path: PathLike) -> IntervalExchange:
    path = Path(path)
    return parse_iet(path.read_text(), str(path))


def write_iet(f: IntervalExchange, path: PathLike) -> None:
    Path(path).write_text(format_iet(f))


# -- step functions ------------------------------------------------------


def format_stepfn(phi: StepFunction) -> str:
    return (
        "stepfn v1\n"
        f"{_field_line(phi.breakpoints + phi.values)}\n"
        f"breaks {' '.join(format_scalar(b) for b in phi.breakpoints)}\n"
        f"values {' '.join(format_scalar(v) for v in phi.values)}\n"
    )


def parse_stepfn(text: str, source: str = "<stepfn>") -> StepFunction:
    records = _records(text, source, "stepfn v1")
    radicand = _field(records, source)
    breaks = _scalars(records, "breaks", source, radicand)
    values = _scalars(records, "values", source, radicand)
    try:
        return StepFunction(tuple(breaks), tuple(values))
    except ValueError as exc:
        raise FormatError(source, str(exc)) from None


def read_stepfn(path: PathLike) -> StepFunction:
    path = Path(path)
    return parse_stepfn(path.read_text(), str(path))


# -- flows ---------------------------------------------------------------


def format_flow(spec: FlowSpec, conjugator_path: Optional[str] = None) -> str:
    """Flow file text; a conjugator is written as a reference to ``conjugator_path``."""
    if spec.conjugator is not None and conjugator_path is None:
        raise ValueError("a conjugated flow needs a path for its conjugator file")
    lines = [
        "flow v1",
        _field_line(spec.base_lengths + spec.rates),
        f"len {' '.join(format_scalar(v) for v in spec.base_lengths)}",
        f"rates {' '.join(format_scalar(v) for v in spec.rates)}",
    ]
    if conjugator_path is not None:
        lines.append(f"conjugator {conjugator_path}")
    return "\n".join(lines) + "\n"


def parse_flow(text: str, source: str = "<flow>", base_dir: Optional[PathLike] = None) -> FlowSpec:
    """Parse a flow file; a relative conjugator path is resolved against ``base_dir``."""
    records = _records(text, source, "flow v1")
    radicand = _field(records, source)
    lengths = _scalars(records, "len", source, radicand)
    rates = _scalars(records, "rates", source, radicand)
    h = None
    if "conjugator" in records:
        lineno, words = records["conjugator"]
        if len(words) != 1:
            raise FormatError(f"{source}:{lineno}", "conjugator line takes exactly one path")
        path = Path(words[0])
        if not path.is_absolute() and base_dir is not None:
            path = Path(base_dir) / path
        if not path.exists():
            raise FormatError(f"{source}:{lineno}", f"conjugator file {str(path)!r} not found")
        h = read_iet(path)
    try:
        return FlowSpec(tuple(lengths), tuple(rates), h)
    except ValueError as exc:
        raise FormatError(source, str(exc)) from None


def read_flow(path: PathLike) -> FlowSpec:
    path = Path(path)
    return parse_flow(path.read_text(), str(path), path.parent)


# -- sample directories ----------------------------------------------------
#
# One file per sample, named ``t=<scalar>.iet``.  File names cannot hold '/',
# so fraction bars are written as '_' (``t=1_4.iet`` is time 1/4); '%2F' is
# also understood.


def sample_filename(t: Scalar) -> str:
    return f"t={format_scalar(t).replace('/', '_')}.iet"


def _time_from_name(name: str) -> Scalar:
    if not (name.startswith("t=") and name.endswith(".iet")):
        raise FormatError(name, "sample files must be named t=<scalar>.iet")
    text = unquote(name[2:-4]).replace("_", "/")
    try:
        return parse_scalar(text)
    except ScalarParseError as exc:
        raise FormatError(name, str(exc)) from None


def read_samples(directory: PathLike) -> list[tuple[Scalar, IntervalExchange]]:
    directory = Path(directory)
    if not directory.is_dir():
        raise FormatError(str(directory), "not a directory")
    out = []
    for path in sorted(directory.iterdir()):
        if path.suffix != ".iet":
            continue
        out.append((_time_from_name(path.name), read_iet(path)))
    return out


def write_samples(samples: Iterable[tuple[Scalar, IntervalExchange]], directory: PathLike) -> None:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for t, f in samples:
        write_iet(f, directory / sample_filename(t))
