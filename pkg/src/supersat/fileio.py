"""Text formats for set families, permutation families and coset specs.

Each format has a header line (``n k`` for sets, ``n`` otherwise) followed by
one item per line. Blank lines and ``#`` comments are skipped.
"""
from __future__ import annotations

from .permfam import CosetSpec, PermFamily
from .setfam import SetFamily, mask_of


def _lines(text: str):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def _ints(line: str, sep=None) -> list[int]:
    try:
        return [int(x) for x in (line.split(sep) if sep else line.split()) if x.strip()]
    except ValueError as exc:
        raise ValueError(f"bad line {line!r}") from exc


def parse_family(text: str) -> SetFamily:
    lines = _lines(text)
    header = _ints(next(lines, ""))
    if len(header) != 2:
        raise ValueError("family header must be 'n k'")
    n, k = header
    return SetFamily(n, k, tuple(mask_of(_ints(line, ",")) for line in lines))


def format_family(F: SetFamily) -> str:
    out = [f"{F.n} {F.k}"]
    out += [",".join(map(str, s)) for s in F.sets()]
    return "\n".join(out) + "\n"


def parse_perms(text: str) -> PermFamily:
    lines = _lines(text)
    header = _ints(next(lines, ""))
    if len(header) != 1:
        raise ValueError("permutation header must be 'n'")
    return PermFamily(header[0], tuple(tuple(_ints(line)) for line in lines))


def format_perms(F: PermFamily) -> str:
    return "\n".join([str(F.n)] + [" ".join(map(str, p)) for p in F.members]) + "\n"


def parse_spec(text: str) -> CosetSpec:
    lines = _lines(text)
    header = _ints(next(lines, ""))
    if len(header) != 1:
        raise ValueError("spec header must be 'n'")
    pts = []
    for line in lines:
        pair = _ints(line)
        if len(pair) != 2:
            raise ValueError(f"spec line {line!r} must be 'i j'")
        pts.append(tuple(pair))
    return CosetSpec(header[0], tuple(pts))


def format_spec(spec: CosetSpec) -> str:
    return "\n".join([str(spec.n)] + [f"{i} {j}" for i, j in spec.points]) + "\n"


def read_text(path: str) -> str:
    with open(path) as fh:
        return fh.read()


def write_text(path: str, text: str) -> None:
    with open(path, "w") as fh:
        fh.write(text)
