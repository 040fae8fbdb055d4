"""Text formats for monomials and sets.

* monomial: space-separated exponents, ``"3 1 0"`` is ``x1^3*x2``;
* set file: one monomial per line, ``#`` starts a comment, blank lines ignored;
* inline set / census witness line: monomials separated by ``;``.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .errors import ParseError
from .monomials import Monomial, MonomialSet, RingSpec


def parse_monomial(text: str, line: int | None = None) -> Monomial:
    toks = text.split()
    if not toks:
        raise ParseError("empty monomial", line)
    try:
        exps = [int(tok) for tok in toks]
    except ValueError:
        raise ParseError(f"non-integer exponent in {text.strip()!r}", line) from None
    if any(e < 0 for e in exps):
        raise ParseError(f"negative exponent in {text.strip()!r}", line)
    return Monomial(exps)


def format_monomial(m: Iterable[int]) -> str:
    return " ".join(str(e) for e in m)


def format_set_line(members: Iterable[Iterable[int]]) -> str:
    """Members joined by ``"; "`` in descending lex order."""
    return "; ".join(format_monomial(m) for m in sorted((tuple(m) for m in members), reverse=True))


def _strip_comment(raw: str) -> str:
    return raw.split("#", 1)[0].strip()


def parse_monomials(text: str) -> list[Monomial]:
    """Parse inline (``;``-separated) or multi-line set text into monomials.

    Errors carry the 1-based line number of the offending line.
    """
    out: list[Monomial] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        if not body:
            continue
        for chunk in body.split(";"):
            if chunk.strip():
                out.append(parse_monomial(chunk, lineno))
    return out


def parse_set(text: str, ring: RingSpec, degree: int | None = None) -> MonomialSet:
    mons = parse_monomials(text)
    for i, m in enumerate(mons):
        if len(m) != ring.n:
            raise ParseError(f"monomial {format_monomial(m)!r} has {len(m)} exponents, ring has {ring.n}")
    if len(set(mons)) != len(mons):
        raise ParseError("duplicate monomial in set")
    return MonomialSet.of(ring, mons, degree)


def read_set_file(path: str | Path, ring: RingSpec, degree: int | None = None) -> MonomialSet:
    return parse_set(Path(path).read_text(encoding="utf-8"), ring, degree)


def write_set_file(path: str | Path, M: MonomialSet) -> None:
    lines = [f"# ring {M.ring}  degree {M.degree}  size {len(M)}"]
    lines += [format_monomial(m) for m in M.sorted()]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
