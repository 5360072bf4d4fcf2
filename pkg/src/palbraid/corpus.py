"""The bundled table of strongly invertible knots and its batch check.

Each corpus row gives a pair of palindromic braids and the knot type its
equivariant closure should have.  The expected knot type is resolved to a
reference PD code shipped with the package, and the pair's closure is
compared against that diagram with invariants computed by this library.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .braid import parse_word
from .closure import EquivariantPair, LinkDiagram, closure_diagram, component_count, diagram_from_pd
from .errors import BraidError, ParseError
from .garside import is_palindromic
from .invariants import alexander, alexander_from_diagram, jones
from .laurent import LaurentPoly

__all__ = [
    "CorpusEntry",
    "CheckResult",
    "CorpusReport",
    "CHECKS",
    "load_corpus",
    "parse_corpus",
    "load_fixtures",
    "reference_diagram",
    "corpus_verify",
    "bundled_corpus_path",
]

CHECKS = ("palindromic", "components", "jones", "alexander")

# alternative names accepted in the expected-knot column
_ALIASES = {"unknot": "0_1", "trefoil": "3_1", "figure-eight": "4_1", "figure_eight": "4_1"}


def _data_text(name: str) -> str:
    return resources.files("palbraid").joinpath("data").joinpath(name).read_text(encoding="utf-8")


def bundled_corpus_path() -> Path:
    return Path(str(resources.files("palbraid").joinpath("data").joinpath("corpus.txt")))


def load_fixtures() -> dict[str, LinkDiagram]:
    """Reference diagrams keyed by knot name (plus the crossing-free unknot)."""
    out: dict[str, LinkDiagram] = {"0_1": LinkDiagram((), free_loops=1)}
    for line in _data_text("fixtures.txt").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, *crossings = line.split(";")
        out[name] = diagram_from_pd([tuple(int(x) for x in c.split()) for c in crossings])
    return out


_FIXTURES: dict[str, LinkDiagram] | None = None


def _fixtures() -> dict[str, LinkDiagram]:
    global _FIXTURES
    if _FIXTURES is None:
        _FIXTURES = load_fixtures()
    return _FIXTURES


def reference_diagram(knot: str) -> LinkDiagram:
    key = _ALIASES.get(knot, knot)
    try:
        return _fixtures()[key]
    except KeyError:
        raise KeyError(f"no reference diagram for {knot!r}") from None


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    strands: int
    alpha: str
    beta: str
    expected_knot: str
    line: int | None = None

    def pair(self) -> EquivariantPair:
        return EquivariantPair(parse_word(self.alpha, self.strands), parse_word(self.beta, self.strands))


def parse_corpus(text: str) -> list[CorpusEntry]:
    """Rows ``name;strands;alpha;beta;expected``; ``#`` comments and blank lines skipped."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(";")]
        if len(fields) != 5:
            raise ParseError(f"expected 5 ';'-separated fields, got {len(fields)}", lineno)
        name, strands_text, alpha, beta, expected = fields
        if not name:
            raise ParseError("empty entry name", lineno)
        try:
            strands = int(strands_text)
        except ValueError:
            raise ParseError(f"bad strand count {strands_text!r}", lineno) from None
        if strands < 1:
            raise ParseError(f"strand count must be positive, got {strands}", lineno)
        for which, word in (("first", alpha), ("second", beta)):
            try:
                parse_word(word, strands)
            except BraidError as exc:
                raise ParseError(f"{which} word: {exc}", lineno) from None
        if _ALIASES.get(expected, expected) not in _fixtures():
            raise ParseError(f"no reference diagram for {expected!r}", lineno)
        entries.append(CorpusEntry(name, strands, alpha, beta, expected, lineno))
    return entries


def load_corpus(path: str | Path | None = None) -> list[CorpusEntry]:
    """Load a corpus file; the bundled table when ``path`` is None."""
    if path is None:
        return parse_corpus(_data_text("corpus.txt"))
    return parse_corpus(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class CheckResult:
    name: str
    check: str
    passed: bool
    detail: str

    def to_tsv(self) -> str:
        return f"{self.name}\t{self.check}\t{'PASS' if self.passed else 'FAIL'}\t{self.detail}"


@dataclass(frozen=True)
class CorpusReport:
    results: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def entry_passed(self, name: str) -> bool:
        return all(r.passed for r in self.results if r.name == name)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def to_tsv(self) -> str:
        return "\n".join(r.to_tsv() for r in self.results)

    def to_text(self) -> str:
        """One line per entry: name, PASS/FAIL, then any failing checks."""
        names = list(dict.fromkeys(r.name for r in self.results))
        lines = []
        for name in names:
            rows = [r for r in self.results if r.name == name]
            bad = [f"{r.check}: {r.detail}" for r in rows if not r.passed]
            status = "PASS" if not bad else "FAIL"
            lines.append(f"{name} {status}" + ("" if not bad else " (" + "; ".join(bad) + ")"))
        return "\n".join(lines)


def _mirror(p: LaurentPoly) -> LaurentPoly:
    return p.substitute_power(-1)


def _verify_entry(e: CorpusEntry) -> list[CheckResult]:
    p = e.pair()
    ref = reference_diagram(e.expected_knot)
    out = []

    bad = [w for w, word in (("first", p.alpha), ("second", p.beta)) if not is_palindromic(word)]
    out.append(
        CheckResult(e.name, "palindromic", not bad, "both" if not bad else "not palindromic: " + ",".join(bad))
    )

    k = component_count(p)
    out.append(CheckResult(e.name, "components", k == 1, f"{k}"))

    got, want = jones(closure_diagram(p)), jones(ref)
    if got == want:
        out.append(CheckResult(e.name, "jones", True, "match"))
    elif got == _mirror(want):
        out.append(CheckResult(e.name, "jones", True, "mirror"))
    else:
        out.append(CheckResult(e.name, "jones", False, f"got {got}; expected {want} or its mirror"))

    got_a = alexander(p)
    if k != 1:
        out.append(CheckResult(e.name, "alexander", False, f"closure is not a knot: {got_a}"))
    else:
        want_a = alexander_from_diagram(ref)
        ok = got_a == want_a
        out.append(
            CheckResult(e.name, "alexander", ok, "match" if ok else f"got {got_a}; expected {want_a}")
        )
    return out


def corpus_verify(entries: list[CorpusEntry]) -> CorpusReport:
    """Run the four checks on every entry; report order follows input order."""
    results: list[CheckResult] = []
    for e in entries:
        results.extend(_verify_entry(e))
    return CorpusReport(tuple(results))
