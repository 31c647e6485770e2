"""Simple stochastic game data model.

A game is an immutable tuple of vertices.  Vertex indices are dense and
follow the natural sort order of the vertex labels, so ``x2`` comes before
``x10``.  Strategies are plain ``dict`` objects mapping a controlled vertex
index to the index of the chosen successor, and value vectors are tuples of
:class:`fractions.Fraction` indexed by vertex.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

Strategy = dict[int, int]
ValueVector = tuple[Fraction, ...]


class GameFormatError(ValueError):
    """Raised when a game or strategy document cannot be decoded."""


class InvalidGameError(ValueError):
    """Raised when a solver receives a game that breaks the model rules."""


class Kind(str, enum.Enum):
    MAX = "max"
    MIN = "min"
    RANDOM = "random"
    SINK = "sink"


class Order(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Vertex:
    label: str
    kind: Kind
    succ: tuple[int, ...] = ()
    # random vertices only, parallel to succ
    probs: tuple[Fraction, ...] = ()
    # sinks only
    value: Fraction | None = None


@dataclass(frozen=True)
class Violation:
    vertex: str
    rule: str

    def __str__(self) -> str:
        return f"{self.vertex}: {self.rule}"


def natural_key(label: str) -> tuple:
    return tuple(int(t) if t.isdigit() else t for t in re.split(r"(\d+)", label))


@dataclass(frozen=True)
class SSG:
    vertices: tuple[Vertex, ...]

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v.label: i for i, v in enumerate(self.vertices)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown vertex {label!r}") from None

    def label(self, i: int) -> str:
        return self.vertices[i].label

    def _of_kind(self, kind: Kind) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.vertices) if v.kind is kind)

    @cached_property
    def max_vertices(self) -> tuple[int, ...]:
        return self._of_kind(Kind.MAX)

    @cached_property
    def min_vertices(self) -> tuple[int, ...]:
        return self._of_kind(Kind.MIN)

    @cached_property
    def random_vertices(self) -> tuple[int, ...]:
        return self._of_kind(Kind.RANDOM)

    @cached_property
    def sinks(self) -> tuple[int, ...]:
        return self._of_kind(Kind.SINK)

    @property
    def n(self) -> int:
        return len(self.max_vertices)

    @property
    def r(self) -> int:
        return len(self.random_vertices)

    @property
    def n_total(self) -> int:
        return len(self.vertices)

    @property
    def d(self) -> int:
        """Largest outdegree among MAX vertices (0 without MAX vertices)."""
        return max((len(self.vertices[x].succ) for x in self.max_vertices), default=0)

    @property
    def is_binary(self) -> bool:
        return all(len(self.vertices[x].succ) == 2 for x in self.max_vertices)

    def strategy(self, choices: Mapping[str, str]) -> Strategy:
        """Build a strategy from a label mapping."""
        return {self.index(x): self.index(y) for x, y in choices.items()}

    def strategy_labels(self, strategy: Mapping[int, int]) -> dict[str, str]:
        return {self.label(x): self.label(y) for x, y in sorted(strategy.items())}

    def values_by_label(self, values: Sequence[Fraction]) -> dict[str, Fraction]:
        return {v.label: values[i] for i, v in enumerate(self.vertices)}

    def labels(self, indices: Iterable[int]) -> list[str]:
        return [self.label(i) for i in sorted(indices)]


class GameBuilder:
    """Incremental, label-based construction of an :class:`SSG`.

    >>> b = GameBuilder()
    >>> b.max("x", "lo", "hi").sink("lo", 0).sink("hi", 1)  # doctest: +ELLIPSIS
    <...>
    >>> b.build().n
    1
    """

    def __init__(self) -> None:
        self._specs: dict[str, tuple] = {}

    def _add(self, label: str, spec: tuple) -> GameBuilder:
        if label in self._specs:
            raise GameFormatError(f"duplicate vertex id {label!r}")
        self._specs[label] = spec
        return self

    def max(self, label: str, *succ: str) -> GameBuilder:
        return self._add(label, (Kind.MAX, tuple(succ), (), None))

    def min(self, label: str, *succ: str) -> GameBuilder:
        return self._add(label, (Kind.MIN, tuple(succ), (), None))

    def random(self, label: str, dist: Mapping[str, object] | Sequence[str]) -> GameBuilder:
        """Add a random vertex; a plain sequence of labels means uniform."""
        if isinstance(dist, Mapping):
            pairs = [(y, parse_rational(p)) for y, p in dist.items()]
        else:
            pairs = [(y, Fraction(1, len(dist))) for y in dist]
        return self._add(
            label, (Kind.RANDOM, tuple(y for y, _ in pairs), tuple(p for _, p in pairs), None)
        )

    def sink(self, label: str, value: object, succ: Sequence[str] = ()) -> GameBuilder:
        return self._add(label, (Kind.SINK, tuple(succ), (), parse_rational(value)))

    def build(self) -> SSG:
        order = sorted(self._specs, key=natural_key)
        index = {label: i for i, label in enumerate(order)}
        vertices = []
        for label in order:
            kind, succ, probs, value = self._specs[label]
            try:
                targets = tuple(index[y] for y in succ)
            except KeyError as exc:
                raise GameFormatError(
                    f"vertex {label!r} references unknown vertex {exc.args[0]!r}"
                ) from None
            vertices.append(Vertex(label, kind, targets, probs, value))
        return SSG(tuple(vertices))


_RATIONAL = re.compile(r"-?\d+(?:/-?\d+)?")


def parse_rational(text: object) -> Fraction:
    """Parse ``"p/q"`` or ``"k"`` (ints and Fractions pass through)."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL.fullmatch(text.strip()):
        raise GameFormatError(f"not a rational literal: {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise GameFormatError(f"zero denominator in {text!r}") from None


def validate(game: SSG) -> list[Violation]:
    """Return every rule violation of ``game``; an empty list means valid."""
    out: list[Violation] = []
    size = len(game.vertices)
    for v in game.vertices:
        bad = [y for y in v.succ if not 0 <= y < size]
        if bad:
            out.append(Violation(v.label, f"successor index out of range {bad}"))
            continue
        if len(set(v.succ)) != len(v.succ):
            out.append(Violation(v.label, "duplicate successor"))
        if any(game.vertices[y] is v for y in v.succ):
            out.append(Violation(v.label, "self-loop"))
        if v.kind in (Kind.MAX, Kind.MIN):
            if len(v.succ) < 2:
                out.append(Violation(v.label, f"{v.kind.name} outdegree < 2"))
        elif v.kind is Kind.RANDOM:
            if not v.succ:
                out.append(Violation(v.label, "RANDOM outdegree < 1"))
            if len(v.probs) != len(v.succ):
                out.append(Violation(v.label, "distribution does not match successors"))
            elif any(p <= 0 for p in v.probs):
                out.append(Violation(v.label, "non-positive probability"))
            if v.probs and sum(v.probs) != 1:
                out.append(Violation(v.label, f"distribution sum {sum(v.probs)} != 1"))
        elif v.kind is Kind.SINK:
            if v.succ:
                out.append(Violation(v.label, "sink outdegree != 0"))
            if v.value is None or not 0 <= v.value <= 1:
                out.append(Violation(v.label, f"sink value {v.value} outside [0, 1]"))
    return out


def check_strategy(game: SSG, strategy: Mapping[int, int], kind: Kind = Kind.MAX) -> None:
    """Raise :class:`InvalidGameError` unless ``strategy`` is total and uses arcs."""
    owned = game.max_vertices if kind is Kind.MAX else game.min_vertices
    missing = set(owned) - set(strategy)
    if missing:
        raise InvalidGameError(f"partial strategy, missing {game.labels(missing)}")
    extra = set(strategy) - set(owned)
    if extra:
        raise InvalidGameError(f"strategy assigns non-{kind.name} vertices {game.labels(extra)}")
    for x, y in strategy.items():
        if y not in game.vertices[x].succ:
            raise InvalidGameError(f"({game.label(x)}, {game.label(y)}) is not an arc")


def initial_strategy(game: SSG, kind: Kind = Kind.MAX) -> Strategy:
    """Every controlled vertex picks its lowest-index successor."""
    owned = game.max_vertices if kind is Kind.MAX else game.min_vertices
    return {x: min(game.vertices[x].succ) for x in owned}


def compare_value_vectors(v: Sequence[Fraction], w: Sequence[Fraction]) -> Order:
    if len(v) != len(w):
        raise ValueError(f"value vectors over different vertex sets ({len(v)} vs {len(w)})")
    ge = all(a >= b for a, b in zip(v, w))
    le = all(a <= b for a, b in zip(v, w))
    if ge and le:
        return Order.EQUAL
    if ge:
        return Order.GREATER
    if le:
        return Order.LESS
    return Order.INCOMPARABLE


# -- serialization -----------------------------------------------------------


def game_to_dict(game: SSG) -> dict:
    rows = []
    for v in sorted(game.vertices, key=lambda u: natural_key(u.label)):
        row: dict = {"id": v.label, "kind": v.kind.value}
        if v.kind is Kind.RANDOM:
            row["succ"] = [[game.label(y), str(p)] for y, p in zip(v.succ, v.probs)]
        elif v.kind is Kind.SINK:
            row["value"] = str(v.value)
            if v.succ:
                row["succ"] = [game.label(y) for y in v.succ]
        else:
            row["succ"] = [game.label(y) for y in v.succ]
        rows.append(row)
    return {"vertices": rows}


def game_from_dict(doc: object) -> SSG:
    if not isinstance(doc, dict) or not isinstance(doc.get("vertices"), list):
        raise GameFormatError('expected an object with a "vertices" list')
    b = GameBuilder()
    for row in doc["vertices"]:
        if not isinstance(row, dict) or not isinstance(row.get("id"), str):
            raise GameFormatError(f"malformed vertex entry {row!r}")
        label, kind, succ = row["id"], row.get("kind"), row.get("succ", [])
        if not isinstance(succ, list):
            raise GameFormatError(f"{label}: succ must be a list")
        if kind in ("max", "min"):
            if not all(isinstance(y, str) for y in succ):
                raise GameFormatError(f"{label}: successors must be vertex ids")
            (b.max if kind == "max" else b.min)(label, *succ)
        elif kind == "random":
            if not all(isinstance(e, list) and len(e) == 2 and isinstance(e[0], str) for e in succ):
                raise GameFormatError(f"{label}: random successors must be [id, probability] pairs")
            pairs = [(y, parse_rational(p)) for y, p in succ]
            b._add(label, (Kind.RANDOM, tuple(y for y, _ in pairs), tuple(p for _, p in pairs), None))
        elif kind == "sink":
            if "value" not in row:
                raise GameFormatError(f"{label}: sink without value")
            b.sink(label, row["value"], succ)
        else:
            raise GameFormatError(f"{label}: unknown vertex kind {kind!r}")
    return b.build()


def _loads(data: bytes | str) -> object:
    try:
        return json.loads(data)
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise GameFormatError(f"malformed JSON: {exc}") from None


def parse_game(data: bytes | str) -> SSG:
    return game_from_dict(_loads(data))


def serialize_game(game: SSG) -> bytes:
    rows = game_to_dict(game)["vertices"]
    body = ",\n".join("  " + json.dumps(row) for row in rows)
    return ('{"vertices": [\n' + body + "\n]}\n").encode()


def parse_strategy(game: SSG, data: bytes | str, kind: Kind = Kind.MAX) -> Strategy:
    doc = _loads(data)
    if not isinstance(doc, dict):
        raise GameFormatError("strategy must be a JSON object")
    strategy: Strategy = {}
    for x, y in doc.items():
        try:
            strategy[game.index(x)] = game.index(y)
        except (KeyError, TypeError):
            raise GameFormatError(f"unknown vertex in strategy entry {x!r}: {y!r}") from None
    try:
        check_strategy(game, strategy, kind)
    except InvalidGameError as exc:
        raise GameFormatError(str(exc)) from None
    return strategy


def serialize_strategy(game: SSG, strategy: Mapping[int, int]) -> bytes:
    items = sorted(strategy.items(), key=lambda kv: natural_key(game.label(kv[0])))
    return (json.dumps({game.label(x): game.label(y) for x, y in items}, indent=1) + "\n").encode()


def values_to_json(game: SSG, values: Sequence[Fraction]) -> dict[str, str]:
    return {v.label: str(values[i]) for i, v in enumerate(game.vertices)}
