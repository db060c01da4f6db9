"""Digital series/parallel selection of a bank of identical coils.

Each coil ``i`` carries two MEMS switches:

* ``psw[i]`` (parallel switch), open or closed. Closed ties the coil's first
  terminal to the next coil's first terminal.
* ``pssw[i]`` (parallel/series switch), open, ``UP`` or ``DOWN``. ``UP``
  chains the next coil in series; ``DOWN`` completes a parallel connection.

A coil is *series-selected* when ``psw`` is open and ``pssw`` is ``UP``, and
*parallel-selected* when ``psw`` is closed and ``pssw`` is ``DOWN``. The
reachable circuits are always a chain of ``k`` series coils followed by at
most one bank of ``m`` coils in parallel, so a whole setting reduces to the
pair ``(k, m)``.

Compact text form of a switch word: one character per coil, in coil order::

    S   series-select   (psw open,   pssw up)
    P   parallel-select (psw closed, pssw down)
    O   disconnected    (psw open,   pssw open)

e.g. ``"SPPPP"`` is one series coil feeding a four-coil parallel bank.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import NoPathError, SingularNetworkError, SwitchConflictError, ValidationError

IN = "IN"
OUT = "OUT"


class ParallelSwitch(enum.Enum):
    OPEN = "open"
    CLOSED = "closed"


class SeriesSwitch(enum.Enum):
    OPEN = "open"
    UP = "up"
    DOWN = "down"


_TEXT_TO_STATE = {
    "S": (ParallelSwitch.OPEN, SeriesSwitch.UP),
    "P": (ParallelSwitch.CLOSED, SeriesSwitch.DOWN),
    "O": (ParallelSwitch.OPEN, SeriesSwitch.OPEN),
}
_STATE_TO_TEXT = {v: k for k, v in _TEXT_TO_STATE.items()}


@dataclass(frozen=True)
class SwitchWord:
    """Per-coil switch states for an ``n``-coil bank."""

    psw: tuple[ParallelSwitch, ...]
    pssw: tuple[SeriesSwitch, ...]

    def __post_init__(self):
        object.__setattr__(self, "psw", tuple(ParallelSwitch(s) for s in self.psw))
        object.__setattr__(self, "pssw", tuple(SeriesSwitch(s) for s in self.pssw))
        if len(self.psw) < 1:
            raise ValidationError("a switch word needs at least one coil")
        if len(self.psw) != len(self.pssw):
            raise ValidationError(
                f"psw and pssw lengths differ ({len(self.psw)} vs {len(self.pssw)})"
            )

    @property
    def n(self) -> int:
        return len(self.psw)

    @classmethod
    def from_text(cls, text: str) -> "SwitchWord":
        """Parse the compact ``S``/``P``/``O`` form (case-insensitive, whitespace ignored)."""
        chars = "".join(text.split()).upper()
        bad = sorted(set(chars) - set(_TEXT_TO_STATE))
        if bad:
            raise ValidationError(f"switch word may only contain S, P, O; got {''.join(bad)!r}")
        states = [_TEXT_TO_STATE[c] for c in chars]
        return cls(tuple(s[0] for s in states), tuple(s[1] for s in states))

    def to_text(self) -> str:
        """Compact form; raises for states that have no single-letter code."""
        try:
            return "".join(_STATE_TO_TEXT[s] for s in zip(self.psw, self.pssw))
        except KeyError as exc:
            raise ValidationError(f"state {exc.args[0]} has no compact text form") from None


@dataclass(frozen=True)
class SwitchConfiguration:
    """Canonical ``(k series coils, m-way parallel bank)`` state of an n-coil bank.

    ``notes`` holds diagnostics produced while canonicalizing a switch word;
    it does not take part in equality.
    """

    series_count: int
    parallel_count: int
    n: int
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        k, m, n = self.series_count, self.parallel_count, self.n
        for name, value in (("series_count", k), ("parallel_count", m), ("n", n)):
            if isinstance(value, bool) or int(value) != value:
                raise ValidationError(f"{name} must be an integer, got {value!r}")
        if n < 1:
            raise ValidationError(f"n must be >= 1, got {n}")
        if k < 0 or m < 0:
            raise ValidationError(f"counts must be non-negative, got k={k}, m={m}")
        if k == 0 and m == 0:
            raise ValidationError("configuration selects no coils")
        if m == 1:
            raise ValidationError("a one-coil parallel bank is a series coil; use m=0, k+1")
        if k + m > n:
            raise ValidationError(f"k + m = {k + m} exceeds the {n} available coils")

    def factor(self) -> float:
        """Total inductance as a multiple of the unit coil inductance."""
        return self.series_count + (1.0 / self.parallel_count if self.parallel_count else 0.0)


def parse_switch_word(word: SwitchWord | str) -> SwitchConfiguration:
    """Reduce per-coil switch states to a canonical configuration.

    Raises:
        SwitchConflictError: a coil has ``psw`` closed and ``pssw`` up.
        NoPathError: no coil is selected, so IN and OUT are not connected.
        ValidationError: parallel-selected coils are not consecutive.
    """
    if isinstance(word, str):
        word = SwitchWord.from_text(word)
    notes = []
    series = 0
    parallel_idx = []
    for i, (p, s) in enumerate(zip(word.psw, word.pssw)):
        if p is ParallelSwitch.CLOSED and s is SeriesSwitch.UP:
            raise SwitchConflictError(f"coil {i + 1}: parallel switch closed while PSSW selects series")
        if p is ParallelSwitch.OPEN and s is SeriesSwitch.UP:
            series += 1
        elif p is ParallelSwitch.CLOSED and s is SeriesSwitch.DOWN:
            parallel_idx.append(i)
        elif (p, s) != (ParallelSwitch.OPEN, SeriesSwitch.OPEN):
            notes.append(f"coil {i + 1}: incomplete state ({p.value}, {s.value}) treated as disconnected")
    if series == 0 and not parallel_idx:
        raise NoPathError("no coil is selected; IN is not connected to OUT")
    if parallel_idx and parallel_idx[-1] - parallel_idx[0] + 1 != len(parallel_idx):
        raise ValidationError(
            f"parallel-selected coils must be consecutive, got positions {[i + 1 for i in parallel_idx]}"
        )
    m = len(parallel_idx)
    if m == 1:
        notes.append(f"coil {parallel_idx[0] + 1}: one-coil parallel bank canonicalized to series")
        series += 1
        m = 0
    return SwitchConfiguration(series, m, word.n, tuple(notes))


def word_for_config(config: SwitchConfiguration) -> SwitchWord:
    """Synthesize a switch word realizing ``config`` (series coils first, then the bank)."""
    k, m = config.series_count, config.parallel_count
    return SwitchWord.from_text("S" * k + "P" * m + "O" * (config.n - k - m))


def total_inductance(config: SwitchConfiguration, unit_L: float) -> float:
    """Closed-form ``k*L + L/m`` (bank term only when ``m >= 2``)."""
    if not unit_L > 0:
        raise ValidationError(f"unit inductance must be positive, got {unit_L!r}")
    total = config.series_count * unit_L
    if config.parallel_count >= 2:
        total += unit_L / config.parallel_count
    return total


def step_count(n: int) -> int:
    """Number of distinct inductance steps reachable with ``n`` coils."""
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValidationError(f"coil count must be an integer >= 1, got {n!r}")
    n = int(n)
    return n * (n + 1) // 2


@dataclass(frozen=True)
class Step:
    config: SwitchConfiguration
    factor: float


@dataclass(frozen=True)
class StepTable:
    """All reachable configurations of an ``n``-coil bank, ascending by factor."""

    n: int
    unit_L: float
    steps: tuple[Step, ...]

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    @property
    def factors(self) -> np.ndarray:
        return np.array([s.factor for s in self.steps])

    @property
    def inductances(self) -> np.ndarray:
        return self.factors * self.unit_L


def valid_configurations(n: int):
    """Yield every valid ``(k, m)`` configuration for ``n`` coils."""
    step_count(n)
    for k in range(n + 1):
        for m in [0, *range(2, n - k + 1)]:
            if k == 0 and m == 0:
                continue
            yield SwitchConfiguration(k, m, n)


def enumerate_steps(n: int, unit_L: float = 1.0) -> StepTable:
    if not unit_L > 0:
        raise ValidationError(f"unit inductance must be positive, got {unit_L!r}")
    steps = sorted((Step(c, c.factor()) for c in valid_configurations(n)), key=lambda s: s.factor)
    factors = [s.factor for s in steps]
    # k + 1/m has a distinct integer part per k and fractional part < 1 for m >= 2
    assert len(set(factors)) == len(factors), "duplicate inductance steps"
    assert len(steps) == step_count(n)
    return StepTable(n, unit_L, tuple(steps))


@dataclass(frozen=True)
class Branch:
    a: str
    b: str
    inductance: float


@dataclass(frozen=True)
class InductorNetwork:
    """Two-terminal inductor graph between the nodes ``IN`` and ``OUT``.

    Any topology is accepted; there is no mutual coupling between branches.
    """

    edges: tuple[Branch, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(Branch(*e) if not isinstance(e, Branch) else e
                                                for e in self.edges))
        for e in self.edges:
            if not e.inductance > 0:
                raise ValidationError(f"branch {e.a}-{e.b} has non-positive inductance {e.inductance!r}")

    @property
    def nodes(self) -> tuple[str, ...]:
        seen = {IN: None, OUT: None}
        for e in self.edges:
            seen.setdefault(e.a)
            seen.setdefault(e.b)
        return tuple(seen)


def build_network(config: SwitchConfiguration, unit_L: float) -> InductorNetwork:
    """Lumped circuit of ``config``: a series chain, then an optional parallel bank."""
    if not unit_L > 0:
        raise ValidationError(f"unit inductance must be positive, got {unit_L!r}")
    k, m = config.series_count, config.parallel_count
    chain = [IN] + [f"s{i}" for i in range(1, k)] + ([OUT] if m == 0 else [f"s{k}"] if k else [])
    edges = [Branch(chain[i], chain[i + 1], unit_L) for i in range(k)]
    bank_in = chain[-1] if k else IN
    edges += [Branch(bank_in, OUT, unit_L) for _ in range(m)]
    return InductorNetwork(tuple(edges))


def effective_inductance(net: InductorNetwork) -> float:
    """Two-terminal inductance by nodal analysis.

    Branch weights are ``1/L``; unit flow is injected at IN and drawn at OUT
    with OUT grounded, and the result is the IN potential. Nodes not connected
    to the terminals are dropped before solving.

    Raises:
        SingularNetworkError: IN and OUT are not connected.
    """
    nodes = net.nodes
    index = {name: i for i, name in enumerate(nodes)}
    rows = [index[e.a] for e in net.edges]
    cols = [index[e.b] for e in net.edges]
    adj = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(len(nodes),) * 2)
    _, labels = connected_components(adj, directed=False)
    if labels[index[IN]] != labels[index[OUT]]:
        raise SingularNetworkError("IN and OUT are not connected")

    keep = [i for i in range(len(nodes)) if labels[i] == labels[index[IN]] and i != index[OUT]]
    local = {g: i for i, g in enumerate(keep)}
    G = np.zeros((len(keep), len(keep)))
    for e in net.edges:
        a, b = index[e.a], index[e.b]
        if a == b or labels[a] != labels[index[IN]]:
            continue
        y = 1.0 / e.inductance
        for p, q in ((a, b), (b, a)):
            if p in local:
                G[local[p], local[p]] += y
                if q in local:
                    G[local[p], local[q]] -= y
    rhs = np.zeros(len(keep))
    rhs[local[index[IN]]] = 1.0
    try:
        potentials = np.linalg.solve(G, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularNetworkError(f"node equations are singular: {exc}") from None
    return float(potentials[local[index[IN]]])
