"""Space pre-order, core partial order, general core pre-order.

``core_leq`` evaluates the defining equalities and, alongside them, the two
equivalent characterisations (restriction form and algebraic form).  All six
conditions land in the report's witnesses so disagreements are visible.
"""
from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .finite_potent import FinitePotentOperator, core_part
from .gen_inverse import IndexTooLarge, core_inverse, moore_penrose, require_index_le1
from .generators import make_rng, random_scalar
from .matrix import assemble


class Relation(enum.Enum):
    SPACE = "space"
    CORE = "core"
    GENERAL_CORE = "general-core"


class GenerationFailed(RuntimeError):
    pass


MAX_RESAMPLES = 64

DEF_RIGHT = "phi phi^core = psi phi^core"
DEF_LEFT = "phi^core phi = phi^core psi"
RESTRICT_IMAGE = "phi = psi on Im(phi)"
RESTRICT_KERNEL = "psi(Ker phi) in Im(phi)^perp"
ALG_SQUARE = "phi^2 = psi phi"
ALG_MP = "phi^+ phi = phi^+ psi"


@dataclass(frozen=True)
class OrderReport:
    relation: Relation
    witnesses: tuple

    @property
    def verdict(self) -> bool:
        return all(held for _, held in self.witnesses)

    def __bool__(self):
        return self.verdict

    def __getitem__(self, name: str) -> bool:
        for n, held in self.witnesses:
            if n == name:
                return held
        raise KeyError(name)

    def definition_verdict(self) -> bool:
        return self[DEF_RIGHT] and self[DEF_LEFT]

    def restriction_verdict(self) -> bool:
        return self[RESTRICT_IMAGE] and self[RESTRICT_KERNEL]

    def algebraic_verdict(self) -> bool:
        return self[ALG_SQUARE] and self[ALG_MP]

    def consistent(self) -> bool:
        """The three characterisations of the core order agree."""
        if self.relation is Relation.SPACE:
            return True
        return (
            self.definition_verdict() == self.restriction_verdict() == self.algebraic_verdict()
            and self[DEF_RIGHT] == self[ALG_SQUARE]
            and self[DEF_LEFT] == self[ALG_MP]
        )

    def lines(self) -> list:
        out = [f"relation: {self.relation.value}", f"verdict: {str(self.verdict).lower()}"]
        out += [f"  [{'x' if held else ' '}] {name}" for name, held in self.witnesses]
        return out


def _same_ambient(phi, psi):
    phi._same(psi)


def space_leq(phi: FinitePotentOperator, psi: FinitePotentOperator) -> OrderReport:
    _same_ambient(phi, psi)
    return OrderReport(
        Relation.SPACE,
        (
            ("Im(phi) in Im(psi)", phi.image() <= psi.image()),
            ("Ker(psi) in Ker(phi)", psi.kernel() <= phi.kernel()),
        ),
    )


def _core_witnesses(phi, psi):
    require_index_le1(phi, "core order", IndexTooLarge)
    require_index_le1(psi, "core order", IndexTooLarge)
    core = core_inverse(phi)
    mp = moore_penrose(phi)
    im = phi.image()
    im_perp = im.orth_complement()
    return (
        (DEF_RIGHT, phi @ core == psi @ core),
        (DEF_LEFT, core @ phi == core @ psi),
        (RESTRICT_IMAGE, phi.restrict_equal(psi, im)),
        (RESTRICT_KERNEL, psi.apply_to(phi.kernel()) <= im_perp),
        (ALG_SQUARE, phi @ phi == psi @ phi),
        (ALG_MP, mp @ phi == mp @ psi),
    )


@functools.lru_cache(maxsize=8192)
def _cached_witnesses(phi, psi):
    # operators are immutable values, so verdicts can be shared between callers
    return _core_witnesses(phi, psi)


def core_leq(phi: FinitePotentOperator, psi: FinitePotentOperator) -> OrderReport:
    """Core partial order; both operators must have index <= 1."""
    _same_ambient(phi, psi)
    return OrderReport(Relation.CORE, _cached_witnesses(phi, psi))


def gamma(phi: FinitePotentOperator) -> FinitePotentOperator:
    """Core part of the CN splitting."""
    return core_part(phi)


def general_core_leq(phi: FinitePotentOperator, psi: FinitePotentOperator) -> OrderReport:
    _same_ambient(phi, psi)
    return OrderReport(Relation.GENERAL_CORE, _cached_witnesses(gamma(phi), gamma(psi)))


_RELATIONS = {
    Relation.SPACE: space_leq,
    Relation.CORE: core_leq,
    Relation.GENERAL_CORE: general_core_leq,
}


def leq(phi, psi, relation) -> OrderReport:
    return _RELATIONS[Relation(relation)](phi, psi)


def generate_above(phi: FinitePotentOperator, seed=None) -> FinitePotentOperator:
    """Random ``psi`` with ``phi <= psi`` in the core order.

    ``psi`` copies ``phi`` on ``Im(phi)`` and sends ``Ker(phi)`` into
    ``Im(phi)^perp`` through a random map of random rank; samples with index
    >= 2 are discarded.
    """
    require_index_le1(phi, "core order", IndexTooLarge)
    rng = make_rng(seed)
    n, fld = phi.n, phi.field
    im = phi.image()
    ker = phi.kernel()
    perp = im.orth_complement()
    basis = list(im) + list(ker)
    on_im = [phi @ x for x in im]
    for _ in range(MAX_RESAMPLES):
        rank = rng.randint(0, min(ker.dim, perp.dim))
        # random map ker -> perp of rank <= `rank`, factored through k^rank
        left = [[random_scalar(rng, fld) for _ in range(rank)] for _ in range(perp.dim)]
        right = [[random_scalar(rng, fld) for _ in range(ker.dim)] for _ in range(rank)]
        on_ker = []
        for j in range(ker.dim):
            coeffs = [sum((left[a][t] * right[t][j] for t in range(rank)), 0) for a in range(perp.dim)]
            v = [0] * n
            for c, p in zip(coeffs, perp):
                if c:
                    v = [vi + c * pi for vi, pi in zip(v, p)]
            on_ker.append(v)
        psi = phi.like(assemble(basis, on_im + on_ker, n, fld))
        if psi.index <= 1:
            return psi
    raise GenerationFailed(f"no index <= 1 operator above phi after {MAX_RESAMPLES} tries")


@dataclass
class AxiomReport:
    relation: Relation
    reflexive: bool = True
    antisymmetric: bool = True
    transitive: bool = True
    reflexive_checked: int = 0
    pairs_checked: int = 0
    chains_checked: int = 0
    reflexive_failures: list = field(default_factory=list)
    antisymmetry_failures: list = field(default_factory=list)
    transitivity_failures: list = field(default_factory=list)
    reference_counterexample: Optional[bool] = None

    def lines(self) -> list:
        def mark(ok):
            return "pass" if ok else "FAIL"

        out = [
            f"reflexive: {mark(self.reflexive)} ({self.reflexive_checked} samples)",
            f"antisymmetric: {mark(self.antisymmetric)} ({self.pairs_checked} comparable pairs)",
            f"transitive: {mark(self.transitive)} ({self.chains_checked} chains)",
        ]
        if self.reference_counterexample is not None:
            out.append(f"reference antisymmetry counterexample confirmed: {str(self.reference_counterexample).lower()}")
        return out


def shared_core_pair():
    """Two distinct 5x5 operators with index 2 and 3 that share their core part."""
    A = FinitePotentOperator.from_rows(
        [[29, 0, 0, 0, 0], [0, 33, 0, 0, 0], [0, 0, 0, 0, 0], [0, 0, 0, 0, 0], [0, 0, 0, 1, 0]]
    )
    B = FinitePotentOperator.from_rows(
        [[29, 0, 0, 0, 0], [0, 33, 0, 0, 0], [0, 0, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0]]
    )
    return A, B


def verify_order_axioms(
    relation,
    sample: Sequence[FinitePotentOperator],
    chains: Iterable[Sequence] = (),
    pairs: Optional[Iterable[Sequence]] = None,
) -> AxiomReport:
    """Check reflexivity, antisymmetry and transitivity; failures are reported, not raised.

    ``chains`` are tuples ``(phi, psi, chi)`` expected to satisfy
    ``phi <= psi <= chi``; they are what makes the transitivity check
    non-vacuous, since random pairs are almost never comparable.

    Antisymmetry is checked on every pair of the pool (sample plus chain
    members) unless ``pairs`` restricts it; the pool grows quadratically, so
    large runs pass the chain links plus a random selection.
    """
    relation = Relation(relation)
    rel = _RELATIONS[relation]
    report = AxiomReport(relation)
    sample = list(sample)
    chains = [tuple(c) for c in chains]

    cache = {}

    def le(a, b):
        key = (id(a), id(b))
        if key not in cache:
            cache[key] = rel(a, b).verdict
        return cache[key]

    for a in sample:
        report.reflexive_checked += 1
        if not le(a, a):
            report.reflexive = False
            report.reflexive_failures.append(a)

    pool = list(sample)
    for c in chains:
        for op in c:
            if not any(op is p for p in pool):
                pool.append(op)

    if pairs is None:
        pairs = [(pool[i], pool[j]) for i, j in itertools.combinations(range(len(pool)), 2)]
    for a, b in pairs:
        if a is b:
            continue
        if le(a, b) and le(b, a):
            report.pairs_checked += 1
            if a != b:
                report.antisymmetric = False
                report.antisymmetry_failures.append((a, b))
        elif le(a, b) or le(b, a):
            report.pairs_checked += 1

    triples = []
    for c in chains:
        if len(c) == 3:
            triples.append(c)
    if len(sample) <= 30:
        for a, b, c in itertools.permutations(sample, 3):
            if le(a, b) and le(b, c):
                triples.append((a, b, c))
    for a, b, c in triples:
        if not (le(a, b) and le(b, c)):
            continue
        report.chains_checked += 1
        if not le(a, c):
            report.transitive = False
            report.transitivity_failures.append((a, b, c))

    if relation is Relation.GENERAL_CORE:
        A, B = shared_core_pair()
        report.reference_counterexample = (
            general_core_leq(A, B).verdict and general_core_leq(B, A).verdict and A != B
        )
    return report


def covering_relation(named: Sequence, relation):
    """Covering edges and mutually-related pairs, as index pairs into ``named``."""
    relation = Relation(relation)
    names = [n for n, _ in named]
    ops = [op for _, op in named]
    if len(set(names)) != len(names):
        raise ValueError("operator names must be unique")
    if relation is Relation.CORE:
        for name, op in named:
            if op.index > 1:
                raise IndexTooLarge(f"{name}: core order needs index ≤ 1 (index is {op.index})", op.index)
    rel = _RELATIONS[relation]
    k = len(ops)
    le = [[i == j or rel(ops[i], ops[j]).verdict for j in range(k)] for i in range(k)]
    strict = [[le[i][j] and not le[j][i] for j in range(k)] for i in range(k)]
    edges = []
    for i in range(k):
        for j in range(k):
            if strict[i][j] and not any(strict[i][z] and strict[z][j] for z in range(k)):
                edges.append((i, j))
    mutual = [(i, j) for i in range(k) for j in range(i + 1, k) if le[i][j] and le[j][i]]
    return edges, mutual


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse(named: Sequence, relation) -> str:
    """DOT digraph of the covering relation over ``[(name, operator), ...]``.

    Pairs related both ways (possible for the pre-orders) get no edge and
    are flagged in a comment line.
    """
    edges, mutual = covering_relation(named, relation)
    names = [n for n, _ in named]
    lines = ["digraph hasse {"]
    for n in names:
        lines.append(f"  {_quote(n)};")
    for i, j in edges:
        lines.append(f"  {_quote(names[i])} -> {_quote(names[j])};")
    for i, j in mutual:
        lines.append(f"  // not antisymmetric: {_quote(names[i])} <-> {_quote(names[j])}")
    lines.append("}")
    return "\n".join(lines) + "\n"
