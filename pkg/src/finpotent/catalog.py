"""Catalogue of exact identities, run on single operators, pairs and chains.

Each entry is a predicate that must hold.  Biconditionals are checked as a
plain equality of booleans, so they hold on every sample; the random suite
mixes in strata (idempotents, EP tripotents, EP partial isometries, zero)
on which the "if" side is actually exercised.
"""
from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass
from typing import Callable

from .finite_potent import FinitePotentOperator, ast_decomposition, cn_decomposition, rank_profile
from .gen_inverse import (
    IndexTooLarge,
    check_inverse_class,
    core_dagger,
    core_inverse,
    core_of_mp,
    drazin,
    group_inverse,
    is_ep,
    moore_penrose,
)
from .generators import (
    make_rng,
    random_any,
    random_high_index,
    random_index_le1_mixed,
    random_perturbation,
)
from .matrix import Subspace
from .orders import core_leq, gamma, general_core_leq, generate_above, space_leq
from .scalars import REAL


def _proj(op: FinitePotentOperator, S: Subspace) -> FinitePotentOperator:
    return op.like(S.projector())


# -- any index -----------------------------------------------------------------

def cn_splitting(op):
    p1, p2 = cn_decomposition(op)
    return p1 + p2 == op and (p1 @ p2).is_zero() and (p2 @ p1).is_zero()


def cn_parts(op):
    p1, p2 = cn_decomposition(op)
    return p1.index <= 1 and (p2 ** max(op.index, 1)).is_zero()


def index_three_way(op):
    ast = ast_decomposition(op)
    low = op.index <= 1
    return low == (ast.U_block == op.kernel()) == (ast.W == op.image()) == (cn_decomposition(op).phi1 == op)


def ast_invariance(op):
    ast = ast_decomposition(op)
    W, U = ast.W, ast.U_block
    return (
        W.dim + U.dim == op.n
        and (W & U).dim == 0
        and op.apply_to(W) == W
        and op.apply_to(U) <= U
    )


def rank_profile_stabilises(op):
    i = op.index
    ranks = rank_profile(op, i + 2)
    decreasing = all(a >= b for a, b in zip(ranks, ranks[1:]))
    return decreasing and ranks[i] == ranks[i + 1] == ranks[i + 2] and all(ranks[j] > ranks[j + 1] for j in range(i))


def drazin_axioms(op):
    return all(check_inverse_class(op, drazin(op), "drazin").values())


def penrose_conditions(op):
    return all(check_inverse_class(op, moore_penrose(op), "penrose").values())


def mp_involution(op):
    return moore_penrose(moore_penrose(op)) == op


def mp_projectors(op):
    mp = moore_penrose(op)
    return mp @ op == _proj(op, op.kernel().orth_complement()) and op @ mp == _proj(op, op.image())


def mp_adjoint_identities(op):
    mp, adj = moore_penrose(op), op.adjoint()
    adj_mp = moore_penrose(adj)
    return (
        adj @ op @ mp == adj
        and mp @ op @ adj == adj
        and adj_mp @ adj @ op == op
        and op @ adj @ adj_mp == op
        and adj_mp == mp.adjoint()
    )


def existence_boundary(op):
    """Index >= 2 iff group and core inverse are refused."""
    refused = []
    for f in (group_inverse, core_inverse):
        try:
            f(op)
            refused.append(False)
        except IndexTooLarge:
            refused.append(True)
    return refused[0] == refused[1] == (op.index >= 2)


def gamma_idempotent(op):
    g = gamma(op)
    return gamma(g) == g and g.index <= 1


def adjoint_index(op):
    return op.adjoint().index == op.index


# -- index <= 1 ----------------------------------------------------------------

def group_axioms(op):
    g = group_inverse(op)
    if not all(check_inverse_class(op, g, "group").values()):
        return False
    return group_inverse(g) == op and all(group_inverse(op ** k) == g ** k for k in (2, 3))


def core_algebraic_form(op):
    return core_inverse(op) == group_inverse(op) @ op @ moore_penrose(op)


def core_three_conditions(op):
    return all(check_inverse_class(op, core_inverse(op), "core").values())


def core_definition(op):
    c = core_inverse(op)
    return op @ c == _proj(op, op.image()) and c.image() <= op.image()


def core_uniqueness(op):
    """Unit perturbations of the core inverse fail its defining conditions."""
    c = core_inverse(op)

    def satisfies(x):
        # short-circuit: most perturbations already break AXA = A
        if op @ x @ op != op:
            return False
        ax = op @ x
        return op @ x @ x == x and ax.adjoint() == ax

    for i in range(op.n):
        for j in range(op.n):
            rows = c.block.tolist()
            rows[i][j] = rows[i][j] + 1
            if satisfies(op.like(type(c.block)(rows, field=op.field))):
                return False
    return True


def core_structure(op):
    c = core_inverse(op)
    return c.index <= 1 and c.image() == op.image() and c.kernel() == op.image().orth_complement()


def core_power_identity(op):
    c = core_inverse(op)
    return all(c == (op ** (k - 1)) @ (c ** k) for k in (2, 3, 4))


def core_of_core(op):
    c = core_inverse(op)
    target = op @ _proj(op, op.image())
    return core_inverse(c) == target and moore_penrose(c) == target and core_dagger(op) == target


def core_is_ep(op):
    c = core_inverse(op)
    return is_ep(c) and is_ep(moore_penrose(c))


def inverses_of_core(op):
    c = core_inverse(op)
    mp = moore_penrose(c)
    return mp == group_inverse(c) == drazin(c)


def core_reflexive(op):
    c, g = core_inverse(op), group_inverse(op)
    return (
        all(check_inverse_class(op, c, "one-two").values())
        and c @ c @ op == g
        and all(c ** m == core_inverse(op ** m) for m in (2, 3))
        and c @ op == g @ op
    )


def core_ep_criterion(op):
    c, ep = core_inverse(op), is_ep(op)
    return (c == group_inverse(op)) == ep == (c == moore_penrose(op))


def core_zero(op):
    return core_inverse(op).is_zero() == op.is_zero()


def core_idempotent(op):
    return (core_inverse(op) == _proj(op, op.image())) == (op @ op == op)


def core_self(op):
    return (core_inverse(op) == op) == (op ** 3 == op and is_ep(op))


def core_adjoint(op):
    adj = op.adjoint()
    return (core_inverse(op) == adj) == (op @ adj @ op == op and is_ep(op))


def core_of_mp_formula(op):
    mp = moore_penrose(op)
    return core_of_mp(op) == group_inverse(mp) @ _proj(op, mp.image())


def ep_equivalences(op):
    c, mp = core_inverse(op), moore_penrose(op)
    flags = [
        is_ep(op),
        core_inverse(c) == op,
        c @ op == op @ c,
        core_inverse(mp) == op,
        moore_penrose(c) == moore_penrose(mp),
    ]
    return len(set(flags)) == 1


def mp_index(op):
    return moore_penrose(op).index <= 1


def gamma_fixes(op):
    return gamma(op) == op


@dataclass(frozen=True)
class Identity:
    name: str
    check: Callable
    needs_index_le1: bool = False


SINGLE = [
    Identity("cn.splitting", cn_splitting),
    Identity("cn.parts", cn_parts),
    Identity("index.three-way", index_three_way),
    Identity("ast.invariance", ast_invariance),
    Identity("index.rank-profile", rank_profile_stabilises),
    Identity("adjoint.index", adjoint_index),
    Identity("drazin.axioms", drazin_axioms),
    Identity("mp.penrose", penrose_conditions),
    Identity("mp.involution", mp_involution),
    Identity("mp.projectors", mp_projectors),
    Identity("mp.adjoint-identities", mp_adjoint_identities),
    Identity("existence.boundary", existence_boundary),
    Identity("gamma.idempotent", gamma_idempotent),
    Identity("group.axioms", group_axioms, True),
    Identity("core.algebraic-form", core_algebraic_form, True),
    Identity("core.three-conditions", core_three_conditions, True),
    Identity("core.definition", core_definition, True),
    Identity("core.uniqueness", core_uniqueness, True),
    Identity("core.structure", core_structure, True),
    Identity("core.power-identity", core_power_identity, True),
    Identity("core.of-core", core_of_core, True),
    Identity("core.is-ep", core_is_ep, True),
    Identity("core.inverses-of-core", inverses_of_core, True),
    Identity("core.reflexive", core_reflexive, True),
    Identity("core.ep-criterion", core_ep_criterion, True),
    Identity("core.zero", core_zero, True),
    Identity("core.idempotent", core_idempotent, True),
    Identity("core.self", core_self, True),
    Identity("core.adjoint", core_adjoint, True),
    Identity("core.of-mp", core_of_mp_formula, True),
    Identity("ep.equivalences", ep_equivalences, True),
    Identity("mp.index", mp_index, True),
    Identity("gamma.fixes-index-le1", gamma_fixes, True),
]


# -- pairs and chains (index <= 1) ----------------------------------------------


def order_characterisations(phi, psi):
    return core_leq(phi, psi).consistent()


def order_space_implied(phi, psi):
    if not core_leq(phi, psi).verdict:
        return True
    return space_leq(phi, psi).verdict


def order_ep_invariance(phi, psi):
    if not (core_leq(phi, psi).verdict and is_ep(phi)):
        return True
    ast = ast_decomposition(phi)
    return psi.apply_to(ast.W) <= ast.W and psi.apply_to(ast.U_block) <= ast.U_block


def order_kernel_split(phi, psi):
    if not core_leq(phi, psi).verdict:
        return True
    kphi, kpsi = phi.kernel(), psi.kernel()
    meet = psi.image() & kphi
    return (kpsi & meet).dim == 0 and kpsi.dim + meet.dim == kphi.dim and kpsi + meet == kphi


def order_antisymmetric(phi, psi):
    if core_leq(phi, psi).verdict and core_leq(psi, phi).verdict:
        return phi == psi
    return True


def general_matches_core(phi, psi):
    return general_core_leq(phi, psi).verdict == core_leq(phi, psi).verdict


PAIRS = [
    Identity("order.characterisations-agree", order_characterisations, True),
    Identity("order.implies-space", order_space_implied, True),
    Identity("order.ep-invariance", order_ep_invariance, True),
    Identity("order.kernel-split", order_kernel_split, True),
    Identity("order.antisymmetric", order_antisymmetric, True),
    Identity("order.general-matches-core", general_matches_core, True),
]


def chain_transitive(phi, psi, chi):
    if not (core_leq(phi, psi).verdict and core_leq(psi, chi).verdict):
        return True
    return core_leq(phi, chi).verdict


def chain_agree_on_image(phi, psi, chi):
    if not (core_leq(phi, psi).verdict and core_leq(psi, chi).verdict):
        return True
    return phi.restrict_equal(chi, phi.image())


CHAINS = [
    Identity("order.transitive", chain_transitive, True),
    Identity("order.chain-agrees-on-image", chain_agree_on_image, True),
]


@dataclass
class Tally:
    passed: int = 0
    failed: int = 0
    skipped: int = 0

    @property
    def ok(self) -> bool:
        return self.failed == 0


class CatalogResult(OrderedDict):
    """identity name -> :class:`Tally`."""

    @property
    def ok(self) -> bool:
        return all(t.ok for t in self.values())

    def record(self, name: str, outcome):
        t = self.setdefault(name, Tally())
        if outcome is None:
            t.skipped += 1
        elif outcome:
            t.passed += 1
        else:
            t.failed += 1

    def lines(self) -> list:
        out = []
        for name, t in self.items():
            status = "PASS" if t.ok else "FAIL"
            extra = f", {t.skipped} skipped" if t.skipped else ""
            out.append(f"{status} {name} ({t.passed}/{t.passed + t.failed} held{extra})")
        return out


def _run(identity: Identity, ops) -> "bool | None":
    if identity.needs_index_le1 and any(op.index > 1 for op in ops):
        return None
    return bool(identity.check(*ops))


def run_single(op: FinitePotentOperator, result: "CatalogResult | None" = None) -> CatalogResult:
    result = CatalogResult() if result is None else result
    for ident in SINGLE:
        result.record(ident.name, _run(ident, (op,)))
    return result


def run_pair(phi, psi, result: "CatalogResult | None" = None) -> CatalogResult:
    result = CatalogResult() if result is None else result
    for ident in PAIRS:
        result.record(ident.name, _run(ident, (phi, psi)))
    return result


def run_chain(phi, psi, chi, result: "CatalogResult | None" = None) -> CatalogResult:
    result = CatalogResult() if result is None else result
    for ident in CHAINS:
        result.record(ident.name, _run(ident, (phi, psi, chi)))
    return result


def verify_operator(op: FinitePotentOperator) -> CatalogResult:
    """Whole catalogue on one operator, with pairs/chains built above it when possible."""
    result = run_single(op)
    if op.index <= 1:
        rng = make_rng(0)
        psi = generate_above(op, rng)
        chi = generate_above(psi, rng)
        run_pair(op, op, result)
        run_pair(op, psi, result)
        run_chain(op, psi, chi, result)
    return result


def run_random_suite(seed: int = 0, count: int = 200, dim: int = 5, field: str = REAL) -> CatalogResult:
    """Random suite: ``count`` rounds, each with an index <= 1 sample, an
    arbitrary-index sample, a chain built above the first and an unrelated pair."""
    rng = make_rng(seed)
    result = CatalogResult()
    for _ in range(count):
        phi = random_index_le1_mixed(dim, rng, field)
        other = random_index_le1_mixed(dim, rng, field)
        wild = random_any(dim, rng, field) if rng.random() < 0.5 else random_high_index(dim, rng, field)
        run_single(phi, result)
        run_single(wild, result)
        psi = generate_above(phi, rng)
        chi = generate_above(psi, rng)
        run_pair(phi, psi, result)
        run_pair(phi, other, result)
        run_chain(phi, psi, chi, result)
        c = core_inverse(phi)
        x = phi.like(c.block + random_perturbation(dim, rng, field))
        result.record("core.random-perturbation", not all(check_inverse_class(phi, x, "core").values()))
    return result
