"""Constructive AC-trivialization of the doubled presentations P_w

Given a certificate for w = 1 in the seed and a trace trivializing the seed with a_0
deleted, the trace on P_w is built in four blocks:
    1. multiply rho = a1_hat a0 a1_hat^-1 w^-1 by the certificate conjugates, then conjugate
       by a1_hat^-1, leaving a0
    2. the same on the hatted mixing relator, leaving a0_hat
    3. delete every a0 from R and every a0_hat from R_hat, one move per occurrence
    4. the seed trace on R, then its hatted copy on R_hat
Relators of P_w are numbered R = 1..n, R_hat = n+1..2n, rho = 2n+1, rho_hat = 2n+2.
"""
from dataclasses import dataclass
from typing import Any, Optional

import sympy

from acbench.constructions.doubling import DoublingSpec, build_Pw, hat, hat_name
from acbench.constructions.families import DEFAULT_BIT_BUDGET, delta_k, gen_w
from acbench.errors import PlanError, TowerOverflowError
from acbench.moves.moves import Conjugate, Dihedral, Invert, Move, MultiplyRight
from acbench.moves.trace import MoveTrace, replay, verify_trivialization
from acbench.presentations.fixtures import seed_s
from acbench.presentations.presentation import Presentation, delete_letter
from acbench.search.bfs import SearchCaps, bfs_trivialize
from acbench.solvers.area import AreaCaps, prove
from acbench.solvers.certificate import AreaCertificate, certify_wn, hat_certificate
from acbench.utils import get_logger
from acbench.words import Alphabet, Word

log = get_logger(__name__)


@dataclass(frozen=True)
class TrivializationPlan:
    """Doubling spec, a certificate for w over the seed relators and a trace trivializing
    the seed with a_0 deleted"""

    spec: DoublingSpec
    cert_w: AreaCertificate
    trace_bar: MoveTrace
    n: Optional[int] = None
    k: Optional[int] = None

    def __post_init__(self) -> None:
        seed = self.spec.seed
        if self.cert_w.target != self.spec.w:
            raise PlanError(
                f"Certificate proves {self.cert_w.target}, the plan needs {self.spec.w}"
            )
        if self.cert_w.relators != seed.relators:
            raise PlanError("Certificate relators differ from the seed relators")
        bar, _ = delete_letter(seed, self.spec.a0)
        if self.trace_bar.initial != bar:
            raise PlanError(f"trace_bar starts at {self.trace_bar.initial}, expected {bar}")
        if any(not m.dihedral for m in self.trace_bar.moves):
            raise PlanError("trace_bar may only use Invert, MultiplyRight, Conjugate and Dihedral")
        if not verify_trivialization(self.trace_bar).accepted:
            raise PlanError(f"trace_bar does not trivialize {bar}")

    @property
    def eliminations(self) -> tuple[int, ...]:
        """|r|_0 for every seed relator"""
        return delete_letter(self.spec.seed, self.spec.a0)[1]


def _relator_index_of(presentation: Presentation, letter_index: int, generator: str) -> int:
    relator = presentation.relators[letter_index - 1]
    g = Word.generator(presentation.generators, generator)
    if relator == g:
        return 1
    if relator == g.inverse():
        return -1
    raise PlanError(f"Relator {letter_index} is {relator}, not {generator}^(+-1)")


def eliminate_letter(
    presentation: Presentation, relator_index: int, letter_index: int, generator: str
) -> list[Move]:
    """Moves deleting every occurrence of `generator` from relator `relator_index`, using
    relator `letter_index`, which must be generator^(+-1).

    Each move removes the last occurrence: with r = u g^e v and v free of g, r becomes
    r (v^-1 g^-e v) = u v. This takes exactly as many moves as there are occurrences.
    """
    if relator_index == letter_index:
        raise PlanError("Cannot eliminate a letter from the relator that defines it")
    delta = _relator_index_of(presentation, letter_index, generator)
    alphabet = presentation.generators
    code = alphabet.code(generator)
    budget = presentation.relators[relator_index - 1].count(generator)
    state = presentation
    moves: list[Move] = []
    while True:
        relator = state.relators[relator_index - 1]
        positions = [i for i, c in enumerate(relator.codes) if abs(c) == code]
        if not positions:
            return moves
        if len(moves) >= budget:
            raise PlanError(f"Eliminating {generator} exceeded {budget} moves")
        last = positions[-1]
        sign = 1 if relator.codes[last] > 0 else -1
        v = Word._reduced(alphabet, relator.codes[last + 1 :])
        move = Dihedral(relator_index, letter_index, -sign * delta, v.inverse())
        moves.append(move)
        state = move.apply(state)


def _lift_move(move: Move, alphabet: Alphabet, offset: int, hatted: bool) -> Move:
    def lift(u: Word) -> Word:
        return (hat(u) if hatted else u).over(alphabet)

    if isinstance(move, Invert):
        return Invert(move.i + offset)
    if isinstance(move, MultiplyRight):
        return MultiplyRight(move.i + offset, move.j + offset)
    if isinstance(move, Conjugate):
        return Conjugate(move.i + offset, lift(move.u))
    if isinstance(move, Dihedral):
        return Dihedral(move.j + offset, move.i + offset, move.sign, lift(move.u))
    raise PlanError(f"Cannot lift {move.op} into P_w")


def trivialize_Pw(plan: TrivializationPlan) -> MoveTrace:
    """Emit a trace trivializing build_Pw(plan.spec), checked before it is returned"""
    spec = plan.spec
    pw = build_Pw(spec)
    alphabet, n = pw.generators, spec.n
    rho, rho_hat = 2 * n + 1, 2 * n + 2
    moves: list[Move] = []

    # 1. rho -> a0
    for step in plan.cert_w.over(alphabet):
        moves.append(Dihedral(rho, step.relator, step.sign, step.conjugator))
    moves.append(Conjugate(rho, Word.generator(alphabet, hat_name(spec.a1)).inverse()))

    # 2. rho_hat -> a0_hat
    for step in hat_certificate(plan.cert_w).over(alphabet, offset=n):
        moves.append(Dihedral(rho_hat, step.relator, step.sign, step.conjugator))
    moves.append(Conjugate(rho_hat, Word.generator(alphabet, spec.a1).inverse()))

    # 3. delete a0 and a0_hat
    state = replay(MoveTrace(pw, tuple(moves)))
    for j in range(1, n + 1):
        moves += eliminate_letter(state, j, rho, spec.a0)
        moves += eliminate_letter(state, n + j, rho_hat, hat_name(spec.a0))

    # 4. the seed trace on both halves
    moves += [_lift_move(m, alphabet, 0, False) for m in plan.trace_bar.moves]
    moves += [_lift_move(m, alphabet, n, True) for m in plan.trace_bar.moves]

    trace = MoveTrace(pw, tuple(moves))
    verification = verify_trivialization(trace)
    if not verification.accepted:
        raise PlanError(f"Constructed trace does not trivialize P_w: {verification.reason}")
    log.info(f"Trivialized P_w in {verification.dihedral_count} moves")
    return trace


@dataclass(frozen=True)
class AccBounds:
    lower: Optional[int]
    upper: Optional[int]
    tower_index: int
    symbolic: Optional[str] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "tower_index": self.tower_index,
            "symbolic": self.symbolic,
        }


def acc_bounds(
    n: int,
    k: int = 2,
    trace: Optional[MoveTrace] = None,
    corrected: bool = False,
    bit_budget: int = DEFAULT_BIT_BUDGET,
) -> AccBounds:
    """Bounds on acc(P_(w_n)) for the seed S_k.

    The lower bound is ceil(ln D - ln 3) with D = Delta_k(floor(log2 n)) the area* bound,
    or Delta_k(floor(log2 n) - 1) when `corrected`. D = k^E is never materialized, only E.
    When E itself overflows the bit budget the bound is returned in symbolic form.

    Args:
        n: Index of the word w_n, n >= 2
        k: Seed parameter
        trace: A trivializing trace whose dihedral count is the upper bound
        corrected: Use the tower index that the word problem solver verifies for V_m
        bit_budget: Largest integer materialized
    """
    if n < 2:
        raise ValueError(f"acc_bounds needs n >= 2, got {n}")
    index = n.bit_length() - 1 - (1 if corrected else 0)
    upper = verify_trivialization(trace).dihedral_count if trace is not None else None
    try:
        exponent = 1 if index == 0 else delta_k(k, index - 1, bit_budget)
    except TowerOverflowError:
        symbolic = f"ceil(Delta_{k}({index - 1}) * ln({k}) - ln(3))"
        log.warning(f"Lower bound for n={n} kept symbolic: {symbolic}")
        return AccBounds(None, upper, index, symbolic)
    lower = sympy.ceiling(sympy.Integer(exponent) * sympy.log(k) - sympy.log(3))
    return AccBounds(max(0, int(lower)), upper, index)


@dataclass(frozen=True)
class AuditReport:
    accepted: bool
    dihedral_count: int
    certificate_steps: int
    acc_bar: int
    eliminations: int
    bound: int
    bounds: Optional[AccBounds] = None

    @property
    def within_bound(self) -> bool:
        return self.dihedral_count <= self.bound

    def to_dict(self) -> dict[str, Any]:
        return {
            "accepted": self.accepted,
            "dihedral_count": self.dihedral_count,
            "certificate_steps": self.certificate_steps,
            "acc_bar": self.acc_bar,
            "eliminations": self.eliminations,
            "bound": self.bound,
            "within_bound": self.within_bound,
            "acc_bounds": self.bounds.to_dict() if self.bounds is not None else None,
        }


def audit(plan: TrivializationPlan, trace: MoveTrace) -> AuditReport:
    """Check the trace and compare its count with 2 acc_bar + 2 (N + 1) + 2 sum |r|_0"""
    verification = verify_trivialization(trace)
    acc_bar = verify_trivialization(plan.trace_bar).dihedral_count
    eliminations = sum(plan.eliminations)
    bound = 2 * acc_bar + 2 * (len(plan.cert_w) + 1) + 2 * eliminations
    bounds = None
    if plan.n is not None and plan.n >= 2:
        bounds = acc_bounds(plan.n, plan.k or 2, trace)
    return AuditReport(
        accepted=verification.accepted,
        dihedral_count=verification.dihedral_count,
        certificate_steps=len(plan.cert_w),
        acc_bar=acc_bar,
        eliminations=eliminations,
        bound=bound,
        bounds=bounds,
    )


def plan_for_wn(
    n: int,
    k: int = 2,
    method: str = "constructive",
    area_caps: Optional[AreaCaps] = None,
    search_caps: Optional[SearchCaps] = None,
) -> Optional[TrivializationPlan]:
    """Plan for the seed S_k with a_0 = t, a_1 = x and w = w_n.

    Args:
        n: Index of w_n
        k: Seed parameter. Deleting t from S_k leaves < x | x^(1-k) >, so only k = 2
            admits a plan
        method: "constructive" for the inductive certificate, "bfs" for a minimal one
        area_caps: Caps for the "bfs" method
        search_caps: Caps for finding the trace on the seed with t deleted

    Returns:
        The plan, or None when a capped search gave up
    """
    seed = seed_s(k)
    w = gen_w(n, seed.generators)
    if method == "constructive":
        cert: Optional[AreaCertificate] = certify_wn(n, k)
    elif method == "bfs":
        cert = prove(seed, w, area_caps)
    else:
        raise ValueError(f"Unknown certificate method {method!r}, use 'constructive' or 'bfs'")
    if cert is None:
        log.warning(f"No certificate for w_{n} within the area caps")
        return None
    bar, _ = delete_letter(seed, "t")
    trace_bar = bfs_trivialize(bar, search_caps)
    if trace_bar is None:
        raise PlanError(f"Deleting t from S_{k} leaves {bar}, which was not trivialized")
    return TrivializationPlan(DoublingSpec(seed, "t", "x", w), cert, trace_bar, n=n, k=k)
