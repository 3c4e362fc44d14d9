"""Experiment tasks, instantiated from the hydra config

Each task takes its parameters in __init__ and returns a JSON-ready mapping from `run`.
"""
from typing import Any, Optional

from acbench.config import WorkbenchConfig
from acbench.constructions.doubling import DoublingSpec, build_Pw
from acbench.constructions.families import delta_k, gen_V, gen_w
from acbench.constructions.indexed import dagger_lift
from acbench.errors import TowerOverflowError
from acbench.io import resolve_presentation
from acbench.moves.factor_counts import expand_factor_counts
from acbench.moves.trace import verify_trivialization
from acbench.presentations.fixtures import seed_s
from acbench.search.bfs import search
from acbench.search.sublevel import explore_sublevel
from acbench.solvers.area import area_bfs, area_star_bounded
from acbench.trivializer import acc_bounds, audit, plan_for_wn, trivialize_Pw
from acbench.utils import get_logger
from acbench.words import parse_expression

log = get_logger(__name__)


class Task:
    name = "task"

    def run(self, config: WorkbenchConfig) -> dict[str, Any]:
        raise NotImplementedError


class WordMetricsTask(Task):
    """Lengths of w_n, V_m and the dagger lift of V_m"""

    name = "word_metrics"

    def __init__(self, n_values: list[int]):
        self.n_values = list(n_values)

    def run(self, config: WorkbenchConfig) -> dict[str, Any]:
        rows = []
        for n in self.n_values:
            m = n.bit_length() - 1
            v = gen_V(m)
            row: dict[str, Any] = {
                "n": n,
                "m": m,
                "len_w": len(gen_w(n)),
                "len_V": len(v),
                "len_dagger_V": len(dagger_lift(v)),
            }
            try:
                row["delta_2"] = delta_k(2, m, config.bit_budget)
            except TowerOverflowError as e:
                row["delta_2"] = f"> 2^{e.budget}"
            rows.append(row)
        return {"rows": rows}


class TrivializeTask(Task):
    """Trivialize P_(w_n) for each n and audit the trace"""

    name = "trivialize"

    def __init__(self, n_values: list[int], k: int = 2, method: str = "constructive"):
        self.n_values = list(n_values)
        self.k = k
        self.method = method

    def run(self, config: WorkbenchConfig) -> dict[str, Any]:
        rows = []
        for n in self.n_values:
            plan = plan_for_wn(n, self.k, self.method, config.area, config.search)
            if plan is None:
                rows.append({"n": n, "status": "unknown"})
                continue
            trace = trivialize_Pw(plan)
            report = audit(plan, trace)
            counts = expand_factor_counts(trace)
            rows.append(
                {
                    "n": n,
                    "status": "trivialized",
                    "moves": len(trace),
                    "audit": report.to_dict(),
                    "max_factor_count": counts.max,
                }
            )
            log.info(f"P_(w_{n}): {report.dihedral_count} moves, bound {report.bound}")
        return {"k": self.k, "method": self.method, "rows": rows}


class AccBoundsTask(Task):
    name = "acc_bounds"

    def __init__(self, n_values: list[int], k: int = 2, corrected: bool = False):
        self.n_values = list(n_values)
        self.k = k
        self.corrected = corrected

    def run(self, config: WorkbenchConfig) -> dict[str, Any]:
        rows = []
        for n in self.n_values:
            bounds = acc_bounds(n, self.k, None, self.corrected, config.bit_budget)
            rows.append({"n": n, **bounds.to_dict()})
        return {"k": self.k, "corrected": self.corrected, "rows": rows}


class AreaTask(Task):
    """Area of a word, or bounded area* when `n_max` is given. The word is `word`, or w_n
    over the presentation's generators when `wn` is given."""

    name = "area"

    def __init__(
        self,
        presentation: str,
        word: Optional[str] = None,
        wn: Optional[int] = None,
        n_max: Optional[int] = None,
    ):
        if (word is None) == (wn is None):
            raise ValueError("AreaTask needs exactly one of word and wn")
        self.presentation = presentation
        self.word = word
        self.wn = wn
        self.n_max = n_max

    def run(self, config: WorkbenchConfig) -> dict[str, Any]:
        presentation = resolve_presentation(self.presentation)
        if self.wn is not None:
            word = gen_w(self.wn, presentation.generators)
        else:
            word = parse_expression(self.word or "", presentation.generators)
        out: dict[str, Any] = {"presentation": str(presentation), "word": str(word)}
        if self.n_max is None:
            out["area"] = area_bfs(presentation, word, config.area).to_dict()
        else:
            out["area_star"] = area_star_bounded(
                presentation, word, self.n_max, config.area
            ).to_dict()
        return out


class SearchTask(Task):
    """Trivialization search on a presentation, or on P_(w_n) over S_2 when `wn` is given"""

    name = "search"

    def __init__(self, presentation: Optional[str] = None, wn: Optional[int] = None):
        if (presentation is None) == (wn is None):
            raise ValueError("SearchTask needs exactly one of presentation and wn")
        self.presentation = presentation
        self.wn = wn

    def run(self, config: WorkbenchConfig) -> dict[str, Any]:
        if self.wn is not None:
            seed = seed_s(2)
            spec = DoublingSpec(seed, "t", "x", gen_w(self.wn, seed.generators))
            presentation = build_Pw(spec)
        else:
            presentation = resolve_presentation(self.presentation or "")
        result = search(presentation, config.search)
        out = result.to_dict()
        if result.trace is not None:
            out["verification"] = verify_trivialization(result.trace).to_dict()
        return {"presentation": str(presentation), **out}


class SublevelTask(Task):
    name = "sublevel"

    def __init__(self, k: int, m: int):
        self.k = k
        self.m = m

    def run(self, config: WorkbenchConfig) -> dict[str, Any]:
        report = explore_sublevel(self.k, self.m, config.search)
        log.info(f"\n{report.to_dataframe().to_string(index=False)}")
        return report.to_dict()
