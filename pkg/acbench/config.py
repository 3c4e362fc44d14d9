"""Structured configuration shared by the CLI and the experiment tasks"""
from collections.abc import Sequence
from dataclasses import dataclass, field

from omegaconf import DictConfig, OmegaConf

from acbench.constructions.families import DEFAULT_BIT_BUDGET
from acbench.search.bfs import SearchCaps
from acbench.solvers.area import AreaCaps


@dataclass
class WorkbenchConfig:
    """Caps and budgets.

    Args:
        area: Caps for the area oracle
        search: Caps for the trivialization search and sublevel exploration
        bit_budget: Largest integer, in bits, that tower arithmetic materializes
        num_workers: Threads for level expansion, copied into both caps when above 1
        log_level: Level name for the package logger
    """

    area: AreaCaps = field(default_factory=AreaCaps)
    search: SearchCaps = field(default_factory=SearchCaps)
    bit_budget: int = DEFAULT_BIT_BUDGET
    num_workers: int = 1
    log_level: str = "WARNING"


def structured(overrides: Sequence[str] = ()) -> DictConfig:
    """The default config merged with `key=value` overrides"""
    config = OmegaConf.structured(WorkbenchConfig)
    if overrides:
        config = OmegaConf.merge(config, OmegaConf.from_dotlist(list(overrides)))
    return config


def load_config(overrides: Sequence[str] = ()) -> WorkbenchConfig:
    """Typed config from `key=value` overrides, e.g. ["area.max_states=1000"]"""
    config = OmegaConf.to_object(structured(overrides))
    assert isinstance(config, WorkbenchConfig)
    if config.bit_budget < 1:
        raise ValueError(f"bit_budget must be positive, got {config.bit_budget}")
    if config.num_workers < 1:
        raise ValueError(f"num_workers must be positive, got {config.num_workers}")
    if config.num_workers > 1:
        config.area.num_workers = config.num_workers
        config.search.num_workers = config.num_workers
    return config
