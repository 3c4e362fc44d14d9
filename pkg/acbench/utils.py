"""Logging, run switches and config display shared by the CLI and the experiment runner"""
import logging
import os
import warnings
from collections.abc import Sequence
from typing import Any, Optional

import rich
import rich.syntax
import rich.tree
import yaml
from omegaconf import DictConfig, OmegaConf

import acbench


def load_package_data(name: str) -> Any:
    """Load a YAML file shipped inside the package, e.g. "presentations/data/rank4_example.yaml"
    """
    path = os.path.join(os.path.dirname(acbench.__file__), name)
    with open(path) as f:
        return yaml.safe_load(f)


def get_logger(name: str = __name__, level: int = logging.INFO) -> logging.Logger:
    """Initializes python logger at the given level."""

    logger = logging.getLogger(name)
    logger.setLevel(level)
    return logger


def configure_logging(verbosity: int = 0, default: str = "WARNING") -> None:
    """Route package logs to stderr through rich, keeping stdout free for results.

    Args:
        verbosity: 0 for the default level, 1 for info, 2 or more for debug
        default: Level name used when verbosity is 0
    """
    from rich.console import Console
    from rich.logging import RichHandler

    levels = {0: logging.getLevelName(default.upper()), 1: logging.INFO}
    level = levels.get(verbosity, logging.DEBUG)
    handler = RichHandler(console=Console(stderr=True), show_path=False)
    root = logging.getLogger("acbench")
    root.handlers = [handler]
    root.propagate = False
    for name in list(logging.root.manager.loggerDict):
        if name.startswith("acbench"):
            logging.getLogger(name).setLevel(level)
    root.setLevel(level)


def extras(config: DictConfig) -> None:
    """Apply the run switches of the top level config in place.

    `ignore_warnings` silences python warnings. `debug` clamps the area and search
    `max_states` to 2000 and forces one worker.

    Args:
        config: Config composed by hydra
    """
    log = get_logger()
    OmegaConf.set_struct(config, False)

    if config.get("ignore_warnings"):
        log.info("Python warnings are off <ignore_warnings=True>")
        warnings.filterwarnings("ignore")

    if config.get("debug"):
        log.info("Debug run with small caps <debug=True>")
        for section in ("area", "search"):
            if config.get(section):
                config[section].max_states = min(config[section].max_states, 2_000)
        config.num_workers = 1

    OmegaConf.set_struct(config, True)


def print_config(
    config: DictConfig,
    fields: Sequence[str] = ("tasks", "area", "search", "bit_budget", "num_workers"),
    resolve: bool = True,
    save_path: Optional[str] = "config_tree.txt",
) -> None:
    """Render the chosen top level fields as a rich tree on stdout.

    Args:
        config: Config to show
        fields: Top level keys, in display order. Missing keys are skipped
        resolve: Resolve interpolations before rendering
        save_path: Also write the tree to this file, None to skip
    """
    tree = rich.tree.Tree("CONFIG", style="dim", guide_style="dim")
    for name in fields:
        if name not in config:
            continue
        section = config.get(name)
        if isinstance(section, DictConfig):
            text = OmegaConf.to_yaml(section, resolve=resolve)
        else:
            text = str(section)
        tree.add(name, style="dim", guide_style="dim").add(rich.syntax.Syntax(text, "yaml"))

    rich.print(tree)
    if save_path is not None:
        with open(save_path, "w") as f:
            rich.print(tree, file=f)
