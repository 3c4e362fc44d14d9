"""Experiment pipeline"""
import os
from typing import Any

import hydra
from omegaconf import DictConfig, OmegaConf

from acbench import utils
from acbench.config import WorkbenchConfig, load_config
from acbench.io import write_json
from acbench.tasks import Task

log = utils.get_logger(__name__)


def workbench_config(config: DictConfig) -> WorkbenchConfig:
    """The typed caps from the top level of a hydra config"""
    overrides = []
    for section in ("area", "search"):
        for key, value in (config.get(section) or {}).items():
            overrides.append(f"{section}.{key}={'null' if value is None else value}")
    for key in ("bit_budget", "num_workers"):
        if key in config:
            overrides.append(f"{key}={config[key]}")
    return load_config(overrides)


def run_experiment(config: DictConfig) -> dict[str, Any]:
    """Contains the experiment pipeline.

    Instantiates every task under `config.tasks`, runs it and writes its result as JSON
    into the output directory.

    Args:
        config (DictConfig): Configuration composed by Hydra.

    Returns:
        dict: Results keyed by task name.
    """
    caps = workbench_config(config)
    output_dir = config.get("output_dir") or os.getcwd()
    os.makedirs(output_dir, exist_ok=True)

    tasks: list[Task] = []
    for _, task_conf in (config.get("tasks") or {}).items():
        if "_target_" in task_conf:
            log.info(f"Instantiating task <{task_conf._target_}>")
            tasks.append(hydra.utils.instantiate(task_conf))

    results: dict[str, Any] = {}
    for task in tasks:
        log.info(f"Running task {task.name}")
        result = task.run(caps)
        results[task.name] = result
        write_json(result, os.path.join(output_dir, f"{task.name}.json"))

    OmegaConf.save(config, os.path.join(output_dir, "experiment_config.yaml"))
    log.info(f"Wrote {len(results)} results to {output_dir}")
    return results
