"""Run workbench experiments from the hydra configs in configs/

use:
python run.py experiment=acceptance
python run.py experiment=sublevel caps=desk tasks.sublevel.m=6
"""

import logging
import os
import sys

import dotenv
import hydra
from omegaconf import DictConfig

logging.basicConfig(stream=sys.stdout, level=logging.ERROR)
os.environ["HYDRA_FULL_ERROR"] = "1"

# a `.env` in the working directory or above may set environment overrides
dotenv.load_dotenv(override=True)


@hydra.main(config_path="configs/", config_name="config.yaml", version_base="1.2")
def main(config: DictConfig):
    """Runs every task of the composed experiment"""
    # package imports stay inside so hydra tab completion does not load them
    from acbench.experiments import run_experiment
    from acbench.utils import configure_logging, extras, print_config

    configure_logging(verbosity=1 if config.get("verbose") else 0)
    extras(config)
    if config.get("print_config"):
        print_config(config, resolve=True)

    return run_experiment(config)


if __name__ == "__main__":
    main()
