"""Command line tool to recompute the golden areas used by the tests

use:
python scripts/freeze_area_goldens.py --output tests/test_data/area_goldens.yaml \
    --max-states 500000
"""
import yaml
import typer
from tqdm import tqdm

from acbench.io import resolve_presentation
from acbench.solvers.area import AreaCaps, area_bfs
from acbench.words import parse_expression

# presentation, word, length window
CASES = [
    ("q1", "x y x^-1 y^-1", 4),
    ("q1", "x^2 y x^-2 y^-1", 6),
    ("q1", "x^2 y^2 x^-2 y^-2", 8),
    ("q1", "x^3 y x^-3 y^-1", 8),
    ("q1", "x y^3 x^-1 y^-3", 8),
    ("q1", "x^2 y^3 x^-2 y^-3", 10),
    ("q1", "x^3 y^2 x^-3 y^-2", 10),
    ("q1", "x^3 y^3 x^-3 y^-3", 12),
    ("q2", "a^2 s^-1 a^-1 s", 6),
    ("q2", "a^4 s^-2 a^-1 s^2", 10),
    ("s2", "x t x t^-1 x t x^-1 t^-1 x^-1 t x t^-1 x^-1 t x^-1 t^-1", 16),
]


def freeze_area_goldens(
    output: str = "tests/test_data/area_goldens.yaml",
    max_states: int = 500_000,
):
    """Run the area oracle on every case and write the exact areas

    Args:
        output: Path of the YAML file to write
        max_states: Cap on the number of words visited per case
    """
    goldens = []
    for source, text, max_len in tqdm(CASES, desc="areas"):
        presentation = resolve_presentation(source)
        word = parse_expression(text, presentation.generators)
        result = area_bfs(presentation, word, AreaCaps(max_len=max_len, max_states=max_states))
        assert result.exact, f"{text} over {source} hit the caps: {result.to_dict()}"
        goldens.append(
            {"presentation": source, "word": text, "max_len": max_len, "area": result.area}
        )

    with open(output, "w") as f:
        yaml.safe_dump({"goldens": goldens}, f, sort_keys=False)


if __name__ == "__main__":
    typer.run(freeze_area_goldens)
