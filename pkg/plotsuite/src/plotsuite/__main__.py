"""Script entry point: python3 -m plotsuite --spec figure.json"""

import argparse
import sys

from .figspec import FigureSpecError, load_figure_spec
from .readers import FormatError
from .render import render


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="plotsuite",
        description="Render a figure from simulator output files, driven "
                    "by a JSON figure spec.",
    )
    parser.add_argument("--spec", required=True,
                        help="path to the figure spec JSON file")
    ns = parser.parse_args(argv)
    try:
        spec = load_figure_spec(ns.spec)
        render(spec)
    except (FigureSpecError, FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {spec.output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
