"""Write the named corpora as graph files, one per spec.

    python3 scripts/build_corpus.py out/ --corpus small
"""

import argparse
from pathlib import Path

from evenhole import corpus
from evenhole.generators import render_spec

CORPORA = {
    "small": corpus.small_corpus,
    "long": corpus.long_corpus,
    "plants": corpus.plant_specs,
    "decorated": corpus.decorated_specs,
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("outdir", type=Path)
    ap.add_argument("--corpus", choices=sorted(CORPORA), default="long")
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    specs = CORPORA[args.corpus]()
    for spec in specs:
        (args.outdir / f"{spec.name}.graph").write_text(render_spec(spec), encoding="ascii")
    print(f"wrote {len(specs)} files to {args.outdir}")


if __name__ == "__main__":
    main()
