"""Regenerate src/twobridge/data/link_table.tsv from the Hoste-Thistlethwaite
link table bundled with spherogram/snappy_manifolds.

Dev-only: the package never imports spherogram. Run with both packages on
PYTHONPATH, e.g.

    pip install --target /tmp/devtools --no-deps spherogram snappy_manifolds
    PYTHONPATH=/tmp/devtools python tools/export_link_table.py
"""
import sys
from pathlib import Path

import spherogram

OUT = Path(__file__).resolve().parents[1] / "src" / "twobridge" / "data" / "link_table.tsv"


def main(n_min=2, n_max=11):
    lines = [
        "# 2-component alternating links, Thistlethwaite names, crossing numbers "
        f"{n_min}..{n_max}.",
        f"# Exported from spherogram {spherogram.__version__} (Hoste-Thistlethwaite table).",
        "# Format: id<TAB>PD:[X(a,b,c,d),...]; arcs counterclockwise from the incoming under-strand.",
    ]
    for n in range(n_min, n_max + 1):
        k = 1
        while True:
            name = f"L{n}a{k}"
            try:
                link = spherogram.Link(name)
            except Exception:
                break
            k += 1
            if len(link.link_components) != 2:
                continue
            pd = ",".join("X(%d,%d,%d,%d)" % tuple(a + 1 for a in x) for x in link.PD_code())
            lines.append(f"{name.upper()}\tPD:[{pd}]")
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines) - 3} links to {OUT}", file=sys.stderr)


if __name__ == "__main__":
    main()
