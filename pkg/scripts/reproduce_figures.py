#!/usr/bin/env python3
"""Render the spacetime diagram gallery for the catalogue rules.

One scene per named behavior: the counting rules aligning and then ticking
in unison, the oblivious rule collapsing to a flicker, both sweep automata
carrying their end-to-end waves (plus a cancellation run that dies), and
the bouncer's bounce cycle with a convergence run beside it. Each scene is
written as an ASCII diagram (one row per tick, top row is the initial
state) and as a portable graymap with the same pixels, so the output can
be eyeballed in a terminal or opened as an image.

Run: python3 scripts/reproduce_figures.py [--out-dir DIR]
"""

from __future__ import annotations

import argparse
import pathlib
import sys

from filaments.core import Filament
from filaments.engine import run_trace
from filaments.render import render_ascii, render_pgm
from filaments.rules import rule_named

SCENES = (
    ("clock2-unison", "clock-2", "01010011", 12),
    ("clock3-unison", "clock-3", "01201120", 12),
    ("oblivious-flicker", "oblivious-example", "011010011010", 10),
    ("sweep6-cycle-n8", "automaton-i", "02222222", 42),
    ("sweep6-cycle-n12", "automaton-i", "022222222222", 66),
    ("sweep6-cancel", "automaton-i", "00122100", 10),
    ("sweep2-cycle", "automaton-ii", "00000001", 15),
    ("bouncer-bounce", "bouncer", "0111111111", 36),
    ("bouncer-converge", "bouncer", "0110010111", 30),
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", type=pathlib.Path, default=pathlib.Path("figures"),
                        help="directory for the rendered diagrams (default figures/)")
    args = parser.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)

    for name, rule_name, initial, steps in SCENES:
        rule = rule_named(rule_name)
        trace = run_trace(rule, Filament.from_string(initial), steps)
        (args.out_dir / f"{name}.txt").write_text(render_ascii(trace))
        (args.out_dir / f"{name}.pgm").write_text(render_pgm(trace, rule.num_states))
        print(f"{name}: {len(trace)} rows of width {len(initial)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
