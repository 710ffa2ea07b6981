#!/usr/bin/env python3
"""
Recompute the regression constants of the reproduction suites and write
conekit/repro/frozen_constants.json.
Run after a deliberate change to the exact constants; the suites compare
against the stored values on every run.
"""

import hashlib
import json
import sys
from pathlib import Path

import click
import numpy as np

# Add parent directory to PYTHONPATH
sys.path.insert(0, str(Path(__file__).parent.parent))

from conekit import __version__
from conekit.classify.central import alpha_square
from conekit.repro.constants import FROZEN_PATH, PHI_1, PHI_2
from conekit.repro.peres import exact_trace


def compute_constants() -> dict:
    phi1, phi2 = np.array(PHI_1), np.array(PHI_2)
    return {
        "alpha_phi1": round(alpha_square(phi1), 15),
        "alpha_phi2": round(alpha_square(phi2), 15),
        "alpha_phi_sum": round(alpha_square(phi1 + phi2), 15),
        "peres_trace": round(float(exact_trace().evalf(30)), 15),
        "provenance": f"computed by this repository at version {__version__} in double precision from the exact constants",
        "version": __version__,
    }


@click.command()
@click.option('--check', is_flag=True, help='Compare with the stored file instead of writing it')
@click.option('--out', type=click.Path(dir_okay=False), default=str(FROZEN_PATH), show_default=True)
def main(check: bool, out: str):
    constants = compute_constants()
    digest = hashlib.sha256(json.dumps(constants, sort_keys=True).encode()).hexdigest()

    if check:
        stored = json.loads(Path(out).read_text())
        changed = sorted(k for k in constants if k != "provenance" and stored.get(k) != constants[k])
        for key in changed:
            click.echo(f"{key}: stored {stored.get(key)} computed {constants[key]}")
        click.echo("up to date" if not changed else f"{len(changed)} constants differ")
        sys.exit(1 if changed else 0)

    Path(out).write_text(json.dumps(constants, sort_keys=True, indent=2) + "\n")
    click.echo(f"Wrote {out}")
    click.echo(f"sha256 {digest}")


if __name__ == "__main__":
    main()
