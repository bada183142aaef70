#!/usr/bin/env python
"""
Watch tau1, tau2, connectivity and the Hamiltonicity hitting time on a few
random graph processes.

Usage: python tests/demo_hitting_times.py [n] [processes]
"""

import math
import sys
from pathlib import Path

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from rich.console import Console
from rich.table import Table
from tqdm import tqdm

from rglab.experiments import measure_hitting_times
from rglab.random_models import random_process


def main(n: int = 200, processes: int = 5) -> None:
    console = Console()
    table = Table(title=f"Hitting times on G(n, M), n={n}")
    for col in ("seed", "tau1", "tau2", "tau_conn", "tau_H upper", "certified", "tau2 / (n ln n / 2)"):
        table.add_column(col, justify="right")
    half = n * math.log(n) / 2
    for seed in tqdm(range(processes), desc="processes"):
        times = measure_hitting_times(random_process(n, seed), seed)
        table.add_row(
            str(seed),
            str(times.tau_min_degree_1),
            str(times.tau_min_degree_2),
            str(times.tau_connectivity),
            str(times.tau_hamiltonian_upper),
            "[green]yes[/green]" if times.certified_equal else "[yellow]no[/yellow]",
            f"{times.tau_min_degree_2 / half:.3f}",
        )
    console.print(table)


if __name__ == "__main__":
    args = [int(a) for a in sys.argv[1:3]]
    main(*args)
