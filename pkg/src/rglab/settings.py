"""
Laboratory settings.

Caps for the exact (exponential-time) oracles, the rotation budget factor and
the checked-mode switch live here. Defaults can be overridden through
``RGLAB_*`` environment variables or, in tests, with :func:`override_settings`.

Environment Flags
-----------------
``RGLAB_CHECK_INVARIANTS=1``        -> replay-check every DFS trace.
``RGLAB_EXACT_HAMILTONIAN_CAP=<n>`` -> backtracking Hamiltonicity cap.
``RGLAB_LONGEST_PATH_CAP=<n>``      -> subset-DP longest path cap.
``RGLAB_BOOSTER_EXACT_CAP=<n>``     -> brute-force booster cap.
``RGLAB_EXPANDER_EXACT_CAP=<n>``    -> subset-enumeration expansion cap.
``RGLAB_EXACT_CLOSURE_CAP=<n>``     -> path length up to which closures enumerate paths.
``RGLAB_ROTATION_BUDGET_FACTOR=<x>``-> rotation budget = x * n * ln n.
``RGLAB_PROGRESS=1``                -> tqdm progress bars in the trial runner.
``RGLAB_ACCEPTANCE_TARGETS=<json>`` -> e.g. ``{"hitting-time": {"certified_fraction": 0.9}}``, merged per experiment.
"""

from __future__ import annotations

import contextlib
import json
import logging
import os
from collections.abc import Iterator
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from rglab.exceptions import InvalidInputError

logger = logging.getLogger(__name__)

_ENV_PREFIX = "RGLAB_"


def default_acceptance_targets() -> dict[str, dict[str, float]]:
    """Per-experiment thresholds checked against summary metrics (``observed >= threshold``)."""
    return {
        "hitting-time": {"certified_fraction": 0.95, "window_fraction": 0.95, "order_fraction": 1.0},
        "backbone-pipeline": {"success_fraction": 0.9, "bound_fraction": 1.0, "booster_bound_fraction": 1.0},
        "supercritical": {"path_fraction": 0.95},
        "subcritical": {"component_fraction": 0.95},
        "nearly-spanning": {"path_fraction": 1.0},
        "sprinkled-cycle": {"cycle_fraction": 0.8},
        "stream-lemma": {"window_fraction": 0.96, "prefix_fraction": 0.96},
        "min-degree": {"delta_ge2_at_max_offset": 0.9, "delta_le1_at_min_offset": 0.9},
        "ham-threshold": {"hamiltonian_at_max_offset": 0.9},
        "bounds": {"within_bounds_fraction": 1.0, "binomial_estimates_ok": 1.0},
    }


def _parse_targets(raw: str) -> dict[str, dict[str, float]]:
    try:
        parsed = json.loads(raw)
    except json.JSONDecodeError as e:
        raise InvalidInputError(
            f"RGLAB_ACCEPTANCE_TARGETS is not valid JSON: {e}", field="acceptance_targets", value=raw
        ) from e
    if not isinstance(parsed, dict) or not all(isinstance(v, dict) for v in parsed.values()):
        raise InvalidInputError(
            "RGLAB_ACCEPTANCE_TARGETS must map experiment names to {metric: threshold} objects",
            field="acceptance_targets",
            value=raw,
        )
    return parsed


def _merge_targets(
    base: dict[str, dict[str, float]], changes: dict[str, dict[str, float]]
) -> dict[str, dict[str, float]]:
    merged = {name: dict(targets) for name, targets in base.items()}
    for name, targets in changes.items():
        merged.setdefault(name, {}).update(targets)
    return merged


class LabSettings(BaseModel):
    """Tunable caps and flags shared by all subsystems."""

    model_config = ConfigDict(frozen=True)

    exact_hamiltonian_cap: int = Field(20, ge=1, description="Largest n for backtracking Hamiltonicity")
    longest_path_cap: int = Field(16, ge=1, description="Largest n for the subset-DP longest path")
    booster_exact_cap: int = Field(14, ge=1, description="Largest n for brute-force booster enumeration")
    expander_exact_cap: int = Field(20, ge=1, description="Largest n for exact expansion checks")
    exact_closure_cap: int = Field(
        12, ge=1, description="Path vertex count up to which rotation closure enumerates path states"
    )
    closure_state_cap: int = Field(
        2_000_000, ge=1, description="Maximum path states visited by an exhaustive closure"
    )
    rotation_budget_factor: float = Field(50.0, gt=0, description="Rotation budget is factor * n * ln n")
    check_invariants: bool = Field(False, description="Replay-check DFS traces and raise on violations")
    progress: bool = Field(False, description="Show tqdm progress bars for trial batches")
    acceptance_targets: dict[str, dict[str, float]] = Field(
        default_factory=default_acceptance_targets,
        description="Acceptance thresholds per experiment name, merged per experiment from the environment",
    )

    @classmethod
    def from_env(cls, environ: dict[str, str] | None = None) -> LabSettings:
        """Build settings from ``RGLAB_*`` variables.

        Parameters
        ----------
        environ : dict, optional
            Mapping to read instead of ``os.environ``.

        Returns
        -------
        LabSettings
            Settings with every recognised variable applied.
        """
        env = os.environ if environ is None else environ
        values: dict[str, Any] = {}
        for name, field in cls.model_fields.items():
            raw = env.get(_ENV_PREFIX + name.upper())
            if raw is None or raw == "":
                continue
            if field.annotation is bool:
                values[name] = raw.strip().lower() in {"1", "true", "yes", "on"}
            elif name == "acceptance_targets":
                values[name] = _merge_targets(default_acceptance_targets(), _parse_targets(raw))
            else:
                values[name] = raw
        if values:
            logger.debug(f"Settings overridden from environment: {sorted(values)}")
        return cls.model_validate(values)


_settings: LabSettings | None = None


def get_settings() -> LabSettings:
    """Return (lazily create) the process-wide settings."""
    global _settings
    if _settings is None:
        _settings = LabSettings.from_env()
    return _settings


@contextlib.contextmanager
def override_settings(**changes: Any) -> Iterator[LabSettings]:
    """Temporarily replace selected settings.

    Examples
    --------
    >>> with override_settings(check_invariants=True):
    ...     get_settings().check_invariants
    True
    """
    global _settings
    previous = get_settings()
    _settings = previous.model_copy(update=changes)
    try:
        yield _settings
    finally:
        _settings = previous
