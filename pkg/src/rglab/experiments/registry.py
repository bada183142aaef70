"""Experiment registry.

Overview
========
Experiments are looked up by name through a thin pluggy hook layer
(namespace ``rglab``). The core plugin serves the built-in catalog; other
distributions add experiments either through the ``rglab.experiments``
entry-point group or by calling :func:`register_experiment`.

Hook Specs
----------
``rglab_list_experiments() -> list[Experiment]``
    Every experiment a plugin provides.
``rglab_get_experiment(name) -> Experiment | None``
    First non-``None`` answer wins; plugins registered later are asked first,
    so they can shadow a built-in name.

Basic Usage Example
-------------------
.. code-block:: python

    from rglab.experiments import Experiment, register_experiment

    register_experiment(Experiment("my-exp", "...", trial=my_trial, summarize=my_summary))
"""

from __future__ import annotations

import logging
import os

import pluggy

from rglab.exceptions import InvalidInputError
from rglab.experiments.catalog import BUILTIN_EXPERIMENTS
from rglab.experiments.experiment import Experiment

hookspec = pluggy.HookspecMarker("rglab")
hookimpl = pluggy.HookimplMarker("rglab")

logger = logging.getLogger(__name__)
REGISTRY_DEBUG = bool(os.getenv("RGLAB_DEBUG"))

ENTRY_POINT_GROUP = "rglab.experiments"


class ExperimentSpec:
    """Hook specifications for experiment providers."""

    @hookspec
    def rglab_list_experiments(self) -> list[Experiment]:  # type: ignore[empty-body]
        """Return the experiments this plugin provides."""

    @hookspec(firstresult=True)
    def rglab_get_experiment(self, name: str) -> Experiment | None:  # type: ignore[empty-body]
        """Return the experiment called ``name`` or ``None``."""


class _ExperimentPlugin:
    """Serves a fixed collection of experiments."""

    def __init__(self, experiments: tuple[Experiment, ...]) -> None:
        self._by_name = {e.name: e for e in experiments}

    @hookimpl
    def rglab_list_experiments(self) -> list[Experiment]:
        return list(self._by_name.values())

    @hookimpl
    def rglab_get_experiment(self, name: str) -> Experiment | None:
        return self._by_name.get(name)


class CoreExperimentPlugin(_ExperimentPlugin):
    def __init__(self) -> None:
        super().__init__(BUILTIN_EXPERIMENTS)


_pm: pluggy.PluginManager | None = None


def get_plugin_manager() -> pluggy.PluginManager:
    """Return (lazily create) the global plugin manager.

    Returns
    -------
    pluggy.PluginManager
        Manager with the core plugin registered and entry points loaded.
    """
    global _pm
    if _pm is None:
        pm = pluggy.PluginManager("rglab")
        pm.add_hookspecs(ExperimentSpec)
        pm.register(CoreExperimentPlugin(), name="rglab-core")
        loaded = pm.load_setuptools_entrypoints(ENTRY_POINT_GROUP)
        if REGISTRY_DEBUG and loaded:
            logger.debug(f"loaded {loaded} experiment plugin(s) from {ENTRY_POINT_GROUP}")
        _pm = pm
    return _pm


def register_experiment(experiment: Experiment) -> None:
    """Make ``experiment`` available by name, shadowing any earlier one of the same name."""
    get_plugin_manager().register(_ExperimentPlugin((experiment,)))
    logger.debug(f"registered experiment {experiment.name!r}")


def reset_registry() -> None:
    """Drop registered plugins; the next lookup rebuilds the manager."""
    global _pm
    _pm = None


def get_experiment(name: str) -> Experiment:
    """Look up an experiment by name.

    Raises
    ------
    InvalidInputError
        If no plugin provides ``name``.
    """
    found = get_plugin_manager().hook.rglab_get_experiment(name=name)
    if found is None:
        raise InvalidInputError(
            f"unknown experiment {name!r}; known: {sorted(list_experiments())}", field="name", value=name
        )
    return found


def list_experiments() -> dict[str, Experiment]:
    """Every registered experiment by name; later registrations win."""
    merged: dict[str, Experiment] = {}
    for batch in reversed(get_plugin_manager().hook.rglab_list_experiments()):
        for experiment in batch:
            merged[experiment.name] = experiment
    return merged
