"""Configuration, record and summary models of the experiment harness."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

StatValue = int | float | bool | str | None


class HittingTimes(BaseModel):
    """Hitting times measured on one graph process.

    ``tau_hamiltonian_upper`` is an index at which a validated Hamilton
    cycle exists; when ``certified_equal`` is set that index is ``tau_min_degree_2``.
    """

    tau_min_degree_1: int = Field(..., ge=0, description="First index with minimum degree >= 1")
    tau_min_degree_2: int = Field(..., ge=0, description="First index with minimum degree >= 2")
    tau_connectivity: int = Field(..., ge=0, description="First index at which the graph is connected")
    tau_hamiltonian_upper: int = Field(..., ge=0, description="Index of a snapshot certified Hamiltonian")
    certified_equal: bool = Field(False, description="A Hamilton cycle was validated on the tau2 snapshot")

    @model_validator(mode="after")
    def _ordered(self) -> HittingTimes:
        if self.tau_hamiltonian_upper < self.tau_min_degree_2:
            raise ValueError("tau_hamiltonian_upper must not precede tau_min_degree_2")
        if self.certified_equal and self.tau_hamiltonian_upper != self.tau_min_degree_2:
            raise ValueError("certified_equal requires tau_hamiltonian_upper == tau_min_degree_2")
        return self


class ExperimentConfig(BaseModel):
    """Parameters of one experiment run.

    A summary is a pure function of this model: the same config always
    yields the same records.
    """

    model_config = ConfigDict(extra="forbid")

    name: str = Field(..., description="Registered experiment name")
    n: int = Field(..., ge=1, description="Vertex count")
    trials: int = Field(10, ge=1, description="Trials per grid point")
    seed: int = Field(0, ge=0, description="Master seed")
    epsilon: float | None = Field(None, gt=0, lt=1, description="Supercriticality parameter")
    offsets: list[float] = Field(
        default_factory=lambda: [-4.0, -2.0, 0.0, 2.0, 4.0],
        description="Offsets omega in p = (ln n + ln ln n + omega) / n",
    )
    models: list[str] = Field(default_factory=lambda: ["gnp"], description="Random graph models: gnp and/or gnm")
    directed: bool = Field(False, description="Use D(n,p) where the experiment supports it")
    d0: int = Field(4, ge=1, description="Backbone degree threshold")
    window: int | None = Field(None, ge=1, description="Sprinkling window; ceil(n^(2/3)) by default")
    samples: int = Field(1_000_000, ge=1, description="Binomial samples per bounds grid point")
    budget: int | None = Field(None, ge=1, description="Rotation budget override")
    targets: dict[str, float] = Field(
        default_factory=dict, description="Acceptance thresholds overriding the experiment defaults"
    )

    @model_validator(mode="after")
    def _known_models(self) -> ExperimentConfig:
        bad = [m for m in self.models if m not in ("gnp", "gnm")]
        if bad or not self.models:
            raise ValueError(f"models must be a non-empty subset of gnp, gnm; got {self.models}")
        return self


class TrialRecord(BaseModel):
    """One trial: its inputs (replayable) and measured statistics."""

    experiment: str = Field(..., description="Experiment name")
    trial: int = Field(..., ge=0, description="Trial index within the run")
    n: int = Field(..., description="Vertex count")
    seed: int = Field(..., description="Derived per-trial seed")
    params: dict[str, StatValue] = Field(default_factory=dict, description="Model parameters of the trial")
    stats: dict[str, StatValue] = Field(default_factory=dict, description="Measured statistics")
    passed: bool | None = Field(None, description="Per-trial pass flag, if the experiment defines one")
    wall_time: float = Field(0.0, description="Seconds spent in the trial (not emitted by default)")


class TargetCheck(BaseModel):
    """An acceptance target: ``observed >= threshold``."""

    name: str
    observed: float
    threshold: float
    met: bool


class ExperimentSummary(BaseModel):
    """Aggregate of a run: metrics, target checks and the sorted records."""

    experiment: str
    config: ExperimentConfig
    metrics: dict[str, float] = Field(default_factory=dict)
    targets: list[TargetCheck] = Field(default_factory=list)
    records: list[TrialRecord] = Field(default_factory=list)

    @property
    def targets_met(self) -> bool:
        return all(t.met for t in self.targets)

    def missed(self) -> list[TargetCheck]:
        return [t for t in self.targets if not t.met]
