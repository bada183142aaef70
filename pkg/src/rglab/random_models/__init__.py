"""
Random models subsystem.

Seeded generators for every probability space the laboratory samples from:
- gnp / gnm / dnp: binomial, uniform and directed random graphs
- random_process / snapshot: the random graph process and its prefixes
- multi_exposure: union of independent binomial layers (sprinkling)
- BernoulliStream: lazily generated i.i.d. query bits
- derive_seed / make_rng: PCG64 generators and per-trial seed derivation
- pair_index: colex / lex pair <-> index bijections
"""

from rglab.random_models.bernoulli_stream import BernoulliStream, bernoulli_stream, check_probability
from rglab.random_models.edge_process import EdgeProcess, random_process, snapshot
from rglab.random_models.generators import (
    dnp,
    dnp_arcs,
    exposure_probability,
    geometric_indices,
    gnm,
    gnm_edges,
    gnp,
    gnp_edges,
    multi_exposure,
)
from rglab.random_models.pair_index import colex_rank, colex_unrank, lex_rank, lex_unrank, pair_count
from rglab.random_models.seeding import derive_seed, make_rng

__all__ = [
    "BernoulliStream",
    "bernoulli_stream",
    "check_probability",
    "EdgeProcess",
    "random_process",
    "snapshot",
    "gnp",
    "gnp_edges",
    "gnm",
    "gnm_edges",
    "dnp",
    "dnp_arcs",
    "multi_exposure",
    "exposure_probability",
    "geometric_indices",
    "colex_rank",
    "colex_unrank",
    "lex_rank",
    "lex_unrank",
    "pair_count",
    "derive_seed",
    "make_rng",
]
