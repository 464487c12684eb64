"""k-radius sequences: construction, verification, bounds and cache simulation."""

import json as _json
from fractions import Fraction as _Fraction

from ._radiusseq import (  # noqa: F401
    CacheTrace,
    ConstructResult,
    CoverageReport,
    InputError,
    PackingReport,
    SizeError,
    codegree_bruteforce,
    construct,
    construct_packing_greedy,
    enumerate_covered_subsets,
    ghosh_f1,
    lower_bound_pairs,
    lower_bound_subsets,
    simulate_fifo,
    simulate_pinned_batch,
    uniformity_r,
    verify_packing,
    verify_radius,
    vertex_degree,
)
from . import _radiusseq


def asymptotic_target(n, k, t=2):
    """C(n,t) / C(k,t-1) as an exact Fraction."""
    num, den = _radiusseq.asymptotic_target(n, k, t)
    return _Fraction(num, den)


def bounds(n, k, t=2):
    return _json.loads(_radiusseq.bounds(n, k, t))


def hypergraph_summary(n, ell, k, t=2):
    return _json.loads(_radiusseq.hypergraph_summary(n, ell, k, t))
