"""Exact Hecke algebra, Markov trace and annulus skein computations."""

from ._core import (
    AnnulusElem,
    HeckeElem,
    Scalar,
    __version__,
    braid_A,
    delta,
    eval_word,
    evaluate,
    h,
    markov_trace,
    murphy_power_sum,
    partial_close,
    pi_sum,
    power_sum,
    qint,
    thread,
    thread_braid,
    verify,
)

__all__ = [
    "AnnulusElem",
    "HeckeElem",
    "Scalar",
    "__version__",
    "braid_A",
    "delta",
    "eval_word",
    "evaluate",
    "h",
    "markov_trace",
    "murphy_power_sum",
    "partial_close",
    "pi_sum",
    "power_sum",
    "qint",
    "thread",
    "thread_braid",
    "verify",
]
