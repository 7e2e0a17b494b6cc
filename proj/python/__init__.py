"""Ramsey bounds, embeddings and certified searches for dense graphs."""

from ._rdense import (
    Coloring,
    Graph,
    bound,
    check_bidense,
    chernoff_tail,
    cli,
    embed,
    find_mono,
    find_red_or_blue_clique,
    judicious_partition,
    ramsey_exact,
    sample_coloring,
    sample_gnp,
)

__all__ = [
    "Coloring",
    "Graph",
    "bound",
    "check_bidense",
    "chernoff_tail",
    "cli",
    "embed",
    "find_mono",
    "find_red_or_blue_clique",
    "judicious_partition",
    "ramsey_exact",
    "sample_coloring",
    "sample_gnp",
]
