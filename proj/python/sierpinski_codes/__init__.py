from ._sierpinski import (
    SierpinskiGraph,
    certify_paper_value,
    conjecture_bound,
    construct_code,
    predicted_size,
    solve,
)

__all__ = [
    "SierpinskiGraph",
    "certify_paper_value",
    "conjecture_bound",
    "construct_code",
    "predicted_size",
    "solve",
]
