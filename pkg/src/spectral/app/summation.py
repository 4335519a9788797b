import numpy as np


def compensated_sum(terms) -> np.ndarray:
    """
    Kahan-compensated sum over the first axis, elementwise over the rest.

    Rows are added in index order, so results do not depend on how they were computed.

    Args:
        terms: Array of shape (K, ...)

    Returns:
        Array of shape terms.shape[1:]
    """
    rows = np.asarray(terms, dtype=float)
    total = np.zeros(rows.shape[1:])
    carry = np.zeros(rows.shape[1:])
    for row in rows:
        corrected = row - carry
        updated = total + corrected
        carry = (updated - total) - corrected
        total = updated
    return total
