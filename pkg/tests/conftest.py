from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


@pytest.fixture
def published_chi_csv() -> Path:
    return DATA / "chi_published.csv"


def pentagonal_partition_counts(n_max: int) -> list[int]:
    """Partition numbers by Euler's pentagonal recurrence (independent of enumeration)."""
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p
