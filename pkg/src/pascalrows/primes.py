"""Primality checking for the small moduli this package works with."""


def is_prime(p: int) -> bool:
    """Deterministic trial division; inputs here are desk-scale."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def require_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    return p
