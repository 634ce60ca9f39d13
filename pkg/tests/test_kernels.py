"""Backend parity: the compiled extension and the pure fallback must agree
bit for bit on every kernel function."""

import random

import pytest

from romandom import _kernels_py as pure

compiled = pytest.importorskip("romandom._kernels")


def random_rows(rng, n, p=0.45):
    rows = [0] * n
    for j in range(n):
        for i in range(j):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def test_backend_name():
    assert pure.BACKEND_NAME == "pure"
    assert compiled.BACKEND_NAME == "compiled"


def test_subset_scan_parity():
    rng = random.Random(4242)
    for _ in range(300):
        n = rng.randint(0, 9)
        rows = random_rows(rng, n, rng.choice((0.2, 0.5, 0.8)))
        closed = [rows[v] | (1 << v) for v in range(n)]
        assert compiled.min_weight_cover(closed) == pure.min_weight_cover(closed)
        assert compiled.min_cover_masks(closed) == pure.min_cover_masks(closed)
        assert compiled.min_dominating_size(closed) == pure.min_dominating_size(closed)
        assert compiled.min_dominating_masks(closed) == pure.min_dominating_masks(closed)
        assert compiled.max_differential(rows) == pure.max_differential(rows)
        assert compiled.max_differential_masks(rows) == pure.max_differential_masks(rows)
        assert compiled.efficient_dominating_masks(closed) == pure.efficient_dominating_masks(closed)


def test_canonical_parity():
    rng = random.Random(99)
    for _ in range(200):
        n = rng.randint(1, 8)
        rows = random_rows(rng, n)
        assert compiled.canonical_permutation(rows) == pure.canonical_permutation(rows)
        assert compiled.canonical_signature(rows) == pure.canonical_signature(rows)


def test_connected_enumeration_parity():
    for n in range(1, 6):
        assert compiled.connected_canonical_signatures(
            n
        ) == pure.connected_canonical_signatures(n)


def test_scan_limit():
    with pytest.raises(ValueError):
        compiled.min_weight_cover([0] * 25)
    with pytest.raises(ValueError):
        pure.min_weight_cover([0] * 25)


def test_backend_env_override(monkeypatch):
    import importlib

    from romandom import kernels

    monkeypatch.setenv("ROMANDOM_PURE", "1")
    mod = importlib.reload(kernels)
    assert mod.BACKEND == "pure"
    monkeypatch.delenv("ROMANDOM_PURE")
    mod = importlib.reload(kernels)
    assert mod.BACKEND == "compiled"
