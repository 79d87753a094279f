"""The compiled kernel and the pure kernel must be interchangeable."""

import itertools
import random

import pytest

from etskit import _kernel
from etskit import kernel


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        adj = [0] * n
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        yield adj


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_pure_kernel_class_counts(n, count):
    forms = {_kernel.canonical_bits(n, adj)[0] for adj in all_graphs(n)}
    assert len(forms) == count


def test_pure_kernel_invariance():
    rng = random.Random(1)
    for _ in range(300):
        n = rng.randrange(2, 11)
        adj = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < rng.choice((0.2, 0.5, 0.8)):
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        form, perm = _kernel.canonical_bits(n, adj)
        assert sorted(perm) == list(range(n))
        relabel = list(range(n))
        rng.shuffle(relabel)
        adj2 = [0] * n
        for i in range(n):
            for j in range(n):
                if adj[i] >> j & 1:
                    adj2[relabel[i]] |= 1 << relabel[j]
        assert _kernel.canonical_bits(n, adj2)[0] == form


def test_compiled_kernel_matches_pure_exhaustively():
    try:
        from etskit import _ckernel
    except ImportError:
        pytest.skip("compiled kernel not built")
    for n in range(1, 6):
        for adj in all_graphs(n):
            assert _kernel.canonical_bits(n, adj) == _ckernel.canonical_bits(n, adj)


def test_active_backend_reports():
    assert kernel.backend() in ("c", "pure")
    form, perm = kernel.canonical_bits(3, [0b110, 0b101, 0b011])
    assert form == _kernel.canonical_bits(3, [0b110, 0b101, 0b011])[0]


def test_node_cap():
    with pytest.raises(ValueError):
        _kernel.canonical_bits(17, [0] * 17)
