"""The compiled kernel must agree byte for byte with the pure-Python one."""

import os
import subprocess
import sys

import pytest

from staircase import kernel
from staircase.symbols import events_for_size, LABELS

py = kernel.python_kernel
cy = kernel.compiled_kernel

needs_compiled = pytest.mark.skipif(cy is None, reason="compiled extension not built")


def level(k, n, children, events_for):
    cells = [b""]
    for size in range(n):
        codes = [e.code() for e in events_for(size)]
        cells = [c for t in cells for c in getattr(k, children)(t, size, codes)]
    return cells


def events_a(n):
    return events_for_size(n)


def events_b(n):
    return events_for_size(n, first=LABELS)


@needs_compiled
@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_type_a_agreement(n):
    ours = level(py, n, "children_a", events_a)
    assert ours == level(cy, n, "children_a", events_a)
    codes = [e.code() for e in events_a(n)]
    for cells in ours:
        assert py.weight_a(cells, n) == cy.weight_a(cells, n)
        assert py.fill_a(cells, n) == cy.fill_a(cells, n)
        assert py.is_valid_a(cells, n) is cy.is_valid_a(cells, n) is True
        assert py.decompose_a(cells, n) == cy.decompose_a(cells, n)
        if n:
            assert py.uninsert_a(cells, n) == cy.uninsert_a(cells, n)
        assert py.children_a(cells, n, codes) == cy.children_a(cells, n, codes)


@needs_compiled
@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_type_b_agreement(n):
    ours = level(py, n, "children_b", events_b)
    assert ours == level(cy, n, "children_b", events_b)
    for cells in ours:
        assert py.weight_b(cells, n) == cy.weight_b(cells, n)
        assert py.expand_b(cells, n) == cy.expand_b(cells, n)
        assert py.is_valid_b(cells, n) is cy.is_valid_b(cells, n) is True
        assert py.decompose_b(cells, n) == cy.decompose_b(cells, n)
        if n:
            assert py.uninsert_b(cells, n) == cy.uninsert_b(cells, n)


@needs_compiled
@pytest.mark.parametrize("k", [py, cy], ids=["python", "cython"])
def test_bad_inputs_raise_kernel_error(k):
    single_alpha = bytes([1])
    with pytest.raises(kernel.KernelError):
        k.insert_a(single_alpha, 1, 1, 2, 2)  # position past the size
    with pytest.raises(kernel.KernelError):
        k.insert_a(single_alpha, 1, 2, 2, 1)  # beta first in type A
    with pytest.raises(kernel.KernelError):
        k.insert_a(single_alpha, 1, 7, 0, 0)
    with pytest.raises(kernel.KernelError):
        k.uninsert_a(bytes([1, 0, 0]), 2)  # unlabelled top diagonal
    with pytest.raises(kernel.KernelError):
        k.uninsert_a(b"", 0)


@needs_compiled
def test_invalid_tableaux_are_rejected_alike():
    for n in (2, 3):
        size = n * (n + 1) // 2
        for code in range(5**size):
            cells, rest = bytearray(), code
            for _ in range(size):
                cells.append(rest % 5)
                rest //= 5
            cells = bytes(cells)
            assert py.is_valid_a(cells, n) == cy.is_valid_a(cells, n)


def test_backend_flag_selects_python():
    env = dict(os.environ, STAIRCASE_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from staircase import kernel; print(kernel.BACKEND)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"


def test_active_backend_is_reported():
    assert kernel.BACKEND in ("cython", "python")
    assert (kernel.active is cy) == (kernel.BACKEND == "cython")
