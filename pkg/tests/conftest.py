from __future__ import annotations

import functools

from hypothesis import strategies as st

from foldcusp import catalog
from foldcusp.expr import build_model, data_path


@functools.lru_cache(maxsize=None)
def model(text: str):
    if text == "X6":
        return catalog.load_structure_model(data_path("wall_x6.ring").read_text())
    return build_model(text)


CATALOG = [
    "RP(1)", "RP(2)", "RP(3)", "RP(4)", "RP(5)", "RP(6)",
    "CP(1)", "CP(2)", "CP(3)", "CP(4)",
    "S(1)", "S(2)", "S(5)", "S(6)",
    "Dold(0,1)", "Dold(1,1)", "Dold(1,2)", "Dold(2,1)", "Dold(3,1)", "Dold(2,2)",
    "X6",
]

SMALL_PRODUCTS = ["RP(2) x RP(2)", "Dold(1,2) x RP(2)", "CP(1) x RP(3)", "Dold(1,1) x S(2)", "RP(1) x Load(@wall_x6)"]


def elements(ring, homogeneous_degree=None):
    """Strategy for elements of ``ring`` (coefficients in -3..3 over Z)."""
    keys = ring.basis() if homogeneous_degree is None else ring.basis(homogeneous_degree)
    coeff = st.integers(0, 1) if ring.modulus == 2 else st.integers(-3, 3)
    return st.lists(coeff, min_size=len(keys), max_size=len(keys)).map(
        lambda cs: ring.element({k: c for k, c in zip(keys, cs) if c})
    )


def pytest_terminal_summary(terminalreporter):
    import sys

    acceptance = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if acceptance is None or not acceptance.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(acceptance.LINES, key=lambda k: int(k[1:])):
        terminalreporter.write_line(acceptance.LINES[key])
