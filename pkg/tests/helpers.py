"""Shared strategies and small helpers for the test suite."""

from hypothesis import strategies as st

from attoclock.atom import AtomModel, LaserField
from attoclock.barrier import atomic_field_strength


def rel_err(value: float, reference: float) -> float:
    return abs(value - reference) / abs(reference)


@st.composite
def atom_models(draw) -> AtomModel:
    ip = draw(st.floats(min_value=0.3, max_value=2.5,
                        allow_nan=False, allow_infinity=False))
    z_eff = draw(st.floats(min_value=0.6, max_value=2.5,
                           allow_nan=False, allow_infinity=False))
    return AtomModel(name="X", ip=ip, z_eff=z_eff, source="hyp")


@st.composite
def subatomic_cases(draw, lo: float = 0.01, hi: float = 0.999):
    """An (atom, field) pair with the field a fixed fraction of the
    barrier-suppression value, safely below it."""
    atom = draw(atom_models())
    frac = draw(st.floats(min_value=lo, max_value=hi,
                          allow_nan=False, allow_infinity=False))
    return atom, LaserField.direct(frac * atomic_field_strength(atom))
