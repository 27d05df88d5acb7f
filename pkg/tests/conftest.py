import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lietau import SurfaceModel

_MODELS = {}
_BRAIDS = {}


def _model(genus):
    if genus not in _MODELS:
        _MODELS[genus] = SurfaceModel(genus)
    return _MODELS[genus]


@pytest.fixture
def model_of():
    return _model


@pytest.fixture
def g3_braids():
    """Elementary genus-3 push braids and their commutators, built once."""
    if not _BRAIDS:
        from braidgen import (commutator_braid, elementary_braids_g3)
        m = _model(3)
        b12, b23 = elementary_braids_g3(m)
        c = commutator_braid(b12, b23)
        d = commutator_braid(c, b12)
        _BRAIDS.update({"b12": b12, "b23": b23, "c": c, "d": d})
    return _BRAIDS
