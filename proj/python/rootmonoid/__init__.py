"""Exact root-monoid arithmetic on affine toric varieties.

The heavy lifting happens in the C++ extension; this layer unpacks JSON
payloads into dicts and re-exports the main entry points.
"""

import json as _json

from ._core import (  # noqa: F401
    Point,
    RootMonoid,
    affine_monoid,
    cylinder_monoid,
)
from . import _core as _c


def monoid_from_json(text):
    return _c.monoid_from_json(text)


def dual_cone(cone):
    """Dual cone of a full-dimensional cone given as {"rank": n, "rays": [...]}."""
    return _json.loads(_c.dual_cone_json(_json.dumps(cone)))


def hilbert_basis(cone):
    """Hilbert basis of the lattice points of a full-dimensional pointed cone."""
    return _json.loads(_c.hilbert_basis_json(_json.dumps(cone)))


def classify_idempotents(monoid, face_rays):
    return _json.loads(monoid.classify_idempotents_json(list(face_rays)))


def center_equations(monoid, bound=6):
    return _json.loads(monoid.center_equations_json(bound))
