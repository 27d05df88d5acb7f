"""JSON interchange for the domain values.

JSON is the single interchange format; integers whose magnitude exceeds
53 bits are emitted as decimal strings so lossy consumers cannot corrupt
them, and the parsers accept both representations.
"""

import json

from .errors import PreconditionError
from .hall import tree_from_json, tree_to_json
from .johnson import MappingClassData, TauValue
from .lie import lie_from_json, lie_to_json
from .surface import SurfaceModel
from .symplectic import Lagrangian
from .words import (GroupEndomorphism, word_from_pairs, word_from_str,
                    word_to_pairs)

_BIG = 1 << 53


def _guard_ints(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) >= _BIG else obj
    if isinstance(obj, list):
        return [_guard_ints(v) for v in obj]
    if isinstance(obj, tuple):
        return [_guard_ints(v) for v in obj]
    if isinstance(obj, dict):
        return {k: _guard_ints(v) for k, v in obj.items()}
    return obj


def dumps(obj, indent=None):
    return json.dumps(_guard_ints(obj), indent=indent, sort_keys=True)


def parse_int(v):
    if isinstance(v, bool):
        raise PreconditionError("expected an integer, got a boolean")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        return int(v)
    raise PreconditionError("expected an integer, got %r" % (v,))


def parse_word(alphabet, obj):
    """Accept the compact string form or the [[name, exponent], ...] array."""
    if isinstance(obj, str):
        return word_from_str(alphabet, obj)
    if isinstance(obj, list):
        return word_from_pairs(alphabet, [(n, parse_int(e)) for n, e in obj])
    raise PreconditionError("cannot parse a word from %r" % (obj,))


def word_json(w):
    return word_to_pairs(w)


def parse_matrix(obj):
    if not isinstance(obj, list) or not obj:
        raise PreconditionError("matrix must be a nonempty array of rows")
    rows = []
    for row in obj:
        if not isinstance(row, list):
            raise PreconditionError("matrix rows must be arrays")
        rows.append([parse_int(v) for v in row])
    if any(len(r) != len(rows) for r in rows):
        raise PreconditionError("matrix must be square")
    return rows


def parse_lagrangian(obj):
    if not isinstance(obj, dict) or "genus" not in obj or "span" not in obj:
        raise PreconditionError('Lagrangian JSON needs "genus" and "span"')
    genus = parse_int(obj["genus"])
    span = [[parse_int(v) for v in row] for row in obj["span"]]
    return Lagrangian(genus, span)


def lagrangian_json(lag):
    return {"genus": lag.genus, "span": [list(r) for r in lag.rows]}


def parse_mapping_class(obj, model=None):
    if not isinstance(obj, dict) or "genus" not in obj:
        raise PreconditionError('mapping class JSON needs "genus" and "images"')
    genus = parse_int(obj["genus"])
    if model is None or model.genus != genus:
        model = SurfaceModel(genus)
    images = {}
    for name, wobj in obj.get("images", {}).items():
        images[name] = parse_word(model.alphabet, wobj)
    endo = GroupEndomorphism.from_dict(model.alphabet, images)
    return MappingClassData(model, endo)


def mapping_class_json(f):
    return {"genus": f.model.genus,
            "images": {nm: word_json(w)
                       for nm, w in zip(f.model.alphabet.names, f.endo.images)}}


def tau_json(tv):
    names = tv.model.alphabet.names
    return {"k": tv.k,
            "free": tv.free,
            "terms": [[names[m], lie_to_json(e, tv.model.alphabet)]
                      for m, e in sorted(tv.terms.items())]}


def parse_tau(obj, model):
    k = parse_int(obj["k"])
    terms = {}
    for name, lj in obj["terms"]:
        m = model.alphabet.index[name]
        terms[m] = lie_from_json(lj, model.alphabet)
    value = TauValue(model, k, bool(obj.get("free", False)), terms)
    # reduced values always live in quotient normal form
    return value if value.free else value.renormalize()


def lie_json(e, alphabet=None):
    return lie_to_json(e, alphabet)


def parse_lie(obj, alphabet=None):
    return lie_from_json(obj, alphabet)


def tree_json(t, alphabet=None):
    return tree_to_json(t, alphabet)


def parse_tree(obj, alphabet=None):
    return tree_from_json(obj, alphabet)
